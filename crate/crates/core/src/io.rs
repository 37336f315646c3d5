//! Text formats for points, monomial ideals, and form lists.
//!
//! Point file: first line `ambient r`, then one point per line as r+1
//! rationals (`p` or `p/q`) separated by spaces.
//!
//! Monomial ideal file: first line `vars r`, then one exponent vector of r
//! non-negative integers per line.
//!
//! Form list file: first line `vars r deg d` (d = the largest degree in the
//! file), then one form per blank-line-separated block, each term on its own
//! line as `numerator/denominator e1 e2 ... er`.
//!
//! All parsers report the offending line number.

use crate::error::{Error, Result};
use crate::form::Form;
use crate::graded::MonomialIdeal;
use crate::points::PointSet;
use crate::rat::{rat_from_str, Rat};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn points_to_string(z: &PointSet) -> String {
    let mut out = format!("ambient {}\n", z.ambient_dim());
    for p in z.iter() {
        let coords: Vec<String> = p.iter().map(crate::rat::rat_to_string).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    out
}

pub fn points_from_str(text: &str) -> Result<PointSet> {
    let mut lines = text.lines().enumerate();
    let (first_no, first) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "empty point file"))?;
    let mut header = first.split_whitespace();
    if header.next() != Some("ambient") {
        return Err(parse_err(first_no + 1, "expected header `ambient r`"));
    }
    let r: usize = header
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(first_no + 1, "expected header `ambient r`"))?;
    if r == 0 {
        return Err(parse_err(first_no + 1, "ambient dimension must be positive"));
    }
    let mut raw = Vec::new();
    for (no, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut coords = Vec::with_capacity(r + 1);
        for tok in line.split_whitespace() {
            let v = rat_from_str(tok)
                .ok_or_else(|| parse_err(no + 1, format!("malformed rational `{}`", tok)))?;
            coords.push(v);
        }
        if coords.len() != r + 1 {
            return Err(parse_err(
                no + 1,
                format!("expected {} coordinates, found {}", r + 1, coords.len()),
            ));
        }
        raw.push(coords);
    }
    PointSet::new(r, raw).map_err(|e| parse_err(0, e.to_string()))
}

pub fn monomial_ideal_to_string(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars {}\n", ideal.num_vars);
    for g in &ideal.generators {
        let toks: Vec<String> = g.iter().map(|e| e.to_string()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

pub fn monomial_ideal_from_str(text: &str) -> Result<MonomialIdeal> {
    let mut lines = text.lines().enumerate();
    let (first_no, first) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "empty ideal file"))?;
    let mut header = first.split_whitespace();
    if header.next() != Some("vars") {
        return Err(parse_err(first_no + 1, "expected header `vars r`"));
    }
    let r: usize = header
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(first_no + 1, "expected header `vars r`"))?;
    let mut gens = Vec::new();
    for (no, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut e = Vec::with_capacity(r);
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| parse_err(no + 1, format!("malformed exponent `{}`", tok)))?;
            e.push(v);
        }
        if e.len() != r {
            return Err(parse_err(
                no + 1,
                format!("expected {} exponents, found {}", r, e.len()),
            ));
        }
        gens.push(e);
    }
    MonomialIdeal::new(r, gens).map_err(|e| parse_err(0, e.to_string()))
}

pub fn forms_to_string(num_vars: usize, forms: &[Form]) -> String {
    let max_deg = forms.iter().map(|f| f.degree()).max().unwrap_or(0);
    let mut out = format!("vars {} deg {}\n", num_vars, max_deg);
    for f in forms {
        for (e, c) in f.terms() {
            out.push_str(&format!("{}/{}", c.numer(), c.denom()));
            for x in e {
                out.push_str(&format!(" {}", x));
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

pub fn forms_from_str(text: &str) -> Result<(usize, Vec<Form>)> {
    let mut lines = text.lines().enumerate().peekable();
    let (first_no, first) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| parse_err(1, "empty form file"))?;
    let toks: Vec<&str> = first.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "vars" || toks[2] != "deg" {
        return Err(parse_err(first_no + 1, "expected header `vars r deg d`"));
    }
    let r: usize = toks[1]
        .parse()
        .map_err(|_| parse_err(first_no + 1, "malformed variable count"))?;
    let d_max: usize = toks[3]
        .parse()
        .map_err(|_| parse_err(first_no + 1, "malformed degree"))?;
    let mut forms = Vec::new();
    let mut terms: Vec<(Vec<u32>, Rat)> = Vec::new();
    let mut block_degree: Option<usize> = None;
    let mut flush = |terms: &mut Vec<(Vec<u32>, Rat)>, block_degree: &mut Option<usize>| -> Result<()> {
        if let Some(deg) = block_degree.take() {
            let f = Form::from_terms(r, deg, std::mem::take(terms))?;
            if !f.is_zero() {
                forms.push(f);
            }
        }
        Ok(())
    };
    for (no, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            flush(&mut terms, &mut block_degree).map_err(|e| parse_err(no + 1, e.to_string()))?;
            continue;
        }
        let mut toks = line.split_whitespace();
        let c_tok = toks.next().unwrap();
        let c = rat_from_str(c_tok)
            .ok_or_else(|| parse_err(no + 1, format!("malformed coefficient `{}`", c_tok)))?;
        let mut e = Vec::with_capacity(r);
        for tok in toks {
            let v: u32 = tok
                .parse()
                .map_err(|_| parse_err(no + 1, format!("malformed exponent `{}`", tok)))?;
            e.push(v);
        }
        if e.len() != r {
            return Err(parse_err(
                no + 1,
                format!("expected {} exponents, found {}", r, e.len()),
            ));
        }
        let deg = crate::mono::expo_degree(&e);
        if deg > d_max {
            return Err(parse_err(
                no + 1,
                format!("term degree {} exceeds the declared maximum {}", deg, d_max),
            ));
        }
        match block_degree {
            None => block_degree = Some(deg),
            Some(b) if b != deg => {
                return Err(parse_err(
                    no + 1,
                    format!("inhomogeneous block: degree {} next to {}", deg, b),
                ))
            }
            _ => {}
        }
        terms.push((e, c));
    }
    flush(&mut terms, &mut block_degree).map_err(|e| parse_err(0, e.to_string()))?;
    Ok((r, forms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    #[test]
    fn points_roundtrip() {
        let z = PointSet::new(
            2,
            vec![
                vec![rat_int(1), rat_int(2), rat_int(3)],
                vec![crate::rat::rat_frac(1, 2), rat_int(0), rat_int(1)],
            ],
        )
        .unwrap();
        let s = points_to_string(&z);
        let z2 = points_from_str(&s).unwrap();
        assert_eq!(z, z2);
    }

    #[test]
    fn points_errors_carry_line_numbers() {
        let bad = "ambient 2\n1 2 3\n1 x 3\n";
        match points_from_str(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {:?}", other.err()),
        }
        let short = "ambient 2\n1 2\n";
        assert!(matches!(points_from_str(short), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn ideal_roundtrip() {
        let i = MonomialIdeal::new(3, vec![vec![2, 0, 0], vec![1, 1, 0]]).unwrap();
        let s = monomial_ideal_to_string(&i);
        let i2 = monomial_ideal_from_str(&s).unwrap();
        assert_eq!(i, i2);
    }

    #[test]
    fn forms_roundtrip() {
        let x = Form::variable(3, 0);
        let y = Form::variable(3, 1);
        let f = x.mul(&x).unwrap().add(&y.mul(&y).unwrap().scale(&rat_int(-2))).unwrap();
        let g = x.mul(&y).unwrap().mul(&y).unwrap();
        let s = forms_to_string(3, &[f.clone(), g.clone()]);
        let (r, forms) = forms_from_str(&s).unwrap();
        assert_eq!(r, 3);
        assert_eq!(forms, vec![f, g]);
    }
}
