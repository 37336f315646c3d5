//! GCD of homogeneous forms in at most 3 variables.
//!
//! Strategy: factor out the common power of the last variable, dehomogenize
//! with respect to it, compute the affine GCD (Euclid in one variable over Q,
//! or content/primitive-part Euclid in one variable over Q[y] for the
//! bivariate case), rehomogenize, and normalize the grlex leading coefficient
//! to 1. This sidesteps multivariate factorization entirely.

use crate::error::{Error, Result};
use crate::form::Form;
use crate::rat::Rat;
use num_traits::{One, Zero};

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct UPoly(Vec<Rat>);

impl UPoly {
    fn zero() -> Self {
        UPoly(vec![])
    }

    fn from_coeffs(mut c: Vec<Rat>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rat {
        self.0.last().expect("lead of zero polynomial")
    }

    fn scale(&self, c: &Rat) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|x| x * c).collect())
    }

    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let inv = Rat::one() / self.lead().clone();
        self.scale(&inv)
    }

    fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UPoly::from_coeffs(out)
    }

    fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] = a.clone();
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        UPoly::from_coeffs(out)
    }

    /// Remainder of Euclidean division.
    fn rem(&self, divisor: &UPoly) -> UPoly {
        assert!(!divisor.is_zero());
        let mut r = self.clone();
        let dl = divisor.lead().clone();
        let dd = divisor.degree();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let f = r.lead() / &dl;
            // r -= f * x^shift * divisor
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(divisor.0.iter().map(|c| c * &f));
            r = r.sub(&UPoly::from_coeffs(sub));
        }
        r
    }

    /// Exact division; panics if not exact (used only where exactness is known).
    fn div_exact(&self, divisor: &UPoly) -> UPoly {
        assert!(!divisor.is_zero());
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut r = self.clone();
        let dl = divisor.lead().clone();
        let dd = divisor.degree();
        let mut q = vec![Rat::zero(); self.degree() - dd + 1];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let f = r.lead() / &dl;
            q[shift] = f.clone();
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(divisor.0.iter().map(|c| c * &f));
            r = r.sub(&UPoly::from_coeffs(sub));
        }
        assert!(r.is_zero(), "inexact univariate division");
        UPoly::from_coeffs(q)
    }

    fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Polynomial in Q[y][x]: coefficient of x^i is a UPoly in y.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BiPoly(Vec<UPoly>);

impl BiPoly {
    fn from_coeffs(mut c: Vec<UPoly>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        BiPoly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg_x(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &UPoly {
        self.0.last().expect("lead of zero polynomial")
    }

    fn mul_upoly(&self, c: &UPoly) -> BiPoly {
        if c.is_zero() {
            return BiPoly(vec![]);
        }
        BiPoly::from_coeffs(self.0.iter().map(|x| x.mul(c)).collect())
    }

    fn shift_x(&self, k: usize) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![UPoly::zero(); k];
        out.extend(self.0.iter().cloned());
        BiPoly(out)
    }

    fn sub(&self, other: &BiPoly) -> BiPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![UPoly::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] = a.clone();
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] = out[i].sub(b);
        }
        BiPoly::from_coeffs(out)
    }

    /// gcd of all x-coefficients, as a polynomial in y.
    fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.0 {
            if !c.is_zero() {
                g = if g.is_zero() { c.monic() } else { g.gcd(c) };
                if g.degree() == 0 {
                    break;
                }
            }
        }
        g
    }

    fn primitive_part(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        BiPoly::from_coeffs(self.0.iter().map(|x| x.div_exact(&c)).collect())
    }

    /// Pseudo-remainder: lead(g)^(deg f - deg g + 1) * f reduced modulo g.
    fn pseudo_rem(&self, g: &BiPoly) -> BiPoly {
        assert!(!g.is_zero());
        let mut r = self.clone();
        let gl = g.lead().clone();
        let gd = g.deg_x();
        while !r.is_zero() && r.deg_x() >= gd {
            let shift = r.deg_x() - gd;
            let rl = r.lead().clone();
            // r := gl * r - rl * x^shift * g
            r = r.mul_upoly(&gl).sub(&g.shift_x(shift).mul_upoly(&rl));
        }
        r
    }

    fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let cont_gcd = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg_x() < b.deg_x() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.primitive_part().mul_upoly(&cont_gcd)
    }
}

/// Split F = (last variable)^a * G with the last variable not dividing G.
fn split_last_var_power(f: &Form) -> (u32, Form) {
    let r = f.num_vars();
    let a = f.terms().map(|(e, _)| e[r - 1]).min().unwrap_or(0);
    if a == 0 {
        return (0, f.clone());
    }
    let terms = f
        .terms()
        .map(|(e, c)| {
            let mut e2 = e.clone();
            e2[r - 1] -= a;
            (e2, c.clone())
        })
        .collect();
    (
        a,
        Form::from_terms(r, f.degree() - a as usize, terms).expect("power split"),
    )
}

/// Dehomogenize a z-coprime form in r variables to an affine polynomial in
/// r-1 variables (z := 1). For r = 2 this is a UPoly in x1; for r = 3 a
/// BiPoly in (x1; x2).
fn dehomogenize_2(f: &Form) -> UPoly {
    let mut coeffs = vec![Rat::zero(); f.degree() + 1];
    for (e, c) in f.terms() {
        coeffs[e[0] as usize] += c;
    }
    UPoly::from_coeffs(coeffs)
}

fn dehomogenize_3(f: &Form) -> BiPoly {
    let d = f.degree();
    let mut grid = vec![vec![Rat::zero(); d + 1]; d + 1]; // [x-deg][y-deg]
    for (e, c) in f.terms() {
        grid[e[0] as usize][e[1] as usize] += c;
    }
    BiPoly::from_coeffs(
        grid.into_iter()
            .map(UPoly::from_coeffs)
            .collect(),
    )
}

fn rehomogenize_2(p: &UPoly) -> Form {
    if p.is_zero() {
        return Form::zero(2, 0);
    }
    let d = p.degree();
    let terms = p
        .0
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (vec![i as u32, (d - i) as u32], c.clone()))
        .collect();
    Form::from_terms(2, d, terms).expect("rehomogenize")
}

fn rehomogenize_3(p: &BiPoly) -> Form {
    if p.is_zero() {
        return Form::zero(3, 0);
    }
    // Total degree of the affine polynomial.
    let mut d = 0usize;
    for (i, c) in p.0.iter().enumerate() {
        if !c.is_zero() {
            d = d.max(i + c.degree());
        }
    }
    let mut terms = Vec::new();
    for (i, cy) in p.0.iter().enumerate() {
        for (j, c) in cy.0.iter().enumerate() {
            if !c.is_zero() {
                terms.push((vec![i as u32, j as u32, (d - i - j) as u32], c.clone()));
            }
        }
    }
    Form::from_terms(3, d, terms).expect("rehomogenize")
}

fn gcd_pair(a: &Form, b: &Form) -> Form {
    let r = a.num_vars();
    let (pa, ta) = split_last_var_power(a);
    let (pb, tb) = split_last_var_power(b);
    let shared = pa.min(pb);
    let core = match r {
        1 => Form::one(1), // z-coprime forms in 1 variable are constants
        2 => {
            let g = dehomogenize_2(&ta).gcd(&dehomogenize_2(&tb));
            rehomogenize_2(&g)
        }
        3 => {
            let g = dehomogenize_3(&ta).gcd(&dehomogenize_3(&tb));
            rehomogenize_3(&g)
        }
        _ => unreachable!(),
    };
    let mut out = core;
    for _ in 0..shared {
        out = out.mul_var(r - 1);
    }
    out.monic()
}

/// GCD of nonzero forms in at most 3 variables, normalized so the grlex
/// leading coefficient is 1. Every input is exactly divisible by the result.
pub fn form_gcd(fs: &[Form]) -> Result<Form> {
    if fs.is_empty() {
        return Err(Error::invalid("form gcd of an empty sequence"));
    }
    let r = fs[0].num_vars();
    if r > 3 {
        return Err(Error::invalid("form gcd supports at most 3 variables"));
    }
    for f in fs {
        if f.is_zero() {
            return Err(Error::invalid("form gcd of a zero form"));
        }
        if f.num_vars() != r {
            return Err(Error::invalid("form gcd across different rings"));
        }
    }
    let mut g = fs[0].monic();
    for f in &fs[1..] {
        if g.degree() == 0 {
            break;
        }
        g = gcd_pair(&g, f);
    }
    for f in fs {
        assert!(
            f.try_div_exact(&g).is_some(),
            "gcd postcondition: {} does not divide {}",
            g,
            f
        );
    }
    Ok(g)
}
