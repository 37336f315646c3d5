//! Homogeneous multivariate polynomials (forms) with exact coefficients.

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::mono::{expo_degree, expo_mul, MonomialTable};
use crate::rat::{rat_to_string, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A homogeneous polynomial of fixed degree in `num_vars` variables.
/// Zero coefficients are never stored; the zero form has an empty term map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    num_vars: usize,
    degree: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Form {
    pub fn zero(num_vars: usize, degree: usize) -> Self {
        assert!(num_vars >= 1);
        Form {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rat) -> Self {
        let mut f = Form::zero(num_vars, 0);
        if !c.is_zero() {
            f.terms.insert(vec![0; num_vars], c);
        }
        f
    }

    pub fn one(num_vars: usize) -> Self {
        Form::constant(num_vars, Rat::one())
    }

    /// The variable x_{i+1} (0-based index) as a degree-1 form.
    pub fn variable(num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars);
        let mut e = vec![0u32; num_vars];
        e[i] = 1;
        Form::monomial(num_vars, e, Rat::one())
    }

    pub fn monomial(num_vars: usize, expo: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(expo.len(), num_vars);
        let degree = expo_degree(&expo);
        let mut f = Form::zero(num_vars, degree);
        if !coeff.is_zero() {
            f.terms.insert(expo, coeff);
        }
        f
    }

    pub fn from_terms(num_vars: usize, degree: usize, terms: Vec<(Vec<u32>, Rat)>) -> Result<Self> {
        let mut f = Form::zero(num_vars, degree);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::invalid("exponent vector length mismatch"));
            }
            if expo_degree(&e) != degree {
                return Err(Error::invalid(format!(
                    "term {:?} does not have degree {}",
                    e, degree
                )));
            }
            if c.is_zero() {
                continue;
            }
            let entry = f.terms.entry(e).or_insert_with(Rat::zero);
            *entry += c;
        }
        f.terms.retain(|_, c| !c.is_zero());
        Ok(f)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, expo: &[u32]) -> Rat {
        self.terms.get(expo).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading term in graded lex (x1 > ... > xr): max exponent vector.
    pub fn leading(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rat) -> Form {
        if c.is_zero() {
            return Form::zero(self.num_vars, self.degree);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        Form {
            num_vars: self.num_vars,
            degree: self.degree,
            terms,
        }
    }

    /// Scale so the grlex-leading coefficient is 1.
    pub fn monic(&self) -> Form {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn add(&self, other: &Form) -> Result<Form> {
        if self.num_vars != other.num_vars {
            return Err(Error::invalid("form addition across different rings"));
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::invalid("form addition across degrees"));
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Rat::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Form {
            num_vars: self.num_vars,
            degree: self.degree,
            terms,
        })
    }

    pub fn mul(&self, other: &Form) -> Result<Form> {
        if self.num_vars != other.num_vars {
            return Err(Error::invalid("form product across different rings"));
        }
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = expo_mul(ea, eb);
                let entry = terms.entry(e).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Form {
            num_vars: self.num_vars,
            degree: self.degree + other.degree,
            terms,
        })
    }

    pub fn mul_var(&self, var: usize) -> Form {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[var] += 1;
                (e2, c.clone())
            })
            .collect();
        Form {
            num_vars: self.num_vars,
            degree: self.degree + 1,
            terms,
        }
    }

    /// Exact evaluation at a coordinate vector.
    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.num_vars {
            return Err(Error::invalid(format!(
                "evaluate: expected {} coordinates, got {}",
                self.num_vars,
                point.len()
            )));
        }
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &p) in point.iter().zip(e.iter()) {
                for _ in 0..p {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Exact quotient self / divisor, when the division is exact.
    pub fn try_div_exact(&self, divisor: &Form) -> Option<Form> {
        if divisor.is_zero() || self.num_vars != divisor.num_vars {
            return None;
        }
        if self.is_zero() {
            return Some(Form::zero(self.num_vars, 0));
        }
        if self.degree < divisor.degree {
            return None;
        }
        let qdeg = self.degree - divisor.degree;
        let mut rem = self.clone();
        let mut quot = Form::zero(self.num_vars, qdeg);
        let (dlead_e, dlead_c) = divisor.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        while !rem.is_zero() {
            let (rlead_e, rlead_c) = rem.leading().map(|(e, c)| (e.clone(), c.clone()))?;
            // Leading term of the remainder must be divisible.
            let mut qe = Vec::with_capacity(self.num_vars);
            for (a, b) in rlead_e.iter().zip(dlead_e.iter()) {
                if a < b {
                    return None;
                }
                qe.push(a - b);
            }
            let qc = rlead_c / dlead_c.clone();
            let qterm = Form::monomial(self.num_vars, qe, qc);
            let sub = qterm.mul(divisor).ok()?.scale(&-Rat::one());
            rem = rem.add(&sub).ok()?;
            quot = quot.add(&qterm).ok()?;
        }
        Some(quot)
    }

    /// Coefficient vector of the form in the monomial table's column order.
    pub fn to_vector(&self, table: &MonomialTable) -> Vec<Rat> {
        assert_eq!(table.degree, self.degree);
        assert_eq!(table.r, self.num_vars);
        let mut v = vec![Rat::zero(); table.len()];
        for (e, c) in &self.terms {
            v[table.index_of(e)] = c.clone();
        }
        v
    }

    pub fn from_vector(table: &MonomialTable, v: &[Rat]) -> Form {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (table.list[i].clone(), c.clone()))
            .collect();
        Form {
            num_vars: table.r,
            degree: table.degree,
            terms,
        }
    }

    /// Substitute one variable by a linear combination of the others, dropping
    /// it from the ring: x_elim := sum coeffs[i] * x_i over kept variables.
    /// `coeffs` has length num_vars with coeffs[elim] unused.
    pub fn substitute_variable(&self, elim: usize, coeffs: &[Rat]) -> Form {
        assert!(elim < self.num_vars);
        assert_eq!(coeffs.len(), self.num_vars);
        let kept: Vec<usize> = (0..self.num_vars).filter(|&i| i != elim).collect();
        let nv = self.num_vars - 1;
        // Linear replacement form in the reduced ring.
        let mut repl = Form::zero(nv, 1);
        for (new_i, &old_i) in kept.iter().enumerate() {
            if !coeffs[old_i].is_zero() {
                let v = Form::variable(nv, new_i).scale(&coeffs[old_i]);
                repl = repl.add(&v).unwrap();
            }
        }
        let mut acc = Form::zero(nv, self.degree);
        for (e, c) in &self.terms {
            // Monomial part on kept variables.
            let kept_expo: Vec<u32> = kept.iter().map(|&i| e[i]).collect();
            let mut term = Form::monomial(nv, kept_expo, c.clone());
            for _ in 0..e[elim] {
                term = term.mul(&repl).unwrap();
            }
            acc = acc.add(&term).unwrap();
        }
        acc
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        // Print grlex-descending: largest exponent vector first.
        for (e, c) in self.terms.iter().rev() {
            let mut vars = String::new();
            for (i, &p) in e.iter().enumerate() {
                if p == 1 {
                    vars.push_str(&format!("x{}", i + 1));
                } else if p > 1 {
                    vars.push_str(&format!("x{}^{}", i + 1, p));
                }
            }
            let cs = rat_to_string(c);
            let part = if vars.is_empty() {
                cs
            } else if cs == "1" {
                vars
            } else if cs == "-1" {
                format!("-{}", vars)
            } else {
                format!("{}*{}", cs, vars)
            };
            parts.push(part);
        }
        let mut s = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                s.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        write!(f, "{}", s)
    }
}

/// Stack a list of degree-d forms into a matrix (rows = forms).
pub fn forms_to_matrix(forms: &[Form], table: &MonomialTable) -> RatMatrix {
    if forms.is_empty() {
        return RatMatrix::zero(0, table.len());
    }
    RatMatrix::from_rows(forms.iter().map(|f| f.to_vector(table)).collect())
}

/// Canonical basis (RREF rows) of the span of the given degree-d forms.
pub fn canonical_basis(forms: &[Form], table: &MonomialTable) -> Vec<Form> {
    if forms.is_empty() {
        return vec![];
    }
    let (rref, _) = forms_to_matrix(forms, table).rref();
    (0..rref.rows())
        .map(|i| Form::from_vector(table, rref.row(i)))
        .collect()
}

/// A linear subspace of projective space P^r, given by independent linear
/// defining forms in r+1 variables. Projective dimension r - (number of forms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubspace {
    pub ambient_dim: usize,
    pub defining_forms: Vec<Form>,
}

impl LinearSubspace {
    pub fn new(ambient_dim: usize, defining_forms: Vec<Form>) -> Result<Self> {
        let nv = ambient_dim + 1;
        let table = MonomialTable::new(nv, 1);
        for f in &defining_forms {
            if f.num_vars() != nv || f.degree() != 1 || f.is_zero() {
                return Err(Error::invalid(
                    "defining forms must be nonzero linear forms in r+1 variables",
                ));
            }
        }
        let m = forms_to_matrix(&defining_forms, &table);
        if m.rank() != defining_forms.len() {
            return Err(Error::invalid("defining forms must be linearly independent"));
        }
        // Canonicalize so equal subspaces compare equal.
        let basis = canonical_basis(&defining_forms, &table);
        Ok(LinearSubspace {
            ambient_dim,
            defining_forms: basis,
        })
    }

    pub fn projective_dim(&self) -> usize {
        self.ambient_dim - self.defining_forms.len()
    }

    pub fn contains_point(&self, point: &[Rat]) -> bool {
        self.defining_forms
            .iter()
            .all(|f| f.evaluate(point).map(|v| v.is_zero()).unwrap_or(false))
    }
}
