//! Per-degree linear algebra for homogeneous ideals: component bases, Hilbert
//! functions, truncation-generated ideals, colon by forms, minimal generator
//! counts, lex segments, Hilbert polynomial fitting, and base locus profiling.

use crate::binom::{macaulay_bound, HVector};
use crate::dual::DualQuotient;
use crate::error::{Error, Result};
use crate::form::{canonical_basis, forms_to_matrix, Form};
use crate::matrix::IntEchelon;
use crate::mono::{
    binom_i64, expo_degree, expo_divides, expo_lcm, monomial_count, monomials_of_degree, to_u64,
    MonomialTable,
};
use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashSet;

/// Per-degree bases of homogeneous forms for degrees 0..=d_max.
/// Every stored basis is canonical (reduced row echelon rows), so spans with
/// the same components compare equal and serialize identically.
#[derive(Clone, Debug)]
pub struct GradedSpan {
    num_vars: usize,
    components: Vec<Vec<Form>>,
}

impl GradedSpan {
    pub fn zero(num_vars: usize, d_max: usize) -> Self {
        GradedSpan {
            num_vars,
            components: vec![vec![]; d_max + 1],
        }
    }

    /// Span of the ideal generated by `gens`, componentwise for degrees
    /// 0..=d_max. An empty generator list yields the zero span.
    pub fn from_generators(num_vars: usize, gens: &[Form], d_max: usize) -> Result<Self> {
        for g in gens {
            if g.num_vars() != num_vars {
                return Err(Error::invalid("generator in a different ring"));
            }
            if g.is_zero() {
                return Err(Error::invalid("zero generator"));
            }
        }
        let mut components: Vec<Vec<Form>> = Vec::with_capacity(d_max + 1);
        for d in 0..=d_max {
            let table = MonomialTable::new(num_vars, d);
            let mut ech = IntEchelon::new(table.len());
            let mut forms: Vec<Form> = Vec::new();
            if d > 0 {
                for b in &components[d - 1] {
                    for v in 0..num_vars {
                        forms.push(b.mul_var(v));
                    }
                }
            }
            for g in gens {
                if g.degree() == d {
                    forms.push(g.clone());
                }
            }
            for f in &forms {
                ech.insert_rat(&f.to_vector(&table));
            }
            let (rref, _) = ech.to_rref();
            let basis = (0..rref.rows())
                .map(|i| Form::from_vector(&table, rref.row(i)))
                .collect();
            components.push(basis);
        }
        Ok(GradedSpan {
            num_vars,
            components,
        })
    }

    /// Same as `from_generators` with an explicit window check.
    pub fn from_generators_window(
        num_vars: usize,
        gens: &[Form],
        d_min: usize,
        d_max: usize,
    ) -> Result<Self> {
        if d_min > d_max {
            return Err(Error::invalid(format!(
                "inverted window [{}, {}]",
                d_min, d_max
            )));
        }
        Self::from_generators(num_vars, gens, d_max)
    }

    /// Wrap explicit per-degree bases (canonicalized). Degree d component is
    /// components[d]; the list covers 0..=d_max.
    pub fn from_components(num_vars: usize, components: Vec<Vec<Form>>) -> Result<Self> {
        let mut canon = Vec::with_capacity(components.len());
        for (d, forms) in components.iter().enumerate() {
            let table = MonomialTable::new(num_vars, d);
            for f in forms {
                if f.num_vars() != num_vars || f.degree() != d {
                    return Err(Error::invalid("component form of wrong degree or ring"));
                }
            }
            canon.push(canonical_basis(forms, &table));
        }
        Ok(GradedSpan {
            num_vars,
            components: canon,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn d_max(&self) -> usize {
        self.components.len() - 1
    }

    pub fn component(&self, d: usize) -> Result<&[Form]> {
        self.components.get(d).map(|v| v.as_slice()).ok_or(Error::WindowTooSmall {
            degree: d,
            lo: 0,
            hi: self.d_max(),
        })
    }

    pub fn dim_component(&self, d: usize) -> Result<usize> {
        Ok(self.component(d)?.len())
    }

    /// Hilbert function of the quotient: C(d+r-1, r-1) - dim of the component.
    pub fn hilbert_function(&self, d: usize) -> Result<u64> {
        let dim = self.dim_component(d)?;
        Ok((monomial_count(self.num_vars, d) - dim) as u64)
    }

    /// Quotient dimensions for all computed degrees, as an h-vector.
    pub fn quotient_hvector(&self) -> HVector {
        HVector::new(
            (0..=self.d_max())
                .map(|d| self.hilbert_function(d).expect("within window"))
                .collect(),
        )
    }

    /// Verify that each component contains the variable multiples of the
    /// previous one.
    pub fn is_ideal_closed(&self) -> bool {
        for d in 1..=self.d_max() {
            let table = MonomialTable::new(self.num_vars, d);
            let m = forms_to_matrix(&self.components[d], &table);
            let space = crate::matrix::RowSpace::new(&m);
            for b in &self.components[d - 1] {
                for v in 0..self.num_vars {
                    if !space.contains(&b.mul_var(v).to_vector(&table)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A monomial ideal given by minimal generators (exponent vectors).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    pub num_vars: usize,
    pub generators: Vec<Vec<u32>>,
}

impl MonomialIdeal {
    /// Normalizes to minimal generators (drops anything divisible by another).
    pub fn new(num_vars: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        for g in &gens {
            if g.len() != num_vars {
                return Err(Error::invalid("exponent vector length mismatch"));
            }
        }
        let mut sorted = gens;
        sorted.sort_by(|a, b| expo_degree(a).cmp(&expo_degree(b)).then(a.cmp(b)));
        sorted.dedup();
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        for g in sorted {
            if !minimal.iter().any(|m| expo_divides(m, &g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            num_vars,
            generators: minimal,
        })
    }

    pub fn to_forms(&self) -> Vec<Form> {
        self.generators
            .iter()
            .map(|e| Form::monomial(self.num_vars, e.clone(), Rat::one()))
            .collect()
    }

    pub fn contains_monomial(&self, expo: &[u32]) -> bool {
        self.generators.iter().any(|g| expo_divides(g, expo))
    }

    /// Generators of degree <= d only.
    pub fn truncation(&self, d: usize) -> MonomialIdeal {
        MonomialIdeal {
            num_vars: self.num_vars,
            generators: self
                .generators
                .iter()
                .filter(|g| expo_degree(g) <= d)
                .cloned()
                .collect(),
        }
    }

    /// Quotient dimension at degree d by direct standard-monomial counting.
    pub fn quotient_dim(&self, d: usize) -> u64 {
        monomials_of_degree(self.num_vars, d)
            .iter()
            .filter(|m| !self.contains_monomial(m))
            .count() as u64
    }

    pub fn quotient_hvector(&self, d_max: usize) -> HVector {
        HVector::new((0..=d_max).map(|d| self.quotient_dim(d)).collect())
    }
}

/// Monomial-ideal Hilbert function by inclusion-exclusion over generator
/// subsets. Beyond 20 generators the subset sum is abandoned for the plain
/// standard-monomial count (identical value, no 2^g blowup).
pub fn monomial_hilbert_function(ideal: &MonomialIdeal, d: usize) -> u64 {
    let gens = &ideal.generators;
    let r = ideal.num_vars;
    if gens.len() > 20 {
        return ideal.quotient_dim(d);
    }
    let mut acc = BigInt::zero();
    for mask in 0u32..(1u32 << gens.len()) {
        let mut lcm = vec![0u32; r];
        for (i, g) in gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = expo_lcm(&lcm, g);
            }
        }
        let deg = expo_degree(&lcm) as i64;
        let term = BigInt::from(binom_i64(d as i64 - deg + r as i64 - 1, r as i64 - 1));
        if mask.count_ones() % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let (sign, mag) = acc.into_parts();
    assert!(sign != num_bigint::Sign::Minus, "inclusion-exclusion underflow");
    to_u64(&mag, "monomial hilbert function")
}

/// The lex-segment ideal realizing a given O-sequence in r variables: in each
/// degree d it contains exactly the (dim S_d - h(d)) lex-greatest monomials.
pub fn lex_segment_ideal(h: &HVector, r: usize) -> Result<MonomialIdeal> {
    let check = crate::binom::is_o_sequence(h);
    if !check.is_o_sequence {
        return Err(Error::invalid(format!(
            "not an O-sequence (first failure at index {:?})",
            check.first_failure
        )));
    }
    let Some(last) = h.last_nonzero() else {
        // Zero algebra: the unit ideal.
        return MonomialIdeal::new(r, vec![vec![0; r]]);
    };
    debug_assert_eq!(h.get(0), 1);
    if h.get(1) > r as u64 {
        return Err(Error::invalid(format!(
            "h(1) = {} not achievable in {} variables",
            h.get(1),
            r
        )));
    }
    let top = last + 1;
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut prev: HashSet<Vec<u32>> = HashSet::new();
    for d in 1..=top {
        let list = monomials_of_degree(r, d);
        let n_d = list.len() as u64;
        let quot = h.get(d);
        if quot > n_d {
            return Err(Error::invalid(format!(
                "h({}) = {} exceeds the ring dimension {}",
                d, quot, n_d
            )));
        }
        let take = (n_d - quot) as usize;
        let segment: HashSet<Vec<u32>> = list[..take].iter().cloned().collect();
        // New minimal generators: segment members not reachable from below.
        for m in &list[..take] {
            let reachable = (0..r).any(|i| {
                m[i] > 0 && {
                    let mut q = m.clone();
                    q[i] -= 1;
                    prev.contains(&q)
                }
            });
            if !reachable {
                gens.push(m.clone());
            }
        }
        // The segment must absorb variable multiples (guaranteed for
        // O-sequences; checked to fail loudly on bugs).
        for m in &prev {
            for i in 0..r {
                let mut up = m.clone();
                up[i] += 1;
                assert!(
                    segment.contains(&up),
                    "lex segment not an ideal at degree {}",
                    d
                );
            }
        }
        prev = segment;
    }
    MonomialIdeal::new(r, gens)
}

/// Annihilator rows of the span of `forms` (canonical kernel basis of the
/// coefficient matrix).
fn perp_rows(forms: &[Form], table: &MonomialTable) -> Vec<Vec<Rat>> {
    let mut ech = IntEchelon::new(table.len());
    for f in forms {
        ech.insert_rat(&f.to_vector(table));
    }
    ech.kernel()
}

/// Contraction of a dual vector w (degree d + e) by a form f (degree e):
/// result[mu] = sum_nu f[nu] * w[mu + nu], a dual vector of degree d.
pub fn contract(f: &Form, w: &[Rat], big: &MonomialTable, small: &MonomialTable) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); small.len()];
    for (mu_idx, mu) in small.list.iter().enumerate() {
        let mut acc = Rat::zero();
        for (nu, c) in f.terms() {
            let sum: Vec<u32> = mu.iter().zip(nu.iter()).map(|(a, b)| a + b).collect();
            let v = &w[big.index_of(&sum)];
            if !v.is_zero() {
                acc += c * v;
            }
        }
        out[mu_idx] = acc;
    }
    out
}

/// Basis of { g of degree d : g*f in span[d + deg f] for every f in fs }.
pub fn colon_by_forms(span: &GradedSpan, fs: &[Form], d: usize) -> Result<Vec<Form>> {
    let r = span.num_vars();
    let table_d = MonomialTable::new(r, d);
    let mut ech = IntEchelon::new(table_d.len());
    for f in fs {
        if f.num_vars() != r {
            return Err(Error::invalid("colon form in a different ring"));
        }
        if f.is_zero() {
            return Err(Error::invalid("colon by the zero form"));
        }
        let e = f.degree();
        let target = span.component(d + e)?;
        let big = MonomialTable::new(r, d + e);
        for w in perp_rows(target, &big) {
            let row = contract(f, &w, &big, &table_d);
            if row.iter().any(|x| !x.is_zero()) {
                ech.insert_rat(&row);
            }
        }
    }
    let sols = ech.kernel();
    let forms: Vec<Form> = sols
        .iter()
        .map(|v| Form::from_vector(&table_d, v))
        .collect();
    Ok(canonical_basis(&forms, &table_d))
}

/// dim of the degree-d component minus dim of (variables * previous component).
pub fn min_generator_count(span: &GradedSpan, d: usize) -> Result<u64> {
    if d == 0 {
        return Ok(span.dim_component(0)? as u64);
    }
    let below = span.component(d - 1)?;
    let here = span.dim_component(d)?;
    let table = MonomialTable::new(span.num_vars(), d);
    let mut ech = IntEchelon::new(table.len());
    for b in below {
        for v in 0..span.num_vars() {
            ech.insert_rat(&b.mul_var(v).to_vector(&table));
        }
    }
    Ok((here - ech.rank()) as u64)
}

/// Result of an iterated finite-difference fit on consecutive integer values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PolyFit {
    /// Exact rational coefficients in t, constant term first; the polynomial
    /// matches the data from degree `valid_from` onward.
    Polynomial {
        #[serde(serialize_with = "crate::rat::serde_rat_vec::serialize")]
        coeffs: Vec<Rat>,
        valid_from: i64,
    },
    Undetermined,
}

/// Iterated finite differences: declare degree e once the (e+1)-st difference
/// vanishes on at least the last 3 positions, and read the polynomial off the
/// stable tail.
pub fn hilbert_polynomial_fit(values: &[(i64, u64)]) -> Result<PolyFit> {
    if values.len() < 4 {
        return Err(Error::invalid("polynomial fit needs at least 4 values"));
    }
    for w in values.windows(2) {
        if w[1].0 != w[0].0 + 1 {
            return Err(Error::invalid("polynomial fit needs consecutive degrees"));
        }
    }
    let mut row: Vec<i128> = values.iter().map(|&(_, v)| v as i128).collect();
    let mut rows: Vec<Vec<i128>> = vec![row.clone()];
    for e in 0.. {
        if row.len() < 4 {
            return Ok(PolyFit::Undetermined);
        }
        let diff: Vec<i128> = row.windows(2).map(|w| w[1] - w[0]).collect();
        let zeros_at_end = diff.iter().rev().take_while(|&&x| x == 0).count();
        if zeros_at_end >= 3 {
            // Values from index i0 on follow a degree-e polynomial.
            let i0 = diff.len() - zeros_at_end;
            let t0 = values[i0].0;
            // Newton forward differences at i0, taken from the stored rows.
            let mut coeffs = vec![Rat::zero(); e + 1];
            for (j, r) in rows.iter().enumerate().take(e + 1) {
                // Delta^j v(t0) * C(t - t0, j)
                let delta = Rat::from_integer(BigInt::from(r[i0]));
                let basis = falling_binomial_poly(t0, j);
                for (idx, b) in basis.iter().enumerate() {
                    coeffs[idx] += &delta * b;
                }
            }
            while coeffs.last().map_or(false, |c| c.is_zero()) {
                coeffs.pop();
            }
            if coeffs.is_empty() {
                coeffs.push(Rat::zero());
            }
            return Ok(PolyFit::Polynomial {
                coeffs,
                valid_from: t0,
            });
        }
        rows.push(diff.clone());
        row = diff;
        if e > values.len() {
            break;
        }
    }
    Ok(PolyFit::Undetermined)
}

/// Coefficients (constant first) of C(t - t0, j) as a polynomial in t.
fn falling_binomial_poly(t0: i64, j: usize) -> Vec<Rat> {
    // Product over s of (t - t0 - s) / j!
    let mut poly = vec![Rat::one()];
    for s in 0..j {
        let shift = Rat::from_integer(BigInt::from(-(t0 + s as i64)));
        // poly *= (t + shift)
        let mut next = vec![Rat::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c * &shift;
            next[i + 1] += c;
        }
        poly = next;
    }
    let mut fact = Rat::one();
    for s in 1..=j {
        fact *= Rat::from_integer(BigInt::from(s as i64));
    }
    poly.iter().map(|c| c / &fact).collect()
}

pub fn poly_eval(coeffs: &[Rat], t: i64) -> Rat {
    let tv = Rat::from_integer(BigInt::from(t));
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &tv + c;
    }
    acc
}

pub fn poly_to_string(coeffs: &[Rat]) -> String {
    if coeffs.iter().all(|c| c.is_zero()) {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = crate::rat::rat_to_string(c);
        let p = match i {
            0 => cs,
            1 => {
                if cs == "1" {
                    "t".into()
                } else if cs == "-1" {
                    "-t".into()
                } else {
                    format!("{}t", cs)
                }
            }
            _ => {
                if cs == "1" {
                    format!("t^{}", i)
                } else if cs == "-1" {
                    format!("-t^{}", i)
                } else {
                    format!("{}t^{}", cs, i)
                }
            }
        };
        parts.push(p);
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
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseLocusStatus {
    Empty,
    ZeroDimensional,
    PositiveDimensional,
    Undetermined,
}

/// Dimension/degree/Hilbert-polynomial profile of the scheme cut out by the
/// degree-n component of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseLocusProfile {
    pub status: BaseLocusStatus,
    pub dimension: Option<usize>,
    pub degree: Option<u64>,
    #[serde(serialize_with = "crate::rat::serde_rat_opt_vec::serialize")]
    pub hilbert_polynomial: Option<Vec<Rat>>,
    /// Quotient dimensions measured along the way, starting at the truncation
    /// degree.
    pub measured: Vec<u64>,
    pub truncation_degree: usize,
}

impl BaseLocusProfile {
    fn undetermined(n: usize, measured: Vec<u64>) -> Self {
        BaseLocusProfile {
            status: BaseLocusStatus::Undetermined,
            dimension: None,
            degree: None,
            hilbert_polynomial: None,
            measured,
            truncation_degree: n,
        }
    }
}

/// Shared scan: pull quotient dimensions degree by degree starting at n,
/// stop at zero (empty base locus) or once the difference fit stabilizes.
fn profile_scan(
    n: usize,
    d_cap: usize,
    mut next_dim: impl FnMut() -> u64,
) -> Result<BaseLocusProfile> {
    let mut values: Vec<(i64, u64)> = Vec::new();
    let mut measured = Vec::new();
    for m in n..=(n + d_cap) {
        let q = next_dim();
        values.push((m as i64, q));
        measured.push(q);
        if q == 0 {
            // Ideal components only grow; zero persists.
            return Ok(BaseLocusProfile {
                status: BaseLocusStatus::Empty,
                dimension: None,
                degree: None,
                hilbert_polynomial: Some(vec![Rat::zero()]),
                measured,
                truncation_degree: n,
            });
        }
        if values.len() >= 4 {
            if let PolyFit::Polynomial { coeffs, .. } = hilbert_polynomial_fit(&values)? {
                return Ok(finish_profile(n, coeffs, measured));
            }
        }
    }
    Ok(BaseLocusProfile::undetermined(n, measured))
}

fn finish_profile(n: usize, coeffs: Vec<Rat>, measured: Vec<u64>) -> BaseLocusProfile {
    if coeffs.iter().all(|c| c.is_zero()) {
        return BaseLocusProfile {
            status: BaseLocusStatus::Empty,
            dimension: None,
            degree: None,
            hilbert_polynomial: Some(coeffs),
            measured,
            truncation_degree: n,
        };
    }
    let e = coeffs.len() - 1;
    let mut fact = Rat::one();
    for s in 1..=e {
        fact *= Rat::from_integer(BigInt::from(s as i64));
    }
    let lead_scaled = coeffs[e].clone() * fact;
    // The scheme degree must be a positive integer; anything else means the
    // window caught a pre-stable stretch and the answer is not trusted.
    if !lead_scaled.denom().is_one() || lead_scaled.numer() <= &BigInt::zero() {
        return BaseLocusProfile::undetermined(n, measured);
    }
    let degree = to_u64(lead_scaled.numer().magnitude(), "scheme degree");
    BaseLocusProfile {
        status: if e == 0 {
            BaseLocusStatus::ZeroDimensional
        } else {
            BaseLocusStatus::PositiveDimensional
        },
        dimension: Some(e),
        degree: Some(degree),
        hilbert_polynomial: Some(coeffs),
        measured,
        truncation_degree: n,
    }
}

/// Profile the base locus of the degree-n component: Hilbert polynomial of
/// the quotient by the ideal generated by that component. `window_extension`
/// caps how far past n the scan may go (default n + r + 5).
pub fn base_locus_profile(
    span: &GradedSpan,
    n: usize,
    window_extension: Option<usize>,
) -> Result<BaseLocusProfile> {
    let r = span.num_vars();
    let d_cap = window_extension.unwrap_or(n + r + 5);
    let comp = span.component(n)?;
    let mut dq = DualQuotient::from_component(r, n, comp);
    let mut first = true;
    profile_scan(n, d_cap, move || {
        if first {
            first = false;
        } else {
            dq.advance(&[]);
        }
        dq.dim() as u64
    })
}

/// Base locus profile for a monomial ideal truncated at degree n (fast path:
/// standard-monomial counting per degree).
pub fn monomial_base_locus_profile(
    ideal: &MonomialIdeal,
    n: usize,
    window_extension: Option<usize>,
) -> Result<BaseLocusProfile> {
    let d_cap = window_extension.unwrap_or(n + ideal.num_vars + 5);
    let trunc = ideal.truncation(n);
    let mut m = n;
    profile_scan(n, d_cap, move || {
        let q = trunc.quotient_dim(m);
        m += 1;
        q
    })
}

/// True iff the degree-n linear system has no base point: the quotient by the
/// ideal generated by the degree-n component vanishes by degree r(n-1)+1
/// (the socle bound for a complete intersection of degree-n forms). Certified
/// early exits: a zero quotient is final, and a maximal-growth step with no
/// late generators persists forever (so the system is certainly not base
/// point free).
pub fn basepoint_free_check(span: &GradedSpan, n: usize) -> Result<bool> {
    let r = span.num_vars();
    if n == 0 {
        return Ok(span.dim_component(0)? > 0);
    }
    let cutoff = r * (n - 1) + 1;
    let comp = span.component(n)?;
    let mut dq = DualQuotient::from_component(r, n, comp);
    let mut prev = dq.dim() as u64;
    if prev == 0 {
        return Ok(true);
    }
    for m in n..cutoff {
        dq.advance(&[]);
        let q = dq.dim() as u64;
        if q == 0 {
            return Ok(true);
        }
        if q == macaulay_bound(prev, m as u64)? {
            // Persistence: the quotient follows a positive polynomial forever.
            return Ok(false);
        }
        prev = q;
    }
    Ok(false)
}

/// Dimension of the degree-d socle of the quotient: forms killed into the
/// span by every variable, modulo the span itself.
pub fn socle_dimension(span: &GradedSpan, d: usize) -> Result<u64> {
    let r = span.num_vars();
    let table_d = MonomialTable::new(r, d);
    let table_up = MonomialTable::new(r, d + 1);
    let up = span.component(d + 1)?;
    let here = span.dim_component(d)?;
    let mut ech = IntEchelon::new(table_d.len());
    for w in perp_rows(up, &table_up) {
        for i in 0..r {
            // Condition row for x_i * f in span[d+1]: the shift of w by x_i.
            let mut row = vec![Rat::zero(); table_d.len()];
            let mut nonzero = false;
            for (idx, mu) in table_d.list.iter().enumerate() {
                let mut nu = mu.clone();
                nu[i] += 1;
                let v = &w[table_up.index_of(&nu)];
                if !v.is_zero() {
                    row[idx] = v.clone();
                    nonzero = true;
                }
            }
            if nonzero {
                ech.insert_rat(&row);
            }
        }
    }
    let killed = table_d.len() - ech.rank();
    Ok((killed - here) as u64)
}

/// Outcome of the two-variable decreasing-tail check.
#[derive(Clone, Debug, Serialize)]
pub struct TailCheckReport {
    pub n: usize,
    pub basepoint_free: bool,
    pub drop_by_one: bool,
    pub no_late_generators: bool,
    /// Quotient dimensions h(n), h(n+1), ... down to the first zero.
    pub tail: Vec<u64>,
    /// Some(true) when all hypotheses hold and the tail decreases by exactly
    /// one until it vanishes; Some(false) with the failing degree otherwise.
    pub holds: Option<bool>,
    pub failure_degree: Option<usize>,
}

/// For a two-variable ideal: verify hypotheses (basepoint-free at n, drop by
/// one into n+1, no generators past n) and then the full decreasing tail.
pub fn prop61_tail_check(span: &GradedSpan, n: usize) -> Result<TailCheckReport> {
    if span.num_vars() != 2 {
        return Err(Error::invalid("tail check is for two-variable ideals"));
    }
    let h_n = span.hilbert_function(n)?;
    let h_n1 = span.hilbert_function(n + 1)?;
    let bpf = basepoint_free_check(span, n)?;
    let drop = h_n >= 1 && h_n1 == h_n - 1;
    let need = n + h_n as usize + 1;
    if span.d_max() < need {
        return Err(Error::WindowTooSmall {
            degree: need,
            lo: 0,
            hi: span.d_max(),
        });
    }
    let mut no_late = true;
    for d in (n + 1)..=need {
        if min_generator_count(span, d)? > 0 {
            no_late = false;
            break;
        }
    }
    let mut report = TailCheckReport {
        n,
        basepoint_free: bpf,
        drop_by_one: drop,
        no_late_generators: no_late,
        tail: vec![],
        holds: None,
        failure_degree: None,
    };
    if !(bpf && drop && no_late) {
        return Ok(report);
    }
    let mut j = n;
    let mut cur = h_n;
    report.tail.push(cur);
    while cur > 0 {
        let next = span.hilbert_function(j + 1)?;
        report.tail.push(next);
        if next != cur.saturating_sub(1) {
            report.holds = Some(false);
            report.failure_degree = Some(j + 1);
            return Ok(report);
        }
        cur = next;
        j += 1;
    }
    report.holds = Some(true);
    Ok(report)
}
