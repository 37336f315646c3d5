//! The integer calculus of Hilbert function growth: Macaulay expansions,
//! shift operators, the Macaulay and Green bounds, MG-dimension, persistence
//! values, and O-sequence validation.

use crate::error::{Error, Result};
use crate::mono::{binom_big, binom_i64, to_u64};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

/// The unique expansion k = C(k_i, i) + C(k_{i-1}, i-1) + ... + C(k_j, j)
/// with k_i > k_{i-1} > ... > k_j >= j >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialExpansion {
    pub degree: u64,
    /// (top, bottom) pairs; bottoms run i, i-1, ..., j.
    pub terms: Vec<(u64, u64)>,
}

impl BinomialExpansion {
    /// Reconstruct the expanded integer.
    pub fn value(&self) -> u64 {
        let mut acc = BigUint::zero();
        for &(t, b) in &self.terms {
            acc += binom_big(t, b);
        }
        to_u64(&acc, "binomial expansion value")
    }

    /// Sum C(top + b, bottom + a) with C(m, q) = 0 when m < q or q < 0.
    pub fn shift(&self, a: i64, b: i64) -> u64 {
        let mut acc = BigUint::zero();
        for &(t, bot) in &self.terms {
            acc += binom_i64(t as i64 + b, bot as i64 + a);
        }
        to_u64(&acc, "shifted binomial sum")
    }

    fn check_invariants(&self, k: u64) {
        debug_assert!(!self.terms.is_empty());
        for w in self.terms.windows(2) {
            debug_assert!(w[0].0 > w[1].0, "tops must strictly decrease");
            debug_assert_eq!(w[0].1, w[1].1 + 1, "bottoms step down by one");
        }
        for &(t, b) in &self.terms {
            debug_assert!(t >= b && b >= 1);
        }
        debug_assert_eq!(self.value(), k);
    }
}

impl std::fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, b)| format!("C({},{})", t, b))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Largest m with C(m, i) <= k (m >= i, assuming C(i, i) = 1 <= k).
fn greedy_top(k: u64, i: u64) -> u64 {
    debug_assert!(k >= 1 && i >= 1);
    if i == 1 {
        return k;
    }
    // Exponential search then bisection; all evaluation in BigUint.
    let kb = BigUint::from(k);
    let mut lo = i;
    let mut hi = i + 1;
    while binom_big(hi, i) <= kb {
        lo = hi;
        hi *= 2;
    }
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if binom_big(mid, i) <= kb {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The unique i-binomial (Macaulay) expansion of k.
pub fn macaulay_expand(k: u64, i: u64) -> Result<BinomialExpansion> {
    if k == 0 || i == 0 {
        return Err(Error::InvalidInput(format!(
            "macaulay expansion needs k >= 1 and i >= 1, got k={}, i={}",
            k, i
        )));
    }
    let mut terms = Vec::new();
    let mut rem = k;
    let mut bot = i;
    while rem > 0 {
        debug_assert!(bot >= 1, "greedy expansion exhausted bottoms");
        let top = greedy_top(rem, bot);
        terms.push((top, bot));
        rem -= to_u64(&binom_big(top, bot), "expansion term");
        bot -= 1;
    }
    let e = BinomialExpansion { degree: i, terms };
    e.check_invariants(k);
    Ok(e)
}

/// Macaulay bound k^<i>: the maximal legal Hilbert function value in degree
/// i+1 given value k in degree i.
pub fn macaulay_bound(k: u64, i: u64) -> Result<u64> {
    Ok(macaulay_expand(k, i)?.shift(1, 1))
}

/// Green bound k_<i>: the maximal dimension in degree i after restriction by
/// a general linear form.
pub fn green_bound(k: u64, i: u64) -> Result<u64> {
    Ok(macaulay_expand(k, i)?.shift(0, -1))
}

/// MG-dimension of k in degree n: leading top minus n.
pub fn mg_dimension(k: u64, n: u64) -> Result<u64> {
    let e = macaulay_expand(k, n)?;
    Ok(e.terms[0].0 - n)
}

/// Persisted Hilbert function values under maximal growth with no late
/// generators: value at degree n+d for d = 0..=d_max.
pub fn gotzmann_values(k: u64, n: u64, d_max: u64) -> Result<Vec<u64>> {
    let e = macaulay_expand(k, n)?;
    Ok((0..=d_max).map(|d| e.shift(d as i64, d as i64)).collect())
}

/// A finite integer sequence indexed from degree 0. Values beyond the stored
/// length read as 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector(pub Vec<u64>);

impl HVector {
    pub fn new(values: Vec<u64>) -> Self {
        HVector(values)
    }

    pub fn get(&self, d: usize) -> u64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn last_nonzero(&self) -> Option<usize> {
        self.0.iter().rposition(|&v| v > 0)
    }

    /// Drop trailing zeros (the sequence is unchanged as a function).
    pub fn trimmed(&self) -> HVector {
        match self.last_nonzero() {
            None => HVector(vec![]),
            Some(i) => HVector(self.0[..=i].to_vec()),
        }
    }
}

impl std::fmt::Display for HVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OSequenceCheck {
    pub is_o_sequence: bool,
    /// Index of the first entry violating the growth (or positivity) rules.
    pub first_failure: Option<usize>,
}

/// O-sequence test: h(0) = 1 (or h identically zero), Macaulay growth at every
/// step, and no revival after a zero.
pub fn is_o_sequence(h: &HVector) -> OSequenceCheck {
    let ok = OSequenceCheck {
        is_o_sequence: true,
        first_failure: None,
    };
    let fail = |i: usize| OSequenceCheck {
        is_o_sequence: false,
        first_failure: Some(i),
    };
    if h.last_nonzero().is_none() {
        return ok; // the zero algebra
    }
    if h.get(0) != 1 {
        return fail(0);
    }
    let last = h.last_nonzero().unwrap();
    for t in 0..last {
        if h.get(t) == 0 {
            return fail(t + 1); // revival after zero
        }
        if t >= 1 {
            let bound = macaulay_bound(h.get(t), t as u64).expect("h(t) >= 1 here");
            if h.get(t + 1) > bound {
                return fail(t + 1);
            }
        }
        // Growth from degree 0 is unconstrained (any number of variables).
    }
    ok
}

/// macaulay_bound(h(n), n) - h(n+1): 0 means maximal growth, 1 almost maximal.
/// h(n+1) beyond the stored window reads as 0 (the gap to zero).
pub fn growth_gap(h: &HVector, n: usize) -> Result<u64> {
    if n == 0 || h.get(n) == 0 {
        return Err(Error::InvalidInput(format!(
            "growth gap needs h({}) >= 1 in a positive degree",
            n
        )));
    }
    let bound = macaulay_bound(h.get(n), n as u64)?;
    let next = h.get(n + 1);
    debug_assert!(next <= bound, "input is not an O-sequence at degree {}", n);
    Ok(bound - next)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_21_6() {
        // 21 = C(7,6)+C(6,5)+C(5,4)+C(3,3)+C(2,2)+C(1,1)
        let e = macaulay_expand(21, 6).unwrap();
        assert_eq!(
            e.terms,
            vec![(7, 6), (6, 5), (5, 4), (3, 3), (2, 2), (1, 1)]
        );
        assert_eq!(e.value(), 21);
    }

    #[test]
    fn expansion_trivia() {
        // (1, i) -> C(i, i)
        for i in 1..10 {
            let e = macaulay_expand(1, i).unwrap();
            assert_eq!(e.terms, vec![(i, i)]);
        }
        // k <= n -> k ones: C(n,n) + C(n-1,n-1) + ... + C(n-k+1,n-k+1)
        let e = macaulay_expand(4, 7).unwrap();
        assert_eq!(e.terms, vec![(7, 7), (6, 6), (5, 5), (4, 4)]);
    }

    #[test]
    fn shift_examples() {
        let e = macaulay_expand(21, 6).unwrap();
        assert_eq!(e.shift(1, 1), 24);
        assert_eq!(e.shift(0, 0), 21);
        // By hand: C(6,6)+C(5,5)+C(4,4)+C(2,3)+C(1,2)+C(0,1) = 1+1+1+0+0+0 = 3
        assert_eq!(e.shift(0, -1), 3);
    }

    #[test]
    fn bounds() {
        assert_eq!(macaulay_bound(21, 6).unwrap(), 24);
        assert_eq!(macaulay_bound(1, 5).unwrap(), 1);
        // k <= n gives bound k
        for n in 2..9u64 {
            for k in 1..=n {
                assert_eq!(macaulay_bound(k, n).unwrap(), k);
            }
        }
        assert_eq!(green_bound(21, 6).unwrap(), 3);
        // k <= n gives green 0
        for n in 2..9u64 {
            for k in 1..=n {
                assert_eq!(green_bound(k, n).unwrap(), 0);
            }
        }
        // C(n+2,2) in degree n restricts to n+1
        for n in 1..9u64 {
            let k = to_u64(&binom_big(n + 2, 2), "k");
            assert_eq!(green_bound(k, n).unwrap(), n + 1);
        }
    }

    #[test]
    fn mg_dim() {
        assert_eq!(mg_dimension(21, 6).unwrap(), 1);
        for n in 2..8u64 {
            for k in 1..=n {
                assert_eq!(mg_dimension(k, n).unwrap(), 0);
            }
        }
        // 28 = C(8,6) so k_6 = 8
        assert_eq!(mg_dimension(28, 6).unwrap(), 2);
    }

    #[test]
    fn persistence_values() {
        // Term-by-term: (7+d)+(6+d)+(5+d)+3 = 3d+21, i.e. 3t+3 in t = 6+d
        assert_eq!(gotzmann_values(21, 6, 2).unwrap(), vec![21, 24, 27]);
        assert_eq!(gotzmann_values(1, 4, 3).unwrap(), vec![1, 1, 1, 1]);
        // Single term C(n+1+d, n+d) = n+1+d
        for n in 1..7u64 {
            let v = gotzmann_values(n + 1, n, 4).unwrap();
            for (d, &val) in v.iter().enumerate() {
                assert_eq!(val, n + 1 + d as u64);
            }
        }
    }

    #[test]
    fn gotzmann_consistency_with_bound() {
        for k in 1..200u64 {
            for n in 1..7u64 {
                assert_eq!(
                    gotzmann_values(k, n, 1).unwrap()[1],
                    macaulay_bound(k, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn o_sequences() {
        let h = HVector::new(vec![1, 3, 6, 7, 7, 7, 7, 7, 7, 6]);
        assert!(is_o_sequence(&h).is_o_sequence);
        let bad = HVector::new(vec![1, 2, 4]);
        let c = is_o_sequence(&bad);
        assert!(!c.is_o_sequence);
        assert_eq!(c.first_failure, Some(2));
        assert!(is_o_sequence(&HVector::new(vec![1])).is_o_sequence);
        assert!(is_o_sequence(&HVector::new(vec![])).is_o_sequence);
        assert!(is_o_sequence(&HVector::new(vec![0, 0])).is_o_sequence);
        // revival after zero
        let rev = HVector::new(vec![1, 2, 0, 1]);
        assert!(!is_o_sequence(&rev).is_o_sequence);
    }

    #[test]
    fn growth_gaps() {
        let h = HVector::new(vec![1, 3, 6, 10, 15, 21, 21, 23]);
        assert_eq!(growth_gap(&h, 6).unwrap(), 1);
        let h2 = HVector::new(vec![1, 3, 6, 10, 15, 21, 21, 24]);
        assert_eq!(growth_gap(&h2, 6).unwrap(), 0);
        // k <= n with drop by one: bound is k itself, so the gap is 1
        let h3 = HVector::new(vec![1, 3, 6, 7, 3, 2]);
        assert_eq!(growth_gap(&h3, 4).unwrap(), 1);
        // truncated tail: h(n+1) missing reads as zero
        let h4 = HVector::new(vec![1, 3, 5]);
        assert_eq!(
            growth_gap(&h4, 2).unwrap(),
            macaulay_bound(5, 2).unwrap()
        );
        assert!(growth_gap(&h4, 5).is_err());
    }

    #[test]
    fn roundtrip_small_exhaustive() {
        for i in 1..=12u64 {
            for k in 1..=2000u64 {
                let e = macaulay_expand(k, i).unwrap();
                assert_eq!(e.value(), k);
            }
        }
    }

    #[test]
    fn bound_monotone_in_k() {
        for i in 1..=8u64 {
            let mut prev = 0;
            for k in 1..=500u64 {
                let b = macaulay_bound(k, i).unwrap();
                assert!(b >= prev);
                prev = b;
            }
        }
    }
}
