//! Exponent vectors and graded-lexicographic monomial enumeration.
//!
//! The monomial order is fixed globally: graded lex with x1 > x2 > ... > xr.
//! Within a single degree this is descending lexicographic comparison of
//! exponent vectors, and every matrix in the crate indexes its columns by this
//! order, so bases come out bit-identical across runs.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// C(n, k) over arbitrary-precision integers; 0 when n < k.
pub fn binom_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..k {
        num *= BigUint::from(n - j);
        den *= BigUint::from(j + 1);
    }
    num / den
}

/// C(n, k) with the convention C(n, k) = 0 for n < k or k < 0, over i64 inputs.
pub fn binom_i64(n: i64, k: i64) -> BigUint {
    if k < 0 || n < k {
        return BigUint::zero();
    }
    // n >= k >= 0 here; n may still be negative only if k is, handled above.
    binom_big(n as u64, k as u64)
}

pub fn to_u64(x: &BigUint, what: &str) -> u64 {
    x.to_u64()
        .unwrap_or_else(|| panic!("{} exceeds 64-bit range: {}", what, x))
}

/// Number of monomials of degree d in r variables: C(d + r - 1, r - 1).
pub fn monomial_count(r: usize, d: usize) -> usize {
    to_u64(&binom_big((d + r - 1) as u64, (r - 1) as u64), "monomial count") as usize
}

/// All exponent vectors of length `r` summing to `d`, in descending grlex
/// order (x1^d first, xr^d last).
pub fn monomials_of_degree(r: usize, d: usize) -> Vec<Vec<u32>> {
    assert!(r >= 1);
    let mut out = Vec::with_capacity(monomial_count(r, d));
    let mut cur = vec![0u32; r];
    fill(&mut out, &mut cur, 0, d as u32);
    out
}

fn fill(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, pos: usize, rem: u32) {
    if pos + 1 == cur.len() {
        cur[pos] = rem;
        out.push(cur.clone());
        return;
    }
    // Larger exponent on the earlier variable first: descending lex.
    for e in (0..=rem).rev() {
        cur[pos] = e;
        fill(out, cur, pos + 1, rem - e);
    }
    cur[pos] = 0;
}

/// Index lookup table for the monomials of one degree.
pub struct MonomialTable {
    pub r: usize,
    pub degree: usize,
    pub list: Vec<Vec<u32>>,
    index: std::collections::HashMap<Vec<u32>, usize>,
}

impl MonomialTable {
    pub fn new(r: usize, degree: usize) -> Self {
        let list = monomials_of_degree(r, degree);
        let index = list
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialTable {
            r,
            degree,
            list,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn index_of(&self, expo: &[u32]) -> usize {
        *self
            .index
            .get(expo)
            .unwrap_or_else(|| panic!("monomial {:?} not of degree {}", expo, self.degree))
    }
}

pub fn expo_degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

pub fn expo_mul(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn expo_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn expo_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Descending-grlex comparison (degree first, then lex with x1 largest).
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    expo_degree(a).cmp(&expo_degree(b)).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(monomial_count(3, 6), 28);
        assert_eq!(monomial_count(3, 7), 36);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
    }

    #[test]
    fn order_is_descending_grlex() {
        let m = monomials_of_degree(3, 2);
        assert_eq!(
            m,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn big_binomials() {
        assert_eq!(binom_big(7, 6), BigUint::from(7u32));
        assert!(binom_i64(5, 7).is_zero());
        assert!(binom_i64(3, -1).is_zero());
        // Larger than 64-bit to confirm no cap.
        let b = binom_big(300, 12);
        assert!(b > BigUint::from(u64::MAX));
    }
}
