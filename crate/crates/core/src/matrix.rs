//! Dense exact matrices over the rationals.
//!
//! Rank and kernels go through fraction-free (Bareiss) elimination on integer
//! rows obtained by clearing denominators; the pivot in each column is chosen
//! among the candidates with the smallest bit size. Canonical bases come from
//! the reduced row echelon form over Q, which is unique for a given row space,
//! so every basis in the crate is reproducible bit for bit.

use crate::rat::{primitive_integer_vector, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        RatMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::rat::rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rat> {
        self.row(i).to_vec()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j).clone());
            }
        }
        t
    }

    pub fn stack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RatMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| primitive_integer_vector(self.row(i)))
            .collect()
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_echelon(self.integer_rows()).len()
    }

    /// Basis of the right null space: each returned v satisfies Mv = 0 exactly.
    /// Length is always cols - rank. The basis is canonical (from the RREF).
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.rref();
        kernel_from_rref(&rref, &pivots, self.cols)
    }

    /// Reduced row echelon form over Q together with its pivot columns.
    /// Unique for the row space, hence canonical.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let ech = bareiss_echelon(self.integer_rows());
        rref_from_echelon(ech, self.cols)
    }
}

/// Fraction-free row echelon form of integer rows. Returns the pivot rows in
/// order; each kept row is content-stripped. Pivot choice per column: among
/// nonzero candidates, smallest bit size (ties broken by row index), which
/// keeps intermediate entries small.
pub fn bareiss_echelon(mut rows: Vec<Vec<BigInt>>) -> Vec<(usize, Vec<BigInt>)> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut out: Vec<(usize, Vec<BigInt>)> = Vec::new();
    let mut active: Vec<Vec<BigInt>> = Vec::new();
    for r in rows.drain(..) {
        if r.iter().any(|x| !x.is_zero()) {
            active.push(r);
        }
    }
    for col in 0..ncols {
        if active.is_empty() {
            break;
        }
        // Select the pivot row.
        let mut best: Option<(usize, u64)> = None;
        for (i, r) in active.iter().enumerate() {
            if !r[col].is_zero() {
                let bits = r[col].bits();
                if best.map_or(true, |(_, b)| bits < b) {
                    best = Some((i, bits));
                }
            }
        }
        let Some((pi, _)) = best else { continue };
        let pivot = active.swap_remove(pi);
        let plead = pivot[col].clone();
        let mut next_active = Vec::with_capacity(active.len());
        for mut r in active.drain(..) {
            if !r[col].is_zero() {
                let rl = r[col].clone();
                let g = plead.gcd(&rl);
                let pf = &plead / &g;
                let rf = &rl / &g;
                for j in col..ncols {
                    let v = &r[j] * &pf - &pivot[j] * &rf;
                    r[j] = v;
                }
                strip_content(&mut r);
            }
            if r.iter().any(|x| !x.is_zero()) {
                next_active.push(r);
            }
        }
        active = next_active;
        out.push((col, pivot));
    }
    out
}

fn strip_content(r: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in r.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in r.iter_mut() {
        *x = &*x / &g;
    }
}

fn rref_from_echelon(ech: Vec<(usize, Vec<BigInt>)>, ncols: usize) -> (RatMatrix, Vec<usize>) {
    let pivots: Vec<usize> = ech.iter().map(|(c, _)| *c).collect();
    let mut rows: Vec<Vec<Rat>> = ech
        .iter()
        .map(|(c, r)| {
            let lead = Rat::from_integer(r[*c].clone());
            r.iter()
                .map(|x| Rat::from_integer(x.clone()) / lead.clone())
                .collect()
        })
        .collect();
    // Back-eliminate above each pivot (bottom-up).
    for i in (0..rows.len()).rev() {
        let pc = pivots[i];
        for k in 0..i {
            let f = rows[k][pc].clone();
            if !f.is_zero() {
                let (lower, upper) = rows.split_at_mut(i);
                let src = &upper[0];
                let dst = &mut lower[k];
                for j in pc..ncols {
                    if !src[j].is_zero() {
                        let v = &dst[j] - &(&f * &src[j]);
                        dst[j] = v;
                    }
                }
            }
        }
    }
    (RatMatrix::from_rows(rows), pivots)
}

fn kernel_from_rref(rref: &RatMatrix, pivots: &[usize], ncols: usize) -> Vec<Vec<Rat>> {
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (i, &pc) in pivots.iter().enumerate() {
            // rref row: v[pc] = -entry at the free column.
            let e = rref.at(i, free);
            if !e.is_zero() {
                v[pc] = -e.clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Incremental fraction-free echelon accumulator. Rows are inserted one at a
/// time and reduced against the pivot rows collected so far; content is
/// stripped after every elimination. Pivot rows are kept sorted by pivot
/// column, so insertion is deterministic for a fixed insertion order.
pub struct IntEchelon {
    ncols: usize,
    /// (pivot column, row) sorted by pivot column; row[j] = 0 for j < pivot.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntEchelon {
    pub fn new(ncols: usize) -> Self {
        IntEchelon { ncols, rows: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Insert an integer row; returns true if the rank increased.
    pub fn insert(&mut self, mut r: Vec<BigInt>) -> bool {
        assert_eq!(r.len(), self.ncols);
        for (pc, prow) in &self.rows {
            if !r[*pc].is_zero() {
                let rl = r[*pc].clone();
                let pl = prow[*pc].clone();
                let g = pl.gcd(&rl);
                let pf = &pl / &g;
                let rf = &rl / &g;
                // The whole row scales by pf; prow is zero before pc.
                for j in 0..*pc {
                    if !r[j].is_zero() {
                        let v = &r[j] * &pf;
                        r[j] = v;
                    }
                }
                for j in *pc..self.ncols {
                    let v = &r[j] * &pf - &prow[j] * &rf;
                    r[j] = v;
                }
                strip_content(&mut r);
            }
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(col) => {
                let at = self.rows.partition_point(|(c, _)| *c < col);
                self.rows.insert(at, (col, r));
                true
            }
        }
    }

    pub fn insert_rat(&mut self, r: &[Rat]) -> bool {
        self.insert(primitive_integer_vector(r))
    }

    /// Canonical reduced row echelon form over Q of the accumulated row space.
    pub fn to_rref(&self) -> (RatMatrix, Vec<usize>) {
        rref_from_echelon(self.rows.clone(), self.ncols)
    }

    /// The raw staircase rows (content-stripped integers) as rationals.
    /// Deterministic for a fixed insertion order, and usually far smaller
    /// than the pivot-normalized form.
    pub fn staircase_rows(&self) -> Vec<Vec<Rat>> {
        self.rows
            .iter()
            .map(|(_, r)| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect()
    }

    /// Canonical kernel basis of the accumulated rows (as a matrix).
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.to_rref();
        kernel_from_rref(&rref, &pivots, self.ncols)
    }
}

/// Row space membership and comparison helpers on canonical RREF bases.
pub struct RowSpace {
    pub rref: RatMatrix,
    pub pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &RatMatrix) -> Self {
        let (rref, pivots) = m.rref();
        RowSpace { rref, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce v modulo the row space; returns the (canonical) remainder.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for j in pc..v.len() {
                    let s = self.rref.at(i, j);
                    if !s.is_zero() {
                        let nv = &v[j] - &(&f * s);
                        v[j] = nv;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_all(&self, m: &RatMatrix) -> bool {
        (0..m.rows()).all(|i| self.contains(m.row(i)))
    }

    pub fn same_space(&self, other: &RowSpace) -> bool {
        self.rref == other.rref
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(RatMatrix::identity(2).rank(), 2);
        assert_eq!(RatMatrix::zero(3, 4).rank(), 0);
    }

    #[test]
    fn rank_proportional_rows() {
        let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_identity_empty() {
        assert!(RatMatrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_one_by_two() {
        // [[1,1]] -> kernel proportional to (1,-1)
        let m = RatMatrix::from_i64(&[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(!v[0].is_zero());
        assert_eq!(v[0], -v[1].clone());
    }

    #[test]
    fn kernel_proportional() {
        // [[1,2],[2,4]] -> kernel proportional to (2,-1); solved by hand:
        // x + 2y = 0 so (x, y) = t(2, -1) with t = -y.
        let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // v proportional to (2,-1): 1*v0 + 2*v1 = 0 and v nonzero.
        assert_eq!(&v[0] + &(&rat_int(2) * &v[1]), rat_int(0));
        assert!(v.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn rank_nullity_randomized() {
        use crate::rng::Rng;
        let mut rng = Rng::new(99);
        for _ in 0..40 {
            let rows = 1 + rng.below(6) as usize;
            let cols = 1 + rng.below(6) as usize;
            let mut m = RatMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, crate::rat::rat_frac(rng.int_in(-5, 5), rng.int_in(1, 4)));
                }
            }
            let r = m.rank();
            let k = m.kernel_basis();
            assert_eq!(r + k.len(), cols);
            for v in &k {
                assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }
    }

    #[test]
    fn rref_canonical() {
        let a = RatMatrix::from_i64(&[&[2, 4, 6], &[1, 1, 1]]);
        let b = RatMatrix::from_i64(&[&[1, 1, 1], &[3, 5, 7], &[4, 6, 8]]);
        // Same row space in different presentations.
        let (ra, _) = a.rref();
        let (rb, _) = b.rref();
        assert_eq!(ra, rb);
    }
}
