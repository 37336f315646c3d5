//! Quotient dimensions of finitely generated graded ideals, tracked through
//! the dual (annihilator) side.
//!
//! For a subspace V of the degree-m forms, let W = V-perp under the monomial
//! coefficient pairing. If V' = x1*V + ... + xr*V plus fresh generators G in
//! degree m+1, then
//!
//!   W' = { w : shift_i(w) in W for all i, and <g, w> = 0 for g in G },
//!
//! where shift_i reads off coefficients along multiplication by x_i. A tuple
//! (u_1, ..., u_r) in W^r glues to a unique w exactly when shift_j(u_i) =
//! shift_i(u_j) for all pairs, so each degree step is a kernel computation in
//! r * dim(W) unknowns. dim(W) is the quotient dimension, which stays small
//! precisely in the regimes this crate measures, so long windows are cheap
//! even when the ideal side is huge.

use crate::form::Form;
use crate::matrix::{IntEchelon, RatMatrix};
use crate::mono::MonomialTable;
use crate::rat::{primitive_integer_vector, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

pub struct DualQuotient {
    num_vars: usize,
    degree: usize,
    table: MonomialTable,
    /// Canonical basis of W at the current degree (vectors of length N_degree).
    basis: Vec<Vec<Rat>>,
}

impl DualQuotient {
    /// Start at degree 0 with the zero ideal: the quotient is 1-dimensional.
    pub fn unit(num_vars: usize) -> Self {
        DualQuotient {
            num_vars,
            degree: 0,
            table: MonomialTable::new(num_vars, 0),
            basis: vec![vec![Rat::from_integer(BigInt::from(1))]],
        }
    }

    /// Start at a given degree from a basis of the ideal component there.
    pub fn from_component(num_vars: usize, degree: usize, component: &[Form]) -> Self {
        let table = MonomialTable::new(num_vars, degree);
        let mut ech = IntEchelon::new(table.len());
        for f in component {
            ech.insert_rat(&f.to_vector(&table));
        }
        let basis = ech.kernel();
        DualQuotient {
            num_vars,
            degree,
            table,
            basis,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Quotient dimension at the current degree.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Step to the next degree, absorbing new ideal generators of that degree.
    pub fn advance(&mut self, new_gens: &[Form]) {
        let r = self.num_vars;
        let q = self.basis.len();
        let next_table = MonomialTable::new(r, self.degree + 1);
        if q == 0 {
            // Quotient already zero; it stays zero for an ideal.
            self.degree += 1;
            self.table = next_table;
            self.basis = vec![];
            return;
        }
        let width = r * q;
        let mut ech = IntEchelon::new(width);

        // Compatibility: shift_j(u_i) = shift_i(u_j) coefficientwise on the
        // monomials of degree m-1 (no constraints when m = 0).
        if self.degree >= 1 {
            let prev_table = MonomialTable::new(r, self.degree - 1);
            for i in 0..r {
                for j in (i + 1)..r {
                    for nu in &prev_table.list {
                        let mut row = vec![Rat::zero(); width];
                        let mut nonzero = false;
                        let mut nu_j = nu.clone();
                        nu_j[j] += 1;
                        let idx_j = self.table.index_of(&nu_j);
                        let mut nu_i = nu.clone();
                        nu_i[i] += 1;
                        let idx_i = self.table.index_of(&nu_i);
                        for (a, b) in self.basis.iter().enumerate() {
                            let cj = &b[idx_j];
                            if !cj.is_zero() {
                                row[i * q + a] = cj.clone();
                                nonzero = true;
                            }
                            let ci = &b[idx_i];
                            if !ci.is_zero() {
                                row[j * q + a] = -ci.clone();
                                nonzero = true;
                            }
                        }
                        if nonzero {
                            ech.insert(primitive_integer_vector(&row));
                        }
                    }
                }
            }
        }

        // New generators kill their pairings with w.
        for g in new_gens {
            assert_eq!(g.num_vars(), r);
            assert_eq!(g.degree(), self.degree + 1);
            let mut row = vec![Rat::zero(); width];
            let mut nonzero = false;
            for (alpha, c) in g.terms() {
                let i = alpha
                    .iter()
                    .position(|&e| e > 0)
                    .expect("positive-degree monomial");
                let mut mu = alpha.clone();
                mu[i] -= 1;
                let idx = self.table.index_of(&mu);
                for (a, b) in self.basis.iter().enumerate() {
                    let v = &b[idx];
                    if !v.is_zero() {
                        row[i * q + a] += c * v;
                        nonzero = true;
                    }
                }
            }
            if nonzero {
                ech.insert(primitive_integer_vector(&row));
            }
        }

        // Solutions c give the new dual basis; glue w from the tuple.
        let sols = ech.kernel();
        let mut glued = IntEchelon::new(next_table.len());
        let mut new_basis_rows: Vec<Vec<Rat>> = Vec::with_capacity(sols.len());
        for c in &sols {
            let mut w = vec![Rat::zero(); next_table.len()];
            for (widx, alpha) in next_table.list.iter().enumerate() {
                let i = alpha.iter().position(|&e| e > 0).unwrap();
                let mut mu = alpha.clone();
                mu[i] -= 1;
                let idx = self.table.index_of(&mu);
                let mut acc = Rat::zero();
                for (a, b) in self.basis.iter().enumerate() {
                    let coef = &c[i * q + a];
                    if !coef.is_zero() && !b[idx].is_zero() {
                        acc += coef * &b[idx];
                    }
                }
                w[widx] = acc;
            }
            new_basis_rows.push(w);
        }
        // Canonicalize.
        for w in &new_basis_rows {
            glued.insert_rat(w);
        }
        let (rref, _) = glued.to_rref();
        self.basis = (0..rref.rows()).map(|i| rref.row_vec(i)).collect();
        self.degree += 1;
        self.table = next_table;
    }

    /// Check that a degree-`degree` form is annihilated by the tracked dual
    /// space, i.e. lies in the tracked ideal component. Used in tests.
    pub fn annihilates(&self, f: &Form) -> bool {
        let v = f.to_vector(&self.table);
        self.basis.iter().all(|w| {
            let mut acc = Rat::zero();
            for (a, b) in v.iter().zip(w.iter()) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc.is_zero()
        })
    }

    /// Canonical basis of the dual (annihilator) space at the current degree.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Dual basis as a matrix (used by callers needing the perp explicitly).
    pub fn basis_matrix(&self) -> RatMatrix {
        if self.basis.is_empty() {
            return RatMatrix::zero(0, self.table.len());
        }
        RatMatrix::from_rows(self.basis.clone())
    }
}
