//! Coefficient algebras that can be tensored with the Clifford algebra.
//!
//! The symbol engine only needs an associative unital *-algebra with a
//! linear, tracial trace. Gaussian rationals cover the scalar case; square
//! matrices with exact entries cover internal spaces such as `M_N(C)`, the
//! endomorphisms of the Hilbert space `M_N(C)` (size `N^2`), and the 2x2 block
//! structure of a doubled geometry.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num::{One, Zero};

use crate::scalar::Gaussian;

pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scale(&self, s: &Gaussian) -> Self;
    fn vanishes(&self) -> bool;
    /// True when this is the unit of the algebra.
    fn is_identity(&self) -> bool;
    /// The unit of the algebra this element lives in.
    fn identity_like(&self) -> Self;
    fn trace(&self) -> Gaussian;
    fn adjoint(&self) -> Self;
}

impl Coefficient for Gaussian {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scale(&self, s: &Gaussian) -> Self {
        self * s
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_identity(&self) -> bool {
        One::is_one(self)
    }
    fn identity_like(&self) -> Self {
        Gaussian::one()
    }
    fn trace(&self) -> Gaussian {
        self.clone()
    }
    fn adjoint(&self) -> Self {
        self.conj()
    }
}

/// Square matrix with exact Gaussian-rational entries, stored as sparse rows.
#[derive(Clone, PartialEq, Debug)]
pub struct CMatrix {
    size: usize,
    rows: Vec<BTreeMap<usize, Gaussian>>,
}

impl CMatrix {
    pub fn zero(size: usize) -> Self {
        Self {
            size,
            rows: vec![BTreeMap::new(); size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.rows[i].insert(i, Gaussian::one());
        }
        m
    }

    /// Matrix unit `E_{ab}`.
    pub fn unit(size: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zero(size);
        m.set(a, b, Gaussian::one());
        m
    }

    pub fn from_dense(rows: Vec<Vec<Gaussian>>) -> Self {
        let size = rows.len();
        let mut m = Self::zero(size);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), size, "matrix must be square");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> Gaussian {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: Gaussian) {
        if Zero::is_zero(&v) {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Gaussian)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.times(rhs).plus(&rhs.times(self).negate())
    }

    /// Operator `M -> X M` on `M_N(C)` in the basis `E_{ab}` ordered as `a*N + b`.
    pub fn left_multiplication(x: &CMatrix) -> CMatrix {
        let n = x.size;
        let mut out = CMatrix::zero(n * n);
        // X E_{ab} = sum_r X_{ra} E_{rb}
        for (r, a, v) in x.nonzeros() {
            for b in 0..n {
                out.set(r * n + b, a * n + b, v.clone());
            }
        }
        out
    }

    /// Operator `M -> M X` on `M_N(C)`.
    pub fn right_multiplication(x: &CMatrix) -> CMatrix {
        let n = x.size;
        let mut out = CMatrix::zero(n * n);
        // E_{ab} X = sum_t X_{bt} E_{at}
        for (b, t, v) in x.nonzeros() {
            for a in 0..n {
                out.set(a * n + t, a * n + b, v.clone());
            }
        }
        out
    }

    fn check_size(&self, rhs: &Self) {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
    }
}

impl Coefficient for CMatrix {
    fn plus(&self, rhs: &Self) -> Self {
        self.check_size(rhs);
        let mut out = self.clone();
        for (i, j, v) in rhs.nonzeros() {
            let s = &out.get(i, j) + v;
            out.set(i, j, s);
        }
        out
    }

    fn times(&self, rhs: &Self) -> Self {
        self.check_size(rhs);
        let mut out = CMatrix::zero(self.size);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, Gaussian> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &rhs.rows[*k] {
                    let p = a * b;
                    acc.entry(*j)
                        .and_modify(|e| *e += &p)
                        .or_insert(p);
                }
            }
            acc.retain(|_, v| !Zero::is_zero(v));
            out.rows[i] = acc;
        }
        out
    }

    fn negate(&self) -> Self {
        let mut out = self.clone();
        for row in &mut out.rows {
            for v in row.values_mut() {
                *v = -&*v;
            }
        }
        out
    }

    fn scale(&self, s: &Gaussian) -> Self {
        if Zero::is_zero(s) {
            return CMatrix::zero(self.size);
        }
        let mut out = self.clone();
        for row in &mut out.rows {
            for v in row.values_mut() {
                *v = &*v * s;
            }
        }
        out
    }

    fn vanishes(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.len() == 1 && row.get(&i).is_some_and(One::is_one))
    }

    fn identity_like(&self) -> Self {
        CMatrix::identity(self.size)
    }

    fn trace(&self) -> Gaussian {
        let mut t = Gaussian::zero();
        for i in 0..self.size {
            if let Some(v) = self.rows[i].get(&i) {
                t += v;
            }
        }
        t
    }

    fn adjoint(&self) -> Self {
        let mut out = CMatrix::zero(self.size);
        for (i, j, v) in self.nonzeros() {
            out.set(j, i, v.conj());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> Gaussian {
        Gaussian::new(crate::scalar::rat_int(re), crate::scalar::rat_int(im))
    }

    #[test]
    fn matrix_units_multiply() {
        let e12 = CMatrix::unit(3, 0, 1);
        let e23 = CMatrix::unit(3, 1, 2);
        assert_eq!(e12.times(&e23), CMatrix::unit(3, 0, 2));
        assert!(e23.times(&e12).vanishes());
    }

    #[test]
    fn left_and_right_multiplication_operators() {
        let x = CMatrix::from_dense(vec![vec![g(1, 0), g(2, 1)], vec![g(0, -1), g(3, 0)]]);
        let m = CMatrix::from_dense(vec![vec![g(0, 1), g(5, 0)], vec![g(-2, 0), g(1, 1)]]);
        let vec_of = |a: &CMatrix| -> Vec<Gaussian> {
            (0..4).map(|k| a.get(k / 2, k % 2)).collect()
        };
        let apply = |op: &CMatrix, v: &[Gaussian]| -> Vec<Gaussian> {
            (0..4)
                .map(|r| {
                    let mut s = Gaussian::zero();
                    for c in 0..4 {
                        s += &(&op.get(r, c) * &v[c]);
                    }
                    s
                })
                .collect()
        };
        let l = CMatrix::left_multiplication(&x);
        let r = CMatrix::right_multiplication(&x);
        assert_eq!(apply(&l, &vec_of(&m)), vec_of(&x.times(&m)));
        assert_eq!(apply(&r, &vec_of(&m)), vec_of(&m.times(&x)));
    }

    #[test]
    fn trace_is_tracial() {
        let a = CMatrix::from_dense(vec![vec![g(1, 2), g(0, 1)], vec![g(3, 0), g(-1, 0)]]);
        let b = CMatrix::from_dense(vec![vec![g(2, 0), g(1, -1)], vec![g(0, 0), g(4, 1)]]);
        assert_eq!(a.times(&b).trace(), b.times(&a).trace());
    }

    #[test]
    fn adjoint_is_involutive() {
        let a = CMatrix::from_dense(vec![vec![g(1, 2), g(0, 1)], vec![g(3, 0), g(-1, 0)]]);
        assert_eq!(a.adjoint().adjoint(), a);
        assert_eq!(a.adjoint().get(0, 1), g(3, 0));
    }
}
