//! Square matrices over an exact ring, determinants and adjugate inverses.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{IntPolynomial, Ring, UPoly};

#[derive(Debug, Error, PartialEq)]
pub enum MatrixError {
    #[error("det = {0} not a unit")]
    NonUnitDeterminant(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

/// An `n x n` matrix with entries in `R`, row-major. `n >= 1`.
#[derive(Clone, PartialEq)]
pub struct RingMatrix<R: Ring> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(n >= 1, "empty matrix");
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RingMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn zero(n: usize, base: &R) -> Self {
        RingMatrix { n, entries: vec![base.zero_like(); n * n] }
    }

    pub fn identity(n: usize, base: &R) -> Self {
        Self::diagonal((0..n).map(|_| base.one_like()).collect())
    }

    pub fn diagonal(d: Vec<R>) -> Self {
        let n = d.len();
        let mut m = Self::zero(n, &d[0]);
        for (i, x) in d.into_iter().enumerate() {
            m.entries[i * n + i] = x;
        }
        m
    }

    /// The matrix unit `e_{ij}` with entry `x`.
    pub fn unit(n: usize, i: usize, j: usize, x: R) -> Self {
        let mut m = Self::zero(n, &x);
        m.entries[i * n + j] = x;
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        self.entries[i * self.n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                m.entries[j * self.n + i] = self.get(i, j).clone();
            }
        }
        m
    }

    fn base(&self) -> R {
        self.entries[0].zero_like()
    }

    /// Leibniz expansion over the row order. Only meaningful over a
    /// commutative entry ring.
    pub fn det(&self) -> R {
        self.minor_det(&(0..self.n).collect::<Vec<_>>(), &(0..self.n).collect::<Vec<_>>())
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> R {
        if rows.is_empty() {
            return self.base().one_like();
        }
        let r = rows[0];
        let mut acc = self.base();
        for (k, c) in cols.iter().enumerate() {
            let x = self.get(r, *c);
            if x.is_zero_elem() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().filter(|cc| *cc != c).copied().collect();
            let term = x.mul_ref(&self.minor_det(&rows[1..], &sub_cols));
            acc = if k % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
        }
        acc
    }

    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Self::identity(1, &self.base());
        }
        let mut adj = Self::zero(n, &self.base());
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|r| *r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|c| *c != i).collect();
                let m = self.minor_det(&rows, &cols);
                adj.entries[i * n + j] = if (i + j) % 2 == 0 { m } else { m.neg_ref() };
            }
        }
        adj
    }

    /// Exact inverse over a commutative ring when `det = +-1`.
    pub fn inverse_adjugate(&self) -> Result<Self, MatrixError> {
        let det = self.det();
        let one = det.one_like();
        let adj = self.adjugate();
        let inv = if det == one {
            adj
        } else if det == one.neg_ref() {
            adj.scale(&BigInt::from(-1))
        } else {
            return Err(MatrixError::NonUnitDeterminant(format!("{:?}", det)));
        };
        debug_assert!(self.mul_ref(&inv) == Self::identity(self.n, &self.base()));
        Ok(inv)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.n != rhs.n {
            return Err(MatrixError::SizeMismatch(self.n, rhs.n));
        }
        Ok(self.mul_ref(rhs))
    }
}

impl<R: Ring> Ring for RingMatrix<R> {
    fn zero_like(&self) -> Self {
        Self::zero(self.n, &self.base())
    }
    fn one_like(&self) -> Self {
        Self::identity(self.n, &self.base())
    }
    fn is_zero_elem(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero_elem())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        RingMatrix { n: self.n, entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add_ref(b)).collect() }
    }
    fn neg_ref(&self) -> Self {
        self.map(|x| x.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = Self::zero(n, &self.base());
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero_elem() {
                        out.entries[i * n + j] = out.entries[i * n + j].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        self.map(|x| x.scale(k))
    }
}

impl<R: Ring> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// `W` together with the identities it is supposed to satisfy.
#[derive(Debug, Clone)]
pub struct RotationRecord {
    pub w: RingMatrix<IntPolynomial>,
    pub w_inv: Option<RingMatrix<IntPolynomial>>,
    pub ev0: RingMatrix<BigInt>,
    pub ev1: RingMatrix<BigInt>,
    pub det: IntPolynomial,
    pub ev0_is_identity: bool,
    pub ev1_is_rotation: bool,
    pub det_is_one: bool,
    pub inverse_verified: bool,
}

impl RotationRecord {
    pub fn all_pass(&self) -> bool {
        self.ev0_is_identity && self.ev1_is_rotation && self.det_is_one && self.inverse_verified
    }
}

fn p(cs: &[i64]) -> IntPolynomial {
    IntPolynomial::from_coeffs(cs)
}

fn int_matrix(rows: &[[i64; 2]; 2]) -> RingMatrix<BigInt> {
    RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|x| BigInt::from(*x)).collect()).collect())
}

/// `W = ((1 - t^2, t^3 - 2t), (t, 1 - t^2))` over `Z[t]`.
pub fn w_matrix() -> RingMatrix<IntPolynomial> {
    RingMatrix::from_rows(vec![vec![p(&[1, 0, -1]), p(&[0, -2, 0, 1])], vec![p(&[0, 1]), p(&[1, 0, -1])]])
}

/// Builds `W` and checks its endpoint values, determinant and inverse.
pub fn rotation_homotopy_w() -> RotationRecord {
    let w = w_matrix();
    let at = |k: i64| w.map(|e| e.eval(&[BigInt::from(k)]));
    let ev0 = at(0);
    let ev1 = at(1);
    let det = w.det();
    let w_inv = w.inverse_adjugate().ok();
    let inverse_verified = w_inv.as_ref().map_or(false, |inv| {
        let id = RingMatrix::identity(2, &IntPolynomial::zero());
        w.mul_ref(inv) == id && inv.mul_ref(&w) == id
    });
    RotationRecord {
        ev0_is_identity: ev0 == int_matrix(&[[1, 0], [0, 1]]),
        ev1_is_rotation: ev1 == int_matrix(&[[0, -1], [1, 0]]),
        det_is_one: det == IntPolynomial::one(),
        inverse_verified,
        w,
        w_inv,
        ev0,
        ev1,
        det,
    }
}

/// Matrix over `R` viewed as a polynomial matrix evaluated entrywise.
pub fn eval_upoly_matrix<R: Ring>(m: &RingMatrix<UPoly<R>>, at_one: bool) -> RingMatrix<R> {
    m.map(|e| if at_one { e.ev1() } else { e.ev0() })
}

impl RingMatrix<BigInt> {
    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|x| BigInt::from(*x)).collect()).collect())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn w_record_passes_and_inverse_matches_closed_form() {
        let rec = rotation_homotopy_w();
        assert!(rec.all_pass(), "{:?}", rec);
        let expected = RingMatrix::from_rows(vec![
            vec![p(&[1, 0, -1]), p(&[0, 2, 0, -1])],
            vec![p(&[0, -1]), p(&[1, 0, -1])],
        ]);
        assert_eq!(rec.w_inv.unwrap(), expected);
    }

    #[test]
    fn identity_inverts_to_itself_and_non_units_are_rejected() {
        let id = RingMatrix::<BigInt>::from_ints(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(id.inverse_adjugate().unwrap(), id);
        let d = RingMatrix::<BigInt>::from_ints(&[vec![2, 0], vec![0, 1]]);
        let err = d.inverse_adjugate().unwrap_err();
        assert_eq!(err.to_string(), "det = 2 not a unit");
    }

    fn arb3() -> impl Strategy<Value = RingMatrix<BigInt>> {
        prop::collection::vec(-4i64..5, 9).prop_map(|v| RingMatrix::from_ints(&[v[0..3].to_vec(), v[3..6].to_vec(), v[6..9].to_vec()]))
    }

    proptest! {
        #[test]
        fn matrix_ring_axioms_and_det_multiplicative(a in arb3(), b in arb3(), c in arb3()) {
            prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&b).det(), a.det() * b.det());
            // A adj(A) = det(A) I
            let id = RingMatrix::identity(3, &BigInt::zero());
            prop_assert_eq!(a.mul_ref(&a.adjugate()), id.scale(&a.det()));
        }

        #[test]
        fn unimodular_products_invert(u in -3i64..4, v in -3i64..4, w in -3i64..4) {
            let l = RingMatrix::<BigInt>::from_ints(&[vec![1, 0, 0], vec![u, 1, 0], vec![v, w, 1]]);
            let m = l.mul_ref(&l.transpose());
            let inv = m.inverse_adjugate().unwrap();
            prop_assert!(m.mul_ref(&inv).is_identity());
        }
    }
}
