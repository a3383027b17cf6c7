//! Morita maps `a -> (p_i a q_j)`.

use thiserror::Error;

use super::{Ring, RingMatrix};

#[derive(Debug, Error, PartialEq)]
pub enum MoritaError {
    #[error("p and q have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("a (sum q_i p_i) a' != a a' at {0}")]
    Precondition(String),
    #[error("not multiplicative at {0}")]
    NotMultiplicative(String),
}

#[derive(Clone, Debug)]
pub struct MoritaMap<R: Ring> {
    p: Vec<R>,
    q: Vec<R>,
}

impl<R: Ring> MoritaMap<R> {
    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn apply(&self, a: &R) -> RingMatrix<R> {
        RingMatrix::from_rows(
            self.p.iter().map(|pi| self.q.iter().map(|qj| pi.mul_ref(a).mul_ref(qj)).collect()).collect(),
        )
    }

    /// `W (e_11 a) V` with `V = sum e_{1,i} q_i` and `W = sum e_{i,1} p_i`.
    pub fn via_corner(&self, a: &R) -> RingMatrix<R> {
        let n = self.n();
        let zero = a.zero_like();
        let mut v = RingMatrix::zero(n, &zero);
        let mut w = RingMatrix::zero(n, &zero);
        for i in 0..n {
            v.set(0, i, self.q[i].clone());
            w.set(i, 0, self.p[i].clone());
        }
        let corner = RingMatrix::unit(n, 0, 0, a.clone());
        w.mul_ref(&corner).mul_ref(&v)
    }
}

/// Builds the map after checking its precondition and multiplicativity on
/// all ordered pairs of `samples`.
pub fn morita_map<R: Ring>(p: Vec<R>, q: Vec<R>, samples: &[R]) -> Result<MoritaMap<R>, MoritaError> {
    if p.len() != q.len() {
        return Err(MoritaError::LengthMismatch(p.len(), q.len()));
    }
    let m = MoritaMap { p, q };
    let Some(first) = samples.first() else { return Ok(m) };
    let mut qp = first.zero_like();
    for (qi, pi) in m.q.iter().zip(&m.p) {
        qp = qp.add_ref(&qi.mul_ref(pi));
    }
    for a in samples {
        for b in samples {
            let ab = a.mul_ref(b);
            if a.mul_ref(&qp).mul_ref(b) != ab {
                return Err(MoritaError::Precondition(format!("({:?}, {:?})", a, b)));
            }
            if m.apply(a).mul_ref(&m.apply(b)) != m.apply(&ab) {
                return Err(MoritaError::NotMultiplicative(format!("({:?}, {:?})", a, b)));
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::LaurentPolynomial;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn mat(rows: &[[i64; 2]; 2]) -> RingMatrix<BigInt> {
        RingMatrix::from_ints(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn samples() -> Vec<RingMatrix<BigInt>> {
        vec![mat(&[[1, 2], [0, 1]]), mat(&[[0, 1], [1, 0]]), mat(&[[3, 0], [-1, 2]])]
    }

    #[test]
    fn rank_one_is_the_identity_embedding() {
        let one = mat(&[[1, 0], [0, 1]]);
        let m = morita_map(vec![one.clone()], vec![one], &samples()).unwrap();
        let a = &samples()[0];
        assert_eq!(m.apply(a), RingMatrix::from_rows(vec![vec![a.clone()]]));
    }

    #[test]
    fn corner_embeddings_are_multiplicative_and_match_the_corner_formula() {
        let one = mat(&[[1, 0], [0, 1]]);
        let zero = one.zero_like();
        for (p, q) in [
            (vec![one.clone(), zero.clone()], vec![one.clone(), zero.clone()]),
            (vec![zero.clone(), one.clone()], vec![zero.clone(), one.clone()]),
        ] {
            let m = morita_map(p, q, &samples()).unwrap();
            for a in samples() {
                assert_eq!(m.apply(&a), m.via_corner(&a));
            }
        }
        let m = morita_map(vec![zero.clone(), one.clone()], vec![zero.clone(), one.clone()], &samples()).unwrap();
        let a = samples()[2].clone();
        assert_eq!(m.apply(&a), RingMatrix::unit(2, 1, 1, a));
    }

    #[test]
    fn conjugation_by_a_unit_passes_and_a_bad_pair_is_caught() {
        let t = LaurentPolynomial::t();
        let s = vec![LaurentPolynomial::monomial(2, 1) - LaurentPolynomial::one(), LaurentPolynomial::t_inv()];
        let m = morita_map(vec![t.clone(), LaurentPolynomial::zero()], vec![LaurentPolynomial::t_inv(), LaurentPolynomial::zero()], &s).unwrap();
        assert_eq!(m.apply(&s[0]).get(0, 0), &s[0]);
        let bad = morita_map(vec![t.clone()], vec![t], &s);
        assert!(matches!(bad, Err(MoritaError::Precondition(_))));
        assert!(BigInt::zero().is_zero());
    }
}
