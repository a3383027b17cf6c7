//! Coordinate substitutions between the rings `Z^{Δ^n} = Z[t_1, ..., t_n]`
//! (with `t_0 = 1 - t_1 - ... - t_n`) induced by monotone maps.

use thiserror::Error;

use super::{IntPolynomial, PolySubstitution};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplexMapError {
    #[error("index {index} out of range for {kind:?} at n = {n}")]
    IndexOutOfRange { kind: SimplexMapKind, index: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplexMapKind {
    Face,
    Degeneracy,
}

/// Pullback `Z^{Δ^n} -> Z^{Δ^m}` along `θ: [m] -> [n]`:
/// `t_j -> sum of t_i over θ(i) = j`, with `t_0` expanded.
pub fn monotone_pullback(theta: &[usize], n: usize) -> PolySubstitution {
    let m = theta.len() - 1;
    let t0 = (0..m).fold(IntPolynomial::one(), |acc, k| acc - IntPolynomial::var(k));
    let images = (1..=n)
        .map(|j| {
            theta.iter().enumerate().filter(|(_, v)| **v == j).fold(IntPolynomial::zero(), |acc, (i, _)| {
                if i == 0 {
                    acc + t0.clone()
                } else {
                    acc + IntPolynomial::var(i - 1)
                }
            })
        })
        .collect();
    PolySubstitution::new(images)
}

/// `δ_i^*: Z^{Δ^n} -> Z^{Δ^{n-1}}` or `σ_i^*: Z^{Δ^n} -> Z^{Δ^{n+1}}`.
pub fn simplex_ring_map(kind: SimplexMapKind, i: usize, n: usize) -> Result<PolySubstitution, SimplexMapError> {
    match kind {
        SimplexMapKind::Face => {
            if n == 0 || i > n {
                return Err(SimplexMapError::IndexOutOfRange { kind, index: i, n });
            }
            Ok(monotone_pullback(&crate::simplicial::coface(i, n), n))
        }
        SimplexMapKind::Degeneracy => {
            if i > n {
                return Err(SimplexMapError::IndexOutOfRange { kind, index: i, n });
            }
            Ok(monotone_pullback(&crate::simplicial::codegeneracy(i, n), n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{codegeneracy, coface, compose};
    use SimplexMapKind::*;

    fn t(i: usize) -> IntPolynomial {
        IntPolynomial::var(i)
    }

    #[test]
    fn endpoint_evaluations() {
        let d0 = simplex_ring_map(Face, 0, 1).unwrap();
        let d1 = simplex_ring_map(Face, 1, 1).unwrap();
        assert_eq!(d0.apply(&t(0)), IntPolynomial::one());
        assert_eq!(d1.apply(&t(0)), IntPolynomial::zero());
        let s0 = simplex_ring_map(Degeneracy, 0, 0).unwrap();
        let p = IntPolynomial::constant(5);
        assert_eq!(d0.apply(&s0.apply(&p)), p);
        assert!(simplex_ring_map(Face, 3, 2).is_err());
    }

    #[test]
    fn face_and_degeneracy_formulas() {
        // δ_1^* on Z^{Δ^2}: t_1 -> 0, t_2 -> t_1
        let d1 = simplex_ring_map(Face, 1, 2).unwrap();
        assert_eq!(d1.images, vec![IntPolynomial::zero(), t(0)]);
        // σ_1^* on Z^{Δ^2}: t_1 -> t_1 + t_2, t_2 -> t_3
        let s1 = simplex_ring_map(Degeneracy, 1, 2).unwrap();
        assert_eq!(s1.images, vec![t(0) + t(1), t(2)]);
    }

    #[test]
    fn cosimplicial_identities_dualise() {
        // pullback is contravariant: (a ∘ b)^* = b^* ∘ a^*
        for n in 1..=3 {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let theta = compose(&codegeneracy(j, n), &coface(i, n + 1));
                    let direct = monotone_pullback(&theta, n);
                    let via = monotone_pullback(&coface(i, n + 1), n + 1).compose(&monotone_pullback(&codegeneracy(j, n), n));
                    assert_eq!(direct, via);
                }
            }
        }
    }
}
