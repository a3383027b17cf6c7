//! Exact ring arithmetic: the [`Ring`] trait and its concrete carriers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub mod crossed;
pub mod laurent;
pub mod matrix;
pub mod morita;
pub mod nc;
pub mod poly;
pub mod simplex_maps;
pub mod upoly;

pub use crossed::{CrossedError, CrossedProduct, CrossedProductElement, PolySubstitution};
pub use laurent::LaurentPolynomial;
pub use matrix::{rotation_homotopy_w, w_matrix, MatrixError, RingMatrix, RotationRecord};
pub use morita::{morita_map, MoritaError, MoritaMap};
pub use nc::{check_hom, AlgebraHom, AlgebraPresentation, FailedRelation, HomError, HomVerdict, NcPoly, NcQuotient, QuotElem, Word};
pub use poly::IntPolynomial;
pub use simplex_maps::{monotone_pullback, simplex_ring_map, SimplexMapError, SimplexMapKind};
pub use upoly::UPoly;

/// An exactly computable ring.
///
/// Some carriers (matrices, polynomials over a runtime ring) need a context to
/// build constants, hence `zero_like` / `one_like` instead of associated
/// constructors.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn scale(&self, k: &BigInt) -> Self;

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc.mul_ref(self);
        }
        acc
    }

    fn from_int_like(&self, k: i64) -> Self {
        self.one_like().scale(&BigInt::from(k))
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, k: &BigInt) -> Self {
        self * k
    }
}

/// Sum of a slice, `None` if empty.
pub fn sum_all<R: Ring>(xs: &[R]) -> Option<R> {
    let mut it = xs.iter();
    let first = it.next()?.clone();
    Some(it.fold(first, |acc, x| acc.add_ref(x)))
}

/// Implements `Add`, `Sub`, `Mul`, `Neg` on owned values and references by
/// forwarding to the [`Ring`] methods.
#[macro_export]
macro_rules! forward_ring_ops {
    ($t:ty) => {
        impl ::std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::rings::Ring::add_ref(&self, &rhs)
            }
        }
        impl<'a> ::std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                $crate::rings::Ring::add_ref(self, rhs)
            }
        }
        impl ::std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::rings::Ring::sub_ref(&self, &rhs)
            }
        }
        impl<'a> ::std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                $crate::rings::Ring::sub_ref(self, rhs)
            }
        }
        impl ::std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::rings::Ring::mul_ref(&self, &rhs)
            }
        }
        impl<'a> ::std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                $crate::rings::Ring::mul_ref(self, rhs)
            }
        }
        impl ::std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::rings::Ring::neg_ref(&self)
            }
        }
        impl<'a> ::std::ops::Neg for &'a $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::rings::Ring::neg_ref(self)
            }
        }
    };
}
