//! Fiber products `B ⊕_D C` and mapping path algebras `P_f = PB ⊕_B A`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::rings::{Ring, UPoly};

/// A pair with componentwise operations.
#[derive(Clone, PartialEq)]
pub struct Pair<X: Ring, Y: Ring> {
    pub first: X,
    pub second: Y,
}

impl<X: Ring, Y: Ring> Pair<X, Y> {
    pub fn new(first: X, second: Y) -> Self {
        Pair { first, second }
    }
}

impl<X: Ring, Y: Ring> fmt::Debug for Pair<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.first, self.second)
    }
}

impl<X: Ring, Y: Ring> Ring for Pair<X, Y> {
    fn zero_like(&self) -> Self {
        Pair::new(self.first.zero_like(), self.second.zero_like())
    }
    fn one_like(&self) -> Self {
        Pair::new(self.first.one_like(), self.second.one_like())
    }
    fn is_zero_elem(&self) -> bool {
        self.first.is_zero_elem() && self.second.is_zero_elem()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Pair::new(self.first.add_ref(&rhs.first), self.second.add_ref(&rhs.second))
    }
    fn neg_ref(&self) -> Self {
        Pair::new(self.first.neg_ref(), self.second.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        Pair::new(self.first.mul_ref(&rhs.first), self.second.mul_ref(&rhs.second))
    }
    fn scale(&self, k: &BigInt) -> Self {
        Pair::new(self.first.scale(k), self.second.scale(k))
    }
}

type MapInto<X, D> = Arc<dyn Fn(&X) -> D + Send + Sync>;

/// `{(b, c) : f(b) = g(c)}` as a subring of `B x C`.
#[derive(Clone)]
pub struct FiberProduct<B: Ring, C: Ring, D: Ring> {
    f: MapInto<B, D>,
    g: MapInto<C, D>,
}

pub fn fiber_product<B: Ring, C: Ring, D: Ring>(
    f: impl Fn(&B) -> D + Send + Sync + 'static,
    g: impl Fn(&C) -> D + Send + Sync + 'static,
) -> FiberProduct<B, C, D> {
    FiberProduct { f: Arc::new(f), g: Arc::new(g) }
}

impl<B: Ring, C: Ring, D: Ring> FiberProduct<B, C, D> {
    pub fn contains(&self, x: &Pair<B, C>) -> bool {
        (self.f)(&x.first) == (self.g)(&x.second)
    }

    pub fn element(&self, b: B, c: C) -> Option<Pair<B, C>> {
        let x = Pair::new(b, c);
        self.contains(&x).then_some(x)
    }

    pub fn first_projection(&self, x: &Pair<B, C>) -> B {
        x.first.clone()
    }

    pub fn second_projection(&self, x: &Pair<B, C>) -> C {
        x.second.clone()
    }
}

/// `P_f = {(p, a) : p ∈ tB[t], deg p <= d, p(1) = f(a)}` for `f: A -> B`.
#[derive(Clone)]
pub struct PathAlgebra<A: Ring, B: Ring> {
    f: MapInto<A, B>,
    pub degree: u32,
}

pub fn path_algebra<A: Ring, B: Ring>(f: impl Fn(&A) -> B + Send + Sync + 'static, degree: u32) -> PathAlgebra<A, B> {
    PathAlgebra { f: Arc::new(f), degree }
}

impl<A: Ring, B: Ring> PathAlgebra<A, B> {
    pub fn contains(&self, x: &Pair<UPoly<B>, A>) -> bool {
        x.first.ev0().is_zero_elem() && x.first.degree().map_or(true, |d| d <= self.degree) && x.first.ev1() == (self.f)(&x.second)
    }

    pub fn element(&self, p: UPoly<B>, a: A) -> Option<Pair<UPoly<B>, A>> {
        let x = Pair::new(p, a);
        self.contains(&x).then_some(x)
    }

    /// `π_f: P_f -> A`
    pub fn pi(&self, x: &Pair<UPoly<B>, A>) -> A {
        x.second.clone()
    }

    /// `ι_f: ΩB -> P_f`; `None` unless `ω(0) = ω(1) = 0`.
    pub fn iota(&self, omega: &UPoly<B>, a_zero: &A) -> Option<Pair<UPoly<B>, A>> {
        if !omega.ev1().is_zero_elem() {
            return None;
        }
        self.element(omega.clone(), a_zero.zero_like())
    }

    /// The path `t f(a)` over `a`.
    pub fn straight_lift(&self, a: &A) -> Pair<UPoly<B>, A> {
        Pair::new(UPoly::monomial(1, (self.f)(a)), a.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn z(k: i64) -> BigInt {
        BigInt::from(k)
    }

    fn zpoly(cs: &[i64]) -> UPoly<BigInt> {
        UPoly::from_coeffs(cs.iter().map(|c| z(*c)).collect())
    }

    #[test]
    fn path_algebra_of_the_identity() {
        let p = path_algebra(|a: &BigInt| a.clone(), 3);
        let x = p.element(zpoly(&[0, 2, 1]), z(3)).unwrap();
        assert_eq!(p.pi(&x), z(3));
        assert!(p.element(zpoly(&[0, 2, 1]), z(2)).is_none());
        assert!(p.element(zpoly(&[1, 2]), z(3)).is_none());
        assert!(p.element(zpoly(&[0, 0, 0, 0, 1]), z(1)).is_none());
        let w = p.iota(&zpoly(&[0, -1, 1]), &z(0)).unwrap();
        assert_eq!(p.pi(&w), z(0));
        assert!(p.iota(&zpoly(&[0, 1]), &z(0)).is_none());
    }

    #[test]
    fn loops_lie_in_every_path_algebra() {
        let omega = zpoly(&[0, -1, 1]);
        let zero = path_algebra(|_: &BigInt| BigInt::zero(), 2);
        assert!(zero.iota(&omega, &z(0)).is_some());
        let into_poly = path_algebra(|a: &BigInt| UPoly::constant(a.clone()), 2);
        let lifted = UPoly::from_coeffs(vec![UPoly::zero(&z(0)), UPoly::constant(z(-1)), UPoly::constant(z(1))]);
        assert!(into_poly.iota(&lifted, &z(0)).is_some());
    }

    #[test]
    fn fiber_product_over_zero_is_the_product() {
        let fp = fiber_product(|_: &BigInt| BigInt::zero(), |_: &UPoly<BigInt>| BigInt::zero());
        for b in -3..3 {
            assert!(fp.element(z(b), zpoly(&[b, 1])).is_some());
        }
        let diag = fiber_product(|b: &BigInt| b.clone(), |c: &BigInt| c.clone());
        assert!(diag.element(z(2), z(2)).is_some());
        assert!(diag.element(z(2), z(3)).is_none());
    }

    proptest! {
        #[test]
        fn path_algebra_is_closed(a in -5i64..5, b in -5i64..5, p in proptest::collection::vec(-3i64..3, 1..3), q in proptest::collection::vec(-3i64..3, 1..3)) {
            let pa = path_algebra(|a: &BigInt| a.clone(), 6);
            // p(0) = 0, p(1) = a
            let mk = |cs: &[i64], a: i64| {
                let mut full = vec![0i64];
                full.extend_from_slice(cs);
                let s: i64 = cs.iter().sum();
                full.push(a - s);
                Pair::new(zpoly(&full), z(a))
            };
            let x = mk(&p, a);
            let y = mk(&q, b);
            prop_assert!(pa.contains(&x) && pa.contains(&y));
            prop_assert!(pa.contains(&x.mul_ref(&y)));
            prop_assert!(pa.contains(&x.sub_ref(&y)));
            prop_assert_eq!(pa.pi(&x.mul_ref(&y)), pa.pi(&x) * pa.pi(&y));
        }
    }
}
