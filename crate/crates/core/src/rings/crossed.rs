//! Twisted Laurent rings `A[t, t^-1; sigma]` over `A = Z[x_1, ..., x_k]`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use super::{IntPolynomial, Ring};

/// Ring endomorphism of `Z[x_1..x_k]` given by the images of the variables.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySubstitution {
    pub images: Vec<IntPolynomial>,
}

impl PolySubstitution {
    pub fn new(images: Vec<IntPolynomial>) -> Self {
        PolySubstitution { images }
    }

    pub fn identity(k: usize) -> Self {
        PolySubstitution { images: (0..k).map(IntPolynomial::var).collect() }
    }

    pub fn apply(&self, p: &IntPolynomial) -> IntPolynomial {
        p.substitute(&self.images)
    }

    pub fn compose(&self, inner: &PolySubstitution) -> PolySubstitution {
        PolySubstitution { images: inner.images.iter().map(|p| self.apply(p)).collect() }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum CrossedError {
    #[error("sigma and its inverse disagree on generator x{0}")]
    NotInverse(usize),
}

#[derive(Debug)]
pub struct CrossedProduct {
    sigma: PolySubstitution,
    sigma_inv: PolySubstitution,
}

impl CrossedProduct {
    pub fn new(sigma: PolySubstitution, sigma_inv: PolySubstitution) -> Result<Arc<Self>, CrossedError> {
        let k = sigma.images.len().max(sigma_inv.images.len());
        for i in 0..k {
            let x = IntPolynomial::var(i);
            if sigma.apply(&sigma_inv.apply(&x)) != x || sigma_inv.apply(&sigma.apply(&x)) != x {
                return Err(CrossedError::NotInverse(i));
            }
        }
        Ok(Arc::new(CrossedProduct { sigma, sigma_inv }))
    }

    /// `sigma^m(a)` for any integer `m`.
    pub fn sigma_pow(&self, m: i64, a: &IntPolynomial) -> IntPolynomial {
        let s = if m >= 0 { &self.sigma } else { &self.sigma_inv };
        let mut x = a.clone();
        for _ in 0..m.unsigned_abs() {
            x = s.apply(&x);
        }
        x
    }

    /// `a * t^k`
    pub fn elem(self: &Arc<Self>, a: IntPolynomial, k: i64) -> CrossedProductElement {
        let mut e = CrossedProductElement { ring: Arc::clone(self), terms: BTreeMap::new() };
        e.add_term(k, a);
        e
    }

    pub fn t(self: &Arc<Self>) -> CrossedProductElement {
        self.elem(IntPolynomial::one(), 1)
    }

    pub fn t_inv(self: &Arc<Self>) -> CrossedProductElement {
        self.elem(IntPolynomial::one(), -1)
    }

    pub fn constant(self: &Arc<Self>, a: IntPolynomial) -> CrossedProductElement {
        self.elem(a, 0)
    }
}

#[derive(Clone)]
pub struct CrossedProductElement {
    ring: Arc<CrossedProduct>,
    terms: BTreeMap<i64, IntPolynomial>,
}

impl CrossedProductElement {
    fn add_term(&mut self, k: i64, a: IntPolynomial) {
        if a.is_zero() {
            return;
        }
        let next = match self.terms.get(&k) {
            Some(b) => b.add_ref(&a),
            None => a,
        };
        if next.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, next);
        }
    }

    pub fn coeff(&self, k: i64) -> IntPolynomial {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &IntPolynomial)> {
        self.terms.iter()
    }

    fn empty(&self) -> Self {
        CrossedProductElement { ring: Arc::clone(&self.ring), terms: BTreeMap::new() }
    }
}

impl PartialEq for CrossedProductElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Ring for CrossedProductElement {
    fn zero_like(&self) -> Self {
        self.empty()
    }
    fn one_like(&self) -> Self {
        self.ring.constant(IntPolynomial::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, a) in &rhs.terms {
            out.add_term(*k, a.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        let mut out = self.empty();
        for (k, a) in &self.terms {
            out.add_term(*k, a.neg_ref());
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.empty();
        for (m, a) in &self.terms {
            for (k, b) in &rhs.terms {
                out.add_term(m + k, a.mul_ref(&self.ring.sigma_pow(*m, b)));
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        let mut out = self.empty();
        for (e, a) in &self.terms {
            out.add_term(*e, a.scale(k));
        }
        out
    }
}

impl fmt::Debug for CrossedProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(k, a)| format!("({})*t^{}", a, k)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> IntPolynomial {
        IntPolynomial::var(0)
    }

    fn flip() -> Arc<CrossedProduct> {
        let s = PolySubstitution::new(vec![-x()]);
        CrossedProduct::new(s.clone(), s).unwrap()
    }

    #[test]
    fn twist_rule_and_conjugation() {
        let r = flip();
        let xt = r.elem(x(), 1);
        assert_eq!(xt.mul_ref(&xt), r.elem(-(x() * x()), 2));
        let conj = r.t().mul_ref(&r.constant(x())).mul_ref(&r.t_inv());
        assert_eq!(conj, r.constant(-x()));
    }

    #[test]
    fn identity_twist_is_the_laurent_ring() {
        let r = CrossedProduct::new(PolySubstitution::identity(1), PolySubstitution::identity(1)).unwrap();
        let a = r.elem(x(), 2).add_ref(&r.elem(IntPolynomial::one(), -1));
        let b = r.elem(x() * x(), -3);
        assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
    }

    #[test]
    fn non_inverse_is_rejected() {
        let s = PolySubstitution::new(vec![x() + IntPolynomial::one()]);
        let err = CrossedProduct::new(s.clone(), s).unwrap_err();
        assert_eq!(err, CrossedError::NotInverse(0));
    }

    fn arb(r: Arc<CrossedProduct>) -> impl Strategy<Value = CrossedProductElement> {
        prop::collection::vec((-2i64..3, prop::collection::vec(-3i64..4, 0..3)), 0..4).prop_map(move |ts| {
            let mut e = r.constant(IntPolynomial::zero());
            for (k, cs) in ts {
                e = e.add_ref(&r.elem(IntPolynomial::from_coeffs(&cs), k));
            }
            e
        })
    }

    proptest! {
        #[test]
        fn associativity_and_distributivity(
            a in arb(shift()), b in arb(shift()), c in arb(shift())
        ) {
            prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&a.one_like()), a.clone());
        }
    }

    fn shift() -> Arc<CrossedProduct> {
        // x -> x + 1 has inverse x -> x - 1
        CrossedProduct::new(
            PolySubstitution::new(vec![x() + IntPolynomial::one()]),
            PolySubstitution::new(vec![x() - IntPolynomial::one()]),
        )
        .unwrap()
    }
}
