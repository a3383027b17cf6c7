use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{join_terms, mono_mul, mono_string, Mono, ToeplitzElement};
use crate::rings::Ring;

type Key = (Mono, Mono, u32);

/// Elements of `(τ ⊗ τ)[t]`: sums of `c (β^p α^q ⊗ β^r α^s) t^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorToeplitz {
    terms: BTreeMap<Key, BigInt>,
}

impl TensorToeplitz {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::tensor(&ToeplitzElement::one(), &ToeplitzElement::one())
    }

    pub fn add_term(&mut self, key: Key, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn tensor(x: &ToeplitzElement, y: &ToeplitzElement) -> Self {
        let mut out = Self::zero();
        for (m, a) in x.terms() {
            for (n, b) in y.terms() {
                out.add_term((*m, *n, 0), a * b);
            }
        }
        out
    }

    /// `x ⊗ 1`
    pub fn left(x: &ToeplitzElement) -> Self {
        Self::tensor(x, &ToeplitzElement::one())
    }

    /// `1 ⊗ y`
    pub fn right(y: &ToeplitzElement) -> Self {
        Self::tensor(&ToeplitzElement::one(), y)
    }

    /// `1 ⊗ Σ_k y_k t^k`
    pub fn right_poly(coeffs: &[(u32, ToeplitzElement)]) -> Self {
        let mut out = Self::zero();
        for (k, y) in coeffs {
            out = out + Self::right(y).times_t(*k);
        }
        out
    }

    pub fn times_t(&self, k: u32) -> Self {
        TensorToeplitz { terms: self.terms.iter().map(|((m, n, e), c)| ((*m, *n, e + k), c.clone())).collect() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &BigInt)> {
        self.terms.iter()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.2).max()
    }

    pub fn ev0(&self) -> Self {
        TensorToeplitz { terms: self.terms.iter().filter(|(k, _)| k.2 == 0).map(|(k, c)| (*k, c.clone())).collect() }
    }

    pub fn ev1(&self) -> Self {
        let mut out = Self::zero();
        for ((m, n, _), c) in &self.terms {
            out.add_term((*m, *n, 0), c.clone());
        }
        out
    }

    /// `(π ⊗ 1)`: keys `(Laurent exponent, right monomial, t-exponent)`.
    pub fn pi_left(&self) -> BTreeMap<(i64, Mono, u32), BigInt> {
        let mut out: BTreeMap<(i64, Mono, u32), BigInt> = BTreeMap::new();
        for (((p, q), n, e), c) in &self.terms {
            *out.entry((i64::from(*q) - i64::from(*p), *n, *e)).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `(π ⊗ π)`: keys `(left exponent, right exponent, t-exponent)`.
    pub fn pi_both(&self) -> BTreeMap<(i64, i64, u32), BigInt> {
        let mut out: BTreeMap<(i64, i64, u32), BigInt> = BTreeMap::new();
        for (((p, q), (r, s), e), c) in &self.terms {
            *out.entry((i64::from(*q) - i64::from(*p), i64::from(*s) - i64::from(*r), *e)).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

impl Ring for TensorToeplitz {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        TensorToeplitz { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((m1, n1, e1), a) in &self.terms {
            for ((m2, n2, e2), b) in &rhs.terms {
                out.add_term((mono_mul(*m1, *m2), mono_mul(*n1, *n2), e1 + e2), a * b);
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero();
        for (key, c) in &self.terms {
            out.add_term(*key, c * k);
        }
        out
    }
}

crate::forward_ring_ops!(TensorToeplitz);

impl fmt::Display for TensorToeplitz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = |((p, q), (r, s), e): &Key| {
            let mut b = format!("{}(x){}", mono_string(*p, *q), mono_string(*r, *s));
            match e {
                0 => {}
                1 => b.push_str("*t"),
                _ => b.push_str(&format!("*t^{}", e)),
            }
            b
        };
        write!(f, "{}", join_terms(self.terms.iter().map(|(k, c)| (body(k), c))))
    }
}

impl fmt::Debug for TensorToeplitz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_tensor() -> impl Strategy<Value = TensorToeplitz> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..3, 0u32..3, 0u32..3, -2i64..3), 0..4).prop_map(|ts| {
            let mut x = TensorToeplitz::zero();
            for (p, q, r, s, e, c) in ts {
                x.add_term(((p, q), (r, s), e), BigInt::from(c));
            }
            x
        })
    }

    #[test]
    fn factors_commute() {
        let a = TensorToeplitz::left(&ToeplitzElement::alpha());
        let b = TensorToeplitz::right(&ToeplitzElement::beta());
        assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        assert_eq!(a.mul_ref(&b), TensorToeplitz::tensor(&ToeplitzElement::alpha(), &ToeplitzElement::beta()));
    }

    proptest! {
        #[test]
        fn evaluations_are_homomorphisms(x in arb_tensor(), y in arb_tensor()) {
            prop_assert_eq!(x.mul_ref(&y).ev0(), x.ev0().mul_ref(&y.ev0()));
            prop_assert_eq!(x.mul_ref(&y).ev1(), x.ev1().mul_ref(&y.ev1()));
            prop_assert_eq!(x.add_ref(&y).ev1(), x.ev1().add_ref(&y.ev1()));
        }

        #[test]
        fn ring_axioms(x in arb_tensor(), y in arb_tensor(), z in arb_tensor()) {
            prop_assert_eq!(x.mul_ref(&y).mul_ref(&z), x.mul_ref(&y.mul_ref(&z)));
            prop_assert_eq!(x.mul_ref(&y.add_ref(&z)), x.mul_ref(&y).add_ref(&x.mul_ref(&z)));
            prop_assert_eq!(x.mul_ref(&TensorToeplitz::one()), x);
        }
    }
}
