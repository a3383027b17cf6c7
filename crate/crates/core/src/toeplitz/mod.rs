//! The Toeplitz ring `τ = ℤ<α, β | αβ = 1>` in the normal form `Σ c β^p α^q`,
//! its Laurent quotient, the embedding into progression matrices and the
//! tensor ring `(τ ⊗ τ)[t]`.

mod fundamental;
mod tensor;

pub use fundamental::{fundamental_suite, tau0_sample, FundamentalMaps, TauHom};
pub use tensor::TensorToeplitz;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gamma::ProgressionMatrix;
use crate::rings::{LaurentPolynomial, Ring};

pub type Mono = (u32, u32);

/// `(β^p α^q)(β^r α^s)`
pub fn mono_mul((p, q): Mono, (r, s): Mono) -> Mono {
    (p + r.saturating_sub(q), s + q.saturating_sub(r))
}

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ToeplitzElement {
    terms: BTreeMap<Mono, BigInt>,
}

impl ToeplitzElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `c β^p α^q`
    pub fn monomial(p: u32, q: u32, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero();
        x.add_term((p, q), c.into());
        x
    }

    pub fn alpha() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn beta() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `e = 1 - βα`
    pub fn e() -> Self {
        Self::one() - Self::monomial(1, 1, 1)
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Mono) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// `π(β^p α^q) = t^{q-p}`
    pub fn pi_laurent(&self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for ((p, q), c) in &self.terms {
            out.add_term(i64::from(*q) - i64::from(*p), c.clone());
        }
        out
    }

    /// Membership in the kernel of `π`, which is the copy of `M_∞`.
    pub fn in_m_infinity(&self) -> bool {
        self.pi_laurent().is_zero_elem()
    }

    /// `β^p α^q ↦ Σ_j e_{j+p, j+q}`
    pub fn hat(&self) -> ProgressionMatrix {
        let mut out = ProgressionMatrix::zero();
        for ((p, q), c) in &self.terms {
            out = out + ProgressionMatrix::progression(1, i64::from(*p), 1, i64::from(*q), 0).scale(c);
        }
        out
    }

    /// Membership in `τ₀`: the Laurent image vanishes at `t = 1`.
    pub fn in_tau0(&self) -> bool {
        self.pi_laurent().ev1().is_zero()
    }
}

impl Ring for ToeplitzElement {
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
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        ToeplitzElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(mono_mul(*m, *n), a * b);
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * k);
        }
        out
    }
}

crate::forward_ring_ops!(ToeplitzElement);

pub(crate) fn mono_string(p: u32, q: u32) -> String {
    let pow = |name: &str, k: u32| match k {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{}^{}", name, k),
    };
    match (p, q) {
        (0, 0) => "1".to_string(),
        (0, _) => pow("a", q),
        (_, 0) => pow("b", p),
        _ => format!("{}{}", pow("b", p), pow("a", q)),
    }
}

pub(crate) fn join_terms<'a>(terms: impl Iterator<Item = (String, &'a BigInt)>) -> String {
    let mut s = String::new();
    for (body, c) in terms {
        let neg = c < &BigInt::zero();
        let mag = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            s.push_str(&body);
        } else if body == "1" {
            s.push_str(&mag.to_string());
        } else {
            s.push_str(&format!("{}*{}", mag, body));
        }
    }
    if s.is_empty() {
        "0".to_string()
    } else {
        s
    }
}

impl fmt::Display for ToeplitzElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_terms(self.terms.iter().map(|((p, q), c)| (mono_string(*p, *q), c))))
    }
}

impl fmt::Debug for ToeplitzElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type T = ToeplitzElement;

    #[test]
    fn normal_form_products() {
        let ba = T::monomial(1, 1, 1);
        assert_eq!(ba.mul_ref(&ba), ba);
        assert_eq!(T::alpha().mul_ref(&T::beta()), T::one());
        assert_eq!(T::monomial(2, 1, 1).mul_ref(&T::monomial(1, 2, 1)), T::monomial(2, 2, 1));
        assert_eq!(T::beta().mul_ref(&T::alpha()), ba);
    }

    #[test]
    fn laurent_image() {
        assert!(T::e().in_m_infinity());
        assert_eq!(T::alpha().pi_laurent(), LaurentPolynomial::t());
        for p in 0..=3 {
            for q in 0..=3 {
                let d = T::monomial(p, q, 1) - T::monomial(p + 1, q + 1, 1);
                assert!(d.pi_laurent().is_zero_elem());
            }
        }
    }

    #[test]
    fn hat_of_corner_differences() {
        for p in 0..=4u32 {
            for q in 0..=4u32 {
                let d = T::monomial(p, q, 1) - T::monomial(p + 1, q + 1, 1);
                assert_eq!(d.hat(), ProgressionMatrix::unit(i64::from(p), i64::from(q)));
            }
        }
        assert_eq!(T::one().hat(), ProgressionMatrix::identity());
    }

    #[test]
    fn tau0_membership() {
        assert!((T::alpha() - T::one()).in_tau0());
        assert!(!T::one().in_tau0());
        assert!(T::e().in_tau0());
    }

    #[test]
    fn display() {
        assert_eq!(T::e().to_string(), "1 - ba");
        assert_eq!((T::monomial(2, 3, 2) + T::alpha()).to_string(), "a + 2*b^2a^3");
    }

    pub(crate) fn arb_toeplitz(max_terms: usize) -> impl Strategy<Value = T> {
        prop::collection::vec((0u32..5, 0u32..5, -3i64..4), 0..=max_terms).prop_map(|ts| {
            let mut x = T::zero();
            for (p, q, c) in ts {
                x.add_term((p, q), BigInt::from(c));
            }
            x
        })
    }

    proptest! {
        #[test]
        fn hat_is_multiplicative(x in arb_toeplitz(4), y in arb_toeplitz(4)) {
            prop_assert_eq!(x.mul_ref(&y).hat(), x.hat().mul_ref(&y.hat()));
            prop_assert_eq!(x.add_ref(&y).hat(), x.hat().add_ref(&y.hat()));
        }

        #[test]
        fn hat_is_injective(x in arb_toeplitz(6), y in arb_toeplitz(6)) {
            prop_assert_eq!(x == y, x.hat() == y.hat());
        }

        #[test]
        fn kernel_of_pi_is_finite_part(x in arb_toeplitz(6)) {
            prop_assert_eq!(x.in_m_infinity(), x.hat().is_finite());
        }

        #[test]
        fn associativity(x in arb_toeplitz(4), y in arb_toeplitz(4), z in arb_toeplitz(4)) {
            prop_assert_eq!(x.mul_ref(&y).mul_ref(&z), x.mul_ref(&y.mul_ref(&z)));
        }

        #[test]
        fn pi_is_multiplicative(x in arb_toeplitz(4), y in arb_toeplitz(4)) {
            prop_assert_eq!(x.mul_ref(&y).pi_laurent(), x.pi_laurent().mul_ref(&y.pi_laurent()));
        }
    }
}
