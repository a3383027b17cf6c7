//! Laurent polynomials in one variable over the integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * t^k`
    pub fn monomial(k: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c.into());
        p
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn t_inv() -> Self {
        Self::monomial(-1, 1)
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    /// `t -> 1`
    pub fn ev1(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Ring for LaurentPolynomial {
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
        LaurentPolynomial { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }
}

crate::forward_ring_ops!(LaurentPolynomial);

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            match *k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if *k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-3i64..4, -4i64..5), 0..5).prop_map(|ts| {
            let mut p = LaurentPolynomial::zero();
            for (k, c) in ts {
                p.add_term(k, BigInt::from(c));
            }
            p
        })
    }

    #[test]
    fn t_times_t_inverse_is_one() {
        assert_eq!(LaurentPolynomial::t() * LaurentPolynomial::t_inv(), LaurentPolynomial::one());
        assert_eq!(LaurentPolynomial::monomial(-2, 3).to_string(), "3*t^-2");
    }

    proptest! {
        #[test]
        fn ring_axioms_and_ev1_is_a_homomorphism(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), (&a * &b) + (&a * &c));
            prop_assert_eq!((&a * &b).ev1(), a.ev1() * b.ev1());
            prop_assert_eq!((&a + &b).ev1(), a.ev1() + b.ev1());
        }
    }
}
