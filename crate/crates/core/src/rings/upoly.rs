//! Univariate polynomials `R[t]` over an arbitrary exact ring.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::Ring;

/// Element of `R[t]`. `base` is a zero of `R` carried along as context for
/// building constants.
#[derive(Clone)]
pub struct UPoly<R: Ring> {
    coeffs: BTreeMap<u32, R>,
    base: R,
}

impl<R: Ring> PartialEq for UPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> UPoly<R> {
    pub fn zero(base: &R) -> Self {
        UPoly { coeffs: BTreeMap::new(), base: base.zero_like() }
    }

    /// The constant polynomial `c` (the inclusion `c_B: B -> B[t]`).
    pub fn constant(c: R) -> Self {
        Self::monomial(0, c)
    }

    /// `c * t^k`
    pub fn monomial(k: u32, c: R) -> Self {
        let mut p = Self::zero(&c);
        p.add_term(k, c);
        p
    }

    pub fn from_coeffs(cs: Vec<R>) -> Self {
        let base = cs.first().expect("at least one coefficient").zero_like();
        let mut p = UPoly { coeffs: BTreeMap::new(), base };
        for (k, c) in cs.into_iter().enumerate() {
            p.add_term(k as u32, c);
        }
        p
    }

    pub fn add_term(&mut self, k: u32, c: R) {
        if c.is_zero_elem() {
            return;
        }
        let next = match self.coeffs.get(&k) {
            Some(old) => old.add_ref(&c),
            None => c,
        };
        if next.is_zero_elem() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, next);
        }
    }

    pub fn coeff(&self, k: u32) -> R {
        self.coeffs.get(&k).cloned().unwrap_or_else(|| self.base.zero_like())
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&u32, &R)> {
        self.coeffs.iter()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// `t -> 0`
    pub fn ev0(&self) -> R {
        self.coeff(0)
    }

    /// `t -> 1`
    pub fn ev1(&self) -> R {
        self.coeffs.values().fold(self.base.zero_like(), |acc, c| acc.add_ref(c))
    }

    /// `t -> k` for an integer `k`.
    pub fn eval_int(&self, k: &BigInt) -> R {
        let mut acc = self.base.zero_like();
        for (e, c) in &self.coeffs {
            acc = acc.add_ref(&c.scale(&num_traits::pow(k.clone(), *e as usize)));
        }
        acc
    }

    /// Substitute `t -> q(t)` with `q` an integer polynomial in `t`.
    pub fn compose_int(&self, q: &[i64]) -> Self {
        let q_poly = UPoly::from_coeffs(q.iter().map(|c| self.base.one_like().scale(&BigInt::from(*c))).collect());
        let mut acc = Self::zero(&self.base);
        let mut power = UPoly::constant(self.base.one_like());
        let mut last = 0;
        for (e, c) in &self.coeffs {
            while last < *e {
                power = power.mul_ref(&q_poly);
                last += 1;
            }
            acc = acc.add_ref(&power.mul_ref(&UPoly::constant(c.clone())));
        }
        acc
    }

    /// Reparametrise by `t -> 1 - t`.
    pub fn reverse(&self) -> Self {
        self.compose_int(&[1, -1])
    }

    pub fn map_coeffs<S: Ring>(&self, base: &S, f: impl Fn(&R) -> S) -> UPoly<S> {
        let mut out = UPoly::zero(base);
        for (k, c) in &self.coeffs {
            out.add_term(*k, f(c));
        }
        out
    }
}

impl<R: Ring> Ring for UPoly<R> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.base)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.base.one_like())
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        let mut out = Self::zero(&self.base);
        for (k, c) in &self.coeffs {
            out.add_term(*k, c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(&self.base);
        for (a, c) in &self.coeffs {
            for (b, d) in &rhs.coeffs {
                out.add_term(a + b, c.mul_ref(d));
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(&self.base);
        for (e, c) in &self.coeffs {
            out.add_term(*e, c.scale(k));
        }
        out
    }
}

impl<R: Ring> fmt::Debug for UPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(k, c)| match k {
                0 => format!("({:?})", c),
                1 => format!("({:?})*t", c),
                _ => format!("({:?})*t^{}", c, k),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn z(k: i64) -> BigInt {
        BigInt::from(k)
    }

    #[test]
    fn evaluation_is_multiplicative_and_constants_split_it() {
        let p = UPoly::from_coeffs(vec![z(1), z(-2), z(3)]);
        let q = UPoly::from_coeffs(vec![z(0), z(5)]);
        let pq = p.mul_ref(&q);
        assert_eq!(pq.ev0(), p.ev0() * q.ev0());
        assert_eq!(pq.ev1(), p.ev1() * q.ev1());
        let c = UPoly::constant(z(7));
        assert_eq!(c.ev0(), z(7));
        assert_eq!(c.ev1(), z(7));
    }

    #[test]
    fn reverse_swaps_endpoints() {
        let p = UPoly::from_coeffs(vec![z(2), z(0), z(1)]);
        let r = p.reverse();
        assert_eq!(r.ev0(), p.ev1());
        assert_eq!(r.ev1(), p.ev0());
        assert_eq!(r.reverse(), p);
        assert!(UPoly::constant(BigInt::one()).reverse().ev0().is_one());
    }
}
