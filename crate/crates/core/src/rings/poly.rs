//! Sparse multivariate integer polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;

/// Exponent vector with trailing zeros trimmed, so `t1` in one or in three
/// variables is the same monomial.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

/// Polynomial in the variables `t_1, t_2, ...` (index 0 is `t_1`) with
/// arbitrary-precision integer coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(vec![], c);
        }
        p
    }

    /// The variable with index `i` (0-based).
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exps: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(trim(exps), c);
        }
        p
    }

    /// Univariate polynomial in `t_1` from coefficients `[c_0, c_1, ...]`.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, c) in cs.iter().enumerate() {
            p.add_term(vec![i as u32], BigInt::from(*c));
        }
        p
    }

    pub fn add_term(&mut self, exps: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = trim(exps);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&trim(exps.to_vec())).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Number of variables actually occurring (highest index + 1).
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&vec![]).cloned(),
            _ => None,
        }
    }

    /// Evaluate at integer values for the variables; missing values count as 0.
    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let v = values.get(i).cloned().unwrap_or_default();
                term *= num_traits::pow(v, *e as usize);
            }
            acc += term;
        }
        acc
    }

    /// Ring substitution `t_i -> images[i]`; variables beyond `images` are
    /// left unchanged.
    pub fn substitute(&self, images: &[IntPolynomial]) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        let mut pow_cache: BTreeMap<(usize, u32), IntPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = IntPolynomial::constant(c.clone());
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let factor = if i < images.len() {
                    pow_cache
                        .entry((i, *e))
                        .or_insert_with(|| images[i].pow(*e))
                        .clone()
                } else {
                    let mut ex = vec![0; i + 1];
                    ex[i] = *e;
                    IntPolynomial::monomial(ex, 1)
                };
                term = term.mul_ref(&factor);
            }
            out = out.add_ref(&term);
        }
        out
    }

    /// All monomials in `nvars` variables of total degree `<= d`, ordered by
    /// degree and then lexicographically.
    pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for deg in 0..=d {
            let mut cur = vec![0u32; nvars];
            compositions(nvars, deg, 0, &mut cur, &mut out);
        }
        out.into_iter().map(trim).collect()
    }

    /// Formats with the given variable names (falls back to `t1, t2, ...`).
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        // highest degree first reads better
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then(b.0.cmp(a.0))
        });
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let name = names.get(i).map(|n| n.to_string()).unwrap_or_else(|| format!("t{}", i + 1));
                if *e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{}^{}", name, e));
                }
            }
            if factors.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

fn compositions(nvars: usize, remaining: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if nvars == 0 {
        if remaining == 0 {
            out.push(vec![]);
        }
        return;
    }
    if pos == nvars - 1 {
        cur[pos] = remaining;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        cur[pos] = e;
        compositions(nvars, remaining - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

impl Ring for IntPolynomial {
    fn zero_like(&self) -> Self {
        IntPolynomial::zero()
    }
    fn one_like(&self) -> Self {
        IntPolynomial::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        IntPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = IntPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let n = m1.len().max(m2.len());
                let mut m = vec![0u32; n];
                for (i, e) in m1.iter().enumerate() {
                    m[i] += e;
                }
                for (i, e) in m2.iter().enumerate() {
                    m[i] += e;
                }
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }
}

crate::forward_ring_ops!(IntPolynomial);

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> IntPolynomial {
        IntPolynomial::var(0)
    }

    #[test]
    fn trailing_zero_exponents_are_canonical() {
        let a = IntPolynomial::monomial(vec![1, 0, 0], 3);
        let b = IntPolynomial::monomial(vec![1], 3);
        assert_eq!(a, b);
    }

    #[test]
    fn substitution_and_evaluation() {
        // (1 - t)^2 at t -> 1 - t gives t^2
        let one = IntPolynomial::one();
        let p = (&one - &t()) * (&one - &t());
        let q = p.substitute(&[&one - &t()]);
        assert_eq!(q, t() * t());
        assert_eq!(p.eval(&[BigInt::from(3)]), BigInt::from(4));
    }

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(IntPolynomial::monomials_up_to(2, 2).len(), 6);
        assert_eq!(IntPolynomial::monomials_up_to(3, 6).len(), 84);
        assert_eq!(IntPolynomial::monomials_up_to(0, 4), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn display_orders_by_degree() {
        let p = IntPolynomial::from_coeffs(&[1, -2, 0, 1]);
        assert_eq!(p.to_string(), "t1^3 - 2*t1 + 1");
    }

    fn arb_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(((0u32..3, 0u32..3), -5i64..5), 0..5).prop_map(|ts| {
            let mut p = IntPolynomial::zero();
            for ((a, b), c) in ts {
                p.add_term(vec![a, b], BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), (&a * &b) + (&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &IntPolynomial::zero(), a.clone());
            prop_assert_eq!(&a * &IntPolynomial::one(), a.clone());
        }

        #[test]
        fn degree_of_product_is_additive(a in arb_poly(), b in arb_poly()) {
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }
    }
}
