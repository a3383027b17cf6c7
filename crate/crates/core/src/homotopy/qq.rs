//! The free ring `Q(Z)` on two idempotents, its `q`-ideal, and the formal
//! class `[e_0] - [e_1]` of a pair of idempotents over the unitalization of `Z`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::rings::{Ring, RingMatrix};

/// A string rewriting system with length-reducing rules over a small alphabet.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub rules: Vec<(Vec<u8>, Vec<u8>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalPair {
    pub overlap: Vec<u8>,
    pub left: Vec<u8>,
    pub right: Vec<u8>,
}

impl CriticalPair {
    pub fn resolves(&self) -> bool {
        self.left == self.right
    }
}

impl RewriteSystem {
    /// `uu -> u`, `vv -> v`
    pub fn idempotents() -> Self {
        RewriteSystem { rules: vec![(vec![0, 0], vec![0]), (vec![1, 1], vec![1])] }
    }

    fn step(&self, w: &[u8]) -> Option<Vec<u8>> {
        for (l, r) in &self.rules {
            if let Some(i) = w.windows(l.len()).position(|s| s == l.as_slice()) {
                let mut out = w[..i].to_vec();
                out.extend_from_slice(r);
                out.extend_from_slice(&w[i + l.len()..]);
                return Some(out);
            }
        }
        None
    }

    pub fn normal_form(&self, w: &[u8]) -> Vec<u8> {
        let mut cur = w.to_vec();
        while let Some(next) = self.step(&cur) {
            cur = next;
        }
        cur
    }

    /// All overlaps `xyz` with `xy`, `yz` left-hand sides (and inclusions),
    /// each rewritten both ways and normalized.
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let mut out = Vec::new();
        for (l1, r1) in &self.rules {
            for (l2, r2) in &self.rules {
                for k in 1..l1.len().min(l2.len()) + 1 {
                    if l1[l1.len() - k..] != l2[..k] || (k == l1.len() && k == l2.len()) {
                        continue;
                    }
                    let mut overlap = l1.clone();
                    overlap.extend_from_slice(&l2[k..]);
                    let mut a = r1.clone();
                    a.extend_from_slice(&l2[k..]);
                    let mut b = l1[..l1.len() - k].to_vec();
                    b.extend_from_slice(r2);
                    out.push(CriticalPair { overlap, left: self.normal_form(&a), right: self.normal_form(&b) });
                }
                if l1 != l2 && l2.len() < l1.len() {
                    if let Some(i) = l1.windows(l2.len()).position(|s| s == l2.as_slice()) {
                        let mut b = l1[..i].to_vec();
                        b.extend_from_slice(r2);
                        b.extend_from_slice(&l1[i + l2.len()..]);
                        out.push(CriticalPair { overlap: l1.clone(), left: self.normal_form(r1), right: self.normal_form(&b) });
                    }
                }
            }
        }
        out
    }

    pub fn is_confluent(&self) -> bool {
        self.critical_pairs().iter().all(CriticalPair::resolves)
    }
}

/// Element of `Q(Z) = Z * Z` (non-unital free product), on alternating words
/// in `u = 0`, `v = 1`.
#[derive(Clone, PartialEq, Default)]
pub struct QElem {
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl QElem {
    pub fn word(w: &[u8]) -> Self {
        let mut x = QElem::default();
        x.add_term(w, BigInt::one());
        x
    }

    pub fn u() -> Self {
        Self::word(&[0])
    }

    pub fn v() -> Self {
        Self::word(&[1])
    }

    pub fn add_term(&mut self, w: &[u8], c: BigInt) {
        assert!(!w.is_empty(), "Q(Z) has no unit");
        let nf = RewriteSystem::idempotents().normal_form(w);
        let e = self.terms.entry(nf.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&nf);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &BigInt)> {
        self.terms.iter()
    }

    /// The codiagonal `Q(Z) -> Z`, `u, v -> 1`.
    pub fn codiagonal(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Debug for QElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let s: String = w.iter().map(|l| if *l == 0 { 'u' } else { 'v' }).collect();
                if c.is_one() {
                    s
                } else {
                    format!("{}*{}", c, s)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Ring for QElem {
    fn zero_like(&self) -> Self {
        QElem::default()
    }
    fn one_like(&self) -> Self {
        panic!("Q(Z) is not unital")
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, c.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        QElem { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = QElem::default();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(&w, c * d);
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        let mut out = QElem::default();
        for (w, c) in &self.terms {
            out.add_term(w, c * k);
        }
        out
    }
}

/// Alternating words of length `1..=n`.
pub fn alternating_words(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for len in 1..=n {
        for first in 0..2u8 {
            out.push((0..len).map(|i| (first + i as u8) % 2).collect());
        }
    }
    out
}

/// `q(Z) = ker(Q(Z) -> Z)` sampled by `w (u - v) w'` with alternating `w, w'`
/// of length `<= n` (either side possibly empty).
pub fn q_generators(n: usize) -> Vec<QElem> {
    let d = QElem::u().sub_ref(&QElem::v());
    let mut sides: Vec<Option<QElem>> = vec![None];
    sides.extend(alternating_words(n).iter().map(|w| Some(QElem::word(w))));
    let mut out = Vec::new();
    for l in &sides {
        for r in &sides {
            let mut x = d.clone();
            if let Some(l) = l {
                x = l.mul_ref(&x);
            }
            if let Some(r) = r {
                x = x.mul_ref(r);
            }
            out.push(x);
        }
    }
    out
}

/// `Z~ = Z ⊕ Z·1`: `(a, n)(b, m) = (ab + am + nb, nm)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZTilde {
    pub a: BigInt,
    pub n: BigInt,
}

impl ZTilde {
    pub fn new(a: i64, n: i64) -> Self {
        ZTilde { a: a.into(), n: n.into() }
    }

    pub fn augmentation(&self) -> BigInt {
        self.n.clone()
    }

    /// `Z~ ≅ Z x Z`, first factor `(a, n) -> a + n`
    pub fn character(&self) -> BigInt {
        &self.a + &self.n
    }
}

impl fmt::Debug for ZTilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.n)
    }
}

impl Ring for ZTilde {
    fn zero_like(&self) -> Self {
        ZTilde::new(0, 0)
    }
    fn one_like(&self) -> Self {
        ZTilde::new(0, 1)
    }
    fn is_zero_elem(&self) -> bool {
        self.a.is_zero() && self.n.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        ZTilde { a: &self.a + &rhs.a, n: &self.n + &rhs.n }
    }
    fn neg_ref(&self) -> Self {
        ZTilde { a: -&self.a, n: -&self.n }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        ZTilde { a: &self.a * &rhs.a + &self.a * &rhs.n + &self.n * &rhs.a, n: &self.n * &rhs.n }
    }
    fn scale(&self, k: &BigInt) -> Self {
        ZTilde { a: &self.a * k, n: &self.n * k }
    }
}

pub type TildeMatrix = RingMatrix<ZTilde>;

fn trace_by(m: &TildeMatrix, f: impl Fn(&ZTilde) -> BigInt) -> BigInt {
    (0..m.size()).map(|i| f(m.get(i, i))).sum()
}

fn block_sum(parts: &[&TildeMatrix], pad: usize) -> TildeMatrix {
    let n: usize = parts.iter().map(|m| m.size()).sum::<usize>() + pad;
    let mut out = TildeMatrix::zero(n, &ZTilde::new(0, 0));
    let mut off = 0;
    for m in parts {
        for i in 0..m.size() {
            for j in 0..m.size() {
                out.set(off + i, off + j, m.get(i, j).clone());
            }
        }
        off += m.size();
    }
    out
}

/// `(e_0, e_1)` idempotents over `Z~` with equal augmentation.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentPair {
    pub e0: TildeMatrix,
    pub e1: TildeMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QqError {
    #[error("{0} is not idempotent")]
    NotIdempotent(&'static str),
    #[error("sizes differ: {0} vs {1}")]
    Size(usize, usize),
    #[error("augmentations of e0 and e1 differ")]
    Augmentation,
}

fn augmentation_matrix(m: &TildeMatrix) -> RingMatrix<BigInt> {
    m.map(|x| x.augmentation())
}

impl IdempotentPair {
    pub fn new(e0: TildeMatrix, e1: TildeMatrix) -> Result<Self, QqError> {
        if e0.size() != e1.size() {
            return Err(QqError::Size(e0.size(), e1.size()));
        }
        if e0.mul_ref(&e0) != e0 {
            return Err(QqError::NotIdempotent("e0"));
        }
        if e1.mul_ref(&e1) != e1 {
            return Err(QqError::NotIdempotent("e1"));
        }
        if augmentation_matrix(&e0) != augmentation_matrix(&e1) {
            return Err(QqError::Augmentation);
        }
        Ok(IdempotentPair { e0, e1 })
    }

    /// The hom `Q(Z) -> M_n(Z~)`, `u -> e_0`, `v -> e_1`.
    pub fn classify(&self, x: &QElem) -> TildeMatrix {
        let mut out = TildeMatrix::zero(self.e0.size(), &ZTilde::new(0, 0));
        for (w, c) in x.terms() {
            let mut m = if w[0] == 0 { self.e0.clone() } else { self.e1.clone() };
            for l in &w[1..] {
                m = m.mul_ref(if *l == 0 { &self.e0 } else { &self.e1 });
            }
            out = out.add_ref(&m.scale(c));
        }
        out
    }

    pub fn class(&self) -> FormalClass {
        FormalClass { e0: self.e0.clone(), e1: self.e1.clone() }
    }
}

/// `[e_0] - [e_1]`. Equality with another class needs an explicit witness.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalClass {
    pub e0: TildeMatrix,
    pub e1: TildeMatrix,
}

/// `g (x ⊕ 0_pad) g^{-1} = y ⊕ 0_pad'` with `g g^{-1} = 1`.
#[derive(Clone, Debug)]
pub struct ConjugationWitness {
    pub pad: usize,
    pub target_pad: usize,
    pub g: TildeMatrix,
    pub g_inv: TildeMatrix,
}

impl FormalClass {
    /// The rank, `tr χ(e_0) - tr χ(e_1)` under `Z~ ≅ Z x Z`.
    pub fn rank(&self) -> BigInt {
        trace_by(&self.e0, ZTilde::character) - trace_by(&self.e1, ZTilde::character)
    }

    /// Rank of the image in `K_0(Z)` under augmentation, zero for classes of `K_0(Z)`.
    pub fn augmentation_rank(&self) -> BigInt {
        trace_by(&self.e0, ZTilde::augmentation) - trace_by(&self.e1, ZTilde::augmentation)
    }

    /// Checks `[e_0] - [e_1] = [f_0] - [f_1]` via `e_0 ⊕ f_1 ~ f_0 ⊕ e_1`.
    pub fn equals_with(&self, other: &FormalClass, w: &ConjugationWitness) -> bool {
        let lhs = block_sum(&[&self.e0, &other.e1], w.pad);
        let rhs = block_sum(&[&other.e0, &self.e1], w.target_pad);
        if lhs.size() != w.g.size() || rhs.size() != w.g.size() || w.g_inv.size() != w.g.size() {
            return false;
        }
        let one = TildeMatrix::identity(w.g.size(), &ZTilde::new(0, 0));
        w.g.mul_ref(&w.g_inv) == one && w.g_inv.mul_ref(&w.g) == one && w.g.mul_ref(&lhs).mul_ref(&w.g_inv) == rhs
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QqReport {
    pub confluent: bool,
    pub codiagonal_kills_samples: bool,
    pub samples_in_ideal: bool,
    pub kills_u_minus_v: bool,
    pub rank: String,
}

impl QqReport {
    pub fn pass(&self) -> bool {
        self.confluent && self.codiagonal_kills_samples && self.samples_in_ideal
    }
}

/// Runs the classifying hom on `q`-generator samples up to word length `n`.
pub fn qq_calculus(pair: &IdempotentPair, n: usize) -> QqReport {
    let samples = q_generators(n);
    let zero = RingMatrix::zero(pair.e0.size(), &BigInt::zero());
    QqReport {
        confluent: RewriteSystem::idempotents().is_confluent(),
        codiagonal_kills_samples: samples.iter().all(|x| x.codiagonal().is_zero()),
        samples_in_ideal: samples.iter().all(|x| augmentation_matrix(&pair.classify(x)) == zero),
        kills_u_minus_v: pair.classify(&QElem::u().sub_ref(&QElem::v())).is_zero_elem(),
        rank: pair.class().rank().to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(xs: &[ZTilde]) -> TildeMatrix {
        TildeMatrix::diagonal(xs.to_vec())
    }

    #[test]
    fn rewriting_is_confluent_and_normal_forms_alternate() {
        let rs = RewriteSystem::idempotents();
        let pairs = rs.critical_pairs();
        assert_eq!(pairs.len(), 2);
        assert!(pairs.iter().all(CriticalPair::resolves));
        assert_eq!(rs.normal_form(&[0, 0, 1, 1, 1, 0]), vec![0, 1, 0]);
        let uvu = QElem::u().mul_ref(&QElem::v()).mul_ref(&QElem::u());
        assert_eq!(format!("{:?}", uvu), "uvu");
        // a system with an unresolved overlap
        let bad = RewriteSystem { rules: vec![(vec![0, 1], vec![1]), (vec![1, 0], vec![0])] };
        assert!(!bad.is_confluent());
    }

    #[test]
    fn identical_idempotents_give_zero() {
        let e = diag(&[ZTilde::new(1, 0), ZTilde::new(0, 1)]);
        let pair = IdempotentPair::new(e.clone(), e).unwrap();
        let report = qq_calculus(&pair, 3);
        assert!(report.pass());
        assert!(report.kills_u_minus_v);
        assert_eq!(report.rank, "0");
        let zero_class = FormalClass { e0: diag(&[ZTilde::new(0, 0)]), e1: diag(&[ZTilde::new(0, 0)]) };
        let w = ConjugationWitness {
            pad: 0,
            target_pad: 2,
            g: TildeMatrix::identity(3, &ZTilde::new(0, 0)),
            g_inv: TildeMatrix::identity(3, &ZTilde::new(0, 0)),
        };
        // e ⊕ 0 vs 0 ⊕ e needs a permutation, not the identity
        assert!(!pair.class().equals_with(&zero_class, &w));
        let mut p = TildeMatrix::zero(3, &ZTilde::new(0, 0));
        for (i, j) in [(1, 0), (2, 1), (0, 2)] {
            p.set(i, j, ZTilde::new(0, 1));
        }
        let w = ConjugationWitness { pad: 0, target_pad: 0, g_inv: p.transpose(), g: p };
        let e = pair.e0.clone();
        let lhs = block_sum(&[&e, &zero_class.e1], 0);
        let rhs = block_sum(&[&zero_class.e0, &e], 0);
        assert_eq!(w.g.mul_ref(&lhs).mul_ref(&w.g_inv), rhs);
        assert!(pair.class().equals_with(&zero_class, &w));
    }

    #[test]
    fn rank_one_class() {
        let e0 = diag(&[ZTilde::new(1, 0), ZTilde::new(0, 0)]);
        let e1 = diag(&[ZTilde::new(0, 0), ZTilde::new(0, 0)]);
        let pair = IdempotentPair::new(e0.clone(), e1).unwrap();
        let report = qq_calculus(&pair, 3);
        assert!(report.pass());
        assert!(!report.kills_u_minus_v);
        assert_eq!(report.rank, "1");
        assert_eq!(pair.class().augmentation_rank(), BigInt::zero());
        let uvu = QElem::word(&[0, 1, 0]);
        assert_eq!(pair.classify(&uvu), e0.mul_ref(&pair.e1).mul_ref(&e0));
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        let two = diag(&[ZTilde::new(2, 0)]);
        let zero = diag(&[ZTilde::new(0, 0)]);
        assert_eq!(IdempotentPair::new(two, zero.clone()), Err(QqError::NotIdempotent("e0")));
        let one = diag(&[ZTilde::new(0, 1)]);
        assert_eq!(IdempotentPair::new(one, zero), Err(QqError::Augmentation));
    }
}
