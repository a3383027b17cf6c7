//! Noncommutative integer polynomials, finitely presented algebras,
//! homomorphism checking and truncated quotient arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::Ring;
use crate::lattice::{IntVec, Lattice};

/// A word in the generators, by index. The empty word is the unit.
pub type Word = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("relation {0} is not homogeneous")]
    Inhomogeneous(String),
}

/// Element of the free ring `Z<x_0, x_1, ...>`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, BigInt>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::word(vec![], c)
    }

    pub fn gen(i: usize) -> Self {
        Self::word(vec![i], 1)
    }

    pub fn word(w: Word, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c.into());
        p
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// Weighted degree of every term, `None` for zero.
    pub fn weighted_degrees(&self, weights: &[u32]) -> Vec<u32> {
        self.terms.keys().map(|w| w.iter().map(|g| weights[*g]).sum()).collect()
    }

    /// Parses expressions such as `a*b - 1`, `2 x^3 + (x - y)*y` over the
    /// given generator names. Juxtaposition multiplies.
    pub fn parse(src: &str, names: &[String]) -> Result<NcPoly, HomError> {
        let tokens = tokenize(src)?;
        let mut parser = Parser { tokens, pos: 0, names };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(HomError::Parse(format!("trailing input in `{}`", src)));
        }
        Ok(p)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        let mut s = String::new();
        for (k, (w, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            if w.is_empty() {
                s.push_str(&a.to_string());
                continue;
            }
            if !a.is_one() {
                s.push_str(&format!("{}*", a));
            }
            let letters: Vec<String> =
                w.iter().map(|g| names.get(*g).cloned().unwrap_or_else(|| format!("x{}", g))).collect();
            s.push_str(&letters.join("*"));
        }
        s
    }
}

impl Ring for NcPoly {
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
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
    fn neg_ref(&self) -> Self {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }
    fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }
}

crate::forward_ring_ops!(NcPoly);

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>, HomError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(s.parse().expect("digits")));
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(HomError::Parse(format!("unexpected character `{}`", other))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Tok>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<NcPoly, HomError> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg_ref()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add_ref(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly, HomError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul_ref(&self.power()?);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul_ref(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<NcPoly, HomError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.tokens.get(self.pos).cloned() {
                Some(Tok::Num(k)) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().map_err(|_| HomError::Parse("exponent too large".into()))?;
                    return Ok(base.pow(k));
                }
                _ => return Err(HomError::Parse("expected exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NcPoly, HomError> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(NcPoly::constant(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .names
                    .iter()
                    .position(|g| *g == name)
                    .ok_or(HomError::UnknownGenerator(name))?;
                Ok(NcPoly::gen(i))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(HomError::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(HomError::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Generators and relations; optionally a degree per generator.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<NcPoly>,
    pub degrees: Option<Vec<u32>>,
}

impl AlgebraPresentation {
    pub fn new(generators: &[&str], relations: &[&str]) -> Result<Self, HomError> {
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let relations = relations.iter().map(|r| NcPoly::parse(r, &generators)).collect::<Result<_, _>>()?;
        Ok(AlgebraPresentation { generators, relations, degrees: None })
    }

    /// Attach generator degrees; every relation must be homogeneous.
    pub fn with_degrees(mut self, degrees: &[u32]) -> Result<Self, HomError> {
        assert_eq!(degrees.len(), self.generators.len());
        for r in &self.relations {
            let ds = r.weighted_degrees(degrees);
            if ds.windows(2).any(|w| w[0] != w[1]) {
                return Err(HomError::Inhomogeneous(r.display_with(&self.generators)));
            }
        }
        self.degrees = Some(degrees.to_vec());
        Ok(self)
    }

    /// The presentation of the Toeplitz ring: `alpha*beta = 1`.
    pub fn toeplitz() -> Self {
        Self::new(&["alpha", "beta"], &["alpha*beta - 1"]).expect("static presentation")
    }

    pub fn index(&self, name: &str) -> Result<usize, HomError> {
        self.generators.iter().position(|g| g == name).ok_or_else(|| HomError::UnknownGenerator(name.into()))
    }

    pub fn parse(&self, src: &str) -> Result<NcPoly, HomError> {
        NcPoly::parse(src, &self.generators)
    }

    pub fn show(&self, p: &NcPoly) -> String {
        p.display_with(&self.generators)
    }
}

/// A map from a presented algebra into `R`, given on generators. `unit` is
/// the image of the empty word; it defaults to `1` (unital maps) and is set
/// explicitly for non-unital maps such as corner embeddings.
#[derive(Clone, Debug)]
pub struct AlgebraHom<R: Ring> {
    pub source: AlgebraPresentation,
    pub images: Vec<R>,
    pub unit: Option<R>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FailedRelation {
    pub index: usize,
    pub relation: String,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomVerdict {
    pub valid: bool,
    pub failing: Option<FailedRelation>,
}

impl<R: Ring> AlgebraHom<R> {
    pub fn new(source: &AlgebraPresentation, assignments: Vec<(&str, R)>) -> Result<Self, HomError> {
        let mut images: Vec<Option<R>> = vec![None; source.generators.len()];
        for (name, img) in assignments {
            let i = source.index(name)?;
            images[i] = Some(img);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| HomError::MissingImage(source.generators[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AlgebraHom { source: source.clone(), images, unit: None })
    }

    pub fn with_unit(mut self, unit: R) -> Self {
        self.unit = Some(unit);
        self
    }

    pub fn image(&self, name: &str) -> Result<&R, HomError> {
        Ok(&self.images[self.source.index(name)?])
    }

    fn unit_image(&self) -> R {
        self.unit.clone().unwrap_or_else(|| self.images[0].one_like())
    }

    pub fn eval(&self, p: &NcPoly) -> R {
        let mut acc = self.images[0].zero_like();
        for (w, c) in p.terms() {
            let mut x = match w.first() {
                None => self.unit_image(),
                Some(g) => self.images[*g].clone(),
            };
            for g in w.iter().skip(1) {
                x = x.mul_ref(&self.images[*g]);
            }
            acc = acc.add_ref(&x.scale(c));
        }
        acc
    }

    pub fn eval_str(&self, src: &str) -> Result<R, HomError> {
        Ok(self.eval(&self.source.parse(src)?))
    }

    /// Post-compose with a map `R -> S`, applied to generator and unit images.
    pub fn then<S: Ring>(&self, f: impl Fn(&R) -> S) -> AlgebraHom<S> {
        AlgebraHom {
            source: self.source.clone(),
            images: self.images.iter().map(&f).collect(),
            unit: self.unit.as_ref().map(&f),
        }
    }

    /// Pointwise sum `f + g`, the candidate for an orthogonal sum.
    pub fn sum(&self, other: &AlgebraHom<R>) -> AlgebraHom<R> {
        AlgebraHom {
            source: self.source.clone(),
            images: self.images.iter().zip(&other.images).map(|(a, b)| a.add_ref(b)).collect(),
            unit: Some(self.unit_image().add_ref(&other.unit_image())),
        }
    }

    /// Index of the first generator on which two maps differ.
    pub fn first_difference(&self, other: &AlgebraHom<R>) -> Option<String> {
        self.images
            .iter()
            .zip(&other.images)
            .position(|(a, b)| a != b)
            .map(|i| self.source.generators[i].clone())
    }
}

/// Evaluates every relation; valid iff all vanish.
pub fn check_hom<R: Ring>(f: &AlgebraHom<R>) -> HomVerdict {
    for (i, r) in f.source.relations.iter().enumerate() {
        let img = f.eval(r);
        if !img.is_zero_elem() {
            return HomVerdict {
                valid: false,
                failing: Some(FailedRelation { index: i, relation: f.source.show(r), image: format!("{:?}", img) }),
            };
        }
    }
    HomVerdict { valid: true, failing: None }
}

/// `Z<gens> / (relations)` computed up to a word-length bound.
///
/// The ideal is approximated by the span of `u r v` with `|u| + |r| + |v|`
/// at most the bound; elements are kept as canonical coset representatives
/// whose support is pushed towards short words.
#[derive(Debug)]
pub struct NcQuotient {
    pub presentation: AlgebraPresentation,
    pub bound: usize,
    words: Vec<Word>,
    index: BTreeMap<Word, usize>,
    ideal: Lattice,
}

impl NcQuotient {
    pub fn new(presentation: AlgebraPresentation, bound: usize) -> Arc<Self> {
        let k = presentation.generators.len();
        let mut words = Vec::new();
        for len in (0..=bound).rev() {
            words.extend(all_words(k, len));
        }
        let index: BTreeMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut gens: Vec<IntVec> = Vec::new();
        for r in &presentation.relations {
            let Some(m) = r.degree() else { continue };
            if m > bound {
                continue;
            }
            for lu in 0..=bound - m {
                for lv in 0..=bound - m - lu {
                    for u in all_words(k, lu) {
                        for v in all_words(k, lv) {
                            let mut vec = vec![BigInt::zero(); words.len()];
                            for (w, c) in r.terms() {
                                let mut full = u.clone();
                                full.extend_from_slice(w);
                                full.extend_from_slice(&v);
                                vec[index[&full]] += c;
                            }
                            gens.push(vec);
                        }
                    }
                }
            }
        }
        let ideal = Lattice::from_generators(&gens, words.len());
        Arc::new(NcQuotient { presentation, bound, words, index, ideal })
    }

    pub fn ideal_rank(&self) -> usize {
        self.ideal.rank()
    }

    fn reduce(&self, p: &NcPoly) -> NcPoly {
        let mut vec = vec![BigInt::zero(); self.words.len()];
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            match self.index.get(w) {
                Some(i) => vec[*i] += c,
                None => out.add_term(w.clone(), c.clone()),
            }
        }
        for (i, c) in self.ideal.reduce(&vec).into_iter().enumerate() {
            out.add_term(self.words[i].clone(), c);
        }
        out
    }

    /// Whether `p` lies in the truncated ideal.
    pub fn in_ideal(&self, p: &NcPoly) -> bool {
        self.reduce(p).is_zero_elem()
    }

    pub fn elem(self: &Arc<Self>, p: NcPoly) -> QuotElem {
        QuotElem { poly: self.reduce(&p), quotient: Arc::clone(self) }
    }

    pub fn parse(self: &Arc<Self>, src: &str) -> Result<QuotElem, HomError> {
        Ok(self.elem(self.presentation.parse(src)?))
    }

    pub fn gen(self: &Arc<Self>, name: &str) -> Result<QuotElem, HomError> {
        Ok(self.elem(NcPoly::gen(self.presentation.index(name)?)))
    }

    pub fn zero(self: &Arc<Self>) -> QuotElem {
        self.elem(NcPoly::zero())
    }

    pub fn one(self: &Arc<Self>) -> QuotElem {
        self.elem(NcPoly::one())
    }

    /// The identity map of the presented algebra, as a hom into the quotient.
    pub fn identity_hom(self: &Arc<Self>) -> AlgebraHom<QuotElem> {
        let p = &self.presentation;
        AlgebraHom {
            source: p.clone(),
            images: (0..p.generators.len()).map(|i| self.elem(NcPoly::gen(i))).collect(),
            unit: None,
        }
    }
}

fn all_words(k: usize, len: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * k);
        for w in &out {
            for g in 0..k {
                let mut w2 = w.clone();
                w2.push(g);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

/// Element of an [`NcQuotient`] in canonical form.
#[derive(Clone)]
pub struct QuotElem {
    quotient: Arc<NcQuotient>,
    poly: NcPoly,
}

impl QuotElem {
    pub fn poly(&self) -> &NcPoly {
        &self.poly
    }

    pub fn quotient(&self) -> &Arc<NcQuotient> {
        &self.quotient
    }

    fn wrap(&self, p: NcPoly) -> QuotElem {
        self.quotient.elem(p)
    }
}

impl PartialEq for QuotElem {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl Ring for QuotElem {
    fn zero_like(&self) -> Self {
        QuotElem { quotient: Arc::clone(&self.quotient), poly: NcPoly::zero() }
    }
    fn one_like(&self) -> Self {
        self.wrap(NcPoly::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.poly.is_zero_elem()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.wrap(self.poly.add_ref(&rhs.poly))
    }
    fn neg_ref(&self) -> Self {
        QuotElem { quotient: Arc::clone(&self.quotient), poly: self.poly.neg_ref() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.wrap(self.poly.mul_ref(&rhs.poly))
    }
    fn scale(&self, k: &BigInt) -> Self {
        self.wrap(self.poly.scale(k))
    }
}

impl fmt::Debug for QuotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.quotient.presentation.show(&self.poly))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::LaurentPolynomial;

    #[test]
    fn parser_handles_juxtaposition_powers_and_parens() {
        let names = vec!["a".to_string(), "b".to_string()];
        let p = NcPoly::parse("2 a^2 b - (a - b)*b + 1", &names).unwrap();
        let mut q = NcPoly::word(vec![0, 0, 1], 2);
        q.add_term(vec![0, 1], BigInt::from(-1));
        q.add_term(vec![1, 1], BigInt::from(1));
        q.add_term(vec![], BigInt::from(1));
        assert_eq!(p, q);
        assert_eq!(NcPoly::parse("a*c", &names), Err(HomError::UnknownGenerator("c".into())));
    }

    #[test]
    fn toeplitz_relation_into_laurent_ring() {
        let tau = AlgebraPresentation::toeplitz();
        let good = AlgebraHom::new(&tau, vec![("alpha", LaurentPolynomial::t()), ("beta", LaurentPolynomial::t_inv())]).unwrap();
        assert!(check_hom(&good).valid);
        let bad = AlgebraHom::new(&tau, vec![("alpha", LaurentPolynomial::t()), ("beta", LaurentPolynomial::t())]).unwrap();
        let v = check_hom(&bad);
        assert!(!v.valid);
        assert_eq!(v.failing.unwrap().image, "t^2 - 1");
        let missing = AlgebraHom::new(&tau, vec![("alpha", LaurentPolynomial::t())]);
        assert_eq!(missing.unwrap_err(), HomError::MissingImage("beta".into()));
        let unknown = AlgebraHom::new(&tau, vec![("gamma", LaurentPolynomial::t())]);
        assert_eq!(unknown.unwrap_err(), HomError::UnknownGenerator("gamma".into()));
    }

    #[test]
    fn identity_hom_is_valid_on_quotient() {
        let pres = AlgebraPresentation::new(&["x", "y"], &["x*x - x", "y*y"]).unwrap();
        let q = NcQuotient::new(pres, 5);
        assert!(check_hom(&q.identity_hom()).valid);
        let x = q.gen("x").unwrap();
        assert_eq!(x.pow(4), x);
        let y = q.gen("y").unwrap();
        assert!(y.mul_ref(&y).is_zero_elem());
        assert!(!x.mul_ref(&y).is_zero_elem());
    }

    #[test]
    fn truncated_ideal_contains_consequences() {
        let pres = AlgebraPresentation::new(&["x"], &["x^3 - x"]).unwrap();
        let q = NcQuotient::new(pres.clone(), 6);
        assert!(q.in_ideal(&pres.parse("x^5 - x").unwrap()));
        assert!(!q.in_ideal(&pres.parse("x^2 - x").unwrap()));
    }

    #[test]
    fn inhomogeneous_relation_is_rejected() {
        let pres = AlgebraPresentation::new(&["x"], &["x^2 - x"]).unwrap();
        assert!(matches!(pres.with_degrees(&[1]), Err(HomError::Inhomogeneous(_))));
    }
}
