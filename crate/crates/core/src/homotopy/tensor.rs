//! Rings free as abelian groups, their truncated tensor algebras `T(A)`,
//! the ideal `J(A) = ker(T(A) -> A)` and classifying maps of additively split
//! extensions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lattice::{integer_kernel, SparseRow};
use crate::rings::{Ring, UPoly};

/// A ring structure on `Z^n` given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureRing {
    pub names: Vec<String>,
    /// `table[i][j]` = coordinates of `e_i e_j`
    table: Vec<Vec<Vec<BigInt>>>,
    unit: Option<Vec<BigInt>>,
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|x| BigInt::from(*x)).collect()
}

impl StructureRing {
    pub fn new(names: &[&str], table: Vec<Vec<Vec<i64>>>, unit: Option<Vec<i64>>) -> Arc<Self> {
        let n = names.len();
        assert!(table.len() == n && table.iter().all(|r| r.len() == n && r.iter().all(|c| c.len() == n)));
        let r = StructureRing {
            names: names.iter().map(|s| s.to_string()).collect(),
            table: table.into_iter().map(|row| row.into_iter().map(|c| ints(&c)).collect()).collect(),
            unit: unit.map(|u| ints(&u)),
        };
        assert!(r.is_associative(), "structure constants are not associative");
        Arc::new(r)
    }

    /// `Z` with basis `x = 1`.
    pub fn integers() -> Arc<Self> {
        Self::new(&["x"], vec![vec![vec![1]]], Some(vec![1]))
    }

    /// `Z[x]/(x^n)` with basis `1, x, ..., x^{n-1}`.
    pub fn truncated_polynomials(n: usize) -> Arc<Self> {
        let names: Vec<String> = (0..n).map(|i| match i { 0 => "1".into(), 1 => "x".into(), _ => format!("x^{}", i) }).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| i64::from(i + j == k)).collect()).collect())
            .collect();
        let mut unit = vec![0; n];
        unit[0] = 1;
        Self::new(&refs, table, Some(unit))
    }

    /// `Z x Z` with orthogonal idempotents `e1, e2`.
    pub fn product_of_integers() -> Arc<Self> {
        Self::new(&["e1", "e2"], vec![vec![vec![1, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 1]]], Some(vec![1, 1]))
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    fn mul_coords(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.rank();
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..n {
                    out[k] += &ab * &self.table[i][j][k];
                }
            }
        }
        out
    }

    fn is_associative(&self) -> bool {
        let n = self.rank();
        let e = |i: usize| {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::one();
            v
        };
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.mul_coords(&self.mul_coords(&e(i), &e(j)), &e(k)) == self.mul_coords(&e(i), &self.mul_coords(&e(j), &e(k)))
                })
            })
        })
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> RingElem {
        let mut coords = vec![BigInt::zero(); self.rank()];
        coords[i] = BigInt::one();
        RingElem { ring: Arc::clone(self), coords }
    }

    pub fn zero(self: &Arc<Self>) -> RingElem {
        RingElem { ring: Arc::clone(self), coords: vec![BigInt::zero(); self.rank()] }
    }

    pub fn elem(self: &Arc<Self>, coords: &[i64]) -> RingElem {
        assert_eq!(coords.len(), self.rank());
        RingElem { ring: Arc::clone(self), coords: ints(coords) }
    }
}

#[derive(Clone)]
pub struct RingElem {
    ring: Arc<StructureRing>,
    coords: Vec<BigInt>,
}

impl RingElem {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn ring(&self) -> &Arc<StructureRing> {
        &self.ring
    }
}

impl PartialEq for RingElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(&self.ring.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| if c.is_one() { n.clone() } else { format!("{}*{}", c, n) })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Ring for RingElem {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }
    fn one_like(&self) -> Self {
        let u = self.ring.unit.clone().expect("ring has no unit");
        RingElem { ring: Arc::clone(&self.ring), coords: u }
    }
    fn is_zero_elem(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        RingElem { ring: Arc::clone(&self.ring), coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
    fn neg_ref(&self) -> Self {
        RingElem { ring: Arc::clone(&self.ring), coords: self.coords.iter().map(|a| -a).collect() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        RingElem { ring: Arc::clone(&self.ring), coords: self.ring.mul_coords(&self.coords, &rhs.coords) }
    }
    fn scale(&self, k: &BigInt) -> Self {
        RingElem { ring: Arc::clone(&self.ring), coords: self.coords.iter().map(|a| a * k).collect() }
    }
}

impl super::Coordinates for RingElem {
    fn coordinates(&self) -> BTreeMap<String, BigInt> {
        self.coords.iter().zip(&self.ring.names).filter(|(c, _)| !c.is_zero()).map(|(c, n)| (n.clone(), c.clone())).collect()
    }
}

/// `Σ c_w e_{w_1} ⊗ ... ⊗ e_{w_n}`, words of length `>= 1`.
pub type TensorElem = BTreeMap<Vec<usize>, BigInt>;

pub fn show_tensor(a: &StructureRing, x: &TensorElem) -> String {
    let mut s = String::new();
    for (w, c) in x.iter().rev() {
        let body = w.iter().map(|i| a.names[*i].as_str()).collect::<Vec<_>>().join("(x)");
        let neg = c < &BigInt::zero();
        let mag = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            s.push_str(&format!("{}*", mag));
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// `T(A)` truncated at tensor degree `d`.
#[derive(Clone, Debug)]
pub struct TruncatedTensorAlgebra {
    pub base: Arc<StructureRing>,
    pub degree: usize,
    /// all words, longest first
    pub words: Vec<Vec<usize>>,
}

fn words_of_length(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out.into_iter().flat_map(|w| (0..k).map(move |g| { let mut w2 = w.clone(); w2.push(g); w2 })).collect();
    }
    out
}

pub fn tensor_algebra(base: &Arc<StructureRing>, degree: usize) -> TruncatedTensorAlgebra {
    assert!(degree >= 1);
    let words = (1..=degree).rev().flat_map(|n| words_of_length(base.rank(), n)).collect();
    TruncatedTensorAlgebra { base: Arc::clone(base), degree, words }
}

impl TruncatedTensorAlgebra {
    /// Graded pieces `A^{⊗n}`, `n = 1..=d`, by basis words.
    pub fn component(&self, n: usize) -> Vec<Vec<usize>> {
        words_of_length(self.base.rank(), n)
    }

    /// The multiplication map `η_A: T(A) -> A`.
    pub fn eta(&self, x: &TensorElem) -> RingElem {
        let mut out = self.base.zero();
        for (w, c) in x {
            let mut prod = self.base.basis_element(w[0]);
            for i in &w[1..] {
                prod = prod.mul_ref(&self.base.basis_element(*i));
            }
            out = out.add_ref(&prod.scale(c));
        }
        out
    }

    /// Concatenation product; words beyond the degree bound are dropped.
    pub fn mul(&self, x: &TensorElem, y: &TensorElem) -> TensorElem {
        let mut out = TensorElem::new();
        for (u, a) in x {
            for (v, b) in y {
                if u.len() + v.len() > self.degree {
                    continue;
                }
                let mut w = u.clone();
                w.extend(v);
                *out.entry(w).or_default() += a * b;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// A basis of `J(A)` in degrees `<= d`, in Hermite normal form over the
    /// word order (longest words first).
    pub fn j_basis(&self) -> Vec<TensorElem> {
        let idx: BTreeMap<&Vec<usize>, usize> = self.words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut rows: Vec<SparseRow> = vec![SparseRow::new(); self.base.rank()];
        for w in &self.words {
            let img = self.eta(&TensorElem::from([(w.clone(), BigInt::one())]));
            for (b, c) in img.coords().iter().enumerate() {
                if !c.is_zero() {
                    rows[b].insert(idx[w], c.clone());
                }
            }
        }
        let ker = integer_kernel(&rows, self.words.len());
        ker.basis()
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.words[i].clone(), c.clone())).collect())
            .collect()
    }
}

/// `A ◁ B ↠ C` with an additive section `s` given on the basis of `C`;
/// `project` gives the coordinates of the image in `C`.
#[derive(Clone)]
pub struct Extension<R: Ring> {
    pub quotient: Arc<StructureRing>,
    pub section: Vec<R>,
    pub project: Arc<dyn Fn(&R) -> Vec<BigInt> + Send + Sync>,
}

#[derive(Clone, Debug)]
pub struct ClassifyingMap<R: Ring> {
    pub j_basis: Vec<TensorElem>,
    pub images: Vec<R>,
    pub section_ok: bool,
    /// the image of each basis element lies in the kernel `A`
    pub in_kernel: Vec<bool>,
}

impl<R: Ring> ClassifyingMap<R> {
    pub fn pass(&self) -> bool {
        self.section_ok && self.in_kernel.iter().all(|b| *b)
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|x| x.is_zero_elem())
    }
}

impl<R: Ring> Extension<R> {
    pub fn section_is_split(&self) -> bool {
        self.section.iter().enumerate().all(|(i, s)| {
            let p = (self.project)(s);
            p.iter().enumerate().all(|(j, c)| *c == BigInt::from(u8::from(i == j)))
        })
    }

    pub fn section_is_multiplicative(&self) -> bool {
        let c = &self.quotient;
        (0..c.rank()).all(|i| {
            (0..c.rank()).all(|j| {
                let prod = c.basis_element(i).mul_ref(&c.basis_element(j));
                let lifted = self.lift(prod.coords());
                lifted == self.section[i].mul_ref(&self.section[j])
            })
        })
    }

    fn lift(&self, coords: &[BigInt]) -> R {
        let mut out = self.section[0].zero_like();
        for (s, c) in self.section.iter().zip(coords) {
            out = out.add_ref(&s.scale(c));
        }
        out
    }

    /// Extends the section multiplicatively over tensor words and restricts
    /// to `J(C)` in degrees `<= d`.
    pub fn classifying_map(&self, d: usize) -> ClassifyingMap<R> {
        let t = tensor_algebra(&self.quotient, d);
        let j_basis = t.j_basis();
        let images: Vec<R> = j_basis.iter().map(|x| self.apply(x)).collect();
        let in_kernel = images.iter().map(|y| (self.project)(y).iter().all(|c| c.is_zero())).collect();
        ClassifyingMap { j_basis, images, section_ok: self.section_is_split(), in_kernel }
    }

    pub fn apply(&self, x: &TensorElem) -> R {
        let mut out = self.section[0].zero_like();
        for (w, c) in x {
            let mut prod = self.section[w[0]].clone();
            for i in &w[1..] {
                prod = prod.mul_ref(&self.section[*i]);
            }
            out = out.add_ref(&prod.scale(c));
        }
        out
    }
}

/// The loop extension `ΩA ◁ PA ↠ A` with `PA = tA[t]`, `ev_1`, and section `a -> t a`.
pub fn loop_extension(a: &Arc<StructureRing>) -> Extension<UPoly<RingElem>> {
    let section = (0..a.rank()).map(|i| UPoly::monomial(1, a.basis_element(i))).collect();
    Extension { quotient: Arc::clone(a), section, project: Arc::new(|p: &UPoly<RingElem>| p.ev1().coords().to_vec()) }
}

/// The classifying map `ρ_A: J(A) -> ΩA` of the loop extension.
pub fn loop_rho(a: &Arc<StructureRing>, d: usize) -> ClassifyingMap<UPoly<RingElem>> {
    loop_extension(a).classifying_map(d)
}

/// Checks `f^{Ω} ρ_A = ρ_B J(f)` on the basis of `J(A)` in degrees `<= d` for a
/// ring map `f: A -> B` given on basis elements.
pub fn loop_naturality(a: &Arc<StructureRing>, b: &Arc<StructureRing>, f: &[RingElem], d: usize) -> bool {
    let fa = |x: &RingElem| {
        let mut out = b.zero();
        for (i, c) in x.coords().iter().enumerate() {
            out = out.add_ref(&f[i].scale(c));
        }
        out
    };
    let rho_a = loop_extension(a);
    let rho_b = loop_extension(b);
    let ta = tensor_algebra(a, d);
    ta.j_basis().iter().all(|x| {
        let route1 = rho_a.apply(x).map_coeffs(&b.zero(), fa);
        // J(f) expands each tensor factor in the basis of B
        let mut jf = TensorElem::new();
        for (w, c) in x {
            let mut partial: Vec<(Vec<usize>, BigInt)> = vec![(vec![], c.clone())];
            for i in w {
                let mut next = Vec::new();
                for (pw, pc) in &partial {
                    for (j, fc) in f[*i].coords().iter().enumerate() {
                        if !fc.is_zero() {
                            let mut w2 = pw.clone();
                            w2.push(j);
                            next.push((w2, pc * fc));
                        }
                    }
                }
                partial = next;
            }
            for (w2, c2) in partial {
                *jf.entry(w2).or_default() += c2;
            }
        }
        jf.retain(|_, c| !c.is_zero());
        let route2 = if jf.is_empty() { UPoly::zero(&b.zero()) } else { rho_b.apply(&jf) };
        route1 == route2
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_t(coeffs: &[i64]) -> UPoly<RingElem> {
        let z = StructureRing::integers();
        UPoly::from_coeffs(coeffs.iter().map(|c| z.elem(&[*c])).collect())
    }

    #[test]
    fn tensor_algebra_of_integers() {
        let z = StructureRing::integers();
        let t = tensor_algebra(&z, 3);
        assert_eq!(t.words, vec![vec![0, 0, 0], vec![0, 0], vec![0]]);
        for w in &t.words {
            assert_eq!(t.eta(&TensorElem::from([(w.clone(), BigInt::one())])), z.basis_element(0));
        }
        let j2 = tensor_algebra(&z, 2).j_basis();
        assert_eq!(j2.len(), 1);
        assert_eq!(show_tensor(&z, &j2[0]), "x(x)x - x");
        assert_eq!(t.j_basis().len(), 2);
    }

    #[test]
    fn eta_is_multiplicative() {
        let a = StructureRing::truncated_polynomials(3);
        let t = tensor_algebra(&a, 4);
        let x = TensorElem::from([(vec![1], BigInt::one()), (vec![0, 2], BigInt::from(2))]);
        let y = TensorElem::from([(vec![1, 1], BigInt::one()), (vec![2], BigInt::from(-1))]);
        assert_eq!(t.eta(&t.mul(&x, &y)), t.eta(&x).mul_ref(&t.eta(&y)));
    }

    #[test]
    fn loop_classifying_map_of_integers() {
        let z = StructureRing::integers();
        let rho = loop_rho(&z, 3);
        assert!(rho.pass());
        let z3 = tensor_algebra(&z, 3);
        let by_word: BTreeMap<usize, UPoly<RingElem>> =
            rho.j_basis.iter().zip(&rho.images).map(|(j, img)| (j.keys().map(|w| w.len()).max().unwrap(), img.clone())).collect();
        assert_eq!(by_word[&2], x_t(&[0, -1, 1]));
        assert_eq!(by_word[&3], x_t(&[0, -1, 0, 1]));
        assert_eq!(z3.j_basis().len(), 2);
    }

    #[test]
    fn multiplicative_sections_classify_to_zero() {
        let b = StructureRing::product_of_integers();
        let ext = Extension {
            quotient: StructureRing::integers(),
            section: vec![b.basis_element(1)],
            project: Arc::new(|r: &RingElem| vec![r.coords()[1].clone()]),
        };
        assert!(ext.section_is_multiplicative());
        let xi = ext.classifying_map(4);
        assert!(xi.pass());
        assert!(xi.is_zero());
    }

    #[test]
    fn naturality_for_the_unit_map() {
        let z = StructureRing::integers();
        let b = StructureRing::truncated_polynomials(3);
        assert!(loop_naturality(&z, &b, &[b.basis_element(0)], 3));
        // an endomorphism of Z[x]/(x^3): x -> -x
        let f = vec![b.elem(&[1, 0, 0]), b.elem(&[0, -1, 0]), b.elem(&[0, 0, 1])];
        assert!(loop_naturality(&b, &b, &f, 2));
    }
}

/// JSON form of an extension between structure-constant rings: the section
/// as coordinate vectors in `B` and the projection `B -> C` as a matrix.
#[derive(Clone, Debug, serde::Deserialize, serde::Serialize)]
pub struct ExtensionInput {
    pub middle: RingInput,
    pub quotient: RingInput,
    pub section: Vec<Vec<i64>>,
    /// `projection[i]` = coordinates in `C` of the `i`-th basis element of `B`
    pub projection: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, serde::Deserialize, serde::Serialize)]
pub struct RingInput {
    pub names: Vec<String>,
    pub table: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    pub unit: Option<Vec<i64>>,
}

impl RingInput {
    pub fn build(&self) -> Result<Arc<StructureRing>, String> {
        let n = self.names.len();
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(format!("multiplication table must be {n} x {n} x {n}"));
        }
        if self.unit.as_ref().is_some_and(|u| u.len() != n) {
            return Err("unit has the wrong length".into());
        }
        let refs: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        std::panic::catch_unwind(|| StructureRing::new(&refs, self.table.clone(), self.unit.clone()))
            .map_err(|_| "structure constants are not associative".to_string())
    }
}

impl ExtensionInput {
    pub fn build(&self) -> Result<Extension<RingElem>, String> {
        let b = self.middle.build()?;
        let c = self.quotient.build()?;
        if self.section.len() != c.rank() || self.section.iter().any(|s| s.len() != b.rank()) {
            return Err("section needs one vector in B per basis element of C".into());
        }
        if self.projection.len() != b.rank() || self.projection.iter().any(|p| p.len() != c.rank()) {
            return Err("projection needs one vector in C per basis element of B".into());
        }
        let proj: Vec<Vec<BigInt>> = self.projection.iter().map(|r| ints(r)).collect();
        let rank_c = c.rank();
        let project = move |x: &RingElem| {
            let mut out = vec![BigInt::zero(); rank_c];
            for (coef, row) in x.coords().iter().zip(&proj) {
                for (o, p) in out.iter_mut().zip(row) {
                    *o += coef * p;
                }
            }
            out
        };
        Ok(Extension { quotient: c, section: self.section.iter().map(|s| b.elem(s)).collect(), project: Arc::new(project) })
    }
}
