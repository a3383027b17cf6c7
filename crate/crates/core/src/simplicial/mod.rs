//! Finite simplicial sets stored through their nondegenerate simplices.
//!
//! A simplex of `K` is written `y ∘ S` with `y` nondegenerate and `S` a
//! monotone surjection `[n] -> [dim y]` (Eilenberg-Zilber normal form). Face
//! and degeneracy words only appear at the file boundary; internally every
//! operator is a monotone map `[p] -> [n]` stored as its value list.

mod io;
mod iso;
mod map;
mod product;
mod quotient;
mod subdivide;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use io::{load_simplicial, parse_simplicial, SimplicialFile};
pub use iso::{find_isomorphism, is_isomorphic};
pub use map::SimplicialMap;
pub use product::product;
pub use quotient::quotient;
pub use subdivide::{iterated_subdivision, subdivide, subdivided_subcomplex};

/// Monotone map `[p] -> [n]` as the list of its values.
pub type Monotone = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("face of `{simplex}` refers to unknown simplex `{face}`")]
    DanglingFace { simplex: String, face: String },
    #[error("simplex `{0}` has the wrong number of faces")]
    WrongFaceCount(String),
    #[error("face {index} of `{simplex}`: degeneracy word {word:?} is not a valid normal form")]
    BadDegeneracyWord { simplex: String, index: usize, word: Vec<usize> },
    #[error("face {index} of `{simplex}` has the wrong dimension")]
    DimensionMismatch { simplex: String, index: usize },
    #[error("simplicial identity d_{i} d_{j} = d_{j_minus_1} d_{i} fails on `{simplex}`", j_minus_1 = .j - 1)]
    IdentityViolation { simplex: String, i: usize, j: usize },
    #[error("duplicate simplex id `{0}`")]
    DuplicateId(String),
    #[error("unknown simplex `{0}`")]
    UnknownSimplex(String),
    #[error("boundary of the 0-simplex is empty")]
    EmptyBoundary,
    #[error("not a subcomplex: a face of `{0}` is missing")]
    NotSubcomplex(String),
    #[error("cannot collapse an empty subcomplex")]
    EmptySubcomplex,
    #[error("subdivision needs nondegenerate faces, `{0}` has a degenerate one")]
    DegenerateFace(String),
    #[error("map does not commute with face {index} of `{simplex}`")]
    NotSimplicial { simplex: String, index: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// A simplex in normal form: `simplex ∘ surj` with `simplex` nondegenerate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    pub surj: Monotone,
    pub simplex: SimplexRef,
}

impl NormalForm {
    pub fn nondegenerate(simplex: SimplexRef) -> Self {
        NormalForm { surj: (0..=simplex.dim).collect(), simplex }
    }

    /// Dimension of the (possibly degenerate) simplex.
    pub fn dim(&self) -> usize {
        self.surj.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.surj.len() != self.simplex.dim + 1
    }

    /// Strictly decreasing degeneracy word `j_1 > ... > j_k` with
    /// `x = s_{j_1} ... s_{j_k} y`.
    pub fn degeneracy_word(&self) -> Vec<usize> {
        surjection_to_word(&self.surj)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub dim: usize,
    pub idx: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub name: String,
    /// `faces[i] = d_i` of this simplex; empty for vertices.
    pub faces: Vec<NormalForm>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    levels: Vec<Vec<Simplex>>,
    names: HashMap<String, SimplexRef>,
    basepoint: Option<SimplexRef>,
}

/// Surjection `[n] -> [m]` repeating exactly at the positions of the word.
pub fn word_to_surjection(word: &[usize], n: usize) -> Option<Monotone> {
    if word.windows(2).any(|w| w[0] <= w[1]) || word.iter().any(|j| *j + 1 > n) {
        return None;
    }
    let mut s = vec![0; n + 1];
    for j in 0..n {
        s[j + 1] = s[j] + usize::from(!word.contains(&j));
    }
    Some(s)
}

pub fn surjection_to_word(s: &[usize]) -> Vec<usize> {
    (0..s.len().saturating_sub(1)).rev().filter(|j| s[*j] == s[j + 1]).collect()
}

/// The coface `δ_i: [n-1] -> [n]`.
pub fn coface(i: usize, n: usize) -> Monotone {
    (0..n).map(|k| if k < i { k } else { k + 1 }).collect()
}

/// The codegeneracy `σ_j: [n+1] -> [n]`.
pub fn codegeneracy(j: usize, n: usize) -> Monotone {
    (0..=n + 1).map(|k| if k <= j { k } else { k - 1 }).collect()
}

/// `a ∘ b` for monotone maps given as value lists.
pub fn compose(a: &[usize], b: &[usize]) -> Monotone {
    b.iter().map(|k| a[*k]).collect()
}

fn is_surjection_onto(s: &[usize], m: usize) -> bool {
    !s.is_empty() && s[0] == 0 && *s.last().unwrap() == m && s.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
}

impl FiniteSimplicialSet {
    pub(crate) fn empty() -> Self {
        FiniteSimplicialSet { levels: vec![], names: HashMap::new(), basepoint: None }
    }

    /// Appends a nondegenerate simplex of dimension `faces.len() - 1` (or 0).
    pub(crate) fn push(&mut self, name: String, faces: Vec<NormalForm>) -> Result<SimplexRef, SimplicialError> {
        let dim = faces.len().saturating_sub(1);
        if self.names.contains_key(&name) {
            return Err(SimplicialError::DuplicateId(name));
        }
        while self.levels.len() <= dim {
            self.levels.push(vec![]);
        }
        let r = SimplexRef { dim, idx: self.levels[dim].len() };
        self.levels[dim].push(Simplex { name: name.clone(), faces });
        self.names.insert(name, r);
        Ok(r)
    }

    pub(crate) fn set_basepoint(&mut self, r: Option<SimplexRef>) {
        self.basepoint = r;
    }

    pub(crate) fn trim(&mut self) {
        while self.levels.last().map_or(false, |l| l.is_empty()) {
            self.levels.pop();
        }
    }

    pub fn basepoint(&self) -> Option<SimplexRef> {
        self.basepoint
    }

    pub fn with_basepoint(mut self, name: &str) -> Result<Self, SimplicialError> {
        let r = self.lookup(name)?;
        if r.dim != 0 {
            return Err(SimplicialError::Invalid(format!("basepoint `{}` is not a vertex", name)));
        }
        self.basepoint = Some(r);
        Ok(self)
    }

    /// Highest dimension carrying a nondegenerate simplex.
    pub fn dim(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// Dimensions carrying at least one nondegenerate simplex.
    pub fn dims(&self) -> Vec<usize> {
        (0..self.levels.len()).filter(|d| !self.levels[*d].is_empty()).collect()
    }

    pub fn count(&self, dim: usize) -> usize {
        self.levels.get(dim).map_or(0, |l| l.len())
    }

    /// Counts of nondegenerate simplices per dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.levels.iter().enumerate().map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) }).sum()
    }

    pub fn simplex(&self, r: SimplexRef) -> &Simplex {
        &self.levels[r.dim][r.idx]
    }

    pub fn name(&self, r: SimplexRef) -> &str {
        &self.simplex(r).name
    }

    pub fn lookup(&self, name: &str) -> Result<SimplexRef, SimplicialError> {
        self.names.get(name).copied().ok_or_else(|| SimplicialError::UnknownSimplex(name.into()))
    }

    /// All nondegenerate simplices, by dimension then insertion order.
    pub fn simplices(&self) -> impl Iterator<Item = SimplexRef> + '_ {
        self.levels
            .iter()
            .enumerate()
            .flat_map(|(dim, l)| (0..l.len()).map(move |idx| SimplexRef { dim, idx }))
    }

    pub fn simplices_of_dim(&self, dim: usize) -> impl Iterator<Item = SimplexRef> {
        (0..self.count(dim)).map(move |idx| SimplexRef { dim, idx })
    }

    pub fn face(&self, r: SimplexRef, i: usize) -> &NormalForm {
        &self.simplex(r).faces[i]
    }

    /// Normal form of `x ∘ θ` for a nondegenerate `x` and monotone `θ`.
    pub fn apply(&self, x: SimplexRef, theta: &[usize]) -> NormalForm {
        let m = x.dim;
        if is_surjection_onto(theta, m) {
            return NormalForm { surj: theta.to_vec(), simplex: x };
        }
        let i = (0..=m).find(|k| !theta.contains(k)).expect("non-surjective map misses a vertex");
        let reduced: Monotone = theta.iter().map(|k| if *k > i { k - 1 } else { *k }).collect();
        let f = self.face(x, i);
        self.apply(f.simplex, &compose(&f.surj, &reduced))
    }

    /// Normal form of `y ∘ θ` for an arbitrary normal form `y`.
    pub fn apply_nf(&self, y: &NormalForm, theta: &[usize]) -> NormalForm {
        self.apply(y.simplex, &compose(&y.surj, theta))
    }

    /// `d_i` of a normal form.
    pub fn face_of(&self, y: &NormalForm, i: usize) -> NormalForm {
        self.apply_nf(y, &coface(i, y.dim()))
    }

    /// `s_j` of a normal form.
    pub fn degeneracy_of(&self, y: &NormalForm, j: usize) -> NormalForm {
        NormalForm { surj: compose(&y.surj, &codegeneracy(j, y.dim())), simplex: y.simplex }
    }

    /// Checks references, face dimensions and the identities
    /// `d_i d_j = d_{j-1} d_i` (`i < j`) on every nondegenerate simplex.
    pub fn validate(&self) -> Result<(), SimplicialError> {
        for r in self.simplices() {
            let s = self.simplex(r);
            let expected = if r.dim == 0 { 0 } else { r.dim + 1 };
            if s.faces.len() != expected {
                return Err(SimplicialError::WrongFaceCount(s.name.clone()));
            }
            for (i, f) in s.faces.iter().enumerate() {
                if f.simplex.dim >= self.levels.len() || f.simplex.idx >= self.levels[f.simplex.dim].len() {
                    return Err(SimplicialError::DanglingFace { simplex: s.name.clone(), face: format!("{:?}", f.simplex) });
                }
                if f.dim() + 1 != r.dim || !is_surjection_onto(&f.surj, f.simplex.dim) {
                    return Err(SimplicialError::DimensionMismatch { simplex: s.name.clone(), index: i });
                }
            }
            if r.dim < 2 {
                continue;
            }
            for j in 1..=r.dim {
                for i in 0..j {
                    let lhs = self.face_of(&s.faces[j], i);
                    let rhs = self.face_of(&s.faces[i], j - 1);
                    if lhs != rhs {
                        return Err(SimplicialError::IdentityViolation { simplex: s.name.clone(), i, j });
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustive check of all simplicial identities on degenerate
    /// simplices up to `extra` degeneracies above each nondegenerate one.
    pub fn check_all_identities(&self, extra: usize) -> bool {
        for r in self.simplices() {
            let mut layer = vec![NormalForm::nondegenerate(r)];
            for _ in 0..=extra {
                for y in &layer {
                    if !identities_hold_at(self, y) {
                        return false;
                    }
                }
                let mut next = Vec::new();
                for y in &layer {
                    for j in 0..=y.dim() {
                        let z = self.degeneracy_of(y, j);
                        if !next.contains(&z) {
                            next.push(z);
                        }
                    }
                }
                layer = next;
            }
        }
        true
    }

    /// Whether `names` is closed under faces.
    pub fn is_subcomplex(&self, members: &[SimplexRef]) -> Result<(), SimplicialError> {
        for r in members {
            if r.dim == 0 {
                continue;
            }
            for f in &self.simplex(*r).faces {
                if !members.contains(&f.simplex) {
                    return Err(SimplicialError::NotSubcomplex(self.name(*r).to_string()));
                }
            }
        }
        Ok(())
    }

    pub fn refs(&self, names: &[&str]) -> Result<Vec<SimplexRef>, SimplicialError> {
        names.iter().map(|n| self.lookup(n)).collect()
    }

    /// Smallest subcomplex containing the named simplices.
    pub fn closure(&self, seeds: &[SimplexRef]) -> Vec<SimplexRef> {
        let mut out: Vec<SimplexRef> = Vec::new();
        let mut stack = seeds.to_vec();
        while let Some(r) = stack.pop() {
            if out.contains(&r) {
                continue;
            }
            out.push(r);
            if r.dim > 0 {
                for f in &self.simplex(r).faces {
                    stack.push(f.simplex);
                }
            }
        }
        out.sort();
        out
    }

    /// Whether every nondegenerate simplex has nondegenerate faces.
    pub fn has_nondegenerate_faces(&self) -> bool {
        self.simplices().all(|r| self.simplex(r).faces.iter().all(|f| !f.is_degenerate()))
    }

    /// Disjoint union; names of the second summand get the suffix `'`.
    pub fn disjoint_union(&self, other: &FiniteSimplicialSet) -> FiniteSimplicialSet {
        let mut out = self.clone();
        let shift: Vec<usize> = (0..=other.dim()).map(|d| self.count(d)).collect();
        for r in other.simplices() {
            let s = other.simplex(r);
            let faces = s
                .faces
                .iter()
                .map(|f| NormalForm {
                    surj: f.surj.clone(),
                    simplex: SimplexRef { dim: f.simplex.dim, idx: f.simplex.idx + shift[f.simplex.dim] },
                })
                .collect();
            out.push(format!("{}'", s.name), faces).expect("suffixed names are fresh");
        }
        out
    }
}

fn identities_hold_at(k: &FiniteSimplicialSet, y: &NormalForm) -> bool {
    let n = y.dim();
    // d_i d_j = d_{j-1} d_i for i < j
    for j in 1..=n {
        for i in 0..j {
            if n >= 2 && k.face_of(&k.face_of(y, j), i) != k.face_of(&k.face_of(y, i), j - 1) {
                return false;
            }
        }
    }
    for j in 0..=n {
        let sy = k.degeneracy_of(y, j);
        for i in 0..=n + 1 {
            let lhs = k.face_of(&sy, i);
            let ok = if i < j {
                n >= 1 && lhs == k.degeneracy_of(&k.face_of(y, i), j - 1)
            } else if i == j || i == j + 1 {
                lhs == *y
            } else {
                n >= 1 && lhs == k.degeneracy_of(&k.face_of(y, i - 1), j)
            };
            if !ok {
                return false;
            }
        }
        // s_i s_j = s_{j+1} s_i for i <= j
        for i in 0..=j {
            if k.degeneracy_of(&sy, i) != k.degeneracy_of(&k.degeneracy_of(y, i), j + 1) {
                return false;
            }
        }
    }
    true
}

/// Standard objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Simplex,
    Boundary,
    Circle,
    Point,
}

fn subset_name(s: &[usize]) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("")
}

fn subsets_simplex(n: usize, include_top: bool) -> FiniteSimplicialSet {
    let mut k = FiniteSimplicialSet::empty();
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![vec![]; n + 2];
    for mask in 1u32..(1 << (n + 1)) {
        let s: Vec<usize> = (0..=n).filter(|v| mask & (1 << v) != 0).collect();
        by_size[s.len()].push(s);
    }
    let top = if include_top { n + 1 } else { n };
    for size in 1..=top {
        by_size[size].sort();
        for s in &by_size[size] {
            let faces = if size == 1 {
                vec![]
            } else {
                (0..size)
                    .map(|i| {
                        let mut f = s.clone();
                        f.remove(i);
                        NormalForm::nondegenerate(k.lookup(&subset_name(&f)).expect("faces come first"))
                    })
                    .collect()
            };
            k.push(subset_name(s), faces).expect("distinct subsets");
        }
    }
    k.basepoint = Some(SimplexRef { dim: 0, idx: 0 });
    k
}

/// `Δ^n`, `∂Δ^n`, `S^1 = Δ^1/∂Δ^1` or `Δ^0`. Vertex `0` (or `*`) is the
/// basepoint.
pub fn build_standard(kind: StandardKind, n: usize) -> Result<FiniteSimplicialSet, SimplicialError> {
    match kind {
        StandardKind::Simplex => Ok(subsets_simplex(n, true)),
        StandardKind::Boundary => {
            if n == 0 {
                Err(SimplicialError::EmptyBoundary)
            } else {
                Ok(subsets_simplex(n, false))
            }
        }
        StandardKind::Circle => {
            let mut k = FiniteSimplicialSet::empty();
            let v = k.push("*".into(), vec![])?;
            k.push("e".into(), vec![NormalForm::nondegenerate(v), NormalForm::nondegenerate(v)])?;
            k.basepoint = Some(v);
            Ok(k)
        }
        StandardKind::Point => {
            let mut k = FiniteSimplicialSet::empty();
            let v = k.push("*".into(), vec![])?;
            k.basepoint = Some(v);
            Ok(k)
        }
    }
}

pub fn standard_simplex(n: usize) -> FiniteSimplicialSet {
    subsets_simplex(n, true)
}

pub fn boundary(n: usize) -> FiniteSimplicialSet {
    build_standard(StandardKind::Boundary, n).expect("n >= 1")
}

pub fn circle() -> FiniteSimplicialSet {
    build_standard(StandardKind::Circle, 0).expect("static object")
}

pub fn point() -> FiniteSimplicialSet {
    build_standard(StandardKind::Point, 0).expect("static object")
}

impl fmt::Debug for FiniteSimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FiniteSimplicialSet {:?}", self.counts())?;
        for r in self.simplices() {
            let s = self.simplex(r);
            let faces: Vec<String> = s
                .faces
                .iter()
                .map(|nf| {
                    let w = nf.degeneracy_word();
                    if w.is_empty() {
                        self.name(nf.simplex).to_string()
                    } else {
                        format!("s{:?} {}", w, self.name(nf.simplex))
                    }
                })
                .collect();
            writeln!(f, "  {} [{}]", s.name, faces.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_surjections_round_trip() {
        let s = word_to_surjection(&[3, 1], 4).unwrap();
        assert_eq!(s, vec![0, 1, 1, 2, 2]);
        assert_eq!(surjection_to_word(&s), vec![3, 1]);
        assert!(word_to_surjection(&[1, 3], 4).is_none());
        assert!(word_to_surjection(&[4], 4).is_none());
    }

    #[test]
    fn standard_objects_have_expected_counts() {
        assert_eq!(standard_simplex(2).counts(), vec![3, 3, 1]);
        assert_eq!(boundary(2).counts(), vec![3, 3]);
        let c = circle();
        assert_eq!(c.counts(), vec![1, 1]);
        let e = c.lookup("e").unwrap();
        assert_eq!(c.face(e, 0), c.face(e, 1));
        assert_eq!(point().counts(), vec![1]);
        assert_eq!(build_standard(StandardKind::Boundary, 0), Err(SimplicialError::EmptyBoundary));
    }

    #[test]
    fn identities_hold_on_catalog_objects_with_degeneracies() {
        for k in [standard_simplex(0), standard_simplex(1), standard_simplex(2), standard_simplex(3), boundary(1), boundary(2), boundary(3), circle(), point()] {
            k.validate().unwrap();
            assert!(k.check_all_identities(2), "{:?}", k);
        }
    }

    #[test]
    fn face_of_a_degenerate_simplex() {
        let k = standard_simplex(1);
        let e = NormalForm::nondegenerate(k.lookup("01").unwrap());
        let s0e = k.degeneracy_of(&e, 0);
        assert_eq!(s0e.degeneracy_word(), vec![0]);
        assert_eq!(k.face_of(&s0e, 0), e);
        assert_eq!(k.face_of(&s0e, 2).simplex, k.lookup("0").unwrap());
    }
}
