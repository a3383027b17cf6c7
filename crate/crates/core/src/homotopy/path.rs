use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use super::{Coordinates, ElementaryHomotopy};
use crate::power::{PowerRing, PowerRingElement};
use crate::rings::{AlgebraHom, IntPolynomial, Ring, UPoly};
use crate::simplicial::{iterated_subdivision, standard_simplex, FiniteSimplicialSet, NormalForm, SimplexRef, SimplicialError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("expected {expected} pieces, got {got}")]
    PieceCount { expected: usize, got: usize },
    #[error("pieces {0} and {1} disagree at their shared vertex on generator {2}")]
    EndpointMismatch(usize, usize, String),
    #[error("end of the first path differs from the start of the second on generator {0}")]
    ConcatMismatch(String),
    #[error("coordinate {key} of the image of {generator} is not a compatible family")]
    NotCompatible { generator: String, key: String },
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

/// The edges of `sd^n Δ^1` in order from the vertex over `0` to the vertex
/// over `1`, each flagged with whether its own orientation agrees.
#[derive(Debug)]
pub struct IntervalWalk {
    pub level: usize,
    pub complex: Arc<FiniteSimplicialSet>,
    pub vertices: Vec<SimplexRef>,
    pub edges: Vec<(SimplexRef, bool)>,
}

pub fn interval_walk(level: usize) -> Result<IntervalWalk, SimplicialError> {
    let (k, h) = iterated_subdivision(&Arc::new(standard_simplex(1)), level)?;
    let start = k
        .simplices_of_dim(0)
        .find(|v| *h.image(*v) == NormalForm::nondegenerate(SimplexRef { dim: 0, idx: 0 }))
        .expect("a vertex lies over 0");
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut used = vec![false; k.count(1)];
    let mut cur = start;
    while let Some(e) = k.simplices_of_dim(1).find(|e| {
        !used[e.idx] && (k.face(*e, 0).simplex == cur || k.face(*e, 1).simplex == cur)
    }) {
        used[e.idx] = true;
        let forward = k.face(e, 1).simplex == cur;
        cur = k.face(e, if forward { 0 } else { 1 }).simplex;
        edges.push((e, forward));
        vertices.push(cur);
    }
    Ok(IntervalWalk { level, complex: k, vertices, edges })
}

/// A zigzag of elementary homotopies indexed by the edges of `sd^n Δ^1`.
///
/// Pieces are stored in walk direction (`t = 0` at the earlier vertex); the
/// piece on a backwards edge is read through `t -> 1 - t`.
#[derive(Clone, Debug)]
pub struct SubdividedPath<R: Ring> {
    walk: Arc<IntervalWalk>,
    pieces: Vec<ElementaryHomotopy<R>>,
}

impl<R: Ring> SubdividedPath<R> {
    pub fn new(level: usize, pieces: Vec<ElementaryHomotopy<R>>) -> Result<Self, PathError> {
        let walk = Arc::new(interval_walk(level)?);
        if pieces.len() != walk.edges.len() {
            return Err(PathError::PieceCount { expected: walk.edges.len(), got: pieces.len() });
        }
        let p = SubdividedPath { walk, pieces };
        if let Some((i, gen)) = p.first_mismatch() {
            return Err(PathError::EndpointMismatch(i, i + 1, gen));
        }
        Ok(p)
    }

    pub fn constant(level: usize, f: &AlgebraHom<R>) -> Result<Self, PathError> {
        Self::new(level, vec![ElementaryHomotopy::constant(f); 1 << level])
    }

    pub fn level(&self) -> usize {
        self.walk.level
    }

    pub fn walk(&self) -> &IntervalWalk {
        &self.walk
    }

    pub fn pieces(&self) -> &[ElementaryHomotopy<R>] {
        &self.pieces
    }

    /// The piece on edge `i` in that edge's own coordinate.
    pub fn edge_piece(&self, i: usize) -> ElementaryHomotopy<R> {
        if self.walk.edges[i].1 {
            self.pieces[i].clone()
        } else {
            self.pieces[i].reversed()
        }
    }

    pub fn start(&self) -> AlgebraHom<R> {
        self.pieces[0].ev0()
    }

    pub fn end(&self) -> AlgebraHom<R> {
        self.pieces.last().expect("nonempty").ev1()
    }

    fn first_mismatch(&self) -> Option<(usize, String)> {
        self.pieces.windows(2).enumerate().find_map(|(i, w)| w[0].ev1().first_difference(&w[1].ev0()).map(|g| (i, g)))
    }

    pub fn reverse(&self) -> Self {
        let pieces = self.pieces.iter().rev().map(|h| h.reversed()).collect();
        SubdividedPath { walk: Arc::clone(&self.walk), pieces }
    }

    /// Re-expressed on `sd^level Δ^1` by padding each piece with constant pieces.
    pub fn refine(&self, level: usize) -> Result<Self, PathError> {
        assert!(level >= self.level());
        let factor = 1usize << (level - self.level());
        let mut pieces = Vec::new();
        for h in &self.pieces {
            pieces.push(h.clone());
            let c = ElementaryHomotopy::constant(&h.ev1());
            pieces.extend(std::iter::repeat(c).take(factor - 1));
        }
        Self::new(level, pieces)
    }

    /// `self` followed by `other`, on `sd^{max+1} Δ^1`.
    pub fn concat(&self, other: &Self) -> Result<Self, PathError> {
        if let Some(g) = self.end().first_difference(&other.start()) {
            return Err(PathError::ConcatMismatch(g));
        }
        let level = self.level().max(other.level());
        let mut pieces = self.refine(level)?.pieces;
        pieces.extend(other.refine(level)?.pieces);
        Self::new(level + 1, pieces)
    }
}

impl<R: Ring + Coordinates> SubdividedPath<R> {
    /// For each generator and each coordinate of the target, the family of
    /// edge polynomials and vertex values on `sd^n Δ^1`.
    pub fn power_components(&self) -> Vec<(String, String, PowerRingElement)> {
        let k = &self.walk.complex;
        let gens = self.pieces[0].hom.source.generators.clone();
        let mut out = Vec::new();
        for (gi, gen) in gens.iter().enumerate() {
            // coordinate key -> per-edge polynomial, per-vertex value
            let mut edge_polys: BTreeMap<String, BTreeMap<SimplexRef, IntPolynomial>> = BTreeMap::new();
            let mut vertex_vals: BTreeMap<String, BTreeMap<SimplexRef, IntPolynomial>> = BTreeMap::new();
            for (i, (e, _)) in self.walk.edges.iter().enumerate() {
                let piece: UPoly<R> = self.edge_piece(i).hom.images[gi].clone();
                for (deg, c) in piece.coeffs() {
                    for (key, v) in c.coordinates() {
                        let p = edge_polys.entry(key).or_default().entry(*e).or_insert_with(IntPolynomial::zero);
                        *p = &*p + &IntPolynomial::monomial(vec![*deg], v);
                    }
                }
                let left = if i == 0 { Some((self.walk.vertices[0], self.pieces[0].hom.images[gi].ev0())) } else { None };
                let right = (self.walk.vertices[i + 1], self.pieces[i].hom.images[gi].ev1());
                for (v, val) in left.into_iter().chain(std::iter::once(right)) {
                    for (key, c) in val.coordinates() {
                        vertex_vals.entry(key.clone()).or_default().insert(v, IntPolynomial::constant(c));
                        edge_polys.entry(key).or_default();
                    }
                }
            }
            for (key, edges) in edge_polys {
                let verts = vertex_vals.remove(&key).unwrap_or_default();
                let elem = PowerRingElement::from_fn(k, |r| {
                    let src = if r.dim == 0 { &verts } else { &edges };
                    src.get(&r).cloned().unwrap_or_else(IntPolynomial::zero)
                });
                out.push((gen.clone(), key, elem));
            }
        }
        out
    }

    /// Checks that every coordinate family is an element of `Z^{sd^n Δ^1}`.
    pub fn as_power_hom(&self) -> Result<Vec<(String, String, PowerRingElement)>, PathError> {
        let comps = self.power_components();
        let degree = comps.iter().filter_map(|(_, _, e)| e.degree()).max().unwrap_or(0).max(1);
        let ring = PowerRing::compute(Arc::clone(&self.walk.complex), degree, &[]);
        for (g, key, e) in &comps {
            if !e.is_compatible(&self.walk.complex) || !ring.contains(e) {
                return Err(PathError::NotCompatible { generator: g.clone(), key: key.clone() });
            }
        }
        Ok(comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::AlgebraPresentation;

    fn pres() -> AlgebraPresentation {
        AlgebraPresentation::new(&["x"], &[]).unwrap()
    }

    fn x() -> IntPolynomial {
        IntPolynomial::var(0)
    }

    fn scaling() -> ElementaryHomotopy<IntPolynomial> {
        ElementaryHomotopy::new(AlgebraHom::new(&pres(), vec![("x", UPoly::monomial(1, x()))]).unwrap())
    }

    #[test]
    fn walks_cover_the_interval() {
        for n in 0..=4 {
            let w = interval_walk(n).unwrap();
            assert_eq!(w.edges.len(), 1 << n);
            assert_eq!(w.vertices.len(), (1 << n) + 1);
        }
        let w = interval_walk(1).unwrap();
        // {0} -> {01} <- {1}: the second edge runs backwards
        assert_eq!(w.edges.iter().map(|e| e.1).collect::<Vec<_>>(), vec![true, false]);
    }

    #[test]
    fn constant_concatenation() {
        let f = AlgebraHom::new(&pres(), vec![("x", x())]).unwrap();
        let c = SubdividedPath::constant(0, &f).unwrap();
        let cc = c.concat(&c).unwrap();
        assert_eq!(cc.level(), 1);
        assert!(cc.pieces().iter().all(|h| h.ev0().first_difference(&f).is_none() && h.ev1().first_difference(&f).is_none()));
        assert!(cc.as_power_hom().is_ok());
    }

    #[test]
    fn there_and_back() {
        let p = SubdividedPath::new(0, vec![scaling()]).unwrap();
        let loop_ = p.concat(&p.reverse()).unwrap();
        assert!(loop_.start().first_difference(&loop_.end()).is_none());
        assert!(loop_.as_power_hom().is_ok());
    }

    #[test]
    fn zigzag_of_two_homotopies() {
        // 0 ~> id, then id ~> 0 on the backwards edge of sd Δ^1
        let p = SubdividedPath::new(1, vec![scaling(), scaling().reversed()]).unwrap();
        let comps = p.as_power_hom().unwrap();
        assert!(!comps.is_empty());
        let bad = SubdividedPath::new(1, vec![scaling(), scaling()]);
        assert!(matches!(bad, Err(PathError::EndpointMismatch(0, 1, _))));
    }

    #[test]
    fn power_membership_matches_endpoint_matching() {
        let p = SubdividedPath { walk: Arc::new(interval_walk(1).unwrap()), pieces: vec![scaling(), scaling()] };
        assert!(p.first_mismatch().is_some());
        assert!(p.as_power_hom().is_err());
        let q = SubdividedPath { walk: Arc::new(interval_walk(1).unwrap()), pieces: vec![scaling(), scaling().reversed()] };
        assert!(q.first_mismatch().is_none());
        assert!(q.as_power_hom().is_ok());
    }
}
