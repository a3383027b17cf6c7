//! Degree-truncated power rings `Z^K` and `Z^{(K,*)}` of finite simplicial
//! sets, computed as integer kernels of the face-compatibility equations.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::lattice::{integer_kernel, IntVec, Lattice, SparseRow};
use crate::rings::poly::Monomial;
use crate::rings::{monotone_pullback, IntPolynomial, Ring};
use crate::simplicial::{FiniteSimplicialSet, SimplexRef, SimplicialError, SimplicialMap};

/// One polynomial per nondegenerate simplex, `f_x ∈ Z[t_1..t_{dim x}]`.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerRingElement {
    components: Vec<Vec<IntPolynomial>>,
}

impl PowerRingElement {
    pub fn zero(k: &FiniteSimplicialSet) -> Self {
        PowerRingElement { components: k.counts().iter().map(|c| vec![IntPolynomial::zero(); *c]).collect() }
    }

    pub fn constant(k: &FiniteSimplicialSet, c: impl Into<BigInt>) -> Self {
        let c = IntPolynomial::constant(c);
        PowerRingElement { components: k.counts().iter().map(|n| vec![c.clone(); *n]).collect() }
    }

    pub fn from_fn(k: &FiniteSimplicialSet, f: impl Fn(SimplexRef) -> IntPolynomial) -> Self {
        PowerRingElement {
            components: (0..k.counts().len()).map(|d| k.simplices_of_dim(d).map(&f).collect()).collect(),
        }
    }

    pub fn component(&self, r: SimplexRef) -> &IntPolynomial {
        &self.components[r.dim][r.idx]
    }

    pub fn degree(&self) -> Option<u32> {
        self.components.iter().flatten().filter_map(|p| p.degree()).max()
    }

    /// Whether `δ_i^* f_x = S^* f_y` for every face `d_i x = y ∘ S`.
    pub fn is_compatible(&self, k: &FiniteSimplicialSet) -> bool {
        for x in k.simplices() {
            if x.dim == 0 {
                continue;
            }
            for i in 0..=x.dim {
                let face = k.face(x, i);
                let lhs = monotone_pullback(&crate::simplicial::coface(i, x.dim), x.dim).apply(self.component(x));
                let rhs = monotone_pullback(&face.surj, face.simplex.dim).apply(self.component(face.simplex));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Value at a vertex.
    pub fn at_vertex(&self, v: SimplexRef) -> BigInt {
        self.component(v).constant_value().expect("vertex components are constants")
    }

    pub fn display(&self, k: &FiniteSimplicialSet) -> String {
        let parts: Vec<String> = k.simplices().map(|r| format!("{}: {}", k.name(r), self.component(r))).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl Ring for PowerRingElement {
    fn zero_like(&self) -> Self {
        PowerRingElement { components: self.components.iter().map(|l| vec![IntPolynomial::zero(); l.len()]).collect() }
    }
    fn one_like(&self) -> Self {
        PowerRingElement { components: self.components.iter().map(|l| vec![IntPolynomial::one(); l.len()]).collect() }
    }
    fn is_zero_elem(&self) -> bool {
        self.components.iter().flatten().all(|p| p.is_zero())
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a + b)
    }
    fn neg_ref(&self) -> Self {
        PowerRingElement { components: self.components.iter().map(|l| l.iter().map(|p| -p).collect()).collect() }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.zip(rhs, |a, b| a * b)
    }
    fn scale(&self, k: &BigInt) -> Self {
        PowerRingElement { components: self.components.iter().map(|l| l.iter().map(|p| p.scale(k)).collect()).collect() }
    }
}

impl PowerRingElement {
    fn zip(&self, rhs: &Self, f: impl Fn(&IntPolynomial, &IntPolynomial) -> IntPolynomial) -> Self {
        PowerRingElement {
            components: self.components.iter().zip(&rhs.components).map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect()).collect(),
        }
    }
}

crate::forward_ring_ops!(PowerRingElement);

impl fmt::Debug for PowerRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.components)
    }
}

/// `f^*: Z^L -> Z^K` for `f: K -> L`, `(f^* g)_x = S^* g_y` where
/// `f(x) = y ∘ S`.
pub fn pull_back(f: &SimplicialMap, g: &PowerRingElement) -> PowerRingElement {
    PowerRingElement::from_fn(&f.source, |x| {
        let img = f.image(x);
        monotone_pullback(&img.surj, img.simplex.dim).apply(g.component(img.simplex))
    })
}

/// The degree-`<= d` slice of `Z^K` (or of `Z^{(K,*)}`).
#[derive(Clone, Debug)]
pub struct PowerRing {
    pub complex: Arc<FiniteSimplicialSet>,
    pub degree_bound: u32,
    pub basepoint: Option<SimplexRef>,
    columns: Vec<(SimplexRef, Monomial)>,
    column_index: HashMap<(SimplexRef, Monomial), usize>,
    lattice: Lattice,
}

/// Basis of a power-ring slice split by degree: `pieces[k]` holds the basis
/// elements of exact degree `k`; pieces `0..=k` span the degree-`<= k` slice.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub pieces: Vec<Vec<PowerRingElement>>,
}

impl GradedBasis {
    pub fn ranks(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.len()).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.pieces.iter().map(|p| p.len()).sum()
    }

    /// Rank of the degree-`<= k` slice.
    pub fn rank_up_to(&self, k: usize) -> usize {
        self.pieces.iter().take(k + 1).map(|p| p.len()).sum()
    }

    pub fn elements(&self) -> impl Iterator<Item = &PowerRingElement> {
        self.pieces.iter().flatten()
    }
}

impl PowerRing {
    /// Solves for the slice; components over `zero_on` are forced to vanish.
    pub fn compute(k: Arc<FiniteSimplicialSet>, d: u32, zero_on: &[SimplexRef]) -> PowerRing {
        let mut columns: Vec<(SimplexRef, Monomial)> = Vec::new();
        for deg in (0..=d).rev() {
            for x in k.simplices() {
                for m in IntPolynomial::monomials_up_to(x.dim, deg) {
                    if m.iter().sum::<u32>() == deg {
                        columns.push((x, m));
                    }
                }
            }
        }
        let column_index: HashMap<(SimplexRef, Monomial), usize> =
            columns.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let mut rows: Vec<SparseRow> = Vec::new();
        let mut cache: HashMap<(Vec<usize>, usize, Monomial), IntPolynomial> = HashMap::new();
        let mut pull = |theta: &[usize], n: usize, m: &Monomial| -> IntPolynomial {
            cache
                .entry((theta.to_vec(), n, m.clone()))
                .or_insert_with(|| monotone_pullback(theta, n).apply(&IntPolynomial::monomial(m.clone(), 1)))
                .clone()
        };
        for x in k.simplices() {
            if x.dim == 0 {
                continue;
            }
            for i in 0..=x.dim {
                let face = k.face(x, i).clone();
                let delta = crate::simplicial::coface(i, x.dim);
                // monomial of the face coordinates -> equation row
                let mut eqs: HashMap<Monomial, SparseRow> = HashMap::new();
                for m in IntPolynomial::monomials_up_to(x.dim, d) {
                    let col = column_index[&(x, m.clone())];
                    for (mm, c) in pull(&delta, x.dim, &m).terms() {
                        *eqs.entry(mm.clone()).or_default().entry(col).or_insert_with(BigInt::zero) += c;
                    }
                }
                for m in IntPolynomial::monomials_up_to(face.simplex.dim, d) {
                    let col = column_index[&(face.simplex, m.clone())];
                    for (mm, c) in pull(&face.surj, face.simplex.dim, &m).terms() {
                        *eqs.entry(mm.clone()).or_default().entry(col).or_insert_with(BigInt::zero) -= c;
                    }
                }
                let mut keys: Vec<_> = eqs.keys().cloned().collect();
                keys.sort();
                for key in keys {
                    rows.push(eqs.remove(&key).unwrap());
                }
            }
        }
        for r in zero_on {
            for m in IntPolynomial::monomials_up_to(r.dim, d) {
                let mut row = SparseRow::new();
                row.insert(column_index[&(*r, m)], BigInt::from(1));
                rows.push(row);
            }
        }
        let lattice = integer_kernel(&rows, columns.len());
        PowerRing { complex: k, degree_bound: d, basepoint: None, columns, column_index, lattice }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn from_vector(&self, v: &IntVec) -> PowerRingElement {
        let mut e = PowerRingElement::zero(&self.complex);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let (r, m) = &self.columns[i];
                e.components[r.dim][r.idx].add_term(m.clone(), c.clone());
            }
        }
        e
    }

    /// Coefficient vector, `None` if some component exceeds the degree bound.
    pub fn to_vector(&self, e: &PowerRingElement) -> Option<IntVec> {
        let mut v = vec![BigInt::zero(); self.columns.len()];
        for x in self.complex.simplices() {
            for (m, c) in e.component(x).terms() {
                let i = *self.column_index.get(&(x, m.clone()))?;
                v[i] = c.clone();
            }
        }
        Some(v)
    }

    /// Coordinates in the HNF basis, if `e` lies in the slice.
    pub fn coordinates(&self, e: &PowerRingElement) -> Option<Vec<BigInt>> {
        self.lattice.coordinates(&self.to_vector(e)?)
    }

    pub fn contains(&self, e: &PowerRingElement) -> bool {
        self.coordinates(e).is_some()
    }

    fn column_degree(&self, i: usize) -> u32 {
        self.columns[i].1.iter().sum()
    }

    /// Graded basis read off the HNF: a row's degree is that of its pivot.
    pub fn graded_basis(&self) -> GradedBasis {
        let mut pieces = vec![Vec::new(); self.degree_bound as usize + 1];
        for row in self.lattice.basis().iter().rev() {
            let p = crate::lattice::pivot_col(row).expect("nonzero basis row");
            pieces[self.column_degree(p) as usize].push(self.from_vector(row));
        }
        GradedBasis { pieces }
    }

    /// HNF basis rows in order (highest degree first).
    pub fn basis(&self) -> Vec<PowerRingElement> {
        self.lattice.basis().iter().map(|r| self.from_vector(r)).collect()
    }

    /// Products of basis elements whose degrees add up to at most the bound
    /// re-expand integrally in the basis. Returns the first failing pair.
    pub fn check_multiplicative_closure(&self) -> Result<usize, (usize, usize)> {
        let graded = self.graded_basis();
        let elems: Vec<(u32, &PowerRingElement)> = graded
            .pieces
            .iter()
            .enumerate()
            .flat_map(|(d, p)| p.iter().map(move |e| (d as u32, e)))
            .collect();
        let mut checked = 0;
        for i in 0..elems.len() {
            for j in i..elems.len() {
                if elems[i].0 + elems[j].0 > self.degree_bound {
                    continue;
                }
                let prod = elems[i].1.mul_ref(elems[j].1);
                if !prod.is_compatible(&self.complex) || !self.contains(&prod) {
                    return Err((i, j));
                }
                checked += 1;
            }
        }
        Ok(checked)
    }

    /// Lattice spanned by a list of elements, inside this ring's ambient space.
    pub fn span(&self, elems: &[PowerRingElement]) -> Lattice {
        let vecs: Vec<IntVec> = elems.iter().filter_map(|e| self.to_vector(e)).collect();
        Lattice::from_generators(&vecs, self.columns.len())
    }

    /// The degree-`<= k` sub-slice as a lattice in this ring's ambient space.
    pub fn slice(&self, k: u32) -> Lattice {
        let g = self.graded_basis();
        let elems: Vec<PowerRingElement> = g.pieces.iter().take(k as usize + 1).flatten().cloned().collect();
        self.span(&elems)
    }

    /// JSON dump: `[{degree, basis: [{simplex: polynomial}]}]`.
    pub fn basis_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Piece {
            degree: usize,
            basis: Vec<std::collections::BTreeMap<String, String>>,
        }
        let g = self.graded_basis();
        let pieces: Vec<Piece> = g
            .pieces
            .iter()
            .enumerate()
            .map(|(degree, p)| Piece {
                degree,
                basis: p
                    .iter()
                    .map(|e| self.complex.simplices().map(|r| (self.complex.name(r).to_string(), e.component(r).to_string())).collect())
                    .collect(),
            })
            .collect();
        serde_json::to_value(pieces).expect("serializable")
    }
}

/// `Z^K` truncated at degree `d`.
pub fn power(k: &Arc<FiniteSimplicialSet>, d: u32) -> (PowerRing, GradedBasis) {
    let ring = PowerRing::compute(Arc::clone(k), d, &[]);
    let basis = ring.graded_basis();
    (ring, basis)
}

/// `Z^{(K,*)} = ker(Z^K -> Z)`, evaluation at the basepoint vertex.
pub fn pointed_power(k: &Arc<FiniteSimplicialSet>, basepoint: SimplexRef, d: u32) -> Result<(PowerRing, GradedBasis), SimplicialError> {
    if basepoint.dim != 0 || basepoint.idx >= k.count(0) {
        return Err(SimplicialError::Invalid("basepoint is not a vertex".into()));
    }
    let mut ring = PowerRing::compute(Arc::clone(k), d, &[basepoint]);
    ring.basepoint = Some(basepoint);
    let basis = ring.graded_basis();
    Ok((ring, basis))
}

/// Matrix of `f^*` between degree-`<= d` slices, in HNF bases:
/// column `j` holds the coordinates of `f^*(b_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedHom {
    pub matrix: Vec<Vec<BigInt>>,
}

impl InducedHom {
    /// Matrix product `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &InducedHom) -> InducedHom {
        let rows = self.matrix.len();
        let inner = other.matrix.len();
        let cols = other.matrix.first().map_or(0, |r| r.len());
        let mut m = vec![vec![BigInt::zero(); cols]; rows];
        for i in 0..rows {
            for k in 0..inner {
                if self.matrix[i][k].is_zero() {
                    continue;
                }
                for j in 0..cols {
                    m[i][j] += &self.matrix[i][k] * &other.matrix[k][j];
                }
            }
        }
        InducedHom { matrix: m }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, x)| *x == BigInt::from(u8::from(i == j))))
    }
}

/// `f^*: Z^L_{<=d} -> Z^K_{<=d}` for `f: K -> L`, where `source_ring` is
/// the slice of `Z^L` and `target_ring` that of `Z^K`.
pub fn induced_hom(f: &SimplicialMap, source_ring: &PowerRing, target_ring: &PowerRing) -> InducedHom {
    let basis = source_ring.basis();
    let n = target_ring.rank();
    let mut matrix = vec![vec![BigInt::zero(); basis.len()]; n];
    for (j, b) in basis.iter().enumerate() {
        let img = pull_back(f, b);
        let coords = target_ring.coordinates(&img).expect("pullback preserves compatibility and degree");
        for (i, c) in coords.into_iter().enumerate() {
            matrix[i][j] = c;
        }
    }
    InducedHom { matrix }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactnessReport {
    pub degree_bound: u32,
    pub slack: u32,
    pub restriction_surjective: bool,
    pub kernel_equals_quotient_image: bool,
    pub kernel_rank: usize,
    pub quotient_rank: usize,
    pub witness: Option<String>,
}

impl ExactnessReport {
    pub fn pass(&self) -> bool {
        self.restriction_surjective && self.kernel_equals_quotient_image
    }
}

/// For a subcomplex `K ⊂ L` containing the basepoint: restriction
/// `Z^{(L,*)} -> Z^{(K,*)}` hits the degree-`<= d - s` slice and its kernel
/// is the image of `Z^{(L/K,*)}`.
pub fn quotient_exactness_check(
    l: &Arc<FiniteSimplicialSet>,
    k_members: &[SimplexRef],
    basepoint: SimplexRef,
    d: u32,
    slack: u32,
) -> Result<ExactnessReport, SimplicialError> {
    if !k_members.contains(&basepoint) {
        return Err(SimplicialError::Invalid("basepoint must lie in the subcomplex".into()));
    }
    let inc = SimplicialMap::inclusion(Arc::clone(l), k_members)?;
    let k = Arc::clone(&inc.source);
    let k_base = k.lookup(l.name(basepoint))?;
    let (ring_l, _) = pointed_power(l, basepoint, d)?;
    let (ring_k, _) = pointed_power(&k, k_base, d)?;

    // surjectivity onto the lower slice
    let images: Vec<PowerRingElement> = ring_l.basis().iter().map(|b| pull_back(&inc, b)).collect();
    let image = ring_k.span(&images);
    let lower = ring_k.slice(d.saturating_sub(slack));
    let surjective = image.contains_lattice(&lower);
    let mut witness = None;
    if !surjective {
        let miss = lower.basis().iter().find(|b| !image.contains(b)).expect("some generator is missed");
        witness = Some(format!("not in image: {}", ring_k.from_vector(miss).display(&k)));
    }

    // kernel of restriction vs image of the quotient
    let kernel = PowerRing::compute(Arc::clone(l), d, k_members);
    let (q, proj) = crate::simplicial::quotient(l, k_members)?;
    let (ring_q, _) = pointed_power(&q, q.basepoint().expect("quotient is pointed"), d)?;
    let pulled: Vec<PowerRingElement> = ring_q.basis().iter().map(|b| pull_back(&proj, b)).collect();
    let q_image = ring_l.span(&pulled);
    let kernel_in_l = ring_l.span(&kernel.basis());
    let equal = q_image == kernel_in_l;
    if !equal && witness.is_none() {
        let w = kernel_in_l
            .basis()
            .iter()
            .find(|b| !q_image.contains(b))
            .or_else(|| q_image.basis().iter().find(|b| !kernel_in_l.contains(b)));
        witness = w.map(|v| format!("kernel/image mismatch at {}", ring_l.from_vector(v).display(l)));
    }
    Ok(ExactnessReport {
        degree_bound: d,
        slack,
        restriction_surjective: surjective,
        kernel_equals_quotient_image: equal,
        kernel_rank: kernel_in_l.rank(),
        quotient_rank: ring_q.rank(),
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExponentialReport {
    pub degree_bound: u32,
    pub square_ranks: Vec<usize>,
    pub triangle_ranks: Vec<usize>,
    pub first_difference: Option<usize>,
}

/// Ranks per degree of `Z^{Δ^1 × Δ^1}` and `Z^{Δ^2}`.
pub fn exponential_failure_check(d: u32) -> ExponentialReport {
    let d1 = crate::simplicial::standard_simplex(1);
    let square = Arc::new(crate::simplicial::product(&d1, &d1).expect("finite product"));
    let triangle = Arc::new(crate::simplicial::standard_simplex(2));
    let square_ranks = power(&square, d).1.ranks();
    let triangle_ranks = power(&triangle, d).1.ranks();
    let first_difference = square_ranks.iter().zip(&triangle_ranks).position(|(a, b)| a != b);
    ExponentialReport { degree_bound: d, square_ranks, triangle_ranks, first_difference }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary, circle, iterated_subdivision, point, standard_simplex, subdivide};

    fn t() -> IntPolynomial {
        IntPolynomial::var(0)
    }

    #[test]
    fn interval_is_truncated_polynomial_ring() {
        let (ring, b) = power(&Arc::new(standard_simplex(1)), 2);
        assert_eq!(b.ranks(), vec![1, 1, 1]);
        let e = ring.complex.lookup("01").unwrap();
        let comps: Vec<IntPolynomial> = b.elements().map(|x| x.component(e).clone()).collect();
        assert_eq!(comps, vec![IntPolynomial::one(), t(), t() * t()]);
    }

    #[test]
    fn two_points() {
        let (_, b) = power(&Arc::new(boundary(1)), 2);
        assert_eq!(b.ranks(), vec![2, 0, 0]);
    }

    #[test]
    fn circle_functions() {
        let k = Arc::new(circle());
        let (ring, b) = power(&k, 3);
        assert_eq!(b.total_rank(), 3);
        let e = k.lookup("e").unwrap();
        let comps: Vec<IntPolynomial> = b.elements().map(|x| x.component(e).clone()).collect();
        assert_eq!(comps, vec![IntPolynomial::one(), t() * t() - t(), t() * t() * t() - t()]);
        // the basis {1, t^2 - t, t^3 - t^2} spans the same lattice
        let other: Vec<PowerRingElement> = [IntPolynomial::one(), t() * t() - t(), t() * t() * t() - t() * t()]
            .iter()
            .map(|p| PowerRingElement::from_fn(&k, |r| if r.dim == 0 { IntPolynomial::constant(p.eval(&[BigInt::zero()])) } else { p.clone() }))
            .collect();
        assert_eq!(ring.span(&other), *ring.lattice());
        let (_, pb) = pointed_power(&k, k.lookup("*").unwrap(), 2).unwrap();
        assert_eq!(pb.total_rank(), 1);
        assert_eq!(pb.elements().next().unwrap().component(e), &(t() * t() - t()));
    }

    #[test]
    fn pointed_interval_and_point() {
        let k = Arc::new(standard_simplex(1));
        let (_, b) = pointed_power(&k, k.lookup("0").unwrap(), 3).unwrap();
        let e = k.lookup("01").unwrap();
        let comps: Vec<IntPolynomial> = b.elements().map(|x| x.component(e).clone()).collect();
        assert_eq!(comps, vec![t(), t() * t(), t() * t() * t()]);
        let p = Arc::new(point());
        assert_eq!(pointed_power(&p, p.lookup("*").unwrap(), 4).unwrap().1.total_rank(), 0);
        assert!(pointed_power(&k, e, 2).is_err());
    }

    #[test]
    fn boundary_inclusion_is_evaluation_at_endpoints() {
        let d1 = Arc::new(standard_simplex(1));
        let inc = SimplicialMap::inclusion(Arc::clone(&d1), &d1.refs(&["0", "1"]).unwrap()).unwrap();
        let e = d1.lookup("01").unwrap();
        let p = IntPolynomial::from_coeffs(&[3, -1, 4]);
        let g = PowerRingElement::from_fn(&d1, |r| if r == e { p.clone() } else { IntPolynomial::constant(p.eval(&[BigInt::from(r.idx as i64)])) });
        let back = pull_back(&inc, &g);
        let src = &inc.source;
        assert_eq!(back.at_vertex(src.lookup("0").unwrap()), BigInt::from(3));
        assert_eq!(back.at_vertex(src.lookup("1").unwrap()), BigInt::from(6));
    }

    #[test]
    fn last_vertex_map_pulls_back_to_a_piecewise_tuple() {
        let d1 = Arc::new(standard_simplex(1));
        let (sd, h) = subdivide(&d1).unwrap();
        let (ring, _) = power(&d1, 1);
        let (sring, _) = power(&sd, 1);
        let tt = ring.basis().into_iter().find(|b| b.degree() == Some(1)).unwrap();
        let img = pull_back(&h, &tt);
        assert!(img.is_compatible(&sd));
        assert!(sring.contains(&img));
        let m = induced_hom(&h, &ring, &sring);
        assert_eq!(m.matrix.len(), sring.rank());
    }

    #[test]
    fn functoriality_on_composable_maps() {
        let d1 = Arc::new(standard_simplex(1));
        let (sd2, h2) = iterated_subdivision(&d1, 2).unwrap();
        let (sd1, h1) = subdivide(&d1).unwrap();
        let (_, h21) = subdivide(&sd1).unwrap();
        let d = 3;
        let r0 = power(&d1, d).0;
        let r1 = power(&sd1, d).0;
        let r2 = power(&sd2, d).0;
        let composite = induced_hom(&h2, &r0, &r2);
        let stepwise = induced_hom(&h21, &r1, &r2).after(&induced_hom(&h1, &r0, &r1));
        assert_eq!(composite, stepwise);
        assert!(induced_hom(&SimplicialMap::identity(Arc::clone(&d1)), &r0, &r0).is_identity());
    }

    #[test]
    fn exactness_for_interval_and_triangle() {
        let d1 = Arc::new(standard_simplex(1));
        let rep = quotient_exactness_check(&d1, &d1.refs(&["0", "1"]).unwrap(), d1.lookup("0").unwrap(), 4, 1).unwrap();
        assert!(rep.pass(), "{:?}", rep);
        let d2 = Arc::new(standard_simplex(2));
        let bd: Vec<_> = d2.simplices().filter(|r| r.dim < 2).collect();
        let rep = quotient_exactness_check(&d2, &bd, d2.lookup("0").unwrap(), 4, 2).unwrap();
        assert!(rep.pass(), "{:?}", rep);
        let all: Vec<_> = d2.simplices().collect();
        let rep = quotient_exactness_check(&d2, &all, d2.lookup("0").unwrap(), 3, 0).unwrap();
        assert!(rep.pass());
        assert_eq!(rep.kernel_rank, 0);
    }

    #[test]
    fn square_and_triangle_differ() {
        let rep = exponential_failure_check(2);
        assert_eq!(rep.triangle_ranks, vec![1, 2, 3]);
        assert_eq!(rep.square_ranks, vec![1, 3, 5]);
        assert_eq!(rep.first_difference, Some(1));
    }

    #[test]
    fn freeness_and_closure_on_small_catalog() {
        for k in [standard_simplex(2), boundary(2), circle()] {
            let ring = power(&Arc::new(k), 4).0;
            assert!(ring.check_multiplicative_closure().is_ok());
        }
    }
}
