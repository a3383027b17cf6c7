//! The canonical homotopy `a_n -> a_n t^n` of a graded ring, and orthogonal sums.

use std::sync::Arc;

use serde::Serialize;

use crate::rings::{check_hom, AlgebraHom, HomError, NcPoly, NcQuotient, QuotElem, Ring, UPoly};

use super::elementary::{check_elementary, ElementaryHomotopy};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedReport {
    pub is_hom: bool,
    pub ev0_is_projection: bool,
    pub ev1_is_identity: bool,
    pub witness: Option<String>,
}

impl GradedReport {
    pub fn pass(&self) -> bool {
        self.is_hom && self.ev0_is_projection && self.ev1_is_identity
    }
}

/// `h(x_i) = x_i t^{deg x_i}` on generators of a graded presentation.
pub fn graded_homotopy(a: &Arc<NcQuotient>) -> Result<ElementaryHomotopy<QuotElem>, HomError> {
    let p = &a.presentation;
    let degrees = p.degrees.clone().ok_or_else(|| HomError::Inhomogeneous("generators carry no degrees".into()))?;
    // revalidate homogeneity
    p.clone().with_degrees(&degrees)?;
    let images = degrees.iter().enumerate().map(|(i, d)| UPoly::monomial(*d, a.elem(NcPoly::gen(i)))).collect();
    Ok(ElementaryHomotopy::new(AlgebraHom { source: p.clone(), images, unit: None }))
}

/// The projection onto degree 0, given on generators.
pub fn degree_zero_projection(a: &Arc<NcQuotient>) -> AlgebraHom<QuotElem> {
    let p = &a.presentation;
    let degrees = p.degrees.clone().unwrap_or_else(|| vec![0; p.generators.len()]);
    let images = degrees.iter().enumerate().map(|(i, d)| if *d == 0 { a.elem(NcPoly::gen(i)) } else { a.zero() }).collect();
    AlgebraHom { source: p.clone(), images, unit: None }
}

pub fn check_graded(a: &Arc<NcQuotient>) -> Result<GradedReport, HomError> {
    let h = graded_homotopy(a)?;
    let proj = degree_zero_projection(a);
    let id = a.identity_hom();
    let verdict = check_elementary(&h, &proj, &id);
    Ok(GradedReport {
        is_hom: verdict.is_hom && check_hom(&proj).valid,
        ev0_is_projection: h.ev0().first_difference(&proj).is_none(),
        ev1_is_identity: h.ev1().first_difference(&id).is_none(),
        witness: verdict.witness,
    })
}

/// `Z[x]`, `deg x = 1`, truncated at word length `bound`.
pub fn polynomial_example(bound: usize) -> Arc<NcQuotient> {
    let p = crate::rings::AlgebraPresentation::new(&["x"], &[]).and_then(|p| p.with_degrees(&[1])).expect("static presentation");
    NcQuotient::new(p, bound)
}

/// The unitalization of the square-zero ring on `x, y` in degree 1.
pub fn square_zero_example(bound: usize) -> Arc<NcQuotient> {
    let p = crate::rings::AlgebraPresentation::new(&["x", "y"], &["x*x", "x*y", "y*x", "y*y"])
        .and_then(|p| p.with_degrees(&[1, 1]))
        .expect("static presentation");
    NcQuotient::new(p, bound)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub orthogonal: bool,
    pub sum_is_hom: bool,
    pub witness: Option<String>,
}

/// Checks `f(a) g(b) = g(a) f(b) = 0` on all words of length `1..=bound` and
/// then whether `f + g` is a homomorphism.
pub fn orthogonal_sum<R: Ring>(f: &AlgebraHom<R>, g: &AlgebraHom<R>, bound: usize) -> OrthogonalityReport {
    let k = f.source.generators.len();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut sample = Vec::new();
    for _ in 0..bound {
        words = words.iter().flat_map(|w| (0..k).map(move |i| { let mut w2 = w.clone(); w2.push(i); w2 })).collect();
        sample.extend(words.iter().map(|w| NcPoly::word(w.clone(), 1)));
    }
    let mut witness = None;
    'outer: for a in &sample {
        for b in &sample {
            if !f.eval(a).mul_ref(&g.eval(b)).is_zero_elem() || !g.eval(a).mul_ref(&f.eval(b)).is_zero_elem() {
                witness = Some(format!("{} * {}", f.source.show(a), f.source.show(b)));
                break 'outer;
            }
        }
    }
    OrthogonalityReport { orthogonal: witness.is_none(), sum_is_hom: check_hom(&f.sum(g)).valid, witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{AlgebraPresentation, RingMatrix};

    #[test]
    fn polynomial_ring_contracts_to_degree_zero() {
        let a = polynomial_example(4);
        let report = check_graded(&a).unwrap();
        assert!(report.pass(), "{:?}", report);
        let h = graded_homotopy(&a).unwrap();
        let x = a.gen("x").unwrap();
        assert_eq!(h.hom.images[0], UPoly::monomial(1, x));
        assert!(h.ev0().images[0].is_zero_elem());
        assert_eq!(h.hom.eval(&NcPoly::constant(3)), UPoly::constant(a.one().scale(&3.into())));
    }

    #[test]
    fn square_zero_ring_is_nullhomotopic() {
        let a = square_zero_example(3);
        let report = check_graded(&a).unwrap();
        assert!(report.pass(), "{:?}", report);
        let h = graded_homotopy(&a).unwrap();
        assert!(h.ev0().images.iter().all(Ring::is_zero_elem));
    }

    #[test]
    fn inhomogeneous_and_ungraded_inputs_are_rejected() {
        let p = AlgebraPresentation::new(&["x"], &["x*x - x"]).unwrap();
        assert!(p.clone().with_degrees(&[1]).is_err());
        assert!(graded_homotopy(&NcQuotient::new(p, 2)).is_err());
    }

    #[test]
    fn corner_maps_are_orthogonal() {
        let a = polynomial_example(3);
        let src = a.presentation.clone();
        let x = a.gen("x").unwrap();
        let z = a.zero();
        let m = |i: usize| RingMatrix::unit(2, i, i, x.clone());
        let f = AlgebraHom::new(&src, vec![("x", m(0))]).unwrap().with_unit(RingMatrix::unit(2, 0, 0, a.one()));
        let g = AlgebraHom::new(&src, vec![("x", m(1))]).unwrap().with_unit(RingMatrix::unit(2, 1, 1, a.one()));
        let report = orthogonal_sum(&f, &g, 3);
        assert!(report.orthogonal && report.sum_is_hom);
        let sum = f.sum(&g);
        assert_eq!(sum.images[0], RingMatrix::diagonal(vec![x.clone(), x.clone()]));
        assert_ne!(sum.images[0], RingMatrix::diagonal(vec![x, z]));
    }

    #[test]
    fn non_orthogonal_idempotent_sum_fails() {
        let p = AlgebraPresentation::new(&["e"], &["e*e - e"]).unwrap();
        let a = NcQuotient::new(p.clone(), 2);
        let id = a.identity_hom();
        let report = orthogonal_sum(&id, &id, 2);
        assert!(!report.orthogonal);
        assert!(!report.sum_is_hom);
    }
}
