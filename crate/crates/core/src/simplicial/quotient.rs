use std::collections::HashMap;
use std::sync::Arc;

use super::{FiniteSimplicialSet, NormalForm, SimplexRef, SimplicialError, SimplicialMap};

/// `K/L`: the subcomplex `L` (refs closed under faces) collapsed to a new
/// basepoint. Faces landing in `L` become degeneracies of the basepoint.
/// Returns the quotient and the projection `K -> K/L`.
pub fn quotient(
    k: &Arc<FiniteSimplicialSet>,
    l: &[SimplexRef],
) -> Result<(Arc<FiniteSimplicialSet>, SimplicialMap), SimplicialError> {
    if l.is_empty() {
        return Err(SimplicialError::EmptySubcomplex);
    }
    k.is_subcomplex(l)?;
    let mut q = FiniteSimplicialSet::empty();
    let star_name = if k.lookup("*").map_or(false, |r| !l.contains(&r)) { "*L" } else { "*" };
    let star = q.push(star_name.to_string(), vec![])?;
    let mut new_ref: HashMap<SimplexRef, SimplexRef> = HashMap::new();
    for r in k.simplices() {
        if l.contains(&r) {
            continue;
        }
        let faces = if r.dim == 0 {
            vec![]
        } else {
            k.simplex(r)
                .faces
                .iter()
                .map(|f| match new_ref.get(&f.simplex) {
                    Some(nr) => NormalForm { surj: f.surj.clone(), simplex: *nr },
                    None => NormalForm { surj: vec![0; f.surj.len()], simplex: star },
                })
                .collect()
        };
        new_ref.insert(r, q.push(k.name(r).to_string(), faces)?);
    }
    q.trim();
    q.set_basepoint(Some(star));
    let q = Arc::new(q);
    let proj = SimplicialMap::new(Arc::clone(k), Arc::clone(&q), |r| match new_ref.get(&r) {
        Some(nr) => NormalForm::nondegenerate(*nr),
        None => NormalForm { surj: vec![0; r.dim + 1], simplex: star },
    })?;
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{circle, is_isomorphic, standard_simplex, subdivide, subdivided_subcomplex};

    #[test]
    fn interval_mod_endpoints_is_the_circle() {
        let d1 = Arc::new(standard_simplex(1));
        let (q, proj) = quotient(&d1, &d1.refs(&["0", "1"]).unwrap()).unwrap();
        assert!(is_isomorphic(&q, &circle()));
        proj.validate().unwrap();
    }

    #[test]
    fn full_collapse_is_a_point() {
        let d2 = Arc::new(standard_simplex(2));
        let all: Vec<_> = d2.simplices().collect();
        let (q, _) = quotient(&d2, &all).unwrap();
        assert_eq!(q.counts(), vec![1]);
    }

    #[test]
    fn triangle_mod_boundary_is_a_sphere_model() {
        let d2 = Arc::new(standard_simplex(2));
        let bd: Vec<_> = d2.simplices().filter(|r| r.dim < 2).collect();
        let (q, _) = quotient(&d2, &bd).unwrap();
        assert_eq!(q.counts(), vec![1, 0, 1]);
        q.validate().unwrap();
        assert!(q.check_all_identities(1));
        let top = q.simplices_of_dim(2).next().unwrap();
        assert!(q.simplex(top).faces.iter().all(|f| f.degeneracy_word() == vec![0]));
    }

    #[test]
    fn bad_subcomplexes_are_rejected() {
        let d1 = Arc::new(standard_simplex(1));
        let e = d1.refs(&["01"]).unwrap();
        assert!(matches!(quotient(&d1, &e), Err(SimplicialError::NotSubcomplex(_))));
        assert_eq!(quotient(&d1, &[]).unwrap_err(), SimplicialError::EmptySubcomplex);
    }

    #[test]
    fn subdivision_commutes_with_collapsing_the_boundary() {
        let d1 = Arc::new(standard_simplex(1));
        let ends = d1.refs(&["0", "1"]).unwrap();
        let (s1, _) = quotient(&d1, &ends).unwrap();
        let (sd_then_q, _) = subdivide(&s1).unwrap();
        let (sd1, _) = subdivide(&d1).unwrap();
        let sub = subdivided_subcomplex(&d1, &ends).unwrap();
        let (q_then_sd, _) = quotient(&sd1, &sub).unwrap();
        assert!(is_isomorphic(&sd_then_q, &q_then_sd));
    }
}
