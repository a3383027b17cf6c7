use std::collections::HashMap;

use super::{FiniteSimplicialSet, SimplexRef};

/// A bijection of nondegenerate simplices commuting with all faces, if one
/// exists. Backtracking from the top dimension down; choosing the image of a
/// simplex forces the images of its faces.
pub fn find_isomorphism(a: &FiniteSimplicialSet, b: &FiniteSimplicialSet) -> Option<HashMap<SimplexRef, SimplexRef>> {
    if a.counts() != b.counts() {
        return None;
    }
    let mut order: Vec<SimplexRef> = a.simplices().collect();
    order.sort_by(|x, y| y.dim.cmp(&x.dim).then(x.idx.cmp(&y.idx)));
    search(a, b, &order, 0, HashMap::new())
}

pub fn is_isomorphic(a: &FiniteSimplicialSet, b: &FiniteSimplicialSet) -> bool {
    find_isomorphism(a, b).is_some()
}

fn search(
    a: &FiniteSimplicialSet,
    b: &FiniteSimplicialSet,
    order: &[SimplexRef],
    pos: usize,
    map: HashMap<SimplexRef, SimplexRef>,
) -> Option<HashMap<SimplexRef, SimplexRef>> {
    let Some(&r) = order[pos..].iter().find(|r| !map.contains_key(r)) else {
        return Some(map);
    };
    for c in b.simplices_of_dim(r.dim) {
        let mut trial = map.clone();
        if assign(a, b, r, c, &mut trial) {
            if let Some(done) = search(a, b, order, pos, trial) {
                return Some(done);
            }
        }
    }
    None
}

fn assign(a: &FiniteSimplicialSet, b: &FiniteSimplicialSet, r: SimplexRef, c: SimplexRef, map: &mut HashMap<SimplexRef, SimplexRef>) -> bool {
    if let Some(existing) = map.get(&r) {
        return *existing == c;
    }
    if map.values().any(|v| *v == c) {
        return false;
    }
    map.insert(r, c);
    if r.dim == 0 {
        return true;
    }
    let fa = &a.simplex(r).faces;
    let fb = &b.simplex(c).faces;
    for (x, y) in fa.iter().zip(fb) {
        if x.surj != y.surj || !assign(a, b, x.simplex, y.simplex, map) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary, circle, standard_simplex};

    #[test]
    fn relabelled_objects_are_isomorphic_and_different_ones_are_not() {
        assert!(is_isomorphic(&standard_simplex(2), &standard_simplex(2)));
        assert!(!is_isomorphic(&standard_simplex(1), &circle()));
        assert!(!is_isomorphic(&boundary(2), &standard_simplex(2)));
        let two_circles = circle().disjoint_union(&circle());
        assert!(is_isomorphic(&two_circles, &circle().disjoint_union(&circle())));
        assert!(!is_isomorphic(&two_circles, &boundary(1).disjoint_union(&standard_simplex(0))));
    }
}
