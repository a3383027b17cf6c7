use std::collections::HashMap;
use std::sync::Arc;

use super::{FiniteSimplicialSet, Monotone, NormalForm, SimplexRef, SimplicialError, SimplicialMap};

/// Vertex sets as bitmasks over `[n]`.
type Flag = Vec<u32>;

fn mask_name(mask: u32) -> String {
    (0..32).filter(|v| mask & (1 << v) != 0).map(|v| v.to_string()).collect::<Vec<_>>().join("")
}

fn mask_max(mask: u32) -> usize {
    31 - mask.leading_zeros() as usize
}

fn mask_vertices(mask: u32) -> Monotone {
    (0..32).filter(|v| mask & (1 << v) != 0).collect()
}

/// Strictly increasing chains of nonempty subsets of `[n]` ending at `[n]`,
/// of length `p + 1`.
fn flags(n: usize, p: usize) -> Vec<Flag> {
    let full: u32 = (1u32 << (n + 1)) - 1;
    let mut out = Vec::new();
    let mut cur = vec![full];
    extend_down(&mut cur, p, &mut out);
    out.sort();
    out
}

fn extend_down(cur: &mut Vec<u32>, p: usize, out: &mut Vec<Flag>) {
    if cur.len() == p + 1 {
        let mut f = cur.clone();
        f.reverse();
        out.push(f);
        return;
    }
    let top = *cur.last().unwrap();
    // proper nonempty subsets of `top`
    let mut sub = (top - 1) & top;
    while sub != 0 {
        cur.push(sub);
        extend_down(cur, p, out);
        cur.pop();
        sub = (sub - 1) & top;
    }
}

pub(crate) struct Subdivision {
    pub complex: FiniteSimplicialSet,
    /// carrier simplex of each sd simplex, indexed like `complex`
    pub carrier: Vec<Vec<SimplexRef>>,
    pub flags: Vec<Vec<Flag>>,
}

pub(crate) fn subdivide_raw(k: &FiniteSimplicialSet) -> Result<Subdivision, SimplicialError> {
    for r in k.simplices() {
        if k.simplex(r).faces.iter().any(|f| f.is_degenerate()) {
            return Err(SimplicialError::DegenerateFace(k.name(r).to_string()));
        }
    }
    let mut sd = FiniteSimplicialSet::empty();
    let mut index: HashMap<(SimplexRef, Flag), SimplexRef> = HashMap::new();
    let mut carrier: Vec<Vec<SimplexRef>> = Vec::new();
    let mut all_flags: Vec<Vec<Flag>> = Vec::new();
    for p in 0..=k.dim() {
        for x in k.simplices() {
            if x.dim < p {
                continue;
            }
            for flag in flags(x.dim, p) {
                let name = format!(
                    "{}|{}",
                    k.name(x),
                    flag.iter().map(|m| mask_name(*m)).collect::<Vec<_>>().join("<")
                );
                let mut faces = Vec::new();
                if p > 0 {
                    for i in 0..p {
                        let mut f = flag.clone();
                        f.remove(i);
                        faces.push(NormalForm::nondegenerate(index[&(x, f)]));
                    }
                    let rest = flag[p - 1];
                    let verts = mask_vertices(rest);
                    let y = k.apply(x, &verts);
                    if y.is_degenerate() {
                        return Err(SimplicialError::DegenerateFace(k.name(x).to_string()));
                    }
                    let reindexed: Flag = flag[..p]
                        .iter()
                        .map(|m| {
                            verts.iter().enumerate().filter(|(_, v)| m & (1 << *v) != 0).fold(0u32, |a, (i, _)| a | (1 << i))
                        })
                        .collect();
                    faces.push(NormalForm::nondegenerate(index[&(y.simplex, reindexed)]));
                }
                let r = sd.push(name, faces)?;
                index.insert((x, flag.clone()), r);
                while carrier.len() <= p {
                    carrier.push(vec![]);
                    all_flags.push(vec![]);
                }
                carrier[p].push(x);
                all_flags[p].push(flag);
            }
        }
    }
    if let Some(b) = k.basepoint() {
        sd.set_basepoint(Some(index[&(b, vec![1])]));
    }
    Ok(Subdivision { complex: sd, carrier, flags: all_flags })
}

/// Barycentric subdivision together with the last vertex map
/// `sd K -> K`, `(x, S_0 ⊂ ... ⊂ S_p) -> x ∘ (j -> max S_j)`.
pub fn subdivide(k: &Arc<FiniteSimplicialSet>) -> Result<(Arc<FiniteSimplicialSet>, SimplicialMap), SimplicialError> {
    let raw = subdivide_raw(k)?;
    let sd = Arc::new(raw.complex);
    let h = SimplicialMap::new(Arc::clone(&sd), Arc::clone(k), |r| {
        let x = raw.carrier[r.dim][r.idx];
        let theta: Monotone = raw.flags[r.dim][r.idx].iter().map(|m| mask_max(*m)).collect();
        k.apply(x, &theta)
    })?;
    Ok((sd, h))
}

/// `sd^n K` and the composite last vertex map `sd^n K -> K`.
pub fn iterated_subdivision(
    k: &Arc<FiniteSimplicialSet>,
    n: usize,
) -> Result<(Arc<FiniteSimplicialSet>, SimplicialMap), SimplicialError> {
    let mut cur = Arc::clone(k);
    let mut h = SimplicialMap::identity(Arc::clone(k));
    for _ in 0..n {
        let (next, step) = subdivide(&cur)?;
        h = step.then(&h);
        cur = next;
    }
    Ok((cur, h))
}

/// The simplices of `sd K` lying over the subcomplex `members` of `K`.
pub fn subdivided_subcomplex(k: &FiniteSimplicialSet, members: &[SimplexRef]) -> Result<Vec<SimplexRef>, SimplicialError> {
    let raw = subdivide_raw(k)?;
    let mut out = Vec::new();
    for (dim, cs) in raw.carrier.iter().enumerate() {
        for (idx, x) in cs.iter().enumerate() {
            if members.contains(x) {
                out.push(SimplexRef { dim, idx });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary, circle, standard_simplex};

    #[test]
    fn interval_midpoint_and_last_vertex_images() {
        let d1 = Arc::new(standard_simplex(1));
        let (sd, h) = subdivide(&d1).unwrap();
        assert_eq!(sd.counts(), vec![3, 2]);
        let images: Vec<&str> = sd.simplices_of_dim(0).map(|v| d1.name(h.image(v).simplex)).collect();
        assert_eq!(images, vec!["0", "1", "1"]);
    }

    #[test]
    fn triangle_and_circle_counts() {
        let (sd2, _) = subdivide(&Arc::new(standard_simplex(2))).unwrap();
        assert_eq!(sd2.counts(), vec![7, 12, 6]);
        assert_eq!(sd2.euler_characteristic(), 1);
        sd2.validate().unwrap();
        let (sc, _) = subdivide(&Arc::new(circle())).unwrap();
        assert_eq!(sc.counts(), vec![2, 2]);
    }

    #[test]
    fn iterated_interval_counts_and_last_vertex_maps() {
        let d1 = Arc::new(standard_simplex(1));
        for n in 0..=6 {
            let (sd, h) = iterated_subdivision(&d1, n).unwrap();
            assert_eq!(sd.counts(), vec![(1 << n) + 1, 1 << n]);
            h.validate().unwrap();
        }
    }

    #[test]
    fn last_vertex_maps_are_simplicial_on_the_catalog() {
        let catalog = vec![standard_simplex(2), standard_simplex(3), boundary(2), boundary(3), circle()];
        for k in catalog {
            let k = Arc::new(k);
            let depth = if k.dim() >= 3 { 2 } else { 3 };
            let (sd, h) = iterated_subdivision(&k, depth).unwrap();
            sd.validate().unwrap();
            h.validate().unwrap();
        }
    }
}
