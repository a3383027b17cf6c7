use std::collections::HashMap;

use super::{FiniteSimplicialSet, Monotone, NormalForm, SimplexRef, SimplicialError};

type Key = (SimplexRef, SimplexRef, Monotone, Monotone);

fn repeats(s: &[usize]) -> Vec<usize> {
    (0..s.len().saturating_sub(1)).filter(|j| s[*j] == s[j + 1]).collect()
}

fn surjection_from_repeats(n: usize, rep: &[usize]) -> Monotone {
    let mut s = vec![0; n + 1];
    for j in 0..n {
        s[j + 1] = s[j] + usize::from(!rep.contains(&j));
    }
    s
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..n {
            cur.push(j);
            go(j + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut vec![], &mut out);
    out
}

/// The categorical product. Nondegenerate `n`-simplices are pairs
/// `(x ∘ S, y ∘ R)` with `(S, R)` jointly injective.
pub fn product(k: &FiniteSimplicialSet, l: &FiniteSimplicialSet) -> Result<FiniteSimplicialSet, SimplicialError> {
    let mut out = FiniteSimplicialSet::empty();
    let mut index: HashMap<Key, SimplexRef> = HashMap::new();
    let fmt_s = |s: &[usize]| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("");
    for n in 0..=k.dim() + l.dim() {
        for x in k.simplices() {
            for y in l.simplices() {
                let (p, q) = (x.dim, y.dim);
                if n < p || n < q || n > p + q {
                    continue;
                }
                for rs in subsets(n, n - p) {
                    let free: Vec<usize> = (0..n).filter(|j| !rs.contains(j)).collect();
                    for rr_idx in subsets(free.len(), n - q) {
                        let rr: Vec<usize> = rr_idx.iter().map(|i| free[*i]).collect();
                        let s = surjection_from_repeats(n, &rs);
                        let r = surjection_from_repeats(n, &rr);
                        let name = if n == 0 {
                            format!("({},{})", k.name(x), l.name(y))
                        } else {
                            format!("({},{})[{};{}]", k.name(x), l.name(y), fmt_s(&s), fmt_s(&r))
                        };
                        let mut faces = Vec::new();
                        if n > 0 {
                            for i in 0..=n {
                                let delta = super::coface(i, n);
                                let a = k.apply(x, &super::compose(&s, &delta));
                                let b = l.apply(y, &super::compose(&r, &delta));
                                let ra = repeats(&a.surj);
                                let rb = repeats(&b.surj);
                                let common: Vec<usize> = ra.iter().filter(|j| rb.contains(j)).copied().collect();
                                let keep: Vec<usize> =
                                    (0..a.surj.len()).filter(|m| *m == 0 || !common.contains(&(m - 1))).collect();
                                let s2: Monotone = keep.iter().map(|m| a.surj[*m]).collect();
                                let r2: Monotone = keep.iter().map(|m| b.surj[*m]).collect();
                                let target = index[&(a.simplex, b.simplex, s2, r2)];
                                faces.push(NormalForm { surj: surjection_from_repeats(n - 1, &common), simplex: target });
                            }
                        }
                        let id = out.push(name, faces)?;
                        index.insert((x, y, s, r), id);
                    }
                }
            }
        }
    }
    if let (Some(a), Some(b)) = (k.basepoint(), l.basepoint()) {
        out.set_basepoint(Some(index[&(a, b, vec![0], vec![0])]));
    }
    out.trim();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{circle, is_isomorphic, standard_simplex};

    #[test]
    fn square_and_prism_counts() {
        let sq = product(&standard_simplex(1), &standard_simplex(1)).unwrap();
        assert_eq!(sq.counts(), vec![4, 5, 2]);
        sq.validate().unwrap();
        let prism = product(&standard_simplex(1), &standard_simplex(2)).unwrap();
        assert_eq!(prism.count(3), 3);
        assert_eq!(prism.euler_characteristic(), 1);
        prism.validate().unwrap();
        assert!(prism.check_all_identities(1));
    }

    #[test]
    fn point_is_a_unit() {
        for p in 0..=3 {
            let k = product(&standard_simplex(p), &standard_simplex(0)).unwrap();
            assert!(is_isomorphic(&k, &standard_simplex(p)));
        }
    }

    #[test]
    fn torus_model() {
        let t = product(&circle(), &circle()).unwrap();
        assert_eq!(t.counts(), vec![1, 3, 2]);
        assert_eq!(t.euler_characteristic(), 0);
        t.validate().unwrap();
    }
}
