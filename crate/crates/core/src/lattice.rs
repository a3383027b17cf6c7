//! Integer lattices: Hermite normal form, integer kernels and membership.
//!
//! Vectors are dense `Vec<BigInt>`. The row-style Hermite normal form used
//! throughout puts pivots in strictly increasing columns, makes every pivot
//! positive and reduces the entries above a pivot into `[0, pivot)`, so two
//! lattices are equal iff their HNF bases are equal.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntVec = Vec<BigInt>;

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Zero rows are dropped, so the result is a basis.
pub fn hnf(rows: &[IntVec], ncols: usize) -> Vec<IntVec> {
    let mut m: Vec<IntVec> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    for r in &m {
        assert_eq!(r.len(), ncols, "row length mismatch");
    }
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row >= m.len() {
            break;
        }
        // gcd-reduce column `col` among rows pivot_row..
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..m.len() {
                if !m[r][col].is_zero()
                    && best.map_or(true, |b| m[r][col].abs() < m[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            m.swap(pivot_row, b);
            let mut done = true;
            for r in pivot_row + 1..m.len() {
                if m[r][col].is_zero() {
                    continue;
                }
                let q = m[r][col].div_floor(&m[pivot_row][col]);
                if !q.is_zero() {
                    let (head, tail) = m.split_at_mut(r);
                    axpy(&mut tail[0], &-q, &head[pivot_row]);
                }
                if !m[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[pivot_row][col].is_zero() {
            continue;
        }
        if m[pivot_row][col].is_negative() {
            for x in m[pivot_row].iter_mut() {
                *x = -&*x;
            }
        }
        for r in 0..pivot_row {
            if m[r][col].is_zero() {
                continue;
            }
            let q = m[r][col].div_floor(&m[pivot_row][col]);
            if !q.is_zero() {
                let (head, tail) = m.split_at_mut(pivot_row);
                axpy(&mut head[r], &-q, &tail[0]);
            }
        }
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
    m
}

fn axpy(target: &mut IntVec, a: &BigInt, x: &IntVec) {
    for (t, v) in target.iter_mut().zip(x) {
        if !v.is_zero() {
            *t += a * v;
        }
    }
}

/// Column index of the first nonzero entry.
pub fn pivot_col(row: &IntVec) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// A sublattice of `Z^dim` held in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<IntVec>,
}

impl Lattice {
    pub fn from_generators(gens: &[IntVec], dim: usize) -> Self {
        Lattice { dim, basis: hnf(gens, dim) }
    }

    pub fn zero(dim: usize) -> Self {
        Lattice { dim, basis: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    /// Integer coordinates of `v` in the HNF basis, or `None` if `v` is not in
    /// the lattice.
    pub fn coordinates(&self, v: &IntVec) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim);
        let mut rest = v.clone();
        let mut coords = Vec::with_capacity(self.basis.len());
        for b in &self.basis {
            let p = pivot_col(b).expect("HNF rows are nonzero");
            let (q, r) = rest[p].div_rem(&b[p]);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                axpy(&mut rest, &-&q, b);
            }
            coords.push(q);
        }
        if rest.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &IntVec) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Canonical representative of `v` modulo the lattice: every pivot
    /// coordinate is reduced into `[0, pivot)`. Two vectors are congruent iff
    /// their reductions agree.
    pub fn reduce(&self, v: &IntVec) -> IntVec {
        assert_eq!(v.len(), self.dim);
        let mut rest = v.clone();
        for b in &self.basis {
            let p = pivot_col(b).expect("HNF rows are nonzero");
            let q = rest[p].div_floor(&b[p]);
            if !q.is_zero() {
                axpy(&mut rest, &-q, b);
            }
        }
        rest
    }
}

/// Sparse integer linear equation: variable index -> coefficient.
pub type SparseRow = BTreeMap<usize, BigInt>;

/// A Z-basis (in HNF) of `{ v in Z^nvars : row . v = 0 for every row }`.
///
/// Variables with a unit coefficient are eliminated first by unimodular
/// substitution; whatever is left is handled by dense echelon reduction of the
/// transposed system.
pub fn integer_kernel(rows: &[SparseRow], nvars: usize) -> Lattice {
    let mut rows: Vec<SparseRow> = rows
        .iter()
        .map(|r| r.iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (*k, c.clone())).collect())
        .filter(|r: &SparseRow| !r.is_empty())
        .collect();
    // (variable, expression in the other variables)
    let mut eliminated: Vec<(usize, SparseRow)> = Vec::new();
    let mut is_elim = vec![false; nvars];

    loop {
        // pick the shortest row with a unit coefficient
        let mut choice: Option<(usize, usize)> = None;
        for (ri, r) in rows.iter().enumerate() {
            if let Some((&v, _)) = r.iter().find(|(_, c)| c.abs().is_one()) {
                if choice.map_or(true, |(cr, _)| rows[cr].len() > r.len()) {
                    choice = Some((ri, v));
                }
            }
        }
        let Some((ri, var)) = choice else { break };
        let row = rows.swap_remove(ri);
        let unit = row[&var].clone();
        // var = -unit * sum_{w != var} a_w w
        let expr: SparseRow = row
            .iter()
            .filter(|(k, _)| **k != var)
            .map(|(k, c)| (*k, -(&unit * c)))
            .collect();
        for r in rows.iter_mut() {
            if let Some(c) = r.remove(&var) {
                for (k, e) in &expr {
                    let entry = r.entry(*k).or_insert_with(BigInt::zero);
                    *entry += &c * e;
                    if entry.is_zero() {
                        r.remove(k);
                    }
                }
            }
        }
        rows.retain(|r| !r.is_empty());
        is_elim[var] = true;
        eliminated.push((var, expr));
    }

    let free: Vec<usize> = (0..nvars).filter(|v| !is_elim[*v]).collect();
    let free_pos: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, v)| (*v, i)).collect();

    // kernel of the remaining dense system in the free variables
    let free_kernel: Vec<IntVec> = if rows.is_empty() {
        (0..free.len())
            .map(|i| {
                let mut v = vec![BigInt::zero(); free.len()];
                v[i] = BigInt::one();
                v
            })
            .collect()
    } else {
        dense_kernel(&rows, &free_pos, free.len())
    };

    let mut basis = Vec::with_capacity(free_kernel.len());
    for fv in free_kernel {
        let mut full = vec![BigInt::zero(); nvars];
        for (i, v) in free.iter().enumerate() {
            full[*v] = fv[i].clone();
        }
        for (var, expr) in eliminated.iter().rev() {
            let mut val = BigInt::zero();
            for (k, e) in expr {
                if !full[*k].is_zero() {
                    val += e * &full[*k];
                }
            }
            full[*var] = val;
        }
        basis.push(full);
    }
    Lattice::from_generators(&basis, nvars)
}

fn dense_kernel(rows: &[SparseRow], free_pos: &BTreeMap<usize, usize>, nfree: usize) -> Vec<IntVec> {
    let neq = rows.len();
    // augmented [R^T | I]
    let mut aug: Vec<IntVec> = (0..nfree)
        .map(|i| {
            let mut v = vec![BigInt::zero(); neq + nfree];
            v[neq + i] = BigInt::one();
            v
        })
        .collect();
    for (ei, r) in rows.iter().enumerate() {
        for (var, c) in r {
            let p = free_pos[var];
            aug[p][ei] = c.clone();
        }
    }
    let red = hnf(&aug, neq + nfree);
    red.into_iter()
        .filter(|r| r[..neq].iter().all(|x| x.is_zero()))
        .map(|r| r[neq..].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> IntVec {
        xs.iter().map(|x| BigInt::from(*x)).collect()
    }

    #[test]
    fn hnf_is_canonical_for_equal_lattices() {
        let a = Lattice::from_generators(&[v(&[2, 0]), v(&[0, 3])], 2);
        let b = Lattice::from_generators(&[v(&[2, 3]), v(&[4, 3]), v(&[0, 6])], 2);
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[v(&[2, 0]), v(&[0, 3])]);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let l = Lattice::from_generators(&[v(&[1, 5]), v(&[0, 3])], 2);
        assert_eq!(l.basis(), &[v(&[1, 2]), v(&[0, 3])]);
    }

    #[test]
    fn membership_and_coordinates() {
        let l = Lattice::from_generators(&[v(&[1, 1, 0]), v(&[0, 2, 2])], 3);
        assert_eq!(l.coordinates(&v(&[3, 5, 2])), Some(vec![BigInt::from(3), BigInt::from(1)]));
        assert!(!l.contains(&v(&[0, 1, 1])));
        assert!(!l.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn reduction_is_a_coset_invariant() {
        let l = Lattice::from_generators(&[v(&[1, 1, 0]), v(&[0, 2, 2])], 3);
        let a = v(&[5, -3, 7]);
        let b: IntVec = a.iter().zip(&v(&[2, 6, 4])).map(|(x, y)| x + y).collect();
        assert_eq!(l.reduce(&a), l.reduce(&b));
        assert_ne!(l.reduce(&a), l.reduce(&v(&[5, -3, 8])));
    }

    #[test]
    fn kernel_of_single_condition() {
        // c1 + c2 + c3 = 0 on (c0..c3)
        let row: SparseRow = [(1, 1), (2, 1), (3, 1)].iter().map(|(k, c)| (*k, BigInt::from(*c))).collect();
        let k = integer_kernel(&[row], 4);
        assert_eq!(k.rank(), 3);
        assert!(k.contains(&v(&[1, 0, 0, 0])));
        assert!(k.contains(&v(&[0, -1, 1, 0])));
        assert!(k.contains(&v(&[0, 0, -1, 1])));
    }

    #[test]
    fn kernel_without_unit_pivots_is_saturated() {
        // 2x + 4y = 0  -> kernel spanned by (2, -1)
        let row: SparseRow = [(0, 2), (1, 4)].iter().map(|(k, c)| (*k, BigInt::from(*c))).collect();
        let k = integer_kernel(&[row], 2);
        assert_eq!(k.basis(), &[v(&[2, -1])]);
        // 2x + 3y = 0 -> (3, -2)
        let row: SparseRow = [(0, 2), (1, 3)].iter().map(|(k, c)| (*k, BigInt::from(*c))).collect();
        let k = integer_kernel(&[row], 2);
        assert_eq!(k.basis(), &[v(&[3, -2])]);
    }
}
