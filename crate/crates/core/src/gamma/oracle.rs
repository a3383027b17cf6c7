//! Exact entry oracles for row- and column-finite integer matrices.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::progression::ProgressionMatrix;

type EntryFn = dyn Fn(i64, i64) -> BigInt + Send + Sync;
type SupportFn = dyn Fn(i64) -> Vec<i64> + Send + Sync;

/// A matrix given by an entry function together with exact row and column
/// supports. Products are exact because the summation index ranges over a
/// finite support.
#[derive(Clone)]
pub struct OracleMatrix {
    entry: Arc<EntryFn>,
    row_support: Arc<SupportFn>,
    col_support: Arc<SupportFn>,
}

impl OracleMatrix {
    pub fn new(
        entry: impl Fn(i64, i64) -> BigInt + Send + Sync + 'static,
        row_support: impl Fn(i64) -> Vec<i64> + Send + Sync + 'static,
        col_support: impl Fn(i64) -> Vec<i64> + Send + Sync + 'static,
    ) -> Self {
        OracleMatrix { entry: Arc::new(entry), row_support: Arc::new(row_support), col_support: Arc::new(col_support) }
    }

    pub fn from_progression(x: &ProgressionMatrix) -> Self {
        let (a, b, c) = (x.clone(), x.clone(), x.clone());
        Self::new(move |r, s| a.entry(r, s), move |r| b.row_support(r), move |s| c.col_support(s))
    }

    pub fn entry(&self, r: i64, s: i64) -> BigInt {
        (self.entry)(r, s)
    }

    pub fn row_support(&self, r: i64) -> Vec<i64> {
        (self.row_support)(r)
    }

    pub fn col_support(&self, s: i64) -> Vec<i64> {
        (self.col_support)(s)
    }

    pub fn mul(&self, rhs: &OracleMatrix) -> OracleMatrix {
        let (x1, y1) = (self.clone(), rhs.clone());
        let (x2, y2) = (self.clone(), rhs.clone());
        let (x3, y3) = (self.clone(), rhs.clone());
        OracleMatrix::new(
            move |r, s| x1.row_support(r).into_iter().map(|k| x1.entry(r, k) * y1.entry(k, s)).sum(),
            move |r| {
                let set: BTreeSet<i64> = x2.row_support(r).into_iter().flat_map(|k| y2.row_support(k)).collect();
                set.into_iter().collect()
            },
            move |s| {
                let set: BTreeSet<i64> = y3.col_support(s).into_iter().flat_map(|k| x3.col_support(k)).collect();
                set.into_iter().collect()
            },
        )
    }

    pub fn add(&self, rhs: &OracleMatrix) -> OracleMatrix {
        let (x1, y1) = (self.clone(), rhs.clone());
        let (x2, y2) = (self.clone(), rhs.clone());
        let (x3, y3) = (self.clone(), rhs.clone());
        OracleMatrix::new(
            move |r, s| x1.entry(r, s) + y1.entry(r, s),
            move |r| {
                let mut v: Vec<i64> = x2.row_support(r);
                v.extend(y2.row_support(r));
                v.sort_unstable();
                v.dedup();
                v
            },
            move |s| {
                let mut v: Vec<i64> = x3.col_support(s);
                v.extend(y3.col_support(s));
                v.sort_unstable();
                v.dedup();
                v
            },
        )
    }

    pub fn window(&self, n: usize) -> Vec<Vec<BigInt>> {
        let mut w = vec![vec![BigInt::zero(); n]; n];
        for (r, row) in w.iter_mut().enumerate() {
            for s in self.row_support(r as i64) {
                if (s as usize) < n {
                    row[s as usize] = self.entry(r as i64, s);
                }
            }
        }
        w
    }

    /// Maximal number of nonzero entries in the rows and columns of the window.
    pub fn max_support_in_window(&self, n: usize) -> usize {
        let w = self.window(n);
        let rows = w.iter().map(|r| r.iter().filter(|x| !x.is_zero()).count()).max().unwrap_or(0);
        let cols = (0..n).map(|j| (0..n).filter(|i| !w[*i][j].is_zero()).count()).max().unwrap_or(0);
        rows.max(cols)
    }
}

/// Decomposes `r + 1 = 2^k (2 i + 1)`.
pub fn dyadic_split(r: i64) -> (u32, i64) {
    let m = r + 1;
    let k = m.trailing_zeros();
    (k, ((m >> k) - 1) / 2)
}

pub fn dyadic_index(k: u32, i: i64) -> i64 {
    (1i64 << (k + 1)) * i + (1i64 << k) - 1
}

/// The infinite block sum `x ⊕ x ⊕ ...`, realized as `Σ_k β₂^k β₁ x α₁ α₂^k`:
/// entry `(2^{k+1} i + 2^k - 1, 2^{k+1} j + 2^k - 1)` is `x(i, j)`.
pub fn phi_infinity(x: &OracleMatrix) -> OracleMatrix {
    let (x1, x2, x3) = (x.clone(), x.clone(), x.clone());
    OracleMatrix::new(
        move |r, s| {
            let (k, i) = dyadic_split(r);
            let (l, j) = dyadic_split(s);
            if k == l {
                x1.entry(i, j)
            } else {
                BigInt::zero()
            }
        },
        move |r| {
            let (k, i) = dyadic_split(r);
            x2.row_support(i).into_iter().map(|j| dyadic_index(k, j)).collect()
        },
        move |s| {
            let (k, j) = dyadic_split(s);
            x3.col_support(j).into_iter().map(|i| dyadic_index(k, i)).collect()
        },
    )
}

/// Largest `m <= n` such that the truncated product of the `n`-windows of
/// `x` and `y` is exact on the top-left `m x m` block.
pub fn safe_subwindow(x: &OracleMatrix, y: &OracleMatrix, n: usize) -> usize {
    let rows_ok = (0..n).take_while(|r| x.row_support(*r as i64).iter().all(|k| (*k as usize) < n)).count();
    let cols_ok = (0..n).take_while(|s| y.col_support(*s as i64).iter().all(|k| (*k as usize) < n)).count();
    rows_ok.min(cols_ok)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowProductReport {
    pub window: usize,
    pub safe: usize,
    pub agrees: bool,
}

/// Compares the exact product with the product of truncated windows on the
/// safe subwindow.
pub fn window_product_check(x: &OracleMatrix, y: &OracleMatrix, n: usize) -> WindowProductReport {
    let safe = safe_subwindow(x, y, n);
    let exact = x.mul(y);
    let truncated = super::progression::window_mul(&x.window(n), &y.window(n));
    let agrees = (0..safe).all(|r| (0..safe).all(|s| exact.entry(r as i64, s as i64) == truncated[r][s]));
    WindowProductReport { window: n, safe, agrees }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Ring;

    #[test]
    fn dyadic_decomposition_is_a_bijection() {
        for r in 0..1000i64 {
            let (k, i) = dyadic_split(r);
            assert_eq!(dyadic_index(k, i), r);
        }
    }

    #[test]
    fn oracle_products_match_normal_forms() {
        let a = ProgressionMatrix::alpha_hat();
        let b = ProgressionMatrix::beta_hat();
        let x = a.add_ref(&b.mul_ref(&b)).add_ref(&ProgressionMatrix::unit(2, 0));
        let y = b.add_ref(&ProgressionMatrix::progression(2, 1, 3, 0, 1));
        let exact = OracleMatrix::from_progression(&x).mul(&OracleMatrix::from_progression(&y));
        assert_eq!(exact.window(30), x.mul_ref(&y).window(30));
    }

    #[test]
    fn safe_window_is_exact() {
        let x = OracleMatrix::from_progression(&ProgressionMatrix::progression(1, 0, 3, 0, 0));
        let y = OracleMatrix::from_progression(&ProgressionMatrix::progression(3, 0, 1, 0, 0));
        let rep = window_product_check(&x, &y, 30);
        assert_eq!(rep.safe, 10);
        assert!(rep.agrees);
    }
}
