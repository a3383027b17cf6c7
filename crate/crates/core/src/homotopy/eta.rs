//! The path-of-paths transformation `Z^I -> Z^I ⊗ Z^I` on an interval
//! subdivided into `m` edges, assembled from one polynomial per square of
//! the `m x m` grid.
//!
//! Square `(k, l)` (1-based) is sent to edge `k` by `s = t1` when `l < k`,
//! to edge `l` by `s = t2` when `k < l`; the diagonal squares carry the
//! formula `(1 - t1)(1 - t2)`, which is kept wherever it satisfies the
//! pasting constraints and otherwise replaced by the bilinear solution of
//! those constraints.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::rings::{IntPolynomial, Ring};

fn t1() -> IntPolynomial {
    IntPolynomial::var(0)
}

fn t2() -> IntPolynomial {
    IntPolynomial::var(1)
}

fn c(k: i64) -> IntPolynomial {
    IntPolynomial::constant(k)
}

fn diagonal_formula() -> IntPolynomial {
    (c(1) - t1()).mul_ref(&(c(1) - t2()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SquareSource {
    Printed,
    Solved { solutions: usize },
}

#[derive(Clone, Debug)]
pub struct SquareImage {
    pub edge: usize,
    pub poly: IntPolynomial,
    pub source: SquareSource,
}

impl SquareImage {
    /// Position along the whole interval, `edge - 1 + poly`.
    fn global(&self) -> IntPolynomial {
        c(self.edge as i64 - 1) + self.poly.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
    Bottom,
    Top,
}

fn restrict(p: &IntPolynomial, side: Side) -> IntPolynomial {
    match side {
        Side::Left => p.substitute(&[c(0), t2()]),
        Side::Right => p.substitute(&[c(1), t2()]),
        Side::Bottom => p.substitute(&[t1(), c(0)]),
        Side::Top => p.substitute(&[t1(), c(1)]),
    }
}

/// The variable left free on a side, renamed to `t1`.
fn as_path(p: &IntPolynomial, side: Side) -> IntPolynomial {
    let r = restrict(p, side);
    match side {
        Side::Left | Side::Right => r.substitute(&[t1(), t1()]),
        Side::Bottom | Side::Top => r,
    }
}

#[derive(Clone, Debug)]
pub struct EtaFamily {
    pub m: usize,
    /// `squares[k-1][l-1]`
    pub squares: Vec<Vec<SquareImage>>,
}

fn off_diagonal(k: usize, l: usize) -> SquareImage {
    if l < k {
        SquareImage { edge: k, poly: t1(), source: SquareSource::Printed }
    } else {
        SquareImage { edge: l, poly: t2(), source: SquareSource::Printed }
    }
}

/// Required global coordinate along each side of diagonal square `(k, k)`,
/// from its neighbours or, on the outer boundary, from the pattern of the
/// off-diagonal squares (bottom and left run along the interval, top and
/// right sit at its end).
fn diagonal_constraints(m: usize, k: usize) -> Vec<(Side, IntPolynomial)> {
    let mut out = Vec::new();
    let bottom = if k > 1 { restrict(&off_diagonal(k, k - 1).global(), Side::Top) } else { c(0) + t1() };
    let left = if k > 1 { restrict(&off_diagonal(k - 1, k).global(), Side::Right) } else { c(0) + t2() };
    let top = if k < m { restrict(&off_diagonal(k, k + 1).global(), Side::Bottom) } else { c(m as i64) };
    let right = if k < m { restrict(&off_diagonal(k + 1, k).global(), Side::Left) } else { c(m as i64) };
    out.push((Side::Bottom, bottom));
    out.push((Side::Left, left));
    out.push((Side::Top, top));
    out.push((Side::Right, right));
    out
}

fn satisfies(edge: usize, g: &IntPolynomial, constraints: &[(Side, IntPolynomial)]) -> bool {
    let glob = c(edge as i64 - 1) + g.clone();
    constraints.iter().all(|(side, want)| restrict(&glob, *side) == *want)
}

/// Builds the family for `m` edges.
pub fn eta_family(m: usize) -> EtaFamily {
    assert!(m >= 1);
    let mut squares = Vec::with_capacity(m);
    for k in 1..=m {
        let mut row = Vec::with_capacity(m);
        for l in 1..=m {
            if k != l {
                row.push(off_diagonal(k, l));
                continue;
            }
            let printed = diagonal_formula();
            if m == 1 {
                row.push(SquareImage { edge: k, poly: printed, source: SquareSource::Printed });
                continue;
            }
            let cons = diagonal_constraints(m, k);
            if satisfies(k, &printed, &cons) {
                row.push(SquareImage { edge: k, poly: printed, source: SquareSource::Printed });
                continue;
            }
            let mut sols = Vec::new();
            for a in -2i64..=2 {
                for b in -2i64..=2 {
                    for cc in -2i64..=2 {
                        for d in -2i64..=2 {
                            let g = c(a) + t1().scale(&b.into()) + t2().scale(&cc.into()) + t1().mul_ref(&t2()).scale(&d.into());
                            if satisfies(k, &g, &cons) {
                                sols.push(g);
                            }
                        }
                    }
                }
            }
            let n = sols.len();
            let poly = sols.into_iter().next().unwrap_or_else(|| diagonal_formula());
            row.push(SquareImage { edge: k, poly, source: SquareSource::Solved { solutions: n } });
        }
        squares.push(row);
    }
    EtaFamily { m, squares }
}

/// The printed family with `(1 - t1)(1 - t2)` on every diagonal square.
pub fn printed_family(m: usize) -> EtaFamily {
    let squares = (1..=m)
        .map(|k| {
            (1..=m)
                .map(|l| if k == l { SquareImage { edge: k, poly: diagonal_formula(), source: SquareSource::Printed } } else { off_diagonal(k, l) })
                .collect()
        })
        .collect();
    EtaFamily { m, squares }
}

impl EtaFamily {
    pub fn square(&self, k: usize, l: usize) -> &SquareImage {
        &self.squares[k - 1][l - 1]
    }

    /// First pair of adjacent squares whose images disagree on the shared side.
    pub fn pasting_failure(&self) -> Option<String> {
        for k in 1..=self.m {
            for l in 1..=self.m {
                let here = self.square(k, l).global();
                if k < self.m && restrict(&here, Side::Right) != restrict(&self.square(k + 1, l).global(), Side::Left) {
                    return Some(format!("squares ({},{}) and ({},{})", k, l, k + 1, l));
                }
                if l < self.m && restrict(&here, Side::Top) != restrict(&self.square(k, l + 1).global(), Side::Bottom) {
                    return Some(format!("squares ({},{}) and ({},{})", k, l, k, l + 1));
                }
            }
        }
        None
    }

    /// Image of a family of edge polynomials `p[i]` (in `s = t1`), square by square.
    pub fn apply(&self, p: &[IntPolynomial]) -> Vec<Vec<IntPolynomial>> {
        self.squares
            .iter()
            .map(|row| row.iter().map(|sq| p[sq.edge - 1].substitute(&[sq.poly.clone()])).collect())
            .collect()
    }

    fn image_is_compatible(&self, img: &[Vec<IntPolynomial>]) -> bool {
        let m = self.m;
        (0..m).all(|k| {
            (0..m).all(|l| {
                (k + 1 == m || restrict(&img[k][l], Side::Right) == restrict(&img[k + 1][l], Side::Left))
                    && (l + 1 == m || restrict(&img[k][l], Side::Top) == restrict(&img[k][l + 1], Side::Bottom))
            })
        })
    }

    /// Restrictions of the grid to the bottom and left edges are the same
    /// path, and to the top and right edges a constant one.
    pub fn boundary_ladder(&self) -> (bool, bool) {
        let m = self.m;
        let bottom: Vec<IntPolynomial> = (1..=m).map(|k| as_path(&self.square(k, 1).global(), Side::Bottom)).collect();
        let left: Vec<IntPolynomial> = (1..=m).map(|l| as_path(&self.square(1, l).global(), Side::Left)).collect();
        let mut ends: Vec<IntPolynomial> = (1..=m).map(|k| restrict(&self.square(k, m).global(), Side::Top)).collect();
        ends.extend((1..=m).map(|l| restrict(&self.square(m, l).global(), Side::Right)));
        let constant = ends.iter().all(|p| p.constant_value().is_some() && *p == ends[0]);
        (bottom == left, constant)
    }
}

/// Spanning family of `Z^I` in degree `<= 2`: the unit and, for each edge
/// `i` and `j = 1, 2`, the function `0` before edge `i`, `s^j` on it, `1` after.
pub fn interval_samples(m: usize) -> Vec<Vec<IntPolynomial>> {
    let mut out = vec![vec![c(1); m]];
    for i in 0..m {
        for j in 1..=2u32 {
            out.push((0..m).map(|e| if e < i { c(0) } else if e == i { t1().pow(j) } else { c(1) }).collect());
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct EtaReport {
    pub edges: usize,
    pub printed_pastes: bool,
    pub printed_witness: Option<String>,
    pub pastes: bool,
    pub is_homomorphism: bool,
    pub bottom_equals_left: bool,
    pub top_right_constant: bool,
    /// `(k, l, edge, polynomial, origin)` for each diagonal square.
    pub diagonal: Vec<(usize, usize, usize, String, SquareSource)>,
}

impl EtaReport {
    pub fn pass(&self) -> bool {
        self.pastes && self.is_homomorphism && self.bottom_equals_left && self.top_right_constant
    }
}

pub fn eta_transformation(m: usize) -> EtaReport {
    let fam = eta_family(m);
    let printed = printed_family(m);
    let printed_witness = printed.pasting_failure();
    let samples = interval_samples(m);
    let mut is_hom = samples.iter().all(|p| fam.image_is_compatible(&fam.apply(p)));
    for p in &samples {
        for q in &samples {
            let pq: Vec<IntPolynomial> = p.iter().zip(q).map(|(a, b)| a.mul_ref(b)).collect();
            let lhs = fam.apply(&pq);
            let (ip, iq) = (fam.apply(p), fam.apply(q));
            let rhs: Vec<Vec<IntPolynomial>> =
                ip.iter().zip(&iq).map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| a.mul_ref(b)).collect()).collect();
            is_hom &= lhs == rhs;
        }
    }
    let (bottom_equals_left, top_right_constant) = fam.boundary_ladder();
    let names = ["t1", "t2"];
    EtaReport {
        edges: m,
        printed_pastes: printed_witness.is_none(),
        printed_witness,
        pastes: fam.pasting_failure().is_none(),
        is_homomorphism: is_hom,
        bottom_equals_left,
        top_right_constant,
        diagonal: (1..=m)
            .map(|k| {
                let sq = fam.square(k, k);
                (k, k, sq.edge, sq.poly.display_with(&names), sq.source)
            })
            .collect(),
    }
}

/// Value of the image polynomial of square `(k, l)` at integer corner `(a, b)`.
pub fn corner_value(fam: &EtaFamily, k: usize, l: usize, a: i64, b: i64) -> BigInt {
    let g = fam.square(k, l).global();
    let v = g.eval(&[BigInt::from(a), BigInt::from(b)]);
    if v.is_zero() {
        BigInt::zero()
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_keeps_the_formula() {
        let fam = eta_family(1);
        assert_eq!(fam.square(1, 1).poly, diagonal_formula());
        assert_eq!(fam.square(1, 1).source, SquareSource::Printed);
        // at t2 = 0 the image is 1 - t1
        assert_eq!(restrict(&fam.square(1, 1).poly, Side::Bottom), c(1) - t1());
        let rep = eta_transformation(1);
        assert!(rep.pass(), "{:?}", rep);
    }

    #[test]
    fn two_and_more_edges_paste() {
        for m in 2..=4 {
            let rep = eta_transformation(m);
            assert!(rep.pass(), "{:?}", rep);
            assert!(!rep.printed_pastes);
            let fam = eta_family(m);
            for k in 1..=m {
                assert_eq!(fam.square(k, k).poly, t1() + t2() - t1().mul_ref(&t2()));
                assert_eq!(fam.square(k, k).source, SquareSource::Solved { solutions: 1 });
            }
        }
    }

    #[test]
    fn shared_vertices_agree() {
        let fam = eta_family(2);
        for k in 1..=2usize {
            for l in 1..=2usize {
                if k < 2 {
                    for b in 0..=1 {
                        assert_eq!(corner_value(&fam, k, l, 1, b), corner_value(&fam, k + 1, l, 0, b));
                    }
                }
                if l < 2 {
                    for a in 0..=1 {
                        assert_eq!(corner_value(&fam, k, l, a, 1), corner_value(&fam, k, l + 1, a, 0));
                    }
                }
            }
        }
    }
}
