//! A computable slice of the cone ring: progression matrices, entry oracles,
//! the sum-ring structure given by `α_k, β_k` and the Wodzicki example.

mod oracle;
mod progression;

pub use oracle::{dyadic_index, dyadic_split, phi_infinity, safe_subwindow, window_product_check, OracleMatrix, WindowProductReport};
pub use progression::{window_csv, window_mul, Progression, ProgressionMatrix, Term};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rings::{Ring, RingMatrix};

/// `α₁ = Σ e_{i,2i}`
pub fn alpha1() -> ProgressionMatrix {
    ProgressionMatrix::progression(1, 0, 2, 0, 0)
}

/// `β₁ = Σ e_{2i,i}`
pub fn beta1() -> ProgressionMatrix {
    ProgressionMatrix::progression(2, 0, 1, 0, 0)
}

/// `α₂ = Σ e_{i,2i+1}`
pub fn alpha2() -> ProgressionMatrix {
    ProgressionMatrix::progression(1, 0, 2, 1, 0)
}

/// `β₂ = Σ e_{2i+1,i}`
pub fn beta2() -> ProgressionMatrix {
    ProgressionMatrix::progression(2, 1, 1, 0, 0)
}

#[derive(Clone, Debug)]
pub struct SumRingData {
    pub alpha1: ProgressionMatrix,
    pub beta1: ProgressionMatrix,
    pub alpha2: ProgressionMatrix,
    pub beta2: ProgressionMatrix,
    /// `(relation, holds)`
    pub relations: Vec<(String, bool)>,
}

impl SumRingData {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }
}

pub fn sum_ring_data() -> SumRingData {
    let (a1, b1, a2, b2) = (alpha1(), beta1(), alpha2(), beta2());
    let one = ProgressionMatrix::identity();
    let zero = ProgressionMatrix::zero();
    let mut relations = vec![
        ("a1*b1 = 1".to_string(), a1.mul_ref(&b1) == one),
        ("a2*b2 = 1".to_string(), a2.mul_ref(&b2) == one),
        ("b1*a1 + b2*a2 = 1".to_string(), b1.mul_ref(&a1).add_ref(&b2.mul_ref(&a2)) == one),
        ("a2*b1 = 0".to_string(), a2.mul_ref(&b1) == zero),
        ("a1*b2 = 0".to_string(), a1.mul_ref(&b2) == zero),
    ];
    for i in 0..=4u32 {
        for j in 0..=4u32 {
            let lhs = a1.mul_ref(&a2.pow(i)).mul_ref(&b2.pow(j)).mul_ref(&b1);
            let expected = if i == j { one.clone() } else { zero.clone() };
            relations.push((format!("a1*a2^{}*b2^{}*b1 = {}", i, j, u8::from(i == j)), lhs == expected));
        }
    }
    SumRingData { alpha1: a1, beta1: b1, alpha2: a2, beta2: b2, relations }
}

/// `x ⊕ y = β₁ x α₁ + β₂ y α₂`
pub fn oplus(x: &ProgressionMatrix, y: &ProgressionMatrix) -> ProgressionMatrix {
    beta1().mul_ref(x).mul_ref(&alpha1()).add_ref(&beta2().mul_ref(y).mul_ref(&alpha2()))
}

pub fn oplus_oracle(x: &OracleMatrix, y: &OracleMatrix) -> OracleMatrix {
    let o = |m: &ProgressionMatrix| OracleMatrix::from_progression(m);
    o(&beta1()).mul(x).mul(&o(&alpha1())).add(&o(&beta2()).mul(y).mul(&o(&alpha2())))
}

/// `U` with `U ((x⊕y)⊕z) U' = x⊕(y⊕z)` and `U U' = 1`.
pub fn associator() -> (ProgressionMatrix, ProgressionMatrix) {
    let (a1, b1, a2, b2) = (alpha1(), beta1(), alpha2(), beta2());
    let u = b1.mul_ref(&a1).mul_ref(&a1)
        + b2.mul_ref(&b1).mul_ref(&a2).mul_ref(&a1)
        + b2.mul_ref(&b2).mul_ref(&a2);
    let u_prime = b1.mul_ref(&b1).mul_ref(&a1)
        + b1.mul_ref(&b2).mul_ref(&a1).mul_ref(&a2)
        + b2.mul_ref(&a2).mul_ref(&a2);
    (u, u_prime)
}

pub fn associativity_holds(x: &ProgressionMatrix, y: &ProgressionMatrix, z: &ProgressionMatrix) -> bool {
    let (u, v) = associator();
    let left = oplus(&oplus(x, y), z);
    let right = oplus(x, &oplus(y, z));
    u.mul_ref(&left).mul_ref(&v) == right
}

/// The pair `(Q, Q⁻¹)` of 3x3 matrices over words in `α_k, β_k`.
pub fn wagoner_q() -> (RingMatrix<ProgressionMatrix>, RingMatrix<ProgressionMatrix>) {
    let z = ProgressionMatrix::zero;
    let one = ProgressionMatrix::identity;
    let q0 = RingMatrix::from_rows(vec![
        vec![z(), beta1(), beta2()],
        vec![alpha1(), z(), z()],
        vec![alpha2(), z(), z()],
    ]);
    let p = RingMatrix::from_rows(vec![vec![z(), one(), z()], vec![z(), z(), one()], vec![one(), z(), z()]]);
    let q = p.mul_ref(&q0);
    let q_inv = q0.mul_ref(&p.transpose());
    (q, q_inv)
}

#[derive(Clone, Debug)]
pub struct WagonerReport {
    pub inverse_ok: bool,
    /// `(a, b, holds)` for each tested pair.
    pub samples: Vec<(ProgressionMatrix, ProgressionMatrix, bool)>,
}

impl WagonerReport {
    pub fn pass(&self) -> bool {
        self.inverse_ok && self.samples.iter().all(|s| s.2)
    }

    pub fn first_failure(&self) -> Option<&(ProgressionMatrix, ProgressionMatrix, bool)> {
        self.samples.iter().find(|s| !s.2)
    }
}

/// Checks `Q Q⁻¹ = Q⁻¹ Q = 1` and `Q diag(a⊕b, 0, 0) Q⁻¹ = diag(a, b, 0)`.
pub fn wagoner_q_check(samples: &[ProgressionMatrix]) -> WagonerReport {
    let (q, q_inv) = wagoner_q();
    let id = RingMatrix::identity(3, &ProgressionMatrix::identity());
    let inverse_ok = q.mul_ref(&q_inv) == id && q_inv.mul_ref(&q) == id;
    let mut pool = vec![ProgressionMatrix::zero(), ProgressionMatrix::alpha_hat(), ProgressionMatrix::beta_hat(), ProgressionMatrix::unit(0, 0)];
    pool.extend(samples.iter().cloned());
    let zero = ProgressionMatrix::zero();
    let mut out = Vec::new();
    for a in &pool {
        for b in &pool {
            let lhs = q.mul_ref(&RingMatrix::diagonal(vec![oplus(a, b), zero.clone(), zero.clone()])).mul_ref(&q_inv);
            let rhs = RingMatrix::diagonal(vec![a.clone(), b.clone(), zero.clone()]);
            out.push((a.clone(), b.clone(), lhs == rhs));
        }
    }
    WagonerReport { inverse_ok, samples: out }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WodzickiReport {
    pub window: usize,
    pub max_entry: BigInt,
    pub largest_full_block: usize,
}

impl WodzickiReport {
    pub fn pass(&self) -> bool {
        self.max_entry == BigInt::from(self.largest_full_block)
    }
}

/// Block-diagonal matrix of all-ones blocks of sizes `1, 2, 3, ...`, as an oracle.
pub fn wodzicki_matrix() -> OracleMatrix {
    fn block(r: i64) -> (i64, i64) {
        // block m occupies [m(m-1)/2, m(m+1)/2)
        let mut m = 1i64;
        while m * (m + 1) / 2 <= r {
            m += 1;
        }
        (m * (m - 1) / 2, m)
    }
    let support = |r: i64| {
        let (start, m) = block(r);
        (start..start + m).collect::<Vec<_>>()
    };
    OracleMatrix::new(
        move |r, s| if block(r) == block(s) { BigInt::one() } else { BigInt::zero() },
        support,
        support,
    )
}

/// Squares the `n x n` window of the block matrix and records its largest entry.
pub fn wodzicki_blowup(n: usize) -> WodzickiReport {
    let w = wodzicki_matrix().window(n);
    let sq = window_mul(&w, &w);
    let max_entry = sq.iter().flatten().max().cloned().unwrap_or_default();
    let mut largest_full_block = 0;
    let mut end = 0;
    for m in 1.. {
        end += m;
        if end > n {
            break;
        }
        largest_full_block = m;
    }
    WodzickiReport { window: n, max_entry, largest_full_block }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn sum_ring_relations() {
        let data = sum_ring_data();
        assert!(data.all_hold(), "{:?}", data.relations.iter().filter(|r| !r.1).collect::<Vec<_>>());
        assert_eq!(data.relations.len(), 30);
    }

    #[test]
    fn oplus_examples() {
        let e = ProgressionMatrix::unit(0, 0);
        assert_eq!(oplus(&e, &e), ProgressionMatrix::unit(0, 0) + ProgressionMatrix::unit(1, 1));
        let x = ProgressionMatrix::alpha_hat() + ProgressionMatrix::unit(2, 0);
        assert_eq!(oplus(&x, &ProgressionMatrix::zero()), beta1().mul_ref(&x).mul_ref(&alpha1()));
        let y = ProgressionMatrix::beta_hat();
        let s = oplus(&x, &y);
        for i in 0..10 {
            for j in 0..10 {
                assert_eq!(s.entry(2 * i, 2 * j), x.entry(i, j));
                assert_eq!(s.entry(2 * i + 1, 2 * j + 1), y.entry(i, j));
            }
        }
    }

    #[test]
    fn phi_infinity_examples() {
        let e = OracleMatrix::from_progression(&ProgressionMatrix::unit(0, 0));
        let w = phi_infinity(&e).window(64);
        for (r, row) in w.iter().enumerate() {
            for (s, v) in row.iter().enumerate() {
                let diag_point = r == s && (r + 1).is_power_of_two();
                assert_eq!(*v, bi(i64::from(diag_point)), "({},{})", r, s);
            }
        }
        let z = OracleMatrix::from_progression(&ProgressionMatrix::zero());
        assert!(phi_infinity(&z).window(64).iter().flatten().all(|v| v.is_zero()));
    }

    #[test]
    fn phi_infinity_absorbs_a_summand() {
        let x = OracleMatrix::from_progression(&ProgressionMatrix::alpha_hat());
        let phi = phi_infinity(&x);
        assert_eq!(oplus_oracle(&x, &phi).window(64), phi.window(64));
    }

    #[test]
    fn phi_infinity_is_multiplicative_on_windows() {
        let a = ProgressionMatrix::alpha_hat();
        let b = ProgressionMatrix::beta_hat();
        let lhs = phi_infinity(&OracleMatrix::from_progression(&a.mul_ref(&b)));
        let pa = phi_infinity(&OracleMatrix::from_progression(&a));
        let pb = phi_infinity(&OracleMatrix::from_progression(&b));
        assert_eq!(lhs.window(64), pa.mul(&pb).window(64));
        let rep = window_product_check(&pa, &pb, 64);
        assert!(rep.agrees && rep.safe > 0);
    }

    #[test]
    fn wagoner_identity() {
        let rep = wagoner_q_check(&[ProgressionMatrix::progression(2, 1, 3, 0, 1)]);
        assert!(rep.inverse_ok);
        assert!(rep.pass(), "{:?}", rep.first_failure());
    }

    #[test]
    fn wodzicki_values() {
        for (n, m) in [(1, 1), (3, 2), (10, 4), (28, 7), (5, 2)] {
            let rep = wodzicki_blowup(n);
            assert_eq!(rep.max_entry, bi(m));
            assert!(rep.pass());
        }
    }

    #[test]
    fn associator_is_invertible() {
        let (u, v) = associator();
        assert_eq!(u.mul_ref(&v), ProgressionMatrix::identity());
    }

    fn arb_matrix() -> impl Strategy<Value = ProgressionMatrix> {
        let term = prop_oneof![
            (0i64..6, 0i64..6, -2i64..3).prop_map(|(p, q, c)| (Term::Entry(p, q), BigInt::from(c))),
            (1i64..4, 0i64..5, 1i64..4, 0i64..5, 0i64..3, -2i64..3)
                .prop_map(|(a, b, c, d, s, k)| (Term::Progression(Progression::new(a, b, c, d, s)), BigInt::from(k))),
        ];
        prop::collection::vec(term, 0..3).prop_map(ProgressionMatrix::from_terms)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn oplus_associative_up_to_conjugation(x in arb_matrix(), y in arb_matrix(), z in arb_matrix()) {
            prop_assert!(associativity_holds(&x, &y, &z));
        }

        #[test]
        fn wagoner_conjugation_on_samples(a in arb_matrix(), b in arb_matrix()) {
            let (q, q_inv) = wagoner_q();
            let zero = ProgressionMatrix::zero();
            let lhs = q.mul_ref(&RingMatrix::diagonal(vec![oplus(&a, &b), zero.clone(), zero.clone()])).mul_ref(&q_inv);
            prop_assert_eq!(lhs, RingMatrix::diagonal(vec![a, b, zero]));
        }

        #[test]
        fn phi_infinity_multiplicative(x in arb_matrix(), y in arb_matrix()) {
            let lhs = phi_infinity(&OracleMatrix::from_progression(&x.mul_ref(&y)));
            let rhs = phi_infinity(&OracleMatrix::from_progression(&x)).mul(&phi_infinity(&OracleMatrix::from_progression(&y)));
            prop_assert_eq!(lhs.window(48), rhs.window(48));
        }
    }
}
