use num_bigint::BigInt;

use crate::gamma::{
    alpha1, associativity_holds, associator, beta1, oplus, oplus_oracle, phi_infinity, sum_ring_data, wagoner_q_check, window_product_check,
    wodzicki_blowup, OracleMatrix, ProgressionMatrix,
};
use crate::report::{check_eq, CheckRecord};
use crate::rings::Ring;

use super::{verdict, Sampler, SuiteConfig};

fn id(s: &str) -> String {
    format!("gamma.{}", s)
}

fn oracle(x: &ProgressionMatrix) -> OracleMatrix {
    OracleMatrix::from_progression(x)
}

pub(crate) fn checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let n = cfg.window;
    let mut rng = Sampler::new(cfg.seed, 1);
    let samples: Vec<ProgressionMatrix> = (0..6).map(|_| rng.progression_matrix(3)).collect();
    let a = ProgressionMatrix::alpha_hat();
    let b = ProgressionMatrix::beta_hat();
    let one = ProgressionMatrix::identity();
    let e00 = ProgressionMatrix::unit(0, 0);

    // progression products
    out.push(check_eq(&id("product.alpha_beta"), "α̂β̂ = 1", &a.mul_ref(&b), &one));
    out.push(check_eq(&id("product.corner"), "1 - β̂α̂ = e_{0,0}", &one.sub_ref(&b.mul_ref(&a)), &e00));
    out.push(check_eq(&id("product.unit_shift"), "e_{0,0} α̂ = e_{0,1}", &e00.mul_ref(&a), &ProgressionMatrix::unit(0, 1)));
    let mut bad = None;
    for x in &samples {
        for y in &samples {
            let lhs = x.mul_ref(y).window(48);
            let rhs = oracle(x).mul(&oracle(y)).window(48);
            if lhs != rhs && bad.is_none() {
                bad = Some(format!("x = {}, y = {}", x, y));
            }
        }
    }
    out.push(verdict(id("product.matches_entries"), "normal form products agree with exact entrywise products", bad));
    let bad = samples.iter().find(|x| !x.satisfies_cone_conditions(128)).map(|x| x.to_string());
    out.push(verdict(id("cone_conditions"), "finitely many values and bounded row/column support on the 128 window", bad));
    let mut bad = None;
    for x in &samples {
        for y in &samples {
            let ideal = ProgressionMatrix::from_terms(x.m_infinity_split().0.terms().to_vec());
            if !ideal.mul_ref(y).is_finite() || !y.mul_ref(&ideal).is_finite() {
                bad = Some(format!("finite part of {} times {}", x, y));
            }
        }
    }
    out.push(verdict(id("finite_ideal"), "finite matrices form a two-sided ideal", bad));

    // M_∞ split
    out.push(check_eq(&id("split.finite"), "x ∈ M_∞ splits as (x, 0)", &e00.m_infinity_split(), &(e00.clone(), ProgressionMatrix::zero())));
    out.push(check_eq(&id("split.corner"), "1 - β̂α̂ splits as (e_{0,0}, 0)", &one.sub_ref(&b.mul_ref(&a)).m_infinity_split(), &(e00.clone(), ProgressionMatrix::zero())));
    out.push(check_eq(&id("split.shift"), "α̂ splits as (0, α̂)", &a.m_infinity_split(), &(ProgressionMatrix::zero(), a.clone())));
    let bad = samples.iter().find(|x| {
        let (f, p) = x.m_infinity_split();
        f.add_ref(&p) != **x || x.add_ref(&e00).m_infinity_split().1 != p
    });
    out.push(verdict(id("split.reconstructs"), "finite + progression part = x, progression part is constant on M_∞ cosets", bad.map(|x| x.to_string())));

    // sum ring
    let data = sum_ring_data();
    for (i, (rel, ok)) in data.relations.iter().enumerate() {
        out.push(CheckRecord::new(id(&format!("sum_ring.{:02}", i)), rel.clone(), *ok));
    }
    out.push(check_eq(&id("oplus.units"), "e_{0,0} ⊕ e_{0,0} = e_{0,0} + e_{1,1}", &oplus(&e00, &e00), &e00.add_ref(&ProgressionMatrix::unit(1, 1))));
    let x = a.add_ref(&ProgressionMatrix::unit(2, 0));
    out.push(check_eq(&id("oplus.zero"), "x ⊕ 0 = β₁ x α₁", &oplus(&x, &ProgressionMatrix::zero()), &beta1().mul_ref(&x).mul_ref(&alpha1())));
    let s = oplus(&x, &b);
    let bad = (0..16).flat_map(|i| (0..16).map(move |j| (i, j))).find(|(i, j)| s.entry(2 * i, 2 * j) != x.entry(*i, *j));
    out.push(verdict(id("oplus.even_entries"), "(x ⊕ y)(2i, 2j) = x(i, j)", bad.map(|p| format!("{:?}", p))));
    let (u, u_prime) = associator();
    out.push(check_eq(&id("oplus.associator_invertible"), "U U' = 1", &u.mul_ref(&u_prime), &one));
    let mut bad = None;
    for x in &samples {
        for y in &samples[..3] {
            for z in &samples[3..] {
                let windowed = oracle(&u).mul(&oracle(&oplus(&oplus(x, y), z))).mul(&oracle(&u_prime)).window(n);
                if !associativity_holds(x, y, z) || windowed != oplus(x, &oplus(y, z)).window(n) {
                    bad = Some(format!("x = {}, y = {}, z = {}", x, y, z));
                }
            }
        }
    }
    out.push(verdict(id("oplus.associative_up_to_conjugation"), "U ((x⊕y)⊕z) U' = x⊕(y⊕z), exactly and on the window", bad));

    // φ^∞
    let phi_e = phi_infinity(&oracle(&e00)).window(n);
    let bad = (0..n).flat_map(|r| (0..n).map(move |s| (r, s))).find(|&(r, s)| {
        let expected = i64::from(r == s && (r + 1).is_power_of_two());
        phi_e[r][s] != BigInt::from(expected)
    });
    out.push(verdict(id("phi.corner"), "φ^∞(e_{0,0}) has entry 1 exactly at (2^k - 1, 2^k - 1)", bad.map(|p| format!("{:?}", p))));
    out.push(CheckRecord::new(id("phi.zero"), "φ^∞(0) = 0", phi_infinity(&oracle(&ProgressionMatrix::zero())).window(n).iter().flatten().all(|v| *v == BigInt::from(0))));
    let mut pool = vec![a.clone(), b.clone(), one.clone()];
    pool.extend(samples.iter().take(3).cloned());
    let bad = pool.iter().find(|x| {
        let phi = phi_infinity(&oracle(x));
        oplus_oracle(&oracle(x), &phi).window(n) != phi.window(n)
    });
    out.push(verdict(id("phi.absorbs_summand"), "x ⊕ φ^∞(x) = φ^∞(x) on the window", bad.map(|x| x.to_string())));
    let mut bad = None;
    let mut min_safe = n;
    for x in &pool {
        for y in &pool {
            let px = phi_infinity(&oracle(x));
            let py = phi_infinity(&oracle(y));
            let lhs = phi_infinity(&oracle(&x.mul_ref(y)));
            let rep = window_product_check(&px, &py, n);
            min_safe = min_safe.min(rep.safe);
            let exact = px.mul(&py).window(rep.safe);
            if !rep.agrees || lhs.window(rep.safe) != exact {
                bad = Some(format!("x = {}, y = {}, safe window {}", x, y, rep.safe));
            }
        }
    }
    out.push(verdict(id("phi.multiplicative"), "φ^∞(xy) = φ^∞(x) φ^∞(y) on the safe subwindow", bad).with_note(format!("window {}, smallest safe subwindow {}", n, min_safe)));

    // Wagoner
    let rep = wagoner_q_check(&samples);
    out.push(CheckRecord::new(id("wagoner.inverse"), "Q Q⁻¹ = Q⁻¹ Q = 1", rep.inverse_ok));
    out.push(
        verdict(id("wagoner.conjugation"), "Q diag(a ⊕ b, 0, 0) Q⁻¹ = diag(a, b, 0)", rep.first_failure().map(|(a, b, _)| format!("a = {}, b = {}", a, b)))
            .with_note(format!("{} pairs", rep.samples.len())),
    );
    let (q, q_inv) = crate::gamma::wagoner_q();
    let (x, y) = (a.clone(), b.clone());
    let mut bad = None;
    let zero = ProgressionMatrix::zero();
    let lhs = q.mul_ref(&crate::rings::RingMatrix::diagonal(vec![oplus(&x, &y), zero.clone(), zero.clone()])).mul_ref(&q_inv);
    for i in 0..3 {
        let expected = if i == 0 { x.window(n) } else if i == 1 { y.window(n) } else { zero.window(n) };
        if lhs.get(i, i).window(n) != expected {
            bad = Some(format!("diagonal entry {}", i));
        }
    }
    out.push(verdict(id("wagoner.window"), "Q diag(α̂ ⊕ β̂, 0, 0) Q⁻¹ = diag(α̂, β̂, 0) on the window", bad));

    // Wodzicki
    let mut sizes = vec![1, 3, 10, 28];
    if !sizes.contains(&n) {
        sizes.push(n);
    }
    let reps: Vec<_> = sizes.iter().map(|s| wodzicki_blowup(*s)).collect();
    for (s, expected) in [(1, 1), (3, 2), (10, 4)] {
        out.push(check_eq(&id(&format!("wodzicki.n{}", s)), "max entry of A^2 on the window = largest full block", &wodzicki_blowup(s).max_entry, &BigInt::from(expected)));
    }
    let growth: Vec<BigInt> = reps[1..4].iter().map(|r| r.max_entry.clone()).collect();
    out.push(
        CheckRecord::new(id("wodzicki.unbounded"), "max entry of A^2 strictly increases along N = 3, 10, 28", growth.windows(2).all(|w| w[0] < w[1]) && reps.iter().all(|r| r.pass()))
            .with_note(format!("{:?}", reps.iter().map(|r| (r.window, r.max_entry.to_string())).collect::<Vec<_>>())),
    );
    out
}
