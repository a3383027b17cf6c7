use std::sync::Arc;

use num_bigint::BigInt;

use crate::power::{exponential_failure_check, induced_hom, pointed_power, power, pull_back, quotient_exactness_check, PowerRing, PowerRingElement};
use crate::report::{check_eq, CheckRecord};
use crate::rings::IntPolynomial;
use crate::simplicial::{boundary, circle, iterated_subdivision, point, quotient, standard_simplex, subdivide, FiniteSimplicialSet, SimplicialMap};

use super::{verdict, SuiteConfig};

fn id(s: &str) -> String {
    format!("power.{}", s)
}

fn t() -> IntPolynomial {
    IntPolynomial::var(0)
}

/// Catalog for the freeness checks, with the largest degree bound used on it.
fn catalog(cfg: &SuiteConfig) -> Vec<(String, Arc<FiniteSimplicialSet>)> {
    let mut out: Vec<(String, Arc<FiniteSimplicialSet>)> = Vec::new();
    for n in 0..=3 {
        out.push((format!("simplex{}", n), Arc::new(standard_simplex(n))));
    }
    for n in 1..=3 {
        out.push((format!("boundary{}", n), Arc::new(boundary(n))));
    }
    let d1 = Arc::new(standard_simplex(1));
    let s1 = Arc::new(circle());
    for m in 1..=cfg.subdivisions.min(4) {
        out.push((format!("sd{}_interval", m), iterated_subdivision(&d1, m).expect("sd^m Δ^1").0));
    }
    for m in 1..=cfg.subdivisions.min(3) {
        out.push((format!("sd{}_circle", m), iterated_subdivision(&s1, m).expect("sd^m S^1").0));
    }
    out.push(("circle".into(), s1));
    out
}

fn edge_components(ring: &PowerRing, k: &FiniteSimplicialSet, edge: &str) -> Vec<IntPolynomial> {
    let e = k.lookup(edge).expect("edge");
    let mut v: Vec<IntPolynomial> = ring.basis().iter().map(|b| b.component(e).clone()).collect();
    v.sort_by_key(|p| p.degree());
    v
}

pub(crate) fn checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let d = cfg.degree;

    // freeness and multiplicative closure
    for (name, k) in catalog(cfg) {
        let ring = PowerRing::compute(Arc::clone(&k), d, &[]);
        let again = PowerRing::compute(Arc::clone(&k), d, &[]);
        let closure = ring.check_multiplicative_closure();
        let bad = match closure {
            Err((i, j)) => Some(format!("product of basis elements {} and {} leaves the lattice", i, j)),
            Ok(_) if ring.lattice() != again.lattice() => Some("basis is not reproducible".into()),
            Ok(_) => None,
        };
        let ranks = ring.graded_basis().ranks();
        out.push(
            verdict(id(&format!("free.{}", name)), "degree slices are free with HNF bases; products re-expand integrally", bad)
                .with_note(format!("d = {}, ranks {:?}", d, ranks)),
        );
    }

    // examples
    let d1 = Arc::new(standard_simplex(1));
    let (r, b) = power(&d1, 2);
    out.push(check_eq(&id("interval.ranks"), "Z^{Δ^1} up to degree 2 has ranks 1, 1, 1", &b.ranks(), &vec![1, 1, 1]));
    out.push(check_eq(&id("interval.basis"), "basis 1, t, t^2", &edge_components(&r, &d1, "01"), &vec![IntPolynomial::one(), t(), t() * t()]));
    out.push(check_eq(&id("two_points.ranks"), "Z^{∂Δ^1} = Z x Z", &power(&Arc::new(boundary(1)), 2).1.ranks(), &vec![2, 0, 0]));
    let s1 = Arc::new(circle());
    let (rs, bs) = power(&s1, 3);
    out.push(check_eq(&id("circle.rank"), "Z^{S^1} up to degree 3 has rank 3", &bs.total_rank(), &3));
    let other: Vec<PowerRingElement> = [IntPolynomial::one(), t() * t() - t(), t() * t() * t() - t() * t()]
        .iter()
        .map(|p| PowerRingElement::from_fn(&s1, |x| if x.dim == 0 { IntPolynomial::constant(p.eval(&[BigInt::from(0)])) } else { p.clone() }))
        .collect();
    out.push(CheckRecord::new(id("circle.basis"), "{1, t^2 - t, t^3 - t^2} is a basis of {p : p(0) = p(1)}", rs.span(&other) == *rs.lattice()));
    let (rp, _) = pointed_power(&d1, d1.lookup("0").expect("vertex"), 3).expect("pointed interval");
    out.push(check_eq(&id("pointed.interval"), "Z^{(Δ^1, 0)} = tZ[t]: basis t, t^2, t^3", &edge_components(&rp, &d1, "01"), &vec![t(), t() * t(), t() * t() * t()]));
    let (ro, _) = pointed_power(&s1, s1.lookup("*").expect("basepoint"), 2).expect("pointed circle");
    out.push(check_eq(&id("pointed.circle"), "Z^{(S^1, *)} up to degree 2 is spanned by t^2 - t", &edge_components(&ro, &s1, "e"), &vec![t() * t() - t()]));
    let pt = Arc::new(point());
    out.push(check_eq(&id("pointed.point"), "Z^{(Δ^0, *)} = 0", &pointed_power(&pt, pt.lookup("*").expect("basepoint"), d).expect("pointed point").0.rank(), &0));
    out.push(CheckRecord::new(id("pointed.non_vertex_rejected"), "basepoint must be a vertex", pointed_power(&d1, d1.lookup("01").expect("edge"), 2).is_err()));

    // loops vanish at both ends of Δ^1 -> S^1
    let (_, proj) = quotient(&d1, &d1.refs(&["0", "1"]).expect("vertices")).expect("Δ^1/∂Δ^1");
    let (ro_d, _) = pointed_power(&proj.target, proj.target.basepoint().expect("pointed"), d).expect("pointed quotient");
    let vanish = ro_d.basis().iter().all(|b| {
        let back = pull_back(&proj, b);
        d1.simplices_of_dim(0).all(|v| back.at_vertex(v) == BigInt::from(0))
    });
    out.push(CheckRecord::new(id("pointed.loops_vanish_at_endpoints"), "pulled back along Δ^1 -> S^1, loops vanish under ev_0 and ev_1", vanish));

    // induced maps
    let inc = SimplicialMap::inclusion(Arc::clone(&d1), &d1.refs(&["0", "1"]).expect("vertices")).expect("inclusion");
    let e = d1.lookup("01").expect("edge");
    let p = IntPolynomial::from_coeffs(&[3, -1, 4]);
    let g = PowerRingElement::from_fn(&d1, |x| if x == e { p.clone() } else { IntPolynomial::constant(p.eval(&[BigInt::from(x.idx as i64)])) });
    let back = pull_back(&inc, &g);
    let ends: Vec<BigInt> = inc.source.simplices_of_dim(0).map(|v| back.at_vertex(v)).collect();
    out.push(check_eq(&id("induced.endpoints"), "∂Δ^1 ⊂ Δ^1 induces p -> (p(0), p(1))", &ends, &vec![BigInt::from(3), BigInt::from(6)]));
    let r0 = power(&d1, d.min(4)).0;
    out.push(CheckRecord::new(id("induced.identity"), "the identity induces the identity", induced_hom(&SimplicialMap::identity(Arc::clone(&d1)), &r0, &r0).is_identity()));
    let (sd1, h1) = subdivide(&d1).expect("sd Δ^1");
    let (sd2, h2) = iterated_subdivision(&d1, 2).expect("sd^2 Δ^1");
    let (_, h21) = subdivide(&sd1).expect("sd of sd");
    let r1 = power(&sd1, d.min(4)).0;
    let r2 = power(&sd2, d.min(4)).0;
    out.push(check_eq(
        &id("induced.functorial"),
        "induced(h ∘ h') = induced(h') ∘ induced(h) along sd^2 Δ^1 -> sd Δ^1 -> Δ^1",
        &induced_hom(&h2, &r0, &r2),
        &induced_hom(&h21, &r1, &r2).after(&induced_hom(&h1, &r0, &r1)),
    ));
    let tt = r0.basis().into_iter().find(|b| b.degree() == Some(1)).expect("degree one element");
    let img = pull_back(&h1, &tt);
    let pieces: Vec<IntPolynomial> = sd1.simplices_of_dim(1).map(|x| img.component(x).clone()).collect();
    out.push(CheckRecord::new(id("induced.last_vertex_piecewise"), "the last vertex map pulls t back to a compatible piecewise tuple", img.is_compatible(&sd1) && r1.contains(&img)).with_note(format!("pieces {:?}", pieces)));

    // exactness
    let rep = quotient_exactness_check(&d1, &d1.refs(&["0", "1"]).expect("vertices"), d1.lookup("0").expect("vertex"), d, 1);
    out.push(exactness_record("exactness.interval", "0 -> Z^{(Δ^1/∂Δ^1,*)} -> Z^{(Δ^1,*)} -> Z^{(∂Δ^1,*)} -> 0", rep));
    let d2 = Arc::new(standard_simplex(2));
    let bd2: Vec<_> = d2.simplices().filter(|x| x.dim < 2).collect();
    let rep = quotient_exactness_check(&d2, &bd2, d2.lookup("0").expect("vertex"), d.min(5), 2);
    out.push(exactness_record("exactness.triangle", "0 -> Z^{(Δ^2/∂Δ^2,*)} -> Z^{(Δ^2,*)} -> Z^{(∂Δ^2,*)} -> 0", rep));
    let all: Vec<_> = d2.simplices().collect();
    let rep = quotient_exactness_check(&d2, &all, d2.lookup("0").expect("vertex"), d.min(4), 0);
    out.push(exactness_record("exactness.full", "K = L: restriction is the identity and the kernel vanishes", rep));

    // exponential law
    let rep = exponential_failure_check(d.min(4));
    out.push(
        CheckRecord::new(id("exponential.ranks_differ"), "Z^{Δ^1 x Δ^1} and Z^{Δ^2} have different degree ranks", rep.first_difference.is_some())
            .with_note(format!("square {:?}, triangle {:?}", rep.square_ranks, rep.triangle_ranks)),
    );
    out.push(check_eq(&id("exponential.triangle_linear"), "Z^{Δ^2} up to degree 1 has rank 3", &rep.triangle_ranks.iter().take(2).sum::<usize>(), &3));
    let unit = crate::simplicial::product(&standard_simplex(2), &standard_simplex(0)).expect("product");
    out.push(check_eq(
        &id("exponential.unit"),
        "Z^{Δ^2 x Δ^0} has the ranks of Z^{Δ^2}",
        &power(&Arc::new(unit), d.min(4)).1.ranks(),
        &power(&d2, d.min(4)).1.ranks(),
    ));

    // disjoint unions
    let u = Arc::new(standard_simplex(1).disjoint_union(&circle()));
    let lhs = power(&u, d.min(4)).1.ranks();
    let (a, b2) = (power(&d1, d.min(4)).1.ranks(), power(&s1, d.min(4)).1.ranks());
    out.push(check_eq(&id("disjoint_union.ranks"), "Z^{K ⊔ K'} = Z^K x Z^{K'} rank-wise", &lhs, &a.iter().zip(&b2).map(|(x, y)| x + y).collect()));

    if let Some(k) = &cfg.input {
        let ring = PowerRing::compute(Arc::clone(k), d, &[]);
        let bad = ring.check_multiplicative_closure().err().map(|(i, j)| format!("basis elements {} and {}", i, j));
        out.push(verdict(id("input.free"), "degree slices of the input are free and closed under products", bad).with_note(format!("ranks {:?}", ring.graded_basis().ranks())));
    }
    out
}

fn exactness_record(name: &str, anchor: &str, rep: Result<crate::power::ExactnessReport, crate::simplicial::SimplicialError>) -> CheckRecord {
    match rep {
        Ok(r) => CheckRecord::new(id(name), anchor, r.pass())
            .witness_on_failure(|| r.witness.clone().unwrap_or_default())
            .with_note(format!("d = {}, slack = {}, kernel rank {}", r.degree_bound, r.slack, r.kernel_rank)),
        Err(e) => CheckRecord::new(id(name), anchor, false).witness_on_failure(|| e.to_string()),
    }
}
