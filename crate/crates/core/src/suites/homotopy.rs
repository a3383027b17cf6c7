use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::homotopy::{
    check_elementary, check_graded, diagonal_amalgam, eta_family, eta_transformation, idempotent_square_zero_amalgam, loop_naturality,
    loop_rho, orthogonal_sum, path_algebra, polynomial_example, qq_calculus, square_zero_example, tensor_algebra, ElementaryHomotopy,
    Extension, IdempotentPair, QElem, RewriteSystem, RingElem, StructureRing, SubdividedPath, TensorElem, TildeMatrix, ZTilde,
};
use crate::report::{check_eq, CheckRecord};
use crate::rings::{rotation_homotopy_w, AlgebraHom, AlgebraPresentation, IntPolynomial, Ring, RingMatrix, UPoly};

use super::{verdict, SuiteConfig};

fn id(s: &str) -> String {
    format!("homotopy.{}", s)
}

fn scaling() -> (AlgebraPresentation, ElementaryHomotopy<IntPolynomial>) {
    let pres = AlgebraPresentation::new(&["x"], &[]).expect("free ring");
    let h = ElementaryHomotopy::new(AlgebraHom::new(&pres, vec![("x", UPoly::monomial(1, IntPolynomial::var(0)))]).expect("generator"));
    (pres, h)
}

fn zpoly(cs: &[i64]) -> UPoly<RingElem> {
    let z = StructureRing::integers();
    UPoly::from_coeffs(cs.iter().map(|c| z.elem(&[*c])).collect())
}

pub(crate) fn checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();

    // rotation
    let w = rotation_homotopy_w();
    out.push(CheckRecord::new(id("rotation.ev0"), "ev_0(W) = I", w.ev0_is_identity).witness_on_failure(|| format!("{:?}", w.ev0)));
    out.push(CheckRecord::new(id("rotation.ev1"), "ev_1(W) = ((0, -1), (1, 0))", w.ev1_is_rotation).witness_on_failure(|| format!("{:?}", w.ev1)));
    out.push(CheckRecord::new(id("rotation.det"), "det W = 1", w.det_is_one).witness_on_failure(|| w.det.to_string()));
    out.push(CheckRecord::new(id("rotation.inverse"), "W W⁻¹ = W⁻¹ W = I", w.inverse_verified));
    let diag2 = RingMatrix::diagonal(vec![IntPolynomial::constant(2), IntPolynomial::one()]);
    out.push(check_eq(&id("rotation.non_unit_rejected"), "diag(2, 1) has no inverse", &diag2.inverse_adjugate().err().map(|e| e.to_string()), &Some("det = 2 not a unit".to_string())));

    // elementary homotopies and paths
    let (pres, h) = scaling();
    let id_map = AlgebraHom::new(&pres, vec![("x", IntPolynomial::var(0))]).expect("generator");
    let zero_map = AlgebraHom::new(&pres, vec![("x", IntPolynomial::zero())]).expect("generator");
    let v = check_elementary(&h, &zero_map, &id_map);
    out.push(verdict(id("elementary.scaling"), "h(x) = x t connects 0 to the identity", v.witness.clone()));
    let v = check_elementary(&ElementaryHomotopy::constant(&id_map), &id_map, &id_map);
    out.push(verdict(id("elementary.constant"), "c_B ∘ f connects f to f", v.witness));
    let v = check_elementary(&h, &id_map, &id_map);
    out.push(CheckRecord::new(id("elementary.mismatch_reported"), "a wrong endpoint is reported with the generator", v.witness.as_deref() == Some("ev0 differs on x")));
    let level = cfg.subdivisions.min(4);
    let c = SubdividedPath::constant(level, &id_map).expect("constant path");
    let cc = c.concat(&c).expect("concat");
    let const_ok = cc.pieces().iter().all(|p| p.ev0().first_difference(&id_map).is_none() && p.ev1().first_difference(&id_map).is_none());
    out.push(CheckRecord::new(id("path.constant_concat"), "concatenating constant paths gives the constant path", const_ok && cc.level() == level + 1));
    let p = SubdividedPath::new(0, vec![h.clone()]).expect("single piece");
    let back = p.concat(&p.reverse()).and_then(|l| {
        l.as_power_hom()?;
        Ok(l.start().first_difference(&l.end()).is_none())
    });
    out.push(CheckRecord::new(id("path.there_and_back"), "h followed by its reverse starts and ends at the same map", back == Ok(true)));
    let zig = SubdividedPath::new(1, vec![h.clone(), h.reversed()]).and_then(|z| z.as_power_hom());
    out.push(verdict(id("path.zigzag"), "a two-piece zigzag defines a map into Z^{sd Δ^1}", zig.err().map(|e| e.to_string())));
    let bad = SubdividedPath::new(1, vec![h.clone(), h.clone()]);
    out.push(CheckRecord::new(id("path.mismatch_rejected"), "pieces that disagree at the shared vertex are rejected", bad.is_err()));
    let refined = p.refine(level).and_then(|r| r.as_power_hom().map(|_| r.level()));
    out.push(check_eq(&id("path.refine"), "refinement to sd^n Δ^1 stays a map into the power ring", &refined.ok(), &Some(level)));

    // η
    for m in 1..=4 {
        let rep = eta_transformation(m);
        let note = format!(
            "diagonal: {}; printed family pastes: {}",
            rep.diagonal.iter().map(|(k, l, _, p, _)| format!("({},{}) -> {}", k, l, p)).collect::<Vec<_>>().join(", "),
            rep.printed_pastes
        );
        out.push(CheckRecord::new(id(&format!("eta.edges{}", m)), "η pastes to a ring map with the required boundary values", rep.pass()).with_note(note));
    }
    let fam1 = eta_family(1);
    let t1 = IntPolynomial::var(0);
    let t2 = IntPolynomial::var(1);
    let one = IntPolynomial::one();
    let printed = (one.clone() - t1.clone()) * (one.clone() - t2.clone());
    out.push(check_eq(&id("eta.single_square"), "η(s) = 1 - t1 - t2 + t1 t2 on one edge", &fam1.square(1, 1).poly, &printed));
    out.push(check_eq(&id("eta.restriction"), "at t2 = 0 the image is 1 - t1", &printed.substitute(&[t1.clone(), IntPolynomial::zero()]), &(one - t1)));

    // tensor algebras and classifying maps
    let z = StructureRing::integers();
    let t = tensor_algebra(&z, 3);
    out.push(check_eq(&id("tensor.integers_basis"), "T(Z) up to degree 3 has basis x, x⊗x, x⊗x⊗x", &t.words.len(), &3));
    out.push(CheckRecord::new(id("tensor.counit"), "η(x^{⊗n}) = x", t.words.iter().all(|w| t.eta(&TensorElem::from([(w.clone(), BigInt::from(1))])) == z.basis_element(0))));
    let j2 = tensor_algebra(&z, 2).j_basis();
    let expected = TensorElem::from([(vec![0, 0], BigInt::from(1)), (vec![0], BigInt::from(-1))]);
    out.push(check_eq(&id("tensor.j_degree2"), "J(Z) up to degree 2 has basis x⊗x - x", &j2, &vec![expected]));
    out.push(check_eq(&id("tensor.j_degree3_rank"), "J(Z) up to degree 3 has rank 2", &t.j_basis().len(), &2));
    let rho = loop_rho(&z, 3);
    let by_len: BTreeMap<usize, UPoly<RingElem>> =
        rho.j_basis.iter().zip(&rho.images).map(|(j, img)| (j.keys().map(|w| w.len()).max().unwrap_or(0), img.clone())).collect();
    out.push(CheckRecord::new(id("classifying.loop_in_kernel"), "ρ_Z lands in ΩZ", rho.pass()));
    out.push(check_eq(&id("classifying.loop_degree2"), "ρ_Z(x⊗x - x) = t^2 - t", &by_len.get(&2).cloned(), &Some(zpoly(&[0, -1, 1]))));
    out.push(check_eq(&id("classifying.loop_degree3"), "ρ_Z(x⊗x⊗x - x) = t^3 - t", &by_len.get(&3).cloned(), &Some(zpoly(&[0, -1, 0, 1]))));
    let b = StructureRing::product_of_integers();
    let split = Extension {
        quotient: StructureRing::integers(),
        section: vec![b.basis_element(1)],
        project: std::sync::Arc::new(|r: &RingElem| vec![r.coords()[1].clone()]),
    };
    let xi = split.classifying_map(4);
    out.push(CheckRecord::new(id("classifying.split_zero"), "a multiplicative section has zero classifying map", split.section_is_multiplicative() && xi.pass() && xi.is_zero()));
    let target = StructureRing::truncated_polynomials(3);
    out.push(CheckRecord::new(id("classifying.naturality"), "f^Ω ρ_A = ρ_B J(f) for Z -> Z[x]/(x^3) on J(Z) up to degree 3", loop_naturality(&z, &target, &[target.basis_element(0)], 3)));

    // fiber products and path rings
    let pa = path_algebra(|a: &BigInt| a.clone(), 3);
    let ip = |cs: &[i64]| UPoly::from_coeffs(cs.iter().map(|c| BigInt::from(*c)).collect());
    let el = pa.element(ip(&[0, 2, 1]), BigInt::from(3));
    out.push(check_eq(&id("path_ring.identity"), "P_id consists of (p, p(1)), π is the second coordinate", &el.map(|e| pa.pi(&e)), &Some(BigInt::from(3))));
    out.push(CheckRecord::new(id("path_ring.loops"), "(t^2 - t, 0) lies in P_f", pa.iota(&ip(&[0, -1, 1]), &BigInt::from(0)).is_some()));
    let fp = crate::homotopy::fiber_product(|_: &BigInt| BigInt::from(0), |_: &BigInt| BigInt::from(0));
    out.push(CheckRecord::new(id("fiber_product.over_zero"), "the fiber product over 0 is the product", (-3..3).all(|k| fp.element(BigInt::from(k), BigInt::from(1 - k)).is_some())));

    // q / Q
    let rs = RewriteSystem::idempotents();
    out.push(CheckRecord::new(id("qq.confluent"), "all critical pairs of uu -> u, vv -> v resolve", rs.is_confluent()).with_note(format!("{} critical pairs", rs.critical_pairs().len())));
    let e = TildeMatrix::diagonal(vec![ZTilde::new(1, 0), ZTilde::new(0, 1)]);
    let same = IdempotentPair::new(e.clone(), e).expect("idempotent");
    let rep = qq_calculus(&same, cfg.degree as usize);
    out.push(CheckRecord::new(id("qq.identical"), "e0 = e1 gives class 0 and kills u - v", rep.pass() && rep.kills_u_minus_v && rep.rank == "0"));
    let e0 = TildeMatrix::diagonal(vec![ZTilde::new(1, 0), ZTilde::new(0, 0)]);
    let e1 = TildeMatrix::diagonal(vec![ZTilde::new(0, 0), ZTilde::new(0, 0)]);
    let pair = IdempotentPair::new(e0.clone(), e1.clone()).expect("idempotent");
    let rep = qq_calculus(&pair, cfg.degree as usize);
    out.push(CheckRecord::new(id("qq.rank_one"), "e0 = diag((1,0), 0), e1 = 0: q-images have zero augmentation, class of rank 1", rep.pass() && rep.rank == "1"));
    let uvu = QElem::u().mul_ref(&QElem::v()).mul_ref(&QElem::u());
    out.push(check_eq(&id("qq.uvu"), "u v u is the alternating word uvu with image e0 e1 e0", &(format!("{:?}", uvu), pair.classify(&uvu)), &("uvu".to_string(), e0.mul_ref(&e1).mul_ref(&e0))));

    // graded homotopies
    let bound = (cfg.degree as usize).min(4);
    for (name, a) in [("polynomial", polynomial_example(bound)), ("square_zero", square_zero_example(bound.min(3)))] {
        let rep = check_graded(&a);
        out.push(verdict(
            id(&format!("graded.{}", name)),
            "h(a_n) = a_n t^n is a ring map with ev_0 = projection to degree 0 and ev_1 = id",
            match rep {
                Ok(r) if r.pass() => None,
                Ok(r) => Some(format!("{:?}", r)),
                Err(e) => Some(e.to_string()),
            },
        ));
    }

    // amalgamated products
    for (name, am) in [("idempotent_square_zero", idempotent_square_zero_amalgam(3)), ("diagonal", diagonal_amalgam(3))] {
        let rep = am.report();
        out.push(CheckRecord::new(id(&format!("amalgam.{}", name)), "ϑ and η are ring maps and η lands in D_1", rep.pass()).witness_on_failure(|| format!("{:?}", rep)));
    }

    // orthogonal sums
    let a = polynomial_example(3);
    let x = a.gen("x").expect("generator");
    let corner = |i: usize| {
        AlgebraHom::new(&a.presentation, vec![("x", RingMatrix::unit(2, i, i, x.clone()))]).expect("generator").with_unit(RingMatrix::unit(2, i, i, a.one()))
    };
    let rep = orthogonal_sum(&corner(0), &corner(1), 3);
    out.push(CheckRecord::new(id("orthogonal.corners"), "orthogonal maps f, g have f + g a ring map", rep.orthogonal && rep.sum_is_hom));
    out
}
