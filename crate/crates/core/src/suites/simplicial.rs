use std::sync::Arc;

use crate::report::{check_eq, CheckRecord};
use crate::simplicial::{
    boundary, build_standard, circle, is_isomorphic, iterated_subdivision, point, product, quotient, standard_simplex, subdivide,
    subdivided_subcomplex, FiniteSimplicialSet, SimplicialError, StandardKind,
};

use super::{verdict, SuiteConfig};

fn id(s: &str) -> String {
    format!("simplicial.{}", s)
}

pub(crate) fn catalog() -> Vec<(&'static str, FiniteSimplicialSet)> {
    vec![
        ("simplex0", standard_simplex(0)),
        ("simplex1", standard_simplex(1)),
        ("simplex2", standard_simplex(2)),
        ("simplex3", standard_simplex(3)),
        ("boundary1", boundary(1)),
        ("boundary2", boundary(2)),
        ("boundary3", boundary(3)),
        ("circle", circle()),
    ]
}

fn sd_checks(name: &str, k: &Arc<FiniteSimplicialSet>, depth: usize, out: &mut Vec<CheckRecord>) {
    let res = iterated_subdivision(k, depth).and_then(|(sd, h)| {
        sd.validate()?;
        h.validate()?;
        Ok(sd.counts())
    });
    out.push(
        verdict(
            id(&format!("subdivide.last_vertex.{}", name)),
            format!("last vertex map sd^{} K -> K is simplicial", depth),
            res.as_ref().err().map(|e| e.to_string()),
        )
        .with_note(format!("depth {}, counts {:?}", depth, res.unwrap_or_default())),
    );
}

pub(crate) fn checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();

    // standard objects
    out.push(check_eq(&id("standard.simplex2"), "Δ^2 has 3 vertices, 3 edges, 1 triangle", &standard_simplex(2).counts(), &vec![3, 3, 1]));
    out.push(check_eq(&id("standard.circle"), "S^1 has 1 vertex and 1 edge", &circle().counts(), &vec![1, 1]));
    let c = circle();
    let e = c.lookup("e").expect("edge");
    out.push(check_eq(&id("standard.circle_faces"), "both faces of the edge of S^1 are the vertex", &c.face(e, 0), &c.face(e, 1)));
    out.push(check_eq(&id("standard.boundary2"), "∂Δ^2 has 3 vertices, 3 edges, no triangle", &boundary(2).counts(), &vec![3, 3]));
    out.push(check_eq(&id("standard.point"), "Δ^0 is one vertex", &point().counts(), &vec![1]));
    out.push(check_eq(
        &id("standard.boundary0_rejected"),
        "∂Δ^0 is rejected",
        &build_standard(StandardKind::Boundary, 0).err(),
        &Some(SimplicialError::EmptyBoundary),
    ));
    for (name, k) in catalog() {
        let bad = k.validate().err().map(|e| e.to_string()).or_else(|| (!k.check_all_identities(2)).then(|| "identity failure".into()));
        out.push(verdict(id(&format!("identities.{}", name)), "d_i d_j = d_{j-1} d_i and mixed identities on normal forms", bad));
    }

    // subdivision
    let d1 = Arc::new(standard_simplex(1));
    let (sd1, h1) = subdivide(&d1).expect("sd Δ^1");
    out.push(check_eq(&id("subdivide.interval_counts"), "sd Δ^1 has 3 vertices and 2 edges", &sd1.counts(), &vec![3, 2]));
    let images: Vec<String> = sd1.simplices_of_dim(0).map(|v| d1.name(h1.image(v).simplex).to_string()).collect();
    out.push(check_eq(&id("subdivide.interval_last_vertex"), "last vertex images of the vertices of sd Δ^1 are 0, 1, 1", &images, &vec!["0".to_string(), "1".into(), "1".into()]));
    let (sc, _) = subdivide(&Arc::new(circle())).expect("sd S^1");
    out.push(check_eq(&id("subdivide.circle_counts"), "sd S^1 has 2 vertices and 2 edges", &sc.counts(), &vec![2, 2]));
    let (sd2, _) = subdivide(&Arc::new(standard_simplex(2))).expect("sd Δ^2");
    out.push(check_eq(&id("subdivide.triangle_counts"), "sd Δ^2 has 7 vertices, 12 edges, 6 triangles", &sd2.counts(), &vec![7, 12, 6]));
    out.push(check_eq(&id("subdivide.triangle_euler"), "χ(sd Δ^2) = 1", &sd2.euler_characteristic(), &1));
    for n in 0..=cfg.subdivisions.max(6) {
        let counts = iterated_subdivision(&d1, n).map(|(k, _)| k.counts());
        out.push(check_eq(
            &id(&format!("subdivide.interval_level{}", n)),
            "sd^n Δ^1 has 2^n + 1 vertices and 2^n edges",
            &counts.ok(),
            &Some(vec![(1 << n) + 1, 1 << n]),
        ));
    }
    for (name, k) in catalog() {
        let depth = if k.dim() >= 3 { cfg.subdivisions.min(2) } else { cfg.subdivisions.min(4) };
        sd_checks(name, &Arc::new(k), depth, &mut out);
    }

    // quotients
    let bd1 = d1.refs(&["0", "1"]).expect("vertices");
    let (s1, _) = quotient(&d1, &bd1).expect("Δ^1/∂Δ^1");
    out.push(CheckRecord::new(id("quotient.interval_by_boundary"), "Δ^1/∂Δ^1 ≅ S^1", is_isomorphic(&s1, &circle())));
    let all: Vec<_> = d1.simplices().collect();
    let (pt, _) = quotient(&d1, &all).expect("K/K");
    out.push(CheckRecord::new(id("quotient.full_collapse"), "K/K is a point", is_isomorphic(&pt, &point())));
    let d2 = Arc::new(standard_simplex(2));
    let bd2: Vec<_> = d2.simplices().filter(|r| r.dim < 2).collect();
    let (s2, _) = quotient(&d2, &bd2).expect("Δ^2/∂Δ^2");
    out.push(check_eq(&id("quotient.sphere_counts"), "Δ^2/∂Δ^2 has 1 vertex, no edges, 1 triangle", &s2.counts(), &vec![1, 0, 1]));
    out.push(CheckRecord::new(id("quotient.sphere_identities"), "Δ^2/∂Δ^2 satisfies the simplicial identities", s2.check_all_identities(2)));
    let not_sub = d2.refs(&["01"]).expect("edge");
    out.push(CheckRecord::new(id("quotient.non_subcomplex_rejected"), "a set not closed under faces is rejected", quotient(&d2, &not_sub).is_err()));
    let commute = subdivide(&s1).and_then(|(sd_q, _)| {
        let sub = subdivided_subcomplex(&d1, &bd1)?;
        let (sd_k, _) = subdivide(&d1)?;
        let (q_sd, _) = quotient(&sd_k, &sub)?;
        Ok(is_isomorphic(&sd_q, &q_sd))
    });
    out.push(CheckRecord::new(id("quotient.commutes_with_subdivision"), "sd(Δ^1/∂Δ^1) ≅ sd Δ^1 / sd ∂Δ^1", commute == Ok(true)));

    // products
    let sq = product(&standard_simplex(1), &standard_simplex(1)).expect("square");
    out.push(check_eq(&id("product.square"), "Δ^1 × Δ^1 has 4 vertices, 5 edges, 2 triangles", &sq.counts(), &vec![4, 5, 2]));
    let unit = product(&standard_simplex(2), &standard_simplex(0)).expect("unit");
    out.push(CheckRecord::new(id("product.unit"), "Δ^2 × Δ^0 ≅ Δ^2", is_isomorphic(&unit, &standard_simplex(2))));
    let prism = product(&standard_simplex(1), &standard_simplex(2)).expect("prism");
    out.push(check_eq(&id("product.prism_top_cells"), "Δ^1 × Δ^2 has C(3,1) = 3 nondegenerate 3-simplices", &prism.count(3), &3));
    out.push(CheckRecord::new(id("product.prism_identities"), "Δ^1 × Δ^2 satisfies the simplicial identities", prism.check_all_identities(1)));

    if let Some(k) = &cfg.input {
        let bad = k.validate().err().map(|e| e.to_string()).or_else(|| (!k.check_all_identities(1)).then(|| "identity failure".into()));
        out.push(verdict(id("input.identities"), "input satisfies the simplicial identities", bad).with_note(format!("counts {:?}", k.counts())));
        if k.has_nondegenerate_faces() {
            sd_checks("input", k, cfg.subdivisions.min(3), &mut out);
        }
    }
    out
}
