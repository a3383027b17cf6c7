use std::sync::Arc;

use num_bigint::BigInt;

use crate::gamma::ProgressionMatrix;
use crate::report::{check_eq, CheckRecord};
use crate::rings::{check_hom, morita_map, AlgebraHom, AlgebraPresentation, CrossedProduct, CrossedProductElement, IntPolynomial, LaurentPolynomial, PolySubstitution, Ring, RingMatrix};
use crate::toeplitz::{fundamental_suite, ToeplitzElement};

use super::{verdict, Sampler, SuiteConfig};

fn id(s: &str) -> String {
    format!("toeplitz.{}", s)
}

fn crossed_element(r: &Arc<CrossedProduct>, rng: &mut Sampler, degree: u32) -> CrossedProductElement {
    let mut e = r.constant(IntPolynomial::zero());
    for _ in 0..3 {
        let k = rng.range(-2, 2);
        e = e.add_ref(&r.elem(rng.polynomial(2, degree.min(3), 3), k));
    }
    e
}

pub(crate) fn checks(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let mut rng = Sampler::new(cfg.seed, 2);
    let deg = cfg.degree;
    let samples: Vec<ToeplitzElement> = (0..24).map(|_| rng.toeplitz(6, deg)).collect();

    // the kernel of π
    let mut bad = None;
    for p in 0..=4u32 {
        for q in 0..=4u32 {
            let x = ToeplitzElement::monomial(p, q, 1).sub_ref(&ToeplitzElement::monomial(p + 1, q + 1, 1));
            if x.hat() != ProgressionMatrix::unit(i64::from(p), i64::from(q)) {
                bad = Some(format!("p = {}, q = {}", p, q));
            }
        }
    }
    out.push(verdict(id("hat.matrix_units"), "hat(b^p a^q - b^{p+1} a^{q+1}) = e_{p,q} for p, q <= 4", bad));
    let mut bad = None;
    for x in &samples {
        for y in &samples {
            if (x.hat() == y.hat()) != (x == y) {
                bad = Some(format!("x = {}, y = {}", x, y));
            }
            if x.mul_ref(y).hat() != x.hat().mul_ref(&y.hat()) {
                bad = Some(format!("hat(xy) for x = {}, y = {}", x, y));
            }
        }
    }
    out.push(verdict(id("hat.injective_multiplicative"), "hat is an injective ring map on sampled elements with at most 6 terms", bad));
    let mut pool = samples.clone();
    pool.extend(samples.iter().take(8).map(|x| {
        let kernel = ToeplitzElement::one().sub_ref(&ToeplitzElement::monomial(1, 1, 1));
        x.mul_ref(&kernel)
    }));
    let bad = pool.iter().find(|x| x.in_m_infinity() != x.hat().is_finite()).map(|x| x.to_string());
    let kernel_hits = pool.iter().filter(|x| x.in_m_infinity()).count();
    out.push(verdict(id("hat.kernel"), "π(x) = 0 iff hat(x) has finitely many entries", bad).with_note(format!("{} of {} samples in the kernel", kernel_hits, pool.len())));
    let bad = samples.iter().zip(samples.iter().rev()).find(|(x, y)| x.mul_ref(y).pi_laurent() != x.pi_laurent().mul_ref(&y.pi_laurent()));
    out.push(verdict(id("pi.multiplicative"), "π: τ -> Z[t, t^-1] is multiplicative", bad.map(|(x, y)| format!("x = {}, y = {}", x, y))));

    // homomorphism checks against the presentation
    let tau = AlgebraPresentation::toeplitz();
    let good = AlgebraHom::new(&tau, vec![("alpha", LaurentPolynomial::t()), ("beta", LaurentPolynomial::t_inv())]).expect("generators");
    out.push(CheckRecord::new(id("presentation.laurent"), "alpha -> t, beta -> t^-1 respects alpha*beta = 1", check_hom(&good).valid));
    let badmap = AlgebraHom::new(&tau, vec![("alpha", LaurentPolynomial::t()), ("beta", LaurentPolynomial::t())]).expect("generators");
    let v = check_hom(&badmap);
    out.push(check_eq(&id("presentation.rejects"), "alpha -> t, beta -> t sends alpha*beta - 1 to t^2 - 1", &v.failing.map(|f| f.image), &Some("t^2 - 1".to_string())));

    // fundamental maps
    out.extend(fundamental_suite());

    // crossed products
    let x = IntPolynomial::var(0);
    let y = IntPolynomial::var(1);
    let flip = PolySubstitution::new(vec![-x.clone()]);
    let fr = CrossedProduct::new(flip.clone(), flip).expect("involution");
    let xt = fr.elem(x.clone(), 1);
    out.push(check_eq(&id("crossed.twist"), "(x t)(x t) = -x^2 t^2 for σ(x) = -x", &xt.mul_ref(&xt), &fr.elem(-(x.clone() * x.clone()), 2)));
    let shear = PolySubstitution::new(vec![y.clone(), x.clone() + y.clone()]);
    let shear_inv = PolySubstitution::new(vec![y.clone() - x.clone(), x.clone()]);
    let sr = CrossedProduct::new(shear.clone(), shear_inv).expect("automorphism");
    let mut bad = None;
    for _ in 0..12 {
        let (a, b, c) = (crossed_element(&sr, &mut rng, deg), crossed_element(&sr, &mut rng, deg), crossed_element(&sr, &mut rng, deg));
        if a.mul_ref(&b).mul_ref(&c) != a.mul_ref(&b.mul_ref(&c)) {
            bad = Some(format!("a = {:?}, b = {:?}, c = {:?}", a, b, c));
        }
    }
    out.push(verdict(id("crossed.associative"), "(ab)c = a(bc) on random triples for σ(x, y) = (y, x + y)", bad));
    let mut bad = None;
    for _ in 0..8 {
        let a = rng.polynomial(2, deg.min(4), 4);
        if sr.t().mul_ref(&sr.constant(a.clone())).mul_ref(&sr.t_inv()) != sr.constant(shear.apply(&a)) {
            bad = Some(format!("a = {}", a));
        }
    }
    out.push(verdict(id("crossed.conjugation"), "t a t^-1 = σ(a)", bad));
    let idr = CrossedProduct::new(PolySubstitution::identity(1), PolySubstitution::identity(1)).expect("identity");
    let (p, q) = (idr.elem(x.clone(), 2).add_ref(&idr.elem(IntPolynomial::one(), -1)), idr.elem(x.clone() * x.clone(), -3));
    out.push(check_eq(&id("crossed.identity_twist"), "σ = id gives the commutative Laurent ring", &p.mul_ref(&q), &q.mul_ref(&p)));

    // Morita maps
    let mats: Vec<RingMatrix<BigInt>> = [[[1, 2], [0, 1]], [[0, 1], [1, 0]], [[3, 0], [-1, 2]]]
        .iter()
        .map(|m: &[[i64; 2]; 2]| RingMatrix::from_ints(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()))
        .collect();
    let z = RingMatrix::zero(2, &BigInt::from(0));
    let o = RingMatrix::identity(2, &BigInt::from(0));
    for (name, p, q) in [
        ("corner1", vec![o.clone()], vec![o.clone()]),
        ("e11", vec![o.clone(), z.clone()], vec![o.clone(), z.clone()]),
        ("e22", vec![z.clone(), o.clone()], vec![z.clone(), o.clone()]),
    ] {
        let m = morita_map(p, q, &mats);
        let ok = m.as_ref().map_or(false, |m| mats.iter().all(|a| m.apply(a) == m.via_corner(a)));
        out.push(CheckRecord::new(id(&format!("morita.{}", name)), "a -> (p_i a q_j) is multiplicative and equals W (e_11 a) V", ok));
    }
    out
}
