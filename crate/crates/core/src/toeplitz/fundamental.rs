//! The maps `τ → (τ ⊗ τ)[t]` used to show that `τ₀` is invisible to split-exact,
//! `M_∞`-stable, homotopy invariant functors, and the exact checks on them.

use num_bigint::BigInt;

use super::{TensorToeplitz, ToeplitzElement};
use crate::report::{check_eq, CheckRecord};
use crate::rings::Ring;

type T = ToeplitzElement;
type TT = TensorToeplitz;

/// A (possibly non-unital) homomorphism out of `τ`, fixed by the images of
/// `α` and `β`; `1` goes to `A B`.
#[derive(Clone, Debug)]
pub struct TauHom {
    pub name: &'static str,
    pub alpha: TT,
    pub beta: TT,
}

impl TauHom {
    pub fn new(name: &'static str, alpha: TT, beta: TT) -> Self {
        TauHom { name, alpha, beta }
    }

    pub fn unit_image(&self) -> TT {
        self.alpha.mul_ref(&self.beta)
    }

    pub fn eval(&self, x: &T) -> TT {
        let mut out = TT::zero();
        for ((p, q), c) in x.terms() {
            let img = if (*p, *q) == (0, 0) { self.unit_image() } else { self.beta.pow(*p).mul_ref(&self.alpha.pow(*q)) };
            out = out + img.scale(c);
        }
        out
    }

    /// `E = A B` is idempotent and a two-sided unit for `A` and `B`, so that
    /// `αβ - 1 ↦ 0` defines a homomorphism.
    pub fn respects_relation(&self) -> bool {
        let e = self.unit_image();
        e.mul_ref(&e) == e
            && e.mul_ref(&self.alpha) == self.alpha
            && self.alpha.mul_ref(&e) == self.alpha
            && e.mul_ref(&self.beta) == self.beta
            && self.beta.mul_ref(&e) == self.beta
    }

    pub fn map(&self, f: impl Fn(&TT) -> TT, name: &'static str) -> TauHom {
        TauHom { name, alpha: f(&self.alpha), beta: f(&self.beta) }
    }
}

/// Embeds a 2x2 matrix over `1 ⊗ τ[t]` via `e_{ij} ↦ β^i (1 - βα) α^j ⊗ 1`.
pub fn embed_m2(m: [[TT; 2]; 2]) -> TT {
    let mut out = TT::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let corner = T::beta().pow(i as u32).mul_ref(&T::e()).mul_ref(&T::alpha().pow(j as u32));
            out = out + TT::left(&corner).mul_ref(x);
        }
    }
    out
}

fn complement() -> TT {
    TT::left(&T::monomial(2, 2, 1))
}

fn poly(coeffs: &[(u32, i64, T)]) -> TT {
    let v: Vec<(u32, T)> = coeffs.iter().map(|(k, c, x)| (*k, x.scale(&BigInt::from(*c)))).collect();
    TT::right_poly(&v)
}

fn unit_from(m00: TT, m01: TT, m10: TT, m11: TT) -> TT {
    complement() + embed_m2([[m00, m01], [m10, m11]])
}

#[derive(Clone, Debug)]
pub struct FundamentalMaps {
    pub psi: TauHom,
    pub phi1: TauHom,
    pub phi2: TauHom,
    pub phi3: TauHom,
    pub big_phi1: TauHom,
    pub big_phi2: TauHom,
    pub u1: TT,
    pub u1_inv: TT,
    pub u2: TT,
    pub u2_inv: TT,
    /// Inverse formulas as usually written; only correct at `t = 0, 1`.
    pub u1_inv_printed: TT,
    pub u2_inv_printed: TT,
}

impl FundamentalMaps {
    pub fn build() -> Self {
        let (a, b, one, ba) = (T::alpha(), T::beta(), T::one(), T::monomial(1, 1, 1));
        let e = T::e();
        let l = TT::left;
        let psi = TauHom::new("psi", l(&T::monomial(1, 2, 1)), l(&T::monomial(2, 1, 1)));
        let phi1 = TauHom::new(
            "phi1",
            l(&T::monomial(1, 2, 1)) + TT::tensor(&e, &a),
            l(&T::monomial(2, 1, 1)) + TT::tensor(&e, &b),
        );
        let phi2 = TauHom::new("phi2", l(&a), l(&b));
        let phi3 = TauHom::new("phi3", l(&T::monomial(1, 2, 1)) + l(&e), l(&T::monomial(2, 1, 1)) + l(&e));

        let diag = poly(&[(0, 1, one.clone()), (2, -1, one.clone())]);
        let u1 = unit_from(
            poly(&[(0, 1, one.clone()), (2, -1, ba.clone())]),
            poly(&[(3, 1, b.clone()), (1, -2, b.clone())]),
            poly(&[(1, 1, a.clone())]),
            diag.clone(),
        );
        let u1_inv = unit_from(
            poly(&[(0, 1, one.clone()), (2, -1, ba.clone())]),
            poly(&[(1, 2, b.clone()), (3, -1, b.clone())]),
            poly(&[(1, -1, a.clone())]),
            diag.clone(),
        );
        let u1_inv_printed = unit_from(
            poly(&[(0, 1, one.clone()), (2, -1, ba)]),
            poly(&[(1, 1, b.clone())]),
            poly(&[(3, 1, a.clone()), (1, -2, a.clone())]),
            diag.clone(),
        );
        let u2 = unit_from(diag.clone(), poly(&[(3, 1, one.clone()), (1, -2, one.clone())]), poly(&[(1, 1, one.clone())]), diag.clone());
        let u2_inv = unit_from(diag.clone(), poly(&[(1, 2, one.clone()), (3, -1, one.clone())]), poly(&[(1, -1, one.clone())]), diag.clone());
        let u2_inv_printed =
            unit_from(diag.clone(), poly(&[(1, 1, one.clone())]), poly(&[(3, 1, one.clone()), (1, -2, one.clone())]), diag);

        let big_phi1 = TauHom::new("Phi1", l(&a).mul_ref(&u1), u1_inv.mul_ref(&l(&b)));
        let big_phi2 = TauHom::new("Phi2", l(&a).mul_ref(&u2), u2_inv.mul_ref(&l(&b)));
        FundamentalMaps { psi, phi1, phi2, phi3, big_phi1, big_phi2, u1, u1_inv, u2, u2_inv, u1_inv_printed, u2_inv_printed }
    }

    /// `ι(x) = e ⊗ x`
    pub fn iota(x: &T) -> TT {
        TT::tensor(&T::e(), x)
    }
}

/// A generating sample of `τ₀` together with its pairwise products.
pub fn tau0_sample() -> Vec<T> {
    let base = vec![
        T::alpha() - T::one(),
        T::beta() - T::one(),
        T::e(),
        T::monomial(1, 2, 1) - T::alpha(),
    ];
    let mut out = base.clone();
    for x in &base {
        for y in &base {
            out.push(x.mul_ref(y));
        }
    }
    out
}

fn same_on(f: &TauHom, g: &TauHom, xs: &[T]) -> Option<String> {
    xs.iter().find(|x| f.eval(x) != g.eval(x)).map(|x| format!("{} on {}: {} vs {}", f.name, x, f.eval(x), g.eval(x)))
}

fn record(id: &str, anchor: &str, failure: Option<String>) -> CheckRecord {
    let ok = failure.is_none();
    CheckRecord::new(id, anchor, ok).witness_on_failure(|| failure.unwrap_or_default())
}

pub fn fundamental_suite() -> Vec<CheckRecord> {
    let m = FundamentalMaps::build();
    let gens = vec![T::alpha(), T::beta()];
    let sample = tau0_sample();
    let mut mixed = gens.clone();
    mixed.extend(sample.iter().cloned());
    let one = TT::one();
    let mut out = Vec::new();
    let id = |s: &str| format!("toeplitz.fundamental.{}", s);

    // (a)
    for f in [&m.psi, &m.phi1, &m.phi2, &m.phi3, &m.big_phi1, &m.big_phi2] {
        out.push(CheckRecord::new(
            id(&format!("a.relation.{}", f.name)),
            format!("{}: image of a*b - 1 vanishes (a*b acts as unit)", f.name),
            f.respects_relation(),
        ));
        let mut bad = None;
        'outer: for x in &mixed {
            for y in &mixed {
                if f.eval(&x.mul_ref(y)) != f.eval(x).mul_ref(&f.eval(y)) {
                    bad = Some(format!("{}: x = {}, y = {}", f.name, x, y));
                    break 'outer;
                }
            }
        }
        out.push(record(&id(&format!("a.multiplicative.{}", f.name)), &format!("{}(xy) = {}(x){}(y)", f.name, f.name, f.name), bad));
    }
    for (name, f) in [("phi1", &m.phi1), ("phi2", &m.phi2), ("phi3", &m.phi3), ("Phi1", &m.big_phi1), ("Phi2", &m.big_phi2)] {
        out.push(check_eq(&id(&format!("a.unital.{}", name)), &format!("{}(a){}(b) = 1", name, name), &f.unit_image(), &one));
    }
    out.push(check_eq(
        &id("a.psi_corner"),
        "psi(a)psi(b) = ba (x) 1",
        &m.psi.unit_image(),
        &TT::left(&T::monomial(1, 1, 1)),
    ));

    // (b)
    out.push(check_eq(&id("b.u1_right_inverse"), "u1 u1^-1 = 1", &m.u1.mul_ref(&m.u1_inv), &one));
    out.push(check_eq(&id("b.u1_left_inverse"), "u1^-1 u1 = 1", &m.u1_inv.mul_ref(&m.u1), &one));
    out.push(check_eq(&id("b.u2_right_inverse"), "u2 u2^-1 = 1", &m.u2.mul_ref(&m.u2_inv), &one));
    out.push(check_eq(&id("b.u2_left_inverse"), "u2^-1 u2 = 1", &m.u2_inv.mul_ref(&m.u2), &one));
    for (name, printed, true_inv, u) in
        [("u1", &m.u1_inv_printed, &m.u1_inv, &m.u1), ("u2", &m.u2_inv_printed, &m.u2_inv, &m.u2)]
    {
        let endpoints = printed.ev0() == true_inv.ev0() && printed.ev1() == true_inv.ev1();
        let generic_fails = u.mul_ref(printed) != one;
        out.push(
            CheckRecord::new(
                id(&format!("b.{}_printed_inverse_endpoints", name)),
                format!("{}^-1 (printed form) agrees with the inverse at t = 0, 1", name),
                endpoints,
            )
            .with_note(if generic_fails {
                format!("printed form is not an inverse of {} for generic t; exact inverse used elsewhere", name)
            } else {
                format!("printed form is an inverse of {}", name)
            }),
        );
    }
    out.push(check_eq(&id("b.ev0_u1"), "ev0(u1) = 1", &m.u1.ev0(), &one));
    out.push(check_eq(&id("b.ev0_u2"), "ev0(u2) = 1", &m.u2.ev0(), &one));

    // (c)
    let ev = |f: &TauHom, at1: bool, name: &'static str| f.map(|x| if at1 { x.ev1() } else { x.ev0() }, name);
    for (label, lhs, rhs) in [
        ("c.ev0_Phi1_phi2", ev(&m.big_phi1, false, "ev0 Phi1"), &m.phi2),
        ("c.ev0_Phi2_phi2", ev(&m.big_phi2, false, "ev0 Phi2"), &m.phi2),
        ("c.ev1_Phi1_phi1", ev(&m.big_phi1, true, "ev1 Phi1"), &m.phi1),
        ("c.ev1_Phi2_phi3", ev(&m.big_phi2, true, "ev1 Phi2"), &m.phi3),
    ] {
        out.push(record(&id(label), &format!("{} = {}", lhs.name, rhs.name), same_on(&lhs, rhs, &gens)));
    }

    // (d)
    for f in [&m.phi1, &m.phi2, &m.phi3] {
        let bad = gens
            .iter()
            .find(|g| !(f.eval(g) - m.psi.eval(g)).pi_left().is_empty())
            .map(|g| format!("{} - psi on {}", f.name, g));
        out.push(record(&id(&format!("d.{}_mod_kernel", f.name)), &format!("(pi (x) 1)({}(g) - psi(g)) = 0", f.name), bad));
        let bad = gens
            .iter()
            .find(|g| !(f.eval(g) - m.psi.eval(g)).pi_both().is_empty())
            .map(|g| format!("{} - psi on {}", f.name, g));
        out.push(record(&id(&format!("d.{}_mod_kernel_both", f.name)), &format!("(pi (x) pi)({}(g) - psi(g)) = 0", f.name), bad));
    }
    for (name, u) in [("u1", &m.u1), ("u2", &m.u2)] {
        let diff = one.clone() - u.clone();
        out.push(
            CheckRecord::new(id(&format!("d.one_minus_{}", name)), format!("(pi (x) 1)(1 - {}) = 0", name), diff.pi_left().is_empty())
                .witness_on_failure(|| diff.to_string()),
        );
    }

    // (e)
    out.push(
        record(&id("e.phi3_psi_on_tau0"), "phi3 = psi on tau0", same_on(&m.phi3, &m.psi, &sample))
            .with_note("tau0 checked on {a-1, b-1, 1-ba, ba^2-a} and pairwise products"),
    );

    // (f)
    let split = mixed
        .iter()
        .find(|x| m.phi1.eval(x) != m.psi.eval(x) + FundamentalMaps::iota(x))
        .map(|x| format!("phi1 - psi - iota on {}", x));
    out.push(record(&id("f.phi1_is_sum"), "phi1 = psi + iota", split));
    let mut bad = None;
    'outer: for x in &mixed {
        for y in &mixed {
            let (p, i) = (m.psi.eval(x), FundamentalMaps::iota(y));
            if !p.mul_ref(&i).is_zero_elem() || !i.mul_ref(&p).is_zero_elem() {
                bad = Some(format!("psi({}) and iota({})", x, y));
                break 'outer;
            }
        }
    }
    out.push(record(&id("f.orthogonal"), "psi(x) iota(y) = iota(y) psi(x) = 0", bad));
    out
}
