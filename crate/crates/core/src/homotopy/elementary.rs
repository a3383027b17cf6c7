use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::rings::{check_hom, AlgebraHom, IntPolynomial, QuotElem, Ring, UPoly};

/// A homomorphism `h: A -> B[t]`, connecting `ev_0 h` to `ev_1 h`.
#[derive(Clone, Debug)]
pub struct ElementaryHomotopy<R: Ring> {
    pub hom: AlgebraHom<UPoly<R>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointVerdict {
    pub ok: bool,
    pub is_hom: bool,
    pub witness: Option<String>,
}

impl<R: Ring> ElementaryHomotopy<R> {
    pub fn new(hom: AlgebraHom<UPoly<R>>) -> Self {
        ElementaryHomotopy { hom }
    }

    /// `c_B ∘ f`
    pub fn constant(f: &AlgebraHom<R>) -> Self {
        ElementaryHomotopy { hom: f.then(|x| UPoly::constant(x.clone())) }
    }

    pub fn ev0(&self) -> AlgebraHom<R> {
        self.hom.then(|p| p.ev0())
    }

    pub fn ev1(&self) -> AlgebraHom<R> {
        self.hom.then(|p| p.ev1())
    }

    /// `t -> 1 - t`
    pub fn reversed(&self) -> Self {
        ElementaryHomotopy { hom: self.hom.then(|p| p.reverse()) }
    }
}

/// Whether `h` is a homomorphism with `ev_0 h = f` and `ev_1 h = g` on generators.
pub fn check_elementary<R: Ring>(h: &ElementaryHomotopy<R>, f: &AlgebraHom<R>, g: &AlgebraHom<R>) -> EndpointVerdict {
    let verdict = check_hom(&h.hom);
    let witness = if let Some(fail) = &verdict.failing {
        Some(format!("relation {} maps to {}", fail.relation, fail.image))
    } else if let Some(gen) = h.ev0().first_difference(f) {
        Some(format!("ev0 differs on {}", gen))
    } else {
        h.ev1().first_difference(g).map(|gen| format!("ev1 differs on {}", gen))
    };
    EndpointVerdict { ok: witness.is_none(), is_hom: verdict.valid, witness }
}

/// Integer coordinates of a ring element in a fixed basis, keyed by basis label.
pub trait Coordinates {
    fn coordinates(&self) -> BTreeMap<String, BigInt>;
}

impl Coordinates for BigInt {
    fn coordinates(&self) -> BTreeMap<String, BigInt> {
        if Ring::is_zero_elem(self) {
            BTreeMap::new()
        } else {
            BTreeMap::from([("1".to_string(), self.clone())])
        }
    }
}

impl Coordinates for IntPolynomial {
    fn coordinates(&self) -> BTreeMap<String, BigInt> {
        self.terms().map(|(m, c)| (format!("{:?}", m), c.clone())).collect()
    }
}

impl Coordinates for QuotElem {
    fn coordinates(&self) -> BTreeMap<String, BigInt> {
        self.poly().terms().map(|(w, c)| (format!("{:?}", w), c.clone())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::AlgebraPresentation;

    fn x() -> IntPolynomial {
        IntPolynomial::var(0)
    }

    #[test]
    fn scaling_connects_zero_to_identity() {
        let a = AlgebraPresentation::new(&["x"], &[]).unwrap();
        let h = ElementaryHomotopy::new(AlgebraHom::new(&a, vec![("x", UPoly::monomial(1, x()))]).unwrap());
        let zero = AlgebraHom::new(&a, vec![("x", IntPolynomial::zero())]).unwrap();
        let id = AlgebraHom::new(&a, vec![("x", x())]).unwrap();
        assert!(check_elementary(&h, &zero, &id).ok);
        let v = check_elementary(&h, &id, &id);
        assert!(!v.ok);
        assert_eq!(v.witness.as_deref(), Some("ev0 differs on x"));
    }

    #[test]
    fn constant_homotopy() {
        let a = AlgebraPresentation::new(&["x"], &["x*x - x"]).unwrap();
        let f = AlgebraHom::new(&a, vec![("x", BigInt::from(1))]).unwrap();
        let h = ElementaryHomotopy::constant(&f);
        assert!(check_elementary(&h, &f, &f).ok);
    }
}
