//! Maps attached to an amalgamated free product `A *_C B` with retractions
//! `α: A -> C`, `β: B -> C`.

use std::sync::Arc;

use serde::Serialize;

use crate::rings::{check_hom, AlgebraHom, AlgebraPresentation, HomError, NcPoly, NcQuotient, QuotElem, Ring, RingMatrix};

use super::fiber::Pair;

/// A map of presented rings given by generator images.
#[derive(Clone, Debug)]
pub struct PresentedMap {
    pub target: Arc<NcQuotient>,
    pub images: Vec<QuotElem>,
}

impl PresentedMap {
    pub fn new(target: &Arc<NcQuotient>, images: &[&str]) -> Result<Self, HomError> {
        Ok(PresentedMap { target: Arc::clone(target), images: images.iter().map(|s| target.parse(s)).collect::<Result<_, _>>()? })
    }

    pub fn apply(&self, p: &NcPoly) -> QuotElem {
        let mut acc = self.target.zero();
        for (w, c) in p.terms() {
            let mut x = self.target.one();
            for g in w {
                x = x.mul_ref(&self.images[*g]);
            }
            acc = acc.add_ref(&x.scale(c));
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AmalgamError {
    #[error("{0}")]
    Hom(#[from] HomError),
    #[error("retraction {0} is not the identity on C at generator {1}")]
    NotRetraction(&'static str, String),
    #[error("generator {0} occurs in both factors")]
    NameClash(String),
    #[error("map {0} does not respect relation {1}")]
    NotHom(&'static str, String),
}

pub struct Amalgam {
    pub a: Arc<NcQuotient>,
    pub b: Arc<NcQuotient>,
    pub c: Arc<NcQuotient>,
    pub inc_a: PresentedMap,
    pub inc_b: PresentedMap,
    pub alpha: PresentedMap,
    pub beta: PresentedMap,
    /// `A *_C B` truncated at the common word bound
    pub free: Arc<NcQuotient>,
}

fn shifted(p: &NcPoly, by: usize) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(w.iter().map(|g| g + by).collect(), c.clone());
    }
    out
}

fn respects(name: &'static str, source: &NcQuotient, f: &PresentedMap) -> Result<(), AmalgamError> {
    for r in &source.presentation.relations {
        if !f.apply(r).is_zero_elem() {
            return Err(AmalgamError::NotHom(name, source.presentation.show(r)));
        }
    }
    Ok(())
}

impl Amalgam {
    pub fn new(
        a: Arc<NcQuotient>,
        b: Arc<NcQuotient>,
        c: Arc<NcQuotient>,
        inc_a: PresentedMap,
        inc_b: PresentedMap,
        alpha: PresentedMap,
        beta: PresentedMap,
    ) -> Result<Self, AmalgamError> {
        respects("C -> A", &c, &inc_a)?;
        respects("C -> B", &c, &inc_b)?;
        respects("alpha", &a, &alpha)?;
        respects("beta", &b, &beta)?;
        for (i, name) in c.presentation.generators.iter().enumerate() {
            let gen = NcPoly::gen(i);
            if alpha.apply(inc_a.apply(&gen).poly()) != c.elem(gen.clone()) {
                return Err(AmalgamError::NotRetraction("alpha", name.clone()));
            }
            if beta.apply(inc_b.apply(&gen).poly()) != c.elem(gen) {
                return Err(AmalgamError::NotRetraction("beta", name.clone()));
            }
        }
        let pa = &a.presentation;
        let pb = &b.presentation;
        if let Some(g) = pa.generators.iter().find(|g| pb.generators.contains(g)) {
            return Err(AmalgamError::NameClash(g.clone()));
        }
        let k = pa.generators.len();
        let mut relations: Vec<NcPoly> = pa.relations.clone();
        relations.extend(pb.relations.iter().map(|r| shifted(r, k)));
        for i in 0..c.presentation.generators.len() {
            let gen = NcPoly::gen(i);
            relations.push(inc_a.apply(&gen).poly().sub_ref(&shifted(inc_b.apply(&gen).poly(), k)));
        }
        let presentation = AlgebraPresentation {
            generators: pa.generators.iter().chain(&pb.generators).cloned().collect(),
            relations,
            degrees: None,
        };
        let free = NcQuotient::new(presentation, a.bound.max(b.bound));
        Ok(Amalgam { a, b, c, inc_a, inc_b, alpha, beta, free })
    }

    fn j_a(&self, x: &QuotElem) -> QuotElem {
        self.free.elem(x.poly().clone())
    }

    fn j_b(&self, x: &QuotElem) -> QuotElem {
        self.free.elem(shifted(x.poly(), self.a.presentation.generators.len()))
    }

    /// `ϑ: A *_C B -> A ⊕_C B`, `a -> (a, α(a))`, `b -> (β(b), b)`.
    pub fn theta(&self) -> AlgebraHom<Pair<QuotElem, QuotElem>> {
        let mut images = Vec::new();
        for i in 0..self.a.presentation.generators.len() {
            let g = NcPoly::gen(i);
            images.push(Pair::new(self.a.elem(g.clone()), self.inc_b.apply(self.alpha.apply(&g).poly())));
        }
        for i in 0..self.b.presentation.generators.len() {
            let g = NcPoly::gen(i);
            images.push(Pair::new(self.inc_a.apply(self.beta.apply(&g).poly()), self.b.elem(g)));
        }
        AlgebraHom { source: self.free.presentation.clone(), images, unit: Some(Pair::new(self.a.one(), self.b.one())) }
    }

    /// `α * β: A *_C B -> C`
    pub fn retraction(&self) -> PresentedMap {
        PresentedMap { target: Arc::clone(&self.c), images: self.alpha.images.iter().chain(&self.beta.images).cloned().collect() }
    }

    fn in_fiber(&self, x: &Pair<QuotElem, QuotElem>) -> bool {
        self.alpha.apply(x.first.poly()) == self.beta.apply(x.second.poly())
    }

    /// `x - α(x)` over words `x` of `A` (and likewise for `B`), spanning the kernels.
    pub fn kernel_samples(&self) -> (Vec<QuotElem>, Vec<QuotElem>) {
        let side = |q: &Arc<NcQuotient>, r: &PresentedMap, inc: &PresentedMap| -> Vec<QuotElem> {
            let k = q.presentation.generators.len();
            let mut words: Vec<Vec<usize>> = vec![vec![]];
            let mut out = Vec::new();
            for _ in 0..q.bound {
                words = words.iter().flat_map(|w| (0..k).map(move |i| { let mut w2 = w.clone(); w2.push(i); w2 })).collect();
                for w in &words {
                    let x = q.elem(NcPoly::word(w.clone(), 1));
                    let y = x.sub_ref(&inc.apply(r.apply(x.poly()).poly()));
                    if !y.is_zero_elem() && !out.contains(&y) {
                        out.push(y);
                    }
                }
            }
            out
        };
        (side(&self.a, &self.alpha, &self.inc_a), side(&self.b, &self.beta, &self.inc_b))
    }

    /// `η: D_2 -> M_2 D_1`, `(a, b) -> diag(a, b)`.
    pub fn eta(&self, x: &Pair<QuotElem, QuotElem>) -> RingMatrix<QuotElem> {
        RingMatrix::diagonal(vec![self.j_a(&x.first), self.j_b(&x.second)])
    }

    pub fn report(&self) -> AmalgamReport {
        let theta = self.theta();
        let verdict = check_hom(&theta);
        let k = self.free.presentation.generators.len();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut lands = self.in_fiber(&Pair::new(self.a.one(), self.b.one()));
        for _ in 0..self.free.bound {
            words = words.iter().flat_map(|w| (0..k).map(move |i| { let mut w2 = w.clone(); w2.push(i); w2 })).collect();
            lands &= words.iter().all(|w| self.in_fiber(&theta.eval(&NcPoly::word(w.clone(), 1))));
        }
        let (ka, kb) = self.kernel_samples();
        let mut d2: Vec<Pair<QuotElem, QuotElem>> = Vec::new();
        for a in ka.iter().cloned().chain([self.a.zero()]) {
            for b in kb.iter().cloned().chain([self.b.zero()]) {
                d2.push(Pair::new(a.clone(), b));
            }
        }
        let mut eta_multiplicative = true;
        let mut eta_additive = true;
        for x in &d2 {
            for y in &d2 {
                eta_multiplicative &= self.eta(x).mul_ref(&self.eta(y)) == self.eta(&x.mul_ref(y));
                eta_additive &= self.eta(x).add_ref(&self.eta(y)) == self.eta(&x.add_ref(y));
            }
        }
        let r = self.retraction();
        let eta_in_d1 = d2.iter().all(|x| {
            let m = self.eta(x);
            (0..2).all(|i| (0..2).all(|j| r.apply(m.get(i, j).poly()).is_zero_elem()))
        });
        AmalgamReport {
            theta_is_hom: verdict.valid,
            theta_in_fiber_product: lands,
            d2_samples: d2.len(),
            eta_multiplicative,
            eta_additive,
            eta_in_d1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmalgamReport {
    pub theta_is_hom: bool,
    pub theta_in_fiber_product: bool,
    pub d2_samples: usize,
    pub eta_multiplicative: bool,
    pub eta_additive: bool,
    pub eta_in_d1: bool,
}

impl AmalgamReport {
    pub fn pass(&self) -> bool {
        self.theta_is_hom && self.theta_in_fiber_product && self.eta_multiplicative && self.eta_additive && self.eta_in_d1
    }
}

/// `A = Z[x]/(x^2 - x)` with `α(x) = 1`, `B = Z[y]/(y^2)` with `β(y) = 0`, over `C = Z`.
pub fn idempotent_square_zero_amalgam(bound: usize) -> Amalgam {
    let build = || -> Result<Amalgam, AmalgamError> {
        let a = NcQuotient::new(AlgebraPresentation::new(&["x"], &["x*x - x"])?, bound);
        let b = NcQuotient::new(AlgebraPresentation::new(&["y"], &["y*y"])?, bound);
        let c = NcQuotient::new(AlgebraPresentation::new(&[], &[])?, bound);
        let inc_a = PresentedMap::new(&a, &[])?;
        let inc_b = PresentedMap::new(&b, &[])?;
        let alpha = PresentedMap::new(&c, &["1"])?;
        let beta = PresentedMap::new(&c, &["0"])?;
        Amalgam::new(a, b, c, inc_a, inc_b, alpha, beta)
    };
    build().expect("static amalgam")
}

/// `A = B = C = Z[e]/(e^2 - e)` with identity retractions.
pub fn diagonal_amalgam(bound: usize) -> Amalgam {
    let build = || -> Result<Amalgam, AmalgamError> {
        let a = NcQuotient::new(AlgebraPresentation::new(&["a"], &["a*a - a"])?, bound);
        let b = NcQuotient::new(AlgebraPresentation::new(&["b"], &["b*b - b"])?, bound);
        let c = NcQuotient::new(AlgebraPresentation::new(&["c"], &["c*c - c"])?, bound);
        let inc_a = PresentedMap::new(&a, &["a"])?;
        let inc_b = PresentedMap::new(&b, &["b"])?;
        let alpha = PresentedMap::new(&c, &["c"])?;
        let beta = PresentedMap::new(&c, &["c"])?;
        Amalgam::new(a, b, c, inc_a, inc_b, alpha, beta)
    };
    build().expect("static amalgam")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_square_zero_amalgam_passes() {
        let am = idempotent_square_zero_amalgam(3);
        let report = am.report();
        assert!(report.pass(), "{:?}", report);
        let theta = am.theta();
        assert_eq!(theta.images[0], Pair::new(am.a.gen("x").unwrap(), am.b.one()));
        assert_eq!(theta.images[1], Pair::new(am.a.zero(), am.b.gen("y").unwrap()));
        // x - 1 lies in ker α and goes to (x - 1, 0)
        let k = theta.eval(&am.free.presentation.parse("x - 1").unwrap());
        assert_eq!(k, Pair::new(am.a.parse("x - 1").unwrap(), am.b.zero()));
        let (ka, kb) = am.kernel_samples();
        assert_eq!(ka, vec![am.a.parse("x - 1").unwrap()]);
        assert_eq!(kb, vec![am.b.gen("y").unwrap()]);
    }

    #[test]
    fn diagonal_case_gives_the_diagonal() {
        let am = diagonal_amalgam(3);
        assert!(am.report().pass());
        let theta = am.theta();
        assert_eq!(theta.images[0], Pair::new(am.a.gen("a").unwrap(), am.b.gen("b").unwrap()));
        assert_eq!(am.free.parse("a").unwrap(), am.free.parse("b").unwrap());
    }

    #[test]
    fn non_retractions_are_rejected() {
        let a = NcQuotient::new(AlgebraPresentation::new(&["a"], &["a*a - a"]).unwrap(), 2);
        let c = NcQuotient::new(AlgebraPresentation::new(&["c"], &["c*c - c"]).unwrap(), 2);
        let inc = PresentedMap::new(&a, &["a"]).unwrap();
        let zero = PresentedMap::new(&c, &["0"]).unwrap();
        let id = PresentedMap::new(&c, &["c"]).unwrap();
        let b = NcQuotient::new(AlgebraPresentation::new(&["b"], &["b*b - b"]).unwrap(), 2);
        let inc_b = PresentedMap::new(&b, &["b"]).unwrap();
        let err = Amalgam::new(Arc::clone(&a), b, Arc::clone(&c), inc.clone(), inc_b, zero, id).err().unwrap();
        assert_eq!(err, AmalgamError::NotRetraction("alpha", "c".into()));
        let twice = PresentedMap::new(&c, &["2 c"]).unwrap();
        assert!(matches!(respects("alpha", &a, &twice), Err(AmalgamError::NotHom(..))));
    }
}
