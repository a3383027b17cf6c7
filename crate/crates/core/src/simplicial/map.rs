use std::sync::Arc;

use super::{FiniteSimplicialSet, NormalForm, SimplexRef, SimplicialError};

/// A simplicial map, given on nondegenerate simplices of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub source: Arc<FiniteSimplicialSet>,
    pub target: Arc<FiniteSimplicialSet>,
    assignment: Vec<Vec<NormalForm>>,
}

impl SimplicialMap {
    /// Builds and validates a map; `f(r)` gives the image of each
    /// nondegenerate source simplex.
    pub fn new(
        source: Arc<FiniteSimplicialSet>,
        target: Arc<FiniteSimplicialSet>,
        f: impl Fn(SimplexRef) -> NormalForm,
    ) -> Result<Self, SimplicialError> {
        let assignment = (0..=source.dim())
            .map(|d| source.simplices_of_dim(d).map(&f).collect())
            .collect();
        let m = SimplicialMap { source, target, assignment };
        m.validate()?;
        Ok(m)
    }

    pub fn identity(k: Arc<FiniteSimplicialSet>) -> Self {
        SimplicialMap::new(Arc::clone(&k), k, NormalForm::nondegenerate).expect("identity is simplicial")
    }

    /// Image of a nondegenerate source simplex.
    pub fn image(&self, r: SimplexRef) -> &NormalForm {
        &self.assignment[r.dim][r.idx]
    }

    /// Image of an arbitrary source simplex in normal form.
    pub fn image_nf(&self, y: &NormalForm) -> NormalForm {
        self.target.apply_nf(self.image(y.simplex), &y.surj)
    }

    pub fn validate(&self) -> Result<(), SimplicialError> {
        for r in self.source.simplices() {
            let img = self.image(r);
            if img.dim() != r.dim {
                return Err(SimplicialError::NotSimplicial { simplex: self.source.name(r).into(), index: 0 });
            }
            if r.dim == 0 {
                continue;
            }
            for i in 0..=r.dim {
                let lhs = self.image_nf(self.source.face(r, i));
                let rhs = self.target.face_of(img, i);
                if lhs != rhs {
                    return Err(SimplicialError::NotSimplicial { simplex: self.source.name(r).into(), index: i });
                }
            }
        }
        Ok(())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        assert!(*self.target == *other.source, "maps are not composable");
        let assignment = self.assignment.iter().map(|l| l.iter().map(|nf| other.image_nf(nf)).collect()).collect();
        SimplicialMap { source: Arc::clone(&self.source), target: Arc::clone(&other.target), assignment }
    }

    /// Inclusion of a subcomplex (given by refs closed under faces) as a new
    /// simplicial set, together with its inclusion map.
    pub fn inclusion(k: Arc<FiniteSimplicialSet>, members: &[SimplexRef]) -> Result<Self, SimplicialError> {
        k.is_subcomplex(members)?;
        let mut sorted = members.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut sub = FiniteSimplicialSet::empty();
        let mut new_ref = std::collections::HashMap::new();
        for r in &sorted {
            let faces = if r.dim == 0 {
                vec![]
            } else {
                k.simplex(*r)
                    .faces
                    .iter()
                    .map(|f| NormalForm { surj: f.surj.clone(), simplex: new_ref[&f.simplex] })
                    .collect()
            };
            let nr = sub.push(k.name(*r).to_string(), faces)?;
            new_ref.insert(*r, nr);
        }
        sub.trim();
        if let Some(bp) = k.basepoint() {
            sub.set_basepoint(new_ref.get(&bp).copied());
        }
        let sub = Arc::new(sub);
        let back: std::collections::HashMap<SimplexRef, SimplexRef> = new_ref.iter().map(|(a, b)| (*b, *a)).collect();
        SimplicialMap::new(sub, k, |r| NormalForm::nondegenerate(back[&r]))
    }
}
