//! JSON form:
//! `{"dims": [0, 1], "simplices": {"0": ["a"], "1": [{"id": "e", "faces": [[[], "a"], [[], "a"]]}]}, "basepoint": "a"}`.
//! Each face is `[degeneracy word, nondegenerate id]` with a strictly
//! decreasing word.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{word_to_surjection, FiniteSimplicialSet, NormalForm, SimplicialError};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SimplicialFile {
    pub dims: Vec<usize>,
    pub simplices: BTreeMap<String, Vec<SimplexEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum SimplexEntry {
    Vertex(String),
    Simplex { id: String, faces: Vec<(Vec<usize>, String)> },
}

pub fn parse_simplicial(src: &str) -> Result<FiniteSimplicialSet, SimplicialError> {
    let file: SimplicialFile = serde_json::from_str(src).map_err(|e| SimplicialError::Invalid(e.to_string()))?;
    FiniteSimplicialSet::from_file(&file)
}

pub fn load_simplicial(path: &Path) -> Result<FiniteSimplicialSet, SimplicialError> {
    let src = std::fs::read_to_string(path).map_err(|e| SimplicialError::Invalid(format!("{}: {}", path.display(), e)))?;
    parse_simplicial(&src)
}

impl FiniteSimplicialSet {
    pub fn from_file(file: &SimplicialFile) -> Result<Self, SimplicialError> {
        let mut k = FiniteSimplicialSet::empty();
        let mut dims: Vec<usize> = Vec::new();
        for key in file.simplices.keys() {
            dims.push(key.parse().map_err(|_| SimplicialError::Invalid(format!("bad dimension key `{}`", key)))?);
        }
        dims.sort();
        let mut declared = file.dims.clone();
        declared.sort();
        let nonempty: Vec<usize> = dims.iter().copied().filter(|d| !file.simplices[&d.to_string()].is_empty()).collect();
        if declared != nonempty {
            return Err(SimplicialError::Invalid(format!("`dims` {:?} does not match simplices {:?}", file.dims, nonempty)));
        }
        for n in dims {
            for entry in &file.simplices[&n.to_string()] {
                let (id, faces) = match entry {
                    SimplexEntry::Vertex(id) if n == 0 => (id.clone(), vec![]),
                    SimplexEntry::Simplex { id, faces } if n > 0 => (id.clone(), faces.clone()),
                    SimplexEntry::Simplex { id, faces } if faces.is_empty() => (id.clone(), vec![]),
                    SimplexEntry::Vertex(id) | SimplexEntry::Simplex { id, .. } => {
                        return Err(SimplicialError::WrongFaceCount(id.clone()))
                    }
                };
                if n > 0 && faces.len() != n + 1 {
                    return Err(SimplicialError::WrongFaceCount(id));
                }
                let mut nfs = Vec::with_capacity(faces.len());
                for (i, (word, target)) in faces.iter().enumerate() {
                    let simplex = k.lookup(target).map_err(|_| SimplicialError::DanglingFace { simplex: id.clone(), face: target.clone() })?;
                    let surj = word_to_surjection(word, n - 1).ok_or_else(|| SimplicialError::BadDegeneracyWord {
                        simplex: id.clone(),
                        index: i,
                        word: word.clone(),
                    })?;
                    if surj[n - 1] != simplex.dim {
                        return Err(SimplicialError::DimensionMismatch { simplex: id.clone(), index: i });
                    }
                    nfs.push(NormalForm { surj, simplex });
                }
                k.push(id, nfs)?;
            }
        }
        if let Some(bp) = &file.basepoint {
            k = k.with_basepoint(bp)?;
        }
        k.validate()?;
        Ok(k)
    }

    pub fn to_file(&self) -> SimplicialFile {
        let mut simplices = BTreeMap::new();
        for d in 0..=self.dim() {
            let entries: Vec<SimplexEntry> = self
                .simplices_of_dim(d)
                .map(|r| {
                    let s = self.simplex(r);
                    if d == 0 {
                        SimplexEntry::Vertex(s.name.clone())
                    } else {
                        SimplexEntry::Simplex {
                            id: s.name.clone(),
                            faces: s.faces.iter().map(|f| (f.degeneracy_word(), self.name(f.simplex).to_string())).collect(),
                        }
                    }
                })
                .collect();
            if !entries.is_empty() {
                simplices.insert(d.to_string(), entries);
            }
        }
        SimplicialFile { dims: self.dims(), simplices, basepoint: self.basepoint().map(|b| self.name(b).to_string()) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{circle, is_isomorphic, standard_simplex};

    #[test]
    fn round_trip_and_circle_file() {
        let d2 = standard_simplex(2);
        let back = parse_simplicial(&d2.to_json()).unwrap();
        assert!(is_isomorphic(&back, &d2));
        let src = r#"{"dims":[0,1],"simplices":{"0":["a"],"1":[{"id":"e","faces":[[[],"a"],[[],"a"]]}]},"basepoint":"a"}"#;
        let c = parse_simplicial(src).unwrap();
        assert_eq!(c.counts(), vec![1, 1]);
        assert!(is_isomorphic(&c, &circle()));
    }

    #[test]
    fn dangling_face_is_named() {
        let src = r#"{"dims":[0,1],"simplices":{"0":["a"],"1":[{"id":"e","faces":[[[],"a"],[[],"zz"]]}]}}"#;
        let err = parse_simplicial(src).unwrap_err();
        assert_eq!(err, SimplicialError::DanglingFace { simplex: "e".into(), face: "zz".into() });
        assert!(err.to_string().contains("zz"));
    }

    #[test]
    fn identity_violation_is_reported() {
        // d0 d1 x should equal d0 d0 x; make two edges disagree
        let src = r#"{"dims":[0,1,2],"simplices":{
            "0":["a","b","c"],
            "1":[{"id":"ab","faces":[[[],"b"],[[],"a"]]},{"id":"bc","faces":[[[],"c"],[[],"b"]]},{"id":"ac","faces":[[[],"c"],[[],"a"]]}],
            "2":[{"id":"x","faces":[[[],"ab"],[[],"ac"],[[],"bc"]]}]}}"#;
        assert!(matches!(parse_simplicial(src), Err(SimplicialError::IdentityViolation { .. })));
    }

    #[test]
    fn sphere_model_with_degenerate_faces_loads() {
        let src = r#"{"dims":[0,2],"simplices":{"0":["*"],"2":[{"id":"s","faces":[[[0],"*"],[[0],"*"],[[0],"*"]]}]}}"#;
        let k = parse_simplicial(src).unwrap();
        assert_eq!(k.counts(), vec![1, 0, 1]);
    }
}
