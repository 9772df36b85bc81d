use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::clifford::{MultiVector, Spinor};
use crate::coeff::{parse_scalar, CoeffError};
use crate::gstruct::{GStructError, UnitSpinor};
use crate::scalar::{parse_rational, Scalar, ScalarError, Substitution};

const BUILTINS: [(&str, &str); 3] = [
    ("cp3", include_str!("../../models/cp3.json")),
    ("spin4", include_str!("../../models/spin4.json")),
    ("aw11", include_str!("../../models/aw11.json")),
];

pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTINS.iter().map(|(n, _)| *n)
}

/// Embedded text of a built-in model.
pub fn builtin_source(name: &str) -> Option<&'static str> {
    BUILTINS.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("unknown model {0:?} (built-ins: cp3, spin4, aw11)")]
    UnknownModel(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed model file at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid model: {0}")]
    Invalid(String),
    #[error("lambda[{slot}][{term}].coeff {text:?}: {source}")]
    Coeff { slot: usize, term: usize, text: String, source: CoeffError },
    #[error("spinor entry {index}: {source}")]
    Spinor { index: usize, source: ScalarError },
    #[error(transparent)]
    Substitution(ScalarError),
    #[error(transparent)]
    GStruct(#[from] GStructError),
}

/// One `coeff * e_i ∧ e_j` term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRecord {
    pub coeff: String,
    pub i: usize,
    pub j: usize,
}

/// On-disk model description. Fields are declared in sorted order so that
/// serialization is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub lambda: Vec<Vec<TermRecord>>,
    pub n: usize,
    pub name: String,
    #[serde(default)]
    pub notes: String,
    pub spinor: Vec<String>,
    pub substitution: String,
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        serde_json::from_str(text).map_err(|e| ModelError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Pretty JSON with a trailing newline; byte-identical to the embedded built-ins.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("model records always serialize");
        s.push('\n');
        s
    }
}

/// Reductive homogeneous model: the Wang map `Λ(X_i)` as 2-forms over Q(u)
/// and the invariant spinor defining the structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousModel {
    pub name: String,
    pub n: usize,
    pub substitution: Substitution,
    pub lambda: Vec<MultiVector>,
    pub phi0: UnitSpinor,
    pub notes: String,
    source: ModelFile,
}

impl HomogeneousModel {
    pub fn from_file(file: ModelFile) -> Result<Self, ModelError> {
        let n = file.n;
        if n != 6 && n != 7 {
            return Err(ModelError::Invalid(format!("n must be 6 or 7, got {n}")));
        }
        let substitution: Substitution = file.substitution.parse().map_err(ModelError::Substitution)?;
        if file.lambda.len() != n {
            return Err(ModelError::Invalid(format!("lambda has {} slots, expected {n}", file.lambda.len())));
        }
        if file.spinor.len() != 8 {
            return Err(ModelError::Invalid(format!("spinor has {} entries, expected 8", file.spinor.len())));
        }
        let coords = file
            .spinor
            .iter()
            .enumerate()
            .map(|(index, s)| {
                parse_rational(s).map(Scalar::from_rational).map_err(|source| ModelError::Spinor { index, source })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let phi0 = UnitSpinor::new(n, Spinor::from_coords(coords))?;

        let mut lambda = Vec::with_capacity(n);
        for (slot, terms) in file.lambda.iter().enumerate() {
            let mut form = MultiVector::zero(n);
            for (term, rec) in terms.iter().enumerate() {
                if rec.i == 0 || rec.j == 0 || rec.i > n || rec.j > n || rec.i == rec.j {
                    return Err(ModelError::Invalid(format!(
                        "lambda[{slot}][{term}]: indices ({}, {}) must be distinct and within 1..={n}",
                        rec.i, rec.j
                    )));
                }
                let c = parse_scalar(&rec.coeff, substitution).map_err(|source| ModelError::Coeff {
                    slot,
                    term,
                    text: rec.coeff.clone(),
                    source,
                })?;
                let blade = MultiVector::blade(n, &[rec.i as u8, rec.j as u8], c).expect("indices checked");
                form = &form + &blade;
            }
            lambda.push(form);
        }
        Ok(Self { name: file.name.clone(), n, substitution, lambda, phi0, notes: file.notes.clone(), source: file })
    }

    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        Self::from_file(ModelFile::from_json(text)?)
    }

    /// The record this model was loaded from.
    pub fn source(&self) -> &ModelFile {
        &self.source
    }

    pub fn to_json(&self) -> String {
        self.source.to_json()
    }

    /// A model with the same data but another substitution rule.
    pub fn with_substitution(&self, sub: Substitution) -> Result<Self, ModelError> {
        let mut file = self.source.clone();
        file.substitution = sub.as_str().to_string();
        Self::from_file(file)
    }

    /// Builds a model directly from 2-forms; used for synthetic fixtures.
    pub fn from_forms(
        name: &str,
        substitution: Substitution,
        lambda: Vec<MultiVector>,
        phi0: UnitSpinor,
    ) -> Result<Self, ModelError> {
        let n = phi0.n();
        if lambda.len() != n || lambda.iter().any(|w| w.n() != n || !w.is_pure_grade(2)) {
            return Err(ModelError::Invalid("lambda must hold n two-forms".into()));
        }
        let source = ModelFile {
            lambda: lambda
                .iter()
                .map(|w| {
                    w.terms()
                        .map(|(b, c)| TermRecord {
                            coeff: c.to_string(),
                            i: b.indices()[0] as usize,
                            j: b.indices()[1] as usize,
                        })
                        .collect()
                })
                .collect(),
            n,
            name: name.to_string(),
            notes: String::new(),
            spinor: phi0.spinor().coords().iter().map(ToString::to_string).collect(),
            substitution: substitution.as_str().to_string(),
        };
        Ok(Self { name: name.to_string(), n, substitution, lambda, phi0, notes: String::new(), source })
    }
}

/// Loads a built-in by name, or otherwise reads a model file from disk.
pub fn load_model(id: &str) -> Result<HomogeneousModel, ModelError> {
    if let Some(src) = builtin_source(id) {
        return HomogeneousModel::from_json(src);
    }
    let path = Path::new(id);
    if !path.exists() {
        return Err(ModelError::UnknownModel(id.to_string()));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| ModelError::Io { path: id.to_string(), message: e.to_string() })?;
    HomogeneousModel::from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_dump_byte_identical() {
        for name in builtin_names() {
            let m = load_model(name).unwrap();
            assert_eq!(m.to_json(), builtin_source(name).unwrap());
            assert_eq!(HomogeneousModel::from_json(&m.to_json()).unwrap(), m);
        }
    }

    #[test]
    fn cp3_fifth_slot() {
        let m = load_model("cp3").unwrap();
        let c = parse_scalar("(1-u^2)/(2*u)", Substitution::TEqualsU).unwrap();
        let expected = &MultiVector::blade(6, &[1, 3], c.clone()).unwrap() + &MultiVector::blade(6, &[2, 4], c).unwrap();
        assert_eq!(m.lambda[4], expected);
    }

    #[test]
    fn errors_carry_positions() {
        match HomogeneousModel::from_json("{\n  \"n\": 6,\n  oops }") {
            Err(ModelError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load_model("no-such-model"), Err(ModelError::UnknownModel(_))));
        let mut f = ModelFile::from_json(builtin_source("cp3").unwrap()).unwrap();
        f.lambda[0][0].coeff = "1/(2*".into();
        match HomogeneousModel::from_file(f) {
            Err(ModelError::Coeff { slot: 0, term: 0, source, .. }) => assert_eq!(source.pos().column, 5),
            other => panic!("unexpected {other:?}"),
        }
    }
}
