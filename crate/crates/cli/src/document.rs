//! The JSON interchange format.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "kind": "metric_lie",
//!   "dim": 3,
//!   "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}],
//!   "gram": [["2", "0", "0"], ["0", "2", "0"], ["0", "0", "2"]],
//!   "labels": ["e1", "e2", "e3"]
//! }
//! ```
//!
//! Indices are 0-based and every entry has `i < j`. For `kind = "rho"` an
//! entry lists `A^i e_j` (so `coeffs[k] = (A^i)_kj`); the remaining columns
//! follow from `A^j e_i = −A^i e_j` and `A^i e_i = 0`. The gram of a rho
//! document is the inner product on `V`, the identity when absent.

use adlie::exactla::{format_scalar, parse_scalar, BilinearSpace, Mat, Scalar};
use adlie::liealg::{LieAlgebra, MetricLieAlgebra};
use adlie::rhoform::RhoMap;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Lie,
    MetricLie,
    Rho,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub schema_version: String,
    pub kind: Kind,
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemaError {
    #[error("{0}")]
    Json(String),
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("expected a {expected} document, found {found:?}")]
    WrongKind { expected: &'static str, found: Kind },
}

fn field_error(field: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError::Field { field: field.into(), message: message.into() }
}

pub fn scalar_from(field: &str, text: &str) -> Result<Scalar, SchemaError> {
    parse_scalar(text).ok_or_else(|| field_error(field, format!("{text:?} is not a rational number")))
}

pub fn matrix_to_strings(m: &Mat) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(format_scalar).collect()).collect()
}

pub fn matrix_from_strings(field: &str, rows: &[Vec<String>]) -> Result<Mat, SchemaError> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(field_error(format!("{field}[{r}]"), format!("expected {cols} entries, found {}", row.len())));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(c, s)| scalar_from(&format!("{field}[{r}][{c}]"), s))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    if out.is_empty() {
        return Ok(Mat::zeros(0, 0));
    }
    Ok(Mat::from_rows(out))
}

fn entries_of(brackets: impl Iterator<Item = (usize, usize, Vec<(usize, Scalar)>)>) -> Vec<BracketEntry> {
    brackets
        .filter(|(_, _, v)| !v.is_empty())
        .map(|(i, j, v)| BracketEntry { i, j, coeffs: v.into_iter().map(|(k, c)| (k, format_scalar(&c))).collect() })
        .collect()
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, SchemaError> {
        let doc: AlgebraDocument = serde_json::from_str(text).map_err(|e| SchemaError::Json(e.to_string()))?;
        doc.check()?;
        Ok(doc)
    }

    pub fn from_value(value: serde_json::Value) -> Result<Self, SchemaError> {
        let doc: AlgebraDocument = serde_json::from_value(value).map_err(|e| SchemaError::Json(e.to_string()))?;
        doc.check()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Structural checks: version, index ranges, ordering and shapes.
    pub fn check(&self) -> Result<(), SchemaError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(field_error("schema_version", format!("unsupported version {:?}", self.schema_version)));
        }
        let d = self.dim;
        let mut last: Option<(usize, usize)> = None;
        for (n, b) in self.brackets.iter().enumerate() {
            let at = |f: &str| format!("brackets[{n}].{f}");
            if b.i >= b.j {
                return Err(field_error(at("j"), format!("entries need i < j, found i = {}, j = {}", b.i, b.j)));
            }
            if b.j >= d {
                return Err(field_error(at("j"), format!("index {} out of range for dim {d}", b.j)));
            }
            if last.is_some_and(|p| p >= (b.i, b.j)) {
                return Err(field_error(at("i"), "entries must be sorted by (i, j) without repeats"));
            }
            last = Some((b.i, b.j));
            for (k, c) in &b.coeffs {
                if *k >= d {
                    return Err(field_error(at(&format!("coeffs.{k}")), format!("index out of range for dim {d}")));
                }
                scalar_from(&at(&format!("coeffs.{k}")), c)?;
            }
        }
        if let Some(g) = &self.gram {
            if g.len() != d || g.iter().any(|r| r.len() != d) {
                return Err(field_error("gram", format!("expected a {d}x{d} matrix")));
            }
            matrix_from_strings("gram", g)?;
        } else if self.kind == Kind::MetricLie {
            return Err(field_error("gram", "required for metric_lie documents"));
        }
        if let Some(l) = &self.labels {
            if l.len() != d {
                return Err(field_error("labels", format!("expected {d} labels, found {}", l.len())));
            }
        }
        Ok(())
    }

    fn vectors(&self) -> Result<Vec<(usize, usize, Vec<Scalar>)>, SchemaError> {
        self.brackets
            .iter()
            .enumerate()
            .map(|(n, b)| {
                let mut v = vec![Scalar::zero(); self.dim];
                for (k, c) in &b.coeffs {
                    v[*k] = scalar_from(&format!("brackets[{n}].coeffs.{k}"), c)?;
                }
                Ok((b.i, b.j, v))
            })
            .collect()
    }

    fn gram_matrix(&self) -> Result<Option<Mat>, SchemaError> {
        self.gram.as_ref().map(|g| matrix_from_strings("gram", g)).transpose()
    }

    fn lie_algebra(&self) -> Result<LieAlgebra, SchemaError> {
        let l = LieAlgebra::from_brackets(self.dim, &self.vectors()?)
            .map_err(|e| field_error("brackets", e.to_string()))?;
        match &self.labels {
            Some(ls) => l.with_labels(ls.clone()).map_err(|e| field_error("labels", e.to_string())),
            None => Ok(l),
        }
    }

    /// The underlying Lie algebra of a `lie` or `metric_lie` document.
    pub fn to_lie(&self) -> Result<LieAlgebra, SchemaError> {
        if self.kind == Kind::Rho {
            return Err(SchemaError::WrongKind { expected: "lie or metric_lie", found: self.kind });
        }
        self.lie_algebra()
    }

    pub fn to_metric_lie(&self) -> Result<MetricLieAlgebra, SchemaError> {
        if self.kind != Kind::MetricLie {
            return Err(SchemaError::WrongKind { expected: "metric_lie", found: self.kind });
        }
        let gram = self.gram_matrix()?.expect("checked");
        let metric = BilinearSpace::new(gram).map_err(|e| field_error("gram", e.to_string()))?;
        MetricLieAlgebra::new(self.lie_algebra()?, metric).map_err(|e| field_error("gram", e.to_string()))
    }

    pub fn to_rho(&self) -> Result<RhoMap, SchemaError> {
        if self.kind != Kind::Rho {
            return Err(SchemaError::WrongKind { expected: "rho", found: self.kind });
        }
        let n = self.dim;
        let mut mats = vec![Mat::zeros(n, n); n];
        for (i, j, v) in self.vectors()? {
            for (k, c) in v.into_iter().enumerate() {
                mats[j].set(k, i, -c.clone());
                mats[i].set(k, j, c);
            }
        }
        let gram = self.gram_matrix()?.unwrap_or_else(|| Mat::identity(n));
        let space = BilinearSpace::new(gram).map_err(|e| field_error("gram", e.to_string()))?;
        RhoMap::new(space, mats).map_err(|e| field_error("gram", e.to_string()))
    }

    pub fn from_lie(l: &LieAlgebra) -> Self {
        let brackets = entries_of(l.nonzero_brackets().map(|(i, j, v)| (i, j, v.to_vec())));
        AlgebraDocument {
            schema_version: SCHEMA_VERSION.into(),
            kind: Kind::Lie,
            dim: l.dim(),
            brackets,
            gram: None,
            labels: l.labels().map(<[String]>::to_vec),
        }
    }

    pub fn from_metric_lie(m: &MetricLieAlgebra) -> Self {
        AlgebraDocument { kind: Kind::MetricLie, gram: Some(matrix_to_strings(m.gram())), ..Self::from_lie(m.algebra()) }
    }

    /// Fails when `ρ(v)v = 0` does not hold, since such maps have no
    /// representation in this format.
    pub fn from_rho(rho: &RhoMap) -> Result<Self, String> {
        let rep = rho.validate();
        if !rep.ss {
            return Err(format!("ρ(v)v ≠ 0 at pairs {:?}", rep.ss_violations));
        }
        let n = rho.dim();
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        let brackets = entries_of(pairs.map(|(i, j)| {
            let col = rho.mats()[i].column(j);
            let sparse = col.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            (i, j, sparse)
        }));
        let gram = (*rho.gram() != Mat::identity(n)).then(|| matrix_to_strings(rho.gram()));
        Ok(AlgebraDocument { schema_version: SCHEMA_VERSION.into(), kind: Kind::Rho, dim: n, brackets, gram, labels: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use adlie::catalog;
    use adlie::rhoform::primitive5;

    #[test]
    fn so3_round_trip() {
        let m = catalog::so3_metric();
        let doc = AlgebraDocument::from_metric_lie(&m);
        let back = AlgebraDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_metric_lie().unwrap(), m);
    }

    #[test]
    fn rho_round_trip() {
        let rho = primitive5();
        let doc = AlgebraDocument::from_rho(&rho).unwrap();
        assert_eq!(doc.to_rho().unwrap(), rho);
    }

    #[test]
    fn rejects_unordered_entries() {
        let text = r#"{"schema_version":"1","kind":"lie","dim":3,"brackets":[{"i":1,"j":0,"coeffs":{"2":"1"}}]}"#;
        let err = AlgebraDocument::parse(text).unwrap_err();
        assert!(err.to_string().starts_with("brackets[0].j"), "{err}");
    }

    #[test]
    fn rejects_bad_scalars_with_a_path() {
        let text = r#"{"schema_version":"1","kind":"lie","dim":3,"brackets":[{"i":0,"j":1,"coeffs":{"2":"x"}}]}"#;
        let err = AlgebraDocument::parse(text).unwrap_err();
        assert_eq!(err.to_string(), "brackets[0].coeffs.2: \"x\" is not a rational number");
    }

    #[test]
    fn metric_documents_need_a_gram() {
        let text = r#"{"schema_version":"1","kind":"metric_lie","dim":1,"brackets":[]}"#;
        assert!(matches!(AlgebraDocument::parse(text), Err(SchemaError::Field { .. })));
    }

    #[test]
    fn json_errors_carry_a_position() {
        let err = AlgebraDocument::parse("{\n  \"kind\": 3\n}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
