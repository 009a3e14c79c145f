//! JSON documents `{weights, variables?, matrix | generators}`.

use serde::{Deserialize, Serialize};

use crate::error::{Result, WpsError};
use crate::ring::ideal::Ideal;
use crate::ring::matrix::GradedMatrix;
use crate::ring::parse::VarTable;
use crate::ring::weights::WeightSystem;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingDocument {
    pub weights: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
}

/// A parsed document together with the names it was written in.
#[derive(Clone, Debug)]
pub enum Parsed {
    Matrix(GradedMatrix, VarTable),
    Ideal(Ideal, VarTable),
}

impl RingDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| WpsError::parse(format!("bad JSON document: {e}")))
    }

    pub fn table(&self) -> Result<(WeightSystem, VarTable)> {
        let ws = WeightSystem::new(self.weights.clone()).map_err(|e| WpsError::parse(e.to_string()))?;
        let t = match &self.variables {
            Some(names) => VarTable::with_names(&ws, names)?,
            None => VarTable::for_weights(&ws),
        };
        Ok((ws, t))
    }

    pub fn parse(&self) -> Result<Parsed> {
        let (ws, t) = self.table()?;
        match (&self.matrix, &self.generators) {
            (Some(rows), None) => {
                let mut entries = Vec::new();
                for r in rows {
                    entries.push(r.iter().map(|s| t.parse(s)).collect::<Result<Vec<_>>>()?);
                }
                let m = GradedMatrix::new(ws, entries).map_err(|e| WpsError::parse(e.to_string()))?;
                Ok(Parsed::Matrix(m, t))
            }
            (None, Some(gens)) => {
                let g = gens.iter().map(|s| t.parse(s)).collect::<Result<Vec<_>>>()?;
                Ok(Parsed::Ideal(Ideal::new(ws, g)?, t))
            }
            _ => Err(WpsError::parse("document needs exactly one of `matrix` or `generators`")),
        }
    }

    /// The ideal of the document: generators directly, or the maximal minors of the matrix.
    pub fn ideal(&self) -> Result<Ideal> {
        match self.parse()? {
            Parsed::Ideal(i, _) => Ok(i),
            Parsed::Matrix(m, _) => m.minors(m.rows().min(m.cols())),
        }
    }

    pub fn matrix(&self) -> Result<GradedMatrix> {
        match self.parse()? {
            Parsed::Matrix(m, _) => Ok(m),
            Parsed::Ideal(..) => Err(WpsError::parse("document has generators, a matrix was expected")),
        }
    }

    /// Canonical emission using `x_{i,j}` names.
    pub fn from_matrix(m: &GradedMatrix) -> Self {
        let t = VarTable::for_weights(m.ambient());
        RingDocument {
            weights: m.ambient().weights().to_vec(),
            variables: Some(t.names().to_vec()),
            matrix: Some(m.entries().iter().map(|r| r.iter().map(|e| t.render(e)).collect()).collect()),
            generators: None,
        }
    }

    pub fn from_ideal(i: &Ideal) -> Self {
        let t = VarTable::for_weights(i.ambient());
        RingDocument {
            weights: i.ambient().weights().to_vec(),
            variables: Some(t.names().to_vec()),
            matrix: None,
            generators: Some(i.generators().iter().map(|g| t.render(g)).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let doc = RingDocument::from_json(
            r#"{"weights":[1,1,2,2],"matrix":[["x_1","x_2^2","y_1"],["x_2","y_1","y_2"]]}"#,
        )
        .unwrap();
        let m = doc.matrix().unwrap();
        let again = RingDocument::from_json(&RingDocument::from_matrix(&m).to_json()).unwrap();
        assert_eq!(again.matrix().unwrap(), m);
    }

    #[test]
    fn ideal_with_custom_names() {
        let doc = RingDocument::from_json(
            r#"{"weights":[1,3,4,7],"variables":["x","y","z","w"],"generators":["y^2 - x^2 z","z^2 - x w"]}"#,
        )
        .unwrap();
        let i = doc.ideal().unwrap();
        assert_eq!(i.degrees().unwrap(), vec![6, 8]);
        let again = RingDocument::from_json(&RingDocument::from_ideal(&i).to_json()).unwrap();
        assert_eq!(again.ideal().unwrap(), i);
    }

    #[test]
    fn malformed() {
        assert!(RingDocument::from_json("{").is_err());
        let doc = RingDocument::from_json(r#"{"weights":[1,1],"generators":["x_3"]}"#).unwrap();
        assert!(doc.ideal().is_err());
    }
}
