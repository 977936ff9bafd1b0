//! Serialization shapes for files and pipes. Every value carries a schema
//! tag; readers tolerate a missing tag but reject a wrong one.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dynamics::GrowthDiagram;
use crate::frieze::{FriezeError, TropicalFrieze};
use crate::noncrossing::{NcError, NoncrossingPartition};
use crate::sieving::{CspReport, SievingGroup};
use crate::tableau::{IncreasingTableau, InvalidTableau};

pub const TABLEAU_SCHEMA: &str = "inctab.tableau.v1";
pub const PARTITION_SCHEMA: &str = "inctab.partition.v1";
pub const FRIEZE_SCHEMA: &str = "inctab.frieze.v1";
pub const GROWTH_SCHEMA: &str = "inctab.growth.v1";
pub const CSP_REPORT_SCHEMA: &str = "inctab.csp-report.v1";

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum JsonError {
    #[error("schema tag {got:?} does not match {expected:?}")]
    WrongSchema { expected: &'static str, got: String },
    #[error(transparent)]
    Tableau(#[from] InvalidTableau),
    #[error(transparent)]
    Partition(#[from] NcError),
    #[error(transparent)]
    Frieze(#[from] FriezeError),
}

fn check_schema(expected: &'static str, got: &str) -> Result<(), JsonError> {
    if !got.is_empty() && got != expected {
        return Err(JsonError::WrongSchema {
            expected,
            got: got.to_string(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableauDto {
    #[serde(default)]
    pub schema: String,
    pub rows: Vec<Vec<u32>>,
}

impl TableauDto {
    pub fn of(t: &IncreasingTableau) -> Self {
        TableauDto {
            schema: TABLEAU_SCHEMA.to_string(),
            rows: t.rows().to_vec(),
        }
    }

    pub fn into_tableau(self) -> Result<IncreasingTableau, JsonError> {
        check_schema(TABLEAU_SCHEMA, &self.schema)?;
        Ok(IncreasingTableau::new(self.rows)?)
    }
}

/// Blocks are serialized sorted by minima, as the constructor keeps them.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PartitionDto {
    #[serde(default)]
    pub schema: String,
    pub n: u32,
    pub blocks: Vec<Vec<u32>>,
}

impl PartitionDto {
    pub fn of(p: &NoncrossingPartition) -> Self {
        PartitionDto {
            schema: PARTITION_SCHEMA.to_string(),
            n: p.n(),
            blocks: p.blocks().to_vec(),
        }
    }

    pub fn into_partition(self) -> Result<NoncrossingPartition, JsonError> {
        check_schema(PARTITION_SCHEMA, &self.schema)?;
        Ok(NoncrossingPartition::new(self.n, self.blocks)?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FriezeDto {
    #[serde(default)]
    pub schema: String,
    pub rows: Vec<Vec<i64>>,
}

impl FriezeDto {
    pub fn of(f: &TropicalFrieze) -> Self {
        FriezeDto {
            schema: FRIEZE_SCHEMA.to_string(),
            rows: f.rows().to_vec(),
        }
    }

    pub fn into_frieze(self) -> Result<TropicalFrieze, JsonError> {
        check_schema(FRIEZE_SCHEMA, &self.schema)?;
        Ok(TropicalFrieze::from_rows(self.rows)?)
    }
}

/// Output only: each chain row lists its shapes as row-length vectors.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GrowthDto {
    #[serde(default)]
    pub schema: String,
    pub rows: Vec<Vec<Vec<usize>>>,
}

impl GrowthDto {
    pub fn of(g: &GrowthDiagram) -> Self {
        GrowthDto {
            schema: GROWTH_SCHEMA.to_string(),
            rows: g
                .rows()
                .iter()
                .map(|chain| chain.shapes().iter().map(|s| s.parts().to_vec()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CspEntryDto {
    pub m: u64,
    pub fixed: u64,
    pub f_value: i64,
    pub ok: bool,
}

/// Output only.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CspReportDto {
    #[serde(default)]
    pub schema: String,
    pub n: u64,
    pub k: u64,
    pub order: u64,
    pub group: String,
    pub ok: bool,
    pub entries: Vec<CspEntryDto>,
}

impl CspReportDto {
    pub fn of(r: &CspReport) -> Self {
        CspReportDto {
            schema: CSP_REPORT_SCHEMA.to_string(),
            n: r.n,
            k: r.k,
            order: r.order,
            group: match r.group {
                SievingGroup::Promotion => "promotion".to_string(),
                SievingGroup::Evacuation => "evacuation".to_string(),
            },
            ok: r.ok,
            entries: r
                .entries
                .iter()
                .map(|e| CspEntryDto {
                    m: e.m,
                    fixed: e.fixed,
                    f_value: e.f_value,
                    ok: e.ok,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_round_trip() {
        let t = IncreasingTableau::new(vec![vec![1, 2, 4], vec![3, 4, 5]]).unwrap();
        let text = serde_json::to_string(&TableauDto::of(&t)).unwrap();
        assert!(text.contains("inctab.tableau.v1"));
        let back: TableauDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_tableau().unwrap(), t);
    }

    #[test]
    fn missing_schema_is_tolerated_and_wrong_schema_is_not() {
        let bare: TableauDto = serde_json::from_str(r#"{"rows": [[1, 2], [2, 3]]}"#).unwrap();
        assert!(bare.into_tableau().is_ok());
        let wrong: TableauDto =
            serde_json::from_str(r#"{"schema": "inctab.frieze.v1", "rows": [[1]]}"#).unwrap();
        assert!(matches!(
            wrong.into_tableau(),
            Err(JsonError::WrongSchema { .. })
        ));
    }

    #[test]
    fn invalid_payloads_surface_domain_errors() {
        let dto = TableauDto {
            schema: String::new(),
            rows: vec![vec![2, 1]],
        };
        assert!(matches!(dto.into_tableau(), Err(JsonError::Tableau(_))));
        let p = PartitionDto {
            schema: String::new(),
            n: 4,
            blocks: vec![vec![1, 3], vec![2, 4]],
        };
        assert!(matches!(p.into_partition(), Err(JsonError::Partition(_))));
    }

    #[test]
    fn partition_and_frieze_round_trips() {
        let p = NoncrossingPartition::new(8, vec![vec![1, 2, 3], vec![4, 8], vec![5, 6, 7]])
            .unwrap();
        let text = serde_json::to_string(&PartitionDto::of(&p)).unwrap();
        let back: PartitionDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_partition().unwrap(), p);

        let f = TropicalFrieze::from_seed(vec![0, 1, -1, 0], 4).unwrap();
        let text = serde_json::to_string(&FriezeDto::of(&f)).unwrap();
        let back: FriezeDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_frieze().unwrap(), f);
    }

    #[test]
    fn report_serializes_per_entry_fields() {
        let report = crate::sieving::csp_promotion(3, 1);
        let dto = CspReportDto::of(&report);
        let text = serde_json::to_string(&dto).unwrap();
        assert!(text.contains("\"m\":"));
        assert!(text.contains("\"fixed\":"));
        assert!(text.contains("\"f_value\":"));
        assert!(text.contains("\"ok\":"));
        assert!(text.contains("\"group\":\"promotion\""));
    }
}
