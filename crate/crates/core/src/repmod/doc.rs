//! JSON document shapes for representation input.
//!
//! ```json
//! {"group": {"kind": "elem_abelian_2", "rank": 2},
//!  "module": {"entries": [{"char": [0, 1], "mult": 3}]},
//!  "flag": {"dual_basis": [[1, 0], [0, 1]]}}
//! ```
//!
//! Characters are 0/1 vectors; torus weights are integer vectors under the
//! same `char` key (`weight` is accepted as an alias).

use serde::{Deserialize, Serialize};

use super::{CharF2, FlagE, Label, RationalFlag, RepTable, Weight};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "elem_abelian_2")]
    ElemAbelian2,
    #[serde(rename = "torus")]
    Torus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntrySpec {
    #[serde(rename = "char", alias = "weight")]
    pub label: Vec<i64>,
    pub mult: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub entries: Vec<EntrySpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagSpec {
    pub dual_basis: Vec<Vec<i64>>,
}

impl ModuleSpec {
    pub fn to_table<L: Label>(&self, rank: usize) -> Result<RepTable<L>> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                if e.label.len() != rank {
                    return Err(Error::Input(format!(
                        "entry {:?} has length {}, group rank is {rank}",
                        e.label,
                        e.label.len()
                    )));
                }
                Ok((L::from_coords(&e.label)?, e.mult))
            })
            .collect::<Result<Vec<_>>>()?;
        RepTable::from_entries(rank, entries)
    }

    pub fn from_table<L: Label>(t: &RepTable<L>) -> Self {
        ModuleSpec {
            entries: t
                .entries()
                .map(|(l, m)| EntrySpec {
                    label: l.coords(),
                    mult: m,
                })
                .collect(),
        }
    }
}

impl FlagSpec {
    pub fn to_flag_e(&self, rank: usize) -> Result<FlagE> {
        let basis = self
            .dual_basis
            .iter()
            .map(|v| {
                if v.len() != rank {
                    return Err(Error::Input(format!("covector {v:?} has the wrong length")));
                }
                CharF2::from_coords(v)
            })
            .collect::<Result<Vec<_>>>()?;
        FlagE::from_dual_basis(basis)
    }

    pub fn to_rational_flag(&self, rank: usize) -> Result<RationalFlag> {
        if self.dual_basis.iter().any(|v| v.len() != rank) {
            return Err(Error::Input("flag covector has the wrong length".into()));
        }
        RationalFlag::from_dual_basis(self.dual_basis.iter().cloned().map(Weight::new).collect())
    }

    pub fn from_flag_e(f: &FlagE) -> Self {
        FlagSpec {
            dual_basis: f.dual_basis().iter().map(Label::coords).collect(),
        }
    }

    pub fn from_rational_flag(f: &RationalFlag) -> Self {
        FlagSpec {
            dual_basis: f.dual_basis().iter().map(Label::coords).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::RepE;

    #[test]
    fn parses_the_documented_shape() {
        let doc = r#"{"kind":"elem_abelian_2","rank":2}"#;
        let g: GroupSpec = serde_json::from_str(doc).unwrap();
        assert_eq!(g.kind, GroupKind::ElemAbelian2);
        let m: ModuleSpec =
            serde_json::from_str(r#"{"entries":[{"char":[0,1],"mult":3},{"char":[1,1],"mult":1}]}"#).unwrap();
        let u: RepE = m.to_table(2).unwrap();
        assert_eq!(u.dim(), 4);
        assert_eq!(ModuleSpec::from_table(&u).to_table::<CharF2>(2).unwrap(), u);
    }

    #[test]
    fn duplicate_and_unknown_fields_rejected() {
        let m: ModuleSpec =
            serde_json::from_str(r#"{"entries":[{"char":[1],"mult":1},{"char":[1],"mult":2}]}"#).unwrap();
        assert!(m.to_table::<CharF2>(1).is_err());
        assert!(serde_json::from_str::<ModuleSpec>(r#"{"entries":[],"extra":1}"#).is_err());
        assert!(m.to_table::<CharF2>(2).is_err());
    }
}
