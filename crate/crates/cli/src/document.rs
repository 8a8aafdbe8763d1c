//! The shared JSON input document.

use std::fs;
use std::io::Read;
use std::path::Path;

use eulerlab_core::polyring::FieldTag;
use eulerlab_core::repmod::doc::{FlagSpec, GroupKind, GroupSpec, ModuleSpec};
use eulerlab_core::repmod::Label;
use eulerlab_core::{Error, RepTable, Result};
use serde::{Deserialize, Serialize};

/// Every subcommand reads the fields it needs and ignores the rest;
/// command-line flags take precedence over document fields.
///
/// `module` is `U` (or `P` for Stiefel bounds) and `target` is `V` (or `Q`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<ModuleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<FlagSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<u64>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("input document: {e}")))
    }

    /// Reads `path`, or standard input for `-`.
    pub fn load(path: &Path) -> Result<Self> {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Error::Input(format!("reading {}: {e}", path.display())))?
        };
        Self::parse(&text)
    }

    pub fn group(&self) -> Result<&GroupSpec> {
        self.group
            .as_ref()
            .ok_or_else(|| Error::Input("the document needs a `group`".into()))
    }

    pub fn kind(&self) -> Result<GroupKind> {
        Ok(self.group()?.kind)
    }

    /// `module` as a table; an absent module is an error.
    pub fn source<L: Label>(&self) -> Result<RepTable<L>> {
        let m = self
            .module
            .as_ref()
            .ok_or_else(|| Error::Input("the document needs a `module`".into()))?;
        m.to_table(self.group()?.rank)
    }

    /// `target` as a table; an absent target is the zero module.
    pub fn target<L: Label>(&self) -> Result<RepTable<L>> {
        let rank = self.group()?.rank;
        match &self.target {
            Some(m) => m.to_table(rank),
            None => RepTable::new(rank),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_fields() {
        assert!(Document::parse(r#"{"gruop": {}}"#).is_err());
        let d = Document::parse(
            r#"{"group":{"kind":"torus","rank":1},"module":{"entries":[{"weight":[2],"mult":1}]}}"#,
        )
        .unwrap();
        assert_eq!(d.kind().unwrap(), GroupKind::Torus);
    }
}
