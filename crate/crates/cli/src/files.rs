//! JSON file formats for trees and colorings.

use std::collections::BTreeMap;
use std::path::Path;

use hctree::coloring::{Color, Coloring, LinearOrder};
use hctree::families::FamilyInstance;
use hctree::tree::{validate_tree, Tree, Vertex};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeFile {
    pub version: u32,
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyInfo>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyInfo {
    pub kind: String,
    pub params: BTreeMap<String, u64>,
    pub canonical_order: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringFile {
    pub version: u32,
    pub colors: Vec<[u64; 2]>,
    pub span: Color,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<i64>,
}

/// A parsed tree file: the tree plus whatever metadata it carried.
#[derive(Debug, Clone)]
pub struct LoadedTree {
    pub tree: Tree,
    pub file: TreeFile,
}

impl LoadedTree {
    pub fn canonical_order(&self) -> Option<Result<LinearOrder, CliError>> {
        let family = self.file.family.as_ref()?;
        Some(
            LinearOrder::new(self.tree.n(), family.canonical_order.clone())
                .map_err(|e| CliError::Input(format!("canonical_order: {e}"))),
        )
    }
}

impl TreeFile {
    pub fn from_tree(tree: &Tree) -> Self {
        TreeFile {
            version: FORMAT_VERSION,
            n: tree.n(),
            edges: tree.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: None,
            family: None,
        }
    }

    pub fn from_instance(inst: &FamilyInstance) -> Self {
        let mut file = TreeFile::from_tree(&inst.tree);
        file.labels = Some(inst.labels.clone());
        file.family = Some(FamilyInfo {
            kind: inst.spec.name().to_string(),
            params: inst
                .spec
                .params()
                .into_iter()
                .map(|(k, v)| (k.to_string(), u64::from(v)))
                .collect(),
            canonical_order: inst.canonical_order.as_slice().to_vec(),
        });
        file
    }

    pub fn into_tree(self) -> Result<LoadedTree, CliError> {
        if self.version != FORMAT_VERSION {
            return Err(CliError::Input(format!(
                "unsupported tree file version {}",
                self.version
            )));
        }
        let edges: Vec<(Vertex, Vertex)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let tree = validate_tree(self.n, &edges)?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(CliError::Input(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.n
                )));
            }
        }
        Ok(LoadedTree { tree, file: self })
    }
}

impl ColoringFile {
    pub fn new(coloring: &Coloring, optimal: Option<bool>, lower_bound: Option<i64>) -> Self {
        ColoringFile {
            version: FORMAT_VERSION,
            colors: coloring
                .colors()
                .iter()
                .enumerate()
                .map(|(v, &c)| [v as u64, c])
                .collect(),
            span: coloring.span(),
            optimal,
            lower_bound,
        }
    }

    /// Rebuilds the coloring for a tree of order `n`, checking the stored span.
    pub fn to_coloring(&self, n: usize) -> Result<Coloring, CliError> {
        if self.version != FORMAT_VERSION {
            return Err(CliError::Input(format!(
                "unsupported coloring file version {}",
                self.version
            )));
        }
        let pairs = self
            .colors
            .iter()
            .map(|&[v, c]| usize::try_from(v).map(|v| (v, c)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Input("vertex id does not fit in usize".into()))?;
        let coloring = Coloring::from_assignments(n, pairs).map_err(|e| CliError::Input(e.to_string()))?;
        if coloring.span() != self.span {
            return Err(CliError::Input(format!(
                "stored span {} does not match the colors (span {})",
                self.span,
                coloring.span()
            )));
        }
        Ok(coloring)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderFile {
    pub order: Vec<Vertex>,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?).map_err(|source| CliError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_tree(path: &Path) -> Result<LoadedTree, CliError> {
    parse::<TreeFile>(path)?.into_tree()
}

pub fn load_coloring(path: &Path, n: usize) -> Result<Coloring, CliError> {
    parse::<ColoringFile>(path)?.to_coloring(n)
}

/// An order file is either `{"order": [...]}` or a bare JSON array.
pub fn load_order(path: &Path, n: usize) -> Result<LinearOrder, CliError> {
    let text = read(path)?;
    let order = match serde_json::from_str::<OrderFile>(&text) {
        Ok(f) => f.order,
        Err(_) => serde_json::from_str::<Vec<Vertex>>(&text).map_err(|source| CliError::Json {
            path: path.display().to_string(),
            source,
        })?,
    };
    LinearOrder::new(n, order).map_err(|e| CliError::Input(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types serialize");
    s.push('\n');
    s
}
