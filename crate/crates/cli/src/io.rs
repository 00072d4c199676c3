use std::fs;
use std::path::{Path, PathBuf};

use antimagic::graph::Graph;
use antimagic::labeling::{from_matrix, EdgeLabeling, LabelingJson, LabelingMatrix};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::args::LabeledInput;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {msg}")]
    Parse { path: PathBuf, msg: String },
    #[error("{0}")]
    Invalid(String),
    /// The command ran but a check it performs did not hold.
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            _ => 2,
        }
    }
}

pub fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

/// Graph and labeling in one document.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bundle {
    pub graph: Graph,
    pub labeling: LabelingJson,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// serde_json messages already end in "at line L column C".
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse { path: path.to_owned(), msg: e.to_string() })
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    read_json(path)
}

pub fn read_bundle(path: &Path) -> Result<(Graph, EdgeLabeling), CliError> {
    let b: Bundle = read_json(path)?;
    let f = b.labeling.into_labeling(&b.graph).map_err(|e| CliError::Parse { path: path.to_owned(), msg: e.to_string() })?;
    Ok((b.graph, f))
}

pub fn read_matrix(path: &Path) -> Result<(Graph, EdgeLabeling), CliError> {
    let text = read_text(path)?;
    let parse = |msg: String| CliError::Parse { path: path.to_owned(), msg };
    let m = LabelingMatrix::parse(&text).map_err(|e| parse(e.to_string()))?;
    from_matrix(&m).map_err(|e| parse(e.to_string()))
}

pub fn read_labeled(input: &LabeledInput) -> Result<(Graph, EdgeLabeling), CliError> {
    match &input.labeling {
        None => read_bundle(&input.input),
        Some(lpath) => {
            let g = read_graph(&input.input)?;
            let raw: LabelingJson = read_json(lpath)?;
            let f = raw.into_labeling(&g).map_err(|e| CliError::Parse { path: lpath.clone(), msg: e.to_string() })?;
            Ok((g, f))
        }
    }
}

pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory values serialize");
    s.push('\n');
    s
}
