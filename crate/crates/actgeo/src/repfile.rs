//! Representation files: JSON with fields `p`, `group_dim`, `action_dim`
//! and a generator list; integers are reduced mod p on load.

use crate::error::{Error, Result};
use crate::fpmat::FpMatrix;
use crate::rep::FiniteRepresentation;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Serialize, Deserialize)]
pub struct RepFile {
    pub p: u64,
    pub group_dim: usize,
    pub action_dim: usize,
    pub generators: Vec<GeneratorPair>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorPair {
    pub group: Vec<Vec<i64>>,
    pub action: Vec<Vec<i64>>,
}

fn to_matrix(p: u64, rows: &[Vec<i64>], dim: usize, what: &str) -> Result<FpMatrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::RepFile(format!("{what} matrix is not {dim}x{dim}")));
    }
    let data: Vec<u64> = rows
        .iter()
        .flatten()
        .map(|&x| x.rem_euclid(p as i64) as u64)
        .collect();
    Ok(FpMatrix::new(p, dim, dim, data))
}

impl RepFile {
    pub fn load(path: &Path) -> Result<RepFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::RepFile(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::RepFile(e.to_string()))
    }

    pub fn build(&self, bound: usize) -> Result<FiniteRepresentation> {
        let mut group = Vec::new();
        let mut action = Vec::new();
        for g in &self.generators {
            group.push(to_matrix(self.p, &g.group, self.group_dim, "group")?);
            action.push(to_matrix(self.p, &g.action, self.action_dim, "action")?);
        }
        FiniteRepresentation::generate(self.p, &group, &action, bound)
    }

    /// Emits every element as a generator pair; regenerating gives the
    /// same closure.
    pub fn from_rep(rep: &FiniteRepresentation) -> RepFile {
        let dump = |m: &FpMatrix| -> Vec<Vec<i64>> {
            (0..m.rows)
                .map(|i| m.row(i).iter().map(|&x| x as i64).collect())
                .collect()
        };
        RepFile {
            p: rep.p(),
            group_dim: rep.group_dim(),
            action_dim: rep.action_dim(),
            generators: (0..rep.size())
                .map(|i| GeneratorPair {
                    group: dump(rep.group_matrix(i)),
                    action: dump(rep.action_matrix(i)),
                })
                .collect(),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::RepFile(e.to_string()))?;
        std::fs::write(path, text).map_err(|e| Error::RepFile(format!("{}: {e}", path.display())))
    }
}

pub fn load_rep(path: &Path, bound: usize) -> Result<FiniteRepresentation> {
    RepFile::load(path)?.build(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_file() {
        let rep = crate::rep::c2_negation(3);
        let dir = std::env::temp_dir().join("actgeo_repfile_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c2.json");
        RepFile::from_rep(&rep).save(&path).unwrap();
        let back = load_rep(&path, 100).unwrap();
        assert_eq!(back.size(), 2);
        assert_eq!(back.action_kernel(), vec![0]);
    }

    #[test]
    fn entries_reduced_mod_p() {
        let rf = RepFile {
            p: 3,
            group_dim: 1,
            action_dim: 1,
            generators: vec![GeneratorPair {
                group: vec![vec![-1]],
                action: vec![vec![5]],
            }],
        };
        let rep = rf.build(10).unwrap();
        assert_eq!(rep.size(), 2);
        assert_eq!(rep.action_matrix(1)[(0, 0)], 2);
    }
}
