//! Built-in example algebras. Each entry is stored as a structure file and
//! its classification and `V + n` decomposition are rechecked on load.

use std::fmt;

use thiserror::Error;

use crate::io::{parse_structure_file, StructureError};
use crate::lie::{completely_solvable_flag, is_nilpotent, is_solvable, FlagStatus, LieAlgebra};
use crate::splitting::{SplittingError, SplittingInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Nilpotent,
    CompletelySolvable,
    /// Solvable with some non-real adjoint eigenvalue.
    Solvable,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Nilpotent => "nilpotent",
            Self::CompletelySolvable => "completely solvable",
            Self::Solvable => "solvable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry '{0}'")]
    UnknownName(String),
    #[error("catalog entry {name}: {source}")]
    Structure {
        name: String,
        source: StructureError,
    },
    #[error("catalog entry {name} is declared {declared} but computes as {found}")]
    ClassificationMismatch {
        name: String,
        declared: Classification,
        found: String,
    },
    #[error("catalog entry {name}: {source}")]
    Decomposition {
        name: String,
        source: SplittingError,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub classification: Classification,
    /// 0-based basis indices spanning `V`; the rest span `n`.
    pub complement: Vec<usize>,
    pub note: String,
}

impl CatalogEntry {
    pub fn splitting_input(&self) -> SplittingInput {
        SplittingInput::from_complement_indices(self.algebra.clone(), &self.complement)
            .expect("catalog decompositions are verified on load")
    }
}

struct Template {
    name: &'static str,
    text: &'static str,
    classification: Classification,
    complement: &'static [usize],
    note: &'static str,
}

const TEMPLATES: &[Template] = &[
    Template {
        name: "heisenberg3",
        text: "dim 3\nd e3 = -e1^e2\n",
        classification: Classification::Nilpotent,
        complement: &[],
        note: "[e1,e2] = e3",
    },
    Template {
        name: "nakamura",
        text: "dim 6
d e3 = -e1^e3 + e2^e4
d e4 = -e1^e4 - e2^e3
d e5 = e1^e5 - e2^e6
d e6 = e1^e6 + e2^e5
",
        classification: Classification::Solvable,
        complement: &[0, 1],
        note: "complex parallelizable Nakamura manifold; e1 acts by diag(1,1,-1,-1), e2 by rotations",
    },
    Template {
        name: "nakamura_tilde",
        text: "dim 6
d e3 = -e1^e3
d e4 = -e1^e4
d e5 = e1^e5
d e6 = e1^e6
",
        classification: Classification::CompletelySolvable,
        complement: &[0, 1],
        note: "modified bracket of nakamura with the compact kill; matches the Maurer-Cartan forms of the \
                matrix group with the rotation factor removed",
    },
    Template {
        name: "hyperelliptic4",
        text: "dim 4\nd e1 = e2^e4\nd e2 = -e1^e4\n",
        classification: Classification::Solvable,
        complement: &[3],
        note: "e4 rotates span{e1, e2}",
    },
    Template {
        name: "rot3",
        text: "dim 3\nd e2 = e1^e3\nd e3 = -e1^e2\n",
        classification: Classification::Solvable,
        complement: &[0],
        note: "rescaled: the factor 2*pi is absorbed into e1; Betti numbers do not depend on the rescaling",
    },
    Template {
        name: "sol3",
        text: "dim 3\nd e2 = e1^e2\nd e3 = -e1^e3\n",
        classification: Classification::CompletelySolvable,
        complement: &[0],
        note: "[e1,e2] = -e2, [e1,e3] = e3; lattice holonomy [[2,1],[1,1]] with eigenvalues lambda, 1/lambda",
    },
];

/// Names accepted by [`catalog_get`]; `abelian<N>` stands for any `N >= 1`.
pub fn catalog_names() -> Vec<&'static str> {
    let mut names = vec!["abelian<N>"];
    names.extend(TEMPLATES.iter().map(|t| t.name));
    names
}

const MAX_ABELIAN: usize = 32;

fn classify(g: &LieAlgebra) -> Option<Classification> {
    if is_nilpotent(g) {
        return Some(Classification::Nilpotent);
    }
    if !is_solvable(g) {
        return None;
    }
    match completely_solvable_flag(g).ok()?.status {
        FlagStatus::Yes => Some(Classification::CompletelySolvable),
        FlagStatus::No => Some(Classification::Solvable),
        FlagStatus::Undetermined => None,
    }
}

fn load(
    name: &str,
    g: LieAlgebra,
    declared: Classification,
    complement: Vec<usize>,
    note: &str,
) -> Result<CatalogEntry, CatalogError> {
    match classify(&g) {
        Some(found) if found == declared => {}
        found => {
            let found = found.map_or_else(|| "unclassified".to_string(), |c| c.to_string());
            return Err(CatalogError::ClassificationMismatch {
                name: name.into(),
                declared,
                found,
            });
        }
    }
    SplittingInput::from_complement_indices(g.clone(), &complement).map_err(|source| {
        CatalogError::Decomposition {
            name: name.into(),
            source,
        }
    })?;
    Ok(CatalogEntry {
        name: name.into(),
        algebra: g,
        classification: declared,
        complement,
        note: note.into(),
    })
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry, CatalogError> {
    if let Some(n) = name
        .strip_prefix("abelian")
        .and_then(|n| n.parse::<usize>().ok())
    {
        if (1..=MAX_ABELIAN).contains(&n) {
            return load(
                name,
                LieAlgebra::abelian(n),
                Classification::Nilpotent,
                Vec::new(),
                "abelian",
            );
        }
    }
    let t = TEMPLATES
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.into()))?;
    let g = parse_structure_file(t.text).map_err(|source| CatalogError::Structure {
        name: name.into(),
        source,
    })?;
    load(t.name, g, t.classification, t.complement.to_vec(), t.note)
}
