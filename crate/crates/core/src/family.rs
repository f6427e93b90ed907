//! Named graph families, written `name:args`.
//!
//! | spec              | graphs                                  |
//! |-------------------|-----------------------------------------|
//! | `path:6`          | the path on 6 vertices                  |
//! | `cycle:5`         | the cycle on 5 vertices                 |
//! | `complete:4`      | the complete graph on 4 vertices        |
//! | `star:3`          | the star with 3 leaves                  |
//! | `kpartite:2,3`    | the complete multipartite graph `K_{2,3}` |
//! | `hamming:3,2`     | the Hamming graph `Γ(3,2)` (length, alphabet) |
//! | `connected:7`     | all connected graphs on 1..=7 vertices  |
//! | `trees:9`         | all trees on 1..=9 vertices             |
//! | `chordal:8`       | all connected chordal graphs on 1..=8 vertices |

use std::fmt;
use std::str::FromStr;

use crate::corpus;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Multipartite(Vec<usize>),
    Hamming { m: usize, q: usize },
    Connected(usize),
    Trees(usize),
    Chordal(usize),
}

impl FamilySpec {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let corpus_cap = |n: usize| {
            if n > corpus::CANONICAL_MAX {
                Err(Error::Capacity {
                    what: "graph corpus".into(),
                    requested: n as u128,
                    limit: corpus::CANONICAL_MAX,
                })
            } else {
                Ok(())
            }
        };
        Ok(match self {
            FamilySpec::Path(n) => vec![Graph::path(*n)?],
            FamilySpec::Cycle(n) => vec![Graph::cycle(*n)?],
            FamilySpec::Complete(n) => vec![Graph::complete(*n)?],
            FamilySpec::Star(n) => vec![Graph::star(*n)?],
            FamilySpec::Multipartite(parts) => vec![Graph::complete_multipartite(parts)?],
            FamilySpec::Hamming { m, q } => vec![Graph::hamming(*m, *q)?],
            FamilySpec::Connected(n) => {
                corpus_cap(*n)?;
                corpus::connected_graphs_up_to(*n)
            }
            FamilySpec::Trees(n) => {
                corpus_cap(*n)?;
                corpus::trees_up_to(*n)
            }
            FamilySpec::Chordal(n) => {
                corpus_cap(*n)?;
                corpus::connected_chordal_graphs_up_to(*n)
            }
        })
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidArgument(format!("family `{s}`: {why}"));
        let (name, args) = s.split_once(':').ok_or_else(|| bad("expected name:args"))?;
        let numbers: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("arguments must be nonnegative integers"))?;
        let one = || match numbers.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad("expected one argument")),
        };
        match name.trim().to_ascii_lowercase().as_str() {
            "path" => Ok(FamilySpec::Path(one()?)),
            "cycle" => Ok(FamilySpec::Cycle(one()?)),
            "complete" => Ok(FamilySpec::Complete(one()?)),
            "star" => Ok(FamilySpec::Star(one()?)),
            "kpartite" | "multipartite" => Ok(FamilySpec::Multipartite(numbers)),
            "hamming" => match numbers.as_slice() {
                [m, q] => Ok(FamilySpec::Hamming { m: *m, q: *q }),
                _ => Err(bad("expected hamming:m,q")),
            },
            "connected" => Ok(FamilySpec::Connected(one()?)),
            "trees" => Ok(FamilySpec::Trees(one()?)),
            "chordal" => Ok(FamilySpec::Chordal(one()?)),
            other => Err(bad(&format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Multipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "kpartite:{}", parts.join(","))
            }
            FamilySpec::Hamming { m, q } => write!(f, "hamming:{m},{q}"),
            FamilySpec::Connected(n) => write!(f, "connected:{n}"),
            FamilySpec::Trees(n) => write!(f, "trees:{n}"),
            FamilySpec::Chordal(n) => write!(f, "chordal:{n}"),
        }
    }
}
