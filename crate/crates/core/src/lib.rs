//! v-numbers and Castelnuovo–Mumford regularity of closed neighborhood
//! ideals.
//!
//! For a graph `G` on vertices `t_1..t_n`, the closed neighborhood ideal
//! `N_G` is generated by the squarefree monomials `t_{N[v]}`. Its v-number
//! is computed combinatorially ([`vnumber`]) as the least `|N[U] \ D|` over
//! minimal dominating sets `D` and sets `U` of private neighbors of `D`
//! that dominate `D`. An independent colon-ideal sweep ([`ideal`]) checks
//! that value. [`regularity`] computes `reg(S/N_G)` through Hochster's
//! formula, and [`hamming`] covers Hamming codes as efficient dominating
//! sets of Hamming graphs.

pub mod corpus;
pub mod domination;
pub mod error;
pub mod family;
pub mod format;
pub mod gf;
pub mod graph;
pub mod hamming;
pub mod homology;
pub mod ideal;
pub mod regularity;
pub mod scan;
pub mod vertex_set;
pub mod vnumber;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
