//! Maximum numbers of `t`-cliques in graphs with a fixed number of edges and
//! bounded maximum degree.
//!
//! The crate computes the extremal values in closed form, builds the
//! extremal graphs, recognizes every extremal graph, and checks all of it
//! against exhaustive enumeration of small graphs.
//!
//! ```
//! use kt_extremal::{cliques::count_kt, extremal::{build_extremal, extremal_value}};
//!
//! // 14 edges, maximum degree 4: K_5 plus a triangle with a pendant edge.
//! let g = build_extremal(3, 4, 14).unwrap();
//! assert_eq!(count_kt(&g, 3), extremal_value(3, 4, 14));
//! assert_eq!(extremal_value(3, 4, 14).to_string(), "11");
//! ```

pub mod binom;
pub mod cli;
pub mod cliques;
pub mod colex;
pub mod extremal;
pub mod graph;
pub mod props;
pub mod search;

pub use binom::ExactCount;
pub use graph::{CanonicalForm, Graph};
