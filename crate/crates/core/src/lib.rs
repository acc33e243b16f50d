//! Zero forcing on graphs and hypergraphs.
//!
//! Three propagation rules are supported: classic graph zero forcing
//! ([`Rule::R0`]) and two hypergraph generalizations ([`Rule::R1`],
//! [`Rule::R2`]). On top of the closure operator the crate computes the
//! clutters of minimal forcing and minimal immune sets, which are mutual
//! transversals, decides immunity from neighbourhoods alone, builds
//! hypergraphs realizing uniform clutters, and regenerates the census of
//! all hypergraphs on at most four vertices.
//!
//! ```
//! use zeroforce::{closure, Hypergraph, Rule, VertexSet};
//!
//! let h = Hypergraph::from_lists(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]]).unwrap();
//! let black = VertexSet::from_vertices([1, 2]);
//! assert_eq!(closure(&h, Rule::R1, black).unwrap().0, h.ground());
//! assert_eq!(closure(&h, Rule::R2, black).unwrap().0, black);
//! ```

pub mod canon;
pub mod catalog;
pub mod cli;
pub mod clutter;
pub mod constructions;
pub mod error;
pub mod families;
pub mod forcing;
pub mod format;
pub mod hypergraph;
pub mod reference;
pub mod vertex_set;

pub use canon::{canonical_form, is_isomorphic};
pub use clutter::Clutter;
pub use error::{Error, Result};
pub use families::{
    minimal_forcing_family, minimal_immune_family, minimal_immune_family_direct, verify_duality,
    SearchOptions,
};
pub use forcing::{
    closure, fireable, forcing_number, is_forcing, is_immune, is_immune_nbhd, sigma1, sigma2,
    Firing, Forcer, ForcingStep, ForcingTrace, Rule,
};
pub use hypergraph::Hypergraph;
pub use vertex_set::VertexSet;
