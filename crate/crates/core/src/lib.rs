//! Plane cubic 2-connected multigraphs, their 2-factors, and a constructive
//! route from a 2-factor with `n` cycles to a plane graph `J` between `G` and
//! `G²` that carries a Hamilton cycle avoiding the complementary matching.
//!
//! ```
//! use planesq::{construct, corpus, min_component_two_factor, verify, EnumerationLimits};
//!
//! let g = corpus::named("prism").unwrap();
//! let x = min_component_two_factor(&g, EnumerationLimits::default()).unwrap();
//! let result = construct(&g, &x).unwrap();
//! assert_eq!(result.j.num_edges(), g.num_edges() + 2 * x.n() - 2);
//! assert!(verify(&g, x.edges(), &result).passed());
//! ```

pub mod construction;
pub mod corpus;
pub mod draw;
pub mod io;
pub mod map;
pub mod oracle;
pub mod two_factor;
pub mod verify;

pub use construction::{
    construct, construct_with, ConstructOptions, ConstructionError, ConstructionResult, Diamond,
    FaceColor, HamiltonCycle, Metrics,
};
pub use map::{DartId, EdgeId, FaceId, MapError, PlaneMultigraph, VertexId};
pub use two_factor::{
    default_two_factor, first_matching_two_factor, min_component_two_factor, validate_two_factor,
    EnumerationLimits, TwoFactor, TwoFactorError,
};
pub use verify::{verify, verify_embedding, VerificationReport};
