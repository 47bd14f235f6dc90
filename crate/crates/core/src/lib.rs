//! Exact combinatorial commutative algebra for path ideals of graphs.
//!
//! The crate builds the ideal generated by the vertex supports of `t`-paths
//! of a finite simple graph (with complete multipartite graphs as the main
//! family), decides matroidality through exchange properties, classifies
//! Cohen-Macaulayness, and computes homological invariants of powers:
//! multigraded Betti numbers, depth, analytic spread, limit depth, and the
//! index of depth stability.
//!
//! All arithmetic is exact. Homology ranks are computed over the rationals
//! with fraction-free integer elimination, promoting to arbitrary precision
//! when 64-bit arithmetic would overflow.

mod arrangement;
mod error;
mod graph;
mod homology;
mod matrix;
mod matroid;
mod monomial;
mod spread;
mod taylor;
pub mod verify;
mod veronese;

pub use arrangement::{arrange, is_valid_arrangement, ColorCounts};
pub use error::{Error, Result};
pub use graph::{
    enumerate_t_path_sequences, enumerate_t_path_supports, max_block_intersection, path_ideal,
    PartitionSpec, PathSet, SimpleGraph,
};
pub use homology::{
    betti_numbers, depth_of_quotient, depth_profile, stanley_reisner_depth, upper_koszul_complex,
    BettiTable, DepthProfile, SimplicialComplex,
};
pub use matroid::{
    check_basis_exchange, check_polymatroidal_exchange, matroidal_edge_ideal_partition,
    BasisExchangeWitness, ExchangeVerdict, MonomialExchangeWitness, SetSystem,
};
pub use monomial::{FiberDecomposition, Monomial, MonomialIdeal};
pub use spread::{
    analytic_spread, closed_form_dstab, limit_depth_formula, linear_relation_graph,
    DstabPrediction, LinearRelationGraph,
};
pub use taylor::taylor_betti;
pub use veronese::{
    classify_path_ideal_cm, recognize_squarefree_veronese, veronese_type_ideal, CmKind, CmVerdict,
};
