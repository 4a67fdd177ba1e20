//! Homotopy invariants of nanowords.

pub mod based;
pub mod composite;
pub mod distinguish;
pub mod linking;
pub mod matrices;

pub use based::{
    based_matrix, bm_isomorphic, find_isomorphism, primitive_based_matrix, reduce_to_primitive,
    reduce_with, rho, BasedMatrix, Element, Reduction, ReductionKind, ReductionStep,
};
pub use composite::{cable_reduced_based_matrix, composite_based_matrix};
pub use distinguish::{distinguish, DistinguishReport, Evidence, InvariantBundle, Verdict};
pub use linking::{linking_number, n_values, n_vector, u_polynomial, u_realizable, UPolynomial};
pub use matrices::{head_tail_matrices, th_realizable, HeadTailMatrices, TH_REALIZABLE_CAP};
