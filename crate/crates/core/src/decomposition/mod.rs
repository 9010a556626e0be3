//! Maximal tensor decomposition of thick coherent configurations.
//!
//! [`algorithm_a`] builds `P*` from the closures of irredundant colors,
//! [`algorithm_b`] turns it into a two-member certificate, and
//! [`algorithm_c`] recurses on the quotients by the certificate's
//! complements until every factor is indecomposable.

mod cartesian;
mod irredundant;
mod isomorphism;
mod search;
mod tensor;

pub use cartesian::{
    check_decomposition, members_from_coordinates, standard_members, AtomicCartesianDecomposition, CartesianBijection,
    Validity, LATTICE_CHECK_MAX,
};
pub use irredundant::{irredundant_colors, is_irredundant, redundancy_witness};
pub use isomorphism::{find_isomorphism, verify_isomorphism, BRUTE_FORCE_MAX_DEGREE};
pub use search::{algorithm_a, algorithm_a_with, algorithm_b, algorithm_b_with, Certificate, MergeOrder};
pub use tensor::{algorithm_c, algorithm_c_with, DecompositionTrace, TensorDecomposition, TraceNode};
