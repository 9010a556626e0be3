//! Coherent configurations and their maximal tensor decomposition.
//!
//! A [`CoherentConfiguration`] is validated from its color matrix. Relations
//! are sets of basis colors; parabolics are the relations that are
//! equivalences. For thick configurations, [`algorithm_c`] finds the unique
//! decomposition into indecomposable tensor factors together with an
//! isomorphism onto their product.
//!
//! ```
//! use ccdec::{algorithm_c, constructors::trivial_scheme, CoherentConfiguration};
//!
//! let a = trivial_scheme(3)?;
//! let b = trivial_scheme(4)?;
//! let x = CoherentConfiguration::tensor(&[&a, &b])?;
//! let d = algorithm_c(&x)?;
//! assert_eq!(d.factors().len(), 2);
//! # Ok::<(), ccdec::Error>(())
//! ```

mod bitset;
mod cc;
pub mod constructors;
pub mod decomposition;
mod error;
pub mod io;
mod relation;

pub use bitset::ColorSet;
pub use cc::{
    canonicalize_colors, BuildOptions, CheckMode, CoherentConfiguration, Color, ColorMatrix, Fingerprint,
    DEFAULT_MAX_DEGREE, MAX_DEGREE_ENV,
};
pub use decomposition::{
    algorithm_a, algorithm_b, algorithm_c, check_decomposition, verify_isomorphism, AtomicCartesianDecomposition,
    TensorDecomposition, Validity,
};
pub use error::{Error, Result};
pub use relation::{Parabolic, Relation};
