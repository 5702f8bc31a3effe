//! Exact spanning-tree counting for loopless multigraphs, Laplacian spectra,
//! and instance checks of degree-based upper bounds on the number of
//! spanning trees (general multigraphs, joins, Cartesian products).
//!
//! Tree counts and bound verdicts use arbitrary-precision integers and
//! rationals. Spectra are computed in `f64` with a Jacobi eigensolver and
//! only feed the majorization and spectral-identity checks.
//!
//! ```
//! use treebound::{check_degree_bound, families, tau_exact};
//!
//! let k4 = families::complete(4, 1);
//! assert_eq!(tau_exact(&k4), 16);
//! let report = check_degree_bound(&k4).unwrap();
//! assert!(report.holds && report.equality);
//! ```

pub mod bounds;
pub mod count;
pub mod error;
pub mod families;
pub mod graph;
pub mod majorization;
pub mod matrix;
pub mod rational;
pub mod spectral;

pub use bounds::{
    cartesian_bound, check_degree_bound, degree_bound, is_uniform_complete, join_bound,
    join_equality_expected, verify_main_majorization, BoundReport,
};
pub use count::{
    determinant_exact, laplacian, tau_brute_force, tau_brute_force_with_limit, tau_exact,
    LaplacianMatrix, TreeCount,
};
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Multigraph};
pub use majorization::{karamata_product_check, majorizes, verify_schur, MajorizationWitness};
pub use matrix::DenseMatrix;
pub use rational::ExactRational;
pub use spectral::{
    join_spectrum_tau, laplacian_spectrum, product_spectrum, product_spectrum_tau,
    symmetric_eigenvalues, tau_spectral, Spectrum,
};
