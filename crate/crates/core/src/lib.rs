//! Boundary operators, Laplacians and Laplacian spectra of finite multicomplexes
//! (equivalently, artinian monomial ideals), the combinatorial spectrum formula for
//! shifted multicomplexes, and the multicomplex of the integers `1..=N` under
//! truncated Dirichlet convolution.

pub mod chain;
pub mod cli;
pub mod complex;
pub mod dirichlet;
pub mod eigen;
pub mod error;
pub mod formula;
pub mod generate;
pub mod io;
pub mod matrix;
pub mod monomial;
pub mod spectra;

pub use chain::{
    boundary_matrix, check_boundary_square_zero, dual_boundary_matrix, BoundaryMatrix,
};
pub use complex::{is_strongly_stable, ConstituentDecomposition, Multicomplex, VariableOrder};
pub use error::{Error, Result};
pub use formula::{formula_spectrum, master_spectrum, Partition};
pub use monomial::Monomial;
pub use spectra::{LaplacianKind, Spectrum};
