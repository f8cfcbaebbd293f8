//! Exact computation of Poincaré-type polynomial invariants of homogeneous
//! spaces `G/H` of complex linear algebraic groups, and of their regular
//! embeddings presented as finite orbit lists.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in the crate. The canonical variable
//! is called `z`: a "half-Poincaré polynomial" `p(z)` stores `P_X(√z)`, which
//! has integer coefficients because the virtual Poincaré polynomial of every
//! variety in scope is even. Hilbert series of Weyl-invariant rings keep
//! their natural grading in `z`.
//!
//! The data-parallel inner loops (finite-field enumeration, Molien sums,
//! Weyl-group closure) run on rayon when the `parallel` feature is enabled
//! (the default) and fall back to sequential execution otherwise; results
//! are identical either way.

pub mod embeddings;
pub mod exactalg;
pub mod fq_oracle;
pub mod groupspec;
pub mod homogeneous;
pub mod weylcore;

pub use exactalg::{ExactAlgError, IntPoly, RatFunc};
pub use homogeneous::{GroupSpec, HomogeneousPair, SubgroupSpec};
pub use weylcore::{ReductiveType, SimpleType, WeylMatrixGroup};

/// Execution strategy for the data-parallel inner loops.
///
/// `Parallel` uses rayon when the `parallel` feature is enabled and silently
/// falls back to sequential execution otherwise. Every computation is a
/// deterministic, order-independent reduction, so both modes return
/// identical results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}
