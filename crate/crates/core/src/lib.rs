//! Exact exterior calculus on low-dimensional Lie algebras and a decision procedure,
//! with certificates, for closed G2 four-forms on sums `g4 ⊕ g3`.

pub mod catalog;
pub mod classifier;
pub mod constructor;
pub mod error;
pub mod g2;
pub mod linalg;
pub mod lie;
pub mod multivector;
pub mod scalar;
pub mod subspace;

pub use classifier::{decide, decide_5d_r2, explain, BranchData, Obstruction, Route, Verdict};
pub use constructor::{construct, construct_5d_r2, Construction};
pub use error::{Error, Result};
pub use lie::{classify_3d, Bianchi3Class, CohomologyVector, LieAlgebra};
pub use multivector::{KForm, KVector, LinearMap};
pub use scalar::{Field, QuadQ, Q};
