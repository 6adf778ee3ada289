//! Exact combinatorial machinery for monomial ideals: minimal-generator
//! arithmetic, primary decomposition and symbolic powers of squarefree
//! ideals, Stanley decompositions with finite-box verification, an
//! exact Stanley depth solver, decomposition transfer along monomial
//! maps, graph cover ideals, and a deterministic experiment harness.

pub mod decomposition;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod solver;
pub mod symbolic;
pub mod transfer;

pub use decomposition::{QuotientPair, StanleyDecomposition, StanleySpace, VerifyFailure};
pub use error::{Error, Result};
pub use graph::Graph;
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, Ring, VarSet};
pub use solver::{build_poset, sdepth_decision, sdepth_exact, CharacteristicPoset, SolverLimits};
pub use symbolic::{height_unmixed, minimal_primes, symbolic_power, PrimaryDecomposition, PrimeIdeal};
pub use transfer::{transfer, InstanceMode, PhiMap, TransferInstance};
