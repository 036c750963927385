//! Integral homology of concurrent systems.
//!
//! This crate computes homology groups of trace-monoid partial actions
//! (asynchronous transition systems), elementary condition/event Petri
//! nets, and prefix-closed Mazurkiewicz trace languages. The pipeline is:
//!
//! 1. describe the system as a finite state set with a deterministic
//!    partial action of each generator ([`state::StateSpace`]),
//! 2. build a finite semicubical set whose `n`-cells pair a state with an
//!    `n`-clique of the independence graph ([`cubical`]),
//! 3. take free abelian groups on cells and the cubical differential
//!    ([`chain`]), and
//! 4. reduce the integer boundary matrices to Smith normal form to read
//!    off Betti ranks and torsion coefficients ([`snf`]).
//!
//! The linear algebra layer is generic over the integer scalar through
//! [`Scalar`]; the crate root fixes arbitrary-precision aliases ([`Int`],
//! [`IntMatrix`], …) which every pipeline uses by default. Machine-word
//! scalars such as `i64` satisfy [`Scalar`] too and are handy in tests,
//! but Smith reduction can overflow them even on small inputs.

use std::fmt;

pub mod chain;
pub mod cubical;
pub mod lang;
pub mod matrix;
pub mod petri;
pub mod snf;
pub mod state;
pub mod trace;

pub use chain::{chain_complex, ChainComplex, HomologyGroup};
pub use cubical::{
    state_complex_augmented, state_complex_reachable, torus, CubicalError, SemicubicalSet,
};
pub use lang::{LangError, TraceLanguage};
pub use matrix::{IntegerMatrix, MatrixError};
pub use petri::{CeNet, EventDef, PetriError};
pub use snf::{smith_normal_form, SnfResult};
pub use state::{ActionReport, AugmentedStateSpace, StateError, StateSpace};
pub use trace::{Alphabet, CliqueTable, Gen, Independence, Trace, TraceError, TraceMonoid};

/// Exact integer scalars usable as matrix entries.
///
/// Implemented for any signed integer type with Euclidean division,
/// in particular [`num_bigint::BigInt`] and the machine-word integers.
pub trait Scalar:
    num_integer::Integer + num_traits::Signed + Clone + fmt::Debug + fmt::Display + 'static
{
}

impl<T> Scalar for T where
    T: num_integer::Integer + num_traits::Signed + Clone + fmt::Debug + fmt::Display + 'static
{
}

/// Default exact scalar: arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Sparse integer matrix over [`Int`].
pub type IntMatrix = IntegerMatrix<Int>;

/// Chain complex with [`Int`] coefficients.
pub type IntChainComplex = ChainComplex<Int>;

/// Homology group with [`Int`] torsion coefficients.
pub type IntHomologyGroup = HomologyGroup<Int>;
