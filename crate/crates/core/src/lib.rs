//! Posets `C_lambda` of permutations obtained by erasing the parentheses from
//! standard cyclic notation, ordered by the Bruhat-Chevalley order, together
//! with exhaustive checkers for their structure: bounds and gradedness, rank
//! generating functions, EL-labelings, shifted-copy decompositions and Möbius
//! values.

mod bitset;
pub mod bruhat;
pub mod clambda;
pub mod error;
pub mod perm;
pub mod poset;
pub mod qpoly;
pub mod verify;

pub use bruhat::{bruhat_leq, bruhat_leq_oracle, containment_leq, is_covering};
pub use clambda::{CopyDecomposition, TopologyClass};
pub use error::{Error, Result};
pub use perm::{Composition, CyclicForm, Permutation, Transposition};
pub use poset::{build_poset, GradedPoset};
pub use qpoly::QPolynomial;
