//! Finite semigroups, their Green's relations, and the complete rewrite
//! system presenting the regular semigroup `(S)_reg` generated by an
//! unambiguous semigroup `S`.
//!
//! ```
//! use regsem::{RewriteSystem, Semigroup};
//!
//! let s: Semigroup = "elements: a b\na a\nb b".parse().unwrap();
//! let sys = RewriteSystem::new(s).unwrap();
//! let w = sys.parse_word("b' b").unwrap();
//! let nf = sys.normal_form(&w).unwrap();
//! assert_eq!(sys.display_word(&nf).to_string(), "a' a");
//! ```

pub mod bifun;
pub mod corpus;
pub mod green;
pub mod representatives;
pub mod rewrite;
pub mod semigroup;
pub mod sreg;
pub mod verify;

pub use green::{Comparison, GreenData, Side};
pub use representatives::RepChoice;
pub use rewrite::{Redex, RewriteError, RewriteSystem, RuleId, Strategy, Sym, SystemOptions, Word};
pub use semigroup::{Element, Semigroup, SemigroupError};

pub use sreg::SRegTable;
