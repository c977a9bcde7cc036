//! Exact symbolic computation for super Yangian l-weights.
//!
//! The crate works with tuples of reduced rational functions indexed by a
//! parity sequence (a choice of Borel subalgebra for gl(m|n)) and implements,
//! entirely over the rationals:
//!
//! - the odd-reflection transition rule for highest l-weights and its
//!   composition along arbitrary swap paths ([`reflection`]);
//! - closed-form rank-(1|1) q-characters and the algorithm rewriting a
//!   q-character over the swapped parity sequence ([`gl11`]);
//! - skew-shape characters by enumeration of semi-standard tableaux for any
//!   parity sequence ([`tableaux`]);
//! - the divisibility form of XXX-type Bethe ansatz equations and the
//!   fermionic reproduction step ([`bethe`]);
//! - truncated rational difference operators certifying that reproduction
//!   preserves the operator ([`diffop`]);
//! - the finiteness criterion for standard-parity highest weights
//!   ([`lweight::LWeight::finite_dim_check`]).
//!
//! Everything is immutable value types over arbitrary-precision rationals;
//! no floating point is used anywhere.
//!
//! ```
//! use superyang::{reflect, FactoredPoly, LWeight, ParitySeq, RatB};
//!
//! // the highest l-weight ((u+1)/u, 1) over the parity sequence +-
//! let parity: ParitySeq = "+-".parse().unwrap();
//! let z = LWeight::new(
//!     parity,
//!     vec![
//!         RatB::new(
//!             FactoredPoly::from_int_roots(&[-1]), // u + 1
//!             FactoredPoly::from_int_roots(&[0]),  // u
//!         )
//!         .unwrap(),
//!         RatB::one(),
//!     ],
//! )
//! .unwrap();
//!
//! // across the odd node it becomes ((u-1)/u, 1) over -+
//! let reflected = reflect(&z, 1).unwrap();
//! assert_eq!(reflected.parity(), &"-+".parse().unwrap());
//! assert_eq!(reflected.component(1).num(), &FactoredPoly::from_int_roots(&[1]));
//! assert_eq!(reflect(&reflected, 1).unwrap(), z);
//! ```

pub mod bethe;
pub mod diffop;
pub mod gl11;
pub mod json;
pub mod lweight;
pub mod parity;
pub mod partition;
pub mod poly;
pub mod qchar;
pub mod rat;
pub mod reflection;
pub mod tableaux;

pub use bethe::{BAESystem, BetheError};
pub use diffop::{build_operator, DiffOpError, RatFuncDense, ShiftOpSeries};
pub use gl11::{irreducible_qchar, reflect_qchar, Gl11Error};
pub use lweight::{shift_ladder_solve, LWeight, LWeightError, RatB};
pub use parity::{GlWeight, Letter, ParityError, ParitySeq};
pub use partition::Partition;
pub use poly::{DensePoly, FactoredPoly, PolyError};
pub use qchar::QChar;
pub use rat::Rat;
pub use reflection::{reflect, reflect_path, reflect_to, ReflectionError};
pub use tableaux::{
    count_ssyt, count_syt, enumerate_ssyt, skew_qchar, STableau, SkewDiagram, TableauxError,
};
