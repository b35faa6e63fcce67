//! Computations with finite positively ordered monoids.
//!
//! A positively ordered (p.o.) monoid here is a finite commutative monoid
//! carrying a partial order in which the unit is the top element, the order
//! is compatible with the operation, and a least element exists. This crate
//! provides:
//!
//! * construction and axiom verification of such monoids, together with the
//!   standard example families (chains, Boolean algebras, capped exponent
//!   vectors, min-grids, products, point embeddings) — [`monoid`];
//! * ideal classification (monoid/order/radical/prime/Dedekind), generated
//!   order ideals, radicals, quotients and ideal enumeration — [`ideal`];
//! * order and monoid projections, translates, the star map and the ideal
//!   star — [`projection`];
//! * disjointness antichains and the `kappa` invariant, set reduction for
//!   the projection problem, local sets, partitions, directions and bounds,
//!   essential greatest elements and the two fixed-point corollaries —
//!   [`kappa`];
//! * the order topology and the prime topology with continuity checks —
//!   [`topology`];
//! * monotone vector-valued set functions over exact rationals: submeasures,
//!   capacities, equivalent-capacity extraction and the measure-extraction
//!   report backed by an exact simplex solver — [`setfunc`] and [`lp`].
//!
//! All set-valued results are emitted in ascending element-index order, and
//! every operation is a pure function of its inputs, so outputs are
//! deterministic and safe to compute concurrently.
//!
//! ```
//! use pomonoid::kappa::kappa;
//! use pomonoid::monoid::boolean_algebra;
//! use pomonoid::subset::ElementSubset;
//!
//! let b3 = boolean_algebra(3).unwrap();
//! let full = ElementSubset::full(b3.len());
//! let zero = ElementSubset::singleton(b3.len(), b3.zero());
//! let v = kappa(&b3, &full, &zero);
//! assert_eq!(v.k, 4); // the three atoms form the largest disjoint family
//! assert_eq!(v.witness, vec![1, 2, 4]);
//! ```

// Elements are identified by index into parallel tables (operation, order,
// images), so index loops are the clearer form throughout.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod ideal;
pub mod kappa;
pub mod lp;
pub mod monoid;
pub mod projection;
pub mod setfunc;
pub mod subset;
pub mod topology;

pub use error::Error;
pub use monoid::FiniteMonoid;
pub use subset::ElementSubset;

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// The scalar type for set-function values and linear programming: ordered
/// exact arithmetic with signs. Satisfied by the rational types of
/// `num-rational`; floating point is ruled out by the total-order bound.
pub trait Scalar: Clone + Ord + num_traits::Signed + std::fmt::Debug {}

impl<T: Clone + Ord + num_traits::Signed + std::fmt::Debug> Scalar for T {}

/// The canonical exact scalar: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// A set function with `Rat` values.
pub type RatSetFunction = setfunc::SetFunction<Rat>;

/// A family of set functions with `Rat` values.
pub type RatFunctionFamily = setfunc::FunctionFamily<Rat>;

/// Default cap on the number of elements of a constructed monoid.
pub const DEFAULT_SIZE_GUARD: usize = 4096;

/// Default cap on the number of candidate maps visited while enumerating
/// projections.
pub const DEFAULT_MAP_GUARD: u64 = 10_000_000;

/// Default cap on the number of directions enumerated by [`kappa::delta`].
pub const DEFAULT_DIRECTION_GUARD: u64 = 1_000_000;
