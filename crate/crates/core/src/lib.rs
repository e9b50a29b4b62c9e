//! Linking-number invariants of two-component handlebody-links.
//!
//! A two-component handlebody-link is given either as a bouquet-graph
//! diagram ([`diagram`]) or directly as its linking matrix. The invariant
//! `Lk` is the list of elementary divisors of that matrix, computed by an
//! exact Smith normal form ([`exactla`]); [`invariant`] also derives the
//! quotient groups `A1` and `A2`.
//!
//! ```
//! use hlk::exactla::IntMatrix;
//! use hlk::invariant::handlebody_linking;
//!
//! let m = IntMatrix::from_rows(&[[-1i64, -1, 0, 2], [1, -3, -2, 0], [0, 0, 2, -2]]).unwrap();
//! assert_eq!(handlebody_linking(&m).to_string(), "Lk = {1, 2, 4}");
//! ```

pub mod cli;
pub mod diagram;
pub mod exactla;
pub mod invariant;
pub mod selftest;
pub mod trials;

pub use diagram::{linking_matrix, linking_number, parse_diagram, Diagram};
pub use exactla::{elementary_divisors, smith_normal_form, IntMatrix, SnfResult};
pub use invariant::{handlebody_linking, quotient_group, reconstruct_lk, AbelianGroup, LkInvariant, Side};
