//! Exact computations in the Fibonacci restricted Lie algebra over GF(2).
//!
//! The algebra is generated by the pivot derivations `v_1, v_2` of the
//! truncated polynomial ring `GF(2)[t_0, t_1, ...] / (t_i²)`. Elements are
//! GF(2) combinations of monomials `t_{i_1} ... t_{i_k} v_n`, and every
//! operation works through closed formulas for pivot brackets and actions.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod basis;
pub mod calculus;
pub mod element;
pub mod error;
pub mod gf2;
pub mod golden;
pub mod grading;
pub mod homology;
pub mod nil;
pub mod presentation;
pub mod ring;
pub mod series;

pub use basis::{BasisKind, BasisLevel};
pub use calculus::{bracket, power_2k, square, tau};
pub use element::{BasisClass, Element, Monomial};
pub use error::{Error, Result};
pub use golden::GoldenInt;
pub use grading::Multidegree;
pub use ring::{RingElement, RingMonomial};
pub use series::{LatticeSeries, OneVarSeries};
