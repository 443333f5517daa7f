//! Cubic and quartic Jacobi symbols over the Eisenstein integers Z[w]
//! (w a primitive cube root of unity) and the Gaussian integers Z[i],
//! computed by Euclidean-type algorithms, together with residue-test
//! utilities, worst-case input generators, and an instrumented
//! bit-operation cost model for standard (schoolbook) arithmetic.
//!
//! The crate is `no_std` + `alloc`; everything IO-related lives in the
//! companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod adversary;
pub mod cost;
pub mod division;
pub mod natlog;
pub mod residue;
pub mod ring;
pub mod symbols;

pub use cost::CostCounters;
pub use division::{divmod_even, divmod_newton, divmod_round, DivisionOutcome, DyadicComplex};
pub use ring::{EisensteinInt, GaussianInt, Int, RingElement, RingKind};
pub use symbols::{Backend, CubicSymbol, QuarticSymbol, RunTrace};
