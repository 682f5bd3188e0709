//! Spherical functions on the hyperbolic plane and the spectral bounds they
//! give for coloring graphs of points at a fixed hyperbolic distance.
//!
//! * [`geometry`]: upper half-plane points, distance, PSL(2,R) action, circles.
//! * [`spherical`]: `P_{-1/2+is}(cosh r)` by quadrature, with an ODE oracle.
//! * [`spectrum`]: the spectrum of the circle-averaging operator `A_r`.
//! * [`bounds`]: Hoffman-type independence and chromatic bounds.
//! * [`cli`]: the `spectral-chroma` command line.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example <name>`.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod geometry;
mod quadrature;
pub mod spectrum;
pub mod spherical;

pub use error::{Error, Result};
