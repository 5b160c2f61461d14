//! Exact computations in the representation rings of dihedral groups and
//! the K-rings of their classifying spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: big-integer polynomials, integer matrices, Smith normal form.
//! * [`polyzoo`]: Adams polynomials, Chebyshev polynomials, `f_n` and `g_2k`.
//! * [`reptheory`]: `R(D_2n)` via structure constants, with a character oracle.
//! * [`kring`]: K-ring presentations, relation lifting, truncated quotients,
//!   cyclic K-rings and restriction images.
//! * [`ahss`]: cohomology tables, E_2 pages and filtration audits.
//! * [`cli`]: the command-line front end and its report format.

pub mod ahss;
pub mod cli;
pub mod error;
pub mod exactalg;
pub mod kring;
pub mod polyzoo;
pub mod reptheory;

pub use error::{Error, Result};
