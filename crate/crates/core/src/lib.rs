//! Numerical kernel for the Poristic triangle family.
//!
//! The family is the one-parameter set of triangles sharing a fixed
//! incircle and circumcircle. This crate builds its members, the
//! circumconics and inconics attached to them and to their excentral
//! triangles, and the similarity that carries each member onto a
//! 3-periodic of a fixed elliptic billiard.
//!
//! Layout:
//! - [`geom`]: points, lines, circles, conics, triangles.
//! - [`centers`]: triangle centers, medial and excentral triangles.
//! - [`conics`]: circumconics and inconics with prescribed centers.
//! - [`family`]: the Poristic family and its closed forms.
//! - [`billiard`]: the elliptic-billiard side of the similarity.
//! - [`par`]: data-parallel helpers (rayon behind the `parallel` feature).

pub mod billiard;
pub mod centers;
pub mod conics;
mod error;
pub mod family;
pub mod geom;
pub mod par;
pub mod tol;

pub use error::{Error, Result};
