//! Noetherianness and finiteness of quivers, Groebner orders on path
//! categories, and exact representation theory over small prime fields.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function of immutable values; file formats, reports and the command line
//! live in the `qnoeth` companion crate.
//!
//! Conventions used throughout:
//!
//! * A [`Path`] stores its arrows in application order (first applied
//!   first). The composite `ψφ` ("apply φ, then ψ") therefore stores the
//!   arrows of `φ` followed by those of `ψ`.
//! * `φ ≤ ψ` in the path poset `Q(x)` means `φ = χψ` for some path `χ`,
//!   i.e. the arrows of `ψ` are a prefix of the arrows of `φ`. The trivial
//!   path is the maximum.
//! * Infinite quivers are presented as a finite core plus finitely many
//!   rays `∘→∘→∘→⋯`, each attached to a core vertex by one arrow.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod algebra;
pub mod family;
pub mod field;
pub mod free;
pub mod groebner;
pub mod matrix;
pub mod noetherian;
pub mod path;
pub mod poset;
pub mod quiver;
pub mod rep;
pub mod subspace;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use path::{MaximalPath, Path, Tail};
pub use quiver::{Arrow, Quiver, QuiverBuilder, Vertex};
