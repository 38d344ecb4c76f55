//! Domino towers ("xaviers") and the bijective proof that there are `3^n`
//! of them with `n + 1` pieces.
//!
//! * [`xavier`]: pieces, validity, canonical form, up-sets, push and drop.
//! * [`bijection`], [`creature`], [`word`]: the three decompositions, the
//!   creature normal form and the codec with ternary words.
//! * [`sample`]: uniform random generation through the codec.
//! * [`enumerate`]: a brute-force census that shares nothing with the codec.
//! * [`series`]: exact truncated power series for the class equations.
//! * [`render`], [`document`]: pictures and the JSON file format.
//! * [`verify`]: the cross-check battery.

pub mod bijection;
pub mod creature;
pub mod document;
pub mod enumerate;
mod error;
pub mod render;
pub mod sample;
pub mod series;
pub mod verify;
pub mod word;
pub mod xavier;

pub use error::{Error, Result};
pub use word::{decode, encode, Letter, Word};
pub use xavier::{HalfPyramid, Piece, Pyramid, Shape, Xavier};
