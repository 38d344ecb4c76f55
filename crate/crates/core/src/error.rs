use thiserror::Error;

use crate::xavier::{Piece, ValidationReport};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty piece set: a xavier has at least one piece")]
    Empty,
    #[error("invalid xavier: {0}")]
    Invalid(ValidationReport),
    #[error("detached set is not drop-coherent: {0}")]
    NotDropCoherent(ValidationReport),
    #[error("composition produced an invalid xavier (internal inconsistency): {0}")]
    Inconsistent(ValidationReport),
    #[error("seed piece {0} is not a piece of the xavier")]
    SeedNotFound(Piece),
    #[error("not a pyramid: the bottom floor has {0} pieces")]
    NotPyramid(usize),
    #[error("not a half-pyramid: piece {0} lies strictly left of the bottom piece")]
    NotHalfPyramid(Piece),
    #[error("piece count must be at least 1")]
    ZeroPieces,
    #[error("series order must be at least {min}, got {got}")]
    SeriesOrder { min: usize, got: usize },
    #[error("geometric inverse needs a zero constant term")]
    NonZeroConstant,
    #[error("invalid letter {found:?} at position {position}")]
    BadLetter { position: usize, found: char },
    #[error("render glyph must be exactly 4 characters, got {0:?}")]
    BadGlyph(String),
    #[error("coordinate out of range: {0}")]
    CoordinateRange(String),
    #[error("malformed xavier document: {0}")]
    Json(#[from] serde_json::Error),
}
