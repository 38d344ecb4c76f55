//! JSON xavier documents: `{"pieces":[[floor,pos],...]}`.
//!
//! Parsing accepts any integer coordinates and translates them into
//! canonical position; emitting writes the canonical pieces sorted by
//! (floor, pos) with no whitespace.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::xavier::{Piece, Xavier};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XavierDocument {
    pub pieces: Vec<[i64; 2]>,
}

impl From<&Xavier> for XavierDocument {
    fn from(x: &Xavier) -> Self {
        XavierDocument {
            pieces: x
                .pieces()
                .iter()
                .map(|p| [i64::from(p.floor), p.pos])
                .collect(),
        }
    }
}

impl TryFrom<XavierDocument> for Xavier {
    type Error = Error;

    fn try_from(doc: XavierDocument) -> Result<Self> {
        let lowest = doc
            .pieces
            .iter()
            .map(|&[f, _]| f)
            .min()
            .ok_or(Error::Empty)?;
        let pieces = doc
            .pieces
            .iter()
            .map(|&[f, p]| {
                f.checked_sub(lowest)
                    .and_then(|d| u32::try_from(d).ok())
                    .map(|floor| Piece::new(floor, p))
                    .ok_or_else(|| Error::CoordinateRange(format!("[{f},{p}]")))
            })
            .collect::<Result<Vec<_>>>()?;
        Xavier::canonicalize(&pieces)
    }
}

pub fn parse_xavier(text: &str) -> Result<Xavier> {
    let doc: XavierDocument = serde_json::from_str(text)?;
    Xavier::try_from(doc)
}

pub fn emit_xavier(x: &Xavier) -> String {
    serde_json::to_string(&XavierDocument::from(x)).expect("plain integers serialize")
}
