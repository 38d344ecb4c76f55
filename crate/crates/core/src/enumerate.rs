//! Brute-force census of xaviers, independent of the bijections and series.
//!
//! Level `n` is grown from level `n - 1` by pushing one more piece at every
//! position in `[min_pos - 1, max_pos + 2]`, keeping valid results and
//! deduplicating canonical forms.
//!
//! Completeness: every xavier with at least two pieces has a removable
//! piece whose removal leaves a valid xavier in the same canonical
//! position. If some piece is above floor 0, take one on the top floor:
//! nothing rests on it, and pushing at its position lands it back on its
//! own floor because its supporter overlaps it and nothing overlapping it is
//! higher. Otherwise the tower is a flat row and the rightmost piece is
//! removable. Both positions lie inside the window.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::xavier::{push, Piece, Shape, Xavier};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n_pieces: usize,
    pub xaviers: u64,
    pub pyramids: u64,
    pub half_pyramids: u64,
}

/// Every canonical xavier obtained from `x` by pushing one piece.
fn children(x: &Xavier) -> Vec<Xavier> {
    (x.min_pos() - 1..=x.max_pos() + 2)
        .filter_map(|pos| {
            let mut grown: Vec<Piece> = x.pieces().to_vec();
            grown.push(push(x.pieces(), pos));
            Xavier::canonicalize(&grown).ok()
        })
        .collect()
}

/// The next level, sorted and deduplicated.
pub fn grow(level: &[Xavier]) -> Vec<Xavier> {
    let mut next: Vec<Xavier> = level.par_iter().flat_map_iter(children).collect();
    next.par_sort_unstable();
    next.dedup();
    next
}

/// Iterator over levels 1, 2, 3, ...
pub fn levels() -> impl Iterator<Item = Vec<Xavier>> {
    std::iter::successors(Some(vec![Xavier::singleton()]), |level| Some(grow(level)))
}

/// All canonical xaviers with `n` pieces, sorted.
pub fn all_xaviers(n: usize) -> Result<Vec<Xavier>> {
    if n == 0 {
        return Err(Error::ZeroPieces);
    }
    Ok(levels().nth(n - 1).expect("levels never end"))
}

pub fn census_row(n_pieces: usize, level: &[Xavier]) -> CensusRow {
    let mut row = CensusRow {
        n_pieces,
        xaviers: 0,
        pyramids: 0,
        half_pyramids: 0,
    };
    for x in level {
        row.xaviers += 1;
        match x.classify().shape {
            Shape::General => {}
            Shape::Pyramid => row.pyramids += 1,
            Shape::HalfPyramid => {
                row.pyramids += 1;
                row.half_pyramids += 1;
            }
        }
    }
    row
}

pub fn census(max_n: usize) -> Result<Vec<CensusRow>> {
    if max_n == 0 {
        return Err(Error::ZeroPieces);
    }
    Ok(levels()
        .take(max_n)
        .enumerate()
        .map(|(i, level)| census_row(i + 1, &level))
        .collect())
}
