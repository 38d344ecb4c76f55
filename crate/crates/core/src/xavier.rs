//! Geometry of domino towers.
//!
//! A piece is a domino identified by its floor and the lattice coordinate of
//! its left end; it covers `[pos, pos + 2]` and its middle-line sits at
//! `pos + 1`. A piece on floor `y >= 1` is supported when a piece sits at
//! `(y - 1, pos - 1)` or `(y - 1, pos + 1)`, i.e. its middle-line meets the
//! right or left end of a domino one floor below.
//!
//! Two pieces whose positions differ by at most one overlap horizontally and
//! are therefore comparable in the heap order: the higher one is "above" the
//! lower one, touching or not.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// One domino on the offset lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Piece {
    pub floor: u32,
    pub pos: i64,
}

impl Piece {
    pub const fn new(floor: u32, pos: i64) -> Self {
        Piece { floor, pos }
    }

    /// Horizontal overlap, the dependence relation of the heap order.
    pub fn overlaps(&self, other: &Piece) -> bool {
        (self.pos - other.pos).abs() <= 1
    }

    pub(crate) fn raised(self, floors: u32, shift: i64) -> Piece {
        Piece::new(self.floor + floors, self.pos + shift)
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.floor, self.pos)
    }
}

/// A single broken rule found by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Duplicate(Piece),
    /// Two distinct pieces on one floor closer than a domino length.
    Conflict(Piece, Piece),
    /// Consecutive bottom pieces that leave a hole between them.
    BottomGap {
        left: Piece,
        right: Piece,
    },
    Unsupported(Piece),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Duplicate(p) => write!(f, "duplicate piece {p}"),
            Violation::Conflict(a, b) => {
                write!(f, "pieces {a} and {b} overlap on floor {}", a.floor)
            }
            Violation::BottomGap { left, right } => write!(
                f,
                "bottom gap at pos {} between {left} and {right}",
                left.pos + 2
            ),
            Violation::Unsupported(p) => write!(
                f,
                "piece {p} unsupported at floor {}",
                p.floor.saturating_sub(1)
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every xavier rule and reports all failures.
///
/// All rules are translation invariant, so the check runs on the given
/// coordinates with the lowest occupied floor playing the bottom floor.
pub fn validate(pieces: &[Piece]) -> Result<ValidationReport> {
    let bottom = pieces.iter().map(|p| p.floor).min().ok_or(Error::Empty)?;
    let mut report = ValidationReport::default();

    let mut sorted = pieces.to_vec();
    sorted.sort_unstable();
    let mut distinct: Vec<Piece> = Vec::with_capacity(sorted.len());
    for p in sorted {
        if distinct.last() == Some(&p) {
            report.violations.push(Violation::Duplicate(p));
        } else {
            distinct.push(p);
        }
    }

    for w in distinct.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a.floor != b.floor {
            continue;
        }
        if b.pos - a.pos < 2 {
            report.violations.push(Violation::Conflict(a, b));
        } else if a.floor == bottom && b.pos - a.pos > 2 {
            report
                .violations
                .push(Violation::BottomGap { left: a, right: b });
        }
    }

    let has = |q: Piece| distinct.binary_search(&q).is_ok();
    report.violations.extend(
        distinct
            .iter()
            .filter(|p| p.floor > bottom)
            .filter(|p| {
                !has(Piece::new(p.floor - 1, p.pos - 1)) && !has(Piece::new(p.floor - 1, p.pos + 1))
            })
            .map(|p| Violation::Unsupported(*p)),
    );

    Ok(report)
}

/// Where a piece dropped at `pos` comes to rest on top of `placed`.
pub fn push(placed: &[Piece], pos: i64) -> Piece {
    let probe = Piece::new(0, pos);
    let floor = placed
        .iter()
        .filter(|q| q.overlaps(&probe))
        .map(|q| q.floor + 1)
        .max()
        .unwrap_or(0);
    Piece::new(floor, pos)
}

/// Drops `incoming` one by one onto `base`, in (floor, pos) order of the
/// incoming pieces, keeping their horizontal positions.
pub(crate) fn drop_onto(mut base: Vec<Piece>, incoming: &[Piece]) -> Vec<Piece> {
    let mut order = incoming.to_vec();
    order.sort_unstable();
    base.reserve(order.len());
    for p in order {
        let landed = push(&base, p.pos);
        base.push(landed);
    }
    base
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    General,
    Pyramid,
    HalfPyramid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub shape: Shape,
    pub piece_count: usize,
}

/// A valid domino tower in canonical position: bottom floor 0, leftmost
/// bottom piece at position 0. Pieces are kept sorted by (floor, pos), so
/// the derived ordering is the lexicographic order of the sorted lists.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Xavier {
    pieces: Vec<Piece>,
}

impl Xavier {
    /// The one-piece xavier.
    pub fn singleton() -> Self {
        Xavier {
            pieces: vec![Piece::new(0, 0)],
        }
    }

    /// Validates and translates `pieces` into canonical position.
    pub fn canonicalize(pieces: &[Piece]) -> Result<Self> {
        let report = validate(pieces)?;
        if !report.is_ok() {
            return Err(Error::Invalid(report));
        }
        Ok(Self::translate_unchecked(pieces))
    }

    fn translate_unchecked(pieces: &[Piece]) -> Self {
        let bottom = pieces.iter().map(|p| p.floor).min().expect("non-empty");
        let left = pieces
            .iter()
            .filter(|p| p.floor == bottom)
            .map(|p| p.pos)
            .min()
            .expect("non-empty");
        let mut pieces: Vec<Piece> = pieces
            .iter()
            .map(|p| Piece::new(p.floor - bottom, p.pos - left))
            .collect();
        pieces.sort_unstable();
        Xavier { pieces }
    }

    /// Like [`Xavier::canonicalize`], but maps a failure to an
    /// internal-consistency error; used on the output of compositions.
    pub(crate) fn assemble(pieces: &[Piece]) -> Result<Self> {
        match Self::canonicalize(pieces) {
            Err(Error::Invalid(report)) => Err(Error::Inconsistent(report)),
            other => other,
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, piece: &Piece) -> bool {
        self.pieces.binary_search(piece).is_ok()
    }

    pub fn bottom(&self) -> &[Piece] {
        let k = self.pieces.partition_point(|p| p.floor == 0);
        &self.pieces[..k]
    }

    pub fn min_pos(&self) -> i64 {
        self.pieces.iter().map(|p| p.pos).min().unwrap_or(0)
    }

    pub fn max_pos(&self) -> i64 {
        self.pieces.iter().map(|p| p.pos).max().unwrap_or(0)
    }

    pub fn max_floor(&self) -> u32 {
        self.pieces.last().map(|p| p.floor).unwrap_or(0)
    }

    pub fn classify(&self) -> Classification {
        let shape = if self.bottom().len() != 1 {
            Shape::General
        } else if self.pieces.iter().all(|p| p.pos >= 0) {
            Shape::HalfPyramid
        } else {
            Shape::Pyramid
        };
        Classification {
            shape,
            piece_count: self.len(),
        }
    }

    /// Smallest superset of `seeds` closed under "is above".
    ///
    /// Returned sorted by (floor, pos).
    pub fn up_set(&self, seeds: &[Piece]) -> Result<Vec<Piece>> {
        let mut inside = vec![false; self.pieces.len()];
        for s in seeds {
            let i = self
                .pieces
                .binary_search(s)
                .map_err(|_| Error::SeedNotFound(*s))?;
            inside[i] = true;
        }
        // Sorted by floor, so every potential predecessor is decided first.
        for i in 0..self.pieces.len() {
            if inside[i] {
                continue;
            }
            let q = self.pieces[i];
            inside[i] = self.pieces[..i]
                .iter()
                .zip(&inside)
                .any(|(p, &member)| member && p.floor < q.floor && p.overlaps(&q));
        }
        Ok(self
            .pieces
            .iter()
            .zip(&inside)
            .filter_map(|(p, &member)| member.then_some(*p))
            .collect())
    }

    /// Pieces of `self` that are not in `removed` (both sorted).
    pub(crate) fn without(&self, removed: &[Piece]) -> Vec<Piece> {
        self.pieces
            .iter()
            .filter(|p| removed.binary_search(p).is_err())
            .copied()
            .collect()
    }
}

impl fmt::Display for Xavier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Re-grounds a detached set of pieces: pushes them onto empty ground in
/// (original floor, pos) order and canonicalizes the result.
pub fn canonical_drop(detached: &[Piece]) -> Result<Xavier> {
    if detached.is_empty() {
        return Err(Error::Empty);
    }
    let landed = drop_onto(Vec::new(), detached);
    match Xavier::canonicalize(&landed) {
        Err(Error::Invalid(report)) => Err(Error::NotDropCoherent(report)),
        other => other,
    }
}

/// A xavier with a single bottom piece.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pyramid(Xavier);

/// A pyramid with nothing strictly left of its bottom piece.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfPyramid(Xavier);

impl HalfPyramid {
    pub fn singleton() -> Self {
        HalfPyramid(Xavier::singleton())
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn into_xavier(self) -> Xavier {
        self.0
    }
}

impl Pyramid {
    pub fn into_xavier(self) -> Xavier {
        self.0
    }

    /// Narrows to a half-pyramid when nothing lies left of the bottom.
    pub fn into_half(self) -> Result<HalfPyramid, Pyramid> {
        if self.0.pieces.iter().all(|p| p.pos >= 0) {
            Ok(HalfPyramid(self.0))
        } else {
            Err(self)
        }
    }
}

impl TryFrom<Xavier> for Pyramid {
    type Error = Error;

    fn try_from(x: Xavier) -> Result<Self> {
        match x.bottom().len() {
            1 => Ok(Pyramid(x)),
            k => Err(Error::NotPyramid(k)),
        }
    }
}

impl TryFrom<Xavier> for HalfPyramid {
    type Error = Error;

    fn try_from(x: Xavier) -> Result<Self> {
        Pyramid::try_from(x)?.into_half().map_err(|p| {
            let left =
                *p.0.pieces
                    .iter()
                    .find(|q| q.pos < 0)
                    .expect("some piece left of 0");
            Error::NotHalfPyramid(left)
        })
    }
}

impl From<HalfPyramid> for Pyramid {
    fn from(h: HalfPyramid) -> Self {
        Pyramid(h.0)
    }
}

impl Deref for Pyramid {
    type Target = Xavier;

    fn deref(&self) -> &Xavier {
        &self.0
    }
}

impl Deref for HalfPyramid {
    type Target = Xavier;

    fn deref(&self) -> &Xavier {
        &self.0
    }
}

/// Shorthand for building piece lists in tests and examples.
pub fn pieces(coords: &[(u32, i64)]) -> Vec<Piece> {
    coords.iter().map(|&(f, p)| Piece::new(f, p)).collect()
}
