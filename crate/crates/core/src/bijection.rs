//! The three weight-preserving decompositions and their inverses.
//!
//! * half-pyramids: `H = {Z} + {Z}×H + {Z}×H×H`
//! * pyramids: `P = H + H×P`
//! * xaviers: `X = P + H×X`
//!
//! Each decomposition cuts off an up-set (everything above a chosen piece or
//! set of pieces) and re-grounds it with [`canonical_drop`]; each inverse
//! places the lower factor first and drops the pieces of the upper factor on
//! top of it.

use crate::error::Result;
use crate::xavier::{canonical_drop, drop_onto, HalfPyramid, Piece, Pyramid, Xavier};

/// Outcome of splitting a half-pyramid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalfPyramidCase {
    /// The one-piece half-pyramid.
    Singleton,
    /// Everything above the bottom piece lies strictly to its right; carries
    /// the half-pyramid left after removing the bottom piece.
    Raised(HalfPyramid),
    /// Some higher piece sits over the bottom piece's left end. `lower` is
    /// what remains on the bottom piece, `upper` the re-grounded up-set of the
    /// lowest such piece.
    Forked {
        lower: HalfPyramid,
        upper: HalfPyramid,
    },
}

impl HalfPyramidCase {
    pub fn piece_count(&self) -> usize {
        match self {
            HalfPyramidCase::Singleton => 1,
            HalfPyramidCase::Raised(h) => 1 + h.len(),
            HalfPyramidCase::Forked { lower, upper } => 1 + lower.len() + upper.len(),
        }
    }
}

pub fn decompose_half(h: &HalfPyramid) -> HalfPyramidCase {
    if h.is_singleton() {
        return HalfPyramidCase::Singleton;
    }
    let above = &h.pieces()[1..];
    // Parity puts any non-bottom piece at pos 0 on an even floor >= 2.
    let Some(&anchor) = above.iter().find(|p| p.pos == 0) else {
        let rest = Xavier::canonicalize(above).expect("support-closed remainder");
        return HalfPyramidCase::Raised(into_half(rest));
    };
    debug_assert!(anchor.floor >= 2);

    let cut = h.up_set(&[anchor]).expect("anchor is a piece of h");
    let upper = canonical_drop(&cut).expect("up-sets re-ground coherently");
    let remainder: Vec<Piece> = h.without(&cut).into_iter().skip(1).collect();
    let lower = Xavier::canonicalize(&remainder).expect("support-closed remainder");
    HalfPyramidCase::Forked {
        lower: into_half(lower),
        upper: into_half(upper),
    }
}

pub fn compose_half(case: &HalfPyramidCase) -> Result<HalfPyramid> {
    let built = match case {
        HalfPyramidCase::Singleton => return Ok(HalfPyramid::singleton()),
        HalfPyramidCase::Raised(rest) => lifted_onto_bottom(rest),
        HalfPyramidCase::Forked { lower, upper } => {
            drop_onto(lifted_onto_bottom(lower), upper.pieces())
        }
    };
    Xavier::assemble(&built).map(into_half)
}

/// `{(0,0)}` plus `h` moved one floor up and one unit right.
fn lifted_onto_bottom(h: &HalfPyramid) -> Vec<Piece> {
    std::iter::once(Piece::new(0, 0))
        .chain(h.pieces().iter().map(|p| p.raised(1, 1)))
        .collect()
}

/// Outcome of splitting a pyramid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PyramidCase {
    Half(HalfPyramid),
    /// `half` keeps the original bottom piece; `rest` is the re-grounded
    /// up-set of the lowest piece sticking out on the left.
    Split {
        half: HalfPyramid,
        rest: Pyramid,
    },
}

pub fn decompose_pyramid(p: &Pyramid) -> PyramidCase {
    let p = match p.clone().into_half() {
        Ok(h) => return PyramidCase::Half(h),
        Err(p) => p,
    };
    let anchor = *p
        .pieces()
        .iter()
        .find(|q| q.pos < 0)
        .expect("a pyramid that is not half has a piece left of 0");
    assert_eq!(
        anchor.pos, -1,
        "lowest left piece must overhang by exactly one unit"
    );

    let cut = p.up_set(&[anchor]).expect("anchor is a piece of p");
    let rest = canonical_drop(&cut).expect("up-sets re-ground coherently");
    let half = Xavier::canonicalize(&p.without(&cut)).expect("support-closed remainder");
    PyramidCase::Split {
        half: into_half(half),
        rest: into_pyramid(rest),
    }
}

pub fn compose_pyramid(half: &HalfPyramid, rest: &Pyramid) -> Result<Pyramid> {
    let incoming: Vec<Piece> = rest.pieces().iter().map(|q| q.raised(0, -1)).collect();
    let built = drop_onto(half.pieces().to_vec(), &incoming);
    Xavier::assemble(&built).map(into_pyramid)
}

/// Outcome of splitting a xavier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XavierCase {
    Pyramid(Pyramid),
    /// `half` grows from the rightmost bottom piece; `rest` is the
    /// re-grounded up-set of all the other bottom pieces.
    Split {
        half: HalfPyramid,
        rest: Xavier,
    },
}

pub fn decompose_xavier(x: &Xavier) -> XavierCase {
    let bottom = x.bottom();
    if bottom.len() == 1 {
        return XavierCase::Pyramid(into_pyramid(x.clone()));
    }
    let cut = x
        .up_set(&bottom[..bottom.len() - 1])
        .expect("bottom pieces belong to x");
    let rest = canonical_drop(&cut).expect("up-sets re-ground coherently");
    let half = Xavier::canonicalize(&x.without(&cut)).expect("support-closed remainder");
    XavierCase::Split {
        half: into_half(half),
        rest,
    }
}

pub fn compose_xavier(half: &HalfPyramid, rest: &Xavier) -> Result<Xavier> {
    let shift = 2 * rest.bottom().len() as i64;
    let base: Vec<Piece> = half.pieces().iter().map(|p| p.raised(0, shift)).collect();
    let built = drop_onto(base, rest.pieces());
    Xavier::assemble(&built)
}

fn into_half(x: Xavier) -> HalfPyramid {
    HalfPyramid::try_from(x).expect("construction yields a half-pyramid")
}

fn into_pyramid(x: Xavier) -> Pyramid {
    Pyramid::try_from(x).expect("construction yields a pyramid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xavier::pieces;

    fn x(coords: &[(u32, i64)]) -> Xavier {
        Xavier::canonicalize(&pieces(coords)).unwrap()
    }

    fn h(coords: &[(u32, i64)]) -> HalfPyramid {
        HalfPyramid::try_from(x(coords)).unwrap()
    }

    fn p(coords: &[(u32, i64)]) -> Pyramid {
        Pyramid::try_from(x(coords)).unwrap()
    }

    #[test]
    fn half_pyramid_cases() {
        let z = HalfPyramid::singleton();
        assert_eq!(decompose_half(&z), HalfPyramidCase::Singleton);
        assert_eq!(
            decompose_half(&h(&[(0, 0), (1, 1)])),
            HalfPyramidCase::Raised(z.clone())
        );
        assert_eq!(
            decompose_half(&h(&[(0, 0), (1, 1), (2, 0)])),
            HalfPyramidCase::Forked {
                lower: z.clone(),
                upper: z.clone()
            }
        );
    }

    #[test]
    fn half_pyramid_compose() {
        let z = HalfPyramid::singleton();
        assert_eq!(compose_half(&HalfPyramidCase::Singleton).unwrap(), z);
        assert_eq!(
            compose_half(&HalfPyramidCase::Raised(z.clone())).unwrap(),
            h(&[(0, 0), (1, 1)])
        );
        assert_eq!(
            compose_half(&HalfPyramidCase::Forked {
                lower: z.clone(),
                upper: z
            })
            .unwrap(),
            h(&[(0, 0), (1, 1), (2, 0)])
        );
    }

    #[test]
    fn forked_upper_keeps_its_shape() {
        // Up-set of (2,0) is {(2,0),(3,1),(4,0)}; the lower part is {(1,1),(2,2)}.
        let tall = h(&[(0, 0), (1, 1), (2, 0), (2, 2), (3, 1), (4, 0)]);
        let case = decompose_half(&tall);
        assert_eq!(
            case,
            HalfPyramidCase::Forked {
                lower: h(&[(0, 0), (1, 1)]),
                upper: h(&[(0, 0), (1, 1), (2, 0)]),
            }
        );
        assert_eq!(case.piece_count(), tall.len());
        assert_eq!(compose_half(&case).unwrap(), tall);
    }

    #[test]
    fn pyramid_cases() {
        let z = HalfPyramid::singleton();
        assert_eq!(
            decompose_pyramid(&p(&[(0, 0), (1, 1)])),
            PyramidCase::Half(h(&[(0, 0), (1, 1)]))
        );
        assert_eq!(
            decompose_pyramid(&p(&[(0, 0), (1, -1)])),
            PyramidCase::Split {
                half: z.clone(),
                rest: z.clone().into()
            }
        );
        assert_eq!(
            decompose_pyramid(&p(&[(0, 0), (1, -1), (1, 1)])),
            PyramidCase::Split {
                half: h(&[(0, 0), (1, 1)]),
                rest: z.into()
            }
        );
    }

    #[test]
    fn pyramid_compose() {
        let z = HalfPyramid::singleton();
        assert_eq!(
            compose_pyramid(&z, &z.clone().into()).unwrap(),
            p(&[(0, 0), (1, -1)])
        );
        assert_eq!(
            compose_pyramid(&h(&[(0, 0), (1, 1)]), &z.into()).unwrap(),
            p(&[(0, 0), (1, -1), (1, 1)])
        );
    }

    #[test]
    fn xavier_cases() {
        let z = HalfPyramid::singleton();
        assert_eq!(
            decompose_xavier(&x(&[(0, 0), (0, 2)])),
            XavierCase::Split {
                half: z.clone(),
                rest: Xavier::singleton()
            }
        );
        assert_eq!(
            decompose_xavier(&x(&[(0, 0), (0, 2), (1, 1)])),
            XavierCase::Split {
                half: z.clone(),
                rest: x(&[(0, 0), (1, 1)])
            }
        );
        assert_eq!(
            decompose_xavier(&x(&[(0, 0), (1, 1)])),
            XavierCase::Pyramid(p(&[(0, 0), (1, 1)]))
        );
    }

    #[test]
    fn xavier_compose() {
        let z = HalfPyramid::singleton();
        assert_eq!(
            compose_xavier(&z, &Xavier::singleton()).unwrap(),
            x(&[(0, 0), (0, 2)])
        );
        assert_eq!(
            compose_xavier(&z, &x(&[(0, 0), (1, 1)])).unwrap(),
            x(&[(0, 0), (0, 2), (1, 1)])
        );
    }
}
