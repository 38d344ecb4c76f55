//! Exactly uniform random xaviers via the word codec.
//!
//! Generator: ChaCha8 (`rand_chacha::ChaCha8Rng`) keyed with
//! `SeedableRng::seed_from_u64(seed)` and positioned on stream `stream`, so
//! every `(seed, stream)` pair is an independent reproducible sequence.
//! Letters: draw `v = next_u32()`; redraw if `v == u32::MAX`, otherwise the
//! letter is `v % 3` mapped as `0 -> '-'`, `1 -> '0'`, `2 -> '+'`. The
//! accepted range holds `2^32 - 1 = 3 * 1431655765` values, so every letter
//! has probability exactly 1/3; a redraw happens with probability `2^-32`.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::word::{decode, Letter, Word};
use crate::xavier::Xavier;

pub fn random_letter(rng: &mut impl RngCore) -> Letter {
    loop {
        let v = rng.next_u32();
        if v != u32::MAX {
            return Letter::ALL[(v % 3) as usize];
        }
    }
}

pub fn random_word(len: usize, seed: u64, stream: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    Word((0..len).map(|_| random_letter(&mut rng)).collect())
}

/// A uniform xavier with `n_pieces` pieces drawn from stream 0 of `seed`.
pub fn sample(n_pieces: usize, seed: u64) -> Result<Xavier> {
    sample_stream(n_pieces, seed, 0)
}

pub fn sample_stream(n_pieces: usize, seed: u64, stream: u64) -> Result<Xavier> {
    if n_pieces == 0 {
        return Err(Error::ZeroPieces);
    }
    decode(&random_word(n_pieces - 1, seed, stream))
}
