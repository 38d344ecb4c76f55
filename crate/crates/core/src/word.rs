//! Ternary words and the codec between words of length `n` and xaviers
//! with `n + 1` pieces.

use std::fmt;
use std::str::FromStr;

use crate::creature::Creature;
use crate::error::{Error, Result};
use crate::xavier::{Shape, Xavier};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Minus,
    Zero,
    Plus,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::Minus, Letter::Zero, Letter::Plus];

    pub fn value(self) -> i8 {
        match self {
            Letter::Minus => -1,
            Letter::Zero => 0,
            Letter::Plus => 1,
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Letter::Minus => '-',
            Letter::Zero => '0',
            Letter::Plus => '+',
        }
    }

    pub fn from_glyph(c: char) -> Option<Letter> {
        match c {
            '-' => Some(Letter::Minus),
            '0' => Some(Letter::Zero),
            '+' => Some(Letter::Plus),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// All `3^n` words of length `n`, in lexicographic order of `- < 0 < +`.
    pub fn all(n: usize) -> impl Iterator<Item = Word> {
        let total = 3usize.pow(n as u32);
        (0..total).map(move |mut index| {
            let mut letters = vec![Letter::Minus; n];
            for slot in letters.iter_mut().rev() {
                *slot = Letter::ALL[index % 3];
                index /= 3;
            }
            Word(letters)
        })
    }

    /// Shape predicted from prefix sums: non-negative prefix sums mean a
    /// pyramid, and a total of zero on top of that a half-pyramid.
    pub fn classify(&self) -> Shape {
        let mut sum = 0i64;
        for letter in &self.0 {
            sum += i64::from(letter.value());
            if sum < 0 {
                return Shape::General;
            }
        }
        if sum == 0 {
            Shape::HalfPyramid
        } else {
            Shape::Pyramid
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, found)| {
                Letter::from_glyph(found).ok_or(Error::BadLetter { position, found })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.glyph()))
    }
}

pub fn encode(x: &Xavier) -> Word {
    let mut creature = Creature::from_xavier(x);
    let mut letters = Vec::with_capacity(x.len() - 1);
    while let Some(letter) = creature.extract_letter() {
        letters.push(letter);
    }
    Word(letters)
}

/// Letters are inserted last to first, undoing [`encode`] step by step.
pub fn decode(w: &Word) -> Result<Xavier> {
    let mut creature = Creature::rock_bottom();
    for &letter in w.0.iter().rev() {
        creature.insert_letter(letter)?;
    }
    creature.to_xavier()
}
