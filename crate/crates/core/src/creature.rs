//! Normal form of a xavier as a list of half-pyramids.
//!
//! Iterating the xavier split peels half-pyramids off the right end of the
//! bottom floor; they form the `stack`. What remains is a pyramid, and
//! iterating the pyramid split turns it into a non-empty list of
//! half-pyramids whose first element (the one holding the original bottom
//! piece) is the `head` and whose other elements form the `tail`.
//!
//! The word codec consumes a creature one letter at a time through
//! [`Creature::extract_letter`] and rebuilds it with
//! [`Creature::insert_letter`].

use std::collections::VecDeque;

use crate::bijection::{
    compose_half, compose_pyramid, compose_xavier, decompose_half, decompose_pyramid,
    decompose_xavier, HalfPyramidCase, PyramidCase, XavierCase,
};
use crate::error::Result;
use crate::word::Letter;
use crate::xavier::{HalfPyramid, Pyramid, Xavier};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Creature {
    /// Popped and pushed at the end.
    pub stack: Vec<HalfPyramid>,
    pub head: HalfPyramid,
    /// Popped and pushed at the front.
    pub tail: VecDeque<HalfPyramid>,
}

impl Creature {
    /// `[[], Z, []]`, the creature of the one-piece xavier.
    pub fn rock_bottom() -> Self {
        Creature {
            stack: Vec::new(),
            head: HalfPyramid::singleton(),
            tail: VecDeque::new(),
        }
    }

    pub fn is_rock_bottom(&self) -> bool {
        self.stack.is_empty() && self.tail.is_empty() && self.head.is_singleton()
    }

    pub fn piece_count(&self) -> usize {
        self.stack
            .iter()
            .chain(std::iter::once(&self.head))
            .chain(&self.tail)
            .map(|h| h.len())
            .sum()
    }

    pub fn from_xavier(x: &Xavier) -> Self {
        let mut stack = Vec::new();
        let mut current = x.clone();
        let pyramid = loop {
            match decompose_xavier(&current) {
                XavierCase::Pyramid(p) => break p,
                XavierCase::Split { half, rest } => {
                    stack.push(half);
                    current = rest;
                }
            }
        };

        let mut halves = VecDeque::new();
        let mut current = pyramid;
        loop {
            match decompose_pyramid(&current) {
                PyramidCase::Half(h) => {
                    halves.push_back(h);
                    break;
                }
                PyramidCase::Split { half, rest } => {
                    halves.push_back(half);
                    current = rest;
                }
            }
        }
        let head = halves.pop_front().expect("pyramid list is non-empty");
        Creature {
            stack,
            head,
            tail: halves,
        }
    }

    pub fn to_xavier(&self) -> Result<Xavier> {
        let mut pyramid: Pyramid = match self.tail.back() {
            Some(last) => last.clone().into(),
            None => self.head.clone().into(),
        };
        if !self.tail.is_empty() {
            let inner = self.tail.iter().rev().skip(1);
            for half in inner.chain(std::iter::once(&self.head)) {
                pyramid = compose_pyramid(half, &pyramid)?;
            }
        }
        let mut x = pyramid.into_xavier();
        for half in self.stack.iter().rev() {
            x = compose_xavier(half, &x)?;
        }
        Ok(x)
    }

    /// Removes one piece and returns the letter recording how, or `None` at
    /// rock bottom.
    pub fn extract_letter(&mut self) -> Option<Letter> {
        if self.is_rock_bottom() {
            return None;
        }
        let letter = match decompose_half(&self.head) {
            HalfPyramidCase::Raised(rest) => {
                self.head = rest;
                Letter::Zero
            }
            HalfPyramidCase::Forked { lower, upper } => {
                self.stack.push(lower);
                self.head = upper;
                Letter::Plus
            }
            HalfPyramidCase::Singleton => match self.stack.pop() {
                Some(top) => {
                    self.head = top;
                    Letter::Minus
                }
                None => {
                    self.head = self.tail.pop_front().expect("not rock bottom");
                    Letter::Plus
                }
            },
        };
        Some(letter)
    }

    /// Inverse of [`Creature::extract_letter`]: adds one piece.
    ///
    /// A `+` is a fork exactly when the stack is non-empty, since a fork
    /// always leaves something on the stack and a tail pop only happens
    /// with an empty one.
    pub fn insert_letter(&mut self, letter: Letter) -> Result<()> {
        match letter {
            Letter::Zero => {
                let head = std::mem::replace(&mut self.head, HalfPyramid::singleton());
                self.head = compose_half(&HalfPyramidCase::Raised(head))?;
            }
            Letter::Minus => {
                let head = std::mem::replace(&mut self.head, HalfPyramid::singleton());
                self.stack.push(head);
            }
            Letter::Plus => {
                let head = std::mem::replace(&mut self.head, HalfPyramid::singleton());
                match self.stack.pop() {
                    Some(lower) => {
                        self.head = compose_half(&HalfPyramidCase::Forked { lower, upper: head })?;
                    }
                    None => self.tail.push_front(head),
                }
            }
        }
        Ok(())
    }
}
