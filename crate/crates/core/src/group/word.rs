use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A generator or its formal inverse. Lowercase names are generators, the
/// uppercase form of the same letter is the inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub name: char,
    pub is_inverse: bool,
}

impl Generator {
    pub fn new(name: char) -> Self {
        Generator {
            name,
            is_inverse: false,
        }
    }

    pub fn inverse(self) -> Self {
        Generator {
            name: self.name,
            is_inverse: !self.is_inverse,
        }
    }

    pub fn to_char(self) -> char {
        if self.is_inverse {
            self.name.to_ascii_uppercase()
        } else {
            self.name
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            Some(Generator::new(c))
        } else if c.is_ascii_uppercase() {
            Some(Generator {
                name: c.to_ascii_lowercase(),
                is_inverse: true,
            })
        } else {
            None
        }
    }
}

/// A finite word over a symmetric generating set. The empty word stands for
/// the identity.
///
/// Words order shortlex: shorter words first, then letter by letter with
/// `a < A < b < B < ...`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Formal inverse: reversed, each letter inverted.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    /// Free reduction (cancels every adjacent `xX` / `Xx` pair).
    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<Generator> = Vec::with_capacity(self.0.len());
        for &g in &self.0 {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                Generator::from_char(c).ok_or_else(|| Error::InvalidWord {
                    word: s.to_string(),
                    reason: format!("{c:?} is not an ASCII letter"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}
