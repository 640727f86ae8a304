//! Signed rotations of bouquets: validity, normalization, equivalence, and
//! the structural operations (partial Petrial, string inverse, one-vertex-join).
//!
//! A bouquet with `n` loops is stored as its signed rotation: a cyclic word of
//! `2n` signed occurrences in which every edge label appears exactly twice.
//! A loop is orientable (untwisted) when its two occurrences carry equal
//! signs, non-orientable (half-twisted) otherwise.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Sign carried by one occurrence of an edge label.
///
/// `Plus` sorts before `Minus`; word comparisons during normalization use
/// this (label, sign) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Twist state of a loop, determined by the signs of its two occurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoopKind {
    /// Equal signs on both occurrences.
    Orientable,
    /// Opposite signs.
    NonOrientable,
}

/// One signed occurrence of an edge label in a rotation word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    label: u32,
    sign: Sign,
}

impl Letter {
    /// A letter with explicit sign; `None` when `label` is zero.
    pub fn new(label: u32, sign: Sign) -> Option<Letter> {
        (label > 0).then_some(Letter { label, sign })
    }

    /// Decodes a signed integer token: `-k` is label `k` with sign minus.
    pub fn from_token(token: i64) -> Option<Letter> {
        if token == 0 || token.unsigned_abs() > u32::MAX as u64 {
            return None;
        }
        let sign = if token < 0 { Sign::Minus } else { Sign::Plus };
        Letter::new(token.unsigned_abs() as u32, sign)
    }

    pub fn positive(label: u32) -> Option<Letter> {
        Letter::new(label, Sign::Plus)
    }

    pub fn label(self) -> u32 {
        self.label
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Plus
    }

    /// Same label, opposite sign.
    pub fn negated(self) -> Letter {
        Letter {
            label: self.label,
            sign: self.sign.flipped(),
        }
    }

    /// Signed integer encoding (`-k` for a minus occurrence of label `k`).
    pub fn token(self) -> i64 {
        match self.sign {
            Sign::Plus => self.label as i64,
            Sign::Minus => -(self.label as i64),
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Errors raised by rotation construction, parsing, and subset application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RotationError {
    /// A token was not a nonzero integer.
    InvalidToken { token: String },
    /// The label zero (or a zero token) is not allowed.
    ZeroLabel,
    /// A label did not appear exactly twice.
    OccurrenceCount { label: u32, count: usize },
    /// An operation referenced a label absent from the rotation.
    AbsentLabel { label: u32 },
}

impl fmt::Display for RotationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotationError::InvalidToken { token } => {
                write!(f, "invalid token {token:?}: expected a nonzero integer")
            }
            RotationError::ZeroLabel => write!(f, "zero is not a valid edge label"),
            RotationError::OccurrenceCount { label, count } => {
                write!(f, "label {label} occurs {count} times, expected exactly 2")
            }
            RotationError::AbsentLabel { label } => {
                write!(f, "label {label} is not an edge of the rotation")
            }
        }
    }
}

impl core::error::Error for RotationError {}

/// A subset of edge labels, used to select the loops receiving a half-twist.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSubset {
    members: BTreeSet<u32>,
}

impl EdgeSubset {
    pub fn empty() -> EdgeSubset {
        EdgeSubset::default()
    }

    pub fn contains(&self, label: u32) -> bool {
        self.members.contains(&label)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }
}

impl FromIterator<u32> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> EdgeSubset {
        EdgeSubset {
            members: iter.into_iter().collect(),
        }
    }
}

impl FromStr for EdgeSubset {
    type Err = RotationError;

    fn from_str(text: &str) -> Result<EdgeSubset, RotationError> {
        let mut members = BTreeSet::new();
        for token in text.split_whitespace() {
            let label: u32 = token.parse().map_err(|_| RotationError::InvalidToken {
                token: token.to_string(),
            })?;
            if label == 0 {
                return Err(RotationError::ZeroLabel);
            }
            members.insert(label);
        }
        Ok(EdgeSubset { members })
    }
}

/// Moves taken by [`SignedRotation::normalize_with_moves`]: rotate the word
/// left by `rotation`, then double-flip each label in `flipped`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalizeMoves {
    pub rotation: usize,
    pub flipped: Vec<u32>,
}

impl NormalizeMoves {
    /// Replays the recorded moves on `r`, reproducing the normal form.
    pub fn apply_to(&self, r: &SignedRotation) -> SignedRotation {
        let mut out = r.rotated(self.rotation);
        for &label in &self.flipped {
            out.double_flip(label);
        }
        out
    }
}

/// The signed rotation of a bouquet: a cyclic double-occurrence word with a
/// sign per occurrence. The empty word is the lone-vertex bouquet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedRotation {
    word: Vec<Letter>,
}

impl SignedRotation {
    /// Validates the double-occurrence invariant.
    pub fn new(word: Vec<Letter>) -> Result<SignedRotation, RotationError> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for letter in &word {
            *counts.entry(letter.label()).or_insert(0) += 1;
        }
        for (label, count) in counts {
            if count != 2 {
                return Err(RotationError::OccurrenceCount { label, count });
            }
        }
        Ok(SignedRotation { word })
    }

    /// The lone-vertex bouquet.
    pub fn empty() -> SignedRotation {
        SignedRotation { word: Vec::new() }
    }

    /// Builds a rotation from signed integer tokens.
    pub fn from_tokens(tokens: &[i64]) -> Result<SignedRotation, RotationError> {
        let word = tokens
            .iter()
            .map(|&t| Letter::from_token(t).ok_or(RotationError::ZeroLabel))
            .collect::<Result<Vec<_>, _>>()?;
        SignedRotation::new(word)
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    /// Number of edges `n`; the word has length `2n`.
    pub fn edge_count(&self) -> usize {
        self.word.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Edge labels in ascending order.
    pub fn labels(&self) -> Vec<u32> {
        let set: BTreeSet<u32> = self.word.iter().map(|l| l.label()).collect();
        set.into_iter().collect()
    }

    /// The set of all edge labels.
    pub fn full_subset(&self) -> EdgeSubset {
        self.labels().into_iter().collect()
    }

    /// Positions of the two occurrences of `label` in the stored linear order.
    pub fn occurrence_positions(&self, label: u32) -> Result<(usize, usize), RotationError> {
        let mut found: (Option<usize>, Option<usize>) = (None, None);
        for (i, letter) in self.word.iter().enumerate() {
            if letter.label() == label {
                if found.0.is_none() {
                    found.0 = Some(i);
                } else {
                    found.1 = Some(i);
                }
            }
        }
        match found {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(RotationError::AbsentLabel { label }),
        }
    }

    /// Twist state of the loop `label`.
    pub fn loop_kind(&self, label: u32) -> Result<LoopKind, RotationError> {
        let (first, second) = self.occurrence_positions(label)?;
        Ok(if self.word[first].sign() == self.word[second].sign() {
            LoopKind::Orientable
        } else {
            LoopKind::NonOrientable
        })
    }

    /// The word rotated left by `offset` (same cyclic word, new start).
    pub fn rotated(&self, offset: usize) -> SignedRotation {
        if self.word.is_empty() {
            return self.clone();
        }
        let offset = offset % self.word.len();
        let mut word = Vec::with_capacity(self.word.len());
        word.extend_from_slice(&self.word[offset..]);
        word.extend_from_slice(&self.word[..offset]);
        SignedRotation { word }
    }

    /// The mirror image: occurrences in reverse order, signs unchanged.
    pub fn reversed(&self) -> SignedRotation {
        let mut word = self.word.clone();
        word.reverse();
        SignedRotation { word }
    }

    /// Flips the signs of both occurrences of `label` in place (an
    /// equivalence move, not a Petrial twist).
    fn double_flip(&mut self, label: u32) {
        for letter in &mut self.word {
            if letter.label() == label {
                *letter = letter.negated();
            }
        }
    }

    /// Canonical representative under cyclic rotation and double sign-flips:
    /// for every starting point, flip each loop so its first occurrence from
    /// that start is positive, and keep the lexicographically least result.
    pub fn normalize(&self) -> SignedRotation {
        self.normalize_with_moves().0
    }

    /// As [`normalize`](Self::normalize), also returning the moves that turn
    /// `self` into the normal form.
    pub fn normalize_with_moves(&self) -> (SignedRotation, NormalizeMoves) {
        if self.word.is_empty() {
            return (self.clone(), NormalizeMoves::default());
        }
        let len = self.word.len();
        let mut best: Option<(Vec<Letter>, NormalizeMoves)> = None;
        for offset in 0..len {
            let mut candidate: Vec<Letter> = Vec::with_capacity(len);
            candidate.extend_from_slice(&self.word[offset..]);
            candidate.extend_from_slice(&self.word[..offset]);
            let flipped = flip_first_occurrences_positive(&mut candidate);
            let better = match &best {
                None => true,
                Some((word, _)) => candidate < *word,
            };
            if better {
                best = Some((
                    candidate,
                    NormalizeMoves {
                        rotation: offset,
                        flipped,
                    },
                ));
            }
        }
        let (word, moves) = best.expect("nonempty word has candidates");
        (SignedRotation { word }, moves)
    }

    /// True when the two rotations denote the same bouquet, i.e. agree up to
    /// cyclic rotation and double sign-flips. Relabeling and reflection are
    /// not identified.
    pub fn equivalent(&self, other: &SignedRotation) -> bool {
        self.normalize() == other.normalize()
    }

    /// The partial Petrial: a half-twist on every loop in `subset`, realized
    /// by toggling the sign of each selected label's second occurrence.
    pub fn partial_petrial(&self, subset: &EdgeSubset) -> Result<SignedRotation, RotationError> {
        let mut out = self.clone();
        for label in subset.iter() {
            let (_, second) = self.occurrence_positions(label)?;
            out.word[second] = out.word[second].negated();
        }
        Ok(out)
    }

    /// One-vertex-join: relabels `other`'s edges to fresh labels above
    /// `self`'s maximum, then concatenates the words.
    pub fn join(&self, other: &SignedRotation) -> SignedRotation {
        let base = self.labels().last().copied().unwrap_or(0);
        let mut relabel: BTreeMap<u32, u32> = BTreeMap::new();
        for (i, label) in other.labels().into_iter().enumerate() {
            relabel.insert(label, base + 1 + i as u32);
        }
        let mut word = self.word.clone();
        for letter in other.word() {
            let label = relabel[&letter.label()];
            word.push(Letter::new(label, letter.sign()).expect("label >= 1"));
        }
        SignedRotation { word }
    }
}

/// Flips every label whose first occurrence in `word` is negative; returns
/// the flipped labels in ascending order.
fn flip_first_occurrences_positive(word: &mut [Letter]) -> Vec<u32> {
    let mut seen: BTreeSet<u32> = BTreeSet::new();
    let mut flip: BTreeSet<u32> = BTreeSet::new();
    for letter in word.iter() {
        if seen.insert(letter.label()) && !letter.is_positive() {
            flip.insert(letter.label());
        }
    }
    for letter in word.iter_mut() {
        if flip.contains(&letter.label()) {
            *letter = letter.negated();
        }
    }
    flip.into_iter().collect()
}

/// The inverse of a string: reversed order with every sign negated.
pub fn inverse_string(string: &[Letter]) -> Vec<Letter> {
    string.iter().rev().map(|l| l.negated()).collect()
}

impl FromStr for SignedRotation {
    type Err = RotationError;

    /// Parses whitespace-separated signed integer tokens; `-k` is label `k`
    /// with a minus sign. The empty string is the empty rotation.
    fn from_str(text: &str) -> Result<SignedRotation, RotationError> {
        let mut word = Vec::new();
        for token in text.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| RotationError::InvalidToken {
                token: token.to_string(),
            })?;
            if value == 0 {
                return Err(RotationError::ZeroLabel);
            }
            word.push(Letter::from_token(value).ok_or_else(|| RotationError::InvalidToken {
                token: token.to_string(),
            })?);
        }
        SignedRotation::new(word)
    }
}

impl fmt::Display for SignedRotation {
    /// Renders the token format accepted by `FromStr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, letter) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}
