//! The grading group `(ℤ/2)^k`, represented as k-bit labels.
//!
//! A [`GroupElement`] packs the rank `k` together with a bitmask; the group
//! operation is bitwise XOR, every element is its own inverse, and the identity is
//! the all-zero mask. Elements are written as bitstrings of length exactly `k`
//! (character `i`, counted from the left, is component `i`), so for `k = 1` the
//! identity is `"0"` and the generator is `"1"`, and for `k = 0` the unique element
//! is the empty string.
//!
//! Elements of different ranks never mix; combining them is a programming error
//! and panics, while fallible label parsing reports [`GroupError`].

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

/// Largest supported rank of the grading group.
///
/// `2^k` grade labels index quadratically many structure blocks, so ranks beyond
/// this bound are refused up front rather than allowed to exhaust memory.
pub const MAX_RANK: u8 = 8;

/// Errors from constructing or parsing grading-group elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    /// The requested rank exceeds [`MAX_RANK`].
    #[error("group rank {0} exceeds the supported maximum {MAX_RANK}")]
    RankTooLarge(u8),
    /// A label string had the wrong length or a character other than `0`/`1`.
    #[error("cannot parse {text:?} as a rank-{rank} label (expected {rank} characters, each '0' or '1')")]
    BadLabel {
        /// The rejected label text.
        text: String,
        /// The rank the label was parsed against.
        rank: u8,
    },
}

/// An element of `(ℤ/2)^k`, tagged with its rank `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    rank: u8,
    bits: u32,
}

impl GroupElement {
    /// The identity element of rank `rank`.
    pub fn identity(rank: u8) -> Result<Self, GroupError> {
        Self::from_bits(rank, 0)
    }

    /// Builds an element from a bitmask. Bit `i` (value `1 << i`) is component `i`.
    pub fn from_bits(rank: u8, bits: u32) -> Result<Self, GroupError> {
        if rank > MAX_RANK {
            return Err(GroupError::RankTooLarge(rank));
        }
        debug_assert!(bits < (1u32 << rank), "bits out of range for rank {rank}");
        Ok(GroupElement {
            rank,
            bits: bits & ((1u32 << rank) - 1),
        })
    }

    /// The rank `k` of the ambient group.
    pub fn rank(self) -> u8 {
        self.rank
    }

    /// The element's bitmask.
    pub fn bits(self) -> u32 {
        self.bits
    }

    /// True if this is the identity.
    pub fn is_identity(self) -> bool {
        self.bits == 0
    }

    /// The inverse — every element of an elementary abelian 2-group is its own.
    pub fn inverse(self) -> Self {
        self
    }

    /// The group product, or an error if the ranks differ.
    pub fn checked_mul(self, other: Self) -> Result<Self, GroupError> {
        if self.rank != other.rank {
            return Err(GroupError::BadLabel {
                text: other.label(),
                rank: self.rank,
            });
        }
        Ok(GroupElement {
            rank: self.rank,
            bits: self.bits ^ other.bits,
        })
    }

    /// Parses a label of length exactly `rank` over the alphabet `{'0','1'}`.
    pub fn parse(text: &str, rank: u8) -> Result<Self, GroupError> {
        if rank > MAX_RANK {
            return Err(GroupError::RankTooLarge(rank));
        }
        if text.len() != usize::from(rank) {
            return Err(GroupError::BadLabel {
                text: text.to_owned(),
                rank,
            });
        }
        let mut bits = 0u32;
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => {
                    return Err(GroupError::BadLabel {
                        text: text.to_owned(),
                        rank,
                    })
                }
            }
        }
        Ok(GroupElement { rank, bits })
    }

    /// The element's label: a bitstring of length `rank`.
    pub fn label(self) -> String {
        (0..self.rank)
            .map(|i| if self.bits & (1 << i) != 0 { '1' } else { '0' })
            .collect()
    }

    /// All `2^rank` elements, in increasing bitmask order (identity first).
    pub fn all(rank: u8) -> impl Iterator<Item = GroupElement> {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds maximum {MAX_RANK}");
        (0..(1u32 << rank)).map(move |bits| GroupElement { rank, bits })
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;

    /// The group product. Panics if the ranks differ; use [`GroupElement::checked_mul`]
    /// on unvalidated input.
    fn mul(self, other: GroupElement) -> GroupElement {
        self.checked_mul(other)
            .expect("group elements of different ranks multiplied")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.label())
    }
}
