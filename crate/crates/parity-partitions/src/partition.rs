//! Canonical partition representation and part statistics.
//!
//! Key items: [`Partition`] (immutable, parts stored non-increasing),
//! [`PartitionStats`], multiplicity/threshold queries (`mult`, `count_gt`,
//! `count_geq`, `next_larger`), multiset union/difference, a text format with
//! caret multiplicities (`"13 11 7^3 5 3^5 1"`), and ASCII Ferrers rendering.
//! All operations are O(length) or better; partitions at desk scale are tiny.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Errors from partition construction and multiset arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    /// Parts must be positive integers.
    #[error("partition parts must be positive integers")]
    ZeroPart,
    /// `msdiff` subtrahend is not contained in the minuend.
    #[error("not a sub-multiset: part {0} is not available to subtract")]
    NotSubMultiset(u32),
}

/// Errors from parsing the partition text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    /// A token is not `PART` or `PART^MULT` with positive integers.
    #[error("invalid partition token {0:?}")]
    BadToken(String),
    /// A part value of zero was written.
    #[error("partition parts must be positive integers")]
    ZeroPart,
    /// A caret multiplicity of zero was written.
    #[error("caret multiplicity must be positive")]
    ZeroMultiplicity,
}

/// An integer partition: a non-increasing sequence of positive parts.
///
/// Construction from any unordered multiset canonicalizes to the same value,
/// so `Partition` supports `Eq`/`Ord`/`Hash` structurally. The empty
/// partition (weight 0) is a valid value. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u64,
}

impl Partition {
    /// Builds the canonical partition of an unordered multiset of parts.
    ///
    /// # Errors
    /// Rejects any zero entry.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().map(|&p| u64::from(p)).sum();
        Ok(Partition { parts, weight })
    }

    /// The empty partition of weight 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), weight: 0 }
    }

    /// Builds from parts already sorted non-increasing and positive.
    ///
    /// Internal fast path for enumerators and maps; checked in debug builds.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts not sorted");
        debug_assert!(parts.iter().all(|&p| p > 0), "zero part");
        let weight = parts.iter().map(|&p| u64::from(p)).sum();
        Partition { parts, weight }
    }

    /// The parts, non-increasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True when there are no parts.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `j`-th largest part, 1-based; 0 when `j` exceeds the length.
    ///
    /// # Edge cases
    /// Panics when `j == 0`: part indices are 1-based throughout.
    pub fn part(&self, j: usize) -> u32 {
        assert!(j >= 1, "part index is 1-based");
        self.parts.get(j - 1).copied().unwrap_or(0)
    }

    /// Sub-partition of the odd parts, in order.
    pub fn odd_sub(&self) -> Partition {
        Partition::from_sorted(self.parts.iter().copied().filter(|p| p % 2 == 1).collect())
    }

    /// Sub-partition of the even parts, in order.
    pub fn even_sub(&self) -> Partition {
        Partition::from_sorted(self.parts.iter().copied().filter(|p| p % 2 == 0).collect())
    }

    /// Multiplicity of the value `v` among the parts.
    pub fn mult(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// Number of parts strictly greater than `v`.
    pub fn count_gt(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p > v).count()
    }

    /// Number of parts greater than or equal to `v`.
    pub fn count_geq(&self, v: u32) -> usize {
        self.parts.iter().filter(|&&p| p >= v).count()
    }

    /// Smallest part strictly larger than `v`, if any.
    ///
    /// Total over all `v`, whether or not `v` itself occurs as a part; image
    /// predicates probe values that may be absent.
    pub fn next_larger(&self, v: u32) -> Option<u32> {
        self.parts.iter().copied().filter(|&p| p > v).min()
    }

    /// Least part value with multiplicity at least 2, if any.
    pub fn smallest_repeated(&self) -> Option<u32> {
        // parts are sorted descending, so scan from the back for the first
        // adjacent equal pair (smallest values first)
        self.parts
            .windows(2)
            .rev()
            .find(|w| w[0] == w[1])
            .map(|w| w[0])
    }

    /// Second-least part value with multiplicity at least 2, if any.
    pub fn second_smallest_repeated(&self) -> Option<u32> {
        let first = self.smallest_repeated()?;
        self.parts
            .windows(2)
            .rev()
            .filter(|w| w[0] == w[1] && w[0] != first)
            .map(|w| w[0])
            .next()
    }

    /// True when no part value repeats.
    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Multiset union, re-canonicalized. Weights add.
    pub fn msunion(&self, other: &Partition) -> Partition {
        let mut merged = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                merged.push(self.parts[i]);
                i += 1;
            } else {
                merged.push(other.parts[j]);
                j += 1;
            }
        }
        merged.extend_from_slice(&self.parts[i..]);
        merged.extend_from_slice(&other.parts[j..]);
        Partition::from_sorted(merged)
    }

    /// Multiset difference. Weights subtract.
    ///
    /// # Errors
    /// Fails with a "not a sub-multiset" error when `other` has a part (or a
    /// multiplicity) that `self` lacks.
    pub fn msdiff(&self, other: &Partition) -> Result<Partition, PartitionError> {
        let mut remaining: Vec<u32> = self.parts.clone();
        for &v in other.parts() {
            match remaining.iter().position(|&p| p == v) {
                Some(idx) => {
                    remaining.remove(idx);
                }
                None => return Err(PartitionError::NotSubMultiset(v)),
            }
        }
        Ok(Partition::from_sorted(remaining))
    }

    /// All the named part statistics in one pass.
    pub fn stats(&self) -> PartitionStats {
        let odd = self.odd_sub();
        let even = self.even_sub();
        let (ell_o, ell_e) = (odd.len(), even.len());
        PartitionStats {
            ell: self.len(),
            ell_o,
            ell_e,
            ell_m: if ell_o > 0 && ell_e > 0 { Some(ell_o.min(ell_e)) } else { None },
            largest_odd: odd.parts().first().copied(),
            smallest_odd: odd.parts().last().copied(),
            largest_even: even.parts().first().copied(),
            smallest_even: even.parts().last().copied(),
            smallest_repeated: self.smallest_repeated(),
            second_smallest_repeated: self.second_smallest_repeated(),
        }
    }

    /// ASCII Ferrers diagram: one line of `#` glyphs per part.
    ///
    /// # Edge cases
    /// The empty partition renders as the empty string.
    pub fn render_ferrers(&self) -> String {
        self.parts
            .iter()
            .map(|&p| "#".repeat(p as usize))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Part statistics of a partition.
///
/// `ell_m` is present only when both parity blocks are nonempty; the
/// largest/smallest entries per parity are present exactly when that parity
/// occurs; the repeated-value entries are present when a repeat exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub ell: usize,
    pub ell_o: usize,
    pub ell_e: usize,
    pub ell_m: Option<usize>,
    pub largest_odd: Option<u32>,
    pub smallest_odd: Option<u32>,
    pub largest_even: Option<u32>,
    pub smallest_even: Option<u32>,
    pub smallest_repeated: Option<u32>,
    pub second_smallest_repeated: Option<u32>,
}

impl fmt::Display for Partition {
    /// Space-separated parts, non-increasing; a run longer than two prints in
    /// caret form, e.g. `(7,7,7,5,3,3) → "7^3 5 3 3"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&p| p == v).count();
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if run > 2 {
                write!(f, "{v}^{run}")?;
            } else {
                for k in 0..run {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{v}")?;
                }
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    /// Parses the text format: whitespace-separated tokens, each `PART` or
    /// `PART^MULT`; expanded and caret forms mix freely and order does not
    /// matter. The empty (or all-whitespace) string is the empty partition.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut parts = Vec::new();
        for token in s.split_whitespace() {
            let (value_text, mult) = match token.split_once('^') {
                Some((v, m)) => {
                    let mult: usize = m
                        .parse()
                        .map_err(|_| ParseError::BadToken(token.to_string()))?;
                    if mult == 0 {
                        return Err(ParseError::ZeroMultiplicity);
                    }
                    (v, mult)
                }
                None => (token, 1),
            };
            let value: u32 = value_text
                .parse()
                .map_err(|_| ParseError::BadToken(token.to_string()))?;
            if value == 0 {
                return Err(ParseError::ZeroPart);
            }
            parts.extend(std::iter::repeat(value).take(mult));
        }
        Ok(Partition::new(parts).expect("parts validated positive"))
    }
}

impl Serialize for Partition {
    /// Serializes as the plain JSON array of parts, e.g. `[5,3,3,1]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.parts.iter())
    }
}
