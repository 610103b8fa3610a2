//! Partition classes with parity-separated blocks.
//!
//! A class places a *high* block of one parity above a *low* block of the
//! other: every part in the high block exceeds every part in the low block.
//! Each block is unrestricted (`u`), distinct (`d`), or not-all-distinct
//! (`nd`: nonempty with at least one repeated value). Class tokens read
//! `HIGH_LOW`, e.g. `ed_ou` = even-distinct high block over odd-unrestricted
//! low block; `bar-` prefixes the two overline refinements of `ou_eu` and
//! `eu_ou`.
//!
//! Key items: [`ClassSpec`], [`is_member`], [`enumerate_class`] (direct
//! constrained generation), [`enumerate_all`] (oracle generator), and the
//! counters built on them.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::partition::Partition;

/// Parity of a block's parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    /// True when `value` has this parity.
    pub fn matches(self, value: u32) -> bool {
        match self {
            Parity::Odd => value % 2 == 1,
            Parity::Even => value % 2 == 0,
        }
    }

    fn opposite(self) -> Parity {
        match self {
            Parity::Odd => Parity::Even,
            Parity::Even => Parity::Odd,
        }
    }
}

/// Multiplicity restriction on a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Restriction {
    /// Any multiplicities, possibly empty.
    Unrestricted,
    /// All part values distinct, possibly empty.
    Distinct,
    /// Nonempty with at least one repeated part value.
    NotAllDistinct,
}

/// One parity block of a class: parity plus multiplicity restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockSpec {
    pub parity: Parity,
    pub restriction: Restriction,
}

impl BlockSpec {
    /// True when `block` (a single-parity sub-partition) satisfies the
    /// multiplicity restriction.
    fn accepts(self, block: &Partition) -> bool {
        match self.restriction {
            Restriction::Unrestricted => true,
            Restriction::Distinct => block.is_distinct(),
            Restriction::NotAllDistinct => !block.is_empty() && !block.is_distinct(),
        }
    }

    fn token(self) -> &'static str {
        match (self.parity, self.restriction) {
            (Parity::Odd, Restriction::Unrestricted) => "ou",
            (Parity::Odd, Restriction::Distinct) => "od",
            (Parity::Odd, Restriction::NotAllDistinct) => "ond",
            (Parity::Even, Restriction::Unrestricted) => "eu",
            (Parity::Even, Restriction::Distinct) => "ed",
            (Parity::Even, Restriction::NotAllDistinct) => "end",
        }
    }

    fn from_token(token: &str) -> Option<BlockSpec> {
        let parity = match token.as_bytes().first()? {
            b'o' => Parity::Odd,
            b'e' => Parity::Even,
            _ => return None,
        };
        let restriction = match &token[1..] {
            "u" => Restriction::Unrestricted,
            "d" => Restriction::Distinct,
            "nd" => Restriction::NotAllDistinct,
            _ => return None,
        };
        Some(BlockSpec { parity, restriction })
    }
}

/// Overline refinement: a multiplicity-pattern filter on the two
/// unrestricted/unrestricted classes.
///
/// `LowVariant` refines `ou_eu` (token `bar-ou_eu`): the largest even part
/// has odd multiplicity and every other part value has even multiplicity; an
/// all-odd partition qualifies iff every part value has even multiplicity.
/// `HighVariant` refines `eu_ou` (token `bar-eu_ou`): both parities occur,
/// the largest even part and the largest odd part each have odd
/// multiplicity, and every other part value has even multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Overline {
    None,
    HighVariant,
    LowVariant,
}

/// Errors from class construction and token parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassError {
    /// The two blocks must have opposite parities.
    #[error("high and low blocks must have opposite parities")]
    SameParity,
    /// Overline variants exist only for `ou_eu` (low variant) and `eu_ou`
    /// (high variant).
    #[error("overline variants refine only ou_eu (bar-ou_eu) and eu_ou (bar-eu_ou)")]
    OverlineShape,
    /// The token is not `HIGH_LOW` over `{ou,od,ond,eu,ed,end}` with an
    /// optional `bar-` prefix.
    #[error("invalid class token {0:?}")]
    BadToken(String),
}

/// A partition class: high block over low block, optionally overlined.
///
/// Construction validates the shape, so every `ClassSpec` value names one of
/// the 20 classes (18 base + 2 overline).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    high: BlockSpec,
    low: BlockSpec,
    overline: Overline,
}

impl ClassSpec {
    /// Builds a class, enforcing opposite block parities and the overline
    /// shape restrictions.
    pub fn new(high: BlockSpec, low: BlockSpec, overline: Overline) -> Result<Self, ClassError> {
        if high.parity == low.parity {
            return Err(ClassError::SameParity);
        }
        let unrestricted = high.restriction == Restriction::Unrestricted
            && low.restriction == Restriction::Unrestricted;
        match overline {
            Overline::None => {}
            Overline::LowVariant if unrestricted && high.parity == Parity::Odd => {}
            Overline::HighVariant if unrestricted && high.parity == Parity::Even => {}
            _ => return Err(ClassError::OverlineShape),
        }
        Ok(ClassSpec { high, low, overline })
    }

    /// The high block (all its parts larger).
    pub fn high(&self) -> BlockSpec {
        self.high
    }

    /// The low block.
    pub fn low(&self) -> BlockSpec {
        self.low
    }

    /// The overline refinement, if any.
    pub fn overline(&self) -> Overline {
        self.overline
    }

    /// The overline predicate on top of base-class membership.
    fn overline_ok(&self, lambda: &Partition) -> bool {
        let odd_mult = |value: u32| lambda.mult(value) % 2 == 1;
        let all_others_even = |exempt: &[u32]| {
            let mut seen = 0u32;
            for &v in lambda.parts() {
                if v == seen {
                    continue; // one check per distinct value
                }
                seen = v;
                if !exempt.contains(&v) && odd_mult(v) {
                    return false;
                }
            }
            true
        };
        match self.overline {
            Overline::None => true,
            Overline::LowVariant => match lambda.even_sub().parts().first() {
                Some(&largest_even) => odd_mult(largest_even) && all_others_even(&[largest_even]),
                // all-odd: every part value must have even multiplicity
                None => all_others_even(&[]),
            },
            Overline::HighVariant => {
                let largest_even = lambda.even_sub().parts().first().copied();
                let largest_odd = lambda.odd_sub().parts().first().copied();
                match (largest_even, largest_odd) {
                    (Some(le), Some(lo)) => {
                        odd_mult(le) && odd_mult(lo) && all_others_even(&[le, lo])
                    }
                    // both parities must occur
                    _ => false,
                }
            }
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overline != Overline::None {
            f.write_str("bar-")?;
        }
        write!(f, "{}_{}", self.high.token(), self.low.token())
    }
}

impl FromStr for ClassSpec {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, ClassError> {
        let bad = || ClassError::BadToken(s.to_string());
        let (overlined, body) = match s.strip_prefix("bar-") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (high_token, low_token) = body.split_once('_').ok_or_else(bad)?;
        let high = BlockSpec::from_token(high_token).ok_or_else(bad)?;
        let low = BlockSpec::from_token(low_token).ok_or_else(bad)?;
        let overline = if overlined {
            match high.parity {
                Parity::Odd => Overline::LowVariant,
                Parity::Even => Overline::HighVariant,
            }
        } else {
            Overline::None
        };
        ClassSpec::new(high, low, overline)
    }
}

/// All 20 classes in a fixed order: the 18 base classes (high block cycling
/// `ou,od,ond,eu,ed,end`, low block cycling `u,d,nd` of the opposite
/// parity), then `bar-ou_eu`, then `bar-eu_ou`.
pub fn all_class_ids() -> Vec<ClassSpec> {
    let restrictions = [
        Restriction::Unrestricted,
        Restriction::Distinct,
        Restriction::NotAllDistinct,
    ];
    let mut out = Vec::with_capacity(20);
    for high_parity in [Parity::Odd, Parity::Even] {
        for hr in restrictions {
            for lr in restrictions {
                let high = BlockSpec { parity: high_parity, restriction: hr };
                let low = BlockSpec { parity: high_parity.opposite(), restriction: lr };
                out.push(ClassSpec::new(high, low, Overline::None).expect("base class"));
            }
        }
    }
    for token in ["bar-ou_eu", "bar-eu_ou"] {
        out.push(token.parse().expect("overline class"));
    }
    out
}

/// Membership test.
///
/// The split is canonical: each part goes to its parity's block. Either
/// block may be empty (except `nd` blocks), and the separation condition
/// min(high) > max(low) is vacuous when a block is empty.
pub fn is_member(lambda: &Partition, class: &ClassSpec) -> bool {
    let pick = |parity: Parity| {
        Partition::from_sorted(
            lambda.parts().iter().copied().filter(|&v| parity.matches(v)).collect(),
        )
    };
    let high_block = pick(class.high().parity);
    let low_block = pick(class.low().parity);
    if !class.high().accepts(&high_block) || !class.low().accepts(&low_block) {
        return false;
    }
    if let (Some(&high_min), Some(&low_max)) =
        (high_block.parts().last(), low_block.parts().first())
    {
        if high_min <= low_max {
            return false;
        }
    }
    class.overline_ok(lambda)
}

/// Generates single-parity blocks of weight `remaining`, parts descending,
/// every part in `[min_part, max_part]`.
fn gen_raw_block(
    remaining: u64,
    max_part: u32,
    min_part: u32,
    parity: Parity,
    distinct: bool,
    cur: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining == 0 {
        out.push(cur.clone());
        return;
    }
    let cap = u32::try_from(remaining.min(u64::from(max_part))).expect("cap fits u32");
    if cap < min_part || cap == 0 {
        return;
    }
    let mut v = if parity.matches(cap) { cap } else { cap - 1 };
    while v >= min_part && v >= 1 {
        cur.push(v);
        let next_max = if distinct { v.saturating_sub(2) } else { v };
        gen_raw_block(remaining - u64::from(v), next_max, min_part, parity, distinct, cur, out);
        cur.pop();
        match v.checked_sub(2) {
            Some(next) if next >= min_part && next >= 1 => v = next,
            _ => break,
        }
    }
}

/// Generates the blocks of weight `w` satisfying `block`, all parts at least
/// `min_part`.
fn gen_block(w: u64, block: BlockSpec, min_part: u32) -> Vec<Vec<u32>> {
    let max_part = u32::try_from(w.min(u64::from(u32::MAX))).expect("weight fits u32");
    let mut out = Vec::new();
    let mut cur = Vec::new();
    match block.restriction {
        Restriction::Unrestricted => {
            gen_raw_block(w, max_part, min_part, block.parity, false, &mut cur, &mut out)
        }
        Restriction::Distinct => {
            gen_raw_block(w, max_part, min_part, block.parity, true, &mut cur, &mut out)
        }
        Restriction::NotAllDistinct => {
            gen_raw_block(w, max_part, min_part, block.parity, false, &mut cur, &mut out);
            out.retain(|b| b.windows(2).any(|pair| pair[0] == pair[1]));
        }
    }
    out
}

/// Enumerates the class members of weight `n`, each once, in strictly
/// decreasing lexicographic order on part vectors (largest parts first, the
/// order partitions are conventionally listed in).
///
/// Strategy: direct constrained generation — the low block over every weight
/// `0..=n`, then the high block over the remainder with all parts above the
/// low block's largest part. Overline variants filter the base class.
pub fn enumerate_class(n: u64, class: &ClassSpec) -> Vec<Partition> {
    if class.overline() != Overline::None {
        let base = ClassSpec::new(class.high(), class.low(), Overline::None)
            .expect("base of an overline class");
        return enumerate_class(n, &base)
            .into_iter()
            .filter(|lambda| class.overline_ok(lambda))
            .collect();
    }
    let mut result = Vec::new();
    for w_low in 0..=n {
        for beta in gen_block(w_low, class.low(), 1) {
            let low_max = beta.first().copied().unwrap_or(0);
            for alpha in gen_block(n - w_low, class.high(), low_max + 1) {
                let mut parts = alpha;
                parts.extend_from_slice(&beta);
                result.push(Partition::from_sorted(parts));
            }
        }
    }
    result.sort_by(|a, b| b.cmp(a));
    result
}

/// Number of class members of weight `n`.
pub fn count_class(n: u64, class: &ClassSpec) -> u64 {
    enumerate_class(n, class).len() as u64
}

/// Counts for every weight `0..=n_max`, indexed by weight.
pub fn count_sequence(class: &ClassSpec, n_max: u64) -> Vec<u64> {
    (0..=n_max).map(|n| count_class(n, class)).collect()
}

/// Enumerates all partitions of `n`, each once, in strictly decreasing
/// lexicographic order. The independent oracle for membership cross-checks.
pub fn enumerate_all(n: u64) -> Vec<Partition> {
    fn gen(remaining: u64, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        let cap = u32::try_from(remaining.min(u64::from(max_part))).expect("cap fits u32");
        for v in (1..=cap).rev() {
            cur.push(v);
            gen(remaining - u64::from(v), v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let max_part = u32::try_from(n.min(u64::from(u32::MAX))).expect("weight fits u32");
    gen(n, max_part.max(1), &mut Vec::new(), &mut out);
    out
}
