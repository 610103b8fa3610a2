//! The block-shift injection shared by `phi1_dd` and `phi1_uu`.
//!
//! Single-parity partitions map to themselves. When both parities occur, the
//! first ℓ_m parts gain 1 and the last ℓ_m parts lose 1, where ℓ_m is the
//! smaller of the two parity-block lengths; this swaps which parity sits on
//! top. The two variants differ only in their classes and therefore in
//! their image characterizations.

use super::{dispatch_case, shift_first_last, CaseTrace, MapId};
use crate::partition::Partition;

fn ell_m(p: &Partition) -> usize {
    p.odd_sub().len().min(p.even_sub().len())
}

fn case_of(lambda: &Partition) -> &'static str {
    let single = lambda.odd_sub().is_empty() || lambda.even_sub().is_empty();
    dispatch_case(&[("Case 1", single), ("Case 2", !single)])
}

pub(crate) fn apply(map: MapId, lambda: &Partition) -> (Partition, CaseTrace) {
    let label = case_of(lambda);
    let out = match label {
        "Case 1" => lambda.clone(),
        _ => shift_first_last(lambda, ell_m(lambda), 1, -1),
    };
    (out, CaseTrace::new(map, label))
}

pub(crate) fn invert(mu: &Partition) -> Partition {
    if mu.odd_sub().is_empty() || mu.even_sub().is_empty() {
        mu.clone()
    } else {
        shift_first_last(mu, ell_m(mu), -1, 1)
    }
}

/// Image of `phi1_dd` inside `ed_od`: single parity, or the smallest even
/// part at least 3 above the largest odd part.
pub(crate) fn image_dd(mu: &Partition) -> Option<&'static str> {
    let odd = mu.odd_sub();
    let even = mu.even_sub();
    if odd.is_empty() {
        return Some("(i)");
    }
    if even.is_empty() {
        return Some("(ii)");
    }
    let even_min = i64::from(*even.parts().last().expect("nonempty"));
    let odd_max = i64::from(odd.parts()[0]);
    if even_min - odd_max >= 3 {
        return Some("(iii)");
    }
    None
}

/// Image of `phi1_uu` inside `eu_ou`: single parity, or a gap of at least 2
/// at the parity boundary (probed at index ℓ_o from the top when ℓ_o ≤ ℓ_e,
/// at index ℓ − ℓ_e otherwise, with parts beyond the length reading 0).
pub(crate) fn image_uu(mu: &Partition) -> Option<&'static str> {
    let odd = mu.odd_sub();
    let even = mu.even_sub();
    if odd.is_empty() {
        return Some("(i)");
    }
    if even.is_empty() {
        return Some("(ii)");
    }
    let (lo, le, l) = (odd.len(), even.len(), mu.len());
    if lo <= le && mu.part(lo) - mu.part(lo + 1) >= 2 {
        return Some("(iii)");
    }
    if le < lo && mu.part(l - le) - mu.part(l - le + 1) >= 2 {
        return Some("(iv)");
    }
    None
}
