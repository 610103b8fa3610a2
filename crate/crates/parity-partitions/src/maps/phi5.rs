//! The map from `bar-ou_eu` (even weight ≥ 6) into `bar-eu_ou`.
//!
//! A single-parity input bumps its largest part (Case 1) or gains a 1
//! (Case 2); with both parities present the two largest parts merge, every
//! other part drops by 1, and a run of 1s restores the weight (Case 3).
//! The image components are E1–E3; E3 carries a parity condition on the
//! number of 1s relative to the taller parts.

use super::{dispatch_case, partition_from, CaseTrace, MapId};
use crate::partition::Partition;

fn case_of(lambda: &Partition) -> &'static str {
    let lo = lambda.odd_sub().len();
    let le = lambda.even_sub().len();
    dispatch_case(&[
        ("Case 1", lo >= 1 && le == 0),
        ("Case 2", lo == 0 && le >= 1),
        ("Case 3", lo >= 1 && le >= 1),
    ])
}

pub(crate) fn apply(lambda: &Partition) -> (Partition, CaseTrace) {
    let label = case_of(lambda);
    let parts = lambda.parts();
    let trace = CaseTrace::new(MapId::Phi5, label);
    let out = match label {
        "Case 1" => {
            let mut v = parts.to_vec();
            v[0] += 1;
            partition_from(v)
        }
        "Case 2" => lambda.msunion(&Partition::from_sorted(vec![1])),
        _ => {
            // the overline condition forces the two largest parts to share
            // a parity, so the merged part is even
            let merged = parts[0] + parts[1];
            let mut v = vec![merged];
            v.extend(parts[2..].iter().map(|&x| x - 1));
            v.extend(std::iter::repeat(1).take(lambda.len() - 1));
            partition_from(v)
        }
    };
    (out, trace)
}

fn e1(mu: &Partition) -> bool {
    mu.even_sub().len() == 1 && mu.len() >= 2 && mu.parts()[0] == mu.parts()[1] + 1
}

fn e2(mu: &Partition) -> bool {
    mu.odd_sub().parts() == [1]
}

fn e3(mu: &Partition) -> bool {
    if mu.is_empty() || mu.parts()[0] % 4 != 2 || mu.odd_sub().len() < 3 {
        return false;
    }
    if u64::from(mu.parts()[0]) < 2 * u64::from(mu.parts()[1]) + 2 {
        return false;
    }
    let m1 = mu.mult(1);
    if m1 < mu.count_gt(1) {
        return false;
    }
    // the surplus of 1s over half the length must have the right parity for
    // the un-merge to reassemble a two-parity preimage
    let c = m1 as i64 - (mu.len() / 2) as i64;
    let has_big_odd = mu.parts().iter().any(|&x| x % 2 == 1 && x > 1);
    if has_big_odd {
        c.rem_euclid(2) == 0
    } else {
        c.rem_euclid(2) == 1
    }
}

/// Every component predicate `mu` satisfies, in order E1..E3; empty unless
/// the weight is odd and at least 7. On members of `bar-eu_ou` at most one
/// holds.
pub(crate) fn components(mu: &Partition) -> Vec<&'static str> {
    if mu.weight() < 7 || mu.weight() % 2 == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    if e1(mu) {
        out.push("E1");
    }
    if e2(mu) {
        out.push("E2");
    }
    if e3(mu) {
        out.push("E3");
    }
    out
}

pub(crate) fn image_component(mu: &Partition) -> Option<&'static str> {
    components(mu).into_iter().next()
}

pub(crate) fn invert(mu: &Partition, component: &str) -> Partition {
    let parts = mu.parts();
    match component {
        "E1" => {
            let mut v = parts.to_vec();
            v[0] -= 1;
            partition_from(v)
        }
        "E2" => mu
            .msdiff(&Partition::from_sorted(vec![1]))
            .expect("E2 member contains a 1"),
        _ => {
            // E3: split the merged part and undo the drop on the talls
            let h = mu.len() / 2;
            let mut v = vec![parts[0] / 2, parts[0] / 2];
            v.extend(parts[1..h].iter().map(|&x| x + 1));
            partition_from(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().expect("test partition")
    }

    #[test]
    fn forward_goldens() {
        let rows = [
            ("7 7 5 5", "8 7 5 5", "Case 1"),
            ("12 6 6", "12 6 6 1", "Case 2"),
            ("11 11 9 9 8 2 2", "22 8 8 7 1^8", "Case 3"),
        ];
        for (input, expected, case) in rows {
            let (mu, trace) = MapId::Phi5.apply(&p(input)).unwrap();
            assert_eq!(mu, p(expected), "{input}");
            assert_eq!(trace.case_label, case, "{input}");
        }
    }

    #[test]
    fn inverse_golden() {
        let mu = p("22 8 8 7 1^8");
        assert_eq!(image_component(&mu), Some("E3"));
        assert_eq!(MapId::Phi5.invert(&mu).unwrap(), p("11 11 9 9 8 2 2"));
    }

    #[test]
    fn merged_part_is_two_mod_four() {
        for n in (6..=30u64).step_by(2) {
            for lambda in MapId::Phi5.domain_members(n) {
                if lambda.odd_sub().is_empty() || lambda.even_sub().is_empty() {
                    continue;
                }
                let merged = lambda.parts()[0] + lambda.parts()[1];
                assert_eq!(merged % 4, 2, "two-parity member {lambda:?}");
            }
        }
    }

    #[test]
    fn ones_parity_pin_has_no_preimage() {
        // satisfies every E3 bullet except the parity of the surplus of 1s
        let mu = p("6 1^5");
        assert!(!MapId::Phi5.image_membership(&mu).in_image());
        for lambda in MapId::Phi5.domain_members(10) {
            assert_ne!(MapId::Phi5.apply(&lambda).unwrap().0, mu);
        }
    }

    #[test]
    fn unreachable_families() {
        for k in 2..=10u32 {
            let mu = Partition::new(vec![4 * (k - 1), 1, 1, 1, 1, 1]).unwrap();
            assert_eq!(mu.weight() % 4, 1);
            assert!(!MapId::Phi5.image_membership(&mu).in_image(), "4k+1, k={k}");
        }
        for k in 1..=10u32 {
            let mu = Partition::new(vec![4 * k, 1, 1, 1]).unwrap();
            assert_eq!(mu.weight() % 4, 3);
            assert!(!MapId::Phi5.image_membership(&mu).in_image(), "4k+3, k={k}");
        }
    }

    #[test]
    fn below_floor_or_even_weight_is_outside() {
        // (4,1) weighs 5: member of the codomain class but below the floor
        assert!(components(&p("4 1")).is_empty());
        assert!(image_component(&p("8 4 3 3")).is_none());
    }
}
