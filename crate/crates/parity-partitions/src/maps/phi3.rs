//! The injection from `od_eu` into `ed_ou`.
//!
//! All-odd and distinct all-even inputs are fixed; otherwise every part
//! drops by 1 and ℓ(λ) parts equal to 1 are appended. The image components
//! are the two fixed shapes plus condition (iii): even length with at least
//! half the parts equal to 1.

use super::{dispatch_case, partition_from, CaseTrace, MapId};
use crate::partition::Partition;

fn case_of(lambda: &Partition) -> &'static str {
    let (lo, le) = (lambda.odd_sub().len(), lambda.even_sub().len());
    let distinct = lambda.is_distinct();
    dispatch_case(&[
        ("Case 1", le == 0),
        ("Case 2", le >= 1 && lo == 0 && distinct),
        ("Case 3", le >= 1 && (lo >= 1 || !distinct)),
    ])
}

pub(crate) fn apply(lambda: &Partition) -> (Partition, CaseTrace) {
    let label = case_of(lambda);
    let out = match label {
        "Case 3" => {
            let mut parts: Vec<u32> = lambda.parts().iter().map(|&x| x - 1).collect();
            parts.extend(std::iter::repeat(1).take(lambda.len()));
            partition_from(parts)
        }
        _ => lambda.clone(),
    };
    (out, CaseTrace::new(MapId::Phi3, label))
}

pub(crate) fn image_component(mu: &Partition) -> Option<&'static str> {
    let odd = mu.odd_sub();
    let even = mu.even_sub();
    if even.is_empty() && mu.is_distinct() {
        return Some("(i)");
    }
    if odd.is_empty() && mu.is_distinct() {
        return Some("(ii)");
    }
    let m1 = mu.mult(1);
    let taller = mu.count_gt(1);
    if !odd.is_empty() && mu.len() >= 4 && mu.len() % 2 == 0 && m1 >= 2 && m1 >= taller {
        // all-odd with 1 as the only repeated value: reconstruction stays
        // inside the domain only when the 1-run spans everything or exceeds
        // the taller parts by at least 4
        if even.is_empty()
            && mu.smallest_repeated() == Some(1)
            && mu.second_smallest_repeated().is_none()
            && !(m1 == mu.len() || m1 >= taller + 4)
        {
            return None;
        }
        // evens present with every odd part equal to 1: at equality the
        // reconstruction is a distinct all-even partition, which Case 2
        // already maps to itself
        if !even.is_empty() && odd.parts().iter().all(|&x| x == 1) && m1 == taller {
            return None;
        }
        return Some("(iii)");
    }
    None
}

pub(crate) fn invert(mu: &Partition, component: &str) -> Partition {
    match component {
        "(iii)" => {
            let h = mu.len() / 2;
            let ones = Partition::from_sorted(vec![1; h]);
            let rest = mu.msdiff(&ones).expect("(iii) has at least ℓ/2 ones");
            assert_eq!(rest.len(), h, "(iii) leaves exactly ℓ/2 parts");
            partition_from(rest.parts().iter().map(|&x| x + 1).collect())
        }
        _ => mu.clone(),
    }
}
