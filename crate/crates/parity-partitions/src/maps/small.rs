//! Three small endomaps: `psi` and `f_shift` on `ou_eu`, and
//! `bcn_append1` on `ed_ou`.
//!
//! `psi` raises weight by 1 and is a bijection onto the next weight up when
//! the input weight is even; `f_shift` grows the largest part by 2; and
//! `bcn_append1` adjoins a 1. Each is a weight-shift with a one- or
//! two-case dispatch and an exactly characterized image.

use super::{dispatch_case, partition_from, CaseTrace, MapId};
use crate::partition::Partition;

pub(crate) fn psi_apply(lambda: &Partition) -> (Partition, CaseTrace) {
    let label = dispatch_case(&[
        ("Case 1", lambda.even_sub().is_empty()),
        ("Case 2", !lambda.even_sub().is_empty()),
    ]);
    let trace = CaseTrace::new(MapId::Psi, label);
    let out = if label == "Case 1" {
        lambda.msunion(&Partition::from_sorted(vec![1]))
    } else {
        // bump one copy of the largest even part up to the next odd value
        let v = lambda.even_sub().parts()[0];
        let mut parts = lambda.parts().to_vec();
        let i = parts.iter().position(|&x| x == v).expect("largest even present");
        parts[i] += 1;
        partition_from(parts)
    };
    (out, trace)
}

pub(crate) fn psi_image_component(mu: &Partition) -> Option<&'static str> {
    if mu.mult(1) >= 1 {
        Some("Case 1")
    } else if !mu.odd_sub().is_empty() {
        Some("Case 2")
    } else {
        None
    }
}

pub(crate) fn psi_invert(mu: &Partition, component: &str) -> Partition {
    if component == "Case 1" {
        mu.msdiff(&Partition::from_sorted(vec![1])).expect("Case 1 member contains a 1")
    } else {
        // lower one copy of the smallest odd part (necessarily >= 3)
        let v = *mu.odd_sub().parts().last().expect("Case 2 member has an odd part");
        let mut parts = mu.parts().to_vec();
        let i = parts.iter().rposition(|&x| x == v).expect("smallest odd present");
        parts[i] -= 1;
        partition_from(parts)
    }
}

pub(crate) fn f_apply(lambda: &Partition) -> (Partition, CaseTrace) {
    let trace = CaseTrace::new(MapId::FShift, "Case 1");
    let mut parts = lambda.parts().to_vec();
    parts[0] += 2;
    (partition_from(parts), trace)
}

pub(crate) fn f_image_component(mu: &Partition) -> Option<&'static str> {
    // the shifted largest part must stay strictly largest after undoing
    if !mu.is_empty() && mu.part(1) >= mu.part(2).max(1) + 2 {
        Some("Case 1")
    } else {
        None
    }
}

pub(crate) fn f_invert(mu: &Partition) -> Partition {
    let mut parts = mu.parts().to_vec();
    parts[0] -= 2;
    partition_from(parts)
}

pub(crate) fn append1_apply(lambda: &Partition) -> (Partition, CaseTrace) {
    let trace = CaseTrace::new(MapId::BcnAppend1, "Case 1");
    (lambda.msunion(&Partition::from_sorted(vec![1])), trace)
}

pub(crate) fn append1_image_component(mu: &Partition) -> Option<&'static str> {
    if mu.mult(1) >= 1 {
        Some("Case 1")
    } else {
        None
    }
}

pub(crate) fn append1_invert(mu: &Partition) -> Partition {
    mu.msdiff(&Partition::from_sorted(vec![1])).expect("image member contains a 1")
}
