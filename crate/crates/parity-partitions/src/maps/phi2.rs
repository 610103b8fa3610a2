//! The five-case injection from `eu_od` into `ou_ed`.
//!
//! Case-by-case: all-odd and single-even-part-only inputs are fixed; one
//! even part over two or more odds trades the even part down by 1 and the
//! smallest odd up by 1; the special shape λ^o = (λ^e_s − 1, 1) folds the
//! even block; the general case subtracts k from every even part and
//! appends ℓ_e copies of k, with k = min(λ^o_1, λ^e_s − λ^o_1) (or 1 when
//! there are no odds). The image components are B1–B5.

use super::{dispatch_case, partition_from, CaseTrace, MapId};
use crate::partition::Partition;

fn case_of(lambda: &Partition) -> &'static str {
    let odd = lambda.odd_sub();
    let even = lambda.even_sub();
    let (lo, le) = (odd.len(), even.len());
    // λ^o = (λ^e_s − 1, 1)
    let special = match even.parts().last() {
        Some(&even_min) => odd.parts() == [even_min - 1, 1],
        None => false,
    };
    dispatch_case(&[
        ("Case 1", le == 0),
        ("Case 2", le == 1 && lo == 0),
        ("Case 3", le == 1 && lo >= 2),
        ("Case 4", le >= 2 && special),
        ("Case 5", (le == 1 && lo == 1) || (le >= 2 && !special)),
    ])
}

pub(crate) fn apply(lambda: &Partition) -> (Partition, CaseTrace) {
    let label = case_of(lambda);
    let odd = lambda.odd_sub();
    let even = lambda.even_sub();
    let mut trace = CaseTrace::new(MapId::Phi2, label);
    let out = match label {
        "Case 1" | "Case 2" => lambda.clone(),
        "Case 3" => {
            // single even part e → e−1; smallest odd gains 1
            let e = even.parts()[0];
            let mut parts = odd.parts().to_vec();
            *parts.last_mut().expect("Case 3 has odd parts") += 1;
            parts.push(e - 1);
            partition_from(parts)
        }
        "Case 4" => {
            let ev = even.parts();
            let mut parts = vec![ev[0] + 1];
            parts.extend(ev[1..].iter().map(|&x| x - 1));
            parts.push(ev[ev.len() - 1] - 1);
            parts.extend(std::iter::repeat(1).take(ev.len() - 1));
            partition_from(parts)
        }
        _ => {
            let k = match odd.parts().first() {
                Some(&o1) => o1.min(even.parts()[even.len() - 1] - o1),
                None => 1,
            };
            trace.k = Some(k);
            let mut parts: Vec<u32> = even.parts().iter().map(|&x| x - k).collect();
            parts.extend_from_slice(odd.parts());
            parts.extend(std::iter::repeat(k).take(even.len()));
            partition_from(parts)
        }
    };
    (out, trace)
}

/// The Case 5 image shape: all parts odd with a repeat, and the
/// multiplicity pattern around the smallest repeated value matching one of
/// the reconstruction branches (each branch needs enough parts at or above
/// its pivot for the rebuilt even block to clear the rebuilt odd block).
fn b5(mu: &Partition) -> bool {
    if !mu.even_sub().is_empty() || mu.is_distinct() || mu.len() < 3 {
        return false;
    }
    if mu.len() == 3 {
        return true;
    }
    let r = mu.smallest_repeated().expect("non-distinct");
    let m_r = mu.mult(r);
    let second_branch = |mu: &Partition, m_r: usize| -> bool {
        match mu.second_smallest_repeated() {
            Some(rr) => {
                let c = mu.count_geq(rr);
                (m_r + 1 == c || m_r == c) && c >= 3
            }
            None => false,
        }
    };
    if r == 1 {
        if m_r >= mu.count_gt(1) {
            return true;
        }
        return second_branch(mu, m_r);
    }
    if mu.len() < 5 {
        return false;
    }
    let taller = mu.count_gt(r);
    if m_r < taller {
        return second_branch(mu, m_r);
    }
    if m_r == taller {
        return match mu.next_larger(r) {
            Some(a) => mu.mult(a) > 1 && mu.count_geq(a) >= 3,
            None => false,
        };
    }
    let c = mu.count_geq(r);
    c % 2 == 1 && c >= 5
}

/// Every component predicate `mu` satisfies, in order B1..B5. On members of
/// `ou_ed` at most one holds; the verification suite asserts this.
pub(crate) fn components(mu: &Partition) -> Vec<&'static str> {
    let odd = mu.odd_sub();
    let even = mu.even_sub();
    let mut out = Vec::new();
    if even.is_empty() && mu.is_distinct() {
        out.push("B1");
    }
    if mu.len() == 1 && mu.parts()[0] % 2 == 0 {
        out.push("B2");
    }
    if even.len() == 1 && odd.len() >= 2 && odd.parts()[1..].windows(2).all(|w| w[0] > w[1]) {
        out.push("B3");
    }
    if even.is_empty()
        && !mu.is_distinct()
        && mu.len() >= 4
        && mu.len() % 2 == 0
        && mu.parts()[0] != mu.parts()[1]
        && mu.mult(1) + 2 == mu.count_gt(1)
        && mu.next_larger(1).is_some_and(|a| mu.mult(a) > 1)
    {
        out.push("B4");
    }
    if b5(mu) {
        out.push("B5");
    }
    out
}

pub(crate) fn image_component(mu: &Partition) -> Option<&'static str> {
    components(mu).into_iter().next()
}

pub(crate) fn invert(mu: &Partition, component: &str) -> Partition {
    let parts = mu.parts();
    match component {
        "B1" | "B2" => mu.clone(),
        "B3" => {
            let mut out = parts.to_vec();
            out[0] += 1;
            let last = out.len() - 1;
            out[last] -= 1;
            partition_from(out)
        }
        "B4" => {
            let m = mu.mult(1);
            let mut out = vec![parts[0] - 1];
            for &x in &parts[1..=m] {
                out.push(x + 1);
            }
            out.push(parts[m + 1]);
            out.push(1);
            partition_from(out)
        }
        _ => {
            // B5
            if mu.len() == 3 {
                return partition_from(vec![parts[0] + parts[2], parts[1]]);
            }
            let r = mu.smallest_repeated().expect("B5 has a repeat");
            let m_r = mu.mult(r);
            let taller = mu.count_gt(r);
            let q = if m_r < taller || (m_r == taller && r != 1) {
                let rr = mu.second_smallest_repeated().expect("B5 branch has a second repeat");
                mu.count_geq(rr) - 1
            } else {
                mu.count_geq(r) / 2
            };
            // the first q parts absorb one r each; q copies of r disappear
            let mut out: Vec<u32> = parts[..q].iter().map(|&x| x + r).collect();
            let mut rest = parts[q..].to_vec();
            for _ in 0..q {
                let idx = rest.iter().position(|&x| x == r).expect("q copies of r remain");
                rest.remove(idx);
            }
            out.extend(rest);
            partition_from(out)
        }
    }
}
