//! Weight-preserving (or weight-shifting) injections between partition
//! classes, their inverses, and exact image characterizations.
//!
//! Nine maps ([`MapId`]): the structural injections `phi1_dd`, `phi1_uu`,
//! `phi2`, `phi3`, `phi4`, `phi5` and the auxiliary maps `psi`, `f_shift`,
//! `bcn_append1`. Each map knows its domain and codomain class, its weight
//! shift `delta`, a case analysis recorded in a [`CaseTrace`], and an image
//! predicate producing an [`ImageWitness`]. Case dispatch evaluates every
//! case predicate and asserts exactly one fires, so mis-stated case
//! boundaries fail loudly instead of silently shadowing each other.

pub(crate) mod phi1;
pub(crate) mod phi2;
pub(crate) mod phi3;
pub(crate) mod phi4;
pub(crate) mod phi5;
pub(crate) mod small;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::classes::{enumerate_class, is_member, ClassSpec};
use crate::partition::Partition;

/// The witness component reported for partitions outside a map's image.
pub const NOT_IN_IMAGE: &str = "not in image";

/// Identifier of one of the nine maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MapId {
    /// Identity on single-parity partitions, otherwise a first/last block
    /// shift; distinct odd over distinct even → distinct even over distinct
    /// odd.
    #[serde(rename = "phi1_dd")]
    Phi1Dd,
    /// The same shift on the unrestricted classes.
    #[serde(rename = "phi1_uu")]
    Phi1Uu,
    /// Unrestricted even over distinct odd → unrestricted odd over distinct
    /// even, by a five-case rearrangement.
    #[serde(rename = "phi2")]
    Phi2,
    /// Distinct odd over unrestricted even → distinct even over unrestricted
    /// odd, by subtracting 1 everywhere and appending 1s.
    #[serde(rename = "phi3")]
    Phi3,
    /// Distinct even over distinct odd → distinct odd over unrestricted
    /// even, weight at least 8; not injective (see crate tests).
    #[serde(rename = "phi4")]
    Phi4,
    /// The overline classes: even weight 2n ≥ 6 → odd weight 2n+1.
    #[serde(rename = "phi5")]
    Phi5,
    /// Weight n → n+1 within `ou_eu`: append a 1, or grow the largest even
    /// part.
    #[serde(rename = "psi")]
    Psi,
    /// Weight n → n+2 within `ou_eu`: grow the largest part by 2.
    #[serde(rename = "f_shift")]
    FShift,
    /// Weight n → n+1 within `ed_ou`: append a 1.
    #[serde(rename = "bcn_append1")]
    BcnAppend1,
}

/// The case analysis recorded by [`MapId::apply`].
///
/// `k` is present exactly for `phi2` Case 5 and `phi4` Cases 3–4; `q`, `r`,
/// and `eta` exactly for `phi4` Case 3 (the division `λ_1 = q(2k+2) + r` and
/// the residual partition the case recurses on).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseTrace {
    pub map: MapId,
    #[serde(rename = "case")]
    pub case_label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<Partition>,
}

impl CaseTrace {
    pub(crate) fn new(map: MapId, case_label: &'static str) -> Self {
        CaseTrace { map, case_label: case_label.to_string(), k: None, q: None, r: None, eta: None }
    }
}

/// The image component a partition belongs to, or [`NOT_IN_IMAGE`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageWitness {
    pub map: MapId,
    pub component: String,
}

impl ImageWitness {
    /// True when the partition is in the map's image.
    pub fn in_image(&self) -> bool {
        self.component != NOT_IN_IMAGE
    }
}

/// Errors from applying or inverting a map.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    /// The input is not in the map's domain (wrong class, weight below the
    /// minimum, or odd weight where even is required).
    #[error("({partition}) is not in the domain of {map}")]
    DomainViolation { map: MapId, partition: Partition },
    /// The input is not in the map's image, so no preimage exists.
    #[error("({partition}) is not in the image of {map}")]
    NotInImage { map: MapId, partition: Partition },
}

impl MapId {
    /// All nine maps, in token order.
    pub const ALL: [MapId; 9] = [
        MapId::Phi1Dd,
        MapId::Phi1Uu,
        MapId::Phi2,
        MapId::Phi3,
        MapId::Phi4,
        MapId::Phi5,
        MapId::Psi,
        MapId::FShift,
        MapId::BcnAppend1,
    ];

    /// Canonical token, also the `Display`/serde form.
    pub fn token(self) -> &'static str {
        match self {
            MapId::Phi1Dd => "phi1_dd",
            MapId::Phi1Uu => "phi1_uu",
            MapId::Phi2 => "phi2",
            MapId::Phi3 => "phi3",
            MapId::Phi4 => "phi4",
            MapId::Phi5 => "phi5",
            MapId::Psi => "psi",
            MapId::FShift => "f_shift",
            MapId::BcnAppend1 => "bcn_append1",
        }
    }

    /// The domain class.
    pub fn domain(self) -> ClassSpec {
        let token = match self {
            MapId::Phi1Dd => "od_ed",
            MapId::Phi1Uu => "ou_eu",
            MapId::Phi2 => "eu_od",
            MapId::Phi3 => "od_eu",
            MapId::Phi4 => "ed_od",
            MapId::Phi5 => "bar-ou_eu",
            MapId::Psi | MapId::FShift => "ou_eu",
            MapId::BcnAppend1 => "ed_ou",
        };
        token.parse().expect("map domain token")
    }

    /// The codomain class.
    pub fn codomain(self) -> ClassSpec {
        let token = match self {
            MapId::Phi1Dd => "ed_od",
            MapId::Phi1Uu => "eu_ou",
            MapId::Phi2 => "ou_ed",
            MapId::Phi3 => "ed_ou",
            MapId::Phi4 => "od_eu",
            MapId::Phi5 => "bar-eu_ou",
            MapId::Psi | MapId::FShift => "ou_eu",
            MapId::BcnAppend1 => "ed_ou",
        };
        token.parse().expect("map codomain token")
    }

    /// Output weight minus input weight.
    pub fn delta(self) -> u64 {
        match self {
            MapId::Phi5 | MapId::Psi | MapId::BcnAppend1 => 1,
            MapId::FShift => 2,
            _ => 0,
        }
    }

    /// Least domain weight the map is defined on.
    pub fn min_weight(self) -> u64 {
        match self {
            MapId::Phi4 => 8,
            MapId::Phi5 => 6,
            MapId::FShift => 1,
            _ => 0,
        }
    }

    /// True when the domain is further restricted to even weights.
    pub fn even_weight_only(self) -> bool {
        matches!(self, MapId::Phi5)
    }

    /// Full domain test: class membership plus the weight restrictions.
    pub fn in_domain(self, lambda: &Partition) -> bool {
        lambda.weight() >= self.min_weight()
            && (!self.even_weight_only() || lambda.weight() % 2 == 0)
            && is_member(lambda, &self.domain())
    }

    /// The domain members of weight `n`, in enumeration order.
    pub fn domain_members(self, n: u64) -> Vec<Partition> {
        if n < self.min_weight() || (self.even_weight_only() && n % 2 == 1) {
            return Vec::new();
        }
        enumerate_class(n, &self.domain())
    }

    /// Applies the map, returning the image partition and the case fired.
    ///
    /// # Errors
    /// [`MapError::DomainViolation`] when `lambda` fails [`Self::in_domain`].
    pub fn apply(self, lambda: &Partition) -> Result<(Partition, CaseTrace), MapError> {
        if !self.in_domain(lambda) {
            return Err(MapError::DomainViolation { map: self, partition: lambda.clone() });
        }
        Ok(match self {
            MapId::Phi1Dd | MapId::Phi1Uu => phi1::apply(self, lambda),
            MapId::Phi2 => phi2::apply(lambda),
            MapId::Phi3 => phi3::apply(lambda),
            MapId::Phi4 => phi4::apply(lambda),
            MapId::Phi5 => phi5::apply(lambda),
            MapId::Psi => small::psi_apply(lambda),
            MapId::FShift => small::f_apply(lambda),
            MapId::BcnAppend1 => small::append1_apply(lambda),
        })
    }

    /// Total image test: names the unique characterization component `mu`
    /// satisfies, or reports [`NOT_IN_IMAGE`].
    pub fn image_membership(self, mu: &Partition) -> ImageWitness {
        let component = if is_member(mu, &self.codomain()) {
            match self {
                MapId::Phi1Dd => phi1::image_dd(mu),
                MapId::Phi1Uu => phi1::image_uu(mu),
                MapId::Phi2 => phi2::image_component(mu),
                MapId::Phi3 => phi3::image_component(mu),
                MapId::Phi4 => phi4::image_component(mu),
                MapId::Phi5 => phi5::image_component(mu),
                MapId::Psi => small::psi_image_component(mu),
                MapId::FShift => small::f_image_component(mu),
                MapId::BcnAppend1 => small::append1_image_component(mu),
            }
        } else {
            None
        };
        ImageWitness { map: self, component: component.unwrap_or(NOT_IN_IMAGE).to_string() }
    }

    /// Inverts the map on its image.
    ///
    /// # Errors
    /// [`MapError::NotInImage`] when `mu` fails [`Self::image_membership`].
    pub fn invert(self, mu: &Partition) -> Result<Partition, MapError> {
        let witness = self.image_membership(mu);
        if !witness.in_image() {
            return Err(MapError::NotInImage { map: self, partition: mu.clone() });
        }
        let component = witness.component.as_str();
        Ok(match self {
            MapId::Phi1Dd | MapId::Phi1Uu => phi1::invert(mu),
            MapId::Phi2 => phi2::invert(mu, component),
            MapId::Phi3 => phi3::invert(mu, component),
            MapId::Phi4 => phi4::invert(mu, component),
            MapId::Phi5 => phi5::invert(mu, component),
            MapId::Psi => small::psi_invert(mu, component),
            MapId::FShift => small::f_invert(mu),
            MapId::BcnAppend1 => small::append1_invert(mu),
        })
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for MapId {
    type Err = String;

    /// Parses the canonical token; the shorthand aliases `phi1dd`, `phi1uu`,
    /// `f`, and `append1` are also accepted.
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "phi1_dd" | "phi1dd" => Ok(MapId::Phi1Dd),
            "phi1_uu" | "phi1uu" => Ok(MapId::Phi1Uu),
            "phi2" => Ok(MapId::Phi2),
            "phi3" => Ok(MapId::Phi3),
            "phi4" => Ok(MapId::Phi4),
            "phi5" => Ok(MapId::Phi5),
            "psi" => Ok(MapId::Psi),
            "f_shift" | "f" => Ok(MapId::FShift),
            "bcn_append1" | "append1" => Ok(MapId::BcnAppend1),
            _ => Err(format!("unknown map token {s:?}")),
        }
    }
}

/// All members of `ed_od` at weight `n` with both parities present whose
/// smallest even part exceeds the largest odd part by exactly 1.
///
/// Their count equals count(ed_od, n) − count(od_ed, n); the list is empty
/// for n ≤ 10 and nonempty from n = 11 on.
pub fn excess_witnesses(n: u64) -> Vec<Partition> {
    let ed_od: ClassSpec = "ed_od".parse().expect("class token");
    enumerate_class(n, &ed_od)
        .into_iter()
        .filter(|lambda| {
            let odd = lambda.odd_sub();
            let even = lambda.even_sub();
            match (odd.parts().first(), even.parts().last()) {
                (Some(&odd_max), Some(&even_min)) => even_min == odd_max + 1,
                _ => false,
            }
        })
        .collect()
}

/// Returns the unique fired case label, panicking when zero or several
/// predicates hold — the case boundaries are meant to tile the domain.
pub(crate) fn dispatch_case(cases: &[(&'static str, bool)]) -> &'static str {
    let mut fired = cases.iter().filter(|(_, hit)| *hit).map(|(label, _)| *label);
    let first = fired.next().expect("no case predicate fired");
    if let Some(second) = fired.next() {
        panic!("case predicates overlap: {first} and {second}");
    }
    first
}

/// Re-canonicalizes parts produced by a map step.
pub(crate) fn partition_from(parts: Vec<u32>) -> Partition {
    Partition::new(parts).expect("map produced a zero part")
}

/// Adds `first_delta` to each of the first `m` parts and `last_delta` to
/// each of the last `m` parts, then re-canonicalizes.
pub(crate) fn shift_first_last(
    p: &Partition,
    m: usize,
    first_delta: i64,
    last_delta: i64,
) -> Partition {
    let len = p.len();
    assert!(m <= len, "shift block exceeds partition length");
    let mut parts: Vec<i64> = p.parts().iter().map(|&v| i64::from(v)).collect();
    for v in parts.iter_mut().take(m) {
        *v += first_delta;
    }
    for v in parts[len - m..].iter_mut() {
        *v += last_delta;
    }
    partition_from(
        parts
            .into_iter()
            .map(|v| u32::try_from(v).expect("map produced a negative part"))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().expect("test partition")
    }

    #[test]
    fn tokens_round_trip_and_aliases_parse() {
        for map in MapId::ALL {
            assert_eq!(map.token().parse::<MapId>().unwrap(), map);
            assert_eq!(map.to_string(), map.token());
        }
        assert_eq!("phi1dd".parse::<MapId>().unwrap(), MapId::Phi1Dd);
        assert_eq!("phi1uu".parse::<MapId>().unwrap(), MapId::Phi1Uu);
        assert_eq!("f".parse::<MapId>().unwrap(), MapId::FShift);
        assert_eq!("append1".parse::<MapId>().unwrap(), MapId::BcnAppend1);
        assert!("phi6".parse::<MapId>().is_err());
        assert_eq!(serde_json::to_string(&MapId::Phi1Dd).unwrap(), "\"phi1_dd\"");
    }

    #[test]
    fn metadata_table() {
        let rows: [(MapId, &str, &str, u64, u64); 9] = [
            (MapId::Phi1Dd, "od_ed", "ed_od", 0, 0),
            (MapId::Phi1Uu, "ou_eu", "eu_ou", 0, 0),
            (MapId::Phi2, "eu_od", "ou_ed", 0, 0),
            (MapId::Phi3, "od_eu", "ed_ou", 0, 0),
            (MapId::Phi4, "ed_od", "od_eu", 0, 8),
            (MapId::Phi5, "bar-ou_eu", "bar-eu_ou", 1, 6),
            (MapId::Psi, "ou_eu", "ou_eu", 1, 0),
            (MapId::FShift, "ou_eu", "ou_eu", 2, 1),
            (MapId::BcnAppend1, "ed_ou", "ed_ou", 1, 0),
        ];
        for (map, dom, cod, delta, min_wt) in rows {
            assert_eq!(map.domain().to_string(), dom);
            assert_eq!(map.codomain().to_string(), cod);
            assert_eq!(map.delta(), delta);
            assert_eq!(map.min_weight(), min_wt);
        }
        assert!(MapId::Phi5.even_weight_only());
        assert!(!MapId::Phi4.even_weight_only());
    }

    #[test]
    fn domain_violations_are_rejected() {
        // wrong class
        let err = MapId::Phi2.apply(&p("5 4")).unwrap_err();
        assert!(matches!(err, MapError::DomainViolation { map: MapId::Phi2, .. }));
        // below the weight floor
        let err = MapId::Phi4.apply(&p("6 1")).unwrap_err();
        assert!(matches!(err, MapError::DomainViolation { map: MapId::Phi4, .. }));
        // odd weight where even is required
        let err = MapId::Phi5.apply(&p("5 5 4 4 3")).unwrap_err();
        assert!(matches!(err, MapError::DomainViolation { map: MapId::Phi5, .. }));
        // empty partition is rejected by f_shift only
        assert!(MapId::FShift.apply(&Partition::empty()).is_err());
        assert!(MapId::Psi.apply(&Partition::empty()).is_ok());
    }

    #[test]
    fn weight_law_codomain_and_roundtrip_small_weights() {
        for map in MapId::ALL {
            for n in 0..=14u64 {
                for lambda in map.domain_members(n) {
                    let (mu, trace) = map.apply(&lambda).expect("domain member");
                    assert_eq!(mu.weight(), n + map.delta(), "{map} weight law on {lambda:?}");
                    assert!(
                        is_member(&mu, &map.codomain()),
                        "{map} output {mu:?} outside codomain"
                    );
                    assert_eq!(trace.map, map);
                    let witness = map.image_membership(&mu);
                    assert!(witness.in_image(), "{map}({lambda:?}) = {mu:?} missed by image");
                    assert_eq!(map.invert(&mu).unwrap(), lambda, "{map} roundtrip on {lambda:?}");
                }
            }
        }
    }

    #[test]
    fn injective_at_small_weights() {
        for map in MapId::ALL {
            for n in 0..=14u64 {
                let mut images: Vec<Partition> = map
                    .domain_members(n)
                    .iter()
                    .map(|lambda| map.apply(lambda).unwrap().0)
                    .collect();
                let total = images.len();
                images.sort();
                images.dedup();
                assert_eq!(images.len(), total, "{map} collides at weight {n}");
            }
        }
    }

    #[test]
    fn trace_field_presence_follows_the_contract() {
        for map in MapId::ALL {
            for n in 0..=14u64 {
                for lambda in map.domain_members(n) {
                    let (_, trace) = map.apply(&lambda).unwrap();
                    let expect_k = (map == MapId::Phi2 && trace.case_label == "Case 5")
                        || (map == MapId::Phi4
                            && (trace.case_label == "Case 3" || trace.case_label == "Case 4"));
                    let expect_qr_eta = map == MapId::Phi4 && trace.case_label == "Case 3";
                    assert_eq!(trace.k.is_some(), expect_k, "{map} {trace:?}");
                    assert_eq!(trace.q.is_some(), expect_qr_eta, "{map} {trace:?}");
                    assert_eq!(trace.r.is_some(), expect_qr_eta, "{map} {trace:?}");
                    assert_eq!(trace.eta.is_some(), expect_qr_eta, "{map} {trace:?}");
                }
            }
        }
    }

    #[test]
    fn trace_serializes_with_case_key() {
        let (_, trace) = MapId::Phi2.apply(&p("8 5")).unwrap();
        let json = serde_json::to_value(&trace).unwrap();
        assert_eq!(json["map"], "phi2");
        assert_eq!(json["case"], "Case 5");
        assert_eq!(json["k"], 3);
        assert!(json.get("q").is_none());
        assert!(json.get("eta").is_none());
    }

    #[test]
    fn invert_outside_image_reports_not_in_image() {
        let mu = p("3 2"); // in ou_ed, but not reachable under phi2
        let witness = MapId::Phi2.image_membership(&mu);
        assert!(!witness.in_image());
        assert_eq!(witness.component, NOT_IN_IMAGE);
        let err = MapId::Phi2.invert(&mu).unwrap_err();
        assert!(matches!(err, MapError::NotInImage { map: MapId::Phi2, .. }));
    }

    #[test]
    fn excess_witnesses_goldens() {
        assert!(excess_witnesses(10).is_empty());
        assert!(excess_witnesses(12).contains(&p("6 5 1")));
        assert!(excess_witnesses(13).contains(&p("6 4 3")));
        for n in 0..=30u64 {
            let lhs = crate::classes::count_class(n, &"ed_od".parse().unwrap())
                - crate::classes::count_class(n, &"od_ed".parse().unwrap());
            assert_eq!(lhs, excess_witnesses(n).len() as u64, "excess identity at {n}");
        }
    }
}
