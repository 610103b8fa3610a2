//! Golden tables shared by the integration tests.
// Each integration test crate compiles this module separately and uses only
// a subset of it.
#![allow(dead_code)]

use parity_partitions::classes;
use parity_partitions::{MapId, Partition};

/// Parse a partition literal, panicking with the offending text on error.
pub fn p(s: &str) -> Partition {
    s.parse().unwrap_or_else(|e| panic!("bad partition literal {s:?}: {e}"))
}

/// Resolve a golden-table map token; `"phi1"` dispatches to the distinct-parts
/// half when the input lies in its domain and to the unrestricted half
/// otherwise.
pub fn resolve_map(token: &str, input: &Partition) -> MapId {
    if token == "phi1" {
        if classes::is_member(input, &MapId::Phi1Dd.domain()) {
            MapId::Phi1Dd
        } else {
            MapId::Phi1Uu
        }
    } else {
        token.parse().unwrap_or_else(|e| panic!("bad map token {token:?}: {e}"))
    }
}

/// (map token, input, expected image) for every worked forward example.
pub const FORWARD_GOLDENS: &[(&str, &str, &str)] = &[
    ("phi1", "17 12 6", "18 12 5"),
    ("phi1", "11 9 9 6 4 2 2", "12 10 10 6 3 1 1"),
    ("phi1", "11 9 9 7 4 2 2", "12 10 10 7 3 1 1"),
    ("phi2", "15 1", "15 1"),
    ("phi2", "16", "16"),
    ("phi2", "8 5 3", "7 5 4"),
    ("phi2", "8 4 3 1", "9 3 3 1"),
    ("phi2", "8 5", "5 5 3"),
    ("phi2", "8 6 2", "7 5 1^4"),
    ("phi2", "8 6 6 4 2 1", "7 5 5 3 1^7"),
    ("phi2", "8 6 6 5 3 1", "7 5 5 5 3 1^4"),
    ("phi2", "10 8 8 5 3 1", "7 5 5 5 3 3 3 3 1"),
    ("phi2", "10 8 8 5 1", "7 5 5 5 3 3 3 1"),
    ("phi2", "16 14 10 10 7 5 3 1", "13 11 7 7 7 5 3^5 1"),
    ("phi2", "16 14 10 10 7 5 1", "13 11 7 7 7 5 3^4 1"),
    ("phi2", "16 14 10 10 3 1", "13 11 7 7 3^5 1"),
    ("phi2", "16 14 10 10 5 3 1", "11 9 5^7 3 1"),
    ("phi2", "2 1", "1 1 1"),
    ("phi3", "10 8 2 2", "9 7 1^6"),
    ("phi3", "15 1", "15 1"),
    ("phi3", "6 4 2", "6 4 2"),
    ("phi4", "16 12 7", "17 12 6"),
    ("phi4", "20 16 12 7 5 1", "17 12 6^5 2"),
    ("phi4", "20 16 12 6 5 1", "16 12 6 6 2^10"),
    ("phi4", "8 1", "5 2 2"),
    ("phi4", "8 4 1", "5 2^4"),
    ("phi4", "12 10 2 1", "13 2^6"),
    ("phi4", "12 10 8 1", "13 10 2^4"),
    ("phi4", "12 10 8 2 1", "11 8 2^7"),
    ("phi5", "7 7 5 5", "8 7 5 5"),
    ("phi5", "12 6 6", "12 6 6 1"),
    ("phi5", "11 11 9 9 8 2 2", "22 8 8 7 1^8"),
    ("psi", "5 4 2", "5 5 2"),
    ("psi", "3 1", "3 1 1"),
    ("f_shift", "3 1", "5 1"),
    ("bcn_append1", "6", "6 1"),
];

/// (map, image, preimage) for the worked inverse examples.
pub const INVERSE_GOLDENS: &[(MapId, &str, &str)] = &[
    (MapId::Phi3, "9 7 1^6", "10 8 2 2"),
    (MapId::Phi2, "5 5 3", "8 5"),
    (MapId::Phi4, "5 2 2", "8 1"),
    (MapId::Phi5, "22 8 8 7 1^8", "11 11 9 9 8 2 2"),
];

/// Run every forward golden, panicking on the first mismatch.
pub fn assert_forward_goldens() {
    for (token, input, expected) in FORWARD_GOLDENS {
        let lambda = p(input);
        let map = resolve_map(token, &lambda);
        let (image, _) = map
            .apply(&lambda)
            .unwrap_or_else(|e| panic!("{} rejected {input:?}: {e}", map.token()));
        assert_eq!(
            image,
            p(expected),
            "{} applied to ({input}) should give ({expected})",
            map.token()
        );
    }
}

/// Run every inverse golden, checking the preimage and the forward round-trip.
pub fn assert_inverse_goldens() {
    for (map, image, preimage) in INVERSE_GOLDENS {
        let got = map
            .invert(&p(image))
            .unwrap_or_else(|e| panic!("{} could not invert ({image}): {e}", map.token()));
        assert_eq!(got, p(preimage), "{} inverse of ({image})", map.token());
        let (forward, _) = map.apply(&got).expect("preimage must lie in the domain");
        assert_eq!(forward, p(image), "{} forward of recovered preimage", map.token());
    }
}
