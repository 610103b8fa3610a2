//! Exhaustive desk-scale verification of the counting relations, producing
//! machine-readable reports.
//!
//! Every check scans a weight range `[0, n_max]` (or an index range for the
//! overline conjecture), records violations as counterexamples, and derives
//! the *empirical threshold*: the least bound from which the relation holds
//! for the rest of the tested range. A check fails only when a violation
//! lands at or beyond its *claimed threshold*; checks without a claimed
//! threshold are report-only and always pass. Reports are deterministic:
//! rerunning a check with the same arguments yields byte-identical JSON.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classes::{self, ClassSpec};
use crate::maps::{self, phi2, phi4, phi5, MapId};
use crate::partition::Partition;

/// Default weight bound for count-only checks (chain comparisons, strict
/// inequalities, excess, monotonicity).
pub const DEFAULT_COUNT_NMAX: u64 = 50;
/// Default weight bound for element-wise class inclusions.
pub const DEFAULT_INCLUSION_NMAX: u64 = 40;
/// Default weight bound for image-exactness checks.
pub const DEFAULT_IMAGE_NMAX: u64 = 36;
/// Default index bound for the overline conjecture.
pub const DEFAULT_CONJECTURE_NMAX: u64 = 30;
/// Default weight bound for the nonempty-with-a-repeat checks.
pub const DEFAULT_ND_NMAX: u64 = 40;

/// Default round-trip bound per map: 50 for the cheap domains, 40 for the
/// rest.
pub fn default_roundtrip_nmax(map: MapId) -> u64 {
    match map {
        MapId::Phi1Dd | MapId::Phi1Uu | MapId::Phi3 | MapId::Phi5 | MapId::Psi => 50,
        _ => 40,
    }
}

const COUNTEREXAMPLE_CAP: usize = 10;

/// How two count sequences are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    StrictLess,
    LessEqual,
    Equal,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::StrictLess => "<",
            Relation::LessEqual => "<=",
            Relation::Equal => "=",
        }
    }

    fn holds(self, a: u64, b: u64) -> bool {
        match self {
            Relation::StrictLess => a < b,
            Relation::LessEqual => a <= b,
            Relation::Equal => a == b,
        }
    }
}

/// Which weights a comparison ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityFilter {
    All,
    Even,
    Odd,
}

impl ParityFilter {
    fn admits(self, n: u64) -> bool {
        match self {
            ParityFilter::All => true,
            ParityFilter::Even => n % 2 == 0,
            ParityFilter::Odd => n % 2 == 1,
        }
    }
}

/// A comparison between two class-count sequences, evaluated pointwise as
/// `count(lhs, n) REL count(rhs, n + shift)` over admissible `n`.
///
/// Invariant: `lhs != rhs` unless `shift > 0` (a self-comparison is only
/// meaningful across different weights).
#[derive(Clone, Debug)]
pub struct InequalitySpec {
    pub lhs: ClassSpec,
    pub rhs: ClassSpec,
    pub relation: Relation,
    /// The claimed bound from which the relation is asserted; `None` makes
    /// the check report-only.
    pub claimed_threshold: Option<u64>,
    pub parity_filter: ParityFilter,
    /// Offset added to the right-hand weight.
    pub shift: u64,
}

impl InequalitySpec {
    /// Strict unshifted comparison between two distinct classes.
    ///
    /// # Panics
    /// Panics when a token does not name a class.
    pub fn strict(lhs: &str, rhs: &str, claimed_threshold: Option<u64>) -> Self {
        Self {
            lhs: class(lhs),
            rhs: class(rhs),
            relation: Relation::StrictLess,
            claimed_threshold,
            parity_filter: ParityFilter::All,
            shift: 0,
        }
    }

    /// Comparison of one class against itself at a shifted weight.
    ///
    /// # Panics
    /// Panics when the token does not name a class or `shift` is zero.
    pub fn shifted(
        token: &str,
        relation: Relation,
        shift: u64,
        parity_filter: ParityFilter,
        claimed_threshold: Option<u64>,
    ) -> Self {
        assert!(shift > 0, "a self-comparison requires a shift");
        Self {
            lhs: class(token),
            rhs: class(token),
            relation,
            claimed_threshold,
            parity_filter,
            shift,
        }
    }

    fn validate(&self) {
        assert!(
            self.lhs != self.rhs || self.shift > 0,
            "lhs equals rhs without a shift"
        );
    }

    /// Deterministic check name derived from the comparison.
    pub fn name(&self) -> String {
        let rel = self.relation.symbol();
        let mut name = if self.shift == 0 {
            format!("count: {} {} {}", self.lhs, rel, self.rhs)
        } else {
            format!("count: {}(n) {} {}(n+{})", self.lhs, rel, self.rhs, self.shift)
        };
        match self.parity_filter {
            ParityFilter::All => {}
            ParityFilter::Even => name.push_str(" [even n]"),
            ParityFilter::Odd => name.push_str(" [odd n]"),
        }
        if let Some(c) = self.claimed_threshold {
            name.push_str(&format!(" [n0={c}]"));
        }
        name
    }
}

/// Outcome of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One violation found by a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: u64,
    pub detail: String,
}

/// Machine-readable result of one check.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "check")]
    pub check_name: String,
    pub range: [u64; 2],
    pub status: Status,
    /// Least bound from which the relation held over the tested range.
    pub empirical_threshold: Option<u64>,
    /// First violations in scan order, capped at ten.
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Ascending scan that keeps the first violations and the worst one.
struct Scan {
    kept: Vec<Counterexample>,
    max_violation: Option<u64>,
}

impl Scan {
    fn new() -> Self {
        Scan { kept: Vec::new(), max_violation: None }
    }

    fn record(&mut self, n: u64, detail: String) {
        if self.kept.len() < COUNTEREXAMPLE_CAP {
            self.kept.push(Counterexample { n, detail });
        }
        self.max_violation = Some(self.max_violation.map_or(n, |m| m.max(n)));
    }

    fn finish(self, check_name: String, range: [u64; 2], claimed: Option<u64>) -> VerificationReport {
        let empirical = match self.max_violation {
            None => range[0],
            Some(m) => m + 1,
        };
        let status = match (claimed, self.max_violation) {
            (Some(c), Some(m)) if m >= c => Status::Fail,
            _ => Status::Pass,
        };
        VerificationReport {
            check_name,
            range,
            status,
            empirical_threshold: Some(empirical),
            counterexamples: self.kept,
        }
    }
}

fn class(token: &str) -> ClassSpec {
    token.parse().expect("valid class token")
}

/// Compares two count sequences pointwise over `[0, n_max]`.
///
/// # Panics
/// Panics when `n_max` is below the claimed threshold or `spec` violates
/// its own invariant.
pub fn check_inequality(spec: &InequalitySpec, n_max: u64) -> VerificationReport {
    spec.validate();
    if let Some(c) = spec.claimed_threshold {
        assert!(n_max >= c, "n_max is below the claimed threshold");
    }
    let mut scan = Scan::new();
    for n in 0..=n_max {
        if !spec.parity_filter.admits(n) {
            continue;
        }
        let a = classes::count_class(n, &spec.lhs);
        let b = classes::count_class(n + spec.shift, &spec.rhs);
        if !spec.relation.holds(a, b) {
            scan.record(n, format!("counts {a} vs {b}"));
        }
    }
    scan.finish(spec.name(), [0, n_max], spec.claimed_threshold)
}

/// Checks element-wise that every member of `sub` lies in `sup`.
pub fn check_inclusion(sub: &ClassSpec, sup: &ClassSpec, n_max: u64) -> VerificationReport {
    let mut scan = Scan::new();
    for n in 0..=n_max {
        for lambda in classes::enumerate_class(n, sub) {
            if !classes::is_member(&lambda, sup) {
                scan.record(n, format!("({lambda}) escapes {sup}"));
            }
        }
    }
    scan.finish(format!("inclusion: {sub} within {sup}"), [0, n_max], Some(0))
}

const CHAIN: [&str; 8] = [
    "od_ed", "ed_od", "eu_od", "od_eu", "ou_ed", "ou_eu", "ed_ou", "eu_ou",
];

/// Requires all seven strict comparisons along the count chain at once and
/// records the least weight from which they hold simultaneously.
pub fn check_chain_simultaneous(n_max: u64) -> VerificationReport {
    let chain: Vec<ClassSpec> = CHAIN.iter().map(|t| class(t)).collect();
    let mut scan = Scan::new();
    for n in 0..=n_max {
        let counts: Vec<u64> = chain.iter().map(|c| classes::count_class(n, c)).collect();
        let broken: Vec<String> = (0..CHAIN.len() - 1)
            .filter(|&i| counts[i] >= counts[i + 1])
            .map(|i| format!("{}={} !< {}={}", CHAIN[i], counts[i], CHAIN[i + 1], counts[i + 1]))
            .collect();
        if !broken.is_empty() {
            scan.record(n, broken.join("; "));
        }
    }
    scan.finish(
        "chain: seven simultaneous strict comparisons".into(),
        [0, n_max],
        None,
    )
}

/// Applies the map to every domain member of every weight up to `n_max` and
/// requires the weight law and `invert(apply(lambda)) == lambda`.
pub fn check_roundtrip(map: MapId, n_max: u64) -> VerificationReport {
    let mut scan = Scan::new();
    for n in 0..=n_max {
        for lambda in map.domain_members(n) {
            let (mu, _) = map.apply(&lambda).expect("domain member is accepted");
            if mu.weight() != n + map.delta() {
                scan.record(n, format!("weight law broken: ({lambda}) -> ({mu})"));
                continue;
            }
            match map.invert(&mu) {
                Err(_) => {
                    scan.record(n, format!("({lambda}) -> ({mu}) is not recognized as image"));
                }
                Ok(back) => {
                    if back != lambda {
                        scan.record(n, format!("({lambda}) -> ({mu}) -> ({back})"));
                    }
                }
            }
        }
    }
    scan.finish(format!("roundtrip: {map}"), [0, n_max], Some(0))
}

/// Claimed non-image members of the codomain at the given weight.
fn witness_family(map: MapId, w: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let w32 = match u32::try_from(w) {
        Ok(v) => v,
        Err(_) => return out,
    };
    match map {
        MapId::Phi1Uu => {
            if w >= 3 {
                let mut parts = vec![2u32];
                parts.extend(std::iter::repeat(1).take(w as usize - 2));
                out.push(Partition::new(parts).expect("witness"));
            }
        }
        MapId::Phi2 => {
            if w >= 5 {
                out.push(Partition::new(vec![w32 - 2, 2]).expect("witness"));
            }
        }
        MapId::Phi3 => {
            if w == 2 {
                out.push(Partition::new(vec![1, 1]).expect("witness"));
            } else if w >= 3 && w % 2 == 1 {
                out.push(Partition::new(vec![w32 - 1, 1]).expect("witness"));
            } else if w >= 4 {
                out.push(Partition::new(vec![w32 - 2, 1, 1]).expect("witness"));
            }
        }
        MapId::Phi4 => {
            if w >= 8 && w % 2 == 0 {
                out.push(Partition::new(vec![w32 - 4, 2, 2]).expect("witness"));
            }
            if w % 4 == 1 && w >= 9 {
                let k = (w32 - 1) / 4;
                out.push(Partition::new(vec![2 * k + 1, 2 * k]).expect("witness"));
            }
            if w % 4 == 3 && w >= 11 {
                let k = (w32 - 3) / 4;
                out.push(Partition::new(vec![2 * k + 1, 2 * k, 2]).expect("witness"));
            }
        }
        MapId::Phi5 => {
            if w % 4 == 1 && w >= 9 {
                out.push(Partition::new(vec![w32 - 5, 1, 1, 1, 1, 1]).expect("witness"));
            }
            if w % 4 == 3 && w >= 7 {
                out.push(Partition::new(vec![w32 - 3, 1, 1, 1]).expect("witness"));
            }
        }
        _ => {}
    }
    out
}

fn component_overlap(map: MapId, mu: &Partition) -> usize {
    match map {
        MapId::Phi2 => phi2::components(mu).len(),
        MapId::Phi4 => phi4::components(mu).len(),
        MapId::Phi5 => phi5::components(mu).len(),
        _ => 0,
    }
}

/// Compares the forward image against the image description at every weight
/// up to `n_max`; also checks component disjointness and that each claimed
/// non-image witness stays outside.
pub fn check_image(map: MapId, n_max: u64) -> VerificationReport {
    let codomain = map.codomain();
    let mut scan = Scan::new();
    for w in 0..=n_max {
        let mut forward = BTreeSet::new();
        if w >= map.delta() {
            for lambda in map.domain_members(w - map.delta()) {
                forward.insert(map.apply(&lambda).expect("domain member is accepted").0);
            }
        }
        for mu in classes::enumerate_class(w, &codomain) {
            let described = map.image_membership(&mu).in_image();
            let reached = forward.contains(&mu);
            if described != reached {
                let verdict = if reached {
                    "is reached but the description excludes it"
                } else {
                    "matches the description but is never reached"
                };
                scan.record(w, format!("({mu}) {verdict}"));
            }
            let overlap = component_overlap(map, &mu);
            if overlap > 1 {
                scan.record(w, format!("({mu}) satisfies {overlap} image components"));
            }
            if map == MapId::Phi4 && phi4::c5_aggregate(&mu) != phi4::c5_subcase(&mu).is_some() {
                scan.record(w, format!("({mu}) aggregate and subcase descriptions disagree"));
            }
        }
        if map == MapId::Phi1Dd && w == 10 {
            // at this weight the map is onto: the image is the whole codomain
            let total = classes::count_class(w, &codomain) as usize;
            if forward.len() != total {
                scan.record(w, format!("image covers {} of {total} codomain members", forward.len()));
            }
        }
        for witness in witness_family(map, w) {
            if !classes::is_member(&witness, &codomain) {
                scan.record(w, format!("claimed witness ({witness}) is not in the codomain"));
            } else if map.image_membership(&witness).in_image() {
                scan.record(w, format!("claimed witness ({witness}) is inside the image"));
            }
        }
    }
    scan.finish(format!("image: {map}"), [0, n_max], Some(0))
}

/// A family member with the tight gap, used to show the excess is positive
/// from weight 11 on. `None` below weight 11.
pub fn excess_family_member(n: u64) -> Option<Partition> {
    if n < 11 {
        return None;
    }
    let n32 = u32::try_from(n).ok()?;
    let parts = match n32 % 4 {
        0 => vec![n32 / 2, n32 / 2 - 1, 1],
        1 => match n32 {
            13 => vec![6, 4, 3],
            17 => vec![10, 4, 3],
            _ => vec![(n32 - 5) / 2, (n32 - 7) / 2, 5, 1],
        },
        2 => vec![n32 / 2 - 1, n32 / 2 - 2, 3],
        _ => vec![(n32 + 1) / 2, (n32 - 1) / 2],
    };
    Some(Partition::new(parts).expect("family member"))
}

/// Confirms that the count difference `ed_od - od_ed` equals the number of
/// tight-gap witnesses at every weight, and that a family witness exists
/// from weight 11 on.
pub fn check_excess(n_max: u64) -> VerificationReport {
    let ed_od = class("ed_od");
    let od_ed = class("od_ed");
    let mut scan = Scan::new();
    for n in 0..=n_max {
        let diff = classes::count_class(n, &ed_od) as i64 - classes::count_class(n, &od_ed) as i64;
        let witnesses = maps::excess_witnesses(n);
        if diff != witnesses.len() as i64 {
            scan.record(n, format!("difference {diff} but {} witnesses", witnesses.len()));
        }
        if let Some(member) = excess_family_member(n) {
            if !witnesses.contains(&member) {
                scan.record(n, format!("family member ({member}) is not a witness"));
            }
        }
    }
    scan.finish(
        "excess: ed_od over od_ed equals the tight-gap witnesses".into(),
        [0, n_max],
        Some(0),
    )
}

fn conjecture_complement_witness(w: u64) -> Partition {
    let w32 = u32::try_from(w).expect("weight fits u32");
    if w % 4 == 1 {
        Partition::new(vec![w32 - 5, 1, 1, 1, 1, 1]).expect("witness")
    } else {
        Partition::new(vec![w32 - 3, 1, 1, 1]).expect("witness")
    }
}

/// Verifies `count(bar-ou_eu, 2n) < count(bar-eu_ou, 2n+1)` for indices
/// `3 <= n <= n_max` (indices 1 and 2 are reported but not asserted), and
/// re-derives each strict inequality structurally: the weight-raising map
/// round-trips, its image matches the description, and the complement holds
/// a named witness.
pub fn check_conjecture(n_max: u64) -> VerificationReport {
    let n_hi = n_max.max(3);
    let bar_low = class("bar-ou_eu");
    let bar_high = class("bar-eu_ou");
    let mut scan = Scan::new();
    for idx in 1..=n_hi {
        let lhs = classes::count_class(2 * idx, &bar_low);
        let rhs = classes::count_class(2 * idx + 1, &bar_high);
        if lhs >= rhs {
            scan.record(idx, format!("counts {lhs} vs {rhs}"));
        }
        if idx < 3 {
            continue;
        }
        let domain = MapId::Phi5.domain_members(2 * idx);
        let mut forward = BTreeSet::new();
        for lambda in &domain {
            let (mu, _) = MapId::Phi5.apply(lambda).expect("domain member is accepted");
            match MapId::Phi5.invert(&mu) {
                Ok(back) if back == *lambda => {}
                _ => scan.record(idx, format!("round-trip failed at ({lambda})")),
            }
            forward.insert(mu);
        }
        if forward.len() != domain.len() {
            scan.record(idx, "the map collides on its domain".into());
        }
        let codomain_members = classes::enumerate_class(2 * idx + 1, &bar_high);
        let described: BTreeSet<&Partition> = codomain_members
            .iter()
            .filter(|m| MapId::Phi5.image_membership(m).in_image())
            .collect();
        if described.len() != forward.len() || !described.iter().all(|m| forward.contains(*m)) {
            scan.record(idx, "the image description does not match the forward image".into());
        }
        let witness = conjecture_complement_witness(2 * idx + 1);
        if !classes::is_member(&witness, &bar_high) {
            scan.record(idx, format!("complement witness ({witness}) is not in the codomain"));
        } else if MapId::Phi5.image_membership(&witness).in_image() {
            scan.record(idx, format!("complement witness ({witness}) is inside the image"));
        }
    }
    scan.finish(
        "conjecture: bar-ou_eu(2n) < bar-eu_ou(2n+1)".into(),
        [1, n_hi],
        Some(3),
    )
}

const ND_IDENTITIES: [(&str, &str, &str); 7] = [
    ("eu_ou", "eu_od", "eu_ond"),
    ("ou_eu", "od_eu", "ond_eu"),
    ("ou_eu", "ou_ed", "ou_end"),
    ("eu_od", "ed_od", "end_od"),
    ("ou_ed", "od_ed", "ond_ed"),
    ("od_eu", "od_ed", "od_end"),
    ("eu_ou", "ed_ou", "end_ou"),
];

/// Checks the seven exact difference identities that express each
/// nonempty-with-a-repeat count as an unrestricted count minus a distinct
/// count.
pub fn check_nd_identities(n_max: u64) -> VerificationReport {
    let triples: Vec<(ClassSpec, ClassSpec, ClassSpec)> = ND_IDENTITIES
        .iter()
        .map(|(a, b, c)| (class(a), class(b), class(c)))
        .collect();
    let mut scan = Scan::new();
    for n in 0..=n_max {
        for (i, (a, b, c)) in triples.iter().enumerate() {
            let lhs = classes::count_class(n, a) as i64 - classes::count_class(n, b) as i64;
            let rhs = classes::count_class(n, c) as i64;
            if lhs != rhs {
                let (ta, tb, tc) = ND_IDENTITIES[i];
                scan.record(n, format!("{ta} - {tb} = {lhs} but {tc} = {rhs}"));
            }
        }
    }
    scan.finish("nd: seven difference identities".into(), [0, n_max], Some(0))
}

/// Reports the empirical threshold of each strict comparison between
/// nonempty-with-a-repeat counts; nothing is asserted.
pub fn check_nd_inequalities(n_max: u64) -> Vec<VerificationReport> {
    [
        ("ou_end", "ond_eu"),
        ("ond_eu", "eu_ond"),
        ("end_od", "od_end"),
        ("od_end", "ond_ed"),
    ]
    .iter()
    .map(|(l, r)| check_inequality(&InequalitySpec::strict(l, r, None), n_max))
    .collect()
}

/// Checks the four monotonicity facts: growth by 2 everywhere and by 1 from
/// odd weights for `ou_eu`, strict growth for `ed_ou`, and the even-to-odd
/// equality for `ou_eu`.
pub fn check_monotone(n_max: u64) -> Vec<VerificationReport> {
    let specs = [
        InequalitySpec::shifted("ou_eu", Relation::StrictLess, 2, ParityFilter::All, Some(1)),
        InequalitySpec::shifted("ed_ou", Relation::StrictLess, 1, ParityFilter::All, Some(2)),
        InequalitySpec::shifted("ou_eu", Relation::StrictLess, 1, ParityFilter::Odd, Some(1)),
        InequalitySpec::shifted("ou_eu", Relation::Equal, 1, ParityFilter::Even, Some(0)),
    ];
    specs
        .iter()
        .map(|spec| check_inequality(spec, n_max.max(spec.claimed_threshold.unwrap_or(0))))
        .collect()
}

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Chain,
    Images,
    Roundtrips,
    Conjecture,
    Nd,
    Monotone,
}

impl Suite {
    fn token(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Chain => "chain",
            Suite::Images => "images",
            Suite::Roundtrips => "roundtrips",
            Suite::Conjecture => "conjecture",
            Suite::Nd => "nd",
            Suite::Monotone => "monotone",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "chain" => Ok(Suite::Chain),
            "images" => Ok(Suite::Images),
            "roundtrips" => Ok(Suite::Roundtrips),
            "conjecture" => Ok(Suite::Conjecture),
            "nd" => Ok(Suite::Nd),
            "monotone" => Ok(Suite::Monotone),
            other => Err(format!(
                "unknown suite `{other}` (expected all, chain, images, roundtrips, conjecture, nd, or monotone)"
            )),
        }
    }
}

/// All reports produced by one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }

    /// Pretty JSON; deterministic for fixed inputs.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Runs the chosen suite. `n_max` overrides every per-check default bound;
/// bounds below a claimed threshold are raised to it.
pub fn run_suite(suite: Suite, n_max: Option<u64>) -> SuiteReport {
    let mut reports = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Chain) {
        let nc = n_max.unwrap_or(DEFAULT_COUNT_NMAX);
        let links: [(&str, &str, Option<u64>); 7] = [
            ("od_ed", "ed_od", Some(11)),
            ("ed_od", "eu_od", None),
            ("eu_od", "od_eu", None),
            ("od_eu", "ou_ed", None),
            ("ou_ed", "ou_eu", None),
            ("ou_eu", "ed_ou", None),
            ("ed_ou", "eu_ou", None),
        ];
        for (l, r, claimed) in links {
            let spec = InequalitySpec::strict(l, r, claimed);
            reports.push(check_inequality(&spec, nc.max(claimed.unwrap_or(0))));
        }
        reports.push(check_chain_simultaneous(nc));
        let strict_inequalities: [(&str, &str, u64); 5] = [
            ("ou_eu", "eu_ou", 3),
            ("eu_od", "ou_ed", 5),
            ("od_eu", "ed_ou", 2),
            ("ed_od", "od_eu", 8),
            ("od_ed", "ed_ou", 2),
        ];
        for (l, r, claimed) in strict_inequalities {
            let spec = InequalitySpec::strict(l, r, Some(claimed));
            reports.push(check_inequality(&spec, nc.max(claimed)));
        }
        let ni = n_max.unwrap_or(DEFAULT_INCLUSION_NMAX);
        for (sub, sup) in [("ed_od", "eu_od"), ("ou_ed", "ou_eu"), ("ed_ou", "eu_ou")] {
            reports.push(check_inclusion(&class(sub), &class(sup), ni));
        }
        reports.push(check_excess(nc));
    }
    if wants(Suite::Images) {
        for map in MapId::ALL {
            reports.push(check_image(map, n_max.unwrap_or(DEFAULT_IMAGE_NMAX)));
        }
    }
    if wants(Suite::Roundtrips) {
        for map in MapId::ALL {
            reports.push(check_roundtrip(map, n_max.unwrap_or_else(|| default_roundtrip_nmax(map))));
        }
    }
    if wants(Suite::Conjecture) {
        reports.push(check_conjecture(n_max.unwrap_or(DEFAULT_CONJECTURE_NMAX).max(3)));
    }
    if wants(Suite::Nd) {
        let nn = n_max.unwrap_or(DEFAULT_ND_NMAX);
        reports.push(check_nd_identities(nn));
        reports.extend(check_nd_inequalities(nn));
    }
    if wants(Suite::Monotone) {
        reports.extend(check_monotone(n_max.unwrap_or(DEFAULT_COUNT_NMAX)));
    }
    SuiteReport { suite: suite.to_string(), reports }
}
