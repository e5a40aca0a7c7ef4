//! Galois-group evidence for specialised polynomials.
//!
//! Where a rigorous criterion exists (symmetric groups of prime degree via
//! an irreducibility witness plus a transposition witness) it is used; the
//! rest is Chebotarev-style matching of observed Frobenius cycle types
//! against exact group profiles built by exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::fp::{cycle_type_at, CycleType};
use crate::poly::BiPoly;
use crate::primes::primes_up_to;

/// Exact cycle-type frequency table of a permutation group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupProfile {
    pub name: String,
    pub degree: u32,
    pub order: u64,
    /// Element counts per cycle type; frequencies are count / order.
    pub counts: BTreeMap<CycleType, u64>,
}

impl GroupProfile {
    pub fn frequency(&self, t: &CycleType) -> BigRational {
        let c = self.counts.get(t).copied().unwrap_or(0);
        BigRational::new(BigInt::from(c), BigInt::from(self.order))
    }

    pub fn contains_type(&self, t: &CycleType) -> bool {
        self.counts.contains_key(t)
    }

    /// Documented text format: name, degree, order, then one
    /// "cycle_type count" line per type in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name {}\n", self.name));
        out.push_str(&format!("degree {}\n", self.degree));
        out.push_str(&format!("order {}\n", self.order));
        for (t, c) in &self.counts {
            out.push_str(&format!("{t} {c}\n"));
        }
        out
    }

    pub fn parse_text(s: &str) -> Result<GroupProfile> {
        let mut lines = s.lines();
        let name = lines
            .next()
            .and_then(|l| l.strip_prefix("name "))
            .ok_or_else(|| Error::Parse("profile: missing name line".into()))?
            .to_string();
        let degree: u32 = lines
            .next()
            .and_then(|l| l.strip_prefix("degree "))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse("profile: missing degree line".into()))?;
        let order: u64 = lines
            .next()
            .and_then(|l| l.strip_prefix("order "))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::Parse("profile: missing order line".into()))?;
        let mut counts = BTreeMap::new();
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (t, c) = line
                .split_once(' ')
                .ok_or_else(|| Error::Parse(format!("profile: bad line '{line}'")))?;
            counts.insert(
                CycleType::parse(t)?,
                c.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("profile: bad count '{c}'")))?,
            );
        }
        Ok(GroupProfile { name, degree, order, counts })
    }
}

fn cycle_type_of_perm(perm: &[usize]) -> CycleType {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u32;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        parts.push(len);
    }
    CycleType::new(parts)
}

fn is_even(t: &CycleType) -> bool {
    t.parts().iter().map(|&k| (k - 1) as u64).sum::<u64>() % 2 == 0
}

fn symmetric_profile(name: &str, n: usize, even_only: bool) -> GroupProfile {
    let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
    let mut order = 0u64;
    for perm in (0..n).permutations(n) {
        let t = cycle_type_of_perm(&perm);
        if even_only && !is_even(&t) {
            continue;
        }
        order += 1;
        *counts.entry(t).or_insert(0) += 1;
    }
    GroupProfile { name: name.to_string(), degree: n as u32, order, counts }
}

/// GL3(F2) acting on the seven nonzero vectors of F2^3; this group is
/// isomorphic to PSL2(F7) and gives its degree-7 permutation profile.
fn psl2f7_deg7_profile() -> GroupProfile {
    let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
    let mut order = 0u64;
    // a matrix is nine bits, rows r0, r1, r2 of three bits each
    for mask in 0u32..512 {
        let rows = [mask & 7, (mask >> 3) & 7, (mask >> 6) & 7];
        // apply to a vector v (3 bits): bit i of image = parity(rows[i] & v)
        let apply = |v: u32| -> u32 {
            let mut w = 0u32;
            for (i, r) in rows.iter().enumerate() {
                w |= ((r & v).count_ones() & 1) << i;
            }
            w
        };
        // invertible iff the images of the 7 nonzero vectors are a permutation
        let mut perm = vec![0usize; 7];
        let mut image_mask = 0u32;
        let mut ok = true;
        for v in 1u32..8 {
            let w = apply(v);
            if w == 0 || image_mask & (1 << w) != 0 {
                ok = false;
                break;
            }
            image_mask |= 1 << w;
            perm[(v - 1) as usize] = (w - 1) as usize;
        }
        if !ok {
            continue;
        }
        order += 1;
        *counts.entry(cycle_type_of_perm(&perm)).or_insert(0) += 1;
    }
    GroupProfile { name: "PSL2F7-deg7".to_string(), degree: 7, order, counts }
}

/// Builds an exact profile by exhaustive enumeration. Known specs: "S5",
/// "A5", "S6", "A6", "PSL2F7-deg7".
pub fn build_profile(spec: &str) -> Result<GroupProfile> {
    match spec {
        "S5" => Ok(symmetric_profile("S5", 5, false)),
        "A5" => Ok(symmetric_profile("A5", 5, true)),
        "S6" => Ok(symmetric_profile("S6", 6, false)),
        "A6" => Ok(symmetric_profile("A6", 6, true)),
        "PSL2F7-deg7" => Ok(psl2f7_deg7_profile()),
        other => Err(Error::UnknownProfileSpec(other.to_string())),
    }
}

/// The shipped profile files, as (generator spec, file contents); each is
/// regenerated by `build_profile` and byte-compared in tests.
pub fn shipped_profiles() -> Vec<(&'static str, &'static str)> {
    vec![
        ("S5", include_str!("../data/s5.profile")),
        ("A5", include_str!("../data/a5.profile")),
        ("S6", include_str!("../data/s6.profile")),
        ("A6", include_str!("../data/a6.profile")),
        ("PSL2F7-deg7", include_str!("../data/psl2f7-deg7.profile")),
    ]
}

/// The candidate profiles bundled for a permutation degree.
pub fn profiles_for_degree(degree: u32) -> Vec<GroupProfile> {
    match degree {
        5 => vec![build_profile("S5").unwrap(), build_profile("A5").unwrap()],
        6 => vec![build_profile("S6").unwrap(), build_profile("A6").unwrap()],
        7 => vec![build_profile("PSL2F7-deg7").unwrap()],
        _ => Vec::new(),
    }
}

/// Aggregated Frobenius cycle types over the primes up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleStats {
    pub counts: BTreeMap<CycleType, u64>,
    /// Primes that produced a cycle type.
    pub used: u64,
    /// Primes skipped (non-squarefree reduction or denominator).
    pub skipped: u64,
}

impl SampleStats {
    pub fn frequency(&self, t: &CycleType) -> BigRational {
        let c = self.counts.get(t).copied().unwrap_or(0);
        BigRational::new(BigInt::from(c), BigInt::from(self.used.max(1)))
    }
}

/// Samples cycle types of P(t0, Y) at every prime q <= prime_bound.
/// Skip signals are counted, never silently dropped.
pub fn sample_cycle_types(p: &BiPoly, t0: &Rational, prime_bound: u64) -> Result<SampleStats> {
    let f = p.eval_t(t0);
    if !f.is_separable()? {
        return Err(Error::SeparabilityFailure(format!("P({t0}, Y) is not separable")));
    }
    let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
    let mut used = 0u64;
    let mut skipped = 0u64;
    for q in primes_up_to(prime_bound) {
        match cycle_type_at(p, t0, q)? {
            Some(t) => {
                used += 1;
                *counts.entry(t).or_insert(0) += 1;
            }
            None => skipped += 1,
        }
    }
    Ok(SampleStats { counts, used, skipped })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvidenceMode {
    Rigorous,
    Statistical,
}

impl fmt::Display for EvidenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvidenceMode::Rigorous => write!(f, "rigorous"),
            EvidenceMode::Statistical => write!(f, "statistical"),
        }
    }
}

/// A Frobenius witness: the cycle type seen at prime q for the
/// specialisation at t0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub q: u64,
    pub t0: Rational,
    pub cycle_type: CycleType,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={} t0={} type={}", self.q, self.t0, self.cycle_type)
    }
}

/// Evidence about the Galois group of a family or specialisation.
#[derive(Debug, Clone)]
pub struct GroupEvidence {
    pub mode: EvidenceMode,
    /// Witness primes with their cycle types (rigorous mode, or notable
    /// witnesses in statistical mode).
    pub witnesses: Vec<Witness>,
    pub matched_profile: Option<String>,
    /// Total-variation distance to the matched profile, exact.
    pub distance: Option<BigRational>,
    pub sample_size: u64,
    /// Set when only the identity-adjacent type was observed.
    pub degenerate: bool,
}

/// Rigorous S5 criterion for degree-5 polynomials: an irreducible reduction
/// (type `[5]`) proves transitivity; a `[2,3]` type cubes to a transposition; a
/// transitive degree-5 group containing a transposition is S5. Returns None
/// when either witness is missing below the bound.
pub fn rigorous_s5(p: &BiPoly, t0: &Rational, prime_bound: u64) -> Result<Option<GroupEvidence>> {
    if p.y_degree() != 5 {
        return Err(Error::RequiresDegree { expected: 5, got: p.y_degree() });
    }
    let f = p.eval_t(t0);
    if !f.is_separable()? {
        return Err(Error::SeparabilityFailure(format!("P({t0}, Y) is not separable")));
    }
    let five = CycleType::new(vec![5]);
    let two_three = CycleType::new(vec![2, 3]);
    let mut w5: Option<u64> = None;
    let mut w23: Option<u64> = None;
    let mut scanned = 0u64;
    for q in primes_up_to(prime_bound) {
        scanned += 1;
        if let Some(t) = cycle_type_at(p, t0, q)? {
            if t == five && w5.is_none() {
                w5 = Some(q);
            } else if t == two_three && w23.is_none() {
                w23 = Some(q);
            }
        }
        if w5.is_some() && w23.is_some() {
            break;
        }
    }
    match (w5, w23) {
        (Some(q5), Some(q23)) => Ok(Some(GroupEvidence {
            mode: EvidenceMode::Rigorous,
            witnesses: vec![
                Witness { q: q23, t0: t0.clone(), cycle_type: two_three },
                Witness { q: q5, t0: t0.clone(), cycle_type: five },
            ],
            matched_profile: Some("S5".to_string()),
            distance: None,
            sample_size: scanned,
            degenerate: false,
        })),
        _ => Ok(None),
    }
}

/// Family-level rigorous S5 criterion: witnesses may come from different
/// non-branch specialisation points. For a non-branch point the Galois group
/// of the specialisation embeds into the generic group, so a cycle type
/// observed at any such point is the type of an element of Gal(E/Q(T)); and
/// an irreducible reduction at any point certifies irreducibility over Q(T),
/// hence transitivity. Candidates must be non-branch (separable) points.
pub fn rigorous_s5_family(
    p: &BiPoly,
    candidates: &[Rational],
    prime_bound: u64,
) -> Result<Option<GroupEvidence>> {
    if p.y_degree() != 5 {
        return Err(Error::RequiresDegree { expected: 5, got: p.y_degree() });
    }
    let five = CycleType::new(vec![5]);
    let two_three = CycleType::new(vec![2, 3]);
    let mut w5: Option<Witness> = None;
    let mut w23: Option<Witness> = None;
    let mut scanned = 0u64;
    'points: for t0 in candidates {
        for q in primes_up_to(prime_bound) {
            scanned += 1;
            if let Some(t) = cycle_type_at(p, t0, q)? {
                if t == five && w5.is_none() {
                    w5 = Some(Witness { q, t0: t0.clone(), cycle_type: five.clone() });
                } else if t == two_three && w23.is_none() {
                    w23 = Some(Witness { q, t0: t0.clone(), cycle_type: two_three.clone() });
                }
            }
            if w5.is_some() && w23.is_some() {
                break 'points;
            }
        }
    }
    match (w5, w23) {
        (Some(w5), Some(w23)) => Ok(Some(GroupEvidence {
            mode: EvidenceMode::Rigorous,
            witnesses: vec![w23, w5],
            matched_profile: Some("S5".to_string()),
            distance: None,
            sample_size: scanned,
            degenerate: false,
        })),
        _ => Ok(None),
    }
}

/// Total-variation distance between normalized observed frequencies and a
/// profile, over the union of supports.
fn tv_distance(stats: &SampleStats, profile: &GroupProfile) -> BigRational {
    let mut types: BTreeSet<&CycleType> = stats.counts.keys().collect();
    types.extend(profile.counts.keys());
    let mut sum = BigRational::zero();
    for t in types {
        let d = stats.frequency(t) - profile.frequency(t);
        sum += d.abs();
    }
    sum / BigRational::from_integer(2.into())
}

/// Matches observed cycle-type counts against candidate profiles of the same
/// degree. A profile is disqualified outright if any observed type is absent
/// from it; among the rest the total-variation minimizer wins.
pub fn statistical_match(
    stats: &SampleStats,
    profiles: &[GroupProfile],
    min_sample: u64,
) -> Result<GroupEvidence> {
    if stats.used < min_sample {
        return Err(Error::SampleTooSmall { got: stats.used, min: min_sample });
    }
    let degree = stats
        .counts
        .keys()
        .next()
        .map(|t| t.degree())
        .ok_or(Error::SampleTooSmall { got: 0, min: min_sample })?;
    let candidates: Vec<&GroupProfile> =
        profiles.iter().filter(|p| p.degree == degree).collect();
    if candidates.is_empty() {
        return Err(Error::NoProfileOfDegree(degree));
    }
    let identity = CycleType::new(vec![1; degree as usize]);
    let degenerate = stats.counts.len() == 1 && stats.counts.contains_key(&identity);

    let mut best: Option<(&GroupProfile, BigRational)> = None;
    for prof in candidates {
        if stats.counts.keys().any(|t| !prof.contains_type(t)) {
            continue; // disqualified: impossible type observed
        }
        let d = tv_distance(stats, prof);
        match &best {
            Some((_, bd)) if *bd <= d => {}
            _ => best = Some((prof, d)),
        }
    }
    Ok(GroupEvidence {
        mode: EvidenceMode::Statistical,
        witnesses: Vec::new(),
        matched_profile: best.as_ref().map(|(p, _)| p.name.clone()),
        distance: best.map(|(_, d)| d),
        sample_size: stats.used,
        degenerate,
    })
}

/// Element orders of PSL2(F11), computed by enumerating the action on the
/// projective line over F11 (12 points) and deduplicating modulo sign.
pub fn psl2_f11_element_orders() -> &'static BTreeSet<u64> {
    static ORDERS: OnceLock<BTreeSet<u64>> = OnceLock::new();
    ORDERS.get_or_init(|| {
        const P: u64 = 11;
        let inv = |x: u64| crate::primes::pow_mod(x, P - 2, P);
        let mut perms: BTreeSet<Vec<u64>> = BTreeSet::new();
        for a in 0..P {
            for b in 0..P {
                for c in 0..P {
                    for d in 0..P {
                        if (a * d + P * P - b * c) % P != 1 {
                            continue;
                        }
                        // action on P^1(F11): indices 0..10 finite, 11 = inf
                        let mut perm = vec![0u64; 12];
                        for x in 0..P {
                            let num = (a * x + b) % P;
                            let den = (c * x + d) % P;
                            perm[x as usize] = if den == 0 {
                                11
                            } else {
                                (num * inv(den)) % P
                            };
                        }
                        perm[11] = if c == 0 { 11 } else { (a * inv(c)) % P };
                        perms.insert(perm);
                    }
                }
            }
        }
        debug_assert_eq!(perms.len(), 660);
        perms
            .iter()
            .map(|perm| {
                let as_usize: Vec<usize> = perm.iter().map(|&x| x as usize).collect();
                cycle_type_of_perm(&as_usize).order()
            })
            .collect()
    })
}

/// Partial evidence for the degree-11 PSL2(F11) action, where no exact
/// profile is available: every observed cycle type must have its lcm in the
/// group's element-order set, and an 11-cycle must occur (transitivity with
/// 11 dividing the order).
#[derive(Debug, Clone)]
pub struct SpectrumCheck {
    pub allowed_orders: Vec<u64>,
    pub all_orders_allowed: bool,
    pub has_11_cycle: bool,
    pub offending_type: Option<CycleType>,
    /// First prime witnessing an 11-cycle, if any.
    pub witness_11: Option<u64>,
}

impl SpectrumCheck {
    pub fn passes(&self) -> bool {
        self.all_orders_allowed && self.has_11_cycle
    }
}

/// Runs the order-spectrum check against a degree-11 sample. The caller
/// supplies per-prime witnesses so the 11-cycle witness prime is recorded.
pub fn psl2_f11_spectrum_check(
    p: &BiPoly,
    t0: &Rational,
    prime_bound: u64,
) -> Result<(SampleStats, SpectrumCheck)> {
    let stats = sample_cycle_types(p, t0, prime_bound)?;
    let allowed = psl2_f11_element_orders();
    let mut offending = None;
    for t in stats.counts.keys() {
        if !allowed.contains(&t.order()) {
            offending = Some(t.clone());
            break;
        }
    }
    let eleven = CycleType::new(vec![11]);
    let mut witness_11 = None;
    if stats.counts.contains_key(&eleven) {
        for q in primes_up_to(prime_bound) {
            if cycle_type_at(p, t0, q)? == Some(eleven.clone()) {
                witness_11 = Some(q);
                break;
            }
        }
    }
    let check = SpectrumCheck {
        allowed_orders: allowed.iter().copied().collect(),
        all_orders_allowed: offending.is_none(),
        has_11_cycle: witness_11.is_some(),
        offending_type: offending,
        witness_11,
    };
    Ok((stats, check))
}
