//! Search engines over the palindrome/triple landscape.
//!
//! Three engines with different shapes:
//!
//! * **Generator sweep** — walk every valid generator pair under a bound
//!   and keep the primitive triples whose palindrome count clears a
//!   threshold.
//! * **Anchored search** — enumerate palindromes for one role (odd leg,
//!   even leg, hypotenuse) and decompose each anchor into every triple
//!   containing it. Palindromes are generated from half-prefixes, never by
//!   filtering the integers.
//! * **Evidence scan** — exhaustively test primitive triples for the
//!   all-palindrome profile, either through the cheap-to-expensive pruning
//!   ladder or with no pruning at all as a cross-check reference.
//!
//! Sweeps run on `u64`/`u128` arithmetic internally and re-verify every
//! hit through the arbitrary-precision [`Triple`] constructor on emission.
//! Results are fully deterministic: parallel workers produce per-shard
//! vectors that are concatenated in shard order, then sorted by
//! `(hypotenuse, first component)`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;

use crate::digits::{self, Natural, Parity};
use crate::error::{Error, Result};
use crate::triples::{PalindromeProfile, Triple};

/// Largest hypotenuse bound a sweep accepts. Beyond this the u64 fast path
/// would still be exact, but runtimes stop being interactive.
pub const MAX_SWEEP_HYPOTENUSE: u64 = 4_000_000_000_000;

/// Largest anchor a decomposition accepts (the factoring cost grows with
/// the square root of the anchor).
pub const MAX_ANCHOR: u128 = 1_000_000_000_000_000;

/// Which component of a triple an anchored search pins to a palindrome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AnchorRole {
    OddLeg,
    EvenLeg,
    Hypotenuse,
}

impl AnchorRole {
    pub const ALL: [AnchorRole; 3] = [
        AnchorRole::OddLeg,
        AnchorRole::EvenLeg,
        AnchorRole::Hypotenuse,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            AnchorRole::OddLeg => "odd-leg",
            AnchorRole::EvenLeg => "even-leg",
            AnchorRole::Hypotenuse => "hypotenuse",
        }
    }

    /// Smallest value that can fill the role in any triple.
    fn minimum(self) -> u32 {
        match self {
            AnchorRole::OddLeg => 3,
            AnchorRole::EvenLeg => 4,
            AnchorRole::Hypotenuse => 5,
        }
    }

    /// Value parity the role forces on its anchors, if any.
    fn parity(self) -> Option<Parity> {
        match self {
            AnchorRole::OddLeg => Some(Parity::Odd),
            AnchorRole::EvenLeg => Some(Parity::Even),
            AnchorRole::Hypotenuse => None,
        }
    }
}

impl fmt::Display for AnchorRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for AnchorRole {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<AnchorRole, String> {
        AnchorRole::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| format!("unknown role {s:?} (expected odd-leg, even-leg, or hypotenuse)"))
    }
}

/// Bounds and filters for a generator sweep. At least one of `max_s` /
/// `max_c` must be set.
#[derive(Debug, Clone, Default)]
pub struct EuclidQuery {
    /// Upper bound on the generator `s`.
    pub max_s: Option<Natural>,
    /// Upper bound on the hypotenuse.
    pub max_c: Option<Natural>,
    /// Keep triples with at least this many palindromic components.
    pub min_pal_count: u8,
}

/// Digit-range query for an anchored search.
#[derive(Debug, Clone)]
pub struct AnchoredQuery {
    pub role: AnchorRole,
    pub min_digits: u32,
    pub max_digits: u32,
    pub min_pal_count: u8,
    pub primitive_only: bool,
}

/// Where a hit came from, with enough detail to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Generator pair that produced the triple.
    Euclid { s: Natural, t: Natural },
    /// Palindrome anchor (first one, in anchor order) that led to the
    /// triple.
    Anchored { role: AnchorRole, anchor: Natural },
    /// Generator pair found by the evidence scan.
    Evidence { s: Natural, t: Natural },
}

impl Provenance {
    pub fn source(&self) -> &'static str {
        match self {
            Provenance::Euclid { .. } => "euclid",
            Provenance::Anchored { .. } => "anchored",
            Provenance::Evidence { .. } => "evidence",
        }
    }

    /// Key/value description, used verbatim in output records.
    pub fn params(&self) -> Vec<(String, String)> {
        match self {
            Provenance::Euclid { s, t } | Provenance::Evidence { s, t } => {
                vec![("s".into(), s.to_string()), ("t".into(), t.to_string())]
            }
            Provenance::Anchored { role, anchor } => vec![
                ("role".into(), role.tag().into()),
                ("anchor".into(), anchor.to_string()),
            ],
        }
    }
}

/// One search result: the triple, its palindrome profile, primitivity,
/// and provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub triple: Triple,
    pub profile: PalindromeProfile,
    pub primitive: bool,
    pub provenance: Provenance,
}

impl SearchHit {
    /// Hits are always re-profiled from the canonical triple at emission,
    /// regardless of what the fast path already computed.
    fn emit(triple: Triple, provenance: Provenance) -> SearchHit {
        let profile = triple.profile();
        let primitive = triple.is_primitive();
        SearchHit {
            triple,
            profile,
            primitive,
            provenance,
        }
    }
}

/// Sweep every valid generator pair with `s <= max_s` and hypotenuse
/// `<= max_c`, in parallel over `s`, applying `per_pair` to
/// `(s, t, odd leg, even leg, hypotenuse)`. Results keep a deterministic
/// order: ascending `s`, then ascending `t`.
fn sweep<T, F>(max_s: u64, max_c: u64, per_pair: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, u64, u64, u64, u64) -> Option<T> + Sync,
{
    (2..=max_s)
        .into_par_iter()
        .map(|s| {
            let mut found = Vec::new();
            let mut t = if s % 2 == 0 { 1 } else { 2 };
            while t < s {
                let c = s * s + t * t;
                if c > max_c {
                    break;
                }
                if s.gcd(&t) == 1 {
                    let odd = s * s - t * t;
                    let even = 2 * s * t;
                    if let Some(item) = per_pair(s, t, odd, even, c) {
                        found.push(item);
                    }
                }
                t += 2;
            }
            found
        })
        .collect::<Vec<Vec<T>>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Raw sweep hit on the fast path: `(hypotenuse, odd leg, even leg, s, t)`,
/// ordered so that a plain sort gives the output order.
type RawHit = (u64, u64, u64, u64, u64);

fn finish_sweep(mut raw: Vec<RawHit>, make: impl Fn(u64, u64) -> Provenance) -> Vec<SearchHit> {
    raw.sort_unstable();
    raw.into_iter()
        .map(|(c, odd, even, s, t)| {
            let triple = Triple::new(Natural::from(odd), Natural::from(even), Natural::from(c))
                .expect("sweep hits satisfy the identity");
            SearchHit::emit(triple, make(s, t))
        })
        .collect()
}

fn bound_u64(n: &Natural, limit: u64, what: &'static str) -> Result<u64> {
    match u64::try_from(n) {
        Ok(v) if v <= limit => Ok(v),
        _ => Err(Error::BoundTooLarge {
            what,
            value: n.clone(),
            limit: Natural::from(limit),
        }),
    }
}

fn anchor_u128(n: &Natural, what: &'static str) -> Result<u128> {
    match u128::try_from(n) {
        Ok(v) if v <= MAX_ANCHOR => Ok(v),
        _ => Err(Error::BoundTooLarge {
            what,
            value: n.clone(),
            limit: Natural::from(MAX_ANCHOR),
        }),
    }
}

/// All primitive triples from generator pairs within the query bounds
/// whose palindrome count clears the threshold, sorted by `(hypotenuse,
/// odd leg)`.
pub fn search_euclid(q: &EuclidQuery) -> Result<Vec<SearchHit>> {
    if q.max_s.is_none() && q.max_c.is_none() {
        return Err(Error::UnboundedEuclidQuery);
    }
    let max_c = match &q.max_c {
        Some(c) => bound_u64(c, MAX_SWEEP_HYPOTENUSE, "max-z")?,
        None => MAX_SWEEP_HYPOTENUSE,
    };
    // s² < c, so the hypotenuse bound caps s as well. Clamping to that cap
    // loses nothing when the caller set max_c; without it, an oversized
    // max_s would silently drop pairs, so it is rejected instead.
    let s_from_c = (max_c - 1).isqrt();
    let max_s = match &q.max_s {
        Some(s) => {
            let v = u64::try_from(s).unwrap_or(u64::MAX);
            if q.max_c.is_none() && v > s_from_c {
                return Err(Error::BoundTooLarge {
                    what: "max-s",
                    value: s.clone(),
                    limit: Natural::from(s_from_c),
                });
            }
            v.min(s_from_c)
        }
        None => s_from_c,
    };
    let min_pal = q.min_pal_count;
    let raw = sweep(max_s, max_c, |s, t, odd, even, c| {
        let pals = [odd, even, c]
            .into_iter()
            .filter(|&v| is_decimal_palindrome(v))
            .count() as u8;
        (pals >= min_pal).then_some((c, odd, even, s, t))
    });
    Ok(finish_sweep(raw, |s, t| Provenance::Euclid {
        s: Natural::from(s),
        t: Natural::from(t),
    }))
}

/// Exhaustive scan for all-palindrome primitive triples with hypotenuse
/// `<= max_c`.
///
/// With `prune` set, candidates fall through the cheap-to-expensive
/// ladder: an even leg ending in 0 is dropped; two or more components
/// with even digit counts are dropped (they would share the factor 11); a
/// multiple of 5 not reading `5...5` is dropped; only then are full
/// palindrome tests run. With `prune` unset every candidate takes the
/// full tests — slower, same answers.
pub fn evidence_search(max_c: &Natural, prune: bool) -> Result<Vec<SearchHit>> {
    let max_c = bound_u64(max_c, MAX_SWEEP_HYPOTENUSE, "max-z")?;
    if max_c < 5 {
        return Ok(Vec::new());
    }
    let max_s = (max_c - 1).isqrt();
    let raw = sweep(max_s, max_c, |s, t, odd, even, c| {
        if prune {
            if even % 10 == 0 {
                return None;
            }
            let even_lengths = [odd, even, c]
                .into_iter()
                .filter(|&v| decimal_len(v).is_multiple_of(2))
                .count();
            if even_lengths > 1 {
                return None;
            }
            // The multiple of 5 is now the odd leg or the hypotenuse:
            // odd-valued, so it already ends in 5 and must lead with 5.
            let carrier = if odd % 5 == 0 {
                odd
            } else if c % 5 == 0 {
                c
            } else {
                return None;
            };
            if leading_digit(carrier) != 5 {
                return None;
            }
        }
        (is_decimal_palindrome(odd) && is_decimal_palindrome(even) && is_decimal_palindrome(c))
            .then_some((c, odd, even, s, t))
    });
    Ok(finish_sweep(raw, |s, t| Provenance::Evidence {
        s: Natural::from(s),
        t: Natural::from(t),
    }))
}

/// Every triple whose odd leg equals `a`: factor `a² = d·e` over divisor
/// pairs with `e < d`, giving legs `a, (d-e)/2` and hypotenuse
/// `(d+e)/2`. Sorted by hypotenuse.
pub fn decompose_odd_leg(a: &Natural) -> Result<Vec<Triple>> {
    let a = anchor_u128(a, "odd-leg anchor")?;
    if a < 3 || a % 2 == 0 {
        return Err(Error::BadOddLegAnchor);
    }
    let square = a * a;
    let triples = divisors_below(a)
        .into_iter()
        .map(|e| {
            let d = square / e;
            // d and e are both odd, so the halves are exact.
            build_triple(a, (d - e) / 2, (d + e) / 2)
        })
        .collect();
    Ok(sort_by_hypotenuse(triples))
}

/// Every triple whose even leg equals `b`: factor `(b/2)² = m·n` over
/// divisor pairs with `m < n`, giving legs `n - m, b` and hypotenuse
/// `n + m`. Sorted by hypotenuse.
pub fn decompose_even_leg(b: &Natural) -> Result<Vec<Triple>> {
    let b = anchor_u128(b, "even-leg anchor")?;
    if b < 4 || b % 2 == 1 {
        return Err(Error::BadEvenLegAnchor);
    }
    let half = b / 2;
    let square = half * half;
    let triples = divisors_below(half)
        .into_iter()
        .map(|m| {
            let n = square / m;
            build_triple(n - m, b, n + m)
        })
        .collect();
    Ok(sort_by_hypotenuse(triples))
}

/// Every triple whose hypotenuse equals `c`, sorted by smaller leg.
///
/// With `primitive_only` set this runs the generator-pair test (cost on
/// the order of `√c`); otherwise it scans every smaller leg (cost on the
/// order of `c`), keeping non-primitive triples too.
pub fn decompose_hypotenuse(c: &Natural, primitive_only: bool) -> Result<Vec<Triple>> {
    let c = anchor_u128(c, "hypotenuse anchor")?;
    if c < 5 {
        return Err(Error::BadHypotenuseAnchor);
    }
    let mut raw: Vec<(u128, u128)> = Vec::new();
    if primitive_only {
        // c = s² + t² with a valid generator pair (s, t).
        for t in 1..=(c / 2).isqrt() {
            let s_square = c - t * t;
            let s = s_square.isqrt();
            if s * s == s_square && s > t && s.gcd(&t) == 1 && (s + t) % 2 == 1 {
                raw.push((s * s - t * t, 2 * s * t, ));
            }
        }
    } else {
        let c_square = c * c;
        let mut x = 1u128;
        while 2 * x * x < c_square {
            let y_square = c_square - x * x;
            let y = y_square.isqrt();
            if y * y == y_square {
                raw.push((x, y));
            }
            x += 1;
        }
    }
    let mut triples: Vec<Triple> = raw
        .into_iter()
        .map(|(x, y)| build_triple(x, y, c))
        .collect();
    triples.sort_by(|l, r| {
        let small = |t: &Triple| t.a().min(t.b()).clone();
        small(l).cmp(&small(r))
    });
    Ok(triples)
}

/// Decompose palindrome anchors of one role across a digit range.
///
/// Anchors are enumerated in increasing order with the role's value
/// parity baked into the generator; anchors below the role minimum are
/// skipped. A triple reachable from several anchors is reported once,
/// with the earliest anchor as provenance. Output is sorted by
/// `(hypotenuse, first component)`.
pub fn anchored_search(q: &AnchoredQuery) -> Result<Vec<SearchHit>> {
    if q.min_digits < 1 || q.min_digits > q.max_digits {
        return Err(Error::BadDigitRange {
            min: q.min_digits,
            max: q.max_digits,
        });
    }
    let floor = Natural::from(q.role.minimum());
    let anchors: Vec<Natural> =
        digits::enumerate_palindromes(q.min_digits, q.max_digits, q.role.parity())
            .filter(|p| p >= &floor)
            .collect();
    let per_anchor: Vec<Vec<Triple>> = anchors
        .par_iter()
        .map(|anchor| match q.role {
            AnchorRole::OddLeg => decompose_odd_leg(anchor),
            AnchorRole::EvenLeg => decompose_even_leg(anchor),
            AnchorRole::Hypotenuse => decompose_hypotenuse(anchor, q.primitive_only),
        })
        .collect::<Result<_>>()?;

    let mut seen: HashSet<Triple> = HashSet::new();
    let mut hits = Vec::new();
    for (anchor, triples) in anchors.iter().zip(per_anchor) {
        for triple in triples {
            if q.primitive_only && !triple.is_primitive() {
                continue;
            }
            if triple.profile().count < q.min_pal_count {
                continue;
            }
            if seen.insert(triple.clone()) {
                hits.push(SearchHit::emit(
                    triple,
                    Provenance::Anchored {
                        role: q.role,
                        anchor: anchor.clone(),
                    },
                ));
            }
        }
    }
    hits.sort_by(|l, r| {
        (l.triple.c(), l.triple.a()).cmp(&(r.triple.c(), r.triple.a()))
    });
    Ok(hits)
}

fn build_triple(x: u128, y: u128, z: u128) -> Triple {
    Triple::new(Natural::from(x), Natural::from(y), Natural::from(z))
        .expect("decomposition yields exact triples")
}

fn sort_by_hypotenuse(mut triples: Vec<Triple>) -> Vec<Triple> {
    triples.sort_by(|l, r| l.c().cmp(r.c()));
    triples
}

/// Divisors of `x²` strictly below `x`, i.e. the smaller half of each
/// factor pair of the square. Order is unspecified.
fn divisors_below(x: u128) -> Vec<u128> {
    let mut square_factors = factorize(x);
    for (_, exp) in &mut square_factors {
        *exp *= 2;
    }
    let mut divisors = vec![1u128];
    for (p, exp) in square_factors {
        let mut extended = Vec::with_capacity(divisors.len() * (exp as usize + 1));
        for d in &divisors {
            let mut power = 1u128;
            for _ in 0..=exp {
                extended.push(d * power);
                power = power.saturating_mul(p);
            }
        }
        divisors = extended;
    }
    divisors.retain(|&d| d < x);
    divisors
}

/// Trial-division factorization; adequate for anchors up to [`MAX_ANCHOR`].
fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut factors = Vec::new();
    let mut push = |p: u128, e: u32| {
        if e > 0 {
            factors.push((p, e));
        }
    };
    let mut e = 0;
    while n.is_multiple_of(2) {
        n /= 2;
        e += 1;
    }
    push(2, e);
    let mut p = 3u128;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        push(p, e);
        p += 2;
    }
    if n > 1 {
        push(n, 1);
    }
    factors
}

fn is_decimal_palindrome(n: u64) -> bool {
    reverse_decimal(n) == n
}

fn reverse_decimal(mut n: u64) -> u64 {
    let mut r = 0;
    while n > 0 {
        r = r * 10 + n % 10;
        n /= 10;
    }
    r
}

fn decimal_len(n: u64) -> u32 {
    n.ilog10() + 1
}

fn leading_digit(mut n: u64) -> u64 {
    while n >= 10 {
        n /= 10;
    }
    n
}
