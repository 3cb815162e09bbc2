//! Pythagorean triples in canonical component order, their generator-pair
//! construction, and the digit/divisibility classifiers used by the search
//! engines.
//!
//! Canonical order puts the odd leg first whenever exactly one leg is odd
//! (which is always the case for triples with coprime legs); when both legs
//! are even the smaller leg comes first. The hypotenuse is always last. All
//! role-based operations speak in terms of odd leg, even leg, and
//! hypotenuse rather than component positions.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::digits::{self, Natural, Parity};
use crate::error::{Error, GeneratorViolation, Result};

/// A Pythagorean triple `(a, b, c)` with `a² + b² = c²`, stored in
/// canonical component order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    a: Natural,
    b: Natural,
    c: Natural,
}

impl Triple {
    /// Validate `(x, y, z)` as legs-then-hypotenuse and canonicalize the
    /// leg order.
    pub fn new(x: Natural, y: Natural, z: Natural) -> Result<Triple> {
        if x.is_zero() || y.is_zero() || z.is_zero() {
            return Err(Error::ZeroComponent);
        }
        if &x * &x + &y * &y != &z * &z {
            return Err(Error::NotPythagorean { x, y, z });
        }
        Ok(Self::reorder(x, y, z))
    }

    fn reorder(x: Natural, y: Natural, z: Natural) -> Triple {
        let (a, b) = match (x.bit(0), y.bit(0)) {
            (true, false) => (x, y),
            (false, true) => (y, x),
            // Both legs odd cannot satisfy the identity; both even sorts
            // by size.
            _ => {
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            }
        };
        Triple { a, b, c: z }
    }

    /// The primitive triple generated by a valid pair: legs `s² - t²` and
    /// `2st`, hypotenuse `s² + t²`.
    pub fn from_euclid(p: &EuclidParams) -> Triple {
        let (s, t) = (&p.s, &p.t);
        let ss = s * s;
        let tt = t * t;
        let even = (s * t) << 1;
        let odd = &ss - &tt;
        let hyp = ss + tt;
        Self::reorder(odd, even, hyp)
    }

    pub fn a(&self) -> &Natural {
        &self.a
    }

    pub fn b(&self) -> &Natural {
        &self.b
    }

    /// The hypotenuse.
    pub fn c(&self) -> &Natural {
        &self.c
    }

    pub fn components(&self) -> [&Natural; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// `(odd leg, even leg)` when exactly one leg is odd; `None` when both
    /// legs are even (non-primitive triples scaled by an even factor).
    pub fn legs_by_role(&self) -> Option<(&Natural, &Natural)> {
        match (self.a.bit(0), self.b.bit(0)) {
            (true, false) => Some((&self.a, &self.b)),
            (false, true) => Some((&self.b, &self.a)),
            _ => None,
        }
    }

    /// Do the three components share no common factor? Equivalent to
    /// pairwise coprimality for Pythagorean triples.
    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c).is_one()
    }

    /// The triple scaled by a positive factor, re-canonicalized.
    pub fn scale(&self, m: &Natural) -> Triple {
        assert!(!m.is_zero(), "scale factor must be positive");
        Self::reorder(&self.a * m, &self.b * m, &self.c * m)
    }

    /// Palindrome flags, palindrome count, and digit-count parities of the
    /// components.
    pub fn profile(&self) -> PalindromeProfile {
        let flags = self
            .components()
            .map(|n| digits::is_palindrome(n).expect("components are positive"));
        let parity_pattern = self
            .components()
            .map(|n| Parity::of_len(digits::digit_count(n).expect("components are positive")));
        PalindromeProfile {
            flags,
            count: flags.iter().filter(|f| **f).count() as u8,
            parity_pattern,
        }
    }

    /// Digit-count parity pattern of the components, with the verdict of
    /// the two-even-length exclusion: any two components of even digit
    /// count would both carry the factor 11, which no Pythagorean triple
    /// with an all-palindrome profile survives.
    pub fn digit_parity_form(&self) -> DigitParityForm {
        let pattern = self
            .components()
            .map(|n| Parity::of_len(digits::digit_count(n).expect("components are positive")));
        let even_lengths = pattern.iter().filter(|p| **p == Parity::Even).count();
        DigitParityForm {
            pattern,
            admissible: even_lengths <= 1,
        }
    }

    /// The three divisibility facts every primitive triple satisfies:
    /// exactly one leg is divisible by 3, the even leg by 4, and exactly
    /// one component by 5.
    pub fn divisibility_report(&self) -> Result<DivisibilityReport> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        let (odd, even) = self
            .legs_by_role()
            .expect("a primitive triple has exactly one odd leg");
        let div = |n: &Natural, k: u32| (n % k).is_zero();
        let fives = [odd, even, &self.c]
            .iter()
            .filter(|n| div(n, 5))
            .count();
        Ok(DivisibilityReport {
            exactly_one_leg_div3: div(odd, 3) != div(even, 3),
            even_leg_div4: div(even, 4),
            exactly_one_component_div5: fives == 1,
        })
    }

    /// Which of the six factor-placement forms the primitive triple takes,
    /// determined by whether the odd leg carries the factor 3 and by which
    /// component carries the factor 5.
    pub fn factor_form(&self) -> Result<FactorForm> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        let (odd, even) = self
            .legs_by_role()
            .expect("a primitive triple has exactly one odd leg");
        let div = |n: &Natural, k: u32| (n % k).is_zero();
        let three_on_odd = div(odd, 3);
        debug_assert_ne!(three_on_odd, div(even, 3));
        let form = if div(odd, 5) {
            if three_on_odd {
                FactorForm::OddLeg15
            } else {
                FactorForm::OddLeg5Even12
            }
        } else if div(even, 5) {
            if three_on_odd {
                FactorForm::OddLeg3Even20
            } else {
                FactorForm::Even60
            }
        } else {
            debug_assert!(div(&self.c, 5));
            if three_on_odd {
                FactorForm::OddLeg3Hyp5
            } else {
                FactorForm::Even12Hyp5
            }
        };
        Ok(form)
    }

    /// Fast necessary conditions for all three components to be
    /// palindromes: the digit-count pattern must be admissible, the even
    /// leg must not end in 0, and the unique component divisible by 5 must
    /// be the odd leg or the hypotenuse with 5 as both its first and last
    /// digit.
    ///
    /// `false` proves the triple cannot be all-palindrome; `true` promises
    /// nothing.
    pub fn all_palindrome_prefilter(&self) -> Result<bool> {
        if !self.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        if !self.digit_parity_form().admissible {
            return Ok(false);
        }
        let (odd, even) = self
            .legs_by_role()
            .expect("a primitive triple has exactly one odd leg");
        if (even % 10u32).is_zero() {
            return Ok(false);
        }
        // The even leg is now ruled out as the multiple of 5, so the
        // carrier is odd-valued and already ends in 5; its first digit
        // must match.
        let carrier = if (odd % 5u32).is_zero() {
            odd
        } else if (&self.c % 5u32).is_zero() {
            &self.c
        } else {
            return Ok(false);
        };
        Ok(carrier.to_string().starts_with('5'))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// A generator pair `(s, t)` with `s > t > 0`, coprime, of opposite
/// parity. Every primitive triple arises from exactly one such pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EuclidParams {
    s: Natural,
    t: Natural,
}

impl EuclidParams {
    pub fn new(s: Natural, t: Natural) -> Result<EuclidParams> {
        let violation = if t.is_zero() || s <= t {
            Some(GeneratorViolation::NotDescending)
        } else if !s.gcd(&t).is_one() {
            Some(GeneratorViolation::NotCoprime)
        } else if s.bit(0) == t.bit(0) {
            Some(GeneratorViolation::SameParity)
        } else {
            None
        };
        match violation {
            Some(violation) => Err(Error::InvalidGenerators { s, t, violation }),
            None => Ok(EuclidParams { s, t }),
        }
    }

    pub fn s(&self) -> &Natural {
        &self.s
    }

    pub fn t(&self) -> &Natural {
        &self.t
    }
}

impl fmt::Display for EuclidParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(s = {}, t = {})", self.s, self.t)
    }
}

/// Palindrome summary of a triple's components, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PalindromeProfile {
    /// Which components are palindromes.
    pub flags: [bool; 3],
    /// How many components are palindromes.
    pub count: u8,
    /// Digit-count parity of each component.
    pub parity_pattern: [Parity; 3],
}

impl PalindromeProfile {
    /// Pattern such as `OOO` or `OEO`, one letter per component.
    pub fn parity_string(&self) -> String {
        self.parity_pattern.iter().map(|p| p.letter()).collect()
    }
}

/// Digit-count parity pattern with its admissibility verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigitParityForm {
    pub pattern: [Parity; 3],
    /// At most one component has an even digit count.
    pub admissible: bool,
}

impl DigitParityForm {
    pub fn pattern_string(&self) -> String {
        self.pattern.iter().map(|p| p.letter()).collect()
    }
}

/// The three divisibility facts of a primitive triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub exactly_one_leg_div3: bool,
    pub even_leg_div4: bool,
    pub exactly_one_component_div5: bool,
}

impl DivisibilityReport {
    pub fn all_hold(&self) -> bool {
        self.exactly_one_leg_div3 && self.even_leg_div4 && self.exactly_one_component_div5
    }
}

/// Where the factors 3 and 5 land in a primitive triple `(a, b, c)` with
/// odd leg `a`: one of six mutually exclusive placements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorForm {
    /// `(15a, 4b, c)` — the odd leg carries both 3 and 5.
    OddLeg15,
    /// `(5a, 12b, c)` — 5 on the odd leg, 3 on the even leg.
    OddLeg5Even12,
    /// `(3a, 20b, c)` — 3 on the odd leg, 5 on the even leg.
    OddLeg3Even20,
    /// `(a, 60b, c)` — the even leg carries both 3 and 5.
    Even60,
    /// `(3a, 4b, 5c)` — 3 on the odd leg, 5 on the hypotenuse.
    OddLeg3Hyp5,
    /// `(a, 12b, 5c)` — 3 on the even leg, 5 on the hypotenuse.
    Even12Hyp5,
}

impl FactorForm {
    pub const ALL: [FactorForm; 6] = [
        FactorForm::OddLeg15,
        FactorForm::OddLeg5Even12,
        FactorForm::OddLeg3Even20,
        FactorForm::Even60,
        FactorForm::OddLeg3Hyp5,
        FactorForm::Even12Hyp5,
    ];

    /// Short tag naming the placement, e.g. `3a-4b-5c`.
    pub fn tag(self) -> &'static str {
        match self {
            FactorForm::OddLeg15 => "15a-4b-c",
            FactorForm::OddLeg5Even12 => "5a-12b-c",
            FactorForm::OddLeg3Even20 => "3a-20b-c",
            FactorForm::Even60 => "a-60b-c",
            FactorForm::OddLeg3Hyp5 => "3a-4b-5c",
            FactorForm::Even12Hyp5 => "a-12b-5c",
        }
    }

    /// Forms whose even leg is divisible by 5 — hence ends in 0 and can
    /// never be a palindrome.
    pub fn excludes_all_palindromes(self) -> bool {
        matches!(self, FactorForm::OddLeg3Even20 | FactorForm::Even60)
    }
}

impl fmt::Display for FactorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u128) -> Natural {
        Natural::from(v)
    }

    fn triple(x: u128, y: u128, z: u128) -> Triple {
        Triple::new(nat(x), nat(y), nat(z)).unwrap()
    }

    fn euclid(s: u128, t: u128) -> Triple {
        Triple::from_euclid(&EuclidParams::new(nat(s), nat(t)).unwrap())
    }

    #[test]
    fn construction_validates_and_canonicalizes() {
        let t = Triple::new(nat(4), nat(3), nat(5)).unwrap();
        assert_eq!(t.components(), [&nat(3), &nat(4), &nat(5)]);

        let t = triple(468, 595, 757);
        assert_eq!(t.components(), [&nat(595), &nat(468), &nat(757)]);

        // Both legs even: smaller first.
        let t = triple(48, 20, 52);
        assert_eq!(t.components(), [&nat(20), &nat(48), &nat(52)]);

        assert_eq!(
            Triple::new(nat(3), nat(4), nat(6)),
            Err(Error::NotPythagorean {
                x: nat(3),
                y: nat(4),
                z: nat(6)
            })
        );
        assert_eq!(
            Triple::new(nat(0), nat(4), nat(4)),
            Err(Error::ZeroComponent)
        );
    }

    #[test]
    fn euclid_construction() {
        assert_eq!(euclid(2, 1), triple(3, 4, 5));
        assert_eq!(euclid(6, 5), triple(11, 60, 61));
        assert_eq!(euclid(17, 16), triple(33, 544, 545));
        assert_eq!(euclid(5, 2), triple(21, 20, 29));
    }

    #[test]
    fn generator_pair_validation() {
        let err = |s: u128, t: u128| EuclidParams::new(nat(s), nat(t)).unwrap_err();
        assert!(matches!(
            err(3, 3),
            Error::InvalidGenerators {
                violation: GeneratorViolation::NotDescending,
                ..
            }
        ));
        assert!(matches!(
            err(2, 0),
            Error::InvalidGenerators {
                violation: GeneratorViolation::NotDescending,
                ..
            }
        ));
        assert!(matches!(
            err(6, 3),
            Error::InvalidGenerators {
                violation: GeneratorViolation::NotCoprime,
                ..
            }
        ));
        assert!(matches!(
            err(5, 3),
            Error::InvalidGenerators {
                violation: GeneratorViolation::SameParity,
                ..
            }
        ));
        assert!(EuclidParams::new(nat(6), nat(5)).is_ok());
    }

    #[test]
    fn primitivity_and_scaling() {
        assert!(triple(3, 4, 5).is_primitive());
        assert!(!triple(6, 8, 10).is_primitive());
        assert_eq!(triple(3, 4, 5).scale(&nat(111)), triple(333, 444, 555));
        // Scaling by an even factor makes both legs even; order by size.
        let t = triple(3, 4, 5).scale(&nat(2));
        assert_eq!(t.components(), [&nat(6), &nat(8), &nat(10)]);
    }

    #[test]
    fn profiles() {
        let p = triple(363, 484, 605).profile();
        assert_eq!(p.flags, [true, true, false]);
        assert_eq!(p.count, 2);
        assert_eq!(p.parity_string(), "OOO");

        let p = triple(3, 4, 5).profile();
        assert_eq!(p.count, 3);

        let p = triple(595, 468, 757).profile();
        assert_eq!(p.flags, [true, false, true]);
        assert_eq!(p.count, 2);
    }

    #[test]
    fn digit_parity_forms() {
        let f = triple(33, 56, 65).digit_parity_form();
        assert_eq!(f.pattern_string(), "EEE");
        assert!(!f.admissible);

        let f = triple(3, 4, 5).digit_parity_form();
        assert_eq!(f.pattern_string(), "OOO");
        assert!(f.admissible);

        let f = triple(11, 60, 61).digit_parity_form();
        assert_eq!(f.pattern_string(), "EEE");
        assert!(!f.admissible);

        let f = triple(313, 48984, 48985).digit_parity_form();
        assert_eq!(f.pattern_string(), "OOO");
        assert!(f.admissible);
    }

    #[test]
    fn divisibility_reports() {
        for (x, y, z) in [
            (3u128, 4u128, 5u128),
            (11, 60, 61),
            (595, 468, 757),
            (21, 20, 29),
            (313, 48984, 48985),
        ] {
            let r = triple(x, y, z).divisibility_report().unwrap();
            assert!(r.all_hold(), "({x}, {y}, {z})");
        }
        assert_eq!(
            triple(6, 8, 10).divisibility_report(),
            Err(Error::NotPrimitive)
        );
    }

    #[test]
    fn factor_forms() {
        assert_eq!(triple(3, 4, 5).factor_form().unwrap(), FactorForm::OddLeg3Hyp5);
        assert_eq!(triple(5, 12, 13).factor_form().unwrap(), FactorForm::OddLeg5Even12);
        assert_eq!(triple(15, 8, 17).factor_form().unwrap(), FactorForm::OddLeg15);
        assert_eq!(triple(7, 24, 25).factor_form().unwrap(), FactorForm::Even12Hyp5);
        assert_eq!(triple(21, 20, 29).factor_form().unwrap(), FactorForm::OddLeg3Even20);
        assert_eq!(triple(11, 60, 61).factor_form().unwrap(), FactorForm::Even60);
        assert_eq!(triple(33, 56, 65).factor_form().unwrap(), FactorForm::OddLeg3Hyp5);
        assert_eq!(
            triple(595, 468, 757).factor_form().unwrap(),
            FactorForm::OddLeg5Even12
        );
        assert_eq!(triple(9, 12, 15).factor_form(), Err(Error::NotPrimitive));

        assert!(FactorForm::Even60.excludes_all_palindromes());
        assert!(FactorForm::OddLeg3Even20.excludes_all_palindromes());
        assert!(!FactorForm::OddLeg3Hyp5.excludes_all_palindromes());
        assert_eq!(FactorForm::OddLeg3Hyp5.tag(), "3a-4b-5c");
    }

    #[test]
    fn prefilter_examples() {
        // (3, 4, 5): admissible, even leg ends in 4, hypotenuse reads 5.
        assert!(triple(3, 4, 5).all_palindrome_prefilter().unwrap());
        // (11, 60, 61): even leg ends in 0.
        assert!(!triple(11, 60, 61).all_palindrome_prefilter().unwrap());
        // (33, 56, 65): EEE pattern.
        assert!(!triple(33, 56, 65).all_palindrome_prefilter().unwrap());
        // (7, 24, 25): hypotenuse carries 5 but starts with 2.
        assert!(!triple(7, 24, 25).all_palindrome_prefilter().unwrap());
        // (595, 468, 757): odd leg reads 5...5 — passes, yet the even leg
        // is not a palindrome, showing the filter is one-sided.
        assert!(triple(595, 468, 757).all_palindrome_prefilter().unwrap());
        assert_eq!(
            triple(9, 12, 15).all_palindrome_prefilter(),
            Err(Error::NotPrimitive)
        );
    }

    #[test]
    fn every_generator_pair_yields_a_verified_primitive_triple() {
        // Exhaustive over s <= 60 here; the acceptance suite pushes the
        // same sweep to s <= 200.
        for s in 2u128..=60 {
            for t in 1..s {
                let Ok(p) = EuclidParams::new(nat(s), nat(t)) else {
                    continue;
                };
                let tr = Triple::from_euclid(&p);
                let [a, b, c] = tr.components();
                assert_eq!(a * a + b * b, c * c);
                assert!(tr.is_primitive(), "{tr}");
                assert!(tr.divisibility_report().unwrap().all_hold(), "{tr}");
                // Pairwise coprime, not merely gcd-of-three 1.
                assert!(a.gcd(b).is_one() && a.gcd(c).is_one() && b.gcd(c).is_one());
            }
        }
    }

    #[test]
    fn generator_pairs_cover_primitive_triples_exactly_once() {
        // Brute-force every primitive triple with hypotenuse <= 10^4 and
        // match it against the generated set.
        let mut brute = std::collections::BTreeSet::new();
        for c in 5u64..=10_000 {
            for a in 1.. {
                if 2 * a * a >= c * c {
                    break;
                }
                let b2 = c * c - a * a;
                let b = b2.isqrt();
                if b * b == b2 && a.gcd(&b) == 1 {
                    brute.insert((a, b, c));
                }
            }
        }

        let mut generated = std::collections::BTreeMap::new();
        for s in 2u64..=100 {
            for t in 1..s {
                let Ok(p) = EuclidParams::new(nat(s as u128), nat(t as u128)) else {
                    continue;
                };
                let tr = Triple::from_euclid(&p);
                let c = u64::try_from(tr.c()).unwrap();
                if c > 10_000 {
                    continue;
                }
                let a = u64::try_from(tr.a()).unwrap();
                let b = u64::try_from(tr.b()).unwrap();
                *generated.entry((a.min(b), a.max(b), c)).or_insert(0u32) += 1;
            }
        }

        assert_eq!(brute.len(), 1593);
        assert_eq!(
            generated.keys().copied().collect::<Vec<_>>(),
            brute.iter().copied().collect::<Vec<_>>()
        );
        assert!(generated.values().all(|&n| n == 1));
    }

    proptest! {
        #[test]
        fn scaling_preserves_identity_and_divides_back(
            s in 2u64..=80,
            t in 1u64..=79,
            m in 1u64..=1_000,
        ) {
            prop_assume!(t < s);
            let Ok(p) = EuclidParams::new(nat(s as u128), nat(t as u128)) else {
                return Ok(());
            };
            let base = Triple::from_euclid(&p);
            let scaled = base.scale(&nat(m as u128));
            let [a, b, c] = scaled.components();
            prop_assert_eq!(a * a + b * b, c * c);
            prop_assert_eq!(scaled.is_primitive(), m == 1);
            // The scale factor divides out of every component.
            let m = nat(m as u128);
            prop_assert!((a % &m).is_zero() && (b % &m).is_zero() && (c % &m).is_zero());
        }
    }
}
