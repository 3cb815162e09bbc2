//! The six constructive families of palindrome-bearing triples.
//!
//! Five non-primitive families scale a base triple — `(3, 4, 5)` or
//! `(11, 60, 61)` — by a structured multiplier (repdigits, base-100
//! repunits, squares of `10^k + 1`), producing components whose digit
//! patterns are predictable at every index. The one primitive family runs
//! the generator pair `(s, 1)` over even palindromes `s` whose digits stay
//! at or below 4, so that the even leg `2s` doubles digit-by-digit without
//! carries and stays palindromic.
//!
//! Every member carries its predicted digit templates; [`pattern_check`]
//! confirms prediction against the computed triple, palindrome counts, and
//! primitivity.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::digits::{self, DigitTemplate, Natural, Parity};
use crate::error::{Error, Result};
use crate::triples::Triple;

/// Identifier of a constructive family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// `f(n) * (11, 60, 61)` with `f` the base-100 repunit `1, 101,
    /// 10101, ...` — components repeat the two-digit blocks `11`, `60`,
    /// `61`.
    Nppt1A,
    /// `33...3 * (3, 4, 5)` — components `9...9`, `13...32`, `16...65`.
    Nppt1B,
    /// `(10^k + 1)² * (3, 4, 5)` — components like `30603`, `40804`,
    /// `51005`.
    Nppt2A,
    /// `22...2 * (3, 4, 5)` — components `6...6`, `8...8`, `1...10`.
    Nppt2B,
    /// `11...1 * (3, 4, 5)` — components `3...3`, `4...4`, `5...5`.
    Nppt3,
    /// Primitive family from generator pairs `(s, 1)`, `s` an even
    /// palindrome with digits in `{0, 1, 2, 3, 4}` and `s >= 4`; the even
    /// leg `2s` is always a palindrome.
    Ppt1,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [
        FamilyId::Nppt1A,
        FamilyId::Nppt1B,
        FamilyId::Nppt2A,
        FamilyId::Nppt2B,
        FamilyId::Nppt3,
        FamilyId::Ppt1,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyId::Nppt1A => "NPPT-1A",
            FamilyId::Nppt1B => "NPPT-1B",
            FamilyId::Nppt2A => "NPPT-2A",
            FamilyId::Nppt2B => "NPPT-2B",
            FamilyId::Nppt3 => "NPPT-3",
            FamilyId::Ppt1 => "PPT-1",
        }
    }

    /// Smallest valid member index: the block-repeat families start at 1,
    /// while the `(11, 60, 61)` family admits index 0 (multiplier 1).
    pub fn min_index(self) -> u32 {
        match self {
            FamilyId::Nppt1A => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<FamilyId, String> {
        let upper = s.to_ascii_uppercase();
        FamilyId::ALL
            .into_iter()
            .find(|f| f.tag() == upper)
            .ok_or_else(|| {
                format!(
                    "unknown family {s:?} (expected one of NPPT-1A, NPPT-1B, NPPT-2A, NPPT-2B, NPPT-3, PPT-1)"
                )
            })
    }
}

/// One member of a family: the triple at a given index together with the
/// digit patterns the family predicts for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub family: FamilyId,
    pub index: u32,
    pub triple: Triple,
    /// Predicted digit template of each canonical component.
    pub predicted_pattern: [DigitTemplate; 3],
    /// How many components the family construction makes palindromic.
    pub declared_pal_count: u8,
    pub primitive: bool,
}

/// The base-100 repunit multiplier `1, 101, 10101, ...`: `f(0) = 1`,
/// `f(n) = 100 f(n-1) + 1`, in closed form `(100^(n+1) - 1) / 99`.
pub fn f_multiplier(n: u32) -> Natural {
    (Natural::from(100u32).pow(n + 1) - 1u32) / Natural::from(99u32)
}

/// The ordered stream of generator values `s` for the primitive family:
/// even palindromes, digits at most 4, starting from 4.
fn ppt1_s_stream() -> impl Iterator<Item = Natural> {
    let four = Natural::from(4u32);
    (1u32..)
        .flat_map(|width| digits::enumerate_palindromes(width, width, Some(Parity::Even)))
        .filter(move |s| s >= &four && s.to_string().bytes().all(|b| b <= b'4'))
}

/// The first `limit` generator values of the primitive family, in
/// increasing order: `4, 22, 44, 202, 212, ...`.
pub fn ppt1_s_values(limit: usize) -> Vec<Natural> {
    ppt1_s_stream().take(limit).collect()
}

/// Build the member of `family` at `index`.
///
/// Block-repeat indices count blocks, so they start at 1; the
/// `(11, 60, 61)` family starts at 0. The primitive family's index is the
/// 1-based position in its generator stream.
pub fn member(family: FamilyId, index: u32) -> Result<FamilyMember> {
    if index < family.min_index() {
        return Err(Error::IndexOutOfRange {
            family: family.tag(),
            index,
        });
    }
    let n = index;
    let member = match family {
        FamilyId::Nppt1A => scaled(
            family,
            n,
            (11, 60, 61),
            f_multiplier(n),
            [
                vec![("11", n + 1)],
                vec![("60", n + 1)],
                vec![("61", n + 1)],
            ],
            1,
        ),
        FamilyId::Nppt1B => scaled(
            family,
            n,
            (3, 4, 5),
            digits::repeat_digit(3, n)?,
            [
                vec![("9", n)],
                vec![("1", 1), ("3", n - 1), ("2", 1)],
                vec![("1", 1), ("6", n - 1), ("5", 1)],
            ],
            1,
        ),
        FamilyId::Nppt2A => {
            let base = Natural::from(10u32).pow(n) + 1u32;
            let mult = &base * &base;
            let patterns = if n == 1 {
                [vec![("363", 1)], vec![("484", 1)], vec![("605", 1)]]
            } else {
                [
                    vec![("3", 1), ("0", n - 1), ("6", 1), ("0", n - 1), ("3", 1)],
                    vec![("4", 1), ("0", n - 1), ("8", 1), ("0", n - 1), ("4", 1)],
                    vec![("5", 1), ("0", n - 2), ("1", 1), ("0", n), ("5", 1)],
                ]
            };
            scaled(family, n, (3, 4, 5), mult, patterns, 2)
        }
        FamilyId::Nppt2B => scaled(
            family,
            n,
            (3, 4, 5),
            digits::repeat_digit(2, n)?,
            [
                vec![("6", n)],
                vec![("8", n)],
                vec![("1", n), ("0", 1)],
            ],
            2,
        ),
        FamilyId::Nppt3 => scaled(
            family,
            n,
            (3, 4, 5),
            digits::repeat_digit(1, n)?,
            [vec![("3", n)], vec![("4", n)], vec![("5", n)]],
            3,
        ),
        FamilyId::Ppt1 => {
            let s = ppt1_s_stream()
                .nth(n as usize - 1)
                .expect("the generator stream is unbounded");
            let params = crate::triples::EuclidParams::new(s, Natural::one())
                .expect("stream values are even and at least 4");
            let triple = Triple::from_euclid(&params);
            let predicted_pattern = [
                DigitTemplate::literal(&triple.a().to_string())?,
                DigitTemplate::literal(&triple.b().to_string())?,
                DigitTemplate::literal(&triple.c().to_string())?,
            ];
            let primitive = triple.is_primitive();
            FamilyMember {
                family,
                index: n,
                triple,
                predicted_pattern,
                declared_pal_count: 1,
                primitive,
            }
        }
    };
    Ok(member)
}

/// Assemble a scaled-base member, dropping zero-length runs from the
/// predicted templates (they appear at the smallest indices, where an
/// inner block degenerates).
fn scaled(
    family: FamilyId,
    index: u32,
    base: (u32, u32, u32),
    mult: Natural,
    runs: [Vec<(&str, u32)>; 3],
    declared_pal_count: u8,
) -> FamilyMember {
    let base = Triple::new(
        Natural::from(base.0),
        Natural::from(base.1),
        Natural::from(base.2),
    )
    .expect("family base triples satisfy the identity");
    let triple = base.scale(&mult);
    let predicted_pattern = runs.map(|r| {
        DigitTemplate::new(r.into_iter().filter(|(_, k)| *k > 0))
            .expect("family templates are well-formed")
    });
    let primitive = triple.is_primitive();
    FamilyMember {
        family,
        index,
        triple,
        predicted_pattern,
        declared_pal_count,
        primitive,
    }
}

/// Verify a member against its family's promises: every predicted
/// template must render to the actual component, the palindrome count
/// must match the declaration, and primitivity must be what the
/// construction implies.
///
/// The primitive family's palindrome promise is the relaxed one its
/// construction actually supports: the even leg is a palindrome and the
/// odd leg and hypotenuse are never both palindromic.
pub fn pattern_check(m: &FamilyMember) -> bool {
    let rendered_ok = m
        .predicted_pattern
        .iter()
        .zip(m.triple.components())
        .all(|(template, component)| &template.render() == component);
    if !rendered_ok {
        return false;
    }
    let profile = m.triple.profile();
    let primitive = m.triple.is_primitive();
    match m.family {
        FamilyId::Ppt1 => {
            profile.flags[1] && !(profile.flags[0] && profile.flags[2]) && primitive
        }
        _ => {
            profile.count == m.declared_pal_count
                && primitive == expects_primitive(m.family, m.index)
        }
    }
}

/// Whether the construction yields a primitive triple at this index: only
/// the multiplier-1 members and the generator-pair family are primitive.
fn expects_primitive(family: FamilyId, index: u32) -> bool {
    match family {
        FamilyId::Nppt1A => index == 0,
        FamilyId::Nppt3 => index == 1,
        FamilyId::Ppt1 => true,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u128) -> Natural {
        Natural::from(v)
    }

    fn comps(m: &FamilyMember) -> Vec<Natural> {
        m.triple.components().into_iter().cloned().collect()
    }

    #[test]
    fn repunit_multiplier() {
        assert_eq!(f_multiplier(0), nat(1));
        assert_eq!(f_multiplier(1), nat(101));
        assert_eq!(f_multiplier(2), nat(10101));
        for n in 1..=50 {
            assert_eq!(
                f_multiplier(n),
                f_multiplier(n - 1) * 100u32 + 1u32,
                "n = {n}"
            );
        }
    }

    #[test]
    fn generator_stream_for_primitive_family() {
        let s = ppt1_s_values(13);
        let expect: Vec<Natural> = [4u32, 22, 44, 202, 212, 222, 232, 242, 404, 414, 424, 434, 444]
            .into_iter()
            .map(Natural::from)
            .collect();
        assert_eq!(s, expect);

        let more = ppt1_s_values(40);
        assert!(more.contains(&nat(2002)));
        // Odd palindromes and digits above 4 never qualify.
        assert!(!more.contains(&nat(121)));
        assert!(!more.contains(&nat(262)));
        assert!(!more.contains(&nat(2)));
        for s in &more {
            assert_eq!(s % 2u32, Natural::from(0u32));
            assert!(digits::is_palindrome(s).unwrap());
        }
    }

    #[test]
    fn members_at_small_indices() {
        let m = member(FamilyId::Nppt1A, 0).unwrap();
        assert_eq!(comps(&m), vec![nat(11), nat(60), nat(61)]);
        assert!(m.primitive);

        let m = member(FamilyId::Nppt1A, 1).unwrap();
        assert_eq!(comps(&m), vec![nat(1111), nat(6060), nat(6161)]);
        assert!(!m.primitive);

        let m = member(FamilyId::Nppt1B, 2).unwrap();
        assert_eq!(comps(&m), vec![nat(99), nat(132), nat(165)]);

        let m = member(FamilyId::Nppt2A, 1).unwrap();
        assert_eq!(comps(&m), vec![nat(363), nat(484), nat(605)]);
        assert_eq!(m.triple.profile().count, 2);

        let m = member(FamilyId::Nppt2A, 2).unwrap();
        assert_eq!(comps(&m), vec![nat(30603), nat(40804), nat(51005)]);

        let m = member(FamilyId::Nppt2B, 2).unwrap();
        assert_eq!(comps(&m), vec![nat(66), nat(88), nat(110)]);

        let m = member(FamilyId::Nppt3, 3).unwrap();
        assert_eq!(comps(&m), vec![nat(333), nat(444), nat(555)]);

        let m = member(FamilyId::Ppt1, 1).unwrap();
        assert_eq!(comps(&m), vec![nat(15), nat(8), nat(17)]);
        assert!(m.primitive);

        // s = 22: legs 483 and 44, odd leg first.
        let m = member(FamilyId::Ppt1, 2).unwrap();
        assert_eq!(comps(&m), vec![nat(483), nat(44), nat(485)]);
    }

    #[test]
    fn index_floors() {
        for family in [
            FamilyId::Nppt1B,
            FamilyId::Nppt2A,
            FamilyId::Nppt2B,
            FamilyId::Nppt3,
            FamilyId::Ppt1,
        ] {
            assert_eq!(
                member(family, 0),
                Err(Error::IndexOutOfRange {
                    family: family.tag(),
                    index: 0
                }),
                "{family}"
            );
        }
        assert!(member(FamilyId::Nppt1A, 0).is_ok());
    }

    #[test]
    fn pattern_checks_hold_through_index_twelve() {
        for family in FamilyId::ALL {
            for index in family.min_index()..=12 {
                let m = member(family, index).unwrap();
                assert!(pattern_check(&m), "{family} index {index}");
            }
        }
    }

    #[test]
    fn deep_members_hold_their_shape() {
        for family in FamilyId::ALL {
            // The primitive family's 50th generator has only 5 digits;
            // others reach 50-plus digit components.
            let index = 50;
            let m = member(family, index).unwrap();
            assert!(pattern_check(&m), "{family} index {index}");
            let [a, b, c] = m.triple.components();
            assert_eq!(a * a + b * b, c * c, "{family} index {index}");
        }
        let widest = member(FamilyId::Nppt1A, 50).unwrap();
        assert!(digits::digit_count(widest.triple.c()).unwrap() > 100);
    }

    #[test]
    fn block_family_matches_concatenation() {
        // The (11, 60, 61) family's components are copy-concatenations of
        // the base components.
        for n in 0..=30 {
            let m = member(FamilyId::Nppt1A, n).unwrap();
            assert_eq!(m.triple.a(), &digits::concat_copies(&nat(11), n));
            assert_eq!(m.triple.b(), &digits::concat_copies(&nat(60), n));
            assert_eq!(m.triple.c(), &digits::concat_copies(&nat(61), n));
        }
    }

    #[test]
    fn family_tags_round_trip() {
        for family in FamilyId::ALL {
            assert_eq!(family.tag().parse::<FamilyId>().unwrap(), family);
            assert_eq!(
                family.tag().to_lowercase().parse::<FamilyId>().unwrap(),
                family
            );
        }
        assert!("NPPT-9".parse::<FamilyId>().is_err());
    }

    #[test]
    fn repdigit_family_stays_primitive_only_at_one() {
        let m = member(FamilyId::Nppt3, 1).unwrap();
        assert!(m.primitive);
        for k in 2..=20 {
            assert!(!member(FamilyId::Nppt3, k).unwrap().primitive);
        }
    }
}
