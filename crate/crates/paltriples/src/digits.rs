//! Decimal digit algebra over arbitrary-precision naturals.
//!
//! Everything in this module works on the exact base-10 representation of a
//! [`Natural`]; floating point is never involved. It supplies the palindrome
//! predicate, digit-run templates for writing numbers such as `12003331` as
//! `1 2 0_2 3_3 1`, the alternating digit sum behind the divisibility-by-11
//! test, and an ordered palindrome generator that never scans the integers.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative integer. All public operations in this
/// crate speak this type; fixed-width integers appear only inside search
/// loops.
pub type Natural = num_bigint::BigUint;

/// Parity of an integer value, or of a digit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    /// Parity of a length or count.
    pub fn of_len(len: usize) -> Parity {
        if len.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// One-letter form used in digit-count patterns such as `OEO`.
    pub fn letter(self) -> char {
        match self {
            Parity::Odd => 'O',
            Parity::Even => 'E',
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// Does the decimal expansion of `n` read the same in both directions?
///
/// Defined for positive `n` only; leading zeros do not exist in the
/// canonical expansion, so `0` is rejected rather than given a convention.
pub fn is_palindrome(n: &Natural) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::UndefinedForZero);
    }
    let s = n.to_string();
    Ok(s.bytes().eq(s.bytes().rev()))
}

/// The natural whose digits are those of `n` reversed. Trailing zeros of `n`
/// collapse: `reverse_digits(120) == 21`.
pub fn reverse_digits(n: &Natural) -> Natural {
    let rev: String = n.to_string().chars().rev().collect();
    rev.parse().expect("reversed digit string parses")
}

/// Number of decimal digits of a positive natural.
pub fn digit_count(n: &Natural) -> Result<usize> {
    if n.is_zero() {
        return Err(Error::UndefinedForZero);
    }
    Ok(n.to_string().len())
}

/// Concatenate `n + 1` copies of the decimal expansion of `a`.
///
/// The count convention follows the block-repeat notation used throughout
/// the crate: the subscript names the number of *extra* copies, so
/// `concat_copies(11, 0) == 11` and `concat_copies(60, 2) == 606060`.
pub fn concat_copies(a: &Natural, n: u32) -> Natural {
    a.to_string()
        .repeat(n as usize + 1)
        .parse()
        .expect("concatenated digit string parses")
}

/// The `k`-digit repdigit `d d ... d`, e.g. `repeat_digit(3, 2) == 33`.
pub fn repeat_digit(d: u8, k: u32) -> Result<Natural> {
    if !(1..=9).contains(&d) {
        return Err(Error::DigitOutOfRange(d));
    }
    if k == 0 {
        return Err(Error::ZeroRepeat);
    }
    let s: String = std::iter::repeat_n(char::from(b'0' + d), k as usize)
        .collect();
    Ok(s.parse().expect("repdigit string parses"))
}

/// Alternating sum of the digits of `n`, most significant digit first:
/// `d0 - d1 + d2 - ...`. Satisfies `alternating_digit_sum(n) % 11 == 0`
/// exactly when `11` divides `n`; the signed value is congruent to `n`
/// modulo 11 when the digit count is odd and to `-n` when it is even.
pub fn alternating_digit_sum(n: &Natural) -> i64 {
    n.to_string()
        .bytes()
        .enumerate()
        .map(|(i, b)| {
            let d = i64::from(b - b'0');
            if i % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .sum()
}

/// A number described as a sequence of repeated digit runs.
///
/// Each item is a run of digits together with a repeat count; the expansion
/// concatenates every run `repeat` times in order. `1 2 0_2 3_3 1` expands
/// to `12003331`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitTemplate {
    items: Vec<(String, u32)>,
}

impl DigitTemplate {
    /// Build a template from `(run, repeat)` items, validating that every
    /// run is a nonempty string of decimal digits, every repeat is
    /// positive, and the expansion does not start with `0`.
    pub fn new<S: Into<String>>(items: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        let items: Vec<(String, u32)> = items.into_iter().map(|(s, k)| (s.into(), k)).collect();
        if items.is_empty() {
            return Err(Error::EmptyTemplate);
        }
        for (run, repeat) in &items {
            if run.is_empty() || !run.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::BadTemplateRun(run.clone()));
            }
            if *repeat == 0 {
                return Err(Error::ZeroRepeat);
            }
        }
        if items[0].0.starts_with('0') {
            return Err(Error::TemplateLeadingZero);
        }
        Ok(DigitTemplate { items })
    }

    /// Single-run template spelling out `digits` once.
    pub fn literal(digits: &str) -> Result<Self> {
        Self::new([(digits, 1)])
    }

    pub fn items(&self) -> &[(String, u32)] {
        &self.items
    }

    /// The expanded digit string.
    pub fn expansion(&self) -> String {
        self.items
            .iter()
            .map(|(run, repeat)| run.repeat(*repeat as usize))
            .collect()
    }

    /// The natural the template denotes.
    pub fn render(&self) -> Natural {
        self.expansion().parse().expect("template expands to digits")
    }
}

impl fmt::Display for DigitTemplate {
    /// Human-oriented form: runs separated by spaces, with `_k` marking a
    /// repeat count greater than one, e.g. `1 2 0_2 3_3 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (run, repeat)) in self.items.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *repeat == 1 {
                write!(f, "{run}")?;
            } else {
                write!(f, "{run}_{repeat}")?;
            }
        }
        Ok(())
    }
}

/// All palindromes with `d_min..=d_max` digits in increasing numeric order,
/// optionally restricted to odd or even values.
///
/// Palindromes are generated from their leading halves, so the cost is
/// proportional to the number of palindromes produced, not to the size of
/// the numeric range. Digit bounds outside `1 <= d_min <= d_max` yield an
/// empty iterator.
pub fn enumerate_palindromes(
    d_min: u32,
    d_max: u32,
    parity: Option<Parity>,
) -> impl Iterator<Item = Natural> {
    let lo = d_min.max(1);
    (lo..=d_max).flat_map(move |width| HalfRange::new(width, parity))
}

/// Iterator over the palindromes of one fixed digit width, driven by the
/// numeric half-prefix.
struct HalfRange {
    width: u32,
    next_half: u64,
    end_half: u64,
    parity: Option<Parity>,
}

impl HalfRange {
    fn new(width: u32, parity: Option<Parity>) -> HalfRange {
        let half_len = width.div_ceil(2);
        // A u64 half covers widths up to 38 digits; family patterns and
        // searches stay far below that, and wider requests would not be
        // enumerable in any case.
        assert!(half_len <= 19, "palindrome width {width} is not enumerable");
        let next_half = 10u64.pow(half_len - 1);
        HalfRange {
            width,
            next_half,
            end_half: next_half * 10,
            parity,
        }
    }
}

impl Iterator for HalfRange {
    type Item = Natural;

    fn next(&mut self) -> Option<Natural> {
        while self.next_half < self.end_half {
            let half = self.next_half.to_string();
            self.next_half += 1;
            if let Some(parity) = self.parity {
                // The value's last digit is the mirror of its first.
                let first = half.as_bytes()[0] - b'0';
                let is_even_value = first.is_multiple_of(2);
                if (parity == Parity::Even) != is_even_value {
                    continue;
                }
            }
            return Some(mirror(&half, self.width));
        }
        None
    }
}

/// Reflect a leading half into a full palindrome of the given width.
fn mirror(half: &str, width: u32) -> Natural {
    let mut s = String::with_capacity(width as usize);
    s.push_str(half);
    let skip = (width % 2) as usize;
    s.extend(half.chars().rev().skip(skip));
    s.parse().expect("mirrored digit string parses")
}
