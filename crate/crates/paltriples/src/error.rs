//! Error type shared by every module in the crate.

use crate::digits::Natural;

pub type Result<T> = std::result::Result<T, Error>;

/// Which of the generator-pair conditions a candidate `(s, t)` violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorViolation {
    /// The pair does not satisfy `s > t > 0`.
    NotDescending,
    /// `s` and `t` share a common factor greater than 1.
    NotCoprime,
    /// `s` and `t` are both odd or both even.
    SameParity,
}

impl std::fmt::Display for GeneratorViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GeneratorViolation::NotDescending => "requires s > t > 0",
            GeneratorViolation::NotCoprime => "s and t must be coprime",
            GeneratorViolation::SameParity => "s and t must have opposite parity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation is undefined for 0")]
    UndefinedForZero,

    #[error("digit must lie in 1..=9, got {0}")]
    DigitOutOfRange(u8),

    #[error("repeat count must be positive")]
    ZeroRepeat,

    #[error("digit template needs at least one run")]
    EmptyTemplate,

    #[error("template run {0:?} must be a nonempty string of decimal digits")]
    BadTemplateRun(String),

    #[error("template expansion must not start with 0")]
    TemplateLeadingZero,

    #[error("invalid generator pair (s = {s}, t = {t}): {violation}")]
    InvalidGenerators {
        s: Natural,
        t: Natural,
        violation: GeneratorViolation,
    },

    #[error("triple components must be positive")]
    ZeroComponent,

    #[error("({x}, {y}, {z}) does not satisfy x\u{b2} + y\u{b2} = z\u{b2}")]
    NotPythagorean { x: Natural, y: Natural, z: Natural },

    #[error("operation requires a primitive triple")]
    NotPrimitive,

    #[error("family {family} has no member at index {index}")]
    IndexOutOfRange { family: &'static str, index: u32 },

    #[error("odd-leg anchor must be an odd number, at least 3")]
    BadOddLegAnchor,

    #[error("even-leg anchor must be an even number, at least 4")]
    BadEvenLegAnchor,

    #[error("hypotenuse anchor must be at least 5")]
    BadHypotenuseAnchor,

    #[error("digit range {min}..={max} is invalid (need 1 <= min <= max)")]
    BadDigitRange { min: u32, max: u32 },

    #[error("euclid search needs at least one of max-s or max-z")]
    UnboundedEuclidQuery,

    #[error("{what} = {value} exceeds the supported limit {limit}")]
    BoundTooLarge {
        what: &'static str,
        value: Natural,
        limit: Natural,
    },
}
