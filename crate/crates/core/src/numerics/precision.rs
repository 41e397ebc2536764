use serde::{Deserialize, Serialize};

pub const DEFAULT_GUARD_DIGITS: u32 = 10;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Requested decimal digits plus internal guard digits.
///
/// Every [`BigReal`](super::BigReal) produced under a context is computed with
/// `digits + guard` decimal digits of binary mantissa.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
}

impl PrecisionContext {
    /// Panics if `digits` is zero.
    pub fn new(digits: u32) -> Self {
        Self::with_guard(digits, DEFAULT_GUARD_DIGITS)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Self {
        assert!(digits > 0, "precision context needs at least one digit");
        PrecisionContext { digits, guard }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Binary mantissa width used for every operation under this context.
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32 + 4
    }

    /// Same guard, at least `digits` requested digits.
    pub fn at_least(&self, digits: u32) -> Self {
        PrecisionContext {
            digits: self.digits.max(digits),
            guard: self.guard,
        }
    }

    /// Same guard, exactly `digits` requested digits.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::with_guard(digits, self.guard)
    }

    /// Wider of the two contexts.
    pub fn widest(self, other: Self) -> Self {
        if other.bits() > self.bits() {
            other
        } else {
            self
        }
    }

    /// `10^(-digits)`, the nominal resolution as an f64 exponent.
    pub fn tolerance_exponent(&self) -> i64 {
        -i64::from(self.digits)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext::new(40)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_cover_working_digits() {
        let ctx = PrecisionContext::new(40);
        assert_eq!(ctx.working_digits(), 50);
        assert!(f64::from(ctx.bits()) >= 50.0 * LOG2_10);
    }

    #[test]
    fn widest_and_at_least() {
        let a = PrecisionContext::new(30);
        let b = PrecisionContext::new(80);
        assert_eq!(a.widest(b), b);
        assert_eq!(b.widest(a), b);
        assert_eq!(a.at_least(50).digits(), 50);
        assert_eq!(b.at_least(50).digits(), 80);
    }
}
