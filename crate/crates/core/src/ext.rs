//! Reals extended with a `-inf` sentinel used to pad inadmissible payoff cells.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// A real number or `-inf`.
///
/// Arithmetic follows the padding convention: `-inf + x = -inf`,
/// `c * -inf = -inf` for `c > 0` and `0 * -inf = 0`.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct ExtReal(f64);

/// Relative tolerance under which two payoffs count as tied.
pub const TIE_TOL: f64 = 1e-12;

impl ExtReal {
    pub const NEG_INF: ExtReal = ExtReal(f64::NEG_INFINITY);
    pub const ZERO: ExtReal = ExtReal(0.0);

    /// Wraps a finite value. Panics on NaN or infinities.
    pub fn new(x: f64) -> Self {
        assert!(x.is_finite(), "ExtReal::new requires a finite value, got {x}");
        ExtReal(x)
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_neg_inf(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    /// The finite value, or `None` for `-inf`.
    pub fn value(self) -> Option<f64> {
        self.is_finite().then_some(self.0)
    }

    /// Raw `f64` view (`-inf` maps to `f64::NEG_INFINITY`).
    pub fn to_f64(self) -> f64 {
        self.0
    }

    /// Multiplies by a real weight with `0 * -inf = 0`.
    ///
    /// Negative weights on `-inf` are not meaningful and panic.
    pub fn scale(self, w: f64) -> Self {
        if w == 0.0 {
            return ExtReal::ZERO;
        }
        if self.is_neg_inf() {
            assert!(w > 0.0, "negative weight applied to -inf");
            return self;
        }
        ExtReal(self.0 * w)
    }

    /// Whether `self` is within rounding of `best`: relative gap at most
    /// [`TIE_TOL`]. Expected payoffs are sums of products, so exact ties in
    /// theory can differ in the last bits.
    pub fn ties(self, best: Self) -> bool {
        match (self.value(), best.value()) {
            (Some(x), Some(b)) => b - x <= TIE_TOL * b.abs().max(1.0),
            (None, None) => true,
            _ => false,
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl From<f64> for ExtReal {
    /// `f64::NEG_INFINITY` maps to `-inf`; any other non-finite value panics.
    fn from(x: f64) -> Self {
        if x == f64::NEG_INFINITY {
            ExtReal::NEG_INF
        } else {
            ExtReal::new(x)
        }
    }
}

impl From<Option<f64>> for ExtReal {
    fn from(x: Option<f64>) -> Self {
        x.map_or(ExtReal::NEG_INF, ExtReal::new)
    }
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        ExtReal(self.0 + rhs.0)
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_neg_inf() {
            f.write_str("-inf")
        } else if let Some(p) = f.precision() {
            write!(f, "{:.*}", p, self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Converts a row of plain reals.
pub fn ext_row(values: &[f64]) -> Vec<ExtReal> {
    values.iter().copied().map(ExtReal::from).collect()
}

/// Returns the finite values of a row, or `None` if any entry is `-inf`.
pub fn finite_row(values: &[ExtReal]) -> Option<Vec<f64>> {
    values.iter().map(|v| v.value()).collect()
}
