//! Scalar abstraction shared by the exact and floating pipelines.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive};
use serde_json::Value;

/// Relative tolerance used to snap floating quantities onto transition hyperplanes.
pub const DEFAULT_SNAP_TOL: f64 = 1e-9;

/// Field element usable by every combinatorial routine in the crate.
///
/// Rationals compare exactly; floats treat values within `rel_tol * scale` of zero as zero.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    /// True when arithmetic is exact.
    const EXACT: bool;

    fn to_f64(&self) -> f64;

    /// Exact value of a finite float for rationals, identity for floats.
    fn from_f64(x: f64) -> Self;

    fn ratio(n: i64, d: i64) -> Self;

    /// Sign of `self`, snapping to zero when `|self| <= rel_tol * |scale|` (floats only).
    fn snap_sign(&self, scale: &Self, rel_tol: f64) -> i8;

    /// Parses integers, fractions `p/q` and (floats only) decimal literals.
    fn parse_scalar(s: &str) -> Option<Self>;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Option<Self>;
}

/// Exact sign of any scalar.
pub fn sign<T: Scalar>(x: &T) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn max_abs<T: Scalar>(xs: &[T]) -> T {
    xs.iter()
        .map(|x| x.abs())
        .fold(T::zero(), |m, x| if x > m { x } else { m })
}

fn parse_fraction<T: Scalar>(s: &str, parse: impl Fn(&str) -> Option<T>) -> Option<T> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse(n.trim())?;
            let d = parse(d.trim())?;
            if d.is_zero() {
                None
            } else {
                Some(n / d)
            }
        }
        None => parse(s),
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn from_f64(x: f64) -> Self {
                x as $t
            }

            fn ratio(n: i64, d: i64) -> Self {
                n as $t / d as $t
            }

            fn snap_sign(&self, scale: &Self, rel_tol: f64) -> i8 {
                let band = (rel_tol as $t) * scale.abs();
                if self.abs() <= band {
                    0
                } else if *self > 0.0 {
                    1
                } else {
                    -1
                }
            }

            fn parse_scalar(s: &str) -> Option<Self> {
                parse_fraction(s, |t| <$t>::from_str(t).ok().filter(|x| x.is_finite()))
            }

            fn to_json(&self) -> Value {
                serde_json::Number::from_f64(*self as f64)
                    .map(Value::Number)
                    .unwrap_or(Value::Null)
            }

            fn from_json(v: &Value) -> Option<Self> {
                match v {
                    Value::Number(n) => n.as_f64().map(|x| x as $t),
                    Value::String(s) => Self::parse_scalar(s),
                    _ => None,
                }
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_f64(x: f64) -> Self {
        BigRational::from_float(x).expect("finite float")
    }

    fn ratio(n: i64, d: i64) -> Self {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn snap_sign(&self, _scale: &Self, _rel_tol: f64) -> i8 {
        sign(self)
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        parse_fraction(s, |t| {
            BigInt::from_str(t)
                .ok()
                .map(|n| BigRational::new(n, BigInt::one()))
        })
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Option<Self> {
        match v {
            Value::String(s) => Self::parse_scalar(s),
            Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(BigInt::from(i))),
            _ => None,
        }
    }
}
