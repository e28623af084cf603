//! Exact result types and their text renderings.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision integer used for every Wiener index.
pub type ExactInt = BigInt;

/// Reduced rational with positive denominator, used for average distances.
pub type ExactRational = BigRational;

/// `num/den`, always with a slash (`3/1` rather than `3`).
pub fn format_rational(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Decimal rendering rounded (half away from zero) to `digits` significant
/// digits, trailing zeros removed. `digits = 0` is treated as 1.
pub fn to_decimal(value: &BigRational, digits: usize) -> String {
    let digits = digits.max(1);
    if value.is_zero() {
        return "0".to_string();
    }
    let negative = value.is_negative();
    let num = value.numer().abs();
    let den = value.denom().clone();

    // Find e with 10^e <= |value| < 10^(e+1).
    let int_part = &num / &den;
    let exponent: i64 = if int_part.is_zero() {
        let mut e = -1;
        let mut scaled = &num * 10u32;
        while scaled < den {
            scaled *= 10u32;
            e -= 1;
        }
        e
    } else {
        int_part.to_string().len() as i64 - 1
    };

    // scale = number of fractional digits kept
    let mut scale = digits as i64 - 1 - exponent;
    let mut rounded = round_scaled(&num, &den, scale);
    if rounded.to_string().len() > digits {
        // rounding carried into a new leading digit (e.g. 9.99 -> 10.0)
        scale -= 1;
        rounded = round_scaled(&num, &den, scale);
    }

    let mut text = rounded.to_string();
    if scale > 0 {
        let scale = scale as usize;
        if text.len() <= scale {
            text = format!("{}{}", "0".repeat(scale + 1 - text.len()), text);
        }
        let split = text.len() - scale;
        let (whole, frac) = text.split_at(split);
        let frac = frac.trim_end_matches('0');
        text = if frac.is_empty() {
            whole.to_string()
        } else {
            format!("{whole}.{frac}")
        };
    } else if scale < 0 {
        text.push_str(&"0".repeat((-scale) as usize));
    }
    if negative {
        text.insert(0, '-');
    }
    text
}

/// `round(num / den * 10^scale)` for positive `num`, `den`.
fn round_scaled(num: &BigInt, den: &BigInt, scale: i64) -> BigInt {
    let ten = BigInt::from(10u32);
    let (n, d) = if scale >= 0 {
        (num * ten.pow(scale as u32), den.clone())
    } else {
        (num.clone(), den * ten.pow((-scale) as u32))
    };
    let (q, r) = n.div_rem(&d);
    if (r * 2u32) >= d {
        q + 1u32
    } else {
        debug_assert!(q.sign() != Sign::Minus);
        q
    }
}
