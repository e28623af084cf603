//! Exact polynomial evaluation of the closed-form Wiener index and average
//! distance of ISC(p, q, m, n) and of the H, T, BT families.
//!
//! Each case numerator is stored as a coefficient table. A term
//! `(c, [a, b, d, e])` stands for `c * m^a * n^b * p^d * q^e`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{IscError, Result};
use crate::params::{special_family_params, CaseKind, Family, IscParams};

pub(crate) type Term = (i64, [u32; 4]);

/// Case 1 numerator, divide by 960.
pub(crate) const CASE1_NUMERATOR: &[Term] = &[
    (-32, [5, 0, 0, 0]),
    (80, [4, 0, 0, 1]),
    (160, [4, 0, 0, 0]),
    (320, [3, 2, 0, 0]),
    (1280, [3, 1, 0, 0]),
    (-80, [3, 0, 2, 0]),
    (-80, [3, 0, 0, 2]),
    (-320, [3, 0, 0, 1]),
    (1120, [3, 0, 0, 0]),
    (480, [2, 3, 0, 0]),
    (1920, [2, 2, 0, 0]),
    (-240, [2, 1, 2, 0]),
    (-240, [2, 1, 0, 2]),
    (1920, [2, 1, 0, 0]),
    (120, [2, 0, 2, 1]),
    (-240, [2, 0, 2, 0]),
    (40, [2, 0, 0, 3]),
    (-240, [2, 0, 0, 2]),
    (240, [2, 0, 0, 1]),
    (-160, [2, 0, 0, 0]),
    (280, [1, 4, 0, 0]),
    (1280, [1, 3, 0, 0]),
    (-240, [1, 2, 2, 0]),
    (-240, [1, 2, 0, 2]),
    (1680, [1, 2, 0, 0]),
    (80, [1, 1, 3, 0]),
    (-480, [1, 1, 2, 0]),
    (-80, [1, 1, 1, 0]),
    (80, [1, 1, 0, 3]),
    (-480, [1, 1, 0, 2]),
    (-80, [1, 1, 0, 1]),
    (320, [1, 1, 0, 0]),
    (-10, [1, 0, 4, 0]),
    (160, [1, 0, 3, 0]),
    (60, [1, 0, 2, 2]),
    (-240, [1, 0, 2, 1]),
    (-120, [1, 0, 2, 0]),
    (-160, [1, 0, 1, 0]),
    (-10, [1, 0, 0, 4]),
    (80, [1, 0, 0, 3]),
    (-120, [1, 0, 0, 2]),
    (-128, [1, 0, 0, 0]),
    (56, [0, 5, 0, 0]),
    (280, [0, 4, 0, 0]),
    (-80, [0, 3, 2, 0]),
    (-80, [0, 3, 0, 2]),
    (400, [0, 3, 0, 0]),
    (40, [0, 2, 3, 0]),
    (-240, [0, 2, 2, 0]),
    (-40, [0, 2, 1, 0]),
    (40, [0, 2, 0, 3]),
    (-240, [0, 2, 0, 2]),
    (-40, [0, 2, 0, 1]),
    (80, [0, 2, 0, 0]),
    (-10, [0, 1, 4, 0]),
    (80, [0, 1, 3, 0]),
    (60, [0, 1, 2, 2]),
    (-120, [0, 1, 2, 0]),
    (-80, [0, 1, 1, 0]),
    (-10, [0, 1, 0, 4]),
    (80, [0, 1, 0, 3]),
    (-120, [0, 1, 0, 2]),
    (-80, [0, 1, 0, 1]),
    (-96, [0, 1, 0, 0]),
    (4, [0, 0, 5, 0]),
    (5, [0, 0, 4, 1]),
    (-10, [0, 0, 4, 0]),
    (-20, [0, 0, 3, 2]),
    (-20, [0, 0, 3, 0]),
    (-10, [0, 0, 2, 3]),
    (60, [0, 0, 2, 2]),
    (80, [0, 0, 2, 1]),
    (40, [0, 0, 2, 0]),
    (20, [0, 0, 1, 2]),
    (16, [0, 0, 1, 0]),
    (5, [0, 0, 0, 5]),
    (-10, [0, 0, 0, 4]),
    (40, [0, 0, 0, 2]),
    (-80, [0, 0, 0, 1]),
];

/// Case 2 numerator, divide by 480.
pub(crate) const CASE2_NUMERATOR: &[Term] = &[
    (160, [3, 2, 0, 0]),
    (640, [3, 1, 0, 0]),
    (640, [3, 0, 0, 0]),
    (240, [2, 3, 0, 0]),
    (960, [2, 2, 0, 0]),
    (-120, [2, 1, 2, 0]),
    (-120, [2, 1, 0, 2]),
    (960, [2, 1, 0, 0]),
    (-240, [2, 0, 2, 0]),
    (-240, [2, 0, 0, 2]),
    (140, [1, 4, 0, 0]),
    (640, [1, 3, 0, 0]),
    (-120, [1, 2, 2, 0]),
    (-120, [1, 2, 0, 2]),
    (840, [1, 2, 0, 0]),
    (40, [1, 1, 3, 0]),
    (-240, [1, 1, 2, 0]),
    (-40, [1, 1, 1, 0]),
    (40, [1, 1, 0, 3]),
    (-240, [1, 1, 0, 2]),
    (-40, [1, 1, 0, 1]),
    (160, [1, 1, 0, 0]),
    (80, [1, 0, 3, 0]),
    (60, [1, 0, 2, 2]),
    (-80, [1, 0, 1, 0]),
    (80, [1, 0, 0, 3]),
    (-80, [1, 0, 0, 1]),
    (-160, [1, 0, 0, 0]),
    (28, [0, 5, 0, 0]),
    (140, [0, 4, 0, 0]),
    (-40, [0, 3, 2, 0]),
    (-40, [0, 3, 0, 2]),
    (200, [0, 3, 0, 0]),
    (20, [0, 2, 3, 0]),
    (-120, [0, 2, 2, 0]),
    (-20, [0, 2, 1, 0]),
    (20, [0, 2, 0, 3]),
    (-120, [0, 2, 0, 2]),
    (-20, [0, 2, 0, 1]),
    (40, [0, 2, 0, 0]),
    (-5, [0, 1, 4, 0]),
    (40, [0, 1, 3, 0]),
    (30, [0, 1, 2, 2]),
    (-60, [0, 1, 2, 0]),
    (-40, [0, 1, 1, 0]),
    (-5, [0, 1, 0, 4]),
    (40, [0, 1, 0, 3]),
    (-60, [0, 1, 0, 2]),
    (-40, [0, 1, 0, 1]),
    (-48, [0, 1, 0, 0]),
    (2, [0, 0, 5, 0]),
    (-10, [0, 0, 4, 0]),
    (-10, [0, 0, 3, 2]),
    (-10, [0, 0, 3, 0]),
    (-10, [0, 0, 2, 3]),
    (10, [0, 0, 2, 1]),
    (40, [0, 0, 2, 0]),
    (10, [0, 0, 1, 2]),
    (8, [0, 0, 1, 0]),
    (2, [0, 0, 0, 5]),
    (-10, [0, 0, 0, 4]),
    (-10, [0, 0, 0, 3]),
    (40, [0, 0, 0, 2]),
    (8, [0, 0, 0, 1]),
];

/// Case 3 numerator, divide by 1920.
pub(crate) const CASE3_NUMERATOR: &[Term] = &[
    (-32, [5, 0, 0, 0]),
    (80, [4, 0, 1, 0]),
    (80, [4, 0, 0, 1]),
    (160, [4, 0, 0, 0]),
    (640, [3, 2, 0, 0]),
    (2560, [3, 1, 0, 0]),
    (-80, [3, 0, 2, 0]),
    (-160, [3, 0, 1, 1]),
    (-320, [3, 0, 1, 0]),
    (-80, [3, 0, 0, 2]),
    (-320, [3, 0, 0, 1]),
    (2400, [3, 0, 0, 0]),
    (960, [2, 3, 0, 0]),
    (3840, [2, 2, 0, 0]),
    (-480, [2, 1, 2, 0]),
    (-480, [2, 1, 0, 2]),
    (3840, [2, 1, 0, 0]),
    (40, [2, 0, 3, 0]),
    (120, [2, 0, 2, 1]),
    (-720, [2, 0, 2, 0]),
    (120, [2, 0, 1, 2]),
    (480, [2, 0, 1, 1]),
    (240, [2, 0, 1, 0]),
    (40, [2, 0, 0, 3]),
    (-720, [2, 0, 0, 2]),
    (240, [2, 0, 0, 1]),
    (-160, [2, 0, 0, 0]),
    (560, [1, 4, 0, 0]),
    (2560, [1, 3, 0, 0]),
    (-480, [1, 2, 2, 0]),
    (-480, [1, 2, 0, 2]),
    (3360, [1, 2, 0, 0]),
    (160, [1, 1, 3, 0]),
    (-960, [1, 1, 2, 0]),
    (-160, [1, 1, 1, 0]),
    (160, [1, 1, 0, 3]),
    (-960, [1, 1, 0, 2]),
    (-160, [1, 1, 0, 1]),
    (640, [1, 1, 0, 0]),
    (-10, [1, 0, 4, 0]),
    (-40, [1, 0, 3, 1]),
    (240, [1, 0, 3, 0]),
    (180, [1, 0, 2, 2]),
    (-240, [1, 0, 2, 1]),
    (-120, [1, 0, 2, 0]),
    (-40, [1, 0, 1, 3]),
    (-240, [1, 0, 1, 2]),
    (-240, [1, 0, 1, 1]),
    (-160, [1, 0, 1, 0]),
    (-10, [1, 0, 0, 4]),
    (240, [1, 0, 0, 3]),
    (-120, [1, 0, 0, 2]),
    (-160, [1, 0, 0, 1]),
    (-448, [1, 0, 0, 0]),
    (112, [0, 5, 0, 0]),
    (560, [0, 4, 0, 0]),
    (-160, [0, 3, 2, 0]),
    (-160, [0, 3, 0, 2]),
    (800, [0, 3, 0, 0]),
    (80, [0, 2, 3, 0]),
    (-480, [0, 2, 2, 0]),
    (-80, [0, 2, 1, 0]),
    (80, [0, 2, 0, 3]),
    (-480, [0, 2, 0, 2]),
    (-80, [0, 2, 0, 1]),
    (160, [0, 2, 0, 0]),
    (-20, [0, 1, 4, 0]),
    (160, [0, 1, 3, 0]),
    (120, [0, 1, 2, 2]),
    (-240, [0, 1, 2, 0]),
    (-160, [0, 1, 1, 0]),
    (-20, [0, 1, 0, 4]),
    (160, [0, 1, 0, 3]),
    (-240, [0, 1, 0, 2]),
    (-160, [0, 1, 0, 1]),
    (-192, [0, 1, 0, 0]),
    (9, [0, 0, 5, 0]),
    (5, [0, 0, 4, 1]),
    (-30, [0, 0, 4, 0]),
    (-30, [0, 0, 3, 2]),
    (40, [0, 0, 3, 1]),
    (-20, [0, 0, 3, 0]),
    (-30, [0, 0, 2, 3]),
    (60, [0, 0, 2, 2]),
    (100, [0, 0, 2, 1]),
    (120, [0, 0, 2, 0]),
    (5, [0, 0, 1, 4]),
    (40, [0, 0, 1, 3]),
    (100, [0, 0, 1, 2]),
    (-80, [0, 0, 1, 1]),
    (-64, [0, 0, 1, 0]),
    (9, [0, 0, 0, 5]),
    (-30, [0, 0, 0, 4]),
    (-20, [0, 0, 0, 3]),
    (120, [0, 0, 0, 2]),
    (-64, [0, 0, 0, 1]),
];

/// T(n, p) numerator (only n and p appear), divide by 960.
pub(crate) const TRAPEZIUM_NUMERATOR: &[Term] = &[
    (11, [0, 5, 0, 0]),
    (220, [0, 4, 0, 0]),
    (-30, [0, 3, 2, 0]),
    (1400, [0, 3, 0, 0]),
    (20, [0, 2, 3, 0]),
    (-360, [0, 2, 2, 0]),
    (-20, [0, 2, 1, 0]),
    (3440, [0, 2, 0, 0]),
    (-5, [0, 1, 4, 0]),
    (160, [0, 1, 3, 0]),
    (-880, [0, 1, 2, 0]),
    (-160, [0, 1, 1, 0]),
    (3344, [0, 1, 0, 0]),
    (4, [0, 0, 5, 0]),
    (-20, [0, 0, 4, 0]),
    (140, [0, 0, 3, 0]),
    (-400, [0, 0, 2, 0]),
    (-144, [0, 0, 1, 0]),
    (960, [0, 0, 0, 0]),
];

/// BT(n, p, q) numerator, divide by 960.
pub(crate) const BITRAPEZIUM_NUMERATOR: &[Term] = &[
    (56, [0, 5, 0, 0]),
    (560, [0, 4, 0, 0]),
    (-80, [0, 3, 2, 0]),
    (-80, [0, 3, 0, 2]),
    (2160, [0, 3, 0, 0]),
    (40, [0, 2, 3, 0]),
    (-480, [0, 2, 2, 0]),
    (-40, [0, 2, 1, 0]),
    (40, [0, 2, 0, 3]),
    (-480, [0, 2, 0, 2]),
    (-40, [0, 2, 0, 1]),
    (4000, [0, 2, 0, 0]),
    (-10, [0, 1, 4, 0]),
    (160, [0, 1, 3, 0]),
    (60, [0, 1, 2, 2]),
    (-840, [0, 1, 2, 0]),
    (-160, [0, 1, 1, 0]),
    (-10, [0, 1, 0, 4]),
    (160, [0, 1, 0, 3]),
    (-840, [0, 1, 0, 2]),
    (-160, [0, 1, 0, 1]),
    (3424, [0, 1, 0, 0]),
    (4, [0, 0, 5, 0]),
    (5, [0, 0, 4, 1]),
    (-20, [0, 0, 4, 0]),
    (-20, [0, 0, 3, 2]),
    (140, [0, 0, 3, 0]),
    (-10, [0, 0, 2, 3]),
    (120, [0, 0, 2, 2]),
    (-40, [0, 0, 2, 1]),
    (-400, [0, 0, 2, 0]),
    (20, [0, 0, 1, 2]),
    (-144, [0, 0, 1, 0]),
    (5, [0, 0, 0, 5]),
    (-20, [0, 0, 0, 4]),
    (120, [0, 0, 0, 3]),
    (-400, [0, 0, 0, 2]),
    (-80, [0, 0, 0, 1]),
    (960, [0, 0, 0, 0]),
];
/// `m, n, p, q` and their powers up to the fifth.
struct Powers {
    table: [[BigInt; 6]; 4],
}

impl Powers {
    fn new(m: &BigInt, n: &BigInt, p: &BigInt, q: &BigInt) -> Self {
        let row = |x: &BigInt| {
            let mut r: [BigInt; 6] = Default::default();
            r[0] = BigInt::one();
            for i in 1..6 {
                r[i] = &r[i - 1] * x;
            }
            r
        };
        Powers {
            table: [row(m), row(n), row(p), row(q)],
        }
    }

    fn of(params: &IscParams) -> Self {
        let (p, q, m, n) = params.big();
        Powers::new(&m, &n, &p, &q)
    }

    fn evaluate(&self, terms: &[Term]) -> BigInt {
        terms
            .iter()
            .map(|(c, e)| {
                let mut v = BigInt::from(*c);
                for (var, &exp) in e.iter().enumerate() {
                    if exp > 0 {
                        v *= &self.table[var][exp as usize];
                    }
                }
                v
            })
            .sum()
    }
}

fn exact_div(numerator: BigInt, divisor: u32, context: impl FnOnce() -> String) -> Result<BigInt> {
    let (quotient, remainder) = numerator.div_rem(&BigInt::from(divisor));
    if remainder.is_zero() {
        Ok(quotient)
    } else {
        Err(IscError::InexactDivision {
            context: context(),
            divisor,
            remainder: remainder.to_string(),
        })
    }
}

fn case_numerator(case: CaseKind) -> (&'static [Term], u32, u32) {
    // (numerator, Wiener divisor, average-distance prefactor)
    match case {
        CaseKind::Case1 => (CASE1_NUMERATOR, 960, 30),
        CaseKind::Case2 => (CASE2_NUMERATOR, 480, 15),
        CaseKind::Case3 => (CASE3_NUMERATOR, 1920, 60),
    }
}

/// Closed-form Wiener index of ISC(p, q, m, n) for its case.
pub fn wiener_closed(params: &IscParams) -> Result<BigInt> {
    let case = params.case();
    let (terms, divisor, _) = case_numerator(case);
    let numerator = Powers::of(params).evaluate(terms);
    exact_div(numerator, divisor, || {
        format!("{case} numerator at {params}")
    })
}

/// Closed-form average distance: the case numerator over
/// `c * D * (D - 4)` with `D = 8m + 4n + 4mn + 2n^2 - p^2 - q^2 = 4|V|`
/// and `c` = 30, 15 or 60.
pub fn mu_closed(params: &IscParams) -> Result<BigRational> {
    let (terms, _, prefactor) = case_numerator(params.case());
    let numerator = Powers::of(params).evaluate(terms);
    let (p, q, m, n) = params.big();
    let d = 8 * &m + 4 * &n + 4 * &m * &n + 2 * &n * &n - &p * &p - &q * &q;
    let denominator = BigInt::from(prefactor) * &d * (&d - 4);
    ratio(numerator, denominator)
}

fn ratio(numerator: BigInt, denominator: BigInt) -> Result<BigRational> {
    if denominator.is_zero() {
        Err(IscError::ZeroDenominator)
    } else {
        Ok(BigRational::new(numerator, denominator))
    }
}

/// Wiener index of H(p), T(n, p) or BT(n, p, q) from the family formulas.
pub fn wiener_family(family: Family) -> Result<BigInt> {
    let params = special_family_params(family)?;
    let (p, q, m, n) = params.big();
    match family {
        Family::Hexagonal { .. } => {
            let numerator = 158 * p.pow(5) - 35 * p.pow(3) - 3 * &p;
            exact_div(numerator, 15, || format!("{family} numerator"))
        }
        Family::Trapezium { .. } => {
            // T(n, p) = ISC(p, n, 1, n): the family's n is params.q = params.n
            let numerator = Powers::new(&m, &n, &p, &q).evaluate(TRAPEZIUM_NUMERATOR);
            exact_div(numerator, 960, || format!("{family} numerator"))
        }
        Family::Bitrapezium { .. } => {
            // params already has p <= q
            let numerator = Powers::new(&m, &n, &p, &q).evaluate(BITRAPEZIUM_NUMERATOR);
            exact_div(numerator, 960, || format!("{family} numerator"))
        }
    }
}

/// Average distance of H(p), T(n, p) or BT(n, p, q) from the family formulas.
pub fn mu_family(family: Family) -> Result<BigRational> {
    let params = special_family_params(family)?;
    let (p, q, m, n) = params.big();
    match family {
        Family::Hexagonal { .. } => {
            ratio(158 * p.pow(4) - 35 * p.pow(2) - 3, 120 * p.pow(3) - 30 * &p)
        }
        Family::Trapezium { .. } => {
            let numerator = Powers::new(&m, &n, &p, &q).evaluate(TRAPEZIUM_NUMERATOR);
            let base = &n * &n + 8 * &n - &p * &p;
            ratio(numerator, 30 * (&base + 4) * (&base + 8))
        }
        Family::Bitrapezium { .. } => {
            let numerator = Powers::new(&m, &n, &p, &q).evaluate(BITRAPEZIUM_NUMERATOR);
            let base = 2 * &n * &n + 8 * &n - &p * &p - &q * &q;
            ratio(numerator, 30 * (&base + 4) * (&base + 8))
        }
    }
}
