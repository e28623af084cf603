//! Parameter tuples for ISC(p, q, m, n) and the special families.
//!
//! `p`, `q` and `n` count boundary edges: the bottom row of ISC(p, q, m, n)
//! holds `p + 1` vertices, the top row `q + 1`, and the widest rows of the
//! lower trapezium `n + 1`. The parallelogram spans `m` rows.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{IscError, Result};

/// A validated parameter tuple with `1 <= p <= q <= n`, `m >= 1`, and
/// `n - p`, `n - q` both even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IscParams {
    p: u64,
    q: u64,
    m: u64,
    n: u64,
}

impl IscParams {
    /// Validates raw user input. Tuples with `p > q` are normalized by
    /// swapping `p` and `q`, which is the vertical mirror image.
    pub fn new(p: i64, q: i64, m: i64, n: i64) -> Result<Self> {
        for (name, value) in [("p", p), ("q", q), ("m", m), ("n", n)] {
            if value < 1 {
                return Err(IscError::NonPositiveParameter { name, value });
            }
        }
        let (p, q) = if p > q { (q, p) } else { (p, q) };
        if q > n {
            return Err(IscError::OrderViolation { max_pq: q, n });
        }
        if (n - p) % 2 != 0 || (n - q) % 2 != 0 {
            return Err(IscError::ParityViolation { p, q, n });
        }
        Ok(IscParams {
            p: p as u64,
            q: q as u64,
            m: m as u64,
            n: n as u64,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Rows in the lower trapezium above the base row, `(n - p) / 2`.
    pub fn t(&self) -> u64 {
        (self.n - self.p) / 2
    }

    /// Rows in the upper trapezium above the parallelogram, `(n - q) / 2`.
    pub fn s(&self) -> u64 {
        (self.n - self.q) / 2
    }

    pub fn case(&self) -> CaseKind {
        classify_case(self)
    }

    /// `(p, q, m, n)` as arbitrary-precision integers.
    pub fn big(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        (
            BigInt::from(self.p),
            BigInt::from(self.q),
            BigInt::from(self.m),
            BigInt::from(self.n),
        )
    }

    /// Iterates every valid tuple with `n <= max_n` and `m <= max_m`,
    /// ordered by `(n, q, p, m)`.
    pub fn sweep(max_n: u64, max_m: u64) -> impl Iterator<Item = IscParams> {
        (1..=max_n).flat_map(move |n| {
            (1..=n).flat_map(move |q| {
                (1..=q).flat_map(move |p| {
                    (1..=max_m).filter_map(move |m| {
                        IscParams::new(p as i64, q as i64, m as i64, n as i64).ok()
                    })
                })
            })
        })
    }
}

impl fmt::Display for IscParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ISC({}, {}, {}, {})", self.p, self.q, self.m, self.n)
    }
}

/// Free-function form of [`IscParams::new`].
pub fn validate_params(p: i64, q: i64, m: i64, n: i64) -> Result<IscParams> {
    IscParams::new(p, q, m, n)
}

/// Which cut layout (and closed form) applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseKind {
    /// `p <= q - 2m + 2`
    Case1,
    /// `p <= 2m - q - 2`
    Case2,
    /// everything else (`p > q - 2m + 2`)
    Case3,
}

impl CaseKind {
    pub fn number(self) -> u8 {
        match self {
            CaseKind::Case1 => 1,
            CaseKind::Case2 => 2,
            CaseKind::Case3 => 3,
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case{}", self.number())
    }
}

/// The Case2 inequality implies the Case3 one, so the test order matters:
/// Case1, then Case2, otherwise Case3.
pub fn classify_case(params: &IscParams) -> CaseKind {
    let p = params.p as i128;
    let q = params.q as i128;
    let m = params.m as i128;
    if p <= q - 2 * m + 2 {
        CaseKind::Case1
    } else if p <= 2 * m - q - 2 {
        CaseKind::Case2
    } else {
        CaseKind::Case3
    }
}

/// `(2n^2 - p^2 - q^2 + 4mn + 8m + 4n) / 4`
pub fn vertex_count(params: &IscParams) -> BigInt {
    let (p, q, m, n) = params.big();
    let four_n = 2 * &n * &n - &p * &p - &q * &q + 4 * &m * &n + 8 * &m + 4 * &n;
    exact_quotient(four_n, 4)
}

/// `(2n^2 - p^2 - q^2 + 4mn + 4m + p + q - 2) / 2`
pub fn edge_count(params: &IscParams) -> BigInt {
    let (p, q, m, n) = params.big();
    let two_e = 2 * &n * &n - &p * &p - &q * &q + 4 * &m * &n + 4 * &m + &p + &q - 2;
    exact_quotient(two_e, 2)
}

fn exact_quotient(value: BigInt, divisor: i32) -> BigInt {
    let (quotient, remainder) = value.div_rem(&BigInt::from(divisor));
    debug_assert!(remainder == BigInt::from(0), "parity invariant broken");
    quotient
}

/// The named square-cell families that embed into ISC.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// H(p) = ISC(p, p, 1, 3p - 2)
    Hexagonal { p: i64 },
    /// T(n, p) = ISC(p, n, 1, n)
    Trapezium { n: i64, p: i64 },
    /// BT(n, p, q) = ISC(p, q, 1, n)
    Bitrapezium { n: i64, p: i64, q: i64 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Hexagonal { p } => write!(f, "H({p})"),
            Family::Trapezium { n, p } => write!(f, "T({n}, {p})"),
            Family::Bitrapezium { n, p, q } => write!(f, "BT({n}, {p}, {q})"),
        }
    }
}

pub fn special_family_params(family: Family) -> Result<IscParams> {
    match family {
        Family::Hexagonal { p } => {
            if p < 1 {
                return Err(IscError::NonPositiveParameter {
                    name: "p",
                    value: p,
                });
            }
            IscParams::new(p, p, 1, 3 * p - 2)
        }
        Family::Trapezium { n, p } => IscParams::new(p, n, 1, n),
        Family::Bitrapezium { n, p, q } => IscParams::new(p, q, 1, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: i64, q: i64, m: i64, n: i64) -> IscParams {
        IscParams::new(p, q, m, n).unwrap()
    }

    #[test]
    fn smallest_tuple() {
        let c4 = params(1, 1, 1, 1);
        assert_eq!((c4.p(), c4.q(), c4.m(), c4.n()), (1, 1, 1, 1));
        assert_eq!((c4.t(), c4.s()), (0, 0));
    }

    #[test]
    fn derived_offsets() {
        let g = params(4, 6, 6, 10);
        assert_eq!((g.t(), g.s()), (3, 2));
    }

    #[test]
    fn swaps_p_and_q() {
        let g = params(4, 2, 1, 6);
        assert_eq!((g.p(), g.q(), g.m(), g.n()), (2, 4, 1, 6));
        assert_eq!((g.t(), g.s()), (2, 1));
        // (3, 2, 1, 4) swaps to (2, 3, 1, 4), where n - q is odd.
        assert_eq!(
            IscParams::new(3, 2, 1, 4),
            Err(IscError::ParityViolation { p: 2, q: 3, n: 4 })
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            IscParams::new(2, 3, 1, 4),
            Err(IscError::ParityViolation { p: 2, q: 3, n: 4 })
        );
        assert_eq!(
            IscParams::new(0, 1, 1, 1),
            Err(IscError::NonPositiveParameter {
                name: "p",
                value: 0
            })
        );
        assert_eq!(
            IscParams::new(1, 1, -2, 1),
            Err(IscError::NonPositiveParameter {
                name: "m",
                value: -2
            })
        );
        assert_eq!(
            IscParams::new(2, 6, 1, 4),
            Err(IscError::OrderViolation { max_pq: 6, n: 4 })
        );
    }

    #[test]
    fn case_classification() {
        assert_eq!(params(1, 1, 1, 1).case(), CaseKind::Case1);
        assert_eq!(params(1, 1, 3, 3).case(), CaseKind::Case2);
        assert_eq!(params(2, 2, 2, 4).case(), CaseKind::Case3);
        // m = 1 is always case 1 because p <= q.
        for g in IscParams::sweep(12, 1) {
            assert_eq!(g.case(), CaseKind::Case1);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(vertex_count(&params(1, 1, 1, 1)), BigInt::from(4));
        assert_eq!(edge_count(&params(1, 1, 1, 1)), BigInt::from(4));
        assert_eq!(vertex_count(&params(2, 2, 1, 4)), BigInt::from(16));
        assert_eq!(edge_count(&params(2, 2, 1, 4)), BigInt::from(23));
        assert_eq!(vertex_count(&params(4, 6, 6, 10)), BigInt::from(119));
        assert_eq!(edge_count(&params(4, 6, 6, 10)), BigInt::from(210));
    }

    #[test]
    fn families() {
        let h1 = special_family_params(Family::Hexagonal { p: 1 }).unwrap();
        assert_eq!(h1, params(1, 1, 1, 1));
        let h2 = special_family_params(Family::Hexagonal { p: 2 }).unwrap();
        assert_eq!(h2, params(2, 2, 1, 4));
        let t = special_family_params(Family::Trapezium { n: 2, p: 2 }).unwrap();
        assert_eq!(t, params(2, 2, 1, 2));
        let bt = special_family_params(Family::Bitrapezium { n: 7, p: 5, q: 3 }).unwrap();
        assert_eq!(bt, params(3, 5, 1, 7));
        assert!(special_family_params(Family::Trapezium { n: 3, p: 2 }).is_err());
        assert!(special_family_params(Family::Hexagonal { p: 0 }).is_err());
    }

    #[test]
    fn hexagonal_has_4p_squared_vertices() {
        for p in 1..=20 {
            let g = special_family_params(Family::Hexagonal { p }).unwrap();
            assert_eq!(vertex_count(&g), BigInt::from(4 * p * p));
        }
    }
}
