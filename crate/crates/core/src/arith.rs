//! Exact scalars: big integers, rationals, Laurent polynomials in `q`,
//! quantum integers and multinomial coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::params::GlobalParams;

/// Rational with unbounded numerator and denominator, always in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^e` for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    let base = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

/// True iff the denominator is a power of two.
pub fn is_dyadic(x: &Rational) -> bool {
    let d = x.denom();
    let tz = d.trailing_zeros().unwrap_or(0);
    (d >> tz) == BigInt::one()
}

/// Element of `Z[q, q^-1]`, stored sparsely by exponent with no zero
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_q1(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact division; fails unless `divisor` divides `self` in `Z[q, q^-1]`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (Some(dlo), Some(dhi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::InexactDivision(format!("({self}) / 0")));
        };
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(rhi) = rem.max_exp() {
            if rem.min_exp().unwrap() - dlo > rhi - dhi {
                break;
            }
            let rc = rem.coeff(rhi);
            let (qc, r) = rc.div_rem(&lead);
            if !r.is_zero() {
                break;
            }
            let step = LaurentPoly::monomial(qc, rhi - dhi);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision(format!("({self}) / ({divisor})")))
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub fn laurent_eval_q1(f: &LaurentPoly) -> BigInt {
    f.eval_q1()
}

/// `q_i = q^{(α_i|α_i)/2}` as an exponent of `q`.
pub fn q_i_exponent(i: usize, params: &GlobalParams) -> i64 {
    params.gram(i, i) / 2
}

/// Quantum integer `[n]_i = (q_i^n - q_i^-n) / (q_i - q_i^-1)`.
pub fn quantum_integer(n: u32, i: usize, params: &GlobalParams) -> LaurentPoly {
    let s = q_i_exponent(i, params);
    let n = n as i64;
    LaurentPoly::from_terms((0..n).map(|k| (s * (n - 1 - 2 * k), 1)))
}

/// Quantum factorial `[n]_i^! = [1]_i [2]_i ... [n]_i`.
pub fn quantum_factorial(n: u32, i: usize, params: &GlobalParams) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_integer(k, i, params))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(Σ parts)! / Π parts!`
pub fn multinomial(parts: &[u64]) -> BigInt {
    let total: u64 = parts.iter().sum();
    let mut out = factorial(total);
    for &k in parts {
        out /= factorial(k);
    }
    out
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    multinomial(&[k, n - k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn eval_at_one() {
        assert_eq!(laurent_eval_q1(&lp(&[(0, 1), (4, -1)])), BigInt::zero());
        assert_eq!(laurent_eval_q1(&lp(&[(0, 1), (2, 1)])), BigInt::from(2));
        assert_eq!(laurent_eval_q1(&LaurentPoly::zero()), BigInt::zero());
    }

    #[test]
    fn quantum_integers() {
        let p = GlobalParams::new(2).unwrap();
        assert_eq!(quantum_integer(1, 0, &p), LaurentPoly::one());
        assert_eq!(quantum_integer(1, 2, &p), LaurentPoly::one());
        assert_eq!(quantum_integer(2, 0, &p), lp(&[(-1, 1), (1, 1)]));
        assert_eq!(quantum_integer(2, 2, &p), lp(&[(-4, 1), (4, 1)]));
        assert_eq!(quantum_integer(0, 1, &p), LaurentPoly::zero());
        // [3]_1 with q_1 = q^2
        assert_eq!(quantum_integer(3, 1, &p), lp(&[(-4, 1), (0, 1), (4, 1)]));
    }

    #[test]
    fn quantum_integer_matches_defining_quotient() {
        let p = GlobalParams::new(3).unwrap();
        for i in 0..=3 {
            let s = q_i_exponent(i, &p);
            let den = lp(&[(s, 1), (-s, -1)]);
            for n in 0..8i64 {
                let num = lp(&[(s * n, 1), (-s * n, -1)]);
                assert_eq!(num.div_exact(&den).unwrap(), quantum_integer(n as u32, i, &p));
            }
        }
    }

    #[test]
    fn quantum_factorial_eval() {
        let p = GlobalParams::new(1).unwrap();
        assert_eq!(quantum_factorial(4, 1, &p).eval_q1(), BigInt::from(24));
    }

    #[test]
    fn inexact_division_is_an_error() {
        let num = lp(&[(0, 1), (1, 1), (2, 1)]);
        let den = lp(&[(0, 1), (1, 1)]);
        assert!(num.div_exact(&den).is_err());
        assert!(num.div_exact(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 1, 1]), BigInt::from(12));
        assert_eq!(multinomial(&[7]), BigInt::one());
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(&[]), BigInt::one());
    }

    #[test]
    fn binomial_sums() {
        for c in 0..=20u64 {
            let s: BigInt = (0..=c).map(|a| multinomial(&[a, c - a])).sum();
            assert_eq!(s, BigInt::one() << c);
            let t: BigInt = (0..=c)
                .map(|a| (BigInt::one() << a) * multinomial(&[a, c - a]))
                .sum();
            assert_eq!(t, num_traits::pow(BigInt::from(3), c as usize));
        }
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(0, 1), (4, -1)]).to_string(), "1 - q^4");
        assert_eq!(lp(&[(-1, 1), (1, 1)]).to_string(), "q^-1 + q");
        assert_eq!(lp(&[(3, -2)]).to_string(), "-2q^3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn dyadic() {
        assert!(is_dyadic(&pow2(-5)));
        assert!(is_dyadic(&rat(7)));
        assert!(!is_dyadic(&Rational::new(1.into(), 3.into())));
    }
}
