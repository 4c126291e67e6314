//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! A [`Cyclotomic`] stores its coordinates in the power basis
//! `{1, ζ_N, …, ζ_N^{φ(N)-1}}` of `Q[x]/Φ_N(x)`, so two values of the same order
//! are equal exactly when their coefficient vectors are. Values of different
//! orders are compared and combined after lifting both into `Q(ζ_lcm)`; the
//! order a value was built with is never minimized.

mod poly;
mod sums;

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use poly::{cyclotomic_polynomial, totient};

pub type Rational = BigRational;

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: usize,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// `ζ_n^k`, with `k` reduced modulo `n`.
    pub fn zeta(n: usize, k: i64) -> Result<Self> {
        let field = poly::field(n)?;
        let k = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rational::zero(); field.degree];
        accumulate(&mut coeffs, &field.powers[k], &Rational::one());
        Ok(Cyclotomic { order: n, coeffs })
    }

    /// `ζ_n^k` built in the smallest field containing it, so that `±1` come out
    /// rational and `±i` live in `Q(ζ_4)`.
    pub fn root_of_unity(n: usize, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        let k = k.rem_euclid(n as i64) as usize;
        let g = n.gcd(&k);
        match n / g {
            1 => Ok(Self::one()),
            2 => Ok(Self::from_integer(-1)),
            m => Self::zeta(m, (k / g) as i64),
        }
    }

    /// Replaces a rational value of any order by the same value of order 1.
    pub fn normalize_rational(self) -> Self {
        match self.as_rational() {
            Some(q) if self.order != 1 => Self::from_rational(q),
            _ => self,
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![q] }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// Builds a value from power-basis coordinates; the length must be `φ(order)`.
    pub fn from_coeffs(order: usize, coeffs: Vec<Rational>) -> Result<Self> {
        let field = poly::field(order)?;
        if coeffs.len() != field.degree {
            return Err(Error::InvalidParameter(format!(
                "Q(ζ_{order}) has degree {} but {} coefficients were given",
                field.degree,
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { order, coeffs })
    }

    /// Sum of `c_j ζ_n^j` over arbitrary exponents, reduced to canonical form.
    pub fn from_exponents<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let field = poly::field(n)?;
        let mut acc = vec![Rational::zero(); field.degree];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            let row = &field.powers[k.rem_euclid(n as i64) as usize];
            accumulate(&mut acc, row, &c);
        }
        Ok(Cyclotomic { order: n, coeffs: acc })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if every non-constant coordinate vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as an integer, or `None` when it is not a rational integer.
    pub fn as_rational_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Re-expresses the value in `Q(ζ_m)`; `m` must be a multiple of the order.
    pub fn lift(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if !m.is_multiple_of(self.order) {
            return Err(Error::InvalidLift { from: self.order, to: m });
        }
        if m == self.order {
            return Ok(self.clone());
        }
        let step = (m / self.order) as i64;
        Self::from_exponents(m, self.coeffs.iter().enumerate().map(|(j, c)| (j as i64 * step, c.clone())))
    }

    /// Complex conjugation, applied to exponents before reduction.
    pub fn conj(&self) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        let n = self.order as i64;
        Self::from_exponents(self.order, self.coeffs.iter().enumerate().map(|(j, c)| (n - j as i64, c.clone())))
            .expect("order already validated")
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| if c.is_zero() { Rational::zero() } else { c * q }).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    /// Numeric embedding `ζ_N ↦ e^{2πi/N}`; for validation only.
    pub fn approx(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), theta)
            })
            .sum()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclotomic::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (self.lift(m).expect("lcm is a multiple"), other.lift(m).expect("lcm is a multiple"))
    }

    fn add_same(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    fn mul_same(&self, other: &Self) -> Self {
        let field = poly::field(self.order).expect("order already validated");
        let d = field.degree;
        let mut raw = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                raw[i + j] += a * b;
            }
        }
        let mut acc = vec![Rational::zero(); d];
        for (t, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if t < d {
                acc[t] += c;
            } else {
                accumulate(&mut acc, &field.powers[t % self.order], c);
            }
        }
        Cyclotomic { order: self.order, coeffs: acc }
    }
}

fn accumulate(acc: &mut [Rational], row: &[(usize, BigInt)], c: &Rational) {
    for (i, r) in row {
        acc[*i] += c * r;
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lifted_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == rhs.order {
            self.add_same(rhs)
        } else {
            let (a, b) = self.lifted_pair(rhs);
            a.add_same(&b)
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if rhs.order == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.order == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if self.order == rhs.order {
            self.mul_same(rhs)
        } else {
            let (a, b) = self.lifted_pair(rhs);
            a.mul_same(&b)
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

/// Canonical text form: `zN^k` monomials with rational coefficients in
/// increasing exponent order, constant term first; rationals render plainly.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let negative = c.is_negative();
            let mag = c.abs();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if j == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "z{}^{j}", self.order)?;
            } else {
                write!(f, "{mag}*z{}^{j}", self.order)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic literal".into()));
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        let mut negative = false;
        if bytes[0] == b'-' || bytes[0] == b'+' {
            negative = bytes[0] == b'-';
            start = 1;
        }
        for (i, &byte) in bytes.iter().enumerate() {
            if (byte == b'+' || byte == b'-') && i > start {
                terms.push((negative, &compact[start..i]));
                negative = byte == b'-';
                start = i + 1;
            }
        }
        terms.push((negative, &compact[start..]));

        let mut order: Option<usize> = None;
        let mut constant = Rational::zero();
        let mut monomials: Vec<(i64, Rational)> = Vec::new();
        for (neg, body) in terms {
            let (coef, mono) = match body.split_once('*') {
                Some((c, m)) => (parse_rational(c)?, Some(m)),
                None if body.starts_with('z') => (Rational::one(), Some(body)),
                None => (parse_rational(body)?, None),
            };
            let coef = if neg { -coef } else { coef };
            match mono {
                None => constant += coef,
                Some(m) => {
                    let (n, k) = parse_monomial(m)?;
                    if *order.get_or_insert(n) != n {
                        return Err(Error::Parse(format!("mixed orders in {s:?}")));
                    }
                    monomials.push((k, coef));
                }
            }
        }
        let n = order.unwrap_or(1);
        monomials.push((0, constant));
        Cyclotomic::from_exponents(n, monomials)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_monomial(s: &str) -> Result<(usize, i64)> {
    let bad = || Error::Parse(format!("bad monomial {s:?}"));
    let rest = s.strip_prefix('z').ok_or_else(bad)?;
    let (n, k) = match rest.split_once('^') {
        Some((n, k)) => (n, k.parse::<i64>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let n: usize = n.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    Ok((n, k))
}
