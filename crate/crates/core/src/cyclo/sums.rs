//! Weighted sums `Σ w·a` and `Σ w·a·conj(b)`.
//!
//! When every operand has integral coordinates (true of all character values,
//! which are algebraic integers) the sum is accumulated with machine integers
//! in the group ring `Z[x]/(x^N - 1)`, where conjugation is `x^j ↦ x^{N-j}`,
//! and reduced modulo `Φ_N` once at the end. Any non-integral operand or
//! overflow falls back to field arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{poly, Cyclotomic, Rational};

type Sparse = Vec<(usize, i64)>;

fn integral(c: &Cyclotomic) -> Option<Sparse> {
    c.coeffs
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(j, q)| if q.is_integer() { q.numer().to_i64().map(|v| (j, v)) } else { None })
        .collect()
}

struct GroupRing {
    n: usize,
    raw: Vec<i128>,
}

impl GroupRing {
    fn new(n: usize) -> Self {
        GroupRing { n, raw: vec![0; n] }
    }

    fn add(&mut self, exponent: usize, v: i128) -> Option<()> {
        let slot = &mut self.raw[exponent % self.n];
        *slot = slot.checked_add(v)?;
        Some(())
    }

    fn reduce(self) -> Option<Cyclotomic> {
        let field = poly::field(self.n).ok()?;
        let mut acc = vec![0i128; field.degree];
        for (k, &v) in self.raw.iter().enumerate().filter(|(_, v)| **v != 0) {
            for (i, r) in &field.powers[k] {
                acc[*i] = acc[*i].checked_add(v.checked_mul(r.to_i128()?)?)?;
            }
        }
        let coeffs = acc.into_iter().map(|x| Rational::from_integer(BigInt::from(x))).collect();
        Some(Cyclotomic { order: self.n, coeffs })
    }
}

fn common_order<'a>(values: impl Iterator<Item = &'a Cyclotomic>) -> usize {
    values.fold(1, |m, c| m.lcm(&c.order))
}

fn weighted_fast(terms: &[(&Cyclotomic, i64)]) -> Option<Cyclotomic> {
    let n = common_order(terms.iter().map(|t| t.0));
    let mut ring = GroupRing::new(n);
    for &(a, w) in terms {
        let step = n / a.order;
        for (i, x) in integral(a)? {
            ring.add(i * step, i128::from(x).checked_mul(i128::from(w))?)?;
        }
    }
    ring.reduce()
}

fn hermitian_fast(terms: &[(&Cyclotomic, &Cyclotomic, i64)]) -> Option<Cyclotomic> {
    let n = common_order(terms.iter().flat_map(|t| [t.0, t.1]));
    let mut ring = GroupRing::new(n);
    for &(a, b, w) in terms {
        let (sa, sb) = (n / a.order, n / b.order);
        let ib = integral(b)?;
        for (i, x) in integral(a)? {
            let xw = i128::from(x).checked_mul(i128::from(w))?;
            for &(j, y) in &ib {
                ring.add(i * sa + n - (j * sb) % n, xw.checked_mul(i128::from(y))?)?;
            }
        }
    }
    ring.reduce()
}

impl Cyclotomic {
    /// `Σ w·a`.
    pub fn weighted_sum(terms: &[(&Cyclotomic, i64)]) -> Cyclotomic {
        weighted_fast(terms)
            .unwrap_or_else(|| terms.iter().map(|&(a, w)| a.scale(&Rational::from_integer(BigInt::from(w)))).sum())
    }

    /// `Σ w·a·conj(b)`, the unnormalized Hermitian pairing of class functions.
    pub fn hermitian_sum(terms: &[(&Cyclotomic, &Cyclotomic, i64)]) -> Cyclotomic {
        hermitian_fast(terms).unwrap_or_else(|| {
            terms.iter().map(|&(a, b, w)| (a * &b.conj()).scale(&Rational::from_integer(BigInt::from(w)))).sum()
        })
    }
}
