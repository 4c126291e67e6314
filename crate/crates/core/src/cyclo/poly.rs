//! Cyclotomic polynomials and the per-order reduction data used by
//! [`Cyclotomic`](super::Cyclotomic) arithmetic.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Reduction data for `Q(ζ_N) ≅ Q[x]/Φ_N(x)`.
#[derive(Debug)]
pub(crate) struct FieldData {
    pub(crate) phi: Vec<BigInt>,
    pub(crate) degree: usize,
    /// `powers[j]` is `x^j mod Φ_N` for `0 ≤ j < N`, as the sparse list of its
    /// nonzero `(position, coefficient)` pairs. Integral because `Φ_N` is monic.
    pub(crate) powers: Vec<Vec<(usize, BigInt)>>,
}

static FIELDS: OnceLock<RwLock<HashMap<usize, Arc<FieldData>>>> = OnceLock::new();

fn cache() -> &'static RwLock<HashMap<usize, Arc<FieldData>>> {
    FIELDS.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Returns the (cached) reduction data for order `n`. Builds outside the lock so
/// that the recursive construction through divisors never re-enters a held lock.
pub(crate) fn field(n: usize) -> Result<Arc<FieldData>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if let Some(f) = cache().read().expect("field cache poisoned").get(&n) {
        return Ok(Arc::clone(f));
    }
    let built = Arc::new(build_field(n)?);
    let mut guard = cache().write().expect("field cache poisoned");
    Ok(Arc::clone(guard.entry(n).or_insert(built)))
}

fn build_field(n: usize) -> Result<FieldData> {
    let phi = compute_phi(n)?;
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(n);
    let mut current = vec![BigInt::zero(); degree];
    current[0] = BigInt::one();
    for _ in 0..n {
        powers.push(current.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect());
        current = times_x_mod(&current, &phi);
    }
    Ok(FieldData { phi, degree, powers })
}

/// Multiplies a reduced vector by `x` and reduces modulo the monic `phi`.
fn times_x_mod(v: &[BigInt], phi: &[BigInt]) -> Vec<BigInt> {
    let d = v.len();
    let mut out = vec![BigInt::zero(); d];
    if d == 0 {
        return out;
    }
    let top = v[d - 1].clone();
    for i in (1..d).rev() {
        out[i] = v[i - 1].clone();
    }
    if !top.is_zero() {
        for (i, slot) in out.iter_mut().enumerate() {
            *slot -= &top * &phi[i];
        }
    }
    out
}

pub(crate) fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Exact division of integer polynomials (low degree first) by a monic divisor.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let dd = den.len() - 1;
    if num.len() <= dd {
        return None;
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

fn compute_phi(n: usize) -> Result<Vec<BigInt>> {
    if n == 1 {
        return Ok(vec![BigInt::from(-1), BigInt::one()]);
    }
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = BigInt::from(-1);
    poly[n] = BigInt::one();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        let f = field(d)?;
        poly = div_exact_monic(&poly, &f.phi).ok_or_else(|| {
            Error::InternalConsistency(format!("Φ_{d} does not divide the running quotient for order {n}"))
        })?;
    }
    Ok(poly)
}

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
///
/// Computed by dividing `x^n - 1` by `Φ_d` for every proper divisor `d | n`.
pub fn cyclotomic_polynomial(n: usize) -> Result<Vec<BigInt>> {
    Ok(field(n)?.phi.clone())
}

/// Euler's totient, i.e. the degree of `Φ_n`.
pub fn totient(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2).unwrap(), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6).unwrap(), ints(&[1, -1, 1]));
    }

    #[test]
    fn phi_12_divides_x12_minus_1() {
        let phi = cyclotomic_polynomial(12).unwrap();
        assert_eq!(phi, ints(&[1, 0, -1, 0, 1]));
        let mut x12 = vec![BigInt::zero(); 13];
        x12[0] = BigInt::from(-1);
        x12[12] = BigInt::one();
        assert!(div_exact_monic(&x12, &phi).is_some());
    }

    #[test]
    fn degree_matches_totient() {
        for n in 1..=120 {
            assert_eq!(cyclotomic_polynomial(n).unwrap().len() - 1, totient(n), "n = {n}");
        }
    }

    #[test]
    fn phi_105_has_a_coefficient_of_minus_two() {
        // Smallest order whose cyclotomic polynomial has a coefficient outside {-1, 0, 1}.
        let phi = cyclotomic_polynomial(105).unwrap();
        assert!(phi.contains(&BigInt::from(-2)));
    }

    #[test]
    fn zero_order_is_rejected() {
        assert!(matches!(cyclotomic_polynomial(0), Err(Error::InvalidOrder(0))));
    }
}
