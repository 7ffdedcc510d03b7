//! Dense integer polynomials and cyclotomic polynomials `Φ_n`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use parking_lot::RwLock;

use crate::arith;

/// Integer polynomial, lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n`
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `x^n + c`
    pub fn binomial(n: usize, c: i64) -> Self {
        let mut p = Self::monomial(n);
        p.coeffs[0] += c;
        Self::new(p.coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact quotient by a monic divisor. Returns `None` on a nonzero remainder.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// Division by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        let dd = divisor.degree().expect("nonzero divisor");
        assert!(divisor.coeffs[dd].is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[i]);
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs[..dd].iter().enumerate() {
                rem[i - dd + j] -= &lead * c;
            }
            quot[i - dd] = lead;
        }
        (Self::new(quot), Self::new(rem))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "x".to_string(),
                (1, false) => format!("{mag}*x"),
                (_, true) => format!("x^{i}"),
                (_, false) => format!("{mag}*x^{i}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

static PHI: LazyLock<RwLock<HashMap<u64, Arc<IntPolynomial>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by `Φ_d`
/// for every proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<IntPolynomial> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    if let Some(p) = PHI.read().get(&n) {
        return p.clone();
    }
    let mut denom = IntPolynomial::one();
    for d in arith::divisors(n) {
        if d < n {
            denom = &denom * &cyclotomic_polynomial(d);
        }
    }
    let phi = IntPolynomial::binomial(n as usize, -1)
        .div_exact(&denom)
        .expect("x^n - 1 is divisible by its proper cyclotomic factors");
    let phi = Arc::new(phi);
    PHI.write().insert(n, phi.clone());
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(
            *cyclotomic_polynomial(6),
            IntPolynomial::from_i64(&[1, -1, 1])
        );
        assert_eq!(cyclotomic_polynomial(6).to_string(), "x^2-x+1");
    }

    #[test]
    fn phi_30_matches_hand_division() {
        // x^30 - 1 = Φ1 Φ2 Φ3 Φ5 Φ6 Φ10 Φ15 Φ30; dividing out the proper factors
        // computed independently from x^d - 1 quotients.
        let x15m1 = IntPolynomial::binomial(15, -1);
        let x5m1 = IntPolynomial::binomial(5, -1);
        let x3m1 = IntPolynomial::binomial(3, -1);
        let x1m1 = IntPolynomial::binomial(1, -1);
        // Φ15 = (x^15-1)(x-1)/((x^5-1)(x^3-1))
        let num = &x15m1 * &x1m1;
        let den = &x5m1 * &x3m1;
        let phi15 = num.div_exact(&den).unwrap();
        // Φ30(x) = Φ15(-x)
        let phi30: Vec<BigInt> = phi15
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        let phi30 = IntPolynomial::new(phi30);
        assert_eq!(*cyclotomic_polynomial(30), phi30);
        assert_eq!(
            phi30,
            IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, 0, 1, 1])
        );
        assert_eq!(
            cyclotomic_polynomial(30).eval(&BigInt::from(2)),
            BigInt::from(331)
        );
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        assert!(cyclotomic_polynomial(105)
            .coeffs()
            .iter()
            .any(|c| *c == BigInt::from(-2)));
    }
}
