//! Exact arithmetic in rings of cyclotomic integers `Z[ζ_n]`.
//!
//! Values are stored over the integral basis obtained by tensoring the power
//! bases of the prime-power factors of the conductor: for `n = ∏ q_i` with
//! `q_i = p_i^{k_i}`, the basis elements are `∏ ζ_{q_i}^{j_i}` with
//! `0 ≤ j_i < φ(q_i)`. Each basis element is a single root of unity `ζ_n^e`,
//! so a value is a sparse list of `(e, coefficient)` pairs.
//!
//! With this basis, embedding into a larger conductor maps basis elements to
//! basis elements, and testing whether a value lies in a smaller cyclotomic
//! field is a support check on one prime-power digit. Every value is kept at
//! its minimal conductor (rationals have conductor 1, and conductors are never
//! `2 (mod 4)`), so structural equality is numeric equality.

mod parse;
mod poly;
mod reduce;

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use parking_lot::RwLock;
use thiserror::Error;

use crate::arith;

pub use parse::ParseError;
pub use poly::{cyclotomic_polynomial, IntPolynomial};
pub use reduce::{ExtensionField, FiniteFieldElt, ReductionContext};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("value is not an algebraic integer after division by {divisor}")]
    NotAlgebraicInteger { divisor: BigInt },
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {conductor} does not divide the reduction modulus {modulus}")]
    ConductorMismatch { conductor: u64, modulus: u64 },
    #[error("Galois exponent {k} is not a unit modulo {n}")]
    NotAUnit { k: i64, n: u64 },
    #[error("cannot reduce modulo {p} with modulus {m}: need m > 0 and p a prime below 2^32")]
    BadReduction { m: u64, p: u64 },
}

/// Prime-power digit of a conductor.
#[derive(Debug, Clone)]
struct Digit {
    p: u64,
    q: u64,
    phi: u64,
    /// `n / q`
    cofactor: u64,
    /// `(n / q)^{-1} mod q`
    inverse: u64,
}

#[derive(Debug)]
struct Layout {
    n: u64,
    digits: Vec<Digit>,
}

static LAYOUTS: LazyLock<RwLock<HashMap<u64, Arc<Layout>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn layout(n: u64) -> Arc<Layout> {
    if let Some(l) = LAYOUTS.read().get(&n) {
        return l.clone();
    }
    let digits = arith::factor(n)
        .into_iter()
        .map(|(p, k)| {
            let q = p.pow(k);
            let cofactor = n / q;
            Digit {
                p,
                q,
                phi: q / p * (p - 1),
                cofactor,
                inverse: arith::inv_mod(cofactor % q, q).unwrap_or(0),
            }
        })
        .collect();
    let l = Arc::new(Layout { n, digits });
    LAYOUTS.write().insert(n, l.clone());
    l
}

impl Layout {
    #[inline]
    fn digit(&self, d: &Digit, e: u64) -> u64 {
        ((e % d.q) as u128 * d.inverse as u128 % d.q as u128) as u64
    }

    fn is_basis(&self, e: u64) -> bool {
        self.digits.iter().all(|d| self.digit(d, e) < d.phi)
    }

    /// Rewrites `ζ_n^e` over the basis, calling `sink(exponent, negated)` once
    /// per resulting basis element.
    fn expand(&self, e: u64, mut sink: impl FnMut(u64, bool)) {
        let e = e % self.n;
        if self.is_basis(e) {
            sink(e, false);
            return;
        }
        let mut acc: Vec<(u64, bool)> = vec![(0, false)];
        for d in &self.digits {
            let j = self.digit(d, e);
            if j < d.phi {
                let shift = j * d.cofactor;
                for t in acc.iter_mut() {
                    t.0 = (t.0 + shift) % self.n;
                }
            } else {
                // ζ_q^j = -Σ_{m=1}^{p-1} ζ_q^{j - m q/p}
                let step = d.q / d.p;
                let mut next = Vec::with_capacity(acc.len() * (d.p as usize - 1));
                for &(base, neg) in &acc {
                    for m in 1..d.p {
                        let shift = (j - m * step) * d.cofactor;
                        next.push(((base + shift) % self.n, !neg));
                    }
                }
                acc = next;
            }
        }
        for (exp, neg) in acc {
            sink(exp, neg);
        }
    }
}

/// An element of `Z[ζ_n]` held at its minimal conductor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u64,
    /// Basis exponents in increasing order with nonzero coefficients.
    terms: Vec<(u64, BigInt)>,
}

/// Collects unreduced `c·ζ_n^e` terms at a fixed conductor.
struct Accumulator {
    layout: Arc<Layout>,
    coeffs: BTreeMap<u64, BigInt>,
}

impl Accumulator {
    fn new(n: u64) -> Self {
        Accumulator {
            layout: layout(n),
            coeffs: BTreeMap::new(),
        }
    }

    fn add_root(&mut self, e: u64, c: &BigInt) {
        let layout = self.layout.clone();
        layout.expand(e, |exp, neg| {
            let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
            if neg {
                *slot -= c;
            } else {
                *slot += c;
            }
        });
    }

    fn finish(self) -> Cyclotomic {
        let terms = self
            .coeffs
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Cyclotomic::canonical(self.layout.n, terms)
    }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(value: impl Into<BigInt>) -> Self {
        let value = value.into();
        if value.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: 1,
            terms: vec![(0, value)],
        }
    }

    /// The root of unity `ζ_n^e`, written `E(n)^e`.
    pub fn root(n: u64, e: i64) -> Result<Self, CyclotomicError> {
        Self::make(n, &[(e, BigInt::one())])
    }

    /// Builds `Σ c·ζ_n^e` from arbitrary (possibly negative) exponents.
    pub fn make(n: u64, terms: &[(i64, BigInt)]) -> Result<Self, CyclotomicError> {
        if n == 0 {
            return Err(CyclotomicError::ZeroConductor);
        }
        let mut acc = Accumulator::new(n);
        for (e, c) in terms {
            acc.add_root(e.rem_euclid(n as i64) as u64, c);
        }
        Ok(acc.finish())
    }

    /// Descends to the minimal conductor. `terms` must be sorted basis terms.
    fn canonical(mut n: u64, mut terms: Vec<(u64, BigInt)>) -> Self {
        if terms.is_empty() {
            return Self::zero();
        }
        loop {
            let lay = layout(n);
            let mut descended = false;
            for d in &lay.digits {
                let ok = if d.q == d.p {
                    terms.iter().all(|(e, _)| lay.digit(d, *e) == 0)
                } else {
                    terms.iter().all(|(e, _)| lay.digit(d, *e) % d.p == 0)
                };
                if ok {
                    for t in terms.iter_mut() {
                        debug_assert_eq!(t.0 % d.p, 0);
                        t.0 /= d.p;
                    }
                    n /= d.p;
                    descended = true;
                    break;
                }
            }
            if !descended {
                break;
            }
        }
        terms.sort_by_key(|t| t.0);
        Cyclotomic {
            conductor: n,
            terms,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Nonzero basis coefficients as `(exponent of ζ_n, coefficient)`.
    pub fn terms(&self) -> &[(u64, BigInt)] {
        &self.terms
    }

    /// Dense coefficient vector of length `φ(n)`, one entry per basis element
    /// in increasing exponent order.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let lay = layout(self.conductor);
        let basis: Vec<u64> = (0..self.conductor).filter(|&e| lay.is_basis(e)).collect();
        let mut out = vec![BigInt::zero(); basis.len()];
        for (e, c) in &self.terms {
            let idx = basis.binary_search(e).expect("terms are basis exponents");
            out[idx] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    /// The value as a rational integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        match (self.conductor, self.terms.as_slice()) {
            (1, []) => Some(BigInt::zero()),
            (1, [(_, c)]) => Some(c.clone()),
            _ => None,
        }
    }

    fn embedded(&self, n: u64) -> impl Iterator<Item = (u64, &BigInt)> {
        let scale = n / self.conductor;
        self.terms.iter().map(move |(e, c)| (e * scale, c))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Exact division by a nonzero rational integer.
    pub fn div_int(&self, d: &BigInt) -> Result<Self, CyclotomicError> {
        if d.is_zero() {
            return Err(CyclotomicError::DivisionByZero);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(CyclotomicError::NotAlgebraicInteger { divisor: d.clone() });
            }
            terms.push((*e, q));
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            terms,
        })
    }

    /// The Galois automorphism `ζ ↦ ζ^k`.
    pub fn galois(&self, k: i64) -> Result<Self, CyclotomicError> {
        let n = self.conductor;
        let k = k.rem_euclid(n as i64) as u64;
        if arith::gcd(k, n) != 1 {
            return Err(CyclotomicError::NotAUnit { k: k as i64, n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut acc = Accumulator::new(n);
        for (e, c) in &self.terms {
            acc.add_root((*e as u128 * k as u128 % n as u128) as u64, c);
        }
        Ok(acc.finish())
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_other {
                -other.clone()
            } else {
                other.clone()
            };
        }
        let n = arith::lcm(self.conductor, other.conductor);
        let mut merged: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (e, c) in self.embedded(n) {
            merged.insert(e, c.clone());
        }
        for (e, c) in other.embedded(n) {
            let slot = merged.entry(e).or_insert_with(BigInt::zero);
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        let terms = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self::canonical(n, terms)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(k) = self.to_integer() {
            return other.scale(&k);
        }
        if let Some(k) = other.to_integer() {
            return self.scale(&k);
        }
        let n = arith::lcm(self.conductor, other.conductor);
        let mut acc = Accumulator::new(n);
        let rhs: Vec<(u64, &BigInt)> = other.embedded(n).collect();
        for (ea, ca) in self.embedded(n) {
            for &(eb, cb) in &rhs {
                let prod = ca * cb;
                acc.add_root((ea + eb) % n, &prod);
            }
        }
        acc.finish()
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Sum of the images under all automorphisms of `Q(ζ_n)`.
    pub fn trace(&self) -> BigInt {
        let n = self.conductor;
        let mut total = Cyclotomic::zero();
        for k in 1..=n {
            if arith::gcd(k, n) == 1 {
                total = &total + &self.galois(k as i64).expect("unit");
            }
        }
        total.to_integer().expect("traces are rational")
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_int(v)
    }
}

impl From<BigInt> for Cyclotomic {
    fn from(v: BigInt) -> Self {
        Cyclotomic::from_int(v)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, false)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self.add_impl(&rhs, false)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, true)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self.add_impl(&rhs, true)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        self.mul_impl(&rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for t in self.terms.iter_mut() {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -self.clone()
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "E({})", self.conductor)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(s: &str) -> Cyclotomic {
        s.parse().unwrap()
    }

    fn terms(v: &[(i64, i64)]) -> Vec<(i64, BigInt)> {
        v.iter().map(|&(e, c)| (e, BigInt::from(c))).collect()
    }

    #[test]
    fn make_reduces_to_rationals() {
        let a = Cyclotomic::make(4, &terms(&[(2, 1)])).unwrap();
        assert_eq!(a, Cyclotomic::from_int(-1));
        assert_eq!(a.conductor(), 1);
        let b = Cyclotomic::make(5, &terms(&[(1, 1), (2, 1), (3, 1), (4, 1)])).unwrap();
        assert_eq!(b, Cyclotomic::from_int(-1));
        assert_eq!(
            Cyclotomic::make(0, &[]),
            Err(CyclotomicError::ZeroConductor)
        );
    }

    #[test]
    fn gauss_period_product() {
        // (ζ+ζ²+ζ⁴)(ζ³+ζ⁵+ζ⁶) over Z[ζ_7]; the nine products are
        // ζ^4, ζ^6, 1, ζ^5, 1, ζ, 1, ζ^2, ζ^3, i.e. 3 + (−1 − 1) = 2.
        let a = Cyclotomic::make(7, &terms(&[(1, 1), (2, 1), (4, 1)])).unwrap();
        let b = Cyclotomic::make(7, &terms(&[(3, 1), (5, 1), (6, 1)])).unwrap();
        assert_eq!(&a * &b, Cyclotomic::from_int(2));
    }

    #[test]
    fn ring_examples() {
        let z3 = Cyclotomic::root(3, 1).unwrap();
        assert_eq!(&z3 + &z3.pow(2), Cyclotomic::from_int(-1));
        let i = Cyclotomic::root(4, 1).unwrap();
        assert_eq!(&i * &i, Cyclotomic::from_int(-1));
        let sqrt2 = cyc("E(8)+E(8)^7");
        assert_eq!(sqrt2.conductor(), 8);
        assert_eq!(&sqrt2 + &Cyclotomic::zero(), sqrt2);
        assert_eq!(&sqrt2 * &sqrt2, Cyclotomic::from_int(2));
    }

    #[test]
    fn division_by_integers() {
        let six = Cyclotomic::from_int(6);
        assert_eq!(
            six.div_int(&BigInt::from(3)).unwrap(),
            Cyclotomic::from_int(2)
        );
        let a = cyc("E(3)-E(3)^2");
        assert_eq!(a.div_int(&BigInt::one()).unwrap(), a);
        let b = cyc("2*E(5)+2*E(5)^4");
        assert_eq!(b.div_int(&BigInt::from(2)).unwrap(), cyc("E(5)+E(5)^4"));
        assert!(matches!(
            cyc("E(5)+2*E(5)^4").div_int(&BigInt::from(2)),
            Err(CyclotomicError::NotAlgebraicInteger { .. })
        ));
    }

    #[test]
    fn conductor_descends_through_2_mod_4() {
        let z6 = Cyclotomic::root(6, 1).unwrap();
        assert_eq!(z6.conductor(), 3);
        assert_eq!(z6, -Cyclotomic::root(3, 2).unwrap());
        let i = Cyclotomic::root(12, 3).unwrap();
        assert_eq!(i.conductor(), 4);
        assert_eq!(Cyclotomic::root(2, 1).unwrap(), Cyclotomic::from_int(-1));
    }

    #[test]
    fn real_subfield_elements_keep_their_conductor() {
        let b5 = cyc("E(5)+E(5)^4");
        assert_eq!(b5.conductor(), 5);
        // b5² + b5 − 1 = 0
        let rel = &(&b5 * &b5) + &b5 - Cyclotomic::one();
        assert!(rel.is_zero());
        let sqrt_m3 = cyc("E(3)-E(3)^2");
        assert_eq!(&sqrt_m3 * &sqrt_m3, Cyclotomic::from_int(-3));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(cyc("E(8)+E(8)^7").to_string(), "E(8)-E(8)^3");
        assert_eq!(cyc("E(3)^2").to_string(), "-1-E(3)");
        assert_eq!(cyc("3*E(4)^3").to_string(), "-3*E(4)");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(cyc("2+E(7)").to_string(), "2+E(7)");
    }

    #[test]
    fn coefficients_have_totient_length() {
        let a = cyc("E(15)+E(15)^2");
        assert_eq!(a.coefficients().len(), 8);
        assert_eq!(cyc("7").coefficients(), vec![BigInt::from(7)]);
    }

    #[test]
    fn traces() {
        assert_eq!(cyc("E(5)").trace(), BigInt::from(-1));
        assert_eq!(cyc("E(8)-E(8)^3").trace(), BigInt::zero());
        assert_eq!(cyc("E(9)").trace(), BigInt::zero());
    }
}
