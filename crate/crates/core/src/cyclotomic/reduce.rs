//! Reduction of cyclotomic integers modulo a prime ideal over `p`.
//!
//! Let `m′` be the p′-part of `m` and `k = ord_{m′}(p)`. `Φ_{m′}` splits mod
//! `p` into `φ(m′)/k` irreducible factors of degree `k`, one per prime ideal of
//! `Z[ζ_m]` above `p`. A context fixes one factor `f` and realizes the residue
//! field as `F_p[y]/(f)` with `ζ̄ = y`; the `p`-power part of `ζ_m` maps to 1.
//!
//! The factors are found without factoring `Φ_{m′}` directly: build some field
//! of order `p^k`, pick `β` of exact order `m′`, and take the minimal
//! polynomials of `β^s` for `s` running over coset representatives of `⟨p⟩`
//! in `(Z/m′)^*`. Each minimal polynomial is one linear solve.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use parking_lot::{Mutex, RwLock};
use rayon::prelude::*;

use super::{Cyclotomic, CyclotomicError, IntPolynomial};
use crate::arith;

type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Remainder modulo a monic polynomial.
fn poly_rem_monic(a: &[u64], m: &[u64], p: u64) -> Poly {
    let d = m.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= d {
        return trim(r);
    }
    for i in (d..r.len()).rev() {
        let lead = r[i];
        if lead == 0 {
            continue;
        }
        r[i] = 0;
        for j in 0..d {
            r[i - d + j] = (r[i - d + j] + (p - lead) * m[j]) % p;
        }
    }
    r.truncate(d);
    trim(r)
}

/// Remainder modulo an arbitrary nonzero polynomial.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let lead_inv = arith::inv_mod(*m.last().expect("nonzero modulus"), p).expect("field");
    let monic: Poly = m.iter().map(|&c| c * lead_inv % p).collect();
    poly_rem_monic(a, &monic, p)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = arith::inv_mod(lead, p).expect("field");
        for c in a.iter_mut() {
            *c = *c * inv % p;
        }
    }
    a
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = poly_rem_monic(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem_monic(&poly_mul(&acc, &b, p), m, p);
        }
        b = poly_rem_monic(&poly_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Ben-Or test: a monic `f` of degree `k` is irreducible iff
/// `gcd(f, y^{p^i} − y) = 1` for `1 ≤ i ≤ k/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    let y: Poly = vec![0, 1];
    let mut h = y.clone();
    for _ in 0..k / 2 {
        h = poly_powmod(&h, p, f, p);
        let g = poly_gcd(f, &poly_sub(&h, &y, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// First monic irreducible of degree `k`, enumerating lower coefficients as a
/// base-`p` counter with the constant term as the least significant digit.
fn first_irreducible(k: usize, p: u64) -> Poly {
    let mut f = vec![0u64; k + 1];
    f[k] = 1;
    loop {
        if is_irreducible(&f, p) {
            return f;
        }
        let mut i = 0;
        loop {
            f[i] += 1;
            if f[i] < p {
                break;
            }
            f[i] = 0;
            i += 1;
            assert!(i < k, "irreducible polynomials of every degree exist");
        }
    }
}

/// An element of `F_p[y]/(f)`: `k` residues, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteFieldElt {
    pub characteristic: u64,
    pub coeffs: Vec<u64>,
}

impl FiniteFieldElt {
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FiniteFieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            parts.push(match (i, c) {
                (0, _) => c.to_string(),
                (1, 1) => "y".into(),
                (1, _) => format!("{c}*y"),
                (_, 1) => format!("y^{i}"),
                _ => format!("{c}*y^{i}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl fmt::Debug for FiniteFieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.characteristic)
    }
}

/// The field `F_p[y]/(f)` for a monic irreducible `f` of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionField {
    p: u64,
    modulus: Poly,
}

impl ExtensionField {
    /// `modulus` is monic and lowest degree first; irreducibility is the
    /// caller's responsibility.
    pub fn new(p: u64, modulus: Vec<u64>) -> Self {
        assert!(p < 1 << 32, "characteristic must fit in 32 bits");
        assert_eq!(modulus.last(), Some(&1), "modulus must be monic");
        assert!(modulus.len() >= 2, "modulus must have positive degree");
        ExtensionField { p, modulus }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn wrap(&self, mut coeffs: Poly) -> FiniteFieldElt {
        coeffs.resize(self.degree(), 0);
        FiniteFieldElt {
            characteristic: self.p,
            coeffs,
        }
    }

    pub fn zero(&self) -> FiniteFieldElt {
        self.wrap(Vec::new())
    }

    pub fn one(&self) -> FiniteFieldElt {
        self.from_u64(1)
    }

    pub fn from_u64(&self, v: u64) -> FiniteFieldElt {
        self.wrap(vec![v % self.p])
    }

    pub fn from_bigint(&self, v: &BigInt) -> FiniteFieldElt {
        let r = v
            .mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("residue fits");
        self.from_u64(r)
    }

    /// The class of `y`.
    pub fn generator(&self) -> FiniteFieldElt {
        self.element(&[0, 1])
    }

    /// Reduces an arbitrary polynomial in `y`.
    pub fn element(&self, coeffs: &[u64]) -> FiniteFieldElt {
        let c: Poly = coeffs.iter().map(|&c| c % self.p).collect();
        self.wrap(poly_rem_monic(&c, &self.modulus, self.p))
    }

    pub fn add(&self, a: &FiniteFieldElt, b: &FiniteFieldElt) -> FiniteFieldElt {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        FiniteFieldElt {
            characteristic: self.p,
            coeffs,
        }
    }

    pub fn sub(&self, a: &FiniteFieldElt, b: &FiniteFieldElt) -> FiniteFieldElt {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| (x + self.p - y) % self.p)
            .collect();
        FiniteFieldElt {
            characteristic: self.p,
            coeffs,
        }
    }

    pub fn neg(&self, a: &FiniteFieldElt) -> FiniteFieldElt {
        self.sub(&self.zero(), a)
    }

    pub fn scale(&self, a: &FiniteFieldElt, c: u64) -> FiniteFieldElt {
        let c = c % self.p;
        let coeffs = a.coeffs.iter().map(|x| x * c % self.p).collect();
        FiniteFieldElt {
            characteristic: self.p,
            coeffs,
        }
    }

    /// `acc += c·a`, in place.
    pub fn add_scaled(&self, acc: &mut FiniteFieldElt, a: &FiniteFieldElt, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        for (x, y) in acc.coeffs.iter_mut().zip(&a.coeffs) {
            *x = (*x + y * c) % self.p;
        }
    }

    pub fn mul(&self, a: &FiniteFieldElt, b: &FiniteFieldElt) -> FiniteFieldElt {
        let prod = poly_mul(&trim(a.coeffs.clone()), &trim(b.coeffs.clone()), self.p);
        self.wrap(poly_rem_monic(&prod, &self.modulus, self.p))
    }

    pub fn pow(&self, a: &FiniteFieldElt, mut e: u64) -> FiniteFieldElt {
        let mut acc = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: &FiniteFieldElt, e: &BigUint) -> FiniteFieldElt {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Minimal polynomial over `F_p` of an element generating the whole field,
    /// found by expressing `γ^k` in the basis `1, γ, …, γ^{k−1}`.
    fn minimal_polynomial(&self, gamma: &FiniteFieldElt) -> Option<Poly> {
        let k = self.degree();
        let p = self.p;
        let mut powers = Vec::with_capacity(k + 1);
        let mut cur = self.one();
        for _ in 0..=k {
            powers.push(cur.clone());
            cur = self.mul(&cur, gamma);
        }
        // Augmented k × (k+1) system: column j is γ^j, last column γ^k.
        let mut rows: Vec<Vec<u64>> = (0..k)
            .map(|r| (0..=k).map(|j| powers[j].coeffs[r]).collect())
            .collect();
        for col in 0..k {
            let pivot = (col..k).find(|&r| rows[r][col] != 0)?;
            rows.swap(col, pivot);
            let inv = arith::inv_mod(rows[col][col], p).expect("nonzero pivot");
            for x in rows[col].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot_row = rows[col].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == col || row[col] == 0 {
                    continue;
                }
                let factor = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - factor) * y % p) % p;
                }
            }
        }
        // γ^k = Σ c_j γ^j, so the minimal polynomial is x^k − Σ c_j x^j.
        let mut f: Poly = rows.iter().map(|row| (p - row[k]) % p).collect();
        f.push(1);
        Some(f)
    }
}

/// Compares monic polynomials of equal degree as base-`p` numbers, reading
/// coefficients from the top down.
fn factor_order(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

/// Representatives of the cosets of `⟨p⟩` in `(Z/n)^*`, smallest first.
fn coset_representatives(n: u64, p: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    let mut seen = vec![false; n as usize];
    let mut reps = Vec::new();
    for s in 1..n {
        if seen[s as usize] || arith::gcd(s, n) != 1 {
            continue;
        }
        reps.push(s);
        let mut t = s;
        while !seen[t as usize] {
            seen[t as usize] = true;
            t = arith::mul_mod(t, p, n);
        }
    }
    reps
}

/// The irreducible factors of `Φ_n` mod `p` (with `p ∤ n`), sorted.
fn cyclotomic_factors_mod_p(n: u64, p: u64) -> Arc<Vec<Poly>> {
    static CACHE: LazyLock<RwLock<HashMap<(u64, u64), Arc<Vec<Poly>>>>> =
        LazyLock::new(|| RwLock::new(HashMap::new()));
    if let Some(v) = CACHE.read().get(&(n, p)) {
        return v.clone();
    }
    let k = if n == 1 {
        1
    } else {
        arith::multiplicative_order(p % n, n).expect("p is prime to n") as usize
    };
    let field = ExtensionField::new(p, first_irreducible(k, p));
    let group_order = BigUint::from(p).pow(k as u32) - 1u32;
    let cofactor = &group_order / n;
    let odd_primes = arith::prime_divisors(n);
    // Deterministic search for an element of exact order n.
    let beta = (1u64..)
        .map(|i| {
            let mut digits = Vec::new();
            let mut v = i;
            while v > 0 {
                digits.push(v % p);
                v /= p;
            }
            field.pow_big(&field.element(&digits), &cofactor)
        })
        .find(|b| {
            odd_primes
                .iter()
                .all(|&r| field.pow(b, n / r) != field.one())
        })
        .expect("the multiplicative group is cyclic");
    let reps = coset_representatives(n, p);
    let mut factors: Vec<Poly> = reps
        .par_iter()
        .map(|&s| {
            field
                .minimal_polynomial(&field.pow(&beta, s))
                .expect("β^s generates the field")
        })
        .collect();
    factors.sort_by(factor_order);
    factors.dedup();
    debug_assert_eq!(factors.len(), reps.len());
    let factors = Arc::new(factors);
    CACHE.write().insert((n, p), factors.clone());
    factors
}

/// A fixed maximal ideal of `Z[ζ_m]` above `p`, realized as a residue field.
pub struct ReductionContext {
    p: u64,
    m: u64,
    m_prime: u64,
    field: ExtensionField,
    root: FiniteFieldElt,
    /// `(m/m′)^{-1} mod m′`
    lift: u64,
    ideal: usize,
    ideal_count: usize,
    powers: Mutex<HashMap<u64, FiniteFieldElt>>,
}

impl fmt::Debug for ReductionContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReductionContext")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("m_prime", &self.m_prime)
            .field("modulus", &self.modulus_polynomial().to_string())
            .field("ideal", &self.ideal)
            .finish()
    }
}

impl ReductionContext {
    /// Context for the factor of `Φ_{m′}` that is smallest in coefficient
    /// order (compared from the top coefficient down).
    pub fn new(m: u64, p: u64) -> Result<Self, CyclotomicError> {
        Self::for_ideal(m, p, 0)
    }

    /// Context for the `index`-th factor in sorted order.
    pub fn for_ideal(m: u64, p: u64, index: usize) -> Result<Self, CyclotomicError> {
        if m == 0 || !arith::is_prime(p) || p >= 1 << 32 {
            return Err(CyclotomicError::BadReduction { m, p });
        }
        let m_prime = arith::coprime_part(m, p);
        let factors = cyclotomic_factors_mod_p(m_prime, p);
        let f = factors
            .get(index)
            .ok_or(CyclotomicError::BadReduction { m, p })?;
        let field = ExtensionField::new(p, f.clone());
        let root = field.generator();
        let lift = arith::inv_mod((m / m_prime) % m_prime, m_prime).unwrap_or(0);
        Ok(ReductionContext {
            p,
            m,
            m_prime,
            root,
            field,
            lift,
            ideal: index,
            ideal_count: factors.len(),
            powers: Mutex::new(HashMap::new()),
        })
    }

    /// One context per maximal ideal above `p`, in sorted factor order.
    pub fn all_ideals(m: u64, p: u64) -> Result<Vec<Self>, CyclotomicError> {
        let first = Self::new(m, p)?;
        let mut out = Vec::with_capacity(first.ideal_count);
        let count = first.ideal_count;
        out.push(first);
        for i in 1..count {
            out.push(Self::for_ideal(m, p, i)?);
        }
        Ok(out)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn modulus_m(&self) -> u64 {
        self.m
    }

    /// The p′-part of `m`.
    pub fn m_prime(&self) -> u64 {
        self.m_prime
    }

    /// Degree `k` of the residue field over `F_p`.
    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn ideal_index(&self) -> usize {
        self.ideal
    }

    pub fn ideal_count(&self) -> usize {
        self.ideal_count
    }

    pub fn field(&self) -> &ExtensionField {
        &self.field
    }

    /// The chosen factor `f` of `Φ_{m′}` mod `p`, lowest degree first.
    pub fn modulus(&self) -> &[u64] {
        self.field.modulus()
    }

    pub fn modulus_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.modulus().iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `ζ̄`, the image of a primitive `m′`-th root of unity.
    pub fn root(&self) -> &FiniteFieldElt {
        &self.root
    }

    fn root_power(&self, t: u64) -> FiniteFieldElt {
        if let Some(v) = self.powers.lock().get(&t) {
            return v.clone();
        }
        let v = self.field.pow(&self.root, t);
        self.powers.lock().insert(t, v.clone());
        v
    }

    pub fn reduce_int(&self, v: &BigInt) -> FiniteFieldElt {
        self.field.from_bigint(v)
    }

    /// Image of `a` under `Z[ζ_m] → F_p[y]/(f)`, `ζ_m ↦ y^{(m/m′)^{-1}}`.
    pub fn reduce(&self, a: &Cyclotomic) -> Result<FiniteFieldElt, CyclotomicError> {
        let c = a.conductor();
        if self.m % c != 0 {
            return Err(CyclotomicError::ConductorMismatch {
                conductor: c,
                modulus: self.m,
            });
        }
        let stretch = self.m / c;
        let big_p = BigInt::from(self.p);
        let mut acc = self.field.zero();
        for (e, coeff) in a.terms() {
            let r = coeff.mod_floor(&big_p);
            if r.is_zero() {
                continue;
            }
            let r = r.to_u64().expect("residue fits");
            let exp = (*e as u128 * stretch as u128 % self.m as u128) as u64;
            let t = arith::mul_mod(exp % self.m_prime, self.lift, self.m_prime);
            if t == 0 {
                let one = self.field.one();
                self.field.add_scaled(&mut acc, &one, r);
            } else {
                self.field.add_scaled(&mut acc, &self.root_power(t), r);
            }
        }
        Ok(acc)
    }

    pub fn add(&self, a: &FiniteFieldElt, b: &FiniteFieldElt) -> FiniteFieldElt {
        self.field.add(a, b)
    }

    pub fn mul(&self, a: &FiniteFieldElt, b: &FiniteFieldElt) -> FiniteFieldElt {
        self.field.mul(a, b)
    }
}
