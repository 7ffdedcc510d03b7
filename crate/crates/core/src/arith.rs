//! Elementary number theory on machine and arbitrary-precision integers.
//!
//! Factorization uses trial division followed by Brent's variant of Pollard's
//! rho, with deterministic Miller-Rabin bases for 64-bit inputs.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = ext_gcd(a as i128 % m as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n != 0 && p > 1);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub fn valuation_big(n: &BigUint, p: u64) -> u32 {
    let mut v = 0;
    let mut n = n.clone();
    let p = BigUint::from(p);
    if n.is_zero() {
        return 0;
    }
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Largest divisor of `n` coprime to `p`.
pub fn coprime_part(mut n: u64, p: u64) -> u64 {
    while n % p == 0 {
        n /= p;
    }
    n
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test for all 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        while g == 1 {
            x = f(x);
            y = f(f(y));
            g = gcd(x.abs_diff(y), n);
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if n % p == 0 {
            primes.push((p, valuation(n, p)));
            n = coprime_part(n, p);
        }
    }
    let mut stack = vec![n];
    let mut large = Vec::new();
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            large.push(m);
            continue;
        }
        let d = rho_u64(m);
        stack.push(d);
        stack.push(m / d);
    }
    large.sort_unstable();
    for p in large {
        match primes.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => primes.push((p, 1)),
        }
    }
    primes.sort_unstable();
    primes
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

pub fn totient(n: u64) -> u64 {
    factor(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Multiplicative order of `a` modulo `m`; `None` unless `gcd(a, m) = 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut ord = totient(m);
    for (p, _) in factor(ord) {
        while ord % p == 0 && pow_mod(a, ord / p, m) == 1 {
            ord /= p;
        }
    }
    Some(ord)
}

/// Smallest generator of the multiplicative group of the prime field `F_p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let primes = prime_divisors(p - 1);
    (2..p)
        .find(|&g| primes.iter().all(|&r| pow_mod(g, (p - 1) / r, p) != 1))
        .expect("prime field has a generator")
}

/// Decomposes `q = p^f` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factor(q).as_slice() {
        [(p, f)] => Some((*p, *f)),
        _ => None,
    }
}

pub fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn isqrt_big(n: &BigUint) -> BigUint {
    n.sqrt()
}

// ---------------------------------------------------------------------------
// Arbitrary precision

pub fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_BASES {
        let a = BigUint::from(a);
        if (n % &a).is_zero() {
            return false;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn rho_big(n: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if n.is_even() {
        return two;
    }
    for c in 1u64.. {
        let c = BigUint::from(c);
        // Brent's cycle detection with batched gcds.
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = two.clone();
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..128.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!()
}

/// Prime factorization of an arbitrary-precision integer.
pub fn factor_big(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() {
        return out;
    }
    if let Some(small) = n.to_u64() {
        return factor(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect();
    }
    let mut rest = n.clone();
    for p in 2u64..10_000 {
        if !is_prime(p) {
            continue;
        }
        let bp = BigUint::from(p);
        let mut e = 0;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
    }
    let mut stack = vec![rest];
    let mut large = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime_big(&m) {
            large.push(m);
            continue;
        }
        let d = rho_big(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    large.sort();
    for p in large {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out.sort();
    out
}

/// Smallest prime `rho ≡ 1 (mod m)` strictly greater than `floor`.
pub fn prime_one_mod(m: u64, floor: u64) -> u64 {
    let mut k = floor / m + 1;
    loop {
        let candidate = k * m + 1;
        if candidate > floor && is_prime(candidate) {
            return candidate;
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_group_orders() {
        assert_eq!(
            factor(175_560),
            vec![(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)]
        );
        assert_eq!(
            factor(9_999_360),
            vec![(2, 10), (3, 2), (5, 1), (7, 1), (31, 1)]
        );
        assert_eq!(factor(1), vec![]);
        assert_eq!(
            factor(600_851_475_143),
            vec![(71, 1), (839, 1), (1471, 1), (6857, 1)]
        );
    }

    #[test]
    fn rho_splits_semiprimes() {
        let n = 1_000_000_007u64 * 998_244_353;
        assert_eq!(factor(n), vec![(998_244_353, 1), (1_000_000_007, 1)]);
        let big = BigUint::from(1_000_000_007u64)
            * BigUint::from(1_000_000_009u64)
            * BigUint::from(998_244_353u64);
        let f = factor_big(&big);
        assert_eq!(f.len(), 3);
        assert_eq!(f[0].0, BigUint::from(998_244_353u64));
    }

    #[test]
    fn orders_and_roots() {
        assert_eq!(multiplicative_order(2, 5), Some(4));
        assert_eq!(multiplicative_order(2, 331), Some(30));
        assert_eq!(multiplicative_order(2, 6), None);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(inv_mod(3, 7), Some(5));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(totient(43890), 8640);
    }

    #[test]
    fn prime_one_mod_is_congruent() {
        let rho = prime_one_mod(60, 16);
        assert_eq!(rho, 61);
        assert!(is_prime(prime_one_mod(43890, 838)));
    }
}
