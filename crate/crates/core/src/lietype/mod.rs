//! Number theory of the finite simple groups of Lie type.
//!
//! A [`GenericLieGroup`] names a group by family, rank and field size. From
//! that descriptor this module evaluates the generic order, the Sylow data of
//! [`table2_row`], Zsigmondy primes, the index `e_ℓ(q)` and regular numbers,
//! and decides whether the Steinberg character lies in the principal ℓ-block:
//! it does exactly when `e_ℓ(q)` is a regular number of the group.

mod family;
mod table2;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{self, factor_big, gcd, is_prime, multiplicative_order, prime_power};
use crate::cyclotomic::cyclotomic_polynomial;

pub use family::{Eigenvalue, Family, FamilyData, UnknownFamily};
pub use table2::{table2_row, zsigmondy_prime_of_te, Table2Row};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error(
        "²F4(2) is excluded: its derived subgroup, the Tits group, is treated as a sporadic group, \
         and the restriction of the Steinberg character of ²F4(2) to it has two irreducible constituents"
    )]
    TitsGroup,
    #[error("{ell} is not a prime coprime to q = {q}")]
    BadPrime { ell: u64, q: u64 },
    #[error("{ell} is the defining characteristic")]
    DefiningPrime { ell: u64 },
    #[error("{ell} does not divide the group order")]
    NotADivisor { ell: u64 },
    #[error("Sylow data require {condition}")]
    ConditionViolated { condition: &'static str },
}

/// A finite simple group of Lie type `family_n(q)` with `q = p^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenericLieGroup {
    family: Family,
    rank: u32,
    p: u64,
    f: u32,
}

impl GenericLieGroup {
    /// Validates the descriptor. Exceptional families require their fixed
    /// rank; groups that are not simple (A1(2), A1(3), ²A2(2), B2(2), G2(2),
    /// ²G2(3)) are rejected, and ²F4(2) is rejected as [`LieError::TitsGroup`].
    pub fn new(family: Family, rank: u32, q: u64) -> Result<Self, LieError> {
        let invalid = |msg: String| Err(LieError::InvalidDescriptor(msg));
        let Some((p, f)) = prime_power(q) else {
            return invalid(format!("q = {q} is not a prime power"));
        };
        match family.fixed_rank() {
            Some(r) if r != rank => {
                return invalid(format!("{family} has rank {r}, not {rank}"));
            }
            None if rank < family.min_rank() => {
                return invalid(format!("{family}_n needs n ≥ {}", family.min_rank()));
            }
            _ => {}
        }
        let not_simple = match family {
            Family::A => rank == 1 && (q == 2 || q == 3),
            Family::TwistedA => rank == 2 && q == 2,
            Family::B => rank == 2 && q == 2,
            Family::G2 => q == 2,
            _ => false,
        };
        if not_simple {
            return invalid(format!("{family}{rank}({q}) is not simple"));
        }
        match family {
            Family::Suzuki | Family::ReeF4 | Family::ReeG2 => {
                let want = if family == Family::ReeG2 { 3 } else { 2 };
                if p != want || f % 2 == 0 {
                    return invalid(format!("{family} needs q = {want}^(2m+1)"));
                }
                if f == 1 {
                    return match family {
                        Family::ReeF4 => Err(LieError::TitsGroup),
                        _ => invalid(format!("{family}({q}) is not simple")),
                    };
                }
            }
            _ => {}
        }
        Ok(GenericLieGroup { family, rank, p, f })
    }

    /// Descriptor with the fixed rank of an exceptional family.
    pub fn exceptional(family: Family, q: u64) -> Result<Self, LieError> {
        let rank = family.fixed_rank().ok_or_else(|| {
            LieError::InvalidDescriptor(format!("{family} needs an explicit rank"))
        })?;
        Self::new(family, rank, q)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// The defining characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.f)
    }

    pub fn data(&self) -> FamilyData {
        self.family.data(self.rank)
    }

    /// The index `d = |A₀ : S|` of the simple group in the adjoint group.
    pub fn index(&self) -> u64 {
        let q = self.q();
        let n = self.rank as u64;
        match self.family {
            Family::A => gcd(n + 1, q - 1),
            Family::B | Family::C | Family::E7 => gcd(2, q - 1),
            Family::D => gcd(4, pow_mod_minus_one(q, n, 4)),
            Family::E6 => gcd(3, q - 1),
            Family::TwistedA => gcd(n + 1, q + 1),
            Family::TwistedD => gcd(4, (arith::pow_mod(q, n, 4) + 1) % 4),
            Family::TwistedE6 => gcd(3, q + 1),
            _ => 1,
        }
    }

    /// `|S| = q^N ∏ Φ_k(q)^{m_k} / d`.
    pub fn order(&self) -> BigUint {
        let q = BigUint::from(self.q());
        let data = self.data();
        let mut order = q.pow(data.q_exponent());
        for (k, m) in data.cyclotomic_factors() {
            order *= eval_cyclotomic(k, self.q()).pow(m);
        }
        order / self.index()
    }

    /// Degree of the Steinberg character, the full `p`-part of `|S|`.
    pub fn steinberg_degree(&self) -> BigUint {
        BigUint::from(self.q()).pow(self.data().q_exponent())
    }
}

/// `(q^n − 1) mod m`, kept non-negative.
fn pow_mod_minus_one(q: u64, n: u64, m: u64) -> u64 {
    (arith::pow_mod(q, n, m) + m - 1) % m
}

impl fmt::Display for GenericLieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.fixed_rank() {
            Some(_) => write!(f, "{}({})", self.family, self.q()),
            None => write!(f, "{}{}({})", self.family, self.rank, self.q()),
        }
    }
}

/// `Φ_k(t)` over the integers (positive for `t ≥ 2`).
pub fn eval_cyclotomic(k: u64, t: u64) -> BigUint {
    cyclotomic_polynomial(k)
        .eval(&t.into())
        .to_biguint()
        .expect("cyclotomic values at t ≥ 2 are positive")
}

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredOrder {
    pub value: BigUint,
    pub factors: Vec<(BigUint, u32)>,
}

impl fmt::Display for FactoredOrder {
    /// `29120 = 2^6 · 5 · 7 · 13`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.value)?;
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" · ")?;
            }
            match e {
                1 => write!(f, "{p}")?,
                e => write!(f, "{p}^{e}")?,
            }
        }
        Ok(())
    }
}

/// The order of `S`, factored by factoring each cyclotomic value.
pub fn group_order(s: &GenericLieGroup) -> FactoredOrder {
    let data = s.data();
    let mut exponents: BTreeMap<BigUint, i64> = BTreeMap::new();
    let mut add = |n: &BigUint, times: i64| {
        for (p, e) in factor_big(n) {
            *exponents.entry(p).or_default() += e as i64 * times;
        }
    };
    add(&BigUint::from(s.q()), data.q_exponent() as i64);
    for (k, m) in data.cyclotomic_factors() {
        add(&eval_cyclotomic(k, s.q()), m as i64);
    }
    add(&BigUint::from(s.index()), -1);
    let factors: Vec<(BigUint, u32)> = exponents
        .into_iter()
        .filter(|(_, e)| *e != 0)
        .map(|(p, e)| (p, u32::try_from(e).expect("index divides the order")))
        .collect();
    FactoredOrder {
        value: s.order(),
        factors,
    }
}

/// `e_ℓ(q)`: the multiplicative order of `q` modulo `ℓ`, or modulo 4 when
/// `ℓ = 2`.
pub fn e_of(ell: u64, q: u64) -> Result<u64, LieError> {
    if !is_prime(ell) || q % ell == 0 {
        return Err(LieError::BadPrime { ell, q });
    }
    let modulus = if ell == 2 { 4 } else { ell };
    Ok(multiplicative_order(q % modulus, modulus).expect("q is a unit"))
}

/// The smallest Zsigmondy prime of `t^n − 1`, i.e. a prime dividing it but
/// no `t^m − 1` with `0 < m < n`; `None` exactly for `(t, n) = (2, 6)` and
/// for `n = 2` with `t + 1` a power of two.
///
/// A prime dividing `Φ_n(t)` is primitive unless it divides `n`, so the
/// primes of `n` are stripped and the smallest remaining factor returned.
pub fn zsigmondy(t: u64, n: u64) -> Option<BigUint> {
    assert!(t > 1 && n > 1, "zsigmondy needs t, n > 1");
    let mut value = eval_cyclotomic(n, t);
    for r in arith::prime_divisors(n) {
        let r = BigUint::from(r);
        while (&value % &r).is_zero() {
            value /= &r;
        }
    }
    if value.is_one() {
        return None;
    }
    factor_big(&value).into_iter().map(|(p, _)| p).next()
}

/// Regular numbers of the twisted families whose coset criterion is not the
/// plain degree/codegree count, together with the very twisted families.
fn encoded_regular(family: Family, n: u32, e: u32) -> Option<bool> {
    let divides = |a: u32, b: u32| b % a == 0;
    let listed = |set: &[u32]| set.contains(&e);
    Some(match family {
        Family::TwistedA => {
            // Φ_e(−q) = ±Φ_{e*}(q): regular iff e* is regular for A_n.
            let star = match e % 4 {
                0 => e,
                2 => e / 2,
                _ => 2 * e,
            };
            divides(star, n + 1) || divides(star, n)
        }
        Family::TwistedD => divides(e, 2 * (n - 1)) || (divides(e, 2 * n) && !divides(e, n)),
        Family::TwistedE6 => listed(&[1, 2, 3, 4, 6, 8, 12, 18]),
        Family::Triality => listed(&[1, 2, 3, 6, 12]),
        Family::Suzuki => listed(&[1, 2, 4]),
        Family::ReeG2 => listed(&[1, 2, 6]),
        Family::ReeF4 => listed(&[1, 2, 4, 6, 12]),
        _ => return None,
    })
}

/// The eigenspace criterion: `e` is regular iff `ζ_e` is an eigenvalue of
/// the twisted Weyl group acting on degrees and codegrees with the same
/// multiplicity.
pub fn regular_by_criterion(family: Family, n: u32, e: u32) -> bool {
    let data = family.data(n);
    data.degree_count(e) == data.codegree_count(e)
}

/// Whether `e ≥ 1` is a regular number of groups of type `family_n`.
///
/// Untwisted families use the degree/codegree criterion; twisted families
/// use encoded tables (checked against the criterion in the test suite).
pub fn is_regular(family: Family, n: u32, e: u32) -> bool {
    assert!(e >= 1, "regular numbers are positive");
    let n = family.fixed_rank().unwrap_or(n).max(1);
    encoded_regular(family, n, e).unwrap_or_else(|| regular_by_criterion(family, n, e))
}

/// The data behind a Steinberg membership decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SteinbergVerdict {
    pub ell: u64,
    pub e: u64,
    pub regular: bool,
}

/// Computes `e = e_ℓ(q)` and whether it is regular, after checking that `ℓ`
/// is a non-defining prime divisor of `|S|`.
pub fn steinberg_verdict(s: &GenericLieGroup, ell: u64) -> Result<SteinbergVerdict, LieError> {
    if !is_prime(ell) {
        return Err(LieError::BadPrime { ell, q: s.q() });
    }
    if ell == s.p() {
        return Err(LieError::DefiningPrime { ell });
    }
    if !(s.order() % ell).is_zero() {
        return Err(LieError::NotADivisor { ell });
    }
    let e = e_of(ell, s.q())?;
    let regular = is_regular(s.family(), s.rank(), e.to_u32().expect("e is at most ℓ"));
    Ok(SteinbergVerdict { ell, e, regular })
}

/// Whether the Steinberg character of `S` lies in the principal ℓ-block.
pub fn steinberg_in_principal_block(s: &GenericLieGroup, ell: u64) -> Result<bool, LieError> {
    steinberg_verdict(s, ell).map(|v| v.regular)
}
