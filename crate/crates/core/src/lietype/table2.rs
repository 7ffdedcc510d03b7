//! Sylow data for a cyclic maximal torus `T` and its Sylow `Φ_e`-part `T_e`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{eval_cyclotomic, Family, GenericLieGroup, LieError};
use crate::arith::{factor_big, gcd, isqrt_big, prime_divisors};

/// One evaluated row: the index `d`, `|T|`, `|T_e|`, `e`, `|N_{A₀}(R)/C_{A₀}(R)|`
/// and `ord_r(p)` for a Zsigmondy prime `r` of `|T_e|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Row {
    pub d: u64,
    pub t_order: BigUint,
    pub te_order: BigUint,
    pub e: u32,
    pub n_over_c: u32,
    pub ord_r_p: u32,
}

/// `√m`, which the callers guarantee to be an integer.
fn exact_sqrt(m: BigUint) -> BigUint {
    let r = isqrt_big(&m);
    debug_assert_eq!(&r * &r, m);
    r
}

/// The first condition of the row for `S` that fails, if any.
fn check_conditions(s: &GenericLieGroup) -> Result<(), LieError> {
    let (n, q) = (s.rank(), s.q());
    let condition = match s.family() {
        Family::A if matches!((n, q), (2, 2) | (2, 4) | (5, 2)) => "(n,q) ≠ (2,2), (2,4), (5,2)",
        Family::C if n <= 2 => "n > 2",
        Family::B | Family::C if (n, q) == (3, 2) => "(n,q) ≠ (3,2)",
        Family::B if n == 2 && q % 2 == 0 => "q odd when n = 2",
        Family::D if (n, q) == (6, 2) => "(n,q) ≠ (6,2)",
        Family::F4 if q == 2 => "q ≠ 2",
        Family::G2 if q % 3 == 0 => "3 ∤ q",
        Family::TwistedA if n % 2 == 1 && (n, q) == (3, 2) => "(n,q) ≠ (3,2)",
        _ => return Ok(()),
    };
    Err(LieError::ConditionViolated { condition })
}

/// The torus data of `S`, or the condition that excludes it.
pub fn table2_row(s: &GenericLieGroup) -> Result<Table2Row, LieError> {
    check_conditions(s)?;
    Ok(evaluate(s))
}

/// Evaluates the row formulas without checking the conditions.
fn evaluate(s: &GenericLieGroup) -> Table2Row {
    let (n, q, f) = (s.rank(), s.q(), s.f());
    let qb = BigUint::from(q);
    let phi = |k: u32| eval_cyclotomic(k as u64, q);
    // (|T|, |T_e|, e, |N/C|)
    let (t, te, e, nc) = match s.family() {
        Family::A => ((qb.pow(n + 1) - 1u32) / (q - 1), phi(n + 1), n + 1, n + 1),
        Family::B | Family::C => (qb.pow(n) + 1u32, phi(2 * n), 2 * n, 2 * n),
        Family::D => (qb.pow(n) - 1u32, phi(n), n, n),
        Family::E6 => {
            let te = phi(9) / gcd(3, q - 1);
            (te.clone(), te, 9, 9)
        }
        Family::E7 => (phi(2) * phi(18) / gcd(2, q - 1), phi(18), 18, 18),
        Family::E8 => (phi(30), phi(30), 30, 30),
        Family::F4 => (phi(12), phi(12), 12, 12),
        Family::G2 => (phi(6), phi(6), 6, 6),
        Family::TwistedA if n % 2 == 0 => (
            (qb.pow(n + 1) + 1u32) / (q + 1),
            phi(2 * (n + 1)),
            2 * (n + 1),
            n + 1,
        ),
        Family::TwistedA => (qb.pow(n) + 1u32, phi(2 * n), 2 * n, n),
        Family::TwistedD => (qb.pow(n) + 1u32, phi(2 * n), 2 * n, n),
        Family::TwistedE6 => {
            let te = phi(18) / gcd(3, q + 1);
            (te.clone(), te, 18, 18)
        }
        Family::Triality => (phi(12), phi(12), 12, 12),
        Family::Suzuki => {
            // q + √(2q) + 1
            let te = &qb + exact_sqrt(&qb * 2u32) + 1u32;
            (te.clone(), te, 4, 4)
        }
        Family::ReeF4 => {
            // q² + √(2q³) + q + √(2q) + 1
            let te = qb.pow(2) + exact_sqrt(qb.pow(3) * 2u32) + &qb + exact_sqrt(&qb * 2u32) + 1u32;
            (te.clone(), te, 12, 12)
        }
        Family::ReeG2 => {
            // q − √(3q) + 1
            let te = &qb + 1u32 - exact_sqrt(&qb * 3u32);
            (te.clone(), te, 6, 6)
        }
    };
    Table2Row {
        d: s.index(),
        t_order: t,
        te_order: te,
        e,
        n_over_c: nc,
        ord_r_p: e * f,
    }
}

/// Whether `p` has multiplicative order exactly `k` modulo `r`.
fn has_order(p: &BigUint, r: &BigUint, k: u64) -> bool {
    if (p % r).is_zero() || !p.modpow(&BigUint::from(k), r).is_one() {
        return false;
    }
    prime_divisors(k)
        .into_iter()
        .all(|s| !p.modpow(&BigUint::from(k / s), r).is_one())
}

/// The smallest prime `r | |T_e|` with `ord_r(p)` equal to the row's
/// `ord_r(p)` entry, if any. The row formulas are evaluated even where the
/// row's conditions fail, so excluded groups such as L6(2) report `None`.
pub fn zsigmondy_prime_of_te(s: &GenericLieGroup) -> Option<BigUint> {
    let row = evaluate(s);
    let p = BigUint::from(s.p());
    factor_big(&row.te_order)
        .into_iter()
        .map(|(r, _)| r)
        .find(|r| has_order(&p, r, row.ord_r_p as u64))
}
