//! The sixteen families and their Weyl-group data.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, totient};

/// A family of finite simple groups of Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    /// Unitary groups `²A_n`.
    TwistedA,
    /// Orthogonal groups of minus type `²D_n`.
    TwistedD,
    TwistedE6,
    /// Triality twisted `³D₄`.
    Triality,
    /// Suzuki groups `²B₂`.
    Suzuki,
    /// Ree groups `²F₄`.
    ReeF4,
    /// Ree groups `²G₂`.
    ReeG2,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::TwistedA,
        Family::TwistedD,
        Family::TwistedE6,
        Family::Triality,
        Family::Suzuki,
        Family::ReeF4,
        Family::ReeG2,
    ];

    /// The ASCII name accepted by [`FromStr`], e.g. `"2A"` or `"E8"`.
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::TwistedA => "2A",
            Family::TwistedD => "2D",
            Family::TwistedE6 => "2E6",
            Family::Triality => "3D4",
            Family::Suzuki => "2B2",
            Family::ReeF4 => "2F4",
            Family::ReeG2 => "2G2",
        }
    }

    /// Rank of the exceptional families; `None` for the classical ones.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::A | Family::B | Family::C | Family::D | Family::TwistedA | Family::TwistedD => {
                None
            }
            Family::E6 | Family::TwistedE6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 | Family::ReeF4 | Family::Triality => Some(4),
            Family::G2 | Family::Suzuki | Family::ReeG2 => Some(2),
        }
    }

    /// Smallest admissible rank of a classical family.
    pub fn min_rank(self) -> u32 {
        match self {
            Family::A => 1,
            Family::B | Family::TwistedA => 2,
            Family::C => 3,
            Family::D | Family::TwistedD => 4,
            other => other.fixed_rank().expect("exceptional family"),
        }
    }

    pub fn is_twisted(self) -> bool {
        matches!(
            self,
            Family::TwistedA
                | Family::TwistedD
                | Family::TwistedE6
                | Family::Triality
                | Family::Suzuki
                | Family::ReeF4
                | Family::ReeG2
        )
    }

    /// Suzuki and Ree groups, whose orders are polynomials in `√q`.
    pub fn is_very_twisted(self) -> bool {
        matches!(self, Family::Suzuki | Family::ReeF4 | Family::ReeG2)
    }

    /// Weyl-group data of rank `n` (ignored for exceptional families).
    pub fn data(self, n: u32) -> FamilyData {
        let untwisted = |degrees: Vec<u32>| {
            let eigenvalues = vec![Eigenvalue::ONE; degrees.len()];
            (degrees, eigenvalues)
        };
        let (degrees, eigenvalues) = match self {
            Family::A => untwisted((2..=n + 1).collect()),
            Family::B | Family::C => untwisted((1..=n).map(|i| 2 * i).collect()),
            Family::D => untwisted(d_degrees(n)),
            Family::E6 => untwisted(vec![2, 5, 6, 8, 9, 12]),
            Family::E7 => untwisted(vec![2, 6, 8, 10, 12, 14, 18]),
            Family::E8 => untwisted(vec![2, 8, 12, 14, 18, 20, 24, 30]),
            Family::F4 => untwisted(vec![2, 6, 8, 12]),
            Family::G2 => untwisted(vec![2, 6]),
            Family::TwistedA => {
                let degrees: Vec<u32> = (2..=n + 1).collect();
                let eigenvalues = degrees
                    .iter()
                    .map(|&d| Eigenvalue::sign(d % 2 == 1))
                    .collect();
                (degrees, eigenvalues)
            }
            Family::TwistedD => {
                // The Pfaffian-type invariant of degree n is the one negated.
                let degrees = d_degrees(n);
                let mut eigenvalues = vec![Eigenvalue::ONE; degrees.len()];
                *eigenvalues.last_mut().expect("rank at least one") = Eigenvalue::MINUS_ONE;
                (degrees, eigenvalues)
            }
            Family::TwistedE6 => {
                let degrees = vec![2, 5, 6, 8, 9, 12];
                let eigenvalues = degrees
                    .iter()
                    .map(|&d| Eigenvalue::sign(d % 2 == 1))
                    .collect();
                (degrees, eigenvalues)
            }
            Family::Triality => (
                vec![2, 4, 6, 4],
                vec![
                    Eigenvalue::ONE,
                    Eigenvalue::new(1, 3),
                    Eigenvalue::ONE,
                    Eigenvalue::new(2, 3),
                ],
            ),
            // Very twisted: degrees and eigenvalues refer to the variable √q.
            Family::Suzuki => (vec![2, 4], vec![Eigenvalue::ONE, Eigenvalue::MINUS_ONE]),
            Family::ReeG2 => (vec![2, 6], vec![Eigenvalue::ONE, Eigenvalue::MINUS_ONE]),
            Family::ReeF4 => (
                vec![2, 6, 8, 12],
                vec![
                    Eigenvalue::ONE,
                    Eigenvalue::MINUS_ONE,
                    Eigenvalue::ONE,
                    Eigenvalue::MINUS_ONE,
                ],
            ),
        };
        let positive_roots = degrees.iter().map(|d| d - 1).sum();
        let root_scale = if self.is_very_twisted() { 2 } else { 1 };
        FamilyData {
            degrees,
            eigenvalues,
            positive_roots,
            root_scale,
        }
    }
}

fn d_degrees(n: u32) -> Vec<u32> {
    let mut degrees: Vec<u32> = (1..n).map(|i| 2 * i).collect();
    degrees.push(n);
    degrees
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown Lie-type family {0:?}")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    /// Accepts the ASCII names (`2A`, `3D4`, …) as well as `^2A`, `²A` and
    /// the common aliases `Sz`, `R`, `U`, `L`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized: String = s
            .trim()
            .trim_start_matches('^')
            .chars()
            .map(|c| match c {
                '²' => '2',
                '³' => '3',
                '₂' => '2',
                '₄' => '4',
                '₆' => '6',
                c => c.to_ascii_uppercase(),
            })
            .collect();
        let family = match normalized.as_str() {
            "A" | "L" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            "F4" => Family::F4,
            "G2" => Family::G2,
            "2A" | "U" => Family::TwistedA,
            "2D" => Family::TwistedD,
            "2E6" => Family::TwistedE6,
            "3D4" => Family::Triality,
            "2B2" | "SZ" => Family::Suzuki,
            "2F4" => Family::ReeF4,
            "2G2" | "R" => Family::ReeG2,
            _ => return Err(UnknownFamily(s.to_string())),
        };
        Ok(family)
    }
}

/// The root of unity `exp(2πi·num/den)`, with `0 ≤ num < den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Eigenvalue {
    pub num: u32,
    pub den: u32,
}

impl Eigenvalue {
    pub const ONE: Eigenvalue = Eigenvalue { num: 0, den: 1 };
    pub const MINUS_ONE: Eigenvalue = Eigenvalue { num: 1, den: 2 };

    pub fn new(num: u32, den: u32) -> Self {
        let num = num % den;
        let g = gcd(num as u64, den as u64) as u32;
        Eigenvalue {
            num: num / g,
            den: den / g,
        }
    }

    fn sign(negative: bool) -> Self {
        if negative {
            Self::MINUS_ONE
        } else {
            Self::ONE
        }
    }

    /// Whether `self · ζ_e^k = 1` for `ζ_e = exp(2πi/e)`.
    pub fn cancels(self, e: u32, k: u32) -> bool {
        let (num, den, e, k) = (self.num as u64, self.den as u64, e as u64, k as u64);
        (num * e + k * den) % (den * e) == 0
    }
}

/// Degrees of the Weyl group, the eigenvalues of the twisting map on the
/// basic invariants, and the number of positive roots.
///
/// The generic order is `x^N ∏ (x^{d_i} − ε_i)`; for Suzuki and Ree groups
/// `x = √q`, recorded as `root_scale = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyData {
    pub degrees: Vec<u32>,
    pub eigenvalues: Vec<Eigenvalue>,
    pub positive_roots: u32,
    pub root_scale: u32,
}

impl FamilyData {
    /// Exponent of `q` in the group order.
    pub fn q_exponent(&self) -> u32 {
        self.positive_roots / self.root_scale
    }

    /// Multiplicities `k ↦ m_k` with `∏ (q^{d_i/s} − ε_i) = ∏ Φ_k(q)^{m_k}`.
    ///
    /// The roots of `y^d = ε` are counted by their multiplicative order; a
    /// Galois-stable product has `φ(k)` roots of each order `k` per factor.
    pub fn cyclotomic_factors(&self) -> BTreeMap<u64, u32> {
        let mut roots: BTreeMap<u64, u64> = BTreeMap::new();
        for (&d, eps) in self.degrees.iter().zip(&self.eigenvalues) {
            let d = (d / self.root_scale) as u64;
            let (num, den) = (eps.num as u64, eps.den as u64);
            let modulus = den * d;
            for t in 0..d {
                let order = modulus / gcd(modulus, num + t * den);
                *roots.entry(order).or_default() += 1;
            }
        }
        roots
            .into_iter()
            .map(|(k, count)| {
                let phi = totient(k);
                assert_eq!(count % phi, 0, "order polynomial is not rational");
                (k, (count / phi) as u32)
            })
            .collect()
    }

    /// Number of degrees `d_i` with `ε_i ζ_e^{d_i} = 1`.
    pub fn degree_count(&self, e: u32) -> usize {
        self.degrees
            .iter()
            .zip(&self.eigenvalues)
            .filter(|(&d, eps)| eps.cancels(e, d))
            .count()
    }

    /// Number of codegrees `d_i − 2` with `ε_i ζ_e^{d_i − 2} = 1`.
    pub fn codegree_count(&self, e: u32) -> usize {
        self.degrees
            .iter()
            .zip(&self.eigenvalues)
            .filter(|(&d, eps)| eps.cancels(e, d - 2))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("²A".parse::<Family>().unwrap(), Family::TwistedA);
        assert_eq!("^3D4".parse::<Family>().unwrap(), Family::Triality);
        assert_eq!("sz".parse::<Family>().unwrap(), Family::Suzuki);
        assert!("H4".parse::<Family>().is_err());
    }

    #[test]
    fn positive_roots() {
        assert_eq!(Family::E8.data(8).positive_roots, 120);
        assert_eq!(Family::A.data(4).positive_roots, 10);
        assert_eq!(Family::D.data(5).positive_roots, 20);
        assert_eq!(Family::Suzuki.data(2).q_exponent(), 2);
        assert_eq!(Family::ReeF4.data(4).q_exponent(), 12);
    }

    #[test]
    fn cyclotomic_factorizations() {
        // (q²−1)(q³−1) = Φ1² Φ2 Φ3
        let a2 = Family::A.data(2).cyclotomic_factors();
        assert_eq!(a2, BTreeMap::from([(1, 2), (2, 1), (3, 1)]));
        // (q²−1)(q⁶−1)(q⁸+q⁴+1) = Φ1² Φ2² Φ3² Φ6² Φ12
        let d4 = Family::Triality.data(4).cyclotomic_factors();
        assert_eq!(
            d4,
            BTreeMap::from([(1, 2), (2, 2), (3, 2), (6, 2), (12, 1)])
        );
        // (q−1)(q²+1)
        let sz = Family::Suzuki.data(2).cyclotomic_factors();
        assert_eq!(sz, BTreeMap::from([(1, 1), (4, 1)]));
    }

    #[test]
    fn eigenvalue_cancellation() {
        assert!(Eigenvalue::ONE.cancels(3, 6));
        assert!(!Eigenvalue::ONE.cancels(3, 4));
        // −ζ_4^2 = 1
        assert!(Eigenvalue::MINUS_ONE.cancels(4, 2));
        // ω · ζ_3^2 = 1
        assert!(Eigenvalue::new(1, 3).cancels(3, 2));
    }
}
