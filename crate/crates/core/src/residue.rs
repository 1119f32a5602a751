//! Exact number theory: gcd, factorization, linear congruences, and CRT.
//!
//! All functions are pure and total on their documented domains. Moduli are
//! `u64`; every intermediate product is computed in `i128`/`u128` so values
//! up to `2^63 - 1` are handled without overflow. Factorization is plain
//! deterministic trial division, which is the right tool for the desk-scale
//! moduli this crate works with.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidueError {
    #[error("modulus {0} is out of range (need 2 <= m)")]
    ModulusTooSmall(u64),
    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(u64, u64),
    #[error("no solution: gcd({a}, {m}) does not divide {b}")]
    NoSolution { a: u64, b: u64, m: u64 },
    #[error("empty residue list has no CRT combination")]
    EmptyCombination,
    #[error("modulus product overflows u64")]
    Overflow,
}

impl ResidueError {
    pub fn code(&self) -> &'static str {
        match self {
            ResidueError::ModulusTooSmall(_) => "modulus-too-small",
            ResidueError::NonCoprimeModuli(..) => "non-coprime-moduli",
            ResidueError::NoSolution { .. } => "no-solution",
            ResidueError::EmptyCombination => "empty-combination",
            ResidueError::Overflow => "overflow",
        }
    }
}

/// A canonical residue: `0 <= value < modulus`, `modulus >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    /// Reduces `value` into the canonical range of `modulus`.
    pub fn new(value: u64, modulus: u64) -> Result<Self, ResidueError> {
        if modulus < 2 {
            return Err(ResidueError::ModulusTooSmall(modulus));
        }
        Ok(Residue {
            value: value % modulus,
            modulus,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Checked least common multiple; `None` on u64 overflow.
pub fn lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// `a * b mod m` without overflow.
pub fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Minimal nonnegative coset representative of `x` modulo `m`.
pub fn min_coset_rep(x: i64, m: u64) -> u64 {
    debug_assert!(m >= 1);
    let m = m as i128;
    let r = (x as i128 % m + m) % m;
    r as u64
}

/// Deterministic primality by trial division; exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// One prime-power factor `prime^exponent` of a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimePower {
    /// The integer `prime^exponent`.
    pub fn value(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// Complete factorization of an integer `m >= 2` with primes ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePowerDecomposition {
    factors: Vec<PrimePower>,
}

impl PrimePowerDecomposition {
    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Multiplies the factors back together.
    pub fn reconstruct(&self) -> u64 {
        self.factors.iter().map(PrimePower::value).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|f| f.exponent == 1)
    }

    /// `Some((p, e))` when the decomposition is a single prime power.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [f] => Some((f.prime, f.exponent)),
            _ => None,
        }
    }

    pub fn smallest_prime(&self) -> u64 {
        self.factors[0].prime
    }
}

/// Factorizes `m >= 2` by trial division up to `sqrt(m)`.
pub fn factorize(m: u64) -> Result<PrimePowerDecomposition, ResidueError> {
    if m < 2 {
        return Err(ResidueError::ModulusTooSmall(m));
    }
    let mut rest = m;
    let mut factors = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            factors.push(PrimePower {
                prime: p,
                exponent: e,
            });
        }
    };
    let mut e = 0;
    while rest % 2 == 0 {
        rest /= 2;
        e += 1;
    }
    push(2, e);
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= rest as u128 {
        let mut e = 0;
        while rest % d == 0 {
            rest /= d;
            e += 1;
        }
        push(d, e);
        d += 2;
    }
    // Whatever survives trial division is prime.
    push(rest, u32::from(rest > 1));
    Ok(PrimePowerDecomposition { factors })
}

/// Combines residues with pairwise-coprime moduli into the unique residue
/// modulo the product, with the minimal representative.
pub fn crt_combine(residues: &[Residue]) -> Result<Residue, ResidueError> {
    let mut iter = residues.iter();
    let first = iter.next().ok_or(ResidueError::EmptyCombination)?;
    let mut acc = *first;
    for r in iter {
        acc = crt_pair(acc, *r)?;
    }
    Ok(acc)
}

fn crt_pair(a: Residue, b: Residue) -> Result<Residue, ResidueError> {
    let (m1, m2) = (a.modulus, b.modulus);
    if gcd(m1, m2) != 1 {
        return Err(ResidueError::NonCoprimeModuli(m1, m2));
    }
    let m = m1.checked_mul(m2).ok_or(ResidueError::Overflow)?;
    // x = a + m1 * t with t = (b - a) / m1 mod m2.
    let (_, inv, _) = egcd(m1 as i128, m2 as i128);
    let diff = min_coset_rep(b.value as i64 - a.value as i64, m2);
    let t = min_coset_rep((diff as i128 * inv).rem_euclid(m2 as i128) as i64, m2);
    let x = (a.value as u128 + m1 as u128 * t as u128) % m as u128;
    Ok(Residue {
        value: x as u64,
        modulus: m,
    })
}

/// Smallest nonnegative `x` with `a * x = b (mod m)`.
///
/// Solvable exactly when `gcd(a, m)` divides `b`; the full solution set is
/// `x + t * m / gcd(a, m)`, so the returned representative is minimal.
pub fn solve_linear_congruence(a: u64, b: u64, m: u64) -> Result<u64, ResidueError> {
    if m < 2 {
        return Err(ResidueError::ModulusTooSmall(m));
    }
    let (a, b) = (a % m, b % m);
    // gcd(a, m) >= 1 since m >= 2, so the division below is safe.
    let g = gcd(a, m);
    if b % g != 0 {
        return Err(ResidueError::NoSolution { a, b, m });
    }
    let m_red = m / g;
    if m_red == 1 {
        // a = 0 (mod m) and b = 0: every x works.
        return Ok(0);
    }
    let (_, inv, _) = egcd((a / g) as i128, m_red as i128);
    let x = ((b / g) as i128 * inv).rem_euclid(m_red as i128) as u64;
    Ok(x)
}
