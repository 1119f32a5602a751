//! Pointwise spline multiplication, supports, and structure-constant tables.
//!
//! Closed forms exist for a squarefree modulus (the generators are
//! orthogonal idempotents) and for a prime power (products collapse to
//! `p^s` times the higher-level generator, or vanish). For general `m` the
//! table is assembled factor by factor: each pointwise product is projected
//! to every prime-power factor, expressed there against the factor's
//! constant flow-up generators, and the per-factor coefficients are
//! recombined with the CRT. Expressing within one factor is unambiguous
//! because a constant generator annihilated at its leading vertex vanishes
//! everywhere; solving a single congruence at the leading vertex modulo `m`
//! itself is not confluent and can strand a residual, so it is not used.
//! Every emitted entry is verified against the pointwise product.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::generators::GeneratingSet;
use crate::graph::ModulusContext;
use crate::residue::{crt_combine, factorize, solve_linear_congruence, Residue};
use crate::spline::{Spline, SplineError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("modulus {0} is not squarefree")]
    NonSquarefreeModulus(u64),
    #[error("closed-form entry ({i}, {j}) disagrees with the pointwise product")]
    VerificationFailure { i: usize, j: usize },
    #[error("product of generators {i} and {j} has no expression in the set")]
    ExpressionFailure { i: usize, j: usize },
    #[error("invalid generating set: {0}")]
    InvalidGeneratingSet(String),
    #[error(transparent)]
    Spline(#[from] SplineError),
}

impl RingError {
    pub fn code(&self) -> &'static str {
        match self {
            RingError::NonSquarefreeModulus(_) => "non-squarefree-modulus",
            RingError::VerificationFailure { .. } => "verification-failure",
            RingError::ExpressionFailure { .. } => "expression-failure",
            RingError::InvalidGeneratingSet(_) => "invalid-generating-set",
            RingError::Spline(e) => e.code(),
        }
    }
}

/// Entrywise product of two splines in their shared base ring.
pub fn multiply(f: &Spline, g: &Spline) -> Result<Spline, SplineError> {
    if f.context() != g.context() {
        return Err(SplineError::ContextMismatch(f.context(), g.context()));
    }
    if f.len() != g.len() {
        return Err(SplineError::LengthMismatch {
            expected: f.len(),
            got: g.len(),
        });
    }
    let values = f
        .values()
        .iter()
        .zip(g.values())
        .map(|(&a, &b)| match f.context() {
            ModulusContext::ModM(m) => {
                ((a as i128 * b as i128).rem_euclid(m as i128)) as i64
            }
            ModulusContext::Integers => (a as i128 * b as i128)
                .try_into()
                .expect("integer spline product overflowed i64"),
        })
        .collect();
    Ok(Spline::new(values, f.context()))
}

/// The set of vertices where a spline is nonzero.
pub fn support(f: &Spline) -> BTreeSet<usize> {
    f.values()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(i, _)| i)
        .collect()
}

/// One cell of a multiplication table, in its simplest faithful form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableEntry {
    Zero,
    /// `coeff` times the generator at `index`.
    ScalarMultiple { coeff: u64, index: usize },
    /// Coefficients on every generator, in order.
    GeneralCombination(Vec<u64>),
}

impl TableEntry {
    /// Reconstructs the spline the entry denotes.
    pub fn expand(&self, set: &GeneratingSet) -> Result<Spline, SplineError> {
        let n = set.get(0).spline().len();
        match self {
            TableEntry::Zero => Ok(Spline::zero(n, set.context())),
            TableEntry::ScalarMultiple { coeff, index } => {
                Ok(set.get(*index).spline().scalar_mul(*coeff as i64))
            }
            TableEntry::GeneralCombination(coeffs) => {
                let mut acc = Spline::zero(n, set.context());
                for (c, gen) in coeffs.iter().zip(set.iter()) {
                    acc = acc.add(&gen.spline().scalar_mul(*c as i64))?;
                }
                Ok(acc)
            }
        }
    }
}

/// Structure constants for a generating set: entry `(i, j)` expresses the
/// pointwise product of generators `i` and `j` back in the set. Symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    modulus: u64,
    entries: Vec<Vec<TableEntry>>,
}

impl MultiplicationTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &TableEntry {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<TableEntry>] {
        &self.entries
    }
}

fn table_modulus(set: &GeneratingSet) -> Result<u64, RingError> {
    set.context()
        .modulus()
        .ok_or(RingError::Spline(SplineError::ModulusRequired))
}

/// Builds a table cell by cell from `entry_of` and verifies each cell's
/// expansion against the pointwise product before accepting it.
fn build_verified(
    set: &GeneratingSet,
    modulus: u64,
    mut entry_of: impl FnMut(usize, usize) -> Result<TableEntry, RingError>,
) -> Result<MultiplicationTable, RingError> {
    let r = set.len();
    let mut entries = vec![vec![TableEntry::Zero; r]; r];
    for i in 0..r {
        for j in i..r {
            let entry = entry_of(i, j)?;
            let product = multiply(set.get(i).spline(), set.get(j).spline())?;
            if entry.expand(set)? != product {
                return Err(RingError::VerificationFailure { i, j });
            }
            entries[i][j] = entry.clone();
            entries[j][i] = entry;
        }
    }
    Ok(MultiplicationTable { modulus, entries })
}

/// Table for a squarefree modulus: the generators are orthogonal
/// idempotents, so the diagonal reproduces each generator and everything
/// off-diagonal vanishes.
pub fn multable_distinct_primes(set: &GeneratingSet) -> Result<MultiplicationTable, RingError> {
    let m = table_modulus(set)?;
    let decomp = factorize(m).map_err(SplineError::from)?;
    if !decomp.is_squarefree() {
        return Err(RingError::NonSquarefreeModulus(m));
    }
    build_verified(set, m, |i, j| {
        Ok(if i == j {
            TableEntry::ScalarMultiple { coeff: 1, index: i }
        } else {
            TableEntry::Zero
        })
    })
}

/// Table for a prime-power modulus `p^k`: with generator levels `s <= r`
/// (nonzero entries `p^s`, `p^r`), intersecting supports give `p^s` times
/// the higher-level generator when `s + r < k`, and zero otherwise.
pub fn multable_prime_power(set: &GeneratingSet) -> Result<MultiplicationTable, RingError> {
    let m = table_modulus(set)?;
    let (p, k) = factorize(m)
        .map_err(SplineError::from)?
        .as_prime_power()
        .ok_or(RingError::Spline(SplineError::NotPrimePower(m)))?;
    let mut levels = Vec::with_capacity(set.len());
    let mut supports = Vec::with_capacity(set.len());
    for gen in set.iter() {
        let value = gen.constant_value().ok_or_else(|| {
            RingError::InvalidGeneratingSet("generators must be constant flow-up".into())
        })? as u64;
        let s = exact_log(p, value).ok_or_else(|| {
            RingError::InvalidGeneratingSet(format!(
                "constant value {value} is not a power of {p}"
            ))
        })?;
        levels.push(s);
        supports.push(support(gen.spline()));
    }
    build_verified(set, m, |i, j| {
        let (s, r, higher) = if levels[i] <= levels[j] {
            (levels[i], levels[j], j)
        } else {
            (levels[j], levels[i], i)
        };
        let disjoint = supports[i].is_disjoint(&supports[j]);
        Ok(if disjoint || s + r >= k {
            TableEntry::Zero
        } else {
            TableEntry::ScalarMultiple {
                coeff: p.pow(s),
                index: higher,
            }
        })
    })
}

fn exact_log(p: u64, mut value: u64) -> Option<u32> {
    let mut s = 0;
    while value > 1 {
        if value % p != 0 {
            return None;
        }
        value /= p;
        s += 1;
    }
    (value == 1).then_some(s)
}

/// Table for an arbitrary modulus, assembled through the prime-power
/// factors: each product is expressed factor by factor and the coefficients
/// are recombined with the CRT. Entries simplify to `Zero` or a scalar
/// multiple whenever they can.
pub fn multable_general(set: &GeneratingSet) -> Result<MultiplicationTable, RingError> {
    let m = table_modulus(set)?;
    let decomp = factorize(m).map_err(SplineError::from)?;
    let r = set.len();

    // Per factor: the projections of the generators, which are exactly the
    // factor's own constant flow-up generators (padding positions project
    // to zero).
    let mut factor_proj: Vec<(u64, Vec<Spline>)> = Vec::new();
    for f in decomp.factors() {
        let q = f.value();
        let mut projections = Vec::with_capacity(r);
        for s in set.splines() {
            let proj = s.reduce_mod(q).map_err(RingError::Spline)?;
            if !proj.is_zero() && proj.constant_value().is_none() {
                return Err(RingError::InvalidGeneratingSet(format!(
                    "projection mod {q} is not constant flow-up"
                )));
            }
            projections.push(proj);
        }
        factor_proj.push((q, projections));
    }

    build_verified(set, m, |i, j| {
        let product = multiply(set.get(i).spline(), set.get(j).spline())?;
        let mut residues_per_position: Vec<Vec<Residue>> = vec![Vec::new(); r];
        for (q, projections) in &factor_proj {
            let target = product.reduce_mod(*q).map_err(RingError::Spline)?;
            let coeffs = express_in_constant_flow_up(projections, &target, *q)
                .ok_or(RingError::ExpressionFailure { i, j })?;
            for (pos, c) in coeffs.into_iter().enumerate() {
                residues_per_position[pos]
                    .push(Residue::new(c, *q).map_err(SplineError::from)?);
            }
        }
        let mut coeffs_m = Vec::with_capacity(r);
        for residues in &residues_per_position {
            let combined = crt_combine(residues).map_err(SplineError::from)?;
            coeffs_m.push(combined.value());
        }
        Ok(classify(coeffs_m))
    })
}

/// Triangular expression of `target` against nonzero constant flow-up
/// generators modulo `q`. The choice of coefficient at each leading vertex
/// is unique up to the annihilator of the constant value, which kills the
/// whole generator, so the walk is deterministic.
fn express_in_constant_flow_up(
    projections: &[Spline],
    target: &Spline,
    q: u64,
) -> Option<Vec<u64>> {
    let mut coeffs = vec![0u64; projections.len()];
    let mut residual = target.clone();
    for (pos, gen) in projections.iter().enumerate() {
        if gen.is_zero() {
            continue;
        }
        let w = gen.leading_vertex()?;
        let value = gen.value(w) as u64;
        let c = solve_linear_congruence(value, residual.value(w) as u64, q).ok()?;
        if c != 0 {
            residual = residual.sub(&gen.scalar_mul(c as i64)).ok()?;
        }
        coeffs[pos] = c;
    }
    residual.is_zero().then_some(coeffs)
}

fn classify(coeffs: Vec<u64>) -> TableEntry {
    let nonzero: Vec<usize> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i)
        .collect();
    match nonzero.as_slice() {
        [] => TableEntry::Zero,
        [index] => TableEntry::ScalarMultiple {
            coeff: coeffs[*index],
            index: *index,
        },
        _ => TableEntry::GeneralCombination(coeffs),
    }
}
