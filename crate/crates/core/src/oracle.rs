//! Independent brute-force ground truth.
//!
//! Everything here is deliberately naive: splines are found by scanning all
//! of `(Z/mZ)^|V|` with an odometer, spans by scanning all coefficient
//! vectors. Nothing is shared with the constructive algorithms except the
//! spline predicate itself, so agreement between the two routes is a real
//! check. Scans are budgeted; exceeding the budget is an explicit error,
//! never silent truncation.

use thiserror::Error;

use crate::generators::GeneratingSet;
use crate::graph::{reduce_labels, EdgeLabeledGraph, GraphError, ModulusContext};
use crate::residue::{gcd, min_coset_rep};
use crate::spline::{Spline, SplineError};

/// Default cap on the number of candidate vectors a single scan may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("scan needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("no flow-up spline with nonzero value at vertex index {0}")]
    NoFlowUpSpline(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spline(#[from] SplineError),
}

impl OracleError {
    pub fn code(&self) -> &'static str {
        match self {
            OracleError::BudgetExceeded { .. } => "budget-exceeded",
            OracleError::NoFlowUpSpline(_) => "no-flow-up-spline",
            OracleError::Graph(e) => e.code(),
            OracleError::Spline(e) => e.code(),
        }
    }
}

/// A deduplicated, lexicographically sorted set of splines modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplineSet {
    modulus: u64,
    splines: Vec<Spline>,
}

impl SplineSet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn splines(&self) -> &[Spline] {
        &self.splines
    }

    pub fn len(&self) -> usize {
        self.splines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splines.is_empty()
    }

    pub fn contains(&self, f: &Spline) -> bool {
        self.splines.binary_search(f).is_ok()
    }
}

/// Walks all base-`m` value vectors of length `width` in lexicographic
/// order, calling `visit` on each. Returns the number of vectors visited.
fn odometer(m: u64, width: usize, mut visit: impl FnMut(&[i64]) -> bool) -> u128 {
    let mut values = vec![0i64; width];
    let mut visited = 0u128;
    loop {
        visited += 1;
        if !visit(&values) {
            return visited;
        }
        // Increment from the last coordinate, carrying leftwards.
        let mut pos = width;
        loop {
            if pos == 0 {
                return visited;
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < m as i64 {
                break;
            }
            values[pos] = 0;
        }
    }
}

/// Direct transcription of the edge congruences for a raw value slice,
/// avoiding a `Spline` allocation per odometer step.
fn satisfies_edges(g: &EdgeLabeledGraph, m: u64, values: &[i64]) -> bool {
    g.edges().iter().all(|e| {
        let d = gcd(e.label, m);
        min_coset_rep(values[e.u] - values[e.v], m) % d == 0
    })
}

/// All splines on `g` modulo `m`, by exhaustive scan of `(Z/mZ)^|V|`.
pub fn enumerate_splines(
    g: &EdgeLabeledGraph,
    m: u64,
    budget: u64,
) -> Result<SplineSet, OracleError> {
    let reduced = reduce_labels(g, m)?;
    let n = reduced.n_vertices();
    let needed = (m as u128).pow(n as u32);
    if needed > budget as u128 {
        return Err(OracleError::BudgetExceeded { needed, budget });
    }
    let context = ModulusContext::ModM(m);
    let mut splines = Vec::new();
    odometer(m, n, |values| {
        if satisfies_edges(&reduced, m, values) {
            splines.push(Spline::new(values.to_vec(), context));
        }
        true
    });
    // Odometer order is already lexicographic and duplicate-free.
    Ok(SplineSet {
        modulus: m,
        splines,
    })
}

/// All `Z/mZ`-linear combinations of the given splines, deduplicated.
pub fn span_of_splines(
    splines: &[Spline],
    m: u64,
    budget: u64,
) -> Result<SplineSet, OracleError> {
    let context = ModulusContext::ModM(m);
    for s in splines {
        if s.context() != context {
            return Err(SplineError::ContextMismatch(context, s.context()).into());
        }
    }
    assert!(!splines.is_empty(), "span of an empty list is ill-defined");
    let needed = (m as u128).pow(splines.len() as u32);
    if needed > budget as u128 {
        return Err(OracleError::BudgetExceeded { needed, budget });
    }
    let n = splines[0].len();
    let mut out = Vec::new();
    odometer(m, splines.len(), |coeffs| {
        let mut combo = vec![0i128; n];
        for (c, s) in coeffs.iter().zip(splines) {
            for (acc, &v) in combo.iter_mut().zip(s.values()) {
                *acc += *c as i128 * v as i128;
            }
        }
        out.push(Spline::new(
            combo.into_iter().map(|v| (v % m as i128) as i64).collect(),
            context,
        ));
        true
    });
    out.sort_unstable();
    out.dedup();
    Ok(SplineSet {
        modulus: m,
        splines: out,
    })
}

/// All `Z/mZ`-linear combinations of a generating set.
pub fn span_mod_m(set: &GeneratingSet, m: u64, budget: u64) -> Result<SplineSet, OracleError> {
    let splines: Vec<Spline> = set.splines().cloned().collect();
    span_of_splines(&splines, m, budget)
}

/// True iff the span of `set` equals the exhaustive spline set of `g` mod `m`.
pub fn verify_generating(
    set: &GeneratingSet,
    g: &EdgeLabeledGraph,
    m: u64,
    budget: u64,
) -> Result<bool, OracleError> {
    let all = enumerate_splines(g, m, budget)?;
    let spanned = span_mod_m(set, m, budget)?;
    Ok(all == spanned)
}

/// Checks the minimality criteria for a flow-up generating set: the first
/// spline has no leading zeros, every spline is constant flow-up (one
/// nonzero value), and the nonzero values admit a divisibility chain.
pub fn check_flow_up_criteria(set: &GeneratingSet) -> bool {
    let Some(first) = set.iter().next() else {
        return false;
    };
    if first.spline().leading_vertex() != Some(0) {
        return false;
    }
    let mut values = Vec::with_capacity(set.len());
    for gen in set.iter() {
        match gen.spline().constant_value() {
            Some(v) => values.push(v as u64),
            None => return false,
        }
    }
    // A divisibility chain reordering exists iff ascending order is one.
    values.sort_unstable();
    values.windows(2).all(|w| w[1] % w[0] == 0)
}

/// Minimal positive leading entry of an integer flow-up spline at `vertex`,
/// certified by brute force modulo `m`.
///
/// Scans all vectors that vanish below `vertex` (the flow-up candidates) and
/// returns the gcd of every observed nonzero leading residue together with
/// `m`. Mod-`m` splines pull back to integer splines for the moduli this is
/// called with, so the gcd is exactly the minimal integer leading entry.
/// The budget is consumed lazily: the scan stops early once the running gcd
/// reaches 1, since later candidates cannot lower it.
pub fn min_leading_oracle(
    g: &EdgeLabeledGraph,
    vertex: usize,
    m: u64,
    budget: u64,
) -> Result<u64, OracleError> {
    let reduced = reduce_labels(g, m)?;
    let n = reduced.n_vertices();
    assert!(vertex < n, "vertex index out of range");
    let free = n - vertex;
    let mut running = m;
    let mut found = false;
    let mut scanned = 0u64;
    let mut over_budget = false;
    let mut full = vec![0i64; n];
    odometer(m, free, |tail| {
        scanned += 1;
        if scanned > budget {
            over_budget = true;
            return false;
        }
        full[vertex..].copy_from_slice(tail);
        if tail[0] != 0 && satisfies_edges(&reduced, m, &full) {
            found = true;
            running = gcd(running, tail[0] as u64);
            if running == 1 {
                return false;
            }
        }
        true
    });
    if over_budget {
        return Err(OracleError::BudgetExceeded {
            needed: (m as u128).pow(free as u32),
            budget,
        });
    }
    if !found {
        return Err(OracleError::NoFlowUpSpline(vertex));
    }
    Ok(running)
}

/// Expresses an integer spline in a flow-up basis by triangular
/// back-substitution. Returns the coefficient vector, or `None` when some
/// division is inexact or a nonzero residual survives.
pub fn express_in_integer_basis(basis: &GeneratingSet, f: &Spline) -> Option<Vec<i64>> {
    if basis.context() != ModulusContext::Integers || f.context() != ModulusContext::Integers {
        return None;
    }
    let mut residual = f.clone();
    let mut coeffs = Vec::with_capacity(basis.len());
    for gen in basis.iter() {
        let b = gen.spline();
        let lv = b.leading_vertex()?;
        let lead = b.value(lv);
        let r = residual.value(lv);
        if r % lead != 0 {
            return None;
        }
        let c = r / lead;
        residual = residual.sub(&b.scalar_mul(c)).ok()?;
        coeffs.push(c);
    }
    residual.is_zero().then_some(coeffs)
}
