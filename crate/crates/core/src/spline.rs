//! The spline type and the edge-congruence predicate.
//!
//! A [`Spline`] is a vertex-indexed vector of ring elements tied to a
//! modulus context. Values under `Z/mZ` are kept canonical in `0..m`.
//! Whether a given vector actually satisfies the edge congruences of a graph
//! is the job of [`is_spline`]; the type itself is just a labeling, so
//! candidate vectors (for example the oracle's enumeration odometer) reuse it.

use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeLabeledGraph, GraphError, ModulusContext};
use crate::residue::{gcd, min_coset_rep, ResidueError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplineError {
    #[error("modulus contexts differ: {0} vs {1}")]
    ContextMismatch(ModulusContext, ModulusContext),
    #[error("value vector has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operation is undefined for the zero spline")]
    ZeroSpline,
    #[error("cannot lift from modulus {from} to {to}: not a divisor")]
    NonDivisorLift { from: u64, to: u64 },
    #[error("modulus {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation needs an integer context")]
    IntegersRequired,
    #[error("operation needs a modular context")]
    ModulusRequired,
    #[error("prime-power exponent {0} is out of range (need k >= 1)")]
    ExponentOutOfRange(u32),
    #[error("invalid generating set: {0}")]
    InvalidGeneratingSet(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Residue(#[from] ResidueError),
}

impl SplineError {
    pub fn code(&self) -> &'static str {
        match self {
            SplineError::ContextMismatch(..) => "context-mismatch",
            SplineError::LengthMismatch { .. } => "length-mismatch",
            SplineError::ZeroSpline => "zero-spline",
            SplineError::NonDivisorLift { .. } => "non-divisor-lift",
            SplineError::NotPrimePower(_) => "not-prime-power",
            SplineError::NotPrime(_) => "not-prime",
            SplineError::IntegersRequired => "integers-required",
            SplineError::ModulusRequired => "modulus-required",
            SplineError::ExponentOutOfRange(_) => "exponent-out-of-range",
            SplineError::InvalidGeneratingSet(_) => "invalid-generating-set",
            SplineError::Graph(e) => e.code(),
            SplineError::Residue(e) => e.code(),
        }
    }
}

/// A vertex labeling over `Z` or `Z/mZ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spline {
    values: Vec<i64>,
    context: ModulusContext,
}

impl Spline {
    /// Wraps a value vector, canonicalizing each entry under a modulus.
    pub fn new(values: Vec<i64>, context: ModulusContext) -> Self {
        let values = match context {
            ModulusContext::Integers => values,
            ModulusContext::ModM(m) => values
                .into_iter()
                .map(|v| min_coset_rep(v, m) as i64)
                .collect(),
        };
        Spline { values, context }
    }

    pub fn zero(n: usize, context: ModulusContext) -> Self {
        Spline {
            values: vec![0; n],
            context,
        }
    }

    pub fn constant(n: usize, value: i64, context: ModulusContext) -> Self {
        Spline::new(vec![value; n], context)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, vertex: usize) -> i64 {
        self.values[vertex]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn context(&self) -> ModulusContext {
        self.context
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Smallest vertex with a nonzero value; `None` for the zero spline.
    pub fn leading_vertex(&self) -> Option<usize> {
        self.values.iter().position(|&v| v != 0)
    }

    /// The value at the leading vertex.
    pub fn leading_value(&self) -> Option<i64> {
        self.leading_vertex().map(|i| self.values[i])
    }

    /// True when all entries strictly before `vertex` are zero.
    pub fn is_flow_up_at(&self, vertex: usize) -> bool {
        self.values[..vertex].iter().all(|&v| v == 0)
    }

    /// The single nonzero value of a constant flow-up spline, `None` when
    /// the spline is zero or takes two distinct nonzero values.
    pub fn constant_value(&self) -> Option<i64> {
        let mut seen = None;
        for &v in &self.values {
            match (v, seen) {
                (0, _) => {}
                (v, None) => seen = Some(v),
                (v, Some(w)) if v == w => {}
                _ => return None,
            }
        }
        seen
    }

    /// Entrywise sum in the shared context.
    pub fn add(&self, other: &Spline) -> Result<Spline, SplineError> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Entrywise difference in the shared context.
    pub fn sub(&self, other: &Spline) -> Result<Spline, SplineError> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Spline,
        f: impl Fn(i128, i128) -> i128,
    ) -> Result<Spline, SplineError> {
        if self.context != other.context {
            return Err(SplineError::ContextMismatch(self.context, other.context));
        }
        if self.len() != other.len() {
            return Err(SplineError::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| narrow(f(a as i128, b as i128), self.context))
            .collect();
        Ok(Spline {
            values,
            context: self.context,
        })
    }

    /// Entrywise scalar multiple.
    pub fn scalar_mul(&self, c: i64) -> Spline {
        let values = self
            .values
            .iter()
            .map(|&v| narrow(c as i128 * v as i128, self.context))
            .collect();
        Spline {
            values,
            context: self.context,
        }
    }

    /// Projects to `Z/qZ`; from `Z/mZ` callers must pass a divisor `q` of
    /// `m`, from `Z` any `q >= 2` works.
    pub fn reduce_mod(&self, q: u64) -> Result<Spline, SplineError> {
        if q < 2 {
            return Err(SplineError::Residue(ResidueError::ModulusTooSmall(q)));
        }
        if let ModulusContext::ModM(m) = self.context {
            if m % q != 0 {
                return Err(SplineError::NonDivisorLift { from: q, to: m });
            }
        }
        let values = self
            .values
            .iter()
            .map(|&v| min_coset_rep(v, q) as i64)
            .collect();
        Ok(Spline {
            values,
            context: ModulusContext::ModM(q),
        })
    }
}

fn narrow(v: i128, context: ModulusContext) -> i64 {
    match context {
        ModulusContext::ModM(m) => (v.rem_euclid(m as i128)) as i64,
        ModulusContext::Integers => {
            i64::try_from(v).expect("integer spline arithmetic overflowed i64")
        }
    }
}

impl fmt::Display for Spline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "] over {}", self.context)
    }
}

/// True iff `f` satisfies every edge congruence of `g`: across each edge the
/// difference of endpoint values lies in the ideal the label generates.
pub fn is_spline(g: &EdgeLabeledGraph, f: &Spline) -> Result<bool, SplineError> {
    if f.context() != g.context() {
        return Err(SplineError::ContextMismatch(g.context(), f.context()));
    }
    if f.len() != g.n_vertices() {
        return Err(SplineError::LengthMismatch {
            expected: g.n_vertices(),
            got: f.len(),
        });
    }
    Ok(g.edges().iter().all(|e| {
        let diff = f.value(e.u) as i128 - f.value(e.v) as i128;
        match g.context() {
            ModulusContext::ModM(m) => {
                // diff lies in <label> mod m iff gcd(label, m) divides it.
                let d = gcd(e.label, m);
                min_coset_rep(diff as i64, m) % d == 0
            }
            ModulusContext::Integers => {
                if e.label == 0 {
                    diff == 0
                } else {
                    diff % e.label as i128 == 0
                }
            }
        }
    }))
}
