//! Flow-up minimum generating sets and integer bases.
//!
//! The constructions, from the ground up:
//!
//! - [`gens_mod_p`]: one indicator spline per zero-connected component mod a
//!   prime `p`, each constant 1 on its component.
//! - [`gens_mod_prime_power`]: walks the levels `p, p^2, .., p^k`, lifting
//!   the previous level entrywise and adding the spline with value
//!   `p^(b-1)` on every component whose index is new at level `b`.
//! - [`gens_mod_m`]: splits `m` into prime powers, sorts each factor's set
//!   by leading-zero count, pads with zero splines to the common rank, and
//!   combines positionally with the Chinese Remainder Theorem.
//! - [`integer_basis`]: picks the modulus `lcm(labels) * p1` (`p1` the
//!   smallest prime factor of the labels), builds a flow-up minimum
//!   generating set mod that modulus with one generator per vertex,
//!   rescales each leading entry to `gcd(leading, m)`, and lifts entrywise
//!   to the integers.
//!
//! For the integer basis the per-factor sets are combined by aligning
//! generators that share a leading vertex rather than positionally. Both
//! pairings give flow-up minimum generating sets mod `m`, but only the
//! aligned one makes every leading entry minimal after rescaling: a factor
//! whose generator at some vertex would be consumed early by positional
//! pairing contributes the full `p^e` instead of its true `p^(b-1)` to the
//! gcd, which inflates the leading entry (e.g. the triangle with labels
//! 3, 2, 5 would get 30 instead of 6 at its last vertex).

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{
    reduce_labels, zero_components, Edge, EdgeLabeledGraph, ModulusContext,
    ZeroComponent,
};
use crate::residue::{
    crt_combine, factorize, gcd, is_prime, lcm, solve_linear_congruence, Residue, ResidueError,
};
use crate::spline::{is_spline, Spline, SplineError};

/// One generator: a spline plus the level it originated at (the `b` of a
/// prime-power construction), when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    spline: Spline,
    origin_level: Option<u32>,
}

impl Generator {
    pub fn new(spline: Spline, origin_level: Option<u32>) -> Self {
        Generator {
            spline,
            origin_level,
        }
    }

    pub fn spline(&self) -> &Spline {
        &self.spline
    }

    /// The level `b` at which a prime-power construction created this
    /// generator; `None` for combined or integer generators.
    pub fn origin_level(&self) -> Option<u32> {
        self.origin_level
    }

    pub fn leading_vertex(&self) -> usize {
        self.spline
            .leading_vertex()
            .expect("generators are nonzero")
    }

    /// The single nonzero value of a constant flow-up generator.
    pub fn constant_value(&self) -> Option<i64> {
        self.spline.constant_value()
    }
}

/// An ordered flow-up generating set: nonzero splines with strictly
/// increasing leading vertices, all in one modulus context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    context: ModulusContext,
    generators: Vec<Generator>,
}

impl GeneratingSet {
    /// Validating constructor, also used to rebuild sets re-parsed from
    /// serialized output.
    pub fn new(generators: Vec<Generator>) -> Result<Self, SplineError> {
        let first = generators
            .first()
            .ok_or_else(|| SplineError::InvalidGeneratingSet("set is empty".into()))?;
        let context = first.spline.context();
        let mut last_leading: Option<usize> = None;
        for g in &generators {
            if g.spline.context() != context {
                return Err(SplineError::ContextMismatch(context, g.spline.context()));
            }
            let Some(lv) = g.spline.leading_vertex() else {
                return Err(SplineError::InvalidGeneratingSet(
                    "zero splines may not appear in a generating set".into(),
                ));
            };
            if last_leading.is_some_and(|prev| prev >= lv) {
                return Err(SplineError::InvalidGeneratingSet(
                    "leading vertices must be strictly increasing".into(),
                ));
            }
            last_leading = Some(lv);
        }
        Ok(GeneratingSet {
            context,
            generators,
        })
    }

    /// Wraps bare splines with no origin levels.
    pub fn from_splines(splines: Vec<Spline>) -> Result<Self, SplineError> {
        Self::new(splines.into_iter().map(|s| Generator::new(s, None)).collect())
    }

    fn build(generators: Vec<Generator>) -> Self {
        Self::new(generators).expect("constructed set violates flow-up invariants")
    }

    pub fn context(&self) -> ModulusContext {
        self.context
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Generator> {
        self.generators.iter()
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn splines(&self) -> impl Iterator<Item = &Spline> {
        self.generators.iter().map(|g| &g.spline)
    }

    /// Leading vertex of each generator, in order.
    pub fn leading_vertices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.leading_vertex()).collect()
    }
}

/// The spline with value `p^(b-1)` on one zero-connected component of a
/// graph over `Z/p^bZ` and zero elsewhere.
pub fn component_indicator_spline(
    g: &EdgeLabeledGraph,
    comp: &ZeroComponent,
) -> Result<Spline, SplineError> {
    let m = g.modulus().ok_or(SplineError::ModulusRequired)?;
    let (p, e) = factorize(m)?
        .as_prime_power()
        .ok_or(SplineError::NotPrimePower(m))?;
    let value = p.pow(e - 1) as i64;
    let mut values = vec![0i64; g.n_vertices()];
    for &v in comp.vertices() {
        values[v] = value;
    }
    let f = Spline::new(values, g.context());
    debug_assert_eq!(is_spline(g, &f), Ok(true));
    Ok(f)
}

/// Flow-up minimum generating set mod a prime: one indicator spline with
/// value 1 per zero-connected component, ordered by component index.
pub fn gens_mod_p(g: &EdgeLabeledGraph, p: u64) -> Result<GeneratingSet, SplineError> {
    if !is_prime(p) {
        return Err(SplineError::NotPrime(p));
    }
    gens_mod_prime_power(g, p, 1)
}

/// Flow-up minimum generating set mod `p^k`.
///
/// Level 1 is [`gens_mod_p`]; each later level `b` lifts the previous set
/// entrywise and appends the component indicator for every zero-connected
/// component mod `p^b` whose index did not occur at level `b - 1`.
pub fn gens_mod_prime_power(
    g: &EdgeLabeledGraph,
    p: u64,
    k: u32,
) -> Result<GeneratingSet, SplineError> {
    if !is_prime(p) {
        return Err(SplineError::NotPrime(p));
    }
    if k < 1 {
        return Err(SplineError::ExponentOutOfRange(k));
    }
    p.checked_pow(k).ok_or(ResidueError::Overflow)?;

    let mut generators: Vec<Generator> = Vec::new();
    let mut known_indices: BTreeSet<usize> = BTreeSet::new();
    for beta in 1..=k {
        let q = p.pow(beta);
        let level_graph = reduce_labels(g, q)?;
        let parts = zero_components(&level_graph)?;
        let target = ModulusContext::ModM(q);
        for gen in &mut generators {
            gen.spline = lift_spline(&gen.spline, target)?;
            debug_assert_eq!(is_spline(&level_graph, &gen.spline), Ok(true));
        }
        // Indices can only appear, never vanish, as the level rises: the
        // component of an index vertex refines but keeps its smallest member.
        for comp in parts.components() {
            if known_indices.insert(comp.index()) {
                let spline = component_indicator_spline(&level_graph, comp)?;
                generators.push(Generator::new(spline, Some(beta)));
            }
        }
        generators.sort_by_key(Generator::leading_vertex);
    }
    Ok(GeneratingSet::build(generators))
}

/// Re-reads a spline in a larger modulus (or over the integers) through the
/// shared minimal coset representatives.
pub fn lift_spline(f: &Spline, target: ModulusContext) -> Result<Spline, SplineError> {
    let ModulusContext::ModM(q) = f.context() else {
        return Err(SplineError::ModulusRequired);
    };
    if let ModulusContext::ModM(q2) = target {
        if q2 % q != 0 {
            return Err(SplineError::NonDivisorLift { from: q, to: q2 });
        }
    }
    Ok(Spline::new(f.values().to_vec(), target))
}

/// Flow-up minimum generating set mod an arbitrary `m >= 2`.
///
/// Factorizes `m`, builds each prime-power set, sorts by leading-zero count,
/// pads shorter lists with zero splines to the common rank, and CRT-combines
/// the lists positionally. The result has exactly `rank(g, m)` generators.
pub fn gens_mod_m(g: &EdgeLabeledGraph, m: u64) -> Result<GeneratingSet, SplineError> {
    let decomp = factorize(m)?;
    if let Some((p, e)) = decomp.as_prime_power() {
        return gens_mod_prime_power(g, p, e);
    }
    let mut factor_sets = Vec::with_capacity(decomp.factors().len());
    for f in decomp.factors() {
        let set = gens_mod_prime_power(g, f.prime, f.exponent)?;
        factor_sets.push((f.value(), set));
    }
    let rank_m = factor_sets.iter().map(|(_, s)| s.len()).max().unwrap();
    let n = g.n_vertices();
    let mut generators = Vec::with_capacity(rank_m);
    for j in 0..rank_m {
        let mut values = Vec::with_capacity(n);
        for w in 0..n {
            let mut residues = Vec::with_capacity(factor_sets.len());
            for (q, set) in &factor_sets {
                // Positions past a factor's rank hold the padding zero spline.
                let value = if j < set.len() {
                    set.get(j).spline().value(w) as u64
                } else {
                    0
                };
                residues.push(Residue::new(value, *q)?);
            }
            values.push(crt_combine(&residues)?.value() as i64);
        }
        let spline = Spline::new(values, ModulusContext::ModM(m));
        generators.push(Generator::new(spline, None));
    }
    let set = GeneratingSet::build(generators);
    assert_eq!(set.len(), rank(g, m)?, "cardinality must equal the rank");
    #[cfg(debug_assertions)]
    {
        let reduced = reduce_labels(g, m)?;
        for s in set.splines() {
            debug_assert_eq!(is_spline(&reduced, s), Ok(true));
        }
    }
    Ok(set)
}

/// Rescales a flow-up spline so its leading value becomes
/// `gcd(leading, m)`, the smallest value reachable inside the cyclic module
/// the spline generates.
pub fn minimize_leading(b: &Spline) -> Result<Spline, SplineError> {
    let m = b.context().modulus().ok_or(SplineError::ModulusRequired)?;
    let lead = b.leading_value().ok_or(SplineError::ZeroSpline)? as u64;
    let target = gcd(lead, m);
    let x = solve_linear_congruence(lead, target, m)?;
    Ok(b.scalar_mul(x as i64))
}

/// Number of elements in a minimum generating set mod `m`: the maximum over
/// the prime-power factors of `m` of the zero-connected component count.
/// Never materializes a generating set.
pub fn rank(g: &EdgeLabeledGraph, m: u64) -> Result<usize, SplineError> {
    let decomp = factorize(m)?;
    let mut best = 0;
    for f in decomp.factors() {
        let reduced = reduce_labels(g, f.value())?;
        best = best.max(zero_components(&reduced)?.len());
    }
    Ok(best)
}

/// Partition of the vertices into classes on which every spline mod `m` is
/// forced constant: the common refinement of the zero-connected component
/// partitions over all prime-power factors of `m`.
pub fn forced_equal_classes(
    g: &EdgeLabeledGraph,
    m: u64,
) -> Result<Vec<Vec<usize>>, SplineError> {
    let decomp = factorize(m)?;
    let mut keys: Vec<Vec<usize>> = vec![Vec::new(); g.n_vertices()];
    for f in decomp.factors() {
        let reduced = reduce_labels(g, f.value())?;
        let parts = zero_components(&reduced)?;
        for (v, key) in keys.iter_mut().enumerate() {
            key.push(parts.component_of(v));
        }
    }
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (v, key) in keys.into_iter().enumerate() {
        classes.entry(key).or_default().push(v);
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort_by_key(|c| c[0]);
    Ok(out)
}

/// The zero-edge contraction of an integer graph: vertices forced equal by
/// zero labels are merged so the remaining labels are all positive.
struct Contraction {
    class_of: Vec<usize>,
    graph: EdgeLabeledGraph,
}

fn contract_zero_edges(g: &EdgeLabeledGraph) -> Result<Contraction, SplineError> {
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            parent[x] = find(parent, parent[x]);
        }
        parent[x]
    }
    let mut parent: Vec<usize> = (0..g.n_vertices()).collect();
    for e in g.edges() {
        if e.label == 0 {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n_vertices() {
        by_root.entry(find(&mut parent, v)).or_default().push(v);
    }
    let mut partition: Vec<Vec<usize>> = by_root.into_values().collect();
    partition.sort_by_key(|c| c[0]);
    let mut class_of = vec![0usize; g.n_vertices()];
    for (ci, class) in partition.iter().enumerate() {
        for &v in class {
            class_of[v] = ci;
        }
    }
    let names: Vec<String> = partition
        .iter()
        .map(|c| g.vertex_name(c[0]).to_string())
        .collect();
    let mut edges = Vec::new();
    for e in g.edges() {
        let (cu, cv) = (class_of[e.u], class_of[e.v]);
        // Intra-class edges impose nothing: zero labels were contracted and
        // nonzero labels are satisfied by the forced equality.
        if cu != cv {
            edges.push(Edge {
                u: cu,
                v: cv,
                label: e.label,
            });
        }
    }
    let graph = EdgeLabeledGraph::new(names, edges, ModulusContext::Integers)?;
    Ok(Contraction { class_of, graph })
}

/// Flow-up basis for the integer splines on `g`.
///
/// Zero-labeled edges are contracted first (the spline condition forces
/// their endpoints equal), so the working modulus `lcm(labels) * p1` is
/// always defined; when every remaining label is a unit the module is all
/// of `Z^n` and the standard basis is returned directly. The output has one
/// generator per contracted vertex class, and each leading entry divides
/// the leading entry of every integer flow-up spline at that vertex.
pub fn integer_basis(g: &EdgeLabeledGraph) -> Result<GeneratingSet, SplineError> {
    if g.context() != ModulusContext::Integers {
        return Err(SplineError::IntegersRequired);
    }
    let con = contract_zero_edges(g)?;
    let contracted = integer_basis_positive_labels(&con.graph)?;
    if con.graph.n_vertices() == g.n_vertices() {
        return Ok(contracted);
    }
    let generators = contracted
        .iter()
        .map(|gen| {
            let values = (0..g.n_vertices())
                .map(|v| gen.spline().value(con.class_of[v]))
                .collect();
            Generator::new(Spline::new(values, ModulusContext::Integers), None)
        })
        .collect();
    let set = GeneratingSet::build(generators);
    #[cfg(debug_assertions)]
    for s in set.splines() {
        debug_assert_eq!(is_spline(g, s), Ok(true));
    }
    Ok(set)
}

/// The basis construction proper, on a graph whose labels are all >= 1.
fn integer_basis_positive_labels(g: &EdgeLabeledGraph) -> Result<GeneratingSet, SplineError> {
    let n = g.n_vertices();
    let mut labels_lcm: u64 = 1;
    for e in g.edges() {
        debug_assert!(e.label >= 1);
        labels_lcm = lcm(labels_lcm, e.label).ok_or(ResidueError::Overflow)?;
    }
    if labels_lcm == 1 {
        // Every label is a unit: the module is all of Z^n and the standard
        // flow-up basis is the unit vectors.
        let generators = (0..n)
            .map(|v| {
                let mut values = vec![0i64; n];
                values[v] = 1;
                Generator::new(Spline::new(values, ModulusContext::Integers), None)
            })
            .collect();
        return Ok(GeneratingSet::build(generators));
    }
    let p1 = factorize(labels_lcm)?.smallest_prime();
    let m = labels_lcm.checked_mul(p1).ok_or(ResidueError::Overflow)?;
    let decomp = factorize(m)?;

    // Per-factor generating sets, keyed by leading vertex. The factor
    // p1^e1 has no zero labels at its top level, so it contributes a
    // generator at every vertex and the combined set has exactly n members.
    let mut factor_maps: Vec<(u64, BTreeMap<usize, Spline>)> = Vec::new();
    for f in decomp.factors() {
        let set = gens_mod_prime_power(g, f.prime, f.exponent)?;
        let map = set
            .iter()
            .map(|gen| (gen.leading_vertex(), gen.spline().clone()))
            .collect();
        factor_maps.push((f.value(), map));
    }

    let mut generators = Vec::with_capacity(n);
    for v in 0..n {
        let mut values = Vec::with_capacity(n);
        for w in 0..n {
            let mut residues = Vec::with_capacity(factor_maps.len());
            for (q, map) in &factor_maps {
                let value = map.get(&v).map_or(0, |s| s.value(w) as u64);
                residues.push(Residue::new(value, *q)?);
            }
            values.push(crt_combine(&residues)?.value() as i64);
        }
        let combined = Spline::new(values, ModulusContext::ModM(m));
        let minimized = minimize_leading(&combined)?;
        let lifted = lift_spline(&minimized, ModulusContext::Integers)?;
        generators.push(Generator::new(lifted, None));
    }
    let set = GeneratingSet::build(generators);
    assert_eq!(set.len(), n, "integer basis must have one spline per vertex");
    #[cfg(debug_assertions)]
    for s in set.splines() {
        debug_assert_eq!(is_spline(g, s), Ok(true));
    }
    Ok(set)
}

/// Entry minimization for an integer flow-up basis: working from the next-
/// to-last generator down, subtracts the largest multiple of the successor
/// that keeps every entry nonnegative. Leading entries are unchanged.
pub fn reduce_integer_basis(basis: &GeneratingSet) -> Result<GeneratingSet, SplineError> {
    if basis.context() != ModulusContext::Integers {
        return Err(SplineError::IntegersRequired);
    }
    let mut splines: Vec<Spline> = basis.splines().cloned().collect();
    for i in (0..splines.len().saturating_sub(1)).rev() {
        let next = splines[i + 1].clone();
        let c = splines[i]
            .values()
            .iter()
            .zip(next.values())
            .filter(|(_, &nv)| nv > 0)
            .map(|(&cur, &nv)| cur / nv)
            .min()
            .unwrap_or(0);
        if c > 0 {
            splines[i] = splines[i].sub(&next.scalar_mul(c))?;
        }
    }
    GeneratingSet::new(
        splines
            .into_iter()
            .zip(basis.iter())
            .map(|(s, old)| Generator::new(s, old.origin_level()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::numbered_vertices;

    fn graph(n: usize, edges: &[(usize, usize, u64)], context: ModulusContext) -> EdgeLabeledGraph {
        EdgeLabeledGraph::new(
            numbered_vertices(n),
            edges.iter().map(|&(u, v, label)| Edge { u, v, label }).collect(),
            context,
        )
        .unwrap()
    }

    /// 4-vertex graph with labels in Z/8Z: path edges labeled 2 plus two
    /// chords labeled 4.
    fn mod8_figure() -> EdgeLabeledGraph {
        graph(
            4,
            &[(1, 0, 2), (0, 3, 2), (3, 2, 2), (3, 1, 4), (2, 1, 4)],
            ModulusContext::ModM(8),
        )
    }

    fn three_cycle_30() -> EdgeLabeledGraph {
        graph(
            3,
            &[(1, 2, 3), (0, 2, 2), (0, 1, 5)],
            ModulusContext::ModM(30),
        )
    }

    fn values_of(set: &GeneratingSet) -> Vec<Vec<i64>> {
        set.splines().map(|s| s.values().to_vec()).collect()
    }

    #[test]
    fn indicator_spline_mod4() {
        let g = reduce_labels(&mod8_figure(), 4).unwrap();
        let parts = zero_components(&g).unwrap();
        let comp = &parts.components()[1];
        assert_eq!(comp.vertices(), &[1, 2, 3]);
        let f = component_indicator_spline(&g, comp).unwrap();
        assert_eq!(f.values(), &[0, 2, 2, 2]);
    }

    #[test]
    fn indicator_spline_mod8_singleton() {
        let g = mod8_figure();
        let parts = zero_components(&g).unwrap();
        let comp = parts
            .components()
            .iter()
            .find(|c| c.vertices() == [3])
            .unwrap();
        let f = component_indicator_spline(&g, comp).unwrap();
        assert_eq!(f.values(), &[0, 0, 0, 4]);
    }

    #[test]
    fn indicator_spline_level_one_is_all_ones() {
        let g = reduce_labels(&mod8_figure(), 2).unwrap();
        let parts = zero_components(&g).unwrap();
        assert_eq!(parts.len(), 1);
        let f = component_indicator_spline(&g, &parts.components()[0]).unwrap();
        assert_eq!(f.values(), &[1, 1, 1, 1]);
    }

    #[test]
    fn indicator_spline_rejects_non_prime_power() {
        let g = three_cycle_30();
        let parts = zero_components(&g).unwrap();
        let err = component_indicator_spline(&g, &parts.components()[0]).unwrap_err();
        assert_eq!(err, SplineError::NotPrimePower(30));
    }

    #[test]
    fn gens_mod_p_single_component() {
        let g = mod8_figure();
        let set = gens_mod_p(&g, 2).unwrap();
        assert_eq!(values_of(&set), vec![vec![1, 1, 1, 1]]);
        assert_eq!(set.get(0).origin_level(), Some(1));
    }

    #[test]
    fn gens_mod_p_five_vertex_figure() {
        let g = graph(
            5,
            &[
                (0, 1, 2),
                (1, 4, 2),
                (0, 4, 1),
                (2, 3, 2),
                (1, 3, 1),
                (1, 2, 1),
                (3, 4, 5),
            ],
            ModulusContext::ModM(10),
        );
        let set = gens_mod_p(&g, 5).unwrap();
        assert_eq!(
            values_of(&set),
            vec![
                vec![1, 0, 0, 0, 0],
                vec![0, 1, 0, 0, 0],
                vec![0, 0, 1, 0, 0],
                vec![0, 0, 0, 1, 1],
            ]
        );
    }

    #[test]
    fn gens_mod_p_unit_label_gives_singletons() {
        let g = graph(2, &[(0, 1, 1)], ModulusContext::Integers);
        for p in [2u64, 3, 7] {
            let set = gens_mod_p(&g, p).unwrap();
            assert_eq!(values_of(&set), vec![vec![1, 0], vec![0, 1]]);
        }
    }

    #[test]
    fn gens_mod_p_rejects_composite() {
        let g = mod8_figure();
        assert_eq!(gens_mod_p(&g, 4), Err(SplineError::NotPrime(4)));
    }

    #[test]
    fn gens_mod_prime_power_mod8_figure() {
        let set = gens_mod_prime_power(&mod8_figure(), 2, 3).unwrap();
        assert_eq!(
            values_of(&set),
            vec![
                vec![1, 1, 1, 1],
                vec![0, 2, 2, 2],
                vec![0, 0, 4, 0],
                vec![0, 0, 0, 4],
            ]
        );
        let levels: Vec<_> = set.iter().map(|g| g.origin_level()).collect();
        assert_eq!(levels, vec![Some(1), Some(2), Some(3), Some(3)]);
    }

    #[test]
    fn gens_mod_prime_power_p2_label2() {
        let g = graph(2, &[(0, 1, 2)], ModulusContext::ModM(4));
        let set = gens_mod_prime_power(&g, 2, 2).unwrap();
        assert_eq!(values_of(&set), vec![vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn gens_mod_prime_power_k1_equals_gens_mod_p() {
        let g = mod8_figure();
        assert_eq!(gens_mod_prime_power(&g, 2, 1), gens_mod_p(&g, 2));
    }

    #[test]
    fn lift_examples() {
        let f = Spline::new(vec![1, 1, 1, 1], ModulusContext::ModM(2));
        let lifted = lift_spline(&f, ModulusContext::ModM(8)).unwrap();
        assert_eq!(lifted.values(), &[1, 1, 1, 1]);
        assert_eq!(lifted.context(), ModulusContext::ModM(8));

        let f = Spline::new(vec![0, 2, 2, 2], ModulusContext::ModM(4));
        let lifted = lift_spline(&f, ModulusContext::ModM(8)).unwrap();
        assert_eq!(lifted.values(), &[0, 2, 2, 2]);

        let z = Spline::zero(3, ModulusContext::ModM(4));
        assert!(lift_spline(&z, ModulusContext::ModM(8)).unwrap().is_zero());

        assert_eq!(
            lift_spline(&f, ModulusContext::ModM(6)),
            Err(SplineError::NonDivisorLift { from: 4, to: 6 })
        );
    }

    #[test]
    fn gens_mod_m_three_cycle_30() {
        let set = gens_mod_m(&three_cycle_30(), 30).unwrap();
        assert_eq!(values_of(&set), vec![vec![1, 6, 15], vec![0, 25, 16]]);
    }

    #[test]
    fn gens_mod_m_p2_label6_mod12() {
        let g = graph(2, &[(0, 1, 6)], ModulusContext::ModM(12));
        let set = gens_mod_m(&g, 12).unwrap();
        assert_eq!(values_of(&set), vec![vec![1, 1], vec![0, 6]]);
    }

    #[test]
    fn gens_mod_m_prime_falls_back() {
        let g = mod8_figure();
        assert_eq!(gens_mod_m(&g, 2), gens_mod_p(&g, 2));
    }

    #[test]
    fn minimize_leading_examples() {
        let b = Spline::new(vec![0, 6], ModulusContext::ModM(12));
        assert_eq!(minimize_leading(&b).unwrap(), b);

        let b = Spline::new(vec![4, 4, 0], ModulusContext::ModM(6));
        let f = minimize_leading(&b).unwrap();
        assert_eq!(f.leading_value(), Some(2));

        let b = Spline::new(vec![1, 3], ModulusContext::ModM(12));
        assert_eq!(minimize_leading(&b).unwrap(), b);

        let z = Spline::zero(2, ModulusContext::ModM(12));
        assert_eq!(minimize_leading(&z), Err(SplineError::ZeroSpline));
    }

    #[test]
    fn rank_examples() {
        let g10 = graph(
            5,
            &[
                (0, 1, 2),
                (1, 4, 2),
                (0, 4, 1),
                (2, 3, 2),
                (1, 3, 1),
                (1, 2, 1),
                (3, 4, 5),
            ],
            ModulusContext::ModM(10),
        );
        assert_eq!(rank(&g10, 10), Ok(4));
        assert_eq!(rank(&mod8_figure(), 8), Ok(4));

        let units = graph(3, &[(0, 1, 1), (1, 2, 1)], ModulusContext::ModM(6));
        assert_eq!(rank(&units, 6), Ok(3));
    }

    #[test]
    fn forced_equal_classes_examples() {
        let g = graph(3, &[(0, 1, 2), (0, 2, 2), (1, 2, 3)], ModulusContext::ModM(6));
        assert_eq!(
            forced_equal_classes(&g, 6),
            Ok(vec![vec![0], vec![1, 2]])
        );

        let zeros = graph(3, &[(0, 1, 0), (1, 2, 0)], ModulusContext::ModM(6));
        assert_eq!(forced_equal_classes(&zeros, 6), Ok(vec![vec![0, 1, 2]]));

        let units = graph(3, &[(0, 1, 1), (1, 2, 1)], ModulusContext::ModM(6));
        assert_eq!(
            forced_equal_classes(&units, 6),
            Ok(vec![vec![0], vec![1], vec![2]])
        );
    }

    #[test]
    fn integer_basis_p2_label6() {
        let g = graph(2, &[(0, 1, 6)], ModulusContext::Integers);
        let set = integer_basis(&g).unwrap();
        assert_eq!(values_of(&set), vec![vec![1, 1], vec![0, 6]]);
    }

    #[test]
    fn integer_basis_all_unit_labels() {
        let g = graph(3, &[(0, 1, 1), (0, 2, 1)], ModulusContext::Integers);
        let set = integer_basis(&g).unwrap();
        assert_eq!(
            values_of(&set),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
    }

    #[test]
    fn integer_basis_three_cycle() {
        let g = graph(3, &[(1, 2, 3), (0, 2, 2), (0, 1, 5)], ModulusContext::Integers);
        let set = integer_basis(&g).unwrap();
        let leads: Vec<i64> = set
            .splines()
            .map(|s| s.leading_value().unwrap())
            .collect();
        assert_eq!(leads, vec![1, 5, 6]);
    }

    #[test]
    fn integer_basis_four_vertex_two_factors() {
        // lcm(3,3,2,4) = 12, so the working modulus is 24 = 8 * 3. The
        // mod-3 generators lead only at v1 and v2; pairing by leading
        // vertex leaves v3 and v4 to the mod-8 factor alone.
        let g = graph(
            4,
            &[(0, 2, 3), (1, 3, 3), (0, 1, 2), (2, 3, 4)],
            ModulusContext::Integers,
        );
        let set = integer_basis(&g).unwrap();
        // Hand check of the minima: at v2 the entries must be even with
        // the v4 entry 2 mod 3 and 0 mod 4; at v3 divisible by 3 with a
        // matching v4 entry; at v4 divisible by both 3 and 4.
        assert_eq!(
            values_of(&set),
            vec![
                vec![1, 9, 16, 0],
                vec![0, 2, 0, 8],
                vec![0, 0, 3, 3],
                vec![0, 0, 0, 12],
            ]
        );
    }

    #[test]
    fn integer_basis_contraction_with_interleaved_class() {
        // v4 is merged into v2's class; the basis has one generator per
        // class and the expansion repeats the class value at v4.
        let g = graph(
            4,
            &[(0, 1, 2), (1, 3, 0), (2, 3, 3)],
            ModulusContext::Integers,
        );
        let set = integer_basis(&g).unwrap();
        assert_eq!(
            values_of(&set),
            vec![vec![1, 9, 0, 9], vec![0, 2, 8, 2], vec![0, 0, 3, 0]]
        );
    }

    #[test]
    fn integer_basis_contracts_zero_labels() {
        // v2 and v3 are forced equal; the contraction is a P2 with label 6.
        let g = graph(3, &[(0, 1, 6), (1, 2, 0)], ModulusContext::Integers);
        let set = integer_basis(&g).unwrap();
        assert_eq!(values_of(&set), vec![vec![1, 1, 1], vec![0, 6, 6]]);
    }

    #[test]
    fn integer_basis_all_zero_labels() {
        let g = graph(3, &[(0, 1, 0), (1, 2, 0)], ModulusContext::Integers);
        let set = integer_basis(&g).unwrap();
        assert_eq!(values_of(&set), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn reduce_integer_basis_examples() {
        let ctx = ModulusContext::Integers;
        let b = GeneratingSet::from_splines(vec![
            Spline::new(vec![1, 1], ctx),
            Spline::new(vec![0, 6], ctx),
        ])
        .unwrap();
        assert_eq!(reduce_integer_basis(&b).unwrap(), b);

        let b = GeneratingSet::from_splines(vec![
            Spline::new(vec![1, 1, 7], ctx),
            Spline::new(vec![0, 0, 6], ctx),
        ])
        .unwrap();
        let reduced = reduce_integer_basis(&b).unwrap();
        assert_eq!(values_of(&reduced), vec![vec![1, 1, 1], vec![0, 0, 6]]);

        let single = GeneratingSet::from_splines(vec![Spline::new(vec![2, 4], ctx)]).unwrap();
        assert_eq!(reduce_integer_basis(&single).unwrap(), single);
    }

    #[test]
    fn generating_set_rejects_malformed_input() {
        let ctx = ModulusContext::ModM(4);
        assert!(GeneratingSet::from_splines(vec![]).is_err());
        assert!(GeneratingSet::from_splines(vec![Spline::zero(2, ctx)]).is_err());
        let shared_lead = GeneratingSet::from_splines(vec![
            Spline::new(vec![1, 0], ctx),
            Spline::new(vec![2, 1], ctx),
        ]);
        assert!(shared_lead.is_err());
    }
}
