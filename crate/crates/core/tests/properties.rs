//! Property tests: randomly shaped connected graphs against the oracle.

use proptest::prelude::*;

use spline_core::graph::{numbered_vertices, zero_components, Edge};
use spline_core::oracle::express_in_integer_basis;
use spline_core::spline::is_spline;
use spline_core::{
    check_flow_up_criteria, enumerate_splines, factorize, forced_equal_classes, gens_mod_m,
    gens_mod_prime_power, integer_basis, min_leading_oracle, multiply, rank, verify_generating,
    EdgeLabeledGraph, ModulusContext, Spline, DEFAULT_BUDGET,
};

/// A connected graph described by spanning-tree attachments plus extra
/// edges; realized against a concrete vertex count so everything stays in
/// range under shrinking.
#[derive(Debug, Clone)]
struct GraphSpec {
    n: usize,
    attach: Vec<prop::sample::Index>,
    tree_labels: Vec<u64>,
    extras: Vec<(prop::sample::Index, prop::sample::Index, u64)>,
}

impl GraphSpec {
    fn realize(&self, context: ModulusContext) -> EdgeLabeledGraph {
        let mut edges = Vec::new();
        for v in 1..self.n {
            edges.push(Edge {
                u: self.attach[v - 1].index(v),
                v,
                label: self.tree_labels[v - 1],
            });
        }
        for (iu, iv, label) in &self.extras {
            let u = iu.index(self.n);
            let v = iv.index(self.n);
            if u != v {
                edges.push(Edge {
                    u: u.min(v),
                    v: u.max(v),
                    label: *label,
                });
            }
        }
        EdgeLabeledGraph::new(numbered_vertices(self.n), edges, context).unwrap()
    }
}

fn graph_spec(max_n: usize, label_range: std::ops::RangeInclusive<u64>) -> impl Strategy<Value = GraphSpec> {
    (
        2..=max_n,
        prop::collection::vec(any::<prop::sample::Index>(), max_n - 1),
        prop::collection::vec(label_range.clone(), max_n - 1),
        prop::collection::vec(
            (any::<prop::sample::Index>(), any::<prop::sample::Index>(), label_range),
            0..4,
        ),
    )
        .prop_map(|(n, attach, tree_labels, extras)| GraphSpec {
            n,
            attach,
            tree_labels,
            extras,
        })
}

fn modulus() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 4, 5, 6, 8, 9, 10, 12])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gens_mod_m_is_a_certified_minimum_generating_set(
        spec in graph_spec(5, 0..=12),
        m in modulus(),
    ) {
        let g = spec.realize(ModulusContext::ModM(m));
        let set = gens_mod_m(&g, m).unwrap();
        prop_assert_eq!(set.len(), rank(&g, m).unwrap());
        prop_assert!(verify_generating(&set, &g, m, DEFAULT_BUDGET).unwrap());
        for f in factorize(m).unwrap().factors() {
            let factor_set = gens_mod_prime_power(&g, f.prime, f.exponent).unwrap();
            prop_assert!(check_flow_up_criteria(&factor_set));
        }

        // Minimality the hard way: no proper prefix spans everything.
        let all = enumerate_splines(&g, m, DEFAULT_BUDGET).unwrap();
        for k in 1..set.len() {
            let prefix: Vec<Spline> = set.splines().take(k).cloned().collect();
            let span = spline_core::oracle::span_of_splines(&prefix, m, DEFAULT_BUDGET).unwrap();
            prop_assert_ne!(span, all.clone());
        }

        // Each generator projects into the span of the factor's own set.
        for f in factorize(m).unwrap().factors() {
            let q = f.value();
            let factor_set = gens_mod_prime_power(&g, f.prime, f.exponent).unwrap();
            let factor_splines: Vec<Spline> = factor_set.splines().cloned().collect();
            let span =
                spline_core::oracle::span_of_splines(&factor_splines, q, DEFAULT_BUDGET).unwrap();
            for s in set.splines() {
                prop_assert!(span.contains(&s.reduce_mod(q).unwrap()));
            }
        }
    }

    #[test]
    fn forced_classes_agree_with_enumeration(
        spec in graph_spec(4, 0..=12),
        m in modulus(),
    ) {
        let g = spec.realize(ModulusContext::ModM(m));
        let classes = forced_equal_classes(&g, m).unwrap();
        let all = enumerate_splines(&g, m, DEFAULT_BUDGET).unwrap();
        let n = g.n_vertices();
        for v in 0..n {
            for w in (v + 1)..n {
                let same = classes.iter().any(|c| c.contains(&v) && c.contains(&w));
                let agree = all.splines().iter().all(|s| s.value(v) == s.value(w));
                prop_assert_eq!(same, agree);
            }
        }
    }

    #[test]
    fn zero_components_ignore_edge_order(
        spec in graph_spec(5, 0..=12),
        m in modulus(),
        rotate in 0usize..8,
    ) {
        let g = spec.realize(ModulusContext::ModM(m));
        let mut edges = g.edges().to_vec();
        let k = rotate % edges.len().max(1);
        edges.rotate_left(k);
        let permuted =
            EdgeLabeledGraph::new(g.vertex_names().to_vec(), edges, g.context()).unwrap();
        prop_assert_eq!(zero_components(&g), zero_components(&permuted));
    }

    #[test]
    fn enumerated_splines_are_closed_under_multiplication(
        spec in graph_spec(5, 0..=12),
        m in modulus(),
    ) {
        let g = spec.realize(ModulusContext::ModM(m));
        let all = enumerate_splines(&g, m, DEFAULT_BUDGET).unwrap();
        // The constant splines translate the set freely.
        prop_assert_eq!(all.len() % m as usize, 0);
        // The pairwise product scan is quadratic; skip only the rare huge sets.
        if all.len() <= 1500 {
            for a in all.splines() {
                for b in all.splines() {
                    prop_assert!(all.contains(&multiply(a, b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn integer_basis_leading_entries_are_minimal(
        spec in graph_spec(4, 1..=6),
    ) {
        let g = spec.realize(ModulusContext::Integers);
        let basis = integer_basis(&g).unwrap();
        prop_assert_eq!(basis.len(), g.n_vertices());

        let mut lcm_all: u64 = 1;
        for e in g.edges() {
            lcm_all = spline_core::residue::lcm(lcm_all, e.label).unwrap();
        }
        if lcm_all == 1 {
            for gen in basis.iter() {
                prop_assert_eq!(gen.spline().leading_value(), Some(1));
            }
            return Ok(());
        }
        let m = lcm_all * factorize(lcm_all).unwrap().smallest_prime();
        for (i, gen) in basis.iter().enumerate() {
            let lead = gen.spline().leading_value().unwrap() as u64;
            prop_assert_eq!(lead, min_leading_oracle(&g, i, m, DEFAULT_BUDGET).unwrap());
        }

        // On instances small enough to enumerate, every lifted spline must
        // be an integer combination of the basis.
        if (m as u128).pow(g.n_vertices() as u32) <= 200_000 {
            let all = enumerate_splines(&g, m, DEFAULT_BUDGET).unwrap();
            for s in all.splines() {
                let lifted = Spline::new(s.values().to_vec(), ModulusContext::Integers);
                prop_assert_eq!(is_spline(&g, &lifted), Ok(true));
                prop_assert!(express_in_integer_basis(&basis, &lifted).is_some());
            }
        }
    }
}
