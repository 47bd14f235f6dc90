//! Cross-checks of the library engines against brute-force oracles frozen
//! in this file. Each oracle recomputes its answer straight from a
//! definition and shares no code with the implementation it checks.

use std::collections::BTreeSet;

use pathroid_core::{
    arrange, betti_numbers, depth_of_quotient, enumerate_t_path_sequences,
    enumerate_t_path_supports, is_valid_arrangement, path_ideal, stanley_reisner_depth,
    taylor_betti, veronese_type_ideal, ColorCounts, Monomial, MonomialIdeal, PartitionSpec,
    SimpleGraph,
};

fn multipartite(sizes: &[usize]) -> SimpleGraph {
    PartitionSpec::new(sizes.to_vec())
        .expect("valid partition")
        .complete_multipartite()
}

/// Every monomial with exponents below `cap`, in odometer order.
fn exponent_box(ring_dim: usize, cap: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u64; ring_dim];
    loop {
        out.push(Monomial::new(exps.clone()));
        let mut i = 0;
        loop {
            if i == ring_dim {
                return out;
            }
            if exps[i] < cap {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

mod power_membership {
    use super::*;

    /// Definition oracle: `m` lies in the `k`-th power iff some product of
    /// `k` generators (repetition allowed) divides it. Partial products
    /// that already fail to divide `m` are pruned, which is sound because
    /// divisibility only tightens as factors accumulate.
    fn in_power(ideal: &MonomialIdeal, m: &Monomial, k: usize) -> bool {
        fn go(gens: &[Monomial], acc: &Monomial, m: &Monomial, k: usize, from: usize) -> bool {
            if !acc.divides(m) {
                return false;
            }
            if k == 0 {
                return true;
            }
            (from..gens.len()).any(|i| {
                let next = acc.mul(&gens[i]).expect("same ring");
                go(gens, &next, m, k - 1, i)
            })
        }
        go(ideal.gens(), &Monomial::one(ideal.ring_dim()), m, k, 0)
    }

    fn check_box(ideal: &MonomialIdeal, k: u64, cap: u64) {
        let power = ideal.power(k).unwrap();
        for m in exponent_box(ideal.ring_dim(), cap) {
            assert_eq!(
                power.contains_monomial(&m),
                in_power(ideal, &m, k as usize),
                "power {k}, probe {m}"
            );
        }
    }

    #[test]
    fn path_ideal_powers_match_the_product_oracle() {
        let ideal = path_ideal(&multipartite(&[1, 2, 2]), 3).unwrap();
        for k in 1..=3 {
            check_box(&ideal, k, 3);
        }
    }

    #[test]
    fn bipartite_edge_ideal_powers_match_the_product_oracle() {
        let ideal = path_ideal(&multipartite(&[1, 2]), 2).unwrap();
        for k in 1..=4 {
            check_box(&ideal, k, 4);
        }
    }

    #[test]
    fn cycle_edge_ideal_square_matches_the_product_oracle() {
        let g = SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let ideal = g.edge_ideal().unwrap();
        check_box(&ideal, 2, 2);
    }
}

mod colon_ideals {
    use super::*;

    /// Definition probe: `m` lies in `I : J` iff `m * g` lies in `I` for
    /// every generator `g` of `J`. Checked pointwise over an exponent box,
    /// independently of how the colon generators were computed.
    fn check_box(i: &MonomialIdeal, j: &MonomialIdeal, cap: u64) {
        let colon = i.colon(j).unwrap();
        for m in exponent_box(i.ring_dim(), cap) {
            let by_definition = j
                .gens()
                .iter()
                .all(|g| i.contains_monomial(&m.mul(g).unwrap()));
            assert_eq!(
                colon.contains_monomial(&m),
                by_definition,
                "probe {m} against {colon:?}"
            );
        }
    }

    #[test]
    fn colon_of_a_square_by_the_ideal_matches_membership() {
        let ideal = path_ideal(&multipartite(&[1, 2, 2]), 3).unwrap();
        check_box(&ideal.power(2).unwrap(), &ideal, 2);
    }

    #[test]
    fn colon_by_a_single_variable_matches_membership() {
        let x1x2 = Monomial::squarefree(&[0, 1], 3).unwrap();
        let x2x3 = Monomial::squarefree(&[1, 2], 3).unwrap();
        let i = MonomialIdeal::new(3, vec![x1x2, x2x3]).unwrap();
        let j = MonomialIdeal::principal(Monomial::variable(1, 3).unwrap());
        let expected = MonomialIdeal::new(
            3,
            vec![
                Monomial::variable(0, 3).unwrap(),
                Monomial::variable(2, 3).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(i.colon(&j).unwrap(), expected);
        check_box(&i, &j, 3);
    }

    #[test]
    fn colon_with_mixed_exponents_matches_membership() {
        let i = MonomialIdeal::new(
            3,
            vec![
                Monomial::new(vec![2, 0, 0]),
                Monomial::new(vec![1, 1, 0]),
                Monomial::new(vec![0, 3, 1]),
            ],
        )
        .unwrap();
        let j = MonomialIdeal::new(
            3,
            vec![Monomial::new(vec![1, 0, 0]), Monomial::new(vec![0, 1, 1])],
        )
        .unwrap();
        check_box(&i, &j, 3);
    }
}

mod arrangements {
    use super::*;

    /// Backtracking oracle: place one item at a time, never repeating the
    /// colour just placed.
    fn exists_arrangement(counts: &mut [usize], last: Option<usize>) -> bool {
        if counts.iter().all(|&c| c == 0) {
            return true;
        }
        for i in 0..counts.len() {
            if counts[i] == 0 || last == Some(i) {
                continue;
            }
            counts[i] -= 1;
            let found = exists_arrangement(counts, Some(i));
            counts[i] += 1;
            if found {
                return true;
            }
        }
        false
    }

    fn non_increasing_vectors(max_colors: usize, max_total: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        fn extend(prefix: &mut Vec<usize>, budget: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            if prefix.len() == cap {
                return;
            }
            let bound = prefix.last().copied().unwrap_or(budget);
            for next in 1..=bound.min(budget) {
                prefix.push(next);
                extend(prefix, budget - next, cap, out);
                prefix.pop();
            }
        }
        extend(&mut Vec::new(), max_total, max_colors, &mut out);
        out
    }

    #[test]
    fn greedy_feasibility_equals_backtracking_feasibility() {
        for vector in non_increasing_vectors(4, 9) {
            let counts = ColorCounts::new(vector.clone()).unwrap();
            let greedy = arrange(&counts);
            let brute = exists_arrangement(&mut vector.clone(), None);
            assert_eq!(greedy.is_some(), brute, "counts {vector:?}");
            assert_eq!(counts.is_feasible(), brute, "counts {vector:?}");
            if let Some(seq) = greedy {
                assert!(is_valid_arrangement(&counts, &seq), "counts {vector:?}");
            }
        }
    }
}

mod path_enumeration {
    use super::*;

    /// Brute oracle: grow injective vertex sequences one adjacency at a
    /// time and keep those of the requested length.
    fn sequences_by_walk(g: &SimpleGraph, t: usize) -> BTreeSet<Vec<usize>> {
        let mut found = BTreeSet::new();
        fn grow(g: &SimpleGraph, seq: &mut Vec<usize>, t: usize, found: &mut BTreeSet<Vec<usize>>) {
            if seq.len() == t {
                found.insert(seq.clone());
                return;
            }
            for v in 0..g.vertex_count() {
                if seq.contains(&v) {
                    continue;
                }
                if let Some(&tail) = seq.last() {
                    if !g.has_edge(tail, v) {
                        continue;
                    }
                }
                seq.push(v);
                grow(g, seq, t, found);
                seq.pop();
            }
        }
        grow(g, &mut Vec::new(), t, &mut found);
        found
    }

    fn check_graph(g: &SimpleGraph, t: usize) {
        let expected = sequences_by_walk(g, t);
        let got: BTreeSet<Vec<usize>> = enumerate_t_path_sequences(g, t)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(got, expected, "sequences for t = {t}");

        let expected_supports: BTreeSet<Vec<usize>> = expected
            .iter()
            .map(|seq| {
                let mut s = seq.clone();
                s.sort_unstable();
                s
            })
            .collect();
        let got_supports: BTreeSet<Vec<usize>> = enumerate_t_path_supports(g, t)
            .unwrap()
            .support_sets()
            .into_iter()
            .collect();
        assert_eq!(got_supports, expected_supports, "supports for t = {t}");
    }

    #[test]
    fn multipartite_graphs_match_the_walk_oracle() {
        for sizes in [vec![1, 2, 2], vec![3, 3], vec![1, 1, 2, 2]] {
            let g = multipartite(&sizes);
            for t in 2..=4 {
                check_graph(&g, t);
            }
        }
    }

    #[test]
    fn sparse_graphs_match_the_walk_oracle() {
        let six_cycle = SimpleGraph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let broom = SimpleGraph::new(6, &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5), (0, 1)]);
        for g in [six_cycle.unwrap(), broom.unwrap()] {
            for t in 2..=5 {
                check_graph(&g, t);
            }
        }
    }
}

mod depth_engines {
    use super::*;

    #[test]
    fn five_cycle_quotient_has_depth_two_by_both_engines() {
        let g = SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let ideal = g.edge_ideal().unwrap();
        assert_eq!(depth_of_quotient(&ideal).unwrap(), 2);
        assert_eq!(stanley_reisner_depth(&ideal).unwrap(), 2);
    }

    #[test]
    fn complete_graph_quotient_has_depth_one_by_both_engines() {
        let ideal = path_ideal(&multipartite(&[1, 1, 1, 1, 1]), 2).unwrap();
        assert_eq!(depth_of_quotient(&ideal).unwrap(), 1);
        assert_eq!(stanley_reisner_depth(&ideal).unwrap(), 1);
    }

    #[test]
    fn squarefree_veronese_quotients_have_depth_one_below_the_degree() {
        for (n, d) in [(4usize, 2u64), (5, 3), (6, 4)] {
            let ideal = veronese_type_ideal(n, d, &vec![1; n]).unwrap();
            let expected = d as usize - 1;
            assert_eq!(depth_of_quotient(&ideal).unwrap(), expected, "n={n} d={d}");
            assert_eq!(
                stanley_reisner_depth(&ideal).unwrap(),
                expected,
                "n={n} d={d}"
            );
        }
    }
}

mod resolutions {
    use super::*;

    #[test]
    fn non_squarefree_tables_match_the_subset_oracle() {
        let cases = vec![
            MonomialIdeal::new(
                2,
                vec![
                    Monomial::new(vec![2, 0]),
                    Monomial::new(vec![1, 1]),
                    Monomial::new(vec![0, 3]),
                ],
            )
            .unwrap(),
            MonomialIdeal::new(
                3,
                vec![
                    Monomial::new(vec![1, 1, 0]),
                    Monomial::new(vec![0, 1, 1]),
                    Monomial::new(vec![1, 0, 1]),
                    Monomial::new(vec![0, 2, 0]),
                ],
            )
            .unwrap(),
        ];
        for ideal in cases {
            let fast = betti_numbers(&ideal).unwrap();
            let slow = taylor_betti(&ideal).unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn squared_path_ideal_table_matches_the_subset_oracle() {
        let ideal = path_ideal(&multipartite(&[1, 1, 2]), 3).unwrap();
        let square = ideal.power(2).unwrap();
        assert_eq!(
            betti_numbers(&square).unwrap(),
            taylor_betti(&square).unwrap()
        );
    }
}
