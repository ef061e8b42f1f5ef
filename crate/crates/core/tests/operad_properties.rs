//! Structural properties of lattice paths, cyclic paths, complete graphs
//! and trees, checked exhaustively at small sizes or by proptest.

use latpath::cgo::{all_edge_graphs, all_strict, ctot, first_permutation_subsequence};
use latpath::cyclic::CyclicLatticePath;
use latpath::paths::{all_paths, cut_sequences, enumerate, BipointedMap, JoinMorphism};
use latpath::trees::{all_trees, LabelledPlanarTree};
use latpath::{LatticePath, Permutation, SimplicialOperator};
use proptest::prelude::*;

fn small() -> Vec<LatticePath> {
    all_paths(4, 2)
}

#[test]
fn enumeration_counts() {
    // |L(n_1..n_k; n)| = (N choose n_1+1, …) · C(N + n, n) with N letters
    for (arities, n, expected) in [(vec![0, 0], 0, 2), (vec![1], 1, 3), (vec![1, 0], 1, 12), (vec![0, 0, 0], 1, 24)] {
        assert_eq!(enumerate(&arities, n).len(), expected, "{arities:?}; {n}");
    }
    assert_eq!(cut_sequences(2, 3).len(), 10);
}

#[test]
fn composition_acts_on_components() {
    let paths = small();
    for x in &paths {
        for i in 1..=x.k() {
            for y in paths.iter().filter(|y| y.n() + 1 == x.multiplicity(i)) {
                let xy = x.compose(i, y).unwrap();
                let (cx, cy, cxy) = (x.components(), y.components(), xy.components());
                for c in 1..=xy.k() {
                    let expected = if c < i {
                        cx[c - 1].clone()
                    } else if c < i + y.k() {
                        cx[i - 1].after(&cy[c - i]).unwrap()
                    } else {
                        cx[c - y.k()].clone()
                    };
                    assert_eq!(cxy[c - 1], expected, "{x} ∘_{i} {y}, colour {c}");
                }
            }
        }
    }
}

#[test]
fn output_operators_postcompose_components() {
    for x in small() {
        let n = x.n();
        for j in 0..=n + 1 {
            let d = x.output_coface(j).unwrap();
            for (a, b) in x.components().iter().zip(d.components()) {
                assert_eq!(SimplicialOperator::coface(n + 1, j).after(a).unwrap(), b);
            }
        }
        for j in 0..n {
            let s = x.output_codegeneracy(j).unwrap();
            for (a, b) in x.components().iter().zip(s.components()) {
                assert_eq!(SimplicialOperator::codegeneracy(n - 1, j).after(a).unwrap(), b);
            }
        }
    }
}

#[test]
fn input_operators_precompose_components() {
    for x in small() {
        for c in 1..=x.k() {
            let m = x.multiplicity(c) - 1;
            let comp = &x.components()[c - 1];
            for j in 0..=m {
                let s = x.input_degeneracy(c, j).unwrap();
                assert_eq!(s.components()[c - 1], comp.after(&SimplicialOperator::codegeneracy(m, j)).unwrap());
                if m > 0 {
                    let d = x.input_face(c, j).unwrap();
                    assert_eq!(d.components()[c - 1], comp.after(&SimplicialOperator::coface(m, j)).unwrap());
                }
            }
        }
    }
}

#[test]
fn output_operators_satisfy_the_cosimplicial_identities() {
    for x in small() {
        let n = x.n();
        let d = |y: &LatticePath, j: usize| y.output_coface(j).unwrap();
        let s = |y: &LatticePath, j: usize| y.output_codegeneracy(j).unwrap();
        for j in 0..=n + 2 {
            for i in 0..j {
                assert_eq!(d(&d(&x, j - 1), i), d(&d(&x, i), j), "{x}: d^{j} d^{i}");
            }
        }
        for j in 0..n {
            for i in 0..=j {
                if j + 1 < n {
                    assert_eq!(s(&s(&x, j + 1), i), s(&s(&x, i), j), "{x}: s^{j} s^{i}");
                }
            }
        }
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = s(&d(&x, i), j);
                let rhs = match i {
                    _ if i < j => d(&s(&x, j - 1), i),
                    _ if i == j || i == j + 1 => x.clone(),
                    _ => d(&s(&x, j), i - 1),
                };
                assert_eq!(lhs, rhs, "{x}: s^{j} d^{i}");
            }
        }
    }
}

fn bipointed(n: usize, m: usize) -> Vec<BipointedMap> {
    cut_sequences(n, m + 1)
        .into_iter()
        .map(|mid| {
            let mut v = vec![0];
            v.extend(mid);
            v.push(m + 1);
            BipointedMap::new(v, m + 1).unwrap()
        })
        .collect()
}

#[test]
fn joyal_duality_is_an_anti_equivalence() {
    for n in 0..=3 {
        for m in 0..=3 {
            for phi in bipointed(n, m) {
                let psi = phi.joyal_dual();
                assert_eq!((psi.source(), psi.target()), (m, n));
                assert_eq!(BipointedMap::from_dual(&psi), phi);
                for l in 0..=2 {
                    for chi in bipointed(m, l) {
                        let composite = chi.after(&phi).unwrap().joyal_dual();
                        assert_eq!(composite, psi.after(&chi.joyal_dual()).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn join_morphisms_round_trip() {
    for x in small() {
        assert_eq!(JoinMorphism::from_path(&x).to_path(), Some(x.clone()));
        for c in CyclicLatticePath::all_markings(&x) {
            assert_eq!(CyclicLatticePath::from_join_morphism(&c.join_morphism()), Some(c.clone()));
        }
    }
}

#[test]
fn cyclic_complexity_is_rotation_invariant() {
    for x in all_paths(4, 2) {
        for c in CyclicLatticePath::all_markings(&x) {
            let base = c.cyclic_complexity();
            assert_eq!(base % 2, 0);
            for s in 0..=c.n() {
                assert_eq!(c.output_rotate(s).cyclic_complexity(), base, "{c} rotated by {s}");
            }
            assert_eq!(c.output_rotate(c.n() + 1), c);
        }
    }
}

#[test]
fn rotations_generate_a_cyclic_group() {
    for n in 0..=4 {
        let t = CyclicLatticePath::rotation(n, 1);
        let mut acc = CyclicLatticePath::rotation(n, 0);
        for s in 1..=n + 1 {
            acc = acc.compose(1, &t).unwrap();
            assert_eq!(acc, CyclicLatticePath::rotation(n, s));
        }
        assert_eq!(acc, CyclicLatticePath::plain(LatticePath::identity(n)));
    }
}

#[test]
fn complete_graph_order_is_a_partial_order() {
    let graphs = all_edge_graphs(3, 1);
    for a in &graphs {
        assert!(a.leq(a).unwrap());
        for b in &graphs {
            if a.leq(b).unwrap() && b.leq(a).unwrap() {
                assert_eq!(a.edges(), b.edges());
            }
            for c in &graphs {
                if a.leq(b).unwrap() && b.leq(c).unwrap() {
                    assert!(a.leq(c).unwrap());
                }
            }
        }
    }
}

#[test]
fn complete_graph_composition_preserves_validity() {
    let strict = all_strict(2, 1);
    let graphs: Vec<_> = all_edge_graphs(3, 1).into_iter().filter(|g| g.is_extended_valid()).collect();
    for a in &graphs {
        for b in &strict {
            for i in 1..=3 {
                assert!(a.compose(i, b).unwrap().is_extended_valid());
            }
        }
    }
}

#[test]
fn ctot_detects_the_filtration() {
    for x in all_paths(5, 2) {
        let c = x.complexity();
        for m in 1..=4 {
            assert_eq!(c <= m, ctot(&x).in_filtration(m), "{x}, m = {m}");
        }
        assert_eq!(first_permutation_subsequence(&x), ctot(&x).order().unwrap().clone());
    }
}

#[test]
fn ctot_is_lax_and_equivariant() {
    let paths = all_paths(4, 2);
    for x in &paths {
        for rho in Permutation::all(x.k()) {
            assert_eq!(ctot(&x.sym_action(&rho).unwrap()), ctot(x).sym_action(&rho).unwrap());
        }
        for i in 1..=x.k() {
            for y in paths.iter().filter(|y| y.n() + 1 == x.multiplicity(i)) {
                let lhs = ctot(&x.compose(i, y).unwrap());
                assert!(lhs.leq(&ctot(x).compose(i, &ctot(y)).unwrap()).unwrap(), "{x} ∘_{i} {y}");
            }
        }
    }
}

#[test]
fn trees_substitute_like_paths() {
    // the walk of a composite equals the composite of the walks
    let trees: Vec<LabelledPlanarTree> = all_trees(4, 2).into_iter().filter(|t| t.k() > 0).collect();
    for t in &trees {
        let x = t.to_path();
        for i in 1..=x.k() {
            for s in trees.iter().filter(|s| s.to_path().n() + 1 == x.multiplicity(i)) {
                let y = s.to_path();
                let xy = x.compose(i, &y).unwrap();
                if xy.complexity() <= 2 {
                    assert_eq!(LabelledPlanarTree::from_path(&xy).unwrap().to_path(), xy);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn paths_print_and_parse(idx in 0usize..4725) {
        let paths = all_paths(4, 3);
        let x = &paths[idx % paths.len()];
        let text = x.to_string();
        prop_assert_eq!(&text.parse::<LatticePath>().unwrap(), x);
    }

    #[test]
    fn cyclic_paths_print_and_parse(idx in 0usize..2000, mark in 0usize..64) {
        let paths = all_paths(4, 2);
        let x = &paths[idx % paths.len()];
        let all = CyclicLatticePath::all_markings(x);
        let c = &all[mark % all.len()];
        prop_assert_eq!(&c.to_string().parse::<CyclicLatticePath>().unwrap(), c);
    }

    #[test]
    fn multi_digit_colours_round_trip(k in 10usize..14) {
        let word: Vec<u32> = (1..=k as u32).rev().collect();
        let x = LatticePath::new(vec![word]).unwrap();
        prop_assert_eq!(x.to_string().parse::<LatticePath>().unwrap(), x);
    }
}
