//! The surjection operad acting on normalized simplicial cochains.

use latpath::chains::{generator_degree, surjection_generators, ChainElement};
use latpath::simplicial::{
    coalgebra_check, coalgebra_witness, coboundary, cochain_action, cohomology_basis, cup_i, is_coboundary,
    sphere_simplices, steenrod_square, SimplicialCochain, SimplicialMap, SimplicialSet,
};
use latpath::{LatticePath, SimplicialOperator, F2, Z};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random(rng: &mut impl Rng, x: &SimplicialSet, d: usize) -> SimplicialCochain<Z> {
    SimplicialCochain { degree: d, values: (0..x.count(d)).map(|_| rng.gen_range(-3..=3)).collect() }
}

fn act(x: &SimplicialSet, u: &ChainElement<Z>, fs: &[SimplicialCochain<Z>]) -> Option<SimplicialCochain<Z>> {
    cochain_action(x, u, fs).unwrap()
}

fn negate(f: &SimplicialCochain<Z>) -> SimplicialCochain<Z> {
    SimplicialCochain { degree: f.degree, values: f.values.iter().map(|v| -v).collect() }
}

fn generators() -> Vec<LatticePath> {
    (1..=3).flat_map(|k| surjection_generators(k, 4)).collect()
}

/// `(f ∪ g)(v₀…v_n) = f(v₀…v_p) g(v_p…v_n)` read off vertex labels.
fn alexander_whitney(x: &SimplicialSet, f: &SimplicialCochain<Z>, g: &SimplicialCochain<Z>) -> Vec<Z> {
    let (p, q) = (f.degree, g.degree);
    x.labels(p + q)
        .iter()
        .map(|l| {
            let front = x.find(p, &l[..=p]).unwrap();
            let back = x.find(q, &l[p..]).unwrap();
            f.values[front] * g.values[back]
        })
        .collect()
}

#[test]
fn cup_is_alexander_whitney_on_a_simplex() {
    let x = SimplicialSet::standard(4);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in 0..=2 {
        for q in 0..=2 {
            let f = random(&mut rng, &x, p);
            let g = random(&mut rng, &x, q);
            let cup = cup_i(&x, 0, &f, &g).unwrap().unwrap();
            assert_eq!(cup.values, alexander_whitney(&x, &f, &g), "degrees {p}, {q}");
        }
    }
}

#[test]
fn unit_acts_as_identity() {
    let x = SimplicialSet::torus();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let one = ChainElement::generator("1".parse().unwrap());
    for d in 0..=2 {
        let f = random(&mut rng, &x, d);
        assert_eq!(act(&x, &one, std::slice::from_ref(&f)), Some(f));
    }
}

#[test]
fn action_respects_composition() {
    let x = SimplicialSet::standard(4);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let gens = generators();
    let mut checked = 0;
    for u in &gens {
        for v in &gens {
            for i in 1..=u.k() {
                let fs: Vec<_> = (0..u.k()).map(|_| { let d = rng.gen_range(0..=2); random(&mut rng, &x, d) }).collect();
                let gs: Vec<_> = (0..v.k()).map(|_| { let d = rng.gen_range(0..=2); random(&mut rng, &x, d) }).collect();
                let (eu, ev) = (ChainElement::generator(u.clone()), ChainElement::generator(v.clone()));
                let Some(inner) = act(&x, &ev, &gs) else { continue };
                let mut outer = fs.clone();
                outer[i - 1] = inner;
                let mut all = fs[..i - 1].to_vec();
                all.extend(gs);
                all.extend(fs[i..].iter().cloned());
                let lhs = act(&x, &eu.compose(i, &ev).unwrap(), &all);
                let after: usize = fs[i..].iter().map(|f| f.degree).sum();
                let rhs = act(&x, &eu, &outer).map(|r| if generator_degree(v) * after % 2 == 1 { negate(&r) } else { r });
                assert_eq!(lhs, rhs, "{u} ∘_{i} {v}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}

/// `δ(u·f) = (−1)^{n+1} (∂u)·f + Σ_j (−1)^{|f_1|+…+|f_{j−1}|} u·(…, δf_j, …)`
/// where `n` is the degree of `u·f`.
fn leibniz_holds(x: &SimplicialSet, u: &LatticePath, fs: &[SimplicialCochain<Z>]) -> bool {
    let eu = ChainElement::generator(u.clone());
    let Some(a) = act(x, &eu, fs) else { return true };
    let n = a.degree;
    let mut rhs = SimplicialCochain::zero(x, n + 1);
    let du = eu.boundary();
    if !du.is_zero() {
        if let Some(t) = act(x, &du, fs) {
            rhs = if n % 2 == 0 { rhs.minus(&t) } else { rhs.plus(&t) };
        }
    }
    let mut before = 0;
    for j in 0..fs.len() {
        let mut gs = fs.to_vec();
        gs[j] = coboundary(x, &fs[j]);
        if let Some(t) = act(x, &eu, &gs) {
            rhs = if before % 2 == 1 { rhs.minus(&t) } else { rhs.plus(&t) };
        }
        before += fs[j].degree;
    }
    coboundary(x, &a) == rhs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn action_is_a_chain_map(seed in any::<u64>()) {
        let x = SimplicialSet::standard(4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for u in generators() {
            let fs: Vec<_> = (0..u.k()).map(|_| { let d = rng.gen_range(0..=2); random(&mut rng, &x, d) }).collect();
            prop_assert!(leibniz_holds(&x, &u, &fs), "{}", u);
        }
    }

    #[test]
    fn cup_one_is_a_commutativity_homotopy(seed in any::<u64>(), p in 0usize..=2, q in 0usize..=2) {
        let x = SimplicialSet::rp2();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random(&mut rng, &x, p);
        let g = random(&mut rng, &x, q);
        prop_assume!(p + q >= 1 && p + q <= 2);
        // δ(f ∪₁ g) = (−1)^{p+q+1} (f ∪ g − (−1)^{pq} g ∪ f) + δf ∪₁ g + (−1)^p f ∪₁ δg
        let lhs = coboundary(&x, &cup_i(&x, 1, &f, &g).unwrap().unwrap());
        let fg = cup_i(&x, 0, &f, &g).unwrap().unwrap();
        let gf = cup_i(&x, 0, &g, &f).unwrap().unwrap();
        let mut comm = if p * q % 2 == 1 { fg.plus(&gf) } else { fg.minus(&gf) };
        if (p + q) % 2 == 0 {
            comm = negate(&comm);
        }
        let a = cup_i(&x, 1, &coboundary(&x, &f), &g).unwrap().unwrap();
        let b = cup_i(&x, 1, &f, &coboundary(&x, &g)).unwrap().unwrap();
        let rhs = comm.plus(&a).plus(&if p % 2 == 1 { negate(&b) } else { b });
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn coalgebra_condition_is_sharp() {
    for m in 0..=2 {
        for x in latpath::paths::all_paths(5, 3) {
            if x.complexity() > m {
                continue;
            }
            for y in sphere_simplices(m, x.n()) {
                assert!(coalgebra_check(m, &x, &y).unwrap(), "{x} on S^{m}");
            }
        }
    }
    let w = coalgebra_witness(2);
    assert!(!coalgebra_check(2, &w, &SimplicialOperator::identity(2)).unwrap());
    assert!(coalgebra_check(2, &w, &SimplicialOperator::identity(1)).is_err());
}

#[test]
fn single_colour_paths_always_satisfy_the_coalgebra_condition() {
    for x in latpath::paths::all_paths(4, 3).into_iter().filter(|x| x.k() == 1) {
        for m in 0..=3 {
            for y in sphere_simplices(m, x.n()) {
                assert!(coalgebra_check(m, &x, &y).unwrap());
            }
        }
    }
}

fn f2(f: &SimplicialCochain<Z>) -> SimplicialCochain<F2> {
    SimplicialCochain { degree: f.degree, values: f.values.iter().map(|&v| F2::new(v)).collect() }
}

#[test]
fn squares_are_natural_under_collapse() {
    let delta = SimplicialSet::standard(2);
    let sphere = SimplicialSet::sphere(2);
    let map = SimplicialMap::collapse_boundary(&delta, &sphere).unwrap();
    for f in cohomology_basis::<F2>(&sphere, 2) {
        let pulled = map.pullback(&f);
        for i in 0..=2 {
            let up = steenrod_square(&sphere, i, &f).unwrap();
            assert_eq!(map.pullback(&up), steenrod_square(&delta, i, &pulled).unwrap(), "Sq^{i}");
        }
        assert!(is_coboundary(&delta, &pulled));
    }
    // cochain-level naturality of every ∪_j, not only on cocycles
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in 0..=2 {
        for q in 0..=2 {
            let f = f2(&random(&mut rng, &sphere, p));
            let g = f2(&random(&mut rng, &sphere, q));
            for j in 0..=p + q {
                let up = cup_i(&sphere, j, &f, &g).unwrap().unwrap();
                let down = cup_i(&delta, j, &map.pullback(&f), &map.pullback(&g)).unwrap().unwrap();
                assert_eq!(map.pullback(&up), down);
            }
        }
    }
}

#[test]
fn squares_are_independent_of_the_representative() {
    let x = SimplicialSet::rp2();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let class = &cohomology_basis::<F2>(&x, 1)[0];
    let base = steenrod_square(&x, 1, class).unwrap();
    for _ in 0..5 {
        let g = f2(&random(&mut rng, &x, 0));
        let shifted = class.plus(&coboundary(&x, &g));
        let sq = steenrod_square(&x, 1, &shifted).unwrap();
        assert!(is_coboundary(&x, &sq.minus(&base)));
        // Sq^0 is the identity and Sq^p the cup square
        assert!(is_coboundary(&x, &steenrod_square(&x, 0, &shifted).unwrap().minus(&shifted)));
        let square = cup_i(&x, 0, &shifted, &shifted).unwrap().unwrap();
        assert_eq!(sq, square);
    }
}

#[test]
fn non_cocycles_are_rejected() {
    let x = SimplicialSet::standard(2);
    let f = SimplicialCochain { degree: 0, values: vec![F2::new(1), F2::new(0), F2::new(0)] };
    assert!(steenrod_square(&x, 0, &f).is_err());
}
