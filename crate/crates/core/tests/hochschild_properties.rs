//! Hochschild cochains of small algebras: the differential, cup and
//! pre-Lie products, the cyclic rotation and cohomology in low degrees.

use latpath::checks::{deligne_algebras, random_cochain};
use latpath::hochschild::{
    cup, cyclic_action, gerstenhaber_bracket, hochschild_differential, hochschild_ranks, is_coboundary, pre_lie,
    Cochain, FinAlgebra,
};
use latpath::{F2, Q, Z};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sign(odd: bool) -> Q {
    Q::from_integer((if odd { -1 } else { 1 }).into())
}

fn d(a: &FinAlgebra<Q>, f: &Cochain<Q>) -> Cochain<Q> {
    hochschild_differential(a, f).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn differential_squares_to_zero(seed in any::<u64>(), arity in 0usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, a) in deligne_algebras(seed, 3) {
            let f = random_cochain(&mut rng, a.rank(), arity, false, &a);
            prop_assert!(d(&a, &d(&a, &f)).is_zero(), "{}", name);
        }
    }

    #[test]
    fn cup_is_a_derivation(seed in any::<u64>(), p in 0usize..=2, q in 0usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, a) in deligne_algebras(seed, 2) {
            let f = random_cochain(&mut rng, a.rank(), p, false, &a);
            let g = random_cochain(&mut rng, a.rank(), q, false, &a);
            let lhs = d(&a, &cup(&a, &f, &g).unwrap());
            let rhs = cup(&a, &d(&a, &f), &g).unwrap().plus(&cup(&a, &f, &d(&a, &g)).unwrap().scaled(&sign(p % 2 == 1)));
            prop_assert_eq!(lhs, rhs, "{}", name);
        }
    }

    #[test]
    fn pre_lie_associator_is_symmetric(seed in any::<u64>(), p in 1usize..=2, q in 1usize..=2, r in 1usize..=2) {
        // (f∘g)∘h − f∘(g∘h) is graded symmetric in g and h for |x| = arity − 1
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = FinAlgebra::<Q>::upper_triangular2();
        let f = random_cochain(&mut rng, 3, p, false, &a);
        let g = random_cochain(&mut rng, 3, q, false, &a);
        let h = random_cochain(&mut rng, 3, r, false, &a);
        let o = |x: &Cochain<Q>, y: &Cochain<Q>| pre_lie(&a, x, y).unwrap();
        let assoc = |x: &Cochain<Q>, y: &Cochain<Q>, z: &Cochain<Q>| o(&o(x, y), z).minus(&o(x, &o(y, z)));
        let twist = sign((q + 1) * (r + 1) % 2 == 1);
        prop_assert_eq!(assoc(&f, &g, &h), assoc(&f, &h, &g).scaled(&twist));
    }
}

#[test]
fn bracket_descends_to_cohomology() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, a) in deligne_algebras(12, 4) {
        let rk = a.rank();
        for p in 0..=2 {
            for q in 0..=2 - p {
                // f a cocycle, d(g) a coboundary: [f, dg] = ±d[f, g]
                let f = d(&a, &random_cochain(&mut rng, rk, p, false, &a));
                let g = random_cochain(&mut rng, rk, q, false, &a);
                let dg = d(&a, &g);
                let br = gerstenhaber_bracket(&a, &f, &dg).unwrap();
                assert!(d(&a, &br).is_zero(), "{name}: arities {p}, {q}");
                assert!(is_coboundary(&a, &br).unwrap(), "{name}: arities {p}, {q}");
            }
        }
    }
}

#[test]
fn cyclic_rotation_has_order_arity_plus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for a in [FinAlgebra::<Q>::dual_numbers(), FinAlgebra::group_z2(), FinAlgebra::matrices2()] {
        for n in 0..=3 {
            let f = random_cochain(&mut rng, a.rank(), n, false, &a);
            let mut g = f.clone();
            for step in 1..=n + 1 {
                g = cyclic_action(&a, &g).unwrap();
                assert_eq!(g == f, step == n + 1 || n == 0, "arity {n}, step {step}");
            }
        }
    }
}

#[test]
fn algebras_round_trip_through_json() {
    for name in ["ground", "dual", "m2", "z2", "triangular"] {
        let a = FinAlgebra::<Q>::builtin(name).unwrap();
        let b = FinAlgebra::<Q>::from_json(&a.to_json()).unwrap();
        assert_eq!(a.rank(), b.rank());
        for x in 0..a.rank() {
            for y in 0..a.rank() {
                assert_eq!(a.product(x, y), b.product(x, y), "{name}");
            }
        }
        assert_eq!(a.unit(), b.unit());
        assert_eq!(a.pairing().is_some(), b.pairing().is_some());
    }
}

#[test]
fn separable_algebras_have_only_a_centre() {
    let ranks = |a: &FinAlgebra<Q>| hochschild_ranks(a, 3).unwrap().iter().map(|g| g.rank).collect::<Vec<_>>();
    assert_eq!(ranks(&FinAlgebra::ground()), [1, 0, 0, 0]);
    assert_eq!(ranks(&FinAlgebra::group_z2()), [2, 0, 0, 0]);
    assert_eq!(ranks(&FinAlgebra::matrices2()), [1, 0, 0, 0]);
    assert_eq!(ranks(&FinAlgebra::upper_triangular2()), [1, 0, 0, 0]);
}

#[test]
fn dual_numbers_over_other_rings() {
    // the periodic resolution gives the complex A --0--> A --2x--> A --0--> …
    let z = hochschild_ranks(&FinAlgebra::<Z>::dual_numbers(), 4).unwrap();
    assert_eq!(z.iter().map(|g| g.rank).collect::<Vec<_>>(), [2, 1, 1, 1, 1]);
    let torsion: Vec<Vec<i64>> = z.iter().map(|g| g.torsion.clone()).collect();
    assert_eq!(torsion, [vec![], vec![], vec![2], vec![], vec![2]]);
    let f2 = hochschild_ranks(&FinAlgebra::<F2>::dual_numbers(), 4).unwrap();
    assert_eq!(f2.iter().map(|g| g.rank).collect::<Vec<_>>(), [2, 2, 2, 2, 2]);
}
