//! Membership in computed closures: representatives lie in their own
//! components and products of members are members.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zariski_core::field::{Rationals, QQ};
use zariski_core::{fixtures, member, zariski_closure, ClosureConfig, GroupDescription, Matrix};

fn ints(rows: &[Vec<i64>]) -> Matrix<Rationals> {
    Matrix::from_ints(QQ, rows)
}

fn closure(gens: &[Matrix<Rationals>]) -> GroupDescription<Rationals> {
    zariski_closure(&QQ, gens[0].rows(), gens, &ClosureConfig::default()).unwrap().0
}

/// A random word of length up to `len` in the generators and their inverses.
fn word(rng: &mut ChaCha8Rng, gens: &[Matrix<Rationals>], len: usize) -> Matrix<Rationals> {
    let n = gens[0].rows();
    let mut w = Matrix::identity(QQ, n);
    for _ in 0..rng.gen_range(0..=len) {
        let g = &gens[rng.gen_range(0..gens.len())];
        w = w.mul(&if rng.gen_bool(0.5) { g.clone() } else { g.inverse().unwrap() });
    }
    w
}

fn check(gens: &[Matrix<Rationals>], pairs: usize, seed: u64) -> GroupDescription<Rationals> {
    let cfg = ClosureConfig::default();
    let g = closure(gens);
    for (i, b) in g.components.iter().enumerate() {
        assert_eq!(member(&g, b, &cfg).unwrap().component_index, Some(i));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let x = word(&mut rng, gens, 6);
        let y = word(&mut rng, gens, 6);
        assert!(member(&g, &x, &cfg).unwrap().member);
        assert!(member(&g, &x.mul(&y), &cfg).unwrap().member);
    }
    g
}

#[test]
fn dihedral_group_of_order_eight() {
    let gens = [ints(&[vec![0, -1], vec![1, 0]]), ints(&[vec![1, 0], vec![0, -1]])];
    let g = check(&gens, 20, 1);
    assert_eq!((g.lie_algebra.dim(), g.components.len()), (0, 8));
    let cfg = ClosureConfig::default();
    assert!(!member(&g, &ints(&[vec![1, 1], vec![0, 1]]), &cfg).unwrap().member);
    assert!(!member(&g, &ints(&[vec![0, 1], vec![1, 1]]), &cfg).unwrap().member);
}

#[test]
fn torus_with_a_reflection() {
    let gens = [ints(&[vec![-1, 0], vec![0, 1]]), ints(&[vec![4, 0], vec![0, 1]]).mul(&ints(&[vec![1, 0], vec![0, 4]]).inverse().unwrap())];
    let g = check(&gens, 20, 2);
    assert_eq!((g.lie_algebra.dim(), g.components.len()), (1, 2));
    // diag(3, 1/3) is on the identity component, diag(-3, 1/3) on the other
    let d = |a: i64, b: i64| ints(&[vec![a, 0], vec![0, 1]]).mul(&ints(&[vec![1, 0], vec![0, b]]).inverse().unwrap());
    let cfg = ClosureConfig::default();
    assert_eq!(member(&g, &d(3, 3), &cfg).unwrap().component_index, Some(0));
    assert_eq!(member(&g, &d(-3, 3), &cfg).unwrap().component_index, Some(1));
    assert!(!member(&g, &d(3, 1), &cfg).unwrap().member);
}

#[test]
fn b2_fixture_words() {
    let g = check(&fixtures::b2(), 5, 3);
    assert_eq!(g.components.len(), 2);
}
