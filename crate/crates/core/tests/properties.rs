//! Validators against the brute-force oracle, and invariants of the
//! constructions under relabelling.

use opgroupoid::algebra::{validate_algebra, OpAlgebra};
use opgroupoid::corpus::s3;
use opgroupoid::groupoid::{
    action_to_covering, coset_cover, covering_to_action, is_covering, subgroups, validate_groupoid, FinGroupoid,
    GpdMorphism,
};
use opgroupoid::oracle;
use proptest::prelude::*;

fn table(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0..n, n), n)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    // arbitrary small tables: mostly invalid, sometimes a group
    #[test]
    fn algebra_validator_matches_oracle(n in 1usize..=3, seed in prop::collection::vec(0usize..3, 9), star in table(3)) {
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| seed[a * 3 + b] % n).collect()).collect();
        let neg: Vec<usize> = (0..n).map(|a| seed[(a + 4) % 9] % n).collect();
        let a = OpAlgebra::new(n, 0, add, neg).unwrap();
        prop_assert_eq!(validate_algebra(&a).is_ok(), oracle::brute_algebra_ok(&a));
        let mul = (0..n).map(|x| (0..n).map(|y| star[x][y] % n).collect()).collect();
        let r = a.with_binary("*", mul).unwrap();
        prop_assert_eq!(validate_algebra(&r).is_ok(), oracle::brute_algebra_ok(&r));
    }

    #[test]
    fn groupoid_validator_matches_oracle(comp in table(4)) {
        let g = FinGroupoid::one_object(4, 0, |a, b| comp[a][b]).unwrap();
        prop_assert_eq!(validate_groupoid(&g).is_ok(), oracle::brute_groupoid_ok(&g));
    }

    // k ↦ m·k on Z/n is a covering iff it is bijective
    #[test]
    fn covering_test_matches_oracle(n in 1usize..=12, m in 0usize..12) {
        let g = FinGroupoid::one_object(n, 0, |a, b| (a + b) % n).unwrap();
        let f = GpdMorphism::new(g.clone(), g, (0..n).map(|k| k * m % n).collect(), vec![0]).unwrap();
        let main = is_covering(&f).unwrap();
        prop_assert_eq!(main, oracle::brute_check_covering(&f));
        prop_assert_eq!(main, gcd(m, n) == 1);
    }

    #[test]
    fn relabelled_groupoids_are_isomorphic(arrows in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let a = s3();
        let g = FinGroupoid::one_object(6, 0, |x, y| a.add(x, y)).unwrap();
        let h = g.relabel(&[0], &arrows).unwrap();
        let w = oracle::find_groupoid_iso(&g, &h).unwrap();
        let maps = w.maps().unwrap();
        // the witness is a functor
        let f = GpdMorphism::new(g.clone(), h.clone(), maps[1].clone(), maps[0].clone()).unwrap();
        prop_assert!(oracle::brute_morphism_ok(&f));
    }

    // Φ∘Γ is the identity on coset actions, whatever the labelling
    #[test]
    fn phi_gamma_is_identity(k in 0usize..6, perm_seed in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let a = s3();
        let g = FinGroupoid::one_object(6, 0, |x, y| a.add(x, y)).unwrap();
        let subs = subgroups(&g, 0).unwrap();
        let cc = coset_cover(&g, 0, &subs[k % subs.len()]).unwrap();
        let n = cc.action.set_size;
        let mut perm: Vec<usize> = perm_seed.into_iter().filter(|&x| x < n).collect();
        perm.truncate(n);
        let act = cc.action.relabel_set(&perm).unwrap();
        let back = covering_to_action(&action_to_covering(&act).unwrap()).unwrap();
        prop_assert_eq!(back, act);
    }
}
