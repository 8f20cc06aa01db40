//! Brute-force Weyl orbit routes against the closed form.

use std::collections::HashSet;

use dirac_core::dirac::{
    compare_marked_nodes, eigenvalue, eigenvalue_closed, eigenvalue_restricted_w,
    spin_highest_weights, verify_lambda_lemma, Method, Options,
};
use dirac_core::par::Execution;
use dirac_core::rational::rat;
use dirac_core::rootsys::{build_root_system, Family, WeightVec};
use dirac_core::symspace::{
    complex_grassmannian2, find_entry, quaternionic_projective, real_grassmannian4, SymmetricPair,
};
use dirac_core::weyl::{inversion_set, OrbitTable, ReducedWord};
use num_traits::Signed;

fn feasible_pairs() -> Vec<SymmetricPair> {
    let mut out: Vec<SymmetricPair> = (1..=3).map(|m| quaternionic_projective(m).unwrap()).collect();
    out.extend([2, 4].map(|m| complex_grassmannian2(m).unwrap()));
    out.extend([4, 6].map(|m| real_grassmannian4(m).unwrap()));
    out.push(find_entry("G2").unwrap().build(None, false).unwrap());
    out.push(find_entry("E6").unwrap().build(None, false).unwrap());
    out
}

#[test]
fn all_routes_agree() {
    let opts = Options::default();
    for p in feasible_pairs() {
        let want = eigenvalue_closed(&p, &opts).unwrap().lambda_sq;
        for m in Method::ALL {
            let got = eigenvalue(&p, m, &opts).unwrap();
            assert_eq!(got.lambda_sq, want, "{} via {m}", p.name());
        }
    }
}

#[test]
fn sequential_matches_parallel() {
    let p = find_entry("E6").unwrap().build(None, false).unwrap();
    let seq = Options {
        exec: Execution::Sequential,
        ..Options::default()
    };
    let par = Options {
        exec: Execution::Parallel,
        ..Options::default()
    };
    for m in [Method::WeylMin, Method::RestrictedW] {
        assert_eq!(eigenvalue(&p, m, &seq).unwrap(), eigenvalue(&p, m, &par).unwrap());
    }
}

#[test]
fn lambda_lemma() {
    for p in feasible_pairs() {
        let rep = verify_lambda_lemma(&p, &Options::default()).unwrap();
        assert!(rep.holds(), "{}: {} vs {}", p.name(), rep.orbit_max, rep.closed);
    }
}

#[test]
fn e6_lemma_offset() {
    let p = find_entry("E6").unwrap().build(None, false).unwrap();
    let rep = verify_lambda_lemma(&p, &Options::default()).unwrap();
    let base = p.g().inner(p.delta_g(), p.delta_k()).unwrap();
    assert_eq!(rep.closed, base + rat(7, 12));
}

#[test]
fn g2_lemma_exhaustive() {
    let p = find_entry("G2").unwrap().build(None, false).unwrap();
    let table = OrbitTable::enumerate(p.g(), p.delta_g(), 100).unwrap();
    assert_eq!(table.len(), 12);
    let rep = verify_lambda_lemma(&p, &Options::default()).unwrap();
    for i in 0..table.len() {
        let v = p.g().inner(&table.point(i), p.delta_k()).unwrap();
        assert!(v <= rep.closed);
    }
}

/// Literal test of `w.Phi_G+ ⊇ Phi_K+`, with `w` rebuilt from its word.
fn contains_k_roots(p: &SymmetricPair, word: &ReducedWord) -> bool {
    let g = p.g();
    let image: HashSet<WeightVec> = g
        .positive_roots()
        .iter()
        .map(|r| word.apply(g, r).unwrap())
        .collect();
    p.k_positive_roots().all(|a| image.contains(a))
}

#[test]
fn membership_by_pairing_equals_set_inclusion() {
    for p in feasible_pairs().into_iter().take(8) {
        let table = OrbitTable::enumerate(p.g(), p.delta_g(), 100_000).unwrap();
        let by_pairing: HashSet<ReducedWord> = spin_highest_weights(&p, &Options::default())
            .unwrap()
            .into_iter()
            .map(|w| w.word)
            .collect();
        let by_inclusion: HashSet<ReducedWord> = (0..table.len())
            .map(|i| table.word(i))
            .filter(|w| contains_k_roots(&p, w))
            .collect();
        assert_eq!(by_pairing, by_inclusion, "{}", p.name());
        assert!(by_pairing.contains(&ReducedWord::default()));
    }
}

#[test]
fn restricted_count_is_index_of_k_weyl_group() {
    // |W_G| / |W_K|: HP^2 48/16, Gr2(C^4) 24/4, G2 12/4, E6 51840/1440
    let cases = [
        (quaternionic_projective(2).unwrap(), 3),
        (complex_grassmannian2(2).unwrap(), 6),
        (find_entry("G2").unwrap().build(None, false).unwrap(), 3),
        (find_entry("E6").unwrap().build(None, false).unwrap(), 36),
    ];
    for (p, want) in cases {
        let got = spin_highest_weights(&p, &Options::default()).unwrap().len();
        assert_eq!(got, want, "{}", p.name());
    }
}

#[test]
fn spin_weights_are_k_dominant() {
    for p in feasible_pairs() {
        let simple = p.k_simple_roots();
        for w in spin_highest_weights(&p, &Options::default()).unwrap() {
            for a in &simple {
                assert!(!p.g().inner(&w.weight, a).unwrap().is_negative(), "{}", p.name());
            }
        }
    }
}

#[test]
fn restricted_minimizer_lies_in_w() {
    for p in feasible_pairs() {
        let r = eigenvalue_restricted_w(&p, &Options::default()).unwrap();
        assert!(contains_k_roots(&p, r.witness.as_ref().unwrap()), "{}", p.name());
    }
}

#[test]
fn inversion_sets_are_zero_one_combinations() {
    for f in [Family::G2, Family::C(2), Family::C(3), Family::A(3)] {
        let rs = build_root_system(f).unwrap();
        let table = OrbitTable::enumerate(&rs, rs.weyl_vector(), 1000).unwrap();
        for i in 0..table.len() {
            let word = table.word(i);
            let inv = inversion_set(&rs, &word).unwrap();
            let idx: HashSet<usize> = inv
                .iter()
                .map(|r| rs.positive_root_index(r).expect("positive"))
                .collect();
            assert_eq!(idx.len(), inv.len(), "{f}");
            let sum = WeightVec::sum(rs.basis(), &inv);
            assert_eq!(sum, rs.weyl_vector() - &table.point(i), "{f}");
        }
    }
}

#[test]
fn marked_node_constructions_match_coordinate_models() {
    let cases: Vec<(SymmetricPair, i64)> = vec![
        (quaternionic_projective(1).unwrap(), 2),
        (quaternionic_projective(2).unwrap(), 2),
        (quaternionic_projective(3).unwrap(), 2),
        (complex_grassmannian2(2).unwrap(), 1),
        (complex_grassmannian2(4).unwrap(), 1),
        (real_grassmannian4(4).unwrap(), 2),
    ];
    for (p, mark) in cases {
        let nodes = compare_marked_nodes(&p, mark).unwrap();
        assert!(nodes.iter().any(|c| c.full_match()), "{}: {nodes:?}", p.name());
    }
}

#[test]
fn hp_node_one_matches_value_but_not_lambda_set() {
    // node 1 of C3 gives Sp(1) x Sp(2) too, ordered so that L is nonempty
    let nodes = compare_marked_nodes(&quaternionic_projective(2).unwrap(), 2).unwrap();
    let first = nodes.iter().find(|c| c.node == 0).unwrap();
    assert!(first.n && first.lambda_sq);
    assert!(!first.lambda_values);
    assert!(nodes.iter().find(|c| c.node == 1).unwrap().full_match());
}
