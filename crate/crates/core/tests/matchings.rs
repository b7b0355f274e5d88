use absorder::cosets::Subgroup;
use absorder::groups::{CoxeterDescriptor, ReflectionGroup};
use absorder::matchings::{
    abs_matchings, abs_matchings_from, all_matchings, balanced_elements, balanced_to_matching, matching_product,
    matching_to_balanced, matchings_match_cosets, psi_epimorphism_check, quasi_modularity_bn_check, Matching,
};
use proptest::prelude::*;

#[test]
fn base_point_does_not_matter() {
    for n in 1..=3 {
        let p = abs_matchings(n);
        for base in all_matchings(n) {
            let q = abs_matchings_from(n, &base).unwrap();
            assert!(p.is_isomorphic(&q), "n = {n}, base {base}");
        }
    }
    let p = abs_matchings(4);
    let all = all_matchings(4);
    for base in &all {
        assert_eq!(abs_matchings_from(4, base).unwrap().rank_polynomial(), matching_product(4));
    }
    for base in all.iter().step_by(17) {
        assert!(p.is_isomorphic(&abs_matchings_from(4, base).unwrap()), "base {base}");
    }
}

#[test]
fn balanced_sets_are_conjugation_closed_but_not_subgroups() {
    for (r, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)] {
        let g = ReflectionGroup::new(CoxeterDescriptor::colored(r, n)).unwrap();
        let c = balanced_elements(&g);
        let expected: usize = (1..n).map(|i| 1 + r * i).product();
        assert_eq!(c.len(), expected, "C({r},{n})");
        let set: std::collections::HashSet<usize> = c.iter().copied().collect();
        for w in 0..g.len() {
            for &x in &c {
                assert!(set.contains(&g.mul(g.mul(w, x), g.inverse(w))), "C({r},{n})");
            }
        }
        assert!(Subgroup::from_members(&g, &c).is_err(), "C({r},{n}) is closed under products");
    }
}

#[test]
fn forgetting_colors_is_an_epimorphism() {
    for (r, n) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let rep = psi_epimorphism_check(r, n).unwrap();
        assert!(rep.holds, "{rep:?}");
    }
}

#[test]
fn matchings_agree_with_hyperoctahedral_cosets() {
    for n in 1..=3 {
        assert!(matchings_match_cosets(n).unwrap(), "n = {n}");
    }
}

#[test]
fn hyperoctahedral_in_symmetric_is_quasi_modular_only() {
    for n in 2..=3 {
        let w = quasi_modularity_bn_check(n).unwrap();
        assert!(w.identity_holds && !w.modular, "{w:?}");
        assert_eq!(w.witness_length, Some(2 * n - 1));
    }
}

#[test]
fn known_images() {
    let m = Matching::parse("{1,-2}{-1,2}").unwrap();
    assert_eq!(matching_to_balanced(&m).images(), &[2, 1]);
    assert_eq!(matching_to_balanced(&Matching::base(3)).images(), &[1, 2, 3]);
}

fn matching_from_shuffle(letters: &[i8]) -> Matching {
    Matching::new(letters.chunks(2).map(|c| (c[0], c[1])).collect()).unwrap()
}

proptest! {
    #[test]
    fn matchings_round_trip_through_balanced_elements(
        letters in (1usize..=7).prop_flat_map(|n| {
            Just((1..=n as i8).flat_map(|i| [i, -i]).collect::<Vec<_>>()).prop_shuffle()
        })
    ) {
        let m = matching_from_shuffle(&letters);
        let pi = matching_to_balanced(&m);
        prop_assert!(pi.to_colored().is_balanced());
        prop_assert_eq!(balanced_to_matching(&pi), m.clone());
        let back = matching_to_balanced(&balanced_to_matching(&pi));
        prop_assert_eq!(back, pi);
    }
}
