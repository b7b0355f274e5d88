use absorder::cosets::{abs_cosets, is_modular, Subgroup};
use absorder::groups::{parse_element, ReflectionGroup};
use absorder::posets::{self, abs_group, abs_group_with_points, find_isomorphism, RankedPoset};
use absorder::IntPolynomial;
use proptest::prelude::*;

fn group(d: &str) -> ReflectionGroup {
    ReflectionGroup::new(d.parse().unwrap()).unwrap()
}

fn subgroup(g: &ReflectionGroup, gens: &str) -> Subgroup {
    let idx: Vec<usize> =
        gens.split(';').map(|s| g.index_of(&parse_element(g.desc(), s).unwrap()).unwrap()).collect();
    Subgroup::generated(g, &idx)
}

#[test]
fn left_action_reproduces_length_order() {
    for d in ["S4", "B3", "D4", "I2(6)", "G(3,2)"] {
        let g = group(d);
        let (p, points) = abs_group_with_points(&g);
        assert_eq!(p.len(), g.len());
        for x in 0..p.len() {
            assert_eq!(p.rank(x), g.length(points[x]));
            for y in 0..p.len() {
                assert_eq!(p.leq(x, y), g.leq(points[x], points[y]), "{d}: {} vs {}", p.label(x), p.label(y));
            }
        }
    }
}

#[test]
fn covers_join_consecutive_ranks() {
    let g = group("B3");
    let h = subgroup(&g, "(1 2)");
    let (p, _) = abs_cosets(&g, &h);
    for &(lo, hi) in p.covers() {
        assert_eq!(p.rank(hi), p.rank(lo) + 1);
    }
    assert_eq!(p.minimum(), Some(0));
    for x in 0..p.len() {
        assert!(p.leq(0, x));
    }
}

#[test]
fn two_transposition_quotient_fixture() {
    // S4 acting on the six cosets of <(1 2), (3 4)>.
    let g = group("S4");
    let h = subgroup(&g, "(1 2);(3 4)");
    assert!(!is_modular(&g, &h));
    let (p, table) = abs_cosets(&g, &h);
    assert_eq!(table.len(), 6);
    assert_eq!(p.rank_polynomial(), IntPolynomial::new(vec![1, 4, 1]));
    assert_eq!(p.covers().len(), 8);
    assert_eq!(p.is_graded(), (true, 2));
    let maximal = p.maximal_elements();
    assert_eq!(maximal.len(), 1);
    assert_eq!(p.rank(maximal[0]), 2);
    assert_eq!(p.count_maximal_chains(), 4);
}

#[test]
fn small_absolute_orders() {
    let p = abs_group(&group("S3"));
    let atoms = posets::antichain_over_minimum(3);
    assert_eq!(p.rank_polynomial(), IntPolynomial::new(vec![1, 3, 2]));
    let below = p.restrict(&(0..p.len()).filter(|&x| p.rank(x) <= 1).collect::<Vec<_>>()).unwrap();
    assert!(below.is_isomorphic(&atoms));
    let top = p.maximal_elements()[0];
    assert!(p.interval(0, top).unwrap().is_isomorphic(&posets::antichain_over_minimum(3).clone_with_top()));
    assert!(abs_group(&group("B1")).is_isomorphic(&posets::chain(1)));
}

trait WithTop {
    fn clone_with_top(&self) -> RankedPoset;
}

impl WithTop for RankedPoset {
    fn clone_with_top(&self) -> RankedPoset {
        let top = self.len();
        let mut labels = self.labels().to_vec();
        labels.push("top".into());
        let mut ranks = self.ranks().to_vec();
        ranks.push(self.max_rank() + 1);
        let mut covers = self.covers().to_vec();
        covers.extend(self.maximal_elements().into_iter().map(|m| (m, top)));
        RankedPoset::from_covers(labels, ranks, covers).unwrap()
    }
}

#[test]
fn json_round_trip() {
    let p = abs_group(&group("B2"));
    let back = RankedPoset::from_json(&p.to_json()).unwrap();
    assert_eq!(back.labels(), p.labels());
    assert_eq!(back.covers(), p.covers());
    assert!(p.to_dot("B2").starts_with("digraph"));
}

#[test]
fn distinct_groups_are_distinguished() {
    // B2 and I2(4) are the same Coxeter group in different models.
    let b2 = abs_group(&group("B2"));
    assert!(b2.is_isomorphic(&abs_group(&group("I2(4)"))));
    assert!(!b2.is_isomorphic(&abs_group(&group("S3"))));
    // D3 is A3 in a signed-permutation model.
    assert!(abs_group(&group("D3")).is_isomorphic(&abs_group(&group("S4"))));
}

fn relabelled(p: &RankedPoset, perm: &[usize]) -> RankedPoset {
    // perm[old] = new, with the minimum kept at index 0 by construction.
    let n = p.len();
    let mut labels = vec![String::new(); n];
    let mut ranks = vec![0; n];
    for x in 0..n {
        labels[perm[x]] = p.label(x).to_string();
        ranks[perm[x]] = p.rank(x);
    }
    let covers = p.covers().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    RankedPoset::from_covers(labels, ranks, covers).unwrap()
}

fn abs_b3() -> &'static RankedPoset {
    static P: std::sync::OnceLock<RankedPoset> = std::sync::OnceLock::new();
    P.get_or_init(|| abs_group(&group("B3")))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn isomorphism_search_recovers_relabellings(perm in Just((0..48usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = abs_b3();
        let q = relabelled(p, &perm);
        let map = find_isomorphism(p, &q);
        prop_assert!(map.is_some());
        prop_assert!(p.is_isomorphism(&q, &map.unwrap()));
    }

    #[test]
    fn polynomial_products_divide_back(a in prop::collection::vec(-5i64..6, 1..5), b in prop::collection::vec(-5i64..6, 1..5)) {
        let (a, b) = (IntPolynomial::new(a), IntPolynomial::new(b));
        let prod = &a * &b;
        if !b.is_zero() {
            prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
        }
        prop_assert_eq!(prod.eval(2), a.eval(2) * b.eval(2));
    }
}
