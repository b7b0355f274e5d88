use absorder::alternating::{abs_alternating, AlternatingContext};
use absorder::groups::{CoxeterDescriptor, ReflectionGroup};
use absorder::posets::abs_group;
use absorder::tuples::{
    alternating_chain_count, chain_count_row, colored_tuple_poset, colored_tuple_rank_polynomial, labeled_trees,
    tree_chain_formula, tuple_product, tuple_rank_polynomial, LabeledTree, TupleSpace,
};
use absorder::IntPolynomial;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn symmetric(n: usize) -> ReflectionGroup {
    ReflectionGroup::new(CoxeterDescriptor::symmetric(n)).unwrap()
}

#[test]
fn tree_formula_counts_maximal_chains() {
    for n in 2..=5 {
        for k in 1..n {
            let row = chain_count_row(n, k).unwrap();
            assert!(row.matches, "{row:?}");
        }
    }
    assert!(tree_chain_formula(4, 4).is_err());
    assert!(tree_chain_formula(3, 5).is_err());
}

#[test]
fn tuple_polynomials_are_exact_quotients() {
    for n in 2..=5 {
        for k in 1..n {
            let p = tuple_rank_polynomial(n, k).unwrap();
            assert_eq!(p, tuple_product(1, n, k), "({n},{k})");
            let quotient = symmetric(n).rank_polynomial().div_exact(&symmetric(n - k).rank_polynomial()).unwrap();
            assert!(quotient.has_nonnegative_coeffs());
            assert_eq!(quotient, p, "({n},{k})");
            let space = TupleSpace::new(n, k).unwrap();
            assert_eq!(space.points().len() as u128, factorial(n) / factorial(n - k));
        }
    }
}

#[test]
fn full_tuples_recover_the_symmetric_group() {
    for n in 2..=5 {
        let space = TupleSpace::new(n, n).unwrap();
        assert!(space.poset().is_isomorphic(&abs_group(&symmetric(n))), "n = {n}");
    }
}

#[test]
fn hurwitz_counts() {
    for n in 2..=6usize {
        let expected = factorial(n - 1) * (n as u128).pow(n as u32 - 2);
        assert_eq!(tree_chain_formula(n, n - 1).unwrap(), expected, "n = {n}");
        assert_eq!(abs_group(&symmetric(n)).count_maximal_chains(), expected, "n = {n}");
    }
    // (n-2)! Σ 2^{deg v0}, summed with the count C(m-2, d-1) (m-1)^{m-1-d}
    // of trees on m = n - 1 nodes whose first node has degree d.
    let binomial = |a: u128, b: u128| (0..b).fold(1u128, |acc, i| acc * (a - i) / (i + 1));
    for n in 3..=7usize {
        let m = (n - 1) as u128;
        let sum: u128 = (1..m).map(|d| binomial(m - 2, d - 1) * (m - 1).pow((m - 1 - d) as u32) * 2u128.pow(d as u32)).sum();
        assert_eq!(alternating_chain_count(n).unwrap(), factorial(n - 2) * sum, "n = {n}");
    }
    let ctx = AlternatingContext::with_first_generator(symmetric(6)).unwrap();
    assert_eq!(abs_alternating(&ctx).count_maximal_chains(), 10368);
}

#[test]
fn prufer_codes_give_every_labelled_tree() {
    for m in 2..=6usize {
        let trees = labeled_trees(m);
        assert_eq!(trees.len(), m.pow(m as u32 - 2));
        assert!(trees.iter().all(LabeledTree::is_tree));
        let mut edge_sets: Vec<Vec<(usize, usize)>> = trees
            .iter()
            .map(|t| {
                let mut e: Vec<_> = t.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
                e.sort_unstable();
                e
            })
            .collect();
        edge_sets.sort();
        edge_sets.dedup();
        assert_eq!(edge_sets.len(), trees.len(), "m = {m}");
    }
    let star = LabeledTree::from_prufer(4, &[0, 0]);
    assert_eq!(star.valency(0), 3);
}

#[test]
fn uncolored_tuples_match_the_stated_product() {
    for n in 2..=4 {
        for k in 1..n {
            let rep = colored_tuple_rank_polynomial(1, n, k).unwrap();
            assert!(rep.holds, "{rep:?}");
        }
    }
}

#[test]
fn colored_tuple_polynomials_by_brute_force() {
    // Observed rank polynomial: ∏_{i=n-k+1}^{n} (1 + (ri - 1) q).
    for (r, n) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
        for k in 1..n {
            let (p, _) = colored_tuple_poset(r, n, k).unwrap();
            assert_eq!(p.len() as u128, (r as u128).pow(k as u32) * factorial(n) / factorial(n - k));
            let observed = IntPolynomial::linear_product((n - k + 1..=n).map(|i| (r * i) as i64 - 1));
            assert_eq!(p.rank_polynomial(), observed, "G({r},{n}), k = {k}");
            let rep = colored_tuple_rank_polynomial(r, n, k).unwrap();
            assert!(rep.stabilizer_modular && rep.matches_quotient, "{rep:?}");
        }
    }
}
