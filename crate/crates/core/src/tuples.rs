//! Ordered tuples of distinct letters under `S_n`, colored tuples under
//! `G(r,n)`, and the labeled-tree formula for their maximal chains.

use rayon::prelude::*;
use serde::Serialize;

use crate::cosets::{is_modular, Subgroup};
use crate::error::{Error, Result};
use crate::groups::{CoxeterDescriptor, ReflectionGroup};
use crate::poly::IntPolynomial;
use crate::posets::{build_absolute_order, ActionGraph, RankedPoset};

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// `X_{n,k}`: ordered `k`-tuples of distinct letters from `1..=n`, with base
/// point `(n-k+1, …, n)`.
pub struct TupleSpace {
    pub n: usize,
    pub k: usize,
    poset: RankedPoset,
    points: Vec<Vec<u8>>,
}

impl TupleSpace {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        let g = ReflectionGroup::new(CoxeterDescriptor::symmetric(n))?;
        let base: Vec<u8> = ((n - k + 1)..=n).map(|a| a as u8).collect();
        let graph = ActionGraph::explore(base, &g.reflections().elements, |t, x: &Vec<u8>| {
            let p = t.as_perm().expect("permutation");
            x.iter().map(|&a| p.apply(a as usize - 1) as u8 + 1).collect()
        });
        let poset = build_absolute_order(&graph, |x| format!("{x:?}"));
        Ok(Self { n, k, poset, points: graph.points().to_vec() })
    }

    pub fn poset(&self) -> &RankedPoset {
        &self.poset
    }

    pub fn points(&self) -> &[Vec<u8>] {
        &self.points
    }

    pub fn rank_polynomial(&self) -> IntPolynomial {
        self.poset.rank_polynomial()
    }
}

/// `∏_{i=n-k}^{n-1} (1 + r·i·q)`.
pub fn tuple_product(r: usize, n: usize, k: usize) -> IntPolynomial {
    IntPolynomial::linear_product(((n - k)..n).map(|i| (r * i) as i64))
}

/// Rank polynomial of `Abs(X_{n,k})`, computed from the action.
pub fn tuple_rank_polynomial(n: usize, k: usize) -> Result<IntPolynomial> {
    Ok(TupleSpace::new(n, k)?.rank_polynomial())
}

/// A labeled tree on nodes `0..nodes`; node 0 plays the role of `v₀`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledTree {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl LabeledTree {
    /// Decodes a Prüfer sequence of length `nodes - 2`.
    pub fn from_prufer(nodes: usize, seq: &[usize]) -> Self {
        assert_eq!(seq.len() + 2, nodes.max(2), "Prüfer sequence length");
        let mut degree = vec![1usize; nodes];
        for &s in seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(nodes.saturating_sub(1));
        for &s in seq {
            let leaf = (0..nodes).find(|&v| degree[v] == 1).expect("a leaf exists");
            edges.push((leaf.min(s), leaf.max(s)));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..nodes).filter(|&v| degree[v] == 1).collect();
        if let [a, b] = rest[..] {
            edges.push((a, b));
        }
        edges.sort_unstable();
        Self { nodes, edges }
    }

    pub fn valency(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.nodes {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.nodes).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                p[x] = find(p, p[x]);
            }
            p[x]
        }
        self.edges.iter().all(|&(a, b)| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
            ra != rb
        })
    }
}

/// All `m^{m-2}` labeled trees on `m ≥ 2` nodes.
pub fn labeled_trees(m: usize) -> Vec<LabeledTree> {
    assert!(m >= 2, "trees need at least two nodes");
    let len = m - 2;
    let total = m.pow(len as u32);
    (0..total)
        .into_par_iter()
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % m;
                    code /= m;
                    d
                })
                .collect();
            LabeledTree::from_prufer(m, &seq)
        })
        .collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `k! Σ_Γ (n-k)^{d_Γ(v₀)}` over trees on `{v₀, …, v_k}`, for `1 ≤ k < n`.
pub fn tree_chain_formula(n: usize, k: usize) -> Result<u128> {
    check_nk(n, k)?;
    if k == n {
        return Err(Error::InvalidArgument(format!("the tree formula needs k < n, got n={n}, k={k}")));
    }
    let base = (n - k) as u128;
    let sum: u128 = labeled_trees(k + 1).par_iter().map(|t| base.pow(t.valency(0) as u32)).sum();
    Ok(factorial(k) * sum)
}

/// `(n-2)! Σ_Γ 2^{d_Γ(v₀)}` over trees on `{v₀, …, v_{n-2}}`.
pub fn alternating_chain_count(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("need n >= 3, got {n}")));
    }
    tree_chain_formula(n, n - 2)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainCountRow {
    pub n: usize,
    pub k: usize,
    pub formula: u128,
    pub brute_force: u128,
    pub matches: bool,
}

pub fn chain_count_row(n: usize, k: usize) -> Result<ChainCountRow> {
    let formula = tree_chain_formula(n, k)?;
    let brute_force = TupleSpace::new(n, k)?.poset().count_maximal_chains();
    Ok(ChainCountRow { n, k, formula, brute_force, matches: formula == brute_force })
}

/// The `G(r,n)` action on `k`-tuples of distinct `r`-colored letters, base
/// point `((n-k+1, 0), …, (n, 0))`.
pub fn colored_tuple_poset(r: usize, n: usize, k: usize) -> Result<(RankedPoset, ReflectionGroup)> {
    check_nk(n, k)?;
    let g = ReflectionGroup::new(CoxeterDescriptor::colored(r, n))?;
    let base: Vec<(u8, u8)> = ((n - k)..n).map(|a| (a as u8, 0)).collect();
    let graph = ActionGraph::explore(base, &g.reflections().elements, |t, x: &Vec<(u8, u8)>| {
        let c = t.as_colored().expect("colored permutation");
        x.iter()
            .map(|&(a, col)| {
                let (b, d) = c.apply(a as usize, col);
                (b as u8, d)
            })
            .collect()
    });
    let poset = build_absolute_order(&graph, |x| {
        let parts: Vec<String> = x.iter().map(|&(a, c)| format!("{}^{c}", a + 1)).collect();
        format!("({})", parts.join(","))
    });
    Ok((poset, g))
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoredTupleReport {
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub points: usize,
    pub rank_polynomial: IntPolynomial,
    /// `∏_{i=n-k}^{n-1} (1 + r·i·q)`.
    pub stated_product: IntPolynomial,
    pub matches_stated: bool,
    /// `G(r,n)_T(q) / G(r,n-k)_T(q)`.
    pub quotient: Option<IntPolynomial>,
    pub matches_quotient: bool,
    pub stabilizer_order: usize,
    pub expected_stabilizer_order: usize,
    pub stabilizer_modular: bool,
    pub holds: bool,
}

/// Brute-force rank polynomial of colored tuples, compared against the
/// product formula and against the modular quotient.
pub fn colored_tuple_rank_polynomial(r: usize, n: usize, k: usize) -> Result<ColoredTupleReport> {
    let (poset, g) = colored_tuple_poset(r, n, k)?;
    let fixed = |w: usize| {
        let c = g.element(w).as_colored().expect("colored permutation");
        ((n - k)..n).all(|a| c.apply(a, 0) == (a, 0))
    };
    let members: Vec<usize> = (0..g.len()).filter(|&w| fixed(w)).collect();
    let h = Subgroup::from_members(&g, &members)?;
    let stabilizer_modular = is_modular(&g, &h);
    let rank_polynomial = poset.rank_polynomial();
    let stated_product = tuple_product(r, n, k);
    let quotient = g.rank_polynomial().div_exact(&h.ambient_rank_polynomial(&g));
    let matches_stated = rank_polynomial == stated_product;
    let matches_quotient = quotient.as_ref() == Some(&rank_polynomial);
    let expected_stabilizer_order = r.pow((n - k) as u32) * factorial(n - k) as usize;
    Ok(ColoredTupleReport {
        r,
        n,
        k,
        points: poset.len(),
        holds: matches_stated && stabilizer_modular,
        rank_polynomial,
        stated_product,
        matches_stated,
        quotient,
        matches_quotient,
        stabilizer_order: h.len(),
        expected_stabilizer_order,
        stabilizer_modular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_polynomials() {
        assert_eq!(tuple_rank_polynomial(4, 2).unwrap().coeffs(), &[1, 5, 6]);
        assert_eq!(tuple_rank_polynomial(5, 1).unwrap().coeffs(), &[1, 4]);
        assert_eq!(tuple_rank_polynomial(4, 3).unwrap(), IntPolynomial::linear_product([1, 2, 3]));
        let x = TupleSpace::new(5, 2).unwrap();
        assert_eq!(x.points().len(), 20);
        assert_eq!(x.points()[0], vec![4, 5]);
        assert!(TupleSpace::new(3, 0).is_err());
    }

    #[test]
    fn prufer_trees() {
        assert_eq!(labeled_trees(2), vec![LabeledTree { nodes: 2, edges: vec![(0, 1)] }]);
        for m in 2..=6 {
            let trees = labeled_trees(m);
            assert_eq!(trees.len(), m.pow(m as u32 - 2));
            assert!(trees.iter().all(LabeledTree::is_tree));
            let mut sorted: Vec<_> = trees.iter().map(|t| t.edges.clone()).collect();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), trees.len());
        }
        let star = LabeledTree::from_prufer(4, &[0, 0]);
        assert_eq!(star.valency(0), 3);
    }

    #[test]
    fn tree_formula_examples() {
        assert_eq!(tree_chain_formula(3, 2).unwrap(), 6);
        assert_eq!(tree_chain_formula(5, 2).unwrap(), 30);
        for n in 2..=6 {
            assert_eq!(tree_chain_formula(n, 1).unwrap(), n as u128 - 1);
        }
        assert_eq!(alternating_chain_count(3).unwrap(), 2);
        assert_eq!(alternating_chain_count(4).unwrap(), 16);
        assert!(tree_chain_formula(3, 3).is_err());
    }

    #[test]
    fn brute_force_chains() {
        for (n, k) in [(3, 1), (3, 2), (4, 2), (5, 2)] {
            let row = chain_count_row(n, k).unwrap();
            assert!(row.matches, "{row:?}");
        }
    }

    #[test]
    fn colored_tuples() {
        let rep = colored_tuple_rank_polynomial(1, 3, 2).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.rank_polynomial, tuple_rank_polynomial(3, 2).unwrap());
        let rep = colored_tuple_rank_polynomial(2, 3, 1).unwrap();
        assert_eq!(rep.points, 6);
        assert_eq!(rep.stabilizer_order, rep.expected_stabilizer_order);
        assert!(rep.stabilizer_modular && rep.matches_quotient);
        // Six points cannot carry the five-element product 1 + 4q.
        assert_eq!(rep.stated_product.coeffs(), &[1, 4]);
        assert_eq!(rep.rank_polynomial.coeffs(), &[1, 5]);
    }
}
