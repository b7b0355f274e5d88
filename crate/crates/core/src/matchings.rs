//! Perfect matchings of `Ω_n = {1, -1, …, n, -n}`, the flip graph, the
//! balanced colored permutations `C(r,n)` with their absolute order, and the
//! correspondences between them.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::cosets::{self, abs_cosets, EmbeddedSubgroup};
use crate::error::{Error, Result};
use crate::groups::{
    omega_index, ColoredPerm, CoxeterDescriptor, GroupElement, Perm, ReflectionGroup, SignedPerm,
};
use crate::posets::{self, abs_group_with_points, find_isomorphism, ActionGraph, RankedPoset};
use crate::poly::IntPolynomial;

/// A perfect matching of `Ω_n`: arcs sorted internally and among
/// themselves by the order `1 < -1 < 2 < -2 < …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    arcs: Vec<(i8, i8)>,
}

fn arc(a: i8, b: i8) -> (i8, i8) {
    if omega_index(a) <= omega_index(b) {
        (a, b)
    } else {
        (b, a)
    }
}

impl Matching {
    pub fn new(arcs: Vec<(i8, i8)>) -> Result<Self> {
        let n = arcs.len();
        let mut seen = vec![false; 2 * n];
        for &(a, b) in &arcs {
            for x in [a, b] {
                let i = omega_index(x);
                if x == 0 || i >= 2 * n || seen[i] {
                    return Err(Error::Parse {
                        input: format!("{arcs:?}"),
                        reason: "arcs must partition {±1..±n}".into(),
                    });
                }
                seen[i] = true;
            }
        }
        let mut arcs: Vec<(i8, i8)> = arcs.into_iter().map(|(a, b)| arc(a, b)).collect();
        arcs.sort_by_key(|&(a, _)| omega_index(a));
        Ok(Self { arcs })
    }

    /// `{{-i, i}}`.
    pub fn base(n: usize) -> Self {
        Self { arcs: (1..=n as i8).map(|i| (i, -i)).collect() }
    }

    pub fn n(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(i8, i8)] {
        &self.arcs
    }

    /// The partner of `a`.
    pub fn partner(&self, a: i8) -> i8 {
        self.arcs
            .iter()
            .find_map(|&(x, y)| if x == a { Some(y) } else if y == a { Some(x) } else { None })
            .expect("every letter is matched")
    }

    /// Parses `"{1,-2}{2,-1}"`.
    pub fn parse(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let mut arcs = Vec::new();
        for part in s.split('}').map(str::trim).filter(|p| !p.is_empty()) {
            let inner = part.strip_prefix('{').ok_or_else(|| err("expected '{'"))?;
            let nums: Vec<i8> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i8>().map_err(|_| err("bad letter")))
                .collect::<Result<_>>()?;
            match nums.as_slice() {
                &[a, b] => arcs.push((a, b)),
                _ => return Err(err("each arc has two letters")),
            }
        }
        Self::new(arcs).map_err(|_| err("arcs must partition {±1..±n}"))
    }

    /// Applies a permutation of the positions of `Ω_n` (0-based in the
    /// order `1, -1, 2, -2, …`).
    pub fn act(&self, p: &Perm) -> Matching {
        let image = |a: i8| crate::groups::omega_letter(p.apply(omega_index(a)));
        Matching::new(self.arcs.iter().map(|&(a, b)| (image(a), image(b))).collect()).expect("bijection")
    }

    /// Adjacent in the flip graph: the symmetric difference is a 4-cycle.
    pub fn is_flip_of(&self, other: &Matching) -> bool {
        let only_here = self.arcs.iter().filter(|a| !other.arcs.contains(a)).count();
        self.n() == other.n() && only_here == 2
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.arcs {
            write!(f, "{{{a},{b}}}")?;
        }
        Ok(())
    }
}

/// All perfect matchings of `Ω_n` in lexicographic order of their arcs.
pub fn all_matchings(n: usize) -> Vec<Matching> {
    fn go(rest: &[i8], acc: &mut Vec<(i8, i8)>, out: &mut Vec<Matching>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(Matching::new(acc.clone()).expect("partition"));
            return;
        };
        for i in 0..tail.len() {
            let mut others = tail.to_vec();
            let partner = others.remove(i);
            acc.push((first, partner));
            go(&others, acc, out);
            acc.pop();
        }
    }
    let letters: Vec<i8> = (0..2 * n).map(crate::groups::omega_letter).collect();
    let mut out = Vec::new();
    go(&letters, &mut Vec::new(), &mut out);
    out
}

/// The flip graph `Δ_n`: vertices and adjacency lists.
pub fn delta_graph(n: usize) -> (Vec<Matching>, Vec<Vec<usize>>) {
    let ms = all_matchings(n);
    let adj = (0..ms.len())
        .into_par_iter()
        .map(|i| (0..ms.len()).filter(|&j| j != i && ms[i].is_flip_of(&ms[j])).collect())
        .collect();
    (ms, adj)
}

/// `Δ_n` as labelled vertices and sorted undirected edges, for export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlipGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl FlipGraph {
    pub fn new(n: usize) -> Self {
        let (ms, adj) = delta_graph(n);
        let edges = adj
            .iter()
            .enumerate()
            .flat_map(|(i, js)| js.iter().filter(move |&&j| i < j).map(move |&j| [i, j]))
            .collect();
        Self { vertices: ms.iter().map(ToString::to_string).collect(), edges }
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n  node [shape=plaintext];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{v}\"];\n"));
        }
        for [a, b] in &self.edges {
            out.push_str(&format!("  n{a} -- n{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Geodesic order on a connected graph from `base`.
pub fn geodesic_poset(adj: &[Vec<usize>], base: usize, labels: Vec<String>) -> Result<RankedPoset> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[base] = 0;
    let mut queue = VecDeque::from([base]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    let unreached = dist.iter().filter(|&&d| d == usize::MAX).count();
    if unreached > 0 {
        return Err(Error::NotTransitive { unreached, total: adj.len() });
    }
    let covers = (0..adj.len())
        .flat_map(|x| adj[x].iter().filter(|&&y| dist[y] == dist[x] + 1).map(move |&y| (x, y)).collect_vec())
        .collect();
    RankedPoset::from_covers(labels, dist, covers)
}

/// `Abs(M_n)` with base `{{-i, i}}`, elements in lexicographic order.
pub fn abs_matchings(n: usize) -> RankedPoset {
    abs_matchings_from(n, &Matching::base(n)).expect("base is a matching")
}

pub fn abs_matchings_from(n: usize, base: &Matching) -> Result<RankedPoset> {
    let (ms, adj) = delta_graph(n);
    let b = ms.iter().position(|m| m == base).ok_or_else(|| Error::Parse {
        input: base.to_string(),
        reason: format!("not a matching of {} letters", 2 * n),
    })?;
    geodesic_poset(&adj, b, ms.iter().map(ToString::to_string).collect())
}

/// The map `M_n → C(2,n)`: orient each nontrivial cycle of `x ∪ x_0`
/// starting with the arc `-k → k` for the least such `k`, then send the
/// tail `a` of each directed arc `(a, b)` of `x` to `π(-a) = b`.
pub fn matching_to_balanced(x: &Matching) -> SignedPerm {
    let n = x.n();
    let mut images: Vec<i8> = (1..=n as i8).collect();
    let mut visited = vec![false; n + 1];
    for k in 1..=n as i8 {
        if visited[k as usize] || x.partner(k) == -k {
            continue;
        }
        let mut v = k;
        loop {
            visited[v.unsigned_abs() as usize] = true;
            let b = x.partner(v);
            let from = -v;
            if from > 0 {
                images[from as usize - 1] = b;
            } else {
                images[(-from) as usize - 1] = -b;
            }
            v = -b;
            if v == k {
                break;
            }
        }
    }
    SignedPerm::from_images(images).expect("orientation yields a signed permutation")
}

/// The inverse map: arcs `{-i, i}` for fixed points and `{a_1, -a_2}, …,
/// {a_k, -a_1}` for each cycle `(a_1 … a_k)` of `π` starting at its least
/// absolute value, taken positive.
pub fn balanced_to_matching(pi: &SignedPerm) -> Matching {
    let n = pi.degree();
    let mut arcs = Vec::new();
    let mut done = vec![false; n + 1];
    for a in 1..=n as i8 {
        if done[a as usize] {
            continue;
        }
        if pi.apply(a) == a {
            arcs.push((a, -a));
            done[a as usize] = true;
            continue;
        }
        let mut cycle = vec![a];
        let mut y = pi.apply(a);
        while y != a && y != -a {
            cycle.push(y);
            y = pi.apply(y);
        }
        for &c in &cycle {
            done[c.unsigned_abs() as usize] = true;
        }
        for (i, &c) in cycle.iter().enumerate() {
            let next = cycle[(i + 1) % cycle.len()];
            arcs.push((c, -next));
        }
    }
    Matching::new(arcs).expect("balanced permutation gives a matching")
}

/// The balanced elements `C(r,n)` of `G(r,n)`, in group order.
pub fn balanced_elements(g: &ReflectionGroup) -> Vec<usize> {
    (0..g.len()).filter(|&x| g.element(x).as_colored().is_some_and(ColoredPerm::is_balanced)).collect()
}

/// `Abs(C(r,n))`: covers `u → τu` for balanced pseudoreflections `τ`
/// raising length. Returns the poset, its group, and the group index of
/// each poset element.
pub fn abs_balanced(r: usize, n: usize) -> Result<(RankedPoset, ReflectionGroup, Vec<usize>)> {
    let g = ReflectionGroup::new(CoxeterDescriptor::colored(r, n))?;
    let members = balanced_elements(&g);
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let taus: Vec<usize> = (0..g.reflections().len())
        .filter(|&k| g.reflections().elements[k].as_colored().is_some_and(ColoredPerm::is_balanced))
        .collect();
    let mut covers = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &k in &taus {
            let v = g.left_mul_reflection(k, u);
            if let Some(&j) = pos.get(&v) {
                if g.length(v) == g.length(u) + 1 {
                    covers.push((i, j));
                }
            }
        }
    }
    covers.sort_unstable();
    covers.dedup();
    let poset = RankedPoset::from_covers(
        members.iter().map(|&x| g.label(x)).collect(),
        members.iter().map(|&x| g.length(x)).collect(),
        covers,
    )?;
    Ok((poset, g, members))
}

/// `∏_{i=1}^{n-1} (1 + r i q)`.
pub fn balanced_product(r: usize, n: usize) -> IntPolynomial {
    IntPolynomial::linear_product((1..n).map(|i| (r * i) as i64))
}

fn forget_colors(w: &GroupElement) -> GroupElement {
    GroupElement::Perm(w.as_colored().expect("colored").perm().clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct PsiReport {
    pub r: usize,
    pub n: usize,
    pub balanced_count: usize,
    pub length_preserved: bool,
    pub covers_preserved: bool,
    pub unique_lifts: bool,
    pub fiber_sizes_match: bool,
    pub intervals_isomorphic: bool,
    pub holds: bool,
}

/// Checks that forgetting colors is a rank-preserving epimorphism
/// `Abs(C(r,n)) → Abs(S_n)` mapping maximal intervals isomorphically.
pub fn psi_epimorphism_check(r: usize, n: usize) -> Result<PsiReport> {
    let (pc, g, members) = abs_balanced(r, n)?;
    let s = ReflectionGroup::new(CoxeterDescriptor::symmetric(n))?;
    let (ps, s_points) = abs_group_with_points(&s);
    let s_pos: HashMap<usize, usize> = s_points.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let psi: Vec<usize> = members
        .iter()
        .map(|&x| s_pos[&s.index_of(&forget_colors(g.element(x))).expect("permutation")])
        .collect();

    let length_preserved = (0..pc.len()).all(|i| pc.rank(i) == ps.rank(psi[i]));
    let covers_preserved = pc.covers().iter().all(|&(a, b)| ps.upper_covers(psi[a]).contains(&psi[b]));
    let unique_lifts = (0..pc.len()).all(|u| {
        ps.lower_covers(psi[u])
            .iter()
            .all(|&target| pc.lower_covers(u).iter().filter(|&&v| psi[v] == target).count() == 1)
    });
    let mut fibers = vec![0usize; ps.len()];
    for &p in &psi {
        fibers[p] += 1;
    }
    let fiber_sizes_match = (0..ps.len()).all(|p| fibers[p] == r.pow(ps.rank(p) as u32));
    let min = pc.minimum().expect("identity");
    let intervals_isomorphic = pc.maximal_elements().par_iter().all(|&top| {
        let members = pc.interval_members(min, top).expect("interval");
        let lo = ps.minimum().expect("identity");
        let Ok(target) = ps.interval_members(lo, psi[top]) else { return false };
        let source = pc.restrict(&members).expect("interval");
        let image = ps.restrict(&target).expect("interval");
        let map: Vec<usize> =
            members.iter().map(|&x| target.iter().position(|&y| y == psi[x]).unwrap_or(usize::MAX)).collect();
        source.is_isomorphism(&image, &map)
    });
    let holds = length_preserved && covers_preserved && unique_lifts && fiber_sizes_match && intervals_isomorphic;
    Ok(PsiReport {
        r,
        n,
        balanced_count: pc.len(),
        length_preserved,
        covers_preserved,
        unique_lifts,
        fiber_sizes_match,
        intervals_isomorphic,
        holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub matchings: usize,
    pub round_trip: bool,
    pub inverse_round_trip: bool,
    pub base_to_identity: bool,
    pub delta_edges: usize,
    pub gamma_edges: usize,
    pub graph_isomorphism: bool,
    /// Whether `f` carries the cover relation of `Abs(M_n)` onto that of
    /// `Abs(C(2,n))`.
    pub order_isomorphism: bool,
    pub rank_polynomial: IntPolynomial,
    pub holds: bool,
}

/// `f` and `g` are inverse bijections `M_n ↔ C(2,n)` carrying the flip
/// graph onto the graph joining `π, σ` when `π^{-1} σ` is a
/// pseudoreflection.
pub fn bijection_check(n: usize) -> Result<BijectionReport> {
    let (ms, adj) = delta_graph(n);
    let images: Vec<SignedPerm> = ms.par_iter().map(matching_to_balanced).collect();
    let round_trip = ms.iter().zip(&images).all(|(m, p)| balanced_to_matching(p) == *m);
    let g = ReflectionGroup::new(CoxeterDescriptor::colored(2, n))?;
    let balanced: Vec<SignedPerm> = balanced_elements(&g)
        .into_iter()
        .map(|x| g.element(x).as_colored().and_then(ColoredPerm::to_signed).expect("r = 2"))
        .collect();
    let inverse_round_trip = balanced.len() == ms.len()
        && balanced.iter().all(|p| matching_to_balanced(&balanced_to_matching(p)) == *p);
    let base = ms.iter().position(|m| *m == Matching::base(n)).expect("base");
    let base_to_identity = images[base].is_identity();

    let index: HashMap<&SignedPerm, usize> = images.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let t: Vec<SignedPerm> = g
        .reflections()
        .elements
        .iter()
        .map(|x| x.as_colored().and_then(ColoredPerm::to_signed).expect("r = 2"))
        .collect();
    let gamma: Vec<Vec<usize>> = (0..ms.len())
        .into_par_iter()
        .map(|i| {
            let mut nb: Vec<usize> =
                t.iter().filter_map(|tau| index.get(&images[i].compose(tau)).copied()).filter(|&j| j != i).collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect();
    let delta_edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let gamma_edges = gamma.iter().map(Vec::len).sum::<usize>() / 2;
    let graph_isomorphism = index.len() == images.len()
        && (0..ms.len()).all(|i| {
            let mut delta = adj[i].clone();
            delta.sort_unstable();
            gamma[i] == delta
        });
    let pm = geodesic_poset(&adj, base, ms.iter().map(ToString::to_string).collect())?;
    let pc = geodesic_poset(&gamma, base, images.iter().map(ToString::to_string).collect())?;
    let order_isomorphism = pm.is_isomorphism(&pc, &(0..ms.len()).collect::<Vec<_>>());
    let rank_polynomial = pm.rank_polynomial();
    let holds = round_trip && inverse_round_trip && base_to_identity && graph_isomorphism;
    Ok(BijectionReport {
        n,
        matchings: ms.len(),
        round_trip,
        inverse_round_trip,
        base_to_identity,
        delta_edges,
        gamma_edges,
        graph_isomorphism,
        order_isomorphism,
        rank_polynomial,
        holds,
    })
}

/// `∏_{i=0}^{n-1} (1 + 2 i q)`.
pub fn matching_product(n: usize) -> IntPolynomial {
    IntPolynomial::linear_product((0..n).map(|i| 2 * i as i64))
}

/// Whether `Abs(M_n)` is isomorphic to `Abs(S_{2n}/B_n)`.
pub fn matchings_match_cosets(n: usize) -> Result<bool> {
    let s = ReflectionGroup::new(CoxeterDescriptor::symmetric(2 * n))?;
    let h = EmbeddedSubgroup::hyperoctahedral_in_symmetric(&s)?;
    let (px, _) = abs_cosets(&s, &h.subgroup);
    Ok(abs_matchings(n).is_isomorphic(&px))
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiModularityWitness {
    pub n: usize,
    pub identity_holds: bool,
    pub group_polynomial: IntPolynomial,
    pub subgroup_polynomial: IntPolynomial,
    pub quotient_polynomial: IntPolynomial,
    pub modular: bool,
    /// An element of the embedded subgroup that is a single `2n`-cycle.
    pub witness: Option<String>,
    pub witness_length: Option<usize>,
}

/// `B_n ⊂ S_{2n}` satisfies the product identity with its own reflection
/// length, while a `2n`-cycle in the image rules out modularity.
pub fn quasi_modularity_bn_check(n: usize) -> Result<QuasiModularityWitness> {
    let s = ReflectionGroup::new(CoxeterDescriptor::symmetric(2 * n))?;
    let h = EmbeddedSubgroup::hyperoctahedral_in_symmetric(&s)?;
    let q = cosets::is_quasi_modular(&s, &h)?;
    let witness = h.subgroup.members().iter().copied().find(|&x| {
        s.element(x).as_perm().is_some_and(|p| p.cycles().len() == 1)
    });
    Ok(QuasiModularityWitness {
        n,
        identity_holds: q.holds,
        group_polynomial: q.group_polynomial,
        subgroup_polynomial: q.subgroup_polynomial,
        quotient_polynomial: q.quotient_polynomial,
        modular: cosets::is_modular(&s, &h.subgroup),
        witness: witness.map(|x| s.label(x)),
        witness_length: witness.map(|x| s.length(x)),
    })
}

/// Rank polynomial of the conjugation action of `S_n` on involutions with
/// `k` fixed points, based at `(1 2)(3 4)…`.
pub fn involution_rank_polynomial(n: usize, k: usize) -> Result<IntPolynomial> {
    if k > n || !(n - k).is_multiple_of(2) {
        return Err(Error::InvalidDescriptor(format!("no involution of {n} letters has {k} fixed points")));
    }
    let g = ReflectionGroup::new(CoxeterDescriptor::symmetric(n))?;
    let mut images: Vec<u8> = (0..n as u8).collect();
    for i in (0..n - k).step_by(2) {
        images.swap(i, i + 1);
    }
    let base = Perm::from_images(images).expect("involution");
    let graph = ActionGraph::explore(base, &g.reflections().elements, |t, x| {
        let t = t.as_perm().expect("permutation");
        t.compose(x).compose(t)
    });
    Ok(posets::build_absolute_order(&graph, ToString::to_string).rank_polynomial())
}

/// Size and mutual isomorphism of the maximal intervals of `Abs(M_n)`.
pub fn maximal_interval_sizes(n: usize) -> (Vec<usize>, bool) {
    let p = abs_matchings(n);
    let intervals = p.maximal_intervals();
    let sizes = intervals.iter().map(RankedPoset::len).collect();
    let same = intervals.windows(2).all(|w| find_isomorphism(&w[0], &w[1]).is_some());
    (sizes, same)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_format() {
        assert_eq!(all_matchings(1).len(), 1);
        assert_eq!(all_matchings(3).len(), 15);
        assert_eq!(all_matchings(4).len(), 105);
        let m = Matching::parse("{2,-1}{-2,1}").unwrap();
        assert_eq!(m.to_string(), "{1,-2}{-1,2}");
        assert_eq!(Matching::parse(&m.to_string()).unwrap(), m);
        assert!(Matching::parse("{1,1}{2,-2}").is_err());
        assert_eq!(Matching::base(2).to_string(), "{1,-1}{2,-2}");
    }

    #[test]
    fn flip_graphs() {
        let (ms, adj) = delta_graph(1);
        assert_eq!((ms.len(), adj[0].len()), (1, 0));
        let (ms, adj) = delta_graph(2);
        assert_eq!(ms.len(), 3);
        assert!(adj.iter().all(|a| a.len() == 2));
        let (ms, adj) = delta_graph(3);
        assert_eq!(ms.len(), 15);
        assert!(adj.iter().all(|a| a.len() == 6));
    }

    #[test]
    fn rank_polynomials() {
        assert_eq!(abs_matchings(2).rank_polynomial().coeffs(), &[1, 2]);
        assert_eq!(abs_matchings(3).rank_polynomial().coeffs(), &[1, 6, 8]);
        assert_eq!(abs_matchings(4).rank_polynomial().coeffs(), &[1, 12, 44, 48]);
        assert_eq!(abs_matchings(4).rank_polynomial(), matching_product(4));
    }

    #[test]
    fn bijection_examples() {
        let n = 2;
        assert!(matching_to_balanced(&Matching::base(n)).is_identity());
        let x = Matching::parse("{1,2}{-1,-2}").unwrap();
        // The orientation rule gives the balanced cycle (1 -2)(-1 2).
        let f = matching_to_balanced(&x);
        assert_eq!(f, SignedPerm::from_images(vec![-2, -1]).unwrap());
        assert_eq!(f.to_colored().to_string(), "[1,1; 2 1]");
        let y = Matching::parse("{1,-2}{2,-1}").unwrap();
        assert_eq!(matching_to_balanced(&y), SignedPerm::from_images(vec![2, 1]).unwrap());
        // Flips of two arcs {i, j}, {-i, -j} have no pseudoreflection
        // counterpart, so the flip graph has strictly more edges than the
        // pseudoreflection graph. Values cross-checked with networkx.
        let expected = [(1, 0, 0, true), (2, 3, 2, true), (3, 45, 30, true), (4, 630, 420, false)];
        for (n, delta, gamma, order_iso) in expected {
            let r = bijection_check(n).unwrap();
            assert!(r.round_trip && r.inverse_round_trip && r.base_to_identity, "{r:?}");
            assert_eq!((r.delta_edges, r.gamma_edges), (delta, gamma));
            assert_eq!(r.graph_isomorphism, n == 1);
            assert_eq!(r.order_isomorphism, order_iso);
        }
        let (pc, _, _) = abs_balanced(2, 4).unwrap();
        assert!(!abs_matchings(4).is_isomorphic(&pc));
        assert_eq!(abs_matchings(4).rank_polynomial(), pc.rank_polynomial());
    }

    #[test]
    fn balanced_orders() {
        let (p, _, _) = abs_balanced(2, 3).unwrap();
        assert_eq!(p.rank_polynomial(), IntPolynomial::linear_product([2, 4]));
        let (p, _, _) = abs_balanced(3, 2).unwrap();
        assert_eq!(p.rank_polynomial().coeffs(), &[1, 3]);
        let (c1, _, _) = abs_balanced(1, 4).unwrap();
        let s4 = posets::abs_group(&ReflectionGroup::new(CoxeterDescriptor::symmetric(4)).unwrap());
        assert!(c1.is_isomorphic(&s4));
        let (p, _, _) = abs_balanced(2, 2).unwrap();
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn balanced_set_is_not_a_subgroup_for_two_letters() {
        let g = ReflectionGroup::new(CoxeterDescriptor::colored(2, 2)).unwrap();
        let c = balanced_elements(&g);
        assert!(crate::cosets::Subgroup::from_members(&g, &c).is_err());
        for &x in &c {
            for w in 0..g.len() {
                let y = g.mul(g.mul(w, x), g.inverse(w));
                assert!(c.contains(&y));
            }
        }
    }

    #[test]
    fn psi_examples() {
        for (r, n) in [(2, 3), (3, 3), (2, 4)] {
            let rep = psi_epimorphism_check(r, n).unwrap();
            assert!(rep.holds, "{rep:?}");
        }
    }

    #[test]
    fn interval_sizes() {
        let (sizes, same) = maximal_interval_sizes(3);
        assert!(sizes.iter().all(|&s| s == 5) && same);
        let p = abs_matchings(3);
        let iv = &p.maximal_intervals()[0];
        assert_eq!(iv.rank_polynomial().coeffs(), &[1, 3, 1]);
        let (sizes, same) = maximal_interval_sizes(4);
        assert!(sizes.iter().all(|&s| s == 14) && same);
    }

    #[test]
    fn cosets_and_quasi_modularity() {
        assert!(matchings_match_cosets(2).unwrap());
        let w = quasi_modularity_bn_check(2).unwrap();
        assert!(w.identity_holds && !w.modular);
        assert_eq!(w.witness_length, Some(3));
        assert_eq!(w.subgroup_polynomial, IntPolynomial::linear_product([1, 3]));
    }

    #[test]
    fn base_point_independence() {
        let a = abs_matchings(3);
        let other = Matching::parse("{1,2}{-1,-2}{3,-3}").unwrap();
        let b = abs_matchings_from(3, &other).unwrap();
        assert!(a.is_isomorphic(&b));
    }

    #[test]
    fn involutions() {
        assert_eq!(involution_rank_polynomial(4, 0).unwrap().eval(1), 3);
        assert_eq!(involution_rank_polynomial(5, 1).unwrap().eval(1), 15);
        assert!(involution_rank_polynomial(4, 1).is_err());
    }
}
