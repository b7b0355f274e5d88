//! The absolute order on a transitive action, built from the graph of
//! reflections, and generic algorithms on ranked posets.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::hash::Hash;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{GroupElement, ReflectionGroup};
use crate::poly::IntPolynomial;

/// The graph `Γ` of an action: vertices are the points of `X`, with an edge
/// from `x` to `t·x` for every generator `t`.
///
/// Points are indexed in breadth-first discovery order from the base, so
/// the base has index 0.
#[derive(Clone, Debug)]
pub struct ActionGraph<P> {
    points: Vec<P>,
    index: HashMap<P, usize>,
    neighbors: Vec<Vec<usize>>,
    dist: Vec<usize>,
}

impl<P: Clone + Eq + Hash> ActionGraph<P> {
    /// Explores the orbit of `base`.
    pub fn explore<F>(base: P, gens: &[GroupElement], apply: F) -> Self
    where
        F: Fn(&GroupElement, &P) -> P,
    {
        let mut points = vec![base.clone()];
        let mut index = HashMap::from([(base, 0)]);
        let mut neighbors: Vec<Vec<usize>> = Vec::new();
        let mut dist = vec![0];
        let mut head = 0;
        while head < points.len() {
            let x = points[head].clone();
            let mut out = Vec::with_capacity(gens.len());
            for t in gens {
                let y = apply(t, &x);
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        let j = points.len();
                        index.insert(y.clone(), j);
                        points.push(y);
                        dist.push(dist[head] + 1);
                        j
                    }
                };
                out.push(j);
            }
            neighbors.push(out);
            head += 1;
        }
        Self { points, index, neighbors, dist }
    }

    /// Explores from `points[base]` and fails unless every listed point is
    /// reached.
    pub fn transitive<F>(points: &[P], base: usize, gens: &[GroupElement], apply: F) -> Result<Self>
    where
        F: Fn(&GroupElement, &P) -> P,
    {
        let graph = Self::explore(points[base].clone(), gens, apply);
        let unreached = points.iter().filter(|p| !graph.index.contains_key(p)).count();
        if unreached > 0 {
            return Err(Error::NotTransitive { unreached, total: points.len() });
        }
        Ok(graph)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn index_of(&self, p: &P) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `neighbors(x)[k]` is the index of `t_k · x`.
    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    /// Distance from the base, i.e. the absolute length of each point.
    pub fn distances(&self) -> &[usize] {
        &self.dist
    }

    /// Undirected edge set `{x, t·x}` without loops, as sorted pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .neighbors
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().filter(move |&&y| y != x).map(move |&y| (x.min(y), x.max(y))))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }
}

/// The absolute order on the points of an action graph: ranks are distances
/// from the base and covers are the graph edges joining consecutive ranks.
pub fn build_absolute_order<P, L>(graph: &ActionGraph<P>, label: L) -> RankedPoset
where
    P: Clone + Eq + Hash,
    L: Fn(&P) -> String,
{
    let ranks = graph.dist.clone();
    let mut covers: Vec<(usize, usize)> = graph
        .edges()
        .into_iter()
        .filter_map(|(a, b)| match () {
            _ if ranks[b] == ranks[a] + 1 => Some((a, b)),
            _ if ranks[a] == ranks[b] + 1 => Some((b, a)),
            _ => None,
        })
        .collect();
    covers.sort_unstable();
    let labels = graph.points.iter().map(label).collect();
    RankedPoset::from_covers(labels, ranks, covers).expect("graph distances give a locally graded order")
}

/// `Abs(W)` from the left multiplication action of `W` on itself.
pub fn abs_group(g: &ReflectionGroup) -> RankedPoset {
    abs_group_with_points(g).0
}

/// As [`abs_group`], also returning the group index of each poset element.
pub fn abs_group_with_points(g: &ReflectionGroup) -> (RankedPoset, Vec<usize>) {
    let graph = ActionGraph::explore(g.group().identity(), &g.reflections().elements, |t, &x| {
        let k = g.reflections().elements.iter().position(|s| s == t).expect("generator");
        g.left_mul_reflection(k, x)
    });
    let poset = build_absolute_order(&graph, |&x| g.label(x));
    (poset, graph.points)
}

/// A finite poset with a rank function, stored by its cover relations.
#[derive(Debug)]
pub struct RankedPoset {
    labels: Vec<String>,
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    below: OnceLock<Vec<FixedBitSet>>,
}

impl Clone for RankedPoset {
    fn clone(&self) -> Self {
        Self {
            labels: self.labels.clone(),
            ranks: self.ranks.clone(),
            covers: self.covers.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
            below: OnceLock::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetElementJson {
    pub id: usize,
    pub label: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<PosetElementJson>,
    pub covers: Vec<[usize; 2]>,
}

impl RankedPoset {
    /// Validates that every cover raises rank by one and that there is a
    /// unique element of rank 0 below everything else.
    pub fn from_covers(labels: Vec<String>, ranks: Vec<usize>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = ranks.len();
        if labels.len() != n {
            return Err(Error::PosetInvariant("label count differs from element count".into()));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            if lo >= n || hi >= n {
                return Err(Error::PosetInvariant(format!("cover ({lo}, {hi}) out of range")));
            }
            if ranks[hi] != ranks[lo] + 1 {
                return Err(Error::PosetInvariant(format!(
                    "cover ({lo}, {hi}) joins ranks {} and {}",
                    ranks[lo], ranks[hi]
                )));
            }
            up[lo].push(hi);
            down[hi].push(lo);
        }
        if n > 0 {
            let zeros = ranks.iter().filter(|&&r| r == 0).count();
            if zeros != 1 {
                return Err(Error::PosetInvariant(format!("{zeros} elements of rank 0")));
            }
            if let Some(x) = (0..n).find(|&x| ranks[x] > 0 && down[x].is_empty()) {
                return Err(Error::PosetInvariant(format!("element {x} of rank {} has no lower cover", ranks[x])));
            }
        }
        Ok(Self { labels, ranks, covers, up, down, below: OnceLock::new() })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn minimum(&self) -> Option<usize> {
        self.ranks.iter().position(|&r| r == 0)
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].is_empty()).collect()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Elements sorted by rank, then index.
    fn by_rank(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.ranks[x], x));
        order
    }

    fn below_sets(&self) -> &[FixedBitSet] {
        self.below.get_or_init(|| {
            let n = self.len();
            let mut below = vec![FixedBitSet::with_capacity(n); n];
            for x in self.by_rank() {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(x);
                for &d in &self.down[x] {
                    set.union_with(&below[d]);
                }
                below[x] = set;
            }
            below
        })
    }

    /// `u ≤ v`.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.below_sets()[v].contains(u)
    }

    /// Number of elements `≤ x`.
    pub fn down_set_size(&self, x: usize) -> usize {
        self.below_sets()[x].count_ones(..)
    }

    pub fn rank_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_degrees(self.ranks.iter().copied())
    }

    pub fn max_rank(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    /// Whether all maximal elements share one rank, with the top rank.
    pub fn is_graded(&self) -> (bool, usize) {
        let tops: Vec<usize> = self.maximal_elements().iter().map(|&x| self.ranks[x]).collect();
        let top = tops.iter().copied().max().unwrap_or(0);
        (tops.iter().all(|&r| r == top), top)
    }

    /// Number of saturated chains from the minimum to each element.
    pub fn chain_counts(&self) -> Vec<u128> {
        let n = self.len();
        let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..n {
            levels.entry(self.ranks[x]).or_default().push(x);
        }
        let mut paths = vec![0u128; n];
        for (&r, level) in &levels {
            let values: Vec<u128> = level
                .par_iter()
                .map(|&x| if r == 0 { 1 } else { self.down[x].iter().map(|&d| paths[d]).sum() })
                .collect();
            for (&x, v) in level.iter().zip(values) {
                paths[x] = v;
            }
        }
        paths
    }

    /// Number of maximal chains.
    pub fn count_maximal_chains(&self) -> u128 {
        let paths = self.chain_counts();
        self.maximal_elements().iter().map(|&x| paths[x]).sum()
    }

    /// Whether `subset` is closed under going down.
    pub fn is_order_ideal(&self, subset: &[usize]) -> bool {
        let mut member = FixedBitSet::with_capacity(self.len());
        for &x in subset {
            member.insert(x);
        }
        subset.iter().all(|&x| self.down[x].iter().all(|&d| member.contains(d)))
    }

    /// The poset induced on a down-closed or convex subset, with ranks
    /// shifted so the least member has rank 0. Elements keep the order of
    /// `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Result<RankedPoset> {
        let pos: HashMap<usize, usize> = subset.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let base = subset.iter().map(|&x| self.ranks[x]).min().unwrap_or(0);
        let covers = self
            .covers
            .iter()
            .filter_map(|(lo, hi)| Some((*pos.get(lo)?, *pos.get(hi)?)))
            .collect();
        RankedPoset::from_covers(
            subset.iter().map(|&x| self.labels[x].clone()).collect(),
            subset.iter().map(|&x| self.ranks[x] - base).collect(),
            covers,
        )
    }

    /// Members of the closed interval `[lo, hi]`, sorted by index.
    pub fn interval_members(&self, lo: usize, hi: usize) -> Result<Vec<usize>> {
        if !self.leq(lo, hi) {
            return Err(Error::NotComparable { lo: self.labels[lo].clone(), hi: self.labels[hi].clone() });
        }
        let below = &self.below_sets()[hi];
        Ok(below.ones().filter(|&z| self.leq(lo, z)).collect())
    }

    pub fn interval(&self, lo: usize, hi: usize) -> Result<RankedPoset> {
        self.restrict(&self.interval_members(lo, hi)?)
    }

    /// Intervals from the minimum to each maximal element.
    pub fn maximal_intervals(&self) -> Vec<RankedPoset> {
        let Some(min) = self.minimum() else { return Vec::new() };
        self.maximal_elements()
            .into_iter()
            .map(|m| self.interval(min, m).expect("minimum lies below everything"))
            .collect()
    }

    /// Whether some rank-preserving bijection maps covers onto covers.
    pub fn is_isomorphic(&self, other: &RankedPoset) -> bool {
        find_isomorphism(self, other).is_some()
    }

    /// Whether `map` (indexed by elements of `self`) is an isomorphism
    /// onto `other`.
    pub fn is_isomorphism(&self, other: &RankedPoset, map: &[usize]) -> bool {
        if self.len() != other.len() || map.len() != self.len() || self.covers.len() != other.covers.len() {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(other.len());
        for &y in map {
            if y >= other.len() || seen.contains(y) {
                return false;
            }
            seen.insert(y);
        }
        (0..self.len()).all(|x| self.ranks[x] == other.ranks[map[x]])
            && self.covers.iter().all(|&(lo, hi)| other.up[map[lo]].contains(&map[hi]))
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: (0..self.len())
                .map(|id| PosetElementJson { id, label: self.labels[id].clone(), rank: self.ranks[id] })
                .collect(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<Self> {
        let mut elements = json.elements.clone();
        elements.sort_by_key(|e| e.id);
        if elements.iter().enumerate().any(|(i, e)| e.id != i) {
            return Err(Error::PosetInvariant("element ids must be 0..n".into()));
        }
        RankedPoset::from_covers(
            elements.iter().map(|e| e.label.clone()).collect(),
            elements.iter().map(|e| e.rank).collect(),
            json.covers.iter().map(|&[a, b]| (a, b)).collect(),
        )
    }

    /// Graphviz source with one cluster of equal rank per level.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=plaintext];").unwrap();
        let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..self.len() {
            levels.entry(self.ranks[x]).or_default().push(x);
        }
        for (r, xs) in levels {
            writeln!(out, "  subgraph rank_{r} {{").unwrap();
            writeln!(out, "    rank=same;").unwrap();
            for x in xs {
                writeln!(out, "    n{x} [label=\"{}\"];", self.labels[x].replace('"', "\\\"")).unwrap();
            }
            writeln!(out, "  }}").unwrap();
        }
        for &(lo, hi) in &self.covers {
            writeln!(out, "  n{lo} -> n{hi};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Refines a joint coloring of both posets by iterating over neighbor
/// colors until the number of classes stabilises. Equal colors are
/// necessary for an isomorphism to pair two elements.
fn refine(p: &RankedPoset, q: &RankedPoset, mut colors: [Vec<usize>; 2]) -> [Vec<usize>; 2] {
    type Sig = (usize, Vec<usize>, Vec<usize>);
    let posets = [p, q];
    let mut classes = 0;
    loop {
        let mut ids: BTreeMap<Sig, usize> = BTreeMap::new();
        let sigs: Vec<Vec<Sig>> = posets
            .iter()
            .zip(&colors)
            .map(|(s, c)| {
                (0..s.len())
                    .map(|x| {
                        let mut d: Vec<usize> = s.down[x].iter().map(|&y| c[y]).collect();
                        let mut u: Vec<usize> = s.up[x].iter().map(|&y| c[y]).collect();
                        d.sort_unstable();
                        u.sort_unstable();
                        (c[x], d, u)
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        colors = [0, 1].map(|i| sigs[i].iter().map(|s| ids[s]).collect());
        if ids.len() == classes {
            return colors;
        }
        classes = ids.len();
    }
}

fn same_histogram(cp: &[usize], cq: &[usize]) -> bool {
    let mut hist: HashMap<usize, isize> = HashMap::new();
    for &c in cp {
        *hist.entry(c).or_default() += 1;
    }
    for &c in cq {
        *hist.entry(c).or_default() -= 1;
    }
    hist.values().all(|&v| v == 0)
}

/// Individualises one element of the smallest ambiguous class against each
/// candidate partner, refining after every choice.
fn search(p: &RankedPoset, q: &RankedPoset, colors: [Vec<usize>; 2]) -> Option<Vec<usize>> {
    let [cp, cq] = refine(p, q, colors);
    if !same_histogram(&cp, &cq) {
        return None;
    }
    let mut classes: HashMap<usize, (Vec<usize>, Vec<usize>)> = HashMap::new();
    for (x, &c) in cp.iter().enumerate() {
        classes.entry(c).or_default().0.push(x);
    }
    for (y, &c) in cq.iter().enumerate() {
        classes.entry(c).or_default().1.push(y);
    }
    let ambiguous = classes.values().filter(|(xs, _)| xs.len() > 1).min_by_key(|(xs, _)| (xs.len(), xs[0]));
    let Some((xs, ys)) = ambiguous else {
        let mut map = vec![usize::MAX; p.len()];
        for (xs, ys) in classes.values() {
            map[xs[0]] = ys[0];
        }
        return p.is_isomorphism(q, &map).then_some(map);
    };
    let fresh = cp.len() + cq.len();
    ys.iter().find_map(|&y| {
        let mut next = [cp.clone(), cq.clone()];
        next[0][xs[0]] = fresh;
        next[1][y] = fresh;
        search(p, q, next)
    })
}

/// A rank-preserving order isomorphism `p → q`, if one exists.
pub fn find_isomorphism(p: &RankedPoset, q: &RankedPoset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.covers.len() != q.covers.len() {
        return None;
    }
    if p.rank_polynomial() != q.rank_polynomial() {
        return None;
    }
    let initial = [p, q].map(|s| (0..s.len()).map(|x| s.ranks[x] * 4096 + s.down_set_size(x).min(4095)).collect());
    search(p, q, initial)
}

/// A chain `0 < 1 < … < d`.
pub fn chain(d: usize) -> RankedPoset {
    RankedPoset::from_covers(
        (0..=d).map(|i| i.to_string()).collect(),
        (0..=d).collect(),
        (0..d).map(|i| (i, i + 1)).collect(),
    )
    .expect("chain")
}

/// A minimum with `k` atoms above it.
pub fn antichain_over_minimum(k: usize) -> RankedPoset {
    RankedPoset::from_covers(
        (0..=k).map(|i| i.to_string()).collect(),
        std::iter::once(0).chain(std::iter::repeat_n(1, k)).collect(),
        (1..=k).map(|i| (0, i)).collect(),
    )
    .expect("antichain over a minimum")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::CoxeterDescriptor;

    fn abs(d: &str) -> RankedPoset {
        abs_group(&ReflectionGroup::new(d.parse::<CoxeterDescriptor>().unwrap()).unwrap())
    }

    #[test]
    fn abs_s4_rank_polynomial() {
        let p = abs("S4");
        assert_eq!(p.len(), 24);
        assert_eq!(p.rank_polynomial(), IntPolynomial::linear_product([1, 2, 3]));
        assert_eq!(p.is_graded(), (true, 3));
        assert_eq!(p.label(0), "()");
    }

    #[test]
    fn abs_s3_chains() {
        let p = abs("S3");
        assert_eq!(p.rank_polynomial().coeffs(), &[1, 3, 2]);
        assert_eq!(p.count_maximal_chains(), 6);
    }

    #[test]
    fn small_posets() {
        let one = chain(0);
        assert_eq!(one.rank_polynomial(), IntPolynomial::one());
        assert_eq!(chain(2).is_graded(), (true, 2));
        assert_eq!(chain(4).count_maximal_chains(), 1);
        assert_eq!(antichain_over_minimum(3).count_maximal_chains(), 3);
        assert!(!antichain_over_minimum(3).is_isomorphic(&chain(3)));
        assert!(chain(3).is_isomorphic(&chain(3)));
    }

    #[test]
    fn order_matches_length_definition() {
        for d in ["S4", "B3"] {
            let g = ReflectionGroup::new(d.parse().unwrap()).unwrap();
            let (p, pts) = abs_group_with_points(&g);
            for a in 0..p.len() {
                for b in 0..p.len() {
                    assert_eq!(p.leq(a, b), g.leq(pts[a], pts[b]), "{d}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_covers() {
        let bad = RankedPoset::from_covers(vec!["a".into(), "b".into()], vec![0, 2], vec![(0, 1)]);
        assert!(matches!(bad, Err(Error::PosetInvariant(_))));
        let two_min = RankedPoset::from_covers(vec!["a".into(), "b".into()], vec![0, 0], vec![]);
        assert!(two_min.is_err());
    }

    #[test]
    fn interval_and_ideal() {
        let p = abs("S4");
        let min = p.minimum().unwrap();
        assert_eq!(p.interval(min, min).unwrap().len(), 1);
        let top = p.maximal_elements()[0];
        let iv = p.interval(min, top).unwrap();
        assert_eq!(iv.len(), 14);
        assert!(p.interval(top, min).is_err());
        let atoms: Vec<usize> = (0..p.len()).filter(|&x| p.rank(x) <= 1).collect();
        assert!(p.is_order_ideal(&atoms));
        assert!(!p.is_order_ideal(&[top]));
    }

    #[test]
    fn isomorphism_of_relabelled_copy() {
        let p = abs("B2");
        let n = p.len();
        let perm: Vec<usize> = (0..n).map(|x| if x == 0 { 0 } else { n - x }).collect();
        let mut inv = vec![0; n];
        for (x, &y) in perm.iter().enumerate() {
            inv[y] = x;
        }
        let q = RankedPoset::from_covers(
            (0..n).map(|y| p.label(inv[y]).to_string()).collect(),
            (0..n).map(|y| p.rank(inv[y])).collect(),
            p.covers().iter().map(|&(a, b)| (perm[a], perm[b])).collect(),
        )
        .unwrap();
        let map = find_isomorphism(&p, &q).unwrap();
        assert!(p.is_isomorphism(&q, &map));
    }

    #[test]
    fn json_round_trip_and_dot() {
        let p = abs("S3");
        let j = p.to_json();
        let text = serde_json::to_string(&j).unwrap();
        let back: PosetJson = serde_json::from_str(&text).unwrap();
        let q = RankedPoset::from_json(&back).unwrap();
        assert_eq!(q.covers(), p.covers());
        let dot = p.to_dot("S3");
        assert!(dot.starts_with("digraph \"S3\" {"));
        assert_eq!(dot.matches("->").count(), p.covers().len());
    }

    #[test]
    fn non_transitive_action_is_rejected() {
        let s3: CoxeterDescriptor = "S3".parse().unwrap();
        let g = ReflectionGroup::new(s3).unwrap();
        // S_3 acting on {1,2,3} ∪ {4}: the point 4 is never reached.
        let pts = [0usize, 1, 2, 3];
        let t = &g.reflections().elements;
        let res = ActionGraph::transitive(&pts, 0, t, |w, &x| if x == 3 { 3 } else { w.as_perm().unwrap().apply(x) });
        assert!(matches!(res, Err(Error::NotTransitive { unreached: 1, total: 4 })));
    }
}
