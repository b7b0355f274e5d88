//! Left cosets, coset lengths and minima, and the modularity and
//! quasi-modularity decision procedures.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::{
    self, CoxeterDescriptor, Family, GroupElement, ReflectionGroup, SignedPerm,
};
use crate::posets::{build_absolute_order, ActionGraph, RankedPoset};
use crate::poly::IntPolynomial;

/// A subset of the ambient group closed under multiplication, stored as
/// sorted group indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Closure of `gens` under multiplication.
    pub fn generated(g: &ReflectionGroup, gens: &[usize]) -> Self {
        let mut seen = FixedBitSet::with_capacity(g.len());
        let id = g.identity();
        seen.insert(id);
        let mut queue = VecDeque::from([id]);
        let mut members = vec![id];
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = g.mul(x, s);
                if !seen.contains(y) {
                    seen.insert(y);
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Self { members }
    }

    /// Wraps a member list after checking closure.
    pub fn from_members(g: &ReflectionGroup, members: &[usize]) -> Result<Self> {
        let set: HashSet<usize> = members.iter().copied().collect();
        if !set.contains(&g.identity()) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &a in members {
            for &b in members {
                if !set.contains(&g.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!(
                        "{} * {} leaves the set",
                        g.label(a),
                        g.label(b)
                    )));
                }
            }
        }
        let mut members: Vec<usize> = set.into_iter().collect();
        members.sort_unstable();
        Ok(Self { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// `w H w^{-1}`.
    pub fn conjugate(&self, g: &ReflectionGroup, w: usize) -> Subgroup {
        let wi = g.inverse(w);
        let mut members: Vec<usize> = self.members.iter().map(|&h| g.mul(g.mul(w, h), wi)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// The lexicographically least member list over all conjugates.
    pub fn conjugacy_key(&self, g: &ReflectionGroup) -> Vec<usize> {
        (0..g.len()).map(|w| self.conjugate(g, w).members).min().expect("nonempty group")
    }

    /// Reflections of the ambient group lying in this subgroup.
    pub fn reflections(&self, g: &ReflectionGroup) -> Vec<usize> {
        g.reflection_indices().iter().copied().filter(|&t| self.contains(t)).collect()
    }

    /// Whether the subgroup is generated by the ambient reflections it
    /// contains.
    pub fn is_reflection_subgroup(&self, g: &ReflectionGroup) -> bool {
        Subgroup::generated(g, &self.reflections(g)) == *self
    }

    /// `max ℓ_T` over the subgroup; for a reflection subgroup this is the
    /// dimension of the span of its roots.
    pub fn max_length(&self, g: &ReflectionGroup) -> usize {
        self.members.iter().map(|&h| g.length(h)).max().unwrap_or(0)
    }

    /// `Σ_{h ∈ H} q^{ℓ_T(h)}` with the ambient absolute length.
    pub fn ambient_rank_polynomial(&self, g: &ReflectionGroup) -> IntPolynomial {
        IntPolynomial::from_degrees(self.members.iter().map(|&h| g.length(h)))
    }
}

/// A designated Coxeter structure on a subgroup: its own reflection set,
/// given as ambient group indices.
#[derive(Clone, Debug)]
pub struct OwnStructure {
    pub desc: Option<CoxeterDescriptor>,
    pub reflections: Vec<usize>,
}

/// A subgroup of a described ambient group, optionally with its own
/// Coxeter structure.
#[derive(Clone, Debug)]
pub struct EmbeddedSubgroup {
    pub ambient: CoxeterDescriptor,
    pub generators: Vec<GroupElement>,
    pub subgroup: Subgroup,
    pub own_structure: Option<OwnStructure>,
}

impl EmbeddedSubgroup {
    pub fn new(g: &ReflectionGroup, generators: Vec<GroupElement>) -> Result<Self> {
        let idx = generators
            .iter()
            .map(|x| {
                g.index_of(x).ok_or_else(|| Error::NotSubgroup(format!("{x} is not an element of {}", g.desc())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ambient: *g.desc(),
            subgroup: Subgroup::generated(g, &idx),
            generators,
            own_structure: None,
        })
    }

    pub fn parse(g: &ReflectionGroup, generators: &str) -> Result<Self> {
        Self::new(g, groups::parse_elements(g.desc(), generators)?)
    }

    pub fn from_subgroup(g: &ReflectionGroup, subgroup: Subgroup) -> Self {
        Self {
            ambient: *g.desc(),
            generators: subgroup.members().iter().map(|&x| g.element(x).clone()).collect(),
            subgroup,
            own_structure: None,
        }
    }

    /// Designates `T(H) = H ∩ T(W)`.
    pub fn with_induced_reflections(mut self, g: &ReflectionGroup) -> Self {
        self.own_structure = Some(OwnStructure { desc: None, reflections: self.subgroup.reflections(g) });
        self
    }

    /// Embeds the group described by `desc` through `map` and designates the
    /// images of its reflections as `T(H)`. The map must be an injective
    /// homomorphism; this is checked on generators times all elements.
    pub fn embed<F>(g: &ReflectionGroup, desc: CoxeterDescriptor, map: F) -> Result<Self>
    where
        F: Fn(&GroupElement) -> GroupElement,
    {
        let h = ReflectionGroup::new(desc)?;
        let image = |x: &GroupElement| -> Result<usize> {
            let y = map(x);
            g.index_of(&y).ok_or_else(|| Error::NotSubgroup(format!("{y} is not in {}", g.desc())))
        };
        let images = h.group().elements().iter().map(image).collect::<Result<Vec<_>>>()?;
        let distinct: HashSet<usize> = images.iter().copied().collect();
        if distinct.len() != images.len() {
            return Err(Error::NotSubgroup(format!("the map from {desc} is not injective")));
        }
        for s in groups::simple_generators(&desc) {
            let si = h.index_of(&s).expect("generator");
            for x in 0..h.len() {
                if images[h.mul(si, x)] != g.mul(images[si], images[x]) {
                    return Err(Error::NotSubgroup(format!("the map from {desc} is not a homomorphism")));
                }
            }
        }
        let generators: Vec<GroupElement> =
            groups::simple_generators(&desc).iter().map(&map).collect();
        let mut members = images.clone();
        members.sort_unstable();
        let reflections = h.reflection_indices().iter().map(|&t| images[t]).collect();
        Ok(Self {
            ambient: *g.desc(),
            generators,
            subgroup: Subgroup { members },
            own_structure: Some(OwnStructure { desc: Some(desc), reflections }),
        })
    }

    /// `B_n` inside `S_{2n}`, acting on `Ω_n` ordered `1 < -1 < 2 < -2 < …`.
    pub fn hyperoctahedral_in_symmetric(g: &ReflectionGroup) -> Result<Self> {
        let d = g.desc();
        if d.family != Family::A || !d.rank.is_multiple_of(2) || d.rank < 2 {
            return Err(Error::InvalidDescriptor(format!("{d} is not S_2n")));
        }
        Self::embed(g, CoxeterDescriptor::hyperoctahedral(d.rank / 2), |w| {
            GroupElement::Perm(w.as_signed().expect("signed").to_omega_perm())
        })
    }

    /// `B_{n-1}` inside `D_n` as the stabilizer of `{n, -n}`: the last sign
    /// is chosen to make the number of sign changes even.
    pub fn hyperoctahedral_in_even(g: &ReflectionGroup) -> Result<Self> {
        let d = g.desc();
        if d.family != Family::D || d.rank < 3 {
            return Err(Error::InvalidDescriptor(format!("{d} is not D_n with n >= 3")));
        }
        let n = d.rank;
        Self::embed(g, CoxeterDescriptor::hyperoctahedral(n - 1), |w| {
            let p = w.as_signed().expect("signed");
            let mut images = p.images().to_vec();
            let last = if p.sign_changes() % 2 == 0 { n as i8 } else { -(n as i8) };
            images.push(last);
            GroupElement::Signed(SignedPerm::from_images(images).expect("signed permutation"))
        })
    }

    pub fn len(&self) -> usize {
        self.subgroup.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroup.is_empty()
    }

    /// `H_{T(H)}(q)`: lengths by search over the designated reflections.
    pub fn own_rank_polynomial(&self, g: &ReflectionGroup) -> Result<IntPolynomial> {
        let own = self.own_structure.as_ref().ok_or(Error::MissingStructure)?;
        let lengths = lengths_within(g, &self.subgroup, &own.reflections);
        if lengths.iter().any(|l| l.is_none()) {
            return Err(Error::NotReflectionSubgroup("designated reflections do not generate H".into()));
        }
        Ok(IntPolynomial::from_degrees(lengths.into_iter().flatten()))
    }
}

/// Breadth-first word lengths of the members of `h` over the generators
/// `gens` (left multiplication), indexed like `h.members()`.
pub fn lengths_within(g: &ReflectionGroup, h: &Subgroup, gens: &[usize]) -> Vec<Option<usize>> {
    let pos: HashMap<usize, usize> = h.members().iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut dist = vec![None; h.len()];
    let start = pos[&g.identity()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let d = dist[pos[&x]].expect("visited");
        for &t in gens {
            let y = g.mul(t, x);
            if let Some(&j) = pos.get(&y) {
                if dist[j].is_none() {
                    dist[j] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
    }
    dist
}

/// A length function on a subgroup `K` of `W` by group index, for running
/// the coset procedures inside `K` with its own reflections.
#[derive(Clone, Debug)]
pub struct LengthContext {
    pub members: Subgroup,
    lengths: Vec<usize>,
}

impl LengthContext {
    pub fn whole(g: &ReflectionGroup) -> Self {
        Self { members: Subgroup { members: (0..g.len()).collect() }, lengths: g.lengths().to_vec() }
    }

    /// `K` with lengths over the generators `gens`.
    pub fn within(g: &ReflectionGroup, k: &Subgroup, gens: &[usize]) -> Result<Self> {
        let mut lengths = vec![usize::MAX; g.len()];
        for (&x, l) in k.members().iter().zip(lengths_within(g, k, gens)) {
            lengths[x] = l.ok_or_else(|| Error::NotReflectionSubgroup("generators do not generate K".into()))?;
        }
        Ok(Self { members: k.clone(), lengths })
    }

    pub fn length(&self, x: usize) -> usize {
        self.lengths[x]
    }

    /// `u ≤ v` iff `ℓ(v u^{-1}) = ℓ(v) - ℓ(u)`.
    pub fn leq(&self, g: &ReflectionGroup, u: usize, v: usize) -> bool {
        let (lu, lv) = (self.lengths[u], self.lengths[v]);
        lu <= lv && self.lengths[g.mul(v, g.inverse(u))] == lv - lu
    }

    pub fn rank_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_degrees(self.members.members().iter().map(|&x| self.lengths[x]))
    }
}

/// A left coset `wH`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub members: Vec<usize>,
    pub representative: usize,
    pub length: usize,
}

/// The left cosets of `H` in the context `K` (normally all of `W`), plus
/// the coset of every element.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub cosets: Vec<Coset>,
    pub coset_of: Vec<usize>,
}

pub fn enumerate_cosets(g: &ReflectionGroup, h: &Subgroup) -> CosetTable {
    enumerate_cosets_in(g, &LengthContext::whole(g), h).expect("H lies in W")
}

/// Cosets are listed in order of their least member index; the
/// representative is the shortest member, ties going to the least element
/// in one-line order.
pub fn enumerate_cosets_in(g: &ReflectionGroup, ctx: &LengthContext, h: &Subgroup) -> Result<CosetTable> {
    if let Some(&x) = h.members().iter().find(|&&x| !ctx.members.contains(x)) {
        return Err(Error::NotSubgroup(format!("{} lies outside the ambient group", g.label(x))));
    }
    let mut coset_of = vec![usize::MAX; g.len()];
    let mut cosets = Vec::new();
    for &w in ctx.members.members() {
        if coset_of[w] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = h.members().iter().map(|&x| g.mul(w, x)).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = cosets.len();
        }
        let representative = *members
            .iter()
            .min_by(|&&a, &&b| ctx.length(a).cmp(&ctx.length(b)).then_with(|| g.element(a).cmp(g.element(b))))
            .expect("nonempty coset");
        cosets.push(Coset { length: ctx.length(representative), members, representative });
    }
    Ok(CosetTable { cosets, coset_of })
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// `X_T(q) = Σ_x q^{ℓ_T(x)}`.
    pub fn rank_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_degrees(self.cosets.iter().map(|c| c.length))
    }
}

/// The minimum of a coset in the absolute order, if any, with its minimal
/// elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetMinimum {
    pub minimum: Option<usize>,
    pub minimal_elements: Vec<usize>,
    pub has_unique_min_length: bool,
}

impl CosetMinimum {
    pub fn has_minimum(&self) -> bool {
        self.minimum.is_some()
    }
}

pub fn coset_minimum(g: &ReflectionGroup, ctx: &LengthContext, c: &Coset) -> CosetMinimum {
    let min_len = c.members.iter().map(|&w| ctx.length(w)).min().unwrap_or(0);
    let shortest: Vec<usize> = c.members.iter().copied().filter(|&w| ctx.length(w) == min_len).collect();
    let minimum = shortest.iter().copied().find(|&m| c.members.iter().all(|&w| ctx.leq(g, m, w)));
    let mut minimal_elements: Vec<usize> = c
        .members
        .iter()
        .copied()
        .filter(|&w| !c.members.iter().any(|&u| u != w && ctx.leq(g, u, w)))
        .collect();
    minimal_elements.sort_by(|&a, &b| g.element(a).cmp(g.element(b)));
    CosetMinimum { minimum, minimal_elements, has_unique_min_length: shortest.len() == 1 }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetReport {
    pub representative: String,
    pub length: usize,
    pub has_minimum: bool,
    pub minimal_elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularityReport {
    pub group: String,
    pub subgroup_order: usize,
    pub modular: bool,
    pub cosets: Vec<CosetReport>,
    /// First coset without a minimum.
    pub witness: Option<CosetReport>,
}

/// Coset reports for every coset, computed in parallel.
pub fn coset_reports(g: &ReflectionGroup, ctx: &LengthContext, table: &CosetTable) -> Vec<(CosetMinimum, CosetReport)> {
    table
        .cosets
        .par_iter()
        .map(|c| {
            let m = coset_minimum(g, ctx, c);
            let report = CosetReport {
                representative: g.label(c.representative),
                length: c.length,
                has_minimum: m.has_minimum(),
                minimal_elements: m.minimal_elements.iter().map(|&x| g.label(x)).collect(),
            };
            (m, report)
        })
        .collect()
}

pub fn modularity_report(g: &ReflectionGroup, h: &Subgroup) -> ModularityReport {
    let ctx = LengthContext::whole(g);
    let table = enumerate_cosets(g, h);
    let cosets: Vec<CosetReport> = coset_reports(g, &ctx, &table).into_iter().map(|(_, r)| r).collect();
    let witness = cosets.iter().find(|c| !c.has_minimum).cloned();
    ModularityReport {
        group: g.desc().to_string(),
        subgroup_order: h.len(),
        modular: witness.is_none(),
        cosets,
        witness,
    }
}

/// Every left coset has a minimum in `Abs(W)`.
pub fn is_modular(g: &ReflectionGroup, h: &Subgroup) -> bool {
    is_modular_in(g, &LengthContext::whole(g), h).expect("H lies in W")
}

/// Modularity of `H` inside the context group `K`.
pub fn is_modular_in(g: &ReflectionGroup, ctx: &LengthContext, h: &Subgroup) -> Result<bool> {
    let table = enumerate_cosets_in(g, ctx, h)?;
    Ok(table.cosets.par_iter().all(|c| coset_minimum(g, ctx, c).has_minimum()))
}

/// `W_T(q) = H_T(q) · X_T(q)`, with `H_T` taken with the ambient length.
pub fn factorization_holds(g: &ReflectionGroup, h: &Subgroup) -> bool {
    let x = enumerate_cosets(g, h).rank_polynomial();
    g.rank_polynomial() == &h.ambient_rank_polynomial(g) * &x
}

/// `Abs(X)` for `X = W/H`, with the coset table it was built from.
pub fn abs_cosets(g: &ReflectionGroup, h: &Subgroup) -> (RankedPoset, CosetTable) {
    let table = enumerate_cosets(g, h);
    let graph = ActionGraph::explore(table.coset_of[g.identity()], &g.reflections().elements, |t, &c| {
        let k = g.reflections().elements.iter().position(|s| s == t).expect("reflection");
        table.coset_of[g.left_mul_reflection(k, table.cosets[c].representative)]
    });
    let poset = build_absolute_order(&graph, |&c| coset_label(g, &table.cosets[c]));
    // Reorder the table to match the poset's element order.
    let order = graph.points().to_vec();
    let mut remap = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old] = new;
    }
    let cosets = order.iter().map(|&c| table.cosets[c].clone()).collect();
    let coset_of = table.coset_of.iter().map(|&c| if c == usize::MAX { c } else { remap[c] }).collect();
    (poset, CosetTable { cosets, coset_of })
}

pub fn coset_label(g: &ReflectionGroup, c: &Coset) -> String {
    format!("{}H", g.label(c.representative))
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiModularityReport {
    pub holds: bool,
    pub group_polynomial: IntPolynomial,
    pub subgroup_polynomial: IntPolynomial,
    pub quotient_polynomial: IntPolynomial,
}

/// `W_T(q) = H_{T(H)}(q) · X_T(q)` with `T(H)` the designated reflections.
pub fn is_quasi_modular(g: &ReflectionGroup, h: &EmbeddedSubgroup) -> Result<QuasiModularityReport> {
    let subgroup_polynomial = h.own_rank_polynomial(g)?;
    let quotient_polynomial = enumerate_cosets(g, &h.subgroup).rank_polynomial();
    let group_polynomial = g.rank_polynomial();
    Ok(QuasiModularityReport {
        holds: group_polynomial == &subgroup_polynomial * &quotient_polynomial,
        group_polynomial,
        subgroup_polynomial,
        quotient_polynomial,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AlmostMaximalReport {
    pub parabolic: Option<bool>,
    pub modular: bool,
    pub almost_maximal_rank: bool,
    /// (i) modular of rank one less than `W`.
    pub modular_almost_maximal: bool,
    /// (ii) every coset other than `H` contains a reflection.
    pub every_coset_has_reflection: bool,
    /// (iii) every coset other than `H` contains exactly one reflection.
    pub every_coset_has_unique_reflection: bool,
    pub equivalent: bool,
    /// The reflection in each nontrivial coset, when unique.
    pub representatives: Vec<String>,
}

/// The three conditions characterizing modular subgroups of almost maximal
/// rank. `parabolic` is passed in by the caller; equivalence is only
/// asserted for parabolic `H`.
pub fn check_almost_maximal(g: &ReflectionGroup, h: &Subgroup, parabolic: Option<bool>) -> AlmostMaximalReport {
    let table = enumerate_cosets(g, h);
    let own = table.coset_of[g.identity()];
    let refl: BTreeSet<usize> = g.reflection_indices().iter().copied().collect();
    let counts: Vec<(usize, Option<usize>)> = table
        .cosets
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != own)
        .map(|(_, c)| {
            let ts: Vec<usize> = c.members.iter().copied().filter(|x| refl.contains(x)).collect();
            (ts.len(), ts.first().copied())
        })
        .collect();
    let modular = is_modular(g, h);
    let almost_maximal_rank = h.max_length(g) + 1 == g.desc().coxeter_rank();
    let modular_almost_maximal = modular && almost_maximal_rank;
    let every_coset_has_reflection = counts.iter().all(|&(k, _)| k >= 1);
    let every_coset_has_unique_reflection = counts.iter().all(|&(k, _)| k == 1);
    let mut representatives: Vec<String> = if every_coset_has_unique_reflection {
        counts.iter().map(|&(_, t)| g.label(t.expect("one reflection"))).collect()
    } else {
        Vec::new()
    };
    representatives.sort();
    let equivalent = modular_almost_maximal == every_coset_has_reflection
        && every_coset_has_reflection == every_coset_has_unique_reflection;
    AlmostMaximalReport {
        parabolic,
        modular,
        almost_maximal_rank,
        modular_almost_maximal,
        every_coset_has_reflection,
        every_coset_has_unique_reflection,
        equivalent,
        representatives,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaReport {
    /// Minimum of each coset, in the order of `Abs(X)`.
    pub images: Vec<String>,
    pub image_indices: Vec<usize>,
    pub order_embedding: bool,
    pub order_ideal: bool,
    pub image_rank_polynomial: IntPolynomial,
}

/// The map sending each coset to its minimum, checked to be an order
/// isomorphism from `Abs(X)` onto an order ideal of `Abs(W)`.
pub fn sigma_map(g: &ReflectionGroup, h: &Subgroup) -> Result<SigmaReport> {
    let ctx = LengthContext::whole(g);
    let (poset, table) = abs_cosets(g, h);
    let mut image_indices = Vec::with_capacity(table.len());
    for c in &table.cosets {
        match coset_minimum(g, &ctx, c).minimum {
            Some(m) => image_indices.push(m),
            None => return Err(Error::NotModular { witness: coset_label(g, c) }),
        }
    }
    let order_embedding = (0..table.len()).into_par_iter().all(|x| {
        (0..table.len()).all(|y| poset.leq(x, y) == g.leq(image_indices[x], image_indices[y]))
    });
    let in_image: HashSet<usize> = image_indices.iter().copied().collect();
    let order_ideal = image_indices
        .par_iter()
        .all(|&v| (0..g.len()).all(|u| !g.leq(u, v) || in_image.contains(&u)));
    Ok(SigmaReport {
        images: image_indices.iter().map(|&x| g.label(x)).collect(),
        image_rank_polynomial: IntPolynomial::from_degrees(image_indices.iter().map(|&x| g.length(x))),
        image_indices,
        order_embedding,
        order_ideal,
    })
}

/// All subgroups, optionally one per conjugacy class, sorted by order and
/// then member list.
pub fn enumerate_subgroups(g: &ReflectionGroup, up_to_conjugacy: bool) -> Vec<Subgroup> {
    let cyclic: BTreeSet<Subgroup> = (0..g.len()).map(|x| Subgroup::generated(g, &[x])).collect();
    let cyclic_gens: Vec<usize> = cyclic
        .iter()
        .map(|c| *c.members().iter().find(|&&x| Subgroup::generated(g, &[x]) == *c).expect("generator"))
        .collect();
    let mut seen: HashSet<Subgroup> = cyclic.iter().cloned().collect();
    let mut queue: VecDeque<Subgroup> = cyclic.into_iter().collect();
    while let Some(s) = queue.pop_front() {
        for &x in &cyclic_gens {
            if s.contains(x) {
                continue;
            }
            let mut gens: Vec<usize> = s.members().to_vec();
            gens.push(x);
            let bigger = Subgroup::generated(g, &gens);
            if seen.insert(bigger.clone()) {
                queue.push_back(bigger);
            }
        }
    }
    finish_subgroup_list(g, seen.into_iter().collect(), up_to_conjugacy)
}

/// All reflection subgroups (generated by reflections), optionally one per
/// conjugacy class.
pub fn reflection_subgroups(g: &ReflectionGroup, up_to_conjugacy: bool) -> Vec<Subgroup> {
    let trivial = Subgroup::generated(g, &[]);
    let mut seen: HashSet<Subgroup> = HashSet::from([trivial.clone()]);
    let mut queue = VecDeque::from([trivial]);
    while let Some(s) = queue.pop_front() {
        let own = s.reflections(g);
        for &t in g.reflection_indices() {
            if s.contains(t) {
                continue;
            }
            let mut gens = own.clone();
            gens.push(t);
            let bigger = Subgroup::generated(g, &gens);
            if seen.insert(bigger.clone()) {
                queue.push_back(bigger);
            }
        }
    }
    finish_subgroup_list(g, seen.into_iter().collect(), up_to_conjugacy)
}

fn finish_subgroup_list(g: &ReflectionGroup, mut all: Vec<Subgroup>, up_to_conjugacy: bool) -> Vec<Subgroup> {
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
    if !up_to_conjugacy {
        return all;
    }
    let keys: Vec<Vec<usize>> = all.par_iter().map(|s| s.conjugacy_key(g)).collect();
    let mut taken = HashSet::new();
    all.into_iter().zip(keys).filter(|(_, k)| taken.insert(k.clone())).map(|(s, _)| s).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(d: &str) -> ReflectionGroup {
        ReflectionGroup::new(d.parse().unwrap()).unwrap()
    }

    fn sub(g: &ReflectionGroup, gens: &str) -> Subgroup {
        EmbeddedSubgroup::parse(g, gens).unwrap().subgroup
    }

    #[test]
    fn coset_counts() {
        let g = group("S4");
        assert_eq!(enumerate_cosets(&g, &sub(&g, "")).len(), 24);
        let t = enumerate_cosets(&g, &sub(&g, "(1 2);(3 4)"));
        assert_eq!(t.len(), 6);
        assert!(t.cosets.iter().all(|c| c.members.len() == 4));

        let d4 = group("D4");
        let h = EmbeddedSubgroup::hyperoctahedral_in_even(&d4).unwrap();
        let t = enumerate_cosets(&d4, &h.subgroup);
        assert_eq!(t.len(), 4);
        assert_eq!(t.rank_polynomial().coeffs(), &[1, 3]);
    }

    #[test]
    fn non_subgroup_is_rejected() {
        let g = group("S3");
        let t = g.index_of(&groups::parse_element(g.desc(), "(1 2)").unwrap()).unwrap();
        assert!(Subgroup::from_members(&g, &[g.identity(), t]).is_ok());
        let c = g.index_of(&groups::parse_element(g.desc(), "(1 2 3)").unwrap()).unwrap();
        assert!(matches!(Subgroup::from_members(&g, &[g.identity(), c]), Err(Error::NotSubgroup(_))));
    }

    #[test]
    fn double_transposition_coset_has_two_minimal_elements() {
        let g = group("S4");
        let h = sub(&g, "(1 2);(3 4)");
        let w = g.index_of(&groups::parse_element(g.desc(), "(1 3)(2 4)").unwrap()).unwrap();
        let table = enumerate_cosets(&g, &h);
        let c = &table.cosets[table.coset_of[w]];
        let m = coset_minimum(&g, &LengthContext::whole(&g), c);
        assert!(!m.has_minimum());
        let labels: Vec<String> = m.minimal_elements.iter().map(|&x| g.label(x)).collect();
        assert_eq!(labels, vec!["(1 3)(2 4)", "(1 4)(2 3)"]);
        assert!(!is_modular(&g, &h));
        let own = &table.cosets[table.coset_of[g.identity()]];
        assert_eq!(coset_minimum(&g, &LengthContext::whole(&g), own).minimum, Some(g.identity()));
    }

    #[test]
    fn unique_reflection_without_minimum() {
        let g = group("B4");
        let h = sub(&g, "((1 2));((1 -2));((3 4));((3 -4))");
        let t = g.index_of(&groups::parse_element(g.desc(), "((1 3))").unwrap()).unwrap();
        let table = enumerate_cosets(&g, &h);
        let c = &table.cosets[table.coset_of[t]];
        let m = coset_minimum(&g, &LengthContext::whole(&g), c);
        assert!(m.has_unique_min_length);
        assert!(!m.has_minimum());
        assert_eq!(c.representative, t);
        let refl_in_coset = c.members.iter().filter(|&&x| g.length(x) == 1).count();
        assert_eq!(refl_in_coset, 1);
    }

    #[test]
    fn modular_examples() {
        let g = group("S4");
        for t in ["(1 2)", "(1 4)", "(2 3)"] {
            assert!(is_modular(&g, &sub(&g, t)), "{t}");
        }
        for n in 2..=6 {
            let g = group(&format!("S{n}"));
            let gens: Vec<String> = (1..n - 1).map(|i| format!("({} {})", i, i + 1)).collect();
            let h = sub(&g, &gens.join(";"));
            assert!(is_modular(&g, &h), "S{n}");
            assert!(factorization_holds(&g, &h));
        }
    }

    #[test]
    fn quasi_modular_examples() {
        let g = group("S4");
        let h = EmbeddedSubgroup::parse(&g, "(1 2);(2 3)").unwrap().with_induced_reflections(&g);
        assert!(is_quasi_modular(&g, &h).unwrap().holds);
        assert!(matches!(
            is_quasi_modular(&g, &EmbeddedSubgroup::parse(&g, "(1 2)").unwrap()),
            Err(Error::MissingStructure)
        ));
        for n in [3, 4] {
            let d = group(&format!("D{n}"));
            let h = EmbeddedSubgroup::hyperoctahedral_in_even(&d).unwrap();
            let r = is_quasi_modular(&d, &h).unwrap();
            assert!(r.holds, "D{n}");
            assert_eq!(r.quotient_polynomial, IntPolynomial::new(vec![1, n as i64 - 1]));
        }
        for n in [2, 3] {
            let s = group(&format!("S{}", 2 * n));
            let h = EmbeddedSubgroup::hyperoctahedral_in_symmetric(&s).unwrap();
            let r = is_quasi_modular(&s, &h).unwrap();
            assert!(r.holds, "B{n}");
            assert!(!is_modular(&s, &h.subgroup));
        }
    }

    #[test]
    fn almost_maximal() {
        for n in 3..=5 {
            let g = group(&format!("S{n}"));
            let gens: Vec<String> = (1..n - 1).map(|i| format!("({} {})", i, i + 1)).collect();
            let r = check_almost_maximal(&g, &sub(&g, &gens.join(";")), Some(true));
            assert!(r.modular_almost_maximal && r.every_coset_has_reflection && r.every_coset_has_unique_reflection);
            let want: Vec<String> = (1..n).map(|i| format!("({i} {n})")).collect();
            assert_eq!(r.representatives, want);
        }
        let g = group("S4");
        let r = check_almost_maximal(&g, &sub(&g, "(1 2)"), Some(true));
        assert!(!r.modular_almost_maximal && !r.every_coset_has_reflection && !r.every_coset_has_unique_reflection);
        assert_eq!(enumerate_cosets(&g, &sub(&g, "(1 2)")).len(), 12);
        assert!(r.equivalent);
    }

    #[test]
    fn sigma_examples() {
        let g = group("S4");
        let s = sigma_map(&g, &sub(&g, "")).unwrap();
        assert_eq!(s.images.len(), 24);
        assert!(s.order_embedding && s.order_ideal);
        let s = sigma_map(&g, &sub(&g, "(1 2);(2 3)")).unwrap();
        let mut imgs = s.images.clone();
        imgs.sort();
        assert_eq!(imgs, vec!["()", "(1 4)", "(2 4)", "(3 4)"]);
        assert!(s.order_embedding && s.order_ideal);
        assert_eq!(s.image_rank_polynomial.coeffs(), &[1, 3]);
        assert!(matches!(sigma_map(&g, &sub(&g, "(1 2);(3 4)")), Err(Error::NotModular { .. })));
    }

    #[test]
    fn subgroup_counts() {
        let g = group("S4");
        assert_eq!(enumerate_subgroups(&g, false).len(), 30);
        assert_eq!(enumerate_subgroups(&g, true).len(), 11);
        let g = group("S3");
        assert_eq!(enumerate_subgroups(&g, false).len(), 6);
        assert_eq!(enumerate_subgroups(&g, true).len(), 4);
    }

    #[test]
    fn cosets_of_double_transposition_subgroup() {
        let g = group("S4");
        let (p, table) = abs_cosets(&g, &sub(&g, "(1 2);(3 4)"));
        assert_eq!(p.len(), 6);
        for (x, c) in table.cosets.iter().enumerate() {
            assert_eq!(p.rank(x), c.length);
        }
    }
}
