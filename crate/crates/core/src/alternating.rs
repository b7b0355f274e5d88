//! The alternating subgroup `W⁺` with the generating set `T₀ = {s₀t}` and
//! its absolute order, compared against the order on `W/⟨s₀⟩`.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::cosets::{abs_cosets, Subgroup};
use crate::error::{Error, Result};
use crate::groups::{simple_generators, GroupElement, ReflectionGroup};
use crate::poly::IntPolynomial;
use crate::posets::{abs_group_with_points, RankedPoset};

/// Multiplication side used when building the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub struct AlternatingContext {
    group: ReflectionGroup,
    s0: usize,
    s0_gens: Vec<usize>,
    t0: Vec<usize>,
    /// Group index of each element of `W⁺`, in breadth-first order from `e`.
    points: Vec<usize>,
    /// Poset position of each group element, `usize::MAX` for odd elements.
    position: Vec<usize>,
    lengths: Vec<usize>,
}

impl AlternatingContext {
    /// `s0` must be one of the simple generators of `group`.
    pub fn new(group: ReflectionGroup, s0: &GroupElement) -> Result<Self> {
        let simple: Vec<usize> = simple_generators(group.desc())
            .iter()
            .map(|s| group.index_of(s).expect("simple generators lie in the group"))
            .collect();
        let s0 = group
            .index_of(s0)
            .filter(|i| simple.contains(i))
            .ok_or_else(|| Error::NotSimpleReflection(s0.to_string()))?;
        let mut s0_gens: Vec<usize> = simple.iter().map(|&s| group.mul(s0, s)).collect();
        s0_gens.sort_unstable();
        s0_gens.dedup();
        let t0: Vec<usize> = group.reflection_indices().iter().map(|&t| group.mul(s0, t)).collect();
        let (points, position, lengths) = bfs(&group, &t0, Side::Left);
        Ok(Self { group, s0, s0_gens, t0, points, position, lengths })
    }

    /// Uses the first simple generator as `s₀`.
    pub fn with_first_generator(group: ReflectionGroup) -> Result<Self> {
        let s0 = simple_generators(group.desc())[0].clone();
        Self::new(group, &s0)
    }

    pub fn group(&self) -> &ReflectionGroup {
        &self.group
    }

    pub fn s0(&self) -> usize {
        self.s0
    }

    /// `S₀ = {s₀s : s ∈ S}` as group indices (contains the identity).
    pub fn s0_generators(&self) -> &[usize] {
        &self.s0_gens
    }

    /// `T₀ = {s₀t : t ∈ T}` as group indices (contains the identity).
    pub fn t0(&self) -> &[usize] {
        &self.t0
    }

    /// Group indices of `W⁺`, breadth-first from the identity.
    pub fn members(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_even(&self, w: usize) -> bool {
        self.group.length(w).is_multiple_of(2)
    }

    pub fn ell_t0(&self, w: usize) -> Result<usize> {
        match self.position.get(w) {
            Some(&p) if p != usize::MAX => Ok(self.lengths[p]),
            _ => Err(Error::NotEven),
        }
    }

    pub fn ell_t0_of(&self, w: &GroupElement) -> Result<usize> {
        let i = self.group.index_of(w).ok_or_else(|| Error::ElementMismatch {
            element: w.to_string(),
            group: self.group.desc().to_string(),
        })?;
        self.ell_t0(i)
    }

    /// `w^{s₀} = s₀ w s₀`.
    pub fn twist(&self, w: usize) -> usize {
        self.group.mul(self.group.mul(self.s0, w), self.s0)
    }

    /// `Σ_{w ∈ W⁺} q^{ℓ_{T₀}(w)}`.
    pub fn rank_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_degrees(self.lengths.iter().copied())
    }
}

/// Breadth-first search over `W⁺` with `w ↦ τw` (or `wτ`) for `τ ∈ T₀`.
fn bfs(g: &ReflectionGroup, t0: &[usize], side: Side) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let mut position = vec![usize::MAX; g.len()];
    let mut points = vec![g.identity()];
    let mut lengths = vec![0];
    position[g.identity()] = 0;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let d = lengths[position[x]];
        for &t in t0 {
            let y = match side {
                Side::Left => g.mul(t, x),
                Side::Right => g.mul(x, t),
            };
            if position[y] == usize::MAX {
                position[y] = points.len();
                points.push(y);
                lengths.push(d + 1);
                queue.push_back(y);
            }
        }
    }
    (points, position, lengths)
}

/// `Abs₀(W⁺)`: covers `u → τu` with `τ ∈ T₀` raising `ℓ_{T₀}` by one.
pub fn abs_alternating(ctx: &AlternatingContext) -> RankedPoset {
    order_on_side(ctx, Side::Left)
}

/// The order built from multiplication on the given side. The right-hand
/// version exists to compare against the left order.
pub fn order_on_side(ctx: &AlternatingContext, side: Side) -> RankedPoset {
    let g = &ctx.group;
    let (points, position, lengths) = match side {
        Side::Left => (ctx.points.clone(), ctx.position.clone(), ctx.lengths.clone()),
        Side::Right => bfs(g, &ctx.t0, side),
    };
    let mut covers: Vec<(usize, usize)> = (0..points.len())
        .flat_map(|a| {
            let x = points[a];
            let (position, lengths) = (&position, &lengths);
            ctx.t0.iter().filter_map(move |&t| {
                let y = match side {
                    Side::Left => g.mul(t, x),
                    Side::Right => g.mul(x, t),
                };
                let b = position[y];
                (lengths[b] == lengths[a] + 1).then_some((a, b))
            })
        })
        .collect();
    covers.sort_unstable();
    covers.dedup();
    let labels = points.iter().map(|&x| g.label(x)).collect();
    RankedPoset::from_covers(labels, lengths, covers).expect("breadth-first distances give a ranked order")
}

#[derive(Clone, Debug, Serialize)]
pub struct LengthLemmaReport {
    pub elements: usize,
    /// `ℓ_{T₀}(w)` is `ℓ_T(w)` when even and `ℓ_T(w) - 1` when odd.
    pub dichotomy: bool,
    /// `ℓ_{T₀}(w)` even iff `ℓ_T(w) < ℓ_T(s₀w)` iff `ℓ_T(w) < ℓ_T(ws₀)`.
    pub parity_criterion: bool,
    pub holds: bool,
}

pub fn length_lemmas_check(ctx: &AlternatingContext) -> LengthLemmaReport {
    let g = &ctx.group;
    let rows: Vec<(bool, bool)> = ctx
        .points
        .par_iter()
        .zip(&ctx.lengths)
        .map(|(&w, &l0)| {
            let l = g.length(w);
            let even = l0 % 2 == 0;
            let dichotomy = if even { l0 == l } else { l0 + 1 == l };
            let left = l < g.length(g.mul(ctx.s0, w));
            let right = l < g.length(g.mul(w, ctx.s0));
            (dichotomy, even == left && left == right)
        })
        .collect();
    let dichotomy = rows.iter().all(|r| r.0);
    let parity_criterion = rows.iter().all(|r| r.1);
    LengthLemmaReport { elements: rows.len(), dichotomy, parity_criterion, holds: dichotomy && parity_criterion }
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiReport {
    pub elements: usize,
    pub cosets: usize,
    pub bijection: bool,
    /// `ℓ_T(φ(w)) = ℓ_{T₀}(w)`.
    pub rank_preserving: bool,
    /// `ℓ_T(w⟨s₀⟩) = ℓ_{T₀}(w)`.
    pub coset_length: bool,
    pub cover_preserving: bool,
    pub rank_polynomial: IntPolynomial,
    pub holds: bool,
}

/// `φ(w) = w⟨s₀⟩` for even `ℓ_{T₀}(w)` and `w^{s₀}⟨s₀⟩` for odd, checked
/// to be an isomorphism `Abs₀(W⁺) → Abs(W/⟨s₀⟩)`.
pub fn phi_isomorphism_check(ctx: &AlternatingContext) -> PhiReport {
    let g = &ctx.group;
    let h = Subgroup::generated(g, &[ctx.s0]);
    let (target, table) = abs_cosets(g, &h);
    let source = abs_alternating(ctx);
    let phi: Vec<usize> = ctx
        .points
        .iter()
        .zip(&ctx.lengths)
        .map(|(&w, &l0)| table.coset_of[if l0 % 2 == 0 { w } else { ctx.twist(w) }])
        .collect();
    let distinct: BTreeSet<usize> = phi.iter().copied().collect();
    let bijection = distinct.len() == phi.len() && phi.len() == table.len();
    let rank_preserving = (0..phi.len()).all(|i| target.rank(phi[i]) == ctx.lengths[i]);
    let coset_length = (0..phi.len()).all(|i| table.cosets[table.coset_of[ctx.points[i]]].length == ctx.lengths[i]);
    let cover_preserving = bijection && source.is_isomorphism(&target, &phi);
    PhiReport {
        elements: phi.len(),
        cosets: table.len(),
        bijection,
        rank_preserving,
        coset_length,
        cover_preserving,
        rank_polynomial: source.rank_polynomial(),
        holds: bijection && rank_preserving && coset_length && cover_preserving,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct R0Report {
    pub size: usize,
    pub group_order: usize,
    pub order_ideal: bool,
    pub isomorphic: bool,
    pub rank_polynomial: IntPolynomial,
    pub holds: bool,
}

/// `R₀ = {w : ℓ_T(ws₀) > ℓ_T(w)}` is an order ideal of `Abs(W)`, and
/// `w ↦ min(φ(w))` maps `Abs₀(W⁺)` isomorphically onto it.
pub fn r0_ideal_check(ctx: &AlternatingContext) -> R0Report {
    let g = &ctx.group;
    let (abs_w, points) = abs_group_with_points(g);
    let mut pos = vec![0; g.len()];
    for (i, &x) in points.iter().enumerate() {
        pos[x] = i;
    }
    let r0: Vec<usize> = (0..abs_w.len()).filter(|&i| g.length(g.mul(points[i], ctx.s0)) > g.length(points[i])).collect();
    let order_ideal = abs_w.is_order_ideal(&r0);
    let sub = abs_w.restrict(&r0).expect("subset");
    let mut sub_pos = vec![usize::MAX; abs_w.len()];
    for (k, &i) in r0.iter().enumerate() {
        sub_pos[i] = k;
    }
    let map: Vec<usize> = ctx
        .points
        .iter()
        .zip(&ctx.lengths)
        .map(|(&w, &l0)| {
            let x = if l0 % 2 == 0 { w } else { ctx.twist(w) };
            let y = g.mul(x, ctx.s0);
            let m = if g.length(x) < g.length(y) { x } else { y };
            sub_pos[pos[m]]
        })
        .collect();
    let isomorphic = abs_alternating(ctx).is_isomorphism(&sub, &map);
    let size = r0.len();
    R0Report {
        size,
        group_order: g.len(),
        order_ideal,
        isomorphic,
        rank_polynomial: sub.rank_polynomial(),
        holds: 2 * size == g.len() && order_ideal && isomorphic,
    }
}

/// Elements with an odd-length palindromic word over `S₀ ∪ S₀⁻¹` of length
/// at most `max_len`, built from the centre outwards as `a·x·a`.
pub fn odd_palindrome_scan(ctx: &AlternatingContext, max_len: usize) -> BTreeSet<usize> {
    let g = &ctx.group;
    let mut alphabet: BTreeSet<usize> = ctx.s0_gens.iter().copied().collect();
    alphabet.extend(ctx.s0_gens.iter().map(|&a| g.inverse(a)));
    let mut layer: BTreeSet<usize> = if max_len == 0 { BTreeSet::new() } else { alphabet.clone() };
    let mut found = layer.clone();
    for _ in 0..max_len.saturating_sub(1) / 2 {
        layer = layer.iter().flat_map(|&x| alphabet.iter().map(move |&a| g.mul(g.mul(a, x), a))).collect();
        found.extend(&layer);
    }
    found
}

/// The least odd word length at which the palindrome scan produces all of
/// `T₀`, or `None` if it stabilises short of it.
pub fn palindrome_saturation(ctx: &AlternatingContext) -> Option<usize> {
    let t0: BTreeSet<usize> = ctx.t0.iter().copied().collect();
    let mut prev = 0;
    for len in (1..).step_by(2) {
        let found = odd_palindrome_scan(ctx, len);
        if found == t0 {
            return Some(len);
        }
        if found.len() == prev || !found.is_subset(&t0) {
            return None;
        }
        prev = found.len();
    }
    unreachable!()
}

/// `∏_{i ≥ 2} (1 + e_i q)` over the exponents of `W`.
pub fn alternating_product(g: &ReflectionGroup) -> IntPolynomial {
    let mut e = g.desc().exponents();
    e.sort_unstable();
    IntPolynomial::linear_product(e.into_iter().skip(1).map(|x| x as i64))
}
