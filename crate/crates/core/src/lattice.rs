//! The geometric lattice of flats spanned by roots: enumeration, meet and
//! join, Möbius function, characteristic polynomial, modular elements, and
//! the comparison between modular subgroups and modular flats.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::cosets::{self, coset_minimum, enumerate_cosets, LengthContext, Subgroup};
use crate::error::{Error, Result};
use crate::groups::{CoxeterDescriptor, Family, ReflectionGroup};
use crate::poly::IntPolynomial;
use crate::posets::RankedPoset;
use crate::rootspace::{self, Flat, RootSystem};

/// The lattice `L_W`. Each flat is identified with the set of roots it
/// contains, stored as a bit mask over the positive roots.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    roots: RootSystem,
    masks: Vec<u64>,
    flats: Vec<Flat>,
    index: HashMap<u64, usize>,
    mobius: Vec<i64>,
    rank: usize,
}

fn check_size(desc: &CoxeterDescriptor) -> Result<()> {
    let ok = match desc.family {
        Family::A => desc.rank <= 6,
        Family::B | Family::D => desc.rank <= 4,
        Family::I2 => matches!(desc.m, 3 | 4),
        Family::G => desc.color_order <= 2 && desc.rank <= 4,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::TooLarge(format!("flat lattice of {desc} is outside the supported range")))
    }
}

/// All flats spanned by roots, in order of dimension.
pub fn enumerate_flats(desc: &CoxeterDescriptor) -> Result<FlatLattice> {
    check_size(desc)?;
    let roots = rootspace::root_system(desc)?;
    FlatLattice::from_roots(roots)
}

impl FlatLattice {
    pub fn from_roots(roots: RootSystem) -> Result<Self> {
        if roots.len() > 64 {
            return Err(Error::TooLarge(format!("{} roots", roots.len())));
        }
        let closure = |mask: u64| -> u64 { mask_of(&roots, &span_of(&roots, mask)) };
        let mut seen: HashMap<u64, ()> = HashMap::from([(0, ())]);
        let mut queue = VecDeque::from([0u64]);
        while let Some(m) = queue.pop_front() {
            for i in 0..roots.len() {
                if m >> i & 1 == 0 {
                    let next = closure(m | 1 << i);
                    if seen.insert(next, ()).is_none() {
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut entries: Vec<(Flat, u64)> = seen.into_keys().map(|m| (span_of(&roots, m), m)).collect();
        entries.sort_by(|a, b| a.0.dim().cmp(&b.0.dim()).then_with(|| a.0.cmp(&b.0)));
        let (flats, masks): (Vec<Flat>, Vec<u64>) = entries.into_iter().unzip();
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let rank = roots.span().dim();
        let mut lattice = Self { roots, masks, flats, index, mobius: Vec::new(), rank };
        lattice.mobius = lattice.compute_mobius();
        Ok(lattice)
    }

    fn compute_mobius(&self) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        for y in 0..self.len() {
            mu[y] = if y == 0 {
                1
            } else {
                -(0..y).filter(|&x| self.leq(x, y) && x != y).map(|x| mu[x]).sum::<i64>()
            };
        }
        mu
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn flat(&self, i: usize) -> &Flat {
        &self.flats[i]
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// Root mask of flat `i`.
    pub fn mask(&self, i: usize) -> u64 {
        self.masks[i]
    }

    /// `d`, the dimension of the span of all roots.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self, i: usize) -> usize {
        self.flats[i].dim()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn index_of(&self, f: &Flat) -> Option<usize> {
        self.index.get(&mask_of(&self.roots, f)).copied().filter(|&i| self.flats[i] == *f)
    }

    /// Index of the smallest flat containing the given roots.
    pub fn closure(&self, mask: u64) -> usize {
        self.index[&mask_of(&self.roots, &span_of(&self.roots, mask))]
    }

    pub fn leq(&self, y: usize, z: usize) -> bool {
        self.masks[y] & !self.masks[z] == 0
    }

    pub fn join(&self, y: usize, z: usize) -> usize {
        self.closure(self.masks[y] | self.masks[z])
    }

    /// Span of the roots lying in both flats.
    pub fn meet(&self, y: usize, z: usize) -> usize {
        self.index[&(self.masks[y] & self.masks[z])]
    }

    pub fn mobius(&self, y: usize) -> i64 {
        self.mobius[y]
    }

    /// `χ(q) = Σ_Y μ(0, Y) q^{d - rk Y}`.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let mut c = vec![0i64; self.rank + 1];
        for y in 0..self.len() {
            c[self.rank - self.dim(y)] += self.mobius[y];
        }
        IntPolynomial::new(c)
    }

    /// Characteristic polynomial of the interval `[0, z]`.
    pub fn interval_characteristic_polynomial(&self, z: usize) -> IntPolynomial {
        let r = self.dim(z);
        let mut c = vec![0i64; r + 1];
        for y in (0..self.len()).filter(|&y| self.leq(y, z)) {
            c[r - self.dim(y)] += self.mobius[y];
        }
        IntPolynomial::new(c)
    }

    /// `rk Y + rk Z = rk(Y ∧ Z) + rk(Y ∨ Z)` for every flat `Y`.
    pub fn is_modular_element(&self, z: usize) -> bool {
        (0..self.len()).all(|y| {
            self.dim(y) + self.dim(z) == self.dim(self.meet(y, z)) + self.dim(self.join(y, z))
        })
    }

    /// `Y ∩ Z` is a flat for every flat `Y`.
    pub fn intersections_are_flats(&self, z: usize) -> bool {
        (0..self.len()).all(|y| intersection_dim(&self.flats[y], &self.flats[z]) == self.dim(self.meet(y, z)))
    }

    pub fn report(&self) -> LatticeReport {
        let flats = (0..self.len())
            .into_par_iter()
            .map(|i| FlatReport {
                index: i,
                dim: self.dim(i),
                flat: self.flats[i].clone(),
                mobius: self.mobius[i],
                modular: self.is_modular_element(i),
            })
            .collect();
        LatticeReport { rank: self.rank, flats, characteristic_polynomial: self.characteristic_polynomial() }
    }

    /// The lattice as a ranked poset graded by dimension, for export.
    pub fn hasse(&self) -> RankedPoset {
        let covers = (0..self.len())
            .flat_map(|y| (0..self.len()).map(move |z| (y, z)))
            .filter(|&(y, z)| self.dim(z) == self.dim(y) + 1 && self.leq(y, z))
            .collect();
        let labels = self.flats.iter().map(ToString::to_string).collect();
        let ranks = (0..self.len()).map(|y| self.dim(y)).collect();
        RankedPoset::from_covers(labels, ranks, covers).expect("flats are graded by dimension")
    }

    /// Flat index of `Mov(w)` for every element of the group.
    pub fn mov_indices(&self, g: &ReflectionGroup) -> Result<Vec<usize>> {
        (0..g.len())
            .into_par_iter()
            .map(|w| {
                let m = rootspace::mov(g.desc(), g.element(w))?;
                self.index_of(&m).ok_or(Error::FlatNotInLattice)
            })
            .collect()
    }

    /// Root mask of the reflections in `h`.
    fn reflection_mask(&self, g: &ReflectionGroup, h: &Subgroup) -> u64 {
        let mut mask = 0;
        for (i, t) in self.roots.reflections.iter().enumerate() {
            if g.index_of(t).is_some_and(|x| h.contains(x)) {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// `V_H`, the span of the roots of the reflections in `H`.
    pub fn v_h(&self, g: &ReflectionGroup, h: &Subgroup) -> usize {
        self.closure(self.reflection_mask(g, h))
    }

    /// The parabolic subgroup `W_Y` generated by the reflections of the
    /// roots in `Y`.
    pub fn parabolic_subgroup(&self, g: &ReflectionGroup, y: usize) -> Subgroup {
        let gens: Vec<usize> = (0..self.roots.len())
            .filter(|&i| self.masks[y] >> i & 1 == 1)
            .map(|i| g.index_of(&self.roots.reflections[i]).expect("reflection in group"))
            .collect();
        Subgroup::generated(g, &gens)
    }
}

fn span_of(roots: &RootSystem, mask: u64) -> Flat {
    Flat::span(
        roots.ambient,
        roots.roots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, r)| r.clone()),
    )
}

fn mask_of(roots: &RootSystem, f: &Flat) -> u64 {
    roots
        .roots
        .iter()
        .enumerate()
        .filter(|(_, r)| f.contains_vector(r))
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn intersection_dim(a: &Flat, b: &Flat) -> usize {
    a.dim() + b.dim() - a.sum(b).dim()
}

#[derive(Clone, Debug, Serialize)]
pub struct FlatReport {
    pub index: usize,
    pub dim: usize,
    pub flat: Flat,
    pub mobius: i64,
    pub modular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeReport {
    pub rank: usize,
    pub flats: Vec<FlatReport>,
    pub characteristic_polynomial: IntPolynomial,
}

/// `(-1)^{rk Y} μ(0, Y) = #{w : Mov(w) = Y}` for every flat.
#[derive(Clone, Debug, Serialize)]
pub struct MobiusCountCheck {
    pub holds: bool,
    /// `(dim, μ, count)` per flat.
    pub rows: Vec<(usize, i64, usize)>,
}

pub fn mobius_mov_count_check(g: &ReflectionGroup, l: &FlatLattice) -> Result<MobiusCountCheck> {
    let movs = l.mov_indices(g)?;
    let mut counts = vec![0usize; l.len()];
    for m in movs {
        counts[m] += 1;
    }
    let rows: Vec<(usize, i64, usize)> = (0..l.len()).map(|y| (l.dim(y), l.mobius(y), counts[y])).collect();
    let holds = rows.iter().all(|&(d, mu, c)| if d % 2 == 0 { mu } else { -mu } == c as i64);
    Ok(MobiusCountCheck { holds, rows })
}

/// `W_T(q) = (-q)^d χ(-1/q)`.
pub fn characteristic_identity_holds(g: &ReflectionGroup, l: &FlatLattice) -> bool {
    g.rank_polynomial() == l.characteristic_polynomial().reversed(l.rank()).negate_variable()
}

/// Whether `H` contains the reflection of every root in `V_H`. `H` must be
/// generated by reflections.
pub fn is_parabolic(g: &ReflectionGroup, l: &FlatLattice, h: &Subgroup) -> Result<bool> {
    if !h.is_reflection_subgroup(g) {
        return Err(Error::NotReflectionSubgroup(format!("order {} subgroup of {}", h.len(), g.desc())));
    }
    let mask = l.reflection_mask(g, h);
    Ok(l.masks[l.closure(mask)] == mask)
}

/// The parabolic subgroups `W_Y`, one per flat, in flat order.
pub fn parabolic_subgroups(g: &ReflectionGroup, l: &FlatLattice) -> Vec<Subgroup> {
    (0..l.len()).map(|y| l.parabolic_subgroup(g, y)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularEquivalenceReport {
    pub subgroup_order: usize,
    pub flat: Flat,
    /// Every coset has a minimum.
    pub modular_subgroup: bool,
    /// The rank identity holds against every flat.
    pub modular_element: bool,
    /// Agrees with `modular_element`.
    pub intersections_are_flats: bool,
    /// For every `w`: `w` is the minimum of `wH` iff `Mov(w) ∩ V_H = 0`.
    pub minimum_criterion: bool,
    /// For every `w`: `w` is minimal in `wH` iff `Mov(w) ∧ V_H = 0̂`.
    pub minimal_criterion: bool,
    /// Modular factorization of the characteristic polynomial.
    pub lattice_factorization: bool,
    /// `W_T(q) = H_T(q) Σ_{Mov(w) ∧ V_H = 0̂} q^{ℓ_T(w)}`.
    pub length_factorization: bool,
    pub agree: bool,
}

/// Evaluates both sides of the modular subgroup / modular flat
/// correspondence for a parabolic `H`, plus the two element criteria and
/// the two factorization identities (each of which should hold exactly
/// when `V_H` is modular).
pub fn theorem_modular_equivalence(
    g: &ReflectionGroup,
    l: &FlatLattice,
    h: &Subgroup,
) -> Result<ModularEquivalenceReport> {
    if !is_parabolic(g, l, h)? {
        return Err(Error::NotParabolic);
    }
    let z = l.v_h(g, h);
    let movs = l.mov_indices(g)?;
    let ctx = LengthContext::whole(g);
    let table = enumerate_cosets(g, h);
    let minima: Vec<_> = table.cosets.par_iter().map(|c| coset_minimum(g, &ctx, c)).collect();
    let modular_subgroup = minima.iter().all(|m| m.has_minimum());

    let zf = l.flat(z);
    let (minimum_criterion, minimal_criterion) = (0..g.len())
        .into_par_iter()
        .map(|w| {
            let m = &minima[table.coset_of[w]];
            let is_min = m.minimum == Some(w);
            let is_minimal = m.minimal_elements.contains(&w);
            let trivial_intersection = intersection_dim(l.flat(movs[w]), zf) == 0;
            let trivial_meet = l.meet(movs[w], z) == l.bottom();
            (is_min == trivial_intersection, is_minimal == trivial_meet)
        })
        .reduce(|| (true, true), |a, b| (a.0 && b.0, a.1 && b.1));

    let modular_element = l.is_modular_element(z);
    let intersections_are_flats = l.intersections_are_flats(z);

    // q^{rk Z} χ_L(q) = χ_{[0,Z]}(q) Σ_{Y ∧ Z = 0̂} μ(0,Y) q^{d - rk Y}
    let d = l.rank();
    let mut complement = vec![0i64; d + 1];
    for y in (0..l.len()).filter(|&y| l.meet(y, z) == l.bottom()) {
        complement[d - l.dim(y)] += l.mobius(y);
    }
    let lattice_factorization = l.characteristic_polynomial().shift(l.dim(z))
        == &l.interval_characteristic_polynomial(z) * &IntPolynomial::new(complement);

    let meet_free = IntPolynomial::from_degrees(
        (0..g.len()).filter(|&w| l.meet(movs[w], z) == l.bottom()).map(|w| g.length(w)),
    );
    let length_factorization = g.rank_polynomial() == &h.ambient_rank_polynomial(g) * &meet_free;

    let agree = modular_subgroup == modular_element
        && modular_element == intersections_are_flats
        && minimum_criterion
        && minimal_criterion
        && lattice_factorization == modular_element
        && length_factorization == modular_element;
    Ok(ModularEquivalenceReport {
        subgroup_order: h.len(),
        flat: zf.clone(),
        modular_subgroup,
        modular_element,
        intersections_are_flats,
        minimum_criterion,
        minimal_criterion,
        lattice_factorization,
        length_factorization,
        agree,
    })
}

/// The converse direction check used in the parabolic regression: a
/// reflection subgroup whose `V_H` is modular need not be modular.
pub fn modular_flat_but_not_modular(g: &ReflectionGroup, l: &FlatLattice, h: &Subgroup) -> (bool, bool) {
    (l.is_modular_element(l.v_h(g, h)), cosets::is_modular(g, h))
}
