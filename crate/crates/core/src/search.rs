//! Exhaustive surveys of the subgroups of a small group, used to look for
//! examples bearing on questions the theory leaves open. Results are
//! reported as data; nothing here asserts an answer.

use rayon::prelude::*;
use serde::Serialize;

use crate::cosets::{abs_cosets, check_almost_maximal, enumerate_subgroups, is_modular, Subgroup};
use crate::error::{Error, Result};
use crate::groups::ReflectionGroup;
use crate::lattice::{enumerate_flats, is_parabolic};
use crate::poly::IntPolynomial;

/// Default cap on the ambient group order (the order of `B_4`).
pub const DEFAULT_MAX_ORDER: usize = 1152;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchKind {
    /// Modular subgroups that are not generated by reflections.
    NonReflectionModular,
    /// Subgroups whose coset order is not graded.
    NonGraded,
    /// Subgroups whose coset order has a maximum element.
    MaximumElement,
    /// Non-parabolic reflection subgroups all of whose other cosets hold
    /// exactly one reflection.
    AlmostMaximal,
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupSummary {
    pub order: usize,
    pub generators: Vec<String>,
    pub reflection_subgroup: bool,
    pub modular: bool,
    pub cosets: usize,
    pub graded: bool,
    pub max_rank: usize,
    pub maximal_elements: usize,
    pub rank_polynomial: IntPolynomial,
    /// Only computed by the almost-maximal search.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parabolic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unique_reflection_per_coset: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub group: String,
    pub kind: SearchKind,
    pub classes_examined: usize,
    pub hits: Vec<SubgroupSummary>,
}

/// A short generating set: members are taken in index order and kept when
/// they enlarge the span.
pub fn generating_set(g: &ReflectionGroup, h: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = Subgroup::generated(g, &[]);
    for &x in h.members() {
        if span.len() == h.len() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = Subgroup::generated(g, &gens);
        }
    }
    gens
}

pub fn summarize(g: &ReflectionGroup, h: &Subgroup) -> SubgroupSummary {
    let (p, table) = abs_cosets(g, h);
    let (graded, max_rank) = p.is_graded();
    SubgroupSummary {
        order: h.len(),
        generators: generating_set(g, h).into_iter().map(|x| g.label(x)).collect(),
        reflection_subgroup: h.is_reflection_subgroup(g),
        modular: is_modular(g, h),
        cosets: table.len(),
        graded,
        max_rank,
        maximal_elements: p.maximal_elements().len(),
        rank_polynomial: p.rank_polynomial(),
        parabolic: None,
        unique_reflection_per_coset: None,
    }
}

/// Surveys every subgroup class of `g` and keeps those matching `kind`.
pub fn search(g: &ReflectionGroup, kind: SearchKind, max_order: usize) -> Result<SearchReport> {
    if g.len() > max_order {
        return Err(Error::TooLarge(format!("{} has order {} > {max_order}", g.desc(), g.len())));
    }
    let lattice = match kind {
        SearchKind::AlmostMaximal => Some(enumerate_flats(g.desc())?),
        _ => None,
    };
    let classes = match kind {
        SearchKind::AlmostMaximal => crate::cosets::reflection_subgroups(g, true),
        _ => enumerate_subgroups(g, true),
    };
    let hits: Vec<SubgroupSummary> = classes
        .par_iter()
        .filter_map(|h| {
            let mut s = summarize(g, h);
            let keep = match kind {
                SearchKind::NonReflectionModular => s.modular && !s.reflection_subgroup,
                SearchKind::NonGraded => !s.graded,
                SearchKind::MaximumElement => s.maximal_elements == 1,
                SearchKind::AlmostMaximal => {
                    let l = lattice.as_ref().expect("lattice");
                    let parabolic = is_parabolic(g, l, h).ok()?;
                    let report = check_almost_maximal(g, h, Some(parabolic));
                    s.parabolic = Some(parabolic);
                    s.unique_reflection_per_coset = Some(report.every_coset_has_unique_reflection);
                    !parabolic && report.every_coset_has_unique_reflection
                }
            };
            keep.then_some(s)
        })
        .collect();
    Ok(SearchReport { group: g.desc().to_string(), kind, classes_examined: classes.len(), hits })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(d: &str) -> ReflectionGroup {
        ReflectionGroup::new(d.parse().unwrap()).unwrap()
    }

    #[test]
    fn s4_surveys() {
        let g = group("S4");
        let all = search(&g, SearchKind::NonGraded, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(all.classes_examined, 11);
        // The trivial subgroup and S4 itself both give a maximum element.
        let maxima = search(&g, SearchKind::MaximumElement, DEFAULT_MAX_ORDER).unwrap();
        assert!(maxima.hits.iter().any(|h| h.order == 24));
        assert!(maxima.hits.iter().any(|h| h.order == 4 && !h.modular));
        assert!(search(&g, SearchKind::AlmostMaximal, DEFAULT_MAX_ORDER).unwrap().hits.is_empty());
    }

    #[test]
    fn generating_sets_generate() {
        let g = group("B3");
        for h in enumerate_subgroups(&g, true) {
            assert_eq!(Subgroup::generated(&g, &generating_set(&g, &h)), h);
        }
    }

    #[test]
    fn order_cap() {
        assert!(matches!(search(&group("S5"), SearchKind::NonGraded, 100), Err(Error::TooLarge(_))));
    }
}
