//! Shared fixtures for the benchmarks.

use absorder::cosets::{EmbeddedSubgroup, Subgroup};
use absorder::ReflectionGroup;

pub fn group(desc: &str) -> ReflectionGroup {
    ReflectionGroup::new(desc.parse().expect("descriptor")).expect("group")
}

/// Subgroup generated by `;`-separated elements in cycle notation.
pub fn subgroup(g: &ReflectionGroup, gens: &str) -> Subgroup {
    EmbeddedSubgroup::parse(g, gens).expect("generators").subgroup
}

/// `S_{n-1}` inside `S_n`, generated by adjacent transpositions.
pub fn point_stabilizer(g: &ReflectionGroup) -> Subgroup {
    let n = g.desc().degree();
    let gens: Vec<String> = (1..n - 1).map(|i| format!("({} {})", i, i + 1)).collect();
    subgroup(g, &gens.join(";"))
}
