//! The acceptance checks, one function per criterion. Each returns a
//! [`CriterionResult`] carrying a short human-readable detail line.

use std::fmt::Write as _;

use serde::Serialize;

use crate::alternating::{self, AlternatingContext};
use crate::cosets::{
    abs_cosets, coset_minimum, enumerate_cosets, enumerate_subgroups, factorization_holds, is_modular,
    sigma_map, EmbeddedSubgroup, LengthContext, Subgroup,
};
use crate::error::Result;
use crate::groups::{parse_element, simple_generators, CoxeterDescriptor, ReflectionGroup};
use crate::lattice::{self, enumerate_flats};
use crate::matchings;
use crate::poly::IntPolynomial;
use crate::posets::abs_group;
use crate::tuples;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} [{:>2}] {}: {}", self.id, self.name, self.detail)
    }
}

pub const CRITERIA: [(u8, &str); 14] = [
    (1, "rank polynomial of Abs(W) is the exponent product"),
    (2, "closed-form absolute length equals BFS length"),
    (3, "modular iff the rank polynomial factors"),
    (4, "non-modular coset regressions"),
    (5, "modular subgroup iff modular flat, with lattice identities"),
    (6, "modular flat over a non-modular subgroup"),
    (7, "coset minima form an order ideal and Abs(W/H) is graded"),
    (8, "balanced and matching rank polynomials"),
    (9, "matching bijection and flip-graph isomorphism"),
    (10, "maximal intervals of the matching order"),
    (11, "hyperoctahedral subgroup is quasi-modular but not modular"),
    (12, "alternating subgroup suite"),
    (13, "tree formula for maximal chains of tuple orders"),
    (14, "colored tuple rank polynomial and modular stabilizer"),
];

/// Runs one criterion by number.
pub fn run(id: u8) -> Result<CriterionResult> {
    let (passed, detail) = match id {
        1 => exponent_products()?,
        2 => formula_matches_bfs()?,
        3 => factorization_criterion()?,
        4 => coset_regressions()?,
        5 => flat_correspondence()?,
        6 => modular_flat_regression()?,
        7 => coset_minima_ideal()?,
        8 => balanced_polynomials()?,
        9 => matching_bijection()?,
        10 => matching_intervals()?,
        11 => hyperoctahedral_quasi_modular()?,
        12 => alternating_suite()?,
        13 => tree_formula()?,
        14 => colored_tuples()?,
        _ => return Err(crate::Error::InvalidArgument(format!("no criterion {id}"))),
    };
    let name = CRITERIA[id as usize - 1].1;
    Ok(CriterionResult { id, name, passed, detail })
}

pub fn run_all() -> Result<Vec<CriterionResult>> {
    CRITERIA.iter().map(|&(id, _)| run(id)).collect()
}

type Outcome = Result<(bool, String)>;

fn group(d: &str) -> Result<ReflectionGroup> {
    ReflectionGroup::new(d.parse()?)
}

fn subgroup(g: &ReflectionGroup, gens: &str) -> Result<Subgroup> {
    Ok(EmbeddedSubgroup::parse(g, gens)?.subgroup)
}

/// Collects failures into a comma-separated list, or a summary when all pass.
struct Tally {
    checked: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checked: 0, failures: Vec::new(), notes: Vec::new() }
    }

    /// Context appended to the detail line without affecting the verdict.
    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, summary: &str) -> (bool, String) {
        let mut line = if self.failures.is_empty() {
            format!("{} checks: {summary}", self.checked)
        } else {
            format!("{} of {} failed: {}", self.failures.len(), self.checked, self.failures.join(", "))
        };
        if !self.notes.is_empty() {
            line = format!("{line} (note: {})", self.notes.join("; "));
        }
        (self.failures.is_empty(), line)
    }
}

fn eq1_groups() -> Vec<String> {
    let mut v: Vec<String> = (2..=6).map(|n| format!("S{n}")).collect();
    v.extend((1..=4).map(|n| format!("B{n}")));
    v.push("D4".into());
    v.extend((2..=8).map(|m| format!("I2({m})")));
    v
}

fn exponent_products() -> Outcome {
    let mut t = Tally::new();
    for d in eq1_groups() {
        let g = group(&d)?;
        let product = IntPolynomial::linear_product(g.desc().exponents().into_iter().map(|e| e as i64));
        let poset = abs_group(&g).rank_polynomial();
        t.check(poset == product, || format!("{d}: {poset} vs {product}"));
    }
    Ok(t.finish("A1..A5, B1..B4, D4, I2(2..8)"))
}

fn formula_matches_bfs() -> Outcome {
    let mut t = Tally::new();
    let mut groups = eq1_groups();
    groups.extend(["G(2,3)", "G(3,2)", "G(3,3)"].map(String::from));
    let mut elements = 0;
    for d in groups {
        let g = group(&d)?;
        let bfs = g.bfs_lengths()?;
        elements += g.len();
        let bad = (0..g.len()).find(|&i| bfs[i] != g.length(i));
        t.check(bad.is_none(), || {
            let i = bad.unwrap_or_default();
            format!("{d}: {} has formula {} but BFS {}", g.label(i), g.length(i), bfs[i])
        });
    }
    Ok(t.finish(&format!("{elements} elements agree")))
}

fn factorization_criterion() -> Outcome {
    let mut t = Tally::new();
    let mut modular = 0;
    for d in ["S4", "B3"] {
        let g = group(d)?;
        for h in enumerate_subgroups(&g, true) {
            let m = is_modular(&g, &h);
            modular += m as usize;
            t.check(m == factorization_holds(&g, &h), || format!("{d}: subgroup of order {}", h.len()));
        }
    }
    Ok(t.finish(&format!("{modular} modular classes")))
}

fn coset_regressions() -> Outcome {
    let mut t = Tally::new();
    let g = group("S4")?;
    let h = subgroup(&g, "(1 2);(3 4)")?;
    let w = g.index_of(&parse_element(g.desc(), "(1 3)(2 4)")?).expect("element of S4");
    let table = enumerate_cosets(&g, &h);
    let m = coset_minimum(&g, &LengthContext::whole(&g), &table.cosets[table.coset_of[w]]);
    let minimal: Vec<String> = m.minimal_elements.iter().map(|&x| g.label(x)).collect();
    t.check(!m.has_minimum() && minimal == ["(1 3)(2 4)", "(1 4)(2 3)"], || format!("S4 coset minimal {minimal:?}"));

    let g = group("B4")?;
    let h = subgroup(&g, "((1 2));((1 -2));((3 4));((3 -4))")?;
    let r = g.index_of(&parse_element(g.desc(), "((1 3))")?).expect("element of B4");
    let table = enumerate_cosets(&g, &h);
    let c = &table.cosets[table.coset_of[r]];
    let m = coset_minimum(&g, &LengthContext::whole(&g), c);
    let reflections: Vec<usize> = c.members.iter().copied().filter(|&x| g.length(x) == 1).collect();
    t.check(m.has_unique_min_length && !m.has_minimum() && reflections == [r], || {
        format!("B4 coset: unique-min-length {} minimum {:?}", m.has_unique_min_length, m.minimum)
    });
    Ok(t.finish("two minimal elements in S4; lone reflection without minimum in B4"))
}

fn flat_correspondence() -> Outcome {
    let mut t = Tally::new();
    let mut parabolics = 0;
    for d in ["S4", "S5", "B3", "D4"] {
        let desc: CoxeterDescriptor = d.parse()?;
        let g = ReflectionGroup::new(desc)?;
        let l = enumerate_flats(&desc)?;
        let counts = lattice::mobius_mov_count_check(&g, &l)?;
        t.check(counts.holds, || format!("{d}: Möbius counts"));
        t.check(lattice::characteristic_identity_holds(&g, &l), || format!("{d}: characteristic identity"));
        for h in lattice::parabolic_subgroups(&g, &l) {
            parabolics += 1;
            let r = lattice::theorem_modular_equivalence(&g, &l, &h)?;
            t.check(r.agree, || format!("{d}: parabolic on {}", r.flat));
        }
    }
    Ok(t.finish(&format!("{parabolics} parabolic subgroups")))
}

fn modular_flat_regression() -> Outcome {
    let desc: CoxeterDescriptor = "B2".parse()?;
    let g = ReflectionGroup::new(desc)?;
    let l = enumerate_flats(&desc)?;
    let h = subgroup(&g, "(1 -1);(2 -2)")?;
    let (flat_modular, subgroup_modular) = lattice::modular_flat_but_not_modular(&g, &l, &h);
    let passed = flat_modular && !subgroup_modular;
    Ok((passed, format!("V_H modular: {flat_modular}, H modular: {subgroup_modular}")))
}

fn coset_minima_ideal() -> Outcome {
    let mut t = Tally::new();
    let mut n = 0;
    for d in ["S4", "B3"] {
        let g = group(d)?;
        let rank = g.desc().coxeter_rank();
        for h in enumerate_subgroups(&g, true) {
            if !h.is_reflection_subgroup(&g) || !is_modular(&g, &h) {
                continue;
            }
            n += 1;
            let s = sigma_map(&g, &h)?;
            let (poset, _) = abs_cosets(&g, &h);
            let expected = rank - h.max_length(&g);
            let graded = poset.is_graded();
            t.check(s.order_ideal && s.order_embedding && graded == (true, expected), || {
                format!("{d}: order {} ideal {} graded {graded:?} want rank {expected}", h.len(), s.order_ideal)
            });
        }
    }
    Ok(t.finish(&format!("{n} modular reflection subgroups")))
}

fn balanced_polynomials() -> Outcome {
    let mut t = Tally::new();
    for (r, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let (p, _, _) = matchings::abs_balanced(r, n)?;
        let (got, want) = (p.rank_polynomial(), matchings::balanced_product(r, n));
        t.check(got == want, || format!("C({r},{n}): {got} vs {want}"));
    }
    for n in 1..=4 {
        let (got, want) = (matchings::abs_matchings(n).rank_polynomial(), matchings::matching_product(n));
        t.check(got == want, || format!("M_{n}: {got} vs {want}"));
    }
    Ok(t.finish("C(r,n) and M_n products"))
}

fn matching_bijection() -> Outcome {
    let mut t = Tally::new();
    for n in 1..=4 {
        let r = matchings::bijection_check(n)?;
        t.check(r.round_trip && r.inverse_round_trip && r.base_to_identity, || format!("n={n}: f, g not inverse"));
        t.check(r.graph_isomorphism, || {
            format!("n={n}: flip graph has {} edges, pseudoreflection graph {}", r.delta_edges, r.gamma_edges)
        });
        if !r.order_isomorphism {
            t.note(format!("f is not an order isomorphism for n={n}"));
        }
    }
    for n in 1..=3 {
        t.check(matchings::matchings_match_cosets(n)?, || format!("n={n}: Abs(M_n) vs Abs(S_2n/B_n)"));
    }
    Ok(t.finish("bijection, graph isomorphism, coset model"))
}

fn matching_intervals() -> Outcome {
    let mut t = Tally::new();
    for (n, size) in [(3, 5), (4, 14)] {
        let (sizes, same) = matchings::maximal_interval_sizes(n);
        t.check(same && sizes.iter().all(|&s| s == size), || format!("M_{n}: sizes {sizes:?}, isomorphic {same}"));
    }
    Ok(t.finish("sizes 5 and 14, pairwise isomorphic"))
}

fn hyperoctahedral_quasi_modular() -> Outcome {
    let mut t = Tally::new();
    for n in [2, 3] {
        let w = matchings::quasi_modularity_bn_check(n)?;
        t.check(w.identity_holds, || format!("B{n}: product identity fails"));
        t.check(!w.modular && w.witness_length == Some(2 * n - 1), || {
            format!("B{n}: modular {} witness {:?}", w.modular, w.witness)
        });
    }
    Ok(t.finish("B2 in S4 and B3 in S6"))
}

/// Simple reflections of `g`, one per conjugacy class.
pub fn simple_reflection_classes(g: &ReflectionGroup) -> Vec<usize> {
    let mut reps: Vec<usize> = Vec::new();
    for s in simple_generators(g.desc()) {
        let s = g.index_of(&s).expect("generator");
        let conjugate = |a: usize, b: usize| (0..g.len()).any(|w| g.mul(g.mul(w, a), g.inverse(w)) == b);
        if !reps.iter().any(|&r| conjugate(r, s)) {
            reps.push(s);
        }
    }
    reps
}

fn alternating_suite() -> Outcome {
    let mut t = Tally::new();
    let mut detail = String::new();
    for d in ["S4", "B3", "D4"] {
        let g = group(d)?;
        let reps = simple_reflection_classes(&g);
        let mut posets = Vec::new();
        for &s0 in &reps {
            let ctx = AlternatingContext::new(group(d)?, g.element(s0))?;
            let name = format!("{d} s0={}", g.label(s0));
            let lemmas = alternating::length_lemmas_check(&ctx);
            t.check(lemmas.holds, || format!("{name}: length lemmas"));
            let phi = alternating::phi_isomorphism_check(&ctx);
            t.check(phi.holds, || format!("{name}: phi"));
            let r0 = alternating::r0_ideal_check(&ctx);
            t.check(r0.holds, || format!("{name}: R0"));
            let poly = ctx.rank_polynomial();
            let quotient = g.rank_polynomial().div_exact(&IntPolynomial::new(vec![1, 1]));
            let product = alternating::alternating_product(&g);
            t.check(poly == product && quotient.as_ref() == Some(&product), || format!("{name}: {poly} vs {product}"));
            posets.push(alternating::abs_alternating(&ctx));
        }
        if posets.len() == 2 {
            let same_poly = posets[0].rank_polynomial() == posets[1].rank_polynomial();
            let iso = posets[0].is_isomorphic(&posets[1]);
            t.check(same_poly && !iso, || format!("{d}: same polynomial {same_poly}, isomorphic {iso}"));
        }
        let _ = write!(detail, "{d}: {} class(es); ", reps.len());
    }
    Ok(t.finish(detail.trim_end_matches("; ")))
}

fn tree_formula() -> Outcome {
    let mut t = Tally::new();
    for n in 2..=5 {
        for k in 1..n {
            let row = tuples::chain_count_row(n, k)?;
            t.check(row.matches, || format!("({n},{k}): formula {} vs {}", row.formula, row.brute_force));
        }
    }
    for n in 3..=5 {
        let ctx = AlternatingContext::with_first_generator(group(&format!("S{n}"))?)?;
        let brute = alternating::abs_alternating(&ctx).count_maximal_chains();
        let formula = tuples::alternating_chain_count(n)?;
        t.check(brute == formula, || format!("alternating S{n}: {formula} vs {brute}"));
    }
    for n in 2..=5u32 {
        let hurwitz = (1..n as u128).product::<u128>() * (n as u128).pow(n - 2);
        let formula = tuples::tree_chain_formula(n as usize, n as usize - 1)?;
        t.check(formula == hurwitz, || format!("Hurwitz n={n}: {formula} vs {hurwitz}"));
    }
    Ok(t.finish("tuple orders, alternating groups, Hurwitz counts"))
}

fn colored_tuples() -> Outcome {
    let mut t = Tally::new();
    for r in 1..=3 {
        for n in 2..=3 {
            for k in 1..n {
                let rep = tuples::colored_tuple_rank_polynomial(r, n, k)?;
                t.check(rep.stabilizer_modular, || format!("(r,n,k)=({r},{n},{k}): stabilizer not modular"));
                t.check(rep.matches_stated, || {
                    format!("({r},{n},{k}): {} vs stated {}", rep.rank_polynomial, rep.stated_product)
                });
            }
        }
    }
    Ok(t.finish("colored tuple products"))
}
