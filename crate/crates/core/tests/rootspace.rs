use absorder::groups::ReflectionGroup;
use absorder::rootspace::{self, carter_independent, root_system, Flat};

fn group(d: &str) -> ReflectionGroup {
    ReflectionGroup::new(d.parse().unwrap()).unwrap()
}

const GROUPS: [&str; 11] = ["S2", "S3", "S4", "S5", "B1", "B2", "B3", "D3", "D4", "I2(3)", "I2(4)"];

#[test]
fn moved_space_dimension_is_length() {
    for d in GROUPS {
        let g = group(d);
        for w in 0..g.len() {
            let m = rootspace::mov(g.desc(), g.element(w)).unwrap();
            assert_eq!(m.dim(), g.length(w), "{d}: {}", g.label(w));
        }
    }
}

#[test]
fn moved_and_fixed_spaces_are_complementary() {
    for d in GROUPS {
        let g = group(d);
        for w in 0..g.len() {
            let m = rootspace::mov(g.desc(), g.element(w)).unwrap();
            let f = rootspace::fix(g.desc(), g.element(w)).unwrap();
            assert_eq!(m.dim() + f.dim(), m.ambient());
            assert_eq!(m.intersection(&f).dim(), 0);
            assert_eq!(m.sum(&f), Flat::full(m.ambient()));
            assert_eq!(f.complement(), m, "{d}");
        }
    }
}

#[test]
fn moved_spaces_grow_along_the_order() {
    for d in ["S4", "B3", "I2(4)"] {
        let g = group(d);
        let movs: Vec<Flat> = (0..g.len()).map(|w| rootspace::mov(g.desc(), g.element(w)).unwrap()).collect();
        for u in 0..g.len() {
            for v in 0..g.len() {
                if g.leq(u, v) {
                    assert!(movs[u].is_subspace_of(&movs[v]), "{d}: {} <= {}", g.label(u), g.label(v));
                }
            }
        }
    }
}

/// Left factors `t_1 ... t_k = w` read off a shortest path in the
/// reflection Cayley graph.
fn reduced_word(g: &ReflectionGroup, mut w: usize) -> Vec<usize> {
    let mut word = Vec::new();
    while g.length(w) > 0 {
        let t = *g
            .reflection_indices()
            .iter()
            .find(|&&t| g.length(g.mul(t, w)) + 1 == g.length(w))
            .expect("some reflection shortens w");
        word.push(t);
        w = g.mul(t, w);
    }
    word
}

#[test]
fn reduced_reflection_words_have_independent_roots() {
    for d in GROUPS {
        let g = group(d);
        let rs = root_system(g.desc()).unwrap();
        for w in 0..g.len() {
            let word = reduced_word(&g, w);
            let product = word.iter().fold(g.identity(), |acc, &t| g.mul(acc, t));
            assert_eq!(product, w);
            let roots: Vec<_> =
                word.iter().map(|&t| rs.roots[rs.root_of(g.element(t)).expect("root")].clone()).collect();
            assert!(carter_independent(&roots), "{d}: {}", g.label(w));
        }
    }
}

#[test]
fn root_systems_have_one_root_per_reflection() {
    for d in GROUPS {
        let g = group(d);
        let rs = root_system(g.desc()).unwrap();
        assert_eq!(rs.len(), g.reflection_indices().len(), "{d}");
        for (r, t) in rs.roots.iter().zip(&rs.reflections) {
            assert!(rootspace::is_positive(r));
            let m = rootspace::mov(g.desc(), t).unwrap();
            assert_eq!(m, Flat::span(rs.ambient, [r.clone()]), "{d}");
        }
        assert_eq!(rs.span().dim(), g.desc().coxeter_rank(), "{d}");
    }
}

#[test]
fn irrational_dihedral_roots_are_rejected() {
    for d in ["I2(5)", "I2(6)", "G(3,2)"] {
        assert!(root_system(&d.parse().unwrap()).is_err(), "{d}");
    }
}
