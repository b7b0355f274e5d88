//! Finite reflection groups as concrete element types, their reflection sets,
//! and absolute length by closed formula and by Cayley-graph search.

mod descriptor;
mod element;
mod finite;
mod notation;

use serde::{Deserialize, Serialize};

pub use descriptor::{CoxeterDescriptor, Family};
pub use element::{omega_index, omega_letter, ColoredPerm, DihedralElem, GroupElement, Perm, SignedPerm};
pub use finite::{absolute_length_bfs, cayley_distances, FiniteGroup, ReflectionGroup};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionKind {
    CoxeterReflections,
    Pseudoreflections,
}

/// The generating set `T` used for absolute length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionSet {
    pub elements: Vec<GroupElement>,
    pub kind: ReflectionKind,
}

impl ReflectionSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }
}

pub fn identity(desc: &CoxeterDescriptor) -> GroupElement {
    let n = desc.rank;
    match desc.family {
        Family::A => GroupElement::Perm(Perm::identity(n)),
        Family::B | Family::D => GroupElement::Signed(SignedPerm::identity(n)),
        Family::I2 => GroupElement::Dihedral(DihedralElem::rotation(desc.m, 0)),
        Family::G => GroupElement::Colored(ColoredPerm::identity(desc.color_order, n)),
    }
}

/// Whether `w` is an element of the group described by `desc`.
pub fn contains(desc: &CoxeterDescriptor, w: &GroupElement) -> bool {
    match (desc.family, w) {
        (Family::A, GroupElement::Perm(p)) => p.degree() == desc.rank,
        (Family::B, GroupElement::Signed(p)) => p.degree() == desc.rank,
        (Family::D, GroupElement::Signed(p)) => p.degree() == desc.rank && p.sign_changes() % 2 == 0,
        (Family::I2, GroupElement::Dihedral(d)) => d.m as usize == desc.m,
        (Family::G, GroupElement::Colored(c)) => {
            c.degree() == desc.rank && c.color_order() == desc.color_order
        }
        _ => false,
    }
}

pub(crate) fn signed_pair(n: usize, a: usize, b: i8) -> GroupElement {
    // ((a b)) for b = ±j
    let mut images: Vec<i8> = (1..=n as i8).collect();
    let j = b.unsigned_abs() as usize;
    let sign = b.signum();
    images[a - 1] = b;
    images[j - 1] = sign * a as i8;
    GroupElement::Signed(SignedPerm::from_images(images).expect("valid signed transposition"))
}

pub(crate) fn sign_flip(n: usize, a: usize) -> GroupElement {
    let mut images: Vec<i8> = (1..=n as i8).collect();
    images[a - 1] = -(a as i8);
    GroupElement::Signed(SignedPerm::from_images(images).expect("valid sign flip"))
}

fn colored_transposition(r: usize, n: usize, a: usize, b: usize, c: usize) -> GroupElement {
    let mut colors = vec![0u8; n];
    colors[a] = c as u8;
    colors[b] = ((r - c) % r) as u8;
    let perm = Perm::transposition(n, a + 1, b + 1);
    GroupElement::Colored(ColoredPerm::new(r, colors, perm).expect("valid colored transposition"))
}

fn colored_diagonal(r: usize, n: usize, a: usize, c: usize) -> GroupElement {
    let mut colors = vec![0u8; n];
    colors[a] = c as u8;
    GroupElement::Colored(ColoredPerm::new(r, colors, Perm::identity(n)).expect("valid diagonal"))
}

/// All reflections (pseudoreflections for `G(r,n)`), in a fixed order.
pub fn reflections(desc: &CoxeterDescriptor) -> ReflectionSet {
    let n = desc.rank;
    let mut elements = Vec::new();
    let kind = match desc.family {
        Family::A => {
            for a in 1..=n {
                for b in a + 1..=n {
                    elements.push(GroupElement::Perm(Perm::transposition(n, a, b)));
                }
            }
            ReflectionKind::CoxeterReflections
        }
        Family::B | Family::D => {
            if desc.family == Family::B {
                for a in 1..=n {
                    elements.push(sign_flip(n, a));
                }
            }
            for a in 1..=n {
                for b in a + 1..=n {
                    elements.push(signed_pair(n, a, b as i8));
                    elements.push(signed_pair(n, a, -(b as i8)));
                }
            }
            ReflectionKind::CoxeterReflections
        }
        Family::I2 => {
            elements.extend((0..desc.m).map(|k| GroupElement::Dihedral(DihedralElem::reflection(desc.m, k))));
            ReflectionKind::CoxeterReflections
        }
        Family::G => {
            let r = desc.color_order;
            for a in 0..n {
                for b in a + 1..n {
                    for c in 0..r {
                        elements.push(colored_transposition(r, n, a, b, c));
                    }
                }
            }
            for a in 0..n {
                for c in 1..r {
                    elements.push(colored_diagonal(r, n, a, c));
                }
            }
            ReflectionKind::Pseudoreflections
        }
    };
    ReflectionSet { elements, kind }
}

/// A generating set: simple reflections for the Coxeter families, and
/// `(i i+1)` plus one diagonal generator for `G(r,n)`.
///
/// Type B uses `(1 -1), ((1 2)), .., ((n-1 n))`; type D uses
/// `((1 -2)), ((1 2)), .., ((n-1 n))`.
pub fn simple_generators(desc: &CoxeterDescriptor) -> Vec<GroupElement> {
    let n = desc.rank;
    match desc.family {
        Family::A => (1..n).map(|i| GroupElement::Perm(Perm::transposition(n, i, i + 1))).collect(),
        Family::B => std::iter::once(sign_flip(n, 1))
            .chain((1..n).map(|i| signed_pair(n, i, i as i8 + 1)))
            .collect(),
        Family::D => std::iter::once(signed_pair(n, 1, -2))
            .chain((1..n).map(|i| signed_pair(n, i, i as i8 + 1)))
            .collect(),
        Family::I2 => vec![
            GroupElement::Dihedral(DihedralElem::reflection(desc.m, 0)),
            GroupElement::Dihedral(DihedralElem::reflection(desc.m, 1)),
        ],
        Family::G => {
            let r = desc.color_order;
            let mut gens: Vec<GroupElement> =
                (0..n.saturating_sub(1)).map(|i| colored_transposition(r, n, i, i + 1, 0)).collect();
            if r > 1 {
                gens.push(colored_diagonal(r, n, 0, 1));
            }
            gens
        }
    }
}

/// Absolute length by closed formula: `n - #cycles` in type A,
/// `n - #balanced cycles` for signed and colored permutations, and
/// `0/1/2` for identity/reflection/rotation in a dihedral group.
pub fn absolute_length(desc: &CoxeterDescriptor, w: &GroupElement) -> Result<usize> {
    if !contains(desc, w) {
        return Err(Error::ElementMismatch { element: w.to_string(), group: desc.to_string() });
    }
    let n = desc.rank;
    Ok(match w {
        GroupElement::Perm(p) => n - p.cycles().len(),
        GroupElement::Signed(p) => n - p.abs_cycles().iter().filter(|(_, negs)| negs % 2 == 0).count(),
        GroupElement::Colored(c) => n - c.colored_cycles().iter().filter(|(_, s)| *s == 0).count(),
        GroupElement::Dihedral(d) => match (d.reflection, d.index) {
            (true, _) => 1,
            (false, 0) => 0,
            (false, _) => 2,
        },
    })
}

/// Parses an element in the notation of its family: cycle notation for
/// `S_n`, signed cycle notation for B/D, `[c..; p..]` for `G(r,n)` (signed
/// or plain cycles are also accepted when `r` is 2 or 1), and `e`, `r^k`,
/// `sr^k` for dihedral groups.
pub fn parse_element(desc: &CoxeterDescriptor, s: &str) -> Result<GroupElement> {
    let n = desc.rank;
    let w = match desc.family {
        Family::A => GroupElement::Perm(Perm::parse_cycles(s, n)?),
        Family::B | Family::D => GroupElement::Signed(SignedPerm::parse_cycles(s, n)?),
        Family::I2 => GroupElement::Dihedral(DihedralElem::parse(s, desc.m)?),
        Family::G => {
            let r = desc.color_order;
            if s.trim_start().starts_with('[') {
                GroupElement::Colored(ColoredPerm::parse(s, r)?)
            } else if r == 2 {
                GroupElement::Colored(SignedPerm::parse_cycles(s, n)?.to_colored())
            } else if r == 1 {
                let p = Perm::parse_cycles(s, n)?;
                GroupElement::Colored(ColoredPerm::new(1, vec![0; n], p).expect("r = 1"))
            } else {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: "expected [colors; one-line permutation]".into(),
                });
            }
        }
    };
    if !contains(desc, &w) {
        return Err(Error::ElementMismatch { element: w.to_string(), group: desc.to_string() });
    }
    Ok(w)
}

/// Parses a `;`-separated list of elements, e.g. `"(1 2);(3 4)"`.
pub fn parse_elements(desc: &CoxeterDescriptor, s: &str) -> Result<Vec<GroupElement>> {
    s.split(';').map(str::trim).filter(|x| !x.is_empty()).map(|x| parse_element(desc, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(desc: &CoxeterDescriptor, s: &str) -> GroupElement {
        parse_element(desc, s).unwrap()
    }

    #[test]
    fn reflection_counts() {
        let s3 = CoxeterDescriptor::symmetric(3);
        let t = reflections(&s3);
        assert_eq!(t.len(), 3);
        for s in ["(1 2)", "(1 3)", "(2 3)"] {
            assert!(t.contains(&el(&s3, s)));
        }
        let b2 = CoxeterDescriptor::hyperoctahedral(2);
        let t = reflections(&b2);
        assert_eq!(t.len(), 4);
        for s in ["((1 2))", "((1 -2))", "(1 -1)", "(2 -2)"] {
            assert!(t.contains(&el(&b2, s)), "{s}");
        }
        assert_eq!(reflections(&CoxeterDescriptor::even_signed(4)).len(), 12);
        assert_eq!(reflections(&CoxeterDescriptor::hyperoctahedral(4)).len(), 16);
        assert_eq!(reflections(&CoxeterDescriptor::dihedral(7)).len(), 7);
        assert_eq!(reflections(&CoxeterDescriptor::colored(3, 3)).len(), 3 * 3 + 3 * 2);
    }

    #[test]
    fn g22_pseudoreflections_and_balanced_ones() {
        let g = CoxeterDescriptor::colored(2, 2);
        let t = reflections(&g);
        assert_eq!(t.kind, ReflectionKind::Pseudoreflections);
        assert_eq!(t.len(), 4);
        let balanced: Vec<_> =
            t.elements.iter().filter(|x| x.as_colored().unwrap().is_balanced()).collect();
        assert_eq!(balanced.len(), 2);
    }

    #[test]
    fn formula_examples() {
        let s4 = CoxeterDescriptor::symmetric(4);
        assert_eq!(absolute_length(&s4, &el(&s4, "(1 2)(3 4)")).unwrap(), 2);
        let b2 = CoxeterDescriptor::hyperoctahedral(2);
        assert_eq!(absolute_length(&b2, &el(&b2, "(1 -1)(2 -2)")).unwrap(), 2);
        let g22 = CoxeterDescriptor::colored(2, 2);
        assert_eq!(absolute_length(&g22, &el(&g22, "[1,1; 2 1]")).unwrap(), 1);
        let i5 = CoxeterDescriptor::dihedral(5);
        assert_eq!(absolute_length(&i5, &el(&i5, "r^2")).unwrap(), 2);
        assert_eq!(absolute_length(&i5, &el(&i5, "sr^2")).unwrap(), 1);
    }

    #[test]
    fn mismatch_is_an_error() {
        let s4 = CoxeterDescriptor::symmetric(4);
        let b2 = CoxeterDescriptor::hyperoctahedral(2);
        let w = el(&b2, "(1 -1)");
        assert!(matches!(absolute_length(&s4, &w), Err(Error::ElementMismatch { .. })));
        let d2 = CoxeterDescriptor::even_signed(2);
        assert!(parse_element(&d2, "(1 -1)").is_err());
    }

    #[test]
    fn reflections_are_involutions_for_coxeter_families() {
        for desc in [
            CoxeterDescriptor::symmetric(4),
            CoxeterDescriptor::hyperoctahedral(3),
            CoxeterDescriptor::even_signed(4),
            CoxeterDescriptor::dihedral(6),
        ] {
            for t in reflections(&desc).elements {
                assert!((&t * &t).is_identity());
                assert_eq!(absolute_length(&desc, &t).unwrap(), 1);
            }
        }
    }
}
