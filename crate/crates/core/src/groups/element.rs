use std::ops::Mul;

use crate::error::{Error, Result};

/// Permutation of `{1..n}`, stored 0-based in one-line form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self((0..n as u8).collect())
    }

    /// From 0-based images; `None` if not a bijection.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Self(images))
    }

    /// Transposition of the 1-based letters `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// All cycles (fixed points included), each starting at its least point,
    /// ordered by that point. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.0[i] as usize;
            }
            out.push(cyc);
        }
        out
    }
}

/// Signed permutation of `{±1..±n}` with `w(-i) = -w(i)`, stored as the
/// images of `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(Vec<i8>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        Self((1..=n as i8).collect())
    }

    /// From the images of `1..n`; `None` unless `|w|` is a bijection.
    pub fn from_images(images: Vec<i8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return None;
            }
            seen[a - 1] = true;
        }
        Some(Self(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[i8] {
        &self.0
    }

    /// Image of a nonzero signed letter.
    pub fn apply(&self, x: i8) -> i8 {
        let y = self.0[x.unsigned_abs() as usize - 1];
        if x < 0 {
            -y
        } else {
            y
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&x| self.apply(x)).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            let i = i as i8 + 1;
            inv[x.unsigned_abs() as usize - 1] = if x < 0 { -i } else { i };
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i as i8 + 1)
    }

    /// Number of `i` in `1..n` with `w(i) < 0`.
    pub fn sign_changes(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// Cycles of the underlying permutation `|w|` (1-based letters), each
    /// paired with the number of sign changes along it.
    pub fn abs_cycles(&self) -> Vec<(Vec<usize>, usize)> {
        let n = self.0.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut negs = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                let x = self.0[i - 1];
                if x < 0 {
                    negs += 1;
                }
                i = x.unsigned_abs() as usize;
            }
            out.push((cyc, negs));
        }
        out
    }

    /// The same element viewed in `G(2,n)`.
    pub fn to_colored(&self) -> ColoredPerm {
        let n = self.0.len();
        let mut perm = vec![0u8; n];
        let mut colors = vec![0u8; n];
        for (j, &x) in self.0.iter().enumerate() {
            let t = x.unsigned_abs() as usize - 1;
            perm[j] = t as u8;
            colors[t] = u8::from(x < 0);
        }
        ColoredPerm { r: 2, colors, perm: Perm(perm) }
    }

    /// The same element as a permutation of `Ω_n = {1, -1, 2, -2, ..}`,
    /// with `i` at position `2(i-1)` and `-i` at position `2(i-1)+1`.
    pub fn to_omega_perm(&self) -> Perm {
        let n = self.0.len();
        let mut images = vec![0u8; 2 * n];
        for i in 1..=n as i8 {
            images[omega_index(i)] = omega_index(self.apply(i)) as u8;
            images[omega_index(-i)] = omega_index(self.apply(-i)) as u8;
        }
        Perm(images)
    }
}

/// Position of a signed letter in the order `1 < -1 < 2 < -2 < ..`.
pub fn omega_index(x: i8) -> usize {
    2 * (x.unsigned_abs() as usize - 1) + usize::from(x < 0)
}

/// Signed letter at a position of `Ω_n`.
pub fn omega_letter(pos: usize) -> i8 {
    let a = (pos / 2 + 1) as i8;
    if pos % 2 == 1 {
        -a
    } else {
        a
    }
}

/// Element `[(c_1..c_n); π]` of `G(r,n)`; it sends the colored letter
/// `(j, a)` to `(π(j), a + c_{π(j)})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredPerm {
    perm: Perm,
    colors: Vec<u8>,
    r: u8,
}

impl ColoredPerm {
    pub fn identity(r: usize, n: usize) -> Self {
        Self { perm: Perm::identity(n), colors: vec![0; n], r: r as u8 }
    }

    pub fn new(r: usize, colors: Vec<u8>, perm: Perm) -> Option<Self> {
        if r == 0 || colors.len() != perm.degree() || colors.iter().any(|&c| c as usize >= r) {
            return None;
        }
        Some(Self { perm, colors, r: r as u8 })
    }

    pub fn color_order(&self) -> usize {
        self.r as usize
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    /// Wreath rule `[(c);π]·[(c');π'] = [(c_i + c'_{π^{-1}(i)}); ππ']`.
    pub fn compose(&self, other: &Self) -> Self {
        let r = self.r;
        let inv = self.perm.inverse();
        let colors = (0..self.colors.len())
            .map(|i| (self.colors[i] + other.colors[inv.apply(i)]) % r)
            .collect();
        Self { perm: self.perm.compose(&other.perm), colors, r }
    }

    pub fn inverse(&self) -> Self {
        let r = self.r;
        let colors = (0..self.colors.len())
            .map(|i| (r - self.colors[self.perm.apply(i)]) % r)
            .collect();
        Self { perm: self.perm.inverse(), colors, r }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.colors.iter().all(|&c| c == 0)
    }

    /// Action on a colored letter `(j, a)` (0-based letter).
    pub fn apply(&self, letter: usize, color: u8) -> (usize, u8) {
        let t = self.perm.apply(letter);
        (t, (color + self.colors[t]) % self.r)
    }

    /// Cycles of `π` (0-based, fixed points included) with their color sums mod r.
    pub fn colored_cycles(&self) -> Vec<(Vec<usize>, u8)> {
        self.perm
            .cycles()
            .into_iter()
            .map(|c| {
                let sum = c.iter().map(|&i| self.colors[i] as usize).sum::<usize>() % self.r as usize;
                (c, sum as u8)
            })
            .collect()
    }

    /// Every cycle has color sum zero.
    pub fn is_balanced(&self) -> bool {
        self.colored_cycles().iter().all(|(_, s)| *s == 0)
    }

    /// `r = 2` elements as signed permutations.
    pub fn to_signed(&self) -> Option<SignedPerm> {
        if self.r != 2 {
            return None;
        }
        let images = (0..self.degree())
            .map(|j| {
                let t = self.perm.apply(j);
                let v = t as i8 + 1;
                if self.colors[t] == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        Some(SignedPerm(images))
    }
}

/// Element of the dihedral group of order `2m`: the rotation `ρ^k` or the
/// reflection `s·ρ^k`, where `ρ s = s ρ^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElem {
    pub m: u16,
    pub reflection: bool,
    pub index: u16,
}

impl DihedralElem {
    pub fn rotation(m: usize, k: usize) -> Self {
        Self { m: m as u16, reflection: false, index: (k % m) as u16 }
    }

    pub fn reflection(m: usize, k: usize) -> Self {
        Self { m: m as u16, reflection: true, index: (k % m) as u16 }
    }

    pub fn compose(&self, other: &Self) -> Self {
        let m = self.m as usize;
        let (a, b) = (self.index as usize, other.index as usize);
        match (self.reflection, other.reflection) {
            (false, false) => Self::rotation(m, a + b),
            (false, true) => Self::reflection(m, b + m - a),
            (true, false) => Self::reflection(m, a + b),
            (true, true) => Self::rotation(m, b + m - a),
        }
    }

    pub fn inverse(&self) -> Self {
        if self.reflection {
            *self
        } else {
            Self::rotation(self.m as usize, self.m as usize - self.index as usize)
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.reflection && self.index == 0
    }
}

/// A group element of any supported family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Perm(Perm),
    Signed(SignedPerm),
    Colored(ColoredPerm),
    Dihedral(DihedralElem),
}

impl GroupElement {
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        use GroupElement::*;
        let mismatch = || Error::ElementMismatch {
            element: format!("{other}"),
            group: format!("the group of {self}"),
        };
        Ok(match (self, other) {
            (Perm(a), Perm(b)) if a.degree() == b.degree() => Perm(a.compose(b)),
            (Signed(a), Signed(b)) if a.degree() == b.degree() => Signed(a.compose(b)),
            (Colored(a), Colored(b)) if a.degree() == b.degree() && a.r == b.r => {
                Colored(a.compose(b))
            }
            (Dihedral(a), Dihedral(b)) if a.m == b.m => Dihedral(a.compose(b)),
            _ => return Err(mismatch()),
        })
    }

    pub fn inverse(&self) -> Self {
        match self {
            Self::Perm(p) => Self::Perm(p.inverse()),
            Self::Signed(p) => Self::Signed(p.inverse()),
            Self::Colored(p) => Self::Colored(p.inverse()),
            Self::Dihedral(p) => Self::Dihedral(p.inverse()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Self::Perm(p) => p.is_identity(),
            Self::Signed(p) => p.is_identity(),
            Self::Colored(p) => p.is_identity(),
            Self::Dihedral(p) => p.is_identity(),
        }
    }

    /// The identity of the same group as `self`.
    pub fn identity_like(&self) -> Self {
        match self {
            Self::Perm(p) => Self::Perm(Perm::identity(p.degree())),
            Self::Signed(p) => Self::Signed(SignedPerm::identity(p.degree())),
            Self::Colored(p) => Self::Colored(ColoredPerm::identity(p.color_order(), p.degree())),
            Self::Dihedral(p) => Self::Dihedral(DihedralElem::rotation(p.m as usize, 0)),
        }
    }

    /// `self * other * self^{-1}`.
    pub fn conjugate(&self, other: &Self) -> Self {
        &(self * other) * &self.inverse()
    }

    pub fn as_perm(&self) -> Option<&Perm> {
        match self {
            Self::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_signed(&self) -> Option<&SignedPerm> {
        match self {
            Self::Signed(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_colored(&self) -> Option<&ColoredPerm> {
        match self {
            Self::Colored(p) => Some(p),
            _ => None,
        }
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;

    /// Composition `(u*v)(x) = u(v(x))`. Panics on elements of different groups.
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.try_mul(rhs).expect("multiplying elements of different groups")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wreath_rule_matches_action_on_colored_letters() {
        let r = 3;
        let u = ColoredPerm::new(r, vec![1, 2, 0], Perm::from_images(vec![1, 2, 0]).unwrap()).unwrap();
        let v = ColoredPerm::new(r, vec![0, 1, 1], Perm::from_images(vec![0, 2, 1]).unwrap()).unwrap();
        let uv = u.compose(&v);
        for j in 0..3 {
            for a in 0..3u8 {
                let (j1, a1) = v.apply(j, a);
                assert_eq!(uv.apply(j, a), u.apply(j1, a1));
            }
        }
        assert!(u.compose(&u.inverse()).is_identity());
        assert!(u.inverse().compose(&u).is_identity());
    }

    #[test]
    fn signed_and_colored_views_agree() {
        // [(1,1); (1 2)] = (1 -2)(-1 2)
        let c = ColoredPerm::new(2, vec![1, 1], Perm::from_images(vec![1, 0]).unwrap()).unwrap();
        let s = c.to_signed().unwrap();
        assert_eq!(s.images(), &[-2, -1]);
        assert_eq!(s.to_colored(), c);
        assert!(c.is_balanced());
    }

    #[test]
    fn signed_inverse_and_cycles() {
        let w = SignedPerm::from_images(vec![-2, 1, -3]).unwrap();
        assert!(w.compose(&w.inverse()).is_identity());
        let cyc = w.abs_cycles();
        assert_eq!(cyc, vec![(vec![1, 2], 1), (vec![3], 1)]);
        assert_eq!(w.sign_changes(), 2);
        assert!(SignedPerm::from_images(vec![1, -1]).is_none());
    }

    #[test]
    fn omega_embedding_is_a_homomorphism() {
        let a = SignedPerm::from_images(vec![-2, 1, 3]).unwrap();
        let b = SignedPerm::from_images(vec![3, -1, 2]).unwrap();
        assert_eq!(a.compose(&b).to_omega_perm(), a.to_omega_perm().compose(&b.to_omega_perm()));
        for p in 0..6 {
            assert_eq!(omega_index(omega_letter(p)), p);
        }
    }

    #[test]
    fn dihedral_relations() {
        let m = 5;
        let rho = DihedralElem::rotation(m, 1);
        let s = DihedralElem::reflection(m, 0);
        // ρ s = s ρ^{-1}
        assert_eq!(rho.compose(&s), s.compose(&rho.inverse()));
        assert!(s.compose(&s).is_identity());
        let mut x = DihedralElem::rotation(m, 0);
        for _ in 0..m {
            x = x.compose(&rho);
        }
        assert!(x.is_identity());
    }
}
