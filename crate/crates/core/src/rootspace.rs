//! Exact rational linear algebra over the crystallographic root systems:
//! roots, flats in canonical echelon form, moved and fixed spaces.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groups::{
    self, sign_flip, signed_pair, CoxeterDescriptor, DihedralElem, Family, GroupElement, Perm,
};

pub type Vector = Vec<Rational64>;

fn q(x: i64) -> Rational64 {
    Rational64::from_integer(x)
}

/// A linear subspace of `Q^n`, stored as the nonzero rows of its reduced
/// row-echelon basis so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flat {
    ambient: usize,
    rows: Vec<Vector>,
}

/// Reduces `rows` in place to reduced row-echelon form and drops zero rows.
fn rref(mut rows: Vec<Vector>, ncols: usize) -> Vec<Vector> {
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(p) = (pivot_row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let lead = rows[pivot_row][col];
        for x in rows[pivot_row].iter_mut() {
            *x /= lead;
        }
        let pivot = rows[pivot_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != pivot_row && !row[col].is_zero() {
                let f = row[col];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= f * p;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

impl Flat {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { q(1) } else { q(0) }).collect())
            .collect();
        Self { ambient, rows }
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().inspect(|v| assert_eq!(v.len(), ambient)).collect();
        Self { ambient, rows: rref(rows, ambient) }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn contains_vector(&self, v: &[Rational64]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rref(rows, self.ambient).len() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Flat) -> bool {
        self.rows.iter().all(|r| other.contains_vector(r))
    }

    /// `Y + Z`.
    pub fn sum(&self, other: &Flat) -> Flat {
        Flat::span(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    /// Orthogonal complement for the standard inner product.
    pub fn complement(&self) -> Flat {
        Flat::span(self.ambient, kernel(&self.rows, self.ambient))
    }

    /// `Y ∩ Z`, as the complement of `Y^⊥ + Z^⊥`.
    pub fn intersection(&self, other: &Flat) -> Flat {
        self.complement().sum(&other.complement()).complement()
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({})", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))?;
        }
        write!(f, ">")
    }
}

fn ratio_string(x: &Rational64) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

impl Serialize for Flat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(ratio_string).collect()).collect();
        let mut st = s.serialize_struct("Flat", 3)?;
        st.serialize_field("ambient", &self.ambient)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

/// Basis of `{x : row . x = 0 for every row}`.
fn kernel(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let r = rref(rows.to_vec(), ncols);
    let pivots: Vec<usize> =
        r.iter().map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero row")).collect();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![q(0); ncols];
            v[free] = q(1);
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[free];
            }
            v
        })
        .collect()
}

/// Square rational matrix, row-major.
pub type Matrix = Vec<Vector>;

fn signed_matrix(images: &[i8]) -> Matrix {
    let n = images.len();
    let mut m = vec![vec![q(0); n]; n];
    for (i, &w) in images.iter().enumerate() {
        m[w.unsigned_abs() as usize - 1][i] = q(w.signum() as i64);
    }
    m
}

fn perm_matrix(p: &Perm) -> Matrix {
    let images: Vec<i8> = p.images().iter().map(|&x| x as i8 + 1).collect();
    signed_matrix(&images)
}

/// A faithful realization of `I2(3)` as `S_3` and of `I2(4)` as `B_2`,
/// sending `s` and `sr` to the two simple reflections.
fn dihedral_model(d: &DihedralElem) -> Result<GroupElement> {
    let (s, sr, m) = match d.m {
        3 => (
            GroupElement::Perm(Perm::transposition(3, 1, 2)),
            GroupElement::Perm(Perm::transposition(3, 2, 3)),
            3,
        ),
        4 => (sign_flip(2, 1), signed_pair(2, 1, 2), 4),
        m => return Err(Error::UnsupportedFamily(format!("I2({m}) has no rational root system"))),
    };
    let rot = &s * &sr;
    let mut w = s.identity_like();
    for _ in 0..d.index as usize % m {
        w = &w * &rot;
    }
    Ok(if d.reflection { &s * &w } else { w })
}

fn model_descriptor(desc: &CoxeterDescriptor) -> Result<CoxeterDescriptor> {
    match desc.family {
        Family::A | Family::B | Family::D => Ok(*desc),
        Family::I2 if desc.m == 3 => Ok(CoxeterDescriptor::symmetric(3)),
        Family::I2 if desc.m == 4 => Ok(CoxeterDescriptor::hyperoctahedral(2)),
        Family::G if desc.color_order == 1 => Ok(CoxeterDescriptor::symmetric(desc.rank)),
        Family::G if desc.color_order == 2 => Ok(CoxeterDescriptor::hyperoctahedral(desc.rank)),
        _ => Err(Error::UnsupportedFamily(format!("{desc} has no rational root system"))),
    }
}

/// The matrix of `w` acting on `Q^n`, where `n` is the dimension of the
/// ambient space of [`root_system`].
pub fn matrix(desc: &CoxeterDescriptor, w: &GroupElement) -> Result<Matrix> {
    model_descriptor(desc)?;
    if !groups::contains(desc, w) {
        return Err(Error::ElementMismatch { element: w.to_string(), group: desc.to_string() });
    }
    match w {
        GroupElement::Perm(p) => Ok(perm_matrix(p)),
        GroupElement::Signed(p) => Ok(signed_matrix(p.images())),
        GroupElement::Colored(c) => match c.to_signed() {
            Some(p) => Ok(signed_matrix(p.images())),
            None => Ok(perm_matrix(c.perm())),
        },
        GroupElement::Dihedral(d) => {
            let model = dihedral_model(d)?;
            let m = model_descriptor(desc)?;
            matrix(&m, &model)
        }
    }
}

/// Positive roots with their reflections, in the group's own element type.
///
/// Positive means the first nonzero coordinate is positive.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub desc: CoxeterDescriptor,
    pub ambient: usize,
    pub roots: Vec<Vector>,
    pub reflections: Vec<GroupElement>,
}

impl RootSystem {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Root index of a reflection.
    pub fn root_of(&self, t: &GroupElement) -> Option<usize> {
        self.reflections.iter().position(|x| x == t)
    }

    /// Span of all roots.
    pub fn span(&self) -> Flat {
        Flat::span(self.ambient, self.roots.iter().cloned())
    }
}

fn unit_combo(n: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = vec![q(0); n];
    for &(i, c) in terms {
        v[i - 1] = q(c);
    }
    v
}

pub fn root_system(desc: &CoxeterDescriptor) -> Result<RootSystem> {
    desc.validate()?;
    let model = model_descriptor(desc)?;
    let n = model.rank;
    let mut roots = Vec::new();
    let mut model_refl = Vec::new();
    if model.family == Family::B {
        for i in 1..=n {
            roots.push(unit_combo(n, &[(i, 1)]));
            model_refl.push(sign_flip(n, i));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            roots.push(unit_combo(n, &[(i, 1), (j, -1)]));
            match model.family {
                Family::A => model_refl.push(GroupElement::Perm(Perm::transposition(n, i, j))),
                _ => model_refl.push(signed_pair(n, i, j as i8)),
            }
            if model.family != Family::A {
                roots.push(unit_combo(n, &[(i, 1), (j, 1)]));
                model_refl.push(signed_pair(n, i, -(j as i8)));
            }
        }
    }
    let reflections = match desc.family {
        Family::A | Family::B | Family::D => model_refl,
        Family::G => model_refl
            .into_iter()
            .map(|t| match t {
                GroupElement::Perm(p) => GroupElement::Colored(
                    groups::ColoredPerm::new(1, vec![0; n], p).expect("uncolored"),
                ),
                GroupElement::Signed(p) => GroupElement::Colored(p.to_colored()),
                other => other,
            })
            .collect(),
        Family::I2 => {
            let all = (0..desc.m).map(|k| DihedralElem::reflection(desc.m, k));
            let mut lookup = Vec::new();
            for d in all {
                lookup.push((dihedral_model(&d)?, GroupElement::Dihedral(d)));
            }
            model_refl
                .iter()
                .map(|t| lookup.iter().find(|(m, _)| m == t).map(|(_, d)| d.clone()).expect("reflection model"))
                .collect()
        }
    };
    Ok(RootSystem { desc: *desc, ambient: n, roots, reflections })
}

fn minus_identity(m: &Matrix) -> Matrix {
    let mut m = m.clone();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= Rational64::one();
    }
    m
}

/// Column space of `M_w - I`.
pub fn mov(desc: &CoxeterDescriptor, w: &GroupElement) -> Result<Flat> {
    let m = minus_identity(&matrix(desc, w)?);
    let n = m.len();
    let columns = (0..n).map(|j| m.iter().map(|row| row[j]).collect());
    Ok(Flat::span(n, columns))
}

/// Kernel of `M_w - I`.
pub fn fix(desc: &CoxeterDescriptor, w: &GroupElement) -> Result<Flat> {
    let m = minus_identity(&matrix(desc, w)?);
    let n = m.len();
    Ok(Flat::span(n, kernel(&m, n)))
}

/// Whether the vectors are linearly independent over `Q`.
pub fn carter_independent(roots: &[Vector]) -> bool {
    match roots.first() {
        None => true,
        Some(r) => rref(roots.to_vec(), r.len()).len() == roots.len(),
    }
}

/// Integer coordinates of a root, for display.
pub fn integer_coords(v: &[Rational64]) -> Vec<i64> {
    v.iter().map(|x| if x.is_integer() { x.to_integer() } else { panic!("non-integral root {x}") }).collect()
}

/// Whether `v` has a positive first nonzero coordinate.
pub fn is_positive(v: &[Rational64]) -> bool {
    v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}
