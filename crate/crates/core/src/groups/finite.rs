use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use super::{
    absolute_length, identity, reflections, simple_generators, CoxeterDescriptor, GroupElement,
    ReflectionSet,
};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A finite group enumerated by closure, with a hash index on its elements.
///
/// Elements are numbered in breadth-first discovery order from the identity
/// (index 0) under left multiplication by the generators.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl FiniteGroup {
    pub fn generate(identity: GroupElement, gens: &[GroupElement], limit: usize) -> Result<Self> {
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in gens {
                let y = g.try_mul(&x)?;
                if !index.contains_key(&y) {
                    if elements.len() >= limit {
                        return Err(Error::TooLarge(format!("group exceeds {limit} elements")));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        Ok(Self { elements, index })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `elements[i] * elements[j]`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = &self.elements[i] * &self.elements[j];
        self.index[&p]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }
}

/// Breadth-first distances from the identity in the Cayley graph with
/// generators acting by left multiplication; `None` for unreached elements.
pub fn cayley_distances(group: &FiniteGroup, gens: &[GroupElement]) -> Vec<Option<usize>> {
    let mut dist = vec![None; group.len()];
    let id = group.identity();
    dist[id] = Some(0);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].expect("queued elements have distances");
        for g in gens {
            let y = g * group.element(x);
            if let Some(j) = group.index_of(&y) {
                if dist[j].is_none() {
                    dist[j] = Some(d + 1);
                    queue.push_back(j);
                }
            }
        }
    }
    dist
}

/// Absolute length as the minimum length of a word in `gens`, by search.
pub fn absolute_length_bfs(group: &FiniteGroup, gens: &ReflectionSet, w: &GroupElement) -> Result<usize> {
    let target = group.index_of(w).ok_or_else(|| Error::Unreachable(w.to_string()))?;
    cayley_distances(group, &gens.elements)[target].ok_or_else(|| Error::Unreachable(w.to_string()))
}

/// A described reflection group with everything the poset and coset code
/// needs precomputed: lengths, inverses and left multiplication by each
/// reflection.
#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    desc: CoxeterDescriptor,
    group: FiniteGroup,
    reflections: ReflectionSet,
    reflection_index: Vec<usize>,
    lengths: Vec<usize>,
    inverses: Vec<usize>,
    left: Vec<Vec<u32>>,
    table: OnceLock<Option<Vec<u32>>>,
}

/// Groups up to this order get a full multiplication table on first use.
const TABLE_LIMIT: usize = 2048;

impl ReflectionGroup {
    pub fn new(desc: CoxeterDescriptor) -> Result<Self> {
        Self::with_limit(desc, 50_000)
    }

    pub fn with_limit(desc: CoxeterDescriptor, limit: usize) -> Result<Self> {
        desc.validate()?;
        if desc.order() > limit {
            return Err(Error::TooLarge(format!("{desc} has order {}", desc.order())));
        }
        let group = FiniteGroup::generate(identity(&desc), &simple_generators(&desc), limit)?;
        if group.len() != desc.order() {
            return Err(Error::InvalidDescriptor(format!(
                "{desc}: generated {} elements, expected {}",
                group.len(),
                desc.order()
            )));
        }
        let reflections = reflections(&desc);
        let reflection_index = reflections
            .elements
            .iter()
            .map(|t| group.index_of(t).ok_or_else(|| Error::Unreachable(t.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let lengths = group
            .elements()
            .iter()
            .map(|w| absolute_length(&desc, w))
            .collect::<Result<Vec<_>>>()?;
        let inverses = (0..group.len()).map(|i| group.inverse(i)).collect();
        let left = reflections
            .elements
            .iter()
            .map(|t| group.elements().iter().map(|x| group.index_of(&(t * x)).unwrap() as u32).collect())
            .collect();
        Ok(Self { desc, group, reflections, reflection_index, lengths, inverses, left, table: OnceLock::new() })
    }

    pub fn desc(&self) -> &CoxeterDescriptor {
        &self.desc
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.group.len()
    }

    pub fn is_empty(&self) -> bool {
        self.group.is_empty()
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        self.group.element(i)
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.group.index_of(g)
    }

    pub fn reflections(&self) -> &ReflectionSet {
        &self.reflections
    }

    /// Group indices of the reflections, in [`ReflectionSet`] order.
    pub fn reflection_indices(&self) -> &[usize] {
        &self.reflection_index
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let table = self.table.get_or_init(|| {
            let n = self.len();
            (n <= TABLE_LIMIT).then(|| {
                (0..n * n).map(|k| self.group.mul(k / n, k % n) as u32).collect()
            })
        });
        match table {
            Some(t) => t[i * self.len() + j] as usize,
            None => self.group.mul(i, j),
        }
    }

    pub fn identity(&self) -> usize {
        self.group.identity()
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Index of `t_k * x` for the `k`-th reflection.
    pub fn left_mul_reflection(&self, k: usize, x: usize) -> usize {
        self.left[k][x] as usize
    }

    /// `u ≤_T v` iff `l_T(v u^{-1}) = l_T(v) - l_T(u)`.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        let (lu, lv) = (self.lengths[u], self.lengths[v]);
        lu <= lv && self.lengths[self.mul(v, self.inverses[u])] == lv - lu
    }

    /// `sum_w q^{l_T(w)}`.
    pub fn rank_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_degrees(self.lengths.iter().copied())
    }

    /// Absolute lengths recomputed by breadth-first search over the
    /// reflection Cayley graph, independently of the closed formula.
    pub fn bfs_lengths(&self) -> Result<Vec<usize>> {
        cayley_distances(&self.group, &self.reflections.elements)
            .into_iter()
            .enumerate()
            .map(|(i, d)| d.ok_or_else(|| Error::Unreachable(self.element(i).to_string())))
            .collect()
    }

    pub fn label(&self, i: usize) -> String {
        self.element(i).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::parse_element;

    #[test]
    fn bfs_examples() {
        let s3 = CoxeterDescriptor::symmetric(3);
        let g = ReflectionGroup::new(s3).unwrap();
        let t = g.reflections();
        let e = identity(&s3);
        assert_eq!(absolute_length_bfs(g.group(), t, &e).unwrap(), 0);
        for r in &t.elements {
            assert_eq!(absolute_length_bfs(g.group(), t, r).unwrap(), 1);
        }
        let c = parse_element(&s3, "(1 2 3)").unwrap();
        assert_eq!(absolute_length_bfs(g.group(), t, &c).unwrap(), 2);

        let b2 = CoxeterDescriptor::hyperoctahedral(2);
        let g = ReflectionGroup::new(b2).unwrap();
        let w = parse_element(&b2, "(1 -1)(2 -2)").unwrap();
        assert_eq!(absolute_length_bfs(g.group(), g.reflections(), &w).unwrap(), 2);
    }

    #[test]
    fn unreachable_with_too_few_generators() {
        let s3 = CoxeterDescriptor::symmetric(3);
        let g = ReflectionGroup::new(s3).unwrap();
        let only = ReflectionSet {
            elements: vec![parse_element(&s3, "(1 2)").unwrap()],
            kind: super::super::ReflectionKind::CoxeterReflections,
        };
        let c = parse_element(&s3, "(1 2 3)").unwrap();
        assert!(matches!(absolute_length_bfs(g.group(), &only, &c), Err(Error::Unreachable(_))));
    }

    #[test]
    fn orders_match_descriptors() {
        for d in ["S5", "B3", "D4", "I2(8)", "G(3,3)", "G(2,2)", "G(1,3)"] {
            let desc: CoxeterDescriptor = d.parse().unwrap();
            assert_eq!(ReflectionGroup::new(desc).unwrap().len(), desc.order(), "{d}");
        }
    }
}
