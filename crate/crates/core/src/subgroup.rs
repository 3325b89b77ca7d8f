//! Subgroups as explicit sorted element sets.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Element, Index};

/// A subgroup of a materialized parent group.
///
/// Identity, equality and ordering are decided by the element set alone;
/// generators are carried along for presentations and reports. Subgroups
/// order by size first and then by their sorted element lists.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: AbelianGroup,
    elements: Vec<Index>,
    generators: Vec<Index>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.parent == other.parent
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements
            .len()
            .cmp(&other.elements.len())
            .then_with(|| self.elements.cmp(&other.elements))
            .then_with(|| self.parent.cmp(&other.parent))
    }
}

impl Subgroup {
    pub fn trivial(g: &AbelianGroup) -> Self {
        Subgroup {
            parent: g.clone(),
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    /// The parent group as a subgroup of itself, generated by the unit vectors.
    pub fn whole(g: &AbelianGroup) -> Self {
        Subgroup {
            parent: g.clone(),
            elements: (0..g.index_count()).collect(),
            generators: (0..g.rank()).map(|i| g.unit_idx(i)).collect(),
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated_by(g: &AbelianGroup, gens: &[Element]) -> Result<Self> {
        let mut idx = Vec::with_capacity(gens.len());
        for x in gens {
            g.element(x.residues())?;
            idx.push(g.encode(x));
        }
        Ok(Self::generated_by_indices(g, &idx))
    }

    pub(crate) fn generated_by_indices(g: &AbelianGroup, gens: &[Index]) -> Self {
        let mut elements = vec![0];
        for &x in gens {
            elements = extend(g, &elements, x);
        }
        Subgroup {
            parent: g.clone(),
            elements,
            generators: gens.iter().copied().filter(|&x| x != 0).collect(),
        }
    }

    /// Wraps a sorted element set known to be a subgroup and picks generators.
    pub(crate) fn from_sorted_unchecked(g: &AbelianGroup, elements: Vec<Index>) -> Self {
        let generators = greedy_generators(g, &elements);
        Subgroup {
            parent: g.clone(),
            elements,
            generators,
        }
    }

    /// Rebuilds a subgroup from stored parts, checking every invariant.
    pub fn from_parts(
        g: &AbelianGroup,
        elements: &[Element],
        generators: &[Element],
    ) -> Result<Self> {
        let mut idx = Vec::with_capacity(elements.len());
        for x in elements {
            g.element(x.residues())?;
            idx.push(g.encode(x));
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InconsistentSubgroup(
                "elements are not sorted and distinct".into(),
            ));
        }
        let closure = Self::generated_by(g, generators)?;
        if closure.elements != idx {
            return Err(Error::InconsistentSubgroup(
                "generators do not generate the stored element set".into(),
            ));
        }
        Ok(closure)
    }

    pub fn parent(&self) -> &AbelianGroup {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() as u64 == self.parent.order()
    }

    pub fn element_indices(&self) -> &[Index] {
        &self.elements
    }

    pub fn generator_indices(&self) -> &[Index] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.elements.iter().map(|&i| self.parent.decode(i))
    }

    pub fn generators(&self) -> Vec<Element> {
        self.generators
            .iter()
            .map(|&i| self.parent.decode(i))
            .collect()
    }

    /// A generating set determined by the element set alone: elements of
    /// largest order first, ties broken by canonical order.
    pub fn canonical_generators(&self) -> Vec<Element> {
        greedy_generators(&self.parent, &self.elements)
            .into_iter()
            .map(|i| self.parent.decode(i))
            .collect()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.parent.element(x.residues()).is_ok() && self.contains_idx(self.parent.encode(x))
    }

    #[inline]
    pub fn contains_idx(&self, x: Index) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.elements.iter().all(|&x| other.contains_idx(x))
    }

    /// Largest element order in the subgroup.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .map(|&x| self.parent.order_idx(x))
            .max()
            .unwrap_or(1)
    }

    fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    /// Smallest subgroup containing both.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        let mut elements = self.elements.clone();
        let mut generators = self.generators.clone();
        for &x in &other.generators {
            if !contains(&elements, x) {
                elements = extend(&self.parent, &elements, x);
                generators.push(x);
            }
        }
        Ok(Subgroup {
            parent: self.parent.clone(),
            elements,
            generators,
        })
    }

    /// Join with the cyclic subgroup `⟨x⟩`.
    pub(crate) fn join_idx(&self, x: Index) -> Subgroup {
        if self.contains_idx(x) {
            return self.clone();
        }
        let mut generators = self.generators.clone();
        generators.push(x);
        Subgroup {
            parent: self.parent.clone(),
            elements: extend(&self.parent, &self.elements, x),
            generators,
        }
    }
}

#[inline]
pub(crate) fn contains(sorted: &[Index], x: Index) -> bool {
    sorted.binary_search(&x).is_ok()
}

/// Sorted element set of `⟨S, x⟩` for a sorted subgroup `S`.
pub(crate) fn extend(g: &AbelianGroup, sorted: &[Index], x: Index) -> Vec<Index> {
    if contains(sorted, x) {
        return sorted.to_vec();
    }
    let mut out = sorted.to_vec();
    let mut shift = x;
    while !contains(sorted, shift) {
        out.extend(sorted.iter().map(|&s| g.add_idx(s, shift)));
        shift = g.add_idx(shift, x);
    }
    out.sort_unstable();
    out
}

/// A small generating set: repeatedly take the highest-order element not yet
/// covered, smallest index first among equals.
pub(crate) fn greedy_generators(g: &AbelianGroup, elements: &[Index]) -> Vec<Index> {
    let mut candidates: Vec<(u64, Index)> = elements.iter().map(|&x| (g.order_idx(x), x)).collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut span = vec![0];
    let mut gens = Vec::new();
    for (_, x) in candidates {
        if span.len() == elements.len() {
            break;
        }
        if !contains(&span, x) {
            span = extend(g, &span, x);
            gens.push(x);
        }
    }
    gens
}

/// `⟨x⟩`, generated by `x` (no generators for the identity).
pub fn cyclic_subgroup(g: &AbelianGroup, x: &Element) -> Result<Subgroup> {
    g.element(x.residues())?;
    Ok(cyclic_subgroup_idx(g, g.encode(x)))
}

pub(crate) fn cyclic_subgroup_idx(g: &AbelianGroup, x: Index) -> Subgroup {
    let mut elements = vec![0];
    let mut cur = x;
    while cur != 0 {
        elements.push(cur);
        cur = g.add_idx(cur, x);
    }
    elements.sort_unstable();
    Subgroup {
        parent: g.clone(),
        elements,
        generators: if x == 0 { Vec::new() } else { vec![x] },
    }
}

pub fn intersect(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    h.same_parent(k)?;
    let elements: Vec<Index> = h
        .elements
        .iter()
        .copied()
        .filter(|&x| k.contains_idx(x))
        .collect();
    Ok(Subgroup::from_sorted_unchecked(&h.parent, elements))
}

/// Least `m ≥ 1` with `m·x ∈ H`.
pub fn relative_order(g: &AbelianGroup, h: &Subgroup, x: &Element) -> Result<u64> {
    if h.parent() != g {
        return Err(Error::ParentMismatch);
    }
    g.element(x.residues())?;
    Ok(relative_order_idx(g, h, g.encode(x)))
}

pub(crate) fn relative_order_idx(g: &AbelianGroup, h: &Subgroup, x: Index) -> u64 {
    let mut m = 1;
    let mut cur = x;
    while !h.contains_idx(cur) {
        cur = g.add_idx(cur, x);
        m += 1;
    }
    m
}
