//! Subgroups of a direct product `G1 × G2` from Goursat data.
//!
//! Each subgroup of `G1 × G2` corresponds to exactly one quintuple
//! `(A, B, C, D, φ)` with `B ⊴ A ≤ G1`, `D ⊴ C ≤ G2` and an isomorphism
//! `φ : A/B → C/D`; the subgroup is the fiber product
//! `{(a, c) : φ(a + B) = c + D}`. Sections are materialized as explicit
//! coset tables and isomorphisms are found by trying generator images.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::Result;
use crate::group::{AbelianGroup, Index, Limits, ProductEmbedding};
use crate::lattice::{all_subgroups, Backend, SubgroupLattice};
use crate::subgroup::Subgroup;

/// A section `A/B` with its coset table.
#[derive(Debug, Clone)]
pub struct Section {
    pub top: Subgroup,
    pub bottom: Subgroup,
    coset_of: HashMap<Index, usize>,
    /// Elements of `A` grouped by coset.
    members: Vec<Vec<Index>>,
    add: Vec<Vec<usize>>,
    orders: Vec<u64>,
}

impl Section {
    pub fn new(top: &Subgroup, bottom: &Subgroup) -> Self {
        let g = top.parent();
        let mut coset_of = HashMap::with_capacity(top.element_indices().len());
        let mut members: Vec<Vec<Index>> = Vec::new();
        for &a in top.element_indices() {
            if coset_of.contains_key(&a) {
                continue;
            }
            let id = members.len();
            let mut coset: Vec<Index> = bottom
                .element_indices()
                .iter()
                .map(|&b| g.add_idx(a, b))
                .collect();
            coset.sort_unstable();
            for &x in &coset {
                coset_of.insert(x, id);
            }
            members.push(coset);
        }
        let reps: Vec<Index> = members.iter().map(|m| m[0]).collect();
        let add: Vec<Vec<usize>> = reps
            .iter()
            .map(|&x| reps.iter().map(|&y| coset_of[&g.add_idx(x, y)]).collect())
            .collect();
        let orders = (0..reps.len())
            .map(|q| {
                let mut m = 1;
                let mut cur = q;
                while cur != 0 {
                    cur = add[cur][q];
                    m += 1;
                }
                m
            })
            .collect();
        Section {
            top: top.clone(),
            bottom: bottom.clone(),
            coset_of,
            members,
            add,
            orders,
        }
    }

    /// `|A/B|`.
    pub fn order(&self) -> usize {
        self.members.len()
    }

    fn order_profile(&self) -> Vec<u64> {
        let mut v = self.orders.clone();
        v.sort_unstable();
        v
    }

    fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(q) = queue.pop_front() {
            for &g in gens {
                let r = self.add[q][g];
                if !inside[r] {
                    inside[r] = true;
                    queue.push_back(r);
                }
            }
        }
        inside
    }

    fn generators(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (1..self.order()).collect();
        candidates.sort_by(|&a, &b| self.orders[b].cmp(&self.orders[a]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut inside = self.span(&gens);
        for q in candidates {
            if inside.iter().all(|&b| b) {
                break;
            }
            if !inside[q] {
                gens.push(q);
                inside = self.span(&gens);
            }
        }
        gens
    }
}

/// Every isomorphism `from → to`, each as the image table of coset ids.
pub fn isomorphisms(from: &Section, to: &Section) -> Vec<Vec<usize>> {
    if from.order() != to.order() || from.order_profile() != to.order_profile() {
        return Vec::new();
    }
    let gens = from.generators();
    let choices: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            (0..to.order())
                .filter(|&h| to.orders[h] == from.orders[g])
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        if let Some(map) = extend_homomorphism(from, to, &gens, &images) {
            out.push(map);
        }
        // Advance the mixed-radix counter over choices.
        let mut i = 0;
        loop {
            if i == pick.len() {
                return out;
            }
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Propagates `gens[i] ↦ images[i]` along the Cayley graph; `None` if the
/// assignment is not a well-defined bijective homomorphism.
fn extend_homomorphism(
    from: &Section,
    to: &Section,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = from.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(q) = queue.pop_front() {
        for (&g, &h) in gens.iter().zip(images) {
            let next = from.add[q][g];
            let value = to.add[map[q]][h];
            if map[next] == usize::MAX {
                map[next] = value;
                queue.push_back(next);
            } else if map[next] != value {
                return None;
            }
        }
    }
    let mut hit = vec![false; n];
    for &v in &map {
        if v == usize::MAX || hit[v] {
            return None;
        }
        hit[v] = true;
    }
    Some(map)
}

/// All sections `A/B` of a lattice.
pub fn sections(lattice: &SubgroupLattice) -> Vec<Section> {
    let mut out = Vec::new();
    for a in &lattice.subgroups {
        for b in &lattice.subgroups {
            if b.order() > a.order() {
                break;
            }
            if a.order() % b.order() == 0 && b.is_subgroup_of(a) {
                out.push(Section::new(a, b));
            }
        }
    }
    out
}

/// The lattice of `G1 × G2` (canonical product layout) via Goursat data.
pub fn goursat_subgroups(
    g1: &AbelianGroup,
    g2: &AbelianGroup,
    limits: &Limits,
) -> Result<SubgroupLattice> {
    let (product, embedding) = g1.direct_product(g2)?;
    limits.check_lattice("goursat_subgroups", &product)?;
    let s1 = sections(&all_subgroups(g1, limits)?);
    let s2 = sections(&all_subgroups(g2, limits)?);

    let mut seen: HashSet<Vec<Index>> = HashSet::new();
    let mut found = Vec::new();
    for left in &s1 {
        for right in &s2 {
            for phi in isomorphisms(left, right) {
                let elements = fiber_product(&product, &embedding, g1, g2, left, right, &phi);
                if seen.insert(elements.clone()) {
                    found.push(Subgroup::from_sorted_unchecked(&product, elements));
                }
            }
        }
    }
    Ok(SubgroupLattice::from_unsorted(
        product,
        found,
        Backend::Goursat,
    ))
}

fn fiber_product(
    product: &AbelianGroup,
    embedding: &ProductEmbedding,
    g1: &AbelianGroup,
    g2: &AbelianGroup,
    left: &Section,
    right: &Section,
    phi: &[usize],
) -> Vec<Index> {
    let mut out =
        Vec::with_capacity(left.top.element_indices().len() * right.bottom.element_indices().len());
    for &a in left.top.element_indices() {
        let target = phi[left.coset_of[&a]];
        for &c in &right.members[target] {
            out.push(embedding.pair_index(product, g1, a, g2, c));
        }
    }
    out.sort_unstable();
    out
}
