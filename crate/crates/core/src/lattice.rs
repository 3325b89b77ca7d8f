//! Complete subgroup lattices by join-closure over cyclic subgroups.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::{AbelianGroup, Index, Limits};
use crate::subgroup::{cyclic_subgroup_idx, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    JoinClosure,
    Goursat,
}

impl Backend {
    pub fn name(self) -> &'static str {
        match self {
            Backend::JoinClosure => "join-closure",
            Backend::Goursat => "goursat",
        }
    }
}

/// All subgroups of `parent`, sorted by order and then element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupLattice {
    pub parent: AbelianGroup,
    pub subgroups: Vec<Subgroup>,
    pub backend: Backend,
}

impl SubgroupLattice {
    pub(crate) fn from_unsorted(
        parent: AbelianGroup,
        mut subgroups: Vec<Subgroup>,
        backend: Backend,
    ) -> Self {
        subgroups.sort();
        subgroups.dedup();
        SubgroupLattice {
            parent,
            subgroups,
            backend,
        }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.subgroups.binary_search(h).is_ok()
    }

    /// Same parent and same subgroups, regardless of backend or generators.
    pub fn same_subgroups(&self, other: &SubgroupLattice) -> bool {
        self.parent == other.parent && self.subgroups == other.subgroups
    }
}

/// `{⟨x⟩ : x ∈ G}` without repeats, sorted.
pub fn all_cyclic_subgroups(g: &AbelianGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    limits.check_lattice("all_cyclic_subgroups", g)?;
    let mut covered = vec![false; g.index_count() as usize];
    let mut out = Vec::new();
    for x in 0..g.index_count() {
        if covered[x as usize] {
            continue;
        }
        let c = cyclic_subgroup_idx(g, x);
        // Every generator of ⟨x⟩ yields the same subgroup.
        let o = g.order_idx(x);
        for m in 1..=o {
            if crate::arith::gcd(m, o) == 1 {
                covered[g.scale_idx(x, m) as usize] = true;
            }
        }
        out.push(c);
    }
    out.sort();
    Ok(out)
}

/// The full lattice: cyclic subgroups closed under joins until nothing new
/// appears. Joining each member with each cyclic subgroup reaches every
/// pairwise join, since a join `S ∨ T` is `S` joined with `T`'s cyclic
/// generators one at a time.
pub fn all_subgroups(g: &AbelianGroup, limits: &Limits) -> Result<SubgroupLattice> {
    let cyclic = all_cyclic_subgroups(g, limits)?;
    let seeds: Vec<Index> = cyclic
        .iter()
        .filter_map(|c| c.generator_indices().first().copied())
        .collect();

    let mut seen: HashSet<Vec<Index>> = cyclic
        .iter()
        .map(|c| c.element_indices().to_vec())
        .collect();
    let mut found: Vec<Subgroup> = cyclic.clone();
    let mut frontier = cyclic;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for &x in &seeds {
                if s.contains_idx(x) {
                    continue;
                }
                let j = s.join_idx(x);
                if seen.insert(j.element_indices().to_vec()) {
                    next.push(j);
                }
            }
        }
        found.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(SubgroupLattice::from_unsorted(
        g.clone(),
        found,
        Backend::JoinClosure,
    ))
}

/// Members of order `n`.
pub fn subgroups_of_order(lattice: &SubgroupLattice, n: u64) -> Vec<Subgroup> {
    lattice
        .subgroups
        .iter()
        .filter(|h| h.order() == n)
        .cloned()
        .collect()
}
