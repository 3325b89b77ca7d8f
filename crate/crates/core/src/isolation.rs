//! Isolated subgroups: `H ≤ G` such that every `x ∈ G` lies in `H` or
//! generates a cyclic subgroup meeting `H` trivially.
//!
//! Three independent deciders are provided:
//!
//! * [`is_isolated_brute`] checks the definition element by element;
//! * [`is_isolated_psi`] compares `ψ(G) − ψ(H)` with `|H|(ψ(G/H) − 1)` using
//!   closed-form ψ values and Smith-form invariants;
//! * [`is_isolated_structural`] uses the classification for p-groups, with
//!   the radical socle `Ω_1(p·G_p)` standing in for the non-elementary factor.
//!
//! For groups with two or more nontrivial Sylow subgroups the only isolated
//! subgroups are `1` and `G`: if `1 ≠ H_p` and some other Sylow factor
//! `G_q` is nontrivial, `x = h + y` with `1 ≠ h ∈ H_p` and `y ∉ H` has
//! `h ∈ ⟨x⟩`. [`is_isolated_componentwise`] implements the weaker
//! per-component law so the two can be compared.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{omega1, AbelianGroup, Element, Index, Limits, PPartition};
use crate::lattice::all_subgroups;
use crate::psi::psi_closed;
use crate::snf::{quotient_type, subgroup_type};
use crate::subgroup::{intersect, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Definition,
    PsiCriterion,
    Structural,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Definition => "definition",
            Method::PsiCriterion => "psi-criterion",
            Method::Structural => "structural",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationVerdict {
    pub isolated: bool,
    pub method: Method,
    /// First `x ∉ H` with `⟨x⟩ ∩ H ≠ 1`; only the definitional method sets it.
    pub witness: Option<Element>,
}

impl IsolationVerdict {
    fn aggregate(isolated: bool, method: Method) -> Self {
        IsolationVerdict {
            isolated,
            method,
            witness: None,
        }
    }
}

fn check_parent(g: &AbelianGroup, h: &Subgroup) -> Result<()> {
    if h.parent() != g {
        return Err(Error::ParentMismatch);
    }
    Ok(())
}

/// The definition, scanning `G` in canonical order.
pub fn is_isolated_brute(
    g: &AbelianGroup,
    h: &Subgroup,
    limits: &Limits,
) -> Result<IsolationVerdict> {
    check_parent(g, h)?;
    limits.check_enumeration("is_isolated_brute", g)?;
    let witness = (0..g.index_count()).find(|&x| violates(g, h, x));
    Ok(IsolationVerdict {
        isolated: witness.is_none(),
        method: Method::Definition,
        witness: witness.map(|x| g.decode(x)),
    })
}

/// `x ∉ H` and some nonzero multiple of `x` lies in `H`.
fn violates(g: &AbelianGroup, h: &Subgroup, x: Index) -> bool {
    if h.contains_idx(x) {
        return false;
    }
    let mut cur = g.add_idx(x, x);
    while cur != 0 {
        if h.contains_idx(cur) {
            return true;
        }
        cur = g.add_idx(cur, x);
    }
    false
}

/// `ψ(G) − ψ(H) = |H|(ψ(G/H) − 1)`, exact.
pub fn is_isolated_psi(g: &AbelianGroup, h: &Subgroup) -> Result<IsolationVerdict> {
    check_parent(g, h)?;
    let psi_g = psi_closed(g)?.into_inner();
    let psi_h = psi_closed(&subgroup_type(h)?)?.into_inner();
    let psi_q = psi_closed(&quotient_type(g, h)?)?.into_inner();
    let lhs = psi_g - psi_h;
    let rhs = num_bigint::BigUint::from(h.order()) * (psi_q - 1u32);
    Ok(IsolationVerdict::aggregate(
        lhs == rhs,
        Method::PsiCriterion,
    ))
}

/// `Ω_1(p·G_p)`: elements killed by `p` that are `p`-th multiples, inside
/// the `p`-component of `G`. Elementary abelian of rank `k − r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleOfRadical {
    pub prime: u64,
    pub subgroup: Subgroup,
}

impl SocleOfRadical {
    /// Its order-`p` subgroups; there are `(p^{k−r} − 1)/(p − 1)` of them.
    pub fn lines(&self) -> Vec<Subgroup> {
        let g = self.subgroup.parent();
        let mut lines: Vec<Subgroup> = self
            .subgroup
            .element_indices()
            .iter()
            .filter(|&&x| x != 0)
            .map(|&x| crate::subgroup::cyclic_subgroup_idx(g, x))
            .collect();
        lines.sort();
        lines.dedup();
        lines
    }
}

pub fn socle_of_radical(g: &AbelianGroup, p: u64) -> Result<SocleOfRadical> {
    if !crate::arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    // Ω_1(pG) = ⊕_{α_i ≥ 2} ⟨p^{α_i − 1} e_i⟩ over the p-positions.
    let gens: Vec<Index> = g
        .positions_of(p)
        .filter(|&i| g.moduli()[i] > p)
        .map(|i| g.scale_idx(g.unit_idx(i), g.moduli()[i] / p))
        .collect();
    Ok(SocleOfRadical {
        prime: p,
        subgroup: Subgroup::generated_by_indices(g, &gens),
    })
}

/// Classification decider: `H ∈ {1, G}`, or `G` is a p-group and
/// `H ∩ Ω_1(p·G) = 1`.
pub fn is_isolated_structural(g: &AbelianGroup, h: &Subgroup) -> Result<IsolationVerdict> {
    check_parent(g, h)?;
    let isolated = if h.is_trivial() || h.is_whole() {
        true
    } else if g.components().len() >= 2 {
        false
    } else {
        let p = g.components()[0].prime();
        let socle = socle_of_radical(g, p)?;
        intersect(h, &socle.subgroup)?.is_trivial()
    };
    Ok(IsolationVerdict::aggregate(isolated, Method::Structural))
}

/// Decides with the requested method.
pub fn is_isolated(
    g: &AbelianGroup,
    h: &Subgroup,
    method: Method,
    limits: &Limits,
) -> Result<IsolationVerdict> {
    match method {
        Method::Definition => is_isolated_brute(g, h, limits),
        Method::PsiCriterion => is_isolated_psi(g, h),
        Method::Structural => is_isolated_structural(g, h),
    }
}

/// Image of `H` in the Sylow `p`-subgroup of `G`, as a subgroup of
/// [`AbelianGroup::sylow`]. For abelian `H` this is also `H ∩ G_p`.
pub fn sylow_projection(h: &Subgroup, p: u64) -> Subgroup {
    let g = h.parent();
    let gp = g.sylow(p);
    let positions = g.positions_of(p);
    let mut elems: Vec<Index> = h
        .element_indices()
        .iter()
        .map(|&x| {
            let residues: Vec<u64> = positions.clone().map(|i| g.digit(x, i)).collect();
            gp.encode(&gp.element(&residues).expect("projection stays in range"))
        })
        .collect();
    elems.sort_unstable();
    elems.dedup();
    Subgroup::from_sorted_unchecked(&gp, elems)
}

/// Per-component law over the Sylow decomposition: every projection `H_p`
/// is isolated in `G_p`, each decided by the definition.
pub fn is_isolated_componentwise(g: &AbelianGroup, h: &Subgroup, limits: &Limits) -> Result<bool> {
    check_parent(g, h)?;
    for p in g.primes() {
        let hp = sylow_projection(h, p);
        if !is_isolated_brute(hp.parent(), &hp, limits)?.isolated {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Isolated subgroups sorted by `(order, elements)`.
pub fn enumerate_isolated(g: &AbelianGroup, limits: &Limits) -> Result<Vec<Subgroup>> {
    let lattice = all_subgroups(g, limits)?;
    let mut out = Vec::new();
    for h in lattice.subgroups {
        if is_isolated_structural(g, &h)?.isolated {
            out.push(h);
        }
    }
    Ok(out)
}

pub fn count_isolated(g: &AbelianGroup, limits: &Limits) -> Result<usize> {
    Ok(enumerate_isolated(g, limits)?.len())
}

/// `p^{k−r}(p^r − 1)/(p − 1)` isolated subgroups of order `p`.
pub fn count_isolated_order_p(t: &PPartition) -> Result<u64> {
    if t.rank() == 0 {
        return Err(Error::InvalidPartition(
            "need at least one cyclic factor".into(),
        ));
    }
    let p = t.prime();
    let k = t.rank() as u32;
    let r = t.elementary_rank() as u32;
    let overflow = || Error::Overflow("count_isolated_order_p");
    let head = p.checked_pow(k - r).ok_or_else(overflow)?;
    let tail = (p.checked_pow(r).ok_or_else(overflow)? - 1) / (p - 1);
    head.checked_mul(tail).ok_or_else(overflow)
}

/// `H ⊆ Ω_1(G_p)` for every prime, and whether any containment is strict.
pub fn omega1_containment(g: &AbelianGroup, h: &Subgroup) -> Result<(bool, bool)> {
    let mut contained = true;
    let mut strict = true;
    for p in g.primes() {
        let hp = sylow_projection(h, p);
        let om = omega1(hp.parent(), p)?;
        contained &= hp.is_subgroup_of(&om);
        strict &= hp.order() < om.order();
    }
    Ok((contained, strict))
}
