//! Sum of element orders, ψ(G) = Σ o(x), and its relative version
//! ψ_H(G) = Σ o_H(x).
//!
//! Brute-force sums run over materialized groups with checked `u64`
//! arithmetic. The closed forms for p-groups are evaluated with exact big
//! integers, since `p^{2α_k + α_{k-1} + … + α_1}` leaves 128-bit range well
//! inside the swept parameter space (p = 101, Σα_i = 10).

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{AbelianGroup, Limits, PPartition};
use crate::subgroup::{relative_order_idx, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiValue(BigUint);

impl PsiValue {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for PsiValue {
    fn from(v: u64) -> Self {
        PsiValue(BigUint::from(v))
    }
}

impl From<BigUint> for PsiValue {
    fn from(v: BigUint) -> Self {
        PsiValue(v)
    }
}

impl PartialEq<u64> for PsiValue {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for PsiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn pow(p: u64, e: u64) -> BigUint {
    BigUint::from(p).pow(u32::try_from(e).expect("exponent fits in u32"))
}

fn require_rank(t: &PPartition) -> Result<()> {
    if t.rank() == 0 {
        return Err(Error::InvalidPartition(
            "closed forms need at least one cyclic factor".into(),
        ));
    }
    Ok(())
}

/// ψ(G) by summing every element order.
pub fn psi_brute(g: &AbelianGroup, limits: &Limits) -> Result<PsiValue> {
    limits.check_enumeration("psi_brute", g)?;
    let mut sum: u64 = 0;
    for x in 0..g.index_count() {
        sum = sum
            .checked_add(g.order_idx(x))
            .ok_or(Error::Overflow("psi_brute"))?;
    }
    Ok(sum.into())
}

/// The piecewise exponent function of the closed form.
///
/// On the band `α_j ≤ α ≤ α_{j+1}` (with `α_0 = 0`) the value is
/// `p^{(k-j-1)α + α_1 + … + α_j}`; from `α_{k-1}` on it stays at
/// `p^{α_1 + … + α_{k-1}}`. Adjacent bands agree on their shared endpoint,
/// so the band is taken as `j = #{i < k : α_i ≤ α}`.
pub fn f_alpha(t: &PPartition, alpha: u64) -> Result<BigUint> {
    require_rank(t)?;
    let k = t.rank();
    let exps = t.exponents();
    let j = exps[..k - 1]
        .iter()
        .take_while(|&&a| u64::from(a) <= alpha)
        .count();
    Ok(pow(t.prime(), band_exponent(exps, j, alpha)))
}

/// Exponent of `p` in band `j` of the piecewise function.
pub fn band_exponent(exps: &[u32], j: usize, alpha: u64) -> u64 {
    let k = exps.len() as u64;
    let prefix: u64 = exps[..j].iter().map(|&a| u64::from(a)).sum();
    (k - j as u64 - 1) * alpha + prefix
}

/// `1 + Σ_{α=1}^{α_k} (p^{2α} f(α) − p^{2α−1} f(α−1))`.
pub fn psi_closed_p(t: &PPartition) -> Result<PsiValue> {
    require_rank(t)?;
    let p = t.prime();
    let top = u64::from(*t.exponents().last().expect("rank checked"));
    let mut plus = BigUint::one();
    let mut minus = BigUint::zero();
    for alpha in 1..=top {
        plus += pow(p, 2 * alpha) * f_alpha(t, alpha)?;
        minus += pow(p, 2 * alpha - 1) * f_alpha(t, alpha - 1)?;
    }
    Ok(PsiValue(plus - minus))
}

/// `p^{2α_k + α_{k-1} + … + α_1} − (p − 1) Σ_{α=0}^{α_k − 1} p^{2α} f(α)`.
pub fn psi_alt_p(t: &PPartition) -> Result<PsiValue> {
    require_rank(t)?;
    let p = t.prime();
    let top = u64::from(*t.exponents().last().expect("rank checked"));
    let mut sum = BigUint::zero();
    for alpha in 0..top {
        sum += pow(p, 2 * alpha) * f_alpha(t, alpha)?;
    }
    Ok(PsiValue(pow(p, psi_degree(t)) - BigUint::from(p - 1) * sum))
}

/// Degree of ψ as a polynomial in `p`: `2α_k + α_{k-1} + … + α_1`.
pub fn psi_degree(t: &PPartition) -> u64 {
    t.exponent_sum() + t.exponents().last().map_or(0, |&a| u64::from(a))
}

/// ψ(G) as the product of the per-prime closed forms.
pub fn psi_closed(g: &AbelianGroup) -> Result<PsiValue> {
    let mut acc = BigUint::one();
    for c in g.components() {
        acc *= psi_closed_p(c)?.0;
    }
    Ok(PsiValue(acc))
}

/// ψ_H(G) by summing relative orders.
pub fn psi_relative(g: &AbelianGroup, h: &Subgroup, limits: &Limits) -> Result<PsiValue> {
    if h.parent() != g {
        return Err(Error::ParentMismatch);
    }
    limits.check_enumeration("psi_relative", g)?;
    let mut sum: u64 = 0;
    for x in 0..g.index_count() {
        sum = sum
            .checked_add(relative_order_idx(g, h, x))
            .ok_or(Error::Overflow("psi_relative"))?;
    }
    Ok(sum.into())
}

/// `|H| + Σ_{x∉H} o(x)/|⟨x⟩∩H|`, the other route to ψ_H(G).
pub fn psi_relative_by_intersections(
    g: &AbelianGroup,
    h: &Subgroup,
    limits: &Limits,
) -> Result<PsiValue> {
    if h.parent() != g {
        return Err(Error::ParentMismatch);
    }
    limits.check_enumeration("psi_relative_by_intersections", g)?;
    let mut sum = h.order();
    for x in 0..g.index_count() {
        if h.contains_idx(x) {
            continue;
        }
        let o = g.order_idx(x);
        let mut meet = 1;
        let mut cur = g.add_idx(x, x);
        while cur != x {
            if h.contains_idx(cur) && cur != 0 {
                meet += 1;
            }
            cur = g.add_idx(cur, x);
        }
        sum = sum
            .checked_add(o / meet)
            .ok_or(Error::Overflow("psi_relative"))?;
    }
    Ok(sum.into())
}
