//! Finite abelian groups in canonical primary decomposition.
//!
//! A group is stored as a list of [`PPartition`]s, one per prime dividing its
//! order, with primes ascending and exponents ascending within each prime.
//! The cyclic components laid out in that order fix the coordinate system for
//! every [`Element`]: residue `i` lives in `Z_{m_i}` where `m_i` is the
//! `i`-th entry of [`AbelianGroup::moduli`].
//!
//! Enumeration-heavy code works on element *indices*: the mixed-radix number
//! whose digits are the residues, first component most significant. Index
//! order coincides with lexicographic order of residue vectors.

use std::fmt;

use crate::arith::{factorize, gcd, is_prime, lcm};
use crate::error::{Error, Result};
use crate::subgroup::Subgroup;

/// Element index inside a materialized group.
pub type Index = u32;

/// Bounds on the groups that may be enumerated element by element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group order for element-wise sums (ψ, ψ_H, brute isolation).
    pub enumeration_max: u64,
    /// Largest group order for full subgroup-lattice enumeration.
    pub lattice_max: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_max: 1024,
            lattice_max: 81,
        }
    }
}

impl Limits {
    pub fn with_lattice_max(mut self, bound: u64) -> Self {
        self.lattice_max = bound;
        self.enumeration_max = self.enumeration_max.max(bound);
        self
    }

    pub fn with_enumeration_max(mut self, bound: u64) -> Self {
        self.enumeration_max = bound;
        self
    }

    pub(crate) fn check_enumeration(&self, what: &'static str, g: &AbelianGroup) -> Result<()> {
        check_bound(what, g.order(), self.enumeration_max)
    }

    pub(crate) fn check_lattice(&self, what: &'static str, g: &AbelianGroup) -> Result<()> {
        check_bound(what, g.order(), self.lattice_max)
    }
}

fn check_bound(what: &'static str, order: u64, bound: u64) -> Result<()> {
    if order > bound || order > u64::from(Index::MAX) {
        return Err(Error::BoundExceeded {
            what,
            order,
            bound: bound.min(u64::from(Index::MAX)),
        });
    }
    Ok(())
}

/// An abelian p-group type: a prime and an ascending list of exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PPartition {
    p: u64,
    exponents: Vec<u32>,
}

impl PPartition {
    pub fn new(p: u64, exponents: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "exponents must be at least 1, got {exponents:?}"
            )));
        }
        if exponents.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPartition(format!(
                "exponents must be ascending, got {exponents:?}"
            )));
        }
        Ok(PPartition { p, exponents })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of cyclic factors, `k`.
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// Number of exponents equal to 1, `r`.
    pub fn elementary_rank(&self) -> usize {
        self.exponents.iter().take_while(|&&a| a == 1).count()
    }

    pub fn exponent_sum(&self) -> u64 {
        self.exponents.iter().map(|&a| u64::from(a)).sum()
    }

    pub fn is_elementary(&self) -> bool {
        self.exponents.iter().all(|&a| a == 1)
    }

    pub fn order(&self) -> Result<u64> {
        let e = u32::try_from(self.exponent_sum()).map_err(|_| Error::Overflow("p-group order"))?;
        self.p
            .checked_pow(e)
            .ok_or(Error::Overflow("p-group order"))
    }

    /// The group `Z_{p^α_1} × … × Z_{p^α_k}` itself.
    pub fn to_group(&self) -> Result<AbelianGroup> {
        if self.exponents.is_empty() {
            return Ok(AbelianGroup::trivial());
        }
        AbelianGroup::from_components(vec![self.clone()])
    }
}

impl fmt::Display for PPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} {:?}", self.p, self.exponents)
    }
}

/// A finite abelian group in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    components: Vec<PPartition>,
    moduli: Vec<u64>,
    primes: Vec<u64>,
    strides: Vec<u64>,
    order: u64,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            components: Vec::new(),
            moduli: Vec::new(),
            primes: Vec::new(),
            strides: Vec::new(),
            order: 1,
        }
    }

    /// Builds a group from p-components. Empty partitions are dropped and the
    /// components are sorted by prime; a repeated prime is rejected.
    pub fn from_components(mut components: Vec<PPartition>) -> Result<Self> {
        components.retain(|c| !c.exponents.is_empty());
        components.sort_by_key(|c| c.p);
        if components.windows(2).any(|w| w[0].p == w[1].p) {
            return Err(Error::InvalidPartition("repeated prime component".into()));
        }
        let mut moduli = Vec::new();
        let mut primes = Vec::new();
        for c in &components {
            for &a in &c.exponents {
                moduli.push(c.p.checked_pow(a).ok_or(Error::Overflow("cyclic order"))?);
                primes.push(c.p);
            }
        }
        let order = moduli
            .iter()
            .try_fold(1u64, |acc, &m| acc.checked_mul(m))
            .ok_or(Error::Overflow("group order"))?;
        let mut strides = vec![1u64; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        Ok(AbelianGroup {
            components,
            moduli,
            primes,
            strides,
            order,
        })
    }

    pub fn components(&self) -> &[PPartition] {
        &self.components
    }

    pub fn component(&self, p: u64) -> Option<&PPartition> {
        self.components.iter().find(|c| c.p == p)
    }

    /// Orders of the cyclic components in canonical layout.
    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Prime of each cyclic component in canonical layout.
    pub fn component_primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn primes(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.p).collect()
    }

    /// Total number of cyclic components.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_p_group(&self) -> bool {
        self.components.len() <= 1
    }

    /// Exponent of the group (lcm of the cyclic orders).
    pub fn exponent(&self) -> u64 {
        self.moduli.iter().fold(1, |acc, &m| lcm(acc, m))
    }

    /// Range of canonical positions occupied by the `p`-component.
    pub fn positions_of(&self, p: u64) -> std::ops::Range<usize> {
        let start = self
            .primes
            .iter()
            .position(|&q| q == p)
            .unwrap_or(self.primes.len());
        let end = self
            .primes
            .iter()
            .rposition(|&q| q == p)
            .map_or(start, |i| i + 1);
        start..end
    }

    /// The Sylow `p`-subgroup as a standalone group.
    pub fn sylow(&self, p: u64) -> AbelianGroup {
        match self.component(p) {
            Some(c) => {
                AbelianGroup::from_components(vec![c.clone()]).expect("component of a valid group")
            }
            None => AbelianGroup::trivial(),
        }
    }

    pub fn identity(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    /// Validates a residue vector against the canonical layout.
    pub fn element(&self, residues: &[u64]) -> Result<Element> {
        self.check(residues)?;
        Ok(Element(residues.to_vec()))
    }

    /// Reduces arbitrary integers into the canonical layout.
    pub fn element_reduced(&self, values: &[i64]) -> Result<Element> {
        if values.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: values.len(),
            });
        }
        Ok(Element(
            values
                .iter()
                .zip(&self.moduli)
                .map(|(&v, &m)| v.rem_euclid(m as i64) as u64)
                .collect(),
        ))
    }

    fn check(&self, residues: &[u64]) -> Result<()> {
        if residues.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: residues.len(),
            });
        }
        for (component, (&residue, &modulus)) in residues.iter().zip(&self.moduli).enumerate() {
            if residue >= modulus {
                return Err(Error::ResidueOutOfRange {
                    component,
                    residue,
                    modulus,
                });
            }
        }
        Ok(())
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(&x.0)?;
        self.check(&y.0)?;
        Ok(Element(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.moduli)
                .map(|((&a, &b), &m)| (a + b) % m)
                .collect(),
        ))
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.check(&x.0)?;
        Ok(Element(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &m)| (m - a) % m)
                .collect(),
        ))
    }

    /// `m·x`.
    pub fn scale(&self, x: &Element, m: u64) -> Result<Element> {
        self.check(&x.0)?;
        Ok(Element(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &n)| ((u128::from(a) * u128::from(m)) % u128::from(n)) as u64)
                .collect(),
        ))
    }

    pub fn element_order(&self, x: &Element) -> Result<u64> {
        self.check(&x.0)?;
        Ok(x.0
            .iter()
            .zip(&self.moduli)
            .fold(1, |acc, (&a, &m)| lcm(acc, m / gcd(a, m))))
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |i| self.decode_u64(i))
    }

    // ---- index arithmetic ----

    pub fn encode(&self, x: &Element) -> Index {
        x.0.iter()
            .zip(&self.strides)
            .map(|(&r, &s)| r * s)
            .sum::<u64>() as Index
    }

    pub fn decode(&self, idx: Index) -> Element {
        self.decode_u64(u64::from(idx))
    }

    fn decode_u64(&self, idx: u64) -> Element {
        Element(
            self.strides
                .iter()
                .zip(&self.moduli)
                .map(|(&s, &m)| (idx / s) % m)
                .collect(),
        )
    }

    pub(crate) fn index_count(&self) -> Index {
        self.order as Index
    }

    #[inline]
    pub(crate) fn add_idx(&self, a: Index, b: Index) -> Index {
        let (a, b) = (u64::from(a), u64::from(b));
        let mut out = 0;
        for (&s, &m) in self.strides.iter().zip(&self.moduli) {
            out += (((a / s) % m + (b / s) % m) % m) * s;
        }
        out as Index
    }

    #[cfg(test)]
    pub(crate) fn neg_idx(&self, a: Index) -> Index {
        let a = u64::from(a);
        let mut out = 0;
        for (&s, &m) in self.strides.iter().zip(&self.moduli) {
            out += ((m - (a / s) % m) % m) * s;
        }
        out as Index
    }

    #[inline]
    pub(crate) fn scale_idx(&self, a: Index, k: u64) -> Index {
        let a = u64::from(a);
        let mut out = 0;
        for (&s, &m) in self.strides.iter().zip(&self.moduli) {
            out += (((a / s) % m) * (k % m) % m) * s;
        }
        out as Index
    }

    #[inline]
    pub(crate) fn order_idx(&self, a: Index) -> u64 {
        let a = u64::from(a);
        self.strides
            .iter()
            .zip(&self.moduli)
            .fold(1, |acc, (&s, &m)| lcm(acc, m / gcd((a / s) % m, m)))
    }

    /// Canonical residue digit of `a` at position `i`.
    #[inline]
    pub(crate) fn digit(&self, a: Index, i: usize) -> u64 {
        (u64::from(a) / self.strides[i]) % self.moduli[i]
    }

    pub(crate) fn unit_idx(&self, i: usize) -> Index {
        self.strides[i] as Index
    }

    /// `G × other` together with the embeddings of both factors.
    ///
    /// The product is canonical, so factors with equal `(p, α)` interleave;
    /// ties keep `self`'s components first.
    pub fn direct_product(&self, other: &AbelianGroup) -> Result<(AbelianGroup, ProductEmbedding)> {
        let mut slots: Vec<(u64, u64, usize, usize)> = Vec::new();
        for (i, (&p, &m)) in self.primes.iter().zip(&self.moduli).enumerate() {
            slots.push((p, m, 0, i));
        }
        for (i, (&p, &m)) in other.primes.iter().zip(&other.moduli).enumerate() {
            slots.push((p, m, 1, i));
        }
        slots.sort();
        let orders: Vec<u64> = slots.iter().map(|s| s.1).collect();
        let product = make_group(&orders)?;
        debug_assert_eq!(product.moduli, orders);
        let mut left = vec![0; self.rank()];
        let mut right = vec![0; other.rank()];
        for (pos, &(_, _, side, i)) in slots.iter().enumerate() {
            if side == 0 {
                left[i] = pos;
            } else {
                right[i] = pos;
            }
        }
        Ok((product, ProductEmbedding { left, right }))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z_{m}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Positions of the two factors' cyclic components inside a canonical product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductEmbedding {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl ProductEmbedding {
    /// Index in the product of the pair `(a, b)`.
    pub fn pair_index(
        &self,
        product: &AbelianGroup,
        g1: &AbelianGroup,
        a: Index,
        g2: &AbelianGroup,
        b: Index,
    ) -> Index {
        let mut out = 0u64;
        for (i, &pos) in self.left.iter().enumerate() {
            out += g1.digit(a, i) * product.strides[pos];
        }
        for (i, &pos) in self.right.iter().enumerate() {
            out += g2.digit(b, i) * product.strides[pos];
        }
        out as Index
    }
}

/// Residue vector in the parent group's canonical layout.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<u64>);

impl Element {
    pub fn residues(&self) -> &[u64] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Canonical group from a list of cyclic orders, in any order.
pub fn make_group(cyclic_orders: &[u64]) -> Result<AbelianGroup> {
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for &n in cyclic_orders {
        if n <= 1 {
            return Err(Error::InvalidOrder(n));
        }
        for (p, e) in factorize(n) {
            by_prime.entry(p).or_default().push(e);
        }
    }
    let components = by_prime
        .into_iter()
        .map(|(p, mut exps)| {
            exps.sort_unstable();
            PPartition { p, exponents: exps }
        })
        .collect();
    AbelianGroup::from_components(components)
}

pub fn group_op(g: &AbelianGroup, x: &Element, y: &Element) -> Result<Element> {
    g.add(x, y)
}

pub fn element_order(g: &AbelianGroup, x: &Element) -> Result<u64> {
    g.element_order(x)
}

/// `{x ∈ G : p·x = 0}`, elementary abelian of rank equal to the number of
/// cyclic `p`-components.
pub fn omega1(g: &AbelianGroup, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let gens: Vec<Index> = g
        .positions_of(p)
        .map(|i| g.scale_idx(g.unit_idx(i), g.moduli[i] / p))
        .collect();
    Ok(Subgroup::generated_by_indices(g, &gens))
}

/// Integer partitions of `n` as ascending part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, min_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min_part..=remaining {
            if remaining - part != 0 && remaining - part < part {
                continue;
            }
            cur.push(part);
            go(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Every isomorphism type of abelian group of order `n`.
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianGroup> {
    let mut acc: Vec<Vec<PPartition>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for prefix in &acc {
            for part in partitions(e) {
                let mut v = prefix.clone();
                v.push(PPartition { p, exponents: part });
                next.push(v);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|c| AbelianGroup::from_components(c).expect("orders fit in u64"))
        .collect()
}

/// Every isomorphism type of abelian group of order `1..=max`, ordered by
/// order and then by canonical form.
pub fn abelian_groups_up_to(max: u64) -> Vec<AbelianGroup> {
    (1..=max).flat_map(abelian_groups_of_order).collect()
}

/// Every nontrivial abelian `p`-group of order at most `max`.
pub fn p_groups_up_to(p: u64, max: u64) -> Vec<AbelianGroup> {
    let mut out = Vec::new();
    let mut order = p;
    let mut e = 1;
    while order <= max {
        out.extend(abelian_groups_of_order(order));
        e += 1;
        match p.checked_pow(e) {
            Some(o) => order = o,
            None => break,
        }
    }
    out
}
