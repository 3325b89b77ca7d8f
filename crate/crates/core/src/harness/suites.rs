//! Named verification sweeps. Each suite walks a deterministic family of
//! groups (and subgroups), checks one or more claims per item, and returns a
//! [`VerificationReport`] with one case per check.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::cache::LatticeCache;
use super::literal::group_literal;
use super::report::{Case, CaseValue, VerificationReport};
use crate::error::{Error, Result};
use crate::goursat::goursat_subgroups;
use crate::group::{abelian_groups_up_to, omega1, AbelianGroup, Limits, PPartition};
use crate::isolation::{
    count_isolated_order_p, is_isolated_brute, is_isolated_componentwise, is_isolated_psi,
    is_isolated_structural, omega1_containment, socle_of_radical,
};
use crate::lattice::{all_subgroups, subgroups_of_order, SubgroupLattice};
use crate::psi::{
    psi_alt_p, psi_brute, psi_closed, psi_closed_p, psi_degree, psi_relative,
    psi_relative_by_intersections,
};
use crate::snf::{quotient_type, subgroup_type};
use crate::subgroup::{intersect, Subgroup};

pub const SUITES: [&str; 11] = [
    "psi-equivalence",
    "psi-forms",
    "isolation-equivalence",
    "classification",
    "example-2-6",
    "order-p-count",
    "lemma-2-1",
    "lemma-2-3",
    "omega1-containment",
    "psi-relative-identity",
    "goursat-cross",
];

const DEFAULT_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 101];

/// Everything a suite run needs besides its name.
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub params: BTreeMap<String, u64>,
    pub cache: Option<LatticeCache>,
    pub verify_cache: bool,
}

impl SuiteOptions {
    pub fn with(mut self, key: &str, value: u64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }
}

/// `(key, default, largest accepted value)`; a `None` default means unset.
type ParamSpec = (&'static str, Option<u64>, u64);

fn param_specs(suite: &str) -> Result<&'static [ParamSpec]> {
    const LATTICE: &[ParamSpec] = &[("order_max", Some(64), 1024), ("p3_max", Some(81), 729)];
    Ok(match suite {
        "psi-equivalence" => &[("order_max", Some(1024), 1 << 20)],
        "psi-forms" => &[("sum_max", Some(10), 24), ("p", None, 1000)],
        "isolation-equivalence"
        | "classification"
        | "lemma-2-3"
        | "omega1-containment"
        | "psi-relative-identity" => LATTICE,
        "order-p-count" => &[
            ("order_max", Some(64), 1024),
            ("p3_max", Some(81), 729),
            ("p", None, 1000),
            ("sum_max", None, 10),
        ],
        "example-2-6" => &[
            ("p_max", Some(5), 7),
            ("m_max", Some(3), 4),
            ("order_max", Some(81), 4096),
        ],
        "lemma-2-1" => &[("order_max", Some(144), 1024)],
        "goursat-cross" => &[("order_max", Some(64), 256)],
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

fn resolve_params(suite: &str, given: &BTreeMap<String, u64>) -> Result<BTreeMap<String, u64>> {
    let specs = param_specs(suite)?;
    for key in given.keys() {
        if !specs.iter().any(|s| s.0 == key) {
            return Err(Error::InvalidParameter {
                key: key.clone(),
                message: format!("not a parameter of suite `{suite}`"),
            });
        }
    }
    let mut out = BTreeMap::new();
    for &(key, default, max) in specs {
        if let Some(v) = given.get(key).copied().or(default) {
            if v > max {
                return Err(Error::BoundExceeded {
                    what: key,
                    order: v,
                    bound: max,
                });
            }
            out.insert(key.to_string(), v);
        }
    }
    Ok(out)
}

struct Ctx<'a> {
    params: BTreeMap<String, u64>,
    opts: &'a SuiteOptions,
    limits: Limits,
    extra: BTreeMap<String, Value>,
}

impl Ctx<'_> {
    fn get(&self, key: &str) -> Option<u64> {
        self.params.get(key).copied()
    }

    fn lattice(&self, g: &AbelianGroup) -> Result<SubgroupLattice> {
        match &self.opts.cache {
            Some(cache) => cache.lattice(g, &self.limits, self.opts.verify_cache),
            None => all_subgroups(g, &self.limits),
        }
    }

    /// All groups of order ≤ `order_max`, plus 3-groups up to `p3_max`.
    fn lattice_sweep(&self) -> Vec<AbelianGroup> {
        let order_max = self.get("order_max").unwrap_or(64);
        let p3_max = self.get("p3_max").unwrap_or(order_max);
        let mut groups = abelian_groups_up_to(order_max);
        groups.extend(
            crate::group::p_groups_up_to(3, p3_max)
                .into_iter()
                .filter(|g| g.order() > order_max),
        );
        groups
    }
}

fn gens_of(h: &Subgroup) -> Option<Vec<Vec<u64>>> {
    Some(
        h.generators()
            .iter()
            .map(|e| e.residues().to_vec())
            .collect(),
    )
}

fn flatten(chunks: Result<Vec<Vec<Case>>>) -> Result<Vec<Case>> {
    Ok(chunks?.into_iter().flatten().collect())
}

/// Runs a named suite.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    let params = resolve_params(name, &opts.params)?;
    let lattice_bound = [params.get("order_max"), params.get("p3_max")]
        .into_iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(81);
    let mut ctx = Ctx {
        params,
        opts,
        limits: Limits::default().with_lattice_max(lattice_bound.max(81)),
        extra: BTreeMap::new(),
    };
    if name == "psi-equivalence" {
        ctx.limits = ctx
            .limits
            .with_enumeration_max(ctx.get("order_max").unwrap_or(1024));
    }
    let start = Instant::now();
    let cases = match name {
        "psi-equivalence" => psi_equivalence(&ctx)?,
        "psi-forms" => psi_forms(&ctx)?,
        "isolation-equivalence" => isolation_equivalence(&ctx)?,
        "classification" => classification(&ctx)?,
        "example-2-6" => example_families(&mut ctx)?,
        "order-p-count" => order_p_count(&ctx)?,
        "lemma-2-1" => coprime_products(&ctx)?,
        "lemma-2-3" => no_proper_isolated(&ctx)?,
        "omega1-containment" => omega1_suite(&ctx)?,
        "psi-relative-identity" => psi_relative_identity(&ctx)?,
        "goursat-cross" => goursat_cross(&ctx)?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let runtime_ms = start.elapsed().as_millis() as u64;
    let mut parameters: BTreeMap<String, Value> = ctx
        .params
        .iter()
        .map(|(k, &v)| (k.clone(), json!(v)))
        .collect();
    parameters.extend(ctx.extra);
    Ok(VerificationReport::new(name, parameters, cases, runtime_ms))
}

fn psi_equivalence(ctx: &Ctx) -> Result<Vec<Case>> {
    let groups = abelian_groups_up_to(ctx.get("order_max").unwrap_or(1024));
    groups
        .par_iter()
        .map(|g| {
            Ok(Case::compare(
                group_literal(g),
                None,
                "closed-vs-brute",
                psi_closed(g)?,
                psi_brute(g, &ctx.limits)?,
            ))
        })
        .collect()
}

fn big_pow(p: u64, e: u64) -> BigUint {
    BigUint::from(p).pow(e as u32)
}

fn partition_literal(t: &PPartition) -> String {
    t.exponents()
        .iter()
        .map(|&a| big_pow(t.prime(), u64::from(a)).to_string())
        .collect::<Vec<_>>()
        .join("x")
}

fn psi_forms(ctx: &Ctx) -> Result<Vec<Case>> {
    let sum_max = ctx.get("sum_max").unwrap_or(10) as u32;
    let primes: Vec<u64> = match ctx.get("p") {
        Some(p) => vec![p],
        None => DEFAULT_PRIMES.to_vec(),
    };
    let mut cases = Vec::new();
    for &p in &primes {
        for n in 1..=sum_max {
            for exps in crate::group::partitions(n) {
                let t = PPartition::new(p, exps)?;
                let lit = partition_literal(&t);
                let closed = psi_closed_p(&t)?.into_inner();
                let alt = psi_alt_p(&t)?.into_inner();
                cases.push(Case::compare(
                    lit.clone(),
                    None,
                    "closed-vs-alternative",
                    closed.clone(),
                    alt.clone(),
                ));

                // Trailing terms p^{k+1} − p + 1: ψ + p − 1 ≡ 0 mod p^{k+1}.
                let modulus = big_pow(p, t.rank() as u64 + 1);
                let tail_ok = (&alt + (p - 1)) % &modulus == BigUint::from(0u32);
                cases.push(Case::compare(
                    lit.clone(),
                    None,
                    "trailing-terms",
                    true,
                    tail_ok,
                ));

                // p^d − (p−1)·α_k·p^{d−1} < ψ ≤ p^d.
                let d = psi_degree(&t);
                let top = big_pow(p, d);
                let alpha_k = u64::from(*t.exponents().last().expect("nonempty partition"));
                let slack = BigUint::from((p - 1) * alpha_k) * big_pow(p, d - 1);
                let envelope_ok = closed <= top && &closed + &slack > top;
                cases.push(Case::compare(
                    lit,
                    None,
                    "degree-envelope",
                    true,
                    envelope_ok,
                ));
            }
        }
    }
    Ok(cases)
}

fn isolation_equivalence(ctx: &Ctx) -> Result<Vec<Case>> {
    let groups = ctx.lattice_sweep();
    flatten(
        groups
            .par_iter()
            .map(|g| {
                let lit = group_literal(g);
                let mut cases = Vec::new();
                for h in ctx.lattice(g)?.subgroups {
                    let truth = is_isolated_brute(g, &h, &ctx.limits)?.isolated;
                    let psi = is_isolated_psi(g, &h)?.isolated;
                    let structural = is_isolated_structural(g, &h)?.isolated;
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "psi-criterion",
                        truth,
                        psi,
                    ));
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "structural",
                        truth,
                        structural,
                    ));
                }
                Ok(cases)
            })
            .collect(),
    )
}

fn p_groups_in(groups: Vec<AbelianGroup>) -> Vec<AbelianGroup> {
    groups
        .into_iter()
        .filter(|g| g.components().len() == 1)
        .collect()
}

/// Direct factor spanned by the cyclic components of exponent ≥ 2.
fn non_elementary_factor(g: &AbelianGroup) -> Subgroup {
    let gens: Vec<_> = (0..g.rank())
        .filter(|&i| g.moduli()[i] > g.component_primes()[i])
        .map(|i| {
            let mut r = vec![0; g.rank()];
            r[i] = 1;
            g.element(&r).expect("unit vector")
        })
        .collect();
    Subgroup::generated_by(g, &gens).expect("valid generators")
}

fn classification(ctx: &Ctx) -> Result<Vec<Case>> {
    let groups = p_groups_in(ctx.lattice_sweep());
    flatten(
        groups
            .par_iter()
            .map(|g| {
                let lit = group_literal(g);
                let p = g.components()[0].prime();
                let factor = non_elementary_factor(g);
                let lines = socle_of_radical(g, p)?.lines();
                let mut cases = Vec::new();
                for h in ctx.lattice(g)?.subgroups {
                    let truth = is_isolated_brute(g, &h, &ctx.limits)?.isolated;
                    let by_factor = h.is_whole() || intersect(&h, &factor)?.is_trivial();
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "complement-of-factor",
                        truth,
                        by_factor,
                    ));
                    if !h.is_whole() {
                        let by_lines = lines.iter().all(|l| !l.is_subgroup_of(&h));
                        cases.push(Case::compare(
                            lit.clone(),
                            gens_of(&h),
                            "no-radical-line",
                            truth,
                            by_lines,
                        ));
                    }
                }
                Ok(cases)
            })
            .collect(),
    )
}

fn count_by_order(isolated: &[&Subgroup]) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for h in isolated {
        *m.entry(h.order()).or_insert(0) += 1;
    }
    m
}

fn example_families(ctx: &mut Ctx) -> Result<Vec<Case>> {
    let p_max = ctx.get("p_max").unwrap_or(5);
    let m_max = ctx.get("m_max").unwrap_or(3) as u32;
    let order_max = ctx.get("order_max").unwrap_or(81);
    ctx.limits = ctx.limits.with_lattice_max(order_max);

    // (family, p, cyclic orders, expected total, expected counts by order)
    type Split = Vec<(&'static str, u64, u64)>;
    let mut jobs: Vec<(&'static str, u64, Vec<u64>, u64, Split)> = Vec::new();
    for p in (2..=p_max).filter(|&p| crate::arith::is_prime(p)) {
        let (p2, top) = (p * p, |g: &[u64]| g.iter().product::<u64>());
        for m in 2..=m_max {
            let orders = vec![p, p.pow(m)];
            let o = top(&orders);
            jobs.push((
                "pair",
                p,
                orders,
                p + 2,
                vec![("trivial", 1, 1), ("order p", p, p), ("whole group", o, 1)],
            ));
        }
        for m in 2..=m_max {
            for n in m..=m_max {
                let orders = vec![p, p.pow(m), p.pow(n)];
                let o = top(&orders);
                jobs.push((
                    "one-small-two-large",
                    p,
                    orders,
                    p2 + 2,
                    vec![("trivial", 1, 1), ("order p", p, p2), ("whole group", o, 1)],
                ));
            }
        }
        for m in 2..=m_max {
            let orders = vec![p, p, p.pow(m)];
            let o = top(&orders);
            jobs.push((
                "two-small-one-large",
                p,
                orders,
                2 * p2 + p + 2,
                vec![
                    ("trivial", 1, 1),
                    ("order p", p, p2 + p),
                    ("order p^2", p2, p2),
                    ("whole group", o, 1),
                ],
            ));
        }
    }
    let (run, skipped): (Vec<_>, Vec<_>) = jobs
        .into_iter()
        .partition(|j| j.2.iter().product::<u64>() <= order_max);
    ctx.extra.insert(
        "skipped".into(),
        json!(skipped
            .iter()
            .map(|j| crate::harness::literal::group_literal(
                &crate::group::make_group(&j.2).expect("valid")
            ))
            .collect::<Vec<_>>()),
    );

    let ctx = &*ctx;
    flatten(
        run.par_iter()
            .map(|(family, _p, orders, total, split)| {
                let g = crate::group::make_group(orders)?;
                let lit = group_literal(&g);
                let lattice = ctx.lattice(&g)?;
                let mut structural = Vec::new();
                let mut definition = Vec::new();
                for h in &lattice.subgroups {
                    if is_isolated_structural(&g, h)?.isolated {
                        structural.push(h);
                    }
                    if is_isolated_brute(&g, h, &ctx.limits)?.isolated {
                        definition.push(h);
                    }
                }
                let mut cases = vec![
                    Case::compare(
                        lit.clone(),
                        None,
                        format!("{family}: count (structural)"),
                        *total,
                        structural.len(),
                    ),
                    Case::compare(
                        lit.clone(),
                        None,
                        format!("{family}: count (definition)"),
                        *total,
                        definition.len(),
                    ),
                ];
                let by_order = count_by_order(&definition);
                let expected_orders: Vec<u64> = split.iter().map(|s| s.1).collect();
                let unexpected: usize = by_order
                    .iter()
                    .filter(|(o, _)| !expected_orders.contains(o))
                    .map(|(_, &c)| c)
                    .sum();
                for &(label, order, count) in split {
                    let got = by_order.get(&order).copied().unwrap_or(0);
                    cases.push(Case::compare(
                        lit.clone(),
                        None,
                        format!("{family}: isolated, {label}"),
                        count,
                        got,
                    ));
                }
                cases.push(Case::compare(
                    lit,
                    None,
                    format!("{family}: isolated, other orders"),
                    0usize,
                    unexpected,
                ));
                Ok(cases)
            })
            .collect(),
    )
}

fn order_p_count(ctx: &Ctx) -> Result<Vec<Case>> {
    let mut groups = p_groups_in(ctx.lattice_sweep());
    if let Some(p) = ctx.get("p") {
        groups.retain(|g| g.components()[0].prime() == p);
    }
    if let Some(s) = ctx.get("sum_max") {
        groups.retain(|g| g.components()[0].exponent_sum() <= s);
    }
    flatten(
        groups
            .par_iter()
            .map(|g| {
                let t = &g.components()[0];
                let p = t.prime();
                let lit = group_literal(g);
                let lattice = ctx.lattice(g)?;
                let order_p = subgroups_of_order(&lattice, p);
                let mut isolated = 0u64;
                for h in &order_p {
                    if is_isolated_brute(g, h, &ctx.limits)?.isolated {
                        isolated += 1;
                    }
                }
                let k = t.rank() as u32;
                let r = t.elementary_rank() as u32;
                let total = (p.pow(k) - 1) / (p - 1);
                let lines = (p.pow(k - r) - 1) / (p - 1);
                Ok(vec![
                    Case::compare(
                        lit.clone(),
                        None,
                        "isolated-order-p",
                        count_isolated_order_p(t)?,
                        isolated,
                    ),
                    Case::compare(lit.clone(), None, "order-p-total", total, order_p.len()),
                    Case::compare(
                        lit,
                        None,
                        "radical-lines",
                        lines,
                        socle_of_radical(g, p)?.lines().len(),
                    ),
                ])
            })
            .collect(),
    )
}

fn coprime_products(ctx: &Ctx) -> Result<Vec<Case>> {
    let groups: Vec<AbelianGroup> = abelian_groups_up_to(ctx.get("order_max").unwrap_or(144))
        .into_iter()
        .filter(|g| g.components().len() >= 2)
        .collect();
    flatten(
        groups
            .par_iter()
            .map(|g| {
                let lit = group_literal(g);
                let mut cases = Vec::new();
                for h in ctx.lattice(g)?.subgroups {
                    let truth = is_isolated_brute(g, &h, &ctx.limits)?.isolated;
                    let componentwise = is_isolated_componentwise(g, &h, &ctx.limits)?;
                    let trivial_or_whole = h.is_trivial() || h.is_whole();
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "componentwise-law",
                        truth,
                        componentwise,
                    ));
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "only-trivial-or-whole",
                        truth,
                        trivial_or_whole,
                    ));
                }
                Ok(cases)
            })
            .collect(),
    )
}

/// Ascending exponents of a p-group type, left-padded with zeros to `len`.
fn padded_exponents(g: &AbelianGroup, p: u64, len: usize) -> Vec<u32> {
    let exps = g
        .component(p)
        .map(|c| c.exponents().to_vec())
        .unwrap_or_default();
    let mut v = vec![0; len.saturating_sub(exps.len())];
    v.extend(exps);
    v
}

/// `G/H` for `H ≤ Ω_1(G)` has exponents `β_i ∈ {α_i, α_i − 1}` when both are
/// listed ascending.
pub fn quotient_shape_ok(g: &AbelianGroup, h: &Subgroup) -> Result<bool> {
    let Some(t) = g.components().first() else {
        return Ok(true);
    };
    let q = quotient_type(g, h)?;
    let alpha = t.exponents();
    let beta = padded_exponents(&q, t.prime(), alpha.len());
    Ok(beta.len() == alpha.len() && alpha.iter().zip(&beta).all(|(&a, &b)| b == a || b + 1 == a))
}

fn no_proper_isolated(ctx: &Ctx) -> Result<Vec<Case>> {
    let groups: Vec<AbelianGroup> = p_groups_in(ctx.lattice_sweep())
        .into_iter()
        .filter(|g| g.components()[0].exponents()[0] >= 2)
        .collect();
    flatten(
        groups
            .par_iter()
            .map(|g| {
                let lit = group_literal(g);
                let p = g.components()[0].prime();
                let lattice = ctx.lattice(g)?;
                let mut count = 0usize;
                let mut cases = Vec::new();
                let om = omega1(g, p)?;
                for h in &lattice.subgroups {
                    if is_isolated_brute(g, h, &ctx.limits)?.isolated {
                        count += 1;
                    }
                    if h.is_subgroup_of(&om) {
                        cases.push(Case::compare(
                            lit.clone(),
                            gens_of(h),
                            "quotient-exponents",
                            true,
                            quotient_shape_ok(g, h)?,
                        ));
                    }
                }
                cases.insert(0, Case::compare(lit, None, "isolated-count", 2usize, count));
                Ok(cases)
            })
            .collect(),
    )
}

fn omega1_suite(ctx: &Ctx) -> Result<Vec<Case>> {
    let groups = ctx.lattice_sweep();
    flatten(
        groups
            .par_iter()
            .map(|g| {
                let lit = group_literal(g);
                let mut cases = Vec::new();
                for h in ctx.lattice(g)?.subgroups {
                    if h.is_whole() || !is_isolated_brute(g, &h, &ctx.limits)?.isolated {
                        continue;
                    }
                    let (contained, strict) = omega1_containment(g, &h)?;
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "inside-omega1",
                        true,
                        contained,
                    ));
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "strictly-inside-omega1",
                        true,
                        strict,
                    ));
                    let index = g.order() / h.order();
                    if crate::arith::is_prime(index) {
                        let elementary =
                            g.is_p_group() && g.components().iter().all(PPartition::is_elementary);
                        cases.push(Case::compare(
                            lit.clone(),
                            gens_of(&h),
                            "maximal-isolated-elementary",
                            true,
                            elementary,
                        ));
                    }
                }
                Ok(cases)
            })
            .collect(),
    )
}

fn psi_relative_identity(ctx: &Ctx) -> Result<Vec<Case>> {
    let groups = ctx.lattice_sweep();
    flatten(
        groups
            .par_iter()
            .map(|g| {
                let lit = group_literal(g);
                let psi_g = psi_closed(g)?.into_inner();
                let mut cases = Vec::new();
                for h in ctx.lattice(g)?.subgroups {
                    let relative = psi_relative(g, &h, &ctx.limits)?.into_inner();
                    let order_h = BigUint::from(h.order());
                    let via_quotient = &order_h * psi_closed(&quotient_type(g, &h)?)?.into_inner();
                    let via_meets = psi_relative_by_intersections(g, &h, &ctx.limits)?.into_inner();
                    let psi_h = psi_closed(&subgroup_type(&h)?)?.into_inner();
                    let isolated_form = &order_h + &psi_g - psi_h;
                    let truth = is_isolated_brute(g, &h, &ctx.limits)?.isolated;
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "order-times-quotient",
                        relative.clone(),
                        via_quotient,
                    ));
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "intersection-sum",
                        relative.clone(),
                        via_meets,
                    ));
                    cases.push(Case::compare(
                        lit.clone(),
                        gens_of(&h),
                        "isolation-iff-identity",
                        CaseValue::Bool(truth),
                        CaseValue::Bool(relative == isolated_form),
                    ));
                }
                Ok(cases)
            })
            .collect(),
    )
}

fn goursat_cross(ctx: &Ctx) -> Result<Vec<Case>> {
    let order_max = ctx.get("order_max").unwrap_or(64);
    let groups = abelian_groups_up_to(order_max);
    let mut pairs = Vec::new();
    for a in &groups {
        for b in &groups {
            if a.order() * b.order() <= order_max {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let reference: HashMap<AbelianGroup, SubgroupLattice> = groups
        .par_iter()
        .map(|g| Ok((g.clone(), ctx.lattice(g)?)))
        .collect::<Result<_>>()?;
    pairs
        .par_iter()
        .map(|(a, b)| {
            let gs = goursat_subgroups(a, b, &ctx.limits)?;
            let join = &reference[&gs.parent];
            let lit = [group_literal(a), group_literal(b)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("x");
            let mut case = Case::compare(lit, None, "goursat-vs-join", join.len(), gs.len());
            case.pass = gs.same_subgroups(join);
            Ok(case)
        })
        .collect()
}
