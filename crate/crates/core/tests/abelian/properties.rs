use std::collections::BTreeMap;
use std::sync::OnceLock;

use isolated_subgroups::arith::gcd;
use isolated_subgroups::group::{abelian_groups_up_to, PPartition};
use isolated_subgroups::harness::cache::{decode_lattice, encode_lattice};
use isolated_subgroups::lattice::subgroups_of_order;
use isolated_subgroups::psi::psi_alt_p;
use isolated_subgroups::subgroup::relative_order;
use isolated_subgroups::*;
use proptest::prelude::*;
use proptest::sample::Index as Pick;

fn small_groups() -> &'static [(AbelianGroup, SubgroupLattice)] {
    static GROUPS: OnceLock<Vec<(AbelianGroup, SubgroupLattice)>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        abelian_groups_up_to(64)
            .into_iter()
            .map(|g| {
                let l = all_subgroups(&g, &Limits::default()).unwrap();
                (g, l)
            })
            .collect()
    })
}

fn group_and_subgroup() -> impl Strategy<Value = (AbelianGroup, Subgroup)> {
    (any::<Pick>(), any::<Pick>()).prop_map(|(gi, hi)| {
        let (g, l) = gi.get(small_groups());
        (g.clone(), hi.get(&l.subgroups).clone())
    })
}

fn group_and_two_subgroups() -> impl Strategy<Value = (AbelianGroup, Subgroup, Subgroup)> {
    (any::<Pick>(), any::<Pick>(), any::<Pick>()).prop_map(|(gi, hi, ki)| {
        let (g, l) = gi.get(small_groups());
        (
            g.clone(),
            hi.get(&l.subgroups).clone(),
            ki.get(&l.subgroups).clone(),
        )
    })
}

fn det(m: &[Vec<i128>]) -> i128 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|first| {
            subsets(n, k - 1)
                .into_iter()
                .filter(move |rest| rest.first().is_none_or(|&r| r > first))
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// gcd of all i×i minors: the i-th determinantal divisor.
fn determinantal_divisor(m: &[Vec<i64>], i: usize) -> u64 {
    let (rows, cols) = (m.len(), m[0].len());
    let mut d: u64 = 0;
    for rs in subsets(rows, i) {
        for cs in subsets(cols, i) {
            let minor: Vec<Vec<i128>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| i128::from(m[r][c])).collect())
                .collect();
            d = gcd(d, det(&minor).unsigned_abs() as u64);
        }
    }
    d
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-30i64..=30, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn smith_form_is_a_divisibility_chain_with_correct_minors(m in matrix()) {
        let d = smith_normal_form(&m).unwrap();
        prop_assert_eq!(d.len(), m.len().min(m[0].len()));
        for w in d.windows(2) {
            prop_assert!(w[1] % w[0].max(1) == 0 || w[0] == 0 && w[1] == 0, "{:?}", d);
        }
        let mut prefix: u64 = 1;
        for i in 1..=d.len() {
            prefix *= d[i - 1];
            prop_assert_eq!(prefix, determinantal_divisor(&m, i), "minors of order {} in {:?}", i, m);
        }
    }

    #[test]
    fn make_group_ignores_input_order(mut orders in prop::collection::vec(2u64..=40, 0..5), seed in any::<u64>()) {
        let a = make_group(&orders).unwrap();
        let n = orders.len();
        if n > 1 {
            orders.rotate_left((seed as usize) % n);
            orders.swap(0, (seed as usize / 7) % n);
        }
        let b = make_group(&orders).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.order(), orders.iter().product::<u64>());
    }

    #[test]
    fn relative_order_times_meet_is_order((g, h) in group_and_subgroup()) {
        for x in g.elements() {
            let meet = intersect(&cyclic_subgroup(&g, &x).unwrap(), &h).unwrap();
            prop_assert_eq!(relative_order(&g, &h, &x).unwrap() * meet.order(), element_order(&g, &x).unwrap());
        }
    }

    #[test]
    fn quotient_type_matches_coset_table((g, h) in group_and_subgroup()) {
        let q = quotient_type(&g, &h).unwrap();
        prop_assert_eq!(q.order() * h.order(), g.order());
        // Orders of cosets x + H are relative orders; one value per coset.
        let mut seen = vec![false; g.order() as usize];
        let mut coset_orders = BTreeMap::new();
        for x in g.elements() {
            if seen[g.encode(&x) as usize] {
                continue;
            }
            for y in h.elements() {
                seen[g.encode(&g.add(&x, &y).unwrap()) as usize] = true;
            }
            *coset_orders.entry(relative_order(&g, &h, &x).unwrap()).or_insert(0u64) += 1;
        }
        let mut quotient_orders = BTreeMap::new();
        for y in q.elements() {
            *quotient_orders.entry(element_order(&q, &y).unwrap()).or_insert(0u64) += 1;
        }
        prop_assert_eq!(coset_orders, quotient_orders);
    }

    #[test]
    fn subgroup_type_matches_element_orders((_g, h) in group_and_subgroup()) {
        let t = subgroup_type(&h).unwrap();
        prop_assert_eq!(t.order(), h.order());
        let mut a: Vec<u64> = h.elements().map(|x| element_order(h.parent(), &x).unwrap()).collect();
        let mut b: Vec<u64> = t.elements().map(|x| element_order(&t, &x).unwrap()).collect();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn subgroups_are_closed((g, h) in group_and_subgroup()) {
        prop_assert!(h.contains(&g.identity()));
        for x in h.elements() {
            prop_assert!(h.contains(&g.neg(&x).unwrap()));
            for y in h.generators() {
                prop_assert!(h.contains(&g.add(&x, &y).unwrap()));
            }
        }
        prop_assert_eq!(&Subgroup::generated_by(&g, &h.generators()).unwrap(), &h);
        prop_assert_eq!(&Subgroup::generated_by(&g, &h.canonical_generators()).unwrap(), &h);
    }

    #[test]
    fn join_and_meet_orders((_g, h, k) in group_and_two_subgroups()) {
        let join = h.join(&k).unwrap();
        let meet = intersect(&h, &k).unwrap();
        prop_assert_eq!(join.order() * meet.order(), h.order() * k.order());
        prop_assert!(h.is_subgroup_of(&join) && k.is_subgroup_of(&join));
        prop_assert!(meet.is_subgroup_of(&h) && meet.is_subgroup_of(&k));
    }

    #[test]
    fn isolation_deciders_agree((g, h) in group_and_subgroup()) {
        let truth = is_isolated_brute(&g, &h, &Limits::default()).unwrap();
        prop_assert_eq!(is_isolated_psi(&g, &h).unwrap().isolated, truth.isolated);
        prop_assert_eq!(is_isolated_structural(&g, &h).unwrap().isolated, truth.isolated);
        if let Some(x) = truth.witness {
            prop_assert!(!h.contains(&x));
            prop_assert!(!intersect(&cyclic_subgroup(&g, &x).unwrap(), &h).unwrap().is_trivial());
        }
    }

    #[test]
    fn psi_is_multiplicative_on_coprime_factors(a in 2u64..=40, b in 2u64..=40) {
        prop_assume!(gcd(a, b) == 1);
        let ga = make_group(&[a]).unwrap();
        let gb = make_group(&[b]).unwrap();
        let (prod, _) = ga.direct_product(&gb).unwrap();
        let lim = Limits::default().with_enumeration_max(1600);
        let lhs = psi_brute(&prod, &lim).unwrap().into_inner();
        let rhs = psi_brute(&ga, &lim).unwrap().into_inner() * psi_brute(&gb, &lim).unwrap().into_inner();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closed_forms_agree_for_large_primes(
        p in prop::sample::select(vec![13u64, 97, 101, 251, 65521]),
        mut exps in prop::collection::vec(1u32..=6, 1..=5),
    ) {
        exps.sort_unstable();
        let t = PPartition::new(p, exps).unwrap();
        prop_assert_eq!(psi_closed_p(&t).unwrap(), psi_alt_p(&t).unwrap());
    }

    #[test]
    fn order_p_subgroup_count(gi in any::<Pick>()) {
        let (g, l) = gi.get(small_groups());
        prop_assume!(g.components().len() == 1);
        let t = &g.components()[0];
        let p = t.prime();
        let k = t.rank() as u32;
        prop_assert_eq!(subgroups_of_order(l, p).len() as u64, (p.pow(k) - 1) / (p - 1));
    }

    #[test]
    fn cache_encoding_round_trips(gi in any::<Pick>()) {
        let (g, l) = gi.get(small_groups());
        let text = encode_lattice(l);
        let back = decode_lattice(g, &text).unwrap();
        prop_assert_eq!(&back, l);
        prop_assert_eq!(encode_lattice(&back), text);
    }
}

#[test]
fn lattice_size_is_isomorphism_invariant() {
    for orders in [[4u64, 6, 3], [12, 6, 1], [2, 18, 1]] {
        let list: Vec<u64> = orders.iter().copied().filter(|&o| o > 1).collect();
        let mut perm = list.clone();
        perm.reverse();
        let a = all_subgroups(&make_group(&list).unwrap(), &Limits::default()).unwrap();
        let b = all_subgroups(&make_group(&perm).unwrap(), &Limits::default()).unwrap();
        assert_eq!(a.len(), b.len());
    }
    // Z_4 × Z_6 × Z_3 ≅ Z_12 × Z_6.
    let x = all_subgroups(&make_group(&[4, 6, 3]).unwrap(), &Limits::default()).unwrap();
    let y = all_subgroups(&make_group(&[12, 6]).unwrap(), &Limits::default()).unwrap();
    assert_eq!(x.parent, y.parent);
    assert_eq!(x.len(), y.len());
}
