//! Hand-checked values for every public operation.

use isolated_subgroups::group::{abelian_groups_up_to, PPartition};
use isolated_subgroups::harness::cache::LatticeCache;
use isolated_subgroups::isolation::{count_isolated_order_p, omega1_containment, SocleOfRadical};
use isolated_subgroups::lattice::subgroups_of_order;
use isolated_subgroups::psi::{f_alpha, psi_alt_p, psi_degree, psi_relative};
use isolated_subgroups::subgroup::relative_order;
use isolated_subgroups::*;

fn g(orders: &[u64]) -> AbelianGroup {
    make_group(orders).unwrap()
}

fn el(g: &AbelianGroup, r: &[u64]) -> Element {
    g.element(r).unwrap()
}

fn sub(g: &AbelianGroup, gens: &[&[u64]]) -> Subgroup {
    let gens: Vec<Element> = gens.iter().map(|r| el(g, r)).collect();
    Subgroup::generated_by(g, &gens).unwrap()
}

fn t(p: u64, e: &[u32]) -> PPartition {
    PPartition::new(p, e.to_vec()).unwrap()
}

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn canonical_groups() {
    let a = g(&[4, 2]);
    assert_eq!(a.components(), &[t(2, &[1, 2])]);
    assert_eq!(a.order(), 8);
    let b = g(&[6]);
    assert_eq!(b.components(), &[t(2, &[1]), t(3, &[1])]);
    let c = g(&[]);
    assert!(c.is_trivial());
    assert_eq!(c.order(), 1);
    assert!(make_group(&[1]).is_err());
}

#[test]
fn element_arithmetic() {
    let z24 = g(&[2, 4]);
    let x = el(&z24, &[1, 3]);
    assert_eq!(
        group_op(&z24, &x, &el(&z24, &[1, 2])).unwrap(),
        el(&z24, &[0, 1])
    );
    assert_eq!(group_op(&z24, &x, &z24.identity()).unwrap(), x);
    assert!(group_op(&z24, &x, &z24.neg(&x).unwrap())
        .unwrap()
        .is_identity());
    assert!(z24.element(&[2, 0]).is_err());
    assert!(z24.element(&[0]).is_err());

    assert_eq!(element_order(&z24, &z24.identity()).unwrap(), 1);
    assert_eq!(element_order(&z24, &el(&z24, &[1, 2])).unwrap(), 2);
    assert_eq!(element_order(&z24, &el(&z24, &[0, 1])).unwrap(), 4);
}

#[test]
fn relative_orders() {
    let z4 = g(&[4]);
    let h = sub(&z4, &[&[2]]);
    assert_eq!(relative_order(&z4, &h, &el(&z4, &[2])).unwrap(), 1);
    assert_eq!(relative_order(&z4, &h, &el(&z4, &[1])).unwrap(), 2);
    let one = Subgroup::trivial(&z4);
    for x in z4.elements() {
        assert_eq!(
            relative_order(&z4, &one, &x).unwrap(),
            element_order(&z4, &x).unwrap()
        );
    }
}

#[test]
fn cyclic_subgroups_and_meets() {
    let z24 = g(&[2, 4]);
    assert!(cyclic_subgroup(&z24, &z24.identity()).unwrap().is_trivial());
    let c = cyclic_subgroup(&z24, &el(&z24, &[0, 1])).unwrap();
    let elems: Vec<Element> = c.elements().collect();
    assert_eq!(elems, (0..4).map(|i| el(&z24, &[0, i])).collect::<Vec<_>>());
    assert_eq!(c.generators(), vec![el(&z24, &[0, 1])]);

    let z9 = g(&[9]);
    assert!(cyclic_subgroup(&z9, &el(&z9, &[1])).unwrap().is_whole());

    let whole = Subgroup::whole(&z24);
    assert_eq!(intersect(&c, &whole).unwrap(), c);
    assert!(intersect(&c, &Subgroup::trivial(&z24))
        .unwrap()
        .is_trivial());
    let om = omega1(&z24, 2).unwrap();
    assert_eq!(intersect(&c, &om).unwrap(), sub(&z24, &[&[0, 2]]));
}

#[test]
fn omega1_examples() {
    let z4 = g(&[4]);
    assert_eq!(omega1(&z4, 2).unwrap(), sub(&z4, &[&[2]]));
    assert!(omega1(&g(&[2, 2]), 2).unwrap().is_whole());
    assert!(omega1(&g(&[9]), 2).unwrap().is_trivial());
}

#[test]
fn smith_forms() {
    assert_eq!(
        smith_normal_form(&[vec![1, 0], vec![0, 1]]).unwrap(),
        vec![1, 1]
    );
    assert_eq!(
        smith_normal_form(&[vec![4, 0], vec![0, 6]]).unwrap(),
        vec![2, 12]
    );
    assert_eq!(smith_normal_form(&[vec![0]]).unwrap(), vec![0]);
}

#[test]
fn quotients() {
    let z24 = g(&[2, 4]);
    assert_eq!(quotient_type(&z24, &Subgroup::trivial(&z24)).unwrap(), z24);
    assert!(quotient_type(&z24, &Subgroup::whole(&z24))
        .unwrap()
        .is_trivial());
    assert_eq!(
        quotient_type(&z24, &sub(&z24, &[&[1, 2]])).unwrap(),
        g(&[4])
    );
    assert_eq!(
        quotient_type(&z24, &sub(&z24, &[&[0, 2]])).unwrap(),
        g(&[2, 2])
    );
}

#[test]
fn psi_values() {
    assert_eq!(psi_brute(&g(&[]), &limits()).unwrap(), 1);
    assert_eq!(psi_brute(&g(&[2]), &limits()).unwrap(), 3);
    assert_eq!(psi_brute(&g(&[2, 4]), &limits()).unwrap(), 23);
    assert_eq!(psi_brute(&g(&[4]), &limits()).unwrap(), 11);

    assert_eq!(f_alpha(&t(2, &[1, 2]), 0).unwrap(), 1u32.into());
    assert_eq!(f_alpha(&t(2, &[1, 2]), 1).unwrap(), 2u32.into());
    assert_eq!(f_alpha(&t(3, &[1, 1]), 1).unwrap(), 3u32.into());

    assert_eq!(psi_closed_p(&t(2, &[1])).unwrap(), 3);
    assert_eq!(psi_closed_p(&t(2, &[1, 2])).unwrap(), 23);
    // p^5 − p^4 + p^3 − p + 1 at p = 2.
    assert_eq!(psi_closed_p(&t(2, &[1, 2])).unwrap(), 32 - 16 + 8 - 2 + 1);
    assert_eq!(psi_closed_p(&t(3, &[1, 1])).unwrap(), 25);

    assert_eq!(psi_alt_p(&t(2, &[1])).unwrap(), 3);
    assert_eq!(psi_alt_p(&t(2, &[1, 2])).unwrap(), 23);
    assert_eq!(psi_alt_p(&t(5, &[2])).unwrap(), 521);

    assert_eq!(psi_closed(&g(&[])).unwrap(), 1);
    assert_eq!(psi_closed(&g(&[6])).unwrap(), 21);
    assert_eq!(psi_closed(&g(&[9])).unwrap(), 61);
    assert_eq!(psi_closed(&g(&[2, 9])).unwrap(), 183);

    assert_eq!(psi_degree(&t(2, &[1])), 2);
    assert_eq!(psi_degree(&t(2, &[1, 2])), 5);
    assert_eq!(psi_degree(&t(2, &[2, 2, 3])), 10);
}

#[test]
fn relative_psi_values() {
    let z24 = g(&[2, 4]);
    assert_eq!(
        psi_relative(&z24, &Subgroup::trivial(&z24), &limits()).unwrap(),
        23
    );
    assert_eq!(
        psi_relative(&z24, &Subgroup::whole(&z24), &limits()).unwrap(),
        8
    );
    let z4 = g(&[4]);
    assert_eq!(psi_relative(&z4, &sub(&z4, &[&[2]]), &limits()).unwrap(), 6);
}

#[test]
fn isolation_deciders() {
    let z4 = g(&[4]);
    let h = sub(&z4, &[&[2]]);
    let v = is_isolated_brute(&z4, &h, &limits()).unwrap();
    assert!(!v.isolated);
    assert_eq!(v.witness, Some(el(&z4, &[1])));
    // ψ(Z_4) − ψ(Z_2) = 8 but |H|(ψ(Z_2) − 1) = 4.
    assert!(!is_isolated_psi(&z4, &h).unwrap().isolated);
    assert!(!is_isolated_structural(&z4, &h).unwrap().isolated);

    let z24 = g(&[2, 4]);
    for m in [Method::Definition, Method::PsiCriterion, Method::Structural] {
        assert!(
            is_isolated(&z24, &Subgroup::trivial(&z24), m, &limits())
                .unwrap()
                .isolated
        );
        assert!(
            is_isolated(&z24, &Subgroup::whole(&z24), m, &limits())
                .unwrap()
                .isolated
        );
        assert!(
            is_isolated(&z24, &sub(&z24, &[&[1, 0]]), m, &limits())
                .unwrap()
                .isolated
        );
        assert!(
            !is_isolated(&z24, &sub(&z24, &[&[0, 2]]), m, &limits())
                .unwrap()
                .isolated
        );
    }
    let psi = is_isolated_psi(&z24, &Subgroup::whole(&z24)).unwrap();
    assert_eq!(psi.witness, None);

    let z33 = g(&[3, 3]);
    for h in all_subgroups(&z33, &limits()).unwrap().subgroups {
        assert!(is_isolated_structural(&z33, &h).unwrap().isolated);
    }
}

#[test]
fn mixed_products_have_only_trivial_isolated_subgroups() {
    let g36 = g(&[4, 9]);
    let h = sub(&g36, &[&[1, 0]]);
    let v = is_isolated_brute(&g36, &h, &limits()).unwrap();
    assert!(!v.isolated);
    assert_eq!(v.witness, Some(el(&g36, &[1, 1])));
    assert!(!is_isolated_structural(&g36, &h).unwrap().isolated);
    assert!(!is_isolated_psi(&g36, &h).unwrap().isolated);
    assert_eq!(count_isolated(&g36, &limits()).unwrap(), 2);
}

#[test]
fn socle_of_radical_examples() {
    let z24 = g(&[2, 4]);
    assert_eq!(
        socle_of_radical(&z24, 2).unwrap().subgroup,
        sub(&z24, &[&[0, 2]])
    );
    assert!(socle_of_radical(&g(&[3, 3]), 3)
        .unwrap()
        .subgroup
        .is_trivial());
    let z44 = g(&[4, 4]);
    let s: SocleOfRadical = socle_of_radical(&z44, 2).unwrap();
    let elems: Vec<Element> = s.subgroup.elements().collect();
    let expect: Vec<Element> = [[0, 0], [0, 2], [2, 0], [2, 2]]
        .iter()
        .map(|r| el(&z44, r))
        .collect();
    assert_eq!(elems, expect);
    assert_eq!(s.lines().len(), 3);
}

#[test]
fn isolated_enumerations() {
    let z24 = g(&[2, 4]);
    let iso = enumerate_isolated(&z24, &limits()).unwrap();
    let expect = vec![
        Subgroup::trivial(&z24),
        sub(&z24, &[&[1, 0]]),
        sub(&z24, &[&[1, 2]]),
        Subgroup::whole(&z24),
    ];
    assert_eq!(iso, expect);

    let z9 = g(&[9]);
    assert_eq!(
        enumerate_isolated(&z9, &limits()).unwrap(),
        vec![Subgroup::trivial(&z9), Subgroup::whole(&z9)]
    );
    assert_eq!(enumerate_isolated(&g(&[2, 2]), &limits()).unwrap().len(), 5);

    assert_eq!(count_isolated(&z24, &limits()).unwrap(), 4);
    assert_eq!(count_isolated(&g(&[2, 4, 4]), &limits()).unwrap(), 6);
    assert_eq!(count_isolated(&g(&[2, 2, 4]), &limits()).unwrap(), 12);
}

#[test]
fn order_p_counts() {
    assert_eq!(count_isolated_order_p(&t(2, &[1, 2])).unwrap(), 2);
    assert_eq!(count_isolated_order_p(&t(3, &[1, 1])).unwrap(), 4);
    assert_eq!(count_isolated_order_p(&t(5, &[2, 3])).unwrap(), 0);
}

#[test]
fn omega1_containment_examples() {
    let z224 = g(&[2, 2, 4]);
    for h in enumerate_isolated(&z224, &limits()).unwrap() {
        if !h.is_whole() {
            assert_eq!(omega1_containment(&z224, &h).unwrap(), (true, true));
        }
    }
}

#[test]
fn lattices() {
    let z2 = g(&[2]);
    assert_eq!(all_cyclic_subgroups(&z2, &limits()).unwrap().len(), 2);
    assert_eq!(
        all_cyclic_subgroups(&g(&[2, 2]), &limits()).unwrap().len(),
        4
    );
    let z24 = g(&[2, 4]);
    let cyc = all_cyclic_subgroups(&z24, &limits()).unwrap();
    assert_eq!(cyc.len(), 6);
    assert!(cyc.contains(&sub(&z24, &[&[1, 1]])));

    assert_eq!(all_subgroups(&g(&[2, 2]), &limits()).unwrap().len(), 5);
    let l = all_subgroups(&z24, &limits()).unwrap();
    assert_eq!(l.len(), 8);
    assert!(l.contains(&omega1(&z24, 2).unwrap()));
    assert_eq!(all_subgroups(&g(&[]), &limits()).unwrap().len(), 1);

    assert_eq!(subgroups_of_order(&l, 2).len(), 3);
    let l33 = all_subgroups(&g(&[3, 3]), &limits()).unwrap();
    assert_eq!(subgroups_of_order(&l33, 3).len(), 4);
    assert_eq!(
        subgroups_of_order(&l33, 1),
        vec![Subgroup::trivial(&l33.parent)]
    );
}

#[test]
fn goursat_examples() {
    let cases: [(&[u64], &[u64], usize); 3] = [(&[2], &[2], 5), (&[2], &[4], 8), (&[], &[2, 4], 8)];
    for (a, b, n) in cases {
        let gs = goursat_subgroups(&g(a), &g(b), &limits()).unwrap();
        let (product, _) = g(a).direct_product(&g(b)).unwrap();
        assert_eq!(gs.len(), n);
        assert!(gs.same_subgroups(&all_subgroups(&product, &limits()).unwrap()));
    }
}

#[test]
fn bounds_are_enforced() {
    let big = g(&[1024]);
    assert!(matches!(
        all_subgroups(&big, &limits()),
        Err(Error::BoundExceeded { .. })
    ));
    assert!(matches!(
        psi_brute(&g(&[2048]), &limits()),
        Err(Error::BoundExceeded { .. })
    ));
    assert!(all_subgroups(&big, &Limits::default().with_lattice_max(1024)).is_ok());
}

#[test]
fn cache_round_trip_over_a_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let cache = LatticeCache::open(dir.path()).unwrap();
    for grp in abelian_groups_up_to(32) {
        let l = all_subgroups(&grp, &limits()).unwrap();
        cache.store(&l).unwrap();
        assert_eq!(cache.load(&grp).unwrap(), l);
    }
    assert!(cache.load(&g(&[64])).is_none());
}
