mod common;

use hallscheme::hall::{
    compute_o_pi, conjugating_element, extend_to_hall, hall_subgroups, hall_subsets_by_filter,
};
use hallscheme::{find_hall, AssociationScheme, GroupTable, HallError, PrimeSet};

fn pi(s: &str) -> PrimeSet {
    s.parse().unwrap()
}

fn pentagon() -> AssociationScheme {
    let m: Vec<Vec<usize>> = (0..5)
        .map(|x| (0..5).map(|y| [0, 1, 2, 2, 1][(y + 5 - x) % 5]).collect())
        .collect();
    AssociationScheme::from_matrix(&m).unwrap()
}

#[test]
fn pentagon_is_rejected() {
    assert!(matches!(find_hall(&pentagon(), &pi("2")), Err(HallError::NotSolvable)));
    assert!(matches!(find_hall(&pentagon(), &pi("5")), Err(HallError::NotPiValenced(_))));
}

#[test]
fn sylow_three_subsets_of_s4() {
    let s = AssociationScheme::from_group(&GroupTable::symmetric(4));
    let halls = hall_subsets_by_filter(&s, &pi("3"));
    assert_eq!(halls.len(), 4);
    assert!(halls.iter().all(|t| t.valency() == 3));
    assert_eq!(compute_o_pi(&s, &pi("3")).unwrap().valency(), 1);
}

#[test]
fn klein_four_in_a4() {
    let s = AssociationScheme::from_group(&GroupTable::alternating(4));
    let cert = find_hall(&s, &pi("2")).unwrap();
    assert_eq!(cert.hall.valency(), 4);
    assert_eq!(cert.o_pi, cert.hall);
    assert_eq!(hall_subsets_by_filter(&s, &pi("2")).len(), 1);
    assert_eq!(cert.thin_quotient_group.order(), 3);
}

#[test]
fn full_pi_gives_the_whole_scheme() {
    let s = AssociationScheme::from_group(&GroupTable::dihedral(6));
    let cert = find_hall(&s, &pi("2,3")).unwrap();
    assert_eq!(cert.hall, s.whole());
    assert_eq!(cert.index(&s), 1);
}

#[test]
fn group_hall_subgroups_have_pi_part_order() {
    let g = GroupTable::symmetric(4);
    for p in ["2", "3", "2,3"] {
        let p = pi(p);
        let want = p.pi_part(24) as usize;
        for k in hall_subgroups(&g, &p).unwrap() {
            assert_eq!(k.len(), want);
        }
    }
}

#[test]
fn lifted_conjugator_is_among_all_conjugators() {
    let s = AssociationScheme::from_group(&GroupTable::dihedral(6));
    let halls = hall_subsets_by_filter(&s, &pi("2"));
    assert_eq!(halls.len(), 3);
    for t in &halls {
        for u in &halls {
            let c = conjugating_element(&s, &pi("2"), t, u).unwrap();
            let x = c.lifted.unwrap();
            assert!(c.all.contains(&x));
            assert_eq!(s.conjugate_subset(t, x).bits(), u.bits());
        }
    }
}

#[test]
fn non_hall_inputs_are_refused() {
    let s = AssociationScheme::from_group(&GroupTable::symmetric(3));
    let halls = hall_subsets_by_filter(&s, &pi("2"));
    let three = s.closed_subsets().into_iter().find(|t| t.valency() == 3).unwrap();
    assert!(matches!(
        conjugating_element(&s, &pi("2"), &halls[0], &three),
        Err(HallError::NotHall(..))
    ));
    assert!(matches!(
        extend_to_hall(&s, &pi("2"), &three),
        Err(HallError::NotClosedPiSubset(..))
    ));
}

#[test]
fn extension_of_the_identity_is_a_hall_subset() {
    for (name, s) in common::small_schemes(12) {
        if !s.is_solvable() {
            continue;
        }
        for p in [pi("2"), pi("3")] {
            if !s.is_pi_valenced(&p) {
                continue;
            }
            let cert = extend_to_hall(&s, &p, &s.identity()).unwrap();
            assert!(cert.verify(&s), "{name}");
            assert!(cert.o_pi.is_subset_of(&cert.hall), "{name}");
        }
    }
}

#[test]
fn certificate_index_is_the_pi_prime_part() {
    for (name, s) in common::small_schemes(12) {
        if !s.is_solvable() {
            continue;
        }
        for p in PrimeSet::of(s.total_valency()).subsets() {
            if p.is_empty() || !s.is_pi_valenced(&p) {
                continue;
            }
            let cert = find_hall(&s, &p).unwrap();
            let n = s.total_valency();
            assert_eq!(cert.hall.valency(), p.pi_part(n), "{name}, {p}");
            assert!(p.is_pi_prime_number(cert.index(&s)), "{name}, {p}");
        }
    }
}
