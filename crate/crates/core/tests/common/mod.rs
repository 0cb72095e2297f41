//! Shared corpus loaders and brute-force oracles. The oracles only read raw
//! tables and point matrices; they never call the library's search code.
#![allow(dead_code)]

pub mod battery;

use std::collections::BTreeSet;

use hallscheme::io::catalogue::load_bundled;
use hallscheme::{AssociationScheme, GroupTable, Hypergroup};

pub const CORPUS_ORDERS: [usize; 12] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];

/// `(name, scheme)` for every bundled scheme with the given numbers of points.
pub fn schemes(orders: &[usize]) -> Vec<(String, AssociationScheme)> {
    orders
        .iter()
        .flat_map(|&n| {
            load_bundled(n)
                .unwrap_or_else(|e| panic!("order {n}: {e}"))
                .into_iter()
                .map(move |f| {
                    let name = f.name.clone().unwrap_or_else(|| format!("order {n}"));
                    let s = f.to_scheme().unwrap_or_else(|e| panic!("{name}: {e}"));
                    (name, s)
                })
        })
        .collect()
}

/// Schemes with at most `max_points` points.
pub fn small_schemes(max_points: usize) -> Vec<(String, AssociationScheme)> {
    let orders: Vec<usize> = CORPUS_ORDERS.iter().copied().filter(|&n| n <= max_points).collect();
    schemes(&orders)
}

/// The bundled groups: cyclic and dihedral up to order 24, S3, A4, S4, Q8.
pub fn bundled_groups() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = (1..=24)
        .map(|n| (format!("C{n}"), GroupTable::cyclic(n)))
        .collect();
    out.extend((2..=12).map(|m| (format!("D{}", 2 * m), GroupTable::dihedral(m))));
    out.push(("S3".into(), GroupTable::symmetric(3)));
    out.push(("A4".into(), GroupTable::alternating(4)));
    out.push(("S4".into(), GroupTable::symmetric(4)));
    out.push(("Q8".into(), GroupTable::quaternion()));
    out
}

/// Hypergroups of order at most `max_order`: complex multiplications of
/// bundled schemes and the bundled groups, smallest first.
pub fn hypergroup_corpus(max_order: usize) -> Vec<(String, Hypergroup)> {
    let mut out: Vec<(String, Hypergroup)> = schemes(&CORPUS_ORDERS)
        .into_iter()
        .filter(|(_, s)| s.rank() <= max_order)
        .map(|(n, s)| (n, s.to_hypergroup().clone()))
        .collect();
    out.extend(
        bundled_groups()
            .into_iter()
            .filter(|(_, g)| g.order() <= max_order)
            .map(|(n, g)| (n, g.to_hypergroup())),
    );
    out.sort_by_key(|(_, h)| h.order());
    out
}

pub type Table = Vec<Vec<Vec<usize>>>;

fn mask_of(v: &[usize]) -> u128 {
    v.iter().fold(0, |m, &x| m | 1 << x)
}

fn members(mask: u128) -> Vec<usize> {
    (0..128).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Inverse of each element, read off the table: the `x` with `0 ∈ x·a`.
pub fn oracle_inverse(t: &Table) -> Vec<usize> {
    (0..t.len())
        .map(|a| (0..t.len()).find(|&x| t[x][a].contains(&0)).expect("inverse"))
        .collect()
}

fn set_product(t: &Table, a: u128, b: u128) -> u128 {
    let mut out = 0;
    for x in members(a) {
        for y in members(b) {
            out |= mask_of(&t[x][y]);
        }
    }
    out
}

/// Every closed subset by scanning all `2^k` subsets.
pub fn oracle_closed_subsets(t: &Table) -> Vec<Vec<usize>> {
    let k = t.len();
    assert!(k <= 20, "2^k scan too large");
    let inv = oracle_inverse(t);
    (1u128..1 << k)
        .filter(|&a| {
            let star = members(a).iter().fold(0u128, |m, &x| m | 1 << inv[x]);
            set_product(t, star, a) & !a == 0
        })
        .map(members)
        .collect()
}

/// Least closed superset as the intersection of all closed supersets.
pub fn oracle_closure(closed: &[Vec<usize>], a: &[usize]) -> Vec<usize> {
    let a = mask_of(a);
    let m = closed
        .iter()
        .map(|c| mask_of(c))
        .filter(|&c| a & !c == 0)
        .fold(!0u128, |acc, c| acc & c);
    members(m)
}

/// Complex products `pq` computed from point triples.
pub fn oracle_complex_products(s: &AssociationScheme) -> Vec<Vec<BTreeSet<usize>>> {
    let r = s.rank();
    let n = s.n_points();
    let mut out = vec![vec![BTreeSet::new(); r]; r];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                out[s.relation(x, y)][s.relation(y, z)].insert(s.relation(x, z));
            }
        }
    }
    out
}

/// All subgroups of `g`, generated by pairs of elements.
pub fn oracle_subgroups(g: &GroupTable) -> Vec<BTreeSet<usize>> {
    let n = g.order();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            let mut set: BTreeSet<usize> = [0, a, b].into_iter().collect();
            loop {
                let next: BTreeSet<usize> = set
                    .iter()
                    .flat_map(|&x| set.iter().map(move |&y| (x, y)))
                    .map(|(x, y)| g.mul(x, y))
                    .chain(set.iter().copied())
                    .collect();
                if next.len() == set.len() {
                    break;
                }
                set = next;
            }
            found.insert(set.into_iter().collect());
        }
    }
    found.into_iter().map(|v| v.into_iter().collect()).collect()
}
