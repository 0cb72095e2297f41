//! Hall subgroups of small groups through their thin schemes.
use hallscheme::hall::hall_subsets_by_filter;
use hallscheme::{find_hall, AssociationScheme, GroupTable, PrimeSet};

fn main() {
    let groups = [
        ("S4", GroupTable::symmetric(4)),
        ("A4", GroupTable::alternating(4)),
        ("D12", GroupTable::dihedral(6)),
        ("Q8", GroupTable::quaternion()),
        ("C12", GroupTable::cyclic(12)),
    ];
    for (name, g) in groups {
        let n = g.order() as u64;
        let s = AssociationScheme::from_group(&g);
        for pi in PrimeSet::of(n).subsets().into_iter().filter(|p| !p.is_empty()) {
            let cert = find_hall(&s, &pi).unwrap();
            let count = hall_subsets_by_filter(&s, &pi).len();
            println!("{name:>3} π = {pi:<6} |H| = {:>2}, {count} Hall subgroup(s)", cert.hall.len());
        }
    }
}
