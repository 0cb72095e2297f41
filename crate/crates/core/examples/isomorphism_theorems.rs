//! Checks the three isomorphism theorems on the dihedral group of order 12.
use hallscheme::{find_isomorphism, GroupTable};

fn main() {
    let h = GroupTable::dihedral(6).to_hypergroup();
    let whole = h.whole();
    let closed = h.closed_subsets();
    let (mut first, mut third) = (0, 0);
    for e in closed.iter().filter(|e| h.is_normal(e, &whole).unwrap()) {
        let q = h.quotient(e).unwrap();
        let p = q.projection().expect("normal subsets give homomorphisms");
        let image = p.target().restrict(&p.image());
        assert!(find_isomorphism(q.hypergroup(), &image).unwrap().is_some());
        first += 1;
        for d in closed.iter().filter(|d| d.is_subset_of(e).unwrap()) {
            let hd = h.quotient(d).unwrap();
            let ed = hd.project(e).unwrap();
            let double = hd.hypergroup().quotient(&ed).unwrap();
            assert!(find_isomorphism(double.hypergroup(), q.hypergroup()).unwrap().is_some());
            third += 1;
        }
    }
    println!("first isomorphism theorem: {first} kernels");
    println!("third isomorphism theorem: {third} pairs D ⊆ E");
}
