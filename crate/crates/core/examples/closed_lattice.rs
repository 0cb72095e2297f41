//! Closed subsets of S4 viewed as a thin scheme, with normality flags.
use hallscheme::{AssociationScheme, GroupTable};

fn main() {
    let s = AssociationScheme::from_group(&GroupTable::symmetric(4));
    let h = s.to_hypergroup();
    let lattice = h.closed_lattice();
    let whole = h.whole();
    println!("{} closed subsets", lattice.len());
    for c in lattice.subsets() {
        println!(
            "{:>2}  {:?}{}{}",
            c.len(),
            c.to_vec(),
            if h.is_normal(&c, &whole).unwrap() { " normal" } else { "" },
            if lattice.is_subnormal(&c, &whole).unwrap() { " subnormal" } else { "" },
        );
    }
    let theta = h.theta_core_report();
    println!("theta core {:?}, metathin: {}", theta.core.to_vec(), h.is_metathin());
}
