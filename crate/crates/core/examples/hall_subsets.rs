//! Hall {2}-subset of the bundled order-28 scheme, its conjugates and an extension.
use std::path::Path;

use hallscheme::hall::{conjugating_element, extend_to_hall, hall_subsets_by_filter};
use hallscheme::io::parse_scheme;
use hallscheme::{find_hall, PrimeSet};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/schemes/hm176_28.scm");
    let s = parse_scheme(&std::fs::read_to_string(path).unwrap())
        .unwrap()
        .to_scheme()
        .unwrap();
    let pi: PrimeSet = "2".parse().unwrap();
    let cert = find_hall(&s, &pi).expect("solvable and {2}-valenced");
    println!("Hall {pi}-subset {:?}: n_T = {}, index {}", cert.hall.to_vec(), cert.hall.valency(), cert.index(&s));
    println!("O_pi = {:?}, thin quotient of order {}", cert.o_pi.to_vec(), cert.thin_quotient_group.order());

    let halls = hall_subsets_by_filter(&s, &pi);
    println!("{} Hall {pi}-subsets in total", halls.len());
    for u in &halls {
        let c = conjugating_element(&s, &pi, &cert.hall, u).unwrap();
        println!("  {:?} <- conjugator {:?}", u.to_vec(), c.lifted);
    }
    let seven: PrimeSet = "7".parse().unwrap();
    println!("π = {seven}: {}", find_hall(&s, &seven).unwrap_err());

    let small = s.closed_subsets().into_iter().find(|t| t.valency() == 2).unwrap();
    let ext = extend_to_hall(&s, &pi, &small).unwrap();
    println!("{:?} extends to {:?}", small.to_vec(), ext.hall.to_vec());
}
