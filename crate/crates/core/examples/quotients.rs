//! Quotient of a scheme by a closed subset, at scheme and hypergroup level.
use hallscheme::io::catalogue::load_bundled;
use hallscheme::io::SchemeFile;

fn main() {
    let file = load_bundled(8).expect("bundled catalogue").swap_remove(4);
    let s = file.to_scheme().expect("valid scheme");
    println!("{}: rank {}, valencies {:?}", file.name.as_deref().unwrap_or("?"), s.rank(), s.valencies());
    for t in s.closed_subsets() {
        let q = s.quotient_scheme(&t).expect("quotient");
        println!(
            "T = {:?} (n_T = {}): quotient has {} points, rank {}, coincides: {}, valency law: {}",
            t.to_vec(),
            t.valency(),
            q.scheme().n_points(),
            q.scheme().rank(),
            q.coincides_with_hypergroup_quotient(),
            q.valency_law_holds(&s),
        );
    }
    let t = &s.closed_subsets()[1];
    let q = s.quotient_scheme(t).unwrap();
    print!("\n{}", SchemeFile::from_scheme(q.scheme(), Some("quotient".into())).render());
}
