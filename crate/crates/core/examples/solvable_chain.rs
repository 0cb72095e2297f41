//! Solvable chains of the bundled schemes on 8 points.
use hallscheme::io::catalogue::load_bundled;

fn main() {
    for f in load_bundled(8).expect("bundled catalogue") {
        let s = f.to_scheme().expect("valid scheme");
        let name = f.name.unwrap_or_default();
        match s.solvable_chain() {
            Some(c) => {
                let steps: Vec<String> = c.chain.iter().map(|t| format!("{}", t.valency())).collect();
                println!("{name}: {} (indices {:?})", steps.join(" < "), c.indices);
            }
            None => println!("{name}: not solvable"),
        }
    }
}
