//! Census of the bundled catalogue, or of a mirror directory given as argument.
use std::path::PathBuf;

use hallscheme::io::catalogue::bundled_dir;
use hallscheme::io::{fetch_catalogue, CatalogueSource};
use hallscheme::PrimeSet;

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(bundled_dir);
    let source = CatalogueSource::Mirror(dir);
    println!("order  schemes  solvable  thin  2-valenced");
    for order in 1..=12 {
        let files = match fetch_catalogue(&source, order, None, true) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("order {order}: {e}");
                continue;
            }
        };
        let schemes: Vec<_> = files.iter().map(|f| f.to_scheme().expect("valid")).collect();
        let two: PrimeSet = "2".parse().unwrap();
        println!(
            "{order:>5}  {:>7}  {:>8}  {:>4}  {:>10}",
            schemes.len(),
            schemes.iter().filter(|s| s.is_solvable()).count(),
            schemes.iter().filter(|s| s.is_thin()).count(),
            schemes.iter().filter(|s| s.is_pi_valenced(&two)).count(),
        );
    }
}
