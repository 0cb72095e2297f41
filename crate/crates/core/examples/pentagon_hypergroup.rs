//! The pentagon scheme and its complex multiplication.
use hallscheme::AssociationScheme;

fn main() {
    let rows: Vec<Vec<usize>> = (0..5)
        .map(|x| (0..5).map(|y| [0, 1, 2, 2, 1][(y + 5 - x) % 5]).collect())
        .collect();
    let s = AssociationScheme::from_matrix(&rows).expect("pentagon is a scheme");
    println!("{} points, rank {}, valencies {:?}", s.n_points(), s.rank(), s.valencies());
    for p in 0..s.rank() {
        for q in 0..s.rank() {
            print!("{p}·{q} = {:?}  ", s.complex_product(p, q).to_vec());
        }
        println!();
    }
    let h = s.to_hypergroup();
    println!("\nhypergroup table:\n{h}");
    println!("thin: {}, solvable: {}", h.is_thin(), h.is_solvable());
}
