use dyck_tilings::{DyckPath, PlaneTree};

fn main() {
    let p = DyckPath::parse("UUDUDDUD").unwrap();
    let t = PlaneTree::from_path(&p);
    println!("{p}: {} edges, root edges {:?}", t.size(), t.root_edges());
    for (e, c) in p.chord_pairs().iter().enumerate() {
        println!("  edge {e}: chord ({}, {}), children {:?}", c.i, c.j, t.children(e));
    }
    let primes: Vec<String> = p.prime_decompose().iter().map(|f| f.to_string()).collect();
    println!("prime factors: {}", primes.join(" "));
    println!("mirror: {}", p.mirror());
    for n in 0..=5 {
        println!("n = {n}: {} paths", DyckPath::enumerate(n).len());
    }
}
