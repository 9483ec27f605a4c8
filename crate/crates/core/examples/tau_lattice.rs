use dyck_tilings::tau::{join, meet, tau_of_label, tau_poset, verify_lattice, Tau};
use dyck_tilings::{Direction, LabeledTree, PlaneTree};

fn main() {
    let t = PlaneTree::parse("UDUDUD").unwrap();
    let seed = tau_of_label(&LabeledTree::from_pre_order(t.clone(), &[1, 2, 3], Direction::Decreasing).unwrap()).unwrap();
    let p = tau_poset(&seed).unwrap();
    let ranks = p.ranks().unwrap();
    for (x, r) in p.elements.iter().zip(&ranks) {
        println!("rank {r}: {x}");
    }
    let (a, b) = (Tau::parse("022").unwrap(), Tau::parse("004").unwrap());
    println!("join({a}, {b}) = {}", join(&a, &b).unwrap());
    println!("meet({a}, {b}) = {}", meet(&a, &b).unwrap());
    let rep = verify_lattice(&t, &seed).unwrap();
    println!("lattice: {} ({} elements, {} covers)", rep.ok(), rep.elements, rep.covers);
}
