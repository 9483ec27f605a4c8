use dyck_tilings::label::{build_poset, gf_z, gf_z_recursive, pre_order_seed};
use dyck_tilings::{Direction, LabeledTree, PlaneTree};

fn main() {
    let t = PlaneTree::parse("UDUUDUDD").unwrap();
    let seed = pre_order_seed(&t);
    let p = build_poset(&seed).unwrap();
    println!("{} increasing labels above {seed}, {} covers", p.len(), p.covers.len());
    println!("Z = {}", gf_z(&seed).unwrap().compact());

    let dec = LabeledTree::from_pre_order(t, &[1, 4, 2, 3], Direction::Decreasing).unwrap();
    println!("Z from decreasing {dec} = {}", gf_z(&dec).unwrap().compact());
    println!("Z by leaf recursion = {}", gf_z_recursive(&dec).unwrap().compact());

    let l = LabeledTree::from_pre_order(PlaneTree::parse("UUDDUUDDUD").unwrap(), &[5, 2, 4, 1, 3], Direction::Decreasing)
        .unwrap();
    println!("{l} is 312-avoiding: {}", l.is_312_avoiding());
}
