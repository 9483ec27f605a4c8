use dyck_tilings::dyck::{dts, gf_dyck, gf_z_paths, hermite_history, hook_length_gf, to_svg};
use dyck_tilings::{Direction, DyckPath, LabeledTree, PlaneTree};

fn main() {
    let t = PlaneTree::parse("UDUDUD").unwrap();
    println!("hook formula: {}", hook_length_gf(&t).unwrap().compact());
    println!("tilings with top UUUDDD: {}", gf_dyck(t.path(), &DyckPath::top(3)).unwrap().compact());
    println!("tilings with top at most UUUDDD: {}", gf_z_paths(t.path(), &DyckPath::top(3)).unwrap().compact());

    let l = LabeledTree::from_pre_order(t, &[2, 3, 1], Direction::Increasing).unwrap();
    let tiling = dts(&l).unwrap();
    println!("label {l} -> {} tiles, top {}", tiling.tiles.len(), dyck_tilings::path::steps_to_string(&tiling.top().unwrap()));
    println!("Hermite history {:?}", hermite_history(&tiling));
    if std::env::args().any(|a| a == "--svg") {
        println!("{}", to_svg(&tiling));
    }
}
