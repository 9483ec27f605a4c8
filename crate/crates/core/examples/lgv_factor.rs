use dyck_tilings::label::gf_z;
use dyck_tilings::lgv::{factorization, gf_w, gf_y, lgv_determinant, PointConfig, YDir, YoungDiagram};
use dyck_tilings::{Direction, LabeledTree, PlaneTree};

fn main() {
    let mu = YoungDiagram::new(vec![2, 1]).unwrap();
    println!("Y_down{mu} = {}", gf_y(&mu, YDir::Down).compact());
    println!("determinant, counted upward = {}", lgv_determinant(&PointConfig::for_diagram(mu.parts())).unwrap().compact());

    let t = PlaneTree::parse("UUDDUUDUDD").unwrap();
    let seed = LabeledTree::from_pre_order(t, &[4, 1, 5, 2, 3], Direction::Decreasing).unwrap();
    for f in factorization(&seed).unwrap() {
        println!("rectangle {}x{} holds {} -> {}", f.rect.width, f.rect.height, f.diagram, f.y_down.compact());
    }
    println!("Z = {}", gf_z(&seed).unwrap().compact());
    println!("W = {}", gf_w(&seed).unwrap().compact());
}
