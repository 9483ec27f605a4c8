use dyck_tilings::rational::*;
use dyck_tilings::DyckPath;

fn main() {
    let paths = enumerate_rational(3, 1, 2).unwrap();
    let inflated = paths.iter().filter(|p| p.is_inflated()).count();
    println!("{} (1,2)-paths of size 3, {inflated} inflated", paths.len());

    let lambda = DyckPath::zigzag(3);
    let sets = vec![vec![2, 3], vec![4, 5], vec![1, 6]];
    let seed = tau_1k_of_sets(&lambda, &sets).unwrap();
    let p = tau_1k_poset(&seed).unwrap();
    println!("(1,2) lattice from {:?}: {} elements", seed.seq, p.len());

    let kseed = label_k1(&lambda, &[vec![3, 2], vec![5, 4], vec![6, 1]]).unwrap();
    let q = eta_poset(&kseed, 2).unwrap();
    println!("(2,1) lattice from {:?}: {} elements", eta_of_label(&kseed).unwrap(), q.len());
    println!("isomorphic: {}", p.isomorphic(&q));

    let mu = [1, 3, 2, 0];
    let s = sets_from_mu(&mu, 2).unwrap();
    println!("mu {mu:?} -> sets {s:?} -> Stirling {:?}", stirling_from_sets(&s).unwrap());
}
