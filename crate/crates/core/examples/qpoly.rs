use dyck_tilings::qpoly::{q_binomial, q_factorial, q_int};

fn main() {
    let f = q_factorial(4);
    println!("[4]! = {}", f.compact());
    let b = q_binomial(3, 2);
    println!("[5 choose 2] = {}", b.compact());
    let back = f.div_exact(&q_int(4).unwrap()).unwrap();
    println!("[4]! / [4] = {}", back.compact());
    println!("[5 choose 2] at q = 1: {}", b.at_one());
}
