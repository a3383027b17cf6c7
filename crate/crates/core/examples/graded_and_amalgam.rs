use kklab::homotopy::{check_graded, diagonal_amalgam, polynomial_example, square_zero_example};

fn main() {
    for (name, a) in [("Z[x]", polynomial_example(4)), ("square zero", square_zero_example(3))] {
        println!("{}: {:?}", name, check_graded(&a));
    }
    let rep = diagonal_amalgam(3).report();
    println!("amalgam: {:?}", rep);
}
