use std::sync::Arc;

use kklab::power::{exponential_failure_check, power};
use kklab::simplicial::{circle, standard_simplex};

fn main() {
    let s1 = Arc::new(circle());
    let (ring, basis) = power(&s1, 4);
    println!("Z^{{S^1}} ranks by degree: {:?}", basis.ranks());
    for b in ring.basis() {
        println!("  {}", b.display(&s1));
    }
    let (_, tri) = power(&Arc::new(standard_simplex(2)), 3);
    println!("Z^{{Δ^2}} ranks by degree: {:?}", tri.ranks());
    let rep = exponential_failure_check(2);
    println!("square {:?} vs triangle {:?}", rep.square_ranks, rep.triangle_ranks);
}
