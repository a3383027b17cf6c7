use std::sync::Arc;

use kklab::simplicial::{iterated_subdivision, standard_simplex};

fn main() {
    let d2 = Arc::new(standard_simplex(2));
    for n in 0..=3 {
        let (sd, h) = iterated_subdivision(&d2, n).expect("subdivision");
        println!("sd^{} Δ^2: simplices by dimension {:?}, last vertex map valid: {}", n, sd.counts(), h.validate().is_ok());
    }
}
