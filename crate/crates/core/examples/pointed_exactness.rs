use std::sync::Arc;

use kklab::power::quotient_exactness_check;
use kklab::simplicial::standard_simplex;

fn main() {
    let l = Arc::new(standard_simplex(2));
    let members: Vec<_> = l.simplices().filter(|r| r.dim < 2).collect();
    let base = l.lookup("0").expect("vertex");
    for d in 2..=5 {
        let rep = quotient_exactness_check(&l, &members, base, d, 2).expect("subcomplex");
        println!("d = {}: surjective {}, kernel = image {}, kernel rank {}", d, rep.restriction_surjective, rep.kernel_equals_quotient_image, rep.kernel_rank);
    }
}
