use kklab::gamma::{alpha1, beta1, oplus, sum_ring_data, wodzicki_blowup, ProgressionMatrix};
use kklab::rings::Ring;

fn main() {
    let a = ProgressionMatrix::alpha_hat();
    let b = ProgressionMatrix::beta_hat();
    println!("α̂β̂ = {}", a.mul_ref(&b));
    println!("1 - β̂α̂ = {}", ProgressionMatrix::identity().sub_ref(&b.mul_ref(&a)));
    println!("α₁ = {}, β₁ = {}", alpha1(), beta1());
    println!("α̂ ⊕ β̂ = {}", oplus(&a, &b));
    let data = sum_ring_data();
    println!("sum ring relations hold: {} of {}", data.relations.iter().filter(|r| r.1).count(), data.relations.len());
    for n in [3, 10, 28, 64] {
        println!("window {}: max entry of A^2 = {}", n, wodzicki_blowup(n).max_entry);
    }
}
