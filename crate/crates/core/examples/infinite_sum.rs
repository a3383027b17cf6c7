use kklab::gamma::{oplus_oracle, phi_infinity, wagoner_q_check, window_product_check, OracleMatrix, ProgressionMatrix};

fn main() {
    let x = OracleMatrix::from_progression(&ProgressionMatrix::alpha_hat());
    let phi = phi_infinity(&x);
    let n = 32;
    println!("x ⊕ φ^∞(x) = φ^∞(x) on {0}x{0}: {1}", n, oplus_oracle(&x, &phi).window(n) == phi.window(n));
    let rep = window_product_check(&phi, &phi, n);
    println!("φ^∞(x)^2 agrees on safe subwindow {}: {}", rep.safe, rep.agrees);
    let samples = vec![ProgressionMatrix::alpha_hat(), ProgressionMatrix::unit(1, 2)];
    let w = wagoner_q_check(&samples);
    println!("Wagoner conjugation on {} pairs: {}", w.samples.len(), w.pass());
}
