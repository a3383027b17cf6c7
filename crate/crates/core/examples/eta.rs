use kklab::homotopy::eta_transformation;

fn main() {
    for m in [1, 2, 4] {
        let rep = eta_transformation(m);
        println!("{} edges: pastes {}, ring map {}", m, rep.pastes, rep.is_homomorphism);
        for (k, l, _, p, _) in &rep.diagonal {
            println!("  η({}, {}) = {}", k, l, p);
        }
    }
}
