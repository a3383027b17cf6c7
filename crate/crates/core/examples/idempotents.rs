use kklab::homotopy::{qq_calculus, IdempotentPair, RewriteSystem, TildeMatrix, ZTilde};

fn main() {
    let rs = RewriteSystem::idempotents();
    println!("critical pairs: {}, confluent: {}", rs.critical_pairs().len(), rs.is_confluent());
    let e0 = TildeMatrix::diagonal(vec![ZTilde::new(1, 0), ZTilde::new(0, 0)]);
    let e1 = TildeMatrix::diagonal(vec![ZTilde::new(0, 0), ZTilde::new(0, 0)]);
    let pair = IdempotentPair::new(e0, e1).expect("idempotents");
    let rep = qq_calculus(&pair, 4);
    println!("class rank {}, checks pass: {}", rep.rank, rep.pass());
}
