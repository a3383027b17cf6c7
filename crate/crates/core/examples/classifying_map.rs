use kklab::homotopy::{loop_rho, show_tensor, StructureRing};

fn main() {
    let z = StructureRing::integers();
    let rho = loop_rho(&z, 4);
    for (j, img) in rho.j_basis.iter().zip(&rho.images) {
        println!("{} -> {:?}", show_tensor(&z, j), img);
    }
    println!("lands in the loop ring: {}", rho.pass());
}
