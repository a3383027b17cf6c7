use kklab::rings::rotation_homotopy_w;

fn main() {
    let r = rotation_homotopy_w();
    println!("W = {:?}", r.w.rows().iter().map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    println!("det W = {}", r.det);
    println!("ev_0 = I: {}, ev_1 = rotation: {}, inverse: {}", r.ev0_is_identity, r.ev1_is_rotation, r.inverse_verified);
}
