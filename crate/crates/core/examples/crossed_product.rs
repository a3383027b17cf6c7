use kklab::rings::{CrossedProduct, IntPolynomial, PolySubstitution, Ring};

fn main() {
    let (x, y) = (IntPolynomial::var(0), IntPolynomial::var(1));
    let sigma = PolySubstitution::new(vec![y.clone(), x.clone() + y.clone()]);
    let sigma_inv = PolySubstitution::new(vec![y.clone() - x.clone(), x.clone()]);
    let r = CrossedProduct::new(sigma, sigma_inv).expect("automorphism");
    let a = r.constant(x.clone() * y.clone());
    println!("t (xy) t^-1 = {:?}", r.t().mul_ref(&a).mul_ref(&r.t_inv()));
    let u = r.elem(x, 1);
    println!("(x t)^2 = {:?}", u.mul_ref(&u));
}
