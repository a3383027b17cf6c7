use kklab::rings::Ring;
use kklab::toeplitz::{fundamental_suite, ToeplitzElement};

fn main() {
    let x = ToeplitzElement::monomial(2, 1, 1).sub_ref(&ToeplitzElement::monomial(3, 2, 1));
    println!("x = {}", x);
    println!("hat(x) = {}", x.hat());
    println!("π(x) = {}, in M_∞: {}", x.pi_laurent(), x.in_m_infinity());
    let y = ToeplitzElement::alpha().mul_ref(&ToeplitzElement::beta());
    println!("αβ = {}", y);
    let records = fundamental_suite();
    let passed = records.iter().filter(|r| r.passed()).count();
    println!("fundamental maps: {} of {} identities hold", passed, records.len());
}
