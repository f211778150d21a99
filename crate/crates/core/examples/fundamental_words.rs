// The words Δ_t, the operator ∂, and divisibility witnesses.

use centraldup::garside::{alpha_power, delta, delta_bound, delta_left_factor, delta_transport, partial, partial_iter};
use centraldup::{parse_term, pos_equiv, Address, PosWord};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("φ^(3) = {}", alpha_power(&Address::root(), 3));
    for text in ["x1", "(x1 (x1 x1))", "(x1 (x1 (x1 x1)))", "((x1 (x1 x1)) x1)"] {
        let t = parse_term(text)?;
        println!("Δ of {t} = {}, ∂ = {}", delta(&t), partial(&t));
    }

    let t = parse_term("(x1 (x1 (x1 x1)))")?;
    let one: Address = "1".parse()?;
    let v = delta_left_factor(&t, &one)?;
    println!("1 · {v} = Δ: {}", pos_equiv(&PosWord::letter(one).then(&v), &delta(&t)));

    let u: PosWord = "1.e".parse()?;
    println!("transport of {u}: {}", delta_transport(&t, &u)?);
    println!("bound for {u}: {}", delta_bound(&t, &u)?);

    for n in 0..4 {
        match partial_iter(&t, n, 10_000) {
            Ok(s) => println!("∂^{n} has {} leaves", s.size()),
            Err(e) => println!("∂^{n}: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
