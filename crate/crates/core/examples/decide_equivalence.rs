// Deciding equivalence and checking it against the brute-force oracle.

use centraldup::action::oracle_equiv;
use centraldup::decide::Decider;
use centraldup::terms::enumerate_terms_up_to;
use centraldup::{decide, parse_term, Verdict};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = [
        ("(x1 (x2 x3))", "((x1 x2) (x2 x3))"),
        ("(x1 (x2 x3))", "((x1 x2) (x1 x3))"),
        ("(x1 (x2 (x3 x4)))", "(((x1 x2) (x2 x3)) ((x2 x3) (x3 x4)))"),
        ("((x1 x1) x2)", "((x1 x2) x2)"),
    ];
    for (a, b) in pairs {
        let (t, u) = (parse_term(a)?, parse_term(b)?);
        println!("{t} ~ {u}: {} (oracle: {:?})", decide(&t, &u), oracle_equiv(&t, &u, 6));
    }

    let decider = Decider { max_size: 200, ..Decider::default() };
    let t = parse_term("(x1 (x2 x3))")?;
    let u = parse_term("((x1 x2) (x2 x3))")?;
    println!("with a 200-leaf ceiling: {:?}", decider.decide(&t, &u));

    let terms = enumerate_terms_up_to(3, 2);
    let mut agree = 0;
    for a in &terms {
        for b in &terms {
            let expected = oracle_equiv(a, b, 6) == Verdict::Equivalent;
            agree += usize::from(decide(a, b) == expected);
        }
    }
    println!("{agree} of {} pairs agree with the oracle", terms.len() * terms.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
