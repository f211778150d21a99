// The linear order of iterated left division on one-variable terms.

use centraldup::decide::decide_one_var;
use centraldup::terms::enumerate_terms_up_to;
use centraldup::{compare, Term};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut classes: Vec<Term> = Vec::new();
    for t in enumerate_terms_up_to(4, 1) {
        let mut seen = false;
        for c in &classes {
            seen |= decide_one_var(c, &t)?;
        }
        if !seen {
            classes.push(t);
        }
    }
    classes.sort_by(|a, b| compare(a, b).expect("one-variable terms"));
    println!("{} classes among terms of size <= 4, in increasing order:", classes.len());
    for c in &classes {
        println!("  {c}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
