// Blueprint words building one-variable terms on a right comb.

use centraldup::action::apply_word;
use centraldup::blueprint::blueprint_action_check;
use centraldup::terms::{enumerate_terms_up_to, right_comb};
use centraldup::{chi, chi_star, parse_term, star, Term};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["x1", "(x1 x1)", "(x1 (x1 x1))", "((x1 x1) x1)"] {
        let t = parse_term(text)?;
        println!("{t}: chi = {}, chi* = {}", chi(&t)?, chi_star(&t)?);
    }

    let t = parse_term("((x1 x1) (x1 x1))")?;
    let (l, r) = (t.left().unwrap(), t.right().unwrap());
    assert_eq!(chi(&t)?, star(&chi(l)?, &chi(r)?));

    let p = t.size();
    let built = apply_word(&right_comb(p + 1)?, &chi(&t)?)?;
    println!("chi({t}) on the comb of {} leaves: {built}", p + 1);
    assert_eq!(built, Term::node(t, right_comb(p)?));

    let all = enumerate_terms_up_to(6, 1);
    let ok = all.iter().filter(|s| blueprint_action_check(s) == Ok(true)).count();
    println!("{ok} of {} terms of size <= 6 are built by their blueprint", all.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
