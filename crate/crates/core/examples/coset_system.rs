// The free monogenic system realized on cosets of the group.

use centraldup::freesystem::{coset_eq, coset_mul, coset_of_term, Coset, CosetEq};
use centraldup::parse_term;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = coset_of_term(&parse_term("x1")?)?;
    let xx = coset_mul(&x, &x);
    println!("x * x has representative {} and origin {:?}", xx.rep, xx.origin.as_ref().map(|t| t.to_string()));

    let lhs = coset_mul(&x, &xx);
    let rhs = coset_mul(&xx, &xx);
    println!("x(xx) vs (xx)(xx): {:?}", coset_eq(&lhs, &rhs));
    println!("x vs xx: {:?}", coset_eq(&x, &xx));

    let bare = |c: &Coset| Coset::from_word(c.rep.clone());
    let verdict = coset_eq(&bare(&lhs), &bare(&rhs));
    println!("same pair without origins: {verdict:?}");
    assert_eq!(verdict, CosetEq::Unknown);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
