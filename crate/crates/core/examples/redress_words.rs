// Redressing signed words and the word problems it decides.

use centraldup::garside::lcm;
use centraldup::redress::{check_cube, cd_relations, nu};
use centraldup::{complement, group_equiv, pos_equiv, redress, Address, PosWord, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["-1.0", "-e.1", "-e.-1.e.1", "1.-e.-1.1.e.-1.e"] {
        let w: Word = text.parse()?;
        println!("{w} => {}", redress(&w));
    }

    let (u, v): (PosWord, PosWord) = ("e".parse()?, "1".parse()?);
    println!("{u}\\{v} = {}, {v}\\{u} = {}", complement(&u, &v), complement(&v, &u));
    println!("lcm({u}, {v}) = {}", lcm(&u, &v)?);

    let l: PosWord = "1.e.0".parse()?;
    let r: PosWord = "e.1.e".parse()?;
    println!("{l} = {r} in the monoid: {}", pos_equiv(&l, &r));
    println!("nu({l}) = {}", nu(&l));
    let g: Word = "0.1.-0".parse()?;
    println!("{g} = 1 in the group: {}", group_equiv(&g, &"1".parse()?));

    let rels = cd_relations(1);
    println!("{} relations with parameters of length <= 1, e.g. {} = {}", rels.len(), rels[0].lhs, rels[0].rhs);

    let a = |s: &str| s.parse::<Address>();
    println!("cube on (e, 1, 11): {}", check_cube(&a("e")?, &a("1")?, &a("11")?));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
