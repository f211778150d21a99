// Finite tables satisfying the identity, and why none of them is free.

use centraldup::magma::Magma;
use centraldup::{check_free, MulTable};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=3 {
        let all = Magma::enumerate_cd(n);
        let reps = Magma::enumerate_cd_up_to_iso(n);
        let mut monogenic = 0;
        let mut free = 0;
        for m in &all {
            for g in 0..n as u8 {
                if m.generates(g) {
                    monogenic += 1;
                    free += usize::from(check_free(&MulTable::new(m.clone(), g)?)?);
                }
            }
        }
        println!("order {n}: {} tables, {} up to isomorphism, {monogenic} (table, generator) pairs, {free} free", all.len(), reps.len());
    }

    let t: MulTable = "3 0\n1 2 2\n2 2 2\n2 2 2\n".parse()?;
    print!("{t}");
    println!("free: {}", check_free(&t)?);
    let bad: MulTable = "2 0\n1 1\n0 0\n".parse()?;
    println!("{:?}", check_free(&bad));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
