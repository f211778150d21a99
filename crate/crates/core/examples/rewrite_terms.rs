// Applying the identity at addresses, along words, and reading off traces.

use centraldup::action::{apply_word, expansion_levels, trace};
use centraldup::{parse_term, Word};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t = parse_term("(x1 (x2 (x3 x4)))")?;
    let w: Word = "1.e.0".parse()?;
    let u: Word = "e.1.e".parse()?;
    let a = apply_word(&t, &w)?;
    let b = apply_word(&t, &u)?;
    println!("{t} under {w}: {a}");
    println!("{t} under {u}: {b}");
    assert_eq!(a, b);

    let tr = trace(&w).ok_or("empty operator")?;
    println!("trace of {w}: {tr}");
    assert_eq!(trace(&u), Some(tr));

    match apply_word(&t, &"e.00".parse()?) {
        Ok(s) => println!("unexpected: {s}"),
        Err(e) => println!("{t} under e.00: {e}"),
    }

    let empty: Word = "e.e.-0".parse()?;
    println!("trace of {empty}: {}", trace(&empty).map_or("empty".into(), |t| t.to_string()));

    for (i, level) in expansion_levels(&parse_term("(x1 (x1 (x1 x1)))")?, 2).iter().enumerate() {
        println!("level {i}: {} terms", level.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
