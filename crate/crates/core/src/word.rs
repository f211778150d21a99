//! Signed letters and words over addresses.
//!
//! Text format: `eps` for the empty word, otherwise letters joined by `.`,
//! where a letter is an optional `-` followed by an address (`e` for the
//! root). Example: `1.e.-0`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::terms::Address;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("letter {0} is negative; a positive word was expected")]
    NotPositive(Letter),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

/// An address with a sign: `α` applies the identity expanding at `α`,
/// `α⁻¹` contracting.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub address: Address,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(address: Address) -> Letter {
        Letter { address, sign: Sign::Pos }
    }

    pub fn neg(address: Address) -> Letter {
        Letter { address, sign: Sign::Neg }
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn inverse(&self) -> Letter {
        let sign = match self.sign {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        };
        Letter { address: self.address.clone(), sign }
    }

    fn shifted(&self, prefix: &Address) -> Letter {
        Letter { address: prefix.join(&self.address), sign: self.sign }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Neg {
            f.write_str("-")?;
        }
        write!(f, "{}", self.address)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word on signed addresses. No free reduction is ever applied.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Concatenation `self · other`.
    pub fn then(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Formal inverse: reversed, every sign flipped.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverse).collect())
    }

    /// Prefixes `prefix` to the address of every letter.
    pub fn shift(&self, prefix: &Address) -> Word {
        Word(self.0.iter().map(|l| l.shifted(prefix)).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(Letter::is_positive)
    }

    pub fn to_positive(&self) -> Result<PosWord, WordError> {
        self.0
            .iter()
            .map(|l| {
                if l.is_positive() {
                    Ok(l.address.clone())
                } else {
                    Err(WordError::NotPositive(l.clone()))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PosWord)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("eps");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Word, WordError> {
        if s == "eps" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut offset = 0;
        for chunk in s.split('.') {
            let (sign, body, body_at) = match chunk.strip_prefix('-') {
                Some(rest) => (Sign::Neg, rest, offset + 1),
                None => (Sign::Pos, chunk, offset),
            };
            let address = parse_address(body, body_at)?;
            letters.push(Letter { address, sign });
            offset += chunk.len() + 1;
        }
        Ok(Word(letters))
    }
}

fn parse_address(body: &str, at: usize) -> Result<Address, WordError> {
    if body == "e" {
        return Ok(Address::root());
    }
    if body.is_empty() {
        return Err(WordError::Syntax { pos: at, msg: "empty letter".into() });
    }
    let mut bits = Vec::with_capacity(body.len());
    for (i, c) in body.bytes().enumerate() {
        match c {
            b'0' => bits.push(0),
            b'1' => bits.push(1),
            _ => {
                return Err(WordError::Syntax {
                    pos: at + i,
                    msg: format!("unexpected {:?} in letter", c as char),
                })
            }
        }
    }
    Ok(Address::from_bits(bits))
}

/// A word of positive letters only.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct PosWord(Vec<Address>);

impl PosWord {
    pub fn empty() -> PosWord {
        PosWord(Vec::new())
    }

    pub fn from_addresses(addresses: Vec<Address>) -> PosWord {
        PosWord(addresses)
    }

    pub fn letter(a: Address) -> PosWord {
        PosWord(vec![a])
    }

    pub fn addresses(&self) -> &[Address] {
        &self.0
    }

    pub fn into_addresses(self) -> Vec<Address> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, a: Address) {
        self.0.push(a);
    }

    pub fn extend(&mut self, other: &PosWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn then(&self, other: &PosWord) -> PosWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        PosWord(v)
    }

    pub fn shift(&self, prefix: &Address) -> PosWord {
        PosWord(self.0.iter().map(|a| prefix.join(a)).collect())
    }

    pub fn to_word(&self) -> Word {
        Word(self.0.iter().cloned().map(Letter::pos).collect())
    }

    /// The negative word `self⁻¹`.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().cloned().map(Letter::neg).collect())
    }
}

impl From<PosWord> for Word {
    fn from(p: PosWord) -> Word {
        Word(p.0.into_iter().map(Letter::pos).collect())
    }
}

impl FromIterator<Address> for PosWord {
    fn from_iter<I: IntoIterator<Item = Address>>(iter: I) -> Self {
        PosWord(iter.into_iter().collect())
    }
}

impl fmt::Display for PosWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("eps");
        }
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PosWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PosWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<PosWord, WordError> {
        s.parse::<Word>()?.to_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let w: Word = "1.e.-0".parse().unwrap();
        assert_eq!(w.len(), 3);
        assert!(w.letters()[1].address.is_root());
        assert_eq!(w.letters()[2].sign, Sign::Neg);
        assert_eq!(w.to_string(), "1.e.-0");
        assert_eq!("eps".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(Word::empty().to_string(), "eps");
    }

    #[test]
    fn malformed_words() {
        for bad in ["", "1..0", "2", "-", "e.x", "--1", "ee", "1.", "eps.1"] {
            assert!(bad.parse::<Word>().is_err(), "{bad:?} should not parse");
        }
        match "1.-2".parse::<Word>() {
            Err(WordError::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn positive_words_reject_inverses() {
        assert!("1.-0".parse::<PosWord>().is_err());
        assert_eq!("1.e.0".parse::<PosWord>().unwrap().len(), 3);
    }

    #[test]
    fn inverse_reverses_and_flips() {
        let w: Word = "1.-e.0".parse().unwrap();
        assert_eq!(w.inverse().to_string(), "-0.e.-1");
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn shift_prefixes_addresses() {
        let w: Word = "e.-0".parse().unwrap();
        assert_eq!(w.shift(&"1".parse().unwrap()).to_string(), "1.-10");
        assert_eq!(Word::empty().shift(&"0".parse().unwrap()), Word::empty());
    }
}
