//! Alphabets and symbol strings.
//!
//! Sequences are stored as symbol indices into an [`Alphabet`]; positions in
//! the public API are 1-based and inclusive unless a function says otherwise.

use std::fmt;

use crate::error::{Error, Result};

/// An ordered alphabet of `t` distinct ASCII symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    lookup: [Option<u8>; 256],
}

impl Alphabet {
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.len() < 2 {
            return Err(Error::InvalidConfiguration(format!(
                "alphabet needs at least 2 symbols, got {}",
                symbols.len()
            )));
        }
        if symbols.len() > u8::MAX as usize {
            return Err(Error::InvalidConfiguration("alphabet too large".into()));
        }
        let mut lookup = [None; 256];
        let mut upper = Vec::with_capacity(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            if !s.is_ascii_graphic() {
                return Err(Error::InvalidConfiguration(format!(
                    "alphabet symbol {s:#04x} is not printable ASCII"
                )));
            }
            let s = s.to_ascii_uppercase();
            if lookup[s as usize].is_some() {
                return Err(Error::InvalidConfiguration(format!(
                    "duplicate alphabet symbol '{}'",
                    s as char
                )));
            }
            lookup[s as usize] = Some(i as u8);
            lookup[s.to_ascii_lowercase() as usize] = Some(i as u8);
            upper.push(s);
        }
        Ok(Self {
            symbols: upper,
            lookup,
        })
    }

    /// `{A, C, G, T}` in index order.
    pub fn dna() -> Self {
        Self::new(b"ACGT").expect("DNA alphabet is valid")
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Case-insensitive lookup of a symbol's index.
    pub fn index_of(&self, symbol: u8) -> Option<u8> {
        self.lookup[symbol as usize]
    }

    pub fn symbol(&self, index: u8) -> u8 {
        self.symbols[index as usize]
    }

    pub fn encode(&self, text: &str) -> Result<SymbolString> {
        text.bytes()
            .enumerate()
            .map(|(i, b)| {
                self.index_of(b).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "symbol '{}' at offset {} is not in the alphabet",
                        b as char,
                        i + 1
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(SymbolString)
    }

    pub fn decode(&self, s: &SymbolString) -> String {
        s.0.iter().map(|&i| self.symbol(i) as char).collect()
    }
}

impl Default for Alphabet {
    fn default() -> Self {
        Self::dna()
    }
}

/// A string of symbol indices. The empty string is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolString(Vec<u8>);

impl SymbolString {
    pub fn new(symbols: Vec<u8>) -> Self {
        Self(symbols)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u8> {
        self.0
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// `S[i, j]`, 1-based inclusive.
    pub fn substring(&self, i: usize, j: usize) -> &[u8] {
        &self.0[i - 1..j]
    }

    /// The `len`-long window starting at 1-based position `start`.
    pub fn window(&self, start: usize, len: usize) -> &[u8] {
        &self.0[start - 1..start - 1 + len]
    }

    pub fn reversed(&self) -> SymbolString {
        SymbolString(self.0.iter().rev().copied().collect())
    }

    /// Checks every symbol index is below `t`.
    pub fn check_alphabet(&self, t: usize) -> Result<()> {
        match self.0.iter().position(|&s| s as usize >= t) {
            Some(p) => Err(Error::InvalidArgument(format!(
                "symbol index {} at offset {} exceeds alphabet size {t}",
                self.0[p],
                p + 1
            ))),
            None => Ok(()),
        }
    }
}

impl From<Vec<u8>> for SymbolString {
    fn from(v: Vec<u8>) -> Self {
        Self(v)
    }
}

impl From<&[u8]> for SymbolString {
    fn from(v: &[u8]) -> Self {
        Self(v.to_vec())
    }
}

impl AsRef<[u8]> for SymbolString {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for SymbolString {
    /// Renders with the DNA alphabet when every index fits, otherwise as digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const DNA: &[u8; 4] = b"ACGT";
        for &s in &self.0 {
            if (s as usize) < DNA.len() {
                write!(f, "{}", DNA[s as usize] as char)?;
            } else {
                write!(f, "[{s}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_case_insensitive() {
        let dna = Alphabet::dna();
        let s = dna.encode("acGT").unwrap();
        assert_eq!(s.as_slice(), &[0, 1, 2, 3]);
        assert_eq!(dna.decode(&s), "ACGT");
    }

    #[test]
    fn rejects_unknown_symbol_with_offset() {
        let err = Alphabet::dna().encode("ACNT").unwrap_err();
        assert!(err.to_string().contains("offset 3"), "{err}");
    }

    #[test]
    fn rejects_degenerate_alphabets() {
        assert!(Alphabet::new(b"A").is_err());
        assert!(Alphabet::new(b"AaC").is_err());
    }

    #[test]
    fn substring_is_one_based_inclusive() {
        let s = SymbolString::new(vec![0, 1, 2, 3, 0]);
        assert_eq!(s.substring(2, 4), &[1, 2, 3]);
        assert_eq!(s.window(4, 2), &[3, 0]);
        assert_eq!(s.at(1), 0);
    }
}
