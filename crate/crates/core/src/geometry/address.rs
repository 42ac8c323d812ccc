use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::GeometryError;

/// Finite word over `{0, .., arity-1}`.
///
/// Ordering is lexicographic on the symbol sequence (a prefix sorts before
/// its extensions), which is the order cells are serialized in.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Address {
    symbols: Vec<u8>,
    arity: u8,
}

impl Address {
    pub fn new(symbols: Vec<u8>, arity: u8) -> Result<Self, GeometryError> {
        if !(2..=10).contains(&arity) {
            return Err(GeometryError::BadArity(arity as u32));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s >= arity) {
            return Err(GeometryError::BadSymbol {
                symbol: s as u32,
                arity: arity as u32,
            });
        }
        Ok(Address { symbols, arity })
    }

    pub fn empty(arity: u8) -> Self {
        Address::new(Vec::new(), arity).expect("valid arity")
    }

    pub fn binary(symbols: Vec<u8>) -> Result<Self, GeometryError> {
        Address::new(symbols, 2)
    }

    /// Parses a digit string over the given alphabet (`"0110"`).
    pub fn parse_with_arity(s: &str, arity: u8) -> Result<Self, GeometryError> {
        let symbols = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| GeometryError::Parse(format!("bad symbol {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Address::new(symbols, arity)
    }

    /// All `arity^len` words of length `len`, in lexicographic order.
    pub fn all_of_length(len: usize, arity: u8) -> Vec<Address> {
        let mut out = vec![Address::empty(arity)];
        for _ in 0..len {
            out = out.iter().flat_map(|a| (0..arity).map(move |s| a.child(s))).collect();
        }
        out
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn child(&self, symbol: u8) -> Address {
        assert!(symbol < self.arity, "symbol out of alphabet");
        let mut symbols = self.symbols.clone();
        symbols.push(symbol);
        Address {
            symbols,
            arity: self.arity,
        }
    }

    pub fn concat(&self, other: &Address) -> Address {
        assert_eq!(self.arity, other.arity, "alphabet mismatch");
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Address {
            symbols,
            arity: self.arity,
        }
    }

    pub fn prefix(&self, len: usize) -> Address {
        Address {
            symbols: self.symbols[..len.min(self.len())].to_vec(),
            arity: self.arity,
        }
    }

    pub fn suffix_from(&self, start: usize) -> Address {
        Address {
            symbols: self.symbols[start.min(self.len())..].to_vec(),
            arity: self.arity,
        }
    }

    pub fn parent(&self) -> Option<Address> {
        (!self.is_empty()).then(|| self.prefix(self.len() - 1))
    }

    pub fn is_prefix_of(&self, other: &Address) -> bool {
        other.symbols.starts_with(&self.symbols)
    }

    /// True when one word is a prefix of the other, i.e. the cylinders
    /// they name intersect.
    pub fn is_compatible(&self, other: &Address) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    /// Index of the first differing symbol, if the words disagree within
    /// their common length.
    pub fn first_difference(&self, other: &Address) -> Option<usize> {
        self.symbols.iter().zip(&other.symbols).position(|(a, b)| a != b)
    }

    pub fn repeat(&self, times: usize) -> Address {
        Address {
            symbols: self.symbols.repeat(times),
            arity: self.arity,
        }
    }

    /// Shortest word `u` with `self = u^m`.
    pub fn primitive_root(&self) -> Address {
        let n = self.len();
        for p in 1..=n {
            if n.is_multiple_of(p) && (p..n).all(|i| self.symbols[i] == self.symbols[i - p]) {
                return self.prefix(p);
            }
        }
        self.clone()
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Address {
    type Err = GeometryError;

    /// Binary words only; use [`Address::parse_with_arity`] otherwise.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Address::parse_with_arity(s, 2)
    }
}

impl Serialize for Address {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Address {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
