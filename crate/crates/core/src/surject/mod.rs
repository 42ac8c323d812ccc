//! Continuous surjections out of the Cantor set, evaluated on finite address
//! prefixes, plus waypoint-pinned maps from `[0,1]` onto the interval or the
//! square.
//!
//! A map is never evaluated at an infinite address. Instead a length-`n`
//! prefix is sent to a closed enclosure of the image of its whole cylinder,
//! and every kind carries a modulus: the enclosure diameter bound at depth
//! `n`.

mod blocks;
mod hilbert;
mod waypoint;

pub use blocks::{
    block_surjection, clopen_partition, complement_cylinders, verify_block_surjection, BlockPair, ClopenBlock,
};
pub use hilbert::{hilbert_cell, hilbert_enclosure, hilbert_enclosure_of_cell, hilbert_point_enclosure};
pub use waypoint::{WaypointMap, WaypointTarget};

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{cylinder, Address, AxisBox, GeometryError, Rational, Region};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurjectError {
    #[error("clopen partition needs at least one block")]
    ZeroBlocks,
    #[error("clopen block needs at least one cylinder")]
    EmptyBlock,
    #[error("block cylinders must be binary addresses")]
    NonBinaryBlock,
    #[error("cylinders {0} and {1} overlap")]
    Overlap(String, String),
    #[error("{domain} domain blocks but {target} target blocks")]
    BlockCountMismatch { domain: usize, target: usize },
    #[error("waypoint list is empty")]
    NoWaypoints,
    #[error("waypoints must be strictly increasing in [0,1]; offending x = {0}")]
    WaypointOrder(Rational),
    #[error("waypoint parameter {0} outside [0,1]")]
    ParameterOutOfRange(Rational),
    #[error("malformed dyadic cell: {0}")]
    MalformedCell(String),
    #[error("depth {0} exceeds the supported maximum")]
    DepthTooLarge(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// `Σ b_i 2^-i` over the bits of `bits`.
fn dyadic_value(bits: impl Iterator<Item = u8>) -> (Rational, usize) {
    let mut value = Rational::zero();
    let mut weight = Rational::one();
    let mut count = 0;
    for b in bits {
        weight = weight * Rational::half();
        if b == 1 {
            value = value + &weight;
        }
        count += 1;
    }
    (value, count)
}

fn require_binary(a: &Address) -> Result<(), SurjectError> {
    if a.arity() != 2 {
        return Err(GeometryError::NotBinary(a.arity() as u32).into());
    }
    Ok(())
}

/// Image enclosure of the binary-expansion map `(b_i) ↦ Σ b_i 2^-i` on the
/// cylinder of `prefix`: an interval of width `2^-n`.
pub fn binary_expansion_map(prefix: &Address) -> Result<Region, SurjectError> {
    require_binary(prefix)?;
    let (lo, n) = dyadic_value(prefix.symbols().iter().copied());
    let hi = &lo + Rational::pow(2, -(n as i32));
    Ok(Region::interval(lo, hi)?)
}

/// Image enclosure of the interleaving map onto the square. Bits at odd
/// positions (1st, 3rd, ...) expand `x`, bits at even positions expand `y`.
pub fn interleave_map(prefix: &Address) -> Result<Region, SurjectError> {
    require_binary(prefix)?;
    let s = prefix.symbols();
    let (x, nx) = dyadic_value(s.iter().step_by(2).copied());
    let (y, ny) = dyadic_value(s.iter().skip(1).step_by(2).copied());
    let wx = Rational::pow(2, -(nx as i32));
    let wy = Rational::pow(2, -(ny as i32));
    let b = AxisBox::rect((x.clone(), x + wx), (y.clone(), y + wy))?;
    Ok(Region::from_box(b))
}

/// Target space of a [`CantorMap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Interval,
    Square,
    Cantor,
}

/// A continuous map out of the binary Cantor model, evaluable on prefixes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CantorMap {
    BinaryExpansion,
    Interleave,
    /// Flips the leading bit: a self-homeomorphism swapping cyl "0" and
    /// cyl "1".
    BitFlip,
    BlockGlued(BlockGlued),
}

/// Piecewise map built by [`block_surjection`]: each domain cylinder is
/// re-rooted onto its block's target cylinders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockGlued {
    pub(crate) pairs: Vec<BlockPair>,
    /// Largest loss of output length relative to input length.
    pub(crate) shift: usize,
}

impl BlockGlued {
    pub fn pairs(&self) -> &[BlockPair] {
        &self.pairs
    }

    /// Whether the target blocks cover the whole Cantor model, which is
    /// when the glued map is onto.
    pub fn is_onto(&self) -> bool {
        let all: Vec<Address> = self
            .pairs
            .iter()
            .flat_map(|p| p.target.cylinders().iter().cloned())
            .collect();
        complement_cylinders(&all).is_empty()
    }
}

impl CantorMap {
    pub fn kind(&self) -> &'static str {
        match self {
            CantorMap::BinaryExpansion => "binary_expansion",
            CantorMap::Interleave => "interleave",
            CantorMap::BitFlip => "bit_flip",
            CantorMap::BlockGlued(_) => "block_glued",
        }
    }

    pub fn target(&self) -> Target {
        match self {
            CantorMap::BinaryExpansion => Target::Interval,
            CantorMap::Interleave => Target::Square,
            CantorMap::BitFlip | CantorMap::BlockGlued(_) => Target::Cantor,
        }
    }

    /// Diameter bound for the image of a depth-`n` cylinder. Cantor targets
    /// use the middle-third metric.
    pub fn modulus(&self, n: usize) -> Rational {
        match self {
            CantorMap::BinaryExpansion => Rational::pow(2, -(n as i32)),
            CantorMap::Interleave => Rational::pow(2, -((n / 2) as i32)),
            CantorMap::BitFlip => Rational::pow(3, -(n as i32)),
            CantorMap::BlockGlued(g) => Rational::pow(3, -(n.saturating_sub(g.shift) as i32)),
        }
    }

    /// Output address prefix for Cantor-valued kinds: every point of the
    /// input cylinder maps into the output cylinder.
    pub fn evaluate_symbolic(&self, prefix: &Address) -> Result<Option<Address>, SurjectError> {
        require_binary(prefix)?;
        Ok(match self {
            CantorMap::BitFlip => Some(match prefix.symbols().split_first() {
                None => prefix.clone(),
                Some((&b, rest)) => {
                    let mut s = vec![1 - b];
                    s.extend_from_slice(rest);
                    Address::binary(s)?
                }
            }),
            CantorMap::BlockGlued(g) => Some(blocks::evaluate_glued(g, prefix)),
            _ => None,
        })
    }

    /// Closed enclosure of the image of the cylinder of `prefix`.
    pub fn evaluate(&self, prefix: &Address) -> Result<Region, SurjectError> {
        match self {
            CantorMap::BinaryExpansion => binary_expansion_map(prefix),
            CantorMap::Interleave => interleave_map(prefix),
            _ => {
                let out = self.evaluate_symbolic(prefix)?.expect("Cantor-valued kind");
                Ok(cylinder(&out)?)
            }
        }
    }

    pub fn transcript(&self, prefix: &Address) -> Result<Transcript, SurjectError> {
        Ok(Transcript {
            input: prefix.to_string(),
            depth: prefix.len(),
            enclosure: self.evaluate(prefix)?,
        })
    }

    pub fn descriptor(&self) -> MapDescriptor {
        let (blocks, onto) = match self {
            CantorMap::BlockGlued(g) => (Some(g.pairs.clone()), g.is_onto()),
            _ => (None, true),
        };
        MapDescriptor {
            kind: self.kind(),
            target: self.target(),
            onto,
            blocks,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MapDescriptor {
    pub kind: &'static str,
    pub target: Target,
    pub onto: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockPair>>,
}

/// One evaluation: input prefix or parameter, depth, enclosure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transcript {
    pub input: String,
    pub depth: usize,
    pub enclosure: Region,
}

/// Checks that the depth-`n` images of the given map leave no hole in the
/// target. Interval images are merged exactly, square images are
/// grid-aligned boxes whose grid cells are all marked, and Cantor images
/// are output cylinders whose complement must be empty.
pub fn check_cover(map: &CantorMap, n: usize) -> Result<bool, SurjectError> {
    let prefixes = Address::all_of_length(n, 2);
    if map.target() == Target::Cantor {
        let outputs = prefixes
            .iter()
            .map(|a| map.evaluate_symbolic(a).map(|o| o.expect("Cantor-valued kind")))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(complement_cylinders(&outputs).is_empty());
    }
    let images = prefixes
        .iter()
        .map(|a| map.evaluate(a))
        .collect::<Result<Vec<_>, _>>()?;
    match map.target() {
        Target::Cantor => unreachable!(),
        Target::Interval => {
            let mut spans: Vec<(Rational, Rational)> = images
                .iter()
                .flat_map(|r| r.boxes().iter().map(|b| (b.lo(0).clone(), b.hi(0).clone())))
                .collect();
            spans.sort();
            let mut reach = Rational::zero();
            for (lo, hi) in spans {
                if lo > reach {
                    return Ok(false);
                }
                if hi > reach {
                    reach = hi;
                }
            }
            Ok(reach == Rational::one())
        }
        Target::Square => {
            let side = Rational::pow(2, (n / 2) as i32);
            let cells = 1usize << (n / 2);
            let mut seen = vec![false; cells * cells];
            for r in &images {
                for b in r.boxes() {
                    let idx = |v: &Rational| (v * &side).floor_i64().unwrap_or(-1);
                    let (x0, x1) = (idx(b.lo(0)), idx(b.hi(0)));
                    let (y0, y1) = (idx(b.lo(1)), idx(b.hi(1)));
                    for i in x0.max(0)..x1.min(cells as i64) {
                        for j in y0.max(0)..y1.min(cells as i64) {
                            seen[i as usize * cells + j as usize] = true;
                        }
                    }
                }
            }
            Ok(seen.into_iter().all(|s| s))
        }
    }
}
