//! Hilbert curve cells. Parameter cell `j` at depth `k` is
//! `[j 4^-k, (j+1) 4^-k]`; the curve starts in the corner cell at `(0,0)`
//! and ends in the corner cell at `(1,0)`.

use num_integer::Integer;
use num_traits::Zero;

use super::SurjectError;
use crate::geometry::{AxisBox, Rational, Region};

pub(crate) const MAX_DEPTH: u32 = 30;

/// Grid coordinates of cell `j` on the `2^k x 2^k` grid.
pub fn hilbert_cell(j: u64, k: u32) -> (u64, u64) {
    let n = 1u64 << k;
    let (mut x, mut y) = (0, 0);
    let mut t = j;
    let mut s = 1;
    while s < n {
        let rx = 1 & (t / 2);
        let ry = 1 & (t ^ rx);
        if ry == 0 {
            if rx == 1 {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            std::mem::swap(&mut x, &mut y);
        }
        x += s * rx;
        y += s * ry;
        t /= 4;
        s *= 2;
    }
    (x, y)
}

fn cell_box(x: u64, y: u64, k: u32) -> AxisBox {
    let at = |i: u64| Rational::new(i as i64, 1 << k);
    AxisBox::rect((at(x), at(x + 1)), (at(y), at(y + 1))).expect("grid cell inside the square")
}

/// Square box visited while the parameter runs through cell `j` at depth `k`.
pub fn hilbert_enclosure(j: u64, k: u32) -> Result<Region, SurjectError> {
    if k > MAX_DEPTH {
        return Err(SurjectError::DepthTooLarge(k as usize));
    }
    if j >= 1u64 << (2 * k) {
        return Err(SurjectError::MalformedCell(format!("index {j} at depth {k}")));
    }
    let (x, y) = hilbert_cell(j, k);
    Ok(Region::from_box(cell_box(x, y, k)))
}

/// Same as [`hilbert_enclosure`] for a cell given as an interval, which must
/// be `[j 4^-k, (j+1) 4^-k]` for some `k` and `j`.
pub fn hilbert_enclosure_of_cell(cell: &Region) -> Result<Region, SurjectError> {
    let bad = || SurjectError::MalformedCell(format!("{cell:?}"));
    let [b] = cell.boxes() else { return Err(bad()) };
    if b.dim() != 1 {
        return Err(bad());
    }
    let width = b.extent(0);
    let k = (0..=MAX_DEPTH)
        .find(|&k| width == Rational::pow(4, -(k as i32)))
        .ok_or_else(bad)?;
    let j = b.lo(0) / &width;
    if !j.is_integer() {
        return Err(bad());
    }
    hilbert_enclosure(j.floor_i64().ok_or_else(bad)? as u64, k)
}

/// Enclosure of `H(u)` at depth `k`: the cell containing `u`, or the edge
/// shared by both cells when `u` sits on a cell boundary.
pub fn hilbert_point_enclosure(u: &Rational, k: u32) -> Result<Region, SurjectError> {
    if k > MAX_DEPTH {
        return Err(SurjectError::DepthTooLarge(k as usize));
    }
    if u.is_negative() || *u > Rational::one() {
        return Err(SurjectError::ParameterOutOfRange(u.clone()));
    }
    let cells = 1u64 << (2 * k);
    // u = p/q in lowest terms, q > 0
    let (j, on_boundary) = (u.numer() << (2 * k)).div_rem(u.denom());
    let j = u64::try_from(j).expect("bounded");
    if j == cells {
        return hilbert_enclosure(cells - 1, k);
    }
    let here = hilbert_enclosure(j, k)?;
    if on_boundary.is_zero() && j > 0 {
        let before = hilbert_enclosure(j - 1, k)?;
        return Ok(here.intersect(&before).expect("consecutive cells touch"));
    }
    Ok(here)
}
