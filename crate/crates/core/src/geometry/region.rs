//! Closed boxes and finite unions of closed boxes in `[0,1]^d`.
//!
//! A [`Region`] is always held in canonical form, so derived equality is
//! point-set equality. Canonicalization works on the arrangement induced by
//! the box coordinates: every axis is cut at the distinct box bounds, which
//! splits space into "pieces" (vertices, open segments, open faces). A
//! closed box union is exactly a union of closed pieces. Cut lines across
//! which the covered pattern does not change are dropped, leaving the unique
//! coarsest arrangement for the point set, and boxes are then read off that
//! arrangement greedily, highest-dimensional pieces first.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GeometryError, Point, Rational};

/// Closed axis-aligned box `[lo_0, hi_0] x ... ` inside the unit cube.
/// Degenerate (zero-width) axes are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AxisBox {
    bounds: Vec<(Rational, Rational)>,
}

impl AxisBox {
    pub fn new(bounds: Vec<(Rational, Rational)>) -> Result<Self, GeometryError> {
        if bounds.is_empty() || bounds.len() > 2 {
            return Err(GeometryError::UnsupportedDimension(bounds.len()));
        }
        for (lo, hi) in &bounds {
            if lo > hi {
                return Err(GeometryError::InvertedInterval(Box::new((lo.clone(), hi.clone()))));
            }
            if lo.is_negative() {
                return Err(GeometryError::OutOfUnitRange(lo.clone()));
            }
            if *hi > Rational::one() {
                return Err(GeometryError::OutOfUnitRange(hi.clone()));
            }
        }
        Ok(AxisBox { bounds })
    }

    pub fn interval(lo: Rational, hi: Rational) -> Result<Self, GeometryError> {
        AxisBox::new(vec![(lo, hi)])
    }

    pub fn rect(x: (Rational, Rational), y: (Rational, Rational)) -> Result<Self, GeometryError> {
        AxisBox::new(vec![x, y])
    }

    pub fn unit(dim: usize) -> Self {
        AxisBox {
            bounds: vec![(Rational::zero(), Rational::one()); dim],
        }
    }

    pub fn degenerate(p: &Point) -> Self {
        AxisBox {
            bounds: p.coords().iter().map(|c| (c.clone(), c.clone())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(Rational, Rational)] {
        &self.bounds
    }

    pub fn lo(&self, axis: usize) -> &Rational {
        &self.bounds[axis].0
    }

    pub fn hi(&self, axis: usize) -> &Rational {
        &self.bounds[axis].1
    }

    pub fn extent(&self, axis: usize) -> Rational {
        self.hi(axis) - self.lo(axis)
    }

    pub fn lo_corner(&self) -> Point {
        Point::from_coords_unchecked(self.bounds.iter().map(|b| b.0.clone()).collect())
    }

    pub fn hi_corner(&self) -> Point {
        Point::from_coords_unchecked(self.bounds.iter().map(|b| b.1.clone()).collect())
    }

    pub fn center(&self) -> Point {
        Point::from_coords_unchecked(self.bounds.iter().map(|(l, h)| l.midpoint(h)).collect())
    }

    /// Chebyshev diameter: the largest axis extent.
    pub fn diameter(&self) -> Rational {
        (0..self.dim()).map(|a| self.extent(a)).max().expect("nonempty box")
    }

    pub fn is_degenerate(&self) -> bool {
        self.bounds.iter().any(|(l, h)| l == h)
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        p.dim() == self.dim()
            && self
                .bounds
                .iter()
                .zip(p.coords())
                .all(|((lo, hi), c)| lo <= c && c <= hi)
    }

    pub fn contains_box(&self, other: &AxisBox) -> bool {
        self.dim() == other.dim()
            && self
                .bounds
                .iter()
                .zip(&other.bounds)
                .all(|((lo, hi), (olo, ohi))| lo <= olo && ohi <= hi)
    }

    pub fn intersects(&self, other: &AxisBox) -> bool {
        self.bounds
            .iter()
            .zip(&other.bounds)
            .all(|((lo, hi), (olo, ohi))| lo <= ohi && olo <= hi)
    }

    pub fn intersect(&self, other: &AxisBox) -> Option<AxisBox> {
        if self.dim() != other.dim() || !self.intersects(other) {
            return None;
        }
        let bounds = self
            .bounds
            .iter()
            .zip(&other.bounds)
            .map(|((lo, hi), (olo, ohi))| (lo.max(olo).clone(), hi.min(ohi).clone()))
            .collect();
        Some(AxisBox { bounds })
    }

    /// Chebyshev distance between the two closed sets (zero if they meet).
    pub fn gap(&self, other: &AxisBox) -> Rational {
        self.bounds
            .iter()
            .zip(&other.bounds)
            .map(|((lo, hi), (olo, ohi))| {
                if hi < olo {
                    olo - hi
                } else if ohi < lo {
                    lo - ohi
                } else {
                    Rational::zero()
                }
            })
            .max()
            .expect("nonempty box")
    }

    fn corner_key(&self) -> (Vec<&Rational>, Vec<&Rational>) {
        (
            self.bounds.iter().map(|b| &b.0).collect(),
            self.bounds.iter().map(|b| &b.1).collect(),
        )
    }
}

impl Ord for AxisBox {
    /// Lexicographic by low corner, then high corner.
    fn cmp(&self, other: &Self) -> Ordering {
        self.corner_key().cmp(&other.corner_key())
    }
}

impl PartialOrd for AxisBox {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AxisBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.bounds.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "[{lo}, {hi}]")?;
        }
        Ok(())
    }
}

impl Serialize for AxisBox {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[&Rational; 2]> = self.bounds.iter().map(|(l, h)| [l, h]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AxisBox {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<[Rational; 2]>::deserialize(deserializer)?;
        AxisBox::new(pairs.into_iter().map(|[l, h]| (l, h)).collect()).map_err(serde::de::Error::custom)
    }
}

/// Nonempty finite union of closed boxes of one dimension, canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Region {
    boxes: Vec<AxisBox>,
}

impl Region {
    pub fn from_boxes(boxes: Vec<AxisBox>) -> Result<Self, GeometryError> {
        let first = boxes.first().ok_or(GeometryError::EmptyRegion)?;
        let dim = first.dim();
        if let Some(b) = boxes.iter().find(|b| b.dim() != dim) {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: b.dim(),
            });
        }
        Ok(Region {
            boxes: canonicalize(boxes),
        })
    }

    pub fn from_box(b: AxisBox) -> Self {
        Region { boxes: vec![b] }
    }

    pub fn unit(dim: usize) -> Self {
        Region::from_box(AxisBox::unit(dim))
    }

    pub fn interval(lo: Rational, hi: Rational) -> Result<Self, GeometryError> {
        AxisBox::interval(lo, hi).map(Region::from_box)
    }

    pub fn point(p: &Point) -> Self {
        Region::from_box(AxisBox::degenerate(p))
    }

    pub fn boxes(&self) -> &[AxisBox] {
        &self.boxes
    }

    pub fn dim(&self) -> usize {
        self.boxes[0].dim()
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.boxes.iter().any(|b| b.contains_point(p))
    }

    pub fn union(&self, other: &Region) -> Region {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in union");
        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().cloned());
        Region {
            boxes: canonicalize(boxes),
        }
    }

    /// Union of a nonempty family; `None` for an empty iterator.
    pub fn union_all<'a>(regions: impl IntoIterator<Item = &'a Region>) -> Option<Region> {
        let boxes: Vec<AxisBox> = regions.into_iter().flat_map(|r| r.boxes.iter().cloned()).collect();
        Region::from_boxes(boxes).ok()
    }

    pub fn intersect(&self, other: &Region) -> Option<Region> {
        let boxes: Vec<AxisBox> = self
            .boxes
            .iter()
            .flat_map(|a| other.boxes.iter().filter_map(move |b| a.intersect(b)))
            .collect();
        Region::from_boxes(boxes).ok()
    }

    pub fn intersect_box(&self, b: &AxisBox) -> Option<Region> {
        let boxes: Vec<AxisBox> = self.boxes.iter().filter_map(|a| a.intersect(b)).collect();
        Region::from_boxes(boxes).ok()
    }

    pub fn is_subset_of(&self, other: &Region) -> bool {
        if self.dim() != other.dim() {
            return false;
        }
        if self.boxes.iter().all(|a| other.boxes.iter().any(|b| b.contains_box(a))) {
            return true;
        }
        other.union(self) == *other
    }

    pub fn is_disjoint(&self, other: &Region) -> bool {
        !self.boxes.iter().any(|a| other.boxes.iter().any(|b| a.intersects(b)))
    }

    /// Chebyshev distance between the two sets.
    pub fn gap(&self, other: &Region) -> Rational {
        self.boxes
            .iter()
            .flat_map(|a| other.boxes.iter().map(move |b| a.gap(b)))
            .min()
            .expect("regions are nonempty")
    }

    pub fn bounding_box(&self) -> AxisBox {
        let bounds = (0..self.dim())
            .map(|axis| {
                let lo = self.boxes.iter().map(|b| b.lo(axis)).min().unwrap();
                let hi = self.boxes.iter().map(|b| b.hi(axis)).max().unwrap();
                (lo.clone(), hi.clone())
            })
            .collect();
        AxisBox { bounds }
    }

    /// Largest Chebyshev distance between two points of the region. For the
    /// max-norm this is the largest extent of the bounding box.
    pub fn diameter(&self) -> Rational {
        self.bounding_box().diameter()
    }

    /// Lexicographically smallest point of the region.
    pub fn lex_min(&self) -> Point {
        self.boxes.iter().map(AxisBox::lo_corner).min().expect("nonempty")
    }

    /// Lexicographically largest point of the region.
    pub fn lex_max(&self) -> Point {
        self.boxes.iter().map(AxisBox::hi_corner).max().expect("nonempty")
    }

    /// Center of the first box in canonical order.
    pub fn midpoint(&self) -> Point {
        self.boxes[0].center()
    }

    /// A closed finite union of boxes is connected iff the box intersection
    /// graph is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.boxes.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, b) in self.boxes.iter().enumerate() {
                if !seen[j] && self.boxes[i].intersects(b) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.boxes.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            write!(f, "{b:?}")?;
        }
        Ok(())
    }
}

impl Serialize for Region {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.boxes.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Region {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let boxes = Vec::<AxisBox>::deserialize(deserializer)?;
        Region::from_boxes(boxes).map_err(serde::de::Error::custom)
    }
}

fn canonicalize(mut boxes: Vec<AxisBox>) -> Vec<AxisBox> {
    if boxes.len() == 1 {
        return boxes;
    }
    if boxes[0].dim() == 1 {
        return merge_intervals(boxes);
    }
    boxes.sort();
    boxes.dedup();
    if boxes.len() == 1 {
        return boxes;
    }
    let mut arr = Arrangement::build(&boxes);
    arr.coarsen();
    let mut out = arr.extract();
    out.sort();
    out
}

/// One-dimensional fast path: maximal connected components.
fn merge_intervals(mut boxes: Vec<AxisBox>) -> Vec<AxisBox> {
    boxes.sort();
    let mut out: Vec<AxisBox> = Vec::with_capacity(boxes.len());
    for b in boxes {
        match out.last_mut() {
            Some(last) if b.lo(0) <= last.hi(0) => {
                if b.hi(0) > last.hi(0) {
                    last.bounds[0].1 = b.hi(0).clone();
                }
            }
            _ => out.push(b),
        }
    }
    out
}

/// Covered pieces of the grid cut out by box coordinates.
///
/// Along an axis with cut values `c_0 < .. < c_{m-1}` piece index `2j` is the
/// vertex `c_j` and `2j+1` the open gap `(c_j, c_{j+1})`.
struct Arrangement {
    cuts: Vec<Vec<Rational>>,
    covered: Vec<bool>,
}

impl Arrangement {
    fn build(boxes: &[AxisBox]) -> Self {
        let dim = boxes[0].dim();
        let cuts: Vec<Vec<Rational>> = (0..dim)
            .map(|axis| {
                let mut v: Vec<Rational> = boxes
                    .iter()
                    .flat_map(|b| [b.lo(axis).clone(), b.hi(axis).clone()])
                    .collect();
                v.sort();
                v.dedup();
                v
            })
            .collect();
        let mut arr = Arrangement {
            covered: vec![false; cuts.iter().map(|c| 2 * c.len() - 1).product()],
            cuts,
        };
        for b in boxes {
            let ranges: Vec<(usize, usize, usize)> = (0..dim)
                .map(|axis| {
                    let lo = arr.cuts[axis].binary_search(b.lo(axis)).unwrap();
                    let hi = arr.cuts[axis].binary_search(b.hi(axis)).unwrap();
                    (2 * lo, 2 * hi, 1)
                })
                .collect();
            let shape = arr.shape();
            for_each_index(&ranges, |idx| {
                arr.covered[flat(&shape, idx)] = true;
            });
        }
        arr
    }

    fn shape(&self) -> Vec<usize> {
        self.cuts.iter().map(|c| 2 * c.len() - 1).collect()
    }

    fn dim(&self) -> usize {
        self.cuts.len()
    }

    /// Drops every interior cut whose two sides and the cut itself carry the
    /// same coverage for every piece of the other axes.
    fn coarsen(&mut self) {
        loop {
            let mut changed = false;
            for axis in 0..self.dim() {
                let mut j = 1;
                while j + 1 < self.cuts[axis].len() {
                    if self.cut_is_inessential(axis, j) {
                        self.remove_cut(axis, j);
                        changed = true;
                    } else {
                        j += 1;
                    }
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn cut_is_inessential(&self, axis: usize, j: usize) -> bool {
        let shape = self.shape();
        let ranges: Vec<(usize, usize, usize)> = shape
            .iter()
            .enumerate()
            .map(|(a, &n)| if a == axis { (0, 0, 1) } else { (0, n - 1, 1) })
            .collect();
        let mut ok = true;
        for_each_index(&ranges, |idx| {
            if !ok {
                return;
            }
            let mut probe = idx.to_vec();
            probe[axis] = 2 * j - 1;
            let left = self.covered[flat(&shape, &probe)];
            probe[axis] = 2 * j;
            let on = self.covered[flat(&shape, &probe)];
            probe[axis] = 2 * j + 1;
            let right = self.covered[flat(&shape, &probe)];
            ok = left == on && on == right;
        });
        ok
    }

    fn remove_cut(&mut self, axis: usize, j: usize) {
        let old_shape = self.shape();
        self.cuts[axis].remove(j);
        let new_shape = self.shape();
        let mut covered = vec![false; new_shape.iter().product()];
        let ranges: Vec<(usize, usize, usize)> = new_shape.iter().map(|&n| (0, n - 1, 1)).collect();
        for_each_index(&ranges, |idx| {
            let mut src = idx.to_vec();
            // New piece 2j-1 is the merged gap; later pieces shift by two.
            if src[axis] >= 2 * j {
                src[axis] += 2;
            }
            covered[flat(&new_shape, idx)] = self.covered[flat(&old_shape, &src)];
        });
        self.covered = covered;
    }

    fn extract(&self) -> Vec<AxisBox> {
        let shape = self.shape();
        let dim = self.dim();
        let total: usize = shape.iter().product();
        let mut claimed = vec![false; total];
        let mut out = Vec::new();
        for level in (0..=dim).rev() {
            for f in 0..total {
                if !self.covered[f] || claimed[f] {
                    continue;
                }
                let idx = unflat(&shape, f);
                if idx.iter().filter(|&&i| i % 2 == 1).count() != level {
                    continue;
                }
                let lo = idx.clone();
                let mut hi = idx.clone();
                for axis in 0..dim {
                    if idx[axis].is_multiple_of(2) {
                        continue;
                    }
                    while hi[axis] + 2 < shape[axis] {
                        let next = hi[axis] + 2;
                        let ranges: Vec<(usize, usize, usize)> = (0..dim)
                            .map(|a| if a == axis { (next, next, 1) } else { (lo[a], hi[a], 2) })
                            .collect();
                        let mut free = true;
                        for_each_index(&ranges, |p| {
                            let g = flat(&shape, p);
                            free &= self.covered[g] && !claimed[g];
                        });
                        if !free {
                            break;
                        }
                        hi[axis] = next;
                    }
                }
                let closed: Vec<(usize, usize, usize)> = (0..dim)
                    .map(|a| {
                        if idx[a] % 2 == 1 {
                            (lo[a] - 1, hi[a] + 1, 1)
                        } else {
                            (lo[a], hi[a], 1)
                        }
                    })
                    .collect();
                for_each_index(&closed, |p| claimed[flat(&shape, p)] = true);
                let bounds = closed
                    .iter()
                    .enumerate()
                    .map(|(a, &(l, h, _))| (self.cuts[a][l / 2].clone(), self.cuts[a][h / 2].clone()))
                    .collect();
                out.push(AxisBox { bounds });
            }
        }
        out
    }
}

fn flat(shape: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(shape).fold(0, |acc, (&i, &n)| acc * n + i)
}

fn unflat(shape: &[usize], mut f: usize) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for a in (0..shape.len()).rev() {
        idx[a] = f % shape[a];
        f /= shape[a];
    }
    idx
}

/// Visits every multi-index in the product of inclusive stepped ranges.
fn for_each_index(ranges: &[(usize, usize, usize)], mut visit: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = ranges.iter().map(|r| r.0).collect();
    if ranges.iter().any(|r| r.0 > r.1) {
        return;
    }
    loop {
        visit(&idx);
        let mut axis = ranges.len();
        loop {
            if axis == 0 {
                return;
            }
            axis -= 1;
            let (start, end, step) = ranges[axis];
            if idx[axis] + step <= end {
                idx[axis] += step;
                break;
            }
            idx[axis] = start;
        }
    }
}
