//! Nested construction of a Cantor set inside a nondegenerate Peano
//! continuum.
//!
//! Starting from two distinct points of the continuum, each cell is split
//! into two disjoint subcontinua, one around each marked point, each of
//! diameter below a third of the distance between the marked points. The
//! level-`n` cells form `X^n`; the Cantor set is their intersection. Only the
//! finite stages are materialized, together with the witnesses the limit
//! argument rests on (disjointness, shrinking, nesting, perfectness and the
//! clopen trace of each cell).
//!
//! Subcontinua are produced by a fixed rule rather than a general
//! local-connectedness argument: child `i` is the cell clipped to the box of
//! side `L = d/4` anchored at marked point `i` and opening toward the other
//! marked point, where `d` is the marked-point distance. Every child then has
//! diameter `<= d/4 < d/3` and siblings are at least `d/2` apart.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{distance, Address, AxisBox, GeometryError, Point, Rational, Region};
use crate::report::CheckReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("marked points coincide")]
    DegenerateMarks,
    #[error("marked point {0:?} is not in the cell")]
    MarkOutsideCell(Point),
    #[error("cell has dimension {found}, model needs {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("address of length {len} exceeds tree depth {depth}")]
    AddressTooDeep { len: usize, depth: usize },
    #[error("refinement trees are indexed by binary addresses")]
    NotBinary,
    #[error("unknown model {0:?} (expected interval, square or tripod)")]
    UnknownModel(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Concrete nondegenerate Peano continua.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeanoModel {
    /// `[0,1]`
    Interval,
    /// `[0,1]^2`
    Square,
    /// Three segments meeting at `(1/2, 1/2)`: a left arm to `(0, 1/2)`
    /// and a vertical arm from `(1/2, 0)` to `(1/2, 1)`.
    Tripod,
}

impl PeanoModel {
    pub const ALL: [PeanoModel; 3] = [PeanoModel::Interval, PeanoModel::Square, PeanoModel::Tripod];

    pub fn name(self) -> &'static str {
        match self {
            PeanoModel::Interval => "interval",
            PeanoModel::Square => "square",
            PeanoModel::Tripod => "tripod",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            PeanoModel::Interval => 1,
            PeanoModel::Square | PeanoModel::Tripod => 2,
        }
    }

    pub fn root_region(self) -> Region {
        match self {
            PeanoModel::Interval => Region::unit(1),
            PeanoModel::Square => Region::unit(2),
            PeanoModel::Tripod => {
                let half = Rational::half();
                let arm = |x: (Rational, Rational), y: (Rational, Rational)| {
                    AxisBox::rect(x, y).expect("tripod arms lie in the unit square")
                };
                Region::from_boxes(vec![
                    arm((Rational::zero(), half.clone()), (half.clone(), half.clone())),
                    arm((half.clone(), half.clone()), (half.clone(), Rational::one())),
                    arm((half.clone(), half.clone()), (Rational::zero(), half.clone())),
                ])
                .expect("nonempty")
            }
        }
    }
}

impl fmt::Display for PeanoModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PeanoModel {
    type Err = EmbedError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PeanoModel::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| EmbedError::UnknownModel(s.to_string()))
    }
}

/// One cell of the refinement with its two marked points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub region: Region,
    pub marked: [Point; 2],
}

/// Splits `cell` into two disjoint subcontinua around the marked points.
pub fn subdivide(model: PeanoModel, cell: &Region, marked: &[Point; 2]) -> Result<[Cell; 2], EmbedError> {
    if cell.dim() != model.dim() {
        return Err(EmbedError::DimensionMismatch {
            expected: model.dim(),
            found: cell.dim(),
        });
    }
    let d = distance(&marked[0], &marked[1])?;
    if d.is_zero() {
        return Err(EmbedError::DegenerateMarks);
    }
    for m in marked {
        if !cell.contains_point(m) {
            return Err(EmbedError::MarkOutsideCell(m.clone()));
        }
    }
    let side = &d / Rational::integer(4);
    let child = |i: usize| -> Result<Cell, EmbedError> {
        let anchor = &marked[i];
        let other = &marked[1 - i];
        let bounds = anchor
            .coords()
            .iter()
            .zip(other.coords())
            .map(|(a, o)| {
                if o >= a {
                    (a.clone(), (a + &side).min(Rational::one()))
                } else {
                    ((a - &side).max(Rational::zero()), a.clone())
                }
            })
            .collect();
        let anchored = AxisBox::new(bounds)?;
        let region = cell
            .intersect_box(&anchored)
            .expect("anchor lies in both the cell and the anchored box");
        let marked = [region.lex_min(), region.lex_max()];
        Ok(Cell { region, marked })
    };
    Ok([child(0)?, child(1)?])
}

/// The finite stages `X^0 ⊇ X^1 ⊇ ... ⊇ X^depth`, keyed by binary address.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementTree {
    model: PeanoModel,
    depth: usize,
    cells: BTreeMap<Address, Cell>,
}

impl RefinementTree {
    /// Builds every level up to `depth`, starting from the lexicographic
    /// extremes of the model.
    pub fn build(model: PeanoModel, depth: usize) -> Result<Self, EmbedError> {
        let root = model.root_region();
        let marked = [root.lex_min(), root.lex_max()];
        let mut cells = BTreeMap::new();
        let mut frontier = vec![(Address::empty(2), Cell { region: root, marked })];
        for _ in 0..depth {
            let mut next = Vec::with_capacity(2 * frontier.len());
            for (addr, cell) in &frontier {
                let [c0, c1] = subdivide(model, &cell.region, &cell.marked)?;
                next.push((addr.child(0), c0));
                next.push((addr.child(1), c1));
            }
            cells.extend(std::mem::replace(&mut frontier, next));
        }
        cells.extend(frontier);
        Ok(RefinementTree { model, depth, cells })
    }

    pub fn model(&self) -> PeanoModel {
        self.model
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn cells(&self) -> impl Iterator<Item = (&Address, &Cell)> {
        self.cells.iter()
    }

    pub fn cell(&self, a: &Address) -> Option<&Cell> {
        self.cells.get(a)
    }

    pub fn level(&self, k: usize) -> impl Iterator<Item = (&Address, &Cell)> {
        self.cells.iter().filter(move |(a, _)| a.len() == k)
    }

    /// Replaces one cell. Used to build negative controls.
    pub fn with_cell(mut self, a: Address, cell: Cell) -> Self {
        self.cells.insert(a, cell);
        self
    }

    /// The cell region at `a`; at full depth this is the tightest enclosure
    /// of the Cantor points with that address prefix.
    pub fn evaluate_address(&self, a: &Address) -> Result<&Region, EmbedError> {
        if a.arity() != 2 {
            return Err(EmbedError::NotBinary);
        }
        if a.len() > self.depth {
            return Err(EmbedError::AddressTooDeep {
                len: a.len(),
                depth: self.depth,
            });
        }
        Ok(&self.cells[a].region)
    }

    /// The union of the level-`k` cells.
    pub fn stage(&self, k: usize) -> Option<Region> {
        Region::union_all(self.level(k).map(|(_, c)| &c.region))
    }

    /// Exact finite-stage witnesses at level `k`. Failures are reported.
    pub fn check_stage_invariants(&self, k: usize) -> CheckReport {
        let mut rep = CheckReport::new(format!("{} depth {} level {}", self.model, self.depth, k));
        if k > self.depth {
            rep.push("level", false, format!("level {k} exceeds depth {}", self.depth));
            return rep;
        }
        let level: Vec<(&Address, &Cell)> = self.level(k).collect();
        let expected = 1usize << k;
        rep.push(
            "cell_count",
            level.len() == expected,
            format!("{} cells, expected {expected}", level.len()),
        );

        let overlap = first_overlap(&level);
        rep.push(
            "disjoint",
            overlap.is_none(),
            match overlap {
                None => format!("{} cells pairwise disjoint", level.len()),
                Some((a, b)) => format!("cells {a} and {b} intersect"),
            },
        );

        self.check_shrink(k, &level, &mut rep);
        self.check_nesting(k, &level, &mut rep);
        self.check_marks(k, &level, &mut rep);
        self.check_perfect(k, &level, &mut rep);
        self.check_clopen_trace(k, &level, &mut rep);

        let disconnected: Vec<String> = level
            .iter()
            .filter(|(_, c)| !c.region.is_connected())
            .map(|(a, _)| format!("{a}"))
            .collect();
        rep.push(
            "connected",
            disconnected.is_empty(),
            if disconnected.is_empty() {
                "every cell is a connected box union".to_string()
            } else {
                format!("disconnected cells: {}", disconnected.join(","))
            },
        );
        rep
    }

    /// Stage checks for every level, names prefixed with `level<k>/`.
    pub fn check_all_levels(&self) -> CheckReport {
        let mut rep = CheckReport::new(format!("{} depth {}", self.model, self.depth));
        for k in 0..=self.depth {
            rep.absorb(&format!("level{k}"), self.check_stage_invariants(k));
        }
        rep
    }

    fn parent_of(&self, a: &Address) -> Option<&Cell> {
        a.parent().and_then(|p| self.cells.get(&p))
    }

    fn check_shrink(&self, k: usize, level: &[(&Address, &Cell)], rep: &mut CheckReport) {
        if k == 0 {
            rep.push("shrink", true, "root level has no parent");
            return;
        }
        let mut worst: Option<(Rational, String)> = None;
        for (a, c) in level {
            let Some(parent) = self.parent_of(a) else {
                rep.push("shrink", false, format!("cell {a} has no parent"));
                return;
            };
            let d = distance(&parent.marked[0], &parent.marked[1]).expect("same model");
            let bound = &d / Rational::integer(3);
            let dia = c.region.diameter();
            let parent_bound = parent.region.diameter() / Rational::integer(3);
            if dia >= bound || bound > parent_bound {
                rep.push(
                    "shrink",
                    false,
                    format!("cell {a}: dia {dia} vs d/3 {bound} vs dia(parent)/3 {parent_bound}"),
                );
                return;
            }
            let ratio = &dia / &bound;
            if worst.as_ref().is_none_or(|(w, _)| ratio > *w) {
                worst = Some((ratio, format!("{a}")));
            }
        }
        let (ratio, at) = worst.expect("level nonempty");
        rep.push(
            "shrink",
            true,
            format!("dia < d(marks)/3 <= dia(parent)/3; worst dia/(d/3) = {ratio} at {at}"),
        );
    }

    fn check_nesting(&self, k: usize, level: &[(&Address, &Cell)], rep: &mut CheckReport) {
        if k == 0 {
            rep.push("nesting", true, "root level");
            rep.push("separation", true, "root level");
            return;
        }
        let escaped = level
            .iter()
            .find(|(a, c)| self.parent_of(a).is_none_or(|p| !c.region.is_subset_of(&p.region)));
        rep.push(
            "nesting",
            escaped.is_none(),
            match escaped {
                None => "every cell lies in its parent".to_string(),
                Some((a, _)) => format!("cell {a} is not inside its parent"),
            },
        );

        let mut min_slack: Option<Rational> = None;
        for (a, c) in level.iter().filter(|(a, _)| a.symbols().last() == Some(&0)) {
            let parent_addr = a.parent().expect("k >= 1");
            let sibling = self.cells.get(&parent_addr.child(1));
            let (Some(p), Some(s)) = (self.cells.get(&parent_addr), sibling) else {
                rep.push("separation", false, format!("cell {a} lacks parent or sibling"));
                return;
            };
            let d = distance(&p.marked[0], &p.marked[1]).expect("same model");
            let gap = c.region.gap(&s.region);
            let half = &d / Rational::integer(2);
            if gap < half {
                rep.push(
                    "separation",
                    false,
                    format!("siblings under {parent_addr}: gap {gap} < d/2 = {half}"),
                );
                return;
            }
            let slack = &gap / &d;
            if min_slack.as_ref().is_none_or(|m| slack < *m) {
                min_slack = Some(slack);
            }
        }
        rep.push(
            "separation",
            true,
            format!(
                "sibling gap >= d(marks)/2; min gap/d = {}",
                min_slack.expect("level nonempty")
            ),
        );
    }

    fn check_marks(&self, k: usize, level: &[(&Address, &Cell)], rep: &mut CheckReport) {
        for (a, c) in level {
            if c.marked[0] == c.marked[1] || !c.marked.iter().all(|m| c.region.contains_point(m)) {
                rep.push(
                    "marked_points",
                    false,
                    format!("cell {a}: marks {:?} not two distinct members", c.marked),
                );
                return;
            }
            if k > 0 {
                let j = *a.symbols().last().unwrap() as usize;
                let inherited = self.parent_of(a).is_some_and(|p| c.marked.contains(&p.marked[j]));
                if !inherited {
                    rep.push(
                        "marked_points",
                        false,
                        format!("cell {a} does not carry mark {j} of its parent"),
                    );
                    return;
                }
            }
        }
        rep.push(
            "marked_points",
            true,
            "two distinct marks per cell; child j keeps mark j of its parent",
        );
    }

    /// Each cell holds two distinct points that persist as marks at the next
    /// level, hence lie in the limit set; no foreign marks fall inside.
    fn check_perfect(&self, k: usize, level: &[(&Address, &Cell)], rep: &mut CheckReport) {
        if k == self.depth {
            rep.push(
                "perfect",
                level.iter().all(|(_, c)| c.marked[0] != c.marked[1]),
                "deepest level: two distinct marks per cell (persistence not observable)",
            );
            return;
        }
        let mut next_marks: Vec<(&Point, &Address)> = self
            .level(k + 1)
            .flat_map(|(a, c)| c.marked.iter().map(move |m| (m, a)))
            .collect();
        next_marks.sort_by(|x, y| x.0.coord(0).cmp(y.0.coord(0)));
        for (a, c) in level {
            for m in &c.marked {
                let persists = [a.child(0), a.child(1)]
                    .iter()
                    .any(|ch| self.cells.get(ch).is_some_and(|cc| cc.marked.contains(m)));
                if !persists {
                    rep.push(
                        "perfect",
                        false,
                        format!("mark {m:?} of {a} not kept at level {}", k + 1),
                    );
                    return;
                }
            }
            let bb = c.region.bounding_box();
            let start = next_marks.partition_point(|(p, _)| p.coord(0) < bb.lo(0));
            let inside = next_marks[start..]
                .iter()
                .take_while(|(p, _)| p.coord(0) <= bb.hi(0))
                .filter(|(p, _)| c.region.contains_point(p));
            let mut count = 0;
            for (p, owner) in inside {
                count += 1;
                if !a.is_prefix_of(owner) {
                    rep.push(
                        "perfect",
                        false,
                        format!("foreign mark {p:?} from {owner} inside cell {a}"),
                    );
                    return;
                }
            }
            if count < 2 {
                rep.push("perfect", false, format!("cell {a} holds {count} next-level marks"));
                return;
            }
        }
        rep.push(
            "perfect",
            true,
            format!("every cell keeps its two distinct marks at level {}", k + 1),
        );
    }

    /// The rest of level `k` is a finite union of closed cells at positive
    /// distance from each cell, so each cell traces a clopen set on the limit.
    fn check_clopen_trace(&self, k: usize, level: &[(&Address, &Cell)], rep: &mut CheckReport) {
        if k == 0 {
            rep.push("clopen_trace", true, "single cell; complement is empty");
            return;
        }
        // Sibling gap of every node at levels 1..=k.
        let mut sibling_gap: BTreeMap<&Address, Rational> = BTreeMap::new();
        for (a, c) in self.cells.iter().filter(|(a, _)| !a.is_empty() && a.len() <= k) {
            let last = *a.symbols().last().unwrap();
            let sib = a.parent().unwrap().child(1 - last);
            if let Some(s) = self.cells.get(&sib) {
                sibling_gap.insert(a, c.region.gap(&s.region));
            }
        }
        let mut min_eps: Option<Rational> = None;
        for (a, _) in level {
            // A cell is separated from every other level-k cell by at least
            // the smallest sibling gap along its ancestry (cells nest).
            let eps = (1..=k)
                .map(|len| sibling_gap.get(&a.prefix(len)).cloned().unwrap_or_else(Rational::zero))
                .min()
                .expect("k >= 1");
            if !eps.is_positive() {
                rep.push("clopen_trace", false, format!("cell {a} touches the rest of level {k}"));
                return;
            }
            if min_eps.as_ref().is_none_or(|m| eps < *m) {
                min_eps = Some(eps);
            }
        }
        rep.push(
            "clopen_trace",
            true,
            format!(
                "complement of each cell = union of {} closed cells at distance >= {}",
                level.len() - 1,
                min_eps.expect("nonempty")
            ),
        );
    }
}

/// Sweep over bounding boxes sorted by their lower x bound; exact.
fn first_overlap(level: &[(&Address, &Cell)]) -> Option<(String, String)> {
    let mut order: Vec<(AxisBox, usize)> = level
        .iter()
        .enumerate()
        .map(|(i, (_, c))| (c.region.bounding_box(), i))
        .collect();
    order.sort_by(|x, y| x.0.lo(0).cmp(y.0.lo(0)));
    for (i, (bi, ci)) in order.iter().enumerate() {
        for (bj, cj) in &order[i + 1..] {
            if bj.lo(0) > bi.hi(0) {
                break;
            }
            if !level[*ci].1.region.is_disjoint(&level[*cj].1.region) {
                return Some((level[*ci].0.to_string(), level[*cj].0.to_string()));
            }
        }
    }
    None
}

#[derive(Serialize, Deserialize)]
struct CellDoc {
    address: Address,
    region: Region,
    marked_points: [Point; 2],
}

#[derive(Serialize, Deserialize)]
struct TreeDoc {
    model: PeanoModel,
    depth: usize,
    cells: Vec<CellDoc>,
}

impl Serialize for RefinementTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TreeDoc {
            model: self.model,
            depth: self.depth,
            cells: self
                .cells
                .iter()
                .map(|(a, c)| CellDoc {
                    address: a.clone(),
                    region: c.region.clone(),
                    marked_points: c.marked.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RefinementTree {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = TreeDoc::deserialize(deserializer)?;
        Ok(RefinementTree {
            model: doc.model,
            depth: doc.depth,
            cells: doc
                .cells
                .into_iter()
                .map(|c| {
                    (
                        c.address,
                        Cell {
                            region: c.region,
                            marked: c.marked_points,
                        },
                    )
                })
                .collect(),
        })
    }
}
