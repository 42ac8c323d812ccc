//! Finite topological spaces and exact decomposition (quotient) spaces.
//!
//! Subsets are bitmasks over the point list, so spaces have at most 64
//! points; the exhaustive suites stay far below that. Iteration order is the
//! bit order, which keeps every report reproducible.
//!
//! For finite spaces T1, Hausdorff and discrete coincide. Checks whose
//! classical hypotheses need a Hausdorff space still run on non-Hausdorff
//! input and flag the unmet hypothesis instead of refusing it.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::report::{Check, CheckReport};

pub type Mask = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("family is not a topology: {0}")]
    NotATopology(String),
    #[error("{0} points exceed the 64-point limit")]
    TooManyPoints(usize),
    #[error("unknown point label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate point label {0:?}")]
    DuplicateLabel(String),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("representative {label:?} is not in block {block}")]
    BadRepresentative { label: String, block: usize },
    #[error("expected {expected} representatives, got {found}")]
    RepresentativeCount { expected: usize, found: usize },
    #[error("map is not surjective")]
    NotSurjective,
    #[error("assignment has {found} entries for a {expected}-point domain")]
    AssignmentLength { expected: usize, found: usize },
    #[error("assignment target {0} outside the codomain")]
    AssignmentTarget(usize),
    #[error("unknown named space {0:?}")]
    UnknownSpace(String),
}

pub fn bits(mask: Mask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn full_mask(n: usize) -> Mask {
    if n == 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// `a`, `b`, ... for up to 26 points, then `p26`, `p27`, ...
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("p{i}")
            }
        })
        .collect()
}

/// True iff `family` contains the empty set and the whole `n`-point set and
/// is closed under pairwise union and intersection.
pub fn is_topology(n: usize, family: &[Mask]) -> bool {
    let full = full_mask(n);
    if family.iter().any(|&u| u & !full != 0) {
        return false;
    }
    let set: HashSet<Mask> = family.iter().copied().collect();
    if !set.contains(&0) || !set.contains(&full) {
        return false;
    }
    family
        .iter()
        .all(|&u| family.iter().all(|&v| set.contains(&(u | v)) && set.contains(&(u & v))))
}

/// Finite point set with an explicit family of open sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteTopSpace {
    labels: Vec<String>,
    opens: Vec<Mask>,
}

impl FiniteTopSpace {
    pub fn new(labels: Vec<String>, opens: Vec<Mask>) -> Result<Self, TopologyError> {
        if labels.len() > 64 {
            return Err(TopologyError::TooManyPoints(labels.len()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(TopologyError::DuplicateLabel(l.clone()));
            }
        }
        let mut opens = opens;
        opens.sort_by(|&a, &b| open_order(a, b));
        opens.dedup();
        if !is_topology(labels.len(), &opens) {
            return Err(TopologyError::NotATopology(format!(
                "{} sets over {} points",
                opens.len(),
                labels.len()
            )));
        }
        Ok(FiniteTopSpace { labels, opens })
    }

    /// Opens given as label lists.
    pub fn from_label_sets(labels: Vec<String>, opens: &[Vec<&str>]) -> Result<Self, TopologyError> {
        let masks = opens
            .iter()
            .map(|set| {
                set.iter().try_fold(0, |m, l| {
                    labels
                        .iter()
                        .position(|x| x == l)
                        .map(|i| m | 1 << i)
                        .ok_or_else(|| TopologyError::UnknownLabel(l.to_string()))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        FiniteTopSpace::new(labels, masks)
    }

    pub fn discrete(n: usize) -> Self {
        assert!(n <= 20, "discrete space enumerates its power set");
        FiniteTopSpace::new(default_labels(n), (0..1 << n).collect()).expect("power set")
    }

    pub fn indiscrete(n: usize) -> Self {
        FiniteTopSpace::new(default_labels(n), vec![0, full_mask(n)]).expect("trivial topology")
    }

    /// Nested opens `{}, {a}, {a,b}, ...`.
    pub fn chain(n: usize) -> Self {
        FiniteTopSpace::new(default_labels(n), (0..=n).map(full_mask).collect()).expect("chain")
    }

    pub fn sierpinski() -> Self {
        FiniteTopSpace::chain(2)
    }

    /// Built-in vocabulary: `chainN`, `discreteN`, `indiscreteN`, `sierpinski`.
    pub fn named(name: &str) -> Result<Self, TopologyError> {
        let unknown = || TopologyError::UnknownSpace(name.to_string());
        if name == "sierpinski" {
            return Ok(FiniteTopSpace::sierpinski());
        }
        for (prefix, build) in [
            ("indiscrete", FiniteTopSpace::indiscrete as fn(usize) -> Self),
            ("discrete", FiniteTopSpace::discrete),
            ("chain", FiniteTopSpace::chain),
        ] {
            if let Some(rest) = name.strip_prefix(prefix) {
                let n: usize = rest.parse().map_err(|_| unknown())?;
                if n == 0 || n > 12 {
                    return Err(unknown());
                }
                return Ok(build(n));
            }
        }
        Err(unknown())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    pub fn full(&self) -> Mask {
        full_mask(self.len())
    }

    pub fn is_open(&self, m: Mask) -> bool {
        self.opens.binary_search_by(|&o| open_order(o, m)).is_ok()
    }

    pub fn is_closed(&self, m: Mask) -> bool {
        self.is_open(self.full() & !m)
    }

    pub fn index_of(&self, label: &str) -> Result<usize, TopologyError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| TopologyError::UnknownLabel(label.to_string()))
    }

    pub fn mask_labels(&self, m: Mask) -> Vec<&str> {
        bits(m).map(|i| self.labels[i].as_str()).collect()
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|i| self.is_open(1 << i))
    }

    pub fn is_t0(&self) -> bool {
        self.all_pairs(|i, j| self.opens.iter().any(|&u| (u >> i & 1) != (u >> j & 1)))
    }

    pub fn is_t1(&self) -> bool {
        (0..self.len()).all(|i| self.is_closed(1 << i))
    }

    pub fn is_hausdorff(&self) -> bool {
        self.all_pairs(|i, j| {
            self.opens.iter().any(|&u| {
                u >> i & 1 == 1 && u >> j & 1 == 0 && self.opens.iter().any(|&v| v >> j & 1 == 1 && u & v == 0)
            })
        })
    }

    fn all_pairs(&self, separated: impl Fn(usize, usize) -> bool) -> bool {
        (0..self.len()).all(|i| (i + 1..self.len()).all(|j| separated(i, j)))
    }

    /// Subspace on the points of `m`, keeping their relative order.
    pub fn subspace(&self, m: Mask) -> FiniteTopSpace {
        let idx: Vec<usize> = bits(m).collect();
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let opens = self
            .opens
            .iter()
            .map(|&u| {
                idx.iter()
                    .enumerate()
                    .filter(|(_, &i)| u >> i & 1 == 1)
                    .fold(0, |acc, (k, _)| acc | 1 << k)
            })
            .collect();
        FiniteTopSpace::new(labels, opens).expect("subspace topology")
    }
}

/// Opens sort by size, then lexicographically by member indices. For equal
/// sizes the set holding the lowest differing index comes first.
fn open_order(a: Mask, b: Mask) -> Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| {
        if a == b {
            Ordering::Equal
        } else if a >> (a ^ b).trailing_zeros() & 1 == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    })
}

impl fmt::Debug for FiniteTopSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opens: Vec<String> = self
            .opens
            .iter()
            .map(|&m| format!("{{{}}}", self.mask_labels(m).join(",")))
            .collect();
        write!(f, "[{}] {}", self.labels.join(","), opens.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct SpaceDoc {
    points: Vec<String>,
    opens: Vec<Vec<String>>,
}

impl Serialize for FiniteTopSpace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SpaceDoc {
            points: self.labels.clone(),
            opens: self
                .opens
                .iter()
                .map(|&m| self.mask_labels(m).into_iter().map(String::from).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteTopSpace {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = SpaceDoc::deserialize(deserializer)?;
        let opens: Vec<Vec<&str>> = doc
            .opens
            .iter()
            .map(|o| o.iter().map(String::as_str).collect())
            .collect();
        FiniteTopSpace::from_label_sets(doc.points.clone(), &opens).map_err(serde::de::Error::custom)
    }
}

/// Nonempty, pairwise disjoint blocks covering the points; blocks are kept
/// sorted by their lowest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Mask>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<Mask>) -> Result<Self, TopologyError> {
        let full = full_mask(n);
        let mut seen: Mask = 0;
        for &b in &blocks {
            if b == 0 {
                return Err(TopologyError::NotAPartition("empty block".into()));
            }
            if b & !full != 0 {
                return Err(TopologyError::NotAPartition("block outside the space".into()));
            }
            if seen & b != 0 {
                return Err(TopologyError::NotAPartition("blocks overlap".into()));
            }
            seen |= b;
        }
        if seen != full {
            return Err(TopologyError::NotAPartition("blocks do not cover the space".into()));
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(Partition { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        Partition::new(n, (0..n).map(|i| 1 << i).collect()).expect("singletons")
    }

    pub fn whole(n: usize) -> Self {
        Partition::new(n, vec![full_mask(n)]).expect("one block")
    }

    /// Parses `ab|c`: blocks separated by `|`; inside a block, labels are
    /// comma-separated, or single characters when there is no comma.
    pub fn parse(space: &FiniteTopSpace, s: &str) -> Result<Self, TopologyError> {
        let blocks = s
            .split('|')
            .map(|block| {
                let labels: Vec<String> = if block.contains(',') {
                    block.split(',').map(|l| l.trim().to_string()).collect()
                } else {
                    block.chars().map(String::from).collect()
                };
                labels.iter().try_fold(0 as Mask, |m, l| {
                    let i = space.index_of(l)?;
                    if m >> i & 1 == 1 {
                        return Err(TopologyError::NotAPartition(format!("{l} repeated")));
                    }
                    Ok(m | 1 << i)
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(space.len(), blocks)
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.blocks
            .iter()
            .position(|&b| b >> point & 1 == 1)
            .expect("partition covers every point")
    }

    /// Every partition of `n` points, via restricted growth strings.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(i: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<Partition>) {
            if i == n {
                let k = if n == 0 { 0 } else { max + 1 };
                let mut blocks = vec![0; k];
                for (p, &b) in rgs.iter().enumerate() {
                    blocks[b] |= 1 << p;
                }
                out.push(Partition::new(n, blocks).expect("valid rgs"));
                return;
            }
            let limit = if i == 0 { 0 } else { max + 1 };
            for b in 0..=limit {
                rgs.push(b);
                go(i + 1, n, rgs, max.max(b), out);
                rgs.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, &mut Vec::with_capacity(n), 0, &mut out);
        out
    }

    pub fn describe(&self, space: &FiniteTopSpace) -> String {
        self.blocks
            .iter()
            .map(|&b| join_labels(&space.mask_labels(b)))
            .collect::<Vec<_>>()
            .join("|")
    }
}

fn join_labels(labels: &[&str]) -> String {
    if labels.iter().all(|l| l.chars().count() == 1) {
        labels.concat()
    } else {
        labels.join("+")
    }
}

/// The decomposition space: points are the blocks, and a family of blocks is
/// open iff its union is open in `x`.
pub fn decomposition_topology(x: &FiniteTopSpace, d: &Partition) -> FiniteTopSpace {
    assert_eq!(x.len(), d.points(), "partition of a different space");
    let labels: Vec<String> = d.blocks().iter().map(|&b| join_labels(&x.mask_labels(b))).collect();
    let k = d.len();
    let opens = (0..1u64 << k)
        .filter(|&fam| {
            let union = bits(fam).fold(0, |acc, i| acc | d.blocks()[i]);
            x.is_open(union)
        })
        .collect();
    FiniteTopSpace::new(labels, opens).expect("decomposition opens form a topology")
}

/// Total map between finite spaces, `assignment[i]` = image of point `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    domain: FiniteTopSpace,
    codomain: FiniteTopSpace,
    assignment: Vec<usize>,
}

impl FiniteMap {
    pub fn new(
        domain: FiniteTopSpace,
        codomain: FiniteTopSpace,
        assignment: Vec<usize>,
    ) -> Result<Self, TopologyError> {
        if assignment.len() != domain.len() {
            return Err(TopologyError::AssignmentLength {
                expected: domain.len(),
                found: assignment.len(),
            });
        }
        if let Some(&bad) = assignment.iter().find(|&&y| y >= codomain.len()) {
            return Err(TopologyError::AssignmentTarget(bad));
        }
        Ok(FiniteMap {
            domain,
            codomain,
            assignment,
        })
    }

    pub fn identity(space: FiniteTopSpace) -> Self {
        let n = space.len();
        FiniteMap::new(space.clone(), space, (0..n).collect()).expect("identity")
    }

    pub fn domain(&self) -> &FiniteTopSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteTopSpace {
        &self.codomain
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn preimage(&self, m: Mask) -> Mask {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &y)| m >> y & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn image(&self) -> Mask {
        self.assignment.iter().fold(0, |acc, &y| acc | 1 << y)
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == self.codomain.full()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.len() == self.codomain.len() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<FiniteMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.codomain.len()];
        for (i, &y) in self.assignment.iter().enumerate() {
            inv[y] = i;
        }
        FiniteMap::new(self.codomain.clone(), self.domain.clone(), inv).ok()
    }
}

/// Preimage of every open set is open.
pub fn is_continuous(f: &FiniteMap) -> bool {
    f.codomain.opens().iter().all(|&v| f.domain.is_open(f.preimage(v)))
}

pub fn is_homeomorphism(f: &FiniteMap) -> bool {
    is_continuous(f) && f.inverse().is_some_and(|g| is_continuous(&g))
}

/// Result of checking a classical statement on a finite instance, with a
/// flag for whether the statement's hypotheses were met.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub holds: bool,
    pub hypotheses_met: bool,
    pub note: String,
}

/// Checks that the representative subspace `{x_λ}` is homeomorphic to the
/// decomposition space via `x_λ ↦ X_λ`. `reps[λ]` is a point of block `λ`.
pub fn verify_prop5(x: &FiniteTopSpace, d: &Partition, reps: &[usize]) -> Result<HypothesisCheck, TopologyError> {
    if reps.len() != d.len() {
        return Err(TopologyError::RepresentativeCount {
            expected: d.len(),
            found: reps.len(),
        });
    }
    for (lambda, (&r, &block)) in reps.iter().zip(d.blocks()).enumerate() {
        if r >= x.len() || block >> r & 1 == 0 {
            return Err(TopologyError::BadRepresentative {
                label: x.labels().get(r).cloned().unwrap_or_else(|| r.to_string()),
                block: lambda,
            });
        }
    }
    let y_mask = reps.iter().fold(0, |acc, &r| acc | 1 << r);
    let y = x.subspace(y_mask);
    // Subspace points are in index order; send each to its block.
    let assignment = bits(y_mask).map(|p| d.block_of(p)).collect();
    let h = FiniteMap::new(y, decomposition_topology(x, d), assignment)?;
    let hausdorff = x.is_hausdorff();
    Ok(HypothesisCheck {
        holds: is_homeomorphism(&h),
        hypotheses_met: hausdorff,
        note: if hausdorff {
            "compact Hausdorff (finite discrete) space".into()
        } else {
            "hypothesis unmet: space is not Hausdorff; outcome informational".into()
        },
    })
}

/// Blocks `f^-1(y)`; requires `f` onto.
pub fn fiber_partition(f: &FiniteMap) -> Result<Partition, TopologyError> {
    if !f.is_surjective() {
        return Err(TopologyError::NotSurjective);
    }
    let blocks = (0..f.codomain.len()).map(|y| f.preimage(1 << y)).collect();
    Partition::new(f.domain.len(), blocks)
}

/// Checks that the fiber decomposition of the domain is homeomorphic to the
/// codomain via `f^-1(y) ↦ y`.
pub fn verify_lemma7(f: &FiniteMap) -> HypothesisCheck {
    let fibers = match fiber_partition(f) {
        Ok(p) => p,
        Err(_) => {
            return HypothesisCheck {
                holds: false,
                hypotheses_met: false,
                note: "hypothesis unmet: map is not onto".into(),
            }
        }
    };
    let quotient = decomposition_topology(&f.domain, &fibers);
    let assignment = fibers
        .blocks()
        .iter()
        .map(|&b| f.assignment[b.trailing_zeros() as usize])
        .collect();
    let g = FiniteMap::new(quotient, f.codomain.clone(), assignment).expect("fibers map to codomain");
    let continuous = is_continuous(f);
    let hausdorff = f.codomain.is_hausdorff();
    let mut unmet = Vec::new();
    if !continuous {
        unmet.push("map is not continuous");
    }
    if !hausdorff {
        unmet.push("codomain is not Hausdorff");
    }
    HypothesisCheck {
        holds: is_homeomorphism(&g),
        hypotheses_met: unmet.is_empty(),
        note: if unmet.is_empty() {
            "continuous surjection from a compact space onto a Hausdorff space".into()
        } else {
            format!("hypothesis unmet: {}; outcome informational", unmet.join(", "))
        },
    }
}

/// Every topology on `n` labelled points (`n <= 6`).
///
/// Finite topologies correspond one-to-one with preorders: `x ≤ y` iff every
/// open set containing `x` contains `y`, and the opens are the up-sets.
pub fn all_topologies(n: usize) -> Vec<FiniteTopSpace> {
    assert!(n <= 6, "preorder enumeration is exponential in n^2");
    let labels = default_labels(n);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for bitset in 0u64..1 << pairs.len() {
        // up[x] = { y : x ≤ y }
        let mut up: Vec<Mask> = (0..n).map(|i| 1 << i).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if bitset >> k & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        let transitive = (0..n).all(|x| bits(up[x]).all(|y| up[y] & !up[x] == 0));
        if !transitive {
            continue;
        }
        let opens: Vec<Mask> = (0..1u64 << n).filter(|&u| bits(u).all(|x| up[x] & !u == 0)).collect();
        out.push(FiniteTopSpace::new(labels.clone(), opens).expect("up-sets form a topology"));
    }
    out
}

/// Every topology on `n <= 4` points times every partition: the
/// decomposition family must be a topology, and the projection continuous.
pub fn decomposition_sweep(n: usize) -> Check {
    let spaces = all_topologies(n);
    let partitions = Partition::all(n);
    let mut instances = 0;
    let mut failure = None;
    for x in &spaces {
        for d in &partitions {
            instances += 1;
            let family: Vec<Mask> = (0..1u64 << d.len())
                .filter(|&fam| x.is_open(bits(fam).fold(0, |acc, i| acc | d.blocks()[i])))
                .collect();
            let ok = is_topology(d.len(), &family) && {
                let q = decomposition_topology(x, d);
                let projection = (0..n).map(|p| d.block_of(p)).collect();
                is_continuous(&FiniteMap::new(x.clone(), q, projection).expect("projection"))
            };
            if !ok && failure.is_none() {
                failure = Some(format!("{x:?} with blocks {}", d.describe(x)));
            }
        }
    }
    Check::tally(
        format!("decomposition/{n}pt"),
        instances,
        format!("{} topologies x {} partitions", spaces.len(), partitions.len()),
        failure,
    )
}

/// `verify_prop5` on the discrete space of each size up to `max_n`, for
/// every partition and every choice of representatives.
pub fn prop5_sweep(max_n: usize) -> Check {
    let mut instances = 0;
    let mut failure = None;
    for n in 1..=max_n {
        let x = FiniteTopSpace::discrete(n);
        for d in Partition::all(n) {
            let choices: Vec<Vec<usize>> = d.blocks().iter().map(|&b| bits(b).collect()).collect();
            let mut pick = vec![0; choices.len()];
            loop {
                instances += 1;
                let reps: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
                let ok = verify_prop5(&x, &d, &reps).is_ok_and(|r| r.holds && r.hypotheses_met);
                if !ok && failure.is_none() {
                    failure = Some(format!("discrete{n} blocks {} reps {reps:?}", d.describe(&x)));
                }
                // odometer over representative choices
                let mut k = 0;
                while k < pick.len() {
                    pick[k] += 1;
                    if pick[k] < choices[k].len() {
                        break;
                    }
                    pick[k] = 0;
                    k += 1;
                }
                if k == pick.len() {
                    break;
                }
            }
        }
    }
    Check::tally(
        format!("prop5/discrete<={max_n}"),
        instances,
        "every partition and representative choice".into(),
        failure,
    )
}

/// `verify_lemma7` for every continuous surjection from a topology on at
/// most `max_domain` points onto a discrete space of at most `max_codomain`
/// points.
pub fn lemma7_sweep(max_domain: usize, max_codomain: usize) -> Check {
    let mut instances = 0;
    let mut failure = None;
    for n in 1..=max_domain {
        let spaces = all_topologies(n);
        for k in 1..=max_codomain.min(n) {
            let y = FiniteTopSpace::discrete(k);
            for x in &spaces {
                let mut assignment = vec![0usize; n];
                loop {
                    let fiber = |v: usize| {
                        assignment
                            .iter()
                            .enumerate()
                            .filter(|(_, &t)| t == v)
                            .fold(0 as Mask, |m, (i, _)| m | 1 << i)
                    };
                    // onto a discrete space: continuous iff every fiber is open
                    let eligible = (0..k).all(|v| {
                        let f = fiber(v);
                        f != 0 && x.is_open(f)
                    });
                    if eligible {
                        instances += 1;
                        let f = FiniteMap::new(x.clone(), y.clone(), assignment.clone()).expect("in range");
                        let r = verify_lemma7(&f);
                        if !(r.holds && r.hypotheses_met) && failure.is_none() {
                            failure = Some(format!("{x:?} -> discrete{k} via {assignment:?}"));
                        }
                    }
                    let mut i = 0;
                    while i < n {
                        assignment[i] += 1;
                        if assignment[i] < k {
                            break;
                        }
                        assignment[i] = 0;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                }
            }
        }
    }
    Check::tally(
        format!("lemma7/domain<={max_domain}/codomain<={max_codomain}"),
        instances,
        "continuous surjections onto discrete spaces".into(),
        failure,
    )
}

/// Singleton decomposition of every space on `n` points is homeomorphic to
/// the space via `x ↦ {x}`.
pub fn singleton_sweep(n: usize) -> Check {
    let mut instances = 0;
    let mut failure = None;
    for x in all_topologies(n) {
        instances += 1;
        let q = decomposition_topology(&x, &Partition::singletons(n));
        let f = FiniteMap::new(x.clone(), q, (0..n).collect()).expect("bijection");
        if !is_homeomorphism(&f) && failure.is_none() {
            failure = Some(format!("{x:?}"));
        }
    }
    Check::tally(format!("singletons/{n}pt"), instances, "x -> {x}".into(), failure)
}

/// Finite suites run by `fintop sweep`.
pub fn sweep_report(points: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("finite topology sweep up to {points} points"));
    for c in [
        decomposition_sweep(points),
        singleton_sweep(points),
        prop5_sweep(points),
        lemma7_sweep(points, points),
    ] {
        report.push(c.name, c.pass, c.witness);
    }
    report
}

impl Check {
    fn tally(name: String, instances: usize, what: String, failure: Option<String>) -> Check {
        match failure {
            None => Check {
                name,
                pass: true,
                witness: format!("{instances} instances ({what}) all pass"),
            },
            Some(f) => Check {
                name,
                pass: false,
                witness: format!("counterexample: {f}"),
            },
        }
    }
}
