//! Clopen blocks of the binary Cantor model and block-constrained gluing.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{BlockGlued, CantorMap, SurjectError};
use crate::geometry::{cylinder, Address, Rational};
use crate::report::CheckReport;

/// Finite union of pairwise disjoint cylinders, held sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClopenBlock {
    cylinders: Vec<Address>,
}

impl ClopenBlock {
    pub fn new(mut cylinders: Vec<Address>) -> Result<Self, SurjectError> {
        if cylinders.is_empty() {
            return Err(SurjectError::EmptyBlock);
        }
        if cylinders.iter().any(|c| c.arity() != 2) {
            return Err(SurjectError::NonBinaryBlock);
        }
        cylinders.sort();
        // sorted order puts a prefix right before an extension of it
        for w in cylinders.windows(2) {
            if w[0].is_prefix_of(&w[1]) {
                return Err(SurjectError::Overlap(show(&w[0]), show(&w[1])));
            }
        }
        Ok(ClopenBlock { cylinders })
    }

    pub fn whole() -> Self {
        ClopenBlock {
            cylinders: vec![Address::empty(2)],
        }
    }

    pub fn cylinder(a: Address) -> Result<Self, SurjectError> {
        ClopenBlock::new(vec![a])
    }

    pub fn cylinders(&self) -> &[Address] {
        &self.cylinders
    }

    pub fn contains(&self, a: &Address) -> bool {
        self.cylinders.iter().any(|c| c.is_prefix_of(a))
    }

    /// Whether the cylinder of `a` lies inside the block, which may need
    /// several of the block's cylinders together.
    pub fn covers_cylinder(&self, a: &Address) -> bool {
        if self.contains(a) {
            return true;
        }
        if !self.cylinders.iter().any(|c| a.is_prefix_of(c)) {
            return false;
        }
        self.covers_cylinder(&a.child(0)) && self.covers_cylinder(&a.child(1))
    }

    pub fn is_disjoint(&self, other: &ClopenBlock) -> bool {
        self.cylinders
            .iter()
            .all(|c| other.cylinders.iter().all(|d| !c.is_compatible(d)))
    }

    /// Depth-`n` cylinders inside the block (a cylinder longer than `n`
    /// stands for itself).
    pub fn cylinders_at(&self, n: usize) -> Vec<Address> {
        self.cylinders.iter().flat_map(|c| extensions(c, n)).collect()
    }
}

fn show(a: &Address) -> String {
    if a.is_empty() {
        "*".into()
    } else {
        a.to_string()
    }
}

fn extensions(c: &Address, n: usize) -> Vec<Address> {
    if c.len() >= n {
        return vec![c.clone()];
    }
    Address::all_of_length(n - c.len(), 2)
        .iter()
        .map(|s| c.concat(s))
        .collect()
}

impl fmt::Display for ClopenBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cylinders.iter().map(show).collect();
        f.write_str(&parts.join(","))
    }
}

/// `0,10` is the union of cyl "0" and cyl "10"; `*` is the whole space.
impl FromStr for ClopenBlock {
    type Err = SurjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cylinders = s
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                if p == "*" {
                    Ok(Address::empty(2))
                } else {
                    Address::parse_with_arity(p, 2).map_err(SurjectError::from)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        ClopenBlock::new(cylinders)
    }
}

impl Serialize for ClopenBlock {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.cylinders.iter().map(show))
    }
}

/// Staircase partition into `n` blocks: cyl "0", "10", ..., "1^(n-2)0",
/// and "1^(n-1)".
pub fn clopen_partition(n: usize) -> Result<Vec<ClopenBlock>, SurjectError> {
    if n == 0 {
        return Err(SurjectError::ZeroBlocks);
    }
    Ok(staircase(n)
        .into_iter()
        .map(|a| ClopenBlock { cylinders: vec![a] })
        .collect())
}

fn staircase(n: usize) -> Vec<Address> {
    (0..n)
        .map(|j| {
            let mut s = vec![1; j];
            if j + 1 < n {
                s.push(0);
            }
            Address::binary(s).expect("binary symbols")
        })
        .collect()
}

/// Minimal cylinders covering the complement of the union of `cylinders`.
pub fn complement_cylinders(cylinders: &[Address]) -> Vec<Address> {
    fn go(prefix: Address, cyls: &[Address], out: &mut Vec<Address>) {
        if cyls.iter().any(|c| c.is_prefix_of(&prefix)) {
            return;
        }
        if !cyls.iter().any(|c| prefix.is_prefix_of(c)) {
            out.push(prefix);
            return;
        }
        go(prefix.child(0), cyls, out);
        go(prefix.child(1), cyls, out);
    }
    let mut out = Vec::new();
    go(Address::empty(2), cylinders, &mut out);
    out
}

/// One gluing constraint: the domain block is sent onto the target block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockPair {
    pub domain: ClopenBlock,
    pub target: ClopenBlock,
    /// Added to absorb the part of the space no domain block covers.
    pub padding: bool,
}

/// Glues per-block surjections `A_i -> B_i` into one continuous map.
///
/// Each cylinder `c` of `A_i` is re-rooted onto `B_i = b_1 ∪ ... ∪ b_r`:
/// the tail after `c` is split by the `r`-block staircase, and
/// `c·p_j·t ↦ b_j·t`. When the `A_i` leave part of the space uncovered, that
/// complement becomes a padding block mapped onto the whole space.
pub fn block_surjection(a: &[ClopenBlock], b: &[ClopenBlock]) -> Result<CantorMap, SurjectError> {
    if a.len() != b.len() {
        return Err(SurjectError::BlockCountMismatch {
            domain: a.len(),
            target: b.len(),
        });
    }
    for (i, ai) in a.iter().enumerate() {
        for aj in &a[i + 1..] {
            for c in ai.cylinders() {
                if let Some(d) = aj.cylinders().iter().find(|d| c.is_compatible(d)) {
                    return Err(SurjectError::Overlap(show(c), show(d)));
                }
            }
        }
    }
    let mut pairs: Vec<BlockPair> = a
        .iter()
        .zip(b)
        .map(|(ai, bi)| BlockPair {
            domain: ai.clone(),
            target: bi.clone(),
            padding: false,
        })
        .collect();
    let used: Vec<Address> = a.iter().flat_map(|ai| ai.cylinders().iter().cloned()).collect();
    let rest = complement_cylinders(&used);
    if !rest.is_empty() {
        pairs.push(BlockPair {
            domain: ClopenBlock::new(rest)?,
            target: ClopenBlock::whole(),
            padding: true,
        });
    }
    let shift = pairs
        .iter()
        .flat_map(|p| {
            let stairs = staircase(p.target.cylinders().len());
            p.domain.cylinders().iter().flat_map(move |c| {
                stairs
                    .iter()
                    .zip(p.target.cylinders())
                    .map(move |(s, t)| (c.len() + s.len()).saturating_sub(t.len()))
                    .collect::<Vec<_>>()
            })
        })
        .max()
        .unwrap_or(0);
    Ok(CantorMap::BlockGlued(BlockGlued { pairs, shift }))
}

fn longest_common_prefix(words: &[Address]) -> Address {
    let first = &words[0];
    let len = words[1..].iter().fold(first.len(), |len, w| {
        first.first_difference(w).map_or(len.min(w.len()), |d| len.min(d))
    });
    first.prefix(len)
}

/// Output prefix of a glued map: exact when the input fixes a single
/// target cylinder, otherwise the common prefix of every reachable one.
pub(crate) fn evaluate_glued(g: &BlockGlued, prefix: &Address) -> Address {
    let mut candidates = Vec::new();
    for pair in &g.pairs {
        let targets = pair.target.cylinders();
        let stairs = staircase(targets.len());
        for c in pair.domain.cylinders() {
            if c.is_prefix_of(prefix) {
                let rest = prefix.suffix_from(c.len());
                for (s, t) in stairs.iter().zip(targets) {
                    if s.is_prefix_of(&rest) {
                        return t.concat(&rest.suffix_from(s.len()));
                    }
                    if rest.is_prefix_of(s) {
                        candidates.push(t.clone());
                    }
                }
            } else if prefix.is_prefix_of(c) {
                candidates.extend(targets.iter().cloned());
            }
        }
    }
    longest_common_prefix(&candidates)
}

/// Exhaustive depth-`n` check of a Cantor-valued map against block
/// constraints: every depth-`n` cylinder of `A_i` must land inside `B_i`,
/// and every depth-`n` cylinder of `B_i` must come within the map's depth-`n`
/// modulus of some image of `A_i`.
pub fn verify_block_surjection(f: &CantorMap, a: &[ClopenBlock], b: &[ClopenBlock], n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!(
        "{} A=[{}] B=[{}] depth={n}",
        f.kind(),
        join_blocks(a),
        join_blocks(b)
    ));
    if a.len() != b.len() {
        report.push(
            "block_count",
            false,
            format!("{} domain blocks, {} target blocks", a.len(), b.len()),
        );
        return report;
    }
    let eps = f.modulus(n);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        let mut outputs = BTreeSet::new();
        let mut escaped = None;
        for c in ai.cylinders_at(n) {
            let o = match f.evaluate_symbolic(&c) {
                Ok(Some(o)) => o,
                _ => {
                    report.push(format!("block{i}/containment"), false, "map is not Cantor-valued");
                    return report;
                }
            };
            if escaped.is_none() && !bi.covers_cylinder(&o) {
                escaped = Some((c.clone(), o.clone()));
            }
            outputs.insert(o);
        }
        let count = outputs.len();
        match escaped {
            None => report.push(
                format!("block{i}/containment"),
                true,
                format!(
                    "{} depth-{n} cylinders of A_{i} land in B_{i}",
                    ai.cylinders_at(n).len()
                ),
            ),
            Some((c, o)) => report.push(
                format!("block{i}/containment"),
                false,
                format!("f(cyl {}) = cyl {} leaves B_{i}", show(&c), show(&o)),
            ),
        }

        let mut worst = Rational::zero();
        let mut worst_at = None;
        for beta in bi.cylinders_at(n) {
            let gap = gap_to_images(&beta, &outputs);
            if gap > worst {
                worst = gap;
                worst_at = Some(beta);
            }
        }
        let pass = worst <= eps;
        let witness = match worst_at {
            None => format!("every depth-{n} cylinder of B_{i} meets one of {count} images"),
            Some(beta) => format!("largest gap {worst} at cyl {} (eps = {eps})", show(&beta)),
        };
        report.push(format!("block{i}/covering"), pass, witness);
    }
    report
}

fn join_blocks(blocks: &[ClopenBlock]) -> String {
    blocks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join("; ")
}

/// Distance in the middle-third metric from cyl `beta` to the nearest image
/// cylinder; zero when one is compatible with `beta`.
fn gap_to_images(beta: &Address, outputs: &BTreeSet<Address>) -> Rational {
    let prefix_hit = (0..=beta.len()).any(|k| outputs.contains(&beta.prefix(k)));
    let extension_hit = outputs
        .range(beta.clone()..)
        .next()
        .is_some_and(|o| beta.is_prefix_of(o));
    if prefix_hit || extension_hit {
        return Rational::zero();
    }
    // For incompatible words, lexicographic order is the order of their
    // intervals. The nearest image is the successor, the predecessor, or a
    // prefix of the predecessor (which contains it).
    let mut near: Vec<Address> = outputs.range(beta.clone()..).next().into_iter().cloned().collect();
    if let Some(p) = outputs.range(..beta.clone()).next_back() {
        near.extend((0..=p.len()).map(|k| p.prefix(k)).filter(|q| outputs.contains(q)));
    }
    let region = cylinder(beta).expect("binary");
    near.iter()
        .map(|o| region.gap(&cylinder(o).expect("binary")))
        .min()
        .unwrap_or_else(Rational::one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn blk(s: &str) -> ClopenBlock {
        s.parse().unwrap()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(clopen_partition(1).unwrap(), vec![ClopenBlock::whole()]);
        assert_eq!(clopen_partition(2).unwrap(), vec![blk("0"), blk("1")]);
        assert_eq!(clopen_partition(3).unwrap(), vec![blk("0"), blk("10"), blk("11")]);
        assert_eq!(clopen_partition(0), Err(SurjectError::ZeroBlocks));
    }

    #[test]
    fn partition_is_exact_up_to_64() {
        for n in 1..=64 {
            let blocks = clopen_partition(n).unwrap();
            assert_eq!(blocks.len(), n);
            let all: Vec<Address> = blocks.iter().flat_map(|b| b.cylinders().to_vec()).collect();
            assert!(ClopenBlock::new(all.clone()).is_ok(), "pairwise disjoint");
            assert!(complement_cylinders(&all).is_empty(), "covering");
        }
    }

    #[test]
    fn block_parsing() {
        assert_eq!(blk("10,0").cylinders(), [a("0"), a("10")]);
        assert!(matches!("0,01".parse::<ClopenBlock>(), Err(SurjectError::Overlap(..))));
        assert_eq!("".parse::<ClopenBlock>(), Err(SurjectError::EmptyBlock));
        assert_eq!(blk("*").to_string(), "*");
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_cylinders(&[a("00")]), [a("01"), a("1")]);
        assert!(complement_cylinders(&[a("")]).is_empty());
        assert_eq!(complement_cylinders(&[]), [a("")]);
    }

    #[test]
    fn relabeling_matches_bit_flip() {
        let f = block_surjection(&[blk("0"), blk("1")], &[blk("1"), blk("0")]).unwrap();
        for w in Address::all_of_length(7, 2) {
            assert_eq!(
                f.evaluate_symbolic(&w).unwrap(),
                CantorMap::BitFlip.evaluate_symbolic(&w).unwrap()
            );
        }
        let rep = verify_block_surjection(&CantorMap::BitFlip, &[blk("0"), blk("1")], &[blk("1"), blk("0")], 8);
        assert!(rep.all_pass(), "{rep:?}");
    }

    #[test]
    fn whole_targets() {
        let a_blocks = [blk("0"), blk("1")];
        let b_blocks = [ClopenBlock::whole(), ClopenBlock::whole()];
        let f = block_surjection(&a_blocks, &b_blocks).unwrap();
        assert_eq!(f.evaluate_symbolic(&a("0101")).unwrap(), Some(a("101")));
        let rep = verify_block_surjection(&f, &a_blocks, &b_blocks, 6);
        assert!(rep.all_pass(), "{rep:?}");
    }

    #[test]
    fn padding_case() {
        let f = block_surjection(&[blk("00")], &[blk("1")]).unwrap();
        let CantorMap::BlockGlued(g) = &f else { panic!() };
        assert_eq!(g.pairs().len(), 2);
        assert!(g.pairs()[1].padding);
        assert_eq!(g.pairs()[1].domain, blk("01,1"));
        assert!(g.is_onto());
        assert_eq!(f.evaluate_symbolic(&a("0010")).unwrap(), Some(a("110")));
        assert!(crate::surject::check_cover(&f, 8).unwrap());
        let rep = verify_block_surjection(&f, &[blk("00")], &[blk("1")], 8);
        assert!(rep.all_pass(), "{rep:?}");
    }

    #[test]
    fn multi_cylinder_targets() {
        let a_blocks = [blk("0"), blk("1")];
        let b_blocks = [blk("00,11"), blk("01,10")];
        let f = block_surjection(&a_blocks, &b_blocks).unwrap();
        // "0" then staircase "0" -> "00", "0" then "1" -> "11"
        assert_eq!(f.evaluate_symbolic(&a("001")).unwrap(), Some(a("001")));
        assert_eq!(f.evaluate_symbolic(&a("011")).unwrap(), Some(a("111")));
        assert_eq!(f.evaluate_symbolic(&a("0")).unwrap(), Some(a("")));
        assert_eq!(f.modulus(10), Rational::pow(3, -10));
        let rep = verify_block_surjection(&f, &a_blocks, &b_blocks, 10);
        assert!(rep.all_pass(), "{rep:?}");
    }

    #[test]
    fn swapped_targets_fail_containment() {
        let rep = verify_block_surjection(&CantorMap::BitFlip, &[blk("0"), blk("1")], &[blk("0"), blk("1")], 8);
        assert!(!rep.check("block0/containment").unwrap().pass);
        assert!(!rep.check("block1/containment").unwrap().pass);
    }

    #[test]
    fn overlapping_domains_rejected() {
        let err = block_surjection(&[blk("0"), blk("01")], &[blk("1"), blk("0")]).unwrap_err();
        assert!(matches!(err, SurjectError::Overlap(..)));
        let err = block_surjection(&[blk("0")], &[]).unwrap_err();
        assert!(matches!(err, SurjectError::BlockCountMismatch { .. }));
    }

    #[test]
    fn non_covering_targets_are_not_onto() {
        let f = block_surjection(&[blk("0"), blk("1")], &[blk("00"), blk("01")]).unwrap();
        let CantorMap::BlockGlued(g) = &f else { panic!() };
        assert!(!g.is_onto());
        assert!(!f.descriptor().onto);
    }

    #[test]
    fn nearest_image_gap_matches_brute_force() {
        let words: Vec<Address> = (1..=4).flat_map(|n| Address::all_of_length(n, 2)).collect();
        // Every pair and triple of short words as the image set.
        for (i, x) in words.iter().enumerate() {
            for (j, y) in words.iter().enumerate().skip(i) {
                for z in words.iter().skip(j).step_by(3) {
                    let outputs: BTreeSet<Address> = [x, y, z].into_iter().cloned().collect();
                    for beta in Address::all_of_length(4, 2) {
                        let region = cylinder(&beta).unwrap();
                        let brute = outputs.iter().map(|o| region.gap(&cylinder(o).unwrap())).min().unwrap();
                        assert_eq!(gap_to_images(&beta, &outputs), brute, "{beta} vs {outputs:?}");
                    }
                }
            }
        }
    }
}
