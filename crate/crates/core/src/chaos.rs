//! Primitive-chaos systems: finitely many closed events, each with an
//! expanding affine law, such that every finite itinerary is realized by
//! some initial point.
//!
//! All four shipped systems have diagonal affine branches, so the preimage
//! of a box under a branch is again a box and the nested backward
//! intersection `ω_0 ∩ f^-1(ω_1 ∩ f^-1(...))` stays a single box.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{distance, eval_ternary_address, Address, AxisBox, Point, Rational, Region, TernaryTail};
use crate::report::CheckReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChaosError {
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("word {0} uses a symbol with no event")]
    BadSymbol(String),
    #[error("backward intersection for word {0} is empty")]
    EmptyEnclosure(String),
    #[error("composed branch for word {0} has no fixed point in its cells")]
    NoFixedPoint(String),
    #[error("unknown system {0:?} (expected shift_cantor, doubling, tent or baker)")]
    UnknownSystem(String),
    #[error("delta must be positive, got {0}")]
    BadDelta(Rational),
    #[error("{0} is not one-dimensional")]
    NotOneDimensional(ChaosKind),
    #[error("depth must be between 1 and {max}, got {found}")]
    BadDepth { found: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChaosKind {
    ShiftCantor,
    Doubling,
    Tent,
    Baker,
}

impl ChaosKind {
    pub const ALL: [ChaosKind; 4] = [
        ChaosKind::ShiftCantor,
        ChaosKind::Doubling,
        ChaosKind::Tent,
        ChaosKind::Baker,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChaosKind::ShiftCantor => "shift_cantor",
            ChaosKind::Doubling => "doubling",
            ChaosKind::Tent => "tent",
            ChaosKind::Baker => "baker",
        }
    }
}

impl fmt::Display for ChaosKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChaosKind {
    type Err = ChaosError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ChaosKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| ChaosError::UnknownSystem(s.to_string()))
    }
}

/// `x_a ↦ scale_a x_a + offset_a` on every axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineBranch {
    axes: Vec<(Rational, Rational)>,
}

impl AffineBranch {
    fn new(axes: Vec<(i64, i64, i64)>) -> Self {
        // (scale, offset numerator, offset denominator)
        AffineBranch {
            axes: axes
                .into_iter()
                .map(|(s, n, d)| (Rational::integer(s), Rational::new(n, d)))
                .collect(),
        }
    }

    fn scaled(axes: Vec<(Rational, Rational)>) -> Self {
        AffineBranch { axes }
    }

    pub fn apply(&self, p: &Point) -> Point {
        let coords = self.axes.iter().zip(p.coords()).map(|((a, b), x)| a * x + b).collect();
        Point::new(coords).expect("branch maps its event into the unit cube")
    }

    /// `self ∘ inner`.
    fn compose(&self, inner: &AffineBranch) -> AffineBranch {
        AffineBranch::scaled(
            self.axes
                .iter()
                .zip(&inner.axes)
                .map(|((a, b), (c, d))| (a * c, a * d + b))
                .collect(),
        )
    }

    /// `event ∩ branch^-1(target)`, or `None` when empty.
    fn preimage(&self, event: &AxisBox, target: &AxisBox) -> Option<AxisBox> {
        let mut bounds = Vec::with_capacity(self.axes.len());
        for (axis, (a, b)) in self.axes.iter().enumerate() {
            let mut lo = (target.lo(axis) - b) / a;
            let mut hi = (target.hi(axis) - b) / a;
            if a.is_negative() {
                std::mem::swap(&mut lo, &mut hi);
            }
            let lo = lo.max(event.lo(axis).clone());
            let hi = hi.min(event.hi(axis).clone());
            if lo > hi {
                return None;
            }
            bounds.push((lo, hi));
        }
        Some(AxisBox::new(bounds).expect("inside the event"))
    }

    /// Fixed point of the branch, when every axis has scale other than 1.
    fn fixed_point(&self) -> Option<Vec<Rational>> {
        self.axes
            .iter()
            .map(|(a, b)| {
                let denom = Rational::one() - a;
                (!denom.is_zero()).then(|| b / &denom)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChaosSystem {
    kind: ChaosKind,
    events: Vec<AxisBox>,
    branches: Vec<AffineBranch>,
}

pub fn make_system(kind: ChaosKind) -> ChaosSystem {
    let r = Rational::new;
    let iv = |lo: Rational, hi: Rational| AxisBox::interval(lo, hi).expect("unit interval");
    let (events, branches) = match kind {
        ChaosKind::ShiftCantor => (
            vec![iv(r(0, 1), r(1, 3)), iv(r(2, 3), r(1, 1))],
            vec![AffineBranch::new(vec![(3, 0, 1)]), AffineBranch::new(vec![(3, -2, 1)])],
        ),
        ChaosKind::Doubling => (
            vec![iv(r(0, 1), r(1, 2)), iv(r(1, 2), r(1, 1))],
            vec![AffineBranch::new(vec![(2, 0, 1)]), AffineBranch::new(vec![(2, -1, 1)])],
        ),
        ChaosKind::Tent => (
            vec![iv(r(0, 1), r(1, 2)), iv(r(1, 2), r(1, 1))],
            vec![AffineBranch::new(vec![(2, 0, 1)]), AffineBranch::new(vec![(-2, 2, 1)])],
        ),
        ChaosKind::Baker => {
            let half = Rational::half();
            let full = (r(0, 1), r(1, 1));
            (
                vec![
                    AxisBox::rect((r(0, 1), r(1, 2)), full.clone()).expect("left half"),
                    AxisBox::rect((r(1, 2), r(1, 1)), full).expect("right half"),
                ],
                vec![
                    AffineBranch::scaled(vec![(r(2, 1), r(0, 1)), (half.clone(), r(0, 1))]),
                    AffineBranch::scaled(vec![(r(2, 1), r(-1, 1)), (half.clone(), half)]),
                ],
            )
        }
    };
    ChaosSystem { kind, events, branches }
}

impl ChaosSystem {
    pub fn kind(&self) -> ChaosKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.events[0].dim()
    }

    pub fn events(&self) -> Vec<Region> {
        self.events.iter().cloned().map(Region::from_box).collect()
    }

    pub fn event_count(&self) -> usize {
        self.events.len()
    }

    /// `f_λ(p)`; `p` should lie in event `λ`.
    pub fn apply(&self, lambda: usize, p: &Point) -> Point {
        self.branches[lambda].apply(p)
    }

    /// The law of the first event containing `p`, or `None` off the events.
    pub fn step(&self, p: &Point) -> Option<Point> {
        let lambda = self.events.iter().position(|e| e.contains_point(p))?;
        Some(self.apply(lambda, p))
    }

    pub fn in_event(&self, lambda: usize, p: &Point) -> bool {
        self.events[lambda].contains_point(p)
    }

    fn check_word(&self, word: &Address) -> Result<(), ChaosError> {
        if word.is_empty() {
            return Err(ChaosError::EmptyWord);
        }
        if word.symbols().iter().any(|&s| s as usize >= self.events.len()) {
            return Err(ChaosError::BadSymbol(word.to_string()));
        }
        Ok(())
    }

    /// Points whose orbit follows `word`: `ω_0 ∩ f_0^-1(ω_1 ∩ f_1^-1(...))`.
    pub fn enclosure(&self, word: &Address) -> Result<AxisBox, ChaosError> {
        self.check_word(word)?;
        let s = word.symbols();
        let mut k = self.events[*s.last().expect("nonempty") as usize].clone();
        for &lambda in s.iter().rev().skip(1) {
            let lambda = lambda as usize;
            k = self.branches[lambda]
                .preimage(&self.events[lambda], &k)
                .ok_or_else(|| ChaosError::EmptyEnclosure(word.to_string()))?;
        }
        Ok(k)
    }

    /// Orbit `x, f_{w_0}(x), ...` of length `|word|`, each step using the
    /// law the word names. Stops early at a point outside its named event.
    pub fn orbit_along(&self, x: &Point, word: &Address) -> Vec<Point> {
        let mut orbit = Vec::with_capacity(word.len());
        let mut p = x.clone();
        for (i, &lambda) in word.symbols().iter().enumerate() {
            orbit.push(p.clone());
            if i + 1 < word.len() {
                if !self.in_event(lambda as usize, &p) {
                    break;
                }
                p = self.apply(lambda as usize, &p);
            }
        }
        orbit
    }

    pub fn follows(&self, orbit: &[Point], word: &Address) -> bool {
        orbit.len() == word.len()
            && orbit
                .iter()
                .zip(word.symbols())
                .all(|(p, &l)| self.in_event(l as usize, p))
    }

    /// Composite law `f_{w_{n-1}} ∘ ... ∘ f_{w_0}`.
    fn composed(&self, word: &Address) -> AffineBranch {
        let dim = self.dim();
        let identity = AffineBranch::scaled(vec![(Rational::one(), Rational::zero()); dim]);
        word.symbols()
            .iter()
            .fold(identity, |acc, &l| self.branches[l as usize].compose(&acc))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessResult {
    pub system: ChaosKind,
    pub word: Address,
    pub enclosure: Region,
    pub witness: Point,
    pub orbit: Vec<Point>,
}

/// Property (P) on a finite word: the exact backward enclosure, a witness
/// inside it, and the witness orbit with event membership verified.
///
/// The witness is the enclosure midpoint, except on the Cantor shift where
/// the midpoint of a cylinder falls in a removed gap; there it is the Cantor
/// point `word·(01)^∞`, which is interior to the cylinder.
pub fn realize_witness(s: &ChaosSystem, word: &Address) -> Result<WitnessResult, ChaosError> {
    let k = s.enclosure(word)?;
    let witness = match s.kind {
        ChaosKind::ShiftCantor => {
            let tail = TernaryTail::Periodic(Address::binary(vec![0, 1]).expect("binary"));
            Point::on_line(eval_ternary_address(word, &tail).expect("binary word")).expect("Cantor point")
        }
        _ => k.center(),
    };
    let orbit = s.orbit_along(&witness, word);
    if !k.contains_point(&witness) || !s.follows(&orbit, word) {
        return Err(ChaosError::EmptyEnclosure(word.to_string()));
    }
    Ok(WitnessResult {
        system: s.kind,
        word: word.clone(),
        enclosure: Region::from_box(k),
        witness,
        orbit,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicResult {
    pub system: ChaosKind,
    pub word: Address,
    /// Set when `word` was a proper power and its primitive root was used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_to: Option<Address>,
    pub point: Point,
    pub prime_period: usize,
    pub orbit: Vec<Point>,
    #[serde(skip)]
    pub certificate: CheckReport,
}

/// Exact periodic point whose itinerary is `word` repeated forever, with a
/// certificate that its prime period is the length of the word's primitive
/// root.
pub fn periodic_point(s: &ChaosSystem, word: &Address) -> Result<PeriodicResult, ChaosError> {
    s.check_word(word)?;
    let root = word.primitive_root();
    let n = root.len();
    let no_fixed = || ChaosError::NoFixedPoint(root.to_string());
    let coords = s.composed(&root).fixed_point().ok_or_else(no_fixed)?;
    let point = Point::new(coords).map_err(|_| no_fixed())?;
    let orbit = s.orbit_along(&point, &root);
    if !s.follows(&orbit, &root) {
        return Err(no_fixed());
    }
    let back = s.apply(
        *root.symbols().last().expect("nonempty") as usize,
        orbit.last().expect("nonempty"),
    );

    let mut cert = CheckReport::new(format!("{} periodic {}", s.kind, root));
    cert.push("itinerary", true, format!("orbit follows {root} for {n} steps"));
    cert.push("returns", back == point, format!("f^{n}(x) = {:?}", back));
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let differs = orbit[d] != point;
        cert.push(
            format!("divisor{d}"),
            differs,
            format!("f^{d}(x) = {:?} vs x = {:?}", orbit[d], point),
        );
    }
    if !cert.all_pass() {
        return Err(no_fixed());
    }
    Ok(PeriodicResult {
        system: s.kind,
        word: word.clone(),
        reduced_to: (root != *word).then(|| root.clone()),
        point,
        prime_period: n,
        orbit,
        certificate: cert,
    })
}

/// All binary words of lengths `1..=d` in lexicographic order, concatenated.
pub fn dense_orbit_word(d: usize) -> Result<Address, ChaosError> {
    if d == 0 || d > 16 {
        return Err(ChaosError::BadDepth { found: d, max: 16 });
    }
    let mut symbols = Vec::new();
    for len in 1..=d {
        for w in Address::all_of_length(len, 2) {
            symbols.extend_from_slice(w.symbols());
        }
    }
    Ok(Address::binary(symbols).expect("binary"))
}

/// Realizes the depth-`d` dense-orbit word and checks that its witness orbit
/// enters every depth-`d` cell `K(u)`.
pub fn dense_orbit_check(s: &ChaosSystem, d: usize) -> Result<CheckReport, ChaosError> {
    let word = dense_orbit_word(d)?;
    let w = realize_witness(s, &word)?;
    let mut report = CheckReport::new(format!("{} dense orbit depth={d} word length {}", s.kind, word.len()));
    for u in Address::all_of_length(d, 2) {
        let cell = s.enclosure(&u)?;
        let hit = w.orbit.iter().position(|p| cell.contains_point(p));
        report.push(
            format!("cell{u}"),
            hit.is_some(),
            match hit {
                Some(i) => format!("orbit[{i}] = {:?}", w.orbit[i]),
                None => format!("no orbit point in {cell:?}"),
            },
        );
    }
    Ok(report)
}

fn bit_budget(delta: &Rational) -> usize {
    // ceil(log2(1/delta)) + 2
    let mut n = 0;
    let mut scale = delta.clone();
    while scale < Rational::one() {
        scale = scale * Rational::integer(2);
        n += 1;
    }
    n + 2
}

/// First `n <= budget` with `|f^n x - f^n y| >= 1/4`, following the system's
/// dynamics (the first event containing a point picks its law).
fn separation_time(s: &ChaosSystem, x: &Point, y: &Point, budget: usize) -> Option<(usize, Rational)> {
    let quarter = Rational::new(1, 4);
    let (mut p, mut q) = (x.clone(), y.clone());
    for n in 0..=budget {
        let d = distance(&p, &q).expect("same dimension");
        if d >= quarter {
            return Some((n, d));
        }
        p = s.step(&p)?;
        q = s.step(&q)?;
    }
    None
}

fn sample_points(s: &ChaosSystem, samples: usize) -> Vec<Point> {
    match s.kind {
        ChaosKind::ShiftCantor => (0..samples)
            .map(|j| {
                let bits: Vec<u8> = (0..8).rev().map(|b| (j >> b & 1) as u8).collect();
                let w = Address::binary(bits).expect("binary");
                let tail = TernaryTail::Periodic(Address::binary(vec![0, 1]).expect("binary"));
                Point::on_line(eval_ternary_address(&w, &tail).expect("binary")).expect("Cantor point")
            })
            .collect(),
        _ => (0..samples)
            .map(|j| Point::on_line(Rational::new(j as i64 + 1, samples as i64 + 1)).expect("in (0,1)"))
            .collect(),
    }
}

/// Perturbations of `x` within `delta`, most natural first.
fn perturbations(s: &ChaosSystem, x: &Rational, delta: &Rational, budget: usize) -> Vec<Rational> {
    let in_unit = |v: &Rational| !v.is_negative() && *v <= Rational::one();
    let mut out = Vec::new();
    match s.kind {
        ChaosKind::ShiftCantor => {
            // flip the first ternary digit whose weight 2·3^-(m+1) is within delta
            let mut m = 0;
            while Rational::integer(2) * Rational::pow(3, -(m + 1)) > *delta {
                m += 1;
            }
            let mut p = Point::on_line(x.clone()).expect("sample in range");
            for _ in 0..m {
                match s.step(&p) {
                    Some(q) => p = q,
                    None => return out,
                }
            }
            let weight = Rational::integer(2) * Rational::pow(3, -(m + 1));
            out.push(if s.in_event(0, &p) { x + &weight } else { x - &weight });
        }
        _ => {
            out.push(x + delta);
            out.push(x - delta);
            // endpoints of the cell of x at the budget depth
            let m = budget.saturating_sub(2);
            let mut p = Point::on_line(x.clone()).expect("sample in range");
            let mut itinerary = Vec::with_capacity(m);
            for _ in 0..m {
                let lambda = s.events.iter().position(|e| e.contains_point(&p)).unwrap_or(0);
                itinerary.push(lambda as u8);
                p = s.apply(lambda, &p);
            }
            if let Ok(cell) = Address::binary(itinerary).map_err(|_| ()).and_then(|w| {
                if w.is_empty() {
                    Err(())
                } else {
                    s.enclosure(&w).map_err(|_| ())
                }
            }) {
                out.push(cell.lo(0).clone());
                out.push(cell.hi(0).clone());
            }
        }
    }
    out.into_iter()
        .filter(|y| in_unit(y) && y != x && (y - x).abs() <= *delta)
        .collect()
}

/// For each sample `x`, finds `y` with `|x - y| <= delta` whose orbit is at
/// least `1/4` away within `ceil(log2(1/delta)) + 2` steps.
pub fn sensitivity_check(s: &ChaosSystem, delta: &Rational, samples: usize) -> Result<CheckReport, ChaosError> {
    if !delta.is_positive() {
        return Err(ChaosError::BadDelta(delta.clone()));
    }
    if s.dim() != 1 {
        return Err(ChaosError::NotOneDimensional(s.kind));
    }
    let budget = bit_budget(delta);
    let mut report = CheckReport::new(format!(
        "{} sensitivity delta={delta} samples={samples} constant=1/4 budget={budget}",
        s.kind
    ));
    let mut worst = 0;
    for (j, x) in sample_points(s, samples).into_iter().enumerate() {
        let found = perturbations(s, x.coord(0), delta, budget).into_iter().find_map(|y| {
            let yp = Point::on_line(y.clone()).expect("filtered to unit range");
            separation_time(s, &x, &yp, budget).map(|(n, d)| (y, n, d))
        });
        match found {
            Some((y, n, d)) => {
                worst = worst.max(n);
                report.push(
                    format!("sample{j}"),
                    true,
                    format!("x={} y={y} n={n} separation={d}", x.coord(0)),
                );
            }
            None => report.push(
                format!("sample{j}"),
                false,
                format!("x={} not separated within {budget} steps", x.coord(0)),
            ),
        }
    }
    let all = report.all_pass();
    report.push("worst_n", all, format!("worst n = {worst} (budget {budget})"));
    Ok(report)
}

/// For every ordered pair `(u, v)` of depth-`d` words, a witness in `K(u)`
/// whose `d`-th iterate lies in `K(v)`.
pub fn transitivity_check(s: &ChaosSystem, d: usize) -> Result<CheckReport, ChaosError> {
    if d == 0 || d > 12 {
        return Err(ChaosError::BadDepth { found: d, max: 12 });
    }
    let words = Address::all_of_length(d, s.event_count() as u8);
    let cells = words.iter().map(|w| s.enclosure(w)).collect::<Result<Vec<_>, _>>()?;
    let mut report = CheckReport::new(format!(
        "{} transitivity depth={d} pairs={}",
        s.kind,
        words.len().pow(2)
    ));
    for (u, ku) in words.iter().zip(&cells) {
        for (v, kv) in words.iter().zip(&cells) {
            let witness = if u == v {
                periodic_point(s, u)?.point
            } else {
                realize_witness(s, &u.concat(v))?.witness
            };
            // the orbit along u·0 has d+1 points and ends at f^d(x)
            let landed = s.orbit_along(&witness, &u.child(0)).pop().expect("d+1 points");
            let pass = ku.contains_point(&witness) && kv.contains_point(&landed);
            report.push(
                format!("{u}->{v}"),
                pass,
                format!("x={:?} f^{d}(x)={:?}", witness, landed),
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn w(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn pt(x: Rational) -> Point {
        Point::on_line(x).unwrap()
    }

    #[test]
    fn systems() {
        let d = make_system(ChaosKind::Doubling);
        assert_eq!(
            d.events(),
            vec![
                Region::interval(r(0, 1), r(1, 2)).unwrap(),
                Region::interval(r(1, 2), r(1, 1)).unwrap()
            ]
        );
        let t = make_system(ChaosKind::Tent);
        assert_eq!(t.step(&pt(r(3, 4))).unwrap(), pt(r(1, 2)));
        let c = make_system(ChaosKind::ShiftCantor);
        let x = eval_ternary_address(&w("01"), &TernaryTail::Zeros).unwrap();
        let fx = c.step(&pt(x)).unwrap();
        assert!(crate::geometry::cylinder(&w("1")).unwrap().contains_point(&fx));
        let b = make_system(ChaosKind::Baker);
        let p = Point::in_plane(r(3, 4), r(1, 2)).unwrap();
        assert_eq!(b.step(&p).unwrap(), Point::in_plane(r(1, 2), r(3, 4)).unwrap());
    }

    #[test]
    fn witness_examples() {
        let d = make_system(ChaosKind::Doubling);
        let res = realize_witness(&d, &w("01")).unwrap();
        assert_eq!(res.enclosure, Region::interval(r(1, 4), r(1, 2)).unwrap());
        assert_eq!(res.witness, pt(r(3, 8)));
        assert_eq!(res.orbit, vec![pt(r(3, 8)), pt(r(3, 4))]);
        let res = realize_witness(&d, &w("0")).unwrap();
        assert_eq!(res.enclosure, Region::interval(r(0, 1), r(1, 2)).unwrap());
        assert_eq!(res.witness, pt(r(1, 4)));

        let t = make_system(ChaosKind::Tent);
        let res = realize_witness(&t, &w("01")).unwrap();
        // brute force: x in [0,1/2] with 2x in [1/2,1]
        assert_eq!(res.enclosure, Region::interval(r(1, 4), r(1, 2)).unwrap());
        assert!(t.follows(&res.orbit, &w("01")));
    }

    #[test]
    fn cantor_witness_is_a_cantor_point() {
        let c = make_system(ChaosKind::ShiftCantor);
        let res = realize_witness(&c, &w("0110")).unwrap();
        assert_eq!(res.enclosure, crate::geometry::cylinder(&w("0110")).unwrap());
        assert!(c.follows(&res.orbit, &w("0110")));
    }

    #[test]
    fn empty_word_rejected() {
        let d = make_system(ChaosKind::Doubling);
        assert_eq!(realize_witness(&d, &Address::empty(2)), Err(ChaosError::EmptyWord));
    }

    #[test]
    fn periodic_examples() {
        let d = make_system(ChaosKind::Doubling);
        let res = periodic_point(&d, &w("01")).unwrap();
        assert_eq!((res.point.clone(), res.prime_period), (pt(r(1, 3)), 2));
        assert_eq!(res.orbit, vec![pt(r(1, 3)), pt(r(2, 3))]);
        let res = periodic_point(&make_system(ChaosKind::Tent), &w("01")).unwrap();
        assert_eq!((res.point, res.prime_period), (pt(r(2, 5)), 2));
        let res = periodic_point(&d, &w("0")).unwrap();
        assert_eq!((res.point, res.prime_period), (pt(r(0, 1)), 1));
        let res = periodic_point(&d, &w("0101")).unwrap();
        assert_eq!(res.reduced_to, Some(w("01")));
        assert_eq!(res.prime_period, 2);
    }

    #[test]
    fn dense_words() {
        assert_eq!(dense_orbit_word(1).unwrap(), w("01"));
        assert_eq!(dense_orbit_word(2).unwrap(), w("0100011011"));
        let rep = dense_orbit_check(&make_system(ChaosKind::Doubling), 2).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert_eq!(rep.summary.total, 4);
    }

    #[test]
    fn sensitivity_examples() {
        let d = make_system(ChaosKind::Doubling);
        let x = pt(r(1, 3));
        let y = pt(r(1, 3) + Rational::pow(2, -20));
        let (n, _) = separation_time(&d, &x, &y, 22).unwrap();
        assert!(n <= 21);
        let t = make_system(ChaosKind::Tent);
        let rep = sensitivity_check(&t, &Rational::pow(2, -10), 100).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.failures().next());
        assert!(sensitivity_check(&make_system(ChaosKind::Baker), &r(1, 8), 4).is_err());
        assert!(sensitivity_check(&t, &r(0, 1), 4).is_err());
    }

    #[test]
    fn transitivity_examples() {
        let d = make_system(ChaosKind::Doubling);
        let rep = transitivity_check(&d, 2).unwrap();
        assert!(rep.all_pass());
        // K(0011) = [3/16, 1/4], midpoint 7/32 -> 7/8
        assert_eq!(rep.check("00->11").unwrap().witness, "x=(7/32) f^2(x)=(7/8)");
        let rep = transitivity_check(&d, 1).unwrap();
        assert_eq!(rep.check("0->0").unwrap().witness, "x=(0/1) f^1(x)=(0/1)");
        let rep = transitivity_check(&make_system(ChaosKind::ShiftCantor), 3).unwrap();
        assert_eq!(rep.summary.passed, 64);
    }
}
