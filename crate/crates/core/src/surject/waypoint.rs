//! Maps from `[0,1]` onto the interval or the square pinned at finitely
//! many parameters.
//!
//! Between consecutive waypoints the parameter gap is split into equal
//! thirds: a straight path to the start of a full sweep of the target, the
//! sweep itself, and a straight path from the sweep's end to the next
//! waypoint. The map is constant before the first and after the last
//! waypoint. With a single waypoint the loop `y_1 -> sweep -> y_1` is placed
//! on `[x_1, 1]` (or on `[0, 1]` when `x_1 = 1`) so the map stays onto.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::hilbert::{hilbert_point_enclosure, MAX_DEPTH};
use super::SurjectError;
use crate::geometry::{GeometryError, Point, Rational, Region};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WaypointTarget {
    Interval,
    Square,
}

impl WaypointTarget {
    pub fn dim(self) -> usize {
        match self {
            WaypointTarget::Interval => 1,
            WaypointTarget::Square => 2,
        }
    }

    fn sweep_start(self) -> Point {
        match self {
            WaypointTarget::Interval => Point::on_line(Rational::zero()),
            WaypointTarget::Square => Point::in_plane(Rational::zero(), Rational::zero()),
        }
        .expect("corner of the unit cube")
    }

    fn sweep_end(self) -> Point {
        match self {
            WaypointTarget::Interval => Point::on_line(Rational::zero()),
            WaypointTarget::Square => Point::in_plane(Rational::one(), Rational::zero()),
        }
        .expect("corner of the unit cube")
    }

    /// Enclosure of the sweep at parameter `u` in `[0,1]`: a tent
    /// `0 -> 1 -> 0` on the interval, the Hilbert curve on the square.
    fn sweep(self, u: &Rational, depth: u32) -> Result<Region, SurjectError> {
        match self {
            WaypointTarget::Interval => {
                let two = Rational::integer(2);
                let v = if *u <= Rational::half() {
                    &two * u
                } else {
                    two - &(Rational::integer(2) * u)
                };
                Ok(Region::point(&Point::on_line(v)?))
            }
            WaypointTarget::Square => hilbert_point_enclosure(u, depth),
        }
    }
}

impl fmt::Display for WaypointTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WaypointTarget::Interval => "interval",
            WaypointTarget::Square => "square",
        })
    }
}

impl FromStr for WaypointTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "interval" => Ok(WaypointTarget::Interval),
            "square" => Ok(WaypointTarget::Square),
            _ => Err(format!("unknown target {s:?} (expected interval or square)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Waypoint {
    pub x: Rational,
    pub y: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Gap {
    a: Rational,
    b: Rational,
    from: Point,
    to: Point,
    third: Rational,
    /// The middle third `[sweep_lo, sweep_hi]`.
    sweep_lo: Rational,
    sweep_hi: Rational,
}

impl Gap {
    fn new(a: Rational, b: Rational, from: Point, to: Point) -> Self {
        let third = (&b - &a) / Rational::integer(3);
        let sweep_lo = &a + &third;
        let sweep_hi = &sweep_lo + &third;
        Gap {
            a,
            b,
            from,
            to,
            third,
            sweep_lo,
            sweep_hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WaypointMap {
    kind: &'static str,
    target: WaypointTarget,
    waypoints: Vec<Waypoint>,
    #[serde(skip)]
    gaps: Vec<Gap>,
}

fn lerp(p: &Point, q: &Point, s: &Rational) -> Point {
    let coords = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| a + &(s * &(b - a)))
        .collect();
    Point::new(coords).expect("convex combination stays in the unit cube")
}

impl WaypointMap {
    pub fn new(target: WaypointTarget, waypoints: Vec<(Rational, Point)>) -> Result<Self, SurjectError> {
        if waypoints.is_empty() {
            return Err(SurjectError::NoWaypoints);
        }
        for (i, (x, y)) in waypoints.iter().enumerate() {
            if x.is_negative() || *x > Rational::one() {
                return Err(SurjectError::ParameterOutOfRange(x.clone()));
            }
            if i > 0 && *x <= waypoints[i - 1].0 {
                return Err(SurjectError::WaypointOrder(x.clone()));
            }
            if y.dim() != target.dim() {
                return Err(GeometryError::DimensionMismatch {
                    expected: target.dim(),
                    found: y.dim(),
                }
                .into());
            }
        }
        let gaps = if waypoints.len() == 1 {
            let (x, y) = &waypoints[0];
            let a = if *x == Rational::one() {
                Rational::zero()
            } else {
                x.clone()
            };
            let b = if *x == Rational::one() {
                x.clone()
            } else {
                Rational::one()
            };
            vec![Gap::new(a, b, y.clone(), y.clone())]
        } else {
            waypoints
                .windows(2)
                .map(|w| Gap::new(w[0].0.clone(), w[1].0.clone(), w[0].1.clone(), w[1].1.clone()))
                .collect()
        };
        Ok(WaypointMap {
            kind: "waypoint",
            target,
            waypoints: waypoints.into_iter().map(|(x, y)| Waypoint { x, y }).collect(),
            gaps,
        })
    }

    pub fn target(&self) -> WaypointTarget {
        self.target
    }

    pub fn waypoints(&self) -> &[Waypoint] {
        &self.waypoints
    }

    /// Parameter intervals `[a + len, a + 2 len]` carrying a full sweep.
    pub fn sweep_segments(&self) -> Vec<(Rational, Rational)> {
        self.gaps
            .iter()
            .map(|g| (g.sweep_lo.clone(), g.sweep_hi.clone()))
            .collect()
    }

    /// Enclosure of `f(t)` of diameter at most `2^-depth`; a single point
    /// wherever the map is piecewise linear.
    pub fn evaluate(&self, t: &Rational, depth: u32) -> Result<Region, SurjectError> {
        if depth > MAX_DEPTH {
            return Err(SurjectError::DepthTooLarge(depth as usize));
        }
        if t.is_negative() || *t > Rational::one() {
            return Err(SurjectError::ParameterOutOfRange(t.clone()));
        }
        if let Some(g) = self.gaps.iter().find(|g| g.a <= *t && *t <= g.b) {
            return if *t <= g.sweep_lo {
                let s = (t - &g.a) / &g.third;
                Ok(Region::point(&lerp(&g.from, &self.target.sweep_start(), &s)))
            } else if *t <= g.sweep_hi {
                self.target.sweep(&((t - &g.sweep_lo) / &g.third), depth)
            } else {
                let s = (t - &g.sweep_hi) / &g.third;
                Ok(Region::point(&lerp(&self.target.sweep_end(), &g.to, &s)))
            };
        }
        let first = &self.waypoints[0];
        let y = if *t < first.x {
            &first.y
        } else {
            &self.waypoints.last().expect("nonempty").y
        };
        Ok(Region::point(y))
    }

    /// `f(x_i) = y_i` as exact equality of degenerate enclosures.
    pub fn check_waypoints(&self, depth: u32) -> CheckReport {
        let mut report = CheckReport::new(self.describe());
        for (i, w) in self.waypoints.iter().enumerate() {
            let name = format!("waypoint{i}");
            match self.evaluate(&w.x, depth) {
                Ok(r) if r == Region::point(&w.y) => report.push(name, true, format!("f({}) = {:?}", w.x, w.y)),
                Ok(r) => report.push(name, false, format!("f({}) in {r:?}, expected {:?}", w.x, w.y)),
                Err(e) => report.push(name, false, e.to_string()),
            }
        }
        report
    }

    /// Each sweep segment's image meets every cell of the `2^-bits` grid of
    /// the target. The segment is sampled at `2^(bits+1)` equal steps on the
    /// interval and at every depth-`bits` Hilbert cell centre on the square.
    pub fn check_sweep_coverage(&self, bits: u32) -> CheckReport {
        let mut report = CheckReport::new(self.describe());
        let cells = 1usize << bits;
        let grid = Rational::pow(2, bits as i32);
        for (i, (lo, hi)) in self.sweep_segments().into_iter().enumerate() {
            let width = &hi - &lo;
            let samples: Vec<Rational> = match self.target {
                WaypointTarget::Interval => {
                    let steps = 1i64 << (bits + 1);
                    (0..=steps).map(|j| &lo + &(&width * Rational::new(j, steps))).collect()
                }
                WaypointTarget::Square => {
                    let steps = 1i64 << (2 * bits);
                    (0..steps)
                        .map(|j| &lo + &(&width * Rational::new(2 * j + 1, 2 * steps)))
                        .collect()
                }
            };
            let mut seen = vec![false; cells.pow(self.target.dim() as u32)];
            let mut error = None;
            for t in &samples {
                let region = match self.evaluate(t, bits) {
                    Ok(r) => r,
                    Err(e) => {
                        error = Some(e.to_string());
                        break;
                    }
                };
                // the cell whose lower corner the enclosure starts in
                let b = region.bounding_box();
                let idx = |axis: usize| {
                    let i = (b.lo(axis) * &grid).floor_i64().expect("bounded") as usize;
                    i.min(cells - 1)
                };
                match self.target {
                    WaypointTarget::Interval => seen[idx(0)] = true,
                    WaypointTarget::Square => seen[idx(0) * cells + idx(1)] = true,
                }
            }
            let name = format!("sweep{i}");
            match error {
                Some(e) => report.push(name, false, e),
                None => {
                    let missing = seen.iter().filter(|&&s| !s).count();
                    report.push(
                        name,
                        missing == 0,
                        format!(
                            "[{lo}, {hi}]: {} of {} grid cells hit at resolution 1/{cells}",
                            seen.len() - missing,
                            seen.len()
                        ),
                    );
                }
            }
        }
        report
    }

    pub fn describe(&self) -> String {
        let pts: Vec<String> = self.waypoints.iter().map(|w| format!("{}->{:?}", w.x, w.y)).collect();
        format!("waypoint target={} [{}]", self.target, pts.join(", "))
    }
}
