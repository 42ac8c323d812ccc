use std::fmt;

use serde::{Deserialize, Serialize};

use super::{GeometryError, Rational};

/// A point of `[0,1]^d`, `d` in {1, 2}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Result<Self, GeometryError> {
        if coords.is_empty() || coords.len() > 2 {
            return Err(GeometryError::UnsupportedDimension(coords.len()));
        }
        for c in &coords {
            if c.is_negative() || *c > Rational::one() {
                return Err(GeometryError::OutOfUnitRange(c.clone()));
            }
        }
        Ok(Point { coords })
    }

    /// Builds a point without the unit-range check. Only for values that are
    /// in range by construction.
    pub(crate) fn from_coords_unchecked(coords: Vec<Rational>) -> Self {
        debug_assert!(!coords.is_empty() && coords.len() <= 2);
        Point { coords }
    }

    pub fn on_line(x: Rational) -> Result<Self, GeometryError> {
        Point::new(vec![x])
    }

    pub fn in_plane(x: Rational, y: Rational) -> Result<Self, GeometryError> {
        Point::new(vec![x, y])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, axis: usize) -> &Rational {
        &self.coords[axis]
    }

    /// Parses `x` or `x,y` with rational components.
    pub fn parse(s: &str) -> Result<Self, GeometryError> {
        let coords = s
            .split(',')
            .map(|c| c.parse::<Rational>())
            .collect::<Result<Vec<_>, _>>()?;
        Point::new(coords)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Chebyshev distance `max_i |p_i - q_i|`.
pub fn distance(p: &Point, q: &Point) -> Result<Rational, GeometryError> {
    if p.dim() != q.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(p.coords
        .iter()
        .zip(&q.coords)
        .map(|(a, b)| (a - b).abs())
        .max()
        .expect("points have at least one coordinate"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn distance_examples() {
        let o = Point::in_plane(r(0, 1), r(0, 1)).unwrap();
        let one = Point::in_plane(r(1, 1), r(1, 1)).unwrap();
        assert_eq!(distance(&o, &one).unwrap(), r(1, 1));

        let a = Point::on_line(r(1, 3)).unwrap();
        let b = Point::on_line(r(2, 3)).unwrap();
        assert_eq!(distance(&a, &b).unwrap(), r(1, 3));

        let p = Point::in_plane(r(1, 4), r(0, 1)).unwrap();
        let q = Point::in_plane(r(3, 4), r(1, 8)).unwrap();
        assert_eq!(distance(&p, &q).unwrap(), r(1, 2));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Point::on_line(r(0, 1)).unwrap();
        let b = Point::in_plane(r(0, 1), r(0, 1)).unwrap();
        assert!(matches!(distance(&a, &b), Err(GeometryError::DimensionMismatch { .. })));
    }

    #[test]
    fn unit_range_enforced() {
        assert!(Point::on_line(r(3, 2)).is_err());
        assert!(Point::on_line(r(-1, 2)).is_err());
        assert!(Point::new(vec![]).is_err());
        assert_eq!(
            Point::parse("1/2,1/4").unwrap(),
            Point::in_plane(r(1, 2), r(1, 4)).unwrap()
        );
    }
}
