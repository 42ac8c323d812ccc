//! The middle-third Cantor model: binary addresses name closed intervals,
//! bit 0 selecting the left third and bit 1 the right third.

use super::{Address, GeometryError, Rational, Region};

/// Infinite continuation of a finite address.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TernaryTail {
    Zeros,
    Ones,
    /// The given nonempty word repeated forever.
    Periodic(Address),
}

fn require_binary(a: &Address) -> Result<(), GeometryError> {
    if a.arity() != 2 {
        return Err(GeometryError::NotBinary(a.arity() as u32));
    }
    Ok(())
}

/// Closed interval of the middle-third construction named by `a`; it has
/// length `3^-|a|`.
pub fn cylinder(a: &Address) -> Result<Region, GeometryError> {
    require_binary(a)?;
    let (lo, width) = cylinder_bounds(a);
    let hi = &lo + &width;
    Region::interval(lo, hi)
}

pub(crate) fn cylinder_bounds(a: &Address) -> (Rational, Rational) {
    let third = Rational::new(1, 3);
    let two_thirds = Rational::new(2, 3);
    let mut lo = Rational::zero();
    let mut width = Rational::one();
    for &bit in a.symbols() {
        if bit == 1 {
            lo = lo + &width * &two_thirds;
        }
        width = width * &third;
    }
    (lo, width)
}

/// Exact point of the middle-third set whose ternary digits are `2*bit`
/// along `a` and then along the tail.
pub fn eval_ternary_address(a: &Address, tail: &TernaryTail) -> Result<Rational, GeometryError> {
    require_binary(a)?;
    let (lo, width) = cylinder_bounds(a);
    let tail_value = match tail {
        TernaryTail::Zeros => Rational::zero(),
        TernaryTail::Ones => Rational::one(),
        TernaryTail::Periodic(w) => {
            require_binary(w)?;
            if w.is_empty() {
                return Err(GeometryError::Parse("periodic tail must be nonempty".into()));
            }
            // 0.(w)(w)...  =  0.w / (1 - 3^-|w|)
            let (block, _) = cylinder_bounds(w);
            block / (Rational::one() - Rational::pow(3, -(w.len() as i32)))
        }
    };
    Ok(lo + width * tail_value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn cylinder_examples() {
        assert_eq!(cylinder(&a("")).unwrap(), Region::unit(1));
        assert_eq!(cylinder(&a("0")).unwrap(), Region::interval(r(0, 1), r(1, 3)).unwrap());
        assert_eq!(cylinder(&a("01")).unwrap(), Region::interval(r(2, 9), r(1, 3)).unwrap());
    }

    #[test]
    fn non_binary_rejected() {
        let w = Address::parse_with_arity("012", 3).unwrap();
        assert_eq!(cylinder(&w), Err(GeometryError::NotBinary(3)));
    }

    #[test]
    fn tails() {
        assert_eq!(eval_ternary_address(&a(""), &TernaryTail::Zeros).unwrap(), r(0, 1));
        assert_eq!(eval_ternary_address(&a(""), &TernaryTail::Ones).unwrap(), r(1, 1));
        let per = TernaryTail::Periodic(a("10"));
        assert_eq!(eval_ternary_address(&a("10"), &per).unwrap(), r(3, 4));
        assert_eq!(eval_ternary_address(&a(""), &per).unwrap(), r(3, 4));
        // the right endpoint of a cylinder is its address followed by ones
        let c = cylinder(&a("0110")).unwrap();
        let right = eval_ternary_address(&a("0110"), &TernaryTail::Ones).unwrap();
        assert_eq!(&right, c.boxes()[0].hi(0));
    }
}
