//! Small helpers for exact rational evaluation of closed forms.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for any integer exponent. `0^0 = 1`; `0` to a negative power
/// is outside every closed form's domain.
pub fn pow(base: &BigRational, exp: i64) -> Result<BigRational> {
    if exp == 0 {
        return Ok(BigRational::one());
    }
    if base.is_zero() {
        return if exp > 0 {
            Ok(BigRational::zero())
        } else {
            Err(Error::FormulaDomain {
                value: format!("0^{exp}"),
            })
        };
    }
    let magnitude =
        u32::try_from(exp.unsigned_abs()).map_err(|_| Error::InvalidParameter(format!("exponent {exp} too large")))?;
    let numer = num_traits::pow(base.numer().clone(), magnitude as usize);
    let denom = num_traits::pow(base.denom().clone(), magnitude as usize);
    // powers of coprime parts stay coprime; only the sign needs fixing
    let (numer, denom) = if exp > 0 { (numer, denom) } else { (denom, numer) };
    Ok(if denom.is_negative() {
        BigRational::new_raw(-numer, -denom)
    } else {
        BigRational::new_raw(numer, denom)
    })
}

/// Builds `numer / denom`, skipping the gcd when the quotient is exact.
fn normalize(numer: BigInt, denom: BigInt) -> BigRational {
    if denom.is_one() {
        return BigRational::from_integer(numer);
    }
    let (q, r) = numer.div_rem(&denom);
    if r.is_zero() {
        BigRational::from_integer(q)
    } else {
        BigRational::new(numer, denom)
    }
}

/// Product of rationals with a single normalization at the end.
pub fn product<'a>(factors: impl IntoIterator<Item = &'a BigRational>) -> BigRational {
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for f in factors {
        if f.is_zero() {
            return BigRational::zero();
        }
        numer *= f.numer();
        if !f.denom().is_one() {
            denom *= f.denom();
        }
    }
    normalize(numer, denom)
}

/// Sum of rationals over a running common denominator.
///
/// When one denominator divides the other, the accumulator is rescaled
/// instead of multiplied out, which keeps sums of terms over powers of a
/// common base cheap.
pub fn sum<'a>(terms: impl IntoIterator<Item = &'a BigRational>) -> BigRational {
    let mut numer = BigInt::zero();
    let mut denom = BigInt::one();
    for t in terms {
        let d = t.denom();
        if d == &denom {
            numer += t.numer();
        } else if (&denom % d).is_zero() {
            numer += t.numer() * (&denom / d);
        } else if (d % &denom).is_zero() {
            numer = numer * (d / &denom) + t.numer();
            denom = d.clone();
        } else {
            numer = numer * d + t.numer() * &denom;
            denom *= d;
        }
    }
    normalize(numer, denom)
}

pub fn ipow(base: i64, exp: i64) -> Result<BigRational> {
    if exp > 0 {
        let magnitude = usize::try_from(exp).expect("positive");
        return Ok(BigRational::from_integer(num_traits::pow(
            BigInt::from(base),
            magnitude,
        )));
    }
    pow(&int(base), exp)
}

/// Accepts a rational only if it is a nonnegative integer.
pub fn to_count(value: BigRational) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::FormulaDomain {
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// Parses `p/q` or a bare integer.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParameter(format!("`{text}` is not a rational of the form p/q"));
    let (p, q) = match text.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Canonical `p/q` text, with `q` omitted when it is 1.
pub fn format_rational(value: &BigRational) -> String {
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_powers() {
        assert_eq!(ipow(3, -2).unwrap(), ratio(1, 9));
        assert_eq!(pow(&ratio(-2, 3), -3).unwrap(), ratio(-27, 8));
        assert_eq!(ipow(0, 0).unwrap(), int(1));
        assert_eq!(ipow(0, 4).unwrap(), int(0));
        assert!(ipow(0, -1).is_err());
    }

    #[test]
    fn unreduced_helpers_agree_with_field_ops() {
        let xs = [ratio(3, 4), ratio(-5, 6), int(7), ratio(1, 12), ratio(9, 8), int(0)];
        let direct = xs.iter().fold(int(0), |acc, x| acc + x);
        assert_eq!(sum(&xs), direct);
        assert_eq!(product(&xs[..5]), xs[..5].iter().fold(int(1), |acc, x| acc * x));
        assert_eq!(product(&xs), int(0));
        assert_eq!(product(&[ratio(2, 3), ratio(3, 2)]), int(1));
        assert_eq!(sum(&[ratio(1, 3), ratio(1, 5)]), ratio(8, 15));
        assert_eq!(sum(std::iter::empty()), int(0));
    }

    #[test]
    fn counts_must_be_natural() {
        assert_eq!(to_count(int(7)).unwrap(), BigUint::from(7u32));
        assert!(to_count(ratio(1, 2)).is_err());
        assert!(to_count(int(-1)).is_err());
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("7/3").unwrap(), ratio(7, 3));
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational("4/-6").unwrap(), ratio(-2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(8, 5)), "8/5");
        assert_eq!(format_rational(&int(3)), "3");
    }
}
