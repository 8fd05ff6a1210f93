//! Exact rational helpers shared by every module.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Exact rational number used for coordinates, row lengths and riggings.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn frac(num: i64, den: i64) -> Q {
    Q::new(num, den)
}

pub fn is_integral(x: &Q) -> bool {
    x.is_integer()
}

/// Least common multiple of the denominators of `values` (1 for an empty input).
pub fn denominator_lcm<'a, I: IntoIterator<Item = &'a Q>>(values: I) -> i64 {
    values
        .into_iter()
        .fold(1i64, |acc, x| acc.lcm(x.denom()))
}

/// Canonical text form: `p` for integers, `p/q` with `q > 0` and `gcd(p, q) = 1` otherwise.
pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(text: &str) -> Option<Q> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: i64 = num.trim().parse().ok()?;
            let den: i64 = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Q::new(num, den))
        }
        None => text.parse::<i64>().ok().map(Q::from_integer),
    }
}

pub(crate) fn to_i64(x: &Q) -> Option<i64> {
    x.is_integer().then(|| *x.numer())
}

pub(crate) fn is_nonnegative(x: &Q) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text() {
        assert_eq!(format_q(&frac(6, 4)), "3/2");
        assert_eq!(format_q(&frac(-6, 4)), "-3/2");
        assert_eq!(format_q(&frac(4, -2)), "-2");
        assert_eq!(format_q(&q(0)), "0");
        assert_eq!(parse_q(" 3/2 "), Some(frac(3, 2)));
        assert_eq!(parse_q("4/2"), Some(q(2)));
        assert_eq!(parse_q("1/0"), None);
        assert_eq!(parse_q("x"), None);
    }

    #[test]
    fn lcm_of_denominators() {
        let xs = [frac(1, 2), frac(2, 3), q(5)];
        assert_eq!(denominator_lcm(&xs), 6);
        assert_eq!(denominator_lcm(&[] as &[Q]), 1);
    }
}
