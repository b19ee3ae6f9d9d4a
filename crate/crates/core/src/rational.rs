//! Exact rationals for reported statistics.

use num_rational::Ratio;

pub type Rational = Ratio<u64>;

/// `p/q (d.dddddd)`, or just the integer when the denominator is 1.
pub fn format_exact(r: &Rational) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{} ({})", r.numer(), r.denom(), format_decimal(r, 6))
    }
}

/// Rounds half up to `places` decimals using integer arithmetic only.
pub fn format_decimal(r: &Rational, places: u32) -> String {
    let scale = 10u128.pow(places);
    let num = *r.numer() as u128 * scale;
    let den = *r.denom() as u128;
    let rounded = (2 * num + den) / (2 * den);
    let int = rounded / scale;
    let frac = rounded % scale;
    if places == 0 {
        format!("{int}")
    } else {
        format!("{int}.{frac:0width$}", width = places as usize)
    }
}

/// Serializes as `"p/q"`.
pub fn serialize_ratio<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_args!("{}/{}", r.numer(), r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeating_decimal_prints_exactly() {
        assert_eq!(
            format_exact(&Rational::new(2024, 1920)),
            "253/240 (1.054167)"
        );
        assert_eq!(format_exact(&Rational::new(3840, 1920)), "2");
        assert_eq!(format_decimal(&Rational::new(2610, 1920), 6), "1.359375");
    }
}
