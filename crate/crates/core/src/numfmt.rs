//! Fixed text formatting for reported numbers.

/// Significant digits in every reported number.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros removed,
/// scientific notation outside `1e-5 <= |x| < 1e12`.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let precision = SIGNIFICANT_DIGITS - 1;
    let sci = format!("{:.*e}", precision, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if exponent < -5 || exponent >= SIGNIFICANT_DIGITS as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exponent.abs())
    } else {
        let decimals = (precision as i32 - exponent).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(format_sig(2f64.sqrt() / 4.0), "0.353553390593");
        assert_eq!(format_sig(2f64.sqrt() / 3.0), "0.471404520791");
        assert_eq!(format_sig(2f64.sqrt() / 2.0), "0.707106781187");
        assert_eq!(format_sig(0.75), "0.75");
        assert_eq!(format_sig(3.0), "3");
        assert_eq!(format_sig(10.0 / 3.0), "3.33333333333");
        assert_eq!(format_sig(-2.5), "-2.5");
        assert_eq!(format_sig(1.5e-17), "1.5e-17");
        assert_eq!(format_sig(2.0e13), "2e+13");
        assert_eq!(format_sig(0.0001234), "0.0001234");
        assert_eq!(format_sig(-0.0), "0");
        assert_eq!(format_sig(999999999999.9), "1e+12");
    }
}
