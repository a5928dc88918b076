//! Value parsers for the command-line flags.

use num_rational::Ratio;
use polyweyl::{Complex64, Kappa};

/// One κ: `p/q`, an integer, or a nonnegative decimal read exactly
/// (`0.25` is `1/4`).  Negative decimals are refused because a finite
/// representation needs the exact value `−1/k`.
pub fn parse_kappa(text: &str) -> Result<Kappa, String> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| format!("invalid numerator in kappa '{t}'"))?;
        let q: i64 = q.trim().parse().map_err(|_| format!("invalid denominator in kappa '{t}'"))?;
        if q == 0 {
            return Err(format!("kappa '{t}' has a zero denominator"));
        }
        return Ok(Ratio::new(p, q));
    }
    if let Ok(n) = t.parse::<i64>() {
        return Ok(Ratio::from_integer(n));
    }
    if t.starts_with('-') {
        return Err(format!("negative kappa '{t}' must be written as an exact fraction such as -1/3"));
    }
    let (int, frac) = t.split_once('.').ok_or_else(|| format!("invalid kappa '{t}'; expected p/q or a decimal"))?;
    let digits_ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    if !digits_ok(int) || !digits_ok(frac) || (int.is_empty() && frac.is_empty()) || frac.len() > 17 {
        return Err(format!("invalid kappa '{t}'; expected p/q or a decimal"));
    }
    let scale = 10i64.pow(frac.len() as u32);
    let whole: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| format!("kappa '{t}' out of range"))? };
    let part: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| format!("kappa '{t}' out of range"))? };
    let numer = whole
        .checked_mul(scale)
        .and_then(|w| w.checked_add(part))
        .ok_or_else(|| format!("kappa '{t}' out of range"))?;
    Ok(Ratio::new(numer, scale))
}

pub fn parse_kappas(text: &str) -> Result<Vec<Kappa>, String> {
    text.split(',').map(parse_kappa).collect()
}

/// `ℓ₁,ℓ₂,…` for κᵢ = 1/ℓᵢ.
pub fn parse_ells(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|s| match s.trim().parse::<u64>() {
            Ok(l) if l > 0 => Ok(l),
            _ => Err(format!("ell values must be positive integers, got '{}'", s.trim())),
        })
        .collect()
}

/// Complex numbers as `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || format!("invalid complex number '{text}'; expected e.g. 1+0.5i");
    if t.is_empty() {
        return Err(err());
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse::<f64>().ok().filter(|re| re.is_finite()).map(|re| Complex64::new(re, 0.0)).ok_or_else(err);
    };
    // split before the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().map_err(|_| err())?,
    };
    let re = re.parse::<f64>().map_err(|_| err())?;
    let z = Complex64::new(re, im);
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(err());
    }
    Ok(z)
}

pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>, String> {
    text.split(',').map(parse_complex).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappas() {
        assert_eq!(parse_kappas("-1/3,1/2").unwrap(), vec![Ratio::new(-1, 3), Ratio::new(1, 2)]);
        assert_eq!(parse_kappa("0.25").unwrap(), Ratio::new(1, 4));
        assert_eq!(parse_kappa(".5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_kappa("2").unwrap(), Ratio::from_integer(2));
        assert_eq!(parse_kappa("-1").unwrap(), Ratio::from_integer(-1));
        assert!(parse_kappa("-0.5").unwrap_err().contains("exact fraction"));
        assert!(parse_kappa("1/0").is_err());
        assert!(parse_kappa("abc").is_err());
    }

    #[test]
    fn ells() {
        assert_eq!(parse_ells("1, 2,5").unwrap(), vec![1, 2, 5]);
        assert!(parse_ells("0").is_err());
        assert!(parse_ells("x").is_err());
    }

    #[test]
    fn complex() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(parse_complex("1+0.5i").unwrap(), c(1.0, 0.5));
        assert_eq!(parse_complex("-2").unwrap(), c(-2.0, 0.0));
        assert_eq!(parse_complex("0.5i").unwrap(), c(0.0, 0.5));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("3 - 2i").unwrap(), c(3.0, -2.0));
        assert_eq!(parse_complex("1e-3+2e-2i").unwrap(), c(1e-3, 2e-2));
        assert_eq!(parse_complex("-1e+2-1e-1i").unwrap(), c(-100.0, -0.1));
        assert!(parse_complex("").is_err());
        assert!(parse_complex("1+").is_err());
        assert!(parse_complex("inf").is_err());
        assert_eq!(parse_complex_list("1,i").unwrap(), vec![c(1.0, 0.0), c(0.0, 1.0)]);
    }
}
