use num_complex::Complex64;

/// A nonnegative integer, also written in exponent form such as `1e9`.
pub fn count(text: &str) -> Result<u64, String> {
    if let Ok(n) = text.parse::<u64>() {
        return Ok(n);
    }
    let v: f64 = text.parse().map_err(|_| format!("`{text}` is not a number"))?;
    if v.is_nan() || v < 0.0 || v.fract() != 0.0 || v > u64::MAX as f64 {
        return Err(format!("`{text}` is not a nonnegative integer"));
    }
    Ok(v as u64)
}

/// A complex number `a`, `bi`, `a+bi` or `a-bi`; `j` works in place of `i`.
pub fn complex(text: &str) -> Result<Complex64, String> {
    let bad = || format!("`{text}` is not a complex number (try 2, 0.5+14.13i or 3i)");
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let z = match t.strip_suffix(['i', 'j']) {
        Some(body) => split_parts(body).ok_or_else(bad)?,
        None => Complex64::new(t.parse().map_err(|_| bad())?, 0.0),
    };
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(bad())
    }
}

fn split_parts(body: &str) -> Option<Complex64> {
    // The sign that splits real from imaginary part is the last one not
    // opening the string or an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |s: &str| match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => s.parse::<f64>().ok(),
    };
    match split {
        Some(k) => Some(Complex64::new(body[..k].parse().ok()?, imag(&body[k..])?)),
        None => Some(Complex64::new(0.0, imag(body)?)),
    }
}

pub fn positive(text: &str) -> Result<f64, String> {
    match text.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{text}` is not a positive number")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(count("1000"), Ok(1000));
        assert_eq!(count("1e9"), Ok(1_000_000_000));
        assert!(count("1.5").is_err());
        assert!(count("-3").is_err());
        assert!(count("x").is_err());
    }

    #[test]
    fn complexes() {
        assert_eq!(complex("2"), Ok(Complex64::new(2.0, 0.0)));
        assert_eq!(complex("0.5+14.13i"), Ok(Complex64::new(0.5, 14.13)));
        assert_eq!(complex("0.5 - 3i"), Ok(Complex64::new(0.5, -3.0)));
        assert_eq!(complex("3i"), Ok(Complex64::new(0.0, 3.0)));
        assert_eq!(complex("-i"), Ok(Complex64::new(0.0, -1.0)));
        assert_eq!(complex("1e-3+2e+1j"), Ok(Complex64::new(1e-3, 20.0)));
        assert_eq!(complex("-2.5"), Ok(Complex64::new(-2.5, 0.0)));
        assert!(complex("2+").is_err());
        assert!(complex("a+bi").is_err());
        assert!(complex("nan").is_err());
    }
}
