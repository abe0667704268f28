//! Complex literals on the command line: `a+bi` with optional signs and no
//! spaces, e.g. `0.3+0.2i`, `-1`, `2i`, `1-0.5i`, `i`, `-i`, `1e-3+2.5e-2i`.

use num_complex::Complex64;

pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    if !s.ends_with('i') && !s.ends_with('I') {
        return s
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|e| format!("`{s}`: {e}"));
    }
    let body = &s[..s.len() - 1];
    // Split at the last +/- that is not the leading sign and not part of an
    // exponent; everything after it (with the sign) is the imaginary part.
    let bytes = body.as_bytes();
    let mut split = None;
    for (idx, &b) in bytes.iter().enumerate().skip(1) {
        if b == b'+' || b == b'-' {
            let prev = bytes[idx - 1];
            if prev != b'e' && prev != b'E' {
                split = Some(idx);
            }
        }
    }
    match split {
        Some(idx) => {
            let re: f64 = body[..idx]
                .parse()
                .map_err(|e| format!("`{s}` real part: {e}"))?;
            let im_text = &body[idx..];
            let im: f64 = match im_text {
                "+" => 1.0,
                "-" => -1.0,
                other => other.parse().map_err(|e| format!("`{s}` imag part: {e}"))?,
            };
            Ok(Complex64::new(re, im))
        }
        None => {
            let im: f64 = match body {
                "" => 1.0,
                "-" => -1.0,
                "+" => 1.0,
                other => other.parse().map_err(|e| format!("`{s}` imag part: {e}"))?,
            };
            Ok(Complex64::new(0.0, im))
        }
    }
}
