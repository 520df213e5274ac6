//! Flag-value parsers: the deformation parameter, complex labels, grids.

use num_complex::Complex64;

/// Parses `--q`: a float literal, or the token `e2` for the magnetic-field
/// value e^2 (avoids decimal-rounding drift in the flagship case).
pub fn parse_q(raw: &str) -> Result<f64, String> {
    let value = if raw.eq_ignore_ascii_case("e2") {
        std::f64::consts::E * std::f64::consts::E
    } else {
        raw.parse::<f64>()
            .map_err(|_| format!("cannot parse q value {raw:?}"))?
    };
    if !(value >= 1.0) || !value.is_finite() {
        return Err(format!("q must satisfy q >= 1 (got {value})"));
    }
    Ok(value)
}

/// Parses a complex label like `1+0i`, `0.5-2i`, `2i`, `-1.5`.
pub fn parse_complex(raw: &str) -> Result<Complex64, String> {
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    let err = || format!("cannot parse complex value {raw:?}");

    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // Split the imaginary suffix term from an optional real prefix: find
        // the last +/- that is not part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx] as char;
            if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            re_part.parse::<f64>().map_err(|_| err())?
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse::<f64>().map_err(|_| err())?,
        };
        Ok(Complex64::new(re, im))
    } else {
        let re = s.parse::<f64>().map_err(|_| err())?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// Parses a grid spec `t_min:t_max:points` with ordered positive bounds and
/// at least two points.
pub fn parse_grid(raw: &str) -> Result<(f64, f64, usize), String> {
    let parts: Vec<&str> = raw.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid must be t_min:t_max:points (got {raw:?})"));
    }
    let t_min = parts[0]
        .parse::<f64>()
        .map_err(|_| format!("bad grid start {:?}", parts[0]))?;
    let t_max = parts[1]
        .parse::<f64>()
        .map_err(|_| format!("bad grid end {:?}", parts[1]))?;
    let points = parts[2]
        .parse::<usize>()
        .map_err(|_| format!("bad grid point count {:?}", parts[2]))?;
    if !(t_min > 0.0) || !(t_max > t_min) {
        return Err("grid bounds must be positive and ordered".into());
    }
    if points < 2 {
        return Err("grid needs at least two points".into());
    }
    Ok((t_min, t_max, points))
}
