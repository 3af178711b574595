//! Float helpers routed through libm so the crate stays no_std.

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

/// Integer power by binary exponentiation.
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    let (mut base, mut e) = if n < 0 { (1.0 / x, n.unsigned_abs()) } else { (x, n as u32) };
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Floor that first snaps values within `tol` of an integer onto it, so an
/// exactly-integer ratio computed in floating point cannot land one below.
pub(crate) fn floor_snapped(x: f64, tol: f64) -> f64 {
    let r = round(x);
    if abs(x - r) <= tol {
        r
    } else {
        floor(x)
    }
}
