//! Human-readable rendering of angles, schedules and states.

use std::f64::consts::FRAC_PI_4;
use std::fmt::Write;

use crate::linalg::{Statevector, C64};
use crate::maqaoa::{HalfLayer, HypercubeEdge, Schedule};
use crate::operators::BasisIndex;
use crate::tolerance::DEFAULT;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Prints `x` rounded to `digits` significant digits in its shortest form.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0".into() } else { x.to_string() };
    }
    let rounded: f64 = format!("{:.*e}", digits - 1, x).parse().expect("formatted float parses");
    if rounded == 0.0 {
        "0".into()
    } else {
        rounded.to_string()
    }
}

/// `kπ/4` multiples print symbolically (`7π/4`, `π`, `0`); other angles as decimals.
pub fn format_angle(x: f64) -> String {
    let k = (x / FRAC_PI_4).round();
    if (x - k * FRAC_PI_4).abs() > DEFAULT.angle_snap {
        return significant(x, 12);
    }
    let k = k as i64;
    if k == 0 {
        return "0".into();
    }
    let g = gcd(k, 4);
    let (num, den) = (k / g, 4 / g);
    let mut out = match num {
        1 => "π".to_string(),
        -1 => "-π".to_string(),
        _ => format!("{num}π"),
    };
    if den != 1 {
        let _ = write!(out, "/{den}");
    }
    out
}

/// Amplitude parts below this magnitude print as `0`.
const AMPLITUDE_FLOOR: f64 = 1e-14;

pub fn format_complex(z: C64) -> String {
    let chop = |x: f64| if x.abs() < AMPLITUDE_FLOOR { 0.0 } else { x };
    let re = significant(chop(z.re), 12);
    let im = significant(chop(z.im).abs(), 12);
    let sign = if z.im < 0.0 && im != "0" { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

/// Angle vector of a half-layer: γ by basis index, β by every hypercube edge
/// in lexicographic order.
pub fn half_layer_angles(half: &HalfLayer) -> Vec<f64> {
    match half {
        HalfLayer::Gamma(g) => g.angles().to_vec(),
        HalfLayer::Beta(b) => HypercubeEdge::all(b.num_qubits()).map(|e| b.angle(&e)).collect(),
    }
}

/// One row per half-layer with angles as `π/4` multiples where exact.
pub fn schedule_table(s: &Schedule) -> String {
    let n = s.num_qubits();
    let mut out = String::new();
    let _ = writeln!(out, "{:<10}  Angle vector", "U");
    for (label, half) in s.half_layers() {
        let angles: Vec<String> = half_layer_angles(&half).into_iter().map(format_angle).collect();
        let _ = writeln!(out, "{label:<10}  ({})", angles.join(", "));
    }
    let gamma_keys: Vec<String> = (0..1usize << n).map(|z| z.to_string()).collect();
    let beta_keys: Vec<String> = HypercubeEdge::all(n).map(|e| e.to_string()).collect();
    let _ = writeln!(out, "γ entries: ({})", gamma_keys.join(", "));
    let _ = writeln!(out, "β entries: ({})", beta_keys.join(", "));
    out
}

/// Long-format CSV: `half_layer,layer,key,angle` for every γ entry and every hypercube edge.
pub fn schedule_csv(s: &Schedule) -> String {
    let n = s.num_qubits();
    let mut out = String::from("half_layer,layer,key,angle\n");
    for (i, (g, b)) in s.layers().iter().enumerate() {
        for (z, a) in g.angles().iter().enumerate() {
            let _ = writeln!(out, "gamma,{},{z},{a}", i + 1);
        }
        for e in HypercubeEdge::all(n) {
            let _ = writeln!(out, "beta,{},{e},{}", i + 1, b.angle(&e));
        }
    }
    out
}

/// `|label>  amplitude` per basis state.
pub fn state_lines(psi: &Statevector) -> String {
    let n = psi.num_qubits();
    let mut out = String::new();
    for (z, &a) in psi.amplitudes().iter().enumerate() {
        let label = BasisIndex::new(n, z).expect("index in range").label();
        let _ = writeln!(out, "|{label}⟩  {}", format_complex(a));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn angles_print_as_pi_multiples() {
        assert_eq!(format_angle(0.0), "0");
        assert_eq!(format_angle(PI / 4.0), "π/4");
        assert_eq!(format_angle(PI / 2.0), "π/2");
        assert_eq!(format_angle(PI), "π");
        assert_eq!(format_angle(3.0 * PI / 2.0), "3π/2");
        assert_eq!(format_angle(7.0 * PI / 4.0), "7π/4");
        assert_eq!(format_angle(-PI / 4.0), "-π/4");
        assert_eq!(format_angle(2.0 * PI), "2π");
        assert_eq!(format_angle(0.5), "0.5");
        assert_eq!(format_angle(PI / 4.0 + 1e-9), "0.785398164397");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(significant(std::f64::consts::FRAC_1_SQRT_2, 12), "0.707106781187");
        assert_eq!(significant(-1e-17, 12), "-0.00000000000000001");
        assert_eq!(significant(0.0, 12), "0");
        assert_eq!(format_complex(C64::new(0.5, -0.25)), "0.5-0.25i");
        assert_eq!(format_complex(C64::new(1.0, -0.0)), "1+0i");
        assert_eq!(format_complex(C64::new(-3e-17, 2e-16)), "0+0i");
    }
}
