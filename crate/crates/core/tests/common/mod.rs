//! Floating-point character oracle, independent of the exact structure
//! constants and class functions in the library.

#![allow(dead_code)]

use std::f64::consts::PI;

use dihedral_k::kring::MultiPoly;
use dihedral_k::reptheory::{DihedralRing, Irrep, Parity, VirtualRep};
use num_traits::ToPrimitive;

/// A group element `r^j s^e`.
#[derive(Clone, Copy, Debug)]
pub struct Elem {
    pub j: u64,
    pub reflection: bool,
}

/// One element from each conjugacy class type: all rotations, `s` and `rs`.
pub fn sample_elements(n: u64) -> Vec<Elem> {
    let mut out: Vec<Elem> = (0..n).map(|j| Elem { j, reflection: false }).collect();
    out.push(Elem { j: 0, reflection: true });
    out.push(Elem { j: 1, reflection: true });
    out
}

fn sign(neg: bool) -> f64 {
    if neg {
        -1.0
    } else {
        1.0
    }
}

pub fn irrep_value(n: u64, swap_eta: bool, b: Irrep, g: Elem) -> f64 {
    match b {
        Irrep::Trivial => 1.0,
        Irrep::Eta => sign(g.reflection),
        Irrep::EtaEven(i) => {
            // η_1: r -> -1, s -> 1; η_2: r -> -1, s -> -1; η_3 = η_1 η_2.
            let (on_r, on_s) = match (i, swap_eta) {
                (1, false) | (2, true) => (-1.0, 1.0),
                (2, false) | (1, true) => (-1.0, -1.0),
                _ => (1.0, -1.0),
            };
            let r_part = if g.j % 2 == 1 { on_r } else { 1.0 };
            let s_part = if g.reflection { on_s } else { 1.0 };
            r_part * s_part
        }
        Irrep::Rho(i) => {
            if g.reflection {
                0.0
            } else {
                2.0 * (2.0 * PI * (i * g.j) as f64 / n as f64).cos()
            }
        }
    }
}

pub fn char_value(x: &VirtualRep, g: Elem) -> f64 {
    let ring = x.ring();
    x.coeffs()
        .iter()
        .zip(ring.basis())
        .map(|(c, b)| c.to_f64().unwrap() * irrep_value(ring.n(), ring.swap_eta(), *b, g))
        .sum()
}

pub fn char_vector(x: &VirtualRep) -> Vec<f64> {
    sample_elements(x.ring().n()).into_iter().map(|g| char_value(x, g)).collect()
}

/// Value of a generator (`v`, `v_i`, `φ`) at `g`.
pub fn generator_value(ring: &DihedralRing, name: &str, g: Elem) -> f64 {
    let n = ring.n();
    let sw = ring.swap_eta();
    match name {
        "φ" => irrep_value(n, sw, Irrep::Rho(1), g) - 2.0,
        "v" if ring.parity() == Parity::Odd => irrep_value(n, sw, Irrep::Eta, g) - 1.0,
        "v_1" => irrep_value(n, sw, Irrep::EtaEven(1), g) - 1.0,
        "v_2" => irrep_value(n, sw, Irrep::EtaEven(2), g) - 1.0,
        "v_3" => irrep_value(n, sw, Irrep::EtaEven(3), g) - 1.0,
        other => panic!("no generator {other}"),
    }
}

/// A polynomial in named generators evaluated at each sample element.
pub fn poly_values(ring: &DihedralRing, names: &[String], p: &MultiPoly) -> Vec<f64> {
    sample_elements(ring.n())
        .into_iter()
        .map(|g| {
            let vals: Vec<f64> = names.iter().map(|s| generator_value(ring, s, g)).collect();
            p.terms()
                .map(|(e, c)| {
                    let mono: f64 = e.iter().zip(&vals).map(|(d, x)| x.powi(*d as i32)).product();
                    c.to_f64().unwrap() * mono
                })
                .sum()
        })
        .collect()
}

pub fn close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-6 * (1.0 + x.abs().max(y.abs())))
}

/// `ψ^m(φ)` at `g`, from `ψ^m(q + q^{-1} - 2) = q^m + q^{-m} - 2`.
pub fn psi_phi(n: u64, m: u64, g: Elem) -> f64 {
    let theta = if g.reflection {
        // φ = -2 on reflections, i.e. q = i
        std::f64::consts::FRAC_PI_2
    } else {
        2.0 * PI * g.j as f64 / n as f64
    };
    2.0 * (m as f64 * theta).cos() - 2.0
}

/// Even-case relations and `g_2k`, evaluated from their defining formulas.
pub fn even_relation_values(n: u64, swap_eta: bool, label: &str) -> Vec<f64> {
    let k = n / 2;
    let ring = DihedralRing::new(n, swap_eta).unwrap();
    sample_elements(n)
        .into_iter()
        .map(|g| {
            let v2 = generator_value(&ring, "v_2", g);
            let v3 = generator_value(&ring, "v_3", g);
            let phi = generator_value(&ring, "φ", g);
            let psi = |m: u64| psi_phi(n, m, g);
            let k_odd = k % 2 == 1;
            match label {
                "1" => v2 * v2 + 2.0 * v2,
                "2" => v3 * v3 + 2.0 * v3,
                "3" => v2 * phi - psi(k - 1) + phi + 2.0 * v2 + if k_odd { v3 } else { 0.0 },
                "4" => v3 * phi + 2.0 * v3,
                "5" if k == 2 => v2 * v3 - 4.0 * phi - phi * phi + 2.0 * v2 + 2.0 * v3,
                "5" => v2 * v3 - psi(k) + 2.0 * v2 + if k_odd { v3 } else { 0.0 },
                "g" => psi(k + 1) - psi(k - 1),
                other => panic!("no relation {other}"),
            }
        })
        .collect()
}
