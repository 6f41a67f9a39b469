use num_complex::Complex64;
use quarteig::specfun::{bessel_k_norm, bessel_i_norm, bessel_i_norm_scaled, bessel_j_norm, Order};
use quarteig::eigen::{EigenfunctionSpec, ExtractionConfig, lambda_j};
use quarteig::params::{ParamPair, SpectralIndex};
use std::time::Instant;

fn o(v: f64) -> Order { Order::new(v).unwrap() }

fn main() {
    // Wronskian after K~1 fix
    for &x in &[0.4f64, 1.0, 2.0, 3.3, 3.7] {
        for &a in &[0.0f64, 1.0, 2.0] {
            let lhs = bessel_i_norm(o(a), x).unwrap() * bessel_k_norm(o(a + 1.0), x).unwrap()
                + bessel_i_norm(o(a + 1.0), x).unwrap() * bessel_k_norm(o(a), x).unwrap();
            let rhs = 0.5 * (x / 2.0f64).powf(-2.0 * a - 2.0);
            println!("x={x:5.2} a={a}: wronskian rel = {:.3e}", (lhs - rhs).abs() / rhs);
        }
    }
    // J regime boundary: miller vs hankel handled internally; compare across 18
    for &a in &[0.0f64, 1.5, 3.0] {
        let lo = bessel_j_norm(o(a), 17.999999).unwrap();
        let hi = bessel_j_norm(o(a), 18.000001).unwrap();
        println!("J a={a}: 18- = {lo:.15e}, 18+ = {hi:.15e}, rel jump {:.3e}", (lo-hi).abs()/lo.abs().max(1e-300));
    }
    // I scaled boundary at 680
    let lo = bessel_i_norm_scaled(o(0.5), 679.999).unwrap();
    let hi = bessel_i_norm_scaled(o(0.5), 680.001).unwrap();
    println!("I-scaled 680-: {lo:.15e} 680+: {hi:.15e} rel {:.3e}", (lo-hi).abs()/lo);
    // contour extraction of K0
    let p = ParamPair::validate(0, 0).unwrap();
    let t0 = Instant::now();
    for &x in &[0.5f64, 1.0, 3.0] {
        let s = EigenfunctionSpec { params: p, j: SpectralIndex(0), extraction: ExtractionConfig::default() };
        let got = lambda_j(&s, x);
        let expect = bessel_k_norm(o(0.0), x).unwrap();
        match got {
            Ok(v) => println!("lambda_0(x={x}) = {v:.15e} vs K0 {expect:.15e} rel {:.3e}", (v-expect).abs()/expect),
            Err(e) => println!("lambda_0(x={x}) error: {e}"),
        }
    }
    println!("3 extractions took {:?}", t0.elapsed());
    // time one full jet
    let s = EigenfunctionSpec { params: ParamPair::validate(3,1).unwrap(), j: SpectralIndex(2), extraction: ExtractionConfig::default() };
    let t0 = Instant::now();
    let jet = quarteig::eigen::lambda_jet(&s, 1.0).unwrap();
    println!("jet = {:?} in {:?}", jet.values, t0.elapsed());
}
