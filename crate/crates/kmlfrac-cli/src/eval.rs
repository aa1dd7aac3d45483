//! The `eval` subcommand: single-point evaluation with metadata.

use kmlfrac::{
    beta_image_closed, frac_deriv_closed, k_gamma, laplace_image_closed, ml_eval, BetaImageSpec,
    DerivResult, DerivSpec, EvalResult, FoxWrightSpec, KGammaArg, LaplaceImageSpec, MLParams,
    Side,
};

use crate::opts::{EvalArgs, EvalTarget, SideArg};

/// Ten significant digits.
fn sig10(v: f64) -> String {
    format!("{v:.9e}")
}

fn print_series_meta(r: &EvalResult<f64>) {
    println!("terms = {}", r.terms_used);
    println!("tail  = {:.3e}", r.tail_estimate);
    println!("converged = {}", r.converged);
}

fn print_deriv(r: &DerivResult<f64>, side: SideArg) {
    println!("value = {}", sig10(r.magnitude));
    if side == SideArg::Right {
        println!(
            "phase = {:.9e} {:+.9e} i",
            r.phase_factor.re, r.phase_factor.im
        );
        println!("real  = {}", sig10(r.real_part()));
        println!("imag  = {}", sig10(r.imag_part()));
    }
    print_series_meta(&r.series);
}

fn parse_pair(raw: &str) -> Result<(f64, f64), String> {
    let (a, b) = raw
        .split_once(':')
        .ok_or_else(|| format!("expected a:A, got `{raw}`"))?;
    Ok((
        a.trim().parse().map_err(|e| format!("bad pair `{raw}`: {e}"))?,
        b.trim().parse().map_err(|e| format!("bad pair `{raw}`: {e}"))?,
    ))
}

pub fn side_of(side: SideArg) -> Side {
    match side {
        SideArg::Left => Side::LeftZeroPlus,
        SideArg::Right => Side::RightZeroMinus,
    }
}

pub fn run(args: &EvalArgs) -> Result<i32, String> {
    let params = MLParams::new(args.ml.k, args.ml.xi, args.ml.zeta, args.ml.vartheta, args.ml.q)
        .map_err(|e| e.to_string())?;

    match args.target {
        EvalTarget::Kgamma => {
            let v = k_gamma(KGammaArg::new(args.ml.vartheta, args.ml.k).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            println!("value = {}", sig10(v));
            Ok(0)
        }
        EvalTarget::Ml => {
            let r = ml_eval(&params, args.z, args.tol).map_err(|e| e.to_string())?;
            println!("value = {}", sig10(r.value));
            print_series_meta(&r);
            Ok(if r.converged { 0 } else { 2 })
        }
        EvalTarget::Foxwright => {
            if args.upper.is_empty() && args.lower.is_empty() {
                return Err("foxwright needs at least one --upper or --lower pair".into());
            }
            let upper = args.upper.iter().map(|s| parse_pair(s)).collect::<Result<_, _>>()?;
            let lower = args.lower.iter().map(|s| parse_pair(s)).collect::<Result<_, _>>()?;
            let spec = FoxWrightSpec::new(upper, lower).map_err(|e| e.to_string())?;
            println!("margin = {}", spec.convergence_margin());
            let r = spec.eval(args.z, args.tol).map_err(|e| e.to_string())?;
            println!("value = {}", sig10(r.value));
            print_series_meta(&r);
            Ok(if r.converged { 0 } else { 2 })
        }
        EvalTarget::Deriv => {
            let spec = DerivSpec::new(args.sigma, args.eta, args.mu, args.nu, side_of(args.side))
                .map_err(|e| e.to_string())?;
            let r = frac_deriv_closed(&spec, &params, args.x, args.tol)
                .map_err(|e| e.to_string())?;
            print_deriv(&r, args.side);
            Ok(if r.series.converged { 0 } else { 2 })
        }
        EvalTarget::BetaImage => {
            let deriv = DerivSpec::new(args.sigma, args.eta, args.mu, args.nu, side_of(args.side))
                .map_err(|e| e.to_string())?;
            let spec =
                BetaImageSpec::new(deriv, params, args.l, args.m).map_err(|e| e.to_string())?;
            let r = beta_image_closed(&spec, args.x, args.tol).map_err(|e| e.to_string())?;
            print_deriv(&r, args.side);
            Ok(if r.series.converged { 0 } else { 2 })
        }
        EvalTarget::LaplaceImage => {
            let deriv = DerivSpec::new(args.sigma, args.eta, args.mu, args.nu, side_of(args.side))
                .map_err(|e| e.to_string())?;
            let spec =
                LaplaceImageSpec::with_compat(deriv, params, args.l, args.s, args.compat_th5_qk)
                    .map_err(|e| e.to_string())?;
            println!(
                "margin = {}",
                spec.fox_wright_spec().map_err(|e| e.to_string())?.convergence_margin()
            );
            let r = laplace_image_closed(&spec, args.x, args.tol).map_err(|e| e.to_string())?;
            print_deriv(&r, args.side);
            Ok(if r.series.converged { 0 } else { 2 })
        }
    }
}
