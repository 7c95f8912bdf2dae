//! Builds the bond-dimension `⌊n/2⌋+1` representation of the W state,
//! checks it against the exact state and rescales it to unit norm.
use ti_mps::constructions::{build_w, normalize_w};
use ti_mps::mps::verify;
use ti_mps::scalars::{GaussianRational, Ring};
use ti_mps::states::{w_state, Necklace};

fn main() -> ti_mps::Result<()> {
    for n in 2..=9 {
        let w = build_w(n)?;
        // The raw construction gives const·W; compare with that scaled state.
        let c = w.constant_exact.clone().unwrap_or_else(GaussianRational::one);
        let target = ti_mps::states::scale_state(&w_state(n, false)?, &c);
        let raw = verify(&w.rep, &target, 1e-9)?;
        let scaled = normalize_w(&w);
        let one = scaled.eval_coefficient(&Necklace::single_one(n));
        let zero = scaled.eval_coefficient(&Necklace::zeros(n));
        println!(
            "n = {n}: d = {}, x = {:.6}, const = {:.3}, {raw}; normalized 1-weight {:.6} (1/sqrt(n) = {:.6}), |00..0| {:.1e}",
            w.d,
            w.x.re,
            w.constant.re,
            one.re,
            1.0 / (n as f64).sqrt(),
            zero.norm()
        );
    }
    Ok(())
}
