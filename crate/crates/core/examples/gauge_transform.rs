//! A representation conjugated by an invertible matrix gives the same state.
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ti_mps::constructions::upper_shift_w;
use ti_mps::mps::{conjugate_rep, verify, Matrix, DEFAULT_CONDITION_CAP};
use ti_mps::scalars::ComplexF;
use ti_mps::states::w_state;

fn main() -> ti_mps::Result<()> {
    let n = 7;
    let rep = upper_shift_w(n)?.to_floating()?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let d = rep.d();
    let s = Matrix::from_fn(d, |i, j| {
        let z = ComplexF::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if i == j { z + ComplexF::new(2.0 * d as f64, 0.0) } else { z }
    });
    let (_, cond) = s.inverse_with_condition()?;
    let conj = conjugate_rep(&rep, &s, DEFAULT_CONDITION_CAP)?;
    println!("condition number {cond:.2}");
    println!("original:   {}", verify(&rep, &w_state(n, false)?, 1e-9)?);
    println!("conjugated: {}", verify(&conj, &w_state(n, false)?, 1e-9)?);
    Ok(())
}
