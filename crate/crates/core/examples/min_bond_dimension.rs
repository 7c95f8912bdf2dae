//! Minimal bond dimension of small W states and of a product state.
//! Pass `n` as the first argument to pick a single W state.
use ti_mps::mindim::{min_bond_dimension, MinDimOptions};
use ti_mps::states::{w_state, TIState, Necklace};
use ti_mps::scalars::GaussianRational;

fn main() -> ti_mps::Result<()> {
    let opts = MinDimOptions::default();
    let ns: Vec<usize> = match std::env::args().nth(1) {
        Some(a) => vec![a.parse().expect("n must be an integer")],
        None => vec![2, 3, 4],
    };
    for n in ns {
        let report = min_bond_dimension(&w_state(n, false)?, n / 2 + 1, &opts)?;
        for r in &report.per_d {
            println!("W{n} d = {}: {} ({} equations, {:.2}s)", r.d, r.verdict, r.equations, r.seconds);
        }
        println!("W{n}: minimal d = {:?}", report.resolved);
    }

    // |+>^4 up to normalization: every string has coefficient 1.
    let plus = TIState::from_pairs(4, ti_mps::states::enumerate_necklaces(4)?.into_iter().map(|k: Necklace| (k, GaussianRational::from_int(1))))?;
    println!("product state: minimal d = {:?}", min_bond_dimension(&plus, 2, &opts)?.resolved);
    Ok(())
}
