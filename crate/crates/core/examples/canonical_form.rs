//! Rewrites a unit representation in the n×n canonical form and confirms
//! both give the same state.
use ti_mps::constructions::{canonicalize, UnitRepSpec};
use ti_mps::mps::{verify, AnyRep, Matrix};
use ti_mps::scalars::GaussianRational;

fn main() -> ti_mps::Result<()> {
    let g = GaussianRational::from_int;
    let a0 = Matrix::from_rows(vec![vec![g(1), g(1), g(0)], vec![g(0), g(0), g(1)], vec![g(1), g(0), g(-1)]])?;
    let spec = UnitRepSpec::new(a0, g(2), 0, 2)?;
    let n = 5;
    let state = spec.to_rep().to_state(n, 24)?;
    let c = canonicalize(&spec, n)?;
    println!("gamma = {:?}", c.params.gamma);
    println!("omega^n = {}, omega = {:.6}", c.params.omega_pow_n, c.params.omega);
    let rep = match &c.rep {
        AnyRep::Exact(r) => {
            println!("exact canonical form");
            r.to_floating()?
        }
        AnyRep::Floating(r) => {
            println!("floating canonical form");
            r.clone()
        }
    };
    println!("{}", verify(&rep, &state, 1e-9)?);
    Ok(())
}
