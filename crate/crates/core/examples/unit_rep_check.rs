//! Checks whether a state is represented by a pair with `A_1` a single
//! matrix unit, using only the equations on sparse classes.
use ti_mps::constructions::{check_unit_rep, upper_shift_w, UnitRepSpec};
use ti_mps::scalars::{GaussianRational, Ring};
use ti_mps::states::w_state;

fn main() -> ti_mps::Result<()> {
    let n = 6;
    let rep = upper_shift_w(n)?;
    let spec = UnitRepSpec::from_rep(&rep)?;
    let state = w_state(n, false)?;
    let report = check_unit_rep(&spec, &state)?;
    println!("{report}");

    // Doubling lambda breaks the weight-one equation; the others are 0 = 0.
    let doubled = UnitRepSpec::new(spec.a0.clone(), spec.lambda.mul_ref(&GaussianRational::from_int(2)), spec.j, spec.k)?;
    let report = check_unit_rep(&doubled, &state)?;
    println!("after doubling lambda: {} violated", report.violated_equations().count());
    Ok(())
}
