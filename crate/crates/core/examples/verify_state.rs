//! Round-trips a representation and a state through their JSON files and
//! verifies one against the other, as the `verify` subcommand does.
use ti_mps::constructions::upper_shift_w;
use ti_mps::mps::{verify_with, AnyRep, RepFile, VerifyOptions};
use ti_mps::states::{w_state, TIState};

fn main() -> ti_mps::Result<()> {
    let dir = std::env::temp_dir();
    let n = 5;
    let rep_path = dir.join("w5_rep.json");
    let state_path = dir.join("w5_state.json");
    RepFile { n, rep: AnyRep::Exact(upper_shift_w(n)?) }.save(&rep_path)?;
    w_state(n, false)?.save(&state_path)?;

    let file = RepFile::load(&rep_path)?;
    let state = TIState::load(&state_path)?;
    let rep = match file.rep {
        AnyRep::Exact(r) => r.to_floating()?,
        AnyRep::Floating(r) => r,
    };
    let opts = VerifyOptions { relative: true, ..Default::default() };
    println!("{}", verify_with(&rep, &state, &opts)?);
    println!("{}", std::fs::read_to_string(&rep_path)?);
    Ok(())
}
