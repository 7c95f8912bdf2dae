//! Lists necklace classes and compares the enumeration with the closed-form count.
use ti_mps::states::{enumerate_necklaces, orbit_size, polya_count};

fn main() -> ti_mps::Result<()> {
    let classes = enumerate_necklaces(6)?;
    for k in &classes {
        println!("{k}  orbit {}", orbit_size(k));
    }
    for n in 1..=20 {
        println!("n = {n:2}: {} classes", polya_count(n));
    }
    Ok(())
}
