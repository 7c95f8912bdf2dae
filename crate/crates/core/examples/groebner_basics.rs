//! Reduced Gröbner bases of two small systems, one consistent and one not.
use ti_mps::polynomials::{buchberger_with_stats, contains_one, GroebnerConfig, Monomial, MonomialOrder, MultiPoly};
use ti_mps::scalars::GaussianRational;

fn poly(terms: &[(&[u16], i64)]) -> MultiPoly {
    MultiPoly::from_terms(2, terms.iter().map(|(e, c)| (Monomial::new(e), GaussianRational::from_int(*c)))).unwrap()
}

fn main() -> ti_mps::Result<()> {
    // x^2 + y^2 - 1 and x - y: two points.
    let circle = poly(&[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -1)]);
    let line = poly(&[(&[1, 0], 1), (&[0, 1], -1)]);
    // x*y - 1 and x: no common zero.
    let hyperbola = poly(&[(&[1, 1], 1), (&[0, 0], -1)]);
    let axis = poly(&[(&[1, 0], 1)]);

    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let cfg = GroebnerConfig { order, ..Default::default() };
        for gens in [vec![circle.clone(), line.clone()], vec![hyperbola.clone(), axis.clone()]] {
            let (gb, stats) = buchberger_with_stats(&gens, &cfg)?;
            let shown: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
            println!("{order:?}: [{}] consistent = {} ({stats:?})", shown.join(", "), !contains_one(&gb));
        }
    }
    Ok(())
}
