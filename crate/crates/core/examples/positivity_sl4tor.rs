// The character with highest monomial `Y[0,0] Y[2,4]` on the infinite
// line, folded onto four nodes: its dominant monomials, and what the
// generator says about the simple pieces.

use qchar::render::parse_monomial;
use qchar::{decompose_into_simples, fm_generate, fold_qcharacter, CartanDatum};

pub fn run_example() -> qchar::Result<()> {
    let top = parse_monomial("Y[0,0] Y[2,4]")?;
    let d = CartanDatum::Infinite;
    let chi = fm_generate(&d, &top, 8)?;
    let target = top.div(&d.a_monomial(0, 1)?).div(&d.a_monomial(-1, 2)?).div(&d.a_monomial(-2, 3)?);
    println!("{} terms to depth 8; {target} has multiplicity {}", chi.len(), chi.coeff(&target));

    let folded = fold_qcharacter(&chi, 3)?;
    for (m, c) in folded.dominant_monomials() {
        println!("dominant {c} x {m} at depth {}", folded.depth(&m)?);
    }

    // The simple module headed by Y[0,0] Y[2,4] has a second dominant
    // monomial, so generation stops.
    match decompose_into_simples(&folded, 8) {
        Ok(dec) => println!("components: {:?}", dec.components),
        Err(e) => println!("decomposition: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("positivity_sl4tor");
}
