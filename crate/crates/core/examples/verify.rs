// Ring-membership checks: a KR character passes at every node, a
// tampered one fails with a witness.

use qchar::{fold_qcharacter, kr_qcharacter, verify_characterization, verify_ki, KrDescriptor, KrMode};

pub fn run_example() -> qchar::Result<()> {
    let desc = KrDescriptor::new(1, 2);
    let chi = kr_qcharacter(desc, KrMode::Window(2))?;
    for node in chi.cartan().nodes().expect("finite window") {
        println!("node {node}: {}", verify_ki(&chi, node, None)?.label());
    }

    let folded = fold_qcharacter(&kr_qcharacter(desc, KrMode::Depth(6))?, 2)?;
    let top = folded.highest().expect("highest").clone();
    let v = verify_characterization(&folded, &top, Some(6 - 4))?;
    println!("folded onto 3 nodes, frontier 2: {}", v.label());

    // A second dominant monomial below the highest one.
    let mut broken = chi.clone();
    let extra = desc.highest_monomial().div(&chi.cartan().a_monomial(1, 1)?);
    broken.add_term(extra.clone(), 1)?;
    println!("with {extra} added: {:?}", verify_characterization(&broken, &desc.highest_monomial(), None)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify");
}
