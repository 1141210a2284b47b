// Folding the fundamental module at node 0 onto the cyclic diagram with
// four nodes, and reading off its weight spaces.

use qchar::render::{render_latex, render_text, root_content_text};
use qchar::{fold_qcharacter, kr_qcharacter, KrDescriptor, KrMode};

pub fn run_example() -> qchar::Result<()> {
    let chi = kr_qcharacter(KrDescriptor::new(0, 1), KrMode::Depth(4))?;
    let folded = fold_qcharacter(&chi, 3)?;
    println!("{}\n", render_text(&folded)?);
    println!("{}\n", render_latex(&folded)?);

    let top = folded.highest().expect("highest").clone();
    for (rc, mult) in folded.weight_multiplicities()? {
        println!("{mult:>3}  {}", root_content_text(&top, &rc));
    }
    println!("dominant: {:?}", folded.dominant_monomials());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fold_toroidal");
}
