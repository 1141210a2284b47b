// Tableau-sum characters of KR modules, on a finite window and truncated
// by depth on the infinite line.

use qchar::render::render_text;
use qchar::{enumerate_window, kr_qcharacter, KrDescriptor, KrMode};

pub fn run_example() -> qchar::Result<()> {
    let desc = KrDescriptor::new(0, 2);
    for t in enumerate_window(desc, 1).iter().take(3) {
        println!("{t}-> {}\n", t.monomial());
    }

    let window = kr_qcharacter(desc, KrMode::Window(1))?;
    println!("W(0,2) on {}: {} monomials", window.cartan(), window.len());
    println!("{}", render_text(&window)?);

    let deep = kr_qcharacter(KrDescriptor::new(0, 1), KrMode::Depth(3))?;
    println!("\nW(0,1) to depth 3 on {}:", deep.cartan());
    for (m, c, depth) in deep.sorted_terms()? {
        println!("  depth {}  {c} x {m}", depth.unwrap_or_default());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("kr_window");
}
