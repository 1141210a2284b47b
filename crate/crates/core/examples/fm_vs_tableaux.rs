// Two independent routes to the same character: tableau sums and
// generation from the unique-dominant-monomial characterization.

use qchar::{fm_generate, kr_qcharacter, KrDescriptor, KrMode};

pub fn run_example() -> qchar::Result<()> {
    for (i, k, n) in [(0, 1, 1), (0, 2, 1), (-1, 3, 2), (2, 2, 3)] {
        let desc = KrDescriptor::new(i, k);
        let tableaux = kr_qcharacter(desc, KrMode::Window(n))?;
        let full_depth = (n + 1) * (n + 1) * k as i64;
        let generated = fm_generate(&tableaux.cartan(), &desc.highest_monomial(), full_depth)?;
        println!(
            "i={i:>2} k={k} n={n}: {:>5} tableau terms, {:>5} generated, equal: {}",
            tableaux.len(),
            generated.len(),
            tableaux.terms() == generated.terms()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("fm_vs_tableaux");
}
