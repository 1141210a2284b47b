// Splitting the node-i part of a monomial into q-strings in general
// position and expanding it as an element of the rank-one ring.

use std::collections::BTreeMap;

use qchar::render::render_text;
use qchar::{i_expansion, string_decompose, CartanDatum, Monomial};

pub fn run_example() -> qchar::Result<()> {
    let part: BTreeMap<i64, i64> = [(0, 2), (2, 1), (4, 1), (1, 1)].into_iter().collect();
    for q in string_decompose(&part) {
        println!("string from {} of length {}", q.start, q.length);
    }

    let m = Monomial::from_factors([(0, 0, 1), (0, 2, 1), (1, 1, -1)]);
    let e = i_expansion(&CartanDatum::Infinite, 0, &m)?;
    println!("E_0({m}) = {}", render_text(&e)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("string_decomposition");
}
