// Weight multiplicities of folded KR characters at `k L_i - t (a_0 + ... + a_n)`,
// with `t = 1` for odd `n` and `t = 2` for even `n`.

use qchar::{fold_qcharacter, kr_qcharacter, KrDescriptor, KrMode, RootContent};

pub fn run_example() -> qchar::Result<()> {
    for n in 1..=5i64 {
        let t = if n % 2 == 1 { 1 } else { 2 };
        for k in 1..=3u32 {
            let chi = kr_qcharacter(KrDescriptor::new(0, k), KrMode::Depth(t * (n + 1)))?;
            let folded = fold_qcharacter(&chi, n)?;
            let key: RootContent = (0..=n).map(|j| (j, t)).collect();
            let mult = folded.weight_multiplicities()?.get(&key).copied().unwrap_or(0);
            println!("n={n} k={k} t={t}: {mult}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("null_root_dimensions");
}
