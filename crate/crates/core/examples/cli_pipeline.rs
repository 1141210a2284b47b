// Driving the command-line front end in-process, the way a shell
// pipeline `kr | fold | verify` would.

use qchar::cli::run;

fn stage(args: &[&str], input: &str) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("qchar").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    if !err.is_empty() {
        eprint!("{}", String::from_utf8_lossy(&err));
    }
    (code, String::from_utf8(out).expect("utf8"))
}

pub fn run_example() -> qchar::Result<()> {
    let (_, kr) = stage(&["kr", "--infinite", "--i", "0", "--k", "1", "--depth", "4"], "");
    let (_, folded) = stage(&["fold", "--n", "3"], &kr);
    let (_, doms) = stage(&["dominants", "--format", "text"], &folded);
    print!("dominants: {doms}");
    let (code, verdict) = stage(&["verify", "--frontier", "2", "--format", "text"], &folded);
    print!("verify (exit {code}): {verdict}");
    let (_, weights) = stage(&["weights", "--format", "text"], &folded);
    print!("{weights}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli_pipeline");
}
