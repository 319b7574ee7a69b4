//! Build a linear code by spectral descent and write its parity-check file.
//!
//!     cargo run --example construct -- 2 15 5 /tmp/code.pchk

use gv_spectral::descent::run_algorithm1;
use gv_spectral::math::GraphParams;
use gv_spectral::pchk;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (q, n, d) = match &args[..] {
        [q, n, d, ..] => (q.parse()?, n.parse()?, d.parse()?),
        _ => (2, 15, 5),
    };
    let params = GraphParams::new(q, n, d)?;
    let trace = run_algorithm1(&params)?;
    let code = trace.code()?;
    println!(
        "[{}, {}] code over F_{} from {} parity rows",
        n,
        code.dimension(),
        q,
        code.s()
    );

    let text = pchk::to_string(&code);
    match args.get(3) {
        Some(path) => {
            pchk::write(path.as_ref(), &code)?;
            println!("wrote {path}");
        }
        None => print!("{text}"),
    }
    Ok(())
}
