//! Finds a RoCK core and evaluates the pairing against f(ω_d) three ways.
//!
//! cargo run --release --example rock_dimensions -- 2 2

use shapovalov::barcore::find_rock_cores;
use shapovalov::symfunc::{build_pi_omega, closed_formula, theorem_inner_with};
use shapovalov::verify::{colored_compositions, fock_side};
use shapovalov::GlobalParams;

fn main() -> shapovalov::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ell: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(2);
    let d: u32 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let params = GlobalParams::new(ell)?;

    let rho = find_rock_cores(d, &params, 100)
        .into_iter()
        .next()
        .expect("a RoCK core below the size bound");
    println!("ell = {ell}, d = {d}, RoCK core ({rho})");
    let pi_omega = build_pi_omega(d, &params)?;
    for cc in colored_compositions(d, 3, &params) {
        let fock = fock_side(&rho, d, &cc, &params)?;
        let sym = theorem_inner_with(&cc, &pi_omega, &params)?;
        let formula = closed_formula(&cc, &params);
        println!("{:>12}  fock {fock:>6}  sym {sym:>6}  formula {formula:>6}", cc.to_string());
    }
    Ok(())
}
