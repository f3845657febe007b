//! Weyl words, their exponent sequences and the extremal vectors they reach.
//!
//! cargo run --example weyl_extremal -- 2 4

use shapovalov::weyl::{all_words, core_from_word, exponents, extremal_monomial, lambda0_minus_w_lambda0};
use shapovalov::GlobalParams;

fn main() -> shapovalov::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ell: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(2);
    let max_len: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let params = GlobalParams::new(ell)?;

    for len in 0..=max_len {
        for w in all_words(len, &params) {
            let ex = exponents(&w, &params);
            if !ex.admissible {
                continue;
            }
            let mono = extremal_monomial(&w, &params)?;
            let rho = core_from_word(&w, &params)?;
            println!(
                "w = [{w}]  a = {:?}  {mono}  ->  u_({rho})  Λ0 - wΛ0 = {:?}",
                ex.a,
                lambda0_minus_w_lambda0(&w, &params)
            );
        }
    }
    Ok(())
}
