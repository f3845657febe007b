//! Pieri products in the tensor ring and the elements Π attached to colored
//! compositions.
//!
//! cargo run --example schur_pieri

use shapovalov::symfunc::{build_pi, mult_pieri_e, mult_pieri_h, mult_pieri_q, sym_inner, SymElement};
use shapovalov::{ColoredComposition, GlobalParams, Multipartition};

fn main() -> shapovalov::Result<()> {
    let params = GlobalParams::new(2)?;
    let start: Multipartition = "2,1|1|".parse()?;
    let v = SymElement::basis(start.clone());
    println!("q_2 · π[{start}] = {}", mult_pieri_q(&v, 2));
    println!("h_2 · π[{start}] (component 1) = {}", mult_pieri_h(&v, 1, 2, &params)?);
    println!("e_2 · π[{start}] (component 2) = {}", mult_pieri_e(&v, 2, 2, &params)?);

    for text in ["2/0", "2/1", "1,1/0,1"] {
        let cc = ColoredComposition::parse(text, &params)?;
        let pi = build_pi(&cc, &params)?;
        println!("\nΠ({cc}) has {} terms; (Π, Π) = {}", pi.len(), sym_inner(&pi, &pi));
        println!("  {pi}");
    }
    Ok(())
}
