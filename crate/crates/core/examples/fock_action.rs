//! The quantum Fock space action, its form, and the reduced space at q = 1.
//!
//! cargo run --example fock_action

use shapovalov::fock::{q_apply_e, q_apply_f, q_form, r_apply_f, r_form, specialize, QFockVector, RFockVector};
use shapovalov::{GlobalParams, Partition};

fn main() -> shapovalov::Result<()> {
    let params = GlobalParams::new(2)?;
    let lambda: Partition = "5,5,2".parse()?;

    let v = q_apply_f(0, &QFockVector::basis(lambda.clone()), &params);
    println!("F_0 u_({lambda}) = {v}");
    println!("E_0 F_0 u_({lambda}) = {}", q_apply_e(0, &v, &params));
    println!("(F_0 u, F_0 u)_q = {}", q_form(&v, &v, &params));

    let word = [0usize, 1, 0, 2, 1, 0];
    let mut q = QFockVector::basis(Partition::empty());
    let mut r = RFockVector::basis(Partition::empty());
    for &i in word.iter().rev() {
        q = q_apply_f(i, &q, &params);
        r = r_apply_f(i, &r, &params);
    }
    println!("\nF-word {word:?} on the vacuum:");
    println!("  quantum: {q}");
    println!("  reduced: {r}");
    println!("  specialized quantum vector equals reduced: {}", specialize(&q) == r);
    println!("  form at q = 1: {} vs reduced {}", q_form(&q, &q, &params).eval_q1(), r_form(&r, &r, &params));
    Ok(())
}
