//! Residues, addable and removable nodes, and their quantum coefficients.
//!
//! cargo run --example partition_nodes -- 5,5,2 2

use shapovalov::partitions::{addable_removable, node_coeff_addable, node_coeff_removable};
use shapovalov::{GlobalParams, Partition};

fn main() -> shapovalov::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lambda: Partition = args.first().map(String::as_str).unwrap_or("5,5,2").parse()?;
    let ell: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let params = GlobalParams::new(ell)?;
    lambda.check_p_strict(params.p)?;

    let stats = lambda.stats(&params);
    println!("lambda = ({lambda}), p = {}", params.p);
    println!("content = {:?}, h_p = {}, parity = {}", lambda.content(&params), stats.h_p, stats.parity);
    for i in params.i_set() {
        let s = addable_removable(&lambda, i, &params);
        for b in &s.proper_addable {
            let c = node_coeff_addable(&lambda, *b, i, &params)?;
            println!("  residue {i}: add    {b}  eta = {:>2}  coefficient {}", c.eta, c.value);
        }
        for a in &s.proper_removable {
            let c = node_coeff_removable(&lambda, *a, i, &params)?;
            println!("  residue {i}: remove {a}  eta = {:>2}  coefficient {}", c.eta, c.value);
        }
    }
    Ok(())
}
