//! Bar-core, bar-weight and bar-quotient, and the inverse map.
//!
//! cargo run --example bar_core_quotient -- 16,11,10,10,9,4,1 5

use shapovalov::barcore::{core_quotient, from_core_quotient};
use shapovalov::{GlobalParams, Partition};

fn main() -> shapovalov::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lambda: Partition = args.first().map(String::as_str).unwrap_or("16,11,10,10,9,4,1").parse()?;
    let p: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let params = GlobalParams::new((p - 1) / 2)?;

    let data = core_quotient(&lambda, &params)?;
    println!("lambda   = ({lambda})");
    println!("core     = ({})", data.core);
    println!("weight   = {}", data.weight);
    println!("quotient = {}", data.quotient);
    let back = from_core_quotient(&data.core, &data.quotient, &params)?;
    println!("rebuilt  = ({back})");
    assert_eq!(back, lambda);
    Ok(())
}
