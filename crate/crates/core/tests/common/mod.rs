#![allow(dead_code)]

pub mod oracle;

use std::collections::BTreeMap;

use shapovalov::partitions::{partitions, strict_partitions};
use shapovalov::symfunc::{mult_pieri_e, mult_pieri_h, mult_pieri_q, SymElement};
use shapovalov::{GlobalParams, Multipartition, Partition};

use oracle::{e_poly, h_poly, multiply, q_poly, Basis};

#[derive(Clone, Copy, Debug)]
pub enum PieriKind {
    H,
    E,
    Q,
}

fn engine(kind: PieriKind, alpha: &Partition, r: u32, params: &GlobalParams) -> BTreeMap<Vec<u32>, i64> {
    let comp = match kind {
        PieriKind::Q => 0,
        _ => 1,
    };
    let start = Multipartition::empty(params).with_component(comp, alpha.clone());
    let v = SymElement::basis(start);
    let w = match kind {
        PieriKind::H => mult_pieri_h(&v, comp, r, params).expect("valid component"),
        PieriKind::E => mult_pieri_e(&v, comp, r, params).expect("valid component"),
        PieriKind::Q => mult_pieri_q(&v, r),
    };
    w.terms()
        .map(|(k, c)| {
            assert!(c.is_integer(), "non-integer Pieri coefficient {c}");
            let c: i64 = c.to_integer().try_into().expect("small coefficient");
            (k.component(comp).parts().to_vec(), c)
        })
        .collect()
}

/// Compares one Pieri engine against the polynomial oracle on every shape
/// of size `<= max_size` (strict shapes for `q_r`) and `r <= max_r`.
pub fn pieri_against_oracle(kind: PieriKind, max_size: u32, max_r: u32) -> Result<usize, String> {
    let params = GlobalParams::new(1).expect("rank 1");
    let mut count = 0;
    for n in 0..=max_size {
        let shapes = match kind {
            PieriKind::Q => strict_partitions(n),
            _ => partitions(n),
        };
        for alpha in shapes {
            for r in 0..=max_r {
                let (basis, factor) = match kind {
                    PieriKind::H => (Basis::Schur, h_poly(r)),
                    PieriKind::E => (Basis::Schur, e_poly(r)),
                    PieriKind::Q => (Basis::SchurP, q_poly(r)),
                };
                let expected = multiply(basis, alpha.parts(), &factor, r);
                let got = engine(kind, &alpha, r, &params);
                if got != expected {
                    return Err(format!("{kind:?}: shape {alpha}, r = {r}: engine {got:?}, oracle {expected:?}"));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}
