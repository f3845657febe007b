//! Addable and removable nodes of p-strict partitions and their quantum
//! coefficients.

use super::{one_minus_neg_q2, residue, Node, Partition};
use crate::arith::{q_i_exponent, LaurentPoly};
use crate::error::{Error, Result};
use crate::params::GlobalParams;

/// The four node sets attached to a p-strict partition and a residue `i`,
/// each sorted by column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodeSets {
    /// All `i`-addable nodes, proper or not.
    pub addable: Vec<Node>,
    /// All `i`-removable nodes, proper or not.
    pub removable: Vec<Node>,
    pub proper_addable: Vec<Node>,
    pub proper_removable: Vec<Node>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeCoefficient {
    pub eta: i64,
    pub zeta: LaurentPoly,
    /// `q_i^eta * zeta`
    pub value: LaurentPoly,
}

pub fn addable_removable(lambda: &Partition, i: usize, params: &GlobalParams) -> NodeSets {
    let p = params.p;
    let res = |n: Node| residue(n.col, params);
    let strict_ok = |l: &Option<Partition>| l.as_ref().is_some_and(|l| l.is_p_strict(p));
    let mut sets = NodeSets::default();

    for r in 1..=lambda.len() as u32 + 1 {
        let b = Node::new(r, lambda.part(r as usize) + 1);
        if res(b) == i && strict_ok(&lambda.add_node(b)) {
            sets.proper_addable.push(b);
            sets.addable.push(b);
        }
        // The pair (a, b) with a directly left of b, both outside λ.
        let a = b;
        let b = Node::new(r, a.col + 1);
        if res(a) != i || res(b) != i {
            continue;
        }
        let with_a = lambda.add_node(a);
        if !strict_ok(&with_a) {
            continue;
        }
        let with_ab = with_a.and_then(|l| l.add_node(b));
        if strict_ok(&with_ab) {
            sets.addable.push(b);
        }
    }

    for r in 1..=lambda.len() as u32 {
        let a = Node::new(r, lambda.part(r as usize));
        if res(a) == i && strict_ok(&lambda.remove_node(a)) {
            sets.proper_removable.push(a);
            sets.removable.push(a);
        }
        // The pair (a, b) with b directly right of a, both inside λ.
        let b = a;
        if b.col < 2 {
            continue;
        }
        let a = Node::new(r, b.col - 1);
        if res(a) != i || res(b) != i {
            continue;
        }
        let without_b = lambda.remove_node(b);
        if !strict_ok(&without_b) {
            continue;
        }
        let without_ab = without_b.and_then(|l| l.remove_node(a));
        if strict_ok(&without_ab) {
            sets.removable.push(a);
        }
    }

    for v in [
        &mut sets.addable,
        &mut sets.removable,
        &mut sets.proper_addable,
        &mut sets.proper_removable,
    ] {
        v.sort_by_key(|n| n.col);
    }
    sets
}

fn check_distinct_columns(nodes: &[Node]) -> Result<()> {
    if nodes.windows(2).any(|w| w[0].col == w[1].col) {
        return Err(Error::Invariant(format!(
            "two counted nodes share a column: {nodes:?}"
        )));
    }
    Ok(())
}

fn multiplicity(lambda: &Partition, l: u32) -> u32 {
    lambda.parts().iter().filter(|&&x| x == l).count() as u32
}

fn finish(eta: i64, zeta: LaurentPoly, i: usize, params: &GlobalParams) -> NodeCoefficient {
    let value = zeta.shift(q_i_exponent(i, params) * eta);
    NodeCoefficient { eta, zeta, value }
}

/// `d^B(λ)` for a properly `i`-addable node `B`.
pub fn node_coeff_addable(
    lambda: &Partition,
    b: Node,
    i: usize,
    params: &GlobalParams,
) -> Result<NodeCoefficient> {
    let sets = addable_removable(lambda, i, params);
    if !sets.proper_addable.contains(&b) {
        return Err(Error::NodeNotAvailable {
            row: b.row,
            col: b.col,
        });
    }
    check_distinct_columns(&sets.addable)?;
    check_distinct_columns(&sets.removable)?;
    let left = |v: &[Node]| v.iter().filter(|c| c.col < b.col).count() as i64;
    let eta = left(&sets.addable) - left(&sets.removable);
    let l = b.col - 1;
    let zeta = if l > 0 && l.is_multiple_of(params.p) {
        one_minus_neg_q2(multiplicity(lambda, l))
    } else {
        LaurentPoly::one()
    };
    Ok(finish(eta, zeta, i, params))
}

/// `d_A(λ)` for a properly `i`-removable node `A`.
pub fn node_coeff_removable(
    lambda: &Partition,
    a: Node,
    i: usize,
    params: &GlobalParams,
) -> Result<NodeCoefficient> {
    let sets = addable_removable(lambda, i, params);
    if !sets.proper_removable.contains(&a) {
        return Err(Error::NodeNotAvailable {
            row: a.row,
            col: a.col,
        });
    }
    check_distinct_columns(&sets.addable)?;
    check_distinct_columns(&sets.removable)?;
    let right = |v: &[Node]| v.iter().filter(|c| c.col > a.col).count() as i64;
    let eta = right(&sets.removable) - right(&sets.addable);
    let zeta = if a.col.is_multiple_of(params.p) {
        one_minus_neg_q2(multiplicity(lambda, a.col))
    } else {
        LaurentPoly::one()
    };
    Ok(finish(eta, zeta, i, params))
}
