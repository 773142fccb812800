use std::collections::BTreeMap;

use serde::Serialize;

use super::{Bicomplex, BicomplexKind, Engine};
use crate::error::Result;
use crate::linalg::{induced_rank, SparseMatrix};

/// Exactness data at one position of the long exact sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SbiNode {
    pub node: String,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SbiAudit {
    pub nodes: Vec<SbiNode>,
    /// Ranks of the induced maps `I_n: HH_n → HC_n`, `S_n: HC_n → HC_{n−2}`
    /// and `B_n: HC_n → HH_{n+1}`.
    pub maps: BTreeMap<String, usize>,
    pub exact: bool,
}

/// Exactness of `… → HH_n →I HC_n →S HC_{n−2} →B HH_{n−1} → …` at every
/// node of degree at most `max_n`, on the `(b,B)` total complex. `I` is the
/// inclusion of the top summand, `S` drops it and the connecting map sends
/// a cycle `y` to `B y_top`. Exactness is the rank identity
/// `rank(incoming) + rank(outgoing) = dim`.
pub fn sbi_audit(eng: &Engine, max_n: usize) -> Result<SbiAudit> {
    let tot = Bicomplex::new(eng, BicomplexKind::BB);
    let field = eng.field();
    let hh = |n: usize| -> Result<usize> { Ok(eng.dim(n)? - eng.rank_b(n)? - eng.rank_b(n + 1)?) };
    let mut maps = BTreeMap::new();
    for n in 0..=max_n {
        let i = induced_rank(&*eng.b(n)?, &tot.inclusion(n)?, &tot.differential(n + 1)?);
        maps.insert(format!("I_{n}"), i);
        let s = if n >= 2 { induced_rank(&tot.differential(n)?, &tot.truncation(n)?, &tot.differential(n - 1)?) } else { 0 };
        maps.insert(format!("S_{n}"), s);
        if n < max_n {
            let blocks: Vec<usize> = tot.blocks(n).into_iter().map(|q| eng.dim(q)).collect::<Result<_>>()?;
            let top = eng.connes_b(n)?;
            let parts: Vec<Option<&SparseMatrix>> = (0..blocks.len()).map(|k| if k == 0 { Some(&*top) } else { None }).collect();
            let connecting = SparseMatrix::block(&[top.rows], &blocks, field, &[parts]);
            maps.insert(format!("B_{n}"), induced_rank(&tot.differential(n)?, &connecting, &*eng.b(n + 2)?));
        }
    }
    let get = |k: String| maps.get(&k).copied().unwrap_or(0);
    let mut nodes = Vec::new();
    for n in 0..=max_n {
        let prev = if n >= 1 { get(format!("B_{}", n - 1)) } else { 0 };
        nodes.push(node(format!("HH_{n}"), hh(n)?, prev, get(format!("I_{n}"))));
        nodes.push(node(format!("HC_{n}"), tot.homology_dim(n)?, get(format!("I_{n}")), get(format!("S_{n}"))));
        if n >= 2 {
            nodes.push(node(format!("HC_{} after S_{n}", n - 2), tot.homology_dim(n - 2)?, get(format!("S_{n}")), get(format!("B_{}", n - 2))));
        }
    }
    let exact = nodes.iter().all(|x| x.exact);
    Ok(SbiAudit { nodes, maps, exact })
}

fn node(name: String, dim: usize, rank_in: usize, rank_out: usize) -> SbiNode {
    SbiNode { node: name, dim, rank_in, rank_out, exact: rank_in + rank_out == dim }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_algebra, truncated_poly};
    use crate::scalar::FieldSpec;

    #[test]
    fn exact_on_small_algebras() {
        let q = matrix_algebra(FieldSpec::Rationals, 1).unwrap();
        assert!(sbi_audit(&Engine::new(&q), 4).unwrap().exact);
        let dual = truncated_poly(FieldSpec::Rationals, 2).unwrap();
        let audit = sbi_audit(&Engine::new(&dual), 3).unwrap();
        assert!(audit.exact, "{:?}", audit.nodes);
        assert_eq!(audit.maps["B_0"], 1);
    }
}
