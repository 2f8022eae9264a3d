//! Closed-form minimum wirelength of `K_{2^(n-p),...,2^(n-p)}` in the four
//! host families.
//!
//! Each total is a sum of minimum cut congestions over the cut family of
//! the host. Per-cut values are exposed so callers can compare them cut by
//! cut with the embedding engine.

use crate::error::{Error, Result};
use crate::graph::check_guest_params;
use crate::isoperimetric::max_subgraph_edges_closed_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FormulaParams {
    pub n: u32,
    pub p: u32,
    pub n1: u32,
}

impl FormulaParams {
    pub fn new(n: u32, p: u32, n1: u32) -> Result<Self> {
        check_guest_params(n, p)?;
        if n1 < 1 || n1 > n {
            return Err(Error::invalid(format!("need 1 <= n1 <= n, got n1 = {n1}, n = {n}")));
        }
        Ok(FormulaParams { n, p, n1 })
    }

    /// Number of rooted subtrees, `2^(n - n1)`.
    pub fn k(&self) -> u64 {
        1 << (self.n - self.n1)
    }

    fn degree(&self) -> i128 {
        pow2(self.n - self.p) * (pow2(self.p) - 1)
    }
}

fn pow2(e: u32) -> i128 {
    1i128 << e
}

/// Minimum congestion of a cut that separates `2^j - 1` consecutive labels.
pub fn ec_subtree_cut(n: u32, p: u32, j: u32) -> Result<u64> {
    check_guest_params(n, p)?;
    if j < 1 || j > n {
        return Err(Error::invalid(format!("need 1 <= j <= n, got j = {j}")));
    }
    to_u64(subtree_cut(n, p, j))
}

fn subtree_cut(n: u32, p: u32, j: u32) -> i128 {
    let deg = pow2(n - p) * (pow2(p) - 1);
    if j <= p {
        (pow2(j) - 1) * (deg - (pow2(j) - 2))
    } else {
        (pow2(p) - 1) * (pow2(n - p) * (pow2(j) - 1) - pow2(j - p) * (pow2(j) - 2))
    }
}

/// Minimum congestion of a sibling-pair cut separating `2(2^j - 1)`
/// consecutive labels.
pub fn ec_sibling_pair_cut(n: u32, p: u32, j: u32) -> Result<u64> {
    check_guest_params(n, p)?;
    if j < 1 || j >= n {
        return Err(Error::invalid(format!("need 1 <= j < n, got j = {j}")));
    }
    to_u64(sibling_pair_cut(n, p, j))
}

fn sibling_pair_cut(n: u32, p: u32, j: u32) -> i128 {
    let deg = pow2(n - p) * (pow2(p) - 1);
    if j < p {
        (pow2(j + 1) - 2) * (deg - (pow2(j + 1) - 3))
    } else {
        (pow2(p) - 1) * (pow2(n - p) * (pow2(j + 1) - 2) - pow2(j + 2 - p) * (pow2(j) - 2)) - 2
    }
}

/// Minimum congestion of the root-chain edge after the first `i` blocks.
pub fn ec_root_cut(params: FormulaParams, i: u64) -> Result<u64> {
    if i < 1 || i >= params.k() {
        return Err(Error::invalid(format!("need 1 <= i < k = {}, got i = {i}", params.k())));
    }
    root_cut(params, i).and_then(to_u64)
}

fn root_cut(params: FormulaParams, i: u64) -> Result<i128> {
    let FormulaParams { n, p, n1 } = params;
    let side = i as i128 * pow2(n1);
    let parts = pow2(p);
    if side <= parts {
        return Ok(side * (params.degree() - side + 1));
    }
    if side % parts == 0 {
        return Ok(side / parts * (parts - 1) * (pow2(n) - side));
    }
    // Blocks smaller than a partite cycle: fall back to the boundary of an
    // optimal set of this size.
    let best = max_subgraph_edges_closed_form(
        parts as usize,
        pow2(n - p) as usize,
        side as usize,
    )? as i128;
    Ok(side * params.degree() - 2 * best)
}

/// Sum of the subtree cuts of one 1-rooted tree of height `n1`.
fn subtree_cut_total(params: FormulaParams) -> i128 {
    (1..=params.n1)
        .map(|j| pow2(params.n1 - j) * subtree_cut(params.n, params.p, j))
        .sum()
}

fn sibling_pair_cut_total(params: FormulaParams) -> i128 {
    (1..params.n1)
        .map(|j| pow2(params.n1 - j - 1) * sibling_pair_cut(params.n, params.p, j))
        .sum()
}

fn root_chain_total(params: FormulaParams) -> Result<i128> {
    (1..params.k()).map(|i| root_cut(params, i)).sum()
}

fn to_u64(value: i128) -> Result<u64> {
    u64::try_from(value)
        .map_err(|_| Error::Internal(format!("formula value {value} outside u64")))
}

fn halve(doubled: i128) -> Result<u64> {
    if doubled % 2 != 0 {
        return Err(Error::Internal(format!("doubled total {doubled} is odd")));
    }
    to_u64(doubled / 2)
}

/// 1-rooted complete binary tree `T_n^1`.
pub fn wl_formula_t1(n: u32, p: u32) -> Result<u64> {
    wl_formula_tk(n, n, p)
}

/// k-rooted complete binary tree `T_{n1}^k` with `k = 2^(n - n1)`.
pub fn wl_formula_tk(n: u32, n1: u32, p: u32) -> Result<u64> {
    let params = FormulaParams::new(n, p, n1)?;
    to_u64(params.k() as i128 * subtree_cut_total(params) + root_chain_total(params)?)
}

/// 1-rooted sibling tree `ST_n^1`.
pub fn wl_formula_st1(n: u32, p: u32) -> Result<u64> {
    let params = FormulaParams::new(n, p, n)?;
    // the pendant cut is counted a second time to cover every edge twice
    let doubled = subtree_cut_total(params) + sibling_pair_cut_total(params) + params.degree();
    halve(doubled)
}

/// k-rooted sibling tree `ST_{n1}^k` with `k = 2^(n - n1)`.
///
/// Every subtree contributes its subtree cuts, its sibling-pair cuts and a
/// second copy of its pendant cut; root-chain cuts are counted twice.
pub fn wl_formula_stk(n: u32, n1: u32, p: u32) -> Result<u64> {
    let params = FormulaParams::new(n, p, n1)?;
    let per_subtree = subtree_cut_total(params)
        + sibling_pair_cut_total(params)
        + subtree_cut(n, p, n1);
    halve(params.k() as i128 * per_subtree + 2 * root_chain_total(params)?)
}

/// Formula value for a host of the given kind.
pub fn wl_formula(n: u32, n1: u32, p: u32, sibling: bool) -> Result<u64> {
    if sibling {
        wl_formula_stk(n, n1, p)
    } else {
        wl_formula_tk(n, n1, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MAX_N;

    #[test]
    fn binary_spot_values() {
        assert_eq!(wl_formula_t1(2, 2).unwrap(), 9);
        assert_eq!(wl_formula_t1(3, 2).unwrap(), 54);
        assert_eq!(wl_formula_t1(3, 3).unwrap(), 65);
        assert_eq!(wl_formula_tk(3, 2, 2).unwrap(), 60);
        // T_1^4: four blocks of two vertices
        assert_eq!(wl_formula_tk(3, 1, 2).unwrap(), 4 * 6 + (10 + 12 + 10));
    }

    #[test]
    fn sibling_spot_values() {
        assert_eq!(wl_formula_st1(3, 2).unwrap(), 45);
        assert_eq!(wl_formula_st1(2, 2).unwrap(), 8);
        assert_eq!(wl_formula_stk(3, 2, 2).unwrap(), 58);
        assert_eq!(wl_formula_stk(3, 1, 2).unwrap(), wl_formula_tk(3, 1, 2).unwrap());
    }

    #[test]
    fn per_cut_values() {
        assert_eq!(ec_subtree_cut(3, 2, 2).unwrap(), 12);
        assert_eq!(ec_sibling_pair_cut(3, 2, 2).unwrap(), 10);
        assert_eq!(ec_sibling_pair_cut(3, 2, 1).unwrap(), 10);
        let params = FormulaParams::new(3, 2, 2).unwrap();
        assert_eq!(ec_root_cut(params, 1).unwrap(), 12);
        assert!(ec_root_cut(params, 2).is_err());
        assert!(ec_subtree_cut(3, 2, 4).is_err());
        assert!(ec_sibling_pair_cut(3, 2, 3).is_err());
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(wl_formula_t1(1, 1).is_err());
        assert!(wl_formula_t1(3, 4).is_err());
        assert!(wl_formula_tk(3, 0, 2).is_err());
        assert!(wl_formula_tk(3, 4, 2).is_err());
        assert!(wl_formula_stk(21, 3, 2).is_err());
    }

    #[test]
    fn subtree_cut_branches_meet_at_p() {
        for p in 2..=10u32 {
            for n in p..=MAX_N {
                let deg = pow2(n - p) * (pow2(p) - 1);
                let small = (pow2(p) - 1) * (deg - (pow2(p) - 2));
                let large = (pow2(p) - 1) * (pow2(n - p) * (pow2(p) - 1) - (pow2(p) - 2));
                assert_eq!(small, large);
                assert_eq!(subtree_cut(n, p, p), small);
            }
        }
    }

    /// Independent oracle: `m * deg - 2 E_G(m)` from the isoperimetric
    /// closed form, compared with every per-cut expression.
    #[test]
    fn per_cut_values_match_boundary_of_optimal_sets() {
        for n in 2..=12u32 {
            for p in 2..=n {
                let (parts, r) = (1usize << p, 1usize << (n - p));
                let deg = (parts - 1) * r;
                let boundary = |m: usize| {
                    (m * deg - 2 * max_subgraph_edges_closed_form(parts, r, m).unwrap()) as u64
                };
                for j in 1..=n {
                    assert_eq!(ec_subtree_cut(n, p, j).unwrap(), boundary((1 << j) - 1));
                }
                for j in 1..n {
                    assert_eq!(ec_sibling_pair_cut(n, p, j).unwrap(), boundary(2 * ((1 << j) - 1)));
                }
                for n1 in 1..=n {
                    let params = FormulaParams::new(n, p, n1).unwrap();
                    for i in 1..params.k() {
                        assert_eq!(ec_root_cut(params, i).unwrap(), boundary((i as usize) << n1));
                    }
                }
            }
        }
    }

    #[test]
    fn sibling_never_exceeds_binary() {
        for n in 2..=MAX_N {
            for p in 2..=n {
                assert!(wl_formula_st1(n, p).unwrap() <= wl_formula_t1(n, p).unwrap());
                for n1 in 1..=n {
                    assert!(wl_formula_stk(n, n1, p).unwrap() <= wl_formula_tk(n, n1, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn k_equal_one_degenerates() {
        for n in 2..=MAX_N {
            for p in 2..=n {
                assert_eq!(wl_formula_tk(n, n, p).unwrap(), wl_formula_t1(n, p).unwrap());
                assert_eq!(wl_formula_stk(n, n, p).unwrap(), wl_formula_st1(n, p).unwrap());
            }
        }
    }

    #[test]
    fn height_one_sibling_hosts_equal_binary_hosts() {
        for n in 2..=MAX_N {
            for p in 2..=n {
                assert_eq!(wl_formula_stk(n, 1, p).unwrap(), wl_formula_tk(n, 1, p).unwrap());
            }
        }
    }
}
