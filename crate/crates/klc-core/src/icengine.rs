//! Canonical bases for based modules with a bar involution.
//!
//! The input is a family `t_0, ..., t_{N-1}` spanning a free
//! `Z[u, u^-1]`-module together with a ring-semilinear involution, given by
//! its columns `bar(t_j)` in `t`-coordinates.  The family must be listed in a
//! *linear extension*: `bar(t_j) - t_j` is supported on indices strictly
//! below `j`.  Under these hypotheses there is a unique basis
//! `c_j = t_j + sum_{i<j} d_ij t_i` with `bar(c_j) = c_j` and every `d_ij`
//! in `u^-1 Z[u^-1]`, and [`canonical_basis`] computes it.
//!
//! The solver works top-down through the defect `r = bar(t_j) - t_j`: the
//! topmost coefficient of `r` must equal `g - bar(g)` for the correction
//! coefficient `g` in `u^-1 Z[u^-1]`, which determines `g` as the strictly
//! negative part.  Every hypothesis is checked along the way rather than
//! trusted, so a miscomputed involution surfaces as an error instead of a
//! wrong basis.

use crate::laurent::Laurent;
use std::collections::{BTreeMap, BTreeSet};

/// A vector in `t`-coordinates; absent keys are zero.
pub type SparseVec = BTreeMap<usize, Laurent>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IcError {
    #[error("bar(t_{index}) has support at {offender} >= {index}: not a linear extension")]
    OrderViolation { index: usize, offender: usize },
    #[error("bar(t_{index}) does not have unit coefficient at t_{index}")]
    DiagonalNotOne { index: usize },
    #[error("defect of t_{index} at position {position} is {coeff}, which is not bar-antisymmetric")]
    NotAntiInvariant {
        index: usize,
        position: usize,
        coeff: Laurent,
    },
    #[error("bar(bar(t_{index})) differs from t_{index}: not an involution")]
    NotInvolutive { index: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct IcOptions {
    /// Verify `bar(bar(t_j)) = t_j` for every column before solving.
    /// Quadratic in the total support size, so worth disabling for the
    /// largest families once the involution code is trusted.
    pub check_involutive: bool,
}

impl Default for IcOptions {
    fn default() -> Self {
        IcOptions { check_involutive: true }
    }
}

/// Add `coeff * src` into `target`, dropping entries that cancel to zero.
pub fn add_scaled(target: &mut SparseVec, src: &SparseVec, coeff: &Laurent) {
    if coeff.is_zero() {
        return;
    }
    for (&i, f) in src {
        let slot = target.entry(i).or_insert_with(Laurent::zero);
        slot.add_mul_assign(coeff, f);
        if slot.is_zero() {
            target.remove(&i);
        }
    }
}

/// Apply the involution determined by `bars` to an arbitrary vector:
/// `bar(sum f_i t_i) = sum bar(f_i) bar(t_i)`.
pub fn bar_apply(bars: &[SparseVec], v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&i, f) in v {
        add_scaled(&mut out, &bars[i], &f.bar());
    }
    out
}

/// Compute the full canonical basis; `cols[j]` holds `c_j` in
/// `t`-coordinates, including the unit entry at `j`.
pub fn canonical_basis(bars: &[SparseVec], opts: IcOptions) -> Result<Vec<SparseVec>, IcError> {
    validate(bars, opts)?;
    let mut cols: Vec<SparseVec> = Vec::with_capacity(bars.len());
    for (j, bar_col) in bars.iter().enumerate() {
        let mut c = SparseVec::from([(j, Laurent::one())]);
        let mut r = bar_col.clone();
        let diag = r.remove(&j);
        debug_assert_eq!(diag, Some(Laurent::one()));
        while let Some((&i, gamma)) = r.last_key_value() {
            debug_assert!(i < j);
            if !gamma.is_bar_antisymmetric() {
                return Err(IcError::NotAntiInvariant {
                    index: j,
                    position: i,
                    coeff: gamma.clone(),
                });
            }
            let gamma = gamma.clone();
            let g = gamma.lower_part();
            add_scaled(&mut c, &cols[i], &g);
            add_scaled(&mut r, &cols[i], &-&gamma);
            debug_assert!(!r.contains_key(&i));
        }
        cols.push(c);
    }
    Ok(cols)
}

fn validate(bars: &[SparseVec], opts: IcOptions) -> Result<(), IcError> {
    for (j, col) in bars.iter().enumerate() {
        for (&i, f) in col {
            if i > j && !f.is_zero() {
                return Err(IcError::OrderViolation { index: j, offender: i });
            }
        }
        if !col.get(&j).is_some_and(Laurent::is_one) {
            return Err(IcError::DiagonalNotOne { index: j });
        }
    }
    if opts.check_involutive {
        for (j, col) in bars.iter().enumerate() {
            let twice = bar_apply(bars, col);
            let expect = SparseVec::from([(j, Laurent::one())]);
            if twice != expect {
                return Err(IcError::NotInvolutive { index: j });
            }
        }
    }
    Ok(())
}

/// The smallest index set containing `seeds` and closed under taking the
/// support of `bar`; `bar_of` is consulted once per member.
pub fn lower_ideal(
    seeds: impl IntoIterator<Item = usize>,
    mut bar_of: impl FnMut(usize) -> SparseVec,
) -> BTreeSet<usize> {
    let mut ideal: BTreeSet<usize> = BTreeSet::new();
    let mut queue: Vec<usize> = seeds.into_iter().collect();
    while let Some(j) = queue.pop() {
        if !ideal.insert(j) {
            continue;
        }
        for (&i, f) in &bar_of(j) {
            if i != j && !f.is_zero() && !ideal.contains(&i) {
                queue.push(i);
            }
        }
    }
    ideal
}

/// A canonical basis computed on a bar-closed lower ideal of a larger family,
/// without touching indices outside the ideal.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    /// The global indices of the ideal, in increasing order.
    pub indices: Vec<usize>,
    /// `cols[a]` is `c_{indices[a]}` with keys again given as local positions.
    pub cols: Vec<SparseVec>,
}

impl IdealBasis {
    /// `c` for the global index `j`, with global keys.
    pub fn col_global(&self, j: usize) -> SparseVec {
        let a = self
            .indices
            .binary_search(&j)
            .unwrap_or_else(|_| panic!("index {j} not in the solved ideal"));
        self.cols[a]
            .iter()
            .map(|(&b, f)| (self.indices[b], f.clone()))
            .collect()
    }
}

/// Solve for the canonical basis on the bar-closure of `seeds` only.  The
/// global order must already be a linear extension; errors are reported in
/// global indices.
pub fn canonical_basis_on_ideal(
    seeds: impl IntoIterator<Item = usize>,
    mut bar_of: impl FnMut(usize) -> SparseVec,
    opts: IcOptions,
) -> Result<IdealBasis, IcError> {
    let mut stored: BTreeMap<usize, SparseVec> = BTreeMap::new();
    let indices: Vec<usize> = lower_ideal(seeds, |j| {
        let col = bar_of(j);
        stored.insert(j, col.clone());
        col
    })
    .into_iter()
    .collect();
    let local: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(a, &j)| (j, a)).collect();
    let to_global = |e: IcError| match e {
        IcError::OrderViolation { index, offender } => IcError::OrderViolation {
            index: indices[index],
            offender: indices[offender],
        },
        IcError::DiagonalNotOne { index } => IcError::DiagonalNotOne { index: indices[index] },
        IcError::NotAntiInvariant { index, position, coeff } => IcError::NotAntiInvariant {
            index: indices[index],
            position: indices[position],
            coeff,
        },
        IcError::NotInvolutive { index } => IcError::NotInvolutive { index: indices[index] },
    };
    let mut bars_local: Vec<SparseVec> = Vec::with_capacity(indices.len());
    for &j in &indices {
        let mut col = SparseVec::new();
        for (&i, f) in &stored[&j] {
            match local.get(&i) {
                Some(&a) => {
                    col.insert(a, f.clone());
                }
                None => {
                    return Err(IcError::OrderViolation { index: j, offender: i });
                }
            }
        }
        bars_local.push(col);
    }
    let cols = canonical_basis(&bars_local, opts).map_err(to_global)?;
    Ok(IdealBasis { indices, cols })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Laurent;
    use std::str::FromStr;

    fn l(s: &str) -> Laurent {
        Laurent::from_str(s).unwrap()
    }

    fn col(entries: &[(usize, &str)]) -> SparseVec {
        entries.iter().map(|&(i, s)| (i, l(s))).collect()
    }

    #[test]
    fn rank_two_hecke_case() {
        // bar(T_s) = T_s + (u^-1 - u) over the trivial index, giving the
        // familiar C_s = T_s + u^-1.
        let bars = vec![col(&[(0, "1")]), col(&[(1, "1"), (0, "u^-1 - u")])];
        let cols = canonical_basis(&bars, IcOptions::default()).unwrap();
        assert_eq!(cols[0], col(&[(0, "1")]));
        assert_eq!(cols[1], col(&[(1, "1"), (0, "u^-1")]));
    }

    #[test]
    fn corrections_cascade_through_lower_columns() {
        // The bottom coefficient is not itself antisymmetric; it only becomes
        // so after the correction through c_1 is subtracted.
        let bars = vec![
            col(&[(0, "1")]),
            col(&[(1, "1"), (0, "u^-1 - u")]),
            col(&[(2, "1"), (1, "u^-1 - u"), (0, "u^2 - u - 1 + u^-1")]),
        ];
        let cols = canonical_basis(&bars, IcOptions::default()).unwrap();
        assert_eq!(cols[2], col(&[(2, "1"), (1, "u^-1"), (0, "u^-1")]));
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(bar_apply(&bars, c), *c, "c_{j} is not bar-invariant");
        }
    }

    #[test]
    fn rejects_order_violation() {
        let bars = vec![col(&[(0, "1"), (1, "u")]), col(&[(1, "1")])];
        assert_eq!(
            canonical_basis(&bars, IcOptions::default()),
            Err(IcError::OrderViolation { index: 0, offender: 1 })
        );
    }

    #[test]
    fn rejects_bad_diagonal() {
        let bars = vec![col(&[(0, "u")])];
        assert_eq!(
            canonical_basis(&bars, IcOptions { check_involutive: false }),
            Err(IcError::DiagonalNotOne { index: 0 })
        );
    }

    #[test]
    fn rejects_non_antisymmetric_defect() {
        let bars = vec![col(&[(0, "1")]), col(&[(1, "1"), (0, "u + u^-1")])];
        let err = canonical_basis(&bars, IcOptions { check_involutive: false }).unwrap_err();
        assert!(matches!(err, IcError::NotAntiInvariant { index: 1, position: 0, .. }));
    }

    #[test]
    fn rejects_non_involution() {
        // Each defect coefficient is antisymmetric, but the map squares to
        // something other than the identity.
        let bars = vec![
            col(&[(0, "1")]),
            col(&[(1, "1"), (0, "u^-1 - u")]),
            col(&[(2, "1"), (1, "u^-1 - u")]),
        ];
        assert_eq!(
            canonical_basis(&bars, IcOptions::default()),
            Err(IcError::NotInvolutive { index: 2 })
        );
    }

    #[test]
    fn ideal_solve_matches_full_solve() {
        let bars = vec![
            col(&[(0, "1")]),
            col(&[(1, "1"), (0, "u^-1 - u")]),
            col(&[(2, "1")]),
            col(&[(3, "1"), (1, "u^-1 - u"), (0, "u^2 - 1")]),
        ];
        let full = canonical_basis(&bars, IcOptions::default()).unwrap();
        let ideal = canonical_basis_on_ideal([3], |j| bars[j].clone(), IcOptions::default()).unwrap();
        assert_eq!(ideal.indices, vec![0, 1, 3]);
        assert_eq!(ideal.col_global(3), full[3]);
        assert_eq!(ideal.col_global(1), full[1]);
    }

    #[test]
    fn lower_ideal_is_transitive_closure() {
        let bars = vec![
            col(&[(0, "1")]),
            col(&[(1, "1"), (0, "u^-1 - u")]),
            col(&[(2, "1")]),
            col(&[(3, "1"), (1, "u^-1 - u")]),
        ];
        assert_eq!(lower_ideal([3], |j| bars[j].clone()), BTreeSet::from([0, 1, 3]));
        assert_eq!(lower_ideal([2], |j| bars[j].clone()), BTreeSet::from([2]));
    }
}
