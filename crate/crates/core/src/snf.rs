//! Smith normal form over the integers and the abelian invariants derived
//! from it.

use crate::arith::valuation;
use crate::error::{Error, Result};
use crate::group::{make_group, AbelianGroup, PPartition};
use crate::subgroup::Subgroup;

/// Diagonal `d_1 | d_2 | … | d_r` of the Smith normal form of a rectangular
/// integer matrix, `r = min(rows, cols)`. Rows must have equal length.
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> Result<Vec<u64>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidParameter {
            key: "matrix".into(),
            message: "rows have different lengths".into(),
        });
    }
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let rank_bound = rows.min(cols);
    let mut diag = Vec::with_capacity(rank_bound);

    for t in 0..rank_bound {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pi, pj)) = min_nonzero(&a, t) else {
            diag.resize(rank_bound, 0);
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t] / a[t][t];
                    row_axpy(&mut a, i, t, q)?;
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j] / a[t][t];
                    col_axpy(&mut a, j, t, q)?;
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // A remainder survived: move the smaller entry into the pivot.
                let (pi, pj) = min_nonzero_cross(&a, t);
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            // Pivot must divide the whole trailing block.
            let pivot = a[t][t];
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % pivot != 0));
            match offender {
                Some(i) => {
                    let src = a[i].clone();
                    for (dst, &v) in a[t].iter_mut().zip(&src).skip(t) {
                        *dst = dst
                            .checked_add(v)
                            .ok_or(Error::Overflow("smith normal form"))?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].unsigned_abs());
    }
    Ok(diag)
}

fn min_nonzero(a: &[Vec<i64>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(u64, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().skip(t) {
            if v != 0 && best.is_none_or(|b| v.unsigned_abs() < b.0) {
                best = Some((v.unsigned_abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn min_nonzero_cross(a: &[Vec<i64>], t: usize) -> (usize, usize) {
    let mut best = (a[t][t].unsigned_abs(), t, t);
    for (i, row) in a.iter().enumerate().skip(t + 1) {
        let v = row[t].unsigned_abs();
        if v != 0 && v < best.0 {
            best = (v, i, t);
        }
    }
    for (j, &v) in a[t].iter().enumerate().skip(t + 1) {
        if v != 0 && v.unsigned_abs() < best.0 {
            best = (v.unsigned_abs(), t, j);
        }
    }
    (best.1, best.2)
}

/// `row_i -= q·row_t`
fn row_axpy(a: &mut [Vec<i64>], i: usize, t: usize, q: i64) -> Result<()> {
    for j in 0..a[i].len() {
        let prod = q
            .checked_mul(a[t][j])
            .ok_or(Error::Overflow("smith normal form"))?;
        a[i][j] = a[i][j]
            .checked_sub(prod)
            .ok_or(Error::Overflow("smith normal form"))?;
    }
    Ok(())
}

/// `col_j -= q·col_t`
fn col_axpy(a: &mut [Vec<i64>], j: usize, t: usize, q: i64) -> Result<()> {
    for row in a.iter_mut() {
        let prod = q
            .checked_mul(row[t])
            .ok_or(Error::Overflow("smith normal form"))?;
        row[j] = row[j]
            .checked_sub(prod)
            .ok_or(Error::Overflow("smith normal form"))?;
    }
    Ok(())
}

/// Presentation matrix of `G/H`: the diagonal of cyclic orders stacked over
/// the residue vectors of `H`'s generators.
pub fn presentation_matrix(g: &AbelianGroup, h: &Subgroup) -> Result<Vec<Vec<i64>>> {
    let n = g.rank();
    let to_i64 = |v: u64| i64::try_from(v).map_err(|_| Error::Overflow("presentation matrix"));
    let mut rows = Vec::with_capacity(n + h.generator_indices().len());
    for (i, &m) in g.moduli().iter().enumerate() {
        let mut row = vec![0; n];
        row[i] = to_i64(m)?;
        rows.push(row);
    }
    for x in h.generators() {
        rows.push(
            x.residues()
                .iter()
                .map(|&r| to_i64(r))
                .collect::<Result<_>>()?,
        );
    }
    Ok(rows)
}

/// Canonical group isomorphic to `G/H`.
pub fn quotient_type(g: &AbelianGroup, h: &Subgroup) -> Result<AbelianGroup> {
    if h.parent() != g {
        return Err(Error::ParentMismatch);
    }
    let factors: Vec<u64> = smith_normal_form(&presentation_matrix(g, h)?)?
        .into_iter()
        .filter(|&d| d != 1)
        .collect();
    let q = make_group(&factors)?;
    if q.order().checked_mul(h.order()) != Some(g.order()) {
        return Err(Error::InconsistentSubgroup(format!(
            "|G/H| = {} from the generator matrix, but |G|/|H| = {}/{}",
            q.order(),
            g.order(),
            h.order()
        )));
    }
    Ok(q)
}

/// Canonical group isomorphic to `H`, read off the element-order multiset:
/// for each prime `p`, the number of cyclic factors of exponent `≥ s` is
/// `log_p(N_s / N_{s-1})` where `N_s` counts elements whose order has
/// `p`-valuation at most `s`.
pub fn subgroup_type(h: &Subgroup) -> Result<AbelianGroup> {
    let g = h.parent();
    let orders: Vec<u64> = h
        .element_indices()
        .iter()
        .map(|&x| g.order_idx(x))
        .collect();
    let mut components = Vec::new();
    for p in g.primes() {
        let vals: Vec<u32> = orders.iter().map(|&o| valuation(o, p)).collect();
        let top = vals.iter().copied().max().unwrap_or(0);
        let mut at_least = Vec::new();
        let mut prev = vals.iter().filter(|&&v| v == 0).count() as u64;
        for s in 1..=top {
            let cur = vals.iter().filter(|&&v| v <= s).count() as u64;
            let ratio = cur / prev;
            if ratio * prev != cur {
                return Err(Error::InconsistentSubgroup(
                    "element orders do not form a group".into(),
                ));
            }
            at_least.push(valuation(ratio, p));
            prev = cur;
        }
        // at_least[s-1] = #{i : α_i ≥ s}; convert the conjugate partition.
        let k = at_least.first().copied().unwrap_or(0);
        let mut exps: Vec<u32> = (0..k)
            .map(|i| at_least.iter().filter(|&&c| c > i).count() as u32)
            .collect();
        exps.sort_unstable();
        components.push(PPartition::new(p, exps)?);
    }
    AbelianGroup::from_components(components)
}
