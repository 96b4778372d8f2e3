//! Dimensions of the Lefschetz group `L(A)` and the Frobenius group `P(A)`.
//!
//! `dim P(A)` is the rank of the lattice spanned by the valuation-and-weight
//! vectors of the conjugates of a Frobenius `π` together with `q`: a
//! multiplicative relation `π₁^m₁ ⋯ π_s^m_s = q^m` among Weil numbers holds
//! (up to roots of unity) exactly when it holds on all `p`-adic valuations
//! and on the weight. All ranks are exact.

use alloc::format;
use alloc::vec::Vec;

use crate::datum::CmGaloisDatum;
use crate::frobenius::{stabilizer_h, ClassStabilizer, FrobeniusFunction};
use crate::group::Element;
use crate::lattice::integer_rank;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowLabel {
    Conjugate(Element),
    Q,
}

/// Rows `(f(g·w))_w | 1` for every `g ∈ G`, then `(d, …, d) | 2` for `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationMatrix {
    rows: Vec<Vec<i64>>,
    labels: Vec<RowLabel>,
}

impl ValuationMatrix {
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn labels(&self) -> &[RowLabel] {
        &self.labels
    }

    pub fn row_for(&self, label: RowLabel) -> Option<&[i64]> {
        self.labels.iter().position(|&l| l == label).map(|i| self.rows[i].as_slice())
    }
}

pub fn valuation_matrix(datum: &CmGaloisDatum, f: &FrobeniusFunction) -> Result<ValuationMatrix> {
    let n = datum.prime_count();
    if f.values().len() != n {
        return Err(Error::InvalidFunction(format!("expected {n} values")));
    }
    let d = datum.local_degree() as i64;
    let mut rows = Vec::with_capacity(datum.group().order() + 1);
    let mut labels = Vec::with_capacity(rows.capacity());
    for g in datum.group().elements() {
        let mut row: Vec<i64> = (0..n).map(|w| f.value(datum.act(g, w)) as i64).collect();
        row.push(1);
        rows.push(row);
        labels.push(RowLabel::Conjugate(g));
    }
    let mut q = alloc::vec![d; n];
    q.push(2);
    rows.push(q);
    labels.push(RowLabel::Q);

    // π · ιπ = q on every valuation.
    for row in &rows {
        let weight = row[n];
        if (0..n).any(|w| row[w] + row[datum.iota_pairing()[w]] != d * weight) {
            return Err(Error::InternalInconsistency("valuation row breaks the iota pairing".into()));
        }
    }
    Ok(ValuationMatrix { rows, labels })
}

/// `½(G:H) + 1`. An odd index is an error.
pub fn lefschetz_dimension(datum: &CmGaloisDatum, f: &FrobeniusFunction) -> Result<usize> {
    Ok(stabilizer_h(datum, f)?.half_index()? + 1)
}

/// Rank of the full valuation matrix.
pub fn frobenius_dimension(datum: &CmGaloisDatum, f: &FrobeniusFunction) -> Result<usize> {
    let rank = integer_rank(valuation_matrix(datum, f)?.rows())?;
    let bound = datum.half_count() + 1;
    if rank > bound {
        return Err(Error::InternalInconsistency(format!("dim P = {rank} exceeds t+1 = {bound}")));
    }
    let h = stabilizer_h(datum, f)?;
    let dim_l = lefschetz_from(&h)?;
    if rank > dim_l {
        return Err(Error::InternalInconsistency(format!("dim P = {rank} exceeds dim L = {dim_l}")));
    }
    Ok(rank)
}

/// `dim L` with the real-Frobenius case (`ι ∈ H`, `f ≡ d/2`) handled as the
/// one-dimensional torus of scalars.
fn lefschetz_from(h: &ClassStabilizer) -> Result<usize> {
    if h.contains_iota() {
        Ok(1)
    } else {
        Ok(h.half_index()? + 1)
    }
}

/// Independence of `{π₁, …, π_s, q}`: one valuation row per `ι`-orbit of
/// right cosets `Hg` (rows are constant on them), plus the `q` row, must
/// have rank `s + 1`.
pub fn kowalski_independent(datum: &CmGaloisDatum, f: &FrobeniusFunction) -> Result<bool> {
    let h = stabilizer_h(datum, f)?;
    let matrix = valuation_matrix(datum, f)?;
    let group = datum.group();
    let iota = datum.iota();

    let mut seen = alloc::vec![false; group.order()];
    let mut chosen: Vec<&[i64]> = Vec::new();
    for g in group.elements() {
        if seen[g] {
            continue;
        }
        // Mark Hg and Hιg together; g is the smallest element of both.
        for &x in h.subgroup().members() {
            seen[group.mul(x, g)] = true;
            seen[group.mul(x, group.mul(iota, g))] = true;
        }
        if !h.contains_iota() {
            chosen.push(matrix.row_for(RowLabel::Conjugate(g)).expect("row per element"));
        }
    }
    let s = chosen.len();
    chosen.push(matrix.row_for(RowLabel::Q).expect("q row"));
    Ok(integer_rank(&chosen)? == s + 1)
}

/// One isogeny class: `(G:H)`, `s`, `dim L`, `dim P`, and the two exotic
/// determinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TateReport {
    pub h_index: usize,
    pub s: usize,
    pub dim_l: usize,
    pub dim_p: usize,
    pub exotic: bool,
    pub kowalski_independent: bool,
}

/// When `ι ∈ H` the Frobenius is real: the centre is `K^G = Q`, there are
/// no conjugate pairs (`s = 0`), and `dim L = dim P = 1`.
pub fn analyze(datum: &CmGaloisDatum, f: &FrobeniusFunction) -> Result<TateReport> {
    let h = stabilizer_h(datum, f)?;
    let s = if h.contains_iota() { 0 } else { h.half_index()? };
    let dim_l = lefschetz_from(&h)?;
    let dim_p = frobenius_dimension(datum, f)?;
    let exotic = dim_p < dim_l;
    let independent = kowalski_independent(datum, f)?;
    if independent == exotic {
        return Err(Error::InternalInconsistency(format!(
            "independence test says {independent} but dim P = {dim_p}, dim L = {dim_l}"
        )));
    }
    Ok(TateReport { h_index: h.index(), s, dim_l, dim_p, exotic, kowalski_independent: independent })
}
