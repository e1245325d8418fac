//! The chain of one-point codes `C(X, D, mQ)` on a Castle curve.
//!
//! Evaluating the monomials with pole orders `m_1 = 0 < m_2 < ... < m_n`, the dimension set
//! `M = H \ (n + H)`, gives a basis `b_1, ..., b_n` of `F^n` in which every code of the chain
//! is spanned by a prefix. When `m` is not in `M` the code equals the one at the largest
//! `m_i <= m`.

use crate::curve::{CurveKind, CurveModel, MonomialFunction};
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::linalg::{FieldMatrix, FieldVector};
use crate::semigroup::NumericalSemigroup;

/// `M = H \ (n + H)` from semigroup data alone; requires Castle data (`H` symmetric,
/// `n = q v_2`).
pub fn dimension_set_only(h: &NumericalSemigroup, q: u64, n: u64) -> Result<Vec<u64>> {
    if !h.is_symmetric() {
        return Err(Error::NotCastle(format!("{h} is not symmetric")));
    }
    if n != q * h.multiplicity() {
        return Err(Error::NotCastle(format!(
            "n = {n} but q v_2 = {}",
            q * h.multiplicity()
        )));
    }
    let top = n + 2 * h.genus();
    let dims: Vec<u64> = (0..top)
        .filter(|&m| h.contains(m as i64) && !h.contains(m as i64 - n as i64))
        .collect();

    let mut closed: Vec<u64> = h.elements_up_to(n.saturating_sub(1));
    if n == 0 {
        closed.clear();
    }
    closed.extend(h.gaps().iter().map(|l| n + l));
    if dims != closed || dims.len() as u64 != n {
        return Err(Error::NotCastle(format!(
            "H \\ (n + H) has {} elements",
            dims.len()
        )));
    }
    let sharper = h.scaled_complement(q);
    if sharper.len() as u64 == n && sharper != dims {
        return Err(Error::NotCastle("M differs from H \\ (qH* + H)".into()));
    }
    Ok(dims)
}

/// A lower bound for the `i`-th gonality `gamma_i` of a Castle curve over GF(q) with
/// Weierstrass semigroup `h`.
pub fn gonality_lower_bound(h: &NumericalSemigroup, q: u64, i: u64) -> u64 {
    let g = h.genus();
    if i <= 1 {
        return 0;
    }
    if i > g {
        return i - 1 + g;
    }
    let v2 = h.multiplicity();
    if v2 <= q + 1 && (i == 2 || i + v2 >= g + 2) {
        return h.element_at(i as usize).expect("i >= 1");
    }
    i - 1
}

#[derive(Debug, Clone)]
pub struct CodeChain {
    curve: CurveModel,
    dims: Vec<u64>,
    functions: Vec<MonomialFunction>,
    basis: FieldMatrix,
}

impl CodeChain {
    pub fn build(curve: &CurveModel) -> Result<Self> {
        let points = curve.points()?;
        let n = points.len();
        if (n as u64) < 2 * curve.genus() {
            return Err(Error::ShortChain {
                n,
                g: curve.genus(),
            });
        }
        curve.check_castle()?;
        let dims =
            dimension_set_only(curve.weierstrass_semigroup(), curve.field_order(), n as u64)?;
        let functions: Vec<MonomialFunction> = dims
            .iter()
            .map(|&m| curve.monomial_for_pole(m))
            .collect::<Result<_>>()?;
        let rows: Vec<FieldVector> = functions
            .iter()
            .map(|f| FieldVector::new(curve.field(), curve.evaluate_all(f)?))
            .collect::<Result<_>>()?;
        let basis = FieldMatrix::from_rows(curve.field(), n, &rows)?;
        let rank = basis.rank();
        if rank != n {
            return Err(Error::RankDeficient { rank, expected: n });
        }
        Ok(CodeChain {
            curve: curve.clone(),
            dims,
            functions,
            basis,
        })
    }

    pub fn curve(&self) -> &CurveModel {
        &self.curve
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn genus(&self) -> u64 {
        self.curve.genus()
    }

    /// The dimension set `m_1 < ... < m_n`.
    pub fn dimension_set(&self) -> &[u64] {
        &self.dims
    }

    pub fn functions(&self) -> &[MonomialFunction] {
        &self.functions
    }

    /// Rows are `b_1, ..., b_n`.
    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    /// `b_i`, 1-based.
    pub fn basis_vector(&self, i: usize) -> FieldVector {
        self.basis.row(i - 1)
    }

    /// Recomputes `M` from ranks: the pole orders `m in H` at which evaluating `L(mQ)`
    /// gains a dimension.
    pub fn rank_dimension_set(&self) -> Result<Vec<u64>> {
        let h = self.curve.weierstrass_semigroup();
        let n = self.n();
        let top = n as u64 + 2 * h.genus();
        let mut rows = Vec::new();
        let mut found = Vec::new();
        let mut rank = 0;
        for m in h.elements_up_to(top) {
            let f = self.curve.monomial_for_pole(m)?;
            rows.push(FieldVector::new(
                self.curve.field(),
                self.curve.evaluate_all(&f)?,
            )?);
            let r = FieldMatrix::from_rows(self.curve.field(), n, &rows)?.rank();
            if r > rank {
                rank = r;
                found.push(m);
            } else {
                rows.pop();
            }
        }
        Ok(found)
    }

    /// `C(X, D, mQ)` for `0 <= m <= n + 2g - 1`.
    pub fn code_at(&self, m: u64) -> Result<OnePointCode<'_>> {
        let hi = self.n() as u64 + 2 * self.genus() - 1;
        if m > hi {
            return Err(Error::IndexOutOfRange {
                index: m as i64,
                lo: 0,
                hi: hi as i64,
            });
        }
        let h = self.curve.weierstrass_semigroup();
        let n = self.n() as i64;
        let abundance = h.iota(m as i64 - n);
        let k = (h.iota(m as i64) - abundance) as usize;
        debug_assert_eq!(k, self.dims.iter().filter(|&&d| d <= m).count());
        Ok(OnePointCode {
            chain: self,
            m,
            k,
            abundance,
        })
    }

    /// The code spanned by `b_1, ..., b_k`, i.e. `C(X, D, m_k Q)`.
    pub fn code_of_dimension(&self, k: usize) -> Result<OnePointCode<'_>> {
        if k == 0 || k > self.n() {
            return Err(Error::IndexOutOfRange {
                index: k as i64,
                lo: 1,
                hi: self.n() as i64,
            });
        }
        self.code_at(self.dims[k - 1])
    }
}

/// One code of a [`CodeChain`].
#[derive(Debug, Clone, Copy)]
pub struct OnePointCode<'a> {
    chain: &'a CodeChain,
    m: u64,
    k: usize,
    abundance: u64,
}

impl<'a> OnePointCode<'a> {
    pub fn chain(&self) -> &'a CodeChain {
        self.chain
    }

    /// The divisor degree the code was requested at.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// The largest `m_i <= m`, which defines the same code.
    pub fn resolved_m(&self) -> u64 {
        self.chain.dims[self.k - 1]
    }

    pub fn n(&self) -> usize {
        self.chain.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `dim L(mQ - D) = iota(m - n)`.
    pub fn abundance(&self) -> u64 {
        self.abundance
    }

    /// Rows `b_1, ..., b_k`.
    pub fn generator(&self) -> FieldMatrix {
        self.chain.basis.submatrix(self.k, self.n())
    }

    /// `sum z_i b_i`.
    pub fn encode(&self, message: &[Fe]) -> Result<FieldVector> {
        if message.len() != self.k {
            return Err(Error::DimensionMismatch(format!(
                "message of length {} for a code of dimension {}",
                message.len(),
                self.k
            )));
        }
        let field = self.chain.curve.field();
        for e in message {
            field.element(e.0)?;
        }
        self.generator().combine_rows(message)
    }

    /// The message of a codeword, or `None` if `word` is not in the code.
    pub fn unencode(&self, word: &FieldVector) -> Result<Option<Vec<Fe>>> {
        Ok(self
            .generator()
            .transpose()
            .solve(word)?
            .map(FieldVector::into_vec))
    }

    pub fn contains(&self, word: &FieldVector) -> Result<bool> {
        Ok(self.unencode(word)?.is_some())
    }

    /// `max(n - m, 1)`.
    pub fn goppa_bound(&self) -> u64 {
        (self.n() as u64).saturating_sub(self.m).max(1)
    }

    /// `n - m + gamma_{a+1}` with the gonality lower bound of [`gonality_lower_bound`].
    pub fn improved_goppa_bound(&self) -> u64 {
        let curve = &self.chain.curve;
        let gamma = gonality_lower_bound(
            curve.weierstrass_semigroup(),
            curve.field_order(),
            self.abundance + 1,
        );
        (self.n() as i64 - self.m as i64 + gamma as i64).max(1) as u64
    }

    /// The exact minimum distance when a closed form is known, first at `m` and then at
    /// the resolved `m_i`.
    pub fn exact_distance_castle(&self) -> Option<u64> {
        closed_form_distance(&self.chain.curve, self.m)
            .or_else(|| closed_form_distance(&self.chain.curve, self.resolved_m()))
    }
}

fn closed_form_distance(curve: &CurveModel, m: u64) -> Option<u64> {
    let h = curve.weierstrass_semigroup();
    let n = curve.n();
    let v2 = h.multiplicity();
    let q = curve.field_order();
    if m > 0 && m.is_multiple_of(v2) && m / v2 < q {
        return Some(n - m);
    }
    if m + v2 >= n && m <= n {
        return Some(v2);
    }
    if let CurveKind::Hermitian { q } = curve.kind() {
        let q2 = q * q;
        if m + q2 < n && h.contains(m as i64) {
            return Some(n - m);
        }
        if m + q2 > n && m < n {
            let t = n - m;
            let (a, b) = (t / q, t % q);
            return Some(if b <= a { t } else { (a + 1) * q });
        }
    }
    None
}
