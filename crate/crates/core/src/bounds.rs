//! Order bounds computed from the dimension set `M` alone.
//!
//! With `m_1 < ... < m_n` the elements of `M`:
//!
//! * `Lambda*_i = {(i, j) : m_i + m_j in M}`, and `d_ORD(k) = min_{r <= k} #Lambda*_r` bounds
//!   the distance of the code spanned by `b_1..b_k`;
//! * `N*_s = {(i, j) : m_i + m_j = m_{s+1}}` (ordered pairs), and
//!   `d_ORD^perp(k) = min_{k <= s < n} #N*_s` bounds the distance of its dual.
//!
//! Indices `i` are 1-based and `s` is 0-based, matching the usual notation.

use std::collections::HashSet;

use crate::codechain::{dimension_set_only, CodeChain};
use crate::curve::CurveModel;
use crate::error::{Error, Result};
use crate::linalg::FieldMatrix;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone)]
pub struct BoundTable {
    semigroup: NumericalSemigroup,
    dims: Vec<u64>,
    members: HashSet<u64>,
    lambda: Vec<usize>,
    nstar: Vec<usize>,
    pi: u64,
}

/// One line of [`BoundTable::goppa_dominance_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoppaComparison {
    pub index: usize,
    pub m: u64,
    pub d_ord: usize,
    pub goppa: u64,
    /// `d_ORD(i) > n - m_i`.
    pub improves: bool,
    /// `m_i < pi - l_g`, where equality with the Goppa bound is guaranteed.
    pub equality_expected: bool,
}

impl BoundTable {
    /// Castle data: `H` symmetric and `n = q v_2`.
    pub fn new(semigroup: &NumericalSemigroup, q: u64, n: u64) -> Result<Self> {
        let dims = dimension_set_only(semigroup, q, n)?;
        Ok(Self::from_dimension_set(semigroup, dims))
    }

    pub fn from_curve(curve: &CurveModel) -> Result<Self> {
        Self::new(
            curve.weierstrass_semigroup(),
            curve.field_order(),
            curve.n(),
        )
    }

    pub fn from_chain(chain: &CodeChain) -> Self {
        Self::from_dimension_set(
            chain.curve().weierstrass_semigroup(),
            chain.dimension_set().to_vec(),
        )
    }

    fn from_dimension_set(semigroup: &NumericalSemigroup, dims: Vec<u64>) -> Self {
        let members: HashSet<u64> = dims.iter().copied().collect();
        let lambda = dims
            .iter()
            .map(|&mi| {
                dims.iter()
                    .filter(|&&mj| members.contains(&(mi + mj)))
                    .count()
            })
            .collect();
        let nstar = dims
            .iter()
            .map(|&target| {
                dims.iter()
                    .filter(|&&mi| mi <= target && members.contains(&(target - mi)))
                    .count()
            })
            .collect();
        let pi = (0..)
            .find(|&t| semigroup.contains(t as i64) && !members.contains(&t))
            .expect("H is infinite and M finite");
        BoundTable {
            semigroup: semigroup.clone(),
            dims,
            members,
            lambda,
            nstar,
            pi,
        }
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn genus(&self) -> u64 {
        self.semigroup.genus()
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn dimension_set(&self) -> &[u64] {
        &self.dims
    }

    /// `pi = min(H \ M)`.
    pub fn pi(&self) -> u64 {
        self.pi
    }

    /// Largest gap, 0 when the genus is 0.
    pub fn largest_gap(&self) -> u64 {
        self.semigroup.largest_gap().unwrap_or(0)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                lo: 1,
                hi: self.n() as i64,
            });
        }
        Ok(())
    }

    fn check_s(&self, s: usize) -> Result<()> {
        if s >= self.n() {
            return Err(Error::IndexOutOfRange {
                index: s as i64,
                lo: 0,
                hi: self.n() as i64 - 1,
            });
        }
        Ok(())
    }

    /// `#Lambda*_i`.
    pub fn lambda_star_size(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(self.lambda[i - 1])
    }

    /// `Lambda*_i` as a list of pairs `(i, j)`.
    pub fn lambda_star_set(&self, i: usize) -> Result<Vec<(usize, usize)>> {
        self.check_index(i)?;
        let mi = self.dims[i - 1];
        Ok((1..=self.n())
            .filter(|&j| self.members.contains(&(mi + self.dims[j - 1])))
            .map(|j| (i, j))
            .collect())
    }

    /// `#Lambda*_1, ..., #Lambda*_n`.
    pub fn lambda_sizes(&self) -> &[usize] {
        &self.lambda
    }

    /// `L_i = m_i + gaps(H)`.
    pub fn gap_translate(&self, i: usize) -> Result<Vec<u64>> {
        self.check_index(i)?;
        let mi = self.dims[i - 1];
        Ok(self.semigroup.gaps().iter().map(|l| mi + l).collect())
    }

    /// The Castle closed form `n - i + 1 - #(L_i ∩ M)`.
    pub fn lambda_star_size_castle(&self, i: usize) -> Result<usize> {
        let hits = self
            .gap_translate(i)?
            .iter()
            .filter(|t| self.members.contains(t))
            .count();
        Ok(self.n() + 1 - i - hits)
    }

    /// `#N*_s`.
    pub fn nstar_size(&self, s: usize) -> Result<usize> {
        self.check_s(s)?;
        Ok(self.nstar[s])
    }

    /// `N*_s` as ordered pairs `(i, j)`, sorted by `i`.
    pub fn nstar_set(&self, s: usize) -> Result<Vec<(usize, usize)>> {
        self.check_s(s)?;
        let target = self.dims[s];
        let index_of = |m: u64| self.dims.binary_search(&m).ok();
        Ok((1..=self.n())
            .filter_map(|i| {
                let mi = self.dims[i - 1];
                let j = index_of(target.checked_sub(mi)?)?;
                Some((i, j + 1))
            })
            .collect())
    }

    /// `#N*_0, ..., #N*_{n-1}`.
    pub fn nstar_sizes(&self) -> &[usize] {
        &self.nstar
    }

    /// `d_ORD(k) = min_{r <= k} #Lambda*_r` for `1 <= k <= n`.
    pub fn d_ord(&self, k: usize) -> Result<usize> {
        self.check_index(k)?;
        Ok(*self.lambda[..k].iter().min().expect("k >= 1"))
    }

    /// `d_ORD^perp(k) = min_{k <= s < n} #N*_s` for `0 <= k < n`.
    pub fn d_ord_dual(&self, k: usize) -> Result<usize> {
        self.check_s(k)?;
        Ok(*self.nstar[k..].iter().min().expect("k < n"))
    }

    /// Compares `d_ORD(i)` with the Goppa bound `n - m_i` for every non-abundant `m_i`.
    pub fn goppa_dominance_report(&self) -> Vec<GoppaComparison> {
        let n = self.n() as u64;
        let threshold = self.pi as i64 - self.largest_gap() as i64;
        self.dims
            .iter()
            .enumerate()
            .take_while(|(_, &m)| m < n)
            .map(|(idx, &m)| {
                let d_ord = self.d_ord(idx + 1).expect("index in range");
                GoppaComparison {
                    index: idx + 1,
                    m,
                    d_ord,
                    goppa: n - m,
                    improves: d_ord as u64 > n - m,
                    equality_expected: (m as i64) < threshold,
                }
            })
            .collect()
    }

    /// The `m_i < n` at which `d_ORD` beats the Goppa bound.
    pub fn goppa_improvements(&self) -> Vec<u64> {
        self.goppa_dominance_report()
            .iter()
            .filter(|row| row.improves)
            .map(|row| row.m)
            .collect()
    }

    /// `{i : #Lambda*_i >= delta}`, 1-based.
    pub fn improved_support(&self, delta: usize) -> Vec<usize> {
        (1..=self.n())
            .filter(|&i| self.lambda[i - 1] >= delta)
            .collect()
    }

    pub fn improved_dimension(&self, delta: usize) -> usize {
        self.lambda.iter().filter(|&&l| l >= delta).count()
    }

    /// Whether the indices with `#Lambda*_i >= delta` form a prefix, in which case the
    /// improved code is an ordinary one-point code.
    pub fn is_monotone(&self, delta: usize) -> bool {
        let support = self.improved_support(delta);
        support.iter().enumerate().all(|(pos, &i)| i == pos + 1)
    }

    /// The `delta` in `2..=n` for which [`is_monotone`](Self::is_monotone) holds.
    pub fn monotone_deltas(&self) -> Vec<usize> {
        (2..=self.n()).filter(|&d| self.is_monotone(d)).collect()
    }

    /// Generator matrix of the improved code, rows `b_i` with `#Lambda*_i >= delta`.
    ///
    /// For non-monotone `delta` the code depends on the chosen functions; the chain's
    /// monomial basis is the one used here.
    pub fn improved_code(&self, chain: &CodeChain, delta: usize) -> Result<FieldMatrix> {
        if chain.dimension_set() != self.dims.as_slice() {
            return Err(Error::DimensionMismatch("chain and table differ".into()));
        }
        let rows: Vec<_> = self
            .improved_support(delta)
            .into_iter()
            .map(|i| chain.basis_vector(i))
            .collect();
        FieldMatrix::from_rows(chain.curve().field(), chain.n(), &rows)
    }
}
