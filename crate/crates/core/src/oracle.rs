//! Brute-force reference implementations.
//!
//! Nothing here uses the semigroup shortcuts of [`crate::bounds`]: the generic order bounds
//! are computed from an arbitrary basis by chasing the definitions of `rho`, well-behaving
//! pairs, `Lambda_i` and `N_r`, and code distances come from enumerating every codeword.

use crate::bounds::BoundTable;
use crate::codechain::CodeChain;
use crate::decoder::dual_basis;
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::{FieldMatrix, FieldVector};

/// Default limit on the number of codewords a sweep may visit.
pub const DEFAULT_CAP: u128 = 1 << 20;

/// Order-bound machinery for an arbitrary basis `b_1, ..., b_n` of `F^n`.
#[derive(Debug, Clone)]
pub struct GenericBasisAnalysis {
    field: Field,
    basis: FieldMatrix,
    /// Basis vectors reduced against their predecessors, with their pivot columns.
    echelon: Vec<(usize, Vec<Fe>)>,
    /// `rho(b_i * b_j)`, row-major.
    rho_products: Vec<usize>,
}

impl GenericBasisAnalysis {
    pub fn new(basis: &FieldMatrix) -> Result<Self> {
        let n = basis.rows();
        if basis.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "basis of {n} vectors in dimension {}",
                basis.cols()
            )));
        }
        let field = basis.field().clone();
        let mut echelon: Vec<(usize, Vec<Fe>)> = Vec::with_capacity(n);
        for r in 0..n {
            let mut v = basis.row_slice(r).to_vec();
            for (pivot, e) in &echelon {
                reduce(&field, &mut v, e, *pivot);
            }
            let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
                return Err(Error::RankDeficient {
                    rank: r,
                    expected: n,
                });
            };
            echelon.push((pivot, v));
        }
        let mut analysis = GenericBasisAnalysis {
            field,
            basis: basis.clone(),
            echelon,
            rho_products: Vec::new(),
        };
        let mut rho_products = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let prod = analysis.basis.row(i).star(&analysis.basis.row(j))?;
                let r = analysis.rho(&prod)?;
                rho_products[i * n + j] = r;
                rho_products[j * n + i] = r;
            }
        }
        analysis.rho_products = rho_products;
        Ok(analysis)
    }

    pub fn n(&self) -> usize {
        self.basis.rows()
    }

    /// `rho(v) = min{r : v in <b_1, ..., b_r>}`, with `rho(0) = 0`.
    pub fn rho(&self, v: &FieldVector) -> Result<usize> {
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {}",
                v.len()
            )));
        }
        // Each reduced vector vanishes at the pivots of its predecessors, so the
        // coefficients come out in order.
        let mut rest = v.as_slice().to_vec();
        let mut last = 0;
        for (r, (pivot, e)) in self.echelon.iter().enumerate() {
            if !rest[*pivot].is_zero() {
                reduce(&self.field, &mut rest, e, *pivot);
                last = r + 1;
            }
        }
        debug_assert!(rest.iter().all(|c| c.is_zero()));
        Ok(last)
    }

    /// `rho(b_i * b_j)`, 1-based indices.
    pub fn rho_product(&self, i: usize, j: usize) -> usize {
        self.rho_products[(i - 1) * self.n() + (j - 1)]
    }

    /// Whether `(b_i, b_j)` is well-behaving: every `(r, s)` strictly below `(i, j)` in the
    /// product order has `rho(b_r * b_s) < rho(b_i * b_j)`.
    pub fn well_behaving(&self, i: usize, j: usize) -> bool {
        let top = self.rho_product(i, j);
        (1..=i).all(|r| (1..=j).all(|s| (r, s) == (i, j) || self.rho_product(r, s) < top))
    }

    /// `Lambda_i = {j : (b_i, b_j) well-behaving}`.
    pub fn generic_lambda(&self, i: usize) -> Vec<usize> {
        (1..=self.n())
            .filter(|&j| self.well_behaving(i, j))
            .collect()
    }

    /// `N_r = {(i, j) well-behaving : rho(b_i * b_j) = r + 1}`.
    pub fn generic_n(&self, r: usize) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.rho_product(i, j) == r + 1 && self.well_behaving(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `min{#Lambda_r : r <= k}` bounds the distance of `<b_1, ..., b_k>`.
    pub fn generic_order_bound(&self, k: usize) -> Result<usize> {
        self.check_k(k, 1, self.n())?;
        Ok((1..=k)
            .map(|r| self.generic_lambda(r).len())
            .min()
            .expect("k >= 1"))
    }

    /// `min{#N_r : k <= r < n}` bounds the distance of `<b_1, ..., b_k>^perp`.
    pub fn generic_dual_order_bound(&self, k: usize) -> Result<usize> {
        self.check_k(k, 0, self.n() - 1)?;
        Ok((k..self.n())
            .map(|r| self.generic_n(r).len())
            .min()
            .expect("k < n"))
    }

    /// `min{#Lambda_i : i in I}` bounds the distance of `<b_i : i in I>`.
    pub fn subset_order_bound(&self, indices: &[usize]) -> Result<usize> {
        for &i in indices {
            self.check_k(i, 1, self.n())?;
        }
        indices
            .iter()
            .map(|&i| self.generic_lambda(i).len())
            .min()
            .ok_or_else(|| Error::InvalidParameter("empty index set".into()))
    }

    fn check_k(&self, k: usize, lo: usize, hi: usize) -> Result<()> {
        if k < lo || k > hi {
            return Err(Error::IndexOutOfRange {
                index: k as i64,
                lo: lo as i64,
                hi: hi as i64,
            });
        }
        Ok(())
    }
}

fn reduce(field: &Field, v: &mut [Fe], e: &[Fe], pivot: usize) {
    let factor = field.div(v[pivot], e[pivot]).expect("pivot is nonzero");
    if factor.is_zero() {
        return;
    }
    for (a, &b) in v.iter_mut().zip(e) {
        *a = field.sub(*a, field.mul(factor, b));
    }
}

/// A basis of the row space of `g`.
fn row_basis(g: &FieldMatrix) -> Vec<Vec<Fe>> {
    let red = g.rref();
    (0..red.rows())
        .map(|r| red.row_slice(r).to_vec())
        .filter(|row| row.iter().any(|c| !c.is_zero()))
        .collect()
}

/// Visits every nonzero codeword whose leading message coefficient is 1; every nonzero
/// codeword is a unique nonzero multiple of one of these.
fn sweep(g: &FieldMatrix, cap: u128, mut visit: impl FnMut(usize)) -> Result<()> {
    let field = g.field();
    let basis = row_basis(g);
    let k = basis.len() as u32;
    let q = field.order() as u128;
    let words = q.checked_pow(k).unwrap_or(u128::MAX);
    if words > cap {
        return Err(Error::BruteForceCap { words, cap });
    }
    let n = g.cols();
    let multiples: Vec<Vec<Vec<Fe>>> = basis
        .iter()
        .map(|row| {
            field
                .elements()
                .map(|c| row.iter().map(|&b| field.mul(c, b)).collect())
                .collect()
        })
        .collect();

    fn descend(
        field: &Field,
        multiples: &[Vec<Vec<Fe>>],
        level: usize,
        acc: &[Fe],
        visit: &mut dyn FnMut(usize),
    ) {
        if level == multiples.len() {
            visit(acc.iter().filter(|c| !c.is_zero()).count());
            return;
        }
        let mut next = acc.to_vec();
        for mult in &multiples[level] {
            for ((slot, &a), &m) in next.iter_mut().zip(acc).zip(mult) {
                *slot = field.add(a, m);
            }
            descend(field, multiples, level + 1, &next, visit);
        }
    }

    let zero = vec![Fe::ZERO; n];
    for lead in 0..multiples.len() {
        let start = &multiples[lead][1];
        let acc: Vec<Fe> = zero
            .iter()
            .zip(start)
            .map(|(&a, &b)| field.add(a, b))
            .collect();
        descend(field, &multiples, lead + 1, &acc, &mut visit);
    }
    Ok(())
}

/// Exact minimum distance of the code spanned by the rows of `g`.
pub fn brute_min_distance(g: &FieldMatrix) -> Result<usize> {
    brute_min_distance_capped(g, DEFAULT_CAP)
}

pub fn brute_min_distance_capped(g: &FieldMatrix, cap: u128) -> Result<usize> {
    let mut best = usize::MAX;
    sweep(g, cap, |w| best = best.min(w))?;
    if best == usize::MAX {
        return Err(Error::InvalidParameter(
            "the zero code has no minimum distance".into(),
        ));
    }
    Ok(best)
}

/// `hist[w]` is the number of codewords of weight `w`.
pub fn brute_weight_distribution(g: &FieldMatrix) -> Result<Vec<u128>> {
    brute_weight_distribution_capped(g, DEFAULT_CAP)
}

pub fn brute_weight_distribution_capped(g: &FieldMatrix, cap: u128) -> Result<Vec<u128>> {
    let mut hist = vec![0u128; g.cols() + 1];
    sweep(g, cap, |w| hist[w] += 1)?;
    let units = g.field().order() as u128 - 1;
    for h in hist.iter_mut() {
        *h *= units;
    }
    hist[0] = 1;
    Ok(hist)
}

/// One line of [`verify_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Cross-checks the chain, bound and decoder modules against brute force. Codes with more
/// than `cap` codewords are skipped in the distance checks.
pub fn verify_chain(chain: &CodeChain, cap: u128) -> Result<Vec<Check>> {
    let n = chain.n();
    let table = BoundTable::from_chain(chain);
    let generic = GenericBasisAnalysis::new(chain.basis())?;
    let mut checks = Vec::new();

    let rank_m = chain.rank_dimension_set()?;
    checks.push(Check::new(
        "dimension set by rank",
        rank_m == chain.dimension_set(),
        format!("{} elements", rank_m.len()),
    ));

    let generic_lambda: Vec<usize> = (1..=n).map(|i| generic.generic_lambda(i).len()).collect();
    checks.push(Check::new(
        "generic Lambda sizes = Lambda* sizes",
        generic_lambda == table.lambda_sizes(),
        join(&generic_lambda),
    ));
    let generic_n: Vec<usize> = (0..n).map(|r| generic.generic_n(r).len()).collect();
    checks.push(Check::new(
        "generic N sizes = N* sizes",
        generic_n == table.nstar_sizes(),
        join(&generic_n),
    ));

    let castle = (1..=n).all(|i| {
        table.lambda_star_size_castle(i).ok() == table.lambda_star_size(i).ok()
            && table.nstar_size(n - i).ok() == table.lambda_star_size(i).ok()
    });
    checks.push(Check::new(
        "Castle closed forms for Lambda* and N*",
        castle,
        "",
    ));

    let dual = dual_basis(chain);
    checks.push(Check::new(
        "dual basis orthogonality pattern",
        dual.is_ok(),
        dual.as_ref()
            .err()
            .map(ToString::to_string)
            .unwrap_or_default(),
    ));

    let q = chain.curve().field_order() as u128;
    let mut distance_ok = true;
    let mut exact_ok = true;
    let mut swept = 0;
    for k in 1..=n {
        if q.checked_pow(k as u32).is_none_or(|w| w > cap) {
            break;
        }
        let code = chain.code_of_dimension(k)?;
        let d = brute_min_distance_capped(&code.generator(), cap)?;
        let d_ord = table.d_ord(k)?;
        distance_ok &= d_ord <= d && code.goppa_bound() as usize <= d_ord;
        distance_ok &= generic.generic_order_bound(k)? <= d;
        if let Some(exact) = code.exact_distance_castle() {
            exact_ok &= exact as usize == d;
        }
        swept += 1;
    }
    checks.push(Check::new(
        "Goppa <= d_ORD <= brute-force distance",
        distance_ok,
        format!("{swept} codes swept"),
    ));
    checks.push(Check::new(
        "closed-form distances match brute force",
        exact_ok,
        "",
    ));
    Ok(checks)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveModel;

    fn hermitian_two() -> CodeChain {
        CodeChain::build(&CurveModel::hermitian(2).unwrap()).unwrap()
    }

    #[test]
    fn rho_basics() {
        let chain = hermitian_two();
        let g = GenericBasisAnalysis::new(chain.basis()).unwrap();
        for k in 1..=8 {
            assert_eq!(g.rho(&chain.basis_vector(k)).unwrap(), k);
        }
        let sum = chain.basis_vector(1).add(&chain.basis_vector(3)).unwrap();
        assert_eq!(g.rho(&sum).unwrap(), 3);
        assert_eq!(
            g.rho(&FieldVector::zeros(chain.curve().field(), 8))
                .unwrap(),
            0
        );
        assert_eq!(g.rho_product(3, 3), 6);
    }

    #[test]
    fn generic_sets_hermitian_two() {
        let chain = hermitian_two();
        let g = GenericBasisAnalysis::new(chain.basis()).unwrap();
        assert!(g.well_behaving(1, 1));
        let sizes: Vec<usize> = (1..=8).map(|i| g.generic_lambda(i).len()).collect();
        assert_eq!(sizes, vec![8, 6, 5, 4, 3, 2, 2, 1]);
        assert_eq!(g.generic_n(5), vec![(1, 6), (2, 4), (3, 3), (4, 2), (6, 1)]);
        assert_eq!(g.generic_n(6).len(), 6);
        assert_eq!(g.generic_n(7).len(), 8);
        assert_eq!(g.generic_order_bound(3).unwrap(), 5);
        assert_eq!(g.generic_order_bound(1).unwrap(), 8);
        for i in 1..=8 {
            for j in 1..=8 {
                assert_eq!(g.well_behaving(i, j), g.well_behaving(j, i));
            }
        }
    }

    #[test]
    fn distances() {
        let chain = hermitian_two();
        let code = chain.code_at(3).unwrap();
        assert_eq!(brute_min_distance(&code.generator()).unwrap(), 5);
        let hist = brute_weight_distribution(&code.generator()).unwrap();
        assert_eq!(hist.iter().sum::<u128>(), 64);
        assert_eq!(hist.iter().skip(1).position(|&c| c > 0).unwrap() + 1, 5);

        let f = chain.curve().field().clone();
        let rep = FieldMatrix::from_rows(&f, 8, &[FieldVector::ones(&f, 8)]).unwrap();
        assert_eq!(brute_min_distance(&rep).unwrap(), 8);
        let hist = brute_weight_distribution(&rep).unwrap();
        assert_eq!((hist[0], hist[8], hist.iter().sum::<u128>()), (1, 3, 4));
        let zero = FieldMatrix::zeros(&f, 2, 8);
        assert_eq!(brute_weight_distribution(&zero).unwrap()[0], 1);
        assert_eq!(
            brute_weight_distribution(&zero)
                .unwrap()
                .iter()
                .sum::<u128>(),
            1
        );
        assert!(brute_min_distance(&zero).is_err());
    }

    #[test]
    fn reed_solomon_over_gf8() {
        let chain = CodeChain::build(&CurveModel::rational_line(8).unwrap()).unwrap();
        let code = chain.code_of_dimension(4).unwrap();
        assert_eq!(brute_min_distance(&code.generator()).unwrap(), 5);
    }

    #[test]
    fn cap_is_enforced() {
        let chain = CodeChain::build(&CurveModel::hermitian(3).unwrap()).unwrap();
        let g = chain.code_of_dimension(7).unwrap().generator();
        assert!(matches!(
            brute_min_distance(&g),
            Err(Error::BruteForceCap { words: 4782969, .. })
        ));
    }

    #[test]
    fn row_operations_do_not_change_distance() {
        let chain = hermitian_two();
        let g = chain.code_of_dimension(4).unwrap().generator();
        let f = g.field().clone();
        let mix =
            FieldMatrix::from_codes(&f, 4, 4, &[1, 2, 0, 3, 0, 1, 1, 0, 2, 0, 1, 1, 0, 0, 0, 1])
                .unwrap();
        assert_eq!(mix.rank(), 4);
        let mixed = mix.mul(&g).unwrap();
        assert_eq!(
            brute_min_distance(&mixed).unwrap(),
            brute_min_distance(&g).unwrap()
        );
        let mut doubled = g.row_vectors();
        doubled.push(g.row(0));
        let redundant = FieldMatrix::from_rows(&f, 8, &doubled).unwrap();
        assert_eq!(
            brute_min_distance(&redundant).unwrap(),
            brute_min_distance(&g).unwrap()
        );
    }

    #[test]
    fn random_basis_bounds_are_sound() {
        let f = Field::new(2, 2).unwrap();
        let mut state = 7u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 4) as u32
        };
        for _ in 0..5 {
            let basis = loop {
                let codes: Vec<u32> = (0..36).map(|_| next()).collect();
                let m = FieldMatrix::from_codes(&f, 6, 6, &codes).unwrap();
                if m.rank() == 6 {
                    break m;
                }
            };
            let g = GenericBasisAnalysis::new(&basis).unwrap();
            for k in 1..=6 {
                let d = brute_min_distance(&basis.submatrix(k, 6)).unwrap();
                assert!(g.generic_order_bound(k).unwrap() <= d);
            }
            let subset = [2, 5];
            let rows = vec![basis.row(1), basis.row(4)];
            let sub = FieldMatrix::from_rows(&f, 6, &rows).unwrap();
            assert!(g.subset_order_bound(&subset).unwrap() <= brute_min_distance(&sub).unwrap());
        }
    }

    #[test]
    fn verify_battery_passes_on_hermitian_two() {
        let checks = verify_chain(&hermitian_two(), DEFAULT_CAP).unwrap();
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
