//! Dense vectors and matrices over a [`Field`].
//!
//! Everything here is plain Gaussian elimination with "first nonzero" pivoting; exact
//! arithmetic needs no pivoting strategy and the codes we handle have length at most a
//! few hundred.
//!
//! Text format for matrices: a header line `rows cols gf(p^m)` followed by one line per
//! row of space-separated element codes.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

fn check_field(a: &Field, b: &Field) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch {
            left: a.name(),
            right: b.name(),
        })
    }
}

/// A vector in `F^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldVector {
    field: Field,
    data: Vec<Fe>,
}

impl FieldVector {
    pub fn new(field: &Field, data: Vec<Fe>) -> Result<Self> {
        if let Some(bad) = data.iter().find(|e| e.0 >= field.order()) {
            return Err(Error::NotInField {
                code: bad.0,
                field: field.name(),
            });
        }
        Ok(FieldVector {
            field: field.clone(),
            data,
        })
    }

    pub fn from_codes(field: &Field, codes: &[u32]) -> Result<Self> {
        Self::new(field, codes.iter().map(|&c| Fe(c)).collect())
    }

    pub fn zeros(field: &Field, n: usize) -> Self {
        FieldVector {
            field: field.clone(),
            data: vec![Fe::ZERO; n],
        }
    }

    pub fn ones(field: &Field, n: usize) -> Self {
        FieldVector {
            field: field.clone(),
            data: vec![Fe::ONE; n],
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[Fe] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Fe> {
        self.data
    }

    pub fn get(&self, i: usize) -> Fe {
        self.data[i]
    }

    pub fn set(&mut self, i: usize, v: Fe) {
        self.data[i] = v;
    }

    pub fn codes(&self) -> Vec<u32> {
        self.data.iter().map(|e| e.0).collect()
    }

    fn check(&self, other: &FieldVector) -> Result<()> {
        check_field(&self.field, &other.field)?;
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "vector lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &FieldVector, f: impl Fn(Fe, Fe) -> Fe) -> Result<FieldVector> {
        self.check(other)?;
        Ok(FieldVector {
            field: self.field.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Coordinatewise product.
    pub fn star(&self, other: &FieldVector) -> Result<FieldVector> {
        self.zip_with(other, |a, b| self.field.mul(a, b))
    }

    pub fn add(&self, other: &FieldVector) -> Result<FieldVector> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &FieldVector) -> Result<FieldVector> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, c: Fe) -> FieldVector {
        FieldVector {
            field: self.field.clone(),
            data: self.data.iter().map(|&a| self.field.mul(a, c)).collect(),
        }
    }

    /// Standard bilinear form `sum u_i v_i`.
    pub fn inner(&self, other: &FieldVector) -> Result<Fe> {
        self.check(other)?;
        Ok(self.field.sum(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| self.field.mul(a, b)),
        ))
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.data.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn hamming_distance(&self, other: &FieldVector) -> Result<usize> {
        self.check(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .filter(|(a, b)| a != b)
            .count())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Space-separated codes.
    pub fn to_line(&self) -> String {
        join_codes(&self.data)
    }
}

pub(crate) fn join_codes(data: &[Fe]) -> String {
    let mut out = String::new();
    for (i, e) in data.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{}", e.0).unwrap();
    }
    out
}

/// Parses a line of whitespace-separated element codes.
pub fn parse_codes(field: &Field, line: &str) -> Result<Vec<Fe>> {
    line.split_whitespace()
        .map(|tok| {
            let code: u32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad element code {tok:?}")))?;
            field.element(code)
        })
        .collect()
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl FieldMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    /// Diagonal matrix with `v` on the diagonal.
    pub fn diagonal(v: &FieldVector) -> Self {
        let mut m = Self::zeros(v.field(), v.len(), v.len());
        for (i, &e) in v.as_slice().iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Stacks vectors as rows. `cols` is needed to describe a matrix with no rows.
    pub fn from_rows(field: &Field, cols: usize, rows: &[FieldVector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_field(field, r.field())?;
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r.as_slice());
        }
        Ok(FieldMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_codes(field: &Field, rows: usize, cols: usize, codes: &[u32]) -> Result<Self> {
        if codes.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} codes for a {rows}x{cols} matrix",
                codes.len()
            )));
        }
        let data = codes
            .iter()
            .map(|&c| field.element(c))
            .collect::<Result<_>>()?;
        Ok(FieldMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> FieldVector {
        FieldVector {
            field: self.field.clone(),
            data: self.data[r * self.cols..(r + 1) * self.cols].to_vec(),
        }
    }

    pub fn row_slice(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<FieldVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Top-left `rows x cols` block.
    pub fn submatrix(&self, rows: usize, cols: usize) -> Self {
        let mut s = Self::zeros(&self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                s.set(r, c, self.get(r, c));
            }
        }
        s
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        check_field(&self.field, &other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let cur = out.get(r, c);
                    out.set(r, c, f.add(cur, f.mul(a, other.get(k, c))));
                }
            }
        }
        Ok(out)
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &FieldVector) -> Result<FieldVector> {
        check_field(&self.field, v.field())?;
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let f = &self.field;
        let data = (0..self.rows)
            .map(|r| {
                f.sum(
                    self.row_slice(r)
                        .iter()
                        .zip(v.as_slice())
                        .map(|(&a, &b)| f.mul(a, b)),
                )
            })
            .collect();
        Ok(FieldVector {
            field: f.clone(),
            data,
        })
    }

    /// `v^T M`, i.e. the combination of rows with coefficients `v`.
    pub fn combine_rows(&self, v: &[Fe]) -> Result<FieldVector> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} rows",
                v.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut data = vec![Fe::ZERO; self.cols];
        for (r, &coef) in v.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (c, slot) in data.iter_mut().enumerate() {
                *slot = f.add(*slot, f.mul(coef, self.get(r, c)));
            }
        }
        Ok(FieldVector {
            field: f.clone(),
            data,
        })
    }

    /// In-place reduction to reduced row echelon form; returns the pivot columns.
    fn reduce(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = f.inv(self.get(row, col)).expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.get(row, c);
                self.set(row, c, f.mul(v, inv));
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rref(&self) -> FieldMatrix {
        let mut m = self.clone();
        m.reduce();
        m
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// One solution of `A x = b`, free variables set to zero; `None` if inconsistent.
    pub fn solve(&self, b: &FieldVector) -> Result<Option<FieldVector>> {
        check_field(&self.field, b.field())?;
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} right-hand sides for {} equations",
                b.len(),
                self.rows
            )));
        }
        let mut aug = FieldMatrix::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b.get(r));
        }
        let pivots = aug.reduce();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = FieldVector::zeros(&self.field, self.cols);
        for (r, &c) in pivots.iter().enumerate() {
            x.set(c, aug.get(r, self.cols));
        }
        Ok(Some(x))
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<FieldVector> {
        let mut m = self.clone();
        let pivots = m.reduce();
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = FieldVector::zeros(f, self.cols);
                v.set(fc, Fe::ONE);
                for (r, &pc) in pivots.iter().enumerate() {
                    v.set(pc, f.neg(m.get(r, fc)));
                }
                v
            })
            .collect()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<FieldMatrix>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = FieldMatrix::zeros(&self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, Fe::ONE);
        }
        let pivots = aug.reduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = FieldMatrix::zeros(&self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Ok(Some(inv))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.field.name());
        for r in 0..self.rows {
            out.push_str(&join_codes(self.row_slice(r)));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<FieldMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("bad matrix header {header:?}")));
        }
        let rows: usize = parts[0]
            .parse()
            .map_err(|_| Error::Parse("bad row count".into()))?;
        let cols: usize = parts[1]
            .parse()
            .map_err(|_| Error::Parse("bad column count".into()))?;
        let field = Field::from_name(parts[2])?;
        let mut data = Vec::with_capacity(rows * cols);
        for (i, line) in lines.enumerate() {
            let row = parse_codes(&field, line)?;
            if row.len() != cols || i >= rows {
                return Err(Error::Parse(format!(
                    "matrix row {} has wrong shape",
                    i + 1
                )));
            }
            data.extend(row);
        }
        if data.len() != rows * cols {
            return Err(Error::Parse(format!("expected {rows} rows")));
        }
        Ok(FieldMatrix {
            field,
            rows,
            cols,
            data,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::new(2, 2).unwrap()
    }

    /// Tiny deterministic generator for test matrices.
    struct Lcg(u64);
    impl Lcg {
        fn next(&mut self, bound: u32) -> u32 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((self.0 >> 33) % bound as u64) as u32
        }
        fn matrix(&mut self, f: &Field, r: usize, c: usize) -> FieldMatrix {
            let codes: Vec<u32> = (0..r * c).map(|_| self.next(f.order())).collect();
            FieldMatrix::from_codes(f, r, c, &codes).unwrap()
        }
    }

    #[test]
    fn star_examples() {
        let f = gf4();
        let u = FieldVector::from_codes(&f, &[0, 1, 2]).unwrap();
        let v = FieldVector::from_codes(&f, &[2, 2, 2]).unwrap();
        assert_eq!(u.star(&v).unwrap().codes(), vec![0, 2, 3]);
        assert_eq!(FieldVector::ones(&f, 3).star(&u).unwrap(), u);
        let w = FieldVector::from_codes(&f, &[1, 2]).unwrap();
        assert!(matches!(u.star(&w), Err(Error::DimensionMismatch(_))));
        let g8 = Field::new(2, 3).unwrap();
        let x = FieldVector::from_codes(&g8, &[1, 1, 1]).unwrap();
        assert!(matches!(u.star(&x), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn weights() {
        let f = gf4();
        assert_eq!(FieldVector::zeros(&f, 8).weight(), 0);
        let e = FieldVector::from_codes(&f, &[1, 0, 0, 2, 0, 0, 0, 0]).unwrap();
        assert_eq!(e.weight(), 2);
        let mut rng = Lcg(3);
        for _ in 0..1000 {
            let u: Vec<u32> = (0..8).map(|_| rng.next(4)).collect();
            let v: Vec<u32> = (0..8).map(|_| rng.next(4)).collect();
            let u = FieldVector::from_codes(&f, &u).unwrap();
            let v = FieldVector::from_codes(&f, &v).unwrap();
            let recount = (0..8).filter(|&i| u.get(i) != v.get(i)).count();
            assert_eq!(u.hamming_distance(&v).unwrap(), recount);
            assert_eq!(u.sub(&v).unwrap().weight(), recount);
        }
    }

    #[test]
    fn identity_rank_and_planted_solve() {
        let f = gf4();
        assert_eq!(FieldMatrix::identity(&f, 7).rank(), 7);
        let mut rng = Lcg(11);
        let mut solved = 0;
        while solved < 20 {
            let a = rng.matrix(&f, 8, 8);
            if a.rank() < 8 {
                continue;
            }
            let x: Vec<u32> = (0..8).map(|_| rng.next(4)).collect();
            let x = FieldVector::from_codes(&f, &x).unwrap();
            let b = a.mul_vec(&x).unwrap();
            assert_eq!(a.solve(&b).unwrap().unwrap(), x);
            let inv = a.inverse().unwrap().unwrap();
            assert_eq!(a.mul(&inv).unwrap(), FieldMatrix::identity(&f, 8));
            solved += 1;
        }
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let f = Field::new(3, 1).unwrap();
        let a = FieldMatrix::from_codes(&f, 2, 2, &[1, 1, 2, 2]).unwrap();
        let b = FieldVector::from_codes(&f, &[1, 1]).unwrap();
        assert_eq!(a.solve(&b).unwrap(), None);
        let b = FieldVector::from_codes(&f, &[1, 2]).unwrap();
        // free variable set to zero
        assert_eq!(a.solve(&b).unwrap().unwrap().codes(), vec![1, 0]);
        assert!(a.inverse().unwrap().is_none());
        let short = FieldVector::from_codes(&f, &[1]).unwrap();
        assert!(a.solve(&short).is_err());
    }

    #[test]
    fn rank_nullity_and_rref_idempotent() {
        let mut rng = Lcg(5);
        for (p, m) in [(2, 1), (2, 2), (2, 3)] {
            let f = Field::new(p, m).unwrap();
            for trial in 0..60 {
                let (r, c) = (1 + trial % 7, 1 + (trial * 3) % 9);
                let mut a = rng.matrix(&f, r, c);
                if trial % 4 == 0 && r > 1 {
                    // force a dependent row
                    let dup = a.row(0);
                    for col in 0..c {
                        a.set(r - 1, col, dup.get(col));
                    }
                }
                let rank = a.rank();
                let ns = a.nullspace();
                assert_eq!(rank + ns.len(), c);
                for v in &ns {
                    assert!(a.mul_vec(v).unwrap().is_zero());
                }
                let red = a.rref();
                assert_eq!(red.rref(), red);
                assert_eq!(red.rank(), rank);
                let nonzero_rows = (0..r).filter(|&i| !red.row(i).is_zero()).count();
                assert_eq!(nonzero_rows, rank);
            }
        }
    }

    #[test]
    fn syndrome_matrix_rank_is_error_weight() {
        let f = gf4();
        let mut rng = Lcg(9);
        let b = loop {
            let b = rng.matrix(&f, 8, 8);
            if b.rank() == 8 {
                break b;
            }
        };
        let e = FieldVector::from_codes(&f, &[1, 0, 0, 2, 0, 0, 0, 0]).unwrap();
        let s = b
            .mul(&FieldMatrix::diagonal(&e))
            .unwrap()
            .mul(&b.transpose())
            .unwrap();
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn text_format_round_trip() {
        let f = Field::new(3, 2).unwrap();
        let m = FieldMatrix::from_codes(&f, 2, 3, &[0, 8, 4, 1, 2, 3]).unwrap();
        let text = m.to_text();
        assert_eq!(text, "2 3 gf(3^2)\n0 8 4\n1 2 3\n");
        assert_eq!(FieldMatrix::from_text(&text).unwrap(), m);
        assert!(FieldMatrix::from_text("2 3 gf(3^2)\n0 8 4\n").is_err());
        assert!(FieldMatrix::from_text("1 2 gf(3^2)\n0 9\n").is_err());
    }

    #[test]
    fn star_algebra_laws_exhaustive() {
        let f = gf4();
        let n = 2;
        let all: Vec<FieldVector> = (0..16u32)
            .map(|i| FieldVector::from_codes(&f, &[i % 4, i / 4]).unwrap())
            .collect();
        for u in &all {
            for v in &all {
                assert_eq!(u.star(v).unwrap(), v.star(u).unwrap());
                for w in &all {
                    assert_eq!(
                        u.star(&v.star(w).unwrap()).unwrap(),
                        u.star(v).unwrap().star(w).unwrap()
                    );
                    assert_eq!(
                        u.star(&v.add(w).unwrap()).unwrap(),
                        u.star(v).unwrap().add(&u.star(w).unwrap()).unwrap()
                    );
                    assert_eq!(
                        u.inner(&v.star(w).unwrap()).unwrap(),
                        u.star(v).unwrap().inner(w).unwrap()
                    );
                }
            }
        }
        assert_eq!(all[0].len(), n);
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn vec_strategy(len: usize) -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..8, len)
    }

    proptest! {
        #[test]
        fn star_laws_length_four(u in vec_strategy(4), v in vec_strategy(4), w in vec_strategy(4)) {
            let f = Field::new(2, 3).unwrap();
            let (u, v, w) = (
                FieldVector::from_codes(&f, &u).unwrap(),
                FieldVector::from_codes(&f, &v).unwrap(),
                FieldVector::from_codes(&f, &w).unwrap(),
            );
            prop_assert_eq!(u.star(&v).unwrap(), v.star(&u).unwrap());
            prop_assert_eq!(
                u.inner(&v.star(&w).unwrap()).unwrap(),
                u.star(&v).unwrap().inner(&w).unwrap()
            );
        }
    }
}
