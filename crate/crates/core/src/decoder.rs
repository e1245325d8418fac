//! Feng-Rao majority-voting decoding of the codes of a Castle chain.
//!
//! The dual of `C_k = <b_1, ..., b_k>` is spanned by `h_1, ..., h_{n-k}` where `h_i = x * b_i`
//! for a fixed everywhere-nonzero `x` with `b_i . h_j = 0` whenever `i + j <= n`. A received
//! word `u = c + e` gives the syndromes `s_i = h_i . u = h_i . e` for `i <= n - k`; the
//! remaining `s_{n-k+1}, ..., s_n` are voted for one at a time, after which `e` is the unique
//! solution of `H e = s`.
//!
//! At step `l` (syndromes `s_1..s_l` known) the syndrome matrix `S = (s_{rt})`, with
//! `s_{rt} = (h_r * h_t) . e`, is known at `(r, t)` whenever `h_r * h_t` lies in
//! `<h_1, ..., h_l>`. Each pair `(i, j)` with `m_i + m_j = m_{l+1}` whose three leading
//! submatrices `S(i-1, j-1)`, `S(i-1, j)`, `S(i, j-1)` have equal rank is a candidate; its
//! rank-preserving completion of `s_{ij}` determines a vote for `s_{l+1}`.

use crate::bounds::BoundTable;
use crate::codechain::{CodeChain, OnePointCode};
use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::{FieldMatrix, FieldVector};

/// Solves `(b_i * b_j) . x = 0` for `i + j <= n` and returns an everywhere-nonzero solution,
/// preferring the all-ones vector.
pub fn isometry_vector(chain: &CodeChain) -> Result<FieldVector> {
    let n = chain.n();
    let field = chain.curve().field();
    let basis = chain.basis();
    let mut rows = Vec::new();
    for i in 1..=n {
        for j in i..=n - i {
            rows.push(basis.row(i - 1).star(&basis.row(j - 1))?);
        }
    }
    let system = FieldMatrix::from_rows(field, n, &rows)?;
    let ones = FieldVector::ones(field, n);
    if system.mul_vec(&ones)?.is_zero() {
        return Ok(ones);
    }
    let kernel = system.nullspace();
    let everywhere_nonzero = |v: &FieldVector| v.weight() == n;
    if let Some(v) = kernel.iter().find(|v| everywhere_nonzero(v)) {
        return Ok(normalize(v));
    }
    // Random combinations; an everywhere-nonzero vector exists for Castle chains.
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let q = field.order() as u64;
    for _ in 0..4096 {
        let mut v = FieldVector::zeros(field, n);
        for k in &kernel {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let c = Fe(((state >> 33) % q) as u32);
            v = v.add(&k.scale(c))?;
        }
        if everywhere_nonzero(&v) {
            return Ok(normalize(&v));
        }
    }
    Err(Error::NoIsometry(kernel.len()))
}

fn normalize(v: &FieldVector) -> FieldVector {
    let inv = v.field().inv(v.get(0)).expect("nonzero coordinate");
    v.scale(inv)
}

/// `h_i = x * b_i`, checking `b_i . h_j = 0` for `i + j <= n` and `!= 0` for `i + j = n + 1`.
pub fn dual_basis(chain: &CodeChain) -> Result<(FieldMatrix, FieldVector)> {
    let x = isometry_vector(chain)?;
    let rows: Vec<FieldVector> = chain
        .basis()
        .row_vectors()
        .iter()
        .map(|b| x.star(b))
        .collect::<Result<_>>()?;
    let h = FieldMatrix::from_rows(chain.curve().field(), chain.n(), &rows)?;
    check_orthogonality(chain.basis(), &h)?;
    Ok((h, x))
}

/// Verifies the orthogonality pattern between the rows of `b` and `h`.
pub fn check_orthogonality(b: &FieldMatrix, h: &FieldMatrix) -> Result<()> {
    let n = b.rows();
    for i in 1..=n {
        for j in 1..=(n + 1 - i) {
            let ip = b.row(i - 1).inner(&h.row(j - 1))?;
            if (i + j <= n) != ip.is_zero() {
                return Err(Error::NotCastle(format!(
                    "b_{i} . h_{j} = {} breaks the duality pattern",
                    ip.0
                )));
            }
        }
    }
    Ok(())
}

/// Precomputed data for decoding one code `C_k` of a chain.
#[derive(Debug, Clone)]
pub struct DecoderContext {
    chain: CodeChain,
    k: usize,
    x: FieldVector,
    h: FieldMatrix,
    /// Coordinates of `h_i * h_j` (i <= j) in the basis `h`, packed by [`pair_slot`].
    products: Vec<Vec<Fe>>,
    /// Index of the last nonzero coordinate, 1-based.
    rho: Vec<usize>,
    /// `N*_l` for `l = n - k, ..., n - 1`.
    nstar: Vec<Vec<(usize, usize)>>,
    delta: usize,
}

fn pair_slot(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i <= j {
        (i - 1, j - 1)
    } else {
        (j - 1, i - 1)
    };
    a * n - a * (a + 1) / 2 + b
}

impl DecoderContext {
    /// Context for `C_k = <b_1, ..., b_k>`, `1 <= k <= n`.
    pub fn new(chain: &CodeChain, k: usize) -> Result<Self> {
        let n = chain.n();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange {
                index: k as i64,
                lo: 1,
                hi: n as i64,
            });
        }
        let (h, x) = dual_basis(chain)?;
        let h_inv = h.inverse()?.ok_or(Error::RankDeficient {
            rank: h.rank(),
            expected: n,
        })?;
        let mut products = Vec::with_capacity(n * (n + 1) / 2);
        let mut rho = Vec::with_capacity(n * (n + 1) / 2);
        for i in 1..=n {
            for j in i..=n {
                let prod = h.row(i - 1).star(&h.row(j - 1))?;
                let coords = h_inv.combine_rows(prod.as_slice())?.into_vec();
                rho.push(
                    coords
                        .iter()
                        .rposition(|c| !c.is_zero())
                        .map_or(0, |p| p + 1),
                );
                products.push(coords);
            }
        }
        let table = BoundTable::from_chain(chain);
        let mut nstar = Vec::with_capacity(k);
        for l in n - k..n {
            let pairs = table.nstar_set(l)?;
            for &(i, j) in &pairs {
                let slot = pair_slot(n, i, j);
                if rho[slot] != l + 1 {
                    return Err(Error::NotCastle(format!(
                        "h_{i} * h_{j} has rho {} but m_{i} + m_{j} = m_{}",
                        rho[slot],
                        l + 1
                    )));
                }
            }
            nstar.push(pairs);
        }
        let delta = table.d_ord_dual(n - k)?;
        Ok(DecoderContext {
            chain: chain.clone(),
            k,
            x,
            h,
            products,
            rho,
            nstar,
            delta,
        })
    }

    pub fn for_code(code: &OnePointCode<'_>) -> Result<Self> {
        Self::new(code.chain(), code.k())
    }

    pub fn chain(&self) -> &CodeChain {
        &self.chain
    }

    pub fn field(&self) -> &Field {
        self.chain.curve().field()
    }

    pub fn n(&self) -> usize {
        self.chain.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn code(&self) -> OnePointCode<'_> {
        self.chain
            .code_of_dimension(self.k)
            .expect("k validated at construction")
    }

    pub fn isometry(&self) -> &FieldVector {
        &self.x
    }

    /// Rows `h_1, ..., h_n`.
    pub fn dual_basis(&self) -> &FieldMatrix {
        &self.h
    }

    /// `delta = min{#N*_l : n - k <= l < n}`.
    pub fn designed_distance(&self) -> usize {
        self.delta
    }

    /// `floor((delta - 1) / 2)`.
    pub fn correction_radius(&self) -> usize {
        (self.delta - 1) / 2
    }

    /// `lambda` with `h_i * h_j = sum lambda_t h_t`.
    pub fn product_coordinates(&self, i: usize, j: usize) -> &[Fe] {
        &self.products[pair_slot(self.n(), i, j)]
    }

    /// Largest `t` with `lambda_t != 0` in [`product_coordinates`](Self::product_coordinates).
    pub fn rho(&self, i: usize, j: usize) -> usize {
        self.rho[pair_slot(self.n(), i, j)]
    }

    /// `N*_l` for `n - k <= l < n`.
    pub fn nstar_set(&self, l: usize) -> &[(usize, usize)] {
        &self.nstar[l + self.k - self.n()]
    }

    /// `s_i = h_i . u` for `i <= n - k`.
    pub fn syndromes(&self, u: &FieldVector) -> Result<Vec<Fe>> {
        (0..self.n() - self.k)
            .map(|i| self.h.row(i).inner(u))
            .collect()
    }

    pub fn decode(&self, u: &FieldVector) -> Result<Decoded> {
        let mut state = SyndromeState::new(self, u)?;
        let mut steps = Vec::with_capacity(self.k);
        while state.frontier() < self.n() {
            steps.push(state.step()?);
        }
        let syndromes = state.syndromes().to_vec();
        let s = FieldVector::new(self.field(), syndromes.clone())?;
        let error = self.h.solve(&s)?.ok_or_else(|| Error::DecodingFailure {
            stage: "error recovery",
            detail: "syndrome system is inconsistent".into(),
        })?;
        let weight = error.weight();
        if weight > self.correction_radius() {
            return Err(Error::DecodingFailure {
                stage: "post-verification",
                detail: format!(
                    "error of weight {weight} exceeds the radius {}",
                    self.correction_radius()
                ),
            });
        }
        let codeword = u.sub(&error)?;
        let message = self
            .code()
            .unencode(&codeword)?
            .ok_or_else(|| Error::DecodingFailure {
                stage: "post-verification",
                detail: "corrected word is not in the code".into(),
            })?;
        Ok(Decoded {
            codeword,
            error,
            message,
            syndromes,
            steps,
        })
    }
}

/// Output of a successful decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: FieldVector,
    pub error: FieldVector,
    pub message: Vec<Fe>,
    /// All `n` syndromes `s_i = h_i . e`.
    pub syndromes: Vec<Fe>,
    pub steps: Vec<VoteStep>,
}

/// One voting round, determining `s_{l+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoteStep {
    pub l: usize,
    pub candidates: Vec<Candidate>,
    /// Pairs of `N*_l` that failed the rank test.
    pub discrepancies: Vec<(usize, usize)>,
    pub chosen: Fe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub pair: (usize, usize),
    /// The rank-preserving value `s'_{ij}`.
    pub predicted: Fe,
    /// The implied value of `s_{l+1}`.
    pub vote: Fe,
}

/// The partially known syndromes of one received word.
#[derive(Debug, Clone)]
pub struct SyndromeState<'a> {
    ctx: &'a DecoderContext,
    s: Vec<Fe>,
    /// Cache of `s_{rt}`, filled once known.
    entries: Vec<Option<Fe>>,
}

impl<'a> SyndromeState<'a> {
    pub fn new(ctx: &'a DecoderContext, u: &FieldVector) -> Result<Self> {
        if u.len() != ctx.n() {
            return Err(Error::DimensionMismatch(format!(
                "received word of length {} for a code of length {}",
                u.len(),
                ctx.n()
            )));
        }
        let s = ctx.syndromes(u)?;
        Ok(SyndromeState {
            ctx,
            s,
            entries: vec![None; ctx.n() * ctx.n()],
        })
    }

    /// Number of known syndromes `l`.
    pub fn frontier(&self) -> usize {
        self.s.len()
    }

    pub fn syndromes(&self) -> &[Fe] {
        &self.s
    }

    /// `s_{rt}` if `rho(h_r * h_t) <= l`.
    pub fn entry(&mut self, r: usize, t: usize) -> Option<Fe> {
        let n = self.ctx.n();
        let slot = (r - 1) * n + (t - 1);
        if let Some(v) = self.entries[slot] {
            return Some(v);
        }
        let rho = self.ctx.rho(r, t);
        if rho > self.frontier() {
            return None;
        }
        let field = self.ctx.field();
        let lambda = self.ctx.product_coordinates(r, t);
        let v = field.sum((0..rho).map(|u| field.mul(lambda[u], self.s[u])));
        self.entries[slot] = Some(v);
        Some(v)
    }

    /// Leading `rows x cols` submatrix, or `None` if some entry is unknown.
    fn block(&mut self, rows: usize, cols: usize) -> Option<FieldMatrix> {
        let mut m = FieldMatrix::zeros(self.ctx.field(), rows, cols);
        for r in 1..=rows {
            for t in 1..=cols {
                m.set(r - 1, t - 1, self.entry(r, t)?);
            }
        }
        Some(m)
    }

    /// The rank test `rank S(i-1,j-1) = rank S(i-1,j) = rank S(i,j-1)`.
    pub fn is_candidate(&mut self, i: usize, j: usize) -> Result<bool> {
        let unknown = || Error::DecodingFailure {
            stage: "syndrome matrix",
            detail: format!("entries above ({i},{j}) are not known"),
        };
        let corner = self.block(i - 1, j - 1).ok_or_else(unknown)?.rank();
        let below = self.block(i, j - 1).ok_or_else(unknown)?.rank();
        let right = self.block(i - 1, j).ok_or_else(unknown)?.rank();
        Ok(corner == below && corner == right)
    }

    /// The unique `s'_{ij}` keeping `rank S(i, j) = rank S(i-1, j-1)`, for a candidate `(i, j)`.
    pub fn predicted_entry(&mut self, i: usize, j: usize) -> Result<Fe> {
        if !self.is_candidate(i, j)? {
            return Err(Error::InvalidParameter(format!(
                "({i},{j}) is not a candidate"
            )));
        }
        if i == 1 || j == 1 {
            return Ok(Fe::ZERO);
        }
        let field = self.ctx.field().clone();
        let upper = self.block(i - 1, j).expect("checked by is_candidate");
        let row_i: Vec<Fe> = (1..j).map(|t| self.entry(i, t).expect("known")).collect();
        let left = upper.submatrix(i - 1, j - 1);
        let gamma = left
            .transpose()
            .solve(&FieldVector::new(&field, row_i)?)?
            .expect("row i lies in the row space for a candidate");
        Ok(field.sum((0..i - 1).map(|r| field.mul(gamma.get(r), upper.get(r, j - 1)))))
    }

    /// Runs the vote for `s_{l+1}` and records it.
    pub fn step(&mut self) -> Result<VoteStep> {
        let l = self.frontier();
        let field = self.ctx.field().clone();
        let mut candidates = Vec::new();
        let mut discrepancies = Vec::new();
        for &(i, j) in self.ctx.nstar_set(l) {
            if !self.is_candidate(i, j)? {
                discrepancies.push((i, j));
                continue;
            }
            let predicted = self.predicted_entry(i, j)?;
            let lambda = self.ctx.product_coordinates(i, j);
            let known = field.sum((0..l).map(|t| field.mul(lambda[t], self.s[t])));
            let vote = field.div(field.sub(predicted, known), lambda[l])?;
            candidates.push(Candidate {
                pair: (i, j),
                predicted,
                vote,
            });
        }
        let chosen = plurality(&candidates).ok_or_else(|| Error::DecodingFailure {
            stage: "voting",
            detail: if candidates.is_empty() {
                format!("no candidates for s_{}", l + 1)
            } else {
                format!("tied vote for s_{}", l + 1)
            },
        })?;
        self.s.push(chosen);
        Ok(VoteStep {
            l,
            candidates,
            discrepancies,
            chosen,
        })
    }
}

fn plurality(candidates: &[Candidate]) -> Option<Fe> {
    let mut tally: Vec<(Fe, usize)> = Vec::new();
    for c in candidates {
        match tally.iter_mut().find(|(v, _)| *v == c.vote) {
            Some((_, count)) => *count += 1,
            None => tally.push((c.vote, 1)),
        }
    }
    let best = tally.iter().map(|&(_, c)| c).max()?;
    let mut winners = tally.iter().filter(|&&(_, c)| c == best);
    let winner = winners.next()?.0;
    winners.next().is_none().then_some(winner)
}
