//! Exact linear algebra over the rationals.
//!
//! Vectors are sparse (sorted `(index, value)` pairs, no stored zeros) and
//! matrices are lists of sparse rows. Every routine is exact; there are no
//! tolerances anywhere in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Field element. Always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Sparse vector with strictly increasing indices and no zero entries.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (n, (i, c)) in self.entries.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{c}")?;
        }
        f.write_str("]")
    }
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(index: usize) -> Self {
        Self {
            entries: vec![(index, Scalar::one())],
        }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(pairs: I) -> Self {
        let mut raw: Vec<(usize, Scalar)> = pairs.into_iter().collect();
        raw.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(raw.len());
        for (i, c) in raw {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        Self { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, index: usize) -> Scalar {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&mut self, factor: &Scalar) {
        if factor.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, c) in &mut self.entries {
            *c *= factor;
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        let mut v = self.clone();
        v.scale(factor);
        v
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: &Scalar, other: &SparseVec) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => merged.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, c) = b.next().unwrap();
                    merged.push((*j, c * factor));
                }
                (Some(_), Some(_)) => {
                    let (i, c) = a.next().unwrap();
                    let (_, d) = b.next().unwrap();
                    let s = c + d * factor;
                    if !s.is_zero() {
                        merged.push((i, s));
                    }
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, c) = b.next().unwrap();
                    merged.push((*j, c * factor));
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, x) = &self.entries[i];
            let (b, y) = &other.entries[j];
            match a.cmp(b) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += x * y;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        Self {
            entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect(),
        }
    }

    /// Re-indexes entries through `map`; entries mapping to `None` are dropped.
    pub fn remap<F: Fn(usize) -> Option<usize>>(&self, map: F) -> Self {
        Self::from_pairs(
            self.entries
                .iter()
                .filter_map(|(i, c)| map(*i).map(|j| (j, c.clone()))),
        )
    }
}

/// Sparse matrix stored as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Result<Self> {
        for r in &rows {
            if let Some(m) = r.max_index() {
                if m >= cols {
                    return Err(Error::DimensionMismatch {
                        expected: cols,
                        found: m + 1,
                    });
                }
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        let mut data = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, c) in col.iter() {
                if i >= rows {
                    return Err(Error::DimensionMismatch {
                        expected: rows,
                        found: i + 1,
                    });
                }
                data[i].push((j, c.clone()));
            }
        }
        Ok(Self {
            rows,
            cols: columns.len(),
            data: data.into_iter().map(SparseVec::from_pairs).collect(),
        })
    }

    pub fn from_dense(values: &[Vec<i64>]) -> Self {
        let cols = values.first().map_or(0, Vec::len);
        let data = values
            .iter()
            .map(|row| SparseVec::from_pairs(row.iter().enumerate().map(|(j, &v)| (j, int(v)))))
            .collect();
        Self {
            rows: values.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        let row = &mut self.data[i];
        let mut pairs: Vec<(usize, Scalar)> = row.iter().filter(|(k, _)| *k != j).map(|(k, c)| (k, c.clone())).collect();
        pairs.push((j, value));
        *row = SparseVec::from_pairs(pairs);
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, c) in row.iter() {
                data[j].push((i, c.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data: data.into_iter().map(|p| SparseVec { entries: p }).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(
            self.data
                .iter()
                .enumerate()
                .map(|(i, row)| (i, row.dot(v)))
                .filter(|(_, c)| !c.is_zero()),
        )
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = SparseVec::new();
                for (k, c) in row.iter() {
                    acc.add_scaled(c, &other.data[k]);
                }
                acc
            })
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }
}

/// Fully reduced echelon basis of a subspace, grown one vector at a time.
///
/// After every insertion the rows are in reduced row-echelon form: each row
/// has a leading 1 in its pivot column and every other row is zero there.
/// Because the reduced form of a subspace is unique, the result does not
/// depend on insertion order.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    /// Rows sorted by pivot column.
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vectors: I) -> Self {
        let mut basis = Self::new();
        for v in vectors {
            basis.insert(v.clone());
        }
        basis
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn pivot_row(&self, column: usize) -> Option<&SparseVec> {
        self.pivots.binary_search(&column).ok().map(|k| &self.rows[k])
    }

    /// Remainder of `v` modulo the span; it has no entries in pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let coeffs: Vec<(usize, Scalar)> = v
            .iter()
            .filter_map(|(i, c)| self.pivots.binary_search(&i).ok().map(|k| (k, c.clone())))
            .collect();
        let mut out = v.clone();
        for (k, c) in coeffs {
            out.add_scaled(&(-c), &self.rows[k]);
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns `true` if the span grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(&v);
        let (lead, c) = match r.leading() {
            None => return false,
            Some((lead, c)) => (lead, c.clone()),
        };
        r.scale(&c.recip());
        for row in &mut self.rows {
            let e = row.get(lead);
            if !e.is_zero() {
                row.add_scaled(&(-e), &r);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, r);
        true
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivot_columns: Vec<usize>,
    pub rank: usize,
}

/// Reduced row-echelon form. Zero rows are moved to the bottom; the shape
/// of the input is preserved.
pub fn rref(m: &Matrix) -> Rref {
    let basis = EchelonBasis::from_vectors(m.row_vectors());
    let rank = basis.dim();
    let mut data = basis.rows.clone();
    data.resize(m.rows(), SparseVec::new());
    Rref {
        reduced: Matrix {
            rows: m.rows(),
            cols: m.cols(),
            data,
        },
        pivot_columns: basis.pivots.clone(),
        rank,
    }
}

/// Basis of the right null space: one vector per free column, with that
/// column set to 1 and the pivot coordinates solved from the reduced form.
pub fn kernel_basis(m: &Matrix) -> Vec<SparseVec> {
    let basis = EchelonBasis::from_vectors(m.row_vectors());
    kernel_from_echelon(&basis, m.cols())
}

pub(crate) fn kernel_from_echelon(basis: &EchelonBasis, cols: usize) -> Vec<SparseVec> {
    let mut is_pivot = vec![false; cols];
    for &p in basis.pivots() {
        is_pivot[p] = true;
    }
    // column -> list of (pivot row, entry)
    let mut column_entries: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
    for (k, row) in basis.rows().iter().enumerate() {
        for (j, c) in row.iter() {
            if !is_pivot[j] {
                column_entries[j].push((k, c.clone()));
            }
        }
    }
    (0..cols)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let pairs = std::iter::once((free, Scalar::one())).chain(
                column_entries[free]
                    .iter()
                    .map(|(k, c)| (basis.pivots()[*k], -c.clone())),
            );
            SparseVec::from_pairs(pairs)
        })
        .collect()
}

/// Expresses `target` as a combination of `generators`, or `None` when it
/// lies outside their span.
pub fn solve_in_span(generators: &[SparseVec], target: &SparseVec, len: usize) -> Result<Option<SparseVec>> {
    for v in generators.iter().chain(std::iter::once(target)) {
        if let Some(m) = v.max_index() {
            if m >= len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: m + 1,
                });
            }
        }
    }
    Ok(SpanSolver::new(generators, len).solve(target))
}

/// Precomputed solver for repeated `M x = y` queries against a fixed set of
/// columns `M`.
///
/// Built from the reduced form of `[Mᵀ-rows | I]`: rows with pivots among the
/// generator columns give the solution, the remaining rows are left null
/// vectors of `M` and certify non-membership.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    ngen: usize,
    /// (pivot generator column, row-combination functional on target space)
    solution_rows: Vec<(usize, SparseVec)>,
    obstructions: Vec<SparseVec>,
}

impl SpanSolver {
    pub fn new(generators: &[SparseVec], len: usize) -> Self {
        let ngen = generators.len();
        let m = Matrix::from_columns(len, generators).expect("generator index out of range");
        let mut basis = EchelonBasis::new();
        for i in 0..len {
            let mut row = m.row(i).clone();
            row.add_scaled(&Scalar::one(), &SparseVec::unit(ngen + i));
            basis.insert(row);
        }
        let mut solution_rows = Vec::new();
        let mut obstructions = Vec::new();
        for (row, &p) in basis.rows().iter().zip(basis.pivots()) {
            let tail = row.remap(|j| j.checked_sub(ngen));
            if p < ngen {
                solution_rows.push((p, tail));
            } else {
                obstructions.push(tail);
            }
        }
        Self {
            ngen,
            solution_rows,
            obstructions,
        }
    }

    pub fn rank(&self) -> usize {
        self.solution_rows.len()
    }

    pub fn num_generators(&self) -> usize {
        self.ngen
    }

    pub fn solve(&self, target: &SparseVec) -> Option<SparseVec> {
        if self.obstructions.iter().any(|o| !o.dot(target).is_zero()) {
            return None;
        }
        Some(SparseVec::from_pairs(
            self.solution_rows
                .iter()
                .map(|(p, f)| (*p, f.dot(target))),
        ))
    }
}
