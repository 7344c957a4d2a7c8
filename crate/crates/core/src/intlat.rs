//! Exact integer lattices: Hermite and Smith normal forms, kernels and
//! membership. All arithmetic is checked; overflow is reported, never
//! wrapped.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("integer overflow in lattice arithmetic")]
    Overflow,
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("basis vectors are linearly dependent")]
    Dependent,
}

type Result<T> = std::result::Result<T, LatticeError>;

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(LatticeError::Overflow)
}

fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(LatticeError::Overflow)
}

fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(LatticeError::Overflow)
}

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(LatticeError::LengthMismatch { expected: rows * cols, got: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Matrix with the given rows; `cols` fixes the width when there are none.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LatticeError::LengthMismatch { expected: cols, got: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Result<Self> {
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LatticeError::LengthMismatch { expected: rows, got: c.len() });
            }
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.cols {
            return Err(LatticeError::LengthMismatch { expected: self.cols, got: x.len() });
        }
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(x).try_fold(0i64, |acc, (a, b)| {
                    acc.checked_add(mul(*a, *b)?).ok_or(LatticeError::Overflow)
                })
            })
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(LatticeError::LengthMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for j in 0..other.cols {
            let c = self.mul_vec(&other.col(j))?;
            for (i, x) in c.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        Ok(out)
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn negate_col(&mut self, j: usize) -> Result<()> {
        for i in 0..self.rows {
            let x = neg(self.get(i, j))?;
            self.set(i, j, x);
        }
        Ok(())
    }

    /// `col[dst] -= q * col[src]`
    fn col_sub(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for i in 0..self.rows {
            let x = sub(self.get(i, dst), mul(q, self.get(i, src))?)?;
            self.set(i, dst, x);
        }
        Ok(())
    }

    /// `row[dst] -= q * row[src]`
    fn row_sub(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        if q == 0 {
            return Ok(());
        }
        for j in 0..self.cols {
            let x = sub(self.get(dst, j), mul(q, self.get(src, j))?)?;
            self.set(dst, j, x);
        }
        Ok(())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Column-style Hermite normal form `h = m * u` with `u` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// `(row, col)` of every pivot; pivot columns are `0..rank`.
    pub pivots: Vec<(usize, usize)>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hnf_with_transform(m: &IntMatrix) -> Result<Hnf> {
    let mut a = m.clone();
    let mut u = IntMatrix::identity(m.cols);
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..m.rows {
        if k == m.cols {
            break;
        }
        loop {
            let best = (k..m.cols)
                .filter(|&j| a.get(i, j) != 0)
                .min_by_key(|&j| a.get(i, j).unsigned_abs());
            let Some(j) = best else { break };
            a.swap_cols(k, j);
            u.swap_cols(k, j);
            let p = a.get(i, k);
            let mut clean = true;
            for j in k + 1..m.cols {
                let q = a.get(i, j) / p;
                a.col_sub(j, k, q)?;
                u.col_sub(j, k, q)?;
                clean &= a.get(i, j) == 0;
            }
            if clean {
                break;
            }
        }
        if a.get(i, k) == 0 {
            continue;
        }
        if a.get(i, k) < 0 {
            a.negate_col(k)?;
            u.negate_col(k)?;
        }
        let p = a.get(i, k);
        for j in 0..k {
            let q = a.get(i, j).div_euclid(p);
            a.col_sub(j, k, q)?;
            u.col_sub(j, k, q)?;
        }
        pivots.push((i, k));
        k += 1;
    }
    Ok(Hnf { h: a, u, pivots })
}

pub fn hnf(m: &IntMatrix) -> Result<IntMatrix> {
    Ok(hnf_with_transform(m)?.h)
}

pub fn rank(m: &IntMatrix) -> Result<usize> {
    Ok(hnf_with_transform(m)?.rank())
}

/// Whether `x` is an integer combination of the columns of `gens`.
pub fn in_column_span(gens: &IntMatrix, x: &[i64]) -> Result<bool> {
    if x.len() != gens.rows {
        return Err(LatticeError::LengthMismatch { expected: gens.rows, got: x.len() });
    }
    let hnf = hnf_with_transform(gens)?;
    let h = &hnf.h;
    let mut rest = x.to_vec();
    let mut next = hnf.pivots.iter().peekable();
    for i in 0..gens.rows {
        match next.peek() {
            Some(&&(pi, pj)) if pi == i => {
                next.next();
                let p = h.get(i, pj);
                if rest[i] % p != 0 {
                    return Ok(false);
                }
                let q = rest[i] / p;
                for (r, row) in rest.iter_mut().zip(0..gens.rows) {
                    *r = sub(*r, mul(q, h.get(row, pj))?)?;
                }
            }
            _ => {
                if rest[i] != 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Nonzero diagonal of the Smith normal form, in divisibility order.
pub fn smith_invariants(m: &IntMatrix) -> Result<Vec<i64>> {
    let mut a = m.clone();
    let mut out = Vec::new();
    let mut t = 0;
    while t < a.rows.min(a.cols) {
        let best = (t..a.rows)
            .flat_map(|i| (t..a.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a.get(i, j) != 0)
            .min_by_key(|&(i, j)| a.get(i, j).unsigned_abs());
        let Some((bi, bj)) = best else { break };
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);
        loop {
            let p = a.get(t, t);
            let mut clean = true;
            for i in t + 1..a.rows {
                a.row_sub(i, t, a.get(i, t) / p)?;
                clean &= a.get(i, t) == 0;
            }
            for j in t + 1..a.cols {
                a.col_sub(j, t, a.get(t, j) / p)?;
                clean &= a.get(t, j) == 0;
            }
            if !clean {
                let in_col = (t + 1..a.rows)
                    .filter(|&i| a.get(i, t) != 0)
                    .min_by_key(|&i| a.get(i, t).unsigned_abs());
                if let Some(i) = in_col {
                    if a.get(i, t).unsigned_abs() < p.unsigned_abs() {
                        a.swap_rows(t, i);
                    }
                }
                let in_row = (t + 1..a.cols)
                    .filter(|&j| a.get(t, j) != 0)
                    .min_by_key(|&j| a.get(t, j).unsigned_abs());
                if let Some(j) = in_row {
                    if a.get(t, j).unsigned_abs() < a.get(t, t).unsigned_abs() {
                        a.swap_cols(t, j);
                    }
                }
                continue;
            }
            let bad = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| a.get(i, j) % p != 0));
            match bad {
                Some(i) => a.row_sub(t, i, -1)?,
                None => break,
            }
        }
        out.push(a.get(t, t).abs());
        t += 1;
    }
    Ok(out)
}

/// Linearly independent integer vectors spanning a sublattice of `Z^ambient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    ambient: usize,
    vectors: Vec<Vec<i64>>,
}

impl LatticeBasis {
    pub fn new(ambient: usize, vectors: Vec<Vec<i64>>) -> Result<Self> {
        let m = IntMatrix::from_columns(ambient, &vectors)?;
        if rank(&m)? != vectors.len() {
            return Err(LatticeError::Dependent);
        }
        Ok(LatticeBasis { ambient, vectors })
    }

    /// The standard basis of `Z^ambient`.
    pub fn full(ambient: usize) -> Self {
        let vectors = (0..ambient)
            .map(|i| (0..ambient).map(|j| i64::from(i == j)).collect())
            .collect();
        LatticeBasis { ambient, vectors }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }

    pub fn as_columns(&self) -> IntMatrix {
        IntMatrix::from_columns(self.ambient, &self.vectors).expect("lengths checked")
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        member(self, x)
    }

    /// Whether `Z^ambient / span` is torsion-free.
    pub fn is_saturated(&self) -> Result<bool> {
        Ok(smith_invariants(&self.as_columns())?.iter().all(|&d| d == 1))
    }

    /// Same lattice, basis in column Hermite normal form.
    pub fn canonical(&self) -> Result<LatticeBasis> {
        let hnf = hnf_with_transform(&self.as_columns())?;
        let vectors = (0..hnf.rank()).map(|j| hnf.h.col(j)).collect();
        Ok(LatticeBasis { ambient: self.ambient, vectors })
    }
}

pub fn kernel_lattice(m: &IntMatrix) -> Result<LatticeBasis> {
    let hnf = hnf_with_transform(m)?;
    let vectors = (hnf.rank()..m.cols).map(|j| hnf.u.col(j)).collect();
    LatticeBasis { ambient: m.cols, vectors }.canonical()
}

pub fn member(basis: &LatticeBasis, x: &[i64]) -> Result<bool> {
    in_column_span(&basis.as_columns(), x)
}

/// Whether `x` lies in `2 Z^v + span(basis)`.
pub fn member_mod2(x: &[i64], basis: &LatticeBasis) -> Result<bool> {
    let v = basis.ambient;
    if x.len() != v {
        return Err(LatticeError::LengthMismatch { expected: v, got: x.len() });
    }
    let mut gens: Vec<Vec<i64>> =
        (0..v).map(|i| (0..v).map(|j| if i == j { 2 } else { 0 }).collect()).collect();
    gens.extend(basis.vectors.iter().cloned());
    in_column_span(&IntMatrix::from_columns(v, &gens)?, x)
}
