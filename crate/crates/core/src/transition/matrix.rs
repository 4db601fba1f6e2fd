//! Finite truncations of the even triangular transition matrices and the
//! Bressoud and Krattenthaler inversion pairs.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactalg::{Field, RationalExpr, SpecField};
use crate::qseries::{qpoch, qpoch_quot};

use super::coeffs::{b_at, btilde_at, c_coeff, TransParams};
use super::TransError;

/// Which triangular pattern a matrix follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    /// Entries at `(r, r - 2i)`.
    LowerEven,
    /// Entries at `(i, i + 2k)`.
    UpperEven,
    /// Entries at `(i, j)` with `i >= j`.
    Lower,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::LowerEven => "lower-even",
            Orientation::UpperEven => "upper-even",
            Orientation::Lower => "lower",
        }
    }

    pub fn allows(self, i: usize, j: usize) -> bool {
        match self {
            Orientation::LowerEven => i >= j && (i - j) % 2 == 0,
            Orientation::UpperEven => j >= i && (j - i) % 2 == 0,
            Orientation::Lower => i >= j,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A `size x cols` truncation of a triangular matrix. Entries outside the
/// pattern, and entries equal to zero, are not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TriMatrix<F = RationalExpr> {
    pub size: usize,
    pub cols: usize,
    pub orientation: Orientation,
    pub spec: String,
    pub entries: BTreeMap<(usize, usize), F>,
}

impl<F: Field> TriMatrix<F> {
    pub fn new(size: usize, cols: usize, orientation: Orientation, spec: impl Into<String>) -> TriMatrix<F> {
        TriMatrix { size, cols, orientation, spec: spec.into(), entries: BTreeMap::new() }
    }

    pub fn identity(size: usize, orientation: Orientation, spec: impl Into<String>) -> TriMatrix<F> {
        let mut m = TriMatrix::new(size, size, orientation, spec);
        for i in 0..size {
            m.entries.insert((i, i), F::one());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    /// Stores `v` at `(i, j)`; panics outside the declared pattern.
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        assert!(i < self.size && j < self.cols, "index ({i}, {j}) outside {}x{}", self.size, self.cols);
        assert!(self.orientation.allows(i, j), "index ({i}, {j}) outside the {} pattern", self.orientation);
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    /// Matrix product over the shared index range.
    pub fn mul(&self, o: &TriMatrix<F>) -> TriMatrix<F> {
        let orientation = if self.orientation == o.orientation { self.orientation } else { Orientation::Lower };
        let inner = self.cols.min(o.size);
        let mut out = TriMatrix::new(self.size, o.cols, orientation, self.spec.clone());
        let mut acc: BTreeMap<(usize, usize), F> = BTreeMap::new();
        for (&(i, j), x) in &self.entries {
            if j >= inner {
                continue;
            }
            for (&(_, k), y) in o.entries.range((j, 0)..(j + 1, 0)) {
                let e = acc.entry((i, k)).or_insert_with(F::zero);
                *e = e.plus(&x.times(y));
            }
        }
        for ((i, k), v) in acc {
            if !v.is_zero() {
                out.entries.insert((i, k), v);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size.min(self.cols)).all(|i| self.entries.get(&(i, i)).is_some_and(|v| v.is_one()))
            && self.entries.iter().all(|(&(i, j), v)| i == j || v.is_zero())
    }

    /// Entries of `self - o` that are nonzero.
    pub fn differences(&self, o: &TriMatrix<F>) -> Vec<(usize, usize)> {
        let mut keys: Vec<(usize, usize)> = self.entries.keys().chain(o.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().filter(|&(i, j)| self.get(i, j) != o.get(i, j)).collect()
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<TriMatrix<G>, E> {
        let mut out = TriMatrix::new(self.size, self.cols, self.orientation, self.spec.clone());
        for (&k, v) in &self.entries {
            let g = f(v)?;
            if !g.is_zero() {
                out.entries.insert(k, g);
            }
        }
        Ok(out)
    }
}

/// The matrices assembled from the closed-form coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    B,
    Btilde,
    C,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::B => "B",
            MatrixKind::Btilde => "Btilde",
            MatrixKind::C => "C",
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;
    fn from_str(s: &str) -> Result<MatrixKind, String> {
        match s {
            "B" | "b" => Ok(MatrixKind::B),
            "Btilde" | "btilde" | "Bt" => Ok(MatrixKind::Btilde),
            "C" | "c" => Ok(MatrixKind::C),
            _ => Err(format!("unknown matrix kind `{s}` (expected B, Btilde or C)")),
        }
    }
}

/// Default truncation bound, overridable through `MCK_MAX_SIZE`.
pub fn max_size() -> usize {
    std::env::var("MCK_MAX_SIZE").ok().and_then(|v| v.parse().ok()).unwrap_or(16)
}

/// Assembles a matrix entrywise: each entry is computed with symbolic
/// `a^2, c^2, t` at `s = t^{power}` and only then specialized by `spec`.
///
/// For `B` and `B~` the entry `(r, r-2i)` is the coefficient at
/// `s = t^{n-r+1}`, i.e. the matrix evaluated at `t^n`. For `C` the entry
/// `(i, i+2k)` is `C(t^{i+1}, k)`, which does not depend on `n`.
pub fn build_matrix_shape(
    kind: MatrixKind,
    rows: usize,
    cols: usize,
    n: i64,
    spec: &SpecField,
) -> Result<TriMatrix, TransError> {
    let p = TransParams::generic();
    let orientation = match kind {
        MatrixKind::C => Orientation::UpperEven,
        _ => Orientation::LowerEven,
    };
    let mut slots = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if orientation.allows(i, j) {
                slots.push((i, j));
            }
        }
    }
    let values: Vec<Result<((usize, usize), RationalExpr), TransError>> = slots
        .par_iter()
        .map(|&(i, j)| {
            let v = match kind {
                MatrixKind::B => b_at(&p, &p.tp(n - i as i64 + 1)?, ((i - j) / 2) as u32)?,
                MatrixKind::Btilde => btilde_at(&p, &p.tp(n - i as i64 + 1)?, ((i - j) / 2) as u32)?,
                MatrixKind::C => c_coeff(&p, i as i64, ((j - i) / 2) as u32)?,
            };
            let v = spec
                .apply(&v)
                .map_err(|e| TransError::Degenerate(format!("entry ({i}, {j}) under {}: {e}", spec.name())))?;
            Ok(((i, j), v))
        })
        .collect();
    let mut m = TriMatrix::new(rows, cols, orientation, spec.name());
    for v in values {
        let ((i, j), e) = v?;
        m.set(i, j, e);
    }
    Ok(m)
}

/// Square `size x size` matrix; `B` and `B~` use the ambient `n = size - 1`.
pub fn build_matrices(kind: MatrixKind, size: usize, spec: &SpecField) -> Result<TriMatrix, TransError> {
    if size > max_size() {
        return Err(TransError::OutOfRange(format!("size {size} exceeds the bound {}", max_size())));
    }
    build_matrix_shape(kind, size, size, size as i64 - 1, spec)
}

/// The first `rows` rows of `C` under `spec`, `2 rows + 2` columns wide, so
/// that every row shows at least four entries.
pub fn triangle_table(rows: usize, spec: &SpecField) -> Result<TriMatrix, TransError> {
    if rows > max_size() {
        return Err(TransError::OutOfRange(format!("{rows} rows exceed the bound {}", max_size())));
    }
    build_matrix_shape(MatrixKind::C, rows, 2 * rows + 2, rows as i64 - 1, spec)
}

/// The Bressoud matrix `M(u, v; x, y; q)`.
pub fn bressoud_m<F: Field>(u: &F, v: &F, x: &F, y: &F, q: &F, size: usize) -> Result<TriMatrix<F>, TransError> {
    let mut m = TriMatrix::new(size, size, Orientation::LowerEven, "bressoud");
    for r in 0..size {
        for i in 0..=r / 2 {
            let (ri, ii) = (r as i64, i as i64);
            let num = y
                .times(v)
                .pow_u(i as u32)
                .times(&qpoch(&x.quot(y)?, q, ii)?)
                .times(&qpoch(&u.times(&q.pow_i(ri - 2 * ii)?), q, 2 * ii)?);
            let degenerate = |_| TransError::Degenerate(format!("Bressoud entry ({r}, {}) has a vanishing denominator", r - 2 * i));
            let v = qpoch_quot(num, q, q, ii)
                .and_then(|v| qpoch_quot(v, &u.times(x).times(&q.pow_i(ri - ii)?), q, ii))
                .and_then(|v| qpoch_quot(v, &u.times(y).times(&q.pow_i(ri - 2 * ii + 1)?), q, ii))
                .map_err(degenerate)?;
            m.set(r, r - 2 * i, v);
        }
    }
    Ok(m)
}

/// The conjugated Bressoud matrix `M~(u, v; x, y; t)`, taking the square
/// roots `u^{1/2}` and `v^{1/2}` as arguments.
pub fn bressoud_m_tilde<F: Field>(
    u_half: &F,
    v_half: &F,
    x: &F,
    y: &F,
    t: &F,
    size: usize,
) -> Result<TriMatrix<F>, TransError> {
    let u = u_half.times(u_half);
    let t2 = t.times(t);
    let mut m = TriMatrix::new(size, size, Orientation::LowerEven, "bressoud-tilde");
    for r in 0..size {
        for i in 0..=r / 2 {
            let (ri, ii) = (r as i64, i as i64);
            let num = qpoch(&x.quot(y)?, &t2, ii)?
                .times(&qpoch(&v_half.times(&t.pow_i(ri - 2 * ii + 2)?), t, 2 * ii)?)
                .times(&qpoch(&u.times(&t.pow_i(2 * ri - 4 * ii)?), &t2, 2 * ii)?)
                .times(&y.times(u_half).quot(v_half)?.pow_u(i as u32));
            let degenerate = |_| TransError::Degenerate(format!("entry ({r}, {}) has a vanishing denominator", r - 2 * i));
            let v = qpoch_quot(num, &t2, &t2, ii)
                .and_then(|v| qpoch_quot(v, &u_half.times(&t.pow_i(ri - 2 * ii)?), t, 2 * ii))
                .and_then(|v| qpoch_quot(v, &u.times(x).times(&t.pow_i(2 * ri - 2 * ii)?), &t2, ii))
                .and_then(|v| qpoch_quot(v, &u.times(y).times(&t.pow_i(2 * ri - 4 * ii + 2)?), &t2, ii))
                .map_err(degenerate)?;
            m.set(r, r - 2 * i, v);
        }
    }
    Ok(m)
}

/// The Krattenthaler matrix `N(x, y; q)`.
pub fn krattenthaler_n<F: Field>(x: &F, y: &F, q: &F, size: usize) -> Result<TriMatrix<F>, TransError> {
    let mut m = TriMatrix::new(size, size, Orientation::Lower, "krattenthaler");
    for i in 0..size {
        for j in 0..=i {
            let (ii, jj) = (i as i64, j as i64);
            let k = ii - jj;
            let num = y.pow_u(k as u32).times(&qpoch(&x.quot(y)?, q, k)?);
            let degenerate = |_| TransError::Degenerate(format!("Krattenthaler entry ({i}, {j}) has a vanishing denominator"));
            let v = qpoch_quot(num, q, q, k)
                .and_then(|v| qpoch_quot(v, &x.times(&q.pow_i(ii + jj)?), q, k))
                .and_then(|v| qpoch_quot(v, &y.times(&q.pow_i(2 * jj + 1)?), q, k))
                .map_err(degenerate)?;
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Entry `(r, r-i)` of the conjugated Krattenthaler matrix
/// `N~(u, v, x, y; t)`. The factor `y^i (x/(yv); t)_i` is expanded as
/// `prod_k (y - x t^k / v)`, so `y = 0` is allowed.
pub fn krattenthaler_n_tilde_entry<F: Field>(
    u: [&F; 4],
    v: &F,
    x: &F,
    y: &F,
    t: &F,
    r: i64,
    i: i64,
) -> Result<F, TransError> {
    let mut num = F::one();
    for k in 0..i {
        num = num.times(&y.minus(&x.times(&t.pow_i(k)?).quot(v)?));
    }
    num = num
        .times(&qpoch(&u[0].times(&t.pow_i(-r)?), t, i)?)
        .times(&qpoch(&u[1].times(&t.pow_i(r - i)?), t, i)?)
        .times(&qpoch(&u[2].times(&t.pow_i(r - i)?), t, i)?)
        .times(&qpoch(&u[3].times(&t.pow_i(r - i)?), t, i)?);
    qpoch_quot(num, t, t, i)
        .and_then(|n| qpoch_quot(n, &x.times(&t.pow_i(2 * r - i)?), t, i))
        .and_then(|n| qpoch_quot(n, &y.times(v).times(&t.pow_i(2 * r - 2 * i + 1)?), t, i))
        .map_err(|_| TransError::Degenerate(format!("entry ({r}, {}) has a vanishing denominator", r - i)))
}

/// The conjugated Krattenthaler matrix `N~(u, v, x, y; t)`.
pub fn krattenthaler_n_tilde<F: Field>(
    u: [&F; 4],
    v: &F,
    x: &F,
    y: &F,
    t: &F,
    size: usize,
) -> Result<TriMatrix<F>, TransError> {
    let mut m = TriMatrix::new(size, size, Orientation::Lower, "krattenthaler-tilde");
    for r in 0..size {
        for i in 0..=r {
            m.set(r, r - i, krattenthaler_n_tilde_entry(u, v, x, y, t, r as i64, i as i64)?);
        }
    }
    Ok(m)
}
