//! Reduced simplicial homology over the rationals, computed exactly.
//!
//! Boundary matrices have entries in {−1, 0, +1}, so their rank over ℚ
//! equals their rank as integer matrices. Ranks are computed by
//! fraction-free (Bareiss) elimination in `i128`, falling back to big
//! integers if an intermediate minor overflows. Floating point never
//! appears: Betti numbers are exact integers.
//!
//! The augmentation map is always included: ∂₀ sends every vertex to the
//! empty face, so H̃₋₁ of the one-face complex `{∅}` is one-dimensional.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::error::ComplexError;
use crate::set::ElementSet;

/// The homological connectivity η: the smallest k ≥ 0 such that
/// H̃_{k−1} does not vanish, or ∞ when every reduced homology group is
/// zero. The void complex has η = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EtaValue {
    Finite(usize),
    Infinite,
}

impl EtaValue {
    pub fn is_infinite(self) -> bool {
        matches!(self, EtaValue::Infinite)
    }

    pub fn as_finite(self) -> Option<usize> {
        match self {
            EtaValue::Finite(k) => Some(k),
            EtaValue::Infinite => None,
        }
    }

    /// η + c, with ∞ + c = ∞.
    pub fn plus(self, c: usize) -> EtaValue {
        match self {
            EtaValue::Finite(k) => EtaValue::Finite(k + c),
            EtaValue::Infinite => EtaValue::Infinite,
        }
    }

    /// η − c clamped at zero, with ∞ − c = ∞.
    pub fn saturating_sub(self, c: usize) -> EtaValue {
        match self {
            EtaValue::Finite(k) => EtaValue::Finite(k.saturating_sub(c)),
            EtaValue::Infinite => EtaValue::Infinite,
        }
    }
}

impl PartialOrd for EtaValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EtaValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (EtaValue::Infinite, EtaValue::Infinite) => Ordering::Equal,
            (EtaValue::Infinite, EtaValue::Finite(_)) => Ordering::Greater,
            (EtaValue::Finite(_), EtaValue::Infinite) => Ordering::Less,
            (EtaValue::Finite(a), EtaValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for EtaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EtaValue::Finite(k) => write!(f, "{k}"),
            EtaValue::Infinite => write!(f, "inf"),
        }
    }
}

impl PartialEq<usize> for EtaValue {
    fn eq(&self, other: &usize) -> bool {
        matches!(self, EtaValue::Finite(k) if k == other)
    }
}

/// Reduced Betti numbers indexed from k = −1 up to the dimension of the
/// complex. Indices outside the stored range are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    values: Vec<usize>,
}

impl BettiVector {
    pub fn get(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        self.values.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// Largest k stored (the complex dimension); −2 for the void complex.
    pub fn max_index(&self) -> isize {
        self.values.len() as isize - 2
    }

    /// Entries in order k = −1, 0, 1, ....
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Σ (−1)^k · betti(k), k from −1: equals the reduced Euler
    /// characteristic of the complex.
    pub fn alternating_sum(&self) -> i64 {
        let mut sum = 0i64;
        for (i, &v) in self.values.iter().enumerate() {
            let k = i as i64 - 1;
            sum += if k % 2 == 0 { v as i64 } else { -(v as i64) };
        }
        sum
    }
}

/// Betti computation with the boundary ranks cached level by level, so
/// η can stop ascending at the first nonvanishing group.
struct Calculator {
    /// levels[d] = faces of dimension d, ascending mask order.
    levels: Vec<Vec<ElementSet>>,
    /// ranks[d] = rank of ∂_d; index dim+1 is the zero map above the top.
    ranks: Vec<Option<usize>>,
    void: bool,
}

impl Calculator {
    fn new(complex: &SimplicialComplex) -> Result<Self, ComplexError> {
        if complex.is_void() {
            return Ok(Calculator {
                levels: Vec::new(),
                ranks: Vec::new(),
                void: true,
            });
        }
        let levels = complex.faces_by_dimension()?;
        let ranks = vec![None; levels.len() + 2];
        Ok(Calculator {
            levels,
            ranks,
            void: false,
        })
    }

    fn dim(&self) -> isize {
        self.levels.len() as isize - 1
    }

    fn level_size(&self, d: isize) -> usize {
        if d == -1 {
            return if self.void { 0 } else { 1 };
        }
        if d < 0 {
            return 0;
        }
        self.levels.get(d as usize).map_or(0, |l| l.len())
    }

    /// Rank of ∂_d : C_d → C_{d−1}, with ∂₀ the augmentation map.
    fn boundary_rank(&mut self, d: usize) -> usize {
        if let Some(r) = self.ranks.get(d).copied().flatten() {
            return r;
        }
        let r = if d == 0 {
            // Augmentation: a single row of ones.
            if self.level_size(0) > 0 {
                1
            } else {
                0
            }
        } else if d as isize > self.dim() || self.level_size(d as isize - 1) == 0 {
            0
        } else {
            let rows = &self.levels[d - 1];
            let cols = &self.levels[d];
            let row_index: HashMap<u64, usize> = rows
                .iter()
                .enumerate()
                .map(|(i, f)| (f.bits(), i))
                .collect();
            let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
            for (j, &face) in cols.iter().enumerate() {
                for (pos, v) in face.iter().enumerate() {
                    let sub = face.without(v);
                    let i = row_index[&sub.bits()];
                    matrix[i][j] = if pos % 2 == 0 { 1 } else { -1 };
                }
            }
            integer_matrix_rank(&matrix)
        };
        if d < self.ranks.len() {
            self.ranks[d] = Some(r);
        }
        r
    }

    /// dim H̃_k = (#k-faces) − rank ∂_k − rank ∂_{k+1}.
    fn betti(&mut self, k: isize) -> usize {
        if self.void || k < -1 || k > self.dim() {
            return 0;
        }
        let faces = self.level_size(k);
        let rank_down = if k >= 0 {
            self.boundary_rank(k as usize)
        } else {
            0
        };
        let rank_up = self.boundary_rank((k + 1) as usize);
        faces - rank_down - rank_up
    }
}

/// dim H̃_k(C) over ℚ.
pub fn betti(complex: &SimplicialComplex, k: isize) -> Result<usize, ComplexError> {
    Ok(Calculator::new(complex)?.betti(k))
}

/// All reduced Betti numbers, k = −1 ..= dim(C).
pub fn betti_vector(complex: &SimplicialComplex) -> Result<BettiVector, ComplexError> {
    let mut calc = Calculator::new(complex)?;
    if calc.void {
        return Ok(BettiVector { values: Vec::new() });
    }
    let dim = calc.dim();
    let values = (-1..=dim).map(|k| calc.betti(k)).collect();
    Ok(BettiVector { values })
}

/// η(C): ascends k from 0, stopping at the first k with H̃_{k−1} ≠ 0;
/// returns ∞ when every group up to the dimension vanishes (groups above
/// the dimension are always zero). A complex with a cone apex is
/// contractible, so the homology computation is skipped entirely.
pub fn eta(complex: &SimplicialComplex) -> Result<EtaValue, ComplexError> {
    if complex.is_void() {
        return Ok(EtaValue::Finite(0));
    }
    if complex.cone_apex().is_some() {
        return Ok(EtaValue::Infinite);
    }
    let mut calc = Calculator::new(complex)?;
    let dim = calc.dim();
    let mut k = 0isize;
    while k - 1 <= dim {
        if calc.betti(k - 1) != 0 {
            return Ok(EtaValue::Finite(k as usize));
        }
        k += 1;
    }
    Ok(EtaValue::Infinite)
}

/// Rank of an integer matrix (rows of equal length) over the rationals.
pub(crate) fn integer_matrix_rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let as_i128: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match rank_bareiss_i128(as_i128) {
        Some(r) => r,
        None => {
            let as_big: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            rank_bareiss_bigint(as_big)
        }
    }
}

/// Fraction-free Gaussian elimination; intermediate entries are minors of
/// the input, and every division is exact. Returns None on overflow.
fn rank_bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let a = m[rank][col].checked_mul(m[r][c])?;
                let b = m[r][col].checked_mul(m[rank][c])?;
                m[r][c] = a.checked_sub(b)? / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn rank_bareiss_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
