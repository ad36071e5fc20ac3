//! The arrays `N_w`, weight brackets, frequency and maxima rows.
//!
//! Cells are addressed by diagonal row `i ≥ 0` and column `j ∈ 1..=w`, with
//! `j = 1` the top of the array and `j = w` the bottom. A cell holds the part
//! `max(0, 2i - j)`; cells with `j ≥ 2i` are prescribed and carry
//! `k_{w+1-j}`. Rows are stored in this `j` order throughout; use
//! [`display_order`] to get the left-to-right order of the usual matrix
//! pictures, where `j = w` is leftmost.

use std::fmt;

use crate::error::{invalid, Result};

/// Frequencies `f_{i,1..w}` of one diagonal row, prescribed cells included.
pub type FrequencyRow = Vec<u32>;

/// Running path maxima `m_{i,1..w}` of one diagonal row.
pub type MaximaRow = Vec<u32>;

/// How a weight was written by the user.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WeightForm {
    Bracket,
    /// `(k_0, ..., k_l)` on `N_{2l+1}`.
    Odd(Vec<u32>),
    /// `(k_0, ..., k_l)^e` on `N_{2l}`.
    Even(Vec<u32>),
}

/// Initial-condition bracket `[k_1, ..., k_w]` with `w ≥ 2` and positive level.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    bracket: Vec<u32>,
    form: WeightForm,
}

impl WeightVector {
    pub fn from_bracket(bracket: Vec<u32>) -> Result<Self> {
        Self::build(bracket, WeightForm::Bracket)
    }

    /// `(k_0..k_l)` as `[k_0, 0, k_1, 0, ..., 0, k_l]`, width `2l + 1`.
    pub fn odd(k: &[u32]) -> Result<Self> {
        if k.len() < 2 {
            return Err(invalid("odd-width weight needs at least two entries (l >= 1)"));
        }
        let mut bracket = vec![k[0]];
        for &x in &k[1..] {
            bracket.extend([0, x]);
        }
        Self::build(bracket, WeightForm::Odd(k.to_vec()))
    }

    /// `(k_0..k_l)^e` as `[k_0, k_1, 0, k_2, ..., 0, k_l]`, width `2l`.
    pub fn even(k: &[u32]) -> Result<Self> {
        if k.len() < 2 {
            return Err(invalid("even-width weight needs at least two entries (l >= 1)"));
        }
        let mut bracket = vec![k[0], k[1]];
        for &x in &k[2..] {
            bracket.extend([0, x]);
        }
        Self::build(bracket, WeightForm::Even(k.to_vec()))
    }

    fn build(bracket: Vec<u32>, form: WeightForm) -> Result<Self> {
        if bracket.len() < 2 {
            return Err(invalid(format!("bracket width must be at least 2, got {}", bracket.len())));
        }
        if bracket.iter().all(|&k| k == 0) {
            return Err(invalid("weight level k = k_1 + ... + k_w must be positive"));
        }
        if bracket.iter().map(|&k| u64::from(k)).sum::<u64>() > u64::from(u32::MAX) {
            return Err(invalid("weight level too large"));
        }
        Ok(Self { bracket, form })
    }

    pub fn entries(&self) -> &[u32] {
        &self.bracket
    }

    pub fn form(&self) -> &WeightForm {
        &self.form
    }

    pub fn width(&self) -> usize {
        self.bracket.len()
    }

    /// The level `k = k_1 + ... + k_w`.
    pub fn level(&self) -> u32 {
        self.bracket.iter().sum()
    }

    /// Prescribed value of cell `(i, j)` (1-based `j`), if the cell is prescribed.
    pub fn prescribed(&self, i: usize, j: usize) -> Option<u32> {
        (j >= 2 * i).then(|| self.bracket[self.width() - j])
    }

    /// Sugar form with its entries reversed; `None` for raw brackets.
    pub fn reversed(&self) -> Option<Self> {
        let rev = |k: &[u32]| k.iter().rev().copied().collect::<Vec<_>>();
        match &self.form {
            WeightForm::Bracket => None,
            WeightForm::Odd(k) => Self::odd(&rev(k)).ok(),
            WeightForm::Even(k) => Self::even(&rev(k)).ok(),
        }
    }
}

fn join(k: &[u32]) -> String {
    k.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            WeightForm::Bracket => write!(f, "[{}]", join(&self.bracket)),
            WeightForm::Odd(k) => write!(f, "({})", join(k)),
            WeightForm::Even(k) => write!(f, "({})^e", join(k)),
        }
    }
}

/// Part values `max(0, 2i - j)` for `j = 1..=w`.
pub fn row_parts(i: usize, w: usize) -> Vec<u64> {
    (1..=w).map(|j| (2 * i).saturating_sub(j) as u64).collect()
}

/// Number of free cells in row `i`: `min(2i - 1, w)`, and 0 for row 0.
pub fn free_cells(i: usize, w: usize) -> usize {
    if i == 0 {
        0
    } else {
        (2 * i - 1).min(w)
    }
}

/// Smallest positive part value in row `i ≥ 1`.
pub fn smallest_free_part(i: usize, w: usize) -> u64 {
    (2 * i).saturating_sub(w).max(1) as u64
}

/// Mirror a row between storage order and the usual display order.
pub fn display_order<T: Clone>(row: &[T]) -> Vec<T> {
    row.iter().rev().cloned().collect()
}

/// `m_{0j} = k_w + ... + k_{w-j+1}`.
pub fn initial_maxima(wv: &WeightVector) -> MaximaRow {
    wv.entries()
        .iter()
        .rev()
        .scan(0u32, |acc, &k| {
            *acc += k;
            Some(*acc)
        })
        .collect()
}

/// One step of the maxima recursion, `m_1 = f_1`,
/// `m_j = f_j + max(prev_{j-1}, m_{j-1})`. `None` as soon as an entry
/// exceeds `level`.
pub fn maxima_step(prev: &[u32], fs: &[u32], level: u32) -> Option<MaximaRow> {
    let mut out = Vec::with_capacity(fs.len());
    maxima_step_into(prev, fs, level, &mut out).then_some(out)
}

/// Allocation-free form of [`maxima_step`]; returns whether the row is accepted.
pub fn maxima_step_into(prev: &[u32], fs: &[u32], level: u32, out: &mut Vec<u32>) -> bool {
    out.clear();
    let mut last = 0u32;
    for (j, &f) in fs.iter().enumerate() {
        let m = if j == 0 { f } else { f + prev[j - 1].max(last) };
        if m > level {
            return false;
        }
        out.push(m);
        last = m;
    }
    true
}

/// All rows `i ≥ 1` with the prescribed cells filled in and nonnegative free
/// entries whose sum is at most `k` minus the prescribed sum.
pub fn enumerate_row_frequencies(i: usize, wv: &WeightVector) -> impl Iterator<Item = FrequencyRow> {
    let w = wv.width();
    let free = free_cells(i, w);
    let prescribed: Vec<u32> = (free + 1..=w)
        .map(|j| wv.prescribed(i, j).expect("cells past the free ones are prescribed"))
        .collect();
    let bound = wv.level() - prescribed.iter().sum::<u32>();

    let mut rows = Vec::new();
    let mut current = Vec::with_capacity(w);
    bounded_compositions(free, bound, &mut current, &mut |free_part| {
        let mut row = free_part.to_vec();
        row.extend_from_slice(&prescribed);
        rows.push(row);
    });
    rows.into_iter()
}

fn bounded_compositions(len: usize, budget: u32, current: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    if current.len() == len {
        emit(current);
        return;
    }
    for g in 0..=budget {
        current.push(g);
        bounded_compositions(len, budget - g, current, emit);
        current.pop();
    }
}

/// `Σ_j f_j · max(0, 2i - j)`.
pub fn row_mass(i: usize, fs: &[u32]) -> u64 {
    fs.iter().enumerate().map(|(j0, &f)| u64::from(f) * (2 * i).saturating_sub(j0 + 1) as u64).sum()
}

/// Extended frequency matrix, rows `0..=R`, prescribed cells materialized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrequencyMatrix {
    rows: Vec<FrequencyRow>,
}

impl FrequencyMatrix {
    /// Builds rows `0..=free_rows.len()` from the free entries of rows
    /// `1..=R` (each of length `free_cells(i, w)`).
    pub fn from_free(wv: &WeightVector, free_rows: &[Vec<u32>]) -> Result<Self> {
        let w = wv.width();
        let mut rows = Vec::with_capacity(free_rows.len() + 1);
        rows.push((1..=w).map(|j| wv.prescribed(0, j).unwrap_or(0)).collect());
        for (idx, free) in free_rows.iter().enumerate() {
            let i = idx + 1;
            let nfree = free_cells(i, w);
            if free.len() != nfree {
                return Err(invalid(format!("row {i} has {nfree} free cells, got {} entries", free.len())));
            }
            let mut row = free.clone();
            row.extend((nfree + 1..=w).map(|j| wv.prescribed(i, j).unwrap_or(0)));
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[FrequencyRow] {
        &self.rows
    }

    /// The partition `n = Σ f_{ij} · max(0, 2i - j)`.
    pub fn total(&self) -> u64 {
        self.rows.iter().enumerate().map(|(i, r)| row_mass(i, r)).sum()
    }
}

/// Difference condition by explicit enumeration: every downward path
/// `(i_1, 1), ..., (i_w, w)` with `i_{t+1} ∈ {i_t, i_t + 1}` must have
/// frequency sum at most `k`. Rows past the matrix hold only zeros, so paths
/// are confined to the stored rows.
pub fn path_check(matrix: &FrequencyMatrix, wv: &WeightVector) -> bool {
    let rows = matrix.rows();
    let level = u64::from(wv.level());
    let w = wv.width();

    fn walk(rows: &[FrequencyRow], i: usize, j0: usize, sum: u64, w: usize, level: u64) -> bool {
        let sum = sum + u64::from(rows[i][j0]);
        if sum > level {
            return false;
        }
        if j0 + 1 == w {
            return true;
        }
        walk(rows, i, j0 + 1, sum, w, level)
            && (i + 1 >= rows.len() || walk(rows, i + 1, j0 + 1, sum, w, level))
    }

    (0..rows.len()).all(|start| walk(rows, start, 0, 0, w, level))
}
