//! Bit-packed dense matrices over GF(2).
//!
//! Rows are stored as runs of `u64` words; bit `e` of row `i` lives in word
//! `e / 64` at position `e % 64`. All operations are pure and leave the
//! receiver untouched.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A dense 0/1 matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Gf2Matrix {
            rows,
            cols,
            stride,
            bits: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from row vectors of 0/1 values. Any nonzero byte is a one.
    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::input(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (e, &b) in row.iter().enumerate() {
                if b != 0 {
                    m.set(i, e, true);
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose columns are the given bit vectors over `rows` rows.
    pub fn from_columns(rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (e, col) in columns.iter().enumerate() {
            for i in 0..rows {
                if (col[i / WORD] >> (i % WORD)) & 1 == 1 {
                    m.set(i, e, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, e: usize) -> bool {
        assert!(i < self.rows && e < self.cols, "entry ({i},{e}) out of range");
        (self.bits[i * self.stride + e / WORD] >> (e % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, e: usize, v: bool) {
        assert!(i < self.rows && e < self.cols, "entry ({i},{e}) out of range");
        let w = &mut self.bits[i * self.stride + e / WORD];
        if v {
            *w |= 1 << (e % WORD);
        } else {
            *w &= !(1 << (e % WORD));
        }
    }

    /// Packed words of row `i`.
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let (s, d) = (src * self.stride, dst * self.stride);
        for k in 0..self.stride {
            let v = self.bits[s + k];
            self.bits[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.stride {
            self.bits.swap(a * self.stride + k, b * self.stride + k);
        }
    }

    /// Column `e` packed as a bit vector over the rows.
    pub fn column(&self, e: usize) -> Vec<u64> {
        assert!(e < self.cols, "column {e} out of range");
        let mut v = vec![0u64; words_for(self.rows)];
        for i in 0..self.rows {
            if self.get(i, e) {
                v[i / WORD] |= 1 << (i % WORD);
            }
        }
        v
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|e| self.column(e)).collect()
    }

    pub fn is_zero_column(&self, e: usize) -> bool {
        (0..self.rows).all(|i| !self.get(i, e))
    }

    pub fn count_ones_in_row(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The submatrix made of the listed columns, in the listed order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, keep.len());
        for (new_e, &e) in keep.iter().enumerate() {
            for i in 0..self.rows {
                if self.get(i, e) {
                    m.set(i, new_e, true);
                }
            }
        }
        m
    }

    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let mut m = Self::zeros(keep.len(), self.cols);
        for (new_i, &i) in keep.iter().enumerate() {
            m.bits[new_i * m.stride..(new_i + 1) * m.stride].copy_from_slice(self.row_words(i));
        }
        m
    }

    pub fn remove_column(&self, e: usize) -> Self {
        let keep: Vec<usize> = (0..self.cols).filter(|&k| k != e).collect();
        self.select_columns(&keep)
    }

    /// Appends a column given as one bit per row.
    pub fn push_column(&self, col: &[bool]) -> Self {
        assert_eq!(col.len(), self.rows);
        let mut m = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for e in 0..self.cols {
                if self.get(i, e) {
                    m.set(i, e, true);
                }
            }
            if col[i] {
                m.set(i, self.cols, true);
            }
        }
        m
    }

    /// Appends a row given as one bit per column.
    pub fn push_row(&self, row: &[bool]) -> Self {
        assert_eq!(row.len(), self.cols);
        let mut m = Self::zeros(self.rows + 1, self.cols);
        m.bits[..self.bits.len()].copy_from_slice(&self.bits);
        for (e, &b) in row.iter().enumerate() {
            if b {
                m.set(self.rows, e, true);
            }
        }
        m
    }

    /// GF(2) rank of the selected columns.
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        let mut basis = XorBasis::new(self.rows);
        for &e in subset {
            if e >= self.cols {
                return Err(Error::input(format!(
                    "column {e} out of range (matrix has {} columns)",
                    self.cols
                )));
            }
            basis.insert(&self.column(e));
        }
        Ok(basis.len())
    }

    /// Rank of the whole matrix.
    pub fn full_rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    /// Reduced row-echelon form and its pivot columns (strictly increasing).
    ///
    /// The returned matrix keeps the original row count; zero rows sink to
    /// the bottom.
    pub fn row_reduce(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for e in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, e)) else {
                continue;
            };
            m.swap_rows(p, r);
            for i in 0..m.rows {
                if i != r && m.get(i, e) {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push(e);
            r += 1;
        }
        (m, pivots)
    }

    /// Nonzero rows of the reduced row-echelon form: a row basis of the row space.
    pub fn row_basis(&self) -> Gf2Matrix {
        let (m, pivots) = self.row_reduce();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        m.select_rows(&keep)
    }

    /// Standard form `[I | A]` up to an explicit column permutation.
    pub fn standard_form(&self) -> StandardForm {
        let (m, pivots) = self.row_reduce();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|e| !pivots.contains(e)).collect();
        let permutation: Vec<usize> = pivots.iter().chain(free.iter()).copied().collect();
        let mut body = Gf2Matrix::zeros(rank, free.len());
        for i in 0..rank {
            for (j, &e) in free.iter().enumerate() {
                if m.get(i, e) {
                    body.set(i, j, true);
                }
            }
        }
        StandardForm {
            rank,
            permutation,
            body,
        }
    }

    /// A representation of the dual matroid on the same columns.
    ///
    /// From `[I | A]` (columns permuted by `perm`) this emits `[Aᵀ | I]` and
    /// places each column back at its original index.
    pub fn dual_representation(&self) -> Gf2Matrix {
        let sf = self.standard_form();
        let nfree = self.cols - sf.rank;
        let mut d = Gf2Matrix::zeros(nfree, self.cols);
        for (pos, &orig) in sf.permutation.iter().enumerate() {
            for j in 0..nfree {
                let bit = if pos < sf.rank {
                    sf.body.get(pos, j)
                } else {
                    pos - sf.rank == j
                };
                if bit {
                    d.set(j, orig, true);
                }
            }
        }
        d
    }

    /// Parses the `R C` header plus `R` rows of `C` tokens format. With
    /// `C = 0` the rows are empty and are not written.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let header = lines
            .next()
            .ok_or_else(|| Error::input("empty matrix file"))?;
        let dims = parse_usizes(header)?;
        let [rows, cols] = dims[..] else {
            return Err(Error::input(format!("bad matrix header {header:?}")));
        };
        let mut m = Gf2Matrix::zeros(rows, cols);
        for i in 0..if cols == 0 { 0 } else { rows } {
            let line = lines
                .next()
                .ok_or_else(|| Error::input(format!("missing matrix row {}", i + 1)))?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != cols {
                return Err(Error::input(format!(
                    "matrix row {} has {} entries, expected {cols}",
                    i + 1,
                    toks.len()
                )));
            }
            for (e, t) in toks.iter().enumerate() {
                match *t {
                    "0" => {}
                    "1" => m.set(i, e, true),
                    other => return Err(Error::input(format!("bad matrix entry {other:?}"))),
                }
            }
        }
        if let Some(extra) = lines.next() {
            return Err(Error::input(format!("trailing content {extra:?}")));
        }
        Ok(m)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        if self.cols == 0 {
            return s;
        }
        for i in 0..self.rows {
            let row: Vec<&str> = (0..self.cols)
                .map(|e| if self.get(i, e) { "1" } else { "0" })
                .collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, " |")?;
            }
            for e in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, e)))?;
            }
        }
        write!(f, "]")
    }
}

/// Result of bringing a matrix to `[I | A]` form.
#[derive(Debug, Clone)]
pub struct StandardForm {
    pub rank: usize,
    /// `permutation[k]` is the original column shown at position `k`.
    pub permutation: Vec<usize>,
    /// The `rank × (cols - rank)` block `A`.
    pub body: Gf2Matrix,
}

/// Incremental XOR basis of packed GF(2) vectors.
///
/// Each stored vector is reduced against all earlier ones, so a new vector
/// is tested for membership in one pass. Storage is a flat word buffer so
/// push/pop in enumeration loops does not allocate once warm.
#[derive(Debug, Clone)]
pub(crate) struct XorBasis {
    words: usize,
    pivots: Vec<usize>,
    data: Vec<u64>,
    scratch: Vec<u64>,
}

impl XorBasis {
    pub(crate) fn new(bits: usize) -> Self {
        let words = words_for(bits);
        XorBasis {
            words,
            pivots: Vec::new(),
            data: Vec::new(),
            scratch: vec![0; words],
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts `v`; returns true when it was independent of the basis.
    pub(crate) fn insert(&mut self, v: &[u64]) -> bool {
        debug_assert_eq!(v.len(), self.words);
        self.scratch.copy_from_slice(v);
        for (k, &p) in self.pivots.iter().enumerate() {
            if (self.scratch[p / WORD] >> (p % WORD)) & 1 == 1 {
                let b = &self.data[k * self.words..(k + 1) * self.words];
                for (x, y) in self.scratch.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        match lowest_bit(&self.scratch) {
            Some(p) => {
                self.pivots.push(p);
                self.data.extend_from_slice(&self.scratch);
                true
            }
            None => false,
        }
    }

    /// Removes the most recently inserted independent vector.
    pub(crate) fn pop(&mut self) {
        if self.pivots.pop().is_some() {
            self.data.truncate(self.pivots.len() * self.words);
        }
    }
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_usizes(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::input(format!("expected a natural number, got {t:?}")))
        })
        .collect()
}
