//! Dense linear algebra over GF(2).
//!
//! Vectors pack bits little-endian into `u64` words: bit `i` lives in word
//! `i / 64` at position `i % 64`. Matrices are row-major, one [`BitVector`]
//! per row, so a row operation is a word-wise XOR.

use std::fmt;

use crate::error::{Error, Result};

/// Largest row or column count accepted by the parsers.
pub const MAX_DIM: usize = 1 << 15;

const WORD: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2). Padding bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    /// Builds a vector of length `len <= 64` from the low bits of `word`.
    pub fn from_u64(len: usize, word: u64) -> Self {
        assert!(len <= WORD, "from_u64 needs len <= 64, got {len}");
        let mut v = Self::zeros(len);
        if len > 0 {
            let mask = if len == WORD {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            v.words[0] = word & mask;
        }
        v
    }

    /// Low word of the vector; only meaningful when `len <= 64`.
    pub fn to_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// In-place addition. Panics on length mismatch; see [`BitVector::add`]
    /// for the checked form.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len, "and of vectors with different lengths");
        BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Vector sum over GF(2).
    pub fn add(&self, other: &BitVector) -> Result<BitVector> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch(format!(
                "cannot add vectors of lengths {} and {}",
                self.len, other.len
            )));
        }
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Inner product over GF(2).
    #[inline]
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(k * WORD + bit)
                }
            })
        })
    }

    /// Parses a string of `0`/`1` characters, index 0 first.
    pub fn parse_bits(text: &str) -> Option<BitVector> {
        let mut bits = Vec::with_capacity(text.len());
        for ch in text.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return None,
            }
        }
        Some(BitVector::from_bits(&bits))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Row-major dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

/// Result of [`BitMatrix::symplectic_decompose`]: `A == Cᵀ · N_m · C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticDecomposition {
    pub c: BitMatrix,
    pub m: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Block diagonal matrix of `m / 2` blocks `[[0,1],[1,0]]`.
    pub fn hyperbolic(m: usize) -> Self {
        assert!(
            m.is_multiple_of(2),
            "hyperbolic form needs even size, got {m}"
        );
        let mut out = Self::zeros(m, m);
        for k in (0..m).step_by(2) {
            out.set(k, k + 1, true);
            out.set(k + 1, k, true);
        }
        out
    }

    /// Stacks rows of equal length. `cols` is needed when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {i} has length {}, expected {cols}",
                r.len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    /// Mutable access to one row; its length cannot change through the
    /// [`BitVector`] API.
    pub fn row_mut(&mut self, i: usize) -> &mut BitVector {
        &mut self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        self.data.swap(i, j);
    }

    /// `row[target] += row[source]`.
    pub fn add_row(&mut self, source: usize, target: usize) {
        assert_ne!(source, target, "adding a row to itself zeroes it");
        let src = self.data[source].clone();
        self.data[target].xor_assign(&src);
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    /// Reduces a working copy to row echelon form and returns its rank.
    /// Pivots are taken from the first nonzero row at or below the current
    /// position.
    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            for r in tail.iter_mut() {
                if r.get(col) {
                    r.xor_assign(pivot_row);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Square and of full rank. Non-square input is an error; use
    /// [`BitMatrix::has_full_row_rank`] for rectangular matrices.
    pub fn is_nonsingular(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "nonsingularity needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rank() == self.cols)
    }

    pub fn has_full_row_rank(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_symmetric() && (0..self.rows).all(|i| !self.get(i, i))
    }

    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(rhs.cols);
                for k in row.ones() {
                    acc.xor_assign(&rhs.data[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        let mut out = BitVector::zeros(self.rows);
        for (i, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Writes an alternating matrix as `Cᵀ · N_m · C` with `m = rank(A)`.
    ///
    /// Greedy hyperbolic-pair extraction: take the first nonzero entry
    /// `(i, j)` of the working matrix `B`, let `u = B e_i`, `v = B e_j`, and
    /// replace `B` by `B + u vᵀ + v uᵀ`, which kills rows/columns `i` and `j`
    /// and lowers the rank by two. The pairs `(u, v)` are the rows of `C`.
    pub fn symplectic_decompose(&self) -> Result<SymplecticDecomposition> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "symplectic decomposition needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if !self.is_symmetric() {
            return Err(Error::NotAlternating("matrix is not symmetric".into()));
        }
        if let Some(i) = (0..self.rows).find(|&i| self.get(i, i)) {
            return Err(Error::NotAlternating(format!(
                "diagonal entry {i} is nonzero"
            )));
        }

        let n = self.rows;
        let mut work = self.data.clone();
        let mut c_rows = Vec::new();
        let mut start = 0;
        while let Some(i) = (start..n).find(|&i| !work[i].is_zero()) {
            // Rows before `i` are already zero and stay zero.
            start = i;
            let j = work[i].first_one().expect("row is nonzero");
            let u = work[i].clone();
            let v = work[j].clone();
            for k in u.ones() {
                work[k].xor_assign(&v);
            }
            for k in v.ones() {
                work[k].xor_assign(&u);
            }
            c_rows.push(u);
            c_rows.push(v);
        }
        let m = c_rows.len();
        Ok(SymplecticDecomposition {
            c: BitMatrix::from_rows(n, c_rows)?,
            m,
        })
    }

    /// One row per line as a `0`/`1` string.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.rows * (self.cols + 1));
        for row in &self.data {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }

    /// Inverse of [`BitMatrix::to_text`]. Blank lines are skipped; `cols` is
    /// taken from the first row, or must be given for an empty matrix.
    pub fn from_text(text: &str, cols_if_empty: usize) -> Result<BitMatrix> {
        let mut rows = Vec::new();
        let mut cols = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = BitVector::parse_bits(line).ok_or_else(|| Error::Matrix {
                line: idx + 1,
                message: "expected only 0 and 1".into(),
            })?;
            let width = *cols.get_or_insert(row.len());
            if row.len() != width {
                return Err(Error::Matrix {
                    line: idx + 1,
                    message: format!("row has {} entries, expected {width}", row.len()),
                });
            }
            if width > MAX_DIM || rows.len() >= MAX_DIM {
                return Err(Error::TooLarge {
                    what: "matrix dimension",
                    n: width.max(rows.len() + 1),
                    cap: MAX_DIM,
                });
            }
            rows.push(row);
        }
        BitMatrix::from_rows(cols.unwrap_or(cols_if_empty), rows)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mat(rows: &[&str]) -> BitMatrix {
        BitMatrix::from_text(&rows.join("\n"), 0).unwrap()
    }

    // Per-bit elimination on Vec<Vec<bool>>, sharing nothing with `rank`.
    #[allow(clippy::needless_range_loop)]
    fn naive_rank(m: &BitMatrix) -> usize {
        let mut a: Vec<Vec<bool>> = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let mut pivot = None;
            for (r, row) in a.iter().enumerate().skip(rank) {
                if row[col] {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            a.swap(rank, p);
            for r in 0..a.len() {
                if r != rank && a[r][col] {
                    for c in 0..m.cols() {
                        let bit = a[rank][c];
                        a[r][c] ^= bit;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, rng.random_bool(0.5));
            }
        }
        m
    }

    fn random_alternating(rng: &mut ChaCha8Rng, n: usize, p: f64) -> BitMatrix {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    m.set(i, j, true);
                    m.set(j, i, true);
                }
            }
        }
        m
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::zeros(3, 3).rank(), 0);
        let h = mat(&["0011", "0011", "1101", "1110"]);
        assert_eq!(h.rank(), 2);
        let k3 = mat(&["011", "101", "110"]);
        assert_eq!(k3.rank(), 2);
        assert_eq!(naive_rank(&k3), 2);
    }

    #[test]
    fn rank_leaves_input_untouched() {
        let k3 = mat(&["011", "101", "110"]);
        let copy = k3.clone();
        let _ = k3.rank();
        assert_eq!(k3, copy);
    }

    #[test]
    fn nonsingularity() {
        assert!(BitMatrix::identity(4).is_nonsingular().unwrap());
        let dup = mat(&["1010", "0110", "1010", "0001"]);
        assert!(!dup.is_nonsingular().unwrap());
        let t = mat(&["1100", "1110", "1101"]);
        assert!(t.is_nonsingular().is_err());
        assert!(t.has_full_row_rank());
    }

    #[test]
    fn arithmetic_examples() {
        let x = BitVector::parse_bits("1011").unwrap();
        assert_eq!(BitMatrix::identity(4).mul_vec(&x).unwrap(), x);
        assert!(x.add(&x).unwrap().is_zero());
        let t = mat(&["1100", "1110", "1101"]);
        let y = t.mul_vec(&BitVector::parse_bits("1000").unwrap()).unwrap();
        assert_eq!(y.to_string(), "111");
        assert!(t.mul(&t).is_err());
        assert!(t.mul_vec(&y).is_err());
        assert!(x.add(&y).is_err());
    }

    #[test]
    fn decompose_small_cases() {
        let z = BitMatrix::zeros(3, 3).symplectic_decompose().unwrap();
        assert_eq!(z.m, 0);
        assert_eq!(z.c.rows(), 0);

        let p2 = mat(&["01", "10"]);
        let d = p2.symplectic_decompose().unwrap();
        assert_eq!(d.m, 2);
        let n2 = BitMatrix::hyperbolic(2);
        assert_eq!(d.c.transpose().mul(&n2).unwrap().mul(&d.c).unwrap(), p2);

        let k3 = mat(&["011", "101", "110"]);
        let d = k3.symplectic_decompose().unwrap();
        assert_eq!(d.m, 2);
        let prod =
            d.c.transpose()
                .mul(&BitMatrix::hyperbolic(2))
                .unwrap()
                .mul(&d.c)
                .unwrap();
        assert_eq!(prod, k3);
    }

    #[test]
    fn decompose_rejects_non_alternating() {
        assert!(matches!(
            mat(&["01", "00"]).symplectic_decompose(),
            Err(Error::NotAlternating(_))
        ));
        assert!(matches!(
            mat(&["11", "10"]).symplectic_decompose(),
            Err(Error::NotAlternating(_))
        ));
        assert!(BitMatrix::zeros(2, 3).symplectic_decompose().is_err());
    }

    #[test]
    fn decompose_random_alternating() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for sample in 0..1000 {
            let n = 1 + sample % 64;
            let p = [0.05, 0.2, 0.5, 0.8][sample % 4];
            let a = random_alternating(&mut rng, n, p);
            let d = a.symplectic_decompose().unwrap();
            assert_eq!(d.m % 2, 0);
            assert_eq!(d.m, a.rank());
            assert_eq!(d.c.rank(), d.m);
            let prod =
                d.c.transpose()
                    .mul(&BitMatrix::hyperbolic(d.m))
                    .unwrap()
                    .mul(&d.c)
                    .unwrap();
            assert_eq!(prod, a, "n = {n}");
        }
    }

    #[test]
    fn rank_matches_naive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let rows = rng.random_range(0..=16);
            let cols = rng.random_range(0..=16);
            let m = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.rank(), naive_rank(&m));
        }
    }

    #[test]
    fn text_dump_round_trip() {
        let t = mat(&["1100", "1110", "1101"]);
        assert_eq!(t.to_text(), "1100\n1110\n1101\n");
        assert_eq!(BitMatrix::from_text(&t.to_text(), 0).unwrap(), t);
        assert!(BitMatrix::from_text("10\n1", 0).is_err());
        assert!(BitMatrix::from_text("1x", 0).is_err());
        assert_eq!(BitMatrix::from_text("", 5).unwrap().cols(), 5);
    }

    #[test]
    fn ones_iterates_across_words() {
        let v = BitVector::from_indices(200, [0, 63, 64, 130, 199]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 63, 64, 130, 199]);
        assert_eq!(v.first_one(), Some(0));
        assert_eq!(v.count_ones(), 5);
    }

    proptest! {
        #[test]
        fn rank_invariant_under_row_operations(
            seed in any::<u64>(),
            rows in 1usize..20,
            cols in 1usize..20,
            ops in proptest::collection::vec((0usize..20, 0usize..20, any::<bool>()), 0..30),
        ) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(&mut rng, rows, cols);
            let r = m.rank();
            let mut w = m.clone();
            for (a, b, swap) in ops {
                let (a, b) = (a % rows, b % rows);
                if swap {
                    w.swap_rows(a, b);
                } else if a != b {
                    w.add_row(a, b);
                }
            }
            prop_assert_eq!(w.rank(), r);
        }
    }
}
