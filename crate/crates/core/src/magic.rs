//! Magic squares and the shifted blocks `Ω_i = Ω + (i-1)·n²·J`.
//!
//! One fixed square per order: the Siamese method for odd `n`, the diagonal
//! complement pattern for `n ≡ 0 (mod 4)`, and Conway's LUX method for
//! `n ≡ 2 (mod 4)`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MagicError {
    #[error("magic squares are built for orders n >= 3, got {0}")]
    InvalidOrder(usize),
    #[error("block index {i} outside 1..={q}")]
    InvalidLabel { i: u64, q: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicSquare {
    n: usize,
    rows: Vec<Vec<u64>>,
}

/// `(n³ + n) / 2`.
pub fn magic_constant(n: u64) -> u64 {
    (n * n * n + n) / 2
}

pub fn magic_square(n: usize) -> Result<MagicSquare, MagicError> {
    if n < 3 {
        return Err(MagicError::InvalidOrder(n));
    }
    let rows = if n % 2 == 1 {
        siamese(n)
    } else if n.is_multiple_of(4) {
        doubly_even(n)
    } else {
        lux(n)
    };
    Ok(MagicSquare { n, rows })
}

fn siamese(n: usize) -> Vec<Vec<u64>> {
    let mut sq = vec![vec![0u64; n]; n];
    let (mut r, mut c) = (0, n / 2);
    for k in 1..=(n * n) as u64 {
        sq[r][c] = k;
        let (nr, nc) = ((r + n - 1) % n, (c + 1) % n);
        if sq[nr][nc] == 0 {
            (r, c) = (nr, nc);
        } else {
            r = (r + 1) % n;
        }
    }
    sq
}

fn doubly_even(n: usize) -> Vec<Vec<u64>> {
    let total = (n * n) as u64 + 1;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = (i * n + j) as u64 + 1;
                    let (a, b) = (i % 4, j % 4);
                    if a == b || a + b == 3 {
                        total - v
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect()
}

fn lux(n: usize) -> Vec<Vec<u64>> {
    #[derive(Clone, Copy)]
    enum Pattern {
        L,
        U,
        X,
    }
    let half = n / 2;
    let k = (n - 2) / 4;
    let base = siamese(half);
    let mut sq = vec![vec![0u64; n]; n];
    for i in 0..half {
        for j in 0..half {
            let mut pat = if i <= k {
                Pattern::L
            } else if i == k + 1 {
                Pattern::U
            } else {
                Pattern::X
            };
            // the centre L and the U beneath it trade places
            if j == half / 2 && i == k {
                pat = Pattern::U;
            } else if j == half / 2 && i == k + 1 {
                pat = Pattern::L;
            }
            let s = 4 * (base[i][j] - 1);
            // [top-left, top-right, bottom-left, bottom-right]
            let cell = match pat {
                Pattern::L => [4, 1, 2, 3],
                Pattern::U => [1, 4, 2, 3],
                Pattern::X => [1, 4, 3, 2],
            };
            sq[2 * i][2 * j] = s + cell[0];
            sq[2 * i][2 * j + 1] = s + cell[1];
            sq[2 * i + 1][2 * j] = s + cell[2];
            sq[2 * i + 1][2 * j + 1] = s + cell[3];
        }
    }
    sq
}

impl MagicSquare {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.rows[r][c]
    }

    /// Entries form a permutation of `1..=n²` and all rows, columns and both
    /// diagonals hit the magic constant.
    pub fn is_magic(&self) -> bool {
        let n = self.n;
        let k = magic_constant(n as u64);
        let mut seen = vec![false; n * n + 1];
        for &v in self.rows.iter().flatten() {
            let v = v as usize;
            if v == 0 || v > n * n || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let rows_ok = self.rows.iter().all(|r| r.iter().sum::<u64>() == k);
        let cols_ok = (0..n).all(|c| (0..n).map(|r| self.rows[r][c]).sum::<u64>() == k);
        let diag = (0..n).map(|i| self.rows[i][i]).sum::<u64>();
        let anti = (0..n).map(|i| self.rows[i][n - 1 - i]).sum::<u64>();
        rows_ok && cols_ok && diag == k && anti == k
    }

    /// `Ω_i`: every entry raised by `(i-1)·n²`, for `1 <= i <= q`.
    pub fn shifted_block(&self, i: u64, q: u64) -> Result<Vec<Vec<u64>>, MagicError> {
        if i < 1 || i > q {
            return Err(MagicError::InvalidLabel { i, q });
        }
        let shift = (i - 1) * (self.n * self.n) as u64;
        Ok(self.rows.iter().map(|r| r.iter().map(|&v| v + shift).collect()).collect())
    }
}

impl fmt::Display for MagicSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_grid(&self.rows))
    }
}

/// Space-separated rows, one per line.
pub fn render_grid(rows: &[Vec<u64>]) -> String {
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().map(u64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
