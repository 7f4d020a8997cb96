//! Every loop table of a small order with identity element 1.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::identities::{is_c_loop, is_lc_loop, is_rc_loop};
use crate::tables::FiniteMagma;

/// Largest order [`enumerate_loops`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum LoopFilter {
    All,
    /// Pruned during the search: only symmetric fillings are explored.
    Commutative,
    Lc,
    Rc,
    C,
}

impl LoopFilter {
    fn accepts(self, m: &FiniteMagma) -> bool {
        match self {
            LoopFilter::All | LoopFilter::Commutative => true,
            LoopFilter::Lc => is_lc_loop(m),
            LoopFilter::Rc => is_rc_loop(m),
            LoopFilter::C => is_c_loop(m),
        }
    }
}

/// All reduced latin squares of order `n` (first row and column in natural
/// order), i.e. every loop on `{1..n}` whose identity is 1, as raw tables.
/// Yielded in lexicographic order of their rows.
pub fn enumerate_loops(n: usize, filter: LoopFilter) -> Result<Vec<FiniteMagma>> {
    if n == 0 {
        return Err(Error::Domain("order must be positive".into()));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::Budget(alloc::format!(
            "loop enumeration is limited to order {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let mut cells = alloc::vec![0u8; n * n];
    for i in 0..n {
        cells[i] = i as u8;
        cells[i * n] = i as u8;
    }
    let mut row_used = alloc::vec![0u64; n];
    let mut col_used = alloc::vec![0u64; n];
    for i in 0..n {
        row_used[i] |= 1 << i;
        col_used[i] |= 1 << i;
    }
    let mut out = Vec::new();
    let commutative = filter == LoopFilter::Commutative;
    fill(n, n + 1, commutative, &mut cells, &mut row_used, &mut col_used, &mut |cells| {
        let m = FiniteMagma::from_cells(n, cells.to_vec());
        if filter.accepts(&m) {
            out.push(m);
        }
    });
    Ok(out)
}

fn fill(
    n: usize,
    pos: usize,
    commutative: bool,
    cells: &mut [u8],
    row_used: &mut [u64],
    col_used: &mut [u64],
    emit: &mut dyn FnMut(&[u8]),
) {
    if n <= 1 || pos >= n * n {
        emit(cells);
        return;
    }
    let (r, c) = (pos / n, pos % n);
    if c == 0 {
        return fill(n, pos + 1, commutative, cells, row_used, col_used, emit);
    }
    if commutative && c < r {
        // mirrored from (c, r), already validated when that cell was placed
        return fill(n, pos + 1, commutative, cells, row_used, col_used, emit);
    }
    for v in 0..n {
        let bit = 1u64 << v;
        if row_used[r] & bit != 0 || col_used[c] & bit != 0 {
            continue;
        }
        let mirror = commutative && c > r;
        if mirror && (row_used[c] & bit != 0 || col_used[r] & bit != 0) {
            continue;
        }
        cells[pos] = v as u8;
        row_used[r] |= bit;
        col_used[c] |= bit;
        if mirror {
            cells[c * n + r] = v as u8;
            row_used[c] |= bit;
            col_used[r] |= bit;
        }
        fill(n, pos + 1, commutative, cells, row_used, col_used, emit);
        row_used[r] &= !bit;
        col_used[c] &= !bit;
        if mirror {
            row_used[c] &= !bit;
            col_used[r] &= !bit;
        }
    }
}
