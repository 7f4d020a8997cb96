//! Cayley tables of finite magmas, with the quasigroup and loop structure
//! read off them: translations, divisions, inverses and the transpose.

use alloc::vec::Vec;

use crate::error::{domain, structure, Result};
use crate::perm::Permutation;

/// Which one-sided notion an operation should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Side {
    Left,
    Right,
}

/// A binary operation on `{1..n}` given by its Cayley table (row = left operand).
///
/// Structural flags are computed once at construction. For latin tables the
/// left and right division tables are cached as well.
#[derive(Debug, Clone)]
pub struct FiniteMagma {
    order: usize,
    cells: Vec<u8>,
    latin: bool,
    commutative: bool,
    left_identities: Vec<usize>,
    right_identities: Vec<usize>,
    // ldiv[a * n + b] = a \ b, rdiv[a * n + b] = b / a (0-based); empty unless latin.
    ldiv: Vec<u8>,
    rdiv: Vec<u8>,
}

impl PartialEq for FiniteMagma {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.cells == other.cells
    }
}

impl Eq for FiniteMagma {}

impl core::hash::Hash for FiniteMagma {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.cells.hash(state);
    }
}

impl FiniteMagma {
    /// Builds a magma from 1-based rows.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > crate::MAX_ORDER {
            return Err(domain!("order {n} outside 1..={}", crate::MAX_ORDER));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(domain!("row {} has {} entries, expected {n}", r + 1, row.len()));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(domain!("cell ({}, {}) = {v} outside 1..={n}", r + 1, c + 1));
                }
                cells.push((v - 1) as u8);
            }
        }
        Ok(Self::from_cells(n, cells))
    }

    /// Builds a magma from a 1-based product function.
    pub fn from_fn(order: usize, mut op: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (1..=order).map(|x| (1..=order).map(|y| op(x, y)).collect()).collect();
        Self::from_rows(&rows)
    }

    /// Builds a magma from 0-based, row-major cells already known to be in range.
    pub(crate) fn from_cells(order: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        debug_assert!(cells.iter().all(|&c| (c as usize) < order));
        let n = order;
        let at = |x: usize, y: usize| cells[x * n + y] as usize;

        let rows_latin = (0..n).all(|x| crate::perm::is_bijection(&cells[x * n..(x + 1) * n]));
        let cols_latin = rows_latin && {
            let mut seen = alloc::vec![false; n];
            (0..n).all(|y| {
                seen.iter_mut().for_each(|s| *s = false);
                (0..n).all(|x| !core::mem::replace(&mut seen[at(x, y)], true))
            })
        };
        let latin = rows_latin && cols_latin;
        let commutative = (0..n).all(|x| (x + 1..n).all(|y| at(x, y) == at(y, x)));
        let left_identities = (0..n).filter(|&e| (0..n).all(|x| at(e, x) == x)).map(|e| e + 1).collect();
        let right_identities = (0..n).filter(|&e| (0..n).all(|x| at(x, e) == x)).map(|e| e + 1).collect();

        let (mut ldiv, mut rdiv) = (Vec::new(), Vec::new());
        if latin {
            ldiv = alloc::vec![0u8; n * n];
            rdiv = alloc::vec![0u8; n * n];
            for a in 0..n {
                for x in 0..n {
                    ldiv[a * n + at(a, x)] = x as u8;
                    rdiv[a * n + at(x, a)] = x as u8;
                }
            }
        }
        FiniteMagma { order, cells, latin, commutative, left_identities, right_identities, ldiv, rdiv }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x · y` for 1-based labels, checked.
    pub fn multiply(&self, x: usize, y: usize) -> Result<usize> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.product(x, y))
    }

    /// `x · y` for 1-based labels. Panics when out of range.
    #[inline]
    pub fn product(&self, x: usize, y: usize) -> usize {
        assert!(x >= 1 && x <= self.order && y >= 1 && y <= self.order, "element out of range");
        self.cells[(x - 1) * self.order + (y - 1)] as usize + 1
    }

    /// 0-based product; the workhorse of every search loop.
    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.order + j] as usize
    }

    /// The table as 1-based rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.order).map(|r| r.iter().map(|&c| c as usize + 1).collect()).collect()
    }

    pub fn is_latin(&self) -> bool {
        self.latin
    }

    pub fn is_quasigroup(&self) -> bool {
        self.latin
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn left_identities(&self) -> &[usize] {
        &self.left_identities
    }

    pub fn right_identities(&self) -> &[usize] {
        &self.right_identities
    }

    /// The two-sided identity, if any (necessarily unique).
    pub fn identity(&self) -> Option<usize> {
        self.left_identities.iter().copied().find(|e| self.right_identities.contains(e))
    }

    pub fn is_loop(&self) -> bool {
        self.latin && self.identity().is_some()
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x == 0 || x > self.order {
            Err(domain!("element {x} outside 1..={}", self.order))
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_latin(&self, what: &str) -> Result<()> {
        if self.latin {
            Ok(())
        } else {
            Err(structure!("{what} requires a quasigroup (latin table)"))
        }
    }

    pub(crate) fn require_loop(&self, what: &str) -> Result<usize> {
        self.require_latin(what)?;
        self.identity().ok_or_else(|| structure!("{what} requires a loop (two-sided identity)"))
    }

    /// `L_a : x ↦ a·x`.
    pub fn left_translation(&self, a: usize) -> Result<Permutation> {
        self.require_latin("left translation")?;
        self.check_element(a)?;
        let n = self.order;
        Ok(Permutation::from_raw(self.cells[(a - 1) * n..a * n].to_vec()))
    }

    /// `R_a : x ↦ x·a`.
    pub fn right_translation(&self, a: usize) -> Result<Permutation> {
        self.require_latin("right translation")?;
        self.check_element(a)?;
        let n = self.order;
        Ok(Permutation::from_raw((0..n).map(|x| self.cells[x * n + a - 1]).collect()))
    }

    /// The unique `x` with `a·x = b`.
    pub fn left_divide(&self, a: usize, b: usize) -> Result<usize> {
        self.require_latin("left division")?;
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.ldiv(a - 1, b - 1) + 1)
    }

    /// The unique `x` with `x·a = b`.
    pub fn right_divide(&self, a: usize, b: usize) -> Result<usize> {
        self.require_latin("right division")?;
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.rdiv(a - 1, b - 1) + 1)
    }

    /// 0-based `a \ b`. Only meaningful on latin tables.
    #[inline]
    pub(crate) fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a * self.order + b] as usize
    }

    /// 0-based `b / a`, i.e. the `x` with `x·a = b`. Only meaningful on latin tables.
    #[inline]
    pub(crate) fn rdiv(&self, a: usize, b: usize) -> usize {
        self.rdiv[a * self.order + b] as usize
    }

    /// Left and right inverses of `a` with respect to the identity.
    pub fn inverses(&self, a: usize) -> Result<Inverses> {
        let e = self.require_loop("inverses")?;
        self.check_element(a)?;
        Ok(Inverses { left: self.rdiv(a - 1, e - 1) + 1, right: self.ldiv(a - 1, e - 1) + 1 })
    }

    /// One-sided inverse of `a`.
    pub fn inverse(&self, a: usize, side: Side) -> Result<usize> {
        let inv = self.inverses(a)?;
        Ok(match side {
            Side::Left => inv.left,
            Side::Right => inv.right,
        })
    }

    /// The table with `result(x, y) = self(y, x)`.
    pub fn transpose(&self) -> FiniteMagma {
        let n = self.order;
        let cells = (0..n * n).map(|k| self.cells[(k % n) * n + k / n]).collect();
        FiniteMagma::from_cells(n, cells)
    }

    /// The left and right translation sets and their common part.
    pub fn translations(&self) -> Result<TranslationSets> {
        self.require_latin("translation sets")?;
        let n = self.order;
        let pi_lambda: Vec<Permutation> = (1..=n).map(|a| self.left_translation(a)).collect::<Result<_>>()?;
        let pi_rho: Vec<Permutation> = (1..=n).map(|a| self.right_translation(a)).collect::<Result<_>>()?;
        let mut pi: Vec<Permutation> =
            pi_lambda.iter().zip(&pi_rho).filter(|(l, r)| l == r).map(|(l, _)| l.clone()).collect();
        pi.sort();
        pi.dedup();
        Ok(TranslationSets { pi_lambda, pi_rho, pi })
    }

    /// Cells where `self` and `other` differ, as `(x, y, self(x, y), other(x, y))`.
    pub fn diff(&self, other: &FiniteMagma) -> Result<Vec<CellDiff>> {
        if self.order != other.order {
            return Err(domain!("cannot diff tables of order {} and {}", self.order, other.order));
        }
        let n = self.order;
        Ok((0..n * n)
            .filter(|&k| self.cells[k] != other.cells[k])
            .map(|k| CellDiff {
                row: k / n + 1,
                col: k % n + 1,
                left: self.cells[k] as usize + 1,
                right: other.cells[k] as usize + 1,
            })
            .collect())
    }
}

/// One differing cell between two tables of equal order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CellDiff {
    pub row: usize,
    pub col: usize,
    pub left: usize,
    pub right: usize,
}

/// `left·a = e` and `a·right = e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inverses {
    pub left: usize,
    pub right: usize,
}

impl Inverses {
    pub fn two_sided(&self) -> Option<usize> {
        (self.left == self.right).then_some(self.left)
    }
}

/// `Π_λ`, `Π_ρ` and `Π` of a quasigroup: the left translations, the right
/// translations, and the permutations that are both `L_a` and `R_a` for one `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationSets {
    pub pi_lambda: Vec<Permutation>,
    pub pi_rho: Vec<Permutation>,
    pub pi: Vec<Permutation>,
}
