//! Embedded tables: the order-6 LC-loop, its parastrophe and their printed
//! isotopes, the isotopism triples that produce them, and small groups.

use alloc::string::String;
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::tables::FiniteMagma;
use crate::transforms::{apply_isotopism, IsotopismTriple};

/// The order-6 RC-loop `(L, θ*)` exactly as printed.
pub const THETA_STAR_ROWS: [[usize; 6]; 6] = [
    [1, 2, 3, 4, 5, 6],
    [2, 1, 5, 3, 6, 4],
    [3, 6, 1, 2, 4, 5],
    [4, 5, 6, 1, 3, 2],
    [5, 4, 2, 6, 1, 3],
    [6, 3, 4, 5, 2, 1],
];

/// The printed `(L, ⊗)` table. Row 4 repeats 4 and misses 2, so it is not latin.
pub const OTIMES_PRINTED_ROWS: [[usize; 6]; 6] = [
    [6, 4, 5, 2, 3, 1],
    [5, 3, 2, 6, 1, 4],
    [4, 5, 6, 1, 2, 3],
    [3, 6, 1, 5, 4, 4],
    [1, 2, 3, 4, 5, 6],
    [2, 1, 4, 3, 6, 5],
];

/// The printed `(L, ⊕)` table.
pub const OPLUS_PRINTED_ROWS: [[usize; 6]; 6] = [
    [6, 4, 1, 3, 5, 2],
    [3, 5, 2, 4, 6, 1],
    [2, 6, 3, 1, 4, 5],
    [5, 1, 4, 2, 3, 6],
    [4, 2, 5, 6, 1, 3],
    [1, 3, 6, 5, 2, 4],
];

const CYCLE_A: [usize; 6] = [1, 5, 2, 4, 3, 6];
const CYCLE_B: [usize; 6] = [1, 3, 4, 6, 5, 2];

fn fixed(rows: &[[usize; 6]; 6]) -> FiniteMagma {
    FiniteMagma::from_rows(rows).expect("embedded table is well formed")
}

fn cycle6(c: [usize; 6]) -> Permutation {
    Permutation::from_cycles(6, &[c]).expect("embedded cycle is well formed")
}

pub fn theta_star() -> FiniteMagma {
    fixed(&THETA_STAR_ROWS)
}

/// The LC-loop `(L, θ)`: the transpose of the printed `θ*`.
pub fn theta() -> FiniteMagma {
    theta_star().transpose()
}

pub fn otimes_printed() -> FiniteMagma {
    fixed(&OTIMES_PRINTED_ROWS)
}

pub fn oplus_printed() -> FiniteMagma {
    fixed(&OPLUS_PRINTED_ROWS)
}

/// `A = (1 5 2 4 3 6)`, `B = C = (1 3 4 6 5 2)`, taking `θ` to `⊗`.
pub fn construction1_triple() -> IsotopismTriple {
    IsotopismTriple::new(cycle6(CYCLE_A), cycle6(CYCLE_B), cycle6(CYCLE_B)).unwrap()
}

/// `A = C = (1 5 2 4 3 6)`, `B = (1 3 4 6 5 2)`, taking `θ*` to `⊕`.
pub fn construction2_triple() -> IsotopismTriple {
    IsotopismTriple::new(cycle6(CYCLE_A), cycle6(CYCLE_B), cycle6(CYCLE_A)).unwrap()
}

/// `θ(A, B, C)` for [`construction1_triple`].
pub fn otimes_recomputed() -> FiniteMagma {
    apply_isotopism(&theta(), &construction1_triple()).expect("θ is a quasigroup")
}

/// `θ*(A, B, C)` for [`construction2_triple`].
pub fn oplus_recomputed() -> FiniteMagma {
    apply_isotopism(&theta_star(), &construction2_triple()).expect("θ* is a quasigroup")
}

/// `Z_n` with label `k + 1` standing for the residue `k`.
pub fn cyclic(n: usize) -> FiniteMagma {
    FiniteMagma::from_fn(n, |x, y| (x - 1 + y - 1) % n + 1).expect("cyclic table")
}

/// `Z_2 × Z_2`.
pub fn klein() -> FiniteMagma {
    FiniteMagma::from_fn(4, |x, y| ((x - 1) ^ (y - 1)) + 1).expect("klein table")
}

/// `S_3` as permutations of three points, identity first.
pub fn symmetric3() -> FiniteMagma {
    let elems: Vec<Permutation> = [[1, 2, 3], [2, 3, 1], [3, 1, 2], [2, 1, 3], [3, 2, 1], [1, 3, 2]]
        .iter()
        .map(|p| Permutation::from_images(p).unwrap())
        .collect();
    let index = |p: &Permutation| elems.iter().position(|q| q == p).unwrap() + 1;
    FiniteMagma::from_fn(6, |x, y| index(&elems[x - 1].then(&elems[y - 1]))).expect("S3 table")
}

/// `D_4` of order 8; label `4b + a + 1` stands for `r^a s^b`.
/// The center is `{1, 3}` (`e` and `r²`).
pub fn dihedral8() -> FiniteMagma {
    FiniteMagma::from_fn(8, |x, y| {
        let (a, b) = ((x - 1) % 4, (x - 1) / 4);
        let (c, d) = ((y - 1) % 4, (y - 1) / 4);
        // r^a s^b r^c s^d = r^(a ± c) s^(b + d)
        let rot = if b == 0 { (a + c) % 4 } else { (a + 4 - c) % 4 };
        4 * ((b + d) % 2) + rot + 1
    })
    .expect("D4 table")
}

/// `Q_8`; labels 1..8 stand for `1, -1, i, -i, j, -j, k, -k`.
/// The center is `{1, 2}`.
pub fn quaternion8() -> FiniteMagma {
    // unit products: (negate, unit) for units 0=1, 1=i, 2=j, 3=k
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    FiniteMagma::from_fn(8, |x, y| {
        let (u, s) = ((x - 1) / 2, (x - 1) % 2);
        let (v, t) = ((y - 1) / 2, (y - 1) % 2);
        let (neg, w) = UNIT[u][v];
        let sign = (s + t + neg as usize) % 2;
        2 * w + sign + 1
    })
    .expect("Q8 table")
}

/// Names accepted by [`by_name`], in listing order.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = [
        "theta_star",
        "theta",
        "otimes_printed",
        "otimes_recomputed",
        "oplus_printed",
        "oplus_recomputed",
        "klein",
        "S3",
        "D4",
        "Q8",
    ]
    .iter()
    .map(|s| String::from(*s))
    .collect();
    out.extend((1..=8).map(|n| alloc::format!("Z{n}")));
    out
}

pub fn by_name(name: &str) -> Option<FiniteMagma> {
    Some(match name {
        "theta_star" => theta_star(),
        "theta" => theta(),
        "otimes_printed" => otimes_printed(),
        "otimes_recomputed" => otimes_recomputed(),
        "oplus_printed" => oplus_printed(),
        "oplus_recomputed" => oplus_recomputed(),
        "klein" => klein(),
        "S3" => symmetric3(),
        "D4" => dihedral8(),
        "Q8" => quaternion8(),
        _ => {
            let n: usize = name.strip_prefix('Z')?.parse().ok()?;
            if !(1..=8).contains(&n) {
                return None;
            }
            cyclic(n)
        }
    })
}

/// Triples by name: `construction1`, `construction2`.
pub fn triple_by_name(name: &str) -> Option<IsotopismTriple> {
    match name {
        "construction1" => Some(construction1_triple()),
        "construction2" => Some(construction2_triple()),
        _ => None,
    }
}

/// The group tables of the catalog.
pub fn groups() -> Vec<(String, FiniteMagma)> {
    names()
        .into_iter()
        .filter_map(|n| by_name(&n).map(|m| (n, m)))
        .filter(|(_, m)| crate::structure::is_group(m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_name_resolves() {
        for name in names() {
            assert!(by_name(&name).is_some(), "{name}");
        }
        assert!(by_name("Z9").is_none());
        assert!(by_name("nope").is_none());
    }

    #[test]
    fn latinity_of_printed_tables() {
        assert!(theta_star().is_latin());
        assert!(theta().is_latin());
        assert!(oplus_printed().is_latin());
        assert!(!otimes_printed().is_latin());
        assert!(otimes_recomputed().is_latin());
    }

    #[test]
    fn groups_are_groups() {
        let names: Vec<String> = groups().into_iter().map(|(n, _)| n).collect();
        for expected in ["klein", "S3", "D4", "Q8", "Z1", "Z6", "Z8"] {
            assert!(names.iter().any(|n| n == expected), "{expected}");
        }
        assert!(!names.iter().any(|n| n.starts_with("theta")));
    }

    #[test]
    fn d4_and_q8_shapes() {
        let d4 = dihedral8();
        let q8 = quaternion8();
        let involutions = |m: &FiniteMagma| (2..=8).filter(|&x| m.product(x, x) == 1).count();
        assert_eq!(involutions(&d4), 5);
        assert_eq!(involutions(&q8), 1);
        assert!(!d4.is_commutative() && !q8.is_commutative());
    }
}
