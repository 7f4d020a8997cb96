//! Frozen values from an independent brute-force oracle, and naive searches
//! compared against the pruned ones.

use qloop_core::catalog;
use qloop_core::enumerate::{enumerate_loops, LoopFilter};
use qloop_core::identities::{check_identity, IdentityId};
use qloop_core::morphisms::{are_isomorphic, are_isotopic_with, IsotopyStrategy, DEFAULT_BUDGET};
use qloop_core::structure::is_group;
use qloop_core::transforms::apply_isotopism;
use qloop_core::{FiniteMagma, IsotopismTriple, Permutation};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            cur.push(v);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

fn cells(m: &FiniteMagma) -> Vec<Vec<usize>> {
    m.rows().into_iter().map(|r| r.into_iter().map(|v| v - 1).collect()).collect()
}

/// The identities written out directly, 0-based.
fn naive_holds(m: &FiniteMagma, id: IdentityId) -> bool {
    let t = cells(m);
    let n = t.len();
    let p = |a: usize, b: usize| t[a][b];
    let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(x, y, z))));
    match id {
        IdentityId::LC1 => all3(&|x, y, z| p(p(x, x), p(y, z)) == p(p(x, p(x, y)), z)),
        IdentityId::LC2 => all3(&|x, y, z| p(p(x, p(x, y)), z) == p(x, p(x, p(y, z)))),
        IdentityId::LC3 => all3(&|x, y, z| p(p(p(x, x), y), z) == p(x, p(x, p(y, z)))),
        IdentityId::LC4 => all3(&|x, y, z| p(p(y, p(x, x)), z) == p(y, p(x, p(x, z)))),
        IdentityId::RC1 => all3(&|x, y, z| p(p(y, z), p(x, x)) == p(y, p(p(z, x), x))),
        IdentityId::RC2 => all3(&|x, y, z| p(p(p(y, z), x), x) == p(y, p(p(z, x), x))),
        IdentityId::RC3 => all3(&|x, y, z| p(p(p(y, z), x), x) == p(y, p(z, p(x, x)))),
        IdentityId::RC4 => all3(&|x, y, z| p(p(p(y, x), x), z) == p(y, p(p(x, x), z))),
        IdentityId::C => all3(&|x, y, z| p(p(p(y, x), x), z) == p(y, p(x, p(x, z)))),
        IdentityId::Commutative => all3(&|x, y, _| p(x, y) == p(y, x)),
        IdentityId::Associative => all3(&|x, y, z| p(p(x, y), z) == p(x, p(y, z))),
        _ => unreachable!(),
    }
}

/// Isotopy by trying every `(A, B)`; `C` is then forced.
fn naive_isotopic(m1: &FiniteMagma, m2: &FiniteMagma) -> bool {
    let (t1, t2) = (cells(m1), cells(m2));
    let n = t1.len();
    let perms = permutations(n);
    perms.iter().any(|a| {
        perms.iter().any(|b| {
            let mut c = vec![usize::MAX; n];
            (0..n).all(|x| {
                (0..n).all(|y| {
                    let (z, w) = (t1[x][y], t2[a[x]][b[y]]);
                    if c[z] == usize::MAX {
                        c[z] = w;
                    }
                    c[z] == w
                })
            }) && {
                let mut seen = c.clone();
                seen.sort_unstable();
                seen.dedup();
                seen.len() == n
            }
        })
    })
}

fn naive_isomorphic(m1: &FiniteMagma, m2: &FiniteMagma) -> bool {
    let (t1, t2) = (cells(m1), cells(m2));
    let n = t1.len();
    permutations(n).iter().any(|a| (0..n).all(|x| (0..n).all(|y| a[t1[x][y]] == t2[a[x]][a[y]])))
}

#[test]
fn loop_counts_by_identity_match_oracle() {
    // order: (loops, LC, RC, C, commutative, groups)
    let frozen = [
        (1, 1, 1, 1, 1, 1, 1),
        (2, 1, 1, 1, 1, 1, 1),
        (3, 1, 1, 1, 1, 1, 1),
        (4, 4, 4, 4, 4, 4, 4),
        (5, 56, 6, 6, 6, 6, 6),
    ];
    for (n, loops, lc, rc, c, comm, groups) in frozen {
        let all = enumerate_loops(n, LoopFilter::All).unwrap();
        assert_eq!(all.len(), loops, "order {n}");
        assert_eq!(enumerate_loops(n, LoopFilter::Lc).unwrap().len(), lc, "order {n}");
        assert_eq!(enumerate_loops(n, LoopFilter::Rc).unwrap().len(), rc, "order {n}");
        assert_eq!(enumerate_loops(n, LoopFilter::C).unwrap().len(), c, "order {n}");
        assert_eq!(enumerate_loops(n, LoopFilter::Commutative).unwrap().len(), comm, "order {n}");
        assert_eq!(all.iter().filter(|m| is_group(m)).count(), groups, "order {n}");
    }
}

#[test]
fn order_six_group_tables_match_oracle() {
    let groups: Vec<_> = enumerate_loops(6, LoopFilter::All).unwrap().into_iter().filter(is_group).collect();
    assert_eq!(groups.len(), 80);
    assert_eq!(groups.iter().filter(|m| m.is_commutative()).count(), 60);
}

#[test]
fn identity_checker_agrees_with_direct_formulas() {
    let mut tables: Vec<FiniteMagma> = (1..=5).flat_map(|n| enumerate_loops(n, LoopFilter::All).unwrap()).collect();
    for name in catalog::names() {
        tables.push(catalog::by_name(&name).unwrap());
    }
    let ids = [
        IdentityId::C,
        IdentityId::LC1,
        IdentityId::LC2,
        IdentityId::LC3,
        IdentityId::LC4,
        IdentityId::RC1,
        IdentityId::RC2,
        IdentityId::RC3,
        IdentityId::RC4,
        IdentityId::Commutative,
        IdentityId::Associative,
    ];
    for m in &tables {
        for id in ids {
            let report = check_identity(m, id);
            assert_eq!(report.holds, naive_holds(m, id), "{id} on {:?}", m.rows());
            if let Some(w) = report.witness {
                assert_ne!(w.lhs, w.rhs);
            }
        }
    }
}

#[test]
fn printed_tables_as_in_the_source() {
    assert_eq!(catalog::theta_star().rows()[3], vec![4, 5, 6, 1, 3, 2]);
    assert_eq!(catalog::otimes_printed().rows()[3], vec![3, 6, 1, 5, 4, 4]);
    assert!(!catalog::otimes_printed().is_latin());
    assert!(catalog::oplus_printed().is_latin());
    let a = Permutation::from_cycles(6, &[[1, 5, 2, 4, 3, 6]]).unwrap();
    let b = Permutation::from_cycles(6, &[[1, 3, 4, 6, 5, 2]]).unwrap();
    assert_eq!(catalog::construction1_triple(), IsotopismTriple::new(a.clone(), b.clone(), b.clone()).unwrap());
    assert_eq!(catalog::construction2_triple(), IsotopismTriple::new(a.clone(), b, a).unwrap());
}

#[test]
fn recomputed_constructions_cellwise() {
    // recomputed by hand from x∘y = ((xA⁻¹)θ(yB⁻¹))C
    let otimes = apply_isotopism(&catalog::theta(), &catalog::construction1_triple()).unwrap();
    assert_eq!(
        otimes.rows(),
        vec![
            vec![6, 4, 5, 2, 3, 1],
            vec![5, 3, 2, 6, 1, 4],
            vec![4, 5, 6, 1, 2, 3],
            vec![3, 6, 1, 5, 4, 2],
            vec![1, 2, 3, 4, 5, 6],
            vec![2, 1, 4, 3, 6, 5],
        ]
    );
    let oplus = apply_isotopism(&catalog::theta_star(), &catalog::construction2_triple()).unwrap();
    assert_eq!(oplus, catalog::oplus_printed());
}

#[test]
fn isotopy_searches_agree_with_naive_oracle_up_to_order_4() {
    let loops: Vec<FiniteMagma> = (1..=4).flat_map(|n| enumerate_loops(n, LoopFilter::All).unwrap()).collect();
    // isotopes that are not loops too
    let extra = apply_isotopism(
        &loops[4],
        &IsotopismTriple::new(
            Permutation::from_cycles(4, &[[1, 2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[[2, 4]]).unwrap(),
            Permutation::from_cycles(4, &[[1, 4]]).unwrap(),
        )
        .unwrap(),
    )
    .unwrap();
    let mut tables = loops.clone();
    tables.push(extra);
    for m1 in &tables {
        for m2 in &tables {
            if m1.order() != m2.order() {
                continue;
            }
            let expected = naive_isotopic(m1, m2);
            for s in [IsotopyStrategy::TripleSearch, IsotopyStrategy::PrincipalIsotopes] {
                let r = are_isotopic_with(m1, m2, DEFAULT_BUDGET, s).unwrap();
                assert_eq!(r.related, Some(expected), "{s:?} {:?} {:?}", m1.rows(), m2.rows());
                if let Some(t) = r.isotopism() {
                    assert!(t.maps(m1, m2));
                }
            }
            assert_eq!(are_isomorphic(m1, m2).related, Some(naive_isomorphic(m1, m2)));
        }
    }
}

#[test]
fn isotopy_searches_agree_with_naive_oracle_at_order_5() {
    let loops = enumerate_loops(5, LoopFilter::All).unwrap();
    let mut related = 0;
    for m1 in loops.iter().step_by(7) {
        for m2 in &loops {
            let expected = naive_isotopic(m1, m2);
            related += expected as usize;
            for s in [IsotopyStrategy::TripleSearch, IsotopyStrategy::PrincipalIsotopes] {
                let r = are_isotopic_with(m1, m2, DEFAULT_BUDGET, s).unwrap();
                assert_eq!(r.related, Some(expected), "{s:?}");
            }
        }
    }
    assert!(related > 0);
}

#[test]
fn group_isomorphism_matches_naive_oracle_at_order_6() {
    let groups: Vec<_> = enumerate_loops(6, LoopFilter::All).unwrap().into_iter().filter(is_group).collect();
    for (i, m1) in groups.iter().enumerate().step_by(5) {
        for m2 in &groups[i..] {
            assert_eq!(are_isomorphic(m1, m2).related, Some(naive_isomorphic(m1, m2)));
        }
    }
}

#[test]
fn d4_and_q8_are_not_isomorphic_by_brute_force() {
    assert!(!naive_isomorphic(&catalog::dihedral8(), &catalog::quaternion8()));
    assert!(are_isomorphic(&catalog::dihedral8(), &catalog::quaternion8()).is_unrelated());
}
