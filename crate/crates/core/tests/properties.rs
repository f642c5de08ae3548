//! Property-based checks of the algebraic invariants: root-system closure
//! laws, bracket bilinearity and antisymmetry, structure-constant string
//! lengths, echelon-form canonicity, and Killing-form invariance.

use std::sync::Arc;

use proptest::prelude::*;

use lie_index::chevalley::{chevalley_algebra, compact_form, killing_form, LieAlgebra};
use lie_index::linalg::{rat, Rat, Subspace};
use lie_index::rootsystem::{
    build_root_system, cartan_matrix, root_subsystem_closure, RootSystem, TypeLetter,
};

fn small_type() -> impl Strategy<Value = (TypeLetter, usize)> {
    prop_oneof![
        (Just(TypeLetter::A), 1usize..=5),
        (Just(TypeLetter::B), 2usize..=5),
        (Just(TypeLetter::C), 3usize..=5),
        (Just(TypeLetter::D), 3usize..=5),
        Just((TypeLetter::F, 4)),
        Just((TypeLetter::G, 2)),
    ]
}

fn system(letter: TypeLetter, rank: usize) -> RootSystem {
    build_root_system(cartan_matrix(letter, rank).unwrap()).unwrap()
}

fn compact(letter: TypeLetter, rank: usize) -> Arc<LieAlgebra> {
    let rs = Arc::new(system(letter, rank));
    let chev = Arc::new(chevalley_algebra(rs));
    Arc::new(compact_form(&chev).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn root_sets_close_under_negation_and_reflection((letter, rank) in small_type()) {
        let rs = system(letter, rank);
        prop_assert_eq!(rs.roots().len() % 2, 0);
        for root in rs.roots() {
            prop_assert!(rs.index_of(&root.negate()).is_some());
            for simple in 0..rank {
                let n = rs.pairing_with_simple_coroot(root.coords(), simple);
                let mut refl = root.coords().to_vec();
                refl[simple] -= n;
                prop_assert!(rs.root_index(&refl).is_some());
            }
        }
    }

    #[test]
    fn highest_root_is_maximal((letter, rank) in small_type()) {
        let rs = system(letter, rank);
        let theta = rs.highest_root().coords().to_vec();
        for i in 0..rank {
            let mut up = theta.clone();
            up[i] += 1;
            prop_assert!(rs.root_index(&up).is_none());
        }
    }

    #[test]
    fn subsystem_closure_is_idempotent(
        (letter, rank) in small_type(),
        picks in proptest::collection::vec(0usize..1000, 0..4),
    ) {
        let rs = system(letter, rank);
        let gens: Vec<_> = picks
            .iter()
            .map(|p| rs.root(p % rs.roots().len()).clone())
            .collect();
        let closure = root_subsystem_closure(&rs, &gens).unwrap();
        let closure_roots: Vec<_> = closure.iter().map(|&i| rs.root(i).clone()).collect();
        let again = root_subsystem_closure(&rs, &closure_roots).unwrap();
        prop_assert_eq!(&closure, &again);
        // closed under negation and addition
        for &a in &closure {
            prop_assert!(closure.contains(&rs.negation_index(a)));
            for &b in &closure {
                let sum: Vec<i64> = rs.root(a).coords().iter()
                    .zip(rs.root(b).coords())
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(idx) = rs.root_index(&sum) {
                    prop_assert!(closure.contains(&idx));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn structure_constants_match_string_lengths((letter, rank) in small_type()) {
        let rs = Arc::new(system(letter, rank));
        let l = chevalley_algebra(Arc::clone(&rs));
        for a in 0..rs.roots().len() {
            for b in (a + 1)..rs.roots().len() {
                if rs.negation_index(a) == b {
                    continue;
                }
                let sum: Vec<i64> = rs.root(a).coords().iter()
                    .zip(rs.root(b).coords())
                    .map(|(x, y)| x + y)
                    .collect();
                let Some(sum_idx) = rs.root_index(&sum) else { continue };
                let forward = l.bracket_basis(l.e_index(a), l.e_index(b));
                let backward = l.bracket_basis(l.e_index(b), l.e_index(a));
                prop_assert_eq!(forward.len(), 1);
                prop_assert_eq!(forward[0].0, l.e_index(sum_idx));
                // antisymmetry of the constants
                let n_ab = forward[0].1.clone();
                prop_assert_eq!(backward[0].1.clone(), -n_ab.clone());
                // |N| = p + 1 with p the string length below b in direction a
                let mut p = 0i64;
                let mut cur = rs.root(b).coords().to_vec();
                loop {
                    for (x, y) in cur.iter_mut().zip(rs.root(a).coords()) {
                        *x -= y;
                    }
                    if rs.root_index(&cur).is_none() {
                        break;
                    }
                    p += 1;
                }
                prop_assert_eq!(n_ab.clone(), rat(if n_ab > rat(0) { p + 1 } else { -(p + 1) }));
                // negation rule N(-a,-b) = -N(a,b)
                let neg = l.bracket_basis(
                    l.e_index(rs.negation_index(a)),
                    l.e_index(rs.negation_index(b)),
                );
                prop_assert_eq!(neg[0].1.clone(), -n_ab);
            }
        }
    }
}

fn small_vec(dim: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec(-6i64..=6, dim).prop_map(|v| v.into_iter().map(rat).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(
        u in small_vec(10),
        v in small_vec(10),
        w in small_vec(10),
        c in -4i64..=4,
    ) {
        let l = compact(TypeLetter::B, 2); // dimension 10
        let zero = vec![rat(0); 10];
        prop_assert_eq!(l.bracket(&u, &u).unwrap(), zero.clone());
        // [u+cv, w] = [u,w] + c[v,w]
        let ucv: Vec<Rat> = u.iter().zip(&v).map(|(a, b)| a + rat(c) * b).collect();
        let lhs = l.bracket(&ucv, &w).unwrap();
        let uw = l.bracket(&u, &w).unwrap();
        let vw = l.bracket(&v, &w).unwrap();
        let rhs: Vec<Rat> = uw.iter().zip(&vw).map(|(a, b)| a + rat(c) * b).collect();
        prop_assert_eq!(lhs, rhs);
        // antisymmetry of distinct arguments
        let uv = l.bracket(&u, &v).unwrap();
        let vu = l.bracket(&v, &u).unwrap();
        let neg: Vec<Rat> = vu.into_iter().map(|x| -x).collect();
        prop_assert_eq!(uv, neg);
    }

    #[test]
    fn killing_form_is_invariant(
        u in small_vec(8),
        v in small_vec(8),
        w in small_vec(8),
    ) {
        let l = compact(TypeLetter::A, 2);
        let b = killing_form(&l);
        let pair = |x: &[Rat], y: &[Rat]| -> Rat {
            let mut acc = rat(0);
            for (i, xi) in x.iter().enumerate() {
                for (j, yj) in y.iter().enumerate() {
                    acc += xi * yj * b.matrix.get(i, j);
                }
            }
            acc
        };
        let uv = l.bracket(&u, &v).unwrap();
        let uw = l.bracket(&u, &w).unwrap();
        // B([u,v],w) + B(v,[u,w]) = 0
        prop_assert_eq!(pair(&uv, &w) + pair(&v, &uw), rat(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn echelon_form_is_canonical(
        rows in proptest::collection::vec(
            proptest::collection::vec(-5i64..=5, 6),
            1..5,
        ),
        scale in 1i64..=4,
        swap in any::<bool>(),
    ) {
        let to_rat = |rows: &[Vec<i64>]| -> Vec<Vec<Rat>> {
            rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
        };
        let s1 = Subspace::from_spanning(6, to_rat(&rows));
        // the same row space presented differently: scaled rows, swapped
        // order, and a row sum appended
        let mut altered: Vec<Vec<i64>> = rows.iter()
            .map(|r| r.iter().map(|x| x * scale).collect())
            .collect();
        if swap && altered.len() >= 2 {
            altered.swap(0, 1);
        }
        if altered.len() >= 2 {
            let summed: Vec<i64> = altered[0].iter().zip(&altered[1]).map(|(a, b)| a + b).collect();
            altered.push(summed);
        }
        let s2 = Subspace::from_spanning(6, to_rat(&altered));
        prop_assert_eq!(&s1, &s2);
        // every spanning row is a member
        for row in to_rat(&rows) {
            prop_assert!(s1.contains_dense(&row));
        }
    }
}
