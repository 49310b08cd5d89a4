//! The SO(3) torus TQFT: the quantum representation of the extended mapping class
//! group of T², knot-complement vectors and Dehn-filling formulas.

mod extended;
mod line;
mod surgery;
mod vector;

pub use extended::{rho, rho_generator, rho_s, rho_t, rho_t_inv, word_product, word_times_f1, ExtendedClass, Generator};
pub use line::{maslov, maslov_signature, omega, QQLine};
pub use surgery::{
    knot_vector, knot_vector_from_cables, one_over_k_invariant, one_over_k_vector, slope_word,
    surgery_from_vector, surgery_invariant, two_invariant, two_vector, Expansion,
};
pub use vector::{hermitian, Matrix, TqftVector};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{CycloScalar, Level};
    use crate::knot::PlanarDiagram;
    use proptest::prelude::*;
    use Generator::*;

    #[test]
    fn rho_relations() {
        for r in [3u32, 5, 7, 9] {
            let lvl = Level::new(r).unwrap();
            assert!(rho_t(&lvl).pow(r).is_scalar(&lvl.one()), "T^r, r = {r}");
            assert!(rho_s(&lvl).pow(2).is_scalar(&lvl.one()), "S², r = {r}");
            let st = ExtendedClass::from_word(&[S, T]).pow(3);
            let kinv = lvl.kappa().inverse().unwrap();
            assert!(rho(&st, &lvl).is_scalar(&kinv), "(ST)³, r = {r}");
            assert!(word_product(st.word(), &lvl).is_scalar(&kinv));
            assert!(rho(&ExtendedClass::new(vec![], 1), &lvl).is_scalar(lvl.kappa()));
        }
    }

    #[test]
    fn twist_eigenvalues_are_distinct() {
        for r in [5u32, 7, 11, 13] {
            let lvl = Level::new(r).unwrap();
            let t = rho_t(&lvl);
            for i in 0..lvl.colors() {
                for j in 0..i {
                    assert_ne!(t.entry(i, i), t.entry(j, j), "r = {r}");
                }
            }
        }
    }

    #[test]
    fn orthonormal_basis() {
        let lvl = Level::new(7).unwrap();
        let f1 = TqftVector::basis(&lvl, 1);
        let f2 = TqftVector::basis(&lvl, 2);
        assert!(hermitian(&f1, &f1).unwrap().is_one());
        assert!(hermitian(&f1, &f2).unwrap().is_zero());
        let other = TqftVector::basis(&Level::new(5).unwrap(), 1);
        assert!(matches!(hermitian(&f1, &other), Err(crate::Error::LevelMismatch(7, 5))));
    }

    #[test]
    fn unknot_vector_is_s_f1() {
        for r in [5u32, 7] {
            let lvl = Level::new(r).unwrap();
            let z = knot_vector(&PlanarDiagram::unknot(), &lvl).unwrap();
            assert_eq!(z, rho_s(&lvl).apply(&TqftVector::basis(&lvl, 1)));
            assert_eq!(&z.entries()[0], lvl.eta());
        }
    }

    fn word_strategy() -> impl Strategy<Value = Vec<Generator>> {
        prop::collection::vec(prop_oneof![Just(S), Just(T), Just(Tinv)], 0..8)
    }

    fn vector_strategy(r: u32) -> impl Strategy<Value = Vec<Vec<i64>>> {
        let deg = crate::cyclo::field(r).unwrap().degree();
        prop::collection::vec(prop::collection::vec(-3i64..=3, deg), (r as usize - 1) / 2)
    }

    fn to_vector(lvl: &Level, raw: &[Vec<i64>]) -> TqftVector {
        let entries = raw
            .iter()
            .map(|c| {
                let big: Vec<num_bigint::BigInt> = c.iter().map(|&x| x.into()).collect();
                CycloScalar::from_coeffs(lvl.r(), &big, 1.into()).unwrap()
            })
            .collect();
        TqftVector::new(lvl, entries).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn s_is_unitary(u in vector_strategy(7), v in vector_strategy(7)) {
            let lvl = Level::new(7).unwrap();
            let (u, v) = (to_vector(&lvl, &u), to_vector(&lvl, &v));
            let s = rho_s(&lvl);
            prop_assert_eq!(hermitian(&s.apply(&u), &s.apply(&v)).unwrap(), hermitian(&u, &v).unwrap());
        }

        #[test]
        fn rho_is_word_independent(w in word_strategy(), r in prop_oneof![Just(5u32), Just(7)]) {
            // w · S⁴ · (ST)⁶ · w' and w present the same extended class once weights are composed
            let lvl = Level::new(r).unwrap();
            let base = ExtendedClass::from_word(&w);
            let mut padded = w.clone();
            padded.extend([S, S, S, S]);
            padded.extend([S, T].repeat(6));
            let long = ExtendedClass::from_word(&padded);
            prop_assert_eq!(long.matrix(), base.matrix());
            let fixed = ExtendedClass::new(padded, base.weight());
            prop_assert!(rho(&fixed, &lvl) == rho(&base, &lvl));
        }
    }
}
