mod common;

use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use proptest::prelude::*;
use xmod_core::chartable::{character_table, DEFAULT_TABLE_CAP};
use xmod_core::fusion::{fusion_ring, FusionRing};
use xmod_core::group::GroupAction;
use xmod_core::rep::SimpleModules;
use xmod_core::{Cyclotomic, FiniteGroup};

use common::*;

fn cyclo() -> impl Strategy<Value = Cyclotomic> {
    (
        1usize..=24,
        prop::collection::vec((-5i64..=5, 1i64..=4), 1..5),
    )
        .prop_map(|(n, terms)| {
            let mut x = Cyclotomic::zero();
            for (k, (num, den)) in terms.into_iter().enumerate() {
                let t = Cyclotomic::root_of_unity(n, k as i64 * 7 % n as i64);
                x = &x + &t.scale(&BigRational::new(num.into(), den.into()));
            }
            x
        })
}

fn s3_ring() -> &'static (SimpleModules, FusionRing) {
    static RING: OnceLock<(SimpleModules, FusionRing)> = OnceLock::new();
    RING.get_or_init(|| {
        let sm = SimpleModules::new(Arc::new(s3_conj()), 0).unwrap();
        let ring = fusion_ring(&sm, 0).unwrap();
        (sm, ring)
    })
}

proptest! {
    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
    }

    #[test]
    fn inverse(a in cyclo()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn embedding_is_a_homomorphism(a in cyclo(), b in cyclo()) {
        let (za, zb) = (a.to_complex(), b.to_complex());
        prop_assert!(((&a * &b).to_complex() - za * zb).norm() < 1e-9);
        prop_assert!(((&a + &b).to_complex() - (za + zb)).norm() < 1e-9);
        prop_assert!((a.conj().to_complex() - za.conj()).norm() < 1e-9);
    }

    #[test]
    fn orbit_stabilizer(n in 2usize..=6, dihedral in any::<bool>()) {
        let g = if dihedral { FiniteGroup::dihedral(n) } else { FiniteGroup::cyclic(n) };
        let sub: Vec<usize> = (0..g.order()).collect();
        let action = GroupAction::conjugation(&g, &g.subgroup(&sub));
        let data = action.orbits();
        let mut total = 0;
        for (orbit, stab) in data.orbits.iter().zip(&data.stabilizers) {
            prop_assert_eq!(orbit.len() * stab.len(), g.order());
            total += orbit.len();
        }
        prop_assert_eq!(total, sub.len());
    }

    #[test]
    fn column_orthogonality(n in 1usize..=6, dihedral in any::<bool>()) {
        let g = if dihedral { FiniteGroup::dihedral(n.max(2)) } else { FiniteGroup::cyclic(n) };
        let table = character_table(&g, DEFAULT_TABLE_CAP).unwrap();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let mut acc = Cyclotomic::zero();
                for i in 0..table.len() {
                    acc = &acc + &(table.value(i, x) * &table.value(i, y).conj());
                }
                let want = if g.class_of(x) == g.class_of(y) {
                    (g.order() / g.conjugacy_classes()[g.class_of(x)].len()) as i64
                } else {
                    0
                };
                prop_assert_eq!(acc, Cyclotomic::from_integer(want));
            }
        }
    }

    #[test]
    fn frobenius_symmetry(a in 0usize..8, b in 0usize..8, c in 0usize..8) {
        let (sm, ring) = s3_ring();
        let labels = sm.labels();
        let dual = |i: usize| sm.index(sm.dual_label(labels[i]).unwrap()).unwrap();
        prop_assert_eq!(ring.n[a][b][c], ring.n[dual(c)][a][dual(b)]);
    }
}
