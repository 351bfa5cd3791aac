#![allow(dead_code)]

use std::sync::Arc;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xmod_core::group::{FiniteGroup, GroupAction, GroupHomomorphism};
use xmod_core::rt::{Atom, Color, ColoredTangle, StrandType};
use xmod_core::xmod::{CrossedModule, Label};
use xmod_core::Cyclotomic;

pub fn s3() -> FiniteGroup {
    FiniteGroup::symmetric(3, 100).unwrap()
}

pub fn z2_trivial() -> CrossedModule {
    let z2 = FiniteGroup::cyclic(2);
    CrossedModule::new(
        z2.clone(),
        z2.clone(),
        GroupAction::trivial(&z2, &z2),
        GroupHomomorphism::trivial(&z2),
    )
    .unwrap()
}

pub fn s3_conj() -> CrossedModule {
    CrossedModule::conjugation(&s3()).unwrap()
}

pub fn d4_aut() -> CrossedModule {
    CrossedModule::automorphism(&FiniteGroup::dihedral(4)).unwrap()
}

/// The axiom corpus.
pub fn corpus() -> Vec<(&'static str, CrossedModule)> {
    vec![
        ("(Z/2, Z/2, triv, 0)", z2_trivial()),
        ("conjugation(S3)", s3_conj()),
        ("automorphism(D4)", d4_aut()),
        (
            "(Z/4, 1)",
            CrossedModule::trivial_h(&FiniteGroup::cyclic(4)).unwrap(),
        ),
        ("(S3, 1)", CrossedModule::trivial_h(&s3()).unwrap()),
        (
            "(D4, 1)",
            CrossedModule::trivial_h(&FiniteGroup::dihedral(4)).unwrap(),
        ),
        (
            "normal_subgroup(S3, A3)",
            CrossedModule::normal_subgroup(&s3(), &[0, 4, 5]).unwrap(),
        ),
    ]
}

pub fn int(v: i64) -> Cyclotomic {
    Cyclotomic::from_integer(v)
}

/// Rows of the D(S3) table over the columns
/// `[e] [(12)] [(123)] | [e] [(12)] | [e] [(123)] [(132)]`.
pub fn reference_s3_table() -> Vec<Vec<Cyclotomic>> {
    let w = Cyclotomic::root_of_unity(3, 1);
    let w2 = Cyclotomic::root_of_unity(3, 2);
    let z = || int(0);
    let one = || int(1);
    vec![
        vec![one(), one(), one(), z(), z(), z(), z(), z()],
        vec![one(), int(-1), one(), z(), z(), z(), z(), z()],
        vec![int(2), z(), int(-1), z(), z(), z(), z(), z()],
        vec![z(), z(), z(), one(), one(), z(), z(), z()],
        vec![z(), z(), z(), one(), int(-1), z(), z(), z()],
        vec![z(), z(), z(), z(), z(), one(), one(), one()],
        vec![z(), z(), z(), z(), z(), one(), w.clone(), w2.clone()],
        vec![z(), z(), z(), z(), z(), one(), w2, w],
    ]
}

/// Columns of the S3 table as `(orbit rep, class rep)` by element name.
pub const REFERENCE_S3_COLUMNS: [(&str, &str); 8] = [
    ("e", "e"),
    ("e", "(12)"),
    ("e", "(123)"),
    ("(12)", "e"),
    ("(12)", "(12)"),
    ("(123)", "e"),
    ("(123)", "(123)"),
    ("(123)", "(132)"),
];

/// Orbit blocks of the reference D4 table in order, with the class columns
/// written as dihedral words.
pub const REFERENCE_D4_COLUMNS: [(&str, &str); 16] = [
    ("e", "e"),
    ("e", "r"),
    ("e", "s"),
    ("e", "r^2"),
    ("e", "sr"),
    ("r^2", "e"),
    ("r^2", "r"),
    ("r^2", "s"),
    ("r^2", "r^2"),
    ("r^2", "sr"),
    ("r", "e"),
    ("r", "r"),
    ("r", "r^2"),
    ("r", "r^3"),
    ("s", "e"),
    ("s", "s"),
];

pub fn reference_d4_table() -> Vec<Vec<Cyclotomic>> {
    let i = Cyclotomic::root_of_unity(4, 1);
    let mi = Cyclotomic::root_of_unity(4, 3);
    let d4 = [
        [1, 1, 1, 1, 1],
        [1, -1, 1, 1, -1],
        [1, -1, -1, 1, 1],
        [1, 1, -1, 1, -1],
        [2, 0, 0, -2, 0],
    ];
    let mut rows = Vec::new();
    for block in 0..2 {
        for r in d4 {
            let mut row = vec![int(0); 16];
            for (k, v) in r.iter().enumerate() {
                row[block * 5 + k] = int(*v);
            }
            rows.push(row);
        }
    }
    let z4 = [
        [int(1), int(1), int(1), int(1)],
        [int(1), i.clone(), int(-1), mi.clone()],
        [int(1), int(-1), int(1), int(-1)],
        [int(1), mi, int(-1), i],
    ];
    for r in z4 {
        let mut row = vec![int(0); 16];
        for (k, v) in r.into_iter().enumerate() {
            row[10 + k] = v;
        }
        rows.push(row);
    }
    for r in [[1, 1], [1, -1]] {
        let mut row = vec![int(0); 16];
        row[14] = int(r[0]);
        row[15] = int(r[1]);
        rows.push(row);
    }
    rows
}

/// Element of `D4 = dihedral(4)` for a word in `r`, `s`.
pub fn d4_word(g: &FiniteGroup, word: &str) -> usize {
    let (r, s) = (1, 4);
    let mut x = 0;
    let chars: Vec<char> = word.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        match chars[k] {
            'e' => {}
            'r' => {
                let mut e = 1;
                if k + 2 < chars.len() + 1 && chars.get(k + 1) == Some(&'^') {
                    e = chars[k + 2].to_digit(10).unwrap() as usize;
                    k += 2;
                }
                x = g.mul(x, g.pow(r, e));
            }
            's' => x = g.mul(x, s),
            c => panic!("bad word {c}"),
        }
        k += 1;
    }
    x
}

/// Isomorphism `D4 -> Aut(D4)`: `r` to `(r -> r, s -> sr)`, `s` to
/// conjugation by `s`.
pub fn d4_to_aut(x: &CrossedModule, d4: &FiniteGroup, w: usize) -> usize {
    let aut = x.g();
    let r_img = (0..8)
        .find(|&a| x.act(a, 1) == 1 && x.act(a, 4) == d4.mul(4, 1))
        .unwrap();
    let s_img = x.gamma_of(4);
    // write w = s^a r^k
    let (a, k) = (w / 4, w % 4);
    let mut out = aut.pow(r_img, k);
    if a == 1 {
        out = aut.mul(s_img, out);
    }
    out
}

/// Rows multiset equality within each block given by `blocks` (row counts).
pub fn rows_match_up_to_order(
    ours: &[Vec<Cyclotomic>],
    reference: &[Vec<Cyclotomic>],
    blocks: &[usize],
) -> bool {
    if ours.len() != reference.len() {
        return false;
    }
    let mut start = 0;
    for &b in blocks {
        let mut rest: Vec<&Vec<Cyclotomic>> = reference[start..start + b].iter().collect();
        for row in &ours[start..start + b] {
            match rest.iter().position(|p| *p == row) {
                Some(k) => {
                    rest.remove(k);
                }
                None => return false,
            }
        }
        start += b;
    }
    true
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pick<T: Clone>(rng: &mut ChaCha8Rng, items: &[T]) -> T {
    items[(rng.next_u32() as usize) % items.len()].clone()
}

/// A random well-typed tangle with at most four strands at any height and
/// several non-identity atoms per slice.
pub fn random_tangle(rng: &mut ChaCha8Rng, colors: &[Label]) -> ColoredTangle {
    let strand = |rng: &mut ChaCha8Rng| {
        let c = Color::Simple(pick(rng, colors));
        if rng.next_u32().is_multiple_of(2) {
            StrandType::up(c)
        } else {
            StrandType::down(c)
        }
    };
    let start = 1 + (rng.next_u32() % 2) as usize;
    let boundary: Vec<StrandType> = (0..start).map(|_| strand(rng)).collect();
    let mut cur = boundary.clone();
    let mut slices = Vec::new();
    let depth = 4 + (rng.next_u32() % 3) as usize;
    for _ in 0..depth {
        let mut atoms = Vec::new();
        let mut next = Vec::new();
        let mut pos = 0;
        let mut width = cur.len();
        while pos <= cur.len() {
            if width <= 2 && rng.next_u32().is_multiple_of(3) {
                let t = strand(rng);
                next.push(t.clone());
                next.push(t.dual());
                atoms.push(Atom::Cup(t));
                width += 2;
            }
            if pos == cur.len() {
                break;
            }
            let roll = rng.next_u32() % 6;
            if pos + 1 < cur.len() && roll < 2 {
                atoms.push(if roll == 0 {
                    Atom::PosCross
                } else {
                    Atom::NegCross
                });
                next.push(cur[pos + 1].clone());
                next.push(cur[pos].clone());
                pos += 2;
            } else if pos + 1 < cur.len()
                && cur[pos + 1] == cur[pos].dual()
                && width > 2
                && roll == 2
            {
                atoms.push(Atom::Cap);
                pos += 2;
                width -= 2;
            } else if roll == 3 {
                atoms.push(Atom::Twist(cur[pos].clone()));
                next.push(cur[pos].clone());
                pos += 1;
            } else if roll == 4 {
                atoms.push(Atom::TwistInv(cur[pos].clone()));
                next.push(cur[pos].clone());
                pos += 1;
            } else {
                atoms.push(Atom::Id(cur[pos].clone()));
                next.push(cur[pos].clone());
                pos += 1;
            }
        }
        slices.push(atoms);
        cur = next;
    }
    ColoredTangle::new(boundary, slices)
}

pub fn arc(x: CrossedModule) -> Arc<CrossedModule> {
    Arc::new(x)
}
