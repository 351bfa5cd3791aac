//! Acceptance suite: one line per criterion.
//!
//! Run with `cargo test -p xmod-core --test acceptance -- --nocapture` to see
//! the report.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use xmod_core::chartable::{character_table, DEFAULT_TABLE_CAP};
use xmod_core::fusion::{clebsch_gordan_predicate, fusion_ring, fusion_table, FusionMethod};
use xmod_core::hopf::{AxiomFamily, DAlgebra, DElement, DEFAULT_BASIS_CAP};
use xmod_core::matrix::Matrix;
use xmod_core::rep::{AnyRep, SimpleModules, XModCharTable};
use xmod_core::rt::{
    link_invariant, Atom, Color, ColoredBraidLink, ColoredTangle, RtEvaluator, StrandType,
};
use xmod_core::xmod::CrossedModule;
use xmod_core::{Cyclotomic, FiniteGroup};

use common::*;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn simples(x: CrossedModule) -> SimpleModules {
    SimpleModules::new(Arc::new(x), 0).unwrap()
}

fn criterion_1() -> Outcome {
    let sm = simples(s3_conj());
    let x = sm.xmod().clone();
    let table = XModCharTable::new(&sm).map_err(|e| e.to_string())?;
    let g = x.g();
    let cols: Vec<(usize, usize)> = REFERENCE_S3_COLUMNS
        .iter()
        .map(|(s, c)| {
            (
                x.h().element_by_name(s).unwrap(),
                g.element_by_name(c).unwrap(),
            )
        })
        .collect();
    ensure(table.columns == cols, || {
        format!("column order {:?}", table.columns)
    })?;
    ensure(
        table.entries.len() == 8 && table.entries.iter().all(|r| r.len() == 8),
        || "table is not 8 x 8".into(),
    )?;
    ensure(table.entries == reference_s3_table(), || {
        format!("entries differ: {:?}", table.entries)
    })
}

fn criterion_2() -> Outcome {
    let d4 = FiniteGroup::dihedral(4);
    let sm = simples(d4_aut());
    let x = sm.xmod().clone();
    let aut = x.g();
    for a in 0..8 {
        for b in 0..8 {
            let lhs = d4_to_aut(&x, &d4, d4.mul(a, b));
            let rhs = aut.mul(d4_to_aut(&x, &d4, a), d4_to_aut(&x, &d4, b));
            ensure(lhs == rhs, || {
                "column identification is not a homomorphism".into()
            })?;
        }
    }
    let table = XModCharTable::new(&sm).map_err(|e| e.to_string())?;
    ensure(table.entries.len() == 16, || "table is not 16 x 16".into())?;
    // Evaluate each of our characters on the printed columns.
    let printed_order = ["e", "r^2", "r", "s"];
    let mut ours = Vec::new();
    let mut blocks = Vec::new();
    for rep in printed_order {
        let t = d4_word(&d4, rep);
        let in_block: Vec<_> = sm.labels().iter().filter(|l| l.0 == t).copied().collect();
        blocks.push(in_block.len());
        for l in in_block {
            let chi = sm.character(l).unwrap();
            ours.push(
                REFERENCE_D4_COLUMNS
                    .iter()
                    .map(|(s, c)| {
                        chi.value(d4_word(&d4, s), d4_to_aut(&x, &d4, d4_word(&d4, c)))
                            .clone()
                    })
                    .collect::<Vec<_>>(),
            );
        }
    }
    ensure(blocks == vec![5, 5, 4, 2], || {
        format!("block sizes {:?}", blocks)
    })?;
    ensure(
        rows_match_up_to_order(&ours, &reference_d4_table(), &blocks),
        || "rows differ from the reference table".into(),
    )
}

fn criterion_3() -> Outcome {
    let all = [
        AxiomFamily::Hopf,
        AxiomFamily::Quasitriangular,
        AxiomFamily::Ribbon,
    ];
    for (name, x) in corpus() {
        let d = DAlgebra::new(&x);
        let report = d
            .verify_axioms(&all, DEFAULT_BASIS_CAP)
            .map_err(|e| e.to_string())?;
        if let Some(bad) = report.results.iter().find(|r| !r.pass) {
            return Err(format!("{}: {} fails ({:?})", name, bad.name, bad.witness));
        }
        ensure(report.get("yang_baxter").is_some(), || {
            format!("{}: Yang-Baxter not run", name)
        })?;
        for b in d.basis() {
            let e = DElement::pure([b]);
            ensure(d.antipode(&d.antipode(&e)) == e, || {
                format!("{}: S^2 != id at {:?}", name, b)
            })?;
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for (name, x) in corpus() {
        let d = DAlgebra::new(&x);
        let labels = x.labels().len();
        let dim_z = d.center_dimension();
        ensure(dim_z == labels, || {
            format!("{}: dim Z = {}, labels = {}", name, dim_z, labels)
        })?;
        ensure(d.center_basis().len() == labels, || {
            format!("{}: center basis size", name)
        })?;
        let ids = d
            .central_idempotents()
            .map_err(|e| format!("{}: {}", name, e))?;
        ensure(ids.len() == dim_z, || {
            format!("{}: {} idempotents", name, ids.len())
        })?;
        let mut sum = DElement::zero();
        for (i, (_, a)) in ids.iter().enumerate() {
            sum = sum.add(a);
            ensure(d.central_witness(a).is_none(), || {
                format!("{}: idempotent not central", name)
            })?;
            for (j, (_, b)) in ids.iter().enumerate() {
                let p = d.mul(a, b);
                let ok = if i == j { p == *a } else { p.is_zero() };
                ensure(ok, || {
                    format!("{}: idempotents {} and {} not orthogonal", name, i, j)
                })?;
            }
        }
        ensure(sum == d.unit(), || {
            format!("{}: idempotents do not sum to 1", name)
        })?;
        let total: usize = x
            .labels()
            .iter()
            .map(|&l| x.label_dim(l).unwrap().pow(2))
            .sum();
        ensure(total == x.g().order() * x.h().order(), || {
            format!("{}: sum of squares {} != |G||H|", name, total)
        })?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let sm = simples(s3_conj());
    let chars = sm.characters();
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate() {
            let ip = a.inner_product(b).unwrap();
            let want = Cyclotomic::from_integer((i == j) as i64);
            ensure(ip == want, || format!("<psi_{}, psi_{}> = {}", i, j, ip))?;
        }
    }
    for &a in sm.labels() {
        let chi = sm.character(a).unwrap();
        ensure(
            chi.dimension() == Cyclotomic::from_integer(sm.dim(a) as i64),
            || format!("dimension formula fails for {:?}", a),
        )?;
        for &b in sm.labels() {
            let (ma, mb) = (sm.module(a).unwrap(), sm.module(b).unwrap());
            let prod = match (ma, mb) {
                (AnyRep::Exact(_), AnyRep::Exact(_)) => ma.tensor_product(mb).unwrap(),
                _ => AnyRep::Float(ma.to_float().tensor_product(&mb.to_float()).unwrap()),
            };
            let lhs = prod.character().map_err(|e| e.to_string())?;
            let rhs = chi.convolution(sm.character(b).unwrap()).unwrap();
            ensure(lhs == rhs, || {
                format!("char({:?} ⊗ {:?}) != convolution", a, b)
            })?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for x in [s3_conj(), z2_trivial()] {
        let sm = simples(x);
        let reference = fusion_ring(&sm, 0).map_err(|e| e.to_string())?;
        reference.check().map_err(|e| e.to_string())?;
        for method in [FusionMethod::Reduced, FusionMethod::Explicit] {
            let other = fusion_table(&sm, method).map_err(|e| e.to_string())?;
            ensure(other == reference, || {
                format!("{:?} disagrees with characters", method)
            })?;
        }
        let labels = sm.labels();
        for (ia, &a) in labels.iter().enumerate() {
            for (ib, &b) in labels.iter().enumerate() {
                for (ic, &c) in labels.iter().enumerate() {
                    let n = reference.n[ia][ib][ic];
                    let p =
                        clebsch_gordan_predicate(sm.xmod(), a, b, c).map_err(|e| e.to_string())?;
                    ensure(p == (n > 0), || {
                        format!("predicate {} but N = {} for {:?} {:?} {:?}", p, n, a, b, c)
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for g in [FiniteGroup::cyclic(4), s3(), FiniteGroup::dihedral(4)] {
        let table = character_table(&g, DEFAULT_TABLE_CAP).map_err(|e| e.to_string())?;
        let sm = simples(CrossedModule::trivial_h(&g).unwrap());
        let rows: Vec<Vec<Cyclotomic>> = (0..table.len())
            .map(|i| (0..g.order()).map(|x| table.value(i, x).clone()).collect())
            .collect();
        ensure(sm.labels().len() == rows.len(), || "row count".into())?;
        let mut index = Vec::new();
        for &l in sm.labels() {
            let chi = sm.character(l).unwrap();
            let ours: Vec<Cyclotomic> = (0..g.order()).map(|x| chi.value(0, x).clone()).collect();
            let k = rows
                .iter()
                .position(|r| *r == ours)
                .ok_or_else(|| format!("character {:?} is not a row of the group table", l))?;
            index.push(k);
        }
        let ring = fusion_ring(&sm, 0).map_err(|e| e.to_string())?;
        let n = g.order() as i64;
        for a in 0..rows.len() {
            for b in 0..rows.len() {
                for c in 0..rows.len() {
                    let (ra, rb, rc) = (&rows[index[a]], &rows[index[b]], &rows[index[c]]);
                    let mut acc = Cyclotomic::zero();
                    for x in 0..g.order() {
                        acc = &acc + &(&(&ra[x] * &rb[x]) * &rc[x].conj());
                    }
                    let want = acc.scale(&num_rational::BigRational::new(1.into(), n.into()));
                    ensure(
                        want == Cyclotomic::from_integer(ring.n[a][b][c] as i64),
                        || format!("representation ring differs at {} {} {}", a, b, c),
                    )?;
                }
            }
        }
    }
    // std (x) std = triv + sign + std for S3
    let sm = simples(CrossedModule::trivial_h(&s3()).unwrap());
    let ring = fusion_ring(&sm, 0).unwrap();
    ensure(ring.n[2][2] == vec![1, 1, 1], || {
        format!("std ⊗ std = {:?}", ring.n[2][2])
    })
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

fn criterion_8() -> Outcome {
    let sm = simples(s3_conj());
    let ev = RtEvaluator::new(&sm, 0).unwrap();
    let labels = sm.labels().to_vec();
    let up = |l| StrandType::up(Color::Simple(l));
    let eval = |t: &ColoredTangle| {
        ev.evaluate(t)
            .map(|m| m.to_float())
            .map_err(|e| e.to_string())
    };

    // identity tangle
    let boundary = vec![up(labels[2]), up(labels[5]).dual()];
    let id = eval(&ColoredTangle::identity(boundary))?;
    ensure(id.max_abs_diff(&Matrix::identity(id.rows())) < 1e-9, || {
        "identity tangle".into()
    })?;

    // snakes
    for &l in &labels {
        for v in [up(l), up(l).dual()] {
            let vd = v.dual();
            for t in [
                ColoredTangle::new(
                    vec![v.clone()],
                    vec![
                        vec![Atom::Cup(v.clone()), Atom::Id(v.clone())],
                        vec![Atom::Id(v.clone()), Atom::Cap],
                    ],
                ),
                ColoredTangle::new(
                    vec![v.clone()],
                    vec![
                        vec![Atom::Id(v.clone()), Atom::Cup(vd.clone())],
                        vec![Atom::Cap, Atom::Id(v.clone())],
                    ],
                ),
            ] {
                let m = eval(&t)?;
                ensure(m.max_abs_diff(&Matrix::identity(m.rows())) < 1e-9, || {
                    format!("snake for {:?}", l)
                })?;
            }
        }
    }

    // Yang-Baxter: all triples of D(Z/2) trivial, 20 random triples of D(S3)
    let z2 = simples(z2_trivial());
    let ev2 = RtEvaluator::new(&z2, 0).unwrap();
    let mut triples = Vec::new();
    for &a in z2.labels() {
        for &b in z2.labels() {
            for &c in z2.labels() {
                triples.push((&ev2, [a, b, c]));
            }
        }
    }
    let mut r = rng(8);
    for _ in 0..20 {
        triples.push((
            &ev,
            [
                pick(&mut r, &labels),
                pick(&mut r, &labels),
                pick(&mut r, &labels),
            ],
        ));
    }
    for (e, [a, b, c]) in triples {
        let bnd = vec![up(a), up(b), up(c)];
        let id = |k: usize, t: &StrandType| {
            if k == 0 {
                Atom::PosCross
            } else {
                Atom::Id(t.clone())
            }
        };
        let lhs = ColoredTangle::new(
            bnd.clone(),
            vec![
                vec![id(0, &bnd[0]), Atom::Id(bnd[2].clone())],
                vec![Atom::Id(bnd[1].clone()), Atom::PosCross],
                vec![Atom::PosCross, Atom::Id(bnd[0].clone())],
            ],
        );
        let rhs = ColoredTangle::new(
            bnd.clone(),
            vec![
                vec![Atom::Id(bnd[0].clone()), Atom::PosCross],
                vec![Atom::PosCross, Atom::Id(bnd[1].clone())],
                vec![Atom::Id(bnd[2].clone()), Atom::PosCross],
            ],
        );
        let (l, r) = (
            e.evaluate(&lhs).map_err(|e| e.to_string())?.to_float(),
            e.evaluate(&rhs).map_err(|e| e.to_string())?.to_float(),
        );
        ensure(l.max_abs_diff(&r) < 1e-9, || {
            format!("Yang-Baxter fails for {:?}", (a, b, c))
        })?;
    }

    // twist compatibility
    for &a in &labels {
        for &b in &labels {
            let (va, vb) = (up(a), up(b));
            let t = ColoredTangle::new(
                vec![va.clone(), vb.clone()],
                vec![
                    vec![Atom::PosCross],
                    vec![Atom::PosCross],
                    vec![Atom::Twist(va), Atom::Twist(vb)],
                ],
            );
            let lhs = eval(&t)?;
            let prod = sm
                .module(a)
                .unwrap()
                .to_float()
                .tensor_product(&sm.module(b).unwrap().to_float())
                .unwrap();
            ensure(lhs.max_abs_diff(&prod.twist(0)) < 1e-9, || {
                format!("twist compatibility for {:?}", (a, b))
            })?;
        }
    }

    // unknots
    for &l in &labels {
        let (s, i) = l;
        let x = sm.xmod();
        let st = x.check_label(l).unwrap();
        let g = x.g();
        let local = st.subgroup.local(g.inv(x.gamma_of(s))).unwrap();
        let scalar = st.table.value(i, local).to_complex() / st.table.degrees()[i] as f64;
        let dim = sm.dim(l) as f64;
        let unknot = |f| {
            link_invariant(
                &sm,
                &ColoredBraidLink {
                    strands: 1,
                    colors: vec![Color::Simple(l)],
                    word: vec![],
                    framings: vec![f],
                },
                0,
            )
            .map(|v| v.float)
            .map_err(|e| e.to_string())
        };
        ensure(close(unknot(0)?, Complex64::new(dim, 0.0), 1e-9), || {
            format!("0-framed unknot {:?}", l)
        })?;
        ensure(close(unknot(1)?, scalar * dim, 1e-8), || {
            format!("(+1)-framed unknot {:?}", l)
        })?;
    }

    // Hopf link symmetry
    let mut hopf = vec![vec![Complex64::new(0.0, 0.0); labels.len()]; labels.len()];
    for (ia, &a) in labels.iter().enumerate() {
        for (ib, &b) in labels.iter().enumerate() {
            let link = ColoredBraidLink {
                strands: 2,
                colors: vec![Color::Simple(a), Color::Simple(b)],
                word: vec![1, 1],
                framings: vec![0, 0],
            };
            hopf[ia][ib] = link_invariant(&sm, &link, 0)
                .map_err(|e| e.to_string())?
                .float;
        }
    }
    for a in 0..labels.len() {
        for b in 0..labels.len() {
            ensure(close(hopf[a][b], hopf[b][a], 1e-9), || {
                format!("Hopf link not symmetric at {} {}", a, b)
            })?;
        }
    }

    // slide invariance
    let small: Vec<_> = labels.iter().copied().filter(|&l| sm.dim(l) <= 2).collect();
    let mut r = rng(2024);
    for k in 0..10 {
        let t = random_tangle(&mut r, &small);
        let base = eval(&t)?;
        let fwd = eval(&t.sequential(false).unwrap())?;
        let back = eval(&t.sequential(true).unwrap())?;
        ensure(
            base.max_abs_diff(&fwd) < 1e-9 && base.max_abs_diff(&back) < 1e-9,
            || format!("slicings of random tangle {} differ", k),
        )?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for (x, want) in [(z2_trivial(), 2), (s3_conj(), 1)] {
        let d = DAlgebra::new(&x);
        let found = d.ribbon_elements().map_err(|e| e.to_string())?;
        ensure(found.len() == want, || {
            format!("{} ribbon elements, want {}", found.len(), want)
        })?;
        for (_, v) in &found {
            ensure(d.ribbon_checks(v).iter().all(|r| r.pass), || {
                "ribbon element fails".into()
            })?;
        }
    }
    for (name, x) in corpus() {
        let d = DAlgebra::new(&x);
        let c = x.ribbon_group();
        for g in (0..x.g().order()).filter(|g| !c.contains(g)) {
            let checks = d.ribbon_checks(&d.ribbon_candidate(g));
            let failed = |n: &str| checks.iter().any(|r| r.name == n && !r.pass);
            ensure(
                failed("ribbon_central") || failed("ribbon_antipode"),
                || format!("{}: (1⊗{})θ passes centrality and S-invariance", name, g),
            )?;
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("D(S3) character table", criterion_1, 5),
        ("automorphism(D4) character table", criterion_2, 30),
        ("Hopf, quasitriangular and ribbon axioms", criterion_3, 120),
        ("center, idempotents, Wedderburn counts", criterion_4, 30),
        ("character orthonormality and convolution", criterion_5, 60),
        ("fusion triple agreement", criterion_6, 120),
        ("degeneration to group representations", criterion_7, 60),
        ("RT property suite", criterion_8, 120),
        ("ribbon enumeration", criterion_9, 60),
    ];
    let mut failures = Vec::new();
    for (k, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(*budget), || {
                format!("took {:.2?}, budget {} s", elapsed, budget)
            })
        });
        match &outcome {
            Ok(()) => println!("criterion {}: PASS  {} ({:.2?})", k + 1, name, elapsed),
            Err(e) => {
                println!(
                    "criterion {}: FAIL  {} ({:.2?}): {}",
                    k + 1,
                    name,
                    elapsed,
                    e
                );
                failures.push(k + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {:?}", failures);
}
