//! Acceptance suite, run without the test harness so that each criterion
//! prints one `PASS`/`FAIL` line. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;

use msnum::classify::classify_graph6_lines;
use msnum::closedforms::{
    make_complete, make_complete_bipartite, make_cycle, make_path, make_qn, make_star,
    union_weight, union_weight_many, w_complete, w_complete_bipartite, w_cycle, w_path, w_qmax,
    w_star, w_tree,
};
use msnum::enumerate::{all_graphs, random_graph, random_tree};
use msnum::graph::parse_graph6;
use msnum::graphstate::{amplitudes, is_bent, wht_spectrum};
use msnum::{
    brute_force_weight, ms_number, reduce_to_readonce, verify_certificate, weight, BitMatrix,
    BitVector, Graph, QuadraticPolynomial, ReadonceForm, ReadonceKind, ReductionCertificate,
};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ATLAS: &str = include_str!("data/atlas_n1_6.g6");

type Outcome = Result<(), String>;
type Criterion = fn() -> Outcome;

fn check(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn bf(g: &Graph) -> BigUint {
    brute_force_weight(&QuadraticPolynomial::from_graph(g)).unwrap()
}

fn brank(g: &Graph) -> usize {
    g.adjacency().rank()
}

fn exhaustive_upto(n_max: usize) -> impl Iterator<Item = Graph> {
    (0..=n_max).flat_map(all_graphs)
}

fn random_small(rng: &mut ChaCha8Rng, count: usize, n_max: usize) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=n_max);
            let p = rng.random::<f64>();
            random_graph(rng, n, p)
        })
        .collect()
}

fn edgeless_or_bipartite_upto(n_max: usize) -> impl Iterator<Item = Graph> {
    exhaustive_upto(n_max).filter(|g| g.is_bipartite())
}

fn criterion_1() -> Outcome {
    for g in all_graphs(6) {
        let f = QuadraticPolynomial::from_graph(&g);
        check(weight(&f) == brute_force_weight(&f).unwrap(), || {
            format!("mismatch on {}", g.to_graph6())
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 7..=16 {
        for _ in 0..1000 {
            let p = rng.random::<f64>();
            let g = random_graph(&mut rng, n, p);
            let f = QuadraticPolynomial::from_graph(&g);
            check(weight(&f) == brute_force_weight(&f).unwrap(), || {
                format!("mismatch on {}", g.to_graph6())
            })?;
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let h = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let f = QuadraticPolynomial::from_graph(&h);
    let r = reduce_to_readonce(&f);
    check(
        r.form.kind() == ReadonceKind::TypeI && r.form.m() == 3,
        || format!("got {}", r.form),
    )?;
    check(ms_number(&h) == BigUint::from(8u32), || {
        format!("w(H) = {}", ms_number(&h))
    })?;
    check(
        verify_certificate(&f, &r.form, &r.certificate).unwrap(),
        || "computed certificate rejected".into(),
    )?;
    let printed = ReductionCertificate {
        t: BitMatrix::from_rows(
            4,
            vec![
                BitVector::parse_bits("1100").unwrap(),
                BitVector::parse_bits("1110").unwrap(),
                BitVector::parse_bits("1101").unwrap(),
            ],
        )
        .unwrap(),
        c: BitVector::zeros(3),
    };
    let g = ReadonceForm::new(3, ReadonceKind::TypeI, false).unwrap();
    check(verify_certificate(&f, &g, &printed).unwrap(), || {
        "printed certificate rejected".into()
    })
}

fn readonce_length_matches_rank(g: &Graph) -> Outcome {
    let r = reduce_to_readonce(&QuadraticPolynomial::from_graph(g));
    let expected = match r.form.kind() {
        ReadonceKind::TypeI => brank(g) + 1,
        ReadonceKind::TypeII => brank(g),
    };
    check(r.form.m() == expected, || {
        format!("{} gives {} with brank {}", g.to_graph6(), r.form, brank(g))
    })
}

fn criterion_3() -> Outcome {
    for g in exhaustive_upto(6) {
        readonce_length_matches_rank(&g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in random_small(&mut rng, 1000, 16) {
        readonce_length_matches_rank(&g)?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for g in edgeless_or_bipartite_upto(7) {
        let n = g.order();
        let r = reduce_to_readonce(&QuadraticPolynomial::from_graph(&g));
        check(r.form.kind() == ReadonceKind::TypeII && !r.form.z(), || {
            format!("{} gives {}", g.to_graph6(), r.form)
        })?;
        if n == 0 {
            continue;
        }
        // 2^(n-1) (1 - 2^(-r/2)) == 2^(n-1) - 2^(n-1-r/2)
        let rk = brank(&g);
        let expected = pow2(n - 1) - pow2(n - 1 - rk / 2);
        check(ms_number(&g) == expected, || {
            format!(
                "{}: w = {}, expected {expected}",
                g.to_graph6(),
                ms_number(&g)
            )
        })?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for g in edgeless_or_bipartite_upto(7) {
        let n = g.order();
        let w = bf(&g);
        for (u, v) in g.edges() {
            let minor = g.pivot_minor_delete(u, v).unwrap();
            check(minor.is_bipartite(), || {
                format!("{} minor on ({u},{v}) not bipartite", g.to_graph6())
            })?;
            let expected = pow2(n - 2) + BigUint::from(2u32) * ms_number(&minor);
            check(w == expected, || {
                format!("{} edge ({u},{v}): {w} vs {expected}", g.to_graph6())
            })?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for n in 0..=6 {
        let mut max = BigUint::from(0u32);
        for g in all_graphs(n) {
            let w = bf(&g);
            check(w >= BigUint::from(g.edge_count()), || {
                format!("{}: w < |E|", g.to_graph6())
            })?;
            let odd = w.bit(0);
            let is_p2 = n == 2 && g.edge_count() == 1;
            check(odd == is_p2, || {
                format!("{}: parity of w = {w}", g.to_graph6())
            })?;
            if is_p2 {
                check(w == BigUint::one(), || "w(P2) != 1".into())?;
            }
            if !g.is_edgeless() {
                check(w >= pow2(n - 2), || {
                    format!("{}: w < 2^(n-2)", g.to_graph6())
                })?;
            }
            max = max.max(w);
        }
        if n >= 4 {
            let bound = pow2(n - 1) + pow2(n - 3);
            check(max == bound, || format!("n = {n}: max {max} vs {bound}"))?;
            check(bf(&make_qn(n)) == bound, || {
                format!("Q_{n} misses the maximum")
            })?;
        }
    }
    Ok(())
}

fn cover_by_search(t: &Graph) -> usize {
    let n = t.order();
    let edges: Vec<(usize, usize)> = t.edges().collect();
    (0u32..1 << n)
        .filter(|s| {
            edges
                .iter()
                .all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1)
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn criterion_7() -> Outcome {
    let same = |name: &str, closed: BigUint, g: &Graph| {
        let w = ms_number(g);
        check(closed == w && w == bf(g), || {
            format!("{name}: closed {closed}, computed {w}")
        })
    };
    for n in 1..=16 {
        same(&format!("K_{n}"), w_complete(n).unwrap(), &make_complete(n))?;
        same(&format!("P_{n}"), w_path(n).unwrap(), &make_path(n))?;
        if n >= 2 {
            same(&format!("S_{n}"), w_star(n).unwrap(), &make_star(n))?;
        }
        if n >= 4 {
            same(&format!("Q_{n}"), w_qmax(n).unwrap(), &make_qn(n))?;
        }
        if n >= 3 {
            same(&format!("C_{n}"), w_cycle(n).unwrap(), &make_cycle(n))?;
        }
        for p in 1..n {
            let q = n - p;
            same(
                &format!("K_{p},{q}"),
                w_complete_bipartite(p, q).unwrap(),
                &make_complete_bipartite(p, q),
            )?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let n = rng.random_range(1..=16);
        let t = random_tree(&mut rng, n);
        let tau = t.tree_vertex_cover_number().unwrap();
        if n <= 12 {
            let searched = cover_by_search(&t);
            check(tau == searched, || {
                format!("{}: tau {tau} vs {searched}", t.to_graph6())
            })?;
        }
        same(&format!("tree {}", t.to_graph6()), w_tree(&t).unwrap(), &t)?;
    }
    Ok(())
}

fn spectrum_checks(g: &Graph) -> Outcome {
    let f = QuadraticPolynomial::from_graph(g);
    let s = wht_spectrum(&f).unwrap();
    let w = brute_force_weight(&f).unwrap().to_i64().unwrap();
    check(s.scaled_zero_order() == w, || {
        format!("{}: f*_0 scaled {}", g.to_graph6(), s.numerators()[0])
    })?;
    check(s.parseval_holds(w as u64), || {
        format!("{}: Parseval fails", g.to_graph6())
    })?;
    let bent = is_bent(&f).unwrap();
    check(bent == (brank(g) == g.order() && g.order() > 0), || {
        format!("{}: bent {bent}, brank {}", g.to_graph6(), brank(g))
    })
}

fn criterion_8() -> Outcome {
    for g in (1..=6).flat_map(all_graphs) {
        spectrum_checks(&g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..10_000 {
        let p = rng.random::<f64>();
        spectrum_checks(&random_graph(&mut rng, 8, p))?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let a = amplitudes(&make_complete(3)).unwrap();
    let signs: Vec<i8> = (0..a.len()).map(|i| a.sign(i)).collect();
    check(signs == [1, 1, 1, -1, 1, -1, -1, -1], || {
        format!("got {signs:?}")
    })?;
    check(a.render() == "+++-+---", || {
        format!("rendered {}", a.render())
    })
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let part = |rng: &mut ChaCha8Rng, max: usize| {
        let n = rng.random_range(1..=max);
        let p = rng.random::<f64>();
        random_graph(rng, n, p)
    };
    for _ in 0..1000 {
        let a = part(&mut rng, 15);
        let b = part(&mut rng, 16 - a.order());
        let u = a.disjoint_union(&b);
        let predicted = union_weight(&ms_number(&a), a.order(), &ms_number(&b), b.order()).unwrap();
        check(predicted == bf(&u), || {
            format!("pair {} + {}", a.to_graph6(), b.to_graph6())
        })?;
    }
    for _ in 0..100 {
        let a = part(&mut rng, 14);
        let b = part(&mut rng, 15 - a.order());
        let c = part(&mut rng, 16 - a.order() - b.order());
        let u = a.disjoint_union(&b).disjoint_union(&c);
        let parts: Vec<(BigUint, usize)> = [&a, &b, &c]
            .iter()
            .map(|g| (ms_number(g), g.order()))
            .collect();
        let predicted = union_weight_many(&parts).unwrap();
        check(predicted == bf(&u), || {
            format!(
                "triple {} + {} + {}",
                a.to_graph6(),
                b.to_graph6(),
                c.to_graph6()
            )
        })?;
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let report = classify_graph6_lines(ATLAS, usize::MAX);
    check(report.malformed.is_empty(), || {
        "fixture has malformed lines".into()
    })?;
    check(report.graphs == 208, || {
        format!("{} graphs read", report.graphs)
    })?;
    for ((n, w), entry) in &report.classes {
        for rep in &entry.representatives {
            let g = parse_graph6(&rep.graph6).unwrap();
            check(g.order() == *n && bf(&g) == *w, || {
                format!("representative {} not in class ({n}, {w})", rep.graph6)
            })?;
        }
    }
    let n6 = report
        .classes
        .iter()
        .filter(|((n, _), _)| *n == 6)
        .map(|(_, e)| e.count)
        .sum::<usize>();
    check(n6 == 156, || format!("{n6} graphs on 6 vertices"))?;
    let connected4: BTreeSet<BigUint> = ATLAS
        .lines()
        .map(|l| parse_graph6(l).unwrap())
        .filter(|g| g.order() == 4 && g.is_connected())
        .map(|g| ms_number(&g))
        .collect();
    let expected: BTreeSet<BigUint> = [4u32, 6, 8, 10].into_iter().map(BigUint::from).collect();
    check(connected4 == expected, || {
        format!("connected n = 4 weights {connected4:?}")
    })?;

    let reference = classify_graph6_lines(ATLAS, 3).render_tsv();
    let mut lines: Vec<&str> = ATLAS.lines().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        lines.shuffle(&mut rng);
        let shuffled = lines.join("\n");
        check(
            classify_graph6_lines(&shuffled, 3).render_tsv() == reference,
            || "report changed under shuffling".into(),
        )?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("1 oracle equivalence", criterion_1),
        ("2 worked example H", criterion_2),
        ("3 readonce length vs binary rank", criterion_3),
        ("4 bipartite weight from rank", criterion_4),
        ("5 pivot-minor identity", criterion_5),
        ("6 small-graph bounds and maximum", criterion_6),
        ("7 closed forms", criterion_7),
        ("8 spectrum and bent test", criterion_8),
        ("9 K3 amplitude signs", criterion_9),
        ("10 union recursion", criterion_10),
        ("11 classification of isomorph-free stream", criterion_11),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(()) => println!("PASS  criterion {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
