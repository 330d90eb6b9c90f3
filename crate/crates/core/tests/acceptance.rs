//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//! Brute-force oracles here deliberately avoid the library's centralizer,
//! lattice and Sylow code paths.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cd_core::catalog::{classify_orders, Catalog};
use cd_core::constructions::{builtin_group, construct_primitive_group, general_linear_2, Builtin};
use cd_core::field::FiniteField;
use cd_core::group::Group;
use cd_core::iso::is_isomorphic;
use cd_core::lattice::{cd_lattice, product_lattice_check, verify_lattice_identities};
use cd_core::normal::{
    has_property_a, is_product_of_cd_simple, theorem1_decompose, theorem24_verify,
};
use cd_core::numtheory::{excluded_order, lemma210_enumerate, wagstaff_primes, Family};
use cd_core::verify::{sampled_pairs, SAMPLED_PRODUCTS};
use cd_core::Verdict;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Catalog) -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `|H| |C_G(H)|` for every subgroup, from raw multiplication only.
fn oracle_measures(g: &Group) -> Vec<(BTreeSet<usize>, u64)> {
    let subs = g.all_subgroups().expect("within the brute-force cap");
    subs.iter()
        .map(|h| {
            let elems: BTreeSet<usize> = h.iter().collect();
            let cent = (0..g.order())
                .filter(|&x| elems.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
                .count();
            (elems.clone(), (elems.len() * cent) as u64)
        })
        .collect()
}

fn oracle_max_measure(g: &Group) -> u64 {
    oracle_measures(g).iter().map(|(_, m)| *m).max().unwrap()
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..=n).find(|d| n % d == 0).unwrap()
}

/// Independent reading of the order predicate `1 < m/q < p < m`.
fn oracle_excluded(n: u64) -> bool {
    (2..=n)
        .filter(|&p| n % p == 0 && smallest_prime_factor(p) == p)
        .any(|p| {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            if m < 2 {
                return false;
            }
            let q = smallest_prime_factor(m);
            m / q > 1 && m < p * q && p < m
        })
}

fn criterion1(cat: &Catalog) -> Outcome {
    let start = Instant::now();
    let report = classify_orders(cat, 1..=50);
    let elapsed = start.elapsed();
    let nontrivial: Vec<(usize, usize)> = report
        .cd_simple_ids()
        .into_iter()
        .filter(|&(o, _)| o > 1)
        .collect();
    ensure(nontrivial.len() == 1, || {
        format!("nontrivial CD-simple: {nontrivial:?}")
    })?;
    let (o, i) = nontrivial[0];
    ensure(o == 24, || format!("CD-simple group has order {o}"))?;
    let g = &cat.get(o, i).unwrap().group;
    let s4 = builtin_group(Builtin::Symmetric(4)).unwrap();
    ensure(is_isomorphic(g, &s4).unwrap(), || {
        "not isomorphic to S_4".into()
    })?;
    // S_4 element orders: 1 identity, 9 of order 2, 8 of order 3, 6 of order 4
    let mut hist = [0usize; 5];
    for x in 0..g.order() {
        hist[g.element_order(x)] += 1;
    }
    ensure(hist == [0, 1, 9, 8, 6], || {
        format!("element orders {hist:?}")
    })?;
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} groups, CD-simple {}.{} in {:.1}s",
        report.records.len(),
        o,
        i,
        elapsed.as_secs_f64()
    ))
}

fn criterion2(cat: &Catalog) -> Outcome {
    let mut n = 0;
    for (orders, bound) in [
        (&[36usize, 45][..], 81u64),
        (&[40][..], 50),
        (&[48][..], 64),
    ] {
        for &order in orders {
            let entries: Vec<_> = cat.of_order(order).collect();
            ensure(!entries.is_empty(), || {
                format!("no groups of order {order}")
            })?;
            for e in entries {
                n += 1;
                let m = oracle_max_measure(&e.group);
                ensure(m >= bound, || {
                    format!("{}: max measure {m} < {bound}", e.id())
                })?;
            }
        }
    }
    for e in cat.of_order(16) {
        n += 1;
        let g = &e.group;
        let found = g.all_subgroups().unwrap().iter().any(|h| {
            h.order() == 8
                && h.iter()
                    .all(|a| h.iter().all(|b| g.mul(a, b) == g.mul(b, a)))
        });
        ensure(found, || {
            format!("{} has no abelian subgroup of order 8", e.id())
        })?;
    }
    Ok(format!("{n} groups of orders 16, 36, 40, 45, 48"))
}

fn criterion3(cat: &Catalog) -> Outcome {
    let witnessed: Vec<u64> = (1..=50).filter(|&n| oracle_excluded(n)).collect();
    let lib: Vec<u64> = (1..=50)
        .filter(|&n| excluded_order(n).unwrap().is_some())
        .collect();
    ensure(witnessed == lib, || {
        format!("predicate mismatch {witnessed:?} vs {lib:?}")
    })?;
    let mut n = 0;
    for e in cat
        .entries
        .iter()
        .filter(|e| witnessed.contains(&(e.order as u64)))
    {
        n += 1;
        let m = oracle_max_measure(&e.group);
        ensure(m > e.order as u64, || format!("{}: m* = {m}", e.id()))?;
        ensure(cd_lattice(&e.group).max_measure == m, || {
            format!("{}: lattice m* differs", e.id())
        })?;
    }
    Ok(format!("{n} groups of orders {witnessed:?}"))
}

fn cd_is_trivial_and_whole(g: &Group) -> bool {
    let l = cd_lattice(g);
    l.len() == 2
        && l.members[0].is_trivial()
        && g.is_whole(&l.members[1])
        && l.max_measure == g.order() as u64
}

fn criterion4(_: &Catalog) -> Outcome {
    let a = construct_primitive_group(2, 3, 2, 1).unwrap();
    let s4 = builtin_group(Builtin::Symmetric(4)).unwrap();
    ensure(is_isomorphic(&a.group, &s4).unwrap(), || {
        "(2,3,2,1) is not S_4".into()
    })?;
    let b = construct_primitive_group(2, 5, 4, 2).unwrap();
    ensure(b.group.order() == 320, || {
        format!("order {}", b.group.order())
    })?;
    ensure(cd_is_trivial_and_whole(&b.group), || {
        "order 320: CD(G) != {1, G}".into()
    })?;
    let start = Instant::now();
    let c = construct_primitive_group(3, 13, 3, 1).unwrap();
    ensure(c.group.order() == 1053, || {
        format!("order {}", c.group.order())
    })?;
    ensure(cd_is_trivial_and_whole(&c.group), || {
        "order 1053: CD(G) != {1, G}".into()
    })?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || {
        format!("order 1053 took {t:?}")
    })?;
    Ok(format!(
        "order 1053 built and classified in {:.2}s",
        t.as_secs_f64()
    ))
}

fn criterion5(_: &Catalog) -> Outcome {
    let w = wagstaff_primes(180).unwrap();
    ensure(w == [2, 3, 19, 31], || format!("wagstaff {w:?}"))?;
    let r = lemma210_enumerate(31).unwrap();
    let got: Vec<(u64, String, u32, u32)> = r
        .direct
        .iter()
        .map(|a| (a.p, a.q.to_string(), a.n, a.r))
        .collect();
    let want: Vec<(u64, String, u32, u32)> = vec![
        (2, "3".into(), 2, 1),
        (2, "5".into(), 4, 2),
        (3, "13".into(), 3, 1),
        (19, "109912203092239643840221".into(), 19, 1),
        (
            31,
            "568972471024107865287021434301977158534824481".into(),
            31,
            1,
        ),
    ];
    ensure(got == want, || format!("tuples {got:?}"))?;
    ensure(r.agrees(), || {
        "direct search and closed form disagree".into()
    })?;
    let families: Vec<Family> = r.direct.iter().map(|a| a.family).collect();
    ensure(
        families
            == [
                Family::One,
                Family::Two,
                Family::Three,
                Family::Three,
                Family::Three,
            ],
        || format!("families {families:?}"),
    )?;
    Ok("wagstaff(180) = [2, 3, 19, 31]; 5 admissible tuples".into())
}

fn criterion6(cat: &Catalog) -> Outcome {
    let mut n = 0;
    for e in cat.entries.iter().filter(|e| e.order <= 24) {
        n += 1;
        let g = &e.group;
        let measures = oracle_measures(g);
        let max = measures.iter().map(|(_, m)| *m).max().unwrap();
        let oracle: BTreeSet<BTreeSet<usize>> = measures
            .into_iter()
            .filter(|(_, m)| *m == max)
            .map(|(h, _)| h)
            .collect();
        let l = cd_lattice(g);
        let got: BTreeSet<BTreeSet<usize>> = l.members.iter().map(|h| h.iter().collect()).collect();
        ensure(l.max_measure == max, || {
            format!("{}: m* {} vs {max}", e.id(), l.max_measure)
        })?;
        ensure(got == oracle, || format!("{}: member sets differ", e.id()))?;
    }
    Ok(format!("{n} groups of order <= 24"))
}

fn criterion7(cat: &Catalog) -> Outcome {
    let mut checks = 0;
    for e in &cat.entries {
        let r = verify_lattice_identities(&e.group, &cd_lattice(&e.group));
        checks += r.checks;
        ensure(r.passed(), || format!("{}: {:?}", e.id(), r.failures))?;
    }
    let pairs = sampled_pairs(cat, SAMPLED_PRODUCTS);
    ensure(pairs.len() == SAMPLED_PRODUCTS, || {
        format!("only {} products sampled", pairs.len())
    })?;
    for (a, b) in &pairs {
        let (p, _, _) = Group::direct_product(&a.group, &b.group).unwrap();
        ensure(p.order() <= 2000, || format!("product order {}", p.order()))?;
        let r = verify_lattice_identities(&p, &cd_lattice(&p));
        checks += r.checks;
        ensure(r.passed(), || {
            format!("{} x {}: {:?}", a.id(), b.id(), r.failures)
        })?;
        let v = product_lattice_check(&a.group, &b.group).unwrap();
        ensure(v.is_ok(), || format!("{} x {}: {v}", a.id(), b.id()))?;
    }
    Ok(format!(
        "{} catalog groups + {} products, {checks} checks",
        cat.entries.len(),
        pairs.len()
    ))
}

fn theorem1_holds(g: &Group) -> Result<(), String> {
    let a = has_property_a(g).holds;
    let prod = is_product_of_cd_simple(g).unwrap();
    ensure(a == prod, || {
        format!("Property A {a}, product of CD-simple {prod}")
    })?;
    if a {
        let d = theorem1_decompose(g).unwrap();
        ensure(d.succeeded(), || "decomposition failed".into())?;
    }
    Ok(())
}

fn criterion8(cat: &Catalog) -> Outcome {
    for e in &cat.entries {
        theorem1_holds(&e.group).map_err(|why| format!("{}: {why}", e.id()))?;
    }
    let s4 = builtin_group(Builtin::Symmetric(4)).unwrap();
    let (p, _, _) = Group::direct_product(&s4, &s4).unwrap();
    theorem1_holds(&p).map_err(|why| format!("S4 x S4: {why}"))?;
    let l = cd_lattice(&p);
    ensure(l.max_measure == 576, || {
        format!("S4 x S4 m* = {}", l.max_measure)
    })?;
    ensure(l.len() == 4, || format!("S4 x S4 has {} members", l.len()))?;
    let (a, b) = (&l.members[1], &l.members[2]);
    let boolean = l.members[0].is_trivial()
        && a.intersection(b).is_trivial()
        && p.is_whole(&p.join(a, b))
        && p.is_whole(&l.members[3]);
    ensure(boolean, || "S4 x S4 lattice is not Boolean".into())?;
    let d = theorem1_decompose(&p).unwrap();
    ensure(d.atoms.len() == 2, || format!("{} atoms", d.atoms.len()))?;
    Ok(format!("{} catalog groups and S4 x S4", cat.entries.len()))
}

fn criterion9(_: &Catalog) -> Outcome {
    let start = Instant::now();
    for (p, n) in [(2u32, 1u32), (3, 1), (2, 2), (5, 1)] {
        let f = FiniteField::new(p, n).unwrap();
        let q = f.size() as usize;
        let gl = general_linear_2(&f).unwrap();
        let g = gl.group();
        ensure(g.order() == (q * q - 1) * (q * q - q), || {
            format!("|GL(2,{q})| = {}", g.order())
        })?;
        // determinant-1 matrices counted directly from entries
        let mut sl_count = 0;
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    for d in f.elements() {
                        if f.sub(f.mul(a, d), f.mul(b, c)) == f.one() {
                            sl_count += 1;
                        }
                    }
                }
            }
        }
        ensure(sl_count == q * (q + 1) * (q - 1), || {
            format!("|SL(2,{q})| = {sl_count}")
        })?;
        // nonidentity p-elements are the nonidentity unipotents, q - 1 per Sylow
        let p_elems = (1..g.order())
            .filter(|&x| {
                let o = g.element_order(x);
                o > 1 && cd_core::numtheory::log_exact(o as u64, p as u64).is_some()
            })
            .count();
        ensure(p_elems == (q + 1) * (q - 1), || {
            format!("{p_elems} p-elements")
        })?;
        let sylows = g.sylow_subgroups(p as usize);
        ensure(sylows.len() == q + 1, || {
            format!("{} Sylow subgroups for q = {q}", sylows.len())
        })?;
        let sl = gl.special_linear();
        ensure(sl.order() == sl_count, || {
            "determinant labels disagree".into()
        })?;
        for (i, s) in sylows.iter().enumerate() {
            for t in &sylows[i + 1..] {
                ensure(s.intersection(t).is_trivial(), || {
                    "Sylow intersection".into()
                })?;
                ensure(g.join(s, t) == sl, || {
                    format!("pair does not generate SL(2,{q})")
                })?;
            }
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("q in {{2, 3, 4, 5}} in {:.2}s", t.as_secs_f64()))
}

fn criterion10(_: &Catalog) -> Outcome {
    let cases: [(&str, Group, Family, u32, usize); 3] = [
        (
            "S4",
            builtin_group(Builtin::Symmetric(4)).unwrap(),
            Family::One,
            2,
            6,
        ),
        (
            "320",
            construct_primitive_group(2, 5, 4, 2).unwrap().group,
            Family::Two,
            4,
            20,
        ),
        (
            "1053",
            construct_primitive_group(3, 13, 3, 1).unwrap().group,
            Family::Three,
            3,
            39,
        ),
    ];
    for (name, g, family, n, quotient) in &cases {
        let r = theorem24_verify(g).unwrap();
        ensure(r.verdict == Verdict::Pass, || {
            format!("{name}: {}", r.verdict)
        })?;
        ensure(!r.checks.is_empty(), || {
            format!("{name}: no minimal normal subgroups")
        })?;
        for c in &r.checks {
            ensure(c.family == Some(*family), || {
                format!("{name}: family {:?}", c.family)
            })?;
            ensure(c.n == Some(*n), || format!("{name}: n = {:?}", c.n))?;
            ensure(c.quotient_order == *quotient, || {
                format!("{name}: |G/C(N)| = {}", c.quotient_order)
            })?;
            ensure(c.sylow_q_irreducible, || format!("{name}: reducible"))?;
        }
    }
    Ok("families 1, 2, 3 on S4, 320, 1053".into())
}

fn main() {
    let cat = Catalog::bundled();
    let criteria: [Criterion; 10] = [
        (
            "orders 1..50: S_4 is the only nontrivial CD-simple group",
            criterion1,
        ),
        ("hand exclusions for orders 16, 36, 40, 45, 48", criterion2),
        ("excluded orders have m* > |G|", criterion3),
        (
            "primitive constructions of orders 24, 320, 1053",
            criterion4,
        ),
        ("Wagstaff primes and admissible parameters", criterion5),
        (
            "CD lattice matches brute force for orders <= 24",
            criterion6,
        ),
        (
            "lattice identities on the catalog and sampled products",
            criterion7,
        ),
        ("Property A iff product of CD-simple groups", criterion8),
        ("Sylow structure of GL(2,q), q <= 5", criterion9),
        (
            "minimal normal subgroup action in families 1, 2, 3",
            criterion10,
        ),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(|| f(&cat))).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
