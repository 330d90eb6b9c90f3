//! Reruns every machine-checkable claim against the catalog and the
//! constructions, producing one ledger line per claim.

use std::fmt::Write as _;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::catalog::{classify_orders, Catalog, CatalogEntry};
use crate::constructions::{
    builtin_group, complement_structure, construct_primitive_group, general_linear_2,
    gl2_sylow_dichotomy, gl2_sylow_structure, singer_normalizer_check, Builtin,
};
use crate::error::Result;
use crate::field::FiniteField;
use crate::group::{Group, ALL_SUBGROUPS_CAP};
use crate::iso::is_isomorphic;
use crate::lattice::{
    cd_lattice, cd_measure, is_cd_simple, product_lattice_check, verify_lattice_identities,
};
use crate::normal::{
    centralizer_index_check, has_property_a, is_product_of_cd_simple, prop21_check,
    sylow_lemma_suite, theorem1_decompose, theorem24_verify,
};
use crate::numtheory::{excluded_order, factorize, lemma210_enumerate, wagstaff_primes, Family};
use crate::verdict::Verdict;

pub const SAMPLE_SEED: u64 = 0x5eed_cd01;
pub const SAMPLED_PRODUCTS: usize = 20;
pub const MAX_PRODUCT_ORDER: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClaimStatus {
    Passed,
    Failed(String),
    Skipped,
}

#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub key: &'static str,
    pub statement: &'static str,
    pub tags: &'static [&'static str],
    pub status: ClaimStatus,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, Default)]
pub struct Ledger {
    pub results: Vec<ClaimResult>,
}

impl Ledger {
    pub fn passed(&self) -> bool {
        self.results
            .iter()
            .all(|r| !matches!(r.status, ClaimStatus::Failed(_)))
    }

    pub fn failed(&self) -> Vec<&ClaimResult> {
        self.results
            .iter()
            .filter(|r| matches!(r.status, ClaimStatus::Failed(_)))
            .collect()
    }

    pub fn get(&self, key: &str) -> Option<&ClaimResult> {
        self.results.iter().find(|r| r.key == key)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let status = match &r.status {
                ClaimStatus::Passed => "PASS".to_string(),
                ClaimStatus::Failed(why) => format!("FAIL ({why})"),
                ClaimStatus::Skipped => "SKIP".to_string(),
            };
            let _ = writeln!(
                s,
                "[{status}] {}: {} ({:.1}s)",
                r.key, r.statement, r.seconds
            );
            if !r.detail.is_empty() {
                let _ = writeln!(s, "       {}", r.detail);
            }
        }
        let failed = self.failed().len();
        let skipped = self
            .results
            .iter()
            .filter(|r| r.status == ClaimStatus::Skipped)
            .count();
        let _ = writeln!(
            s,
            "{} claims: {} passed, {failed} failed, {skipped} skipped",
            self.results.len(),
            self.results.len() - failed - skipped
        );
        s
    }
}

type Check = fn(&Catalog) -> Result<(Verdict, String)>;

struct Claim {
    key: &'static str,
    statement: &'static str,
    tags: &'static [&'static str],
    run: Check,
}

/// Tags that `--skip` understands, besides claim keys.
pub const TAGS: [&str; 5] = [
    "corpus",
    "products",
    "gl2",
    "numtheory",
    "big-constructions",
];

fn claims() -> Vec<Claim> {
    vec![
        Claim {
            key: "cd-simple-orders-1-50",
            statement: "the trivial group and S_4 are the only CD-simple groups of order 1..50",
            tags: &["corpus"],
            run: cd_simple_orders,
        },
        Claim {
            key: "sylow-3-measure-36-45",
            statement: "groups of order 36 or 45 have an abelian Sylow 3-subgroup of measure >= 81",
            tags: &["corpus"],
            run: sylow3_measure,
        },
        Claim {
            key: "sylow-5-measure-40",
            statement: "groups of order 40 have a normal Sylow 5-subgroup of measure >= 50",
            tags: &["corpus"],
            run: sylow5_measure,
        },
        Claim {
            key: "measure-48",
            statement: "groups of order 48 have an abelian subgroup of order 8, so m* >= 64",
            tags: &["corpus"],
            run: measure48,
        },
        Claim {
            key: "abelian-8-in-16",
            statement: "every group of order 16 has an abelian subgroup of order 8",
            tags: &["corpus"],
            run: abelian8_in_16,
        },
        Claim {
            key: "excluded-orders",
            statement: "groups of order m p^k with 1 < m/q < p < m have m* > |G|",
            tags: &["corpus"],
            run: excluded_orders,
        },
        Claim {
            key: "large-prime-sylow",
            statement: "Sylow subgroup structure for orders m p^k with m/q < p < m",
            tags: &["corpus"],
            run: large_prime_sylow,
        },
        Claim {
            key: "no-cyclic-normal",
            statement: "m* = |G| forbids nontrivial cyclic normal subgroups",
            tags: &["corpus"],
            run: no_cyclic_normal,
        },
        Claim {
            key: "lattice-identities",
            statement: "CD lattice identities hold for every catalog group",
            tags: &["corpus"],
            run: lattice_identities_corpus,
        },
        Claim {
            key: "lattice-identities-products",
            statement: "CD lattice identities hold for sampled direct products",
            tags: &["products"],
            run: lattice_identities_products,
        },
        Claim {
            key: "product-lattices",
            statement: "CD(G x H) = CD(G) x CD(H)",
            tags: &["products"],
            run: product_lattices,
        },
        Claim {
            key: "property-a-equivalence",
            statement: "Property A iff direct product of CD-simple groups",
            tags: &["corpus"],
            run: property_a_equivalence,
        },
        Claim {
            key: "property-a-products",
            statement: "Property A iff direct product of CD-simple groups, on sampled products",
            tags: &["products"],
            run: property_a_products,
        },
        Claim {
            key: "primitive-products-property-a",
            statement: "products of primitive [V]H with |H| > |V| have Property A",
            tags: &["products"],
            run: primitive_products,
        },
        Claim {
            key: "centralizer-index",
            statement: "indecomposable Property A groups have |G : C(H)| > |H| for all 1 < H < G",
            tags: &["corpus"],
            run: centralizer_index,
        },
        Claim {
            key: "gl2-sylow",
            statement: "GL(2,q) has q+1 Sylow p-subgroups, pairwise generating SL(2,q), q <= 5",
            tags: &["gl2"],
            run: gl2_sylow,
        },
        Claim {
            key: "gl2-dichotomy",
            statement:
                "subgroups of GL(2,q) of order divisible by q: normal Sylow p or contain SL(2,q)",
            tags: &["gl2"],
            run: gl2_dichotomy,
        },
        Claim {
            key: "singer-normalizers",
            statement: "the normalizer of an irreducible Singer subgroup has order (p^n - 1) n",
            tags: &["gl2"],
            run: singer_normalizers,
        },
        Claim {
            key: "primitive-constructions",
            statement: "[V]TH for (2,3,2,1) is S_4 and for (2,5,4,2) is CD-simple of order 320",
            tags: &[],
            run: primitive_constructions,
        },
        Claim {
            key: "primitive-construction-1053",
            statement: "[V]TH for (3,13,3,1) is CD-simple of order 1053",
            tags: &["big-constructions"],
            run: primitive_construction_1053,
        },
        Claim {
            key: "complement-structure",
            statement: "constructed K = TH: normal Sylow q, O_p(K) = 1, irreducible, |K| > |V|",
            tags: &[],
            run: complements,
        },
        Claim {
            key: "minimal-normal-action",
            statement: "minimal normal subgroup data for S_4 (family 1) and order 320 (family 2)",
            tags: &[],
            run: minimal_normal_small,
        },
        Claim {
            key: "minimal-normal-action-1053",
            statement: "minimal normal subgroup data for order 1053 (family 3)",
            tags: &["big-constructions"],
            run: minimal_normal_1053,
        },
        Claim {
            key: "parameter-families",
            statement:
                "admissible (p,q,n,r) with p <= 31 are the two p = 2 tuples and p in {3,19,31}",
            tags: &["numtheory"],
            run: parameter_families,
        },
        Claim {
            key: "wagstaff-primes",
            statement: "(p^p - 1)/(p - 1) is prime for p < 180 exactly when p in {2,3,19,31}",
            tags: &["numtheory"],
            run: wagstaff,
        },
    ]
}

pub fn claim_keys() -> Vec<&'static str> {
    claims().iter().map(|c| c.key).collect()
}

/// Runs every claim not named (by key or tag) in `skip`.
pub fn verify_paper(cat: &Catalog, skip: &[String]) -> Ledger {
    let mut ledger = Ledger::default();
    for c in claims() {
        let skipped = skip
            .iter()
            .any(|s| s == c.key || c.tags.contains(&s.as_str()));
        let start = Instant::now();
        let (status, detail) = if skipped {
            (ClaimStatus::Skipped, String::new())
        } else {
            match (c.run)(cat) {
                Ok((Verdict::Fail(why), detail)) => (ClaimStatus::Failed(why), detail),
                Ok((_, detail)) => (ClaimStatus::Passed, detail),
                Err(e) => (ClaimStatus::Failed(e.to_string()), String::new()),
            }
        };
        ledger.results.push(ClaimResult {
            key: c.key,
            statement: c.statement,
            tags: c.tags,
            status,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    ledger
}

fn fail_if(failures: Vec<String>, detail: String) -> Result<(Verdict, String)> {
    Ok((Verdict::from_failures(failures), detail))
}

fn need_entries(cat: &Catalog, order: usize) -> std::result::Result<Vec<&CatalogEntry>, String> {
    let v: Vec<&CatalogEntry> = cat.of_order(order).collect();
    if v.is_empty() {
        Err(format!("catalog has no groups of order {order}"))
    } else {
        Ok(v)
    }
}

fn cd_simple_orders(cat: &Catalog) -> Result<(Verdict, String)> {
    let report = classify_orders(cat, 1..=50);
    let mut f = Vec::new();
    let nontrivial: Vec<(usize, usize)> = report
        .cd_simple_ids()
        .into_iter()
        .filter(|&(o, _)| o > 1)
        .collect();
    if report.records.iter().any(|r| r.order == 1 && !r.cd_simple) {
        f.push("trivial group is not CD-simple".into());
    }
    let s4 = builtin_group(Builtin::Symmetric(4))?;
    match nontrivial.as_slice() {
        [(24, i)] => {
            let g = &cat.get(24, *i).expect("classified entry exists").group;
            if !is_isomorphic(g, &s4)? {
                f.push(format!("24.{i} is CD-simple but not S_4"));
            }
        }
        other => f.push(format!("nontrivial CD-simple groups: {other:?}")),
    }
    if report.summary.errors > 0 {
        f.push(format!(
            "{} entries failed to classify",
            report.summary.errors
        ));
    }
    let detail = format!(
        "{} groups classified, nontrivial CD-simple: {:?}",
        report.summary.groups, nontrivial
    );
    fail_if(f, detail)
}

fn sylow3_measure(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let mut n = 0;
    for order in [36, 45] {
        let entries = match need_entries(cat, order) {
            Ok(e) => e,
            Err(why) => return Ok((Verdict::Fail(why), String::new())),
        };
        for e in entries {
            n += 1;
            let g = &e.group;
            let s = g.sylow_subgroup(3);
            if !g.is_abelian(&s) || cd_measure(g, &s) < 81 {
                f.push(format!("{}: Sylow 3 measure {}", e.id(), cd_measure(g, &s)));
            }
        }
    }
    fail_if(f, format!("{n} groups checked"))
}

fn sylow5_measure(cat: &Catalog) -> Result<(Verdict, String)> {
    let entries = match need_entries(cat, 40) {
        Ok(e) => e,
        Err(why) => return Ok((Verdict::Fail(why), String::new())),
    };
    let mut f = Vec::new();
    for e in &entries {
        let g = &e.group;
        let s = g.sylow_subgroup(5);
        if !g.is_normal(&s) || cd_measure(g, &s) < 50 || cd_lattice(g).max_measure < 50 {
            f.push(format!("{}: Sylow 5 measure {}", e.id(), cd_measure(g, &s)));
        }
    }
    fail_if(f, format!("{} groups checked", entries.len()))
}

fn has_abelian_of_order(g: &Group, order: usize) -> Result<bool> {
    Ok(g.all_subgroups()?
        .iter()
        .any(|h| h.order() == order && g.is_abelian(h)))
}

fn measure48(cat: &Catalog) -> Result<(Verdict, String)> {
    let entries = match need_entries(cat, 48) {
        Ok(e) => e,
        Err(why) => return Ok((Verdict::Fail(why), String::new())),
    };
    let mut f = Vec::new();
    for e in &entries {
        let g = &e.group;
        let (p, _) = g.subgroup_as_group(&g.sylow_subgroup(2))?;
        if !has_abelian_of_order(&p, 8)? || cd_lattice(g).max_measure < 64 {
            f.push(e.id());
        }
    }
    fail_if(f, format!("{} groups checked", entries.len()))
}

fn abelian8_in_16(cat: &Catalog) -> Result<(Verdict, String)> {
    let entries = match need_entries(cat, 16) {
        Ok(e) => e,
        Err(why) => return Ok((Verdict::Fail(why), String::new())),
    };
    let mut f = Vec::new();
    for e in &entries {
        if !has_abelian_of_order(&e.group, 8)? {
            f.push(e.id());
        }
    }
    fail_if(f, format!("{} groups checked", entries.len()))
}

fn excluded_orders(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let mut orders = Vec::new();
    let mut n = 0;
    for e in &cat.entries {
        if excluded_order(e.order as u64)?.is_none() {
            continue;
        }
        if !orders.contains(&e.order) {
            orders.push(e.order);
        }
        n += 1;
        let m = cd_lattice(&e.group).max_measure;
        if m <= e.order as u64 {
            f.push(format!("{}: m* = {m}", e.id()));
        }
    }
    orders.sort_unstable();
    fail_if(f, format!("{n} groups of orders {orders:?}"))
}

fn large_prime_sylow(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let mut applicable = 0;
    for e in &cat.entries {
        for (p, _) in factorize(e.order as u64) {
            let r = sylow_lemma_suite(&e.group, p);
            if r.shape.is_some() {
                applicable += 1;
            }
            if !r.passed() {
                f.push(format!("{} at p = {p}", e.id()));
            }
        }
    }
    fail_if(f, format!("{applicable} (group, prime) pairs in shape"))
}

fn no_cyclic_normal(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let mut applicable = 0;
    for e in &cat.entries {
        match prop21_check(&e.group) {
            Verdict::Pass => applicable += 1,
            Verdict::Fail(why) => f.push(format!("{}: {why}", e.id())),
            Verdict::Vacuous(_) => {}
        }
    }
    fail_if(f, format!("{applicable} groups with m* = |G|"))
}

fn lattice_identities_corpus(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let mut checks = 0;
    for e in &cat.entries {
        let r = verify_lattice_identities(&e.group, &cd_lattice(&e.group));
        checks += r.checks;
        if !r.passed() {
            f.push(format!("{}: {}", e.id(), r.failures.join(", ")));
        }
    }
    fail_if(f, format!("{} groups, {checks} checks", cat.entries.len()))
}

/// Seeded sample of catalog pairs whose product has order at most
/// `MAX_PRODUCT_ORDER`, both factors nontrivial.
pub fn sampled_pairs(cat: &Catalog, count: usize) -> Vec<(&CatalogEntry, &CatalogEntry)> {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let pool: Vec<&CatalogEntry> = cat.entries.iter().filter(|e| e.order > 1).collect();
    let mut out = Vec::new();
    if pool.is_empty() {
        return out;
    }
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count {
        attempts += 1;
        let a = pool[rng.gen_range(0..pool.len())];
        let b = pool[rng.gen_range(0..pool.len())];
        if a.order * b.order <= MAX_PRODUCT_ORDER {
            out.push((a, b));
        }
    }
    out
}

fn lattice_identities_products(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let pairs = sampled_pairs(cat, SAMPLED_PRODUCTS);
    for (a, b) in &pairs {
        let (p, _, _) = Group::direct_product(&a.group, &b.group)?;
        let r = verify_lattice_identities(&p, &cd_lattice(&p));
        if !r.passed() {
            f.push(format!(
                "{} x {}: {}",
                a.id(),
                b.id(),
                r.failures.join(", ")
            ));
        }
    }
    let ids: Vec<String> = pairs
        .iter()
        .map(|(a, b)| format!("{}x{}", a.id(), b.id()))
        .collect();
    fail_if(f, ids.join(" "))
}

fn product_lattices(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let s4 = builtin_group(Builtin::Symmetric(4))?;
    let mut cases: Vec<(String, &Group, &Group)> = vec![("S4 x S4".into(), &s4, &s4)];
    for (a, b) in sampled_pairs(cat, SAMPLED_PRODUCTS) {
        cases.push((format!("{} x {}", a.id(), b.id()), &a.group, &b.group));
    }
    for (name, a, b) in &cases {
        if let Verdict::Fail(why) = product_lattice_check(a, b)? {
            f.push(format!("{name}: {why}"));
        }
    }
    fail_if(f, format!("{} products", cases.len()))
}

/// Property A versus CD-simple factorization on one group: the CD atoms
/// split a Property A group into CD-simple factors, and the independent
/// direct-factor search agrees on whether the group is a product of
/// CD-simple groups.
pub fn property_a_equivalence_on(g: &Group) -> Result<std::result::Result<(), String>> {
    let holds = has_property_a(g).holds;
    let product = is_product_of_cd_simple(g)?;
    if holds != product {
        return Ok(Err(format!(
            "Property A = {holds} but product of CD-simple = {product}"
        )));
    }
    if holds {
        let d = theorem1_decompose(g)?;
        if !d.succeeded() {
            return Ok(Err("atom decomposition failed".into()));
        }
    }
    Ok(Ok(()))
}

fn property_a_equivalence(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let mut holds = 0;
    for e in &cat.entries {
        if let Err(why) = property_a_equivalence_on(&e.group)? {
            f.push(format!("{}: {why}", e.id()));
        }
        holds += has_property_a(&e.group).holds as usize;
    }
    fail_if(
        f,
        format!("{} groups, {holds} with Property A", cat.entries.len()),
    )
}

fn property_a_products(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let s4 = builtin_group(Builtin::Symmetric(4))?;
    let (s4s4, _, _) = Group::direct_product(&s4, &s4)?;
    let l = cd_lattice(&s4s4);
    if l.max_measure != 576 || l.member_orders() != vec![1, 24, 24, 576] {
        f.push(format!(
            "S4 x S4: m* = {}, members {:?}",
            l.max_measure,
            l.member_orders()
        ));
    }
    let mut cases = vec![("S4 x S4".to_string(), s4s4)];
    for (a, b) in sampled_pairs(cat, SAMPLED_PRODUCTS) {
        cases.push((
            format!("{} x {}", a.id(), b.id()),
            Group::direct_product(&a.group, &b.group)?.0,
        ));
    }
    for (name, g) in &cases {
        if let Err(why) = property_a_equivalence_on(g)? {
            f.push(format!("{name}: {why}"));
        }
    }
    fail_if(f, format!("{} products", cases.len()))
}

fn primitive_products(_: &Catalog) -> Result<(Verdict, String)> {
    let s4 = builtin_group(Builtin::Symmetric(4))?;
    let g320 = construct_primitive_group(2, 5, 4, 2)?.group;
    let (s4s4, _, _) = Group::direct_product(&s4, &s4)?;
    let (big, _, _) = Group::direct_product(&s4, &g320)?;
    let mut f = Vec::new();
    for (name, g) in [
        ("S4", &s4),
        ("320", &g320),
        ("S4 x S4", &s4s4),
        ("S4 x 320", &big),
    ] {
        if !has_property_a(g).holds {
            f.push(name.to_string());
        }
    }
    fail_if(f, "S4, [GF(16)]C5C4 and their products".into())
}

fn centralizer_index(cat: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let mut applicable = 0;
    for e in cat.entries.iter().filter(|e| e.order <= ALL_SUBGROUPS_CAP) {
        match centralizer_index_check(&e.group)? {
            Verdict::Pass => applicable += 1,
            Verdict::Fail(why) => f.push(format!("{}: {why}", e.id())),
            Verdict::Vacuous(_) => {}
        }
    }
    fail_if(
        f,
        format!("{applicable} indecomposable groups with Property A"),
    )
}

const GL2_FIELDS: [(u32, u32); 4] = [(2, 1), (3, 1), (2, 2), (5, 1)];

fn gl2_sylow(_: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    for (p, n) in GL2_FIELDS {
        let gl = general_linear_2(&FiniteField::new(p, n)?)?;
        if let Verdict::Fail(why) = gl2_sylow_structure(&gl) {
            f.push(format!("q = {}: {why}", gl.field.size()));
        }
    }
    fail_if(f, "q in {2, 3, 4, 5}".into())
}

fn gl2_dichotomy(_: &Catalog) -> Result<(Verdict, String)> {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let mut f = Vec::new();
    let mut eligible = 0;
    for (p, n) in GL2_FIELDS {
        let gl = general_linear_2(&FiniteField::new(p, n)?)?;
        let (v, k) = gl2_sylow_dichotomy(&gl, 40, &mut rng)?;
        eligible += k;
        if let Verdict::Fail(why) = v {
            f.push(format!("q = {}: {why}", gl.field.size()));
        }
    }
    fail_if(f, format!("{eligible} subgroups of order divisible by q"))
}

fn singer_normalizers(_: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let mut seen = Vec::new();
    for (p, n, d) in [
        (2, 2, 3),
        (2, 3, 7),
        (2, 4, 5),
        (2, 4, 15),
        (3, 2, 4),
        (3, 2, 8),
    ] {
        let r = singer_normalizer_check(&FiniteField::new(p, n)?, d)?;
        seen.push(format!("GF({}^{n}),{d}: {}", p, r.normalizer_order));
        if !r.passed() {
            f.push(format!("GF({p}^{n}), d = {d}: {r:?}"));
        }
    }
    fail_if(f, seen.join(", "))
}

fn primitive_constructions(_: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let a = construct_primitive_group(2, 3, 2, 1)?;
    if !is_isomorphic(&a.group, &builtin_group(Builtin::Symmetric(4))?)? {
        f.push("(2,3,2,1) is not S_4".into());
    }
    let b = construct_primitive_group(2, 5, 4, 2)?;
    if b.group.order() != 320 || !is_cd_simple(&b.group) {
        f.push("(2,5,4,2) is not CD-simple of order 320".into());
    }
    fail_if(f, String::new())
}

fn primitive_construction_1053(_: &Catalog) -> Result<(Verdict, String)> {
    let c = construct_primitive_group(3, 13, 3, 1)?;
    let ok = c.group.order() == 1053 && is_cd_simple(&c.group);
    let f = if ok {
        vec![]
    } else {
        vec!["(3,13,3,1) is not CD-simple of order 1053".into()]
    };
    fail_if(f, String::new())
}

fn complements(_: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    for (p, q, n, r) in [(2, 3, 2, 1), (2, 5, 4, 2), (3, 13, 3, 1)] {
        let a = construct_primitive_group(p, q, n, r)?;
        if let Verdict::Fail(why) = complement_structure(&a)? {
            f.push(format!("({p},{q},{n},{r}): {why}"));
        }
    }
    fail_if(f, String::new())
}

fn expect_family(g: &Group, family: Family, name: &str, f: &mut Vec<String>) -> Result<()> {
    let r = theorem24_verify(g)?;
    match &r.verdict {
        Verdict::Pass => {}
        other => f.push(format!("{name}: {other}")),
    }
    if r.checks.is_empty() || r.checks.iter().any(|c| c.family != Some(family)) {
        f.push(format!("{name}: expected family {}", family.number()));
    }
    Ok(())
}

fn minimal_normal_small(_: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    expect_family(
        &builtin_group(Builtin::Symmetric(4))?,
        Family::One,
        "S4",
        &mut f,
    )?;
    let g = construct_primitive_group(2, 5, 4, 2)?.group;
    expect_family(&g, Family::Two, "320", &mut f)?;
    fail_if(f, String::new())
}

fn minimal_normal_1053(_: &Catalog) -> Result<(Verdict, String)> {
    let mut f = Vec::new();
    let g = construct_primitive_group(3, 13, 3, 1)?.group;
    expect_family(&g, Family::Three, "1053", &mut f)?;
    fail_if(f, String::new())
}

fn parameter_families(_: &Catalog) -> Result<(Verdict, String)> {
    let r = lemma210_enumerate(31)?;
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
    let mut f = Vec::new();
    if got != want {
        f.push(format!("direct search found {got:?}"));
    }
    if !r.agrees() {
        f.push("direct search and closed form disagree".into());
    }
    fail_if(f, format!("{} tuples", got.len()))
}

fn wagstaff(_: &Catalog) -> Result<(Verdict, String)> {
    let got = wagstaff_primes(180)?;
    let f = if got == [2, 3, 19, 31] {
        vec![]
    } else {
        vec![format!("found {got:?}")]
    };
    fail_if(f, format!("{got:?}"))
}
