//! Property A, the splitting of a Property A group into its CD-simple
//! factors, and checks of the Sylow and minimal-normal-subgroup statements
//! about groups of order `m p^k` on concrete groups.

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::lattice::{cd_lattice, is_cd_simple};
use crate::numtheory::{factorize, log_exact, qpk_decompose, AdmissibleParams, Family};
use crate::verdict::Verdict;

#[derive(Debug, Clone)]
pub struct AbelianNormalWitness {
    pub subgroup: Subgroup,
    pub order: usize,
    /// `|G : C_G(A)|`.
    pub centralizer_index: usize,
}

#[derive(Debug, Clone)]
pub struct PropertyAReport {
    pub holds: bool,
    /// One entry per nontrivial abelian normal subgroup, by (order, elements).
    pub witnesses: Vec<AbelianNormalWitness>,
    pub violating: Option<Subgroup>,
}

pub fn has_property_a(g: &Group) -> PropertyAReport {
    let witnesses: Vec<AbelianNormalWitness> = g
        .normal_subgroups(false)
        .into_iter()
        .filter(|a| !a.is_trivial() && g.is_abelian(a))
        .map(|a| AbelianNormalWitness {
            order: a.order(),
            centralizer_index: g.order() / g.centralizer(&a).order(),
            subgroup: a,
        })
        .collect();
    let violating = witnesses
        .iter()
        .find(|w| w.centralizer_index <= w.order)
        .map(|w| w.subgroup.clone());
    PropertyAReport {
        holds: violating.is_none(),
        witnesses,
        violating,
    }
}

/// The atoms of `CD(G)` and whether they split `G` as a direct product.
#[derive(Debug)]
pub struct Decomposition {
    pub atoms: Vec<Subgroup>,
    pub is_direct: bool,
    /// Each atom re-enumerated as a group on the parent's points.
    pub factors: Vec<Group>,
    pub factors_cd_simple: Vec<bool>,
}

impl Decomposition {
    pub fn succeeded(&self) -> bool {
        self.is_direct && self.factors_cd_simple.iter().all(|&b| b)
    }
}

/// Requires Property A.
pub fn theorem1_decompose(g: &Group) -> Result<Decomposition> {
    if !has_property_a(g).holds {
        return Err(Error::Precondition("group does not have Property A".into()));
    }
    let lattice = cd_lattice(g);
    let atoms: Vec<Subgroup> = lattice
        .atoms()
        .into_iter()
        .map(|i| lattice.members[i].clone())
        .collect();
    let is_direct = lattice.members[lattice.least].is_trivial() && splits_directly(g, &atoms);
    let mut factors = Vec::with_capacity(atoms.len());
    for a in &atoms {
        factors.push(g.subgroup_as_group(a)?.0);
    }
    let factors_cd_simple = factors.iter().map(is_cd_simple).collect();
    Ok(Decomposition {
        atoms,
        is_direct,
        factors,
        factors_cd_simple,
    })
}

/// Normal, pairwise trivially intersecting and commuting, with product `G`.
fn splits_directly(g: &Group, parts: &[Subgroup]) -> bool {
    if !parts.iter().all(|a| g.is_normal(a)) {
        return false;
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if !a.intersection(b).is_trivial() {
                return false;
            }
            if !a.iter().all(|x| b.iter().all(|y| g.commute(x, y))) {
                return false;
            }
        }
    }
    let product: usize = parts.iter().map(|a| a.order()).product();
    let join = parts
        .iter()
        .fold(g.trivial_subgroup(), |acc, a| g.join(&acc, a));
    product == g.order() && g.is_whole(&join)
}

/// A pair of nontrivial normal subgroups `(H, K)` with `G = H x K`.
pub fn find_direct_splitting(g: &Group) -> Option<(Subgroup, Subgroup)> {
    let normals: Vec<Subgroup> = g
        .normal_subgroups(false)
        .into_iter()
        .filter(|h| !h.is_trivial() && !g.is_whole(h))
        .collect();
    for h in &normals {
        for k in &normals {
            if h.order() * k.order() == g.order() && h.intersection(k).is_trivial() {
                return Some((h.clone(), k.clone()));
            }
        }
    }
    None
}

pub fn is_directly_indecomposable(g: &Group) -> bool {
    find_direct_splitting(g).is_none()
}

/// Splits `G` into directly indecomposable factors by repeated normal
/// complement search. The trivial group has no factors.
pub fn direct_factors(g: &Group) -> Result<Vec<Group>> {
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    match find_direct_splitting(g) {
        None => Ok(vec![g.subgroup_as_group(&g.whole())?.0]),
        Some((h, k)) => {
            let mut out = direct_factors(&g.subgroup_as_group(&h)?.0)?;
            out.extend(direct_factors(&g.subgroup_as_group(&k)?.0)?);
            Ok(out)
        }
    }
}

/// `G` is a direct product of CD-simple groups, decided from its
/// indecomposable factors. The trivial group is the empty product.
pub fn is_product_of_cd_simple(g: &Group) -> Result<bool> {
    Ok(direct_factors(g)?.iter().all(is_cd_simple))
}

fn is_cyclic(g: &Group, h: &Subgroup) -> bool {
    h.iter().any(|x| g.element_order(x) == h.order())
}

/// When `m*(G) = |G|`, no nontrivial normal subgroup is cyclic.
pub fn prop21_check(g: &Group) -> Verdict {
    let m = cd_lattice(g).max_measure;
    if m != g.order() as u64 {
        return Verdict::Vacuous(format!("m* = {m} differs from |G| = {}", g.order()));
    }
    let failures = g
        .normal_subgroups(false)
        .iter()
        .filter(|n| !n.is_trivial() && is_cyclic(g, n))
        .map(|n| format!("normal subgroup of order {} is cyclic", n.order()))
        .collect();
    Verdict::from_failures(failures)
}

/// For an indecomposable group with Property A, every `1 < H < G` has
/// `|G : C_G(H)| > |H|`. Enumerates all subgroups, so small groups only.
pub fn centralizer_index_check(g: &Group) -> Result<Verdict> {
    if !is_directly_indecomposable(g) {
        return Ok(Verdict::Vacuous("group is decomposable".into()));
    }
    if !has_property_a(g).holds {
        return Ok(Verdict::Vacuous("no Property A".into()));
    }
    let failures = g
        .all_subgroups()?
        .iter()
        .filter(|h| !h.is_trivial() && !g.is_whole(h))
        .filter(|h| g.order() / g.centralizer(h).order() <= h.order())
        .map(|h| {
            format!(
                "subgroup of order {} has small centralizer index",
                h.order()
            )
        })
        .collect();
    Ok(Verdict::from_failures(failures))
}

/// The shape `|G| = m p^k` with `p` not dividing `m`, `q` the smallest prime
/// divisor of `m`, and `m/q < p < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LargePrimeShape {
    pub m: u64,
    pub p: u64,
    pub k: u32,
    pub q: u64,
}

impl LargePrimeShape {
    pub fn of(order: u64, p: u64) -> Option<LargePrimeShape> {
        let f = factorize(order);
        let &(_, k) = f.iter().find(|&&(r, _)| r == p)?;
        let m = order / p.pow(k);
        let &(q, _) = f.iter().find(|&&(r, _)| r != p)?;
        // q divides m, so m/q < p is exactly m < p q
        (m < p * q && p < m).then_some(LargePrimeShape { m, p, k, q })
    }
}

#[derive(Debug, Clone)]
pub struct SylowLemmaReport {
    pub p: u64,
    pub shape: Option<LargePrimeShape>,
    /// A Sylow `p`-subgroup is normal or self-normalizing.
    pub normal_or_self_normalizing: Verdict,
    /// With `k = 1` and non-normal Sylow `p`: the elements of order prime to
    /// `p` form an abelian normal subgroup of order `m`.
    pub abelian_complement: Verdict,
    /// With `m/q > 1`: distinct Sylow `P, R` generate `G` and meet in
    /// `O_p(G)` of order `p^(k-1)`.
    pub sylow_pairs: Verdict,
}

impl SylowLemmaReport {
    pub fn passed(&self) -> bool {
        self.normal_or_self_normalizing.is_ok()
            && self.abelian_complement.is_ok()
            && self.sylow_pairs.is_ok()
    }
}

pub fn sylow_lemma_suite(g: &Group, p: u64) -> SylowLemmaReport {
    let Some(shape) = LargePrimeShape::of(g.order() as u64, p) else {
        let why = format!("order {} is not m p^k with m/q < p < m", g.order());
        return SylowLemmaReport {
            p,
            shape: None,
            normal_or_self_normalizing: Verdict::Vacuous(why.clone()),
            abelian_complement: Verdict::Vacuous(why.clone()),
            sylow_pairs: Verdict::Vacuous(why),
        };
    };
    let pu = p as usize;
    let sylows = g.sylow_subgroups(pu);
    let s = &sylows[0];
    let normal = sylows.len() == 1;
    let normal_or_self_normalizing = if normal || g.normalizer(s) == *s {
        Verdict::Pass
    } else {
        Verdict::Fail(format!(
            "Sylow {p}-subgroup has normalizer of order {}",
            g.normalizer(s).order()
        ))
    };

    let abelian_complement = if shape.k != 1 {
        Verdict::Vacuous("k > 1".into())
    } else if normal {
        Verdict::Vacuous("Sylow subgroup is normal".into())
    } else {
        let coprime: Vec<usize> = (0..g.order())
            .filter(|&x| g.element_order(x) % pu != 0)
            .collect();
        match g.subgroup_from_elements(&coprime) {
            Err(_) => Verdict::Fail("elements of order prime to p are not closed".into()),
            Ok(x) => {
                let mut f = Vec::new();
                if x.order() as u64 != shape.m {
                    f.push(format!(
                        "complement has order {} instead of {}",
                        x.order(),
                        shape.m
                    ));
                }
                if !g.is_abelian(&x) {
                    f.push("complement is not abelian".into());
                }
                if !g.is_normal(&x) {
                    f.push("complement is not normal".into());
                }
                Verdict::from_failures(f)
            }
        }
    };

    let sylow_pairs = if shape.m / shape.q <= 1 {
        Verdict::Vacuous("m/q = 1".into())
    } else if normal {
        Verdict::Vacuous("only one Sylow subgroup".into())
    } else {
        let op = g.o_p(pu);
        let want = (pu).pow(shape.k - 1);
        let mut f = Vec::new();
        if op.order() != want {
            f.push(format!("O_p has order {} instead of {want}", op.order()));
        }
        'pairs: for (i, a) in sylows.iter().enumerate() {
            for b in &sylows[i + 1..] {
                if !g.is_whole(&g.join(a, b)) {
                    f.push("two Sylow subgroups generate a proper subgroup".into());
                    break 'pairs;
                }
                if a.intersection(b) != op {
                    f.push("two Sylow subgroups meet outside O_p".into());
                    break 'pairs;
                }
            }
        }
        Verdict::from_failures(f)
    };

    SylowLemmaReport {
        p,
        shape: Some(shape),
        normal_or_self_normalizing,
        abelian_complement,
        sylow_pairs,
    }
}

/// Data gathered for one minimal normal subgroup `N`.
#[derive(Debug, Clone)]
pub struct MinimalNormalCheck {
    pub order: usize,
    /// `|N| = p^n`.
    pub n: Option<u32>,
    /// `|G / C_G(N)|`.
    pub quotient_order: usize,
    /// `|G / C_G(N)| = q p^r`.
    pub r: Option<u32>,
    pub sylow_q_irreducible: bool,
    pub family: Option<Family>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Theorem24Report {
    /// `(q, p, k)` with `|G| = q p^k`.
    pub shape: Option<(u64, u64, u32)>,
    pub verdict: Verdict,
    pub checks: Vec<MinimalNormalCheck>,
}

/// For `|G| = q p^k`, `p < q`, and `m*(G) = |G|`, checks every minimal
/// normal subgroup `N`: `|N| = p^n`, `|G/C_G(N)| = q p^r` with `r >= 1` and
/// `p^n < q p^r`, a Sylow `q` of `G/C_G(N)` acts irreducibly on `N`, and
/// `(p, q, n, r)` lands in one of the three families.
pub fn theorem24_verify(g: &Group) -> Result<Theorem24Report> {
    let Some((q, p, k)) = qpk_decompose(g.order() as u64) else {
        return Ok(Theorem24Report {
            shape: None,
            verdict: Verdict::Vacuous(format!("order {} is not q p^k with p < q", g.order())),
            checks: Vec::new(),
        });
    };
    let shape = Some((q, p, k));
    let m = cd_lattice(g).max_measure;
    if m != g.order() as u64 {
        return Ok(Theorem24Report {
            shape,
            verdict: Verdict::Vacuous(format!("m* = {m} differs from |G|")),
            checks: Vec::new(),
        });
    }
    let mut checks = Vec::new();
    for n_sub in g.normal_subgroups(true) {
        checks.push(check_minimal_normal(g, &n_sub, p, q)?);
    }
    let failures: Vec<String> = checks
        .iter()
        .flat_map(|c| {
            c.failures
                .iter()
                .map(move |f| format!("N of order {}: {f}", c.order))
        })
        .collect();
    Ok(Theorem24Report {
        shape,
        verdict: Verdict::from_failures(failures),
        checks,
    })
}

fn check_minimal_normal(g: &Group, n_sub: &Subgroup, p: u64, q: u64) -> Result<MinimalNormalCheck> {
    let mut failures = Vec::new();
    let n = log_exact(n_sub.order() as u64, p);
    if n.is_none() {
        failures.push(format!("|N| = {} is not a power of {p}", n_sub.order()));
    }
    let c = g.centralizer(n_sub);
    let (h, proj) = g.quotient(&c)?;
    let quotient_order = h.order();
    let r = (quotient_order as u64 % q == 0)
        .then(|| log_exact(quotient_order as u64 / q, p))
        .flatten();
    match (n, r) {
        (_, None) | (_, Some(0)) => failures.push(format!(
            "|G/C_G(N)| = {quotient_order} is not q p^r with r >= 1"
        )),
        (Some(n), Some(r)) => {
            if p.pow(n) >= q * p.pow(r) {
                failures.push(format!("p^n = {} is not below q p^r", p.pow(n)));
            }
        }
        _ => {}
    }

    // T acts on N through preimages of its elements in G
    let t = h.sylow_subgroup(q as usize);
    let mut preimage = vec![usize::MAX; h.order()];
    for (x, &img) in proj.iter().enumerate() {
        if preimage[img] == usize::MAX {
            preimage[img] = x;
        }
    }
    let acting: Vec<usize> = h
        .small_generating_set(&t)
        .into_iter()
        .map(|y| preimage[y])
        .collect();
    let sylow_q_irreducible = n_sub.iter().filter(|&v| v != 0).all(|v| {
        let orbit = orbit_under_conjugation(g, v, &acting);
        g.closure(&orbit) == *n_sub
    });
    if !sylow_q_irreducible {
        failures.push("Sylow q-subgroup of G/C_G(N) is reducible on N".into());
    }

    let family = match (n, r) {
        (Some(n), Some(r)) if r >= 1 => AdmissibleParams::classify(p, &q.into(), n, r),
        _ => None,
    };
    if family.is_none() {
        failures.push("parameters match none of the three families".into());
    }
    Ok(MinimalNormalCheck {
        order: n_sub.order(),
        n,
        quotient_order,
        r,
        sylow_q_irreducible,
        family,
        failures,
    })
}

fn orbit_under_conjugation(g: &Group, v: usize, by: &[usize]) -> Vec<usize> {
    let mut seen = fixedbitset::FixedBitSet::with_capacity(g.order());
    seen.insert(v);
    let mut out = vec![v];
    let mut head = 0;
    while head < out.len() {
        for &s in by {
            let w = g.conj(out[head], s);
            if !seen.put(w) {
                out.push(w);
            }
        }
        head += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_group, construct_primitive_group, Builtin};
    use crate::group::tests::{cyclic, s4};

    #[test]
    fn property_a_examples() {
        let r = has_property_a(&s4());
        assert!(r.holds);
        let w: Vec<_> = r
            .witnesses
            .iter()
            .map(|w| (w.order, w.centralizer_index))
            .collect();
        assert_eq!(w, vec![(4, 6)]);

        let r = has_property_a(&cyclic(5));
        assert!(!r.holds);
        assert_eq!(r.witnesses[0].centralizer_index, 1);
        assert!(r.violating.is_some());
        assert!(has_property_a(&Group::trivial(1)).holds);
    }

    #[test]
    fn s4_squared() {
        let g = s4();
        let (p, _, _) = Group::direct_product(&g, &g).unwrap();
        let r = has_property_a(&p);
        assert!(r.holds);
        let orders: Vec<_> = r.witnesses.iter().map(|w| w.order).collect();
        assert_eq!(orders, vec![4, 4, 16]);
        let d = theorem1_decompose(&p).unwrap();
        assert_eq!(d.atoms.len(), 2);
        assert!(d.succeeded());
        for f in &d.factors {
            assert!(crate::iso::is_isomorphic(f, &g).unwrap());
        }
        assert_eq!(direct_factors(&p).unwrap().len(), 2);
    }

    #[test]
    fn decompose_requires_property_a() {
        assert!(matches!(
            theorem1_decompose(&cyclic(4)),
            Err(Error::Precondition(_))
        ));
        let d = theorem1_decompose(&s4()).unwrap();
        assert_eq!(d.atoms.len(), 1);
        assert!(d.succeeded());
    }

    #[test]
    fn indecomposability() {
        assert!(is_directly_indecomposable(&s4()));
        assert!(!is_directly_indecomposable(
            &builtin_group(Builtin::Klein4).unwrap()
        ));
        assert!(!is_directly_indecomposable(&cyclic(6)));
        assert!(is_directly_indecomposable(&cyclic(8)));
        assert!(is_product_of_cd_simple(&Group::trivial(1)).unwrap());
        assert!(!is_product_of_cd_simple(&cyclic(6)).unwrap());
    }

    #[test]
    fn prop21() {
        assert_eq!(prop21_check(&s4()), Verdict::Pass);
        assert!(matches!(prop21_check(&cyclic(7)), Verdict::Vacuous(_)));
        assert_eq!(centralizer_index_check(&s4()).unwrap(), Verdict::Pass);
    }

    #[test]
    fn sylow_lemmas_frobenius56() {
        let g = builtin_group(Builtin::Frobenius56).unwrap();
        let r = sylow_lemma_suite(&g, 7);
        assert_eq!(r.shape.unwrap().m, 8);
        assert_eq!(r.normal_or_self_normalizing, Verdict::Pass);
        assert_eq!(r.abelian_complement, Verdict::Pass);
        assert_eq!(r.sylow_pairs, Verdict::Pass);
    }

    #[test]
    fn sylow_lemmas_s4() {
        let g = s4();
        let r = sylow_lemma_suite(&g, 2);
        assert_eq!(r.normal_or_self_normalizing, Verdict::Pass);
        assert_eq!(g.sylow_count(2), 3);
        assert!(matches!(r.sylow_pairs, Verdict::Vacuous(_)));
        assert!(sylow_lemma_suite(&g, 3).shape.is_none());
        // 14 = 2 * 7 has m < p, outside the shape
        let r = sylow_lemma_suite(&cyclic(14), 7);
        assert!(r.shape.is_none());
    }

    #[test]
    fn theorem24_on_s4() {
        let r = theorem24_verify(&s4()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.checks.len(), 1);
        let c = &r.checks[0];
        assert_eq!(
            (c.order, c.n, c.quotient_order, c.r),
            (4, Some(2), 6, Some(1))
        );
        assert_eq!(c.family, Some(Family::One));
    }

    #[test]
    fn theorem24_on_320() {
        let g = construct_primitive_group(2, 5, 4, 2).unwrap().group;
        let r = theorem24_verify(&g).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let c = &r.checks[0];
        assert_eq!((c.n, c.quotient_order), (Some(4), 20));
        assert_eq!(c.family, Some(Family::Two));
    }

    #[test]
    fn theorem24_inapplicable() {
        assert!(matches!(
            theorem24_verify(&cyclic(6)).unwrap().verdict,
            Verdict::Vacuous(_)
        ));
        assert!(matches!(
            theorem24_verify(&cyclic(8)).unwrap().verdict,
            Verdict::Vacuous(_)
        ));
    }
}
