//! The Chermak-Delgado measure and lattice.
//!
//! Every lattice member `H` satisfies `H = C(C(H))`, so members are
//! centralizers. Centralizers are exactly the intersections of element
//! centralizers, which makes the intersection-closure of `{C(x)}` (plus `G`)
//! a complete candidate set that is usually tiny next to the subgroup lattice.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::group::{Group, Subgroup};
use crate::verdict::Verdict;

/// `|H| * |C_G(H)|`.
pub fn cd_measure(g: &Group, h: &Subgroup) -> u64 {
    h.order() as u64 * g.centralizer(h).order() as u64
}

/// Measure of a raw element set, which must be closed.
pub fn cd_measure_of_elements(g: &Group, elements: &[usize]) -> Result<u64> {
    let h = g.subgroup_from_elements(elements)?;
    Ok(cd_measure(g, &h))
}

#[derive(Debug, Clone)]
pub struct CdLattice {
    pub max_measure: u64,
    /// Sorted by (order, elements).
    pub members: Vec<Subgroup>,
    /// `dual[i]` is the index of `C_G(members[i])`.
    pub dual: Vec<usize>,
    pub least: usize,
    pub greatest: usize,
}

impl CdLattice {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.members.iter().position(|m| m == h)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.members[a].is_subset(&self.members[b])
    }

    /// Pairs `(a, b)` with `a < b` in the lattice and nothing in between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = (0..n).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Members covering the least one.
    pub fn atoms(&self) -> Vec<usize> {
        self.covers()
            .into_iter()
            .filter(|&(a, _)| a == self.least)
            .map(|(_, b)| b)
            .collect()
    }

    pub fn member_orders(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.order()).collect()
    }
}

/// Computes `m*(G)` and every subgroup attaining it.
pub fn cd_lattice(g: &Group) -> CdLattice {
    let n = g.order() as u64;
    assert!(n.checked_mul(n).is_some(), "measures must fit in 64 bits");

    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut family: Vec<Subgroup> = Vec::new();
    let mut push = |h: Subgroup, family: &mut Vec<Subgroup>| {
        if seen.insert(h.members().clone()) {
            family.push(h);
        }
    };
    push(g.whole(), &mut family);
    for x in 1..g.order() {
        push(g.centralizer_of_set(&[x]), &mut family);
    }
    // close under pairwise intersection
    let mut i = 0;
    while i < family.len() {
        for j in 0..i {
            let m = family[i].intersection(&family[j]);
            push(m, &mut family);
        }
        i += 1;
    }
    let closed = family.len();
    for k in 0..closed {
        let c = g.centralizer(&family[k]);
        push(c, &mut family);
    }

    let measures: Vec<u64> = family.iter().map(|h| cd_measure(g, h)).collect();
    let max_measure = *measures.iter().max().expect("G is always a candidate");
    let mut members: Vec<Subgroup> = family
        .into_iter()
        .zip(measures)
        .filter(|&(_, m)| m == max_measure)
        .map(|(h, _)| h)
        .collect();
    members.sort_by_key(|h| h.sort_key());

    let index: HashMap<FixedBitSet, usize> = members
        .iter()
        .enumerate()
        .map(|(i, h)| (h.members().clone(), i))
        .collect();
    let dual = members
        .iter()
        .map(|h| {
            *index
                .get(g.centralizer(h).members())
                .expect("the centralizer of a member is a member")
        })
        .collect();
    let least = 0;
    let greatest = members.len() - 1;
    CdLattice {
        max_measure,
        members,
        dual,
        least,
        greatest,
    }
}

/// `CD(G) = {1, G}`; the trivial group counts.
pub fn is_cd_simple(g: &Group) -> bool {
    let l = cd_lattice(g);
    let trivial = g.trivial_subgroup();
    let whole = g.whole();
    l.members.iter().all(|m| *m == trivial || *m == whole)
        && l.members.contains(&trivial)
        && l.members.contains(&whole)
}

/// Outcome of checking the structural identities on a computed lattice.
#[derive(Debug, Clone, Default)]
pub struct IdentityReport {
    pub members: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

/// Checks the lattice identities on `lattice` (computed for `g`):
/// products are joins and members, duality is an order-reversing
/// involution, `C(H n K) = C(H)C(K)`, `C(C(H)) = H`, the least member is
/// abelian, normal and contains `Z(G)`, covering pairs are normal
/// inclusions, and the lattice is modular.
pub fn verify_lattice_identities(g: &Group, lattice: &CdLattice) -> IdentityReport {
    let mut r = IdentityReport {
        members: lattice.len(),
        ..Default::default()
    };
    let ms = &lattice.members;
    let n = ms.len();
    let index: HashMap<&FixedBitSet, usize> = ms
        .iter()
        .enumerate()
        .map(|(i, h)| (h.members(), i))
        .collect();

    for (i, h) in ms.iter().enumerate() {
        r.check(cd_measure(g, h) == lattice.max_measure, || {
            format!("member {i} does not attain m*")
        });
        let c = g.centralizer(h);
        r.check(index.contains_key(c.members()), || {
            format!("C(H) of member {i} is not a member")
        });
        r.check(g.centralizer(&c) == *h, || {
            format!("C(C(H)) != H for member {i}")
        });
        let d = lattice.dual[i];
        r.check(lattice.dual[d] == i, || {
            format!("duality is not an involution at {i}")
        });
    }

    let mut join = vec![vec![usize::MAX; n]; n];
    let mut meet = vec![vec![usize::MAX; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (h, k) = (&ms[a], &ms[b]);
            let prod = g.product_set(h, k);
            let j = g.join(h, k);
            r.check(&prod == j.members(), || {
                format!("HK is not the join for members {a}, {b}")
            });
            match index.get(j.members()) {
                Some(&x) => join[a][b] = x,
                None => r.check(false, || format!("join of {a}, {b} is not a member")),
            }
            let m = h.intersection(k);
            match index.get(m.members()) {
                Some(&x) => meet[a][b] = x,
                None => r.check(false, || format!("meet of {a}, {b} is not a member")),
            }
            let ch = g.centralizer(h);
            let ck = g.centralizer(k);
            let cm = g.centralizer(&m);
            r.check(&g.product_set(&ch, &ck) == cm.members(), || {
                format!("C(H n K) != C(H)C(K) for members {a}, {b}")
            });
            if lattice.leq(a, b) {
                r.check(lattice.leq(lattice.dual[b], lattice.dual[a]), || {
                    format!("duality does not reverse {a} <= {b}")
                });
            }
        }
    }

    let least = &ms[lattice.least];
    r.check(ms.iter().all(|h| least.is_subset(h)), || {
        "least member is not least".into()
    });
    r.check(g.is_abelian(least), || "least member is not abelian".into());
    r.check(g.is_normal(least), || "least member is not normal".into());
    r.check(g.center().is_subset(least), || {
        "least member misses Z(G)".into()
    });
    r.check(lattice.dual[lattice.least] == lattice.greatest, || {
        "greatest member is not the dual of the least".into()
    });

    for (a, b) in lattice.covers() {
        let k = &ms[b];
        let (kg, back) = g.subgroup_as_group(k).expect("member re-enumerates");
        let mut inner = FixedBitSet::with_capacity(kg.order());
        for (i, &x) in back.iter().enumerate() {
            if ms[a].contains(x) {
                inner.insert(i);
            }
        }
        let h_in_k = kg
            .check_subgroup(inner)
            .expect("member restricts to a subgroup");
        r.check(kg.is_normal(&h_in_k), || {
            format!("covering pair {a} < {b} is not a normal inclusion")
        });
    }

    if join.iter().flatten().all(|&x| x != usize::MAX)
        && meet.iter().flatten().all(|&x| x != usize::MAX)
    {
        for a in 0..n {
            for c in 0..n {
                if !lattice.leq(a, c) {
                    continue;
                }
                for b in 0..n {
                    // a <= c implies a v (b ^ c) = (a v b) ^ c
                    let lhs = join[a][meet[b][c]];
                    let rhs = meet[join[a][b]][c];
                    r.check(lhs == rhs, || {
                        format!("modular law fails for ({a}, {b}, {c})")
                    });
                }
            }
        }
    }
    r
}

/// Checks `CD(G1 x G2) = CD(G1) x CD(G2)` and `m*(G1 x G2) = m*(G1) m*(G2)`
/// on the concrete direct product.
pub fn product_lattice_check(g1: &Group, g2: &Group) -> Result<Verdict> {
    let (p, e1, e2) = Group::direct_product(g1, g2)?;
    let (l1, l2, lp) = (cd_lattice(g1), cd_lattice(g2), cd_lattice(&p));
    let mut failures = Vec::new();
    if lp.max_measure != l1.max_measure * l2.max_measure {
        failures.push(format!(
            "m* = {} instead of {} * {}",
            lp.max_measure, l1.max_measure, l2.max_measure
        ));
    }
    let mut expected: Vec<Subgroup> = Vec::new();
    for h in &l1.members {
        for k in &l2.members {
            let mut seeds: Vec<usize> = h.iter().map(|x| e1[x]).collect();
            seeds.extend(k.iter().map(|y| e2[y]));
            expected.push(p.closure(&seeds));
        }
    }
    expected.sort_by_key(|h| h.sort_key());
    if expected != lp.members {
        failures.push(format!(
            "{} members instead of the {} products of members",
            lp.len(),
            expected.len()
        ));
    }
    Ok(Verdict::from_failures(failures))
}
