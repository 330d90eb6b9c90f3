//! Isomorphism testing for small groups: cheap invariants first, then a
//! backtracking search for generator images.

use crate::error::{Error, Result};
use crate::group::Group;

pub const ISOMORPHISM_CAP: usize = 2_000;

/// Invariants that any isomorphism preserves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub order: usize,
    pub order_histogram: Vec<(usize, usize)>,
    pub center: usize,
    pub class_sizes: Vec<usize>,
    pub derived_orders: Vec<usize>,
}

pub fn invariants(g: &Group) -> Invariants {
    let mut hist = std::collections::BTreeMap::new();
    for o in g.element_orders() {
        *hist.entry(o).or_insert(0usize) += 1;
    }
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    class_sizes.sort_unstable();
    Invariants {
        order: g.order(),
        order_histogram: hist.into_iter().collect(),
        center: g.center().order(),
        class_sizes,
        derived_orders: g.derived_series().iter().map(|h| h.order()).collect(),
    }
}

pub fn is_isomorphic(g1: &Group, g2: &Group) -> Result<bool> {
    is_isomorphic_with_cap(g1, g2, ISOMORPHISM_CAP)
}

pub fn is_isomorphic_with_cap(g1: &Group, g2: &Group, cap: usize) -> Result<bool> {
    for g in [g1, g2] {
        if g.order() > cap {
            return Err(Error::CapExceeded {
                what: "isomorphism test group",
                size: g.order(),
                cap,
            });
        }
    }
    if g1.order() != g2.order() {
        return Ok(false);
    }
    if invariants(g1) != invariants(g2) {
        return Ok(false);
    }
    Ok(find_isomorphism(g1, g2).is_some())
}

/// An isomorphism `g1 -> g2` as an element-index map, if one exists.
pub fn find_isomorphism(g1: &Group, g2: &Group) -> Option<Vec<usize>> {
    if g1.order() != g2.order() {
        return None;
    }
    let gens = g1.small_generating_set(&g1.whole());
    if gens.is_empty() {
        return Some(vec![0]);
    }
    let o1 = g1.element_orders();
    let o2 = g2.element_orders();
    let c1 = g1.class_sizes_by_element();
    let c2 = g2.class_sizes_by_element();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (0..g2.order())
                .filter(|&y| o2[y] == o1[x] && c2[y] == c1[x])
                .collect()
        })
        .collect();
    // Prefix subgroups <gens[..=k]> re-enumerated as their own groups, so a
    // partial assignment can be checked for being an injective homomorphism.
    let prefixes: Vec<Group> = (1..=gens.len())
        .map(|k| {
            let perms = gens[..k].iter().map(|&x| g1.element(x).clone()).collect();
            Group::generate(g1.degree(), perms).expect("subgroup of an enumerated group")
        })
        .collect();
    let mut chosen = Vec::with_capacity(gens.len());
    if search(g2, &prefixes, &candidates, &mut chosen) {
        let full = &prefixes[gens.len() - 1];
        let map = full.extend_on_generators(&chosen, |a, b| g2.mul(a, b));
        // re-index from the prefix group's table to g1's table
        let mut out = vec![0; g1.order()];
        for (i, &img) in map.iter().enumerate() {
            out[g1.index_of(full.element(i)).expect("same elements")] = img;
        }
        return Some(out);
    }
    None
}

fn search(
    g2: &Group,
    prefixes: &[Group],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> bool {
    let k = chosen.len();
    if k == candidates.len() {
        return true;
    }
    for &y in &candidates[k] {
        chosen.push(y);
        if is_injective_hom(&prefixes[k], g2, chosen) && search(g2, prefixes, candidates, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Checks that sending the generators of `src` to `images` defines an
/// injective homomorphism into `dst`: the map along the BFS tree must be
/// consistent on every Cayley-graph edge and hit `|src|` distinct elements.
fn is_injective_hom(src: &Group, dst: &Group, images: &[usize]) -> bool {
    let map = src.extend_on_generators(images, |a, b| dst.mul(a, b));
    let gens = src.generator_indices();
    for x in 0..src.order() {
        for (s, &g) in gens.iter().enumerate() {
            if map[src.mul(x, g)] != dst.mul(map[x], images[s]) {
                return false;
            }
        }
    }
    let mut hit = fixedbitset::FixedBitSet::with_capacity(dst.order());
    for &y in &map {
        if hit.contains(y) {
            return false;
        }
        hit.insert(y);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tests::{cyclic, perm, s4};

    #[test]
    fn examples() {
        let g = s4();
        assert!(is_isomorphic(&g, &g).unwrap());
        let c2 = cyclic(2);
        let (k4, _, _) = Group::direct_product(&c2, &c2).unwrap();
        assert!(!is_isomorphic(&cyclic(4), &k4).unwrap());
        // S4 on a different generating set
        let h = Group::generate(
            4,
            vec![
                perm(4, &[&[1, 2, 3]]),
                perm(4, &[&[1, 4]]),
                perm(4, &[&[2, 3]]),
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn c6_is_c2_times_c3() {
        let (p, _, _) = Group::direct_product(&cyclic(2), &cyclic(3)).unwrap();
        assert!(is_isomorphic(&p, &cyclic(6)).unwrap());
    }

    #[test]
    fn found_map_is_a_homomorphism() {
        let g = s4();
        let (p, _, _) = Group::direct_product(&g, &Group::trivial(1)).unwrap();
        let iso = find_isomorphism(&g, &p).unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(iso[g.mul(a, b)], p.mul(iso[a], iso[b]));
            }
        }
    }

    #[test]
    fn cap_is_explicit() {
        let g = s4();
        assert!(matches!(
            is_isomorphic_with_cap(&g, &g, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}
