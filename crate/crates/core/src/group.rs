//! Finite permutation groups with a fully enumerated element table.
//!
//! Every group is enumerated breadth-first from the identity, using its
//! generators in the order given, so element indices are reproducible. Index 0
//! is always the identity. Subgroups are membership masks over those indices.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

/// Orders up to this size get a full multiplication table.
const TABLE_CAP: usize = 2_500;

/// Default cap for the brute-force subgroup oracle.
pub const ALL_SUBGROUPS_CAP: usize = 48;

/// The enumeration cap, honouring `CDTOOL_ELEMENT_CAP` when set.
pub fn element_cap() -> usize {
    std::env::var("CDTOOL_ELEMENT_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ELEMENT_CAP)
}

/// A subgroup, stored as a membership mask over its parent's element table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: FixedBitSet,
    order: usize,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order, self.elements())
    }
}

impl Subgroup {
    fn from_mask(members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        Subgroup { members, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Subgroup::from_mask(m)
    }

    /// Sort key: order first, then the sorted element list.
    pub fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.order, self.elements())
    }
}

/// Incremental closure: a subgroup that can absorb new generators.
struct Closure {
    mask: FixedBitSet,
    list: Vec<usize>,
    gens: Vec<usize>,
}

impl Closure {
    fn trivial(n: usize) -> Self {
        let mut mask = FixedBitSet::with_capacity(n);
        mask.insert(0);
        Closure {
            mask,
            list: vec![0],
            gens: Vec::new(),
        }
    }

    fn from_subgroup(h: &Subgroup, gens: Vec<usize>) -> Self {
        Closure {
            mask: h.members.clone(),
            list: h.elements(),
            gens,
        }
    }

    /// Adds `g` and re-closes. Old elements only need multiplying by `g`;
    /// new elements get every generator.
    fn add(&mut self, g: &Group, x: usize) -> bool {
        if self.mask.contains(x) {
            return false;
        }
        self.gens.push(x);
        let old = self.list.len();
        for i in 0..old {
            let y = g.mul(self.list[i], x);
            if !self.mask.contains(y) {
                self.mask.insert(y);
                self.list.push(y);
            }
        }
        let mut head = old;
        while head < self.list.len() {
            let a = self.list[head];
            for k in 0..self.gens.len() {
                let y = g.mul(a, self.gens[k]);
                if !self.mask.contains(y) {
                    self.mask.insert(y);
                    self.list.push(y);
                }
            }
            head += 1;
        }
        true
    }

    fn into_subgroup(self) -> Subgroup {
        Subgroup {
            order: self.list.len(),
            members: self.mask,
        }
    }
}

pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    gen_index: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, u32>,
    /// BFS tree: element j = elements[parent.0] * generators[parent.1].
    parent: Vec<(u32, u32)>,
    right_gen: Vec<u32>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
    classes: OnceLock<Vec<Vec<usize>>>,
    normals: OnceLock<Vec<Subgroup>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl Group {
    /// Enumerates the group generated by `generators` under the default cap.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        Self::generate_with_cap(degree, generators, element_cap())
    }

    pub fn generate_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let ngens = generators.len();
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut lookup = HashMap::new();
        lookup.insert(id, 0u32);
        let mut parent = vec![(0u32, u32::MAX)];
        let mut right_gen: Vec<u32> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for (s, g) in generators.iter().enumerate() {
                let y = elements[head].then(g);
                let idx = match lookup.get(&y) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::GroupTooLarge {
                                cap,
                                partial: elements.len(),
                            });
                        }
                        let i = elements.len() as u32;
                        lookup.insert(y.clone(), i);
                        elements.push(y);
                        parent.push((head as u32, s as u32));
                        i
                    }
                };
                right_gen.push(idx);
            }
            head += 1;
        }
        debug_assert_eq!(right_gen.len(), elements.len() * ngens);
        let gen_index = generators.iter().map(|g| lookup[g] as usize).collect();
        let inverse = elements.iter().map(|e| lookup[&e.inverse()]).collect();
        let mut group = Group {
            degree,
            generators,
            gen_index,
            elements,
            lookup,
            parent,
            right_gen,
            inverse,
            table: None,
            classes: OnceLock::new(),
            normals: OnceLock::new(),
        };
        if group.order() <= TABLE_CAP {
            group.table = Some(group.build_table());
        }
        Ok(group)
    }

    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let k = self.generators.len();
        let mut t = vec![0u32; n * n];
        for i in 0..n {
            let row = i * n;
            t[row] = i as u32;
            for j in 1..n {
                let (pj, s) = self.parent[j];
                let a = t[row + pj as usize] as usize;
                t[row + j] = self.right_gen[a * k + s as usize];
            }
        }
        t
    }

    pub fn trivial(degree: usize) -> Group {
        Self::generate(degree.max(1), Vec::new()).expect("trivial group always enumerates")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_index
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).map(|&i| i as usize)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.lookup[&self.elements[a].then(&self.elements[b])] as usize,
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Walks the BFS tree to map every element through a homomorphism that
    /// is known on the generators. `op` multiplies in the target.
    pub fn extend_on_generators<F>(&self, gen_images: &[usize], op: F) -> Vec<usize>
    where
        F: Fn(usize, usize) -> usize,
    {
        let mut image = vec![0usize; self.order()];
        for j in 1..self.order() {
            let (pj, s) = self.parent[j];
            image[j] = op(image[pj as usize], gen_images[s as usize]);
        }
        image
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order()).map(|x| self.element_order(x)).collect()
    }

    pub fn whole(&self) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(self.order());
        m.insert_range(..);
        Subgroup::from_mask(m)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(self.order());
        m.insert(0);
        Subgroup::from_mask(m)
    }

    pub fn is_whole(&self, h: &Subgroup) -> bool {
        h.order() == self.order()
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, seeds: &[usize]) -> Subgroup {
        let mut c = Closure::trivial(self.order());
        for &x in seeds {
            c.add(self, x);
        }
        c.into_subgroup()
    }

    pub fn cyclic_subgroup(&self, x: usize) -> Subgroup {
        self.closure(&[x])
    }

    /// Validates an element set as a subgroup.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut m = FixedBitSet::with_capacity(self.order());
        for &x in elements {
            if x >= self.order() {
                return Err(Error::NotASubgroup(format!(
                    "element index {x} out of range"
                )));
            }
            m.insert(x);
        }
        self.check_subgroup(m)
    }

    pub fn check_subgroup(&self, m: FixedBitSet) -> Result<Subgroup> {
        if m.len() != self.order() {
            return Err(Error::NotASubgroup(
                "mask length differs from group order".into(),
            ));
        }
        if !m.contains(0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for a in m.ones() {
            if !m.contains(self.inv(a)) {
                return Err(Error::NotASubgroup("not closed under inversion".into()));
            }
            for b in m.ones() {
                if !m.contains(self.mul(a, b)) {
                    return Err(Error::NotASubgroup("not closed under products".into()));
                }
            }
        }
        let h = Subgroup::from_mask(m);
        if self.order() % h.order() != 0 {
            return Err(Error::NotASubgroup(
                "order does not divide the group order".into(),
            ));
        }
        Ok(h)
    }

    /// A short generating sequence for `h`, picked greedily by decreasing
    /// element order.
    pub fn small_generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut cands: Vec<usize> = h.iter().filter(|&x| x != 0).collect();
        let orders: Vec<usize> = cands.iter().map(|&x| self.element_order(x)).collect();
        let mut idx: Vec<usize> = (0..cands.len()).collect();
        idx.sort_by(|&a, &b| orders[b].cmp(&orders[a]).then(cands[a].cmp(&cands[b])));
        cands = idx.into_iter().map(|i| cands[i]).collect();
        let mut c = Closure::trivial(self.order());
        for x in cands {
            if c.list.len() == h.order() {
                break;
            }
            c.add(self, x);
        }
        c.gens
    }

    pub fn centralizer_of_set(&self, set: &[usize]) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(self.order());
        for g in 0..self.order() {
            if set.iter().all(|&s| self.commute(g, s)) {
                m.insert(g);
            }
        }
        Subgroup::from_mask(m)
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.small_generating_set(h);
        self.centralizer_of_set(&gens)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_of_set(&self.gen_index)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.small_generating_set(h);
        let mut m = FixedBitSet::with_capacity(self.order());
        for g in 0..self.order() {
            if gens.iter().all(|&x| h.contains(self.conj(x, g))) {
                m.insert(g);
            }
        }
        Subgroup::from_mask(m)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let gens = self.small_generating_set(h);
        self.gen_index
            .iter()
            .all(|&g| gens.iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn is_abelian(&self, h: &Subgroup) -> bool {
        let gens = self.small_generating_set(h);
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_abelian_group(&self) -> bool {
        self.is_abelian(&self.whole())
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut m = FixedBitSet::with_capacity(self.order());
        for x in h.iter() {
            m.insert(self.conj(x, g));
        }
        Subgroup::from_mask(m)
    }

    /// The set `HK = { hk }`, not necessarily a subgroup.
    pub fn product_set(&self, h: &Subgroup, k: &Subgroup) -> FixedBitSet {
        let mut m = FixedBitSet::with_capacity(self.order());
        for a in h.iter() {
            for b in k.iter() {
                m.insert(self.mul(a, b));
            }
        }
        m
    }

    pub fn join(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        if k.is_subset(h) {
            return h.clone();
        }
        if h.is_subset(k) {
            return k.clone();
        }
        let mut c = Closure::from_subgroup(h, self.small_generating_set(h));
        for x in self.small_generating_set(k) {
            c.add(self, x);
        }
        c.into_subgroup()
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut seen = FixedBitSet::with_capacity(n);
            let mut classes = Vec::new();
            for x in 0..n {
                if seen.contains(x) {
                    continue;
                }
                seen.insert(x);
                let mut class = vec![x];
                let mut head = 0;
                while head < class.len() {
                    let y = class[head];
                    for &g in &self.gen_index {
                        let z = self.conj(y, g);
                        if !seen.contains(z) {
                            seen.insert(z);
                            class.push(z);
                        }
                    }
                    head += 1;
                }
                class.sort_unstable();
                classes.push(class);
            }
            classes
        })
    }

    /// Size of the conjugacy class of every element.
    pub fn class_sizes_by_element(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.order()];
        for c in self.conjugacy_classes() {
            for &x in c {
                sizes[x] = c.len();
            }
        }
        sizes
    }

    /// Smallest subgroup containing `seeds` and normalized by `conj_by`.
    pub fn normal_closure_in(&self, seeds: &[usize], conj_by: &[usize]) -> Subgroup {
        let mut c = Closure::trivial(self.order());
        for &x in seeds {
            c.add(self, x);
        }
        let mut i = 0;
        while i < c.gens.len() {
            let x = c.gens[i];
            for &g in conj_by {
                let y = self.conj(x, g);
                c.add(self, y);
            }
            i += 1;
        }
        c.into_subgroup()
    }

    pub fn normal_closure(&self, seeds: &[usize]) -> Subgroup {
        self.normal_closure_in(seeds, &self.gen_index.clone())
    }

    /// All normal subgroups, sorted by (order, elements). With
    /// `minimal_only`, just the minimal nontrivial ones.
    pub fn normal_subgroups(&self, minimal_only: bool) -> Vec<Subgroup> {
        let all = self.normals.get_or_init(|| self.compute_normal_subgroups());
        if minimal_only {
            let nontrivial: Vec<&Subgroup> = all.iter().filter(|h| !h.is_trivial()).collect();
            nontrivial
                .iter()
                .filter(|h| {
                    !nontrivial
                        .iter()
                        .any(|k| k.order() < h.order() && k.is_subset(h))
                })
                .map(|&h| h.clone())
                .collect()
        } else {
            all.clone()
        }
    }

    fn compute_normal_subgroups(&self) -> Vec<Subgroup> {
        // normal closures of single classes, with generators kept alongside
        // so joins can extend a closure instead of rebuilding it
        let base: Vec<(Subgroup, Vec<usize>)> = {
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for class in self.conjugacy_classes() {
                if class[0] == 0 {
                    continue;
                }
                let n = self.normal_closure(&class[..1]);
                if seen.insert(n.members.clone()) {
                    let gens = self.small_generating_set(&n);
                    out.push((n, gens));
                }
            }
            out
        };
        let mut all: Vec<(Subgroup, Vec<usize>)> = vec![(self.trivial_subgroup(), Vec::new())];
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        seen.insert(all[0].0.members.clone());
        let mut i = 0;
        while i < all.len() {
            for (b, bgens) in &base {
                let (cur, cur_gens) = &all[i];
                if b.is_subset(cur) {
                    continue;
                }
                // product of normal subgroups is a normal subgroup
                let mut c = Closure::from_subgroup(cur, cur_gens.clone());
                for &x in bgens {
                    c.add(self, x);
                }
                let gens = c.gens.clone();
                let j = c.into_subgroup();
                if seen.insert(j.members.clone()) {
                    all.push((j, gens));
                }
            }
            i += 1;
        }
        let mut all: Vec<Subgroup> = all.into_iter().map(|(h, _)| h).collect();
        all.sort_by_key(|h| h.sort_key());
        all
    }

    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = self.small_generating_set(h);
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_in(&comms, &gens)
    }

    /// Derived series starting at the whole group, ending where it stabilizes.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.derived_subgroup(last);
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .map(|h| h.is_trivial())
            .unwrap_or(true)
    }

    /// The full `p`-part of the group order.
    pub fn p_part(&self, p: usize) -> usize {
        let mut n = self.order();
        let mut part = 1;
        while p > 1 && n % p == 0 {
            n /= p;
            part *= p;
        }
        part
    }

    fn is_p_element(&self, x: usize, p: usize) -> bool {
        let mut o = self.element_order(x);
        while o % p == 0 {
            o /= p;
        }
        o == 1
    }

    /// A Sylow `p`-subgroup: start from a cyclic subgroup of maximal
    /// `p`-power order and extend by `p`-elements of the normalizer.
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        let target = self.p_part(p);
        if target == 1 {
            return self.trivial_subgroup();
        }
        let mut best = 0;
        let mut best_order = 1;
        for x in 0..self.order() {
            let o = self.element_order(x);
            if o > best_order && self.is_p_element(x, p) {
                best = x;
                best_order = o;
            }
        }
        let mut c = Closure::trivial(self.order());
        c.add(self, best);
        while c.list.len() < target {
            let current = Subgroup {
                members: c.mask.clone(),
                order: c.list.len(),
            };
            let norm = self.normalizer(&current);
            let ext = norm
                .iter()
                .find(|&g| !current.contains(g) && self.is_p_element(g, p))
                .expect("a p-subgroup below the Sylow order has p-elements in its normalizer");
            c.add(self, ext);
        }
        c.into_subgroup()
    }

    /// Every Sylow `p`-subgroup, as the conjugates of one of them.
    pub fn sylow_subgroups(&self, p: usize) -> Vec<Subgroup> {
        let p0 = self.sylow_subgroup(p);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in 0..self.order() {
            let c = self.conjugate_subgroup(&p0, g);
            if seen.insert(c.members.clone()) {
                out.push(c);
            }
        }
        out.sort_by_key(|h| h.sort_key());
        out
    }

    pub fn sylow_count(&self, p: usize) -> usize {
        let s = self.sylow_subgroup(p);
        self.order() / self.normalizer(&s).order()
    }

    /// Largest normal `p`-subgroup, as the intersection of all Sylow
    /// `p`-subgroups.
    pub fn o_p(&self, p: usize) -> Subgroup {
        let mut syl = self.sylow_subgroups(p).into_iter();
        let first = syl.next().expect("at least one Sylow subgroup");
        syl.fold(first, |acc, s| acc.intersection(&s))
    }

    /// The quotient by a normal subgroup, acting on the right cosets of `n`,
    /// together with the projection from element indices of `self`.
    pub fn quotient(&self, n: &Subgroup) -> Result<(Group, Vec<usize>)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let size = self.order();
        let mut coset = vec![usize::MAX; size];
        let mut reps = Vec::new();
        let nelems = n.elements();
        for x in 0..size {
            if coset[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &a in &nelems {
                coset[self.mul(a, x)] = id;
            }
        }
        let m = reps.len();
        let qgens: Vec<Permutation> = self
            .gen_index
            .iter()
            .map(|&g| {
                let images = reps.iter().map(|&r| coset[self.mul(r, g)] as u32).collect();
                Permutation::from_images(images).expect("coset action is a bijection")
            })
            .collect();
        let q = Group::generate(m, qgens)?;
        let qgen_idx = q.gen_index.clone();
        let proj = self.extend_on_generators(&qgen_idx, |a, b| q.mul(a, b));
        Ok((q, proj))
    }

    /// `G1 x G2` on `deg(G1) + deg(G2)` points, with both embeddings.
    pub fn direct_product(g1: &Group, g2: &Group) -> Result<(Group, Vec<usize>, Vec<usize>)> {
        let cap = element_cap();
        let total = g1.order().saturating_mul(g2.order());
        if total > cap {
            return Err(Error::GroupTooLarge {
                cap,
                partial: total,
            });
        }
        let d = g1.degree + g2.degree;
        let gens: Vec<Permutation> = g1
            .generators
            .iter()
            .map(|g| g.embed(d, 0))
            .chain(g2.generators.iter().map(|g| g.embed(d, g1.degree)))
            .collect();
        let prod = Group::generate_with_cap(d, gens, cap)?;
        let k1 = g1.generators.len();
        let e1 = g1.extend_on_generators(&prod.gen_index[..k1], |a, b| prod.mul(a, b));
        let e2 = g2.extend_on_generators(&prod.gen_index[k1..], |a, b| prod.mul(a, b));
        Ok((prod, e1, e2))
    }

    /// `h` re-enumerated as a standalone group on the same points, plus the
    /// map from its element indices back into `self`.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<(Group, Vec<usize>)> {
        let gens: Vec<Permutation> = self
            .small_generating_set(h)
            .into_iter()
            .map(|x| self.elements[x].clone())
            .collect();
        let sub = Group::generate(self.degree, gens)?;
        let back = sub
            .elements
            .iter()
            .map(|e| self.lookup[e] as usize)
            .collect();
        Ok((sub, back))
    }

    /// Every subgroup, by closing the cyclic subgroups under joins.
    /// Oracle use only; refuses groups above `cap`.
    pub fn all_subgroups_with_cap(&self, cap: usize) -> Result<Vec<Subgroup>> {
        if self.order() > cap {
            return Err(Error::CapExceeded {
                what: "subgroup oracle group",
                size: self.order(),
                cap,
            });
        }
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut cyclic = Vec::new();
        for x in 0..self.order() {
            let c = self.cyclic_subgroup(x);
            if seen.insert(c.members.clone()) {
                cyclic.push((x, c));
            }
        }
        let mut all: Vec<Subgroup> = cyclic.iter().map(|(_, c)| c.clone()).collect();
        let mut i = 0;
        while i < all.len() {
            let cur = all[i].clone();
            for (x, c) in &cyclic {
                if c.is_subset(&cur) {
                    continue;
                }
                let mut cl = Closure::from_subgroup(&cur, self.small_generating_set(&cur));
                cl.add(self, *x);
                let j = cl.into_subgroup();
                if seen.insert(j.members.clone()) {
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort_by_key(|h| h.sort_key());
        Ok(all)
    }

    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        self.all_subgroups_with_cap(ALL_SUBGROUPS_CAP)
    }

    /// Orbits of the group on its points, in BFS order from each smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut q = VecDeque::from([start]);
            while let Some(x) = q.pop_front() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                        q.push_back(y);
                    }
                }
            }
            out.push(orbit);
        }
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    pub fn s4() -> Group {
        Group::generate(4, vec![perm(4, &[&[1, 2]]), perm(4, &[&[1, 2, 3, 4]])]).unwrap()
    }

    pub fn klein_in_s4(g: &Group) -> Subgroup {
        let v: Vec<usize> = [
            perm(4, &[&[1, 2], &[3, 4]]),
            perm(4, &[&[1, 3], &[2, 4]]),
            perm(4, &[&[1, 4], &[2, 3]]),
        ]
        .iter()
        .map(|p| g.index_of(p).unwrap())
        .chain([0])
        .collect();
        g.subgroup_from_elements(&v).unwrap()
    }

    pub fn cyclic(n: usize) -> Group {
        let images: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        Group::generate(n, vec![Permutation::from_images(images).unwrap()]).unwrap()
    }

    fn a5() -> Group {
        Group::generate(
            5,
            vec![perm(5, &[&[1, 2, 3]]), perm(5, &[&[1, 2, 3, 4, 5]])],
        )
        .unwrap()
    }

    #[test]
    fn generation_examples() {
        assert_eq!(s4().order(), 24);
        let t = Group::generate(1, vec![]).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(cyclic(3).order(), 3);
        assert_eq!(a5().order(), 60);
    }

    #[test]
    fn generation_respects_cap() {
        let err = Group::generate_with_cap(
            5,
            vec![perm(5, &[&[1, 2]]), perm(5, &[&[1, 2, 3, 4, 5]])],
            50,
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::GroupTooLarge {
                cap: 50,
                partial: 50
            }
        );
    }

    #[test]
    fn generator_degree_mismatch() {
        assert!(Group::generate(4, vec![perm(3, &[&[1, 2]])]).is_err());
    }

    #[test]
    fn indexing_is_deterministic() {
        let a = s4();
        let b = s4();
        assert_eq!(a.elements(), b.elements());
        assert!(a.element(0).is_identity());
    }

    #[test]
    fn table_agrees_with_composition() {
        let g = s4();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let p = g.element(a).then(g.element(b));
                assert_eq!(g.index_of(&p).unwrap(), g.mul(a, b));
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = s4();
        let v = klein_in_s4(&g);
        assert_eq!(g.centralizer(&v), v);
        assert_eq!(g.centralizer_of_set(&[0]).order(), 24);
        assert!(g.center().is_trivial());
    }

    #[test]
    fn class_examples() {
        let g = s4();
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(cyclic(6).conjugacy_classes().len(), 6);
        assert_eq!(Group::trivial(1).conjugacy_classes().len(), 1);
    }

    #[test]
    fn normal_subgroup_examples() {
        let g = s4();
        let orders: Vec<usize> = g
            .normal_subgroups(false)
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        let min = g.normal_subgroups(true);
        assert_eq!(min.len(), 1);
        assert_eq!(min[0], klein_in_s4(&g));
        let c5 = cyclic(5);
        assert_eq!(c5.normal_subgroups(false).len(), 2);
    }

    #[test]
    fn sylow_examples() {
        let g = s4();
        assert_eq!(g.sylow_subgroup(2).order(), 8);
        assert_eq!(g.sylow_count(2), 3);
        assert_eq!(g.sylow_subgroup(3).order(), 3);
        assert_eq!(g.sylow_count(3), 4);
        assert!(g.sylow_subgroup(5).is_trivial());
        assert_eq!(g.sylow_count(5), 1);
        assert_eq!(g.sylow_subgroups(3).len(), 4);
        assert_eq!(g.o_p(2), klein_in_s4(&g));
    }

    #[test]
    fn quotient_examples() {
        let g = s4();
        let v = klein_in_s4(&g);
        let (q, proj) = g.quotient(&v).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian_group());
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
            }
            assert_eq!(proj[a] == 0, v.contains(a));
        }
        let (q1, _) = g.quotient(&g.trivial_subgroup()).unwrap();
        assert_eq!(q1.order(), 24);
        let (qg, _) = g.quotient(&g.whole()).unwrap();
        assert_eq!(qg.order(), 1);
        let s3 = g.sylow_subgroup(3);
        assert_eq!(g.quotient(&s3).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn direct_product_examples() {
        let g = s4();
        let (p, e1, e2) = Group::direct_product(&g, &g).unwrap();
        assert_eq!(p.order(), 576);
        for &a in e1.iter().step_by(5) {
            for &b in e2.iter().step_by(3) {
                assert!(p.commute(a, b));
            }
        }
        let c2 = cyclic(2);
        let (k, _, _) = Group::direct_product(&c2, &c2).unwrap();
        assert_eq!(k.order(), 4);
        assert!(k.is_abelian_group());
        assert!(k.element_orders().iter().all(|&o| o <= 2));
    }

    #[test]
    fn solvability() {
        assert!(s4().is_solvable());
        assert!(!a5().is_solvable());
        assert!(cyclic(7).is_solvable());
        assert!(Group::trivial(1).is_solvable());
    }

    #[test]
    fn subgroup_oracle_counts() {
        assert_eq!(s4().all_subgroups().unwrap().len(), 30);
        assert_eq!(cyclic(7).all_subgroups().unwrap().len(), 2);
        let c2 = cyclic(2);
        let (k, _, _) = Group::direct_product(&c2, &c2).unwrap();
        assert_eq!(k.all_subgroups().unwrap().len(), 5);
        assert!(a5().all_subgroups().is_err());
    }

    #[test]
    fn subgroup_validation() {
        let g = s4();
        let t = g.index_of(&perm(4, &[&[1, 2]])).unwrap();
        assert!(g.subgroup_from_elements(&[0, t]).is_ok());
        let c = g.index_of(&perm(4, &[&[1, 2, 3]])).unwrap();
        assert!(g.subgroup_from_elements(&[0, c]).is_err());
    }

    #[test]
    fn orbit_stabilizer() {
        let g = s4();
        for c in g.conjugacy_classes() {
            for &x in c {
                assert_eq!(c.len() * g.centralizer_of_set(&[x]).order(), g.order());
            }
        }
    }
}
