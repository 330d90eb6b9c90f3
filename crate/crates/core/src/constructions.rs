//! Singer cycles, Frobenius maps, the affine groups `[V]K` built from them,
//! `GL(2, q)`, and a small library of named groups.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{
    vector_from_index, vector_index, FieldElement, FiniteField, LinearAutomorphism, ACTION_CAP,
};
use crate::group::{Group, Subgroup};
use crate::numtheory::AdmissibleParams;
use crate::perm::Permutation;
use crate::verdict::Verdict;

/// Matrix of `v -> t v` on the power basis of `f`, over the prime field.
pub fn multiplication_matrix(f: &FiniteField, t: FieldElement) -> LinearAutomorphism {
    let prime = FiniteField::prime_field(f.characteristic()).expect("characteristic is prime");
    let rows = (0..f.degree())
        .map(|i| {
            f.coeffs(f.mul(t, f.basis(i)))
                .into_iter()
                .map(FieldElement)
                .collect()
        })
        .collect();
    LinearAutomorphism::from_rows(&prime, rows).expect("multiplication by a unit is invertible")
}

/// Matrix of `v -> v^(p^k)` on the power basis of `f`, over the prime field.
pub fn frobenius_matrix(f: &FiniteField, k: u32) -> LinearAutomorphism {
    let prime = FiniteField::prime_field(f.characteristic()).expect("characteristic is prime");
    let e = (f.characteristic() as u64).pow(k);
    let rows = (0..f.degree())
        .map(|i| {
            f.coeffs(f.pow(f.basis(i), e))
                .into_iter()
                .map(FieldElement)
                .collect()
        })
        .collect();
    LinearAutomorphism::from_rows(&prime, rows).expect("field automorphisms are invertible")
}

/// Generator of the order-`d` subgroup of the Singer cycle of `f`.
pub fn singer_subgroup(f: &FiniteField, d: u64) -> Result<Vec<LinearAutomorphism>> {
    let units = f.size() as u64 - 1;
    if d == 0 || units % d != 0 {
        return Err(Error::InvalidParameters(format!(
            "{d} does not divide {units}"
        )));
    }
    let g = f.primitive_element();
    let t = f.pow(g, units / d);
    Ok(vec![multiplication_matrix(f, t)])
}

/// Generator of the order-`size` subgroup of the Galois group of `f`.
pub fn frobenius_subgroup(f: &FiniteField, size: u32) -> Result<Vec<LinearAutomorphism>> {
    if size == 0 || f.degree() % size != 0 {
        return Err(Error::InvalidParameters(format!(
            "{size} does not divide the degree {}",
            f.degree()
        )));
    }
    Ok(vec![frobenius_matrix(f, f.degree() / size)])
}

/// `true` iff for every nonzero `v`, the orbit of `v` under the group
/// generated by `matrices` spans the whole space.
pub fn module_irreducible(
    prime: &FiniteField,
    dim: usize,
    matrices: &[LinearAutomorphism],
) -> bool {
    let count = (prime.size() as usize).pow(dim as u32);
    (1..count).all(|k| {
        let v = vector_from_index(prime, dim, k);
        let orbit = orbit_of(prime, &v, matrices);
        span_rank(prime, &orbit) == dim
    })
}

fn orbit_of(
    field: &FiniteField,
    v: &[FieldElement],
    matrices: &[LinearAutomorphism],
) -> Vec<Vec<FieldElement>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![v.to_vec()];
    seen.insert(v.to_vec());
    let mut head = 0;
    while head < out.len() {
        for m in matrices {
            let w = m.apply(field, &out[head]);
            if seen.insert(w.clone()) {
                out.push(w);
            }
        }
        head += 1;
    }
    out
}

fn span_rank(field: &FiniteField, vectors: &[Vec<FieldElement>]) -> usize {
    let mut rows: Vec<Vec<FieldElement>> = vectors.to_vec();
    let Some(dim) = rows.first().map(|r| r.len()) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..dim {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col].0 != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
        for r in 0..rows.len() {
            if r == rank || rows[r][col].0 == 0 {
                continue;
            }
            let f = field.mul(rows[r][col], inv);
            for c in 0..dim {
                let t = field.mul(f, rows[rank][c]);
                rows[r][c] = field.sub(rows[r][c], t);
            }
        }
        rank += 1;
    }
    rank
}

/// The permutation of the `|field|^dim` vectors induced by `v -> v M`.
pub fn matrix_permutation(field: &FiniteField, m: &LinearAutomorphism) -> Permutation {
    let dim = m.dim();
    let count = (field.size() as usize).pow(dim as u32);
    let images = (0..count)
        .map(|k| {
            let v = vector_from_index(field, dim, k);
            vector_index(field, &m.apply(field, &v)) as u32
        })
        .collect();
    Permutation::from_images(images).expect("invertible matrices permute vectors")
}

fn translation_permutation(field: &FiniteField, dim: usize, shift: &[FieldElement]) -> Permutation {
    let count = (field.size() as usize).pow(dim as u32);
    let images = (0..count)
        .map(|k| {
            let v = vector_from_index(field, dim, k);
            let w: Vec<FieldElement> = v
                .iter()
                .zip(shift)
                .map(|(&a, &b)| field.add(a, b))
                .collect();
            vector_index(field, &w) as u32
        })
        .collect();
    Permutation::from_images(images).expect("translations permute vectors")
}

/// The affine group `[V]K` on the vectors of `V = field^dim`, where `K` is
/// generated by `matrices`. Point 1 is the zero vector.
pub fn affine_group(
    field: &FiniteField,
    dim: usize,
    matrices: &[LinearAutomorphism],
) -> Result<Group> {
    let count = (field.size() as u64).pow(dim as u32);
    if count > ACTION_CAP {
        return Err(Error::CapExceeded {
            what: "affine action degree",
            size: count as usize,
            cap: ACTION_CAP as usize,
        });
    }
    let mut gens = Vec::new();
    for i in 0..dim {
        let mut e = vec![field.zero(); dim];
        e[i] = field.one();
        gens.push(translation_permutation(field, dim, &e));
    }
    gens.extend(matrices.iter().map(|m| matrix_permutation(field, m)));
    Group::generate(count as usize, gens)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionMeta {
    Primitive { p: u64, q: u64, n: u32, r: u32 },
    GeneralLinear2 { q: u32 },
}

/// A permutation group together with the vectors its points stand for.
#[derive(Debug)]
pub struct ActionGroup {
    pub group: Group,
    /// `labels[point]` is the coordinate vector (over the acting field).
    pub labels: Vec<Vec<u32>>,
    pub meta: ConstructionMeta,
    /// Generators of the point stabilizer `K`, as matrices.
    pub complement: Vec<LinearAutomorphism>,
}

/// `[V]K` with `V = GF(p^n)` and `K = T H`, `T` the order-`q` subgroup of the
/// Singer cycle and `H` the order-`p^r` subgroup of the Galois group.
pub fn construct_primitive_group(p: u64, q: u64, n: u32, r: u32) -> Result<ActionGroup> {
    AdmissibleParams::new(p, BigUint::from(q), n, r)?;
    let f = FiniteField::new(p as u32, n)?;
    let prime = FiniteField::prime_field(p as u32)?;
    let mut k = singer_subgroup(&f, q)?;
    k.extend(frobenius_subgroup(&f, (p as u32).pow(r))?);
    let group = affine_group(&prime, n as usize, &k)?;
    let expected = (p as usize).pow(n) * q as usize * (p as usize).pow(r);
    if group.order() != expected {
        return Err(Error::Precondition(format!(
            "constructed group has order {} instead of {expected}",
            group.order()
        )));
    }
    let labels = (0..group.degree())
        .map(|k| f.coeffs(FieldElement(k as u32)))
        .collect();
    Ok(ActionGroup {
        group,
        labels,
        meta: ConstructionMeta::Primitive { p, q, n, r },
        complement: k,
    })
}

/// `GL(2, q)` acting on the `q^2 - 1` nonzero row vectors, with the
/// determinant of every element.
#[derive(Debug)]
pub struct GeneralLinear2 {
    pub action: ActionGroup,
    pub field: FiniteField,
    pub determinant: Vec<FieldElement>,
}

impl GeneralLinear2 {
    pub fn group(&self) -> &Group {
        &self.action.group
    }

    /// The determinant-1 subgroup.
    pub fn special_linear(&self) -> Subgroup {
        let sl: Vec<usize> = (0..self.group().order())
            .filter(|&i| self.determinant[i] == self.field.one())
            .collect();
        self.group()
            .subgroup_from_elements(&sl)
            .expect("kernel of the determinant")
    }

    pub fn matrix_of(&self, element: usize) -> LinearAutomorphism {
        let perm = self.group().element(element);
        let q = self.field.size() as usize;
        // e1 = (1, 0) is vector 1, e2 = (0, 1) is vector q; point = vector - 1
        let rows = [1usize, q]
            .iter()
            .map(|&v| vector_from_index(&self.field, 2, perm.apply(v - 1) + 1))
            .collect();
        LinearAutomorphism::from_rows(&self.field, rows).expect("group elements are invertible")
    }
}

pub const GL2_MAX_Q: u32 = 7;

pub fn general_linear_2(f: &FiniteField) -> Result<GeneralLinear2> {
    let q = f.size();
    if q > GL2_MAX_Q {
        return Err(Error::CapExceeded {
            what: "GL(2,q) field size",
            size: q as usize,
            cap: GL2_MAX_Q as usize,
        });
    }
    let (z, o) = (f.zero(), f.one());
    let g = f.primitive_element();
    let mats = [
        vec![vec![g, z], vec![z, o]],
        vec![vec![o, o], vec![z, o]],
        vec![vec![z, o], vec![o, z]],
    ];
    let mats: Vec<LinearAutomorphism> = mats
        .into_iter()
        .map(|rows| LinearAutomorphism::from_rows(f, rows))
        .collect::<Result<_>>()?;
    let points = (q * q - 1) as usize;
    let gens: Vec<Permutation> = mats
        .iter()
        .map(|m| {
            let images = (1..=points)
                .map(|k| {
                    let v = vector_from_index(f, 2, k);
                    (vector_index(f, &m.apply(f, &v)) - 1) as u32
                })
                .collect();
            Permutation::from_images(images).expect("invertible matrices permute nonzero vectors")
        })
        .collect();
    let group = Group::generate(points, gens)?;
    let labels = (1..=points)
        .map(|k| vector_from_index(f, 2, k).iter().map(|e| e.0).collect())
        .collect();
    let mut gl = GeneralLinear2 {
        action: ActionGroup {
            group,
            labels,
            meta: ConstructionMeta::GeneralLinear2 { q },
            complement: mats,
        },
        field: f.clone(),
        determinant: Vec::new(),
    };
    gl.determinant = (0..gl.group().order())
        .map(|i| gl.matrix_of(i).determinant(f))
        .collect();
    Ok(gl)
}

/// In `GL(2, q)`: exactly `q + 1` Sylow `p`-subgroups, pairwise trivial
/// intersections, and any two of them generate `SL(2, q)` of order
/// `q (q + 1) (q - 1)`.
pub fn gl2_sylow_structure(gl: &GeneralLinear2) -> Verdict {
    let g = gl.group();
    let q = gl.field.size() as usize;
    let p = gl.field.characteristic() as usize;
    let sl = gl.special_linear();
    let mut f = Vec::new();
    if sl.order() != q * (q + 1) * (q - 1) {
        f.push(format!("SL(2,{q}) has order {}", sl.order()));
    }
    let sylows = g.sylow_subgroups(p);
    if sylows.len() != q + 1 {
        f.push(format!(
            "{} Sylow {p}-subgroups instead of {}",
            sylows.len(),
            q + 1
        ));
    }
    for (i, s) in sylows.iter().enumerate() {
        for t in &sylows[i + 1..] {
            if !s.intersection(t).is_trivial() {
                f.push("two Sylow subgroups intersect nontrivially".into());
            }
            if g.join(s, t) != sl {
                f.push("two Sylow subgroups do not generate SL(2,q)".into());
            }
        }
    }
    f.dedup();
    Verdict::from_failures(f)
}

/// Subgroups of `GL(2, q)` with order divisible by `q` either have a normal
/// Sylow `p`-subgroup or contain `SL(2, q)`. Checks `SL`, `GL`, a Sylow
/// normalizer, and `samples` subgroups generated by one or two random
/// elements. Returns the verdict and how many subgroups were eligible.
pub fn gl2_sylow_dichotomy<R: rand::Rng>(
    gl: &GeneralLinear2,
    samples: usize,
    rng: &mut R,
) -> Result<(Verdict, usize)> {
    let g = gl.group();
    let q = gl.field.size() as usize;
    let p = gl.field.characteristic() as usize;
    let sl = gl.special_linear();
    let mut candidates = vec![sl.clone(), g.whole(), g.normalizer(&g.sylow_subgroup(p))];
    for _ in 0..samples {
        let k = rng.gen_range(1..=2);
        let seeds: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.order())).collect();
        candidates.push(g.closure(&seeds));
    }
    let mut eligible = 0;
    let mut f = Vec::new();
    for h in candidates.iter().filter(|h| h.order() % q == 0) {
        eligible += 1;
        let (hg, _) = g.subgroup_as_group(h)?;
        if hg.sylow_count(p) != 1 && !sl.is_subset(h) {
            f.push(format!(
                "subgroup of order {} has neither a normal Sylow {p} nor SL(2,{q})",
                h.order()
            ));
        }
    }
    Ok((Verdict::from_failures(f), eligible))
}

/// For a constructed `[V]K`: `|K| = q p^r > |V|`, the Sylow `q`-subgroup of
/// `K` is normal and irreducible on `V`, `O_p(K) = 1`, and `K` is irreducible.
pub fn complement_structure(a: &ActionGroup) -> Result<Verdict> {
    let ConstructionMeta::Primitive { p, q, n, r } = a.meta else {
        return Err(Error::Precondition("not a [V]K construction".into()));
    };
    let prime = FiniteField::prime_field(p as u32)?;
    let k = Group::generate(
        (p as usize).pow(n),
        a.complement
            .iter()
            .map(|m| matrix_permutation(&prime, m))
            .collect(),
    )?;
    let mut f = Vec::new();
    let want = q as usize * (p as usize).pow(r);
    if k.order() != want {
        f.push(format!("|K| = {} instead of {want}", k.order()));
    }
    if k.order() <= (p as usize).pow(n) {
        f.push("|K| does not exceed |V|".into());
    }
    if k.sylow_count(q as usize) != 1 {
        f.push("Sylow q-subgroup of K is not normal".into());
    }
    if !k.o_p(p as usize).is_trivial() {
        f.push("O_p(K) is nontrivial".into());
    }
    if !module_irreducible(&prime, n as usize, &a.complement) {
        f.push("K is reducible".into());
    }
    if !module_irreducible(&prime, n as usize, &a.complement[..1]) {
        f.push("T is reducible".into());
    }
    Ok(Verdict::from_failures(f))
}

/// Outcome of the brute-force normalizer computation inside `GL(n, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerReport {
    pub ambient_order: usize,
    pub normalizer_order: usize,
    pub expected_order: usize,
    pub contains_singer_cycle: bool,
    pub contains_frobenius: bool,
}

impl NormalizerReport {
    pub fn passed(&self) -> bool {
        self.normalizer_order == self.expected_order
            && self.contains_singer_cycle
            && self.contains_frobenius
    }
}

/// `(p, n)` pairs whose `GL(n, p)` is small enough to scan.
pub const NORMALIZER_AMBIENTS: [(u32, u32); 4] = [(2, 2), (2, 3), (2, 4), (3, 2)];

/// Scans all of `GL(n, p)` for the normalizer of the order-`d` Singer
/// subgroup, expecting order `(p^n - 1) n`.
pub fn singer_normalizer_check(f: &FiniteField, d: u64) -> Result<NormalizerReport> {
    let (p, n) = (f.characteristic(), f.degree());
    if !NORMALIZER_AMBIENTS.contains(&(p, n)) {
        return Err(Error::CapExceeded {
            what: "normalizer ambient GL(n,p)",
            size: (p as usize).pow(n * n),
            cap: 1 << 16,
        });
    }
    let prime = FiniteField::prime_field(p)?;
    let t = singer_subgroup(f, d)?.remove(0);
    let mut t_elems = std::collections::HashSet::new();
    let mut x = LinearAutomorphism::identity(&prime, n as usize);
    loop {
        t_elems.insert(x.clone());
        x = x.then(&prime, &t);
        if x.is_identity(&prime) {
            break;
        }
    }
    let singer = singer_subgroup(f, f.size() as u64 - 1)?.remove(0);
    let frob = frobenius_matrix(f, 1);
    let ambient = LinearAutomorphism::enumerate_invertible(&prime, n as usize);
    let normalizer: Vec<&LinearAutomorphism> = ambient
        .iter()
        .filter(|a| t_elems.contains(&a.inverse(&prime).then(&prime, &t).then(&prime, a)))
        .collect();
    Ok(NormalizerReport {
        ambient_order: ambient.len(),
        normalizer_order: normalizer.len(),
        expected_order: (f.size() as usize - 1) * n as usize,
        contains_singer_cycle: normalizer.iter().any(|&a| *a == singer),
        contains_frobenius: normalizer.iter().any(|&a| *a == frob),
    })
}

/// Named groups with fixed permutation realizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Cyclic(usize),
    /// Symmetries of the `n`-gon, order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Klein4,
    /// `[GF(2)^3] C_7`.
    Frobenius56,
    Elementary {
        p: u32,
        n: u32,
    },
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Cyclic(n) => write!(f, "cyclic:{n}"),
            Builtin::Dihedral(n) => write!(f, "dihedral:{n}"),
            Builtin::Symmetric(n) => write!(f, "symmetric:{n}"),
            Builtin::Alternating(n) => write!(f, "alternating:{n}"),
            Builtin::Klein4 => write!(f, "klein4"),
            Builtin::Frobenius56 => write!(f, "frobenius56"),
            Builtin::Elementary { p, n } => write!(f, "elementary:{p}^{n}"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    /// Accepts `cyclic:6`, `dihedral:4`, `symmetric:4`, `alternating:5`,
    /// `klein4`, `frobenius56`, `elementary:2^3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownBuiltin(s.to_string());
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s.trim(), None),
        };
        let num = |a: Option<&str>| -> Result<usize> {
            a.and_then(|x| x.parse().ok())
                .filter(|&k| k > 0)
                .ok_or_else(bad)
        };
        Ok(match name.to_ascii_lowercase().as_str() {
            "cyclic" => Builtin::Cyclic(num(arg)?),
            "dihedral" => Builtin::Dihedral(num(arg)?),
            "symmetric" => Builtin::Symmetric(num(arg)?),
            "alternating" => Builtin::Alternating(num(arg)?),
            "klein4" if arg.is_none() => Builtin::Klein4,
            "frobenius56" if arg.is_none() => Builtin::Frobenius56,
            "elementary" => {
                let (p, n) = arg.and_then(|a| a.split_once('^')).ok_or_else(bad)?;
                Builtin::Elementary {
                    p: p.parse().map_err(|_| bad())?,
                    n: n.parse().map_err(|_| bad())?,
                }
            }
            _ => return Err(bad()),
        })
    }
}

fn cycle_perm(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[&pts]).expect("valid cycle")
}

pub fn builtin_group(b: Builtin) -> Result<Group> {
    match b {
        Builtin::Cyclic(n) => Group::generate(n, vec![cycle_perm(n, 1..=n)]),
        Builtin::Dihedral(n) => match n {
            1 => builtin_group(Builtin::Cyclic(2)),
            2 => builtin_group(Builtin::Klein4),
            _ => {
                let refl: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
                Group::generate(
                    n,
                    vec![cycle_perm(n, 1..=n), Permutation::from_images(refl)?],
                )
            }
        },
        Builtin::Symmetric(n) => {
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(cycle_perm(n, [1, 2]));
            }
            if n >= 3 {
                gens.push(cycle_perm(n, 1..=n));
            }
            Group::generate(n, gens)
        }
        Builtin::Alternating(n) => {
            let mut gens = Vec::new();
            if n >= 3 {
                gens.push(cycle_perm(n, [1, 2, 3]));
            }
            if n >= 4 {
                if n % 2 == 1 {
                    gens.push(cycle_perm(n, 1..=n));
                } else {
                    gens.push(cycle_perm(n, 2..=n));
                }
            }
            Group::generate(n, gens)
        }
        Builtin::Klein4 => Group::generate(
            4,
            vec![
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]])?,
                Permutation::from_cycles(4, &[&[1, 3], &[2, 4]])?,
            ],
        ),
        Builtin::Frobenius56 => {
            let f = FiniteField::new(2, 3)?;
            let prime = FiniteField::prime_field(2)?;
            affine_group(&prime, 3, &singer_subgroup(&f, 7)?)
        }
        Builtin::Elementary { p, n } => {
            let prime = FiniteField::prime_field(p)?;
            affine_group(&prime, n as usize, &[])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;
    use crate::lattice::is_cd_simple;

    fn prime(p: u32) -> FiniteField {
        FiniteField::prime_field(p).unwrap()
    }

    fn matrix_group_order(field: &FiniteField, gens: &[LinearAutomorphism]) -> usize {
        let g = Group::generate(
            (field.size() as usize).pow(gens[0].dim() as u32),
            gens.iter().map(|m| matrix_permutation(field, m)).collect(),
        )
        .unwrap();
        g.order()
    }

    #[test]
    fn singer_examples() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let t = singer_subgroup(&f4, 3).unwrap();
        assert_eq!(matrix_group_order(&prime(2), &t), 3);
        assert!(module_irreducible(&prime(2), 2, &t));
        let f16 = FiniteField::new(2, 4).unwrap();
        let t5 = singer_subgroup(&f16, 5).unwrap();
        assert_eq!(t5[0].order(&prime(2)), 5);
        let one = singer_subgroup(&f16, 1).unwrap();
        assert!(one[0].is_identity(&prime(2)));
        assert!(singer_subgroup(&f16, 7).is_err());
    }

    #[test]
    fn singer_fixes_only_zero() {
        for (p, n, d) in [(2, 3, 7), (3, 2, 4), (2, 4, 15), (2, 4, 5)] {
            let f = FiniteField::new(p, n).unwrap();
            let t = singer_subgroup(&f, d).unwrap().remove(0);
            let pf = prime(p);
            assert_eq!(t.order(&pf), d);
            let perm = matrix_permutation(&pf, &t);
            let fixed = (0..perm.degree()).filter(|&k| perm.apply(k) == k).count();
            assert_eq!(fixed, 1);
        }
    }

    #[test]
    fn frobenius_examples() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let h = frobenius_subgroup(&f4, 2).unwrap();
        assert_eq!(h[0].order(&prime(2)), 2);
        let f16 = FiniteField::new(2, 4).unwrap();
        let h4 = frobenius_subgroup(&f16, 4).unwrap();
        assert_eq!(h4[0].order(&prime(2)), 4);
        assert!(frobenius_subgroup(&f16, 1).unwrap()[0].is_identity(&prime(2)));
        assert!(frobenius_subgroup(&f16, 3).is_err());
    }

    #[test]
    fn frobenius_conjugates_singer_to_pth_power() {
        for (p, n) in [(2, 4), (3, 3), (5, 2)] {
            let f = FiniteField::new(p, n).unwrap();
            let pf = prime(p);
            let phi = frobenius_matrix(&f, 1);
            for t in f.elements().skip(1).step_by(3) {
                let st = multiplication_matrix(&f, t);
                let conj = phi.inverse(&pf).then(&pf, &st).then(&pf, &phi);
                assert_eq!(conj, multiplication_matrix(&f, f.frobenius(t)));
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        let pf = prime(2);
        assert!(!module_irreducible(
            &pf,
            2,
            &[LinearAutomorphism::identity(&pf, 2)]
        ));
        for (p, n) in [(2, 3), (3, 2), (5, 1), (2, 4)] {
            let f = FiniteField::new(p, n).unwrap();
            let s = singer_subgroup(&f, f.size() as u64 - 1).unwrap();
            assert!(module_irreducible(&prime(p), n as usize, &s));
        }
        // order 3 inside GF(16)* lives in the GF(4) subfield
        let f16 = FiniteField::new(2, 4).unwrap();
        assert!(!module_irreducible(
            &pf,
            4,
            &singer_subgroup(&f16, 3).unwrap()
        ));
    }

    #[test]
    fn primitive_s4() {
        let a = construct_primitive_group(2, 3, 2, 1).unwrap();
        assert_eq!(a.group.order(), 24);
        let s4 = builtin_group(Builtin::Symmetric(4)).unwrap();
        assert!(is_isomorphic(&a.group, &s4).unwrap());
        assert!(module_irreducible(&prime(2), 2, &a.complement));
        assert!(construct_primitive_group(2, 7, 3, 1).is_err());
    }

    #[test]
    fn primitive_320() {
        let a = construct_primitive_group(2, 5, 4, 2).unwrap();
        assert_eq!(a.group.order(), 320);
        assert!(is_cd_simple(&a.group));
    }

    #[test]
    fn gl2_examples() {
        let gl2 = general_linear_2(&FiniteField::new(2, 1).unwrap()).unwrap();
        assert_eq!(gl2.group().order(), 6);
        let gl3 = general_linear_2(&FiniteField::new(3, 1).unwrap()).unwrap();
        assert_eq!(gl3.group().order(), 48);
        assert_eq!(gl3.special_linear().order(), 24);
        let gl4 = general_linear_2(&FiniteField::new(2, 2).unwrap()).unwrap();
        assert_eq!(gl4.group().order(), 180);
        assert_eq!(gl4.group().sylow_count(2), 5);
        assert!(general_linear_2(&FiniteField::new(2, 3).unwrap()).is_err());
    }

    #[test]
    fn gl2_sylow_suite() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let gl = general_linear_2(&FiniteField::new(p, n).unwrap()).unwrap();
            assert_eq!(
                gl2_sylow_structure(&gl),
                Verdict::Pass,
                "q = {}",
                gl.field.size()
            );
            let (v, eligible) = gl2_sylow_dichotomy(&gl, 30, &mut rng).unwrap();
            assert_eq!(v, Verdict::Pass);
            assert!(eligible >= 3);
        }
    }

    #[test]
    fn complements() {
        for (p, q, n, r) in [(2, 3, 2, 1), (2, 5, 4, 2), (3, 13, 3, 1)] {
            let a = construct_primitive_group(p, q, n, r).unwrap();
            assert_eq!(complement_structure(&a).unwrap(), Verdict::Pass);
        }
    }

    #[test]
    fn normalizer_examples() {
        let r = singer_normalizer_check(&FiniteField::new(2, 2).unwrap(), 3).unwrap();
        assert_eq!((r.ambient_order, r.normalizer_order), (6, 6));
        assert!(r.passed());
        let r = singer_normalizer_check(&FiniteField::new(2, 3).unwrap(), 7).unwrap();
        assert_eq!((r.ambient_order, r.normalizer_order), (168, 21));
        assert!(r.passed());
        assert!(singer_normalizer_check(&FiniteField::new(5, 2).unwrap(), 3).is_err());
    }

    #[test]
    fn builtins() {
        let order = |s: &str| builtin_group(s.parse().unwrap()).unwrap().order();
        assert_eq!(order("symmetric:4"), 24);
        assert_eq!(order("klein4"), 4);
        assert_eq!(order("frobenius56"), 56);
        assert_eq!(order("dihedral:5"), 10);
        assert_eq!(order("alternating:5"), 60);
        assert_eq!(order("alternating:4"), 12);
        assert_eq!(order("cyclic:1"), 1);
        assert_eq!(order("elementary:3^2"), 9);
        assert!("octonions".parse::<Builtin>().is_err());
        assert!("cyclic:0".parse::<Builtin>().is_err());
        let f56 = builtin_group(Builtin::Frobenius56).unwrap();
        let p7 = f56.sylow_subgroup(7);
        assert_eq!(f56.normalizer(&p7), p7);
    }
}
