//! GF(p^n) in the power basis, and matrices over such fields.
//!
//! A field element is stored as its coefficient vector packed into one
//! integer: `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`. The same packing numbers
//! the vectors of `GF(p)^n`, so element `k` is also vector `k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::is_prime_u64;

/// Default bound on `p^n` for fields used in permutation actions.
pub const ACTION_CAP: u64 = 4096;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    n: u32,
    size: u32,
    /// Monic modulus, constant term first, length `n + 1`.
    modulus: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) mod {}",
            self.p,
            self.n,
            poly_to_string(&self.modulus)
        )
    }
}

pub fn poly_to_string(c: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &a) in c.iter().enumerate().rev() {
        if a == 0 {
            continue;
        }
        let coeff = if a == 1 && i > 0 {
            String::new()
        } else {
            a.to_string()
        };
        let term = match i {
            0 => coeff,
            1 => format!("{coeff}x"),
            _ => format!("{coeff}x^{i}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Remainder of `a` modulo the monic `m`, over GF(p). Coefficients low first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = (lead * c) % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomials of degree `d` over GF(p), ordered by their
/// coefficient tuples compared constant term first.
fn monic_polys(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d);
    (0..count).map(move |k| {
        // digit 0 is most significant so the order is lex from the constant term
        let mut c = vec![0u32; d as usize + 1];
        let mut x = k;
        for i in (0..d as usize).rev() {
            c[i] = (x % p as u64) as u32;
            x /= p as u64;
        }
        c[d as usize] = 1;
        c
    })
}

/// Irreducible iff it has no monic factor of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() as u32 - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for f in monic_polys(p, d) {
            if poly_rem(poly, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// GF(p^n) with the smallest monic irreducible modulus in
    /// constant-term-first lexicographic order.
    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::with_cap(p, n, ACTION_CAP)
    }

    pub fn with_cap(p: u32, n: u32, cap: u64) -> Result<Self> {
        if !is_prime_u64(p as u64) {
            return Err(Error::InvalidParameters(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::InvalidParameters(
                "field degree must be positive".into(),
            ));
        }
        let size = (p as u64)
            .checked_pow(n)
            .filter(|&s| s <= cap)
            .ok_or(Error::CapExceeded {
                what: "field size",
                size: (p as u64).saturating_pow(n) as usize,
                cap: cap as usize,
            })?;
        let modulus = monic_polys(p, n)
            .find(|f| is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree");
        Ok(FiniteField {
            p,
            n,
            size: size as u32,
            modulus,
        })
    }

    pub fn prime_field(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size).map(FieldElement)
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut c = vec![0u32; self.n as usize];
        let mut x = a.0;
        for ci in c.iter_mut() {
            *ci = x % self.p;
            x /= self.p;
        }
        c
    }

    pub fn from_coeffs(&self, c: &[u32]) -> FieldElement {
        let mut x = 0u32;
        for &ci in c.iter().take(self.n as usize).rev() {
            x = x * self.p + ci % self.p;
        }
        FieldElement(x)
    }

    /// The element `x^i` of the power basis.
    pub fn basis(&self, i: u32) -> FieldElement {
        let mut c = vec![0u32; i as usize + 1];
        c[i as usize] = 1;
        self.from_coeffs(&poly_rem(&c, &self.modulus, self.p))
    }

    pub fn from_int(&self, k: u32) -> FieldElement {
        FieldElement(k % self.p)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let c: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_coeffs(&c)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let c: Vec<u32> = self
            .coeffs(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.from_coeffs(&c)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u32; 2 * self.n as usize];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.from_coeffs(&poly_rem(&prod, &self.modulus, self.p))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a.0 != 0).then(|| self.pow(a, self.size as u64 - 2))
    }

    /// Frobenius map `v -> v^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let mut k = 1;
        let mut x = a;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Smallest generator of the unit group, comparing coefficient vectors
    /// constant term first.
    pub fn primitive_element(&self) -> FieldElement {
        let target = self.size as u64 - 1;
        let mut cands: Vec<FieldElement> = self.elements().skip(1).collect();
        cands.sort_by_key(|&a| self.coeffs(a));
        cands
            .into_iter()
            .find(|&a| self.multiplicative_order(a) == Some(target))
            .expect("the unit group is cyclic")
    }
}

/// An invertible square matrix over a finite field, acting on row vectors
/// from the right: `v -> v M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearAutomorphism {
    dim: usize,
    entries: Vec<FieldElement>,
}

impl fmt::Debug for LinearAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<u32>> = (0..self.dim)
            .map(|i| self.row(i).iter().map(|e| e.0).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

impl LinearAutomorphism {
    pub fn from_rows(field: &FiniteField, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameters(
                "matrix must be square and nonempty".into(),
            ));
        }
        let m = LinearAutomorphism {
            dim,
            entries: rows.into_iter().flatten().collect(),
        };
        if m.determinant(field).0 == 0 {
            return Err(Error::InvalidParameters("matrix is singular".into()));
        }
        Ok(m)
    }

    /// Skips the singularity check; used by the enumerators that filter
    /// afterwards.
    fn raw(dim: usize, entries: Vec<FieldElement>) -> Self {
        LinearAutomorphism { dim, entries }
    }

    pub fn identity(field: &FiniteField, dim: usize) -> Self {
        let mut e = vec![field.zero(); dim * dim];
        for i in 0..dim {
            e[i * dim + i] = field.one();
        }
        LinearAutomorphism::raw(dim, e)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    /// `self` then `other`, i.e. the matrix product `self * other`.
    pub fn then(&self, field: &FiniteField, other: &LinearAutomorphism) -> LinearAutomorphism {
        let d = self.dim;
        let mut e = vec![field.zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = field.zero();
                for k in 0..d {
                    acc = field.add(acc, field.mul(self.get(i, k), other.get(k, j)));
                }
                e[i * d + j] = acc;
            }
        }
        LinearAutomorphism::raw(d, e)
    }

    pub fn apply(&self, field: &FiniteField, v: &[FieldElement]) -> Vec<FieldElement> {
        (0..self.dim)
            .map(|j| {
                (0..self.dim).fold(field.zero(), |acc, i| {
                    field.add(acc, field.mul(v[i], self.get(i, j)))
                })
            })
            .collect()
    }

    pub fn determinant(&self, field: &FiniteField) -> FieldElement {
        // Gaussian elimination
        let d = self.dim;
        let mut m: Vec<Vec<FieldElement>> = (0..d).map(|i| self.row(i).to_vec()).collect();
        let mut det = field.one();
        for col in 0..d {
            let Some(piv) = (col..d).find(|&r| m[r][col].0 != 0) else {
                return field.zero();
            };
            if piv != col {
                m.swap(piv, col);
                det = field.neg(det);
            }
            det = field.mul(det, m[col][col]);
            let inv = field.inv(m[col][col]).expect("pivot is nonzero");
            for r in col + 1..d {
                let factor = field.mul(m[r][col], inv);
                if factor.0 == 0 {
                    continue;
                }
                for c in col..d {
                    let t = field.mul(factor, m[col][c]);
                    m[r][c] = field.sub(m[r][c], t);
                }
            }
        }
        det
    }

    pub fn inverse(&self, field: &FiniteField) -> LinearAutomorphism {
        let d = self.dim;
        let mut a: Vec<Vec<FieldElement>> = (0..d).map(|i| self.row(i).to_vec()).collect();
        let mut b: Vec<Vec<FieldElement>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| a[r][col].0 != 0)
                .expect("automorphisms are invertible");
            a.swap(piv, col);
            b.swap(piv, col);
            let inv = field.inv(a[col][col]).expect("pivot is nonzero");
            for c in 0..d {
                a[col][c] = field.mul(a[col][c], inv);
                b[col][c] = field.mul(b[col][c], inv);
            }
            for r in 0..d {
                if r == col || a[r][col].0 == 0 {
                    continue;
                }
                let f = a[r][col];
                for c in 0..d {
                    let ta = field.mul(f, a[col][c]);
                    let tb = field.mul(f, b[col][c]);
                    a[r][c] = field.sub(a[r][c], ta);
                    b[r][c] = field.sub(b[r][c], tb);
                }
            }
        }
        LinearAutomorphism::raw(d, b.into_iter().flatten().collect())
    }

    pub fn is_identity(&self, field: &FiniteField) -> bool {
        *self == LinearAutomorphism::identity(field, self.dim)
    }

    pub fn order(&self, field: &FiniteField) -> u64 {
        let mut k = 1;
        let mut x = self.clone();
        while !x.is_identity(field) {
            x = x.then(field, self);
            k += 1;
        }
        k
    }

    /// All `dim x dim` matrices over `field` with nonzero determinant.
    pub fn enumerate_invertible(field: &FiniteField, dim: usize) -> Vec<LinearAutomorphism> {
        let q = field.size() as u64;
        let total = q.pow((dim * dim) as u32);
        (0..total)
            .filter_map(|mut k| {
                let mut e = Vec::with_capacity(dim * dim);
                for _ in 0..dim * dim {
                    e.push(FieldElement((k % q) as u32));
                    k /= q;
                }
                let m = LinearAutomorphism::raw(dim, e);
                (m.determinant(field).0 != 0).then_some(m)
            })
            .collect()
    }
}

/// Packs a vector over GF(q) into a point number, base `q`, coordinate 0 first.
pub fn vector_index(field: &FiniteField, v: &[FieldElement]) -> usize {
    v.iter()
        .rev()
        .fold(0usize, |acc, &x| acc * field.size() as usize + x.0 as usize)
}

pub fn vector_from_index(field: &FiniteField, dim: usize, mut k: usize) -> Vec<FieldElement> {
    let q = field.size() as usize;
    (0..dim)
        .map(|_| {
            let x = FieldElement((k % q) as u32);
            k /= q;
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn moduli() {
        let f4 = FiniteField::new(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let f7 = FiniteField::new(7, 1).unwrap();
        assert_eq!(f7.modulus(), &[0, 1]);
        let f27 = FiniteField::new(3, 3).unwrap();
        assert_eq!(f27.size(), 27);
        let g = f27.primitive_element();
        assert_eq!(f27.multiplicative_order(g), Some(26));
        // x^3 + x^2 + 1 precedes x^3 + x + 1 constant term first
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FiniteField::new(4, 1).is_err());
        assert!(FiniteField::new(2, 13).is_err());
        assert!(FiniteField::new(2, 0).is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2)); // (x+1)^2
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
    }

    #[test]
    fn matrices() {
        let f = FiniteField::new(3, 1).unwrap();
        let e = |k| FieldElement(k);
        let m =
            LinearAutomorphism::from_rows(&f, vec![vec![e(1), e(2)], vec![e(0), e(1)]]).unwrap();
        assert_eq!(m.determinant(&f), e(1));
        assert!(m.then(&f, &m.inverse(&f)).is_identity(&f));
        assert_eq!(m.order(&f), 3);
        assert!(
            LinearAutomorphism::from_rows(&f, vec![vec![e(1), e(2)], vec![e(2), e(1)]]).is_err()
        );
        assert_eq!(LinearAutomorphism::enumerate_invertible(&f, 2).len(), 48);
        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(LinearAutomorphism::enumerate_invertible(&f2, 3).len(), 168);
    }

    fn field_and_elems() -> impl Strategy<Value = (u32, u32, u32, u32, u32)> {
        prop_oneof![
            Just((2u32, 4u32)),
            Just((3, 3)),
            Just((5, 2)),
            Just((2, 6)),
            Just((7, 1))
        ]
        .prop_flat_map(|(p, n)| {
            let size = p.pow(n);
            (Just(p), Just(n), 0..size, 0..size, 0..size)
        })
    }

    proptest! {
        #[test]
        fn field_axioms((p, n, a, b, c) in field_and_elems()) {
            let f = FiniteField::new(p, n).unwrap();
            let (a, b, c) = (FieldElement(a), FieldElement(b), FieldElement(c));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
            if let Some(ai) = f.inv(a) {
                prop_assert_eq!(f.mul(a, ai), f.one());
            }
            prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            prop_assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
            let mut x = a;
            for _ in 0..n {
                x = f.frobenius(x);
            }
            prop_assert_eq!(x, a);
        }
    }
}
