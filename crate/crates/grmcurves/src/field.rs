//! Exact arithmetic in the tower `F_p ⊂ F_q ⊂ F_{q^m}` with `q = p^e`.
//!
//! The big field `F_{q^m}` is modelled as `F_p[z]/(modulus_big)` where
//! `modulus_big` is the lexicographically smallest monic irreducible of
//! degree `e·m` (coefficients compared from the constant term upward), so
//! two towers built from the same `(p, e, m)` are identical. Elements are
//! coefficient vectors with respect to the power basis of `z`, and the
//! element with index `i` has the base-`p` digits of `i` as coefficients.

use std::collections::HashSet;
use std::fmt;

use crate::{Error, Result};

/// Default cap on the size of the top field `q^m`.
pub const DEFAULT_SIZE_CAP: u128 = 1 << 20;

/// Exhaustive-verification threshold: transformations whose contracts call
/// for pointwise checks run them whenever the top field has at most this
/// many elements.
pub const VERIFY_CAP: u64 = 1 << 12;

/// Enumeration order for the `q` elements of `F_q` (the `α_t`).
///
/// `Descending` lists `q−1, q−2, …, 0` (by element index), which for `e = 1`
/// is the enumeration `{p−1, p−2, …, 0}` used throughout the worked
/// instances; `Ascending` is the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaOrder {
    Descending,
    Ascending,
}

/// An element of the top field, as coefficients (mod `p`) with respect to
/// the power basis of the defining modulus. Arithmetic lives on
/// [`FieldTower`], which owns the modulus.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    /// Coefficients with respect to the power basis, constant term first.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fel{:?}", self.coeffs)
    }
}

/// A subfield of the top field, identified by its degree over `F_p`.
/// Construct via [`FieldTower::subfield`] and friends; the degree always
/// divides `e·m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subfield {
    degree: usize,
}

impl Subfield {
    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// The tower `F_p ⊂ F_q ⊂ F_{q^m}` with a fixed defining modulus and a
/// fixed enumeration of `F_q`.
#[derive(Clone, Debug)]
pub struct FieldTower {
    p: u64,
    e: usize,
    m: usize,
    modulus_big: Vec<u64>,
    /// Powers of the embedded generator of F_q (length e), used to embed
    /// base-field integers. For e = 1 this is just [1].
    base_powers: Vec<FieldElement>,
    alpha: Vec<FieldElement>,
}

/// Build the tower with the default α-order (descending) and size cap.
pub fn build_tower(p: u64, e: usize, m: usize) -> Result<FieldTower> {
    FieldTower::build(p, e, m, AlphaOrder::Descending, DEFAULT_SIZE_CAP)
}

impl FieldTower {
    pub fn build(p: u64, e: usize, m: usize, order: AlphaOrder, cap: u128) -> Result<FieldTower> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 || m == 0 {
            return Err(Error::BadParameter("degrees must be at least 1".into()));
        }
        let size = (p as u128).checked_pow((e * m) as u32);
        match size {
            Some(s) if s <= cap => {}
            _ => {
                return Err(Error::SizeCapExceeded {
                    size: size.unwrap_or(u128::MAX),
                    cap,
                })
            }
        }
        let modulus_big = smallest_irreducible(p, e * m);
        let mut tower = FieldTower {
            p,
            e,
            m,
            modulus_big,
            base_powers: Vec::new(),
            alpha: Vec::new(),
        };
        tower.base_powers = tower.compute_base_powers();
        let q = tower.q();
        let mut alpha: Vec<FieldElement> = (0..q).rev().map(|t| tower.embed_base_int(t)).collect();
        if order == AlphaOrder::Ascending {
            alpha.reverse();
        }
        tower.alpha = alpha;
        Ok(tower)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `q = p^e`, the size of the middle field.
    pub fn q(&self) -> u64 {
        self.p.pow(self.e as u32)
    }

    /// `q^m`, the size of the top field.
    pub fn size(&self) -> u64 {
        self.p.pow((self.e * self.m) as u32)
    }

    /// The defining monic irreducible of degree `e·m` over `F_p`,
    /// constant term first.
    pub fn modulus_big(&self) -> &[u64] {
        &self.modulus_big
    }

    /// The fixed enumeration `α_0, …, α_{q−1}` of `F_q`, embedded in the
    /// top field.
    pub fn alpha_enumeration(&self) -> &[FieldElement] {
        &self.alpha
    }

    fn degree(&self) -> usize {
        self.e * self.m
    }

    // ---- subfield selectors ----

    pub fn subfield(&self, degree_over_p: usize) -> Result<Subfield> {
        if degree_over_p == 0 || self.degree() % degree_over_p != 0 {
            return Err(Error::InvalidSubfield {
                degree: degree_over_p,
                top: self.degree(),
            });
        }
        Ok(Subfield {
            degree: degree_over_p,
        })
    }

    pub fn prime_subfield(&self) -> Subfield {
        Subfield { degree: 1 }
    }

    /// `F_q` as a subfield selector.
    pub fn base_subfield(&self) -> Subfield {
        Subfield { degree: self.e }
    }

    pub fn top_subfield(&self) -> Subfield {
        Subfield {
            degree: self.degree(),
        }
    }

    /// Size of the subfield, `p^degree`.
    pub fn subfield_size(&self, sub: Subfield) -> u64 {
        self.p.pow(sub.degree as u32)
    }

    // ---- element construction and enumeration ----

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The element whose power-basis coefficients are the base-`p` digits
    /// of `i`. This is the fixed enumeration of the top field.
    pub fn from_int(&self, mut i: u64) -> FieldElement {
        let mut coeffs = vec![0; self.degree()];
        for c in coeffs.iter_mut() {
            *c = i % self.p;
            i /= self.p;
        }
        debug_assert_eq!(i, 0, "index out of range");
        FieldElement { coeffs }
    }

    /// Inverse of [`from_int`](Self::from_int).
    pub fn index_of(&self, x: &FieldElement) -> u64 {
        let mut idx = 0u64;
        for &c in x.coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    /// All `q^m` elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size()).map(move |i| self.from_int(i))
    }

    /// Embed the integer `t ∈ [0, q)` into the top field: its base-`p`
    /// digits are coefficients with respect to the power basis of the
    /// embedded `F_q` generator.
    pub fn embed_base_int(&self, mut t: u64) -> FieldElement {
        debug_assert!(t < self.q());
        let mut acc = self.zero();
        for pow in self.base_powers.iter() {
            let digit = t % self.p;
            t /= self.p;
            acc = self.add(&acc, &self.scalar_mul(digit, pow));
        }
        acc
    }

    /// Embed a prime-field residue.
    pub fn embed_prime(&self, r: u64) -> FieldElement {
        self.from_int(r % self.p)
    }

    fn compute_base_powers(&self) -> Vec<FieldElement> {
        if self.e == 1 {
            return vec![self.one()];
        }
        // Find the first root (in enumeration order) of the degree-e
        // defining modulus of F_q inside the big field; powers of that root
        // give the embedding.
        let small_mod = smallest_irreducible(self.p, self.e);
        let root = self
            .elements()
            .find(|x| {
                let mut acc = self.zero();
                let mut xp = self.one();
                for &c in &small_mod {
                    acc = self.add(&acc, &self.scalar_mul(c, &xp));
                    xp = self.mul(&xp, x);
                }
                acc.is_zero()
            })
            .expect("the big field contains F_q, so the modulus has a root");
        let mut powers = Vec::with_capacity(self.e);
        let mut acc = self.one();
        for _ in 0..self.e {
            powers.push(acc.clone());
            acc = self.mul(&acc, &root);
        }
        powers
    }

    // ---- arithmetic ----

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.sub(&self.zero(), a)
    }

    pub fn scalar_mul(&self, s: u64, a: &FieldElement) -> FieldElement {
        let s = s % self.p;
        let coeffs = a.coeffs.iter().map(|&x| (x * s) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let d = self.degree();
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce by the monic modulus
        for k in (d..2 * d - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..d {
                let t = (c * self.modulus_big[i]) % self.p;
                prod[k - d + i] = (prod[k - d + i] + self.p - t) % self.p;
            }
        }
        prod.truncate(d);
        FieldElement { coeffs: prod }
    }

    pub fn pow(&self, x: &FieldElement, mut n: u128) -> FieldElement {
        let mut base = x.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::Invalid("division by zero".into()));
        }
        Ok(self.pow(x, self.size() as u128 - 2))
    }

    // ---- Frobenius and traces ----

    /// `x^{s^j}` where `s = p^{base.degree}`.
    pub fn frobenius(&self, x: &FieldElement, j: usize, base: Subfield) -> FieldElement {
        let mut acc = x.clone();
        for _ in 0..j * base.degree {
            acc = self.pow(&acc, self.p as u128);
        }
        acc
    }

    /// Relative trace of `x` from the top field down to `target`:
    /// `Σ_j x^{s^j}` with `s` the target size, summed over the Frobenius
    /// orbit. The result lies in `target`.
    pub fn trace_to(&self, x: &FieldElement, target: Subfield) -> FieldElement {
        let orbit = self.degree() / target.degree;
        let mut acc = self.zero();
        let mut term = x.clone();
        for _ in 0..orbit {
            acc = self.add(&acc, &term);
            term = self.frobenius(&term, 1, target);
        }
        debug_assert!(self.in_subfield(&acc, target));
        acc
    }

    /// Relative trace between two intermediate fields: `x` must lie in
    /// `from`, and the sum runs over the Frobenius orbit of `from` over
    /// `to`.
    pub fn trace_between(&self, x: &FieldElement, from: Subfield, to: Subfield) -> FieldElement {
        debug_assert!(from.degree % to.degree == 0);
        debug_assert!(self.in_subfield(x, from));
        let orbit = from.degree / to.degree;
        let mut acc = self.zero();
        let mut term = x.clone();
        for _ in 0..orbit {
            acc = self.add(&acc, &term);
            term = self.frobenius(&term, 1, to);
        }
        acc
    }

    /// Whether `x` lies in the given subfield, i.e. is fixed by its
    /// Frobenius.
    pub fn in_subfield(&self, x: &FieldElement, sub: Subfield) -> bool {
        self.frobenius(x, 1, sub) == *x
    }

    /// All elements of the subfield, in enumeration order. Computed by a
    /// scan over the top field.
    pub fn subfield_elements(&self, sub: Subfield) -> Vec<FieldElement> {
        if sub.degree == self.degree() {
            return self.elements().collect();
        }
        self.elements()
            .filter(|x| self.in_subfield(x, sub))
            .collect()
    }

    // ---- linear algebra over subfields ----

    /// True iff no nontrivial linear combination of `elements` with
    /// coefficients in `base` vanishes. Decided by growing the exact span.
    pub fn independent_over(&self, elements: &[FieldElement], base: Subfield) -> bool {
        let scalars = self.subfield_elements(base);
        let mut span: HashSet<FieldElement> = HashSet::new();
        span.insert(self.zero());
        for el in elements {
            if span.contains(el) {
                return false;
            }
            let mut next = HashSet::with_capacity(span.len() * scalars.len());
            for s in &span {
                for c in &scalars {
                    next.insert(self.add(s, &self.mul(c, el)));
                }
            }
            span = next;
        }
        true
    }

    /// Deterministic basis (greedy scan in enumeration order) of the kernel
    /// of the relative trace `from → to`, as a vector space over `F_p`.
    pub fn trace_zero_subspace(&self, from: Subfield, to: Subfield) -> Result<Vec<FieldElement>> {
        if from.degree % to.degree != 0 {
            return Err(Error::InvalidSubfield {
                degree: to.degree,
                top: from.degree,
            });
        }
        let expected_dim = from.degree - to.degree;
        let mut basis: Vec<FieldElement> = Vec::new();
        let mut echelon: Vec<Vec<u64>> = Vec::new();
        for x in self.subfield_elements(from) {
            if basis.len() == expected_dim {
                break;
            }
            if !self.trace_between(&x, from, to).is_zero() {
                continue;
            }
            let mut v = x.coeffs.clone();
            if reduce_against(&mut v, &echelon, self.p) {
                insert_echelon(&mut echelon, v, self.p);
                basis.push(x);
            }
        }
        debug_assert_eq!(basis.len(), expected_dim);
        Ok(basis)
    }

    /// F_p-rank of a set of elements (coefficient vectors mod p).
    pub fn rank_over_prime(&self, elements: &[FieldElement]) -> usize {
        let mut echelon: Vec<Vec<u64>> = Vec::new();
        for x in elements {
            let mut v = x.coeffs.clone();
            if reduce_against(&mut v, &echelon, self.p) {
                insert_echelon(&mut echelon, v, self.p);
            }
        }
        echelon.len()
    }

    /// Trace-dual basis over `F_q`: given an `F_q`-basis `b_1, …, b_m` of
    /// the top field, returns `a_1, …, a_m` with
    /// `Tr_{q^m/q}(a_j b_k) = δ_{jk}`, so the coordinate function `X_j`
    /// with respect to `{b_k}` is `x ↦ Tr(a_j x)`.
    pub fn dual_basis(&self, basis: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let n = basis.len();
        if n != self.m {
            return Err(Error::NotABasis);
        }
        let fq = self.base_subfield();
        // Gram matrix of the trace pairing; entries lie in F_q.
        let gram: Vec<Vec<FieldElement>> = basis
            .iter()
            .map(|bi| {
                basis
                    .iter()
                    .map(|bk| self.trace_to(&self.mul(bi, bk), fq))
                    .collect()
            })
            .collect();
        let inv = self.invert_matrix(&gram).ok_or(Error::NotABasis)?;
        let dual: Vec<FieldElement> = (0..n)
            .map(|j| {
                let mut acc = self.zero();
                for i in 0..n {
                    acc = self.add(&acc, &self.mul(&inv[j][i], &basis[i]));
                }
                acc
            })
            .collect();
        // defining property, checked exhaustively
        for (j, aj) in dual.iter().enumerate() {
            for (k, bk) in basis.iter().enumerate() {
                let t = self.trace_to(&self.mul(aj, bk), fq);
                let expect = if j == k { self.one() } else { self.zero() };
                if t != expect {
                    return Err(Error::NotABasis);
                }
            }
        }
        Ok(dual)
    }

    /// Exact inverse of a square matrix of field elements, or `None` if
    /// singular. Gauss-Jordan.
    pub fn invert_matrix(&self, mat: &[Vec<FieldElement>]) -> Option<Vec<Vec<FieldElement>>> {
        let n = mat.len();
        let mut a: Vec<Vec<FieldElement>> = mat.to_vec();
        let mut inv: Vec<Vec<FieldElement>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { self.one() } else { self.zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let pinv = self.inv(&a[col][col]).ok()?;
            for j in 0..n {
                a[col][j] = self.mul(&a[col][j], &pinv);
                inv[col][j] = self.mul(&inv[col][j], &pinv);
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = self.mul(&f, &a[col][j]);
                    a[r][j] = self.sub(&a[r][j], &t);
                    let t = self.mul(&f, &inv[col][j]);
                    inv[r][j] = self.sub(&inv[r][j], &t);
                }
            }
        }
        Some(inv)
    }

    /// Extend `{1}` to an `F_q`-basis of the top field by a greedy scan in
    /// enumeration order. Deterministic.
    pub fn standard_basis_over_q(&self) -> Vec<FieldElement> {
        let fq = self.base_subfield();
        let mut basis = vec![self.one()];
        for x in self.elements() {
            if basis.len() == self.m {
                break;
            }
            let mut cand = basis.clone();
            cand.push(x.clone());
            if self.independent_over(&cand, fq) {
                basis.push(x);
            }
        }
        basis
    }
}

// ---- polynomial helpers over F_p (coefficient vectors, constant first) ----

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn poly_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a != 0
    let mut acc = 1u64;
    let mut base = a % p;
    let mut n = p - 2;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        n >>= 1;
    }
    acc
}

/// Remainder of `a` modulo `b` over F_p; `b` need not be monic.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_deg(b).expect("division by zero polynomial");
    let lead_inv = mod_inv(b[db], p);
    let mut r = a.to_vec();
    while let Some(dr) = poly_deg(&r) {
        if dr < db {
            break;
        }
        let f = r[dr] * lead_inv % p;
        for i in 0..=db {
            let t = f * b[i] % p;
            r[dr - db + i] = (r[dr - db + i] + p - t) % p;
        }
    }
    r
}

/// Irreducibility over F_p by trial division by all monic polynomials of
/// degree 1..=deg/2. Fine at the field sizes this crate allows.
fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let d = match poly_deg(poly) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for dd in 1..=d / 2 {
        let count = p.pow(dd as u32);
        for idx in 0..count {
            let mut div = vec![0u64; dd + 1];
            let mut i = idx;
            for c in div.iter_mut().take(dd) {
                *c = i % p;
                i /= p;
            }
            div[dd] = 1;
            let r = poly_rem(poly, &div, p);
            if poly_deg(&r).is_none() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of the given degree,
/// comparing coefficients from the constant term upward.
fn smallest_irreducible(p: u64, degree: usize) -> Vec<u64> {
    if degree == 1 {
        // x itself
        return vec![0, 1];
    }
    let count = p.pow(degree as u32);
    for idx in 0..count {
        // Most significant digit of idx becomes the constant term, so
        // ascending idx is lexicographic order on (c_0, c_1, …).
        let mut poly = vec![0u64; degree + 1];
        let mut i = idx;
        for j in (0..degree).rev() {
            poly[j] = i % p;
            i /= p;
        }
        poly[degree] = 1;
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducibles of every degree exist over F_p")
}

// ---- echelon helpers over F_p ----

/// Reduce `v` against the echelon rows in place; returns true if a nonzero
/// vector remains (i.e. `v` was independent).
fn reduce_against(v: &mut [u64], echelon: &[Vec<u64>], p: u64) -> bool {
    for row in echelon {
        let lead = poly_deg(row).unwrap();
        if v[lead] != 0 {
            let f = v[lead] * mod_inv(row[lead], p) % p;
            for (vi, ri) in v.iter_mut().zip(row) {
                *vi = (*vi + p - f * ri % p) % p;
            }
        }
    }
    v.iter().any(|&c| c != 0)
}

fn insert_echelon(echelon: &mut Vec<Vec<u64>>, v: Vec<u64>, _p: u64) {
    debug_assert!(v.iter().any(|&c| c != 0));
    echelon.push(v);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tower_f27_is_deterministic() {
        let t1 = build_tower(3, 1, 3).unwrap();
        let t2 = build_tower(3, 1, 3).unwrap();
        assert_eq!(t1.modulus_big(), t2.modulus_big());
        assert_eq!(t1.alpha_enumeration(), t2.alpha_enumeration());
        // Example enumeration {p-1, p-2, ..., 0}
        let idx: Vec<u64> = t1.alpha_enumeration().iter().map(|a| t1.index_of(a)).collect();
        assert_eq!(idx, vec![2, 1, 0]);
    }

    #[test]
    fn degenerate_tower_f2() {
        let t = build_tower(2, 1, 1).unwrap();
        assert_eq!(t.size(), 2);
        let idx: Vec<u64> = t.alpha_enumeration().iter().map(|a| t.index_of(a)).collect();
        assert_eq!(idx, vec![1, 0]);
    }

    #[test]
    fn f9_modulus_is_x_squared_plus_one() {
        let t = build_tower(3, 1, 2).unwrap();
        // enumerate monic quadratics over F_3 in the stated order: x^2+1 is
        // the first irreducible (x^2, x^2+x, x^2+2x all have root 0).
        assert_eq!(t.modulus_big(), &[1, 0, 1]);
    }

    #[test]
    fn non_prime_p_rejected() {
        assert_eq!(build_tower(4, 1, 1).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn size_cap_enforced() {
        assert!(matches!(
            build_tower(2, 1, 25).unwrap_err(),
            Error::SizeCapExceeded { .. }
        ));
    }

    #[test]
    fn field_axioms_exhaustive_f27() {
        let t = build_tower(3, 1, 3).unwrap();
        // x^{q^m} = x for all elements
        for x in t.elements() {
            assert_eq!(t.pow(&x, t.size() as u128), x);
        }
        // inverses
        for x in t.elements().skip(1) {
            assert_eq!(t.mul(&x, &t.inv(&x).unwrap()), t.one());
        }
    }

    #[test]
    fn trace_of_one_in_char_dividing_orbit() {
        let t = build_tower(3, 1, 3).unwrap();
        // Tr_{27/3}(1) = 3·1 = 0
        assert!(t.trace_to(&t.one(), t.prime_subfield()).is_zero());
    }

    #[test]
    fn trace_kernel_size_and_surjectivity() {
        let t = build_tower(3, 1, 3).unwrap();
        let fp = t.prime_subfield();
        let zeros = t
            .elements()
            .filter(|x| t.trace_to(x, fp).is_zero())
            .count();
        assert_eq!(zeros, 9);
        // surjective: every residue is hit
        for r in 0..3 {
            let target = t.embed_prime(r);
            assert!(t.elements().any(|x| t.trace_to(&x, fp) == target));
        }
        // linearity over F_q and Frobenius invariance Tr(x^q) = Tr(x)
        for x in t.elements() {
            let fx = t.pow(&x, 3);
            assert_eq!(t.trace_to(&fx, fp), t.trace_to(&x, fp));
        }
    }

    #[test]
    fn trace_zero_implies_frobenius_trace_zero() {
        let t = build_tower(3, 1, 3).unwrap();
        let fp = t.prime_subfield();
        for a in t.elements() {
            if t.trace_to(&a, fp).is_zero() {
                let a9 = t.pow(&a, 9);
                assert!(t.trace_to(&a9, fp).is_zero());
            }
        }
    }

    #[test]
    fn frobenius_basics() {
        let t = build_tower(3, 1, 3).unwrap();
        let fp = t.prime_subfield();
        for x in t.elements() {
            assert_eq!(t.frobenius(&x, 0, fp), x);
            assert_eq!(t.frobenius(&x, 3, fp), x); // full orbit
            assert_eq!(t.frobenius(&x, 2, fp), t.pow(&x, 9));
        }
    }

    #[test]
    fn independence_over_prime_field() {
        let t = build_tower(3, 1, 3).unwrap();
        let fp = t.prime_subfield();
        let one = t.one();
        // a = z, not in F_3
        let a = t.from_int(3);
        assert!(t.independent_over(&[one.clone(), a.clone()], fp));
        let a_plus_1 = t.add(&a, &one);
        assert!(!t.independent_over(&[one.clone(), a.clone(), a_plus_1], fp));
    }

    #[test]
    fn no_independent_triple_in_trace_kernel_f27() {
        let t = build_tower(3, 1, 3).unwrap();
        let fp = t.prime_subfield();
        let kernel: Vec<_> = t
            .elements()
            .filter(|x| t.trace_to(x, fp).is_zero())
            .collect();
        assert_eq!(kernel.len(), 9);
        assert!(kernel.contains(&t.one()));
        let one = t.one();
        for a in &kernel {
            for b in &kernel {
                assert!(!t.independent_over(&[one.clone(), a.clone(), b.clone()], fp));
            }
        }
    }

    #[test]
    fn trace_zero_subspace_properties() {
        // F_{3^2} -> F_3 with p odd via the relative m/2 trace: F_81 -> F_9
        let t = build_tower(3, 1, 4).unwrap();
        let from = t.top_subfield();
        let to = t.subfield(2).unwrap();
        let basis = t.trace_zero_subspace(from, to).unwrap();
        assert_eq!(basis.len(), 2); // dimension m/2 over F_p
        let kernel: Vec<_> = t
            .elements()
            .filter(|x| t.trace_between(x, from, to).is_zero())
            .collect();
        assert_eq!(kernel.len(), 9); // p^{m/2}
        assert!(!kernel.contains(&t.one()));
        // F_27 -> F_3: kernel has 9 elements and contains 1
        let t = build_tower(3, 1, 3).unwrap();
        let basis = t
            .trace_zero_subspace(t.top_subfield(), t.prime_subfield())
            .unwrap();
        assert_eq!(basis.len(), 2);
        // F_q -> F_q: kernel = {0}
        let b = t
            .trace_zero_subspace(t.prime_subfield(), t.prime_subfield())
            .unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn dual_basis_f27_power_basis() {
        let t = build_tower(3, 1, 3).unwrap();
        let z = t.from_int(3);
        let basis = vec![t.one(), z.clone(), t.mul(&z, &z)];
        let dual = t.dual_basis(&basis).unwrap();
        let fq = t.base_subfield();
        for (j, aj) in dual.iter().enumerate() {
            for (k, bk) in basis.iter().enumerate() {
                let tr = t.trace_to(&t.mul(aj, bk), fq);
                let expect = if j == k { t.one() } else { t.zero() };
                assert_eq!(tr, expect);
            }
        }
        // dual of the dual is the original
        let dd = t.dual_basis(&dual).unwrap();
        assert_eq!(dd, basis);
    }

    #[test]
    fn proper_extension_tower_embedding() {
        // F_3 ⊂ F_9 ⊂ F_81 with e = 2, m = 2
        let t = build_tower(3, 2, 2).unwrap();
        assert_eq!(t.q(), 9);
        assert_eq!(t.size(), 81);
        let alpha = t.alpha_enumeration();
        assert_eq!(alpha.len(), 9);
        // distinct, all in F_q, closed under multiplication
        let set: HashSet<_> = alpha.iter().cloned().collect();
        assert_eq!(set.len(), 9);
        let fq = t.base_subfield();
        for a in alpha {
            assert!(t.in_subfield(a, fq));
            for b in alpha {
                assert!(set.contains(&t.mul(a, b)));
                assert!(set.contains(&t.add(a, b)));
            }
        }
    }
}
