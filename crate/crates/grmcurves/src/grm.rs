//! Generalized Reed-Muller codes `R_q(s, m)`: reduced multivariate
//! polynomials, the evaluation map, word weights and subcode support
//! weights.
//!
//! Codewords have length `q^m` and are indexed by points of `F_q^m` in
//! lexicographic order over the tower's α-enumeration (first coordinate
//! most significant).

use std::collections::BTreeMap;

use crate::field::{FieldElement, FieldTower};
use crate::{Error, Result};

/// Span-enumeration cap for the averaging formula
/// `w(D) = Σ w(d) / (q^r − q^{r−1})`.
pub const SPAN_CAP: u64 = 1 << 16;

/// A polynomial in `m` variables over `F_q` with every exponent `< q`,
/// i.e. a canonical representative modulo the ideal `(X_i^q − X_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedMultiPoly {
    q: u64,
    m: usize,
    /// exponent tuple -> nonzero coefficient (an element of F_q embedded
    /// in the top field)
    terms: BTreeMap<Vec<u16>, FieldElement>,
}

/// Reduce a single exponent: `x^i = x^{((i−1) mod (q−1)) + 1}` on `F_q`
/// for `i ≥ q`; exponent 0 is kept.
pub fn reduce_exponent(i: u64, q: u64) -> u64 {
    if i < q {
        i
    } else {
        (i - 1) % (q - 1) + 1
    }
}

impl ReducedMultiPoly {
    pub fn zero(q: u64, m: usize) -> Self {
        ReducedMultiPoly {
            q,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: &FieldElement, tower: &FieldTower) -> Self {
        let mut p = Self::zero(tower.q(), tower.m());
        if !c.is_zero() {
            p.terms.insert(vec![0; tower.m()], c.clone());
        }
        p
    }

    pub fn one(tower: &FieldTower) -> Self {
        Self::constant(&tower.one(), tower)
    }

    /// The monomial `c · X_1^{e_1} ⋯ X_m^{e_m}`, exponents reduced.
    pub fn monomial(c: &FieldElement, exponents: &[u64], tower: &FieldTower) -> Self {
        let mut p = Self::zero(tower.q(), tower.m());
        if c.is_zero() {
            return p;
        }
        let e: Vec<u16> = exponents
            .iter()
            .map(|&i| reduce_exponent(i, tower.q()) as u16)
            .collect();
        p.terms.insert(e, c.clone());
        p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &FieldElement)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&i| i as u64).sum())
            .max()
    }

    fn insert_term(&mut self, e: Vec<u16>, c: FieldElement, tower: &FieldTower) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = tower.add(o.get(), &c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self, tower: &FieldTower) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone(), tower);
        }
        out
    }

    pub fn scale(&self, s: &FieldElement, tower: &FieldTower) -> Self {
        let mut out = Self::zero(self.q, self.m);
        if s.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), tower.mul(c, s));
        }
        out
    }

    /// Product, with exponents reduced term by term so the result stays a
    /// canonical representative of the same function.
    pub fn mul(&self, other: &Self, tower: &FieldTower) -> Self {
        let mut out = Self::zero(self.q, self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u16> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| reduce_exponent(x as u64 + y as u64, self.q) as u16)
                    .collect();
                out.insert_term(e, tower.mul(ca, cb), tower);
            }
        }
        out
    }

    /// Evaluate at a point of `F_q^m` (coordinates as embedded elements).
    pub fn eval(&self, point: &[FieldElement], tower: &FieldTower) -> FieldElement {
        let mut acc = tower.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &i) in point.iter().zip(e) {
                if i > 0 {
                    term = tower.mul(&term, &tower.pow(x, i as u128));
                }
            }
            acc = tower.add(&acc, &term);
        }
        acc
    }
}

/// Reduce a raw list of `(exponent tuple, coefficient)` terms to a
/// [`ReducedMultiPoly`] representing the same function on `F_q^m`.
pub fn reduce_poly(raw: &[(Vec<u64>, FieldElement)], tower: &FieldTower) -> ReducedMultiPoly {
    let mut out = ReducedMultiPoly::zero(tower.q(), tower.m());
    for (e, c) in raw {
        let reduced: Vec<u16> = e
            .iter()
            .map(|&i| reduce_exponent(i, tower.q()) as u16)
            .collect();
        out.insert_term(reduced, c.clone(), tower);
    }
    out
}

/// A word of length `q^m` over `F_q`, indexed by the fixed enumeration of
/// `F_q^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    values: Vec<FieldElement>,
}

impl Codeword {
    pub fn new(values: Vec<FieldElement>) -> Self {
        Codeword { values }
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> u64 {
        self.values.iter().filter(|v| !v.is_zero()).count() as u64
    }

    pub fn add(&self, other: &Self, tower: &FieldTower) -> Self {
        Codeword {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| tower.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &FieldElement, tower: &FieldTower) -> Self {
        Codeword {
            values: self.values.iter().map(|a| tower.mul(a, s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// The point of `F_q^m` with the given codeword index: base-`q` digits of
/// `idx` (first coordinate most significant) select entries of the
/// α-enumeration.
pub fn point_at_index(idx: u64, tower: &FieldTower) -> Vec<FieldElement> {
    let q = tower.q();
    let m = tower.m();
    let mut digits = vec![0u64; m];
    let mut i = idx;
    for d in digits.iter_mut().rev() {
        *d = i % q;
        i /= q;
    }
    digits
        .into_iter()
        .map(|d| tower.alpha_enumeration()[d as usize].clone())
        .collect()
}

/// The evaluation map `β`: evaluate `f` at every point of `F_q^m` in index
/// order.
pub fn evaluate(f: &ReducedMultiPoly, tower: &FieldTower) -> Result<Codeword> {
    if f.q() != tower.q() || f.num_vars() != tower.m() {
        return Err(Error::DimensionMismatch(format!(
            "polynomial over q={}, m={} evaluated on tower q={}, m={}",
            f.q(),
            f.num_vars(),
            tower.q(),
            tower.m()
        )));
    }
    let n = tower.q().pow(tower.m() as u32);
    let values = (0..n)
        .map(|idx| f.eval(&point_at_index(idx, tower), tower))
        .collect();
    Ok(Codeword::new(values))
}

/// A list of `F_q`-linearly independent codewords spanning a subcode.
#[derive(Clone, Debug)]
pub struct SubcodeBasis {
    words: Vec<Codeword>,
}

impl SubcodeBasis {
    /// Checks independence over `F_q` by exact Gaussian elimination.
    pub fn new(words: Vec<Codeword>, tower: &FieldTower) -> Result<Self> {
        if rank_over_q(&words, tower) != words.len() {
            return Err(Error::DependentBasis);
        }
        Ok(SubcodeBasis { words })
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// Support weight of the span: the number of coordinates where at
    /// least one basis word is nonzero (the support of a span is the union
    /// of the supports of any basis).
    pub fn support_weight(&self) -> u64 {
        if self.words.is_empty() {
            return 0;
        }
        let n = self.words[0].len();
        (0..n)
            .filter(|&i| self.words.iter().any(|w| !w.values()[i].is_zero()))
            .count() as u64
    }

    /// Support weight via the averaging identity
    /// `w(D) = Σ_{d∈D} w(d) / (q^r − q^{r−1})`, computed by enumerating
    /// the whole span. The division is exact; a remainder would be an
    /// implementation bug.
    pub fn weight_by_sum(&self, tower: &FieldTower) -> Result<u64> {
        let q = tower.q();
        let r = self.words.len() as u32;
        q.checked_pow(r)
            .filter(|&s| s <= SPAN_CAP)
            .ok_or_else(|| Error::CapExceeded(format!("span size q^{} over cap {}", r, SPAN_CAP)))?;
        let mut total: u128 = 0;
        for combo in span_iter(&self.words, tower) {
            total += combo.weight() as u128;
        }
        let denom = (q.pow(r) - q.pow(r - 1)) as u128;
        assert_eq!(total % denom, 0, "averaging identity division must be exact");
        Ok((total / denom) as u64)
    }

    /// Enumerate every word of the span (including zero).
    pub fn span(&self, tower: &FieldTower) -> Vec<Codeword> {
        span_iter(&self.words, tower).collect()
    }
}

/// Iterate all `q^r` linear combinations of the given words.
pub fn span_iter<'a>(
    words: &'a [Codeword],
    tower: &'a FieldTower,
) -> impl Iterator<Item = Codeword> + 'a {
    let q = tower.q();
    let r = words.len();
    let count = q.pow(r as u32);
    (0..count).map(move |mut idx| {
        let n = words.first().map_or(0, |w| w.len());
        let mut acc = Codeword::new(vec![tower.zero(); n]);
        for w in words {
            let lambda = idx % q;
            idx /= q;
            if lambda != 0 {
                let s = tower.embed_base_int(lambda);
                acc = acc.add(&w.scale(&s, tower), tower);
            }
        }
        acc
    })
}

/// Rank over `F_q` of a list of codewords (entries lie in the embedded
/// `F_q`, which is closed under the field operations used here).
pub fn rank_over_q(words: &[Codeword], tower: &FieldTower) -> usize {
    let mut rows: Vec<Vec<FieldElement>> = words.iter().map(|w| w.values().to_vec()).collect();
    let mut rank = 0;
    let n = rows.first().map_or(0, |r| r.len());
    let mut col = 0;
    while col < n && rank < rows.len() {
        if let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            rows.swap(rank, pivot);
            let pinv = tower.inv(&rows[rank][col]).unwrap();
            for j in col..n {
                rows[rank][j] = tower.mul(&rows[rank][j], &pinv);
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for j in col..n {
                        let t = tower.mul(&f, &rows[rank][j]);
                        rows[r][j] = tower.sub(&rows[r][j], &t);
                    }
                }
            }
            rank += 1;
        }
        col += 1;
    }
    rank
}

/// Dimension of `R_q(s, m)`: the number of reduced monomials of total
/// degree at most `s`.
pub fn dim_rm(q: u64, m: usize, s: u64) -> u64 {
    // Count tuples in {0..q-1}^m with sum <= s by dynamic programming.
    let cap = (m as u64) * (q - 1);
    let s = s.min(cap);
    let mut counts = vec![0u64; s as usize + 1];
    counts[0] = 1;
    for _ in 0..m {
        let mut next = vec![0u64; s as usize + 1];
        for (d, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..q.min(s - d as u64 + 1) {
                next[d + i as usize] += c;
            }
        }
        counts = next;
    }
    counts.iter().sum()
}

/// Generator basis of `R_q(s, m)`: the evaluations of all reduced
/// monomials of total degree at most `s`, in lexicographic exponent order.
pub fn rm_generator_basis(s: u64, tower: &FieldTower) -> Result<Vec<Codeword>> {
    let q = tower.q();
    let m = tower.m();
    let mut words = Vec::new();
    let total = q.pow(m as u32);
    for idx in 0..total {
        let mut e = vec![0u64; m];
        let mut i = idx;
        for d in e.iter_mut().rev() {
            *d = i % q;
            i /= q;
        }
        if e.iter().sum::<u64>() <= s {
            let mono = ReducedMultiPoly::monomial(&tower.one(), &e, tower);
            words.push(evaluate(&mono, tower)?);
        }
    }
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_tower;

    #[test]
    fn exponent_reduction_rule() {
        assert_eq!(reduce_exponent(0, 3), 0);
        assert_eq!(reduce_exponent(2, 3), 2);
        assert_eq!(reduce_exponent(3, 3), 1); // x^q = x
        assert_eq!(reduce_exponent(5, 3), 1); // x^{2q-1}
        assert_eq!(reduce_exponent(4, 2), 1);
    }

    #[test]
    fn reduce_preserves_function() {
        // x^i and its reduction agree on F_q for q in {2, 3, 5}
        for q in [2u64, 3, 5] {
            let tower = build_tower(q, 1, 1).unwrap();
            for i in 0..3 * q {
                let raw = ReducedMultiPoly::monomial(&tower.one(), &[i], &tower);
                for x in tower.elements() {
                    let direct = tower.pow(&x, i as u128);
                    assert_eq!(raw.eval(std::slice::from_ref(&x), &tower), direct);
                }
            }
        }
    }

    #[test]
    fn constant_evaluates_to_all_ones() {
        let tower = build_tower(3, 1, 3).unwrap();
        let one = ReducedMultiPoly::one(&tower);
        let w = evaluate(&one, &tower).unwrap();
        assert_eq!(w.len(), 27);
        assert_eq!(w.weight(), 27);
    }

    #[test]
    fn worked_weights_over_f3() {
        let tower = build_tower(3, 1, 3).unwrap();
        // (X_1 - 1) X_1 has weight p^3 - 2p^2 = 9
        let x1 = ReducedMultiPoly::monomial(&tower.one(), &[1, 0, 0], &tower);
        let minus_one = tower.neg(&tower.one());
        let x1_minus_1 = x1.add(&ReducedMultiPoly::constant(&minus_one, &tower), &tower);
        let f1 = x1_minus_1.mul(&x1, &tower);
        assert_eq!(evaluate(&f1, &tower).unwrap().weight(), 9);
        // X_1 X_2 has weight (p-1)^2 p = 12
        let f2 = ReducedMultiPoly::monomial(&tower.one(), &[1, 1, 0], &tower);
        assert_eq!(evaluate(&f2, &tower).unwrap().weight(), 12);
    }

    #[test]
    fn evaluation_is_linear() {
        let tower = build_tower(3, 1, 2).unwrap();
        let f = ReducedMultiPoly::monomial(&tower.one(), &[2, 1], &tower);
        let g = ReducedMultiPoly::monomial(&tower.from_int(2), &[1, 2], &tower);
        let lhs = evaluate(&f.add(&g, &tower), &tower).unwrap();
        let rhs = evaluate(&f, &tower)
            .unwrap()
            .add(&evaluate(&g, &tower).unwrap(), &tower);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn support_weight_of_pair_over_f9() {
        let tower = build_tower(3, 1, 2).unwrap();
        let w1 = evaluate(
            &ReducedMultiPoly::monomial(&tower.one(), &[1, 0], &tower),
            &tower,
        )
        .unwrap();
        let w2 = evaluate(
            &ReducedMultiPoly::monomial(&tower.one(), &[0, 1], &tower),
            &tower,
        )
        .unwrap();
        let basis = SubcodeBasis::new(vec![w1, w2], &tower).unwrap();
        // support = complement of the single common zero (0, 0)
        assert_eq!(basis.support_weight(), 8);
        assert_eq!(basis.weight_by_sum(&tower).unwrap(), 8);
    }

    #[test]
    fn dependent_basis_rejected() {
        let tower = build_tower(3, 1, 2).unwrap();
        let w = evaluate(
            &ReducedMultiPoly::monomial(&tower.one(), &[1, 0], &tower),
            &tower,
        )
        .unwrap();
        let two_w = w.scale(&tower.from_int(2), &tower);
        assert!(SubcodeBasis::new(vec![w, two_w], &tower).is_err());
    }

    #[test]
    fn reduced_polys_inject_into_codewords() {
        // distinct reduced polynomials of degree <= 2 give distinct words
        // (kernel of beta restricted to reduced representatives is zero)
        let tower = build_tower(3, 1, 2).unwrap();
        let words = rm_generator_basis(2, &tower).unwrap();
        assert_eq!(rank_over_q(&words, &tower), words.len());
    }

    #[test]
    fn rm_dimension_counts_monomials() {
        assert_eq!(dim_rm(3, 3, 2), 10);
        assert_eq!(dim_rm(3, 2, 4), 9);
        assert_eq!(dim_rm(2, 3, 3), 8);
        assert_eq!(dim_rm(3, 3, 0), 1);
        let tower = build_tower(3, 1, 2).unwrap();
        for s in 0..=4 {
            assert_eq!(
                rm_generator_basis(s, &tower).unwrap().len() as u64,
                dim_rm(3, 2, s)
            );
        }
    }

    #[test]
    fn r1_weight_by_sum_is_word_weight() {
        let tower = build_tower(3, 1, 2).unwrap();
        let w = evaluate(
            &ReducedMultiPoly::monomial(&tower.one(), &[2, 1], &tower),
            &tower,
        )
        .unwrap();
        let weight = w.weight();
        let basis = SubcodeBasis::new(vec![w], &tower).unwrap();
        assert_eq!(basis.weight_by_sum(&tower).unwrap(), weight);
        assert_eq!(basis.support_weight(), weight);
    }
}
