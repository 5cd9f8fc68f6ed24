//! Trace forms `x ↦ Tr_{q^m/q}(R(x)) + c` with `R ∈ F_{q^m}[x]` and
//! `c ∈ F_q`, and the function-preserving canonicalizations that drive
//! genus reduction:
//!
//! * products of affine-linear trace factors collapse to a single form via
//!   `Tr(A)·Tr(B) = Tr(B · Σ_j A^{q^j})`;
//! * each monomial is moved to the smallest exponent in its `q`-cyclotomic
//!   coset (Frobenius rewriting);
//! * monomials whose trace contribution is the zero function are dropped;
//! * leading terms `c·x^{pe}` are replaced by `c^{1/p}·x^e` (the
//!   Artin-Schreier substitution), bringing `deg R` coprime to `p`.
//!
//! Every transformation here preserves the represented function pointwise;
//! when the top field is small enough this is checked exhaustively as part
//! of the operation.

use std::collections::BTreeMap;

use crate::field::{FieldElement, FieldTower, VERIFY_CAP};
use crate::grm::Codeword;
use crate::hierarchy::ExponentTuple;
use crate::{Error, Result};

/// A univariate polynomial `R` over `F_{q^m}` (exponents in
/// `[0, q^m − 1]`) together with an additive constant `c ∈ F_q`,
/// representing the function `x ↦ Tr_{q^m/q}(R(x)) + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    r_poly: BTreeMap<u64, FieldElement>,
    c: FieldElement,
}

/// Reduce an exponent modulo `x^{q^m} = x`: map `e ≥ 1` to its
/// representative in `[1, q^m − 1]`, keep 0.
pub fn reduce_exp(e: u128, size: u64) -> u64 {
    if e == 0 {
        0
    } else {
        let n = (size - 1) as u128;
        ((e - 1) % n + 1) as u64
    }
}

impl TraceForm {
    pub fn zero(tower: &FieldTower) -> Self {
        TraceForm {
            r_poly: BTreeMap::new(),
            c: tower.zero(),
        }
    }

    /// `x ↦ Tr(a·x)`.
    pub fn linear(a: &FieldElement, tower: &FieldTower) -> Self {
        let mut f = Self::zero(tower);
        f.set_term(1, a.clone());
        f
    }

    /// Build directly from `(exponent, coefficient)` terms and a constant.
    /// The constant must lie in `F_q`.
    pub fn from_terms(
        terms: &[(u64, FieldElement)],
        c: FieldElement,
        tower: &FieldTower,
    ) -> Result<Self> {
        if !tower.in_subfield(&c, tower.base_subfield()) {
            return Err(Error::Invalid("trace-form constant must lie in F_q".into()));
        }
        let mut f = TraceForm {
            r_poly: BTreeMap::new(),
            c,
        };
        for (e, coeff) in terms {
            let e = reduce_exp(*e as u128, tower.size());
            f.add_term(e, coeff.clone(), tower);
        }
        Ok(f)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &FieldElement)> {
        self.r_poly.iter().map(|(&e, c)| (e, c))
    }

    pub fn constant(&self) -> &FieldElement {
        &self.c
    }

    pub fn coefficient(&self, e: u64) -> Option<&FieldElement> {
        self.r_poly.get(&e)
    }

    /// Degree of `R` (largest stored exponent), or `None` for `R = 0`.
    pub fn degree(&self) -> Option<u64> {
        self.r_poly.keys().next_back().copied()
    }

    pub fn is_zero_poly(&self) -> bool {
        self.r_poly.is_empty()
    }

    fn set_term(&mut self, e: u64, c: FieldElement) {
        if !c.is_zero() {
            self.r_poly.insert(e, c);
        }
    }

    fn add_term(&mut self, e: u64, c: FieldElement, tower: &FieldTower) {
        use std::collections::btree_map::Entry;
        match self.r_poly.entry(e) {
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

    /// Evaluate the represented function at `x`.
    pub fn eval(&self, x: &FieldElement, tower: &FieldTower) -> FieldElement {
        let mut acc = tower.zero();
        for (&e, c) in &self.r_poly {
            acc = tower.add(&acc, &tower.mul(c, &tower.pow(x, e as u128)));
        }
        tower.add(&tower.trace_to(&acc, tower.base_subfield()), &self.c)
    }

    /// The function as a vector over all `q^m` field elements in index
    /// order.
    pub fn function_vector(&self, tower: &FieldTower) -> Vec<FieldElement> {
        tower.elements().map(|x| self.eval(&x, tower)).collect()
    }

    /// The induced codeword (function values, viewed as a length-`q^m`
    /// word over `F_q`).
    pub fn codeword(&self, tower: &FieldTower) -> Codeword {
        Codeword::new(self.function_vector(tower))
    }

    pub fn add(&self, other: &Self, tower: &FieldTower) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.r_poly {
            out.add_term(e, c.clone(), tower);
        }
        out.c = tower.add(&out.c, &other.c);
        out
    }

    /// Scale by `λ ∈ F_q`: `λ·(Tr(R) + c) = Tr(λR) + λc`.
    pub fn scale(&self, lambda: &FieldElement, tower: &FieldTower) -> Self {
        let mut out = Self::zero(tower);
        if lambda.is_zero() {
            return out;
        }
        for (&e, c) in &self.r_poly {
            out.set_term(e, tower.mul(c, lambda));
        }
        out.c = tower.mul(&self.c, lambda);
        out
    }

    /// Product of two trace forms as functions:
    /// `(Tr(A)+c₁)(Tr(B)+c₂) = Tr(B·Σ_j A^{q^j} + c₁B + c₂A) + c₁c₂`,
    /// with all polynomial arithmetic modulo `x^{q^m} − x`.
    pub fn mul(&self, other: &Self, tower: &FieldTower) -> Self {
        let a = &self.r_poly;
        let b = &other.r_poly;
        // Σ_j A^{q^j}: exponents multiplied by q, coefficients raised to q
        let mut frob_sum: BTreeMap<u64, FieldElement> = BTreeMap::new();
        let mut twisted = a.clone();
        for _ in 0..tower.m() {
            for (&e, c) in &twisted {
                merge_term(&mut frob_sum, e, c.clone(), tower);
            }
            twisted = frobenius_twist(&twisted, tower);
        }
        let mut r = poly_mul(b, &frob_sum, tower);
        for (&e, c) in b {
            merge_term(&mut r, e, tower.mul(c, &self.c), tower);
        }
        for (&e, c) in a {
            merge_term(&mut r, e, tower.mul(c, &other.c), tower);
        }
        let out = TraceForm {
            r_poly: r,
            c: tower.mul(&self.c, &other.c),
        };
        if tower.size() <= VERIFY_CAP {
            for x in tower.elements() {
                let lhs = tower.mul(&self.eval(&x, tower), &other.eval(&x, tower));
                debug_assert_eq!(lhs, out.eval(&x, tower));
            }
        }
        out
    }

    /// Move every monomial to the smallest exponent in its `q`-cyclotomic
    /// coset modulo `q^m − 1` (Frobenius rewriting inside the trace), fold
    /// exponent-0 terms into the constant, and merge like terms.
    /// Idempotent; preserves the function.
    pub fn cyclotomic_canonicalize(&self, tower: &FieldTower) -> Self {
        let q = tower.q();
        let size = tower.size();
        let fq = tower.base_subfield();
        let mut out = Self::zero(tower);
        out.c = self.c.clone();
        for (&e, coeff) in &self.r_poly {
            if e == 0 {
                out.c = tower.add(&out.c, &tower.trace_to(coeff, fq));
                continue;
            }
            // walk the coset, tracking the shift that reaches the minimum
            let mut best_e = e;
            let mut best_t = 0usize;
            let mut cur = e;
            for t in 1..tower.m() {
                cur = reduce_exp(cur as u128 * q as u128, size);
                if cur == e {
                    break;
                }
                if cur < best_e {
                    best_e = cur;
                    best_t = t;
                }
            }
            let new_coeff = tower.frobenius(coeff, best_t, fq);
            out.add_term(best_e, new_coeff, tower);
        }
        self.assert_same_function(&out, tower);
        out
    }

    /// Drop every monomial whose own trace contribution is the zero
    /// function on `F_{q^m}` (decided exhaustively). Greedy per term, which
    /// covers the single-monomial drops genus reduction relies on.
    pub fn drop_trace_null_terms(&self, tower: &FieldTower) -> Self {
        let fq = tower.base_subfield();
        let mut out = Self::zero(tower);
        out.c = self.c.clone();
        for (&e, coeff) in &self.r_poly {
            let term_is_null = tower.elements().all(|x| {
                let v = tower.mul(coeff, &tower.pow(&x, e as u128));
                tower.trace_to(&v, fq).is_zero()
            });
            if !term_is_null {
                out.set_term(e, coeff.clone());
            }
        }
        self.assert_same_function(&out, tower);
        out
    }

    /// Artin-Schreier degree reduction (requires `q = p`): while the
    /// leading term is `c·x^{pe}`, replace it by `c^{1/p}·x^e`. The
    /// substitution `y ↦ y + c^{1/p}x^e` fixes the point count; here it is
    /// the identity `Tr(z^p) = Tr(z)` on the trace form. Terminates with
    /// `deg R` coprime to `p` or `deg R = 0`.
    pub fn artin_schreier_reduce(&self, tower: &FieldTower) -> Result<Self> {
        let p = tower.p();
        let mut out = self.clone();
        loop {
            let deg = match out.degree() {
                Some(d) if d > 0 => d,
                _ => break,
            };
            if deg % p != 0 {
                break;
            }
            if tower.e() != 1 {
                return Err(Error::DegreeNotCoprime { degree: deg, p });
            }
            let coeff = out.r_poly.remove(&deg).unwrap();
            // p-th root: c^(p^{em-1})
            let root = tower.pow(&coeff, (tower.size() / p) as u128);
            out.add_term(deg / p, root, tower);
        }
        self.assert_same_function(&out, tower);
        Ok(out)
    }

    /// Full canonicalization pipeline: cyclotomic rewriting, trace-null
    /// dropping and Artin-Schreier reduction, iterated to a fixpoint.
    pub fn reduce_full(&self, tower: &FieldTower) -> Result<Self> {
        let mut cur = self.clone();
        loop {
            let mut next = cur.cyclotomic_canonicalize(tower);
            next = next.drop_trace_null_terms(tower);
            if tower.e() == 1 {
                next = next.artin_schreier_reduce(tower)?;
            }
            if next == cur {
                return Ok(next);
            }
            cur = next;
        }
    }

    /// Model-preserving reduction for span members of a fibre product:
    /// cyclotomic rewriting plus Artin-Schreier reduction, without
    /// trace-null dropping (dropping changes the curve model, which is a
    /// choice made when the members are built, not when aggregating).
    pub fn reduce_model(&self, tower: &FieldTower) -> Result<Self> {
        let mut cur = self.clone();
        loop {
            let mut next = cur.cyclotomic_canonicalize(tower);
            if tower.e() == 1 {
                next = next.artin_schreier_reduce(tower)?;
            }
            if next == cur {
                return Ok(next);
            }
            cur = next;
        }
    }

    /// Fold a nonzero constant into the constant term of `R`: pick the
    /// first `t` in enumeration order with `Tr(t) = c` and add it to `R`.
    /// The represented function is unchanged; afterwards `c = 0`.
    pub fn fold_constant(&self, tower: &FieldTower) -> Self {
        if self.c.is_zero() {
            return self.clone();
        }
        let fq = tower.base_subfield();
        let preimage = tower
            .elements()
            .find(|t| tower.trace_to(t, fq) == self.c)
            .expect("the trace is surjective");
        let mut out = self.clone();
        out.add_term(0, preimage, tower);
        out.c = tower.zero();
        self.assert_same_function(&out, tower);
        out
    }

    /// Exhaustive pointwise-equality assertion, run whenever the field is
    /// small enough.
    fn assert_same_function(&self, other: &Self, tower: &FieldTower) {
        if tower.size() > VERIFY_CAP {
            return;
        }
        for x in tower.elements() {
            assert_eq!(
                self.eval(&x, tower),
                other.eval(&x, tower),
                "transformation must preserve the represented function"
            );
        }
    }

    /// Pointwise equality of the represented functions.
    pub fn same_function(&self, other: &Self, tower: &FieldTower) -> bool {
        tower
            .elements()
            .all(|x| self.eval(&x, tower) == other.eval(&x, tower))
    }
}

fn merge_term(map: &mut BTreeMap<u64, FieldElement>, e: u64, c: FieldElement, tower: &FieldTower) {
    use std::collections::btree_map::Entry;
    match map.entry(e) {
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

/// `A(x) ↦ A(x)^q` as a polynomial modulo `x^{q^m} − x`: coefficients to
/// the `q`, exponents times `q`.
fn frobenius_twist(
    a: &BTreeMap<u64, FieldElement>,
    tower: &FieldTower,
) -> BTreeMap<u64, FieldElement> {
    let q = tower.q();
    let size = tower.size();
    let mut out = BTreeMap::new();
    for (&e, c) in a {
        let e2 = reduce_exp(e as u128 * q as u128, size);
        merge_term(&mut out, e2, tower.pow(c, q as u128), tower);
    }
    out
}

fn poly_mul(
    a: &BTreeMap<u64, FieldElement>,
    b: &BTreeMap<u64, FieldElement>,
    tower: &FieldTower,
) -> BTreeMap<u64, FieldElement> {
    let size = tower.size();
    let mut out = BTreeMap::new();
    for (&ea, ca) in a {
        for (&eb, cb) in b {
            let e = reduce_exp(ea as u128 + eb as u128, size);
            merge_term(&mut out, e, tower.mul(ca, cb), tower);
        }
    }
    out
}

/// Collapse the product `∏_j ∏_{t=i_j+1}^{q−1} (Tr(a_j x) − α_t)` into a
/// single trace form. The `a_j` must be `F_q`-independent; with `a` the
/// trace-dual of the coordinate basis this is exactly the codeword of
/// `f_σ` under the index bijection `F_q^m ≅ F_{q^m}`.
pub fn sigma_trace_form(
    sigma: &ExponentTuple,
    a: &[FieldElement],
    tower: &FieldTower,
) -> Result<TraceForm> {
    if a.len() != tower.m() {
        return Err(Error::DimensionMismatch(format!(
            "need {} trace coefficients, got {}",
            tower.m(),
            a.len()
        )));
    }
    if !tower.independent_over(a, tower.base_subfield()) {
        return Err(Error::DependentBasis);
    }
    let q = tower.q();
    // multiplicative identity: Tr(0) + 1
    let mut acc = TraceForm::zero(tower);
    acc.c = tower.one();
    for (j, aj) in a.iter().enumerate() {
        for t in (sigma.sigma[j] + 1)..q {
            let alpha_t = &tower.alpha_enumeration()[t as usize];
            let mut factor = TraceForm::linear(aj, tower);
            factor.c = tower.neg(alpha_t);
            acc = acc.mul(&factor, tower);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::build_tower;
    use crate::grm::{evaluate, point_at_index};
    use crate::hierarchy::sigma_to_poly;

    #[test]
    fn product_identity_exhaustive_f27() {
        // Tr(ax)Tr(bx) = Tr(b·Σ_j (ax)^{q^j} · x) pointwise, all pairs
        let t = build_tower(3, 1, 3).unwrap();
        for ai in 0..27 {
            for bi in [1u64, 5, 11, 26] {
                let a = t.from_int(ai);
                let b = t.from_int(bi);
                let fa = TraceForm::linear(&a, &t);
                let fb = TraceForm::linear(&b, &t);
                let prod = fa.mul(&fb, &t);
                for x in t.elements() {
                    let lhs = t.mul(&fa.eval(&x, &t), &fb.eval(&x, &t));
                    assert_eq!(lhs, prod.eval(&x, &t));
                }
            }
        }
    }

    #[test]
    fn f1_collapses_to_printed_form() {
        // (Tr(x)-1)Tr(x) = Tr(x² + x^{p+1} + x^{p²+1}) − Tr(x) over F_27
        let t = build_tower(3, 1, 3).unwrap();
        let sigma = ExponentTuple {
            sigma: vec![0, 2, 2],
        };
        let a = vec![t.one(), t.from_int(3), t.from_int(9)];
        let form = sigma_trace_form(&sigma, &a, &t).unwrap();
        let expect = TraceForm::from_terms(
            &[
                (2, t.one()),
                (4, t.one()),
                (10, t.one()),
                (1, t.neg(&t.one())),
            ],
            t.zero(),
            &t,
        )
        .unwrap();
        assert_eq!(form, expect);
    }

    #[test]
    fn canonicalization_matches_worked_f1() {
        // Tr(x² + x⁴ + x^{10} − x) canonicalizes to Tr(2x⁴ + x² − x)
        let t = build_tower(3, 1, 3).unwrap();
        let raw = TraceForm::from_terms(
            &[
                (2, t.one()),
                (4, t.one()),
                (10, t.one()),
                (1, t.neg(&t.one())),
            ],
            t.zero(),
            &t,
        )
        .unwrap();
        let canon = raw.cyclotomic_canonicalize(&t);
        let expect = TraceForm::from_terms(
            &[(4, t.from_int(2)), (2, t.one()), (1, t.from_int(2))],
            t.zero(),
            &t,
        )
        .unwrap();
        assert_eq!(canon, expect);
        // idempotent
        assert_eq!(canon.cyclotomic_canonicalize(&t), canon);
    }

    #[test]
    fn frobenius_trace_identity_eq9() {
        // Tr(x^{p²+1}) = Tr(x^{p+1}) as functions, and by canonicalization
        let t = build_tower(3, 1, 3).unwrap();
        let lhs = TraceForm::from_terms(&[(10, t.one())], t.zero(), &t).unwrap();
        let rhs = TraceForm::from_terms(&[(4, t.one())], t.zero(), &t).unwrap();
        assert!(lhs.same_function(&rhs, &t));
        assert_eq!(lhs.cyclotomic_canonicalize(&t), rhs);
    }

    #[test]
    fn f2_collapses_and_canonicalizes() {
        // Tr(x)Tr(ax) canonicalizes to Tr((a^p + a)x^{p+1} + a x²)
        let t = build_tower(3, 1, 3).unwrap();
        let fq = t.base_subfield();
        let a = t
            .elements()
            .find(|a| !t.in_subfield(a, fq) && !a.is_zero())
            .unwrap();
        let prod = TraceForm::linear(&t.one(), &t).mul(&TraceForm::linear(&a, &t), &t);
        let canon = prod.cyclotomic_canonicalize(&t);
        let a_p = t.pow(&a, 3);
        let expect = TraceForm::from_terms(
            &[(4, t.add(&a_p, &a)), (2, a.clone())],
            t.zero(),
            &t,
        )
        .unwrap();
        assert_eq!(canon, expect);
    }

    #[test]
    fn trace_null_term_drops_iff_trace_zero() {
        let t = build_tower(3, 1, 3).unwrap();
        let fp = t.prime_subfield();
        for a in t.elements() {
            if a.is_zero() || t.in_subfield(&a, fp) {
                continue;
            }
            let a9 = t.pow(&a, 9);
            let coeff = t.scalar_mul(2, &a9);
            let form = TraceForm::from_terms(&[(13, coeff)], t.zero(), &t).unwrap();
            let dropped = form.drop_trace_null_terms(&t);
            if t.trace_to(&a, fp).is_zero() {
                assert!(dropped.is_zero_poly(), "2a⁹x¹³ must drop when Tr(a)=0");
            } else {
                assert!(!dropped.is_zero_poly(), "2a⁹x¹³ must stay when Tr(a)≠0");
            }
        }
        // zero polynomial is a fixpoint
        let zero = TraceForm::zero(&t);
        assert_eq!(zero.drop_trace_null_terms(&t), zero);
    }

    #[test]
    fn artin_schreier_reduction() {
        let t = build_tower(3, 1, 3).unwrap();
        // x^p reduces to x
        let f = TraceForm::from_terms(&[(3, t.one())], t.zero(), &t).unwrap();
        let r = f.artin_schreier_reduce(&t).unwrap();
        assert_eq!(r.degree(), Some(1));
        // 2x^{p+1} + x² − x is already coprime
        let g = TraceForm::from_terms(
            &[(4, t.from_int(2)), (2, t.one()), (1, t.from_int(2))],
            t.zero(),
            &t,
        )
        .unwrap();
        assert_eq!(g.artin_schreier_reduce(&t).unwrap(), g);
        // x^{2p} + x³ loses its leading term to the substitution
        let h = TraceForm::from_terms(&[(6, t.one()), (3, t.one())], t.zero(), &t).unwrap();
        let hr = h.artin_schreier_reduce(&t).unwrap();
        assert!(hr.degree().unwrap() % 3 != 0);
        assert!(h.same_function(&hr, &t));
    }

    #[test]
    fn codeword_recovery_with_dual_basis() {
        // With a = dual basis of the coordinate basis, the trace form of
        // f_σ matches β(f_σ) under the index bijection x = Σ v_j b_j.
        let t = build_tower(3, 1, 3).unwrap();
        let basis = t.standard_basis_over_q();
        let dual = t.dual_basis(&basis).unwrap();
        for sigma in [vec![0, 2, 2], vec![1, 1, 2], vec![0, 1, 2]] {
            let sigma = ExponentTuple { sigma };
            let f = sigma_to_poly(&sigma, &t);
            let word = evaluate(&f, &t).unwrap();
            let form = sigma_trace_form(&sigma, &dual, &t).unwrap();
            for idx in 0..t.size() {
                let point = point_at_index(idx, &t);
                let mut x = t.zero();
                for (v, b) in point.iter().zip(&basis) {
                    x = t.add(&x, &t.mul(v, b));
                }
                assert_eq!(form.eval(&x, &t), word.values()[idx as usize]);
            }
        }
    }

    #[test]
    fn weights_agree_for_any_independent_a() {
        let t = build_tower(3, 1, 3).unwrap();
        let sigma = ExponentTuple {
            sigma: vec![0, 2, 2],
        };
        let f = sigma_to_poly(&sigma, &t);
        let word_weight = evaluate(&f, &t).unwrap().weight();
        let fq = t.base_subfield();
        // a few different independent triples
        let mut tried = 0;
        for ai in 3..27 {
            let a1 = t.one();
            let a2 = t.from_int(ai);
            let a3 = t.mul(&a2, &a2);
            if !t.independent_over(&[a1.clone(), a2.clone(), a3.clone()], fq) {
                continue;
            }
            let form = sigma_trace_form(&sigma, &[a1, a2, a3], &t).unwrap();
            assert_eq!(form.codeword(&t).weight(), word_weight);
            tried += 1;
            if tried == 4 {
                break;
            }
        }
        assert!(tried > 0);
    }

    #[test]
    fn fold_constant_preserves_function() {
        let t = build_tower(3, 1, 3).unwrap();
        let f = TraceForm::from_terms(&[(4, t.from_int(2))], t.from_int(2), &t).unwrap();
        let folded = f.fold_constant(&t);
        assert!(folded.constant().is_zero());
        assert!(f.same_function(&folded, &t));
    }
}
