//! Artin-Schreier curves `y^q − y = R(x)` over `F_{q^m}`, exhaustive point
//! counting, genus, the codeword/point-count dictionary, Hasse-Weil bounds
//! and fibre products.
//!
//! A point over `x` exists iff `Tr_{q^m/q}(R(x)) = 0`, in which case the
//! fibre holds `q` affine points; the place at infinity is totally
//! ramified because `deg R` is coprime to `p`, so it contributes exactly
//! one rational point.

use serde::Serialize;

use crate::field::FieldTower;
use crate::grm::{self, Codeword, SubcodeBasis};
use crate::trace::TraceForm;
use crate::{Error, Result};

/// A smooth projective Artin-Schreier curve `y^q − y = R(x)` with the
/// additive constant already folded into `R`.
#[derive(Clone, Debug)]
pub struct ArtinSchreierCurve {
    form: TraceForm,
}

/// Invariants of a curve (or fibre product) over the top field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub genus: u64,
    pub n_points: u64,
    /// trace of Frobenius, `q^m + 1 − n_points`
    pub tau: i64,
    pub hw_bound: u64,
    /// `Some(n_points == hw_bound)` when the field size is a square,
    /// `None` otherwise.
    pub maximal: Option<bool>,
}

impl ArtinSchreierCurve {
    /// Wrap a trace form as a curve. Folds the constant into `R` and
    /// enforces `deg R ≥ 1` with `gcd(deg R, p) = 1`. No genus reduction
    /// is applied; reduce the form first if a small model is wanted.
    pub fn new(form: TraceForm, tower: &FieldTower) -> Result<Self> {
        let form = form.fold_constant(tower);
        let deg = form.degree().unwrap_or(0);
        if deg == 0 {
            return Err(Error::Invalid(
                "curve needs a nonconstant right-hand side".into(),
            ));
        }
        if deg % tower.p() == 0 {
            return Err(Error::DegreeNotCoprime {
                degree: deg,
                p: tower.p(),
            });
        }
        Ok(ArtinSchreierCurve { form })
    }

    pub fn form(&self) -> &TraceForm {
        &self.form
    }

    pub fn degree(&self) -> u64 {
        self.form.degree().unwrap_or(0)
    }

    /// `g = (q − 1)(deg R − 1)/2`.
    pub fn genus(&self, tower: &FieldTower) -> u64 {
        genus_from_degree(self.degree(), tower.q())
    }

    /// Exhaustive count of `F_{q^m}`-rational points: `q` per trace-zero
    /// fibre plus the point at infinity.
    pub fn count_points(&self, tower: &FieldTower) -> u64 {
        let zero_fibres = tower
            .elements()
            .filter(|x| self.form.eval(x, tower).is_zero())
            .count() as u64;
        tower.q() * zero_fibres + 1
    }

    /// The dictionary `w(c_f) = q^m − (#C_f − 1)/q`, with exact division.
    pub fn weight_point_check(&self, word_weight: u64, tower: &FieldTower) -> Result<bool> {
        let n = self.count_points(tower);
        if (n - 1) % tower.q() != 0 {
            return Err(Error::Invalid(
                "point count minus one must be divisible by q".into(),
            ));
        }
        Ok(word_weight == tower.size() - (n - 1) / tower.q())
    }

    pub fn report(&self, tower: &FieldTower) -> CurveReport {
        let genus = self.genus(tower);
        let n_points = self.count_points(tower);
        build_report(genus, n_points, tower.size())
    }
}

pub fn genus_from_degree(deg: u64, q: u64) -> u64 {
    debug_assert!(deg >= 1);
    let num = (q - 1) * (deg - 1);
    debug_assert_eq!(num % 2, 0);
    num / 2
}

fn build_report(genus: u64, n_points: u64, size: u64) -> CurveReport {
    let hw = hasse_weil(genus, size);
    let maximal = if is_square(size) {
        Some(n_points == hw)
    } else {
        None
    };
    CurveReport {
        genus,
        n_points,
        tau: size as i64 + 1 - n_points as i64,
        hw_bound: hw,
        maximal,
    }
}

/// Hasse-Weil upper bound `size + 1 + 2g√size`, exact for square sizes and
/// floored otherwise.
pub fn hasse_weil(genus: u64, size: u64) -> u64 {
    size + 1 + 2 * genus * isqrt(size)
}

pub fn is_square(n: u64) -> bool {
    let s = isqrt(n);
    s * s == n
}

pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut s = (n as f64).sqrt() as u64;
    while (s + 1) * (s + 1) <= n {
        s += 1;
    }
    while s * s > n {
        s -= 1;
    }
    s
}

/// Maximality per the Hasse-Weil bound; only meaningful over a field of
/// square size. When the bound is attained, additionally asserts the
/// genus constraint `g ≤ (√q − 1)²/4 or g = (q − √q)/2` that maximal
/// curves are known to satisfy.
pub fn maximality_check(report: &CurveReport, size: u64) -> Result<bool> {
    if !is_square(size) {
        return Err(Error::BadParameter(format!(
            "maximality needs a square field size, got {}",
            size
        )));
    }
    let maximal = report.n_points == hasse_weil(report.genus, size);
    if maximal {
        assert!(
            genus_admissible_for_maximal(report.genus, size),
            "maximal genus {} violates the genus constraint over size {}",
            report.genus,
            size
        );
    }
    Ok(maximal)
}

/// `g ≤ (√q − 1)²/4 or g = (q − √q)/2`, in exact integer arithmetic.
pub fn genus_admissible_for_maximal(genus: u64, size: u64) -> bool {
    let s = isqrt(size);
    debug_assert_eq!(s * s, size);
    4 * genus <= (s - 1) * (s - 1) || 2 * genus == size - s
}

/// A fibre product of Artin-Schreier curves over the `x`-line, recorded by
/// the trace forms of its members.
#[derive(Clone, Debug)]
pub struct FibreProduct {
    basis_forms: Vec<TraceForm>,
    members: Vec<ArtinSchreierCurve>,
}

impl FibreProduct {
    /// Build from member forms, requiring the induced codewords to be
    /// `F_q`-independent (the subcode picture).
    pub fn new(basis_forms: Vec<TraceForm>, tower: &FieldTower) -> Result<Self> {
        let words: Vec<Codeword> = basis_forms.iter().map(|f| f.codeword(tower)).collect();
        if grm::rank_over_q(&words, tower) != basis_forms.len() {
            return Err(Error::DependentBasis);
        }
        Self::new_unchecked(basis_forms, tower)
    }

    /// Build without the codeword-independence requirement. Needed for the
    /// fully split families whose member trace functions are identically
    /// zero; the members must still be valid curves.
    pub fn new_unchecked(basis_forms: Vec<TraceForm>, tower: &FieldTower) -> Result<Self> {
        let members: Result<Vec<ArtinSchreierCurve>> = basis_forms
            .iter()
            .map(|f| ArtinSchreierCurve::new(f.clone(), tower))
            .collect();
        Ok(FibreProduct {
            members: members?,
            basis_forms,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis_forms.len()
    }

    pub fn basis_forms(&self) -> &[TraceForm] {
        &self.basis_forms
    }

    pub fn members(&self) -> &[ArtinSchreierCurve] {
        &self.members
    }

    /// The subcode spanned by the member codewords.
    pub fn subcode(&self, tower: &FieldTower) -> Result<SubcodeBasis> {
        let words = self.basis_forms.iter().map(|f| f.codeword(tower)).collect();
        SubcodeBasis::new(words, tower)
    }

    /// Points above `x` exist iff every member trace vanishes, and then
    /// there are `q^r` of them; one point over infinity.
    pub fn count_points(&self, tower: &FieldTower) -> u64 {
        let r = self.basis_forms.len() as u32;
        let common_zero = tower
            .elements()
            .filter(|x| {
                self.basis_forms
                    .iter()
                    .all(|f| f.eval(x, tower).is_zero())
            })
            .count() as u64;
        tower.q().pow(r) * common_zero + 1
    }

    /// Every nonzero `F_q`-combination of the basis forms, in a fixed
    /// order.
    pub fn span_members(&self, tower: &FieldTower) -> Vec<TraceForm> {
        let q = tower.q();
        let r = self.basis_forms.len();
        let mut out = Vec::with_capacity(q.pow(r as u32) as usize - 1);
        for idx in 1..q.pow(r as u32) {
            let mut form = TraceForm::zero(tower);
            let mut i = idx;
            for f in &self.basis_forms {
                let lambda = i % q;
                i /= q;
                if lambda != 0 {
                    form = form.add(&f.scale(&tower.embed_base_int(lambda), tower), tower);
                }
            }
            out.push(form);
        }
        out
    }

    /// Trace of Frobenius via the aggregation identity
    /// `(q−1)·τ_D = Σ_{f ≠ 0} τ_f` over the span. Exact division; also
    /// cross-checked against the direct count.
    pub fn tau_aggregate(&self, tower: &FieldTower) -> Result<i64> {
        let size = tower.size() as i64;
        let mut total: i64 = 0;
        for form in self.span_members(tower) {
            let zero_fibres = tower
                .elements()
                .filter(|x| form.eval(x, tower).is_zero())
                .count() as i64;
            let n_f = tower.q() as i64 * zero_fibres + 1;
            total += size + 1 - n_f;
        }
        let denom = tower.q() as i64 - 1;
        if total % denom != 0 {
            return Err(Error::Invalid(format!(
                "tau aggregation sum {} not divisible by q-1",
                total
            )));
        }
        let tau = total / denom;
        let direct = size + 1 - self.count_points(tower) as i64;
        if tau != direct {
            return Err(Error::Invalid(format!(
                "aggregated tau {} disagrees with direct count {}",
                tau, direct
            )));
        }
        Ok(tau)
    }

    /// Genus via the aggregation identity `(q−1)·g(C_D) = Σ_{f ≠ 0} g(C_f)`
    /// over the span, each member taken in its model-preserving reduced
    /// form. Exact division.
    pub fn genus_aggregate(&self, tower: &FieldTower) -> Result<u64> {
        let mut total: u64 = 0;
        for form in self.span_members(tower) {
            let reduced = form.reduce_model(tower)?;
            let deg = reduced.degree().unwrap_or(0);
            if deg == 0 {
                continue; // genus 0
            }
            if deg % tower.p() == 0 {
                return Err(Error::DegreeNotCoprime {
                    degree: deg,
                    p: tower.p(),
                });
            }
            total += genus_from_degree(deg, tower.q());
        }
        let denom = tower.q() - 1;
        if total % denom != 0 {
            return Err(Error::Invalid(format!(
                "genus aggregation sum {} not divisible by q-1",
                total
            )));
        }
        Ok(total / denom)
    }

    pub fn report(&self, tower: &FieldTower) -> Result<CurveReport> {
        let genus = self.genus_aggregate(tower)?;
        let n_points = self.count_points(tower);
        Ok(build_report(genus, n_points, tower.size()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{build_tower, FieldElement};

    fn form(terms: &[(u64, u64)], tower: &FieldTower) -> TraceForm {
        let t: Vec<(u64, FieldElement)> = terms
            .iter()
            .map(|&(e, c)| (e, tower.from_int(c)))
            .collect();
        TraceForm::from_terms(&t, tower.zero(), tower).unwrap()
    }

    #[test]
    fn genus_three_curve_over_f27() {
        // y³ − y = 2x⁴ + x² − x over F_27: genus 3, 55 points, bound 58
        let t = build_tower(3, 1, 3).unwrap();
        let c = ArtinSchreierCurve::new(form(&[(4, 2), (2, 1), (1, 2)], &t), &t).unwrap();
        let rep = c.report(&t);
        assert_eq!(rep.genus, 3);
        assert_eq!(rep.n_points, 55);
        assert_eq!(rep.hw_bound, 58);
        assert_eq!(rep.tau, 27 + 1 - 55);
        assert_eq!(rep.maximal, None);
    }

    #[test]
    fn rational_curve_and_dictionary() {
        let t = build_tower(3, 1, 3).unwrap();
        // y³ − y = x: genus 0, q^m + 1 points
        let c = ArtinSchreierCurve::new(form(&[(1, 1)], &t), &t).unwrap();
        assert_eq!(c.genus(&t), 0);
        assert_eq!(c.count_points(&t), 28);
        // w = 27 − (28 − 1)/3 = 18 = weight of the word Tr(x)
        let w = c.form().codeword(&t).weight();
        assert_eq!(w, 18);
        assert!(c.weight_point_check(w, &t).unwrap());
        assert!(!c.weight_point_check(w + 1, &t).unwrap());
    }

    #[test]
    fn degree_divisible_by_p_rejected() {
        let t = build_tower(3, 1, 3).unwrap();
        assert!(matches!(
            ArtinSchreierCurve::new(form(&[(3, 1), (1, 1)], &t), &t),
            Err(Error::DegreeNotCoprime { .. })
        ));
    }

    #[test]
    fn hasse_weil_values() {
        assert_eq!(hasse_weil(3, 27), 58);
        assert_eq!(hasse_weil(0, 49), 50);
        assert_eq!(hasse_weil(1, 9), 16);
        assert_eq!(hasse_weil(3, 9), 28);
    }

    #[test]
    fn maximality_needs_square_size() {
        let rep = CurveReport {
            genus: 3,
            n_points: 55,
            tau: -27,
            hw_bound: 58,
            maximal: None,
        };
        assert!(maximality_check(&rep, 27).is_err());
    }

    #[test]
    fn maximal_genus_condition_instances() {
        // g = 1 over F_9: (√q − 1)²/4 = 1
        assert!(genus_admissible_for_maximal(1, 9));
        // g = 3 over F_9: (q − √q)/2 = 3
        assert!(genus_admissible_for_maximal(3, 9));
        assert!(!genus_admissible_for_maximal(2, 9));
    }

    #[test]
    fn single_member_fibre_product_is_the_curve() {
        let t = build_tower(3, 1, 3).unwrap();
        let f = form(&[(4, 2), (2, 1), (1, 2)], &t);
        let curve = ArtinSchreierCurve::new(f.clone(), &t).unwrap();
        let fp = FibreProduct::new(vec![f], &t).unwrap();
        assert_eq!(fp.count_points(&t), curve.count_points(&t));
        assert_eq!(fp.genus_aggregate(&t).unwrap(), curve.genus(&t));
        assert_eq!(
            fp.tau_aggregate(&t).unwrap(),
            27 + 1 - curve.count_points(&t) as i64
        );
    }

    #[test]
    fn dependent_forms_rejected() {
        let t = build_tower(3, 1, 3).unwrap();
        let f = form(&[(4, 2), (2, 1)], &t);
        let g = f.scale(&t.from_int(2), &t);
        assert!(matches!(
            FibreProduct::new(vec![f, g], &t),
            Err(Error::DependentBasis)
        ));
    }

    #[test]
    fn isqrt_edge_cases() {
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(1), 1);
        assert_eq!(isqrt(26), 5);
        assert_eq!(isqrt(27), 5);
        assert!(is_square(81));
        assert!(!is_square(27));
    }
}
