//! Weight hierarchy of `R_q(s, m)`: an explicit minimum-weight-subcode
//! construction, the closed-form generalized Hamming weight `d_r`, and
//! two independent brute-force oracles.

use crate::field::{FieldElement, FieldTower};
use crate::grm::{self, Codeword, ReducedMultiPoly, SubcodeBasis};
use crate::{Error, Result};

/// Default cap on the number of subspaces the echelon-enumeration oracle
/// will visit.
pub const BRUTE_CAP: u128 = 10_000_000;

/// An exponent tuple `σ = (i_1, …, i_m)` with each component in
/// `{0, …, q−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentTuple {
    pub sigma: Vec<u64>,
}

impl ExponentTuple {
    pub fn degree(&self) -> u64 {
        self.sigma.iter().sum()
    }
}

/// The first `r` tuples of degree `≥ m(q−1) − s` in lexicographic order on
/// `Q^m` (first component most significant).
pub fn first_r_sigmas(q: u64, m: usize, s: u64, r: usize) -> Result<Vec<ExponentTuple>> {
    let max_deg = m as u64 * (q - 1);
    if s > max_deg {
        return Err(Error::BadParameter(format!(
            "order s={} exceeds m(q-1)={}",
            s, max_deg
        )));
    }
    let threshold = max_deg - s;
    let mut out = Vec::with_capacity(r);
    let total = q.checked_pow(m as u32).ok_or_else(|| {
        Error::CapExceeded("q^m overflows".into())
    })?;
    for idx in 0..total {
        let mut sigma = vec![0u64; m];
        let mut i = idx;
        for d in sigma.iter_mut().rev() {
            *d = i % q;
            i /= q;
        }
        if sigma.iter().sum::<u64>() >= threshold {
            out.push(ExponentTuple { sigma });
            if out.len() == r {
                return Ok(out);
            }
        }
    }
    Err(Error::RankTooLarge {
        r,
        count: out.len(),
    })
}

/// The polynomial `f_σ = ∏_j ∏_{t=i_j+1}^{q−1} (X_j − α_t)` over the
/// tower's α-enumeration, expanded and reduced. The degree in `X_j` is
/// `q − 1 − i_j`.
pub fn sigma_to_poly(sigma: &ExponentTuple, tower: &FieldTower) -> ReducedMultiPoly {
    let q = tower.q();
    let m = tower.m();
    debug_assert_eq!(sigma.sigma.len(), m);
    let mut f = ReducedMultiPoly::one(tower);
    for (j, &ij) in sigma.sigma.iter().enumerate() {
        let mut exps = vec![0u64; m];
        exps[j] = 1;
        let xj = ReducedMultiPoly::monomial(&tower.one(), &exps, tower);
        for t in (ij + 1)..q {
            let alpha_t = &tower.alpha_enumeration()[t as usize];
            let factor = xj.add(
                &ReducedMultiPoly::constant(&tower.neg(alpha_t), tower),
                tower,
            );
            f = f.mul(&factor, tower);
        }
    }
    f
}

/// The closed-form `r`-th generalized Hamming weight:
/// `d_r(R_q(s, m)) = 1 + Σ_{j=1}^m i_{m−j+1} q^{j−1}` where
/// `σ_r = (i_1, …, i_m)` is the `r`-th qualifying tuple.
pub fn d_r_formula(q: u64, m: usize, s: u64, r: usize) -> Result<u64> {
    let sigmas = first_r_sigmas(q, m, s, r)?;
    let sigma_r = &sigmas[r - 1];
    let mut weight: u64 = 1;
    let mut power: u64 = 1;
    for &i in sigma_r.sigma.iter().rev() {
        weight += i * power;
        power *= q;
    }
    Ok(weight)
}

/// The explicit minimum-weight subcode: codewords of the
/// polynomials attached to the first `r` qualifying tuples. Asserts
/// independence and that the measured support weight equals the closed
/// form.
pub fn min_weight_subcode(s: u64, r: usize, tower: &FieldTower) -> Result<SubcodeBasis> {
    let q = tower.q();
    let m = tower.m();
    let sigmas = first_r_sigmas(q, m, s, r)?;
    let words: Result<Vec<Codeword>> = sigmas
        .iter()
        .map(|sigma| grm::evaluate(&sigma_to_poly(sigma, tower), tower))
        .collect();
    let basis = SubcodeBasis::new(words?, tower)?;
    let expected = d_r_formula(q, m, s, r)?;
    assert_eq!(
        basis.support_weight(),
        expected,
        "minimum subcode weight must match the closed form"
    );
    Ok(basis)
}

/// Gaussian binomial coefficient: the number of `r`-dimensional subspaces
/// of an `k`-dimensional space over `F_q`.
pub fn gaussian_binomial(k: usize, r: usize, q: u64) -> u128 {
    if r > k {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let q = q as u128;
    for i in 0..r {
        num *= q.pow((k - i) as u32) - 1;
        den *= q.pow((r - i) as u32) - 1;
    }
    debug_assert_eq!(num % den, 0);
    num / den
}

/// Exact `d_r` by enumerating every `r`-dimensional subcode once, via
/// canonical row-reduced echelon matrices over `F_q`. Errors when the
/// Gaussian-binomial count exceeds `cap`.
pub fn ghw_bruteforce(
    generator: &[Codeword],
    r: usize,
    cap: u128,
    tower: &FieldTower,
) -> Result<u64> {
    let k = generator.len();
    if r == 0 || r > k {
        return Err(Error::BadParameter(format!(
            "rank r={} out of range for dimension {}",
            r, k
        )));
    }
    let count = gaussian_binomial(k, r, tower.q());
    if count > cap {
        return Err(Error::CapExceeded(format!(
            "{} subspaces exceed the cap {}",
            count, cap
        )));
    }
    let q = tower.q();
    let scalars: Vec<FieldElement> = (0..q).map(|i| tower.embed_base_int(i)).collect();
    let n = generator.first().map_or(0, |w| w.len());
    let mut best = u64::MAX;
    let mut visited: u128 = 0;
    // iterate pivot-column combinations
    let mut pivots: Vec<usize> = (0..r).collect();
    loop {
        // free positions: (row i, col j) with j > pivots[i], j not a pivot
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &pi) in pivots.iter().enumerate() {
            for j in pi + 1..k {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        let nfree = free.len();
        let assignments = (q as u128).pow(nfree as u32);
        let mut matrix = vec![vec![0u64; k]; r];
        for (i, &pi) in pivots.iter().enumerate() {
            matrix[i][pi] = 1;
        }
        for a in 0..assignments {
            let mut x = a;
            for &(i, j) in &free {
                matrix[i][j] = (x % q as u128) as u64;
                x /= q as u128;
            }
            // support of the subspace = union of basis-row supports
            let mut support = vec![false; n];
            for row in &matrix {
                let mut word = Codeword::new(vec![tower.zero(); n]);
                for (j, &c) in row.iter().enumerate() {
                    if c != 0 {
                        word = word.add(&generator[j].scale(&scalars[c as usize], tower), tower);
                    }
                }
                for (s, v) in support.iter_mut().zip(word.values()) {
                    *s |= !v.is_zero();
                }
            }
            let w = support.iter().filter(|&&s| s).count() as u64;
            best = best.min(w);
            visited += 1;
        }
        // next combination of pivot columns
        let mut i = r;
        loop {
            if i == 0 {
                debug_assert_eq!(visited, count);
                return Ok(best);
            }
            i -= 1;
            if pivots[i] < k - (r - i) {
                pivots[i] += 1;
                for j in i + 1..r {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Exact `d_r` by the complementary enumeration: `d_r = n − max |I|` over
/// coordinate sets `I` on which the code can be shortened to dimension at
/// least `r`. Exhausts all `2^n` subsets; requires `n ≤ 24`.
///
/// Independent of [`ghw_bruteforce`]: it never enumerates subspaces.
pub fn ghw_by_shortening(generator: &[Codeword], r: usize, tower: &FieldTower) -> Result<u64> {
    let k = generator.len();
    let n = generator.first().map_or(0, |w| w.len());
    if r == 0 || r > k {
        return Err(Error::BadParameter(format!(
            "rank r={} out of range for dimension {}",
            r, k
        )));
    }
    if n > 24 {
        return Err(Error::CapExceeded(format!("length {} too large for 2^n scan", n)));
    }
    let mut best_zero: i64 = -1;
    for mask in 0u32..(1u32 << n) {
        let cols: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if (cols.len() as i64) <= best_zero {
            continue;
        }
        // dim of the shortened code = k - rank of the selected columns
        let cut: Vec<Codeword> = generator
            .iter()
            .map(|w| Codeword::new(cols.iter().map(|&i| w.values()[i].clone()).collect()))
            .collect();
        let rank = grm::rank_over_q(&cut, tower);
        if k - rank >= r {
            best_zero = cols.len() as i64;
        }
    }
    Ok(n as u64 - best_zero as u64)
}
