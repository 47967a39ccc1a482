//! Closed-form lower bounds on the sizes of unextendible product bases
//! and their genuinely-unextendible variant, with applicability predicates
//! and comparison sweeps.
//!
//! Everything here is integer-exact: ceilings and floors are integer
//! divisions, and the `N^N` bound uses arbitrary-precision integers
//! because it overflows 64 bits already at `N = 16`.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("need at least 2 parties")]
    TooFewParties,
    #[error("every local dimension must be at least 2")]
    DimensionTooSmall,
    #[error("arithmetic overflow while computing a bound")]
    Overflow,
    #[error("this bound requires an even party count of at least 4, got {0}")]
    BadPartyCount(u64),
    #[error("family parameter p must be at least 2, got {0}")]
    BadFamilyParameter(u64),
    #[error("middle dimension {0} must lie in [{1}, {2}]")]
    BadMiddleDimension(u64, u64, u64),
}

/// Local dimensions `(d_1, ..., d_N)`, held in non-decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DimensionVector {
    dims: Vec<u64>,
}

impl DimensionVector {
    /// Validates and sorts the dimensions (order is normalized on entry).
    pub fn new(dims: impl Into<Vec<u64>>) -> Result<Self, BoundsError> {
        let mut dims = dims.into();
        if dims.len() < 2 {
            return Err(BoundsError::TooFewParties);
        }
        if dims.iter().any(|&d| d < 2) {
            return Err(BoundsError::DimensionTooSmall);
        }
        dims.sort_unstable();
        Ok(Self { dims })
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn d_min(&self) -> u64 {
        self.dims[0]
    }

    pub fn d_max(&self) -> u64 {
        *self.dims.last().unwrap()
    }

    /// Total dimension `D = d_1 d_2 ... d_N`.
    pub fn total(&self) -> Result<u64, BoundsError> {
        self.dims
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .ok_or(BoundsError::Overflow)
    }

    /// `sum_m D/d_m`.
    fn codimension_sum(&self) -> Result<u64, BoundsError> {
        let total = self.total()?;
        self.dims
            .iter()
            .try_fold(0u64, |acc, &d| acc.checked_add(total / d))
            .ok_or(BoundsError::Overflow)
    }
}

impl std::fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

fn ceil_div(a: u64, b: u64) -> u64 {
    (a + b - 1) / b
}

/// Minimum UPB size `sum_m (d_m - 1) + 1`, together with the parity flag:
/// the inequality is strict when some `d_m` is even and the sum is odd,
/// in which case the effective bound is one larger.
pub fn bennett_bound(dims: &DimensionVector) -> (u64, bool) {
    let value = dims.dims().iter().map(|&d| d - 1).sum::<u64>() + 1;
    let strict = dims.dims().iter().any(|&d| d % 2 == 0) && value % 2 == 1;
    (value, strict)
}

/// `bennett_bound` with the parity refinement already applied.
pub fn bennett_effective(dims: &DimensionVector) -> u64 {
    let (value, strict) = bennett_bound(dims);
    value + u64::from(strict)
}

/// GUPB bound obtained from the single bipartition `A_1 | rest`:
/// `d_1 + D/d_1` when both terms are even, one less otherwise.
pub fn trivial_gupb_bound(dims: &DimensionVector) -> Result<u64, BoundsError> {
    let d1 = dims.d_min();
    let rest = dims.total()? / d1;
    let sum = d1.checked_add(rest).ok_or(BoundsError::Overflow)?;
    if d1 % 2 == 0 && rest % 2 == 0 {
        Ok(sum)
    } else {
        Ok(sum - 1)
    }
}

/// `D/d_max + floor((D/d_max - 2)/(N - 1)) + 1`.
pub fn demianowicz_bound(dims: &DimensionVector) -> Result<u64, BoundsError> {
    let head = dims.total()? / dims.d_max();
    let n1 = dims.n() as u64 - 1;
    Ok(head + (head - 2) / n1 + 1)
}

/// GUPB bound from summing per-party vertex-degree caps:
/// `ceil((sum_m D/d_m - 1)/(N - 1))`.
pub fn degree_sum_bound(dims: &DimensionVector) -> Result<u64, BoundsError> {
    let s = dims.codimension_sum()?;
    let n1 = dims.n() as u64 - 1;
    Ok(ceil_div(s - 1, n1))
}

/// Parity strengthening of [`degree_sum_bound`]: when some `d_m` is even
/// and `sum_m D/d_m - 1` equals `(N-1) * t` for an odd integer `t`, a
/// regular graph of odd order and odd degree would be forced, so the
/// bound rises to `t + 1`. `None` when the trigger condition fails.
pub fn parity_improved_bound(dims: &DimensionVector) -> Result<Option<u64>, BoundsError> {
    if dims.dims().iter().all(|&d| d % 2 == 1) {
        return Ok(None);
    }
    let s = dims.codimension_sum()? - 1;
    let n1 = dims.n() as u64 - 1;
    if s % n1 != 0 {
        return Ok(None);
    }
    let t = s / n1;
    if t % 2 == 1 {
        Ok(Some(t + 1))
    } else {
        Ok(None)
    }
}

/// Minimum GUPB size for `N` parties of local dimension `N`, `N` even:
/// `(N^N - 1)/(N - 1) + 1`.
pub fn nn_bound(n: u64) -> Result<BigUint, BoundsError> {
    if n % 2 != 0 || n < 4 {
        return Err(BoundsError::BadPartyCount(n));
    }
    let base = BigUint::from(n);
    let power = base.pow(u32::try_from(n).map_err(|_| BoundsError::Overflow)?);
    Ok((power - BigUint::one()) / BigUint::from(n - 1) + BigUint::one())
}

/// Every bound for one dimension vector, plus applicability flags.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub dims: DimensionVector,
    pub bennett: u64,
    pub bennett_strict_applies: bool,
    pub bennett_effective: u64,
    pub trivial_gupb: u64,
    pub demianowicz: u64,
    pub degree_sum: u64,
    pub improved_applies: bool,
    pub improved: Option<u64>,
    /// GUPB bounds are only meaningful when every `d_m >= 3`; they are
    /// still reported (flagged) below that threshold.
    pub gupb_admissible: bool,
}

pub fn compare(dims: &DimensionVector) -> Result<BoundReport, BoundsError> {
    let (bennett, strict) = bennett_bound(dims);
    let improved = parity_improved_bound(dims)?;
    Ok(BoundReport {
        dims: dims.clone(),
        bennett,
        bennett_strict_applies: strict,
        bennett_effective: bennett + u64::from(strict),
        trivial_gupb: trivial_gupb_bound(dims)?,
        demianowicz: demianowicz_bound(dims)?,
        degree_sum: degree_sum_bound(dims)?,
        improved_applies: improved.is_some(),
        improved,
        gupb_admissible: dims.d_min() >= 3,
    })
}

pub fn sweep(dims_list: &[DimensionVector]) -> Result<Vec<BoundReport>, BoundsError> {
    dims_list.iter().map(compare).collect()
}

/// The six dimension vectors of the standard bound-comparison table.
pub fn standard_comparison_dims() -> Vec<DimensionVector> {
    [
        vec![3, 3, 4],
        vec![3, 3, 5],
        vec![3, 3, 3, 4],
        vec![3, 3, 4, 4],
        vec![3, 3, 3, 3, 4],
        vec![3, 3, 3, 4, 4],
    ]
    .into_iter()
    .map(|d| DimensionVector::new(d).expect("static dims are valid"))
    .collect()
}

/// All non-decreasing dimension vectors with `n` parties and entries in
/// `[d_lo, d_hi]`.
pub fn enumerate_dimension_vectors(n: usize, d_lo: u64, d_hi: u64) -> Vec<DimensionVector> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn recurse(out: &mut Vec<DimensionVector>, current: &mut Vec<u64>, n: usize, lo: u64, hi: u64) {
        if current.len() == n {
            out.push(DimensionVector::new(current.clone()).expect("entries >= 2"));
            return;
        }
        for d in lo..=hi {
            current.push(d);
            recurse(out, current, n, d, hi);
            current.pop();
        }
    }
    recurse(&mut out, &mut current, n, d_lo, d_hi);
    out
}

/// The two tripartite families on which the degree-sum bound beats the
/// trivial one even though older bounds do not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NontrivialityFamily {
    /// Dimensions `(2p, 2p, 3p-1)`.
    A,
    /// Dimensions `(2p-1, d_mid, 3p-2)` with `2p-1 <= d_mid <= 3p-2`.
    B { d_mid: u64 },
}

/// Closed-form values attached to family A, where the trivial bound is
/// exactly `6p^2`, and the companion family `(2p, 2p, 3p)` realizes the
/// clean `8p^2` vs `6p^2` comparison between the degree-sum and
/// Demianowicz bounds.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyAClosedForms {
    pub trivial_equals_6p2: bool,
    pub companion_dims: DimensionVector,
    pub companion_degree_sum: u64,
    pub companion_degree_sum_equals_8p2: bool,
    pub companion_demianowicz: u64,
    pub companion_demianowicz_equals_6p2: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyCheck {
    pub dims: DimensionVector,
    pub degree_sum: u64,
    pub trivial_gupb: u64,
    /// `degree_sum > trivial_gupb`.
    pub non_trivial: bool,
    pub closed_forms: Option<FamilyAClosedForms>,
}

pub fn nontriviality_check(
    p: u64,
    family: NontrivialityFamily,
) -> Result<FamilyCheck, BoundsError> {
    if p < 2 {
        return Err(BoundsError::BadFamilyParameter(p));
    }
    let dims = match family {
        NontrivialityFamily::A => DimensionVector::new(vec![2 * p, 2 * p, 3 * p - 1])?,
        NontrivialityFamily::B { d_mid } => {
            if d_mid < 2 * p - 1 || d_mid > 3 * p - 2 {
                return Err(BoundsError::BadMiddleDimension(d_mid, 2 * p - 1, 3 * p - 2));
            }
            DimensionVector::new(vec![2 * p - 1, d_mid, 3 * p - 2])?
        }
    };
    let degree_sum = degree_sum_bound(&dims)?;
    let trivial = trivial_gupb_bound(&dims)?;
    let closed_forms = match family {
        NontrivialityFamily::A => {
            let companion = DimensionVector::new(vec![2 * p, 2 * p, 3 * p])?;
            let companion_degree_sum = degree_sum_bound(&companion)?;
            let companion_demianowicz = demianowicz_bound(&companion)?;
            let p2 = p.checked_mul(p).ok_or(BoundsError::Overflow)?;
            Some(FamilyAClosedForms {
                trivial_equals_6p2: trivial == 6 * p2,
                companion_dims: companion,
                companion_degree_sum,
                companion_degree_sum_equals_8p2: companion_degree_sum == 8 * p2,
                companion_demianowicz,
                companion_demianowicz_equals_6p2: companion_demianowicz == 6 * p2,
            })
        }
        NontrivialityFamily::B { .. } => None,
    };
    Ok(FamilyCheck {
        dims,
        degree_sum,
        trivial_gupb: trivial,
        non_trivial: degree_sum > trivial,
        closed_forms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(dims: &[u64]) -> DimensionVector {
        DimensionVector::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn dimension_vector_normalizes_and_validates() {
        assert_eq!(dv(&[4, 3, 3]).dims(), &[3, 3, 4]);
        assert!(DimensionVector::new(vec![3]).is_err());
        assert!(DimensionVector::new(vec![1, 3]).is_err());
    }

    #[test]
    fn bennett_examples() {
        assert_eq!(bennett_bound(&dv(&[2, 2, 2, 3])), (6, false));
        // Sum is odd and a dimension is even: strict, effective 8.
        assert_eq!(bennett_bound(&dv(&[2, 2, 3, 3])), (7, true));
        assert_eq!(bennett_effective(&dv(&[2, 2, 3, 3])), 8);
        assert_eq!(bennett_bound(&dv(&[3, 3, 3])), (7, false));
    }

    #[test]
    fn trivial_gupb_examples() {
        assert_eq!(trivial_gupb_bound(&dv(&[3, 3, 4])).unwrap(), 14);
        assert_eq!(trivial_gupb_bound(&dv(&[3, 3, 3, 4])).unwrap(), 38);
        assert_eq!(trivial_gupb_bound(&dv(&[3, 3, 3, 3, 4])).unwrap(), 110);
    }

    #[test]
    fn demianowicz_examples() {
        assert_eq!(demianowicz_bound(&dv(&[3, 3, 4])).unwrap(), 13);
        assert_eq!(demianowicz_bound(&dv(&[3, 3, 4, 4])).unwrap(), 48);
        assert_eq!(demianowicz_bound(&dv(&[3, 3, 3, 4, 4])).unwrap(), 135);
    }

    #[test]
    fn degree_sum_examples() {
        assert_eq!(degree_sum_bound(&dv(&[3, 3, 4])).unwrap(), 16);
        assert_eq!(degree_sum_bound(&dv(&[3, 3, 3, 3, 4])).unwrap(), 128);
        assert_eq!(degree_sum_bound(&dv(&[3, 3, 3])).unwrap(), 13);
    }

    #[test]
    fn parity_improved_examples() {
        assert_eq!(parity_improved_bound(&dv(&[3, 4, 5])).unwrap(), Some(24));
        assert_eq!(parity_improved_bound(&dv(&[4, 4, 4, 4])).unwrap(), Some(86));
        // 33 - 1 = 32 = 2*16 with 16 even: trigger fails.
        assert_eq!(parity_improved_bound(&dv(&[3, 3, 4])).unwrap(), None);
    }

    #[test]
    fn nn_bound_values() {
        assert_eq!(nn_bound(4).unwrap(), BigUint::from(86u32));
        // (6^6 - 1)/5 + 1 = 9331 + 1.
        assert_eq!(nn_bound(6).unwrap(), BigUint::from(9332u32));
        assert!(nn_bound(5).is_err());
        assert!(nn_bound(2).is_err());
        // Needs arbitrary precision: 16^16 = 2^64.
        assert_eq!(
            nn_bound(16).unwrap(),
            (BigUint::from(16u32).pow(16) - BigUint::one()) / BigUint::from(15u32)
                + BigUint::one()
        );
    }

    #[test]
    fn nn_bound_matches_parity_improved_on_even_square_cases() {
        for n in [4u64, 6] {
            let dims = dv(&vec![n; n as usize]);
            let improved = parity_improved_bound(&dims).unwrap().unwrap();
            assert_eq!(nn_bound(n).unwrap(), BigUint::from(improved));
        }
    }

    #[test]
    fn comparison_table_rows() {
        let expected: [(u64, u64, u64); 6] = [
            (13, 14, 16),
            (13, 17, 19),
            (36, 38, 45),
            (48, 50, 56),
            (101, 110, 128),
            (135, 146, 162),
        ];
        let reports = sweep(&standard_comparison_dims()).unwrap();
        for (report, (dem, triv, new)) in reports.iter().zip(expected) {
            assert_eq!(report.demianowicz, dem, "{}", report.dims);
            assert_eq!(report.trivial_gupb, triv, "{}", report.dims);
            assert_eq!(report.degree_sum, new, "{}", report.dims);
        }
    }

    #[test]
    fn degree_sum_dominates_demianowicz() {
        for n in 2..=5 {
            for dims in enumerate_dimension_vectors(n, 3, 8) {
                let ds = degree_sum_bound(&dims).unwrap();
                let dem = demianowicz_bound(&dims).unwrap();
                assert!(ds >= dem, "{dims}");
                if dims.dims().iter().all(|&d| d == dims.d_min()) {
                    assert_eq!(ds, dem, "{dims}");
                }
                // Ceil/floor identity for the same quantity.
                let s = dims.codimension_sum().unwrap();
                let n1 = dims.n() as u64 - 1;
                assert_eq!(ds, (s - 2) / n1 + 1, "{dims}");
                // The improvement, when defined, is exactly one.
                if let Some(imp) = parity_improved_bound(&dims).unwrap() {
                    assert_eq!(imp, ds + 1, "{dims}");
                }
            }
        }
    }

    #[test]
    fn nontriviality_families() {
        // p = 2, family A: dims (4,4,5); companion (4,4,6) realizes 32 vs 24.
        let check = nontriviality_check(2, NontrivialityFamily::A).unwrap();
        assert_eq!(check.dims.dims(), &[4, 4, 5]);
        assert!(check.non_trivial);
        assert_eq!(check.trivial_gupb, 24);
        let forms = check.closed_forms.unwrap();
        assert!(forms.trivial_equals_6p2);
        assert_eq!(forms.companion_degree_sum, 32);
        assert!(forms.companion_degree_sum_equals_8p2);
        assert_eq!(forms.companion_demianowicz, 24);
        assert!(forms.companion_demianowicz_equals_6p2);

        // p = 2, family B with middle dimension 3: dims (3,3,4).
        let check = nontriviality_check(2, NontrivialityFamily::B { d_mid: 3 }).unwrap();
        assert_eq!(check.dims.dims(), &[3, 3, 4]);
        assert_eq!(check.degree_sum, 16);
        assert_eq!(check.trivial_gupb, 14);
        assert!(check.non_trivial);

        assert!(nontriviality_check(1, NontrivialityFamily::A).is_err());
        assert!(nontriviality_check(2, NontrivialityFamily::B { d_mid: 5 }).is_err());
    }
}
