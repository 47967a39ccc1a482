//! Exact-rational and floating complex linear algebra for small dimensions.
//!
//! Two scalar modes exist and never mix silently:
//!
//! * **exact** — complex numbers with arbitrary-precision rational parts;
//!   the default for verification, where verdicts must be unambiguous.
//! * **float** — `f64` complex numbers, used for numerical solver output.
//!
//! Orthogonality and pivot decisions in float mode use the relative
//! tolerance [`ORTHO_EPS`] applied to `|<a|b>| / (|a|·|b|)`.
//!
//! Vectors serialize as JSON arrays of `[re, im]` pairs: exact parts as
//! decimal-integer strings `"p/q"` (or `"p"`), float parts as numbers.

mod elim;
mod exact;
mod io;

use num_complex::Complex64;
use thiserror::Error;

pub use exact::{format_rational, parse_rational, ExactComplex};
pub use io::RawComponent;

/// Relative orthogonality/pivot tolerance for float mode.
pub const ORTHO_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Float => write!(f, "float"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("cannot mix exact and float values in one operation")]
    ModeMismatch,
    #[error("operation requires at least one vector")]
    EmptyInput,
    #[error("vector dimension must be at least 1")]
    ZeroDimension,
}

/// A complex scalar in one of the two arithmetic modes.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(ExactComplex),
    Float(Complex64),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Float(_) => Mode::Float,
        }
    }

    /// Exact zero test; float scalars compare against literal zero.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(z) => z.is_zero(),
            Scalar::Float(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    pub fn abs(&self) -> f64 {
        match self {
            Scalar::Exact(z) => z.to_complex64().norm(),
            Scalar::Float(z) => z.norm(),
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact(z) => Scalar::Exact(z.conj()),
            Scalar::Float(z) => Scalar::Float(z.conj()),
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Exact(z) => write!(f, "{z}"),
            Scalar::Float(z) => write!(f, "{z}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum VectorData {
    Exact(Vec<ExactComplex>),
    Float(Vec<Complex64>),
}

/// A fixed-dimension complex vector, exact or float.
///
/// States are generally unnormalized; scaling by a nonzero scalar never
/// changes any orthogonality relation used in this crate.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    pub(crate) data: VectorData,
}

impl Vector {
    pub fn exact(components: Vec<ExactComplex>) -> Self {
        Self {
            data: VectorData::Exact(components),
        }
    }

    /// Convenience constructor for real integer amplitudes.
    pub fn exact_ints(components: &[i64]) -> Self {
        Self::exact(components.iter().map(|&x| ExactComplex::from_ints(x, 0)).collect())
    }

    pub fn float(components: Vec<Complex64>) -> Self {
        Self {
            data: VectorData::Float(components),
        }
    }

    pub fn dim(&self) -> usize {
        match &self.data {
            VectorData::Exact(v) => v.len(),
            VectorData::Float(v) => v.len(),
        }
    }

    pub fn mode(&self) -> Mode {
        match &self.data {
            VectorData::Exact(_) => Mode::Exact,
            VectorData::Float(_) => Mode::Float,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            VectorData::Exact(v) => v.iter().all(ExactComplex::is_zero),
            VectorData::Float(v) => v.iter().all(|z| z.re == 0.0 && z.im == 0.0),
        }
    }

    pub fn exact_components(&self) -> Option<&[ExactComplex]> {
        match &self.data {
            VectorData::Exact(v) => Some(v),
            VectorData::Float(_) => None,
        }
    }

    pub fn float_components(&self) -> Option<&[Complex64]> {
        match &self.data {
            VectorData::Float(v) => Some(v),
            VectorData::Exact(_) => None,
        }
    }

    /// Lossy conversion to float mode (identity on float vectors).
    pub fn to_float(&self) -> Vector {
        match &self.data {
            VectorData::Exact(v) => Vector::float(v.iter().map(ExactComplex::to_complex64).collect()),
            VectorData::Float(_) => self.clone(),
        }
    }

    pub fn norm(&self) -> f64 {
        match &self.data {
            VectorData::Exact(v) => v
                .iter()
                .map(|z| z.to_complex64().norm_sqr())
                .sum::<f64>()
                .sqrt(),
            VectorData::Float(v) => v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt(),
        }
    }

    /// Standard basis vector `e_index` (0-based) in the given mode.
    pub fn basis(dim: usize, index: usize, mode: Mode) -> Vector {
        assert!(index < dim);
        match mode {
            Mode::Exact => {
                let mut v = vec![ExactComplex::zero(); dim];
                v[index] = ExactComplex::one();
                Vector::exact(v)
            }
            Mode::Float => {
                let mut v = vec![Complex64::new(0.0, 0.0); dim];
                v[index] = Complex64::new(1.0, 0.0);
                Vector::float(v)
            }
        }
    }
}

impl std::fmt::Display for Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        match &self.data {
            VectorData::Exact(v) => {
                for (i, z) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{z}")?;
                }
            }
            VectorData::Float(v) => {
                for (i, z) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{z}")?;
                }
            }
        }
        write!(f, ")")
    }
}

fn check_pair(a: &Vector, b: &Vector) -> Result<(), LinalgError> {
    if a.dim() != b.dim() {
        return Err(LinalgError::DimensionMismatch(a.dim(), b.dim()));
    }
    if a.mode() != b.mode() {
        return Err(LinalgError::ModeMismatch);
    }
    Ok(())
}

fn check_family(vs: &[Vector]) -> Result<Option<(usize, Mode)>, LinalgError> {
    let Some(first) = vs.first() else {
        return Ok(None);
    };
    for v in vs {
        check_pair(first, v)?;
    }
    Ok(Some((first.dim(), first.mode())))
}

/// Sesquilinear inner product, conjugate-linear in the first argument.
pub fn inner_product(a: &Vector, b: &Vector) -> Result<Scalar, LinalgError> {
    check_pair(a, b)?;
    match (&a.data, &b.data) {
        (VectorData::Exact(x), VectorData::Exact(y)) => {
            let mut acc = ExactComplex::zero();
            for (xa, yb) in x.iter().zip(y) {
                acc = &acc + &(&xa.conj() * yb);
            }
            Ok(Scalar::Exact(acc))
        }
        (VectorData::Float(x), VectorData::Float(y)) => {
            let acc: Complex64 = x.iter().zip(y).map(|(xa, yb)| xa.conj() * yb).sum();
            Ok(Scalar::Float(acc))
        }
        _ => unreachable!("modes already checked"),
    }
}

/// `|<a|b>| / (|a|·|b|)`; zero-norm inputs yield 0.
pub fn normalized_abs_inner(a: &Vector, b: &Vector) -> Result<f64, LinalgError> {
    let ip = inner_product(a, b)?.abs();
    let na = a.norm();
    let nb = b.norm();
    if na == 0.0 || nb == 0.0 {
        return Ok(0.0);
    }
    Ok(ip / (na * nb))
}

/// Orthogonality test: exact zero in exact mode, relative tolerance
/// [`ORTHO_EPS`] in float mode.
pub fn is_orthogonal(a: &Vector, b: &Vector) -> Result<bool, LinalgError> {
    match (inner_product(a, b)?, a.mode()) {
        (ip, Mode::Exact) => Ok(ip.is_zero()),
        (_, Mode::Float) => Ok(normalized_abs_inner(a, b)? <= ORTHO_EPS),
    }
}

/// Dimension of the span. The empty family has rank 0.
pub fn rank(vs: &[Vector]) -> Result<usize, LinalgError> {
    let Some((_, mode)) = check_family(vs)? else {
        return Ok(0);
    };
    match mode {
        Mode::Exact => Ok(elim::rank_exact(
            vs.iter()
                .map(|v| v.exact_components().expect("exact family").to_vec())
                .collect(),
        )),
        Mode::Float => Ok(elim::rank_float(
            vs.iter()
                .map(|v| v.float_components().expect("float family").to_vec())
                .collect(),
        )),
    }
}

/// Basis of `{x : <v|x> = 0 for all v in vs}` inside dimension `dim`.
///
/// The result has `dim - rank(vs)` elements; an empty `vs` yields the
/// standard basis of the whole space.
pub fn orthocomplement_basis(
    vs: &[Vector],
    dim: usize,
    mode: Mode,
) -> Result<Vec<Vector>, LinalgError> {
    if dim == 0 {
        return Err(LinalgError::ZeroDimension);
    }
    if let Some((d, m)) = check_family(vs)? {
        if d != dim {
            return Err(LinalgError::DimensionMismatch(d, dim));
        }
        if m != mode {
            return Err(LinalgError::ModeMismatch);
        }
    }
    match mode {
        Mode::Exact => {
            let rows: Vec<Vec<ExactComplex>> = vs
                .iter()
                .map(|v| v.exact_components().expect("exact family").to_vec())
                .collect();
            Ok(elim::nullspace_exact(&rows, dim)
                .into_iter()
                .map(Vector::exact)
                .collect())
        }
        Mode::Float => {
            let rows: Vec<Vec<Complex64>> = vs
                .iter()
                .map(|v| v.float_components().expect("float family").to_vec())
                .collect();
            Ok(elim::nullspace_float(&rows, dim)
                .into_iter()
                .map(Vector::float)
                .collect())
        }
    }
}

/// Kronecker product in subsystem order; the last factor varies fastest.
pub fn tensor(vs: &[Vector]) -> Result<Vector, LinalgError> {
    let Some((_, mode)) = check_family_any_dims(vs)? else {
        return Err(LinalgError::EmptyInput);
    };
    match mode {
        Mode::Exact => {
            let mut acc = vec![ExactComplex::one()];
            for v in vs {
                let comps = v.exact_components().expect("exact family");
                let mut next = Vec::with_capacity(acc.len() * comps.len());
                for a in &acc {
                    for c in comps {
                        next.push(a * c);
                    }
                }
                acc = next;
            }
            Ok(Vector::exact(acc))
        }
        Mode::Float => {
            let mut acc = vec![Complex64::new(1.0, 0.0)];
            for v in vs {
                let comps = v.float_components().expect("float family");
                let mut next = Vec::with_capacity(acc.len() * comps.len());
                for a in &acc {
                    for c in comps {
                        next.push(a * c);
                    }
                }
                acc = next;
            }
            Ok(Vector::float(acc))
        }
    }
}

fn check_family_any_dims(vs: &[Vector]) -> Result<Option<(usize, Mode)>, LinalgError> {
    let Some(first) = vs.first() else {
        return Ok(None);
    };
    for v in vs {
        if v.mode() != first.mode() {
            return Err(LinalgError::ModeMismatch);
        }
    }
    Ok(Some((first.dim(), first.mode())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fv(xs: &[f64]) -> Vector {
        Vector::float(xs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    #[test]
    fn inner_product_examples() {
        // Orthonormal basis pair.
        let e0 = Vector::exact_ints(&[1, 0]);
        let e1 = Vector::exact_ints(&[0, 1]);
        assert!(inner_product(&e0, &e1).unwrap().is_zero());

        // 2|0>-|1> against |0>+2|1>.
        let a = Vector::exact_ints(&[2, -1]);
        let b = Vector::exact_ints(&[1, 2]);
        assert!(inner_product(&a, &b).unwrap().is_zero());

        // Self inner product of an unnormalized vector.
        let c = Vector::exact_ints(&[1, 1]);
        assert_eq!(
            inner_product(&c, &c).unwrap(),
            Scalar::Exact(ExactComplex::from_ints(2, 0))
        );
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_first_slot() {
        let a = Vector::exact(vec![ExactComplex::from_ints(0, 1), ExactComplex::from_ints(2, 0)]);
        let b = Vector::exact(vec![ExactComplex::from_ints(1, 0), ExactComplex::from_ints(0, 3)]);
        // <a|b> = conj(i)*1 + conj(2)*3i = -i + 6i = 5i
        assert_eq!(
            inner_product(&a, &b).unwrap(),
            Scalar::Exact(ExactComplex::from_ints(0, 5))
        );
    }

    #[test]
    fn mode_and_dimension_errors() {
        let a = Vector::exact_ints(&[1, 0]);
        let b = fv(&[1.0, 0.0]);
        assert_eq!(inner_product(&a, &b), Err(LinalgError::ModeMismatch));
        let c = Vector::exact_ints(&[1, 0, 0]);
        assert_eq!(
            inner_product(&a, &c),
            Err(LinalgError::DimensionMismatch(2, 3))
        );
        assert!(rank(&[a, c]).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            rank(&[
                Vector::exact_ints(&[1, 0]),
                Vector::exact_ints(&[0, 1]),
                Vector::exact_ints(&[1, 1]),
            ])
            .unwrap(),
            2
        );
        // 3x3 with nonzero determinant (hand-checked: det = -3... actually
        // det([[1,0,0],[1,1,1],[1,1,-2]]) = 1*(1*(-2) - 1*1) = -3).
        assert_eq!(
            rank(&[
                Vector::exact_ints(&[1, 0, 0]),
                Vector::exact_ints(&[1, 1, 1]),
                Vector::exact_ints(&[1, 1, -2]),
            ])
            .unwrap(),
            3
        );
        assert_eq!(rank(&[]).unwrap(), 0);
    }

    #[test]
    fn orthocomplement_examples() {
        let basis = orthocomplement_basis(&[Vector::exact_ints(&[1, 0])], 2, Mode::Exact).unwrap();
        assert_eq!(basis, vec![Vector::exact_ints(&[0, 1])]);

        let basis = orthocomplement_basis(
            &[Vector::exact_ints(&[1, 1, 1]), Vector::exact_ints(&[1, 1, -2])],
            3,
            Mode::Exact,
        )
        .unwrap();
        assert_eq!(basis.len(), 1);
        // Proportional to (1,-1,0): second component = -first, third = 0.
        let comps = basis[0].exact_components().unwrap();
        assert!(!comps[0].is_zero());
        assert_eq!(&comps[0] + &comps[1], ExactComplex::zero());
        assert!(comps[2].is_zero());

        // A spanning family has a zero complement.
        let full = orthocomplement_basis(
            &[Vector::exact_ints(&[1, 0]), Vector::exact_ints(&[1, 1])],
            2,
            Mode::Exact,
        )
        .unwrap();
        assert!(full.is_empty());

        // Empty family: the whole space.
        let all = orthocomplement_basis(&[], 3, Mode::Exact).unwrap();
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn tensor_examples() {
        let t = tensor(&[Vector::exact_ints(&[1, 0]), Vector::exact_ints(&[1, 1])]).unwrap();
        assert_eq!(t, Vector::exact_ints(&[1, 1, 0, 0]));
        let t = tensor(&[Vector::exact_ints(&[0, 1]), Vector::exact_ints(&[0, 1])]).unwrap();
        assert_eq!(t, Vector::exact_ints(&[0, 0, 0, 1]));
        assert_eq!(tensor(&[]), Err(LinalgError::EmptyInput));
    }

    #[test]
    fn float_orthogonality_uses_relative_tolerance() {
        let a = fv(&[1e6, 0.0]);
        let b = fv(&[1e-12, 1e6]);
        // Normalized overlap ~ 1e-18.
        assert!(is_orthogonal(&a, &b).unwrap());
        let c = fv(&[1.0, 1.0]);
        assert!(!is_orthogonal(&a, &c).unwrap());
    }
}
