//! The S-spectrum of a quaternionic matrix.
//!
//! A quaternion `q` belongs to the S-spectrum of `T` when the pencil
//! `Δ_q(T) = T² - 2·Re(q)·T + |q|²·I` is singular. Since Δ depends on `q`
//! only through `(Re q, |q|)`, the S-spectrum is a union of similarity
//! classes; it is computed here from the eigenvalues of χ(T), which occur in
//! conjugate pairs and whose upper-half-plane members are exactly the
//! canonical class representatives. Each class carries a unit right
//! eigenvector recovered by unstacking the corresponding χ eigenvector.

use num_complex::Complex64;

use crate::cmat::cnorm;
use crate::error::Error;
use crate::qmat::{QMatrix, QVector};
use crate::quat::{class_rep, Quaternion, SimilarityClass};

/// Imaginary parts at or below this magnitude are treated as rounding noise
/// and clamped to the real axis before ℂ⁺ filtering.
pub const IM_CLAMP_TOL: f64 = 1e-9;

/// Relative tolerance for merging two ℂ⁺ eigenvalues into one class.
pub const CLASS_DEDUP_TOL: f64 = 1e-7;

/// `Δ_q(T) = T² - 2·Re(q)·T + |q|²·I`; constant on similarity classes.
pub fn delta(t: &QMatrix, q: Quaternion) -> QMatrix {
    let n = t.dim();
    let t2 = t.matmul(t);
    let lin = t.scaled(2.0 * q.re());
    let cons = QMatrix::identity(n).scaled(q.norm_sqr());
    t2.sub(&lin).add(&cons)
}

/// Residual of the factorization `Δ_q(T)x = T(Tx - xq) - (Tx - xq)q*`,
/// which holds for every quaternion `q` because `q + q*` is real.
pub fn delta_factor_check(t: &QMatrix, q: Quaternion, x: &QVector) -> Result<f64, Error> {
    let lhs = delta(t, q).apply(x)?;
    let r = t.apply(x)?.sub(&x.scaled_right(q));
    let rhs = t.apply(&r)?.sub(&r.scaled_right(q.conj()));
    Ok(lhs.sub(&rhs).norm())
}

/// S-spectrum as a deduplicated set of similarity classes with witnesses.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    /// Canonical ℂ⁺ representatives, sorted by `(re, im)`.
    pub classes: Vec<SimilarityClass>,
    /// A unit right eigenvector per class: `T·x ≈ x·(re + im·i)`.
    pub witnesses: Vec<QVector>,
    /// Largest deviation observed while matching χ eigenvalues into
    /// conjugate pairs; large values indicate an unreliable extraction.
    pub pairing_defect: f64,
}

impl SpectrumResult {
    /// Largest right-eigenvalue residual `‖T·x - x·λ‖` over all witnesses.
    pub fn witness_residual(&self, t: &QMatrix) -> Result<f64, Error> {
        let mut worst = 0.0f64;
        for (c, x) in self.classes.iter().zip(&self.witnesses) {
            let lambda = Quaternion::from_complex(c.as_complex());
            let r = t.apply(x)?.sub(&x.scaled_right(lambda)).norm();
            worst = worst.max(r);
        }
        Ok(worst)
    }
}

/// The n ℂ⁺ eigenvalues of χ(T) with multiplicity, plus unit witnesses.
///
/// χ eigenvalues come in conjugate pairs; each pair contributes the member
/// with nonnegative imaginary part. Returns `(values, witnesses, defect)`.
pub fn upper_eigenpairs(t: &QMatrix) -> Result<(Vec<Complex64>, Vec<QVector>, f64), Error> {
    let chi = t.chi();
    let (vals, vecs) = chi.eigen()?;
    let two_n = vals.len();
    let n = two_n / 2;

    let clamp = |z: Complex64| {
        if z.im.abs() <= IM_CLAMP_TOL {
            Complex64::new(z.re, 0.0)
        } else {
            z
        }
    };

    // Greedy conjugate pairing, most decisive (largest |Im|) first.
    let mut pool: Vec<(usize, Complex64)> =
        vals.iter().copied().map(clamp).enumerate().collect();
    pool.sort_by(|a, b| {
        b.1.im
            .abs()
            .partial_cmp(&a.1.im.abs())
            .unwrap()
            .then(a.1.re.partial_cmp(&b.1.re).unwrap())
            .then(a.0.cmp(&b.0))
    });
    let mut kept: Vec<(usize, Complex64)> = Vec::with_capacity(n);
    let mut defect = 0.0f64;
    while let Some((i, v)) = pool.first().copied() {
        pool.remove(0);
        let target = v.conj();
        let (pos, _) = pool
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                (a.1 - target)
                    .norm()
                    .partial_cmp(&(b.1 - target).norm())
                    .unwrap()
            })
            .ok_or_else(|| Error::EigenFailure("odd eigenvalue count while pairing".into()))?;
        let (j, w) = pool.remove(pos);
        defect = defect.max((w - target).norm());
        let (ki, kv) = if v.im >= w.im { (i, v) } else { (j, w) };
        kept.push((ki, Complex64::new(kv.re, kv.im.max(0.0))));
    }

    kept.sort_by(|a, b| {
        a.1.re
            .partial_cmp(&b.1.re)
            .unwrap()
            .then(a.1.im.partial_cmp(&b.1.im).unwrap())
    });

    let mut values = Vec::with_capacity(n);
    let mut witnesses = Vec::with_capacity(n);
    for (idx, val) in kept {
        let col: Vec<Complex64> = (0..two_n).map(|r| vecs[(r, idx)]).collect();
        let norm = cnorm(&col);
        if norm == 0.0 {
            return Err(Error::EigenFailure("zero eigenvector".into()));
        }
        let unit: Vec<Complex64> = col.iter().map(|z| z / norm).collect();
        values.push(val);
        witnesses.push(QVector::unstack(&unit));
    }
    Ok((values, witnesses, defect))
}

/// Computes the S-spectrum of `T` as deduplicated similarity classes.
pub fn s_spectrum(t: &QMatrix) -> Result<SpectrumResult, Error> {
    let (values, witnesses, pairing_defect) = upper_eigenpairs(t)?;
    let tol = CLASS_DEDUP_TOL * (1.0 + t.op_norm()?);

    let mut classes: Vec<SimilarityClass> = Vec::new();
    let mut reps: Vec<QVector> = Vec::new();
    for (v, w) in values.into_iter().zip(witnesses) {
        let cand = SimilarityClass::new(v.re, v.im);
        let dup = classes
            .iter()
            .any(|c| (c.re - cand.re).abs() <= tol && (c.im_norm - cand.im_norm).abs() <= tol);
        if !dup {
            classes.push(cand);
            reps.push(w);
        }
    }
    Ok(SpectrumResult { classes, witnesses: reps, pairing_defect })
}

/// Smallest singular value of `χ(Δ_q(T))` at the class representative;
/// vanishes on the S-spectrum and is strictly positive off it.
pub fn delta_min_sv(t: &QMatrix, c: SimilarityClass) -> Result<f64, Error> {
    let q = Quaternion::from_complex(c.as_complex());
    delta(t, q).chi().smallest_singular_value()
}

/// S-spectral radius `max √(h² + s²)` over class representatives.
pub fn s_radius(t: &QMatrix) -> Result<f64, Error> {
    let spec = s_spectrum(t)?;
    Ok(spec.classes.iter().map(|c| c.modulus()).fold(0.0, f64::max))
}

fn class_point(c: &SimilarityClass) -> Complex64 {
    c.as_complex()
}

/// Directed distance `sup_{a∈A} inf_{b∈B} |a - b|` between class sets.
pub fn directed_class_distance(a: &[SimilarityClass], b: &[SimilarityClass]) -> Result<f64, Error> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput("class set"));
    }
    let mut worst = 0.0f64;
    for pa in a {
        let best = b
            .iter()
            .map(|pb| (class_point(pa) - class_point(pb)).norm())
            .fold(f64::INFINITY, f64::min);
        worst = worst.max(best);
    }
    Ok(worst)
}

/// Symmetric Hausdorff distance between the class sets of two spectra.
pub fn spectrum_distance(a: &SpectrumResult, b: &SpectrumResult) -> Result<f64, Error> {
    let d1 = directed_class_distance(&a.classes, &b.classes)?;
    let d2 = directed_class_distance(&b.classes, &a.classes)?;
    Ok(d1.max(d2))
}
