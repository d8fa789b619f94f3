//! Laplace spectrum and Morse index of Clifford hypersurfaces.
//!
//! On M = S^{n1}_{R1} × S^{n2}_{R2} the Laplacian has eigenvalues
//!
//! ```text
//! β(k1, k2) = k1(k1 + n1 - 1)/R1² + k2(k2 + n2 - 1)/R2²
//! ```
//!
//! with eigenspace the tensor product of degree-k1 and degree-k2 spherical
//! harmonics. For M ⊂ S^{n+1} (n = n1 + n2) the Jacobi operator is
//! Δ + |σ|² + n, so negative Jacobi eigenvalues are exactly the β below
//! |σ|² + n. On the quotient by S^{d-1} only fibre-invariant eigenfunctions
//! survive; since -1 ∈ S^{d-1} acts on bidegree (k1, k2) by (-1)^{k1+k2},
//! odd total degree never survives.

pub mod oracle;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactval::Rational;
use crate::geometry::{is_minimal, CliffordHypersurface, ProjectedClifford};

pub use oracle::harmonic_dimension_oracle;

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of degree-k spherical harmonics on S^n: C(n+k, n) - C(n+k-2, n).
///
/// S^0 is allowed: its two points carry the constants and the odd function.
pub fn harmonic_multiplicity(n: u32, k: u32) -> Result<u128> {
    let (n, k) = (n as u64, k as u64);
    let total = binomial(n + k, n);
    let lower = if k >= 2 {
        binomial(n + k - 2, n)
    } else {
        BigUint::zero()
    };
    (total - lower).to_u128().ok_or_else(|| {
        Error::InvalidInput(format!("multiplicity of degree {k} on S^{n} exceeds u128"))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub k1: u32,
    pub k2: u32,
    pub beta: Rational,
    pub multiplicity: u128,
    /// k1 + k2 even.
    pub even_degree: bool,
}

/// β(k1, k2) for the given hypersurface.
pub fn eigenvalue(c: &CliffordHypersurface, k1: u32, k2: u32) -> Rational {
    let part = |k: u32, n: u32, r_sq: &Rational| int(k as u64 * (k as u64 + n as u64 - 1)) / r_sq;
    part(k1, c.n1(), c.r1_sq()) + part(k2, c.n2(), c.r2_sq())
}

fn entry(c: &CliffordHypersurface, k1: u32, k2: u32) -> Result<SpectrumEntry> {
    Ok(SpectrumEntry {
        k1,
        k2,
        beta: eigenvalue(c, k1, k2),
        multiplicity: harmonic_multiplicity(c.n1(), k1)? * harmonic_multiplicity(c.n2(), k2)?,
        even_degree: (k1 + k2).is_multiple_of(2),
    })
}

/// Entries with β < bound (or ≤ bound when `inclusive`). β grows strictly in
/// each index, so each loop stops at the first degree past the bound.
fn enumerate(
    c: &CliffordHypersurface,
    bound: &Rational,
    inclusive: bool,
) -> Result<Vec<SpectrumEntry>> {
    let within = |beta: &Rational| {
        if inclusive {
            beta <= bound
        } else {
            beta < bound
        }
    };
    let mut out = Vec::new();
    let mut k1 = 0;
    while within(&eigenvalue(c, k1, 0)) {
        let mut k2 = 0;
        while within(&eigenvalue(c, k1, k2)) {
            out.push(entry(c, k1, k2)?);
            k2 += 1;
        }
        k1 += 1;
    }
    out.sort_by(|a, b| a.beta.cmp(&b.beta).then((a.k1, a.k2).cmp(&(b.k1, b.k2))));
    Ok(out)
}

/// All spectrum entries with β strictly below `bound`, ascending.
pub fn spectrum_below(c: &CliffordHypersurface, bound: &Rational) -> Result<Vec<SpectrumEntry>> {
    if bound.is_negative() {
        return Err(Error::InvalidInput(format!(
            "bound must be nonnegative, got {bound}"
        )));
    }
    enumerate(c, bound, false)
}

/// |σ|² = n1 R2²/R1² + n2 R1²/R2².
pub fn sigma_squared(c: &CliffordHypersurface) -> Rational {
    int(c.n1() as u64) * c.r2_sq() / c.r1_sq() + int(c.n2() as u64) * c.r1_sq() / c.r2_sq()
}

/// |σ|² + ambient: the Jacobi operator is negative exactly on β below this.
pub fn jacobi_threshold(c: &CliffordHypersurface, ambient_contribution: u32) -> Rational {
    sigma_squared(c) + int(ambient_contribution as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub sigma_sq: Rational,
    pub threshold: Rational,
    pub sphere_index: u128,
    /// Multiplicity of β equal to the threshold. Informational only.
    pub sphere_nullity: u128,
    /// Present when the report was computed for a projective quotient.
    pub quotient_index: Option<u128>,
    pub entries_below: Vec<SpectrumEntry>,
    pub entries_at_threshold: Vec<SpectrumEntry>,
}

/// Morse index of a minimal Clifford hypersurface in S^{n1+n2+1}.
pub fn sphere_index(c: &CliffordHypersurface) -> Result<IndexReport> {
    if !is_minimal(c) {
        return Err(Error::Unsupported(format!(
            "index counting needs a minimal Clifford hypersurface; {c} is not minimal"
        )));
    }
    let sigma_sq = sigma_squared(c);
    let threshold = jacobi_threshold(c, c.dim());
    let upto = enumerate(c, &threshold, true)?;
    let (entries_below, entries_at_threshold): (Vec<_>, Vec<_>) =
        upto.into_iter().partition(|e| e.beta < threshold);
    Ok(IndexReport {
        sphere_index: entries_below.iter().map(|e| e.multiplicity).sum(),
        sphere_nullity: entries_at_threshold.iter().map(|e| e.multiplicity).sum(),
        sigma_sq,
        threshold,
        quotient_index: None,
        entries_below,
        entries_at_threshold,
    })
}

/// Necessary condition for an eigenspace to contain S^{d-1}-invariant
/// functions: even total degree. For d = 1 it is also sufficient.
pub fn equivariant_admissible(e: &SpectrumEntry, d: u32) -> bool {
    debug_assert!(matches!(d, 1 | 2 | 4), "d must be 1, 2 or 4");
    e.even_degree
}

/// Morse index of the projection of a minimal Clifford hypersurface to 𝕂P^{r-1}.
///
/// Counts admissible entries below the Jacobi threshold. The constant
/// eigenspace contributes 1. Any other admissible entry below the threshold
/// is reported as [`Error::Internal`]: for d ≥ 2 the even-degree filter is
/// only necessary, and the count is correct only because no such entry exists.
pub fn quotient_index(p: &ProjectedClifford) -> Result<IndexReport> {
    let d = p.target().d();
    let mut report = sphere_index(p.base())?;
    let mut count: u128 = 0;
    for e in report
        .entries_below
        .iter()
        .filter(|e| equivariant_admissible(e, d))
    {
        if e.k1 + e.k2 >= 2 {
            return Err(Error::Internal(format!(
                "admissible eigenvalue β({}, {}) = {} lies below the Jacobi threshold {} for {p}",
                e.k1, e.k2, e.beta, report.threshold
            )));
        }
        // only (0, 0) reaches here: the constants, which are invariant
        count += if d == 1 { e.multiplicity } else { 1 };
    }
    report.quotient_index = Some(count);
    Ok(report)
}

/// β(2,0) ≥ β(1,1) and β(0,2) ≥ β(1,1).
pub fn verify_beta_inequalities(c: &CliffordHypersurface) -> bool {
    let mixed = eigenvalue(c, 1, 1);
    eigenvalue(c, 2, 0) >= mixed && eigenvalue(c, 0, 2) >= mixed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::minimal_clifford;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(harmonic_multiplicity(2, 2).unwrap(), 5);
        for n in 1..10 {
            assert_eq!(harmonic_multiplicity(n, 0).unwrap(), 1);
        }
        for k in 1..20 {
            assert_eq!(harmonic_multiplicity(1, k).unwrap(), 2);
        }
        assert_eq!(harmonic_multiplicity(3, 1).unwrap(), 4);
        assert_eq!(harmonic_multiplicity(0, 0).unwrap(), 1);
        assert_eq!(harmonic_multiplicity(0, 1).unwrap(), 1);
        assert_eq!(harmonic_multiplicity(0, 2).unwrap(), 0);
        assert!(harmonic_multiplicity(200, 200).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_squared(&minimal_clifford(1, 1).unwrap()), rat(2, 1));
        assert_eq!(sigma_squared(&minimal_clifford(3, 3).unwrap()), rat(6, 1));
        let c = CliffordHypersurface::with_r1_sq(1, 1, rat(1, 4)).unwrap();
        assert_eq!(sigma_squared(&c), rat(10, 3));
    }

    #[test]
    fn spectrum_examples() {
        let c = minimal_clifford(1, 1).unwrap();
        let s = spectrum_below(&c, &rat(4, 1)).unwrap();
        let got: Vec<_> = s
            .iter()
            .map(|e| (e.k1, e.k2, e.beta.clone(), e.multiplicity))
            .collect();
        assert_eq!(
            got,
            vec![
                (0, 0, rat(0, 1), 1),
                (0, 1, rat(2, 1), 2),
                (1, 0, rat(2, 1), 2)
            ]
        );
        assert!(spectrum_below(&c, &rat(0, 1)).unwrap().is_empty());
        assert!(spectrum_below(&c, &rat(-1, 1)).is_err());

        let c = minimal_clifford(1, 3).unwrap();
        let s = spectrum_below(&c, &rat(8, 1)).unwrap();
        let got: Vec<_> = s
            .iter()
            .map(|e| (e.k1, e.k2, e.beta.clone(), e.multiplicity))
            .collect();
        assert_eq!(
            got,
            vec![
                (0, 0, rat(0, 1), 1),
                (0, 1, rat(4, 1), 4),
                (1, 0, rat(4, 1), 2)
            ]
        );
    }

    #[test]
    fn spectrum_matches_wasteful_enumeration() {
        let cases = [
            minimal_clifford(1, 1).unwrap(),
            minimal_clifford(2, 5).unwrap(),
            CliffordHypersurface::with_r1_sq(3, 2, rat(1, 7)).unwrap(),
        ];
        for c in &cases {
            for bound in [rat(1, 2), rat(9, 1), rat(40, 1), rat(123, 2)] {
                let mut brute: Vec<(u32, u32)> = (0..40)
                    .flat_map(|k1| (0..40).map(move |k2| (k1, k2)))
                    .filter(|&(k1, k2)| eigenvalue(c, k1, k2) < bound)
                    .collect();
                brute.sort_by(|a, b| {
                    eigenvalue(c, a.0, a.1)
                        .cmp(&eigenvalue(c, b.0, b.1))
                        .then(a.cmp(b))
                });
                let fast: Vec<_> = spectrum_below(c, &bound)
                    .unwrap()
                    .iter()
                    .map(|e| (e.k1, e.k2))
                    .collect();
                assert_eq!(fast, brute, "{c} below {bound}");
            }
        }
    }

    #[test]
    fn thresholds() {
        let t = |a, b| jacobi_threshold(&minimal_clifford(a, b).unwrap(), a + b);
        assert_eq!(t(1, 1), rat(4, 1));
        assert_eq!(t(3, 3), rat(12, 1));
        assert_eq!(t(1, 3), rat(8, 1));
    }

    #[test]
    fn sphere_index_examples() {
        let idx = |a, b| sphere_index(&minimal_clifford(a, b).unwrap()).unwrap();
        let torus = idx(1, 1);
        assert_eq!(torus.sphere_index, 5);
        assert_eq!(torus.sphere_nullity, 4);
        assert_eq!(idx(1, 3).sphere_index, 7);
        assert_eq!(idx(3, 3).sphere_index, 9);
        assert_eq!(idx(1, 2).sphere_index, 6);

        let c = CliffordHypersurface::with_r1_sq(1, 3, rat(1, 2)).unwrap();
        assert!(matches!(sphere_index(&c), Err(Error::Unsupported(_))));
    }

    #[test]
    fn admissibility_by_degree() {
        let c = minimal_clifford(1, 1).unwrap();
        assert!(equivariant_admissible(&entry(&c, 0, 0).unwrap(), 1));
        assert!(!equivariant_admissible(&entry(&c, 1, 0).unwrap(), 2));
        assert!(equivariant_admissible(&entry(&c, 1, 1).unwrap(), 4));
    }

    #[test]
    fn quotient_index_examples() {
        let q = |a, b, s: &str| {
            let p = ProjectedClifford::new(minimal_clifford(a, b).unwrap(), s.parse().unwrap())
                .unwrap();
            quotient_index(&p).unwrap().quotient_index
        };
        assert_eq!(q(1, 1, "RP3"), Some(1));
        assert_eq!(q(3, 3, "CP3"), Some(1));
        assert_eq!(q(2, 3, "RP6"), Some(1));
        assert_eq!(q(3, 3, "HP1"), Some(1));
    }

    #[test]
    fn inequality_examples() {
        for (a, b) in [(1, 1), (1, 5), (10, 10)] {
            assert!(verify_beta_inequalities(&minimal_clifford(a, b).unwrap()));
        }
        let c = minimal_clifford(1, 1).unwrap();
        assert_eq!(eigenvalue(&c, 2, 0), rat(8, 1));
        // far from minimal, β(2,0) drops below β(1,1)
        let lopsided = CliffordHypersurface::with_r1_sq(1, 1, rat(99, 100)).unwrap();
        assert!(!verify_beta_inequalities(&lopsided));
    }
}
