//! Spheres, Clifford hypersurfaces and their projections to 𝕂P^{r-1}.
//!
//! The projective space 𝕂P^{r-1} is the quotient of the unit sphere
//! S^{dr-1} by the scalar action of the unit sphere S^{d-1} ⊂ 𝕂, with
//! d = 1, 2, 4 for ℝ, ℂ, ℍ. A Clifford hypersurface S^{n1}_{R1} × S^{n2}_{R2}
//! with n1 + n2 = dr - 2 descends to the quotient when n1 ≡ -1 (mod d); its
//! projected area is its area in the sphere divided by |S^{d-1}|.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactval::{gamma_half, ExactReal, Rational};

fn rat(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// R^n for R² = `radius_sq`.
fn radius_power(radius_sq: &Rational, n: u32) -> Result<ExactReal> {
    Ok(ExactReal::sqrt_rational(radius_sq)?.pow_int(n as i64)?)
}

/// Round sphere S^dim of radius √radius_sq.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sphere {
    dim: u32,
    radius_sq: Rational,
}

impl Sphere {
    pub fn new(dim: u32, radius_sq: Rational) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput(
                "sphere dimension must be positive".into(),
            ));
        }
        if !radius_sq.is_positive() {
            return Err(Error::InvalidInput(format!(
                "squared radius must be positive, got {radius_sq}"
            )));
        }
        Ok(Sphere { dim, radius_sq })
    }

    pub fn unit(dim: u32) -> Result<Self> {
        Self::new(dim, Rational::one())
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn radius_sq(&self) -> &Rational {
        &self.radius_sq
    }
}

/// |S^n_R| = 2 π^{(n+1)/2} R^n / Γ((n+1)/2).
pub fn sphere_area(s: &Sphere) -> Result<ExactReal> {
    let n = s.dim;
    let numerator = ExactReal::from_integer(2)
        .mul(&ExactReal::pi_pow(n as i64 + 1))
        .mul(&radius_power(&s.radius_sq, n)?);
    Ok(numerator.div(&gamma_half(n + 1))?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Real,
    Complex,
    Quaternionic,
}

impl Field {
    /// Real dimension d of the field.
    pub fn dim(self) -> u32 {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
            Field::Quaternionic => 4,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Field::Real => 'R',
            Field::Complex => 'C',
            Field::Quaternionic => 'H',
        }
    }
}

/// 𝕂P^{r-1}, written `RP<r-1>`, `CP<r-1>` or `HP<r-1>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveSpace {
    field: Field,
    r: u32,
}

impl ProjectiveSpace {
    /// The space with homogeneous parameter `r`, i.e. 𝕂P^{r-1}.
    pub fn new(field: Field, r: u32) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidInput(format!(
                "r must be at least 2, got {r}"
            )));
        }
        Ok(ProjectiveSpace { field, r })
    }

    /// 𝕂P^dim.
    pub fn of_dim(field: Field, dim: u32) -> Result<Self> {
        Self::new(field, dim + 1)
    }

    pub fn real(dim: u32) -> Result<Self> {
        Self::of_dim(Field::Real, dim)
    }

    pub fn complex(dim: u32) -> Result<Self> {
        Self::of_dim(Field::Complex, dim)
    }

    pub fn quaternionic(dim: u32) -> Result<Self> {
        Self::of_dim(Field::Quaternionic, dim)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn d(&self) -> u32 {
        self.field.dim()
    }

    /// The index in 𝕂P^i, i.e. r - 1.
    pub fn projective_dim(&self) -> u32 {
        self.r - 1
    }

    /// dr - 1.
    pub fn ambient_sphere_dim(&self) -> u32 {
        self.d() * self.r - 1
    }

    /// d(r - 1).
    pub fn real_dim(&self) -> u32 {
        self.d() * (self.r - 1)
    }

    /// Dimension dr - 2 of a hypersurface of the covering sphere.
    pub fn hypersurface_dim(&self) -> u32 {
        self.d() * self.r - 2
    }
}

impl fmt::Display for ProjectiveSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}P{}", self.field.letter(), self.r - 1)
    }
}

impl FromStr for ProjectiveSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("expected RP<i>, CP<i> or HP<i>, got {s:?}"));
        let mut chars = s.chars();
        let field = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('R') => Field::Real,
            Some('C') => Field::Complex,
            Some('H') => Field::Quaternionic,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let digits = rest
            .strip_prefix('P')
            .or_else(|| rest.strip_prefix('p'))
            .ok_or_else(bad)?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let dim: u32 = digits.parse().map_err(|_| bad())?;
        if dim < 1 {
            return Err(bad());
        }
        ProjectiveSpace::of_dim(field, dim)
    }
}

/// S^{n1}_{R1} × S^{n2}_{R2} ⊂ S^{n1+n2+1} with R1² + R2² = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordHypersurface {
    n1: u32,
    n2: u32,
    r1_sq: Rational,
    r2_sq: Rational,
}

impl CliffordHypersurface {
    pub fn new(n1: u32, n2: u32, r1_sq: Rational, r2_sq: Rational) -> Result<Self> {
        if n1 == 0 || n2 == 0 {
            return Err(Error::InvalidInput(
                "sphere dimensions must be positive".into(),
            ));
        }
        if !r1_sq.is_positive() || !r2_sq.is_positive() {
            return Err(Error::InvalidInput("squared radii must be positive".into()));
        }
        if &r1_sq + &r2_sq != Rational::one() {
            return Err(Error::InvalidInput(format!(
                "squared radii must sum to 1, got {r1_sq} + {r2_sq}"
            )));
        }
        Ok(CliffordHypersurface {
            n1,
            n2,
            r1_sq,
            r2_sq,
        })
    }

    /// Member of the family with R1² = `r1_sq`.
    pub fn with_r1_sq(n1: u32, n2: u32, r1_sq: Rational) -> Result<Self> {
        let r2_sq = Rational::one() - &r1_sq;
        Self::new(n1, n2, r1_sq, r2_sq)
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    pub fn r1_sq(&self) -> &Rational {
        &self.r1_sq
    }

    pub fn r2_sq(&self) -> &Rational {
        &self.r2_sq
    }

    /// n1 + n2.
    pub fn dim(&self) -> u32 {
        self.n1 + self.n2
    }

    pub fn ambient_dim(&self) -> u32 {
        self.n1 + self.n2 + 1
    }

    pub fn factors(&self) -> (Sphere, Sphere) {
        (
            Sphere {
                dim: self.n1,
                radius_sq: self.r1_sq.clone(),
            },
            Sphere {
                dim: self.n2,
                radius_sq: self.r2_sq.clone(),
            },
        )
    }
}

impl fmt::Display for CliffordHypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S^{}(sqrt({})) x S^{}(sqrt({}))",
            self.n1, self.r1_sq, self.n2, self.r2_sq
        )
    }
}

/// n1·R2² = n2·R1².
pub fn is_minimal(c: &CliffordHypersurface) -> bool {
    Rational::from_integer(c.n1.into()) * &c.r2_sq == Rational::from_integer(c.n2.into()) * &c.r1_sq
}

/// The minimal member of the (n1, n2) family: R_i² = n_i / (n1 + n2).
pub fn minimal_clifford(n1: u32, n2: u32) -> Result<CliffordHypersurface> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidInput(
            "sphere dimensions must be positive".into(),
        ));
    }
    let n = (n1 + n2) as u64;
    CliffordHypersurface::new(n1, n2, rat(n1 as u64, n), rat(n2 as u64, n))
}

/// Area in the unit sphere, as the product of the two factor areas.
pub fn clifford_area_in_sphere(c: &CliffordHypersurface) -> Result<ExactReal> {
    let (a, b) = c.factors();
    Ok(sphere_area(&a)?.mul(&sphere_area(&b)?))
}

/// 4 π^{(n1+n2+2)/2} R1^{n1} R2^{n2} / (Γ((n1+1)/2) Γ((n2+1)/2)), evaluated
/// directly. Radii powers go through `(R²)^⌊n/2⌋ · R^(n mod 2)`.
pub fn clifford_area_gamma_formula(c: &CliffordHypersurface) -> Result<ExactReal> {
    let power = |r_sq: &Rational, n: u32| -> Result<ExactReal> {
        let even = ExactReal::from_rational(num_traits::pow(r_sq.clone(), (n / 2) as usize));
        Ok(if n % 2 == 1 {
            even.mul(&ExactReal::sqrt_rational(r_sq)?)
        } else {
            even
        })
    };
    let numerator = ExactReal::from_integer(4)
        .mul(&ExactReal::pi_pow((c.n1 + c.n2 + 2) as i64))
        .mul(&power(&c.r1_sq, c.n1)?)
        .mul(&power(&c.r2_sq, c.n2)?);
    let denominator = gamma_half(c.n1 + 1).mul(&gamma_half(c.n2 + 1));
    Ok(numerator.div(&denominator)?)
}

/// |S^{d-1}| for the unit fibre of 𝕂P^{r-1}: 2, 2π, 2π².
pub fn fiber_volume(space: &ProjectiveSpace) -> ExactReal {
    match space.field {
        Field::Real => ExactReal::from_integer(2),
        Field::Complex => ExactReal::from_integer(2).mul(&ExactReal::pi_pow(2)),
        Field::Quaternionic => ExactReal::from_integer(2).mul(&ExactReal::pi_pow(4)),
    }
}

/// A Clifford hypersurface together with the projective space it descends to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedClifford {
    base: CliffordHypersurface,
    target: ProjectiveSpace,
}

impl ProjectedClifford {
    /// Requires n1 + n2 = dr - 2 and n1 ≡ -1 (mod d).
    pub fn new(base: CliffordHypersurface, target: ProjectiveSpace) -> Result<Self> {
        let d = target.d();
        if base.dim() != target.hypersurface_dim() {
            return Err(Error::InvalidInput(format!(
                "{target} needs n1 + n2 = {}, got {}",
                target.hypersurface_dim(),
                base.dim()
            )));
        }
        if !(base.n1 + 1).is_multiple_of(d) {
            return Err(Error::InvalidInput(format!(
                "n1 = {} is not -1 mod {d}, so the hypersurface is not invariant under S^{}",
                base.n1,
                d - 1
            )));
        }
        Ok(ProjectedClifford { base, target })
    }

    pub fn base(&self) -> &CliffordHypersurface {
        &self.base
    }

    pub fn target(&self) -> &ProjectiveSpace {
        &self.target
    }
}

impl fmt::Display for ProjectedClifford {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pi_{}({})", self.target.field.letter(), self.base)
    }
}

pub fn projected_area(p: &ProjectedClifford) -> Result<ExactReal> {
    Ok(clifford_area_in_sphere(&p.base)?.div(&fiber_volume(&p.target))?)
}

/// Minimal Clifford hypersurfaces descending to `space`, one per unordered
/// pair {n1 ≤ n2}, sorted by n1.
pub fn enumerate_minimal_clifford(space: &ProjectiveSpace) -> Result<Vec<ProjectedClifford>> {
    let total = space.hypersurface_dim();
    if total < 2 {
        return Err(Error::Unsupported(format!(
            "{space} has no Clifford hypersurfaces (dr - 2 = {total})"
        )));
    }
    let d = space.d();
    (1..=total / 2)
        .filter(|n1| (n1 + 1) % d == 0)
        .map(|n1| ProjectedClifford::new(minimal_clifford(n1, total - n1)?, *space))
        .collect()
}

/// The totally geodesic ℝP^{r-2} ⊂ ℝP^{r-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotallyGeodesic {
    pub dim: u32,
    pub area: ExactReal,
    pub one_sided: bool,
}

pub fn totally_geodesic_candidate(space: &ProjectiveSpace) -> Result<TotallyGeodesic> {
    if space.field != Field::Real {
        return Err(Error::Unsupported(format!(
            "totally geodesic candidates are only tabulated for real projective spaces, not {space}"
        )));
    }
    if space.r < 3 {
        return Err(Error::Unsupported(format!(
            "{space} has no codimension-one ℝP"
        )));
    }
    let dim = space.r - 2;
    let area = sphere_area(&Sphere::unit(dim)?)?.div(&ExactReal::from_integer(2))?;
    // the normal bundle of ℝP^{r-2} in ℝP^{r-1} is the tautological line bundle
    Ok(TotallyGeodesic {
        dim,
        area,
        one_sided: true,
    })
}

/// Parses `n1,n2` or `n1,n2@RP<i>` / `@CP<i>` / `@HP<i>`.
pub fn parse_clifford_spec(s: &str) -> Result<(u32, u32, Option<ProjectiveSpace>)> {
    let bad = || Error::InvalidInput(format!("expected n1,n2[@KP<i>], got {s:?}"));
    let (pair, space) = match s.split_once('@') {
        Some((pair, space)) => (pair, Some(space.parse::<ProjectiveSpace>()?)),
        None => (s, None),
    };
    let (a, b) = pair.split_once(',').ok_or_else(bad)?;
    let n1: u32 = a.trim().parse().map_err(|_| bad())?;
    let n2: u32 = b.trim().parse().map_err(|_| bad())?;
    if n1 == 0 || n2 == 0 {
        return Err(bad());
    }
    Ok((n1, n2, space))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> ExactReal {
        s.parse().unwrap()
    }

    #[test]
    fn sphere_area_examples() {
        assert_eq!(
            sphere_area(&Sphere::unit(1).unwrap()).unwrap(),
            e("2 * pi^1")
        );
        assert_eq!(
            sphere_area(&Sphere::unit(3).unwrap()).unwrap(),
            e("2 * pi^2")
        );
        let s = Sphere::new(2, rat(2, 5)).unwrap();
        assert_eq!(sphere_area(&s).unwrap(), e("8/5 * pi^1"));
        assert_eq!(
            sphere_area(&Sphere::unit(2).unwrap()).unwrap(),
            e("4 * pi^1")
        );
        assert_eq!(
            sphere_area(&Sphere::unit(6).unwrap()).unwrap(),
            e("16/15 * pi^3")
        );
    }

    #[test]
    fn minimality_examples() {
        let c = CliffordHypersurface::new(1, 1, rat(1, 2), rat(1, 2)).unwrap();
        assert!(is_minimal(&c));
        let c = CliffordHypersurface::new(1, 3, rat(1, 4), rat(3, 4)).unwrap();
        assert!(is_minimal(&c));
        let c = CliffordHypersurface::new(1, 3, rat(1, 2), rat(1, 2)).unwrap();
        assert!(!is_minimal(&c));
    }

    #[test]
    fn minimal_radii() {
        let c = minimal_clifford(2, 3).unwrap();
        assert_eq!((c.r1_sq(), c.r2_sq()), (&rat(2, 5), &rat(3, 5)));
        let c = minimal_clifford(3, 3).unwrap();
        assert_eq!((c.r1_sq(), c.r2_sq()), (&rat(1, 2), &rat(1, 2)));
        let c = minimal_clifford(1, 1).unwrap();
        assert_eq!(c.r1_sq(), c.r2_sq());
        assert!(minimal_clifford(0, 3).is_err());
    }

    #[test]
    fn invalid_clifford_rejected() {
        assert!(CliffordHypersurface::new(1, 1, rat(1, 2), rat(1, 3)).is_err());
        assert!(CliffordHypersurface::new(1, 1, rat(0, 1), rat(1, 1)).is_err());
        assert!(CliffordHypersurface::with_r1_sq(1, 1, rat(3, 2)).is_err());
    }

    #[test]
    fn areas_in_sphere() {
        let area = |a, b| clifford_area_in_sphere(&minimal_clifford(a, b).unwrap()).unwrap();
        assert_eq!(area(1, 1), e("2 * pi^2"));
        assert_eq!(area(1, 3), e("3/4 * sqrt(3) * pi^3"));
        assert_eq!(area(3, 3), e("1/2 * pi^4"));
    }

    #[test]
    fn fibres() {
        assert_eq!(fiber_volume(&ProjectiveSpace::real(3).unwrap()), e("2"));
        assert_eq!(
            fiber_volume(&ProjectiveSpace::complex(3).unwrap()),
            e("2 * pi^1")
        );
        assert_eq!(
            fiber_volume(&ProjectiveSpace::quaternionic(1).unwrap()),
            e("2 * pi^2")
        );
    }

    #[test]
    fn projected_areas() {
        let proj = |a, b, space: &str| {
            let p = ProjectedClifford::new(minimal_clifford(a, b).unwrap(), space.parse().unwrap())
                .unwrap();
            projected_area(&p).unwrap()
        };
        assert_eq!(proj(1, 3, "CP2"), e("3/8 * sqrt(3) * pi^2"));
        assert_eq!(proj(2, 4, "RP7"), e("64/81 * pi^3"));
        let expected = ExactReal::from_ratio(25, 216)
            .mul(&ExactReal::sqrt_rational(&rat(5, 1)).unwrap())
            .mul(&ExactReal::pi_pow(6));
        assert_eq!(proj(1, 5, "CP3"), expected);
    }

    #[test]
    fn admissibility_enforced() {
        let cp3: ProjectiveSpace = "CP3".parse().unwrap();
        let err = ProjectedClifford::new(minimal_clifford(2, 4).unwrap(), cp3).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
        let err = ProjectedClifford::new(minimal_clifford(1, 1).unwrap(), cp3).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn enumeration_examples() {
        let pairs = |s: &str| -> Vec<(u32, u32)> {
            enumerate_minimal_clifford(&s.parse().unwrap())
                .unwrap()
                .iter()
                .map(|p| (p.base().n1(), p.base().n2()))
                .collect()
        };
        assert_eq!(pairs("RP7"), vec![(1, 5), (2, 4), (3, 3)]);
        assert_eq!(pairs("CP3"), vec![(1, 5), (3, 3)]);
        assert_eq!(pairs("CP2"), vec![(1, 3)]);
        assert_eq!(pairs("HP2"), vec![(3, 7)]);
        assert!(matches!(
            enumerate_minimal_clifford(&"RP2".parse().unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn totally_geodesic_examples() {
        let tg = |s: &str| totally_geodesic_candidate(&s.parse().unwrap()).unwrap();
        assert_eq!(tg("RP3").area, e("2 * pi^1"));
        assert_eq!(tg("RP4").area, e("1 * pi^2"));
        assert_eq!(tg("RP7").area, e("8/15 * pi^3"));
        assert!(tg("RP5").one_sided);
        assert!(matches!(
            totally_geodesic_candidate(&"CP3".parse().unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn space_parsing() {
        let s: ProjectiveSpace = "RP5".parse().unwrap();
        assert_eq!((s.field(), s.r(), s.d()), (Field::Real, 6, 1));
        assert_eq!(s.to_string(), "RP5");
        let c: ProjectiveSpace = "CP3".parse().unwrap();
        assert_eq!(
            (c.ambient_sphere_dim(), c.real_dim(), c.hypersurface_dim()),
            (7, 6, 6)
        );
        for bad in ["", "RP", "XP3", "RP0", "RP-1", "R3", "RPx"] {
            assert!(bad.parse::<ProjectiveSpace>().is_err(), "{bad}");
        }
    }

    #[test]
    fn clifford_spec_parsing() {
        let (n1, n2, space) = parse_clifford_spec("1,1@RP3").unwrap();
        assert_eq!(
            (n1, n2, space.unwrap().to_string()),
            (1, 1, "RP3".to_string())
        );
        assert_eq!(parse_clifford_spec("1,2").unwrap(), (1, 2, None));
        assert!(parse_clifford_spec("1").is_err());
        assert!(parse_clifford_spec("0,2").is_err());
        assert!(parse_clifford_spec("1,2@ZP3").is_err());
    }
}
