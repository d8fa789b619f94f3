//! First min-max width of projective spaces.
//!
//! With positive Ricci curvature the width is the least of |Σ| over
//! two-sided index-one minimal hypersurfaces Σ and 2|Σ| over one-sided ones.
//! In ℝP^{r-1} the index-one candidates are the minimal Clifford
//! hypersurfaces (two-sided) and the totally geodesic ℝP^{r-2} (one-sided),
//! so the width is an exact minimum over a finite list. In ℂP^{r-1} the
//! Clifford minimum is only known to be an upper bound.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactval::ExactReal;
use crate::geometry::{
    enumerate_minimal_clifford, minimal_clifford, projected_area, totally_geodesic_candidate,
    Field, ProjectedClifford, ProjectiveSpace,
};

/// Real projective dimensions whose widths are tabulated in the literature.
pub const TABULATED_REAL: std::ops::RangeInclusive<u32> = 3..=7;
/// Complex projective dimensions with published upper bounds.
pub const TABULATED_COMPLEX: std::ops::RangeInclusive<u32> = 2..=3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateKind {
    Clifford(ProjectedClifford),
    /// Totally geodesic ℝP^dim.
    TotallyGeodesic {
        dim: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthCandidate {
    pub kind: CandidateKind,
    pub area: ExactReal,
    /// One-sided candidates count twice their area.
    pub doubled: bool,
    pub effective: ExactReal,
}

impl WidthCandidate {
    fn new(kind: CandidateKind, area: ExactReal, doubled: bool) -> Self {
        let effective = if doubled {
            area.mul(&ExactReal::from_integer(2))
        } else {
            area.clone()
        };
        WidthCandidate {
            kind,
            area,
            doubled,
            effective,
        }
    }

    /// `(n1, n2)` for Clifford candidates.
    pub fn clifford_dims(&self) -> Option<(u32, u32)> {
        match &self.kind {
            CandidateKind::Clifford(p) => Some((p.base().n1(), p.base().n2())),
            CandidateKind::TotallyGeodesic { .. } => None,
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            CandidateKind::Clifford(p) => p.to_string(),
            CandidateKind::TotallyGeodesic { dim } => format!("RP{dim} (totally geodesic)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    Exact,
    UpperBound,
}

impl fmt::Display for ValueKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValueKind::Exact => "Exact",
            ValueKind::UpperBound => "UpperBound",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthReport {
    pub space: ProjectiveSpace,
    pub candidates: Vec<WidthCandidate>,
    /// Index of the winner in `candidates`.
    pub winner: usize,
    pub value: ExactReal,
    pub value_kind: ValueKind,
    /// False for rows outside the tabulated ranges.
    pub paper_backed: bool,
    pub note: Option<String>,
}

impl WidthReport {
    pub fn winner(&self) -> &WidthCandidate {
        &self.candidates[self.winner]
    }

    pub fn decimal(&self, places: u32) -> String {
        self.value.to_fixed(places)
    }
}

/// Index of the least effective value; ties keep the earlier candidate.
fn argmin(candidates: &[WidthCandidate]) -> Result<usize> {
    let mut best = 0;
    for (i, c) in candidates.iter().enumerate().skip(1) {
        if c.effective.compare(&candidates[best].effective)? == Ordering::Less {
            best = i;
        }
    }
    Ok(best)
}

pub fn width(space: &ProjectiveSpace) -> Result<WidthReport> {
    let dim = space.projective_dim();
    let (value_kind, paper_backed, note) = match space.field() {
        Field::Quaternionic => {
            return Err(Error::Unsupported(format!(
                "{space}: quaternionic widths are not computed (HP1 is isometric to a round S^4)"
            )))
        }
        Field::Real if dim < 3 => {
            return Err(Error::Unsupported(format!(
                "{space}: no Clifford hypersurface exists below RP3"
            )))
        }
        Field::Real => {
            let backed = TABULATED_REAL.contains(&dim);
            let note = (!backed).then(|| {
                "beyond the tabulated range RP3..RP7; value follows from the same index-one classification"
                    .to_string()
            });
            (ValueKind::Exact, backed, note)
        }
        Field::Complex => {
            let backed = TABULATED_COMPLEX.contains(&dim);
            let note = (!backed).then(|| {
                "conjectural: outside the tabulated CP2..CP3 range; Clifford minimum is an upper bound only"
                    .to_string()
            });
            (ValueKind::UpperBound, backed, note)
        }
    };

    let mut candidates = enumerate_minimal_clifford(space)?
        .into_iter()
        .map(|p| {
            let area = projected_area(&p)?;
            Ok(WidthCandidate::new(CandidateKind::Clifford(p), area, false))
        })
        .collect::<Result<Vec<_>>>()?;
    if space.field() == Field::Real {
        let tg = totally_geodesic_candidate(space)?;
        candidates.push(WidthCandidate::new(
            CandidateKind::TotallyGeodesic { dim: tg.dim },
            tg.area,
            tg.one_sided,
        ));
    }
    let winner = argmin(&candidates)?;
    Ok(WidthReport {
        space: *space,
        value: candidates[winner].effective.clone(),
        candidates,
        winner,
        value_kind,
        paper_backed,
        note,
    })
}

/// Widths for many spaces; each row fails independently.
pub fn width_table(spaces: &[ProjectiveSpace]) -> Vec<Result<WidthReport>> {
    spaces.iter().map(width).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub claim: String,
    pub expected: ExactReal,
    pub computed: ExactReal,
    pub pass: bool,
}

/// `num/den · √radicand / √radicand_den · π^pi_exp` built from the factors
/// exactly as published, independent of the canonical text form.
fn published(num: i64, den: i64, radicand: (i64, i64), pi_exp: i64) -> ExactReal {
    let root =
        ExactReal::sqrt_rational(&crate::Rational::new(radicand.0.into(), radicand.1.into()))
            .expect("published radicands are small positive rationals");
    ExactReal::from_ratio(num, den)
        .mul(&root)
        .mul(&ExactReal::pi_pow(2 * pi_exp))
}

fn clifford_area(n1: u32, n2: u32, space: &str) -> Result<ExactReal> {
    let space: ProjectiveSpace = space.parse()?;
    projected_area(&ProjectedClifford::new(minimal_clifford(n1, n2)?, space)?)
}

/// Every width, bound and intermediate candidate area quoted for RP3..RP7
/// and CP2..CP3, recomputed and compared exactly.
pub fn verify_reference_values() -> Result<Vec<VerificationRow>> {
    let mut rows = Vec::new();
    let mut push = |claim: &str, expected: ExactReal, computed: ExactReal| {
        let pass = expected == computed;
        rows.push(VerificationRow {
            claim: claim.to_string(),
            expected,
            computed,
            pass,
        });
    };

    let w = |s: &str| -> Result<WidthReport> { width(&s.parse()?) };

    // widths of real projective spaces
    push("W(RP3) = pi^2", published(1, 1, (1, 1), 2), w("RP3")?.value);
    push(
        "W(RP4) = 8 pi^2 / (3 sqrt 3)",
        published(8, 3, (1, 3), 2),
        w("RP4")?.value,
    );
    push(
        "W(RP5) = 2 pi^2",
        published(2, 1, (1, 1), 2),
        w("RP5")?.value,
    );
    push(
        "W(RP6) = (24/25) sqrt(3/5) pi^3",
        published(24, 25, (3, 5), 3),
        w("RP6")?.value,
    );
    push(
        "W(RP7) = pi^4 / 4",
        published(1, 4, (1, 1), 4),
        w("RP7")?.value,
    );

    // upper bounds for complex projective spaces
    push(
        "W(CP2) <= 3 sqrt 3 pi^2 / 8",
        published(3, 8, (3, 1), 2),
        w("CP2")?.value,
    );
    push(
        "W(CP3) <= pi^3 / 4",
        published(1, 4, (1, 1), 3),
        w("CP3")?.value,
    );

    // every candidate area quoted along the way
    push(
        "|Pi_C(S^1 x S^3)| = 3 sqrt 3 pi^2 / 8",
        published(3, 8, (3, 1), 2),
        clifford_area(1, 3, "CP2")?,
    );
    push(
        "|Pi_C(S^1 x S^5)| = 25 sqrt 5 pi^3 / 216",
        published(25, 216, (5, 1), 3),
        clifford_area(1, 5, "CP3")?,
    );
    push(
        "|Pi_C(S^3 x S^3)| = pi^3 / 4",
        published(1, 4, (1, 1), 3),
        clifford_area(3, 3, "CP3")?,
    );
    push(
        "|Pi_R(S^1 x S^1)| = pi^2",
        published(1, 1, (1, 1), 2),
        clifford_area(1, 1, "RP3")?,
    );
    push(
        "|Pi_R(S^1 x S^2)| = 8 pi^2 / (3 sqrt 3)",
        published(8, 3, (1, 3), 2),
        clifford_area(1, 2, "RP4")?,
    );
    push(
        "|Pi_R(S^1 x S^3)| = 3 sqrt 3 pi^3 / 8",
        published(3, 8, (3, 1), 3),
        clifford_area(1, 3, "RP5")?,
    );
    push(
        "|Pi_R(S^2 x S^2)| = 2 pi^2",
        published(2, 1, (1, 1), 2),
        clifford_area(2, 2, "RP5")?,
    );
    push(
        "|Pi_R(S^1 x S^4)| = 128 pi^3 / (75 sqrt 5)",
        published(128, 75, (1, 5), 3),
        clifford_area(1, 4, "RP6")?,
    );
    push(
        "|Pi_R(S^2 x S^3)| = (24/25) sqrt(3/5) pi^3",
        published(24, 25, (3, 5), 3),
        clifford_area(2, 3, "RP6")?,
    );
    push(
        "|Pi_R(S^1 x S^5)| = 25 sqrt 5 pi^4 / 216",
        published(25, 216, (5, 1), 4),
        clifford_area(1, 5, "RP7")?,
    );
    push(
        "|Pi_R(S^2 x S^4)| = 64 pi^3 / 81",
        published(64, 81, (1, 1), 3),
        clifford_area(2, 4, "RP7")?,
    );
    push(
        "|Pi_R(S^3 x S^3)| = pi^4 / 4",
        published(1, 4, (1, 1), 4),
        clifford_area(3, 3, "RP7")?,
    );
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> ExactReal {
        s.parse().unwrap()
    }

    fn w(s: &str) -> WidthReport {
        width(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn width_examples() {
        let rp4 = w("RP4");
        assert_eq!(rp4.value, e("8/9 * sqrt(3) * pi^2"));
        assert_eq!(rp4.value_kind, ValueKind::Exact);

        let rp7 = w("RP7");
        assert_eq!(rp7.value, e("1/4 * pi^4"));
        assert_eq!(rp7.winner().clifford_dims(), Some((3, 3)));
        assert_eq!(rp7.candidates.len(), 4);

        let cp3 = w("CP3");
        assert_eq!(cp3.value, e("1/4 * pi^3"));
        assert_eq!(cp3.value_kind, ValueKind::UpperBound);
        assert!(cp3.paper_backed);
    }

    #[test]
    fn unsupported_spaces() {
        for s in ["HP1", "HP2", "RP2"] {
            assert!(
                matches!(width(&s.parse().unwrap()), Err(Error::Unsupported(_))),
                "{s}"
            );
        }
    }

    #[test]
    fn rows_beyond_table_are_flagged() {
        let rp9 = w("RP9");
        assert_eq!(rp9.value_kind, ValueKind::Exact);
        assert!(!rp9.paper_backed);
        assert!(rp9.note.is_some());

        let cp4 = w("CP4");
        assert_eq!(cp4.value_kind, ValueKind::UpperBound);
        assert!(!cp4.paper_backed);
    }

    #[test]
    fn table_collects_errors_per_row() {
        let spaces: Vec<ProjectiveSpace> = ["RP3", "HP2", "CP2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let rows = width_table(&spaces);
        assert!(rows[0].is_ok());
        assert!(matches!(rows[1], Err(Error::Unsupported(_))));
        assert!(rows[2].is_ok());
    }

    #[test]
    fn totally_geodesic_is_doubled() {
        let rp4 = w("RP4");
        let tg = rp4.candidates.last().unwrap();
        assert!(tg.doubled);
        assert_eq!(tg.area, e("1 * pi^2"));
        assert_eq!(tg.effective, e("2 * pi^2"));
    }

    #[test]
    fn reference_values_all_pass() {
        let rows = verify_reference_values().unwrap();
        assert_eq!(rows.len(), 19);
        for row in &rows {
            assert!(
                row.pass,
                "{}: expected {}, got {}",
                row.claim, row.expected, row.computed
            );
        }
    }

    #[test]
    fn ties_keep_first_candidate() {
        let space: ProjectiveSpace = "RP3".parse().unwrap();
        let p = enumerate_minimal_clifford(&space).unwrap().remove(0);
        let a = WidthCandidate::new(CandidateKind::Clifford(p.clone()), e("1 * pi^2"), false);
        let b = WidthCandidate::new(CandidateKind::Clifford(p), e("1 * pi^2"), false);
        assert_eq!(argmin(&[a, b]).unwrap(), 0);
    }
}
