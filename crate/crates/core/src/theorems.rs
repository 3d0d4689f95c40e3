//! Closed-form predictions for dimensions, nonvanishing and orthogonal-basis
//! existence, and the harness that checks them against the tensor oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brauer::{cyclic_support, irreducible_brauer_characters, BrauerCharacter, CharacterKind, CharacterSpec};
use crate::cyclo::Rational;
use crate::error::{Error, Result};
use crate::group::{
    build_group, construct_sequence_with_stabilizer, orbit_representatives, split_prime_power, FiniteGroup,
    GroupFamily, IndexSequence,
};
use crate::report::CaseRecord;
use crate::tensor::{
    gram_matrix, is_orthogonal_family, matrix_m_gamma, obasis_search, orbital_data, symmetrized_tensor, OrbitSpace,
};

/// Exponent of 2 in a nonzero rational.
pub fn nu2(q: &Rational) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let count = |x: &BigInt| x.abs().trailing_zeros().unwrap_or(0) as i64;
    Ok(count(q.numer()) - count(q.denom()))
}

fn ratio(a: u32, b: u32) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// One verification case: a family, a prime, `dim V` and a Brauer character.
///
/// The rotation order is `l * p^t` with `p` not dividing `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CaseParams {
    pub family: GroupFamily,
    pub p: u32,
    pub t: u32,
    pub l: u32,
    pub dim_v: u32,
    pub character: CharacterSpec,
}

impl CaseParams {
    pub fn new(family: GroupFamily, p: u32, dim_v: u32, character: CharacterSpec) -> Self {
        let (l, t) = split_prime_power(family.rotation_order(), p);
        CaseParams {
            family,
            p,
            t,
            l,
            dim_v,
            character,
        }
    }

    /// Does `p` divide the rotation order?
    pub fn p_divides_rotation(&self) -> bool {
        self.t > 0
    }

    fn index(&self) -> u32 {
        self.character.index()
    }

    /// Odd two-dimensional index in the semidihedral family.
    pub fn is_semidihedral_odd(&self) -> bool {
        matches!(self.family, GroupFamily::Semidihedral(_))
            && matches!(self.character.kind, CharacterKind::TwoDim(h) if h % 2 == 1)
    }

    /// A linear semidihedral case with `dim V = 1`, which the closed form
    /// does not cover; it is reported but treated as passing.
    pub fn outside_hypothesis(&self) -> bool {
        matches!(self.family, GroupFamily::Semidihedral(_)) && self.character.is_linear() && self.dim_v == 1
    }

    /// `ν₂(2 * index / l)` for a two-dimensional character.
    pub fn valuation(&self) -> i64 {
        nu2(&ratio(2 * self.index(), self.l)).expect("index is positive")
    }
}

/// Existence of an orthogonal basis for a linear character.
pub fn predicate_linear(case: &CaseParams) -> Result<bool> {
    if !case.character.is_linear() {
        return Err(Error::CharacterNotLinear(case.character.label()));
    }
    Ok(case.dim_v == 1 || case.p == 2 || !case.p_divides_rotation())
}

/// Existence of an orthogonal basis for a two-dimensional character.
pub fn predicate_two_dim(case: &CaseParams) -> Result<bool> {
    if case.character.is_linear() {
        return Err(Error::CharacterNotTwoDim(case.character.label()));
    }
    if case.index() == 0 {
        return Err(Error::IndexOutOfRange { index: 0 });
    }
    if case.dim_v == 1 {
        return Ok(true);
    }
    if case.is_semidihedral_odd() {
        return Ok(false);
    }
    Ok(case.valuation() < 0)
}

/// `index * t_gamma / l` is an integer.
pub fn predicted_nonvanishing(case: &CaseParams, t_gamma: u32) -> bool {
    (case.index() as u64 * t_gamma as u64).is_multiple_of(case.l as u64)
}

/// Dimension of the orbital subspace over `C` for a given `t_gamma`:
/// 2 (4 for odd semidihedral indices) when nonvanishing, else 0.
pub fn predicted_dim(case: &CaseParams, t_gamma: u32) -> u32 {
    if !predicted_nonvanishing(case, t_gamma) {
        0
    } else if case.is_semidihedral_odd() {
        4
    } else {
        2
    }
}

/// Whole-space prediction.
pub fn predicate(case: &CaseParams) -> Result<bool> {
    if case.character.is_linear() {
        predicate_linear(case)
    } else {
        predicate_two_dim(case)
    }
}

/// Oracle results for one constructed `gamma`.
#[derive(Debug, Clone, Serialize)]
pub struct GammaCheck {
    pub t_gamma: u32,
    pub gamma: IndexSequence,
    pub predicted_dim: u32,
    /// `t_gamma - d_gamma`.
    pub circulant_dim: u32,
    pub rank_m: u32,
    pub rank_gram: u32,
    pub predicted_nonvanishing: bool,
    pub observed_nonvanishing: bool,
    pub predicted_obasis: bool,
    /// First orthogonal subset found, as 1-based coset exponents.
    pub witness: Option<Vec<u32>>,
    /// The pair `{2^(k-1) + 1, 1}` with `k = -ν₂`, when that applies.
    pub pair_witness: Option<(Vec<u32>, bool)>,
}

impl GammaCheck {
    pub fn observed_obasis(&self) -> bool {
        self.witness.is_some()
    }

    /// Circulant, `M_gamma` and Gram dimensions coincide.
    pub fn internally_consistent(&self) -> bool {
        self.circulant_dim == self.rank_m
            && self.rank_m == self.rank_gram
            && self.observed_nonvanishing == (self.rank_gram > 0)
    }

    pub fn agree(&self) -> bool {
        self.internally_consistent()
            && self.predicted_dim == self.rank_gram
            && self.predicted_nonvanishing == self.observed_nonvanishing
            && self.predicted_obasis == self.observed_obasis()
    }
}

/// Oracle results for one orbit of a linear character.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitCheck {
    pub alpha: IndexSequence,
    pub dim: usize,
    /// `<e_{alpha sigma}, e_alpha> != 0` for every `sigma`.
    pub all_overlap: bool,
    pub has_obasis: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub case: CaseParams,
    pub predicted_obasis: bool,
    pub gammas: Vec<GammaCheck>,
    pub orbits: Vec<OrbitCheck>,
    /// The linear verdict rests on sampled orbits.
    pub sampled: bool,
}

impl VerificationReport {
    /// Conjunction of the per-orbit verdicts.
    pub fn observed_obasis(&self) -> bool {
        self.gammas.iter().all(GammaCheck::observed_obasis) && self.orbits.iter().all(|o| o.has_obasis)
    }

    pub fn agree(&self) -> bool {
        self.predicted_obasis == self.observed_obasis() && self.gammas.iter().all(GammaCheck::agree)
    }

    /// `t_gamma` values where the pair witness was checked and failed.
    pub fn pair_witness_failures(&self) -> Vec<u32> {
        self.gammas
            .iter()
            .filter(|g| matches!(g.pair_witness, Some((_, false))))
            .map(|g| g.t_gamma)
            .collect()
    }

    pub fn key(&self) -> CaseKey {
        CaseKey::of(&self.case)
    }

    /// One record per constructed `gamma` (two-dimensional) or one for the
    /// case (linear).
    pub fn records(&self) -> Vec<CaseRecord> {
        let c = &self.case;
        let base = |t_gamma, predicted_dim, observed_dim, predicted_obasis, observed_obasis, agree| CaseRecord {
            family: c.family.name().to_string(),
            n: c.family.param(),
            p: c.p,
            t: c.t,
            l: c.l,
            character: c.character.label(),
            dim_v: c.dim_v,
            t_gamma,
            predicted_dim,
            observed_dim,
            predicted_obasis,
            observed_obasis,
            agree,
        };
        if c.character.is_linear() {
            let dim = self.orbits.first().map(|o| o.dim as u32);
            vec![base(None, None, dim, self.predicted_obasis, self.observed_obasis(), self.agree())]
        } else {
            self.gammas
                .iter()
                .map(|g| {
                    base(
                        Some(g.t_gamma),
                        Some(g.predicted_dim),
                        Some(g.rank_gram),
                        g.predicted_obasis,
                        g.observed_obasis(),
                        g.agree(),
                    )
                })
                .collect()
        }
    }

    /// Human-readable reasons for disagreement.
    pub fn disagreements(&self) -> Vec<String> {
        let c = &self.case;
        let head = format!("{} p={} {} dimV={}", c.family, c.p, c.character.label(), c.dim_v);
        let mut out = Vec::new();
        for g in &self.gammas {
            if !g.internally_consistent() {
                out.push(format!(
                    "{head} t_gamma={}: circulant {} / M_gamma {} / Gram {} ranks differ",
                    g.t_gamma, g.circulant_dim, g.rank_m, g.rank_gram
                ));
            }
            if g.predicted_dim != g.rank_gram {
                out.push(format!(
                    "{head} t_gamma={}: predicted dim {}, observed {}",
                    g.t_gamma, g.predicted_dim, g.rank_gram
                ));
            }
            if g.predicted_nonvanishing != g.observed_nonvanishing {
                out.push(format!("{head} t_gamma={}: nonvanishing mismatch", g.t_gamma));
            }
            if g.predicted_obasis != g.observed_obasis() {
                out.push(format!(
                    "{head} t_gamma={}: predicted o-basis {}, observed {}",
                    g.t_gamma,
                    g.predicted_obasis,
                    g.observed_obasis()
                ));
            }
        }
        if c.character.is_linear() && self.predicted_obasis != self.observed_obasis() {
            out.push(format!(
                "{head}: predicted o-basis {}, observed {}",
                self.predicted_obasis,
                self.observed_obasis()
            ));
        }
        out
    }
}

/// Deterministic ordering key for cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseKey {
    pub family: GroupFamily,
    pub p: u32,
    pub dim_v: u32,
    pub character: CharacterKind,
}

impl CaseKey {
    pub fn of(case: &CaseParams) -> Self {
        CaseKey {
            family: case.family,
            p: case.p,
            dim_v: case.dim_v,
            character: case.character.kind,
        }
    }
}

/// Options shared by every case of a run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyOptions {
    /// Maximum number of orbit representatives sampled for linear characters.
    pub cap: usize,
    /// Negate every prediction. Used as a negative control.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub invert_predicates: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cap: 16,
            invert_predicates: false,
        }
    }
}

/// Runs every oracle for one case. The group and character are passed in
/// so a sweep can share them.
pub fn verify_with(
    g: &FiniteGroup,
    phi: &BrauerCharacter,
    case: CaseParams,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let flip = |b: bool| b != options.invert_predicates;
    let predicted_obasis = flip(predicate(&case)?);
    let mut report = VerificationReport {
        case,
        predicted_obasis,
        gammas: Vec::new(),
        orbits: Vec::new(),
        sampled: false,
    };
    if case.character.is_linear() {
        verify_linear(g, phi, &case, options, &mut report);
    } else {
        verify_two_dim(g, phi, &case, &flip, &mut report)?;
    }
    Ok(report)
}

fn verify_two_dim(
    g: &FiniteGroup,
    phi: &BrauerCharacter,
    case: &CaseParams,
    flip: &dyn Fn(bool) -> bool,
    report: &mut VerificationReport,
) -> Result<()> {
    let support = cyclic_support(g, phi);
    if !support.support_is_cyclic {
        return Err(Error::SupportNotCyclic(phi.label()));
    }
    let pt = case.p.pow(case.t);
    let whole = predicate_two_dim(case)?;
    let divisors: Vec<u32> = (1..=case.l).filter(|d| case.l.is_multiple_of(*d)).collect();
    for t_gamma in divisors {
        if case.dim_v < 2 && t_gamma > 1 {
            // with one letter only the constant sequence exists
            continue;
        }
        let target = g.rotation_subgroup(pt * t_gamma);
        let gamma = construct_sequence_with_stabilizer(g, case.dim_v, &support.subgroup, &target)?;
        let data = orbital_data(g, phi, &gamma)?;
        if data.t_gamma != t_gamma {
            return Err(Error::ConstructionFailure {
                t_gamma,
                reason: format!("constructed {gamma} has t_gamma = {}", data.t_gamma),
            });
        }
        let rank_m = matrix_m_gamma(g, phi, &gamma)?.rank() as u32;
        let rank_gram = gram_matrix(g, phi, &gamma)?.rank() as u32;
        let predicted = predicted_dim(case, t_gamma);
        let observed_nonvanishing = !symmetrized_tensor(g, phi, &gamma).is_zero();
        let witness = obasis_search(g, phi, &gamma)?;
        let pair_witness = pair_witness(case, rank_gram)
            .map(|pair| {
                let ok = is_orthogonal_family(g, phi, &gamma, &pair)?;
                Ok::<_, Error>((pair, ok))
            })
            .transpose()?;
        report.gammas.push(GammaCheck {
            t_gamma,
            gamma,
            predicted_dim: predicted,
            circulant_dim: data.dim,
            rank_m,
            rank_gram,
            predicted_nonvanishing: predicted_nonvanishing(case, t_gamma),
            observed_nonvanishing,
            predicted_obasis: flip(predicted == 0 || whole),
            witness,
            pair_witness,
        });
    }
    Ok(())
}

/// `{2^(k-1) + 1, 1}` for the dihedral and dicyclic families when
/// `ν₂(2b/l) = -k < 0` and the subspace is nonzero.
fn pair_witness(case: &CaseParams, dim: u32) -> Option<Vec<u32>> {
    if dim == 0 || case.dim_v < 2 || matches!(case.family, GroupFamily::Semidihedral(_)) {
        return None;
    }
    let v = case.valuation();
    (v < 0).then(|| vec![(1u32 << (-v - 1)) + 1, 1])
}

fn verify_linear(
    g: &FiniteGroup,
    phi: &BrauerCharacter,
    case: &CaseParams,
    options: &VerifyOptions,
    report: &mut VerificationReport,
) {
    let degree = g.degree();
    let mut witnesses = Vec::new();
    if case.dim_v >= 2 {
        witnesses.push(IndexSequence::one_then_twos(degree));
    }
    if case.dim_v >= 3 {
        witnesses.push(IndexSequence::one_twos_three(degree));
    }
    if case.dim_v == 1 {
        witnesses.push(IndexSequence::constant(degree, 1));
    }
    let check = |alpha: &IndexSequence| {
        let space = OrbitSpace::new(g, phi, alpha);
        let all_overlap = space.all_overlap_alpha();
        OrbitCheck {
            alpha: alpha.clone(),
            dim: space.dim(),
            all_overlap,
            has_obasis: space.obasis().is_some(),
        }
    };
    for alpha in &witnesses {
        report.orbits.push(check(alpha));
    }
    if report.orbits.iter().all(|o| o.has_obasis) && case.dim_v > 1 {
        report.sampled = true;
        for alpha in orbit_representatives(g, case.dim_v, options.cap) {
            if !witnesses.contains(&alpha) {
                report.orbits.push(check(&alpha));
            }
        }
    }
}

/// Builds the group and character, then runs [`verify_with`].
pub fn verify_case(case: CaseParams, options: &VerifyOptions) -> Result<VerificationReport> {
    let g = build_group(case.family)?;
    let chars = irreducible_brauer_characters(&g, case.p)?;
    let phi = chars
        .iter()
        .find(|c| c.spec().kind == case.character.kind)
        .ok_or_else(|| Error::UnknownCharacter(case.character.label()))?;
    verify_with(&g, phi, case, options)
}

/// Which families and parameters a sweep covers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    pub families: Vec<FamilyRange>,
    pub primes: Vec<u32>,
    pub dim_v: (u32, u32),
    #[serde(flatten)]
    pub options: VerifyOptions,
}

/// A family name with inclusive parameter bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRange {
    pub family: String,
    pub lo: u32,
    pub hi: u32,
}

impl FamilyRange {
    pub fn members(&self) -> Vec<GroupFamily> {
        (self.lo..=self.hi)
            .filter_map(|x| GroupFamily::from_name(&self.family, x))
            .collect()
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: vec![
                FamilyRange {
                    family: "dihedral".into(),
                    lo: 3,
                    hi: 12,
                },
                FamilyRange {
                    family: "dicyclic".into(),
                    lo: 2,
                    hi: 6,
                },
                FamilyRange {
                    family: "semidihedral".into(),
                    lo: 2,
                    hi: 6,
                },
            ],
            primes: vec![2, 3, 5],
            dim_v: (1, 3),
            options: VerifyOptions::default(),
        }
    }
}

/// A case that could not run.
#[derive(Debug, Clone)]
pub struct CaseFailure {
    pub case: CaseParams,
    pub error: Error,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub reports: Vec<VerificationReport>,
    /// `(family, p, dim V)` combinations with no two-dimensional character.
    pub vacuous: Vec<String>,
    pub failures: Vec<CaseFailure>,
}

impl SweepOutcome {
    pub fn all_agree(&self) -> bool {
        self.reports.iter().all(VerificationReport::agree)
    }

    pub fn records(&self) -> Vec<CaseRecord> {
        self.reports.iter().flat_map(VerificationReport::records).collect()
    }
}

/// Runs every case of the sweep in parallel; the outcome is sorted by case
/// key so it does not depend on scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    for &p in &config.primes {
        crate::group::check_prime(p)?;
    }
    let mut groups = Vec::new();
    for range in &config.families {
        for family in range.members() {
            groups.push(build_group(family)?);
        }
    }
    let (lo, hi) = config.dim_v;
    let mut jobs = Vec::new();
    let mut vacuous = Vec::new();
    for g in &groups {
        for &p in &config.primes {
            let chars = irreducible_brauer_characters(g, p)?;
            for dim_v in lo..=hi {
                if chars.iter().all(|c| c.spec().is_linear()) {
                    vacuous.push(format!("{} p={p} dimV={dim_v}: no two-dimensional Brauer character", g.family()));
                }
                for phi in &chars {
                    jobs.push((g, phi.clone(), CaseParams::new(g.family(), p, dim_v, *phi.spec())));
                }
            }
        }
    }
    let results: Vec<std::result::Result<VerificationReport, CaseFailure>> = jobs
        .par_iter()
        .map(|(g, phi, case)| {
            verify_with(g, phi, *case, &config.options).map_err(|error| CaseFailure { case: *case, error })
        })
        .collect();
    let mut outcome = SweepOutcome {
        vacuous,
        ..SweepOutcome::default()
    };
    for r in results {
        match r {
            Ok(report) => outcome.reports.push(report),
            Err(failure) => outcome.failures.push(failure),
        }
    }
    outcome.reports.sort_by_key(VerificationReport::key);
    outcome.failures.sort_by_key(|f| CaseKey::of(&f.case));
    Ok(outcome)
}

/// Denominator of `2 * index / l` in lowest terms.
pub fn reduced_denominator(index: u32, l: u32) -> u32 {
    l / (2 * index).gcd(&l)
}
