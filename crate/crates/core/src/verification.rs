//! One-call certification: bundles every exact invariant check for a setup
//! into a single report, plus the seeded randomized suite shared by the
//! test battery and the command-line `verify` command.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exactalg::{rat, rat_int, Rational};
use crate::futaki::{cone_angle_identity, log_futaki};
use crate::geometry::{max_admissible_half_width, FibrationSetup, KEFactor, MomentumData};
use crate::numeric::cross_validate_moments;
use crate::profiles::{solve_csck_conical, solve_extremal, ConicalSolution, ExtremalSolution};

/// Draws a random admissible setup: one to three factors with dimensions up
/// to 3, Einstein constants in {1/2, 1, 2}, integer exponents in [-3, 3],
/// and an admissible rational half-width (a tenth-step fraction of the
/// admissibility bound, or of 2 when every factor is untwisted).
///
/// Admissible does not imply the conical construction succeeds: a small
/// share of draws (strong twists near the bound) produce profiles that fail
/// positivity. Use [`random_certified_case`] when the suite needs solved
/// metrics; use this raw draw to exercise the unconditional algebra.
pub fn random_setup<R: Rng + ?Sized>(rng: &mut R) -> FibrationSetup {
    let factor_count = rng.gen_range(1..=3);
    let factors: Vec<KEFactor> = (0..factor_count)
        .map(|_| {
            let dim = rng.gen_range(1..=3u32);
            let einstein = match rng.gen_range(0..3) {
                0 => rat(1, 2),
                1 => rat_int(1),
                _ => rat_int(2),
            };
            let exponent = rat_int(rng.gen_range(-3..=3i64));
            KEFactor::new(dim, einstein, exponent).expect("generated factor data is valid")
        })
        .collect();
    let cap = max_admissible_half_width(&factors).unwrap_or_else(|| rat_int(2));
    let b: Rational = cap * rat(rng.gen_range(1..=9), 10);
    FibrationSetup::new(factors, b).expect("b below the admissibility bound by construction")
}

/// A random setup together with its momentum data and both solved profiles:
/// everything the invariant suites assert on.
#[derive(Debug, Clone)]
pub struct CertifiedCase {
    pub setup: FibrationSetup,
    pub data: MomentumData,
    pub extremal: ExtremalSolution,
    pub conical: ConicalSolution,
}

/// Draws setups until one supports the full construction — both solves
/// succeed with certified positivity — and returns the solved case.
/// Draws whose conical profile fails positivity are skipped (they carry no
/// constant-curvature cone metric to certify); any other failure is a bug
/// and panics.
pub fn random_certified_case<R: Rng + ?Sized>(rng: &mut R) -> CertifiedCase {
    for _ in 0..1000 {
        let setup = random_setup(rng);
        let data = MomentumData::from_setup(&setup);
        let extremal = solve_extremal(&data)
            .expect("extremal positivity holds for every admissible Fano setup");
        match solve_csck_conical(&data) {
            Ok(conical) => {
                return CertifiedCase {
                    setup,
                    data,
                    extremal,
                    conical,
                }
            }
            Err(Error::PositivityFailure { .. }) => continue,
            Err(other) => panic!("conical solve failed structurally: {other}"),
        }
    }
    unreachable!("positivity failures are rare; 1000 consecutive draws cannot all fail")
}

/// Outcome of every invariant check on one solved case. Each flag is a
/// re-verification from scratch — nothing is copied from assertions made
/// during the solves — so a report full of `true` really is independent
/// evidence.
#[derive(Debug, Clone)]
pub struct CaseReport {
    /// Compact description of the setup: factor triples and half-width.
    pub label: String,
    /// The solved cone angle.
    pub beta: Rational,
    /// Both exact angle routes (profile construction and obstruction
    /// functional) agree, and the solved profile's angle matches them.
    pub identity_ok: bool,
    /// Both profiles carry clean positivity certificates: zero interior
    /// roots and a positive midpoint value.
    pub positivity_ok: bool,
    /// Endpoint values and one-sided derivatives of both profiles are
    /// exactly the prescribed ones.
    pub boundary_ok: bool,
    /// `A > 0`, `AC - B^2 > 0`, `bA - B > 0`, and `Q(+-b) > 0`.
    pub structure_ok: bool,
    /// The log-corrected obstruction vanishes exactly (as `0.0`) at the
    /// solved angle.
    pub log_futaki_ok: bool,
    /// Float quadrature reproduces the exact moments to `1e-10` (scaled).
    pub moments_ok: bool,
}

impl CaseReport {
    /// Conjunction of every flag.
    pub fn ok(&self) -> bool {
        self.identity_ok
            && self.positivity_ok
            && self.boundary_ok
            && self.structure_ok
            && self.log_futaki_ok
            && self.moments_ok
    }
}

/// Compact one-line description of a setup, e.g.
/// `[(2, 1, -1), (1, 1/2, 2)] b = 3/10`.
pub fn describe_setup(setup: &FibrationSetup) -> String {
    let triples: Vec<String> = setup
        .factors()
        .iter()
        .map(|f| format!("({}, {}, {})", f.dim(), f.einstein(), f.exponent()))
        .collect();
    format!("[{}] b = {}", triples.join(", "), setup.half_width())
}

/// Runs every invariant check on a solved case and reports each outcome.
pub fn analyze_case(case: &CertifiedCase) -> CaseReport {
    let data = &case.data;
    let b = data.half_width();
    let lo = data.lower_end();
    let two_q_lo = rat_int(2) * data.q_at_lower();
    let two_q_hi = rat_int(2) * data.q_at_upper();

    let angle = cone_angle_identity(data, &case.extremal);
    let identity_ok = angle.ok && case.conical.beta == angle.beta_construction;

    let positivity_ok = [&case.extremal.positivity, &case.conical.positivity]
        .iter()
        .all(|c| c.interior_root_count == 0 && c.midpoint_value.is_positive());

    let ext_d = case.extremal.phi_q.derivative();
    let con_d = case.conical.phi_q.derivative();
    let boundary_ok = case.extremal.phi_q.eval(&lo).is_zero()
        && case.extremal.phi_q.eval(b).is_zero()
        && ext_d.eval(&lo) == two_q_lo
        && ext_d.eval(b) == -&two_q_hi
        && case.conical.phi_q.eval(&lo).is_zero()
        && case.conical.phi_q.eval(b).is_zero()
        && con_d.eval(&lo) == two_q_lo
        && con_d.eval(b) == -(&case.conical.beta * &two_q_hi);

    let structure_ok = data.moment_a().is_positive()
        && data.gram_det().is_positive()
        && data.barycentric_gap().is_positive()
        && data.q_at_lower().is_positive()
        && data.q_at_upper().is_positive();

    let log_futaki_ok = log_futaki(
        data,
        &case.conical.beta,
        &case.extremal,
        case.setup.potential_scale(),
        case.setup.vol_m(),
    )
    .map(|value| value == 0.0)
    .unwrap_or(false);

    let moments_ok = cross_validate_moments(data, 1e-10)
        .map(|agreement| agreement.ok)
        .unwrap_or(false);

    CaseReport {
        label: describe_setup(&case.setup),
        beta: case.conical.beta.clone(),
        identity_ok,
        positivity_ok,
        boundary_ok,
        structure_ok,
        log_futaki_ok,
        moments_ok,
    }
}

/// Builds the solved case for an explicitly given setup and analyzes it.
/// Fails with the underlying solver error when the setup admits no
/// positivity-certified conical profile.
pub fn analyze_setup(setup: &FibrationSetup) -> crate::error::Result<CaseReport> {
    let data = MomentumData::from_setup(setup);
    let extremal = solve_extremal(&data)?;
    let conical = solve_csck_conical(&data)?;
    let case = CertifiedCase {
        setup: setup.clone(),
        data,
        extremal,
        conical,
    };
    Ok(analyze_case(&case))
}

/// Result of a randomized verification run.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    /// One report per certified case, in draw order.
    pub reports: Vec<CaseReport>,
    /// Indices into `reports` of the cases with any failing flag.
    pub failures: Vec<usize>,
    /// Raw draws additionally checked for the exact angle identity alone
    /// (the identity needs no solved profile, so it is exercised on draws
    /// the certification would reject).
    pub raw_identity_checks: usize,
    /// How many of those failed (always zero unless something is broken).
    pub raw_identity_failures: usize,
}

impl SuiteOutcome {
    pub fn all_ok(&self) -> bool {
        self.failures.is_empty() && self.raw_identity_failures == 0
    }
}

/// Runs the seeded randomized suite: `case_count` certified cases through
/// the full report, plus the same number of raw draws through the
/// unconditional exact angle identity.
pub fn run_random_suite(seed: u64, case_count: usize) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::with_capacity(case_count);
    let mut failures = Vec::new();
    for index in 0..case_count {
        let report = analyze_case(&random_certified_case(&mut rng));
        if !report.ok() {
            failures.push(index);
        }
        reports.push(report);
    }

    let mut raw_identity_failures = 0;
    for _ in 0..case_count {
        let setup = random_setup(&mut rng);
        let data = MomentumData::from_setup(&setup);
        let extremal = solve_extremal(&data).expect("extremal solve is total on admissible setups");
        if !cone_angle_identity(&data, &extremal).ok {
            raw_identity_failures += 1;
        }
    }

    SuiteOutcome {
        reports,
        failures,
        raw_identity_checks: case_count,
        raw_identity_failures,
    }
}
