//! End-to-end acceptance checks. Each test covers one numbered check
//! and prints a single `acceptance N (...): PASS` line when it holds
//! (visible with `--nocapture`; the harness line itself carries the
//! verdict either way).

use std::time::Instant;

use conekit_core::{
    cone_angle_identity, cross_validate_moments, fit_cone_exponent, parse_rational,
    random_certified_case, random_setup, rational_to_f64, solve_csck_conical, solve_extremal,
    volume_functional, FibrationSetup, KEFactor, MomentumData, Rational, RationalPoly,
};
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pass(n: u32, label: &str) {
    println!("acceptance {n} ({label}): PASS");
}

fn rat(text: &str) -> Rational {
    parse_rational(text).unwrap()
}

/// A pair of one-dimensional factors with unit Einstein constant.
fn pair(l1: i64, l2: i64) -> Vec<KEFactor> {
    vec![
        KEFactor::from_integers(1, 1, l1).unwrap(),
        KEFactor::from_integers(1, 1, l2).unwrap(),
    ]
}

fn data_for(factors: Vec<KEFactor>, b: Rational) -> MomentumData {
    let setup = FibrationSetup::new(factors, b).unwrap();
    MomentumData::from_setup(&setup)
}

/// The 49-point grid b = k/100, k = 1..=49.
fn grid_49() -> Vec<Rational> {
    (1..=49).map(|k| rat(&format!("{k}/100"))).collect()
}

/// Golden cone angles for the wide pair (exponents -1, 2), frozen from an
/// independent exact oracle before this implementation existed.
const WIDE_GOLDEN: [(&str, &str); 49] = [
    ("1/100", "226417502/223432503"),
    ("1/50", "14229377/13858128"),
    ("3/100", "3631074/3490361"),
    ("1/25", "1794379/1702506"),
    ("1/20", "368702/345303"),
    ("3/50", "1604393/1483152"),
    ("7/100", "231462302/211199703"),
    ("2/25", "3620753/3260817"),
    ("9/100", "25758958/22894687"),
    ("1/10", "301/264"),
    ("11/100", "231546782/200376423"),
    ("3/25", "200661/171304"),
    ("13/100", "230614622/194178183"),
    ("7/50", "14369177/11930328"),
    ("3/20", "40718/33327"),
    ("4/25", "209569/169041"),
    ("17/100", "32403506/25749009"),
    ("9/50", "1565833/1225312"),
    ("19/100", "223978142/172523463"),
    ("1/5", "2779/2106"),
    ("21/100", "2227338/1659757"),
    ("11/50", "13658657/10002048"),
    ("23/100", "216417182/155632023"),
    ("6/25", "53111/37479"),
    ("1/4", "542/375"),
    ("13/50", "13071497/8858808"),
    ("27/100", "22935598/15209647"),
    ("7/25", "1590229/1030656"),
    ("29/100", "200532062/126854343"),
    ("3/10", "2193/1352"),
    ("31/100", "27723506/16629009"),
    ("8/25", "270763/157707"),
    ("33/100", "1222414/689871"),
    ("17/50", "11456417/6248688"),
    ("7/20", "287102/150903"),
    ("9/25", "152291/76874"),
    ("37/100", "171305822/82714983"),
    ("19/50", "1491431/685584"),
    ("39/100", "18071598/7863647"),
    ("2/5", "3953/1617"),
    ("41/100", "153469022/58509783"),
    ("21/50", "1032593/362952"),
    ("43/100", "13072282/4177173"),
    ("11/25", "1084189/309096"),
    ("9/20", "3394/841"),
    ("23/50", "8024057/1662648"),
    ("47/100", "123016862/20031543"),
    ("12/25", "204057/23273"),
    ("49/100", "111947102/6726903"),
];

/// Golden cone angles for the narrow pair (exponents -2, 1), same origin.
const NARROW_GOLDEN: [(&str, &str); 49] = [
    ("1/100", "223447504/226432503"),
    ("1/50", "13861879/14233128"),
    ("3/100", "24447536/25432527"),
    ("1/25", "1704383/1796256"),
    ("1/20", "345904/369303"),
    ("3/50", "1486911/1608152"),
    ("7/100", "211937104/232199703"),
    ("2/25", "3275881/3635817"),
    ("9/100", "23030416/25894687"),
    ("1/10", "20479/23328"),
    ("11/100", "8791568/10146801"),
    ("3/25", "5587/6534"),
    ("13/100", "196741744/233178183"),
    ("7/50", "12116479/14555328"),
    ("3/20", "33936/41327"),
    ("4/25", "2934721/3623697"),
    ("17/100", "184661584/231243063"),
    ("9/50", "1259791/1600312"),
    ("19/100", "178068784/229523463"),
    ("1/5", "2183/2856"),
    ("21/100", "19013936/25257327"),
    ("11/50", "10470439/14127048"),
    ("23/100", "163846864/224632023"),
    ("6/25", "277929/387353"),
    ("1/4", "400/567"),
    ("13/50", "9521119/13733808"),
    ("27/100", "16483696/24209647"),
    ("7/25", "1127333/1686906"),
    ("29/100", "140176624/213854343"),
    ("3/10", "1511/2352"),
    ("31/100", "131741584/209403063"),
    ("8/25", "1991161/3234777"),
    ("33/100", "13674576/22727807"),
    ("17/50", "322433/548856"),
    ("7/20", "182704/318903"),
    ("9/25", "95207/170624"),
    ("37/100", "105124144/193714983"),
    ("19/50", "6283159/11924088"),
    ("39/100", "10655696/20863647"),
    ("2/5", "2281/4617"),
    ("41/100", "86550544/181509783"),
    ("21/50", "568311/1237952"),
    ("43/100", "2487184/5643513"),
    ("11/25", "565253/1340346"),
    ("9/20", "12016/29887"),
    ("23/50", "3926239/10287648"),
    ("47/100", "58046224/161031543"),
    ("12/25", "92489/273273"),
    ("49/100", "48506704/153726903"),
];

#[test]
fn acceptance_1_angle_identity_on_100_random_setups() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_817);
    for _ in 0..100 {
        let setup = random_setup(&mut rng);
        let data = MomentumData::from_setup(&setup);
        let extremal = solve_extremal(&data).unwrap();
        let identity = cone_angle_identity(&data, &extremal);
        assert!(
            identity.ok,
            "angle routes disagree: construction {} vs obstruction {}",
            identity.beta_construction, identity.beta_futaki
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "identity sweep took {elapsed:?}, budget is 5 s"
    );
    pass(
        1,
        &format!(
            "exact angle identity on 100 seeded random setups, {:.2} s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn acceptance_2_wide_pair_curve_exceeds_one_and_matches_goldens() {
    let one = Rational::from_integer(1.into());
    for (b_text, beta_text) in WIDE_GOLDEN {
        let data = data_for(pair(-1, 2), rat(b_text));
        let conical = solve_csck_conical(&data).unwrap();
        assert!(
            conical.beta > one,
            "b = {b_text}: angle {} is not above 1",
            conical.beta
        );
        assert_eq!(
            conical.beta,
            rat(beta_text),
            "b = {b_text}: angle differs from the frozen golden value"
        );
    }
    pass(
        2,
        "wide-pair curve: beta > 1 and exact golden match at 49 grid points",
    );
}

#[test]
fn acceptance_3_narrow_pair_curve_stays_in_band() {
    let one = Rational::from_integer(1.into());
    let quarter = rat("1/4");
    for (b_text, beta_text) in NARROW_GOLDEN {
        let data = data_for(pair(-2, 1), rat(b_text));
        let conical = solve_csck_conical(&data).unwrap();
        assert!(
            conical.beta > quarter && conical.beta < one,
            "b = {b_text}: angle {} left the band (1/4, 1)",
            conical.beta
        );
        assert_eq!(
            conical.beta,
            rat(beta_text),
            "b = {b_text}: angle differs from the frozen golden value"
        );
    }
    pass(
        3,
        "narrow-pair curve: 0.25 < beta < 1 and exact golden match at 49 grid points",
    );
}

#[test]
fn acceptance_4_untwisted_case_is_smooth_and_explicit() {
    let data = data_for(pair(0, 0), Rational::from_integer(1.into()));
    let extremal = solve_extremal(&data).unwrap();
    let conical = solve_csck_conical(&data).unwrap();
    assert!(extremal.lambda.is_zero());
    assert_eq!(conical.beta, Rational::from_integer(1.into()));
    assert_eq!(extremal.sigma0, rat("3"));
    assert_eq!(conical.sigma0_prime, rat("3"));
    // phi*Q = (1+tau)(1-tau) = 1 - tau^2
    let expected = RationalPoly::from_coeffs(vec![rat("1"), rat("0"), rat("-1")]);
    assert_eq!(extremal.phi_q, expected);
    assert_eq!(
        conical.phi_q, expected,
        "conical profile must equal the smooth one"
    );

    // a second untwisted setup for good measure
    let data = data_for(vec![KEFactor::from_integers(2, 1, 0).unwrap()], rat("1/2"));
    let extremal = solve_extremal(&data).unwrap();
    let conical = solve_csck_conical(&data).unwrap();
    assert!(extremal.lambda.is_zero());
    assert_eq!(conical.beta, Rational::from_integer(1.into()));
    assert_eq!(extremal.phi_q, conical.phi_q);
    pass(
        4,
        "untwisted bundles: lambda = 0, beta = 1, conical profile equals the smooth one",
    );
}

/// The deterministic configurations the polynomial-identity and
/// cross-validation checks run over.
fn reference_set() -> Vec<MomentumData> {
    vec![
        data_for(pair(0, 0), Rational::from_integer(1.into())),
        data_for(pair(-1, 2), rat("1/4")),
        data_for(pair(-2, 1), rat("1/4")),
        data_for(vec![KEFactor::from_integers(2, 1, 1).unwrap()], rat("1/2")),
        data_for(
            vec![
                KEFactor::new(2, rat("1/2"), rat("-1")).unwrap(),
                KEFactor::new(1, rat("2"), rat("1")).unwrap(),
            ],
            rat("1/3"),
        ),
        data_for(
            vec![
                KEFactor::from_integers(1, 1, -1).unwrap(),
                KEFactor::from_integers(1, 1, 2).unwrap(),
                KEFactor::from_integers(2, 1, 0).unwrap(),
            ],
            rat("1/4"),
        ),
    ]
}

#[test]
fn acceptance_5_polynomial_and_boundary_identities_are_exact() {
    let two = rat("2");
    for data in reference_set() {
        let b = data.half_width().clone();
        let lo = data.lower_end();
        let extremal = solve_extremal(&data).unwrap();
        let conical = solve_csck_conical(&data).unwrap();

        // curvature identities, coefficient by coefficient
        let curvature_of =
            |phi_q: &RationalPoly| &data.rq().scaled(&two) - &phi_q.derivative().derivative();
        let ext_rhs =
            &RationalPoly::linear(&two * &extremal.sigma0, &two * &extremal.lambda) * data.q();
        assert_eq!(curvature_of(&extremal.phi_q), ext_rhs);
        let con_rhs = data.q().scaled(&(&two * &conical.sigma0_prime));
        assert_eq!(curvature_of(&conical.phi_q), con_rhs);

        // boundary values, zero tolerance
        for phi_q in [&extremal.phi_q, &conical.phi_q] {
            assert!(phi_q.eval(&lo).is_zero());
            assert!(phi_q.eval(&b).is_zero());
        }
        let two_q_lo = &two * &data.q_at_lower();
        let two_q_hi = &two * &data.q_at_upper();
        assert_eq!(extremal.phi_q.derivative().eval(&lo), two_q_lo);
        assert_eq!(extremal.phi_q.derivative().eval(&b), -&two_q_hi);
        assert_eq!(conical.phi_q.derivative().eval(&lo), two_q_lo);
        assert_eq!(
            conical.phi_q.derivative().eval(&b),
            -(&conical.beta * &two_q_hi)
        );
    }
    pass(
        5,
        "curvature and boundary identities hold with zero tolerance on the reference set",
    );
}

#[test]
fn acceptance_6_structural_inequalities_on_random_setups() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    // data-level inequalities hold for every admissible draw
    for _ in 0..100 {
        let setup = random_setup(&mut rng);
        let data = MomentumData::from_setup(&setup);
        assert!(data.moment_a().is_positive());
        assert!(data.gram_det().is_positive(), "AC - B^2 must be positive");
        assert!(
            data.barycentric_gap().is_positive(),
            "bA - B must be positive"
        );
    }
    // angle and profile inequalities hold for every certified solution
    for _ in 0..60 {
        let case = random_certified_case(&mut rng);
        assert!(!case.conical.beta.is_negative(), "beta must be nonnegative");
        for cert in [&case.extremal.positivity, &case.conical.positivity] {
            assert_eq!(cert.interior_root_count, 0);
            assert!(cert.midpoint_value.is_positive());
        }
    }
    pass(
        6,
        "structural inequalities: moments on 100 raw draws, angle/positivity on 60 certified cases",
    );
}

#[test]
fn acceptance_7_numeric_quadrature_matches_exact_moments() {
    let mut checked = 0;
    for factors in [pair(-1, 2), pair(-2, 1)] {
        for b in grid_49() {
            let data = data_for(factors.clone(), b);
            let agreement = cross_validate_moments(&data, 1e-10).unwrap();
            assert!(
                agreement.ok,
                "float quadrature drifted {} from the exact moments",
                agreement.max_scaled_error
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 98);
    pass(
        7,
        "adaptive quadrature matches exact A, B, C, int RQ, int tau RQ at 1e-10 on both grids",
    );
}

#[test]
fn acceptance_8_cone_exponent_fits_recover_the_angle() {
    let mut timings = Vec::new();
    for (factors, b) in [
        (pair(-2, 1), rat("1/4")),
        (pair(0, 0), Rational::from_integer(1.into())),
    ] {
        let data = data_for(factors, b);
        let conical = solve_csck_conical(&data).unwrap();
        let start = Instant::now();
        let fit = fit_cone_exponent(&conical.phi_q, &data, &conical.beta, 1e-6, 10_000).unwrap();
        let elapsed = start.elapsed().as_secs_f64();
        assert!(
            fit.relative_error < 0.01,
            "fitted slope misses 1/(2 beta) by {}",
            fit.relative_error
        );
        assert!(elapsed < 2.0, "fit took {elapsed:.2} s, budget is 2 s");
        timings.push(elapsed);
    }
    pass(
        8,
        &format!(
            "fitted log-slopes within 1% of 1/(2 beta), {:.2} s and {:.2} s",
            timings[0], timings[1]
        ),
    );
}

#[test]
fn acceptance_9_volume_functional_normalization() {
    use std::f64::consts::PI;
    // f = 1 gives 2*pi*vol*A on every reference configuration
    let one = RationalPoly::constant(rat("1"));
    for data in reference_set() {
        let vol = 2.5;
        let volume = volume_functional(&data, &one, vol).unwrap();
        let expected = 2.0 * PI * vol * rational_to_f64(data.moment_a()).unwrap();
        assert!(
            ((volume - expected) / expected).abs() < 1e-15,
            "volume {volume} differs from 2*pi*vol*A = {expected}"
        );
    }
    // Q = 1, b = 1, vol = 1: the fibre volume is exactly 4*pi
    let data = data_for(vec![KEFactor::from_integers(1, 1, 0).unwrap()], rat("1"));
    let volume = volume_functional(&data, &one, 1.0).unwrap();
    assert!(
        ((volume - 4.0 * PI) / (4.0 * PI)).abs() < 1e-12,
        "unit fibre volume {volume} is not 4*pi"
    );
    pass(
        9,
        "volume functional equals 2*pi*vol*A, and 4*pi on the unit configuration",
    );
}
