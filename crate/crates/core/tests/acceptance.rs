//! One line per acceptance criterion. A criterion whose literal statement
//! disagrees with the algebra prints `FAIL (documented)`; the run still
//! succeeds when the disagreement is exactly the pinned one and the corrected
//! check passes. Any other failure exits nonzero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qsuper_core::dual::{calibrate_e_sign, pairing_gram_rank, verify_uq_relations, verify_uq_relations_with, Pairing};
use qsuper_core::hopf::{verify_coactions, verify_hopf, verify_nilpotent_coaction};
use qsuper_core::repn::{
    haar_zeta, matrix_coefficients, moments, stated_unit_discrepancies, verify_closed_forms, verify_completeness,
    verify_corep, verify_cross_sigma_orthogonality, verify_e_products, verify_haar_zeta, verify_integral,
    verify_peter_weyl_formula, verify_power_formulas, verify_projection_formula, Case, Variant,
};
use qsuper_core::spheres::{
    build_m, characters_of_s_infinity, find_relations, unitarity_residual, verify_coideal, verify_infinity_relations,
    verify_m, RelationKind, SphereParams,
};
use qsuper_core::superalg::verify_associativity;
use qsuper_core::{Report, Route, Scalar};

const UNITARITY_TOL: f64 = 1e-9;
const SEED: u64 = 20;

#[derive(PartialEq)]
enum Status {
    Pass,
    Documented,
    Fail,
}

struct Outcome {
    status: Status,
    detail: String,
}

fn outcome(ok: bool, detail: String) -> Outcome {
    Outcome { status: if ok { Status::Pass } else { Status::Fail }, detail }
}

fn summary(r: &Report) -> String {
    match r.failures.first() {
        None => format!("{}: {}/{}", r.name, r.checked - r.failed, r.checked),
        Some(f) => format!("{}: {}/{} (first failure {})", r.name, r.checked - r.failed, r.checked, f.input),
    }
}

fn within(start: Instant, limit: Duration) -> (bool, String) {
    let e = start.elapsed();
    (e <= limit, format!("{:.1}s of {}s", e.as_secs_f64(), limit.as_secs()))
}

fn basis_and_confluence() -> Outcome {
    let start = Instant::now();
    let r = verify_associativity(1000, 4, SEED);
    let (fast, time) = within(start, Duration::from_secs(60));
    outcome(r.passed() && fast, format!("{}, {time}", summary(&r)))
}

fn hopf_axioms() -> Outcome {
    let start = Instant::now();
    let r = verify_hopf(4);
    let (fast, time) = within(start, Duration::from_secs(120));
    outcome(r.passed() && fast, format!("{}, {time}", summary(&r)))
}

fn comodule_algebra() -> Outcome {
    let r = verify_coactions(5);
    let control = verify_nilpotent_coaction();
    let broken = control.failed == control.checked && control.checked > 0;
    outcome(
        r.passed() && broken,
        format!("{}; y^2 = 0 control breaks psi on {}/{}", summary(&r), control.failed, control.checked),
    )
}

fn dual_relations() -> Outcome {
    let sign = calibrate_e_sign();
    let r = verify_uq_relations(5);
    let bad = verify_uq_relations_with(Pairing::uncalibrated(), 1);
    let at_a = bad.failures.iter().any(|f| f.input.starts_with("ef + fe") && f.input.ends_with(" at a"));
    outcome(
        sign.as_ref().ok() == Some(&-1) && r.passed() && at_a,
        format!("e(b) sign {sign:?}; {}; uncalibrated fails at a: {at_a}", summary(&r)),
    )
}

fn pairing_evidence() -> Outcome {
    let g = pairing_gram_rank(3, 6);
    outcome(g.exact, format!("{}x{} Gram matrix, rank {} (maximal {})", g.rows, g.cols, g.rank, g.rows.min(g.cols)))
}

fn spheres() -> Outcome {
    let m = verify_m(&[-0.5, -2.0]);
    let worst =
        [-0.5, -2.0].iter().map(|&q| unitarity_residual(&build_m(), q).unwrap_or(f64::INFINITY)).fold(0.0, f64::max);
    let coideal = verify_coideal(&SphereParams::Infinity);
    let derived = verify_infinity_relations(Route::Derived);
    let stated = verify_infinity_relations(Route::Stated);
    let chars = characters_of_s_infinity().unwrap_or_default();
    let expected = [[Scalar::zero(), Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::int(-1), Scalar::zero()]];
    let chars_ok = chars.len() == 2 && expected.iter().all(|c| chars.contains(c));
    let alpha0 = SphereParams::alpha_int(1, 0, 1).unwrap();
    let none = !find_relations(&alpha0, RelationKind::Lower).exists();
    let middle = SphereParams::alpha_int(0, 1, 0).unwrap();
    let finite = RelationKind::ALL.iter().all(|&k| find_relations(&middle, k).exists());
    let core =
        m.passed() && worst < UNITARITY_TOL && coideal.passed() && derived.passed() && chars_ok && none && finite;
    // the printed quadratic relations fail, the mixed ones hold
    let pinned = stated.failed == 2 && stated.failures.iter().all(|f| f.input.starts_with("x0^2"));
    let detail = format!(
        "{}; unitarity residual {worst:.1e} < {UNITARITY_TOL:.0e}; printed relations at infinity {}/{} \
         (first two need corrected cross terms), corrected {}/{}; characters {}; \
         alpha_0 = 0 mixed relation none exists: {none}; alpha = (0,1,0) all kinds: {finite}",
        summary(&m),
        stated.checked - stated.failed,
        stated.checked,
        derived.checked - derived.failed,
        derived.checked,
        chars.len(),
    );
    let status = match (core, stated.passed(), pinned) {
        (true, true, _) => Status::Pass,
        (true, false, true) => Status::Documented,
        _ => Status::Fail,
    };
    Outcome { status, detail }
}

fn matrix_coefficients_closed_forms() -> Outcome {
    let start = Instant::now();
    let mut corep = Report::new("corepresentations");
    for two_l in 0..=5 {
        for s in 0..=1 {
            match matrix_coefficients(two_l, s) {
                Ok(m) => corep.merge(verify_corep(&m)),
                Err(e) => corep.check(false, format!("2l={two_l} s={s}"), e, "matrix"),
            }
        }
    }
    let derived = verify_closed_forms(5, Route::Derived);
    let stated = verify_closed_forms(5, Route::Stated);
    let (fast, time) = within(start, Duration::from_secs(600));
    let units = stated_unit_discrepancies(5).unwrap_or_default();
    // only the units differ, and never in case one
    let pinned = !units.is_empty() && units.iter().all(|(_, case, u)| *case != Case::One && u.mul(&u.conj()).is_one());
    let detail = format!(
        "{}; stated units {}/{} ({} entries with s = 0 off by a unit in cases 2-4); corrected {}/{}; {time}",
        summary(&corep),
        stated.checked - stated.failed,
        stated.checked,
        units.len(),
        derived.checked - derived.failed,
        derived.checked,
    );
    let core = corep.passed() && derived.passed() && fast;
    let status = match (core, stated.passed(), pinned) {
        (true, true, _) => Status::Pass,
        (true, false, true) => Status::Documented,
        _ => Status::Fail,
    };
    Outcome { status, detail }
}

fn power_formulas() -> Outcome {
    let p = verify_power_formulas(6);
    let proj = verify_projection_formula(5);
    outcome(p.passed() && proj.passed(), format!("{}; {}", summary(&p), summary(&proj)))
}

fn haar_and_peter_weyl() -> Outcome {
    let integral = verify_integral(5);
    let zeta = verify_haar_zeta(8);
    let mut descending = 0;
    let mut ascending_off = Vec::new();
    let mut ascending_corrected = true;
    for r in 0..=4 {
        for s in 0..=4 {
            if moments(r, s, Variant::Descending).map(|m| m.matches).unwrap_or(false) {
                descending += 1;
            }
            match moments(r, s, Variant::Ascending) {
                Ok(m) => {
                    if !m.matches {
                        ascending_off.push((r, s));
                    }
                    ascending_corrected &= m.oracle == m.corrected;
                }
                Err(_) => ascending_corrected = false,
            }
        }
    }
    let formula = verify_peter_weyl_formula(3);
    let cross = verify_cross_sigma_orthogonality(3);
    let e_stated = verify_e_products(3, Route::Stated);
    let e_derived = verify_e_products(3, Route::Derived);
    let zeta1 = haar_zeta(1).to_string();
    let reproduced = ascending_off.contains(&(0, 0)) && ascending_off.contains(&(1, 0));
    let core = integral.passed()
        && zeta.passed()
        && descending == 25
        && ascending_corrected
        && reproduced
        && formula.passed()
        && e_derived.passed();
    let detail = format!(
        "{} ({}); {}; h(zeta) = {zeta1}; descending moments {descending}/25; ascending printed formula off at \
         {} of 25 pairs incl. (0,0),(1,0): {reproduced}, corrected exponent matches all: {ascending_corrected}; \
         {}; cross-s {}; e-products printed {}, corrected {}",
        summary(&integral),
        integral.notes.join("; "),
        summary(&zeta),
        ascending_off.len(),
        summary(&formula),
        summary(&cross),
        summary(&e_stated),
        summary(&e_derived),
    );
    let pinned = !cross.passed() && !e_stated.passed();
    let status = match (core, cross.passed() && e_stated.passed(), pinned) {
        (true, true, _) => Status::Pass,
        (true, false, true) => Status::Documented,
        _ => Status::Fail,
    };
    Outcome { status, detail }
}

fn completeness() -> Outcome {
    let r = verify_completeness(4, 4);
    outcome(r.passed(), summary(&r))
}

type Criterion = (&'static str, fn() -> Outcome);

const CRITERIA: [Criterion; 10] = [
    ("basis and confluence", basis_and_confluence),
    ("hopf axioms", hopf_axioms),
    ("comodule algebra", comodule_algebra),
    ("dual relations", dual_relations),
    ("pairing evidence", pairing_evidence),
    ("spheres", spheres),
    ("matrix coefficients", matrix_coefficients_closed_forms),
    ("power formulas", power_formulas),
    ("haar and peter-weyl", haar_and_peter_weyl),
    ("completeness", completeness),
];

fn main() -> ExitCode {
    let outcomes: Vec<(Outcome, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|(_, f)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let o = f();
                    (o, start.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut ok = true;
    for (k, ((name, _), (o, secs))) in CRITERIA.iter().zip(&outcomes).enumerate() {
        let label = match o.status {
            Status::Pass => "PASS",
            Status::Documented => "FAIL (documented)",
            Status::Fail => {
                ok = false;
                "FAIL"
            }
        };
        println!("criterion {}: {label}: {name} [{secs:.1}s] {}", k + 1, o.detail);
    }
    println!("criterion 11: see the acceptance test of the cli crate");
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
