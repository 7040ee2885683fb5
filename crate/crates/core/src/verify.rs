//! Seeded property sweep over all three number systems.
//!
//! Each property is checked on `samples` independent cases. Cases are
//! generated from `(seed, property, index)` alone, so reports are identical
//! across runs and across execution modes.

use std::fmt;

use rand_chacha::ChaCha8Rng;

use crate::character::{eq_by_characters, CHARACTER_TOLERANCE};
use crate::matrix::Mat33;
use crate::pair::UPair;
use crate::par::Execution;
use crate::sample;
use crate::triple::Triple;

/// Tolerance for floating-point comparisons against complex arithmetic.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// Complex reconstruction bound for round-trip cases.
pub const COMPLEX_BOUND: f64 = 100.0;

type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

#[derive(Clone, Copy)]
pub struct Property {
    pub name: &'static str,
    pub system: &'static str,
    check: Check,
}

impl Property {
    pub fn run_case(&self, seed: u64, stream: u64, index: u64) -> Result<(), String> {
        (self.check)(&mut sample::case_rng(seed, stream, index))
    }
}

impl fmt::Debug for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Property({}/{})", self.system, self.name)
    }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

// --- unsigned pairs --------------------------------------------------------

fn pair_homomorphism(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y) = (sample::pair(rng), sample::pair(rng));
    let (sx, sy) = (x.to_signed(), y.to_signed());
    ensure((&x * &y).to_signed() == &sx * &sy, || {
        format!("mul: {x} {y}")
    })?;
    ensure((&x + &y).to_signed() == &sx + &sy, || {
        format!("add: {x} {y}")
    })
}

fn pair_ring_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y, z) = (sample::pair(rng), sample::pair(rng), sample::pair(rng));
    ensure(&x + &y == &y + &x, || format!("add commutes: {x} {y}"))?;
    ensure(&x * &y == &y * &x, || format!("mul commutes: {x} {y}"))?;
    ensure(&(&x + &y) + &z == &x + &(&y + &z), || {
        format!("add assoc: {x} {y} {z}")
    })?;
    ensure(&(&x * &y) * &z == &x * &(&y * &z), || {
        format!("mul assoc: {x} {y} {z}")
    })?;
    ensure(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), || {
        format!("distributes: {x} {y} {z}")
    })
}

fn pair_reduction(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let x = sample::pair(rng);
    let r = x.reduce();
    ensure(r.is_reduced() && r.reduce().same_form(&r) && x == r, || {
        format!("{x}")
    })
}

fn pair_signed_round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let v = sample::signed_scalar(rng);
    let p = UPair::from_signed(&v);
    ensure(p.is_reduced() && p.to_signed() == v, || format!("{v}"))
}

// --- triples ---------------------------------------------------------------

fn triple_ring_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y, z) = (
        sample::triple(rng),
        sample::triple(rng),
        sample::triple(rng),
    );
    ensure(&x + &y == &y + &x, || format!("add commutes: {x} {y}"))?;
    ensure(&x * &y == &y * &x, || format!("mul commutes: {x} {y}"))?;
    ensure(&(&x + &y) + &z == &x + &(&y + &z), || {
        format!("add assoc: {x} {y} {z}")
    })?;
    ensure(&(&x * &y) * &z == &x * &(&y * &z), || {
        format!("mul assoc: {x} {y} {z}")
    })?;
    ensure(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), || {
        format!("distributes: {x} {y} {z}")
    })
}

fn triple_well_defined(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y) = (sample::triple(rng), sample::triple(rng));
    let zero = Triple::constant(&sample::nonneg_scalar(rng)).expect("nonnegative");
    let shifted = &x + &zero;
    ensure(shifted == x, || format!("zero shift: {x} {zero}"))?;
    ensure((&zero * &y).is_constant(), || format!("absorb: {zero} {y}"))?;
    ensure(&shifted * &y == &x * &y, || {
        format!("product class: {x} {y} {zero}")
    })
}

fn triple_complex_homomorphism(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y) = (sample::triple(rng), sample::triple(rng));
    let (zx, zy) = (x.to_complex(), y.to_complex());
    let mul_err = ((&x * &y).to_complex() - zx * zy).norm();
    let add_err = ((&x + &y).to_complex() - (zx + zy)).norm();
    ensure(
        mul_err < FLOAT_TOLERANCE && add_err < FLOAT_TOLERANCE,
        || format!("{x} {y}: mul err {mul_err:e}, add err {add_err:e}"),
    )
}

fn triple_norm_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y) = (sample::triple(rng), sample::triple(rng));
    let (nx, ny) = (x.norm_sq(), y.norm_sq());
    ensure(nx.is_nonnegative(), || format!("negative norm: {x}"))?;
    ensure((&x * &y).norm_sq() == &nx * &ny, || {
        format!("multiplicative: {x} {y}")
    })?;
    let modulus = x.to_complex().norm_sqr();
    let err = (x.norm() * x.norm() - modulus).abs();
    ensure(err < FLOAT_TOLERANCE, || {
        format!("|z|² mismatch {err:e}: {x}")
    })?;
    let lhs = (&x + &y).norm();
    ensure(lhs <= x.norm() + y.norm() + FLOAT_TOLERANCE, || {
        format!("triangle: {x} {y}")
    })?;
    ensure(x.conj().norm_sq() == nx, || format!("conj norm: {x}"))?;
    let real = Triple::new(nx.clone(), 0.into(), 0.into()).expect("nonnegative");
    ensure(&x * &x.conj() == real, || format!("x·conj(x): {x}"))
}

fn triple_reduction(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let x = sample::triple(rng);
    let r = x.reduce();
    ensure(r.is_reduced() && r.reduce().same_form(&r) && r == x, || {
        format!("{x}")
    })
}

fn triple_complex_round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let z = sample::complex(rng, COMPLEX_BOUND);
    let t = Triple::from_complex(z).map_err(|e| e.to_string())?;
    let err = (t.to_complex() - z).norm();
    ensure(t.is_reduced() && err < FLOAT_TOLERANCE, || {
        format!("{z} -> {t}: err {err:e}")
    })?;
    // And back from an exact triple.
    let x = sample::triple(rng);
    let back = Triple::from_complex(x.to_complex()).map_err(|e| e.to_string())?;
    let err = (back.to_complex() - x.to_complex()).norm();
    ensure(err < FLOAT_TOLERANCE, || {
        format!("{x} -> {back}: err {err:e}")
    })
}

// --- matrices --------------------------------------------------------------

fn matrix_ring_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y, z) = (
        sample::matrix(rng),
        sample::matrix(rng),
        sample::matrix(rng),
    );
    ensure(&x + &y == &y + &x, || format!("add commutes: {x} {y}"))?;
    ensure(&x * &y == &y * &x, || format!("mul commutes: {x} {y}"))?;
    ensure(&(&x + &y) + &z == &x + &(&y + &z), || {
        format!("add assoc: {x} {y} {z}")
    })?;
    ensure(&(&x * &y) * &z == &x * &(&y * &z), || {
        format!("mul assoc: {x} {y} {z}")
    })?;
    ensure(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), || {
        format!("distributes: {x} {y} {z}")
    })
}

fn matrix_row_sum_homomorphism(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y) = (sample::matrix(rng), sample::matrix(rng));
    let (rx, ry) = (x.row_sums(), y.row_sums());
    ensure((&x * &y).row_sums() == &rx * &ry, || {
        format!("mul: {x} {y}")
    })?;
    ensure((&x + &y).row_sums().same_form(&(&rx + &ry)), || {
        format!("add: {x} {y}")
    })
}

fn matrix_norm_multiplicative(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y) = (sample::matrix(rng), sample::matrix(rng));
    ensure((&x * &y).norm_sq() == &x.norm_sq() * &y.norm_sq(), || {
        format!("{x} {y}")
    })
}

fn matrix_rotation_zeros(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = sample::matrix(rng);
    let sel = sample::selector(rng);
    let mut xi = sample::nonneg_scalar(rng);
    if xi.is_zero() {
        xi = 1.into();
    }
    let z = Mat33::rotation_zero(sel, &xi).map_err(|e| e.to_string())?;
    ensure(z.norm_sq().is_zero(), || format!("zero norm: {z}"))?;
    ensure((&m * &z).norm_sq().is_zero(), || format!("M×Z: {m} {z}"))?;
    ensure((&m + &z).norm_sq() == m.norm_sq(), || {
        format!("M+Z: {m} {z}")
    })
}

fn matrix_well_defined(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y) = (sample::matrix(rng), sample::matrix(rng));
    let zero = sample::absolute_zero(rng);
    let shifted = &x + &zero;
    ensure(shifted == x, || format!("zero shift: {x} {zero}"))?;
    ensure(
        (&zero * &y).columns().iter().all(Triple::is_constant),
        || format!("absorb: {zero} {y}"),
    )?;
    ensure(&shifted * &y == &x * &y, || {
        format!("product class: {x} {y} {zero}")
    })
}

fn matrix_character_oracle(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (x, y) = (sample::matrix(rng), sample::matrix(rng));
    ensure((x == y) == eq_by_characters(&x, &y), || {
        format!("random pair: {x} {y}")
    })?;
    let twin = &x + &sample::absolute_zero(rng);
    ensure(twin == x && eq_by_characters(&x, &twin), || {
        format!("twin: {x} {twin}")
    })?;
    // Characters are ring homomorphisms.
    let (cx, cy) = (x.characters(), y.characters());
    let cp = (&x * &y).characters();
    for q in 0..3 {
        let expect = cx[q] * cy[q];
        let err = (cp[q] - expect).norm() / expect.norm().max(1.0);
        ensure(err < CHARACTER_TOLERANCE, || {
            format!("psi_{q} mul: {x} {y} err {err:e}")
        })?;
    }
    Ok(())
}

/// All properties, in report order.
pub fn properties() -> Vec<Property> {
    let p = |system, name, check| Property {
        name,
        system,
        check,
    };
    vec![
        p(
            "pair",
            "signed homomorphism (add, mul)",
            pair_homomorphism as Check,
        ),
        p(
            "pair",
            "commutative, associative, distributive",
            pair_ring_laws,
        ),
        p("pair", "reduction idempotent and equal", pair_reduction),
        p(
            "pair",
            "from_signed/to_signed round trip",
            pair_signed_round_trip,
        ),
        p(
            "triple",
            "commutative, associative, distributive",
            triple_ring_laws,
        ),
        p(
            "triple",
            "constant triples absorb and quotient is well defined",
            triple_well_defined,
        ),
        p(
            "triple",
            "complex homomorphism (add, mul)",
            triple_complex_homomorphism,
        ),
        p(
            "triple",
            "norm: multiplicative, |z|, triangle, conjugate",
            triple_norm_laws,
        ),
        p("triple", "reduction idempotent and equal", triple_reduction),
        p("triple", "complex round trip", triple_complex_round_trip),
        p(
            "matrix",
            "commutative, associative, distributive",
            matrix_ring_laws,
        ),
        p(
            "matrix",
            "row sums homomorphism",
            matrix_row_sum_homomorphism,
        ),
        p("matrix", "norm multiplicative", matrix_norm_multiplicative),
        p(
            "matrix",
            "rotation zeros: norm 0, M×Z norm 0, M+Z keeps norm",
            matrix_rotation_zeros,
        ),
        p(
            "matrix",
            "absolute zeros absorb and quotient is well defined",
            matrix_well_defined,
        ),
        p(
            "matrix",
            "characters separate classes and multiply",
            matrix_character_oracle,
        ),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyOutcome {
    pub system: &'static str,
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// First failing case index and its description.
    pub first_failure: Option<(u64, String)>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub samples: u64,
    pub seed: u64,
    pub outcomes: Vec<PropertyOutcome>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }

    pub fn machine_records(&self) -> Vec<String> {
        self.outcomes
            .iter()
            .map(|o| {
                format!(
                    "{}\t{}\t{}\t{}\t{}",
                    o.system,
                    o.name,
                    o.cases,
                    o.failures,
                    if o.passed() { "PASS" } else { "FAIL" }
                )
            })
            .collect()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "property sweep: {} samples per property, seed {}",
            self.samples, self.seed
        )?;
        for o in &self.outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "  [{status}] {:<7} {} ({}/{})",
                o.system,
                o.name,
                o.cases - o.failures,
                o.cases
            )?;
            if let Some((i, why)) = &o.first_failure {
                writeln!(f, "         first failure at case {i}: {why}")?;
            }
        }
        let passed = self.outcomes.iter().filter(|o| o.passed()).count();
        write!(f, "{passed}/{} properties hold", self.outcomes.len())
    }
}

pub fn run_property(
    prop: &Property,
    stream: u64,
    samples: u64,
    seed: u64,
    exec: Execution,
) -> PropertyOutcome {
    let results = exec.map_range(samples, |i| prop.run_case(seed, stream, i));
    let failures = results.iter().filter(|r| r.is_err()).count() as u64;
    let first_failure = results
        .into_iter()
        .enumerate()
        .find_map(|(i, r)| r.err().map(|e| (i as u64, e)));
    PropertyOutcome {
        system: prop.system,
        name: prop.name,
        cases: samples,
        failures,
        first_failure,
    }
}

/// Runs every property on `samples` cases.
pub fn run_verification(samples: u64, seed: u64, exec: Execution) -> VerifyReport {
    let outcomes = properties()
        .iter()
        .enumerate()
        .map(|(stream, prop)| run_property(prop, stream as u64, samples, seed, exec))
        .collect();
    VerifyReport {
        samples,
        seed,
        outcomes,
    }
}
