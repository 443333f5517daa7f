//! Invariant suites behind `cqsym verify`.  Each suite either prints an
//! `ok` line or the first counterexample (exit code 4).

use num_bigint::Sign;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cqsym_core::cost::CostCounters;
use cqsym_core::division::{divmod_even, divmod_newton, divmod_round, remainder_jacobi, shrink_holds};
use cqsym_core::residue::{
    euler_cubic_char, euler_quartic_char, is_prime_u64, primary_primes_eis, primary_primes_gauss,
    residue_test, Power, Strategy,
};
use cqsym_core::ring::{unit_normalize, EisensteinInt, GaussianInt, Int, RingElement};
use cqsym_core::symbols::{
    cubic_jacobi, cubic_jacobi_even, quartic_jacobi, quartic_jacobi_even, Backend, EvenOutcome,
    DEFAULT_STEP_CAP,
};

use crate::{Failure, SuiteArg};

fn scratch() -> CostCounters {
    CostCounters::new()
}

fn random_int(rng: &mut ChaCha8Rng, max_bytes: usize) -> Int {
    let len = rng.gen_range(1..=max_bytes);
    let bytes: Vec<u8> = (0..len).map(|_| rng.gen()).collect();
    let sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
    Int::from_bytes_le(sign, &bytes)
}

fn random_eis(rng: &mut ChaCha8Rng, max_bytes: usize) -> EisensteinInt {
    EisensteinInt::new(random_int(rng, max_bytes), random_int(rng, max_bytes))
}

fn random_gauss(rng: &mut ChaCha8Rng, max_bytes: usize) -> GaussianInt {
    GaussianInt::new(random_int(rng, max_bytes), random_int(rng, max_bytes))
}

fn random_primary_eis(rng: &mut ChaCha8Rng, max_bytes: usize) -> EisensteinInt {
    loop {
        let g = random_eis(rng, max_bytes);
        if g.is_zero() || g.ramified_divides() || g.is_unit() {
            continue;
        }
        return unit_normalize(&g).unwrap().1;
    }
}

fn random_primary_gauss(rng: &mut ChaCha8Rng, max_bytes: usize) -> GaussianInt {
    loop {
        let g = random_gauss(rng, max_bytes);
        if g.is_zero() || g.ramified_divides() || g.is_unit() {
            continue;
        }
        return unit_normalize(&g).unwrap().1;
    }
}

pub fn cmd_verify(suite: SuiteArg, max_norm: u64, seed: u64) -> Result<(), Failure> {
    if max_norm > cqsym_core::residue::ORACLE_NORM_BOUND {
        return Err(Failure::domain(format!(
            "--max-norm is capped at {}",
            cqsym_core::residue::ORACLE_NORM_BOUND
        )));
    }
    match suite {
        SuiteArg::Cubic => verify_cubic(max_norm),
        SuiteArg::Quartic => verify_quartic(max_norm),
        SuiteArg::Even => verify_even(max_norm, seed),
        SuiteArg::Residue => verify_residue(max_norm),
        SuiteArg::Division => verify_division(max_norm, seed),
    }
}

/// Euclidean algorithm vs Euler character over complete nonzero residue
/// systems mod every primary prime of norm <= max_norm.
fn verify_cubic(max_norm: u64) -> Result<(), Failure> {
    let mut cases = 0u64;
    for pi in primary_primes_eis(max_norm) {
        let n = pi.norm_uncosted().to_u64().unwrap();
        let residues: Vec<EisensteinInt> = if pi.b().is_zero() {
            let p = pi.a().to_u64().unwrap();
            (0..p)
                .flat_map(|a| (0..p).map(move |b| EisensteinInt::from_i64(a as i64, b as i64)))
                .filter(|x| !x.is_zero())
                .collect()
        } else {
            (1..n)
                .map(|a| EisensteinInt::from_i64(a as i64, 0))
                .collect()
        };
        for alpha in residues {
            let (alg, _) = cubic_jacobi(&alpha, &pi, Backend::Exact)
                .map_err(|e| Failure::domain(e.to_string()))?;
            let chr = euler_cubic_char(&alpha, &pi).map_err(|e| Failure::domain(e.to_string()))?;
            if alg != chr {
                return Err(Failure::verification(format!(
                    "counterexample: ({alpha} / {pi}) algorithm {alg} != character {chr}"
                )));
            }
            cases += 1;
        }
    }
    println!("ok cubic: {cases} residue systems agree up to norm {max_norm}");
    Ok(())
}

fn verify_quartic(max_norm: u64) -> Result<(), Failure> {
    let mut cases = 0u64;
    for pi in primary_primes_gauss(max_norm) {
        let n = pi.norm_uncosted().to_u64().unwrap();
        let residues: Vec<GaussianInt> = if pi.b().is_zero() {
            let p = pi.a().to_u64().map_or_else(
                || (-pi.a()).to_u64().unwrap(),
                |v| v,
            );
            (0..p)
                .flat_map(|a| (0..p).map(move |b| GaussianInt::from_i64(a as i64, b as i64)))
                .filter(|x| !x.is_zero())
                .collect()
        } else {
            (1..n).map(|a| GaussianInt::from_i64(a as i64, 0)).collect()
        };
        for alpha in residues {
            let (alg, _) = quartic_jacobi(&alpha, &pi, Backend::Exact)
                .map_err(|e| Failure::domain(e.to_string()))?;
            let chr = euler_quartic_char(&alpha, &pi).map_err(|e| Failure::domain(e.to_string()))?;
            if alg != chr {
                return Err(Failure::verification(format!(
                    "counterexample: ({alpha} / {pi}) algorithm {alg} != character {chr}"
                )));
            }
            cases += 1;
        }
    }
    println!("ok quartic: {cases} residue systems agree up to norm {max_norm}");
    Ok(())
}

/// Even-quotient variants equal the plain algorithms on random
/// admissible coprime pairs of norm <= max_norm.
fn verify_even(max_norm: u64, seed: u64) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limit = Int::from(max_norm);
    let bytes = ((64 - max_norm.leading_zeros()) as usize / 16 + 1).max(1);
    let mut pairs = 0u64;
    while pairs < 2000 {
        let alpha = random_eis(&mut rng, bytes);
        let beta = random_primary_eis(&mut rng, bytes);
        if alpha.is_zero()
            || alpha.ramified_divides()
            || beta.is_pm_one()
            || alpha.norm_uncosted() > limit
            || beta.norm_uncosted() > limit
        {
            continue;
        }
        let (plain, trace) =
            cubic_jacobi(&alpha, &beta, Backend::Exact).map_err(|e| Failure::domain(e.to_string()))?;
        if !trace.gcd.is_unit() {
            continue;
        }
        match cubic_jacobi_even(&alpha, &beta, DEFAULT_STEP_CAP)
            .map_err(|e| Failure::domain(e.to_string()))?
        {
            EvenOutcome::Value(even, _) => {
                if even != plain {
                    return Err(Failure::verification(format!(
                        "counterexample: ({alpha} / {beta}) even {even} != plain {plain}"
                    )));
                }
            }
            EvenOutcome::CapExceeded(_) => {
                return Err(Failure::verification(format!(
                    "cap exceeded on ({alpha} / {beta})"
                )))
            }
        }
        pairs += 1;
    }
    let mut qpairs = 0u64;
    while qpairs < 2000 {
        let alpha = random_gauss(&mut rng, bytes);
        let beta = random_primary_gauss(&mut rng, bytes);
        if alpha.is_zero()
            || alpha.ramified_divides()
            || beta.is_one()
            || alpha.norm_uncosted() > limit
            || beta.norm_uncosted() > limit
        {
            continue;
        }
        let (plain, trace) = quartic_jacobi(&alpha, &beta, Backend::Exact)
            .map_err(|e| Failure::domain(e.to_string()))?;
        if !trace.gcd.is_unit() {
            continue;
        }
        match quartic_jacobi_even(&alpha, &beta, DEFAULT_STEP_CAP)
            .map_err(|e| Failure::domain(e.to_string()))?
        {
            EvenOutcome::Value(even, _) => {
                if even != plain {
                    return Err(Failure::verification(format!(
                        "counterexample: ({alpha} / {beta}) even {even} != plain {plain}"
                    )));
                }
            }
            EvenOutcome::CapExceeded(_) => {
                return Err(Failure::verification(format!(
                    "cap exceeded on ({alpha} / {beta})"
                )))
            }
        }
        qpairs += 1;
    }
    println!("ok even: {pairs} cubic and {qpairs} quartic pairs agree");
    Ok(())
}

/// Euler and reciprocity residue tests agree for all eligible p <= max
/// and all a in [1, p-1].
fn verify_residue(max_p: u64) -> Result<(), Failure> {
    let mut cases = 0u64;
    for p in 2..=max_p {
        if !is_prime_u64(p) {
            continue;
        }
        if p % 3 == 1 {
            for a in 1..p {
                let e = residue_test(a, p, Power::Cubic, Strategy::Euler)
                    .map_err(|err| Failure::domain(err.to_string()))?;
                let r = residue_test(a, p, Power::Cubic, Strategy::Reciprocity)
                    .map_err(|err| Failure::domain(err.to_string()))?;
                if e != r {
                    return Err(Failure::verification(format!(
                        "counterexample: cubic residue test for a={a}, p={p}: euler {e}, reciprocity {r}"
                    )));
                }
                cases += 1;
            }
        }
        if p % 4 == 1 {
            for a in 1..p {
                let e = residue_test(a, p, Power::Quartic, Strategy::Euler)
                    .map_err(|err| Failure::domain(err.to_string()))?;
                let r = residue_test(a, p, Power::Quartic, Strategy::Reciprocity)
                    .map_err(|err| Failure::domain(err.to_string()))?;
                if e != r {
                    return Err(Failure::verification(format!(
                        "counterexample: quartic residue test for a={a}, p={p}: euler {e}, reciprocity {r}"
                    )));
                }
                cases += 1;
            }
        }
    }
    println!("ok residue: {cases} strategy agreements up to p = {max_p}");
    Ok(())
}

/// Division contracts (identity, shrink, congruence, divisibility) on
/// random pairs with norms around max_norm.
fn verify_division(max_norm: u64, seed: u64) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bytes = ((64 - max_norm.leading_zeros()) as usize / 16 + 1).max(1);
    let fail = |msg: String| -> Result<(), Failure> { Err(Failure::verification(msg)) };
    for _ in 0..20_000 {
        let alpha = random_eis(&mut rng, bytes);
        let beta = loop {
            let b = random_eis(&mut rng, bytes);
            if !b.is_zero() {
                break b;
            }
        };
        let out = divmod_round(&alpha, &beta, &mut scratch()).unwrap();
        if out.q.mul(&beta, &mut scratch()).add(&out.r, &mut scratch()) != alpha {
            return fail(format!("identity broke at ({alpha}, {beta})"));
        }
        if !shrink_holds(&out.shrink, 3, 4) {
            return fail(format!("exact shrink broke at ({alpha}, {beta})"));
        }
        let rj = remainder_jacobi(&alpha, &beta, &mut scratch()).unwrap();
        if rj != out.r {
            return fail(format!("remainder formula disagrees at ({alpha}, {beta})"));
        }
        let nout = divmod_newton(&alpha, &beta, &mut scratch()).unwrap();
        if nout.q.mul(&beta, &mut scratch()).add(&nout.r, &mut scratch()) != alpha {
            return fail(format!("newton identity broke at ({alpha}, {beta})"));
        }
        if !shrink_holds(&nout.shrink, 195, 256) {
            return fail(format!("newton shrink broke at ({alpha}, {beta})"));
        }
        if !beta.is_unit() {
            let eout = divmod_even(&alpha, &beta, &mut scratch()).unwrap();
            let ok = eout.r.is_zero()
                || (eout.q.ramified_divides() && eout.shrink < BigRational::one());
            if !ok {
                return fail(format!("even contract broke at ({alpha}, {beta})"));
            }
        }

        let ga = random_gauss(&mut rng, bytes);
        let gb = loop {
            let b = random_gauss(&mut rng, bytes);
            if !b.is_zero() {
                break b;
            }
        };
        let out = divmod_round(&ga, &gb, &mut scratch()).unwrap();
        if !shrink_holds(&out.shrink, 1, 2) {
            return fail(format!("gaussian shrink broke at ({ga}, {gb})"));
        }
        let nout = divmod_newton(&ga, &gb, &mut scratch()).unwrap();
        if !shrink_holds(&nout.shrink, 131, 256) {
            return fail(format!("gaussian newton shrink broke at ({ga}, {gb})"));
        }
    }
    println!("ok division: 20000 random pairs per ring satisfy all contracts");
    Ok(())
}
