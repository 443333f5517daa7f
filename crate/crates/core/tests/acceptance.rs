//! Acceptance suite: one test per exit criterion, each printing a
//! PASS line with the measured quantities (run with
//! `cargo test --test acceptance -- --nocapture` to see them).

use cqsym_core::adversary::{
    even_cubic_bad, even_quartic_bad, growth_rate, growth_step, step4_stress, xi_cubic_seq,
    xi_quartic_seq,
};
use cqsym_core::cost::{fit_exponent, CostCounters};
use cqsym_core::division::{
    divmod_even, divmod_newton, divmod_round, remainder_jacobi, shrink_holds,
};
use cqsym_core::natlog::decimal_string;
use cqsym_core::residue::{
    euler_cubic_char, euler_quartic_char, norm_equation_eis, norm_equation_gauss, partition_table,
    primary_primes_eis, primary_primes_gauss, sqrt_neg1_from_partition, sqrt_neg3_from_partition,
    PartitionKind,
};
use cqsym_core::ring::{
    unit_normalize, EisensteinInt, GaussianInt, Int, RingElement,
};
use cqsym_core::symbols::{
    cubic_jacobi, cubic_jacobi_even, quartic_jacobi, quartic_jacobi_even, Backend, CubicSymbol,
    EvenOutcome, QuarticSymbol, DEFAULT_STEP_CAP,
};

use num_bigint::Sign;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn eis(a: i64, b: i64) -> EisensteinInt {
    EisensteinInt::from_i64(a, b)
}
fn gau(a: i64, b: i64) -> GaussianInt {
    GaussianInt::from_i64(a, b)
}
fn scratch() -> CostCounters {
    CostCounters::new()
}

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(Int::from(num), Int::from(den))
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

/// 1. The first eleven elements of the cubic bad sequence, with norms.
#[test]
fn xi_table_reproduction() {
    let expect: [((i64, i64), u64); 11] = [
        ((-1, 0), 1),
        ((2, 0), 4),
        ((-1, 6), 43),
        ((-16, -21), 361),
        ((62, 21), 2983),
        ((-79, 102), 24703),
        ((-244, -522), 204652),
        ((1487, 936), 1695433),
        ((-3052, 1131), 14045677),
        ((-1906, -11613), 116360227),
        ((31787, 30252), 963976549),
    ];
    let seq = xi_cubic_seq(10);
    for (n, (coords, norm)) in expect.iter().enumerate() {
        assert_eq!(seq[n], eis(coords.0, coords.1), "xi_{n}");
        assert_eq!(seq[n].norm_uncosted(), Int::from(*norm), "N(xi_{n})");
    }
    println!("acceptance xi-table-reproduction: PASS (11 elements, exact)");
}

/// 2. Growth constant 2.1144 within 0.005, including one-step estimates.
#[test]
fn growth_constant() {
    let target = rational(21144, 10000);
    let tol = rational(5, 1000);
    let r = growth_rate(200);
    let err = (&r - &target).abs();
    assert!(err <= tol, "growth_rate(200) = {}", decimal_string(&r, 6));
    for n in 20..=200 {
        let d = growth_step(n);
        let err = (&d - &target).abs();
        assert!(
            err <= tol,
            "step estimate at n = {n} was {}",
            decimal_string(&d, 6)
        );
    }
    println!(
        "acceptance growth-constant: PASS (ln N(xi_200)/200 = {}, steps n=20..200 within 0.005)",
        decimal_string(&r, 6)
    );
}

/// 3. Quotient lock-in: 3w for the cubic family (n = 3..500), 2+2i for
/// the quartic family from n0 = 2 on.
#[test]
fn quotient_lock_in() {
    let seq = xi_cubic_seq(500);
    for n in 3..=500usize {
        let out = divmod_round(&seq[n], &seq[n - 1], &mut scratch()).unwrap();
        assert_eq!(out.q, eis(0, 3), "cubic quotient at n = {n}");
        assert_eq!(out.r, seq[n - 2], "cubic remainder at n = {n}");
    }
    let gseq = xi_quartic_seq(500);
    let n0 = 2usize; // empirically stable from n = 2 onward
    for n in n0..=500usize {
        let out = divmod_round(&gseq[n], &gseq[n - 1], &mut scratch()).unwrap();
        assert_eq!(out.q, gau(2, 2), "quartic quotient at n = {n}");
        assert_eq!(out.r, gseq[n - 2], "quartic remainder at n = {n}");
    }
    println!("acceptance quotient-lock-in: PASS (3w for n=3..500; 2+2i for n={n0}..500)");
}

/// 4. Oracle equivalence: the Euclidean algorithms match the Euler
/// characters on complete nonzero residue systems for all primary
/// primes of norm <= 2000.
#[test]
fn oracle_equivalence() {
    let mut cubic_cases = 0u64;
    for pi in primary_primes_eis(2000) {
        let n = pi.norm_uncosted().to_u64().unwrap();
        let p_residues: Vec<EisensteinInt> = if pi.b().is_zero() {
            // inert prime p: residues a + b w, 0 <= a, b < p
            let p = pi.a().to_u64().unwrap();
            (0..p)
                .flat_map(|a| (0..p).map(move |b| eis(a as i64, b as i64)))
                .filter(|x| !x.is_zero())
                .collect()
        } else {
            // split prime: the rational integers 1..N-1 form the nonzero residues
            (1..n).map(|a| eis(a as i64, 0)).collect()
        };
        // spot-check that the negated generator gives the same ideal symbol
        let sample = eis(2, 0);
        let (s_pos, _) = cubic_jacobi(&sample, &pi, Backend::Exact).unwrap();
        let (s_neg, _) = cubic_jacobi(&sample, &pi.neg(), Backend::Exact).unwrap();
        assert_eq!(s_pos, s_neg, "generator sign must not matter at {pi}");
        for alpha in p_residues {
            let (alg, _) = cubic_jacobi(&alpha, &pi, Backend::Exact).unwrap();
            let chr = euler_cubic_char(&alpha, &pi).unwrap();
            assert_eq!(alg, chr, "cubic mismatch at alpha = {alpha}, pi = {pi}");
            cubic_cases += 1;
        }
    }
    let mut quartic_cases = 0u64;
    for pi in primary_primes_gauss(2000) {
        let n = pi.norm_uncosted().to_u64().unwrap();
        let residues: Vec<GaussianInt> = if pi.b().is_zero() {
            let p = pi.a().abs().to_u64().unwrap();
            (0..p)
                .flat_map(|a| (0..p).map(move |b| gau(a as i64, b as i64)))
                .filter(|x| !x.is_zero())
                .collect()
        } else {
            (1..n).map(|a| gau(a as i64, 0)).collect()
        };
        for alpha in residues {
            let (alg, _) = quartic_jacobi(&alpha, &pi, Backend::Exact).unwrap();
            let chr = euler_quartic_char(&alpha, &pi).unwrap();
            assert_eq!(alg, chr, "quartic mismatch at alpha = {alpha}, pi = {pi}");
            quartic_cases += 1;
        }
    }
    println!(
        "acceptance oracle-equivalence: PASS ({cubic_cases} cubic and {quartic_cases} quartic residues)"
    );
}

/// 5. Reciprocity and its supplements on random primary arguments.
#[test]
fn reciprocity_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    // norms <= 2^64: coordinates up to 4 bytes
    let mut pairs = 0;
    while pairs < 10_000 {
        let alpha = random_primary_eis(&mut rng, 4);
        let beta = random_primary_eis(&mut rng, 4);
        let (s1, t1) = cubic_jacobi(&alpha, &beta, Backend::Exact).unwrap();
        if !t1.gcd.is_unit() {
            continue; // reciprocity wants coprime pairs
        }
        let (s2, _) = cubic_jacobi(&beta, &alpha, Backend::Exact).unwrap();
        assert_eq!(s1, s2, "cubic symmetry broke at ({alpha}, {beta})");
        pairs += 1;
    }
    let mut qpairs = 0;
    while qpairs < 10_000 {
        let alpha = random_primary_gauss(&mut rng, 4);
        let beta = random_primary_gauss(&mut rng, 4);
        let (s1, t1) = quartic_jacobi(&alpha, &beta, Backend::Exact).unwrap();
        if !t1.gcd.is_unit() {
            continue;
        }
        let (s2, _) = quartic_jacobi(&beta, &alpha, Backend::Exact).unwrap();
        let am = i64::try_from(&(alpha.a() % Int::from(8) + Int::from(8)) % Int::from(8)).unwrap();
        let cm = i64::try_from(&(beta.a() % Int::from(8) + Int::from(8)) % Int::from(8)).unwrap();
        let sign = (((am - 1) * (cm - 1)) / 4).rem_euclid(2) as u8;
        assert_eq!(
            s1,
            QuarticSymbol::IPower(2 * sign) * s2,
            "quartic sign rule broke at ({alpha}, {beta})"
        );
        qpairs += 1;
    }
    // supplements on 10^3 random primary lower arguments
    for _ in 0..1000 {
        let beta = random_primary_eis(&mut rng, 4);
        if beta.is_pm_one() {
            continue;
        }
        let c9 = i64::try_from(&(beta.a() % Int::from(9) + Int::from(9)) % Int::from(9)).unwrap();
        let d9 = i64::try_from(&(beta.b() % Int::from(9) + Int::from(9)) % Int::from(9)).unwrap();
        // (1-w / beta) = w^(-(c^2-1)/3)
        let (s, _) = cubic_jacobi(&eis(1, -1), &beta, Backend::Exact).unwrap();
        let want = (-((c9 * c9 - 1) / 3 % 3)).rem_euclid(3) as u8;
        assert_eq!(s, CubicSymbol::RhoPower(want), "ramified supplement at {beta}");
        // (w / beta) = w^((c^2-cd-1)/3)
        let (s, _) = cubic_jacobi(&eis(0, 1), &beta, Backend::Exact).unwrap();
        let want = (((c9 * c9 - c9 * d9 - 1).rem_euclid(9)) / 3).rem_euclid(3) as u8;
        assert_eq!(s, CubicSymbol::RhoPower(want), "unit supplement at {beta}");
        // (-1 / beta) = 1
        let (s, _) = cubic_jacobi(&eis(-1, 0), &beta, Backend::Exact).unwrap();
        assert_eq!(s, CubicSymbol::RhoPower(0), "sign supplement at {beta}");
    }
    for _ in 0..1000 {
        let beta = random_primary_gauss(&mut rng, 4);
        if beta.is_one() {
            continue;
        }
        let c16 = i64::try_from(&(beta.a() % Int::from(16) + Int::from(16)) % Int::from(16)).unwrap();
        let d16 = i64::try_from(&(beta.b() % Int::from(16) + Int::from(16)) % Int::from(16)).unwrap();
        // (1+i / beta) = i^((c-d-d^2-1)/4)
        let (s, _) = quartic_jacobi(&gau(1, 1), &beta, Backend::Exact).unwrap();
        let want = ((c16 - d16 - d16 * d16 - 1).rem_euclid(16) / 4).rem_euclid(4) as u8;
        assert_eq!(s, QuarticSymbol::IPower(want), "ramified supplement at {beta}");
        // (i / beta) = i^(-(c-1)/2)
        let (s, _) = quartic_jacobi(&gau(0, 1), &beta, Backend::Exact).unwrap();
        let want = (-((c16 - 1).rem_euclid(8) / 2)).rem_euclid(4) as u8;
        assert_eq!(s, QuarticSymbol::IPower(want), "unit supplement at {beta}");
        // (-1 / beta) = (-1)^((c-1)/2)
        let (s, _) = quartic_jacobi(&gau(-1, 0), &beta, Backend::Exact).unwrap();
        let want = ((c16 - 1).rem_euclid(4)) as u8;
        assert_eq!(s, QuarticSymbol::IPower(want), "sign supplement at {beta}");
    }
    println!("acceptance reciprocity-identities: PASS (10^4 pairs per ring, 10^3 supplements)");
}

fn xi_cost(n: usize, backend: Backend) -> (CostCounters, u64) {
    let seq = xi_cubic_seq(n as u32);
    let alpha = &seq[n];
    let beta = &seq[n - 1];
    let (_, trace) = cubic_jacobi(alpha, beta, backend).unwrap();
    let input_bits = alpha.norm_uncosted().bits();
    (trace.counters, input_bits)
}

/// 6. The cubic/quadratic complexity separation on the xi family, plus
/// the quadratic remainder-volume floor.
#[test]
fn complexity_separation() {
    let sizes = [64usize, 128, 256, 512];
    let mut exact_pts = Vec::new();
    let mut newton_pts = Vec::new();
    let mut volume_pts = Vec::new();
    for &n in &sizes {
        let (c_exact, _) = xi_cost(n, Backend::Exact);
        let (c_newton, _) = xi_cost(n, Backend::Newton);
        exact_pts.push((n as u64, c_exact.mul_cost));
        newton_pts.push((n as u64, c_newton.mul_cost));
        volume_pts.push((n as u64, c_exact.remainder_volume));
    }
    let exact_slope = fit_exponent(&exact_pts).unwrap();
    let newton_slope = fit_exponent(&newton_pts).unwrap();
    let volume_slope = fit_exponent(&volume_pts).unwrap();
    assert!(
        exact_slope >= rational(27, 10) && exact_slope <= rational(33, 10),
        "exact-backend exponent {} outside [2.7, 3.3]",
        decimal_string(&exact_slope, 4)
    );
    assert!(
        newton_slope >= rational(17, 10) && newton_slope <= rational(23, 10),
        "newton-backend exponent {} outside [1.7, 2.3]",
        decimal_string(&newton_slope, 4)
    );
    assert!(
        volume_slope >= rational(18, 10) && volume_slope <= rational(22, 10),
        "remainder-volume exponent {} outside [1.8, 2.2]",
        decimal_string(&volume_slope, 4)
    );
    println!(
        "acceptance complexity-separation: PASS (exact {}, newton {}, volume {})",
        decimal_string(&exact_slope, 3),
        decimal_string(&newton_slope, 3),
        decimal_string(&volume_slope, 3)
    );
}

/// 7. Even-quotient cubic blowup: exactly 4k+3 division steps on the
/// bad family, quotients locked to the four-cycle.
///
/// The recorded stream realizes the cycle as the rotation
/// (2+w, -2-w, -2-w, -1-2w) of the reported listing
/// (-2-w, -1-2w, 2+w, -2-w) starting at step 3; the final step is the
/// closing exact division by the unit gcd.
#[test]
fn even_cubic_blowup() {
    let cycle = [eis(2, 1), eis(-2, -1), eis(-2, -1), eis(-1, -2)];
    // one-time check: our phase is a rotation of the reported cycle
    let reported = [eis(-2, -1), eis(-1, -2), eis(2, 1), eis(-2, -1)];
    let rotated: Vec<_> = (0..4).map(|j| reported[(j + 2) % 4].clone()).collect();
    assert_eq!(rotated, cycle.to_vec(), "cycle presentations are rotations");

    for k in 2..=500u64 {
        let (alpha, beta) = even_cubic_bad(k);
        let trace = match cubic_jacobi_even(&alpha, &beta, DEFAULT_STEP_CAP).unwrap() {
            EvenOutcome::Value(_, trace) => trace,
            EvenOutcome::CapExceeded(t) => {
                panic!("cap exceeded at k = {k} after {} steps", t.steps.len())
            }
        };
        let want = (4 * k + 3) as usize;
        if trace.steps.len() != want {
            for (j, s) in trace.steps.iter().enumerate() {
                eprintln!("step {}: q = {}, m = {}, n = {}", j + 1, s.q, s.m, s.n);
            }
            panic!("k = {k}: {} steps, expected {want}", trace.steps.len());
        }
        for (j, s) in trace.steps.iter().enumerate().take(want - 1).skip(2) {
            let expect = &cycle[(j - 2) % 4];
            if &s.q != expect {
                for (jj, ss) in trace.steps.iter().enumerate() {
                    eprintln!("step {}: q = {}", jj + 1, ss.q);
                }
                panic!("k = {k}: step {} quotient {} != {expect}", j + 1, s.q);
            }
            assert_eq!(s.m, 0, "ramified removals must be absent");
        }
    }
    println!("acceptance even-cubic-blowup: PASS (4k+3 steps and four-cycle for k = 2..500)");
}

/// 8. Even-quotient quartic blowup: at least m - 2 division steps on
/// (4m+1, 4m-3).
#[test]
fn even_quartic_blowup() {
    for m in [10u64, 100, 1000, 10_000] {
        let (alpha, beta) = even_quartic_bad(m);
        let steps = match quartic_jacobi_even(&alpha, &beta, DEFAULT_STEP_CAP).unwrap() {
            EvenOutcome::Value(_, trace) => trace.steps.len(),
            EvenOutcome::CapExceeded(t) => t.steps.len(),
        };
        assert!(
            steps as u64 >= m - 2,
            "m = {m}: only {steps} steps, expected >= {}",
            m - 2
        );
    }
    println!("acceptance even-quartic-blowup: PASS (>= m-2 steps at m = 10, 100, 1000, 10000)");
}

/// 9. Ramified-removal stress: the first step strips exactly m factors.
#[test]
fn step4_stress_counts() {
    for m in 1..=64u32 {
        let (alpha, beta) = step4_stress(m);
        let (_, trace) = cubic_jacobi(&alpha, &beta, Backend::Exact).unwrap();
        assert_eq!(trace.steps[0].q, eis(1, 0), "first quotient at m = {m}");
        assert_eq!(trace.steps[0].m, u64::from(m), "removals at m = {m}");
        assert_eq!(
            trace.counters.ramified_removals,
            u64::from(m),
            "total removals at m = {m}"
        );
    }
    println!("acceptance step4-stress: PASS (m removals for m = 1..64)");
}

/// 10. Norm equations and derived square roots for every eligible prime
/// up to 10^5; the tabulation reaches Cunningham's limit 125683.
#[test]
fn norm_equations() {
    let rows = partition_table(125683, PartitionKind::S2Plus3T2).unwrap();
    assert_eq!(rows.last().unwrap().p, 125683, "table reaches 125683");
    for row in &rows {
        if row.p > 100_000 && row.p != 125683 {
            continue;
        }
        let (sol, pi) = norm_equation_eis(row.p).unwrap();
        let x = Int::from(sol.x);
        let y = Int::from(sol.y);
        assert_eq!(&x * &x - &x * &y + &y * &y, Int::from(row.p));
        assert_eq!(pi.norm_uncosted(), Int::from(row.p));
        let z = sqrt_neg3_from_partition(sol.x, sol.y, row.p).unwrap();
        assert_eq!(
            (z as u128 * z as u128) % row.p as u128,
            (row.p - 3) as u128,
            "z^2 != -3 mod {}",
            row.p
        );
    }
    let grows = partition_table(100_000, PartitionKind::X2PlusY2).unwrap();
    for row in &grows {
        let (sol, pi) = norm_equation_gauss(row.p).unwrap();
        assert_eq!(
            sol.x as u128 * sol.x as u128 + sol.y as u128 * sol.y as u128,
            row.p as u128
        );
        assert_eq!(pi.norm_uncosted(), Int::from(row.p));
        let z = sqrt_neg1_from_partition(sol.x, sol.y, row.p).unwrap();
        assert_eq!(
            (z as u128 * z as u128) % row.p as u128,
            (row.p - 1) as u128,
            "z^2 != -1 mod {}",
            row.p
        );
    }
    println!(
        "acceptance norm-equations: PASS ({} cubic rows to 125683, {} quartic rows to 10^5)",
        rows.len(),
        grows.len()
    );
}

/// 11. Division contracts on 10^5 random pairs per ring and mode.
#[test]
fn division_contracts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut newton_count = 0u64;
    for _ in 0..100_000 {
        // Eisenstein: exact shrink 4 N(r) <= 3 N(beta); Jacobi remainder
        let alpha = random_eis(&mut rng, 8);
        let beta = loop {
            let b = random_eis(&mut rng, 8);
            if !b.is_zero() {
                break b;
            }
        };
        let out = divmod_round(&alpha, &beta, &mut scratch()).unwrap();
        let back = out.q.mul(&beta, &mut scratch()).add(&out.r, &mut scratch());
        assert_eq!(back, alpha);
        assert!(shrink_holds(&out.shrink, 3, 4), "eis shrink {}", out.shrink);
        let rj = remainder_jacobi(&alpha, &beta, &mut scratch()).unwrap();
        assert_eq!(rj, out.r);

        // Gaussian: 2 N(r) <= N(beta)
        let ga = random_gauss(&mut rng, 8);
        let gb = loop {
            let b = random_gauss(&mut rng, 8);
            if !b.is_zero() {
                break b;
            }
        };
        let gout = divmod_round(&ga, &gb, &mut scratch()).unwrap();
        let gback = gout.q.mul(&gb, &mut scratch()).add(&gout.r, &mut scratch());
        assert_eq!(gback, ga);
        assert!(shrink_holds(&gout.shrink, 1, 2), "gauss shrink {}", gout.shrink);
        let grj = remainder_jacobi(&ga, &gb, &mut scratch()).unwrap();
        assert_eq!(grj, gout.r);

        // even mode: divisible quotient (or exact division) and strict shrink
        if !beta.is_unit() {
            let eout = divmod_even(&alpha, &beta, &mut scratch()).unwrap();
            let eback = eout.q.mul(&beta, &mut scratch()).add(&eout.r, &mut scratch());
            assert_eq!(eback, alpha);
            if eout.r.is_zero() {
                assert!(eout.shrink.is_zero());
            } else {
                assert!(eout.q.ramified_divides());
                assert!(eout.shrink < BigRational::one());
            }
        }
        if !gb.is_unit() {
            let eout = divmod_even(&ga, &gb, &mut scratch()).unwrap();
            let eback = eout.q.mul(&gb, &mut scratch()).add(&eout.r, &mut scratch());
            assert_eq!(eback, ga);
            if eout.r.is_zero() {
                assert!(eout.shrink.is_zero());
            } else {
                assert!(eout.q.ramified_divides());
                assert!(eout.shrink < BigRational::one());
            }
        }
    }
    // Newton mode at 256-bit coordinates: identity plus slackened bound
    // (3/4 + 3*2^-8 = 195/256, 1/2 + 3*2^-8 = 131/256)
    for _ in 0..100_000 {
        let alpha = random_eis(&mut rng, 32);
        let beta = loop {
            let b = random_eis(&mut rng, 32);
            if !b.is_zero() {
                break b;
            }
        };
        let out = divmod_newton(&alpha, &beta, &mut scratch()).unwrap();
        let back = out.q.mul(&beta, &mut scratch()).add(&out.r, &mut scratch());
        assert_eq!(back, alpha);
        assert!(shrink_holds(&out.shrink, 195, 256), "newton shrink {}", out.shrink);

        let ga = random_gauss(&mut rng, 32);
        let gb = loop {
            let b = random_gauss(&mut rng, 32);
            if !b.is_zero() {
                break b;
            }
        };
        let gout = divmod_newton(&ga, &gb, &mut scratch()).unwrap();
        let gback = gout.q.mul(&gb, &mut scratch()).add(&gout.r, &mut scratch());
        assert_eq!(gback, ga);
        assert!(shrink_holds(&gout.shrink, 131, 256), "newton shrink {}", gout.shrink);
        newton_count += 2;
    }
    println!(
        "acceptance division-contracts: PASS (10^5 pairs per ring per mode, {newton_count} newton divisions)"
    );
}

/// 12. Even-quotient values equal the plain algorithms on random
/// admissible coprime pairs with norms <= 10^6.
#[test]
fn cross_algorithm_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let limit = Int::from(1_000_000);
    let mut pairs = 0u64;
    while pairs < 10_000 {
        let alpha = random_eis(&mut rng, 2);
        let beta = random_primary_eis(&mut rng, 2);
        if alpha.is_zero()
            || alpha.ramified_divides()
            || beta.is_pm_one()
            || alpha.norm_uncosted() > limit
            || beta.norm_uncosted() > limit
        {
            continue;
        }
        let (plain, trace) = cubic_jacobi(&alpha, &beta, Backend::Exact).unwrap();
        if !trace.gcd.is_unit() {
            continue;
        }
        match cubic_jacobi_even(&alpha, &beta, DEFAULT_STEP_CAP).unwrap() {
            EvenOutcome::Value(even, _) => {
                assert_eq!(even, plain, "cubic mismatch at ({alpha}, {beta})")
            }
            EvenOutcome::CapExceeded(_) => panic!("cap exceeded at ({alpha}, {beta})"),
        }
        pairs += 1;
    }
    let mut qpairs = 0u64;
    while qpairs < 10_000 {
        let alpha = random_gauss(&mut rng, 2);
        let beta = random_primary_gauss(&mut rng, 2);
        if alpha.is_zero()
            || alpha.ramified_divides()
            || beta.is_one()
            || alpha.norm_uncosted() > limit
            || beta.norm_uncosted() > limit
        {
            continue;
        }
        let (plain, trace) = quartic_jacobi(&alpha, &beta, Backend::Exact).unwrap();
        if !trace.gcd.is_unit() {
            continue;
        }
        match quartic_jacobi_even(&alpha, &beta, DEFAULT_STEP_CAP).unwrap() {
            EvenOutcome::Value(even, _) => {
                assert_eq!(even, plain, "quartic mismatch at ({alpha}, {beta})")
            }
            EvenOutcome::CapExceeded(_) => panic!("cap exceeded at ({alpha}, {beta})"),
        }
        qpairs += 1;
    }
    println!("acceptance cross-algorithm-agreement: PASS (10^4 pairs per ring)");
}
