//! Instrumented benchmark runs over the adversarial input families.

use serde::Serialize;

use cqsym_core::adversary::{even_cubic_bad, even_quartic_bad, step4_stress, xi_cubic_seq, xi_quartic_seq};
use cqsym_core::cost::{fit_exponent, CostCounters};
use cqsym_core::natlog::decimal_string;
use cqsym_core::ring::RingElement;
use cqsym_core::symbols::{
    cubic_jacobi, cubic_jacobi_even, quartic_jacobi, quartic_jacobi_even, Backend, EvenOutcome,
    DEFAULT_STEP_CAP,
};

use crate::{Failure, FamilyArg, FormatArg};

#[derive(Serialize)]
pub struct BenchRecord {
    pub family: &'static str,
    pub n: u64,
    pub input_bits: u64,
    pub backend: &'static str,
    pub div_steps: u64,
    pub ramified_removals: u64,
    pub mul_cost: u128,
    pub remainder_volume: u128,
    pub capped: bool,
}

fn family_name(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::Xi3 => "xi3",
        FamilyArg::Xi4 => "xi4",
        FamilyArg::Step4 => "step4",
        FamilyArg::Even3 => "even3",
        FamilyArg::Even4 => "even4",
    }
}

fn backend_name(b: Backend) -> &'static str {
    match b {
        Backend::Exact => "exact",
        Backend::Newton => "newton",
    }
}

fn run_case(family: FamilyArg, n: u64, backend: Backend) -> Result<(CostCounters, u64, bool), Failure> {
    let err_big = || Failure::domain("size too large for this family");
    match family {
        FamilyArg::Xi3 => {
            if n < 1 {
                return Err(Failure::domain("xi3 needs n >= 1"));
            }
            let seq = xi_cubic_seq(u32::try_from(n).map_err(|_| err_big())?);
            let bits = seq[n as usize].norm_uncosted().bits();
            let (_, t) = cubic_jacobi(&seq[n as usize], &seq[n as usize - 1], backend)
                .map_err(|e| Failure::domain(e.to_string()))?;
            Ok((t.counters, bits, false))
        }
        FamilyArg::Xi4 => {
            if n < 1 {
                return Err(Failure::domain("xi4 needs n >= 1"));
            }
            let seq = xi_quartic_seq(u32::try_from(n).map_err(|_| err_big())?);
            let bits = seq[n as usize].norm_uncosted().bits();
            let (_, t) = quartic_jacobi(&seq[n as usize], &seq[n as usize - 1], backend)
                .map_err(|e| Failure::domain(e.to_string()))?;
            Ok((t.counters, bits, false))
        }
        FamilyArg::Step4 => {
            if n < 1 {
                return Err(Failure::domain("step4 needs m >= 1"));
            }
            let (alpha, beta) = step4_stress(u32::try_from(n).map_err(|_| err_big())?);
            let bits = alpha.norm_uncosted().bits();
            let (_, t) = cubic_jacobi(&alpha, &beta, backend)
                .map_err(|e| Failure::domain(e.to_string()))?;
            Ok((t.counters, bits, false))
        }
        FamilyArg::Even3 => {
            let (alpha, beta) = even_cubic_bad(n.max(1));
            let bits = alpha.norm_uncosted().bits();
            match cubic_jacobi_even(&alpha, &beta, DEFAULT_STEP_CAP)
                .map_err(|e| Failure::domain(e.to_string()))?
            {
                EvenOutcome::Value(_, t) => Ok((t.counters, bits, false)),
                EvenOutcome::CapExceeded(t) => Ok((t.counters, bits, true)),
            }
        }
        FamilyArg::Even4 => {
            if n < 2 {
                return Err(Failure::domain("even4 needs m >= 2"));
            }
            let (alpha, beta) = even_quartic_bad(n);
            let bits = alpha.norm_uncosted().bits();
            match quartic_jacobi_even(&alpha, &beta, DEFAULT_STEP_CAP)
                .map_err(|e| Failure::domain(e.to_string()))?
            {
                EvenOutcome::Value(_, t) => Ok((t.counters, bits, false)),
                EvenOutcome::CapExceeded(t) => Ok((t.counters, bits, true)),
            }
        }
    }
}

pub fn cmd_bench(
    family: FamilyArg,
    sizes: &[u64],
    backend: Backend,
    format: FormatArg,
    fit: bool,
) -> Result<(), Failure> {
    let even_family = matches!(family, FamilyArg::Even3 | FamilyArg::Even4);
    if even_family && backend == Backend::Newton {
        return Err(Failure::domain(
            "even-quotient families use exact rounding; --backend newton is not a valid combination",
        ));
    }
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();

    let mut records = Vec::new();
    for &n in &sizes {
        let (counters, input_bits, capped) = run_case(family, n, backend)?;
        records.push(BenchRecord {
            family: family_name(family),
            n,
            input_bits,
            backend: if even_family { "even" } else { backend_name(backend) },
            div_steps: counters.div_steps,
            ramified_removals: counters.ramified_removals,
            mul_cost: counters.mul_cost,
            remainder_volume: counters.remainder_volume,
            capped,
        });
    }

    match format {
        FormatArg::Csv => {
            println!("family,n,input_bits,backend,div_steps,ramified_removals,mul_cost,remainder_volume,capped");
            for r in &records {
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    r.family,
                    r.n,
                    r.input_bits,
                    r.backend,
                    r.div_steps,
                    r.ramified_removals,
                    r.mul_cost,
                    r.remainder_volume,
                    r.capped
                );
            }
        }
        FormatArg::Json => {
            let body = serde_json::to_string(&records)
                .map_err(|e| Failure::domain(format!("serialization failed: {e}")))?;
            println!("{body}");
        }
    }

    if fit {
        let mul_pts: Vec<(u64, u128)> = records.iter().map(|r| (r.n, r.mul_cost)).collect();
        let vol_pts: Vec<(u64, u128)> = records
            .iter()
            .map(|r| (r.n, r.remainder_volume))
            .collect();
        let slope = fit_exponent(&mul_pts).map_err(|e| Failure::domain(e.to_string()))?;
        println!("fit mul_cost {}", decimal_string(&slope, 6));
        let slope = fit_exponent(&vol_pts).map_err(|e| Failure::domain(e.to_string()))?;
        println!("fit remainder_volume {}", decimal_string(&slope, 6));
    }
    Ok(())
}
