// Copyright 2026 The pauli-compress Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! non-zero if any criterion fails.

mod common;

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use pauli_compress::gf2::{self, BitMatrix, CanonicalForm};
use pauli_compress::io::{format_json, format_plain, parse_json, parse_plain};
use pauli_compress::oracle::{brute_force_min_registers, oracle_commutation_matrix};
use pauli_compress::{
    commutation_matrix, compress, congruence_reduce, min_registers, phi_rank, verify_equivalence,
    PauliString, WeightedPauli,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Collects sub-check failures so one criterion reports all of them.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn finish(self, summary: String) -> Outcome {
        if self.failures.is_empty() {
            Ok(summary)
        } else {
            Err(format!("{summary}; failed: {}", self.failures.join("; ")))
        }
    }
}

fn images(result: &pauli_compress::CompressionResult) -> Vec<PauliString> {
    result.images().iter().map(|t| t.op.clone()).collect()
}

fn unit_terms(list: &[PauliString]) -> Vec<WeightedPauli> {
    list.iter().cloned().map(WeightedPauli::unit).collect()
}

fn paper_golden() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let original = ops(&PAPER_P);
    let printed_m = BitMatrix::parse_rows(&PAPER_M).unwrap();

    let m = commutation_matrix(&original).unwrap();
    c.check(
        m.inner() == &printed_m,
        "commutation matrix differs from the printed M",
    );
    c.check(m.rank() == 6, format!("rank {} != 6", m.rank()));
    c.check(
        min_registers(&m) == 5,
        format!("min registers {} != 5", min_registers(&m)),
    );

    let result = compress(&unit_terms(&original)).unwrap();
    c.check(result.q() == 5, format!("pipeline q {} != 5", result.q()));
    let report = verify_equivalence(&original, &images(&result)).unwrap();
    c.check(
        report.passed(),
        format!("pipeline output fails verification: {report:?}"),
    );

    let printed_set = ops(&PAPER_MINIMAL_SET);
    let report = verify_equivalence(&original, &printed_set).unwrap();
    c.check(
        report.passed(),
        format!(
            "printed minimal set fails verification (mismatched pairs, 1-based: {:?})",
            report
                .mismatches
                .iter()
                .map(|(i, j)| (i + 1, j + 1))
                .collect::<Vec<_>>()
        ),
    );

    let paper_l = BitMatrix::parse_rows(&PAPER_L).unwrap();
    match CanonicalForm::from_parts(2, 3, paper_l) {
        Ok(form) => {
            let rebuilt = form.reconstruct();
            let diff: Vec<(usize, usize)> = (0..8)
                .flat_map(|i| (0..8).map(move |j| (i, j)))
                .filter(|&(i, j)| rebuilt.get(i, j) != printed_m.get(i, j))
                .map(|(i, j)| (i + 1, j + 1))
                .collect();
            c.check(
                diff.is_empty(),
                format!("printed L·D̃·Lᵀ != M at (1-based) {diff:?}"),
            );
        }
        Err(e) => c.check(false, format!("printed L rejected: {e}")),
    }

    let elapsed = start.elapsed();
    c.check(
        elapsed < Duration::from_secs(1),
        format!("runtime {elapsed:?} >= 1s"),
    );
    c.finish(format!(
        "M bit-exact, rank {}, q {}, {elapsed:?}",
        m.rank(),
        result.q()
    ))
}

fn example_one() -> Outcome {
    let mut c = Checks::default();
    let original = ops(&["XX", "IZ"]);
    let result = compress(&unit_terms(&original)).unwrap();
    let out = images(&result);
    c.check(result.q() == 1, format!("q {} != 1", result.q()));
    c.check(
        out.iter().all(|p| p.n() == 1),
        "outputs not on one register",
    );
    c.check(
        pauli_compress::pauli::anticommutes(&out[0], &out[1]).unwrap(),
        "output pair commutes",
    );
    c.finish(format!("q {}, images {} {}", result.q(), out[0], out[1]))
}

fn formula_vs_search() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let mut count = 0;
    for dim in 0..=4 {
        let all = all_alternating(dim);
        if dim == 4 {
            c.check(all.len() == 64, format!("{} dim-4 instances", all.len()));
        }
        for m in all {
            let searched = brute_force_min_registers(&m).unwrap();
            let formula = dim - gf2::rank(&m) / 2;
            c.check(
                searched == formula,
                format!("search {searched} vs formula {formula} for\n{m}"),
            );
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    c.check(
        elapsed < Duration::from_secs(300),
        format!("runtime {elapsed:?} >= 5 min"),
    );
    c.finish(format!("{count} matrices agree, {elapsed:?}"))
}

fn oracle_concordance() -> Outcome {
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut mismatches = 0;
    let cases = 250;
    for _ in 0..cases {
        let n = rng.gen_range(1..=5);
        let len = rng.gen_range(1..=10);
        let list: Vec<PauliString> = (0..len).map(|_| random_pauli(&mut rng, n)).collect();
        let symplectic = commutation_matrix(&list).unwrap();
        let dense = oracle_commutation_matrix(&list).unwrap();
        for i in 0..len {
            for j in 0..len {
                if symplectic.inner().get(i, j) != dense.get(i, j) {
                    mismatches += 1;
                }
            }
        }
    }
    c.check(mismatches == 0, format!("{mismatches} entry mismatches"));
    c.finish(format!("{cases} collections, {mismatches} mismatches"))
}

fn property_suite() -> Outcome {
    let mut c = Checks::default();
    let seeds = 500;
    let mut ran = 0;
    for seed in 0..seeds {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=10);
        let len = rng.gen_range(1..=24);
        let mut list = random_collection(&mut rng, n, len);
        if phi_rank(&list).unwrap() == 0 {
            list.push(random_pauli(&mut rng, n));
            if phi_rank(&list).unwrap() == 0 {
                continue;
            }
        }
        ran += 1;
        let terms = weighted(&mut rng, &list);
        let result = match compress(&terms) {
            Ok(r) => r,
            Err(e) => {
                c.check(false, format!("seed {seed}: compress failed: {e}"));
                continue;
            }
        };
        let d = result.basis().len();
        let rank = result.commutation().rank();
        let q = result.q();
        c.check(rank % 2 == 0, format!("seed {seed}: odd rank {rank}"));
        c.check(
            q == d - rank / 2,
            format!("seed {seed}: q {q} != {d} - {rank}/2"),
        );
        c.check(
            d.div_ceil(2) <= q && q <= d,
            format!("seed {seed}: q {q} outside [ceil({d}/2), {d}]"),
        );
        c.check(
            commutation_matrix(result.compressed_generators()).unwrap() == *result.commutation(),
            format!("seed {seed}: generator commutation matrix differs"),
        );
        let report = verify_equivalence(&list, &images(&result)).unwrap();
        c.check(
            report.pairwise_match(),
            format!("seed {seed}: {} pair mismatches", report.mismatches.len()),
        );
        c.check(
            report.rank_match(),
            format!(
                "seed {seed}: φ-rank {} -> {}",
                report.original_phi_rank, report.candidate_phi_rank
            ),
        );
        let again = compress(result.images()).unwrap();
        c.check(
            again.q() == q,
            format!("seed {seed}: recompression q {} != {q}", again.q()),
        );
    }
    c.check(ran >= 500, format!("only {ran} seeds exercised"));
    c.finish(format!("{ran} seeds"))
}

fn congruence_self_check() -> Outcome {
    let start = Instant::now();
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0xD1A6);
    let cases = 500;
    for k in 0..cases {
        let dim = if k < 10 { 64 } else { rng.gen_range(0..=64) };
        let m = random_alternating(&mut rng, dim);
        let form = congruence_reduce(&m).unwrap();
        c.check(
            form.reconstruct() == m,
            format!("case {k}: L·D̃·Lᵀ != M (dim {dim})"),
        );
        c.check(
            gf2::is_invertible(form.l()).unwrap(),
            format!("case {k}: L singular"),
        );
        c.check(
            form.iso_count() + 2 * form.pair_count() == dim,
            format!("case {k}: block counts"),
        );
    }
    let elapsed = start.elapsed();
    c.check(
        elapsed < Duration::from_secs(30),
        format!("runtime {elapsed:?} >= 30s"),
    );
    c.finish(format!("{cases} matrices, {elapsed:?}"))
}

fn cli_contract() -> Outcome {
    let mut c = Checks::default();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..50 {
        let n = rng.gen_range(1..=12);
        let len = rng.gen_range(1..=20);
        let list = random_collection(&mut rng, n, len);
        let mut terms = weighted(&mut rng, &list);
        terms[0] = WeightedPauli::new(
            terms[0].op.clone(),
            num_complex::Complex64::new(1e-300, -1.0 / 3.0),
        )
        .unwrap();
        c.check(
            parse_plain(&format_plain(&terms)).unwrap() == terms,
            "plain round trip",
        );
        c.check(
            parse_json(&format_json(&terms)).unwrap() == terms,
            "json round trip",
        );
    }

    let bin = env!("CARGO_BIN_EXE_pauli-compress");
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let run = |args: &[&std::ffi::OsStr]| Command::new(bin).args(args).output().unwrap();

    let paper = data.join("paper_example.pauli");
    let tiny = data.join("tiny.pauli");
    let printed = data.join("paper_printed_minimal_set.pauli");

    let info = run(&["info".as_ref(), paper.as_os_str()]);
    let text = String::from_utf8_lossy(&info.stdout);
    c.check(info.status.code() == Some(0), "info exit code");
    for want in ["phi_rank=8", "comm_rank=6", "min_registers=5"] {
        c.check(
            text.split_whitespace().any(|t| t == want),
            format!("info output lacks {want}: {text:?}"),
        );
    }

    let ok = run(&["verify".as_ref(), paper.as_os_str(), paper.as_os_str()]);
    c.check(ok.status.code() == Some(0), "verify p p should exit 0");
    let bad = run(&["verify".as_ref(), tiny.as_os_str(), paper.as_os_str()]);
    c.check(
        bad.status.code() == Some(2),
        "verify with mismatched lengths should exit 2",
    );
    let fail = run(&["verify".as_ref(), paper.as_os_str(), printed.as_os_str()]);
    c.check(
        fail.status.code() == Some(1),
        "verify against a non-equivalent set should exit 1",
    );
    let compressed = run(&[
        "compress".as_ref(),
        tiny.as_os_str(),
        "--verify".as_ref(),
        "--oracle".as_ref(),
    ]);
    c.check(
        compressed.status.code() == Some(0),
        "compress --verify --oracle exit code",
    );
    let report = pauli_compress::io::CompressionReport::from_json(&String::from_utf8_lossy(
        &compressed.stdout,
    ));
    match report {
        Ok(r) => {
            c.check(r.compressed_registers == 1, "tiny report q");
            c.check(r.verification.oracle_used, "tiny report oracle_used");
            c.check(r.verification.pairwise_match, "tiny report pairwise_match");
        }
        Err(e) => c.check(false, format!("tiny report unreadable: {e}")),
    }
    let usage = run(&["compress".as_ref(), "--frobnicate".as_ref()]);
    c.check(usage.status.code() == Some(2), "unknown flag exit code");
    let missing = run(&["info".as_ref(), "/no/such/input.pauli".as_ref()]);
    c.check(missing.status.code() == Some(2), "missing file exit code");
    c.finish("round trips exact, info values, exit codes 0/1/2".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 worked ten-register example", paper_golden),
        ("2 two-operator example", example_one),
        ("3 formula vs exhaustive search", formula_vs_search),
        ("4 dense oracle concordance", oracle_concordance),
        ("5 compression properties", property_suite),
        ("6 congruence self-check", congruence_self_check),
        ("7 CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
