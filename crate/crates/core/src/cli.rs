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

//! Command-line driver.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 for usage and
//! input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::compressor::{
    commutation_matrix, compress, extract_generators, min_registers, verify_equivalence,
};
use crate::error::{Error, Result};
use crate::io::{read_collection, write_report, CompressionReport, TermFileFormat};
use crate::oracle::{
    brute_force_min_registers, commutes_dense, DENSE_REGISTER_CAP, SEARCH_DIM_CAP,
};
use crate::pauli::{PauliString, WeightedPauli};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest number of operators the dense cross-check will compare pairwise.
const DENSE_TERM_CAP: usize = 64;

#[derive(Parser, Debug)]
#[command(
    name = "pauli-compress",
    version,
    about = "Re-express Pauli collections on the fewest registers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
}

impl From<FormatArg> for TermFileFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => TermFileFormat::Plain,
            FormatArg::Json => TermFileFormat::Json,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compress a term file and emit a JSON report
    Compress {
        input: PathBuf,
        /// Write the report here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Exit 1 unless the compressed terms reproduce every commutation relation and the φ-rank
        #[arg(long)]
        verify: bool,
        /// Also run the dense-matrix and exhaustive-search cross-checks where they fit
        #[arg(long)]
        oracle: bool,
        /// Input format; inferred from the extension by default
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Check that a candidate collection is equivalent to an original one
    Verify {
        original: PathBuf,
        candidate: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Print register count, φ-rank and the minimal register count
    Info {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
}

fn load_ops(
    path: &Path,
    format: Option<FormatArg>,
) -> Result<(Vec<WeightedPauli>, Vec<PauliString>)> {
    let terms = read_collection(path, format.map(Into::into))?;
    let ops = terms.iter().map(|t| t.op.clone()).collect();
    Ok((terms, ops))
}

/// Dense cross-check that two equally long lists share every pairwise
/// commutation relation. `None` when either list exceeds the oracle caps.
fn dense_pattern_agrees(left: &[PauliString], right: &[PauliString]) -> Result<Option<bool>> {
    let fits = |ops: &[PauliString]| {
        ops.len() <= DENSE_TERM_CAP && ops.iter().all(|p| p.n() <= DENSE_REGISTER_CAP)
    };
    if !fits(left) || !fits(right) {
        return Ok(None);
    }
    for i in 0..left.len() {
        for j in i + 1..left.len() {
            if commutes_dense(&left[i], &left[j])? != commutes_dense(&right[i], &right[j])? {
                return Ok(Some(false));
            }
        }
    }
    Ok(Some(true))
}

fn run_compress(
    input: &Path,
    output: Option<&Path>,
    verify: bool,
    oracle: bool,
    format: Option<FormatArg>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let (terms, ops) = load_ops(input, format)?;
    let result = compress(&terms)?;
    let images: Vec<PauliString> = result.images().iter().map(|t| t.op.clone()).collect();
    let check = verify_equivalence(&ops, &images)?;
    let mut passed = check.passed();

    let mut oracle_used = false;
    if oracle {
        let gens: Vec<PauliString> = result
            .basis()
            .generator_indices()
            .iter()
            .map(|&i| ops[i].clone())
            .collect();
        match dense_pattern_agrees(&gens, result.compressed_generators())? {
            Some(ok) => {
                oracle_used = true;
                passed &= ok;
                let _ = writeln!(
                    err,
                    "oracle dense-commutation: {}",
                    if ok { "pass" } else { "FAIL" }
                );
            }
            None => {
                let _ = writeln!(err, "oracle dense-commutation: skipped (over {DENSE_REGISTER_CAP} registers or {DENSE_TERM_CAP} generators)");
            }
        }
        if gens.len() <= SEARCH_DIM_CAP {
            let searched = brute_force_min_registers(result.commutation().inner())?;
            let ok = searched == result.q();
            oracle_used = true;
            passed &= ok;
            let _ = writeln!(
                err,
                "oracle exhaustive-minimality: {} (search {searched}, formula {})",
                if ok { "pass" } else { "FAIL" },
                result.q()
            );
        } else {
            let _ = writeln!(
                err,
                "oracle exhaustive-minimality: skipped (dimension over {SEARCH_DIM_CAP})"
            );
        }
    }

    let report = CompressionReport::new(&result, &check, oracle_used);
    match output {
        Some(path) => write_report(&report, path)?,
        None => {
            let _ = writeln!(out, "{}", report.to_json());
        }
    }
    if verify && !passed {
        let _ = writeln!(err, "verification failed");
        return Ok(EXIT_VERIFY_FAILED);
    }
    Ok(EXIT_OK)
}

fn run_verify(original: &Path, candidate: &Path, oracle: bool, out: &mut dyn Write) -> Result<i32> {
    let (_, left) = load_ops(original, None)?;
    let (_, right) = load_ops(candidate, None)?;
    let report = verify_equivalence(&left, &right)?;
    let mut passed = report.passed();
    let _ = writeln!(
        out,
        "pairwise_match={} rank_match={} original_phi_rank={} candidate_phi_rank={} mismatched_pairs={}",
        report.pairwise_match(),
        report.rank_match(),
        report.original_phi_rank,
        report.candidate_phi_rank,
        report.mismatches.len()
    );
    for (i, j) in report.mismatches.iter().take(10) {
        let _ = writeln!(out, "mismatch terms {} and {}", i + 1, j + 1);
    }
    if oracle {
        match dense_pattern_agrees(&left, &right)? {
            Some(ok) => {
                passed &= ok;
                let _ = writeln!(out, "oracle_dense_match={ok}");
            }
            None => {
                let _ = writeln!(out, "oracle_dense_match=skipped");
            }
        }
    }
    let _ = writeln!(out, "{}", if passed { "PASS" } else { "FAIL" });
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn run_info(input: &Path, format: Option<FormatArg>, out: &mut dyn Write) -> Result<i32> {
    let (_, ops) = load_ops(input, format)?;
    let basis = extract_generators(&ops)?;
    let gens: Vec<PauliString> = basis
        .generator_indices()
        .iter()
        .map(|&i| ops[i].clone())
        .collect();
    let m = commutation_matrix(&gens)?;
    let _ = writeln!(
        out,
        "terms={} n={} phi_rank={} comm_rank={} min_registers={}",
        ops.len(),
        ops[0].n(),
        basis.len(),
        m.rank(),
        min_registers(&m)
    );
    Ok(EXIT_OK)
}

/// Runs the CLI against explicit output streams and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return if e.exit_code() == 0 {
                EXIT_OK
            } else {
                EXIT_USAGE
            };
        }
    };
    let outcome = match &cli.command {
        Command::Compress {
            input,
            output,
            verify,
            oracle,
            format,
        } => run_compress(
            input,
            output.as_deref(),
            *verify,
            *oracle,
            *format,
            out,
            err,
        ),
        Command::Verify {
            original,
            candidate,
            oracle,
        } => run_verify(original, candidate, *oracle, out),
        Command::Info { input, format } => run_info(input, *format, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if matches!(e, Error::Io { .. }) {
                let _ = writeln!(
                    err,
                    "usage: pauli-compress <compress|verify|info> ... (see --help)"
                );
            }
            EXIT_USAGE
        }
    }
}

pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(argv, &mut stdout.lock(), &mut stderr.lock())
}
