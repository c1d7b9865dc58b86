use crate::args::{Cli, Command, Emit, GlobalArgs, Method, SearchArgs, TableFormat};
use crate::error::CliError;
use crate::input::Input;
use crate::report::{RunConfig, RunReport};
use quadsat::dsee::{check_lambda_decay, dsee_run, lambda_decay_checks, product_hypothesis, DseeOptions, DseeTrace};
use quadsat::search::{
    bound_table, bound_table_csv, exhaustive_fmin, exhaustive_fmin_over, local_search_fmin, SearchParams,
    SearchRecord, LOCAL_SEARCH_MIN_M,
};
use quadsat::spectral::{full_spectrum, perron};
use quadsat::verify::{
    sweep_graphs, sweep_small_graphs, verify_claim, verify_interlacing, ClaimId, VerifyError, VerifyReport,
};
use quadsat::{count_report, par, Construction, Graph, SpectralMode, Tolerances};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

/// Environment variable that overrides the comparison slack.
pub const EPSILON_ENV: &str = "QS_EPSILON";

struct Outcome {
    command: &'static str,
    digest: Option<String>,
    payload: Value,
    code: u8,
}

fn tolerances(global: &GlobalArgs) -> Result<Tolerances, CliError> {
    let mut tol = Tolerances {
        perron_tol: global.tol,
        max_iter: global.max_iter,
        ..Tolerances::default()
    };
    if let Ok(raw) = std::env::var(EPSILON_ENV) {
        tol.epsilon = raw
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|e| e.is_finite() && *e >= 0.0)
            .ok_or_else(|| CliError::Usage(format!("{EPSILON_ENV}={raw:?} is not a non-negative number")))?;
    }
    if !(tol.perron_tol > 0.0 && tol.perron_tol.is_finite()) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", tol.perron_tol)));
    }
    if tol.max_iter == 0 {
        return Err(CliError::Usage("--max-iter must be positive".into()));
    }
    Ok(tol)
}

pub fn run(cli: Cli) -> Result<u8, CliError> {
    let tol = tolerances(&cli.global)?;
    let global = cli.global;
    let start = Instant::now();
    let workers = global.workers;
    let outcome = par::with_workers(workers, || dispatch(cli.command, &global, &tol))?;
    let Some(outcome) = outcome else {
        return Ok(0);
    };
    let report = RunReport {
        command: outcome.command,
        input_digest: outcome.digest,
        config: RunConfig::new(&tol, global.mode, global.seed),
        payload: outcome.payload,
        elapsed_ms: u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX),
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    println!("{text}");
    Ok(outcome.code)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload serializes")
}

/// Runs one subcommand. `None` means the command wrote its own output.
fn dispatch(command: Command, global: &GlobalArgs, tol: &Tolerances) -> Result<Option<Outcome>, CliError> {
    let mode = global.mode;
    let read_graph = || -> Result<(Graph, String), CliError> {
        let input = Input::read(global.input.as_deref())?;
        Ok((input.graph(global.format)?, input.digest()))
    };
    let outcome = match command {
        Command::Spectrum => {
            let (g, digest) = read_graph()?;
            spectrum(&g, digest, mode, tol)?
        }
        Command::Count => {
            let (g, digest) = read_graph()?;
            let report = count_report(&g, tol);
            let code = if report.agreement { 0 } else { 1 };
            Outcome {
                command: "count",
                digest: Some(digest),
                payload: json!({ "n": g.n(), "m": g.m(), "c4": report.count(), "report": report }),
                code,
            }
        }
        Command::Dsee { warm_start, trace_csv } => {
            let (g, digest) = read_graph()?;
            dsee(&g, digest, warm_start, trace_csv.as_deref(), tol)?
        }
        Command::Verify { claim, subset } => {
            let (g, digest) = read_graph()?;
            verify(&g, digest, claim, subset, mode, tol)?
        }
        Command::Sweep { n_max, claims, stdin } => {
            let claims = claims.unwrap_or_else(|| ClaimId::ALL.to_vec());
            let (summary, digest) = if stdin {
                let input = Input::read(global.input.as_deref())?;
                let graphs = input.graph6_stream()?;
                (sweep_graphs(&graphs, "graph6 stream", &claims, mode, tol), Some(input.digest()))
            } else {
                (sweep_small_graphs(n_max, &claims, mode, tol)?, None)
            };
            let code = if summary.failures.is_empty() && summary.equality_mismatches.is_empty() {
                0
            } else {
                1
            };
            Outcome {
                command: "sweep",
                digest,
                payload: to_value(&summary),
                code,
            }
        }
        Command::Fmin { m, method, search } => {
            let (record, digest) = fmin(m, method, &search, global, tol)?;
            let mut payload = to_value(&record);
            payload["witness_valid"] = json!(quadsat::search::witness_is_valid(&record, tol)?);
            Outcome {
                command: "fmin",
                digest,
                payload,
                code: 0,
            }
        }
        Command::Bounds {
            m_values,
            output,
            search,
        } => {
            let mut records = Vec::with_capacity(m_values.len());
            let mut digest = None;
            for &m in &m_values {
                let method = if m < LOCAL_SEARCH_MIN_M {
                    Method::Exhaustive
                } else {
                    Method::Local
                };
                let (record, d) = fmin(m, method, &search, global, tol)?;
                digest = digest.or(d);
                records.push(record);
            }
            let rows = bound_table(&records);
            match output {
                TableFormat::Csv => {
                    print!("{}", bound_table_csv(&rows));
                    return Ok(None);
                }
                TableFormat::Json => Outcome {
                    command: "bounds",
                    digest,
                    payload: json!({ "rows": rows, "records": records }),
                    code: 0,
                },
            }
        }
        Command::Construct { spec, emit } => {
            let construction: Construction = spec.join(" ").parse()?;
            let g = construction.build()?;
            match emit {
                Emit::Graph6 => println!("{}", g.to_graph6()),
                Emit::Edges => print!("{}", g.to_edge_list()),
            }
            return Ok(None);
        }
    };
    Ok(Some(outcome))
}

fn spectrum(g: &Graph, digest: String, mode: SpectralMode, tol: &Tolerances) -> Result<Outcome, CliError> {
    let pair = if g.m() == 0 {
        None
    } else {
        Some(perron(g, tol.perron_tol, tol.max_iter)?)
    };
    let lambda = pair.as_ref().map_or(0.0, |p| p.lambda);
    let spectrum = if g.n() <= tol.dense_max_n {
        Some(full_spectrum(g, tol)?)
    } else {
        None
    };
    Ok(Outcome {
        command: "spectrum",
        digest: Some(digest),
        payload: json!({
            "n": g.n(),
            "m": g.m(),
            "lambda": lambda,
            "sqrt_m": (g.m() as f64).sqrt(),
            "spectral_ok": g.m() > 0 && mode.admits(lambda, g.m(), tol.epsilon),
            "perron": pair,
            "eigenvalues": spectrum.map(|s| s.eigenvalues),
        }),
        code: 0,
    })
}

fn trace_csv_text(trace: &DseeTrace) -> String {
    let mut out = String::from("i,u,v,product,threshold,lambda_before,lambda_after,claim8_bound\n");
    for s in &trace.steps {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            s.index, s.deleted_edge.0, s.deleted_edge.1, s.product, s.threshold, s.lambda_before, s.lambda_after, s.claim8_bound
        );
    }
    out
}

fn dsee(
    g: &Graph,
    digest: String,
    warm_start: bool,
    trace_csv: Option<&Path>,
    tol: &Tolerances,
) -> Result<Outcome, CliError> {
    let opts = DseeOptions {
        tolerances: *tol,
        warm_start,
    };
    let trace = dsee_run(g, &opts)?;
    let pair = perron(g, tol.perron_tol, tol.max_iter)?;
    let hypothesis = product_hypothesis(g, &pair, tol);
    let checks = lambda_decay_checks(&trace, tol.epsilon);
    let decay_ok = check_lambda_decay(&trace, tol.epsilon);
    let claim8_ok = trace.steps.iter().all(|s| s.claim8_ok);
    if let Some(path) = trace_csv {
        std::fs::write(path, trace_csv_text(&trace))
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(Outcome {
        command: "dsee",
        digest: Some(digest),
        payload: json!({
            "warm_start": warm_start,
            "trace": trace,
            "decay_checks": checks,
            "decay_ok": decay_ok,
            "claim8_ok": claim8_ok,
            "hypothesis": hypothesis,
        }),
        code: if decay_ok && claim8_ok { 0 } else { 1 },
    })
}

fn verify(
    g: &Graph,
    digest: String,
    claim: ClaimId,
    subset: Option<Vec<usize>>,
    mode: SpectralMode,
    tol: &Tolerances,
) -> Result<Outcome, CliError> {
    let result = match (claim, subset) {
        (ClaimId::Interlacing, Some(s)) => verify_interlacing(g, &s, tol),
        (_, Some(_)) => return Err(CliError::Usage("--subset only applies to the interlacing claim".into())),
        (c, None) => verify_claim(g, c, mode, tol),
    };
    let (payload, code) = match result {
        Ok(report) => {
            let code = if report.pass || report.out_of_hypothesis.is_some() { 0 } else { 1 };
            (verify_payload(&report), code)
        }
        Err(VerifyError::OutOfHypothesis(why)) => (
            json!({ "claim": claim, "pass": null, "out_of_hypothesis": why }),
            0,
        ),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome {
        command: "verify",
        digest: Some(digest),
        payload,
        code,
    })
}

fn verify_payload(report: &VerifyReport) -> Value {
    let mut v = to_value(report);
    v["equality_mismatch"] = json!(report.equality_mismatch());
    v
}

fn fmin(
    m: usize,
    method: Method,
    search: &SearchArgs,
    global: &GlobalArgs,
    tol: &Tolerances,
) -> Result<(SearchRecord, Option<String>), CliError> {
    let mode = global.mode;
    Ok(match method {
        Method::Exhaustive if search.stdin => {
            let input = Input::read(global.input.as_deref())?;
            let graphs = input.graph6_stream()?;
            (exhaustive_fmin_over(&graphs, "graph6 stream", m, mode, tol)?, Some(input.digest()))
        }
        Method::Exhaustive => (exhaustive_fmin(m, search.n_max, mode, tol)?, None),
        Method::Local => {
            let params = SearchParams {
                seed: global.seed,
                iterations: search.iterations,
                restarts: search.restarts,
                n_pool: search.n_pool,
                record_moves: search.moves,
            };
            (local_search_fmin(m, &params, mode, tol)?, None)
        }
    })
}
