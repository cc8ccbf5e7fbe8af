use std::fmt::Write as _;

use serde_json::{json, Value};

use schurweyl::characters::CharacterTable;
use schurweyl::coefficients::{kronecker, littlewood_richardson};
use schurweyl::json::{int_to_json, parse_rational, rational_string};
use schurweyl::linalg::to_f64;
use schurweyl::oracle::{Oracle, TableauLabel};
use schurweyl::symfunc::Spectrum;
use schurweyl::verify::{self, CharacterMutation, Suite, VerifyConfig};
use schurweyl::werner::{
    self, character_polynomial, definetti_bound_dual, definetti_bound_dual_leading, definetti_bound_sym,
    degrees_of_freedom, dual_trace, dual_twirl_cycle, fully_mixed, horn_witness, marginal_feasible, root_range,
    table5, trace_distance, trace_out_sym, twirl_power, StateKind, WernerWeights,
};
use schurweyl::{Error, Partition, Rational, Result};

use crate::config::{Format, RunConfig};
use crate::{BoundKind, Command, DofKind, Output, SuiteArg, TraceMode};

/// `"num/den (float)"`.
fn show(x: &Rational) -> String {
    format!("{} ({})", rational_string(x), to_f64(x))
}

fn rational_json(x: &Rational) -> Value {
    json!({ "exact": rational_string(x), "float": to_f64(x) })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn render_weights(w: &WernerWeights, extra: &[(&str, Rational)], format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = String::new();
            for (mu, a) in w.weights() {
                writeln!(out, "{mu}\t{}\t{}", rational_string(a), to_f64(a)).unwrap();
            }
            writeln!(out, "total\t{}\t{}", rational_string(&w.total()), to_f64(&w.total())).unwrap();
            for (name, v) in extra {
                writeln!(out, "{name}\t{}\t{}", rational_string(v), to_f64(v)).unwrap();
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("partition,exact,float\n");
            for (mu, a) in w.weights() {
                writeln!(out, "\"{mu}\",{},{}", rational_string(a), to_f64(a)).unwrap();
            }
            writeln!(out, "total,{},{}", rational_string(&w.total()), to_f64(&w.total())).unwrap();
            for (name, v) in extra {
                writeln!(out, "{name},{},{}", rational_string(v), to_f64(v)).unwrap();
            }
            out
        }
        Format::Json => {
            let mut v = w.to_json();
            v["total"] = Value::String(rational_string(&w.total()));
            for (name, x) in extra {
                v[*name] = Value::String(rational_string(x));
            }
            pretty(&v)
        }
    }
}

fn render_integer(name: &str, args: &[&Partition], value: &num_bigint::BigInt, format: Format) -> String {
    match format {
        Format::Plain => format!("{value}\n"),
        Format::Csv => {
            let cols: Vec<String> = args.iter().map(|p| format!("\"{p}\"")).collect();
            format!("{},value\n{},{value}\n", (0..args.len()).map(|i| format!("arg{}", i + 1)).collect::<Vec<_>>().join(","), cols.join(","))
        }
        Format::Json => pretty(&json!({ "quantity": name, "arguments": args, "value": int_to_json(value) })),
    }
}

fn parse_spectrum(s: &str) -> Result<Spectrum> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(format!("spectrum {s:?}: {e}")))?;
    let items = v.as_array().ok_or_else(|| Error::Parse("spectrum must be a JSON array".into()))?;
    let values = items
        .iter()
        .map(|x| match x {
            Value::String(t) => parse_rational(t),
            Value::Number(n) => parse_rational(&n.to_string()),
            other => Err(Error::Parse(format!("spectrum entry {other} is not a number"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Spectrum::new(values)
}

pub fn run(command: &Command, config: &RunConfig) -> Result<Output> {
    let format = config.format;
    match command {
        Command::ChiPoly { lambda, mu } => {
            let poly = character_polynomial(lambda, mu)?;
            let range = root_range(lambda, mu)?;
            let text = match format {
                Format::Plain => format!(
                    "{poly}; integral roots {}..{}\nq- = {}, q+ = {}\n",
                    range.q_minus + 1,
                    range.q_plus - 1,
                    range.q_minus,
                    range.q_plus
                ),
                Format::Csv => format!(
                    "lambda,mu,polynomial,roots,q_minus,q_plus\n\"{lambda}\",\"{mu}\",{poly},\"{}\",{},{}\n",
                    range.roots.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
                    range.q_minus,
                    range.q_plus
                ),
                Format::Json => pretty(&json!({
                    "lambda": lambda,
                    "mu": mu,
                    "polynomial": poly.to_json(),
                    "display": poly.to_string(),
                    "roots": range.roots,
                    "q_minus": range.q_minus,
                    "q_plus": range.q_plus,
                })),
            };
            Ok(Output::ok(text))
        }
        Command::Table5 => {
            let rows = table5()?;
            Ok(Output::ok(match format {
                Format::Plain => werner::render_table_plain(&rows),
                Format::Csv => werner::render_table_csv(&rows),
                Format::Json => pretty(&werner::table_to_json(&rows)),
            }))
        }
        Command::Lr { lambda, mu, nu } => {
            let c = littlewood_richardson(lambda, mu, nu);
            Ok(Output::ok(render_integer("littlewood_richardson", &[lambda, mu, nu], &c, format)))
        }
        Command::Kron { lambda, mu, nu } => {
            let g = kronecker(lambda, mu, nu)?;
            Ok(Output::ok(render_integer("kronecker", &[lambda, mu, nu], &g, format)))
        }
        Command::Trace { lambda, mode } => {
            let (w, extra) = match *mode {
                TraceMode::Sym { k, d } => (trace_out_sym(lambda, k, d)?, Vec::new()),
                TraceMode::Dual { p, q } => {
                    let w = dual_trace(lambda, p, q)?;
                    let dist = trace_distance(&w, &fully_mixed(lambda.size(), p)?)?;
                    (w, vec![("distance_to_maximally_mixed", dist)])
                }
            };
            Ok(Output::ok(render_weights(&w, &extra, format)))
        }
        Command::Twirl { spectrum, k } => {
            let r = parse_spectrum(spectrum)?;
            Ok(Output::ok(render_weights(&twirl_power(&r, *k)?, &[], format)))
        }
        Command::DualTwirl { alpha, d } => Ok(Output::ok(render_weights(&dual_twirl_cycle(alpha, *d)?, &[], format))),
        Command::Bound { kind } => {
            let (name, value, leading) = match *kind {
                BoundKind::Dual { n, q } => {
                    ("dual", definetti_bound_dual(n, q)?, Some(definetti_bound_dual_leading(n, q)))
                }
                BoundKind::Sym { k, smallest_row } => ("symmetric", definetti_bound_sym(k, smallest_row)?, None),
            };
            let text = match format {
                Format::Plain => {
                    let mut s = format!("{}\n", show(&value));
                    if let Some(l) = &leading {
                        writeln!(s, "leading term {}", show(l)).unwrap();
                    }
                    s
                }
                Format::Csv => format!("bound,exact,float\n{name},{},{}\n", rational_string(&value), to_f64(&value)),
                Format::Json => {
                    let mut v = json!({ "bound": name, "value": rational_json(&value) });
                    if let Some(l) = &leading {
                        v["leading_term"] = rational_json(l);
                    }
                    pretty(&v)
                }
            };
            Ok(Output::ok(text))
        }
        Command::Dof { n, d, kind } => {
            let kinds: Vec<(&str, StateKind)> = match kind {
                Some(DofKind::Werner) => vec![("werner", StateKind::Werner)],
                Some(DofKind::Symmetric) => vec![("symmetric", StateKind::Symmetric)],
                None => vec![("werner", StateKind::Werner), ("symmetric", StateKind::Symmetric)],
            };
            if *n == 0 || *d == 0 {
                return Err(Error::InvalidArgument("n and d must be positive".into()));
            }
            let values: Vec<(&str, num_bigint::BigInt)> =
                kinds.into_iter().map(|(name, k)| (name, degrees_of_freedom(*n, *d, k))).collect();
            let text = match format {
                Format::Plain => values.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect(),
                Format::Csv => {
                    let mut s = String::from("kind,dof\n");
                    for (k, v) in &values {
                        writeln!(s, "{k},{v}").unwrap();
                    }
                    s
                }
                Format::Json => {
                    let mut v = json!({ "n": n, "d": d });
                    for (k, x) in &values {
                        v[*k] = int_to_json(x);
                    }
                    pretty(&v)
                }
            };
            Ok(Output::ok(text))
        }
        Command::Qplus { lambda, mu, q } => {
            let range = root_range(lambda, mu)?;
            let feasible = q.map(|q| marginal_feasible(lambda, mu, q)).transpose()?;
            let text = match format {
                Format::Plain => {
                    let mut s = format!("q+ = {}\nq- = {}\n", range.q_plus, range.q_minus);
                    if let (Some(q), Some(f)) = (q, feasible) {
                        writeln!(s, "chi(q={q}) > 0: {f}").unwrap();
                    }
                    s
                }
                Format::Csv => format!(
                    "q_plus,q_minus,feasible\n{},{},{}\n",
                    range.q_plus,
                    range.q_minus,
                    feasible.map(|f| f.to_string()).unwrap_or_default()
                ),
                Format::Json => pretty(&json!({
                    "lambda": lambda,
                    "mu": mu,
                    "q_plus": range.q_plus,
                    "q_minus": range.q_minus,
                    "q": q,
                    "feasible": feasible,
                })),
            };
            Ok(Output::ok(text))
        }
        Command::Horn { lambda, mu } => {
            let w = horn_witness(lambda, mu)?;
            let text = match (format, &w) {
                (Format::Json, _) => pretty(&json!({
                    "lambda": lambda,
                    "mu": mu,
                    "witness": w.as_ref().map(|w| json!({ "a": w.a, "b": w.b, "c": w.c })),
                })),
                (Format::Csv, Some(w)) => format!("matrix,diagonal\nA,\"{:?}\"\nB,\"{:?}\"\nC,\"{:?}\"\n", w.a, w.b, w.c),
                (Format::Csv, None) => "matrix,diagonal\n".to_string(),
                (Format::Plain, Some(w)) => format!("A = diag{:?}\nB = diag{:?}\nC = diag{:?}\n", w.a, w.b, w.c),
                (Format::Plain, None) => format!("none: {mu} is not contained in {lambda}\n"),
            };
            Ok(Output::ok(text))
        }
        Command::Chartable { n } => {
            let table = CharacterTable::new(*n);
            let text = match format {
                Format::Csv => table.to_csv(),
                Format::Plain => {
                    let labels = table.labels();
                    let mut cells: Vec<Vec<String>> = vec![std::iter::once(String::new())
                        .chain(labels.iter().map(|a| a.to_string()))
                        .collect()];
                    for l in labels {
                        let mut row = vec![l.to_string()];
                        for a in labels {
                            row.push(table.get(l, a)?.to_string());
                        }
                        cells.push(row);
                    }
                    let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
                    cells
                        .iter()
                        .map(|row| {
                            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                            format!("{}\n", line.join(" ").trim_end())
                        })
                        .collect()
                }
                Format::Json => {
                    let rows = table
                        .labels()
                        .iter()
                        .map(|l| {
                            let values = table
                                .labels()
                                .iter()
                                .map(|a| table.get(l, a).map(int_to_json))
                                .collect::<Result<Vec<_>>>()?;
                            Ok(json!({ "lambda": l, "values": values }))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    pretty(&json!({ "n": n, "classes": table.labels(), "rows": rows }))
                }
            };
            Ok(Output::ok(text))
        }
        Command::Verify { suite, mutate } => {
            let suite = match suite {
                SuiteArg::Formulas => Suite::Formulas,
                SuiteArg::Bounds => Suite::Bounds,
                SuiteArg::Oracle => Suite::Oracle,
                SuiteArg::All => Suite::All,
            };
            let mutation = match mutate.as_deref() {
                Some([lambda, alpha]) => {
                    if lambda.size() != alpha.size() {
                        return Err(Error::InvalidArgument(format!("{lambda} and {alpha} have different sizes")));
                    }
                    Some(CharacterMutation { lambda: lambda.clone(), alpha: alpha.clone(), delta: 1 })
                }
                _ => None,
            };
            let vc = VerifyConfig { oracle: Oracle::new(config.size_cap), seed: config.seed, mutation };
            let report = verify::run(suite, &vc);
            let text = match format {
                Format::Plain => report.to_plain(),
                Format::Json => pretty(&report.to_json()),
                Format::Csv => {
                    let mut s = String::from("check,lhs,rhs,pass\n");
                    for c in &report.checks {
                        writeln!(s, "\"{}\",\"{}\",\"{}\",{}", c.check, c.lhs.replace('"', "'"), c.rhs.replace('"', "'"), c.pass)
                            .unwrap();
                    }
                    s
                }
            };
            Ok(Output { text, code: if report.passed() { 0 } else { 1 } })
        }
        Command::YoungDual { tableau, p, q } => {
            let rows: Vec<Vec<usize>> =
                serde_json::from_str(tableau).map_err(|e| Error::Parse(format!("tableau {tableau:?}: {e}")))?;
            let t = TableauLabel::new(rows)?;
            let report = Oracle::new(config.size_cap).verify_general_dual(&t, *p, *q)?;
            let text = match format {
                Format::Json => pretty(&report.to_json()),
                Format::Csv => format!(
                    "tableau,p,q,distance,bound,beta,remainder_min_eigenvalue,distinct_block_exact,pass\n\"{t}\",{p},{q},{},{},{},{},{},{}\n",
                    report.distance,
                    rational_string(&report.bound),
                    rational_string(&report.beta),
                    report.remainder_min_eigenvalue,
                    report.distinct_block_exact,
                    report.passed
                ),
                Format::Plain => format!(
                    "tableau {t}, p = {p}, q = {q}\ndistance {}\nbound {}\nbeta {}\nremainder min eigenvalue {:e}\ndistinct-label block exact: {}\n{}\n",
                    report.distance,
                    show(&report.bound),
                    show(&report.beta),
                    report.remainder_min_eigenvalue,
                    report.distinct_block_exact,
                    if report.passed { "PASS" } else { "FAIL" }
                ),
            };
            Ok(Output { text, code: if report.passed { 0 } else { 1 } })
        }
    }
}
