use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clutter_core::enumerate::{enumerate_self_dual, verify_enumeration, Tally, UniverseReport};
use clutter_core::format::{parse_family, write_families, write_family, ParsedFamily};
use clutter_core::identities::{check_appendix, sweep_random, AppendixReport, CheckOutcome, StarSelfDualFamily};
use clutter_core::kks::{
    lemma2_table, theorem3_table, verify_lemma2, verify_theorem3, BoundReport, BoundTable, RowKind,
};
use clutter_core::vectors::{f_vector, h_from_f};
use clutter_core::{blocker, is_self_dual, min_elements, star, up_closure, Clutter, SetFamily};
use serde::Serialize;
use serde_json::json;

use crate::{Command, Input};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: clutter_core::Error },
    #[error(transparent)]
    Core(#[from] clutter_core::Error),
    #[error(transparent)]
    Output(#[from] io::Error),
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<ParsedFamily> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err)?
    };
    parse_family(&text).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn read_family(input: &Input) -> Result<SetFamily> {
    Ok(read(&input.file)?.resolved()?)
}

fn read_clutter(input: &Input) -> Result<Clutter> {
    Ok(Clutter::new(read_family(input)?)?)
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn vector_line<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn family_for_vectors(input: &Input, upset: bool) -> Result<SetFamily> {
    let f = read_family(input)?;
    if upset {
        Ok(up_closure(&min_elements(&f)).members()?)
    } else {
        Ok(f)
    }
}

/// Runs one command; `Ok(false)` means a check ran and failed.
pub fn run(command: &Command, json: bool, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Blocker(input) => {
            let b = blocker(&read_clutter(input)?);
            if json {
                json_line(out, &b)?;
            } else {
                write!(out, "{}", write_family(b.family()))?;
            }
            Ok(true)
        }
        Command::Star(input) => {
            let s = star(&read_family(input)?)?;
            if json {
                json_line(out, &s)?;
            } else {
                write!(out, "{}", write_family(&s))?;
            }
            Ok(true)
        }
        Command::Upset { input, list } => {
            let up = up_closure(&min_elements(&read_family(input)?));
            let members = up.members()?;
            let f = f_vector(&members);
            if json {
                let mut v =
                    json!({ "t": up.t(), "generators": up.generators(), "count": members.len(), "f": f.counts() });
                if *list {
                    v["members"] = serde_json::to_value(&members).map_err(io::Error::from)?;
                }
                json_line(out, &v)?;
            } else if *list {
                write!(out, "{}", write_family(&members))?;
            } else {
                writeln!(out, "{}", vector_line(f.counts()))?;
            }
            Ok(true)
        }
        Command::Fvector { input, upset } => {
            let f = f_vector(&family_for_vectors(input, *upset)?);
            if json {
                json_line(out, &json!({ "t": f.t(), "f": f.counts() }))?;
            } else {
                writeln!(out, "{}", vector_line(f.counts()))?;
            }
            Ok(true)
        }
        Command::Hvector { input, upset } => {
            let h = h_from_f(&f_vector(&family_for_vectors(input, *upset)?))?;
            if json {
                json_line(out, &json!({ "t": h.t(), "h": h.values() }))?;
            } else {
                writeln!(out, "{}", vector_line(h.values()))?;
            }
            Ok(true)
        }
        Command::Check(input) => {
            let a = read_clutter(input)?;
            let sd = is_self_dual(&a)?;
            let count = up_closure(&a).count()?;
            let half = 1u64 << (a.t() - 1);
            if json {
                json_line(
                    out,
                    &json!({ "t": a.t(), "self_dual": sd, "upset_count": count, "half": half, "intersecting": a.is_intersecting() }),
                )?;
            } else {
                let rel = if count == half { "=" } else { "!=" };
                writeln!(out, "self_dual: {sd}, #upset: {count} {rel} 2^{}", a.t() - 1)?;
            }
            Ok(sd)
        }
        Command::Bounds { t, complex } => {
            let table = if *complex {
                lemma2_table(*t)?
            } else {
                theorem3_table(*t)?
            };
            if json {
                json_line(out, &table)?;
            } else {
                write_table(out, &table)?;
            }
            Ok(true)
        }
        Command::VerifyTheorem3(input) => {
            let report = verify_theorem3(&read_clutter(input)?)?;
            emit_bound_report(out, json, &report)
        }
        Command::VerifyLemma2(input) => {
            let report = verify_lemma2(&read(&input.file)?.complex()?)?;
            emit_bound_report(out, json, &report)
        }
        Command::Identities {
            file,
            random,
            t,
            n,
            seed,
        } => {
            if *random {
                let t = t.expect("clap enforces --t with --random");
                let summary = sweep_random(t, *n, *seed)?;
                if json {
                    json_line(out, &summary)?;
                } else {
                    writeln!(out, "t={} n={} seed={} passed={}/{}", t, n, seed, summary.passed, n)?;
                    for (i, name, idx) in &summary.failures {
                        match idx {
                            Some(k) => writeln!(out, "family {i}: {name} failed at index {k}")?,
                            None => writeln!(out, "family {i}: {name} failed")?,
                        }
                    }
                }
                Ok(summary.passed == *n)
            } else {
                let path = file.as_ref().expect("clap enforces FILE without --random");
                let family = StarSelfDualFamily::new(read(path)?.resolved()?)?;
                let report = check_appendix(&family)?;
                if json {
                    json_line(out, &report)?;
                } else {
                    write_appendix(out, &report)?;
                }
                Ok(report.passed())
            }
        }
        Command::Enumerate {
            t,
            count_only,
            verify,
            out: path,
        } => {
            let result = enumerate_self_dual(*t)?;
            let report = if *verify {
                Some(verify_enumeration(&result)?)
            } else {
                None
            };
            let verified = match &report {
                None => "skipped",
                Some(r) if r.passed() => "pass",
                Some(_) => "fail",
            };
            if !count_only {
                let text = write_families(result.clutters.iter().map(Clutter::family)) + "---\n";
                match path {
                    Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
                        path: p.clone(),
                        source,
                    })?,
                    None if !json => write!(out, "{text}")?,
                    None => {}
                }
            }
            if json {
                let mut v = json!({ "t": t, "count": result.count(), "verified": verified });
                if let Some(r) = &report {
                    v["report"] = serde_json::to_value(r).map_err(io::Error::from)?;
                }
                if !count_only && path.is_none() {
                    v["clutters"] = serde_json::to_value(&result.clutters).map_err(io::Error::from)?;
                }
                json_line(out, &v)?;
            } else {
                if let Some(r) = &report {
                    write_universe(out, r)?;
                }
                writeln!(out, "t={} count={} verified={}", t, result.count(), verified)?;
            }
            Ok(report.is_none_or(|r| r.passed()))
        }
    }
}

fn write_table(out: &mut dyn Write, table: &BoundTable) -> Result<()> {
    writeln!(out, "{:>3}  bound", "k")?;
    for row in &table.rows {
        let f = format!("f_{}", row.k);
        let bound = match row.kind {
            RowKind::Exact => format!("{f} = {}", row.lower),
            RowKind::AtLeast => format!("{f} >= {}", row.lower),
            RowKind::AtMost => format!("{f} <= {}", row.upper),
        };
        writeln!(out, "{:>3}  {bound}", row.k)?;
    }
    let half = table.t as usize / 2;
    for p in &table.pair_sums {
        writeln!(out, "     f_{} + f_{} = {}", half - p.offset, half + p.offset, p.total)?;
    }
    Ok(())
}

fn emit_bound_report(out: &mut dyn Write, json: bool, report: &BoundReport) -> Result<bool> {
    if json {
        json_line(out, report)?;
        return Ok(report.passed);
    }
    writeln!(out, "f: {}", vector_line(&report.f))?;
    writeln!(
        out,
        "{:>3} {:>8} {:>8} {:>8} {:>6}  ok",
        "k", "f_k", "lower", "upper", "slack"
    )?;
    for r in &report.rows {
        let slack = r.slack.map_or("-".to_string(), |s| s.to_string());
        writeln!(
            out,
            "{:>3} {:>8} {:>8} {:>8} {:>6}  {}",
            r.k, r.value, r.lower, r.upper, slack, r.ok
        )?;
    }
    let half = report.t as usize / 2;
    for p in &report.pair_sums {
        writeln!(
            out,
            "f_{} + f_{} = {} (expected {})  {}",
            half - p.offset,
            half + p.offset,
            p.sum,
            p.expected,
            p.ok
        )?;
    }
    writeln!(out, "passed: {}", report.passed)?;
    Ok(report.passed)
}

fn write_appendix(out: &mut dyn Write, report: &AppendixReport) -> Result<()> {
    let width = report.checks.keys().map(|k| k.len()).max().unwrap_or(0);
    for (name, outcome) in &report.checks {
        write!(out, "{name:<width$}  {}", outcome.as_str())?;
        if let CheckOutcome::Fail { index: Some(k) } = outcome {
            write!(out, " (index {k})")?;
        }
        writeln!(out)?;
    }
    writeln!(out, "passed: {}", report.passed())?;
    Ok(())
}

fn write_universe(out: &mut dyn Write, r: &UniverseReport) -> Result<()> {
    let mut line =
        |name: &str, tally: &Tally| writeln!(out, "{name:<10} {}/{}", tally.passed, tally.passed + tally.failed);
    line("criterion", &r.criterion)?;
    line("bijection", &r.bijection)?;
    line("appendix", &r.appendix)?;
    if let Some(t3) = &r.theorem3 {
        line("theorem3", t3)?;
    }
    if let Some(l2) = &r.lemma2 {
        line("lemma2", l2)?;
    }
    Ok(())
}
