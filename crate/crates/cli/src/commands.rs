//! Subcommand runners. Each writes its report to the given streams and
//! returns the process exit status.

use std::io::{self, BufRead, Write};

use usv_core::roots::all_root_families;
use usv_core::tables::verify_table_with;
use usv_core::verify::run_verification;
use usv_core::{unit_value, Execution, Mat33, UnitName, UnitTable};

use crate::ast::Func;
use crate::eval::eval_str;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Mapping from expression-language names to the conventional unit labels.
pub fn unit_help() -> String {
    let mut s = String::from("unit names:\n");
    for pair in UnitName::ALL.chunks(2) {
        s.push_str(&format!(
            "  {:<4} = {:<3}  {:<4} = {}\n",
            pair[0].ident(),
            pair[0].label(),
            pair[1].ident(),
            pair[1].label()
        ));
    }
    s
}

pub fn language_help() -> String {
    let funcs: Vec<&str> = Func::ALL.iter().map(|f| f.name()).collect();
    format!(
        "literals:  3  2/3  1.25  sqrt3  p{{a,b}}  t{{a,b,c}}  m{{[a,b,c];[a,b,c];[a,b,c]}}\n\
         operators: +  *  ^n   (and -, / between scalars)\n\
         functions: {}\n{}",
        funcs.join(", "),
        unit_help()
    )
}

/// Evaluates one line; returns whether it succeeded.
fn eval_line(line: &str, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<bool> {
    match eval_str(line) {
        Ok(v) => {
            writeln!(out, "{v}")?;
            Ok(true)
        }
        Err(e) => {
            writeln!(err, "{}", e.render(line))?;
            Ok(false)
        }
    }
}

/// `eval EXPR...`: prints one result per expression.
pub fn run_eval(exprs: &[String], out: &mut dyn Write, err: &mut dyn Write) -> io::Result<u8> {
    let mut ok = true;
    for e in exprs {
        ok &= eval_line(e, out, err)?;
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

/// `eval` with no arguments: one expression per input line; blank lines
/// and lines starting with `#` are skipped.
pub fn run_eval_lines(
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    let mut ok = true;
    for line in input.lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        ok &= eval_line(line, out, err)?;
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

/// Interactive loop. Errors are reported and the loop continues.
pub fn run_repl(
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<u8> {
    writeln!(
        out,
        "usv expression evaluator; `help` for syntax, `quit` to leave"
    )?;
    let mut line = String::new();
    loop {
        write!(out, "usv> ")?;
        out.flush()?;
        line.clear();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(EXIT_PASS);
        }
        match line.trim() {
            "" => {}
            "quit" | "exit" => return Ok(EXIT_PASS),
            "help" => write!(out, "{}", language_help())?,
            src => {
                eval_line(src, out, err)?;
            }
        }
    }
}

/// `tables` against an arbitrary unit assignment (tests pass corrupted ones).
pub fn run_tables_with<V>(
    values: V,
    machine: bool,
    exec: Execution,
    out: &mut dyn Write,
) -> io::Result<u8>
where
    V: Fn(UnitName) -> Mat33 + Sync + Send + Copy,
{
    let reports: Vec<_> = UnitTable::ALL
        .into_iter()
        .map(|t| verify_table_with(t, values, exec))
        .collect();
    let total: usize = reports.iter().map(|r| r.cells.len()).sum();
    let passed: usize = reports.iter().map(|r| r.passed()).sum();
    for r in &reports {
        if machine {
            for rec in r.machine_records() {
                writeln!(out, "{rec}")?;
            }
        } else {
            writeln!(out, "{r}")?;
            for c in r.failures() {
                writeln!(
                    out,
                    "  FAIL {} x {}: expected {}, got {}",
                    c.row, c.col, c.expected, c.computed
                )?;
            }
        }
    }
    if !machine {
        writeln!(out, "{passed}/{total} cells pass")?;
    }
    Ok(if passed == total {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

pub fn run_tables(machine: bool, exec: Execution, out: &mut dyn Write) -> io::Result<u8> {
    run_tables_with(unit_value, machine, exec, out)
}

pub fn run_verify(
    samples: u64,
    seed: u64,
    machine: bool,
    exec: Execution,
    out: &mut dyn Write,
) -> io::Result<u8> {
    if samples == 0 {
        return Ok(EXIT_USAGE);
    }
    let report = run_verification(samples, seed, exec);
    if machine {
        for rec in report.machine_records() {
            writeln!(out, "{rec}")?;
        }
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(if report.all_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

pub fn run_roots(machine: bool, out: &mut dyn Write) -> io::Result<u8> {
    let families = all_root_families();
    for fam in &families {
        if machine {
            for c in &fam.checks {
                let status = if c.ok { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{status}",
                    fam.title, c.label, c.root, c.square
                )?;
            }
            continue;
        }
        let confirmed = fam.checks.iter().filter(|c| c.ok).count();
        let status = if fam.ok { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "[{status}] {} (target {}): {confirmed}/{}",
            fam.title,
            fam.target,
            fam.checks.len()
        )?;
        for c in &fam.checks {
            let mark = if c.ok { " " } else { "!" };
            writeln!(
                out,
                "  {mark} {:<12} {}  ^2 = {}",
                c.label, c.root, c.square
            )?;
        }
    }
    Ok(if families.iter().all(|f| f.ok) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}
