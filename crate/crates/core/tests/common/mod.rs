#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use dspan::cli;

/// One recorded CLI invocation: whitespace-separated arguments, the expected
/// exit status, and the exact expected stdout.
#[derive(Debug)]
pub struct GoldenCase {
    pub name: String,
    pub args: Vec<String>,
    pub exit: i32,
    pub stdout: String,
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn load_golden() -> Vec<GoldenCase> {
    let mut paths: Vec<_> = fs::read_dir(golden_dir())
        .expect("golden directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "case"))
        .collect();
    paths.sort();
    paths.iter().map(|p| parse_case(p)).collect()
}

fn parse_case(path: &Path) -> GoldenCase {
    let text = fs::read_to_string(path).unwrap();
    let (header, stdout) = text.split_once("---\n").expect("case separator");
    let mut args = None;
    let mut exit = None;
    for line in header.lines() {
        if let Some(rest) = line.strip_prefix("args:") {
            args = Some(rest.split_whitespace().map(String::from).collect());
        } else if let Some(rest) = line.strip_prefix("exit:") {
            exit = Some(rest.trim().parse().unwrap());
        }
    }
    GoldenCase {
        name: path.file_stem().unwrap().to_string_lossy().into_owned(),
        args: args.expect("args line"),
        exit: exit.expect("exit line"),
        stdout: stdout.to_string(),
    }
}

/// Checks a case against both the in-process entry point and the built
/// binary. Returns a description of the first mismatch.
pub fn check_case(case: &GoldenCase) -> Result<(), String> {
    let argv = std::iter::once("dspan".to_string()).chain(case.args.iter().cloned());
    let out = cli::run(argv);
    compare(case, "run", out.code, &out.stdout, &out.stderr)?;

    let proc = Command::new(env!("CARGO_BIN_EXE_dspan"))
        .args(&case.args)
        .output()
        .map_err(|e| format!("{}: cannot spawn binary: {e}", case.name))?;
    compare(
        case,
        "binary",
        proc.status.code().unwrap_or(-1),
        &String::from_utf8_lossy(&proc.stdout),
        &String::from_utf8_lossy(&proc.stderr),
    )
}

fn compare(
    case: &GoldenCase,
    via: &str,
    code: i32,
    stdout: &str,
    stderr: &str,
) -> Result<(), String> {
    if code != case.exit {
        return Err(format!(
            "{} ({via}): exit {code}, expected {}; stderr: {stderr}",
            case.name, case.exit
        ));
    }
    if stdout != case.stdout {
        return Err(format!(
            "{} ({via}): stdout {stdout:?}, expected {:?}",
            case.name, case.stdout
        ));
    }
    if code >= 2 && stderr.is_empty() {
        return Err(format!(
            "{} ({via}): failing exit without a diagnostic",
            case.name
        ));
    }
    if code < 2 && !stderr.is_empty() {
        return Err(format!(
            "{} ({via}): unexpected stderr {stderr:?}",
            case.name
        ));
    }
    Ok(())
}
