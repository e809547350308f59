//! Command implementations. Each returns the text for standard output and an
//! exit code; errors map to exit code 2 except decoding and check failures.

use std::fmt::Write as _;
use std::path::Path;

use gabidulin_core::algebra::{rat, FieldElement, Polynomial};
use gabidulin_core::random::Sampler;
use gabidulin_core::rank::{random_rank_error, weights};
use gabidulin_core::{presets, Automorphism, DecodeStatus, GabidulinCode, SkewPolynomial, Word};

use crate::format::{self, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] gabidulin_core::Error),
}

pub struct Output {
    pub stdout: String,
    /// Lines for standard error, printed after the report.
    pub stderr: Vec<String>,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: Vec::new(), code: 0 }
    }
}

pub const PRESET_PREFIX: &str = "preset:";

/// Loads a spec file, or a built-in tower written as `preset:<name>`.
pub fn load_spec(path: &str) -> Result<Automorphism, CliError> {
    if let Some(name) = path.strip_prefix(PRESET_PREFIX) {
        return presets::by_name(name).map_err(|e| CliError::Usage(e.to_string()));
    }
    let text = read(path)?;
    format::parse_spec(&text).map_err(|source| CliError::Parse { path: path.to_string(), source })
}

pub fn load_word(path: &str, theta: &Automorphism) -> Result<Word, CliError> {
    let text = read(path)?;
    let entries =
        format::parse_word(&text, theta.tower()).map_err(|source| CliError::Parse { path: path.to_string(), source })?;
    Ok(Word::new(entries)?)
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(Path::new(path)).map_err(|source| CliError::Io { path: path.to_string(), source })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn field_check(spec: &str) -> Result<Output, CliError> {
    let theta = load_spec(spec)?;
    let report = theta.admissibility();
    let mut out = String::new();
    writeln!(out, "characteristic polynomial: {}", theta.char_poly().display("Y")).unwrap();
    writeln!(out, "square-free: {}", yes_no(report.square_free)).unwrap();
    writeln!(out, "order: {}", report.order).unwrap();
    writeln!(out, "degree: {}", report.degree).unwrap();
    writeln!(out, "fixed field is K: {}", yes_no(report.fixed_field_is_base)).unwrap();
    writeln!(out, "admissible: {}", yes_no(report.is_admissible())).unwrap();
    Ok(Output { stdout: out, stderr: Vec::new(), code: if report.is_admissible() { 0 } else { 1 } })
}

pub fn roundtrip(spec: &str, n: usize, k: usize, t: usize, seed: u64) -> Result<Output, CliError> {
    let theta = load_spec(spec)?;
    let m = theta.degree();
    if n == 0 || n > m {
        return Err(CliError::Usage(format!("--n must lie in 1..={m}")));
    }
    if k == 0 || k > n {
        return Err(CliError::Usage(format!("--k must lie in 1..={n}")));
    }
    let radius = (n - k) / 2;
    if t > radius {
        return Err(CliError::Usage(format!("--t {t} exceeds the decoding radius {radius}")));
    }
    let code = GabidulinCode::random(&theta, n, k, seed)?;
    let tower = theta.tower();
    let mut sampler = Sampler::new(seed.wrapping_add(1));
    let message: Vec<FieldElement> = (0..k).map(|_| sampler.element(tower, tower.top())).collect();
    let error = random_rank_error(&theta, n, t, seed.wrapping_add(2))?;
    let received = code.encode(&message)?.add(&error)?;
    let outcome = code.decode(&received)?;
    let recovered = outcome.message_poly.as_ref().is_some_and(|f| code.message_of(f) == message);
    let mut out = String::new();
    writeln!(out, "code: N = {n}, k = {k}, d = {}, radius = {radius}", code.min_distance()).unwrap();
    writeln!(out, "error rank: {t}").unwrap();
    writeln!(out, "decode: {}", status_name(outcome.status)).unwrap();
    writeln!(out, "recovered: {}", yes_no(recovered)).unwrap();
    Ok(Output { stdout: out, stderr: Vec::new(), code: if recovered { 0 } else { 1 } })
}

fn status_name(s: DecodeStatus) -> &'static str {
    match s {
        DecodeStatus::Success => "success",
        DecodeStatus::TooManyErrors => "too many errors",
        DecodeStatus::NoSolution => "no solution",
    }
}

pub fn word_weights(spec: &str, word: &str) -> Result<Output, CliError> {
    let theta = load_spec(spec)?;
    let x = load_word(word, &theta)?;
    let w = weights(&theta, &x)?;
    let unified = theta.admissibility().fixed_field_is_base;
    Ok(Output::ok(format!("{w}\nunified metric: {}\n", yes_no(unified))))
}

pub fn encode(spec: &str, msg: &str, g: &str) -> Result<Output, CliError> {
    let theta = load_spec(spec)?;
    let message = load_word(msg, &theta)?;
    let support = load_word(g, &theta)?;
    let code = GabidulinCode::new(&theta, support, message.len())?;
    let c = code.encode(message.entries())?;
    Ok(Output::ok(format::word_to_string(c.entries())))
}

pub fn corrupt(spec: &str, word: &str, t: usize, seed: u64) -> Result<Output, CliError> {
    let theta = load_spec(spec)?;
    let y = load_word(word, &theta)?;
    let e = random_rank_error(&theta, y.len(), t, seed)?;
    let mut out = format!("# error rank: {t}\n");
    out.push_str(&format::word_to_string(y.add(&e)?.entries()));
    Ok(Output::ok(out))
}

pub fn decode(spec: &str, word: &str, g: &str, k: usize) -> Result<Output, CliError> {
    let theta = load_spec(spec)?;
    let y = load_word(word, &theta)?;
    let support = load_word(g, &theta)?;
    let code = GabidulinCode::new(&theta, support, k)?;
    let outcome = code.decode(&y)?;
    match (&outcome.message_poly, &outcome.error) {
        (Some(f), Some(e)) => {
            let rank = gabidulin_core::rank::k_rank(&theta, e)?;
            let mut out = format!("# decode: success\n# error rank: {rank}\n");
            out.push_str(&format::word_to_string(&code.message_of(f)));
            Ok(Output::ok(out))
        }
        _ => Ok(Output {
            stdout: String::new(),
            stderr: vec![format!("decode failed: {}", status_name(outcome.status))],
            code: 1,
        }),
    }
}

/// Recomputes a built-in worked example and compares against the known
/// values.
pub fn repro(id: &str) -> Result<Output, CliError> {
    let mut checks = Checks::default();
    match id {
        "roots8" => repro_roots8(&mut checks)?,
        "ranks8" => repro_ranks8(&mut checks)?,
        "kummer" => repro_kummer(&mut checks)?,
        _ => {
            let p = id
                .strip_prefix("cyclotomic-")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| CliError::Usage(format!("unknown example {id:?}; expected roots8, ranks8, kummer or cyclotomic-<p>")))?;
            repro_cyclotomic(&mut checks, p)?;
        }
    }
    Ok(checks.finish())
}

#[derive(Default)]
struct Checks {
    out: String,
    failed: Vec<String>,
}

impl Checks {
    fn check(&mut self, quantity: &str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        if expected == actual {
            writeln!(self.out, "ok   {quantity}: {actual}").unwrap();
        } else {
            writeln!(self.out, "FAIL {quantity}: expected {expected}, got {actual}").unwrap();
            self.failed.push(format!("mismatch in {quantity}: expected {expected}, got {actual}"));
        }
    }

    fn finish(self) -> Output {
        let code = if self.failed.is_empty() { 0 } else { 1 };
        Output { stdout: self.out, stderr: self.failed, code }
    }
}

fn char_poly_from(theta: &Automorphism, coeffs: &[i64]) -> String {
    let tower = theta.tower();
    let level = theta.top() - 1;
    let coeffs = coeffs.iter().map(|&c| tower.from_i64(level, c)).collect();
    Polynomial::new(theta.base_field(), coeffs).display("Y")
}

fn repro_roots8(c: &mut Checks) -> Result<(), CliError> {
    let theta = presets::roots8();
    let tower = theta.tower();
    let a = tower.generator(1);
    let expected = {
        let base = theta.base_field();
        let y4_minus_1 = Polynomial::new(base, [-1, 0, 0, 0, 1].iter().map(|&v| tower.from_i64(0, v)).collect());
        y4_minus_1.mul(&y4_minus_1).display("Y")
    };
    c.check("characteristic polynomial", expected, theta.char_poly().display("Y"));
    c.check("square-free", "no", yes_no(theta.admissibility().square_free));
    let p = SkewPolynomial::new(&theta, vec![-&tower.one(1), tower.one(1)]);
    let roots = p.root_space()?;
    c.check("root space dimension of X^θ - X", 2, roots.len());
    c.check("1 is a root", "yes", yes_no(p.evaluate(&tower.one(1)).is_zero()));
    c.check("a^2 + a^6 is a root", "yes", yes_no(p.evaluate(&(&a.pow(2) + &a.pow(6))).is_zero()));
    Ok(())
}

fn repro_ranks8(c: &mut Checks) -> Result<(), CliError> {
    let theta = presets::roots8();
    let tower = theta.tower();
    let a = tower.generator(1);
    let x = Word::new(vec![
        tower.one(1),
        a.clone(),
        a.pow(2),
        a.pow(4),
        a.pow(5),
        &a.pow(4).scale(&rat(3)) + &tower.from_i64(1, 2),
    ])?;
    let w = weights(&theta, &x)?;
    c.check("w0 w1 w2 w3", "4 4 5 5", w);
    Ok(())
}

fn repro_kummer(c: &mut Checks) -> Result<(), CliError> {
    let theta = presets::kummer();
    let report = theta.admissibility();
    c.check("characteristic polynomial", char_poly_from(&theta, &[-1, 0, 0, 0, 0, 0, 0, 0, 1]), theta.char_poly().display("Y"));
    c.check("square-free", "yes", yes_no(report.square_free));
    c.check("order", 8, report.order);
    c.check("fixed field is K", "yes", yes_no(report.fixed_field_is_base));
    c.check("admissible", "yes", yes_no(report.is_admissible()));
    Ok(())
}

fn repro_cyclotomic(c: &mut Checks, p: u64) -> Result<(), CliError> {
    let theta = presets::cyclotomic_primitive(p).map_err(|e| CliError::Usage(e.to_string()))?;
    let m = (p - 1) as usize;
    let mut expected = vec![0i64; m + 1];
    expected[0] = -1;
    expected[m] = 1;
    let report = theta.admissibility();
    c.check("characteristic polynomial", char_poly_from(&theta, &expected), theta.char_poly().display("Y"));
    c.check("square-free", "yes", yes_no(report.square_free));
    c.check("order", m, report.order);
    c.check("fixed field is K", "yes", yes_no(report.fixed_field_is_base));
    let k = m.saturating_sub(2).max(1);
    let t = (m - k) / 2;
    let out = roundtrip(&format!("{PRESET_PREFIX}cyclotomic-{p}"), m, k, t, 7)?;
    c.check(&format!("round trip N = {m}, k = {k}, t = {t}"), "yes", yes_no(out.code == 0));
    Ok(())
}
