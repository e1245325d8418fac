//! Code descriptor files.
//!
//! A descriptor is a list of `key = value` lines; blank lines and `#` comments are ignored.
//!
//! ```text
//! format = agcode-code-1
//! model = hermitian
//! q = 2
//! m = 3
//! ```
//!
//! `r` is required for `norm-trace` and `q0` replaces `q` for `suzuki`. At most one of
//! `m` (divisor degree) and `delta` (improved code of designed distance `delta`) is given.

use std::fmt::Write as _;

use agcode::curve::CurveKind;

use crate::CliError;

pub const FORMAT_TAG: &str = "agcode-code-1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Degree(u64),
    Delta(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeDescriptor {
    pub kind: CurveKind,
    pub selection: Option<Selection>,
}

pub fn model_name(kind: CurveKind) -> &'static str {
    match kind {
        CurveKind::RationalLine { .. } => "line",
        CurveKind::Hermitian { .. } => "hermitian",
        CurveKind::NormTrace { .. } => "norm-trace",
        CurveKind::Suzuki { .. } => "suzuki",
    }
}

/// Builds a curve kind from a model name and its parameters; `flag` names the source of
/// each parameter in diagnostics.
pub fn kind_from_parts(
    model: &str,
    q: Option<u64>,
    r: Option<u32>,
    q0: Option<u64>,
    flag: &dyn Fn(&str) -> String,
) -> Result<CurveKind, CliError> {
    let need_q =
        || q.ok_or_else(|| CliError::Usage(format!("{} is required for {model}", flag("q"))));
    Ok(match model {
        "line" | "rational-line" => CurveKind::RationalLine { q: need_q()? },
        "hermitian" => CurveKind::Hermitian { q: need_q()? },
        "norm-trace" => CurveKind::NormTrace {
            q: need_q()?,
            r: r.ok_or_else(|| {
                CliError::Usage(format!("{} is required for norm-trace", flag("r")))
            })?,
        },
        "suzuki" => CurveKind::Suzuki {
            q0: q0
                .ok_or_else(|| CliError::Usage(format!("{} is required for suzuki", flag("q0"))))?,
        },
        other => {
            return Err(CliError::Usage(format!(
                "{}: unknown model {other:?}",
                flag("model")
            )))
        }
    })
}

impl CodeDescriptor {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let bad = |msg: String| CliError::Usage(format!("--code: {msg}"));
        let mut model = None;
        let (mut q, mut r, mut q0, mut m, mut delta) = (None, None, None, None, None);
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| bad(format!("line {}: expected key = value", no + 1)))?;
            let num = || -> Result<u64, CliError> {
                value.parse().map_err(|_| {
                    bad(format!(
                        "line {}: {key} must be a non-negative integer",
                        no + 1
                    ))
                })
            };
            match key {
                "format" if value == FORMAT_TAG => {}
                "format" => return Err(bad(format!("unsupported format {value:?}"))),
                "model" => model = Some(value.to_string()),
                "q" => q = Some(num()?),
                "r" => r = Some(num()? as u32),
                "q0" => q0 = Some(num()?),
                "m" => m = Some(num()?),
                "delta" => delta = Some(num()? as usize),
                other => return Err(bad(format!("line {}: unknown key {other:?}", no + 1))),
            }
        }
        let model = model.ok_or_else(|| bad("missing model".into()))?;
        let kind = kind_from_parts(&model, q, r, q0, &|k| format!("--code key {k}"))?;
        let selection = match (m, delta) {
            (Some(_), Some(_)) => return Err(bad("give m or delta, not both".into())),
            (Some(m), None) => Some(Selection::Degree(m)),
            (None, Some(d)) => Some(Selection::Delta(d)),
            (None, None) => None,
        };
        Ok(CodeDescriptor { kind, selection })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("format = {FORMAT_TAG}\nmodel = {}\n", model_name(self.kind));
        match self.kind {
            CurveKind::RationalLine { q } | CurveKind::Hermitian { q } => {
                writeln!(out, "q = {q}").unwrap();
            }
            CurveKind::NormTrace { q, r } => writeln!(out, "q = {q}\nr = {r}").unwrap(),
            CurveKind::Suzuki { q0 } => writeln!(out, "q0 = {q0}").unwrap(),
        }
        match self.selection {
            Some(Selection::Degree(m)) => writeln!(out, "m = {m}").unwrap(),
            Some(Selection::Delta(d)) => writeln!(out, "delta = {d}").unwrap(),
            None => {}
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for kind in [
            CurveKind::RationalLine { q: 8 },
            CurveKind::Hermitian { q: 2 },
            CurveKind::NormTrace { q: 2, r: 3 },
            CurveKind::Suzuki { q0: 2 },
        ] {
            for selection in [None, Some(Selection::Degree(5)), Some(Selection::Delta(4))] {
                let d = CodeDescriptor { kind, selection };
                assert_eq!(CodeDescriptor::parse(&d.to_text()).unwrap(), d);
            }
        }
    }

    #[test]
    fn comments_and_errors() {
        let d =
            CodeDescriptor::parse("# a code\nmodel = hermitian\n\nq = 2 # field\nm=3\n").unwrap();
        assert_eq!(d.selection, Some(Selection::Degree(3)));
        assert!(CodeDescriptor::parse("model = klein\n").is_err());
        assert!(CodeDescriptor::parse("model = norm-trace\nq = 2\n").is_err());
        assert!(CodeDescriptor::parse("model = line\nq = 4\nm = 1\ndelta = 2\n").is_err());
        assert!(CodeDescriptor::parse("format = other\nmodel = line\nq = 4\n").is_err());
    }
}
