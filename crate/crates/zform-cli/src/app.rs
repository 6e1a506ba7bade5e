//! Commands, configuration and report rendering.

use serde_json::{json, Value as Json};
use zform::arithfun::ArithFunction;
use zform::liealg::AlgebraKind;
use zform::symfun::{self, GeneratorFamily};
use zform::uea::{Basis, UElem};
use zform::verify::{self, Report, DEFAULT_CEILING_MS, ORDER_ENV};
use zform::{fmt_q, Q};

use crate::eval::{is_constant, monomial_uv, nonzero_terms, Evaluator, Value};
use crate::expr::parse_in;
use crate::CliError;

/// Order used by `straighten` and `coords` when none is configured.
pub const DEFAULT_EXPR_ORDER: usize = 6;

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Usage(format!("unknown format `{s}` (expected text or json)"))),
        }
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub algebra: Option<AlgebraKind>,
    pub order: Option<usize>,
    pub format: Format,
    pub ceiling_ms: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            algebra: None,
            order: None,
            format: Format::Text,
            ceiling_ms: DEFAULT_CEILING_MS,
        }
    }
}

impl Config {
    /// Explicit order, then the environment, then nothing.
    pub fn requested_order(&self) -> Result<Option<usize>, CliError> {
        let order = match self.order {
            Some(n) => Some(n),
            None => match std::env::var(ORDER_ENV) {
                Ok(s) => Some(
                    s.trim()
                        .parse()
                        .map_err(|_| CliError::Usage(format!("{ORDER_ENV}={s} is not an order")))?,
                ),
                Err(_) => None,
            },
        };
        if order == Some(0) {
            return Err(CliError::Usage("order must be at least 1".into()));
        }
        Ok(order)
    }

    fn algebra_or(&self, default: AlgebraKind) -> AlgebraKind {
        self.algebra.unwrap_or(default)
    }
}

/// Parse an algebra tag.
pub fn parse_algebra(s: &str) -> Result<AlgebraKind, CliError> {
    AlgebraKind::parse(s).ok_or_else(|| CliError::Usage(format!("unknown algebra `{s}` (expected sl2, a1_1 or a2_2)")))
}

/// What a command printed and whether every check it ran passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    /// Lines for standard error.
    pub diagnostics: Vec<String>,
    pub success: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            diagnostics: Vec::new(),
            success: true,
        }
    }
}

fn pretty(v: &Json) -> String {
    serde_json::to_string_pretty(v).expect("json")
}

fn evaluate(src: &str, cfg: &Config) -> Result<(Evaluator, Value), CliError> {
    let kind = cfg.algebra_or(AlgebraKind::A11);
    let order = cfg.requested_order()?.unwrap_or(DEFAULT_EXPR_ORDER);
    let expr = parse_in(src, Some(kind))?;
    let ev = Evaluator::new(kind, order);
    let v = ev.eval(&expr)?;
    Ok((ev, v))
}

fn coords_json(c: &zform::uea::Coords) -> Json {
    Json::Array(
        c.iter()
            .map(|(l, q)| json!({ "label": l.render(), "coefficient": fmt_q(q) }))
            .collect(),
    )
}

fn coords_text(c: &zform::uea::Coords, indent: &str) -> String {
    if c.is_empty() {
        return format!("{indent}(zero)\n");
    }
    c.iter()
        .map(|(l, q)| format!("{indent}{}  {}\n", fmt_q(q), l.render()))
        .collect()
}

/// `straighten <expr>`: PBW form, integral coordinates and integrality verdict.
pub fn straighten(src: &str, cfg: &Config) -> Result<Outcome, CliError> {
    let (ev, v) = evaluate(src, cfg)?;
    let u = &ev.uea;
    let terms: Vec<(usize, usize, UElem)> = if is_constant(&v) {
        vec![(0, 0, v.constant_term().clone())]
    } else {
        nonzero_terms(&v)
    };
    let mut witness: Option<(String, String, Q)> = None;
    let mut rows = Vec::new();
    for (i, j, e) in &terms {
        let coords = u.coordinates(e, Basis::Standard)?;
        if witness.is_none() {
            if let Some((l, q)) = coords.iter().find(|(_, q)| !q.is_integer()) {
                witness = Some((monomial_uv(*i, *j), l.render(), q.clone()));
            }
        }
        rows.push((*i, *j, e.render(), coords));
    }
    let integral = witness.is_none();
    let output = match cfg.format {
        Format::Json => pretty(&json!({
            "algebra": u.kind().name(),
            "order": ev.order,
            "terms": rows.iter().map(|(i, j, pbw, c)| json!({
                "deg_u": i, "deg_v": j, "pbw": pbw, "coordinates": coords_json(c),
            })).collect::<Vec<_>>(),
            "integral": integral,
            "witness": witness.as_ref().map(|(m, l, q)| json!({
                "term": m, "label": l, "coefficient": fmt_q(q),
            })),
        })),
        Format::Text => {
            let mut s = String::new();
            let constant = is_constant(&v);
            for (i, j, pbw, _) in &rows {
                if constant {
                    s.push_str(&format!("{pbw}\n"));
                } else {
                    s.push_str(&format!("[{}] {pbw}\n", monomial_uv(*i, *j)));
                }
            }
            s.push_str("coordinates:\n");
            for (i, j, _, c) in &rows {
                if !constant {
                    s.push_str(&format!("  [{}]\n", monomial_uv(*i, *j)));
                }
                s.push_str(&coords_text(c, if constant { "  " } else { "    " }));
            }
            match &witness {
                None => s.push_str("integral: true"),
                Some((m, l, q)) => s.push_str(&format!("integral: false (coefficient {} on {l} in [{m}])", fmt_q(q))),
            }
            s
        }
    };
    Ok(Outcome::ok(output))
}

/// Parse a `--basis` value.
pub fn parse_basis(s: &str) -> Result<Basis, CliError> {
    match s {
        "paper" | "standard" => Ok(Basis::Standard),
        "mitzman" => Ok(Basis::Mitzman),
        "hat" => Ok(Basis::ForceHat),
        _ => Err(CliError::Usage(format!("unknown basis `{s}` (expected paper, mitzman or hat)"))),
    }
}

/// `coords <expr>`: coordinates of a constant element in a basis.
pub fn coords(src: &str, basis: Basis, cfg: &Config) -> Result<Outcome, CliError> {
    let (ev, v) = evaluate(src, cfg)?;
    if !is_constant(&v) {
        return Err(CliError::Usage("coords needs an expression without u or v".into()));
    }
    let c = ev.uea.coordinates(v.constant_term(), basis)?;
    let output = match cfg.format {
        Format::Json => pretty(&json!({
            "algebra": ev.uea.kind().name(),
            "basis": format!("{basis:?}").to_lowercase(),
            "coordinates": coords_json(&c),
        })),
        Format::Text => coords_text(&c, "").trim_end().to_string(),
    };
    Ok(Outcome::ok(output))
}

/// Render reports as a JSON array or a text table.
pub fn emit_report(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("json"),
        Format::Text => {
            if reports.is_empty() {
                return "no reports".into();
            }
            let width = reports.iter().map(|r| r.tag.len()).max().unwrap_or(0);
            reports
                .iter()
                .map(|r| {
                    let mut line = format!(
                        "{} {:width$}  order {:>2}  {} ms",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.tag,
                        r.order,
                        r.elapsed_ms
                    );
                    if let Some(d) = &r.first_diff {
                        let case = if d.case.is_empty() { String::new() } else { format!(" [{}]", d.case) };
                        line.push_str(&format!(
                            "\n     first difference at {}{case}:\n       left:  {}\n       right: {}",
                            monomial_uv(d.deg_u, d.deg_v),
                            d.left,
                            d.right
                        ));
                    }
                    line
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}

/// `verify <tag|all>`.
pub fn verify_cmd(target: &str, cfg: &Config) -> Result<Outcome, CliError> {
    let order = cfg.requested_order()?;
    let entries: Vec<_> = if target == "all" {
        verify::catalog()
            .into_iter()
            .filter(|e| cfg.algebra.is_none_or(|a| a == e.algebra))
            .collect()
    } else {
        let e = verify::find(target)?;
        if let Some(a) = cfg.algebra {
            if a != e.algebra {
                return Err(CliError::Usage(format!("{target} is an identity in {}, not {a}", e.algebra)));
            }
        }
        if let Some(n) = order {
            let ceiling = cfg.ceiling_ms;
            let est = e.estimate_ms(n);
            if est > ceiling {
                return Err(zform::Error::CostCeiling {
                    tag: e.tag,
                    order: n,
                    estimate_ms: est,
                    ceiling_ms: ceiling,
                }
                .into());
            }
        }
        vec![e]
    };
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for r in verify::verify_entries(&entries, order, cfg.ceiling_ms) {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => errors.push(e.to_string()),
        }
    }
    if target != "all" {
        if let Some(e) = errors.first() {
            return Err(CliError::Usage(e.clone()));
        }
    }
    let success = errors.is_empty() && reports.iter().all(|r| r.pass);
    Ok(Outcome {
        output: emit_report(&reports, cfg.format),
        diagnostics: errors,
        success,
    })
}

/// `list`: catalog tags with algebra and default order.
pub fn list(cfg: &Config) -> Result<Outcome, CliError> {
    let entries: Vec<_> = verify::catalog()
        .into_iter()
        .filter(|e| cfg.algebra.is_none_or(|a| a == e.algebra))
        .collect();
    let output = match cfg.format {
        Format::Json => pretty(&Json::Array(
            entries
                .iter()
                .map(|e| json!({
                    "tag": e.tag, "algebra": e.algebra.name(), "paper_ref": e.paper_ref,
                    "default_order": e.default_order, "cases": e.cases.len(),
                }))
                .collect(),
        )),
        Format::Text => {
            let width = entries.iter().map(|e| e.tag.len()).max().unwrap_or(0);
            entries
                .iter()
                .map(|e| format!("{:width$}  {:5}  order {:>2}  {}", e.tag, e.algebra.name(), e.default_order, e.paper_ref))
                .collect::<Vec<_>>()
                .join("\n")
        }
    };
    Ok(Outcome::ok(output))
}

fn series_fn(name: &str) -> Result<ArithFunction, CliError> {
    match name {
        "one" | "hat" => Ok(ArithFunction::one()),
        "epsilon" | "tilde" => Ok(ArithFunction::epsilon()),
        "d" => Ok(ArithFunction::d()),
        "dtilde" => Ok(ArithFunction::dtilde()),
        _ => Err(CliError::Usage(format!(
            "unknown series `{name}` (expected one, epsilon, d or dtilde)"
        ))),
    }
}

fn family(name: &str) -> Result<GeneratorFamily, CliError> {
    match name {
        "hat" => Ok(GeneratorFamily::hat()),
        "tilde" => Ok(GeneratorFamily::tilde()),
        "half" => Ok(GeneratorFamily::half_hat()),
        _ => Err(CliError::Usage(format!("unknown family `{name}` (expected hat, tilde or half)"))),
    }
}

/// `symfun is-integral`: first `n ≤ upto` with the `n`-th member of the
/// series outside the integral span of the family.
pub fn symfun_is_integral(series: &str, fam: &str, upto: usize, cfg: &Config) -> Result<Outcome, CliError> {
    let a = series_fn(series)?;
    let f = family(fam)?;
    let members = symfun::hat_series(&a, upto);
    let mut witness = None;
    for (n, m) in members.iter().enumerate().skip(1) {
        let r = symfun::is_integral(m, &f)?;
        if let Some((mono, q)) = r.witness {
            witness = Some((n, mono, q));
            break;
        }
    }
    let stem = match fam {
        "hat" => "hh",
        "tilde" => "ht",
        _ => "hm",
    };
    let output = match cfg.format {
        Format::Json => pretty(&json!({
            "series": series,
            "family": fam,
            "upto": upto,
            "integral": witness.is_none(),
            "witness": witness.as_ref().map(|(n, m, q)| json!({
                "n": n, "monomial": m.render(stem), "coefficient": fmt_q(q),
            })),
        })),
        Format::Text => match &witness {
            None => "true".into(),
            Some((n, m, q)) => format!("false (witness n={n}: coefficient {} on {})", fmt_q(q), m.render(stem)),
        },
    };
    Ok(Outcome::ok(output))
}

/// `symfun hat|tilde`: members of a generating series in the power sums.
pub fn symfun_members(series: &str, upto: usize, cfg: &Config) -> Result<Outcome, CliError> {
    let members = symfun::hat_series(&series_fn(series)?, upto);
    let output = match cfg.format {
        Format::Json => pretty(&Json::Array(
            members
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, f)| json!({ "n": n, "p": f.render_p() }))
                .collect(),
        )),
        Format::Text => members
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, f)| format!("{n}: {}", f.render_p()))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome::ok(output))
}

/// `symfun garland`: the change of basis to monomial symmetric functions.
pub fn symfun_garland(upto: u32, cfg: &Config) -> Result<Outcome, CliError> {
    let r = symfun::verify_garland_basis(upto);
    let output = match cfg.format {
        Format::Json => pretty(&json!({
            "degree_bound": r.degree_bound,
            "checked": r.checked,
            "pass": r.pass,
            "first_violation": r.first_violation,
        })),
        Format::Text => match &r.first_violation {
            None => format!("PASS garland basis up to degree {} ({} elements)", r.degree_bound, r.checked),
            Some(v) => format!("FAIL garland basis up to degree {}: {v}", r.degree_bound),
        },
    };
    Ok(Outcome {
        output,
        diagnostics: Vec::new(),
        success: r.pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(kind: AlgebraKind) -> Config {
        Config {
            algebra: Some(kind),
            order: Some(4),
            ..Config::default()
        }
    }

    #[test]
    fn straighten_example() {
        let o = straighten("x+[0]*x-[1]", &cfg(AlgebraKind::A22)).unwrap();
        assert_eq!(o.output.lines().next(), Some("x-[1]*x+[0] + h[1]"));
        assert!(o.output.ends_with("integral: true"));
    }

    #[test]
    fn empty_report_list() {
        assert_eq!(emit_report(&[], Format::Json), "[]");
    }

    #[test]
    fn is_integral_example() {
        let o = symfun_is_integral("d", "hat", 4, &Config::default()).unwrap();
        assert!(o.output.starts_with("false (witness n=4"), "{}", o.output);
        let o = symfun_is_integral("d", "tilde", 8, &Config::default()).unwrap();
        assert_eq!(o.output, "true");
    }
}
