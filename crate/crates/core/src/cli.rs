//! Command-line front end.
//!
//! Forms are given as `a,b,c,d` with integer or `p/q` entries. Every command
//! builds one JSON document; text mode renders the same document as indented
//! `key: value` lines. Rationals are strings `"p/q"` (or `"p"`), matrices are
//! `[[r,s],[t,u]]`.
//!
//! Exit codes: `0` success, `1` not equivalent (`equivalent` only), `2` usage or
//! parse error, `3` domain error.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Map, Value};

use crate::descent::{cover_point, curve_k, is_on_curve};
use crate::equiv::{
    automorphisms, is_equivalent, gl2_transforms, standard_reducible_form, Group, Ring, TransformSet,
};
use crate::error::Error;
use crate::forms::{BinaryCubicForm, Mat2};
use crate::poly::{linear_factors_binary_cubic, Rat};
use crate::resolvent::{
    cardano_covariant, cardano_representative, cardano_roots_numeric, construct_from_invariant,
    is_trivial_class, rational_roots_of_form,
};

pub const MAX_DENOM_VAR: &str = "CUBIFORM_MAX_DENOM";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "cubiform", version, about = "Exact arithmetic for binary cubic forms")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Discriminant, seminvariants, Hessian, cubic covariant and syzygy check.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Cardano invariant representative and triviality.
    Cardano {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Rational roots of g(X, 1).
    Roots {
        #[arg(allow_hyphen_values = true)]
        form: String,
        /// Also print floating-point roots from Cardano's formula.
        #[arg(long)]
        numeric: bool,
    },
    /// Decide whether FORM1^M = FORM2 for some M in the given group and ring.
    Equivalent {
        #[arg(allow_hyphen_values = true)]
        form1: String,
        #[arg(allow_hyphen_values = true)]
        form2: String,
        #[arg(long, value_enum, default_value = "sl2")]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "q")]
        ring: RingArg,
    },
    /// Every M in GL(2, Q) with FORM1 = FORM2^M.
    Transforms {
        #[arg(allow_hyphen_values = true)]
        form1: String,
        #[arg(allow_hyphen_values = true)]
        form2: String,
    },
    /// GL(2, Q) automorphism group.
    Automorphisms {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// M in SL(2, Q) taking a reducible form to Y(X^2 - disc/4 Y^2).
    StandardForm {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// A form of discriminant DISC whose Cardano invariant is X + Y*delta.
    Construct {
        #[arg(long, allow_hyphen_values = true)]
        disc: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
    /// Image of (X, Y, Z) on Z^3 = g(X, Y) in Y^2 = X^3 + k.
    Cover {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GroupArg {
    Sl2,
    Gl2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RingArg {
    Q,
    Z,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct InputParser {
    max_denom: Option<BigInt>,
}

impl InputParser {
    fn rational(&self, token: &str, context: &str) -> Result<Rat, Failure> {
        let t = token.trim();
        let q: Rat = t
            .parse()
            .map_err(|_| Failure::Usage(format!("invalid rational '{t}' in {context}")))?;
        if let Some(cap) = &self.max_denom {
            if q.denom() > cap {
                return Err(Failure::Usage(format!(
                    "denominator of '{t}' in {context} exceeds {MAX_DENOM_VAR}={cap}"
                )));
            }
        }
        Ok(q)
    }

    fn form(&self, text: &str) -> Result<BinaryCubicForm, Failure> {
        let context = format!("form '{text}'");
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 4 {
            return Err(Failure::Usage(format!(
                "form '{text}' needs 4 comma-separated coefficients, got {}",
                parts.len()
            )));
        }
        let c = parts
            .iter()
            .map(|p| self.rational(p, &context))
            .collect::<Result<Vec<_>, _>>()?;
        let [a, b, cc, d] = <[Rat; 4]>::try_from(c).expect("four coefficients");
        Ok(BinaryCubicForm::new(a, b, cc, d))
    }
}

fn q(r: &Rat) -> Value {
    Value::String(r.to_string())
}

fn qs<'a>(rs: impl IntoIterator<Item = &'a Rat>) -> Value {
    Value::Array(rs.into_iter().map(q).collect())
}

fn matrix(m: &Mat2) -> Value {
    json!([[q(&m.r), q(&m.s)], [q(&m.t), q(&m.u)]])
}

fn form_text(g: &BinaryCubicForm) -> String {
    g.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn form_value(g: &BinaryCubicForm) -> Value {
    json!({ "coefficients": qs(&g.coeffs()), "polynomial": g.to_string() })
}

fn transform_entries(set: &TransformSet) -> Value {
    Value::Array(
        set.entries
            .iter()
            .map(|e| {
                json!({
                    "matrix": matrix(&e.matrix),
                    "det": e.det,
                    "integral": e.integral,
                    "factor": e.factor.to_string(),
                })
            })
            .collect(),
    )
}

fn execute(command: Command, p: &InputParser) -> Result<(&'static str, Value, Value, i32), Failure> {
    Ok(match command {
        Command::Invariants { form } => {
            let g = p.form(&form)?;
            let disc = g.discriminant();
            let (pp, u) = g.seminvariants();
            let outputs = json!({
                "discriminant": q(&disc),
                "P": q(&pp),
                "U": q(&u),
                "hessian": qs(&g.hessian().coeffs()),
                "cubic_covariant": qs(&g.cubic_covariant().coeffs()),
                "syzygy": g.syzygy_holds(),
            });
            ("invariants", json!({ "form": form_text(&g) }), outputs, EXIT_OK)
        }
        Command::Cardano { form } => {
            let g = p.form(&form)?;
            let cov = cardano_covariant(&g)?;
            let (z, (x, y)) = cardano_representative(&g)?;
            let outputs = json!({
                "discriminant": q(&cov.algebra().discriminant()),
                "delta_squared": q(&(Rat::from_integer((-3).into()) * cov.algebra().discriminant())),
                "split": cov.algebra().split,
                "representative": { "u": q(&z.u), "v": q(&z.v), "point": qs([&x, &y]) },
                "norm": q(&z.norm()),
                "hessian_at_point": q(&g.hessian().eval(&x, &y)),
                "trivial": is_trivial_class(&g)?,
            });
            ("cardano", json!({ "form": form_text(&g) }), outputs, EXIT_OK)
        }
        Command::Roots { form, numeric } => {
            let g = p.form(&form)?;
            let roots = rational_roots_of_form(&g)?;
            let factors: Vec<Value> = linear_factors_binary_cubic(&g)?
                .iter()
                .map(|(r, s)| json!([r.to_string(), s.to_string()]))
                .collect();
            let mut outputs = Map::new();
            outputs.insert("roots".into(), qs(&roots.roots));
            outputs.insert("at_infinity".into(), Value::Bool(roots.at_infinity));
            outputs.insert("linear_factors".into(), Value::Array(factors));
            if numeric {
                let approx = cardano_roots_numeric(&g)?;
                outputs.insert(
                    "numeric".into(),
                    Value::Array(
                        approx
                            .iter()
                            .map(|z| {
                                let sign = if z.im.is_sign_negative() { '-' } else { '+' };
                                Value::String(format!("{:.15} {sign} {:.15}i", z.re, z.im.abs()))
                            })
                            .collect(),
                    ),
                );
            }
            let inputs = json!({ "form": form_text(&g), "numeric": numeric });
            ("roots", inputs, Value::Object(outputs), EXIT_OK)
        }
        Command::Equivalent { form1, form2, group, ring } => {
            let g1 = p.form(&form1)?;
            let g2 = p.form(&form2)?;
            let (group, group_name) = match group {
                GroupArg::Sl2 => (Group::SL2, "sl2"),
                GroupArg::Gl2 => (Group::GL2, "gl2"),
            };
            let (ring, ring_name) = match ring {
                RingArg::Q => (Ring::Q, "q"),
                RingArg::Z => (Ring::Z, "z"),
            };
            let v = is_equivalent(&g1, &g2, group, ring)?;
            let outputs = json!({
                "equivalent": v.equivalent,
                "witness": v.witness.as_ref().map(matrix).unwrap_or(Value::Null),
                "witnesses": Value::Array(v.witnesses.iter().map(matrix).collect()),
            });
            let inputs = json!({
                "form1": form_text(&g1),
                "form2": form_text(&g2),
                "group": group_name,
                "ring": ring_name,
            });
            let code = if v.equivalent { EXIT_OK } else { EXIT_NOT_EQUIVALENT };
            ("equivalent", inputs, outputs, code)
        }
        Command::Transforms { form1, form2 } => {
            let g1 = p.form(&form1)?;
            let g2 = p.form(&form2)?;
            let set = gl2_transforms(&g1, &g2)?;
            let outputs = json!({ "count": set.len(), "transforms": transform_entries(&set) });
            let inputs = json!({ "form1": form_text(&g1), "form2": form_text(&g2) });
            ("transforms", inputs, outputs, EXIT_OK)
        }
        Command::Automorphisms { form } => {
            let g = p.form(&form)?;
            let aut = automorphisms(&g)?;
            let outputs = json!({
                "kind": aut.kind.to_string(),
                "order": aut.kind.order(),
                "transforms": transform_entries(&aut.transforms),
            });
            ("automorphisms", json!({ "form": form_text(&g) }), outputs, EXIT_OK)
        }
        Command::StandardForm { form } => {
            let g = p.form(&form)?;
            let (m, std) = standard_reducible_form(&g)?;
            let outputs = json!({ "matrix": matrix(&m), "form": form_value(&std) });
            ("standard-form", json!({ "form": form_text(&g) }), outputs, EXIT_OK)
        }
        Command::Construct { disc, x, y, p: pv } => {
            let disc = p.rational(&disc, "--disc")?;
            let x = p.rational(&x, "--x")?;
            let y = p.rational(&y, "--y")?;
            let pv = p.rational(&pv, "--p")?;
            let g = construct_from_invariant(&disc, &x, &y, &pv)?;
            let inputs = json!({ "disc": q(&disc), "x": q(&x), "y": q(&y), "p": q(&pv) });
            ("construct", inputs, json!({ "form": form_value(&g) }), EXIT_OK)
        }
        Command::Cover { form, x, y, z } => {
            let g = p.form(&form)?;
            let x = p.rational(&x, "X")?;
            let y = p.rational(&y, "Y")?;
            let z = p.rational(&z, "Z")?;
            let k = curve_k(&g)?;
            let pt = cover_point(&g, &x, &y, &z)?;
            let outputs = json!({
                "k": q(&k),
                "point": qs([&pt.x, &pt.y]),
                "on_curve": is_on_curve(&k, &pt),
            });
            let inputs = json!({ "form": form_text(&g), "point": qs([&x, &y, &z]) });
            ("cover", inputs, outputs, EXIT_OK)
        }
    })
}

fn is_leaf(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(is_leaf),
        _ => true,
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(scalar_text).collect();
            format!("[{}]", inner.join(","))
        }
        other => other.to_string(),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                if is_leaf(val) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar_text(val)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(val, indent + 2, out);
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                if is_leaf(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar_text(item)));
                } else {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    render(item, indent + 2, out);
                }
            }
        }
        leaf => out.push_str(&format!("{pad}{}\n", scalar_text(leaf))),
    }
}

/// Text rendering of a report document.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    render(doc, 0, &mut out);
    out
}

fn max_denom_from_env() -> Result<Option<BigInt>, String> {
    match std::env::var(MAX_DENOM_VAR) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<BigInt>() {
            Ok(n) if n.is_positive() => Ok(Some(n)),
            _ => Err(format!("{MAX_DENOM_VAR} must be a positive integer, got '{s}'")),
        },
    }
}

/// Runs the CLI on `args` (including the program name), reading the
/// denominator cap from `CUBIFORM_MAX_DENOM`.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match max_denom_from_env() {
        Ok(cap) => run_with(args, cap),
        Err(msg) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

/// As [`run`] with an explicit denominator cap.
pub fn run_with<I, T>(args: I, max_denom: Option<BigInt>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let parser = InputParser { max_denom };
    let json_mode = cli.json;
    match execute(cli.command, &parser) {
        Ok((name, inputs, outputs, code)) => {
            let doc = json!({ "command": name, "inputs": inputs, "outputs": outputs });
            let stdout = if json_mode {
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
            } else {
                render_text(&doc)
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(e)) => {
            let stdout = if json_mode {
                format!("{}\n", json!({ "error": e.to_string() }))
            } else {
                String::new()
            };
            Outcome { code: EXIT_DOMAIN, stdout, stderr: format!("error: {e}\n") }
        }
    }
}
