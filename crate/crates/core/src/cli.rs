//! Batch command-line front end. Every subcommand writes one document to
//! standard output, JSON by default or aligned plain text.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::checks::{run_suite, Suite};
use crate::dtgw::{
    correspondence_check, gw_c, quintic_preset, quintic_printed_form, z_contribution, z_degree_zero, z_reduced,
    z_reduced_class, zgw_reduced_class, CurveSpecies, Geometry, MultiplicityVector,
};
use crate::error::Error;
use crate::exec::Exec;
use crate::partitions::{enumerate_partitions, Partition};
use crate::ratfun::RatFun;
use crate::schur::pd_schur;
use crate::series::{mcmahon, Coeff, LaurentSeries, TruncSeries};
use crate::vertex::{p_gf, pd_product, VertexCounter};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rigid-dt", version, about = "Exact DT/GW partition functions of super-rigid rational curves")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Run every computation on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Enumeration,
    Gf,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Quintic,
    Toy,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of d, or the statistics of one shape.
    Partitions {
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        shape: Option<String>,
    },
    /// P_d(q) from the product expansion and the Schur-sum closed form.
    Pd {
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// MacMahon function M(q).
    Mcmahon {
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// Box-counting function p(n, d).
    Pnd {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// One-leg vertex identity for a shape.
    VertexCheck {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// DT partition function of a multiplicity vector or a curve class.
    Zdt {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        chi: i64,
        /// Multiplicities "d1,d2,...".
        #[arg(long, conflicts_with = "species")]
        d: Option<String>,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// GW reduced partition function in u.
    Zgw {
        /// Single multiple-cover series c(g, d) instead of a class sum.
        #[arg(long, conflicts_with = "species")]
        d: Option<u32>,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 6)]
        genus_cutoff: u32,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, default_value_t = 6)]
        genus_cutoff: u32,
    },
    /// Quintic threefold preset with its degree 1 and 2 reduced functions.
    Quintic {
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, default_value_t = 6)]
        genus_cutoff: u32,
    },
}

#[derive(Debug, Args)]
struct ClassArgs {
    /// Curve species "count:class,count:class".
    #[arg(long)]
    species: Option<String>,
    #[arg(long)]
    degree: Option<u32>,
}

/// A command result: the JSON document, its plain rendering and the exit
/// code.
struct Doc {
    json: Value,
    plain: Plain,
    code: i32,
}

impl Doc {
    fn ok(json: Value, plain: Plain) -> Self {
        Doc { json, plain, code: EXIT_OK }
    }

    fn checked(json: Value, plain: Plain, pass: bool) -> Self {
        Doc { json, plain, code: if pass { EXIT_OK } else { EXIT_MISMATCH } }
    }
}

/// Aligned key/value blocks and tables.
#[derive(Default)]
struct Plain {
    blocks: Vec<Block>,
}

enum Block {
    Kv(Vec<(String, String)>),
    Table(Vec<String>, Vec<Vec<String>>),
    Heading(String),
}

impl Plain {
    fn kv(mut self, key: &str, value: impl ToString) -> Self {
        if let Some(Block::Kv(rows)) = self.blocks.last_mut() {
            rows.push((key.to_string(), value.to_string()));
        } else {
            self.blocks.push(Block::Kv(vec![(key.to_string(), value.to_string())]));
        }
        self
    }

    fn heading(mut self, h: impl Into<String>) -> Self {
        self.blocks.push(Block::Heading(h.into()));
        self
    }

    fn table(mut self, headers: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.blocks.push(Block::Table(headers.iter().map(|s| s.to_string()).collect(), rows));
        self
    }

    fn append(mut self, other: Plain) -> Self {
        self.blocks.extend(other.blocks);
        self
    }

    fn render(&self) -> String {
        let mut out = String::new();
        for (i, b) in self.blocks.iter().enumerate() {
            match b {
                Block::Heading(h) => {
                    if i > 0 {
                        out.push('\n');
                    }
                    out.push_str(&format!("== {h}\n"));
                }
                Block::Kv(rows) => {
                    let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                    for (k, v) in rows {
                        out.push_str(&format!("{k:<w$}  {v}\n"));
                    }
                }
                Block::Table(headers, rows) => {
                    let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
                    for r in rows {
                        for (w, c) in widths.iter_mut().zip(r) {
                            *w = (*w).max(c.len());
                        }
                    }
                    let line = |cells: &[String]| {
                        let parts: Vec<String> =
                            cells.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
                        parts.join("  ").trim_end().to_string() + "\n"
                    };
                    out.push_str(&line(headers));
                    for r in rows {
                        out.push_str(&line(r));
                    }
                }
            }
        }
        out
    }
}

fn series_json(s: &TruncSeries) -> Value {
    serde_json::to_value(s.to_json()).expect("serializable")
}

fn laurent_json(s: &LaurentSeries) -> Value {
    serde_json::to_value(s.to_json()).expect("serializable")
}

fn ratfun_json(f: &RatFun) -> Value {
    serde_json::to_value(f.to_json()).expect("serializable")
}

fn geometry_json(g: &Geometry) -> Value {
    json!({
        "label": g.label,
        "euler_char": g.euler_char.to_string(),
        "species": g.species.iter().map(species_json).collect::<Vec<_>>(),
    })
}

fn species_json(s: &CurveSpecies) -> Value {
    json!({"count": s.count.to_string(), "class_degree": s.class_degree.to_string()})
}

fn species_text(g: &Geometry) -> String {
    g.species.iter().map(|s| format!("{}:{}", s.count, s.class_degree)).collect::<Vec<_>>().join(",")
}

fn coeff_text(c: &Coeff) -> String {
    c.to_string()
}

fn geometry_from(class: &ClassArgs, chi: i64) -> Result<Option<Geometry>, Error> {
    class
        .species
        .as_deref()
        .map(|s| {
            Ok(Geometry { label: format!("species {s}"), euler_char: chi, species: Geometry::parse_species(s)? })
        })
        .transpose()
}

fn cmd_partitions(d: Option<u32>, shape: Option<String>) -> Result<Doc, Error> {
    if let Some(s) = shape {
        let l: Partition = s.parse()?;
        let t = l.transpose();
        let hooks: Vec<String> = l.hook_lengths().iter().map(ToString::to_string).collect();
        let json = json!({
            "shape": l.to_string(),
            "size": l.size().to_string(),
            "transpose": t.to_string(),
            "b2": l.b2().to_string(),
            "b2_transpose": t.b2().to_string(),
            "leg_weight": l.leg_weight().to_string(),
            "hook_lengths": hooks,
        });
        let plain = Plain::default()
            .kv("shape", &l)
            .kv("size", l.size())
            .kv("transpose", &t)
            .kv("b2", l.b2())
            .kv("b2_transpose", t.b2())
            .kv("leg_weight", l.leg_weight())
            .kv("hook_lengths", hooks.join(","));
        return Ok(Doc::ok(json, plain));
    }
    let d = d.unwrap_or(0);
    let parts: Vec<String> = enumerate_partitions(d).iter().map(ToString::to_string).collect();
    let json = json!({"d": d.to_string(), "count": parts.len().to_string(), "partitions": parts});
    let mut plain = Plain::default().kv("d", d).kv("count", parts.len()).heading("partitions");
    for p in &parts {
        plain = plain.kv("-", if p.is_empty() { "(empty)" } else { p });
    }
    Ok(Doc::ok(json, plain))
}

fn cmd_pd(d: u32, order: usize) -> Result<Doc, Error> {
    let product = pd_product(d, order);
    let closed = pd_schur(d);
    let equal = closed.expand(order)? == product;
    let json = json!({
        "d": d.to_string(),
        "order": order.to_string(),
        "series": series_json(&product),
        "closed_form": ratfun_json(&closed),
        "closed_form_text": closed.to_string(),
        "equal": equal,
    });
    let plain = Plain::default()
        .kv("d", d)
        .kv("order", order)
        .kv("series", &product)
        .kv("closed_form", &closed)
        .kv("equal", equal);
    Ok(Doc::checked(json, plain, equal))
}

fn cmd_mcmahon(order: usize) -> Result<Doc, Error> {
    let m = mcmahon(order);
    let json = json!({"order": order.to_string(), "series": series_json(&m)});
    let plain = Plain::default().kv("order", order).kv("series", &m);
    Ok(Doc::ok(json, plain))
}

fn cmd_pnd(n: u64, d: u32, method: Method) -> Result<Doc, Error> {
    let mut json = json!({"n": n.to_string(), "d": d.to_string()});
    let mut plain = Plain::default().kv("n", n).kv("d", d);
    let mut enumerated = None;
    if method != Method::Gf {
        let b = VertexCounter::new().p_enumerate(n, d);
        json["enumeration"] = Value::String(b.count.to_string());
        json["signed"] = Value::String(b.signed().to_string());
        plain = plain.kv("enumeration", &b.count).kv("signed", b.signed());
        enumerated = Some(Coeff::from(num_bigint::BigInt::from(b.count)));
    }
    let mut pass = true;
    if method != Method::Enumeration {
        let gf = p_gf(d, n as usize).coeff(n as usize)?.clone();
        json["generating_function"] = Value::String(coeff_text(&gf));
        plain = plain.kv("generating_function", &gf);
        if let Some(e) = enumerated {
            pass = e == gf;
            json["equal"] = Value::Bool(pass);
            plain = plain.kv("equal", pass);
        }
    }
    Ok(Doc::checked(json, plain, pass))
}

fn cmd_vertex_check(shape: &str, order: usize) -> Result<Doc, Error> {
    let l: Partition = shape.parse()?;
    let pass = VertexCounter::new().vertex_one_leg_check(&l, order);
    let json = json!({"shape": l.to_string(), "order": order.to_string(), "pass": pass});
    let plain = Plain::default().kv("shape", &l).kv("order", order).kv("pass", pass);
    Ok(Doc::checked(json, plain, pass))
}

fn cmd_zdt(chi: i64, d: Option<String>, class: &ClassArgs, order: usize) -> Result<Doc, Error> {
    let (target, reduced, series) = if let Some(d) = d {
        let dvec: MultiplicityVector = d.parse()?;
        (format!("multiplicities ({d})"), z_reduced(&dvec), z_contribution(chi, &dvec, order))
    } else if let Some(geom) = geometry_from(class, chi)? {
        let degree = class.degree.unwrap_or(1).max(1);
        let reduced = z_reduced_class(&geom, degree);
        let series = z_degree_zero(chi, order).mul(&reduced.expand(order)?)?;
        (format!("{} degree {degree}", geom.label), reduced, series)
    } else {
        ("degree zero".to_string(), RatFun::one(), z_degree_zero(chi, order))
    };
    let symmetric = reduced.is_inversion_symmetric();
    let json = json!({
        "target": target,
        "chi": chi.to_string(),
        "order": order.to_string(),
        "reduced": ratfun_json(&reduced),
        "reduced_text": reduced.to_string(),
        "q_inv_symmetric": symmetric,
        "series": series_json(&series),
    });
    let plain = Plain::default()
        .kv("target", &target)
        .kv("chi", chi)
        .kv("order", order)
        .kv("reduced", &reduced)
        .kv("q_inv_symmetric", symmetric)
        .kv("series", &series);
    Ok(Doc::ok(json, plain))
}

fn cmd_zgw(d: Option<u32>, class: &ClassArgs, genus_cutoff: u32) -> Result<Doc, Error> {
    let (target, s) = if let Some(d) = d {
        if d == 0 {
            return Err(Error::NonPositiveMultiplicity(0));
        }
        (format!("multiple cover d={d}"), gw_c(d, genus_cutoff))
    } else {
        let geom = geometry_from(class, 0)?.unwrap_or_else(Geometry::toy);
        let degree = class.degree.unwrap_or(1).max(1);
        (format!("{} degree {degree}", geom.label), zgw_reduced_class(&geom, degree, genus_cutoff))
    };
    let json = json!({
        "target": target,
        "genus_cutoff": genus_cutoff.to_string(),
        "series": laurent_json(&s),
    });
    let plain = Plain::default().kv("target", &target).kv("genus_cutoff", genus_cutoff).kv("series", &s);
    Ok(Doc::ok(json, plain))
}

fn report_plain(r: &crate::dtgw::VerificationReport) -> Plain {
    let rows = r
        .rows
        .iter()
        .map(|row| vec![row.u_exp.to_string(), coeff_text(&row.dt), coeff_text(&row.gw), row.equal.to_string()])
        .collect();
    let mut p = Plain::default()
        .heading(&r.target)
        .kv("verdict", r.verdict)
        .kv("q_inv_symmetric", r.q_inv_symmetric);
    for n in &r.notes {
        p = p.kv("note", n);
    }
    p.table(&["u_exp", "dt", "gw", "equal"], rows)
}

fn cmd_verify(suite: SuiteArg, degree: Option<u32>, genus_cutoff: u32, exec: Exec) -> Result<Doc, Error> {
    let suite = match suite {
        SuiteArg::Quintic => Suite::Quintic,
        SuiteArg::Toy => Suite::Toy,
        SuiteArg::All => Suite::All,
    };
    if degree == Some(0) {
        return Err(Error::NonPositiveMultiplicity(0));
    }
    let report = run_suite(suite, degree, genus_cutoff, exec);
    let json = serde_json::to_value(&report).map_err(|e| Error::Json(e.to_string()))?;
    let mut plain = Plain::default().kv("verdict", report.verdict);
    if !report.checks.is_empty() {
        let rows = report
            .checks
            .iter()
            .map(|c| vec![c.name.clone(), if c.pass { "pass" } else { "fail" }.to_string(), c.detail.clone()])
            .collect();
        plain = plain.heading("identity checks").table(&["check", "result", "detail"], rows);
    }
    for r in &report.reports {
        plain = plain.append(report_plain(r));
    }
    Ok(Doc::checked(json, plain, report.passed()))
}

fn cmd_quintic(order: usize, genus_cutoff: u32, exec: Exec) -> Result<Doc, Error> {
    let geom = quintic_preset();
    let mut degrees = Vec::new();
    let mut plain = Plain::default()
        .kv("euler_char", geom.euler_char)
        .kv("euler_char_source", "standard external value; enters only the unreduced series")
        .kv("species", species_text(&geom));
    for degree in [1u32, 2] {
        let z = z_reduced_class(&geom, degree);
        let printed = quintic_printed_form(degree).expect("degrees 1 and 2");
        let agrees = printed.rf_eq(&z);
        let full = z_degree_zero(geom.euler_char, order).mul(&z.expand(order)?)?;
        let report = correspondence_check(&geom, degree, genus_cutoff, exec);
        degrees.push(json!({
            "degree": degree.to_string(),
            "reduced": ratfun_json(&z),
            "reduced_text": z.to_string(),
            "q_inv_symmetric": z.is_inversion_symmetric(),
            "printed": ratfun_json(&printed),
            "printed_text": printed.to_string(),
            "printed_agrees": agrees,
            "series": series_json(&full),
            "correspondence": report.verdict,
        }));
        plain = plain
            .heading(format!("degree {degree}"))
            .kv("reduced", &z)
            .kv("q_inv_symmetric", z.is_inversion_symmetric())
            .kv("printed", &printed)
            .kv("printed_agrees", agrees)
            .kv("series", &full)
            .kv("correspondence", report.verdict);
    }
    let json = json!({
        "geometry": geometry_json(&geom),
        "euler_char_source": "standard external value; enters only the unreduced series",
        "degrees": degrees,
    });
    Ok(Doc::ok(json, plain))
}

fn dispatch(cli: Cli) -> Result<Doc, Error> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    match cli.command {
        Command::Partitions { d, shape } => cmd_partitions(d, shape),
        Command::Pd { d, order } => cmd_pd(d, order),
        Command::Mcmahon { order } => cmd_mcmahon(order),
        Command::Pnd { n, d, method } => cmd_pnd(n, d, method),
        Command::VertexCheck { shape, order } => cmd_vertex_check(&shape, order),
        Command::Zdt { chi, d, class, order } => cmd_zdt(chi, d, &class, order),
        Command::Zgw { d, class, genus_cutoff } => cmd_zgw(d, &class, genus_cutoff),
        Command::Verify { suite, degree, genus_cutoff } => cmd_verify(suite, degree, genus_cutoff, exec),
        Command::Quintic { order, genus_cutoff } => cmd_quintic(order, genus_cutoff, exec),
    }
}

/// Parses `args` (including the program name), runs one subcommand and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let format = cli.format;
    match dispatch(cli) {
        Ok(doc) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&doc.json).expect("serializable") + "\n",
                Format::Plain => doc.plain.render(),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            doc.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
