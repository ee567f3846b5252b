mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commalg::approx::{
    check_cotorsion_pair, check_frobenius, extension_closure, perp_left, perp_right, special_precover,
    special_preenvelope, transfer_precover_comma, transfer_preenvelope_comma, ApproxOptions, TransferData,
};
use commalg::decompose::enumerate_indecomposables;
use commalg::gorenstein::{
    check_compatibility, gp_class_of, gp_precover_comma, is_gorenstein_projective, is_gp_triple, GpStatus,
};
use commalg::homology::ext;
use commalg::workspace::{parse_documents, Workspace};
use commalg::{Error, Result};

use report::{Ctx, Report};

#[derive(Parser)]
#[command(name = "commalg", version, about = "Comma categories, cotorsion pairs and Gorenstein projectives over quiver algebras")]
struct Cli {
    /// Directory of JSON documents; built-in algebras are always available.
    #[arg(long, env = "COMMALG_WORKSPACE", global = true)]
    workspace: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Total dimension cap for enumerated indecomposables.
    #[arg(long, default_value_t = 6, global = true)]
    cap: usize,
    /// Degree bound for Ext vanishing and GP detection.
    #[arg(long, default_value_t = 8, global = true)]
    bound: usize,
    /// Rounds of universal extensions or closure steps.
    #[arg(long, default_value_t = 16, global = true)]
    iter: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Precover,
    Preenvelope,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a document file and copy it into the workspace.
    Define { file: PathBuf },
    /// List the indecomposables of an algebra up to the cap.
    Indec { algebra: String },
    /// Dimension of Ext^i(M, N).
    Ext {
        m: String,
        n: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Right (or left) Ext-orthogonal of a class among the indecomposables.
    Perp {
        class: String,
        #[arg(long)]
        left: bool,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Closure of a class under extensions and summands.
    Closure {
        class: String,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Triangular split of a monomial algebra along a vertex set.
    Split {
        algebra: String,
        /// Vertices on the R side, comma separated.
        #[arg(long, value_delimiter = ',')]
        left: Vec<String>,
    },
    /// Triple of a comma-algebra or split-algebra module.
    ToTriple {
        module: String,
        #[arg(long)]
        functor: Option<String>,
    },
    /// Module of a triple.
    ToModule {
        triple: String,
        #[arg(long)]
        functor: Option<String>,
    },
    /// Whether T is exact on sequences ending in the class.
    Yexact { functor: String, class: String },
    /// Cotorsion pair report.
    PairCheck {
        left: String,
        right: String,
        #[arg(long)]
        algebra: Option<String>,
        /// Also construct approximations of every indecomposable.
        #[arg(long)]
        complete: bool,
    },
    /// Special precover of a module.
    Precover {
        target: String,
        class: String,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Special preenvelope of a module.
    Preenvelope {
        target: String,
        class: String,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Approximation of a triple transferred from classes over R and S.
    Transfer {
        triple: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        functor: Option<String>,
        #[arg(long, value_enum, default_value = "precover")]
        mode: Mode,
    },
    /// Gorenstein projective verdict for a module or triple.
    Gp {
        object: String,
        #[arg(long)]
        algebra: Option<String>,
        /// Treat the object as a triple of this functor and use the triple
        /// characterization, cross-checked by direct detection.
        #[arg(long)]
        functor: Option<String>,
    },
    /// Certified Gorenstein projectives among the indecomposables.
    GpClass { algebra: String },
    /// Compatibility conditions of a functor.
    Compat { functor: String },
    /// Special Gorenstein projective precover of a triple.
    GpPrecover {
        triple: String,
        #[arg(long)]
        functor: Option<String>,
    },
    /// Frobenius criterion for the monomorphism-type subcategory.
    Frobenius { functor: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ws = Workspace::with_builtins(cli.cap, cli.bound);
    let loaded = match &cli.workspace {
        Some(dir) => ws.load_dir(dir).map(|_| ()),
        None => Ok(()),
    };
    let report = match loaded.and_then(|_| run(&cli, &mut ws)) {
        Ok(r) => r,
        Err(e) => report::error(&ws, &e),
    };
    let out = match cli.format {
        Format::Text => report.text,
        Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialize"),
    };
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout().lock(), "{out}");
    ExitCode::from(report.code as u8)
}

fn ambient(ws: &Workspace, alg: &str, cap: usize) -> Result<Vec<commalg::module::Module>> {
    enumerate_indecomposables(ws.algebra(alg)?, cap)
}

fn run(cli: &Cli, ws: &mut Workspace) -> Result<Report> {
    let opts = ApproxOptions { iteration_cap: cli.iter };
    let cap = cli.cap;
    match &cli.command {
        Command::Define { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Error::Io { path: file.display().to_string(), source: e })?;
            let names = ws.add_all(parse_documents(&text)?)?;
            if let Some(dir) = &cli.workspace {
                let dest = dir.join(file.file_name().ok_or_else(|| Error::Invalid("file has no name".into()))?);
                if dest != *file {
                    std::fs::write(&dest, &text).map_err(|e| Error::Io { path: dest.display().to_string(), source: e })?;
                }
            }
            Ok(Report::ok(json!({ "defined": names }), format!("defined {}", names.join(", "))))
        }
        Command::Indec { algebra } => {
            let all = ambient(ws, algebra, cap)?;
            let mut cx = Ctx::new(ws);
            let mods: Vec<_> = all.iter().map(|m| cx.module("indec", m)).collect();
            let text = std::iter::once(format!("{} indecomposables of {algebra} up to dimension {cap}", all.len()))
                .chain(all.iter().enumerate().map(|(i, m)| format!("  {i}: {} {}", ws.describe(m), m)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Report::ok(cx.finish(json!({ "algebra": algebra, "cap": cap, "count": all.len(), "modules": mods })), text))
        }
        Command::Ext { m, n, degree, algebra } => {
            let a = ws.module(m, algebra.as_deref())?;
            let b = ws.module(n, algebra.as_deref())?;
            let d = ext(&a, &b, *degree)?.dim();
            let text = format!("dim Ext^{degree}({}, {}) = {d}", ws.describe(&a), ws.describe(&b));
            Ok(Report::ok(json!({ "degree": degree, "dim": d }), text))
        }
        Command::Perp { class, left, algebra } => {
            let c = ws.class(class, algebra.as_deref())?;
            let alg_name = ws.algebra_name(c.algebra());
            let amb = ambient(ws, &alg_name, cap)?;
            let p = if *left { perp_left(&c, &amb)? } else { perp_right(&c, &amb)? };
            let labels = report::class_labels(ws, &p);
            let mut cx = Ctx::new(ws);
            let v = report::class(&mut cx, &p);
            Ok(Report::ok(cx.finish(json!({ "class": class, "left": left, "perp": v })), format!("{} = {{{}}}", p.label(), labels.join(", "))))
        }
        Command::Closure { class, algebra } => {
            let c = ws.class(class, algebra.as_deref())?;
            let cl = extension_closure(&c, cap, cli.iter)?;
            let labels = report::class_labels(ws, &cl);
            let mut cx = Ctx::new(ws);
            let v = report::class(&mut cx, &cl);
            Ok(Report::ok(cx.finish(json!({ "closure": v })), format!("{} = {{{}}}", cl.label(), labels.join(", "))))
        }
        Command::Split { algebra, left } => {
            let m = ws.monomial(algebra)?;
            let names: Vec<&str> = left.iter().map(String::as_str).collect();
            let sp = commalg::comma::TriangularSplit::by_names(m, &names)?;
            let json = json!({
                "r": { "vertices": sp.r().quiver().vertices(), "dim": sp.r().dim() },
                "s": { "vertices": sp.s().quiver().vertices(), "dim": sp.s().dim() },
                "bimodule_dims": sp.bimodule().dims(),
                "comma_dim": sp.comma.algebra().dim(),
            });
            let text = format!(
                "R = {} (dim {}), S = {} (dim {}), M has dimension {} graded as {:?}",
                sp.r().name(),
                sp.r().dim(),
                sp.s().name(),
                sp.s().dim(),
                sp.bimodule().total_dim(),
                sp.bimodule().dims()
            );
            Ok(Report::ok(json, text))
        }
        Command::ToTriple { module, functor } => {
            let (f, t) = ws.triple(module, functor.as_deref())?;
            let text = report::triple_text(ws, &t);
            let mut cx = Ctx::new(ws);
            let v = report::triple(&mut cx, &f, &t);
            Ok(Report::ok(cx.finish(v), text))
        }
        Command::ToModule { triple, functor } => {
            let (f, t) = ws.triple(triple, functor.as_deref())?;
            let entry = ws.functor(&f)?;
            let m = match &entry.split {
                Some(sp) => sp.triple_to_module(&t),
                None => entry.comma.to_module(&t),
            };
            let text = format!("{} {}", ws.describe(&m), m);
            let mut cx = Ctx::new(ws);
            let v = cx.module("module", &m);
            Ok(Report::ok(cx.finish(json!({ "module": v })), text))
        }
        Command::Yexact { functor, class } => {
            let comma = ws.functor(functor)?.comma.clone();
            let c = ws.class(class, Some(&format!("{functor}.S")))?;
            let rep = comma.check_y_exact(&c)?;
            let mut cx = Ctx::new(ws);
            let witness = rep.witness.as_ref().map(|w| report::yexact_witness(&mut cx, w));
            let json = cx.finish(json!({ "exact": rep.is_exact(), "tor1": rep.tor1, "witness": witness }));
            match &rep.witness {
                None => Ok(Report::ok(json, format!("T is exact on {}", c.label()))),
                Some(w) => Ok(Report::negative(
                    json,
                    format!("T is not exact on {}: {}", c.label(), report::ses_text(ws, &w.ses)) + &format!(" (T of the first map has a {}-dimensional kernel)", w.defect),
                )),
            }
        }
        Command::PairCheck { left, right, algebra, complete } => {
            let l = ws.class(left, algebra.as_deref())?;
            let alg_name = ws.algebra_name(l.algebra());
            let r = ws.class(right, Some(&alg_name))?;
            let amb = ambient(ws, &alg_name, cap)?;
            let rep = check_cotorsion_pair(&l, &r, &amb, cli.bound, *complete)?;
            let labels = |ms: &[commalg::module::Module]| ms.iter().map(|m| ws.describe(m)).collect::<Vec<_>>();
            let json = json!({
                "cotorsion_pair": rep.is_cotorsion_pair(),
                "right_is_perp": rep.right_is_perp,
                "left_is_perp": rep.left_is_perp,
                "right_missing": labels(&rep.right_missing),
                "right_extra": labels(&rep.right_extra),
                "left_missing": labels(&rep.left_missing),
                "left_extra": labels(&rep.left_extra),
                "hereditary": rep.hereditary,
                "bound": rep.bound,
                "left_has_projectives": rep.left_has_projectives,
                "right_has_injectives": rep.right_has_injectives,
                "complete": rep.complete,
            });
            let text = format!(
                "cotorsion pair: {} (right = left^perp: {}, left = ^perp right: {}), hereditary up to {}: {}",
                rep.is_cotorsion_pair(),
                rep.right_is_perp,
                rep.left_is_perp,
                rep.bound,
                rep.hereditary
            );
            Ok(if rep.is_cotorsion_pair() { Report::ok(json, text) } else { Report::negative(json, text) })
        }
        Command::Precover { target, class, algebra } => {
            let c = ws.class(class, algebra.as_deref())?;
            let alg_name = ws.algebra_name(c.algebra());
            let m = ws.module(target, Some(&alg_name))?;
            let r = special_precover(&m, &c, &opts)?;
            let text = report::approx_text(ws, &r);
            let mut cx = Ctx::new(ws);
            let v = report::approx(&mut cx, &r);
            Ok(Report::ok(cx.finish(v), text))
        }
        Command::Preenvelope { target, class, algebra } => {
            let c = ws.class(class, algebra.as_deref())?;
            let alg_name = ws.algebra_name(c.algebra());
            let m = ws.module(target, Some(&alg_name))?;
            let amb = ambient(ws, &alg_name, cap)?;
            let r = special_preenvelope(&m, &c, &amb, &opts)?;
            let text = report::approx_text(ws, &r);
            let mut cx = Ctx::new(ws);
            let v = report::approx(&mut cx, &r);
            Ok(Report::ok(cx.finish(v), text))
        }
        Command::Transfer { triple, x, y, functor, mode } => {
            let (f, t) = ws.triple(triple, functor.as_deref())?;
            let comma = ws.functor(&f)?.comma.clone();
            let xc = ws.class(x, Some(&format!("{f}.R")))?;
            let yc = ws.class(y, Some(&format!("{f}.S")))?;
            let data = TransferData::new(&xc, &yc, &ambient(ws, &format!("{f}.R"), cap)?, &ambient(ws, &format!("{f}.S"), cap)?)?;
            let res = match mode {
                Mode::Precover => transfer_precover_comma(&comma, &t, &data, &opts)?,
                Mode::Preenvelope => transfer_preenvelope_comma(&comma, &t, &data, &opts)?,
            };
            let text = format!(
                "{}\n  middle triple {}\n  converse hypotheses: T(Y ∩ Y^perp) ⊆ X^perp {}, ⊆ X {}",
                report::approx_text(ws, &res.approx),
                report::triple_text(ws, &res.middle),
                res.converse.into_x_perp,
                res.converse.into_x
            );
            let mut cx = Ctx::new(ws);
            let v = json!({
                "approximation": report::approx(&mut cx, &res.approx),
                "left": report::triple(&mut cx, &f, &res.left),
                "middle": report::triple(&mut cx, &f, &res.middle),
                "right": report::triple(&mut cx, &f, &res.right),
                "converse": { "into_x_perp": res.converse.into_x_perp, "into_x": res.converse.into_x },
            });
            Ok(Report::ok(cx.finish(v), text))
        }
        Command::Gp { object, algebra, functor } => {
            if let Some(fname) = functor {
                let (f, t) = ws.triple(object, Some(fname))?;
                let comma = ws.functor(&f)?.comma.clone();
                let compat = check_compatibility(&comma, cap, cli.bound)?;
                let gp_r = gp_class_of(comma.r(), &ambient(ws, &format!("{f}.R"), cap)?, cli.bound)?;
                let gp_s = gp_class_of(comma.s(), &ambient(ws, &format!("{f}.S"), cap)?, cli.bound)?;
                let v = is_gp_triple(&comma, &t, &gp_r, &gp_s, &compat, Some(cli.bound))?;
                let mut cx = Ctx::new(ws);
                let direct = v.direct.as_ref().map(|d| report::gp_verdict(&mut cx, d));
                let json = cx.finish(json!({
                    "gorenstein_projective": v.is_gp(),
                    "phi_monic": v.phi_monic,
                    "cokernel_gp": v.cokernel_gp,
                    "b_gp": v.b_gp,
                    "direct": direct,
                    "agrees": v.agrees(),
                }));
                let text = format!(
                    "triple characterization: {} (phi monic {}, coker GP {}, B GP {}); direct detection: {}",
                    if v.is_gp() { "Gorenstein projective" } else { "not Gorenstein projective" },
                    v.phi_monic,
                    v.cokernel_gp,
                    v.b_gp,
                    v.direct.as_ref().map(|d| d.to_string()).unwrap_or_else(|| "skipped".into())
                );
                return Ok(if v.is_gp() { Report::ok(json, text) } else { Report::negative(json, text) });
            }
            let m = ws.module(object, algebra.as_deref())?;
            let v = is_gorenstein_projective(&m, cli.bound)?;
            let text = format!("{}: {v}", ws.describe(&m));
            let mut cx = Ctx::new(ws);
            let verdict = report::gp_verdict(&mut cx, &v);
            let json = cx.finish(verdict);
            Ok(match v.status {
                GpStatus::Certified => Report::ok(json, text),
                GpStatus::Refuted(_) => Report::negative(json, text),
                GpStatus::UpToBound(_) => Report { json, text, code: 3 },
            })
        }
        Command::GpClass { algebra } => {
            let alg = ws.algebra(algebra)?.clone();
            let g = gp_class_of(&alg, &ambient(ws, algebra, cap)?, cli.bound)?;
            let mut lines = vec![format!("GP({algebra}) = {{{}}}", report::class_labels(ws, &g.class).join(", "))];
            for (m, v) in &g.table {
                lines.push(format!("  {}: {v}", ws.describe(m)));
            }
            let mut cx = Ctx::new(ws);
            let table: Vec<_> = g.table.iter().map(|(m, v)| json!({ "module": cx.module("m", m), "verdict": report::gp_verdict(&mut cx, v) })).collect();
            let undecided: Vec<_> = g.undecided.iter().map(|m| cx.module("undecided", m)).collect();
            let class = report::class(&mut cx, &g.class);
            Ok(Report::ok(cx.finish(json!({ "class": class, "table": table, "undecided": undecided })), lines.join("\n")))
        }
        Command::Compat { functor } => {
            let comma = ws.functor(functor)?.comma.clone();
            let c = check_compatibility(&comma, cap, cli.bound)?;
            let json = json!({
                "compatible": c.compatible(),
                "weak_compatible": c.weak_compatible(),
                "c1": report::condition(&c.c1),
                "c2": report::condition(&c.c2),
                "w1": report::condition(&c.w1),
            });
            let text = format!(
                "compatible: {}, weak compatible: {}\n  {}\n  {}\n  {}",
                c.compatible(),
                c.weak_compatible(),
                report::condition_text("C1", &c.c1),
                report::condition_text("C2", &c.c2),
                report::condition_text("W1", &c.w1)
            );
            Ok(if c.compatible() { Report::ok(json, text) } else { Report::negative(json, text) })
        }
        Command::GpPrecover { triple, functor } => {
            let (f, t) = ws.triple(triple, functor.as_deref())?;
            let comma = ws.functor(&f)?.comma.clone();
            let compat = check_compatibility(&comma, cap, cli.bound)?;
            let ar = ambient(ws, &format!("{f}.R"), cap)?;
            let as_ = ambient(ws, &format!("{f}.S"), cap)?;
            let gp_r = gp_class_of(comma.r(), &ar, cli.bound)?;
            let gp_s = gp_class_of(comma.s(), &as_, cli.bound)?;
            let res = gp_precover_comma(&comma, &t, &gp_r, &gp_s, &compat, &ar, &as_, &opts)?;
            let text = format!("{}\n  middle triple {}", report::approx_text(ws, &res.approx), report::triple_text(ws, &res.middle));
            let mut cx = Ctx::new(ws);
            let v = json!({
                "approximation": report::approx(&mut cx, &res.approx),
                "middle": report::triple(&mut cx, &f, &res.middle),
                "kernel": report::triple(&mut cx, &f, &res.left),
            });
            Ok(Report::ok(cx.finish(v), text))
        }
        Command::Frobenius { functor } => {
            let comma = ws.functor(functor)?.comma.clone();
            let amb = ambient(ws, &format!("{functor}.comma"), cap)?;
            let ar = ambient(ws, &format!("{functor}.R"), cap)?;
            let as_ = ambient(ws, &format!("{functor}.S"), cap)?;
            let f = check_frobenius(&comma, &amb, &ar, &as_)?;
            let json = json!({
                "comma_frobenius": f.comma_frobenius,
                "r_frobenius": f.r_frobenius,
                "s_frobenius": f.s_frobenius,
                "preserves_projectives": f.preserves_projectives,
                "agree": f.agree(),
            });
            let text = format!(
                "monic triples form a Frobenius category: {}; R, S Frobenius: {}, {}; T preserves projectives: {}; criterion agrees: {}",
                f.comma_frobenius, f.r_frobenius, f.s_frobenius, f.preserves_projectives, f.agree()
            );
            Ok(if f.comma_frobenius { Report::ok(json, text) } else { Report::negative(json, text) })
        }
    }
}
