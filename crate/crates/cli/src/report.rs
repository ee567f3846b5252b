use serde_json::{json, Value};

use commalg::approx::{ApproxKind, ApproxResult, NoApproxReason, NoApproxWitness, ObjectClass};
use commalg::comma::{Triple, YExactWitness};
use commalg::gorenstein::{Closing, CompatCondition, GpCertificate, GpStatus, GpVerdict, InexactComplex};
use commalg::homology::ShortExact;
use commalg::module::{Module, Morphism};
use commalg::workspace::{matrix_doc, Document, Workspace};
use commalg::Error;

/// What a subcommand produces: a JSON document, its text rendering and
/// the exit code.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

impl Report {
    pub fn ok(json: Value, text: String) -> Report {
        Report { json, text, code: 0 }
    }

    pub fn negative(json: Value, text: String) -> Report {
        Report { json, text, code: 1 }
    }
}

/// Collects the module documents mentioned by a report, so that the report
/// can be fed back to `define`.
pub struct Ctx<'a> {
    pub ws: &'a Workspace,
    docs: Vec<Value>,
}

impl<'a> Ctx<'a> {
    pub fn new(ws: &'a Workspace) -> Ctx<'a> {
        Ctx { ws, docs: Vec::new() }
    }

    pub fn module(&mut self, role: &str, m: &Module) -> Value {
        let name = format!("{role}{}", self.docs.len());
        let doc = self.ws.doc_of(&name, m);
        self.docs.push(serde_json::to_value(Document::Module(doc)).expect("documents serialize"));
        json!({ "label": self.ws.describe(m), "dims": m.dims(), "document": name })
    }

    pub fn finish(self, mut v: Value) -> Value {
        if let Value::Object(o) = &mut v {
            o.insert("documents".into(), Value::Array(self.docs));
        }
        v
    }
}

pub fn morphism(h: &Morphism) -> Value {
    Value::Array(h.maps().iter().map(|m| json!(matrix_doc(m))).collect())
}

pub fn ses(cx: &mut Ctx, s: &ShortExact) -> Value {
    json!({
        "left": cx.module("left", &s.left),
        "middle": cx.module("middle", &s.middle),
        "right": cx.module("right", &s.right),
        "iota": morphism(&s.iota),
        "pi": morphism(&s.pi),
        "exact": s.is_exact(),
    })
}

pub fn ses_text(ws: &Workspace, s: &ShortExact) -> String {
    format!("0 -> {} -> {} -> {} -> 0", ws.describe(&s.left), ws.describe(&s.middle), ws.describe(&s.right))
}

pub fn class_labels(ws: &Workspace, c: &ObjectClass) -> Vec<String> {
    c.members().iter().map(|m| ws.describe(m)).collect()
}

pub fn class(cx: &mut Ctx, c: &ObjectClass) -> Value {
    let members: Vec<Value> = c.members().iter().map(|m| cx.module("member", m)).collect();
    json!({ "label": c.label(), "size": c.len(), "members": members })
}

pub fn approx(cx: &mut Ctx, r: &ApproxResult) -> Value {
    json!({
        "kind": match r.kind { ApproxKind::Precover => "special precover", ApproxKind::Preenvelope => "special preenvelope" },
        "route": format!("{:?}", r.route),
        "class": r.class_label,
        "sequence": ses(cx, &r.ses),
        "certificates": {
            "exact": r.ses.is_exact(),
            "middle_in_class": r.middle_in_class,
            "orthogonal": r.orthogonal,
            "ext": r.ext_checks.iter().map(|c| json!({ "against": c.against, "dim": c.dim })).collect::<Vec<_>>(),
        },
    })
}

pub fn approx_text(ws: &Workspace, r: &ApproxResult) -> String {
    let kind = match r.kind {
        ApproxKind::Precover => "special precover",
        ApproxKind::Preenvelope => "special preenvelope",
    };
    format!(
        "{kind} for {} via {:?}\n  {}\n  certificates: exact {}, middle in class {}, orthogonal {} ({} Ext checks)",
        r.class_label,
        r.route,
        ses_text(ws, &r.ses),
        r.ses.is_exact(),
        r.middle_in_class,
        r.orthogonal,
        r.ext_checks.len()
    )
}

pub fn triple(cx: &mut Ctx, functor: &str, t: &Triple) -> Value {
    json!({
        "functor": functor,
        "a": cx.module("a", &t.a),
        "b": cx.module("b", &t.b),
        "phi": morphism(&t.phi),
        "phi_monic": t.phi.is_mono(),
    })
}

pub fn triple_text(ws: &Workspace, t: &Triple) -> String {
    format!("(A = {}, B = {}, phi {})", ws.describe(&t.a), ws.describe(&t.b), if t.phi.is_mono() { "monic" } else { "not monic" })
}

fn no_approx(cx: &mut Ctx, w: &NoApproxWitness) -> Value {
    let reason = match &w.reason {
        NoApproxReason::NotEpi { rank_defect } => json!({ "not_epi": { "rank_defect": rank_defect } }),
        NoApproxReason::NotMono { kernel_dim } => json!({ "not_mono": { "kernel_dim": kernel_dim } }),
        NoApproxReason::NotOrthogonal { member, ext_dim } => {
            json!({ "not_orthogonal": { "member": cx.module("member", member), "ext_dim": ext_dim } })
        }
    };
    json!({
        "target": cx.module("target", &w.target),
        "class": w.class_label,
        "minimal_approximation": {
            "source": cx.module("source", w.minimal_approximation.source()),
            "target": cx.module("approx_target", w.minimal_approximation.target()),
            "map": morphism(&w.minimal_approximation),
        },
        "reason": reason,
    })
}

pub fn yexact_witness(cx: &mut Ctx, w: &YExactWitness) -> Value {
    json!({ "y": cx.module("y", &w.y), "tor1": w.tor1, "defect": w.defect, "sequence": ses(cx, &w.ses) })
}

/// Renders an error, attaching the certificate carried by negative results.
pub fn error(ws: &Workspace, e: &Error) -> Report {
    let mut cx = Ctx::new(ws);
    let certificate = match e {
        Error::NoSpecialPrecover(w) | Error::NoSpecialPreenvelope(w) => no_approx(&mut cx, w),
        Error::PreconditionYExact(w) => yexact_witness(&mut cx, w),
        _ => Value::Null,
    };
    let text = match e {
        Error::NoSpecialPrecover(w) | Error::NoSpecialPreenvelope(w) => {
            let what = if matches!(e, Error::NoSpecialPrecover(_)) { "precover" } else { "preenvelope" };
            let detail = match &w.reason {
                NoApproxReason::NotOrthogonal { member, ext_dim } => match w.kind {
                    ApproxKind::Precover => format!("its kernel K has dim Ext^1({}, K) = {ext_dim}", ws.describe(member)),
                    ApproxKind::Preenvelope => format!("its cokernel C has dim Ext^1(C, {}) = {ext_dim}", ws.describe(member)),
                },
                NoApproxReason::NotEpi { rank_defect } => format!("it misses {rank_defect} dimensions of the target"),
                NoApproxReason::NotMono { kernel_dim } => format!("it has a {kernel_dim}-dimensional kernel"),
            };
            let approx = match w.kind {
                ApproxKind::Precover => format!("{} -> {}", ws.describe(w.minimal_approximation.source()), ws.describe(&w.target)),
                ApproxKind::Preenvelope => format!("{} -> {}", ws.describe(&w.target), ws.describe(w.minimal_approximation.target())),
            };
            format!("no special {what} of {} by {}: the minimal approximation is {approx} and {detail}", ws.describe(&w.target), w.class_label)
        }
        other => format!("error: {other}"),
    };
    let json = cx.finish(json!({ "error": { "code": e.exit_code(), "message": e.to_string(), "certificate": certificate } }));
    Report { json, text, code: e.exit_code() }
}

pub fn gp_verdict(cx: &mut Ctx, v: &GpVerdict) -> Value {
    let status = match &v.status {
        GpStatus::Certified => json!("certified"),
        GpStatus::UpToBound(n) => json!({ "up_to_bound": n }),
        GpStatus::Refuted(r) => json!({ "refuted": r.to_string() }),
    };
    let certificate = match &v.certificate {
        GpCertificate::Projective => json!({ "projective": true }),
        GpCertificate::Chain(c) => {
            let steps: Vec<Value> = c.steps.iter().map(|s| ses(cx, s)).collect();
            let closing = match &c.closing {
                Closing::Zero => json!("zero"),
                Closing::Cycle { start, iso } => json!({ "cycle_start": start, "iso": morphism(iso) }),
            };
            json!({
                "period": c.period(),
                "steps": steps,
                "closing": closing,
                "differentials": c.differentials().iter().map(morphism).collect::<Vec<_>>(),
                "verified": c.verify().unwrap_or(false),
            })
        }
        GpCertificate::None => Value::Null,
    };
    json!({ "status": status, "certificate": certificate })
}

fn inexact(ic: &InexactComplex) -> Value {
    json!({
        "complex": ic.render(),
        "position": ic.position,
        "homology_dim": ic.homology_dim,
        "differentials": ic.differentials.iter().map(morphism).collect::<Vec<_>>(),
        "tensored": ic.tensored.iter().map(morphism).collect::<Vec<_>>(),
    })
}

pub fn condition(c: &CompatCondition) -> Value {
    json!({
        "holds": c.holds,
        "method": c.method.to_string(),
        "witness": c.witness.as_ref().map(inexact),
        "note": c.note,
    })
}

pub fn condition_text(name: &str, c: &CompatCondition) -> String {
    let mut s = format!("{name}: {} ({})", if c.holds { "holds" } else { "fails" }, c.method);
    if let Some(w) = &c.witness {
        s.push_str(&format!("\n    T(Q) = {}", w.render()));
    }
    if let Some(n) = &c.note {
        s.push_str(&format!("\n    {n}"));
    }
    s
}
