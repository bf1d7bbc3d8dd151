//! Plain-text reports as `key = value` lines in a fixed order.

use std::fmt::Write;

use tarkit_core::bounds::{BoundReport, DisconnectedOutcome, Theorem1Outcome};
use tarkit_core::optimizer::OptResult;
use tarkit_core::reduction::{Audit, ReductionOutput};
use tarkit_core::{TarValue, Threshold};

/// `TAR = 90.000000; vs60=ABOVE vs90=EQUAL vs120=BELOW`
pub fn tar_line(t: &TarValue) -> String {
    format!(
        "TAR = {t}; vs60={} vs90={} vs120={}",
        t.classify(Threshold::Deg60),
        t.classify(Threshold::Deg90),
        t.classify(Threshold::Deg120)
    )
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

pub fn bound_report(r: &BoundReport) -> String {
    let mut s = String::new();
    write_bound(&mut s, r, "");
    s
}

fn write_bound(s: &mut String, r: &BoundReport, indent: &str) {
    let _ = writeln!(s, "{indent}[{}]", r.statement);
    let _ = writeln!(s, "{indent}n = {}", r.n);
    let _ = writeln!(s, "{indent}m = {}", r.m);
    let _ = writeln!(s, "{indent}k = {}", opt(r.k));
    let _ = writeln!(s, "{indent}p = {}", opt(r.p));
    let _ = writeln!(s, "{indent}value = {}", r.value);
    let _ = writeln!(s, "{indent}bound = {}", r.bound);
    let _ = writeln!(s, "{indent}holds = {}", r.holds);
    let _ = writeln!(s, "{indent}tar_vs60 = {}", r.tar_class_60);
    let _ = writeln!(s, "{indent}refutes = {}", r.refutes());
    for (i, c) in r.components.iter().enumerate() {
        let _ = writeln!(s, "{indent}component = {i}");
        write_bound(s, c, &format!("{indent}  "));
    }
}

pub fn theorem1_report(o: &Theorem1Outcome) -> String {
    let mut s = String::from("[theorem1]\n");
    match o {
        Theorem1Outcome::BoundHolds { n, m, bound } => {
            let _ = write!(s, "outcome = BOUND_HOLDS\nn = {n}\nm = {m}\nbound = {bound}\n");
        }
        Theorem1Outcome::Exception(id) => {
            let _ = writeln!(s, "outcome = EXCEPTION\nexception = {id}");
        }
        Theorem1Outcome::ExceedsBound { witness_class } => {
            let c = witness_class.map_or("-", |c| c.as_str());
            let _ = writeln!(s, "outcome = EXCEEDS_BOUND\nwitness_vs60 = {c}");
        }
        Theorem1Outcome::RefutedWitness => {
            let _ = writeln!(s, "outcome = REFUTED\nwitness_vs60 = ABOVE");
        }
    }
    s
}

pub fn disconnected_report(o: &DisconnectedOutcome) -> String {
    match o {
        DisconnectedOutcome::Exception(id) => format!("[disconnected]\noutcome = EXCEPTION\nexception = {id}\n"),
        DisconnectedOutcome::Report(r) => bound_report(r),
    }
}

pub fn opt_report(r: &OptResult) -> String {
    let mut s = String::from("[optimize]\n");
    let _ = writeln!(s, "n = {}", r.best.n());
    let _ = writeln!(s, "m = {}", r.best.m());
    let _ = writeln!(s, "best_tar = {}", r.best_tar);
    let _ = writeln!(s, "vs60 = {}", r.exact_class_60);
    let _ = writeln!(s, "vs90 = {}", r.exact_class_90);
    let _ = writeln!(s, "vs120 = {}", r.exact_class_120);
    let trace: Vec<String> = r.trace.iter().map(|t| format!("{t:.6}")).collect();
    let _ = writeln!(s, "restarts = {}", r.trace.len());
    let _ = writeln!(s, "trace = {}", trace.join(" "));
    s
}

pub fn audit_report(a: &Audit) -> String {
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let mut s = String::from("[audit]\n");
    let _ = writeln!(s, "vertices = {}", a.vertices);
    let _ = writeln!(s, "edges = {}", a.edges);
    let _ = writeln!(s, "triangles = {}", a.triangles);
    let _ = writeln!(s, "bottom_triangles = {}", a.bottom_triangles);
    let _ = writeln!(s, "top_triangles = {}", a.top_triangles);
    let _ = writeln!(s, "clause_triangles = {}", list(&a.clause_triangles));
    let _ = writeln!(s, "variable_triangles = {}", list(&a.variable_triangles));
    let _ = writeln!(s, "hexagons = {}", list(&a.hexagons));
    let _ = writeln!(s, "connector_triangles = {}", list(&a.connector_triangles));
    let _ = writeln!(s, "path_edges = {}", list(&a.path_edges));
    s
}

/// Graph, named vertices and audit of a reduction. Indices are 1-based for
/// variables and clauses, 0-based for vertices.
pub fn reduction_report(r: &ReductionOutput) -> String {
    let ro = &r.roles;
    let mut s = String::from("[reduction]\n");
    let _ = writeln!(s, "variables = {}", r.instance.num_vars());
    let _ = writeln!(s, "clauses = {}", r.instance.num_clauses());
    let _ = writeln!(s, "n = {}", r.graph.n());
    let _ = writeln!(s, "m = {}", r.graph.m());
    let edges: Vec<String> = r.graph.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    let _ = writeln!(s, "edges = {}", edges.join(" "));
    let _ = writeln!(s, "B1 = {}", ro.b1);
    let _ = writeln!(s, "B2 = {}", ro.b2);
    for (j, c) in ro.clause_vertex.iter().enumerate() {
        let _ = writeln!(s, "C{} = {c}", j + 1);
    }
    for i in 0..r.instance.num_vars() {
        let [a1, a2, a4] = ro.anchors[i];
        let _ = writeln!(s, "X{} = {}", i + 1, ro.x[i]);
        let _ = writeln!(s, "X'{} = {}", i + 1, ro.x_prime[i]);
        let _ = writeln!(s, "A{0},1 = {a1}\nA{0},2 = {a2}\nA{0},4 = {a4}", i + 1);
        for j in 0..r.instance.num_clauses() {
            let _ = writeln!(s, "X{},{} = {}", i + 1, j + 1, ro.pos_literal[i][j]);
            let _ = writeln!(s, "-X{},{} = {}", i + 1, j + 1, ro.neg_literal[i][j]);
        }
    }
    for p in &ro.paths {
        let v: Vec<String> = p.vertices.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "path C{} {} = {}", p.clause + 1, p.literal, v.join("-"));
    }
    s + &audit_report(&r.audit())
}
