//! Text and JSON rendering of functors, presentations and reports.

use serde_json::{json, Value};

use khom_core::assemble::{Answer, GradedAnswer};
use khom_core::verify::Report;
use khom_core::{MackeyFunctor, Mat, Presentation};

pub struct NamedPresentation {
    pub subgroup: String,
    pub presentation: Presentation,
}

pub fn matrix(m: &Mat, indent: &str) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("{indent}({}x{} empty)\n", m.rows(), m.cols());
    }
    let rows = m.to_rows();
    let width = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| format!("{x:>width$}")).collect();
            format!("{indent}[{}]\n", cells.join(" "))
        })
        .collect()
}

/// One block per subgroup, then restriction and transfer along covering pairs.
pub fn functor_text(m: &MackeyFunctor) -> String {
    let lat = &m.lattice;
    let mut s = String::new();
    for k in 0..lat.len() {
        let l = m.level(k);
        s.push_str(&format!("  {} (order {}): {}\n", lat.sub(k).label(), lat.order(k), l.fg()));
        for (label, o) in l.labels.iter().zip(&l.orders) {
            let ord = if *o == 0 { "free".to_string() } else { format!("order {o}") };
            s.push_str(&format!("      {label}  [{ord}]\n"));
        }
    }
    for k in 0..lat.len() {
        for &t in lat.maximal(k) {
            let (a, b) = (lat.sub(t).label(), lat.sub(k).label());
            s.push_str(&format!("  res {b} -> {a}\n{}", matrix(&m.res(t, k), "    ")));
            s.push_str(&format!("  tr  {a} -> {b}\n{}", matrix(&m.tr(t, k), "    ")));
        }
    }
    s
}

pub fn answer_text(a: &GradedAnswer) -> String {
    let mut s = format!("group {}  {:?}\n", a.group, a.mode);
    match &a.result {
        Answer::Functor(m) => s.push_str(&functor_text(m)),
        Answer::Symbolic(sp) => {
            s.push_str(&format!("  symbolic: {}\n", sp.formula));
            for (name, r) in sp.subgroups.iter().zip(&sp.ranks) {
                s.push_str(&format!("  {name}: r = {r}\n"));
            }
        }
    }
    for n in &a.notes {
        s.push_str(&format!("  note: {n}\n"));
    }
    s
}

fn relation_rows(p: &Presentation) -> Vec<Vec<String>> {
    let r = &p.relations;
    (0..r.rows()).map(|i| (0..r.cols()).map(|j| r.get(i, j).to_string()).collect()).collect()
}

pub fn presentation_text(np: &NamedPresentation) -> String {
    let p = &np.presentation;
    let mut s = format!("presentation at {} ({} relations)\n", np.subgroup, p.relations.cols());
    for ((label, o), row) in p.labels.iter().zip(&p.gen_orders).zip(relation_rows(p)) {
        let ord = if *o == 0 { String::new() } else { format!(" (order {o})") };
        s.push_str(&format!("  {label}{ord}: [{}]\n", row.join(" ")));
    }
    s
}

pub fn presentation_json(np: &NamedPresentation) -> Value {
    let p = &np.presentation;
    json!({
        "subgroup": np.subgroup,
        "generators": p.labels,
        "generator_orders": p.gen_orders,
        "relations": relation_rows(p),
    })
}

pub fn report_text(r: &Report) -> String {
    let mut s = format!("{}\n", r.summary());
    for c in &r.cases {
        s.push_str(&format!("  {} {}  {}\n", if c.ok { "ok  " } else { "FAIL" }, c.name, c.detail));
    }
    s
}
