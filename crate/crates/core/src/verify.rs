//! Batch checker over all coprime pairs up to a bound.
//!
//! Proven statements are hard checks and fail the run. Open statements are
//! conjecture checks: they report either that they held or a counterexample,
//! and never fail the run.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;
use serde_json::json;

use crate::algebra::{BivariatePolynomial, Var};
use crate::bounce::{bounce_path, bounce_tree, reconstruct, BounceShape, Node};
use crate::cores::{
    count_self_dual_semimodules, is_p_core, q_catalan_at_minus_one, self_conjugate_formula,
    semimodule_to_core,
};
use crate::diagrams::{
    enumerate_below_diagonal, fits_below_diagonal, gcd, h_plus, qt_catalan_with,
    rational_catalan_count, Frame, Partition,
};
use crate::error::Result;
use crate::gmaps::{check_consecutive_coincidence, check_transpose_duality, g_columns, g_frame, g_map};
use crate::semimodules::{diagonal_labels, enumerate_semimodules, Semimodule};
use crate::smallsym::{involution, phi, phi_inverse, triangle_points, StatPair};

/// The `h+` statistic used by the checks; replaceable for self-tests.
pub type Statistic = fn(&Partition, &Frame) -> u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Hard,
    Conjecture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ConjectureHolds,
    Counterexample,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ConjectureHolds => "conjecture-holds",
            Status::Counterexample => "counterexample",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub m: u32,
    pub n: u32,
    pub check: &'static str,
    pub kind: Kind,
    pub status: Status,
    pub witness: String,
}

impl Record {
    fn to_json(&self) -> serde_json::Value {
        let mut v = json!({
            "m": self.m,
            "n": self.n,
            "check": self.check,
            "kind": self.kind,
            "status": self.status,
        });
        match self.status {
            Status::Fail => v["witness"] = json!(self.witness),
            Status::Counterexample => {
                v["counterexample"] = json!({ "m": self.m, "n": self.n, "witness": self.witness })
            }
            _ => {}
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub max_sum: u32,
    pub records: Vec<Record>,
}

impl Report {
    pub fn hard_failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Counterexample)
    }

    pub fn passed(&self) -> bool {
        self.hard_failures().next().is_none()
    }

    pub fn pairs(&self) -> usize {
        self.records.iter().map(|r| (r.m, r.n)).collect::<BTreeSet<_>>().len()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = write!(out, "({},{}) {} {}", r.m, r.n, r.check, r.status.as_str());
            if !r.witness.is_empty() {
                let _ = write!(out, " {}", r.witness);
            }
            out.push('\n');
        }
        let hard = self.records.iter().filter(|r| r.kind == Kind::Hard).count();
        let _ = writeln!(
            out,
            "pairs={} hard={} failures={} conjectures={} counterexamples={}",
            self.pairs(),
            hard,
            self.hard_failures().count(),
            self.records.len() - hard,
            self.counterexamples().count(),
        );
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "max_sum": self.max_sum,
            "pairs": self.pairs(),
            "hard_failures": self.hard_failures().count(),
            "counterexamples": self.counterexamples().count(),
            "records": self.records.iter().map(Record::to_json).collect::<Vec<_>>(),
        })
    }

    /// Columns `m,n,check,status,witness`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,n,check,status,witness\n");
        for r in &self.records {
            let w = r.witness.replace('"', "\"\"");
            let _ = writeln!(out, "{},{},{},{},\"{}\"", r.m, r.n, r.check, r.status.as_str(), w);
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub max_sum: u32,
    pub threads: usize,
    pub statistic: Statistic,
}

impl Options {
    pub fn new(max_sum: u32) -> Self {
        Options { max_sum, threads: 1, statistic: h_plus }
    }
}

/// Worker count from `RATCAT_THREADS`, default 1.
pub fn threads_from_env() -> usize {
    std::env::var("RATCAT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

/// Ordered coprime pairs `(m, n)`, `m, n >= 1`, `m + n <= max_sum`.
pub fn coprime_pairs(max_sum: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for s in 2..=max_sum {
        for m in 1..s {
            let n = s - m;
            if gcd(m as u64, n as u64) == 1 {
                out.push((m, n));
            }
        }
    }
    out
}

pub fn verify(max_sum: u32) -> Report {
    verify_with(&Options::new(max_sum))
}

pub fn verify_with(opts: &Options) -> Report {
    let pairs = coprime_pairs(opts.max_sum);
    let next = AtomicUsize::new(0);
    let results: Mutex<BTreeMap<usize, Vec<Record>>> = Mutex::new(BTreeMap::new());
    std::thread::scope(|scope| {
        for _ in 0..opts.threads.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(m, n)) = pairs.get(i) else { break };
                let recs = check_pair(m, n, opts.statistic);
                results.lock().expect("no poisoned workers").insert(i, recs);
            });
        }
    });
    let records = results.into_inner().expect("no poisoned workers").into_values().flatten().collect();
    Report { max_sum: opts.max_sum, records }
}

struct PairChecker {
    m: u32,
    n: u32,
    records: Vec<Record>,
}

impl PairChecker {
    fn hard(&mut self, check: &'static str, outcome: std::result::Result<(), String>) {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, String::new()),
            Err(w) => (Status::Fail, w),
        };
        self.records.push(Record { m: self.m, n: self.n, check, kind: Kind::Hard, status, witness });
    }

    fn conjecture(&mut self, check: &'static str, outcome: std::result::Result<(), String>) {
        let (status, witness) = match outcome {
            Ok(()) => (Status::ConjectureHolds, String::new()),
            Err(w) => (Status::Counterexample, w),
        };
        self.records.push(Record { m: self.m, n: self.n, check, kind: Kind::Conjecture, status, witness });
    }

    fn either(&mut self, hard: bool, check: &'static str, outcome: std::result::Result<(), String>) {
        if hard {
            self.hard(check, outcome)
        } else {
            self.conjecture(check, outcome)
        }
    }
}

/// The first element failing `pred`, rendered as a witness.
fn all<T>(
    items: impl IntoIterator<Item = T>,
    mut pred: impl FnMut(&T) -> std::result::Result<(), String>,
) -> std::result::Result<(), String> {
    items.into_iter().try_for_each(|x| pred(&x))
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn err_string<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn kn_pm_one(a: u32, b: u32) -> bool {
    Frame::new(a, b).ok().and_then(|f| BounceShape::of(&f).ok()).is_some()
}

fn check_pair(m: u32, n: u32, stat: Statistic) -> Vec<Record> {
    let f = Frame::new(m, n).expect("pairs are coprime");
    let mut c = PairChecker { m, n, records: Vec::new() };
    let delta = f.delta();
    let diagrams = enumerate_below_diagonal(&f);
    let sms = enumerate_semimodules(&f);
    let cores: Vec<Partition> = sms.iter().map(semimodule_to_core).collect();
    let expected = rational_catalan_count(m, n);

    c.hard(
        "count",
        ensure(
            diagrams.len() as u128 == expected
                && sms.len() as u128 == expected
                && cores.iter().collect::<BTreeSet<_>>().len() as u128 == expected,
            || format!("diagrams={} semimodules={} expected={expected}", diagrams.len(), sms.len()),
        ),
    );

    c.hard(
        "bijection",
        all(&sms, |s| ensure(Semimodule::from_diagram(&s.to_diagram(), f).as_ref() == Ok(*s), || s.to_string()))
            .and_then(|()| {
                all(&diagrams, |d| {
                    let back = Semimodule::from_diagram(d, f).map(|s| s.to_diagram());
                    ensure(back.as_ref() == Ok(*d), || format!("diagram {d}"))
                })
            }),
    );

    c.hard("label-coverage", {
        let mut labels: Vec<i64> = diagonal_labels(&f).into_iter().map(|(_, l)| l).collect();
        labels.sort_unstable();
        let gaps: Vec<i64> = Semimodule::semigroup(f).gaps().iter().map(|&g| g as i64).collect();
        ensure(labels == gaps, || format!("labels {labels:?}"))
    });

    c.hard("statistic-range", all(&diagrams, |d| {
        ensure(d.area() <= delta && stat(d, &f) <= delta, || format!("diagram {d}"))
    }));

    c.hard("dual-involution", all(&sms, |s| ensure(s.dual().dual() == **s, || s.to_string())));

    c.hard(
        "generator-count",
        all(&sms, |s| {
            ensure(s.generators(m).len() == m as usize && s.generators(n).len() == n as usize, || {
                s.to_string()
            })
        }),
    );

    c.hard(
        "cell-dimension",
        all(&sms, |s| {
            let d = s.to_diagram();
            ensure(s.cell_dimension() + stat(&d, &f) == delta, || s.to_string())
        }),
    );

    c.hard("dual-dimension", all(&sms, |s| ensure(s.cell_dimension() == s.dual().cell_dimension(), || s.to_string())));

    c.hard(
        "window-counts",
        all(&sms, |s| {
            all([m, n], |&p| {
                let lo = -2 * p as i64;
                let hi = 2 * delta as i64 + p as i64;
                all(lo..=hi, |&x| {
                    let g = |y: i64| s.g(p, y) as i64;
                    let gens = s.count_generators_in_window(p, x) as i64;
                    let cogens = s.count_cogenerators_in_window(p, x) as i64;
                    ensure(gens == g(x - p as i64) - g(x) && cogens == g(x) - g(x + p as i64), || {
                        format!("{s} p={p} x={x}")
                    })
                })
            })
        }),
    );

    c.hard(
        "gmap-size",
        all(&sms, |s| {
            let dim = s.cell_dimension();
            let gm = g_map(s, m);
            let gn = g_map(s, n);
            ensure(
                gm.area() == dim
                    && gn.area() == dim
                    && fits_below_diagonal(&gm, &g_frame(&f, m))
                    && fits_below_diagonal(&gn, &g_frame(&f, n)),
                || s.to_string(),
            )
        }),
    );

    c.hard("transpose-duality", all(&sms, |s| ensure(check_transpose_duality(s), || s.to_string())));

    if m == n + 1 {
        c.hard(
            "gn-equals-gm",
            err_string(check_consecutive_coincidence(&f)).and_then(|ok| ensure(ok, String::new)),
        );
    }

    let bounce_shape = BounceShape::of(&f).ok();
    c.either(bounce_shape.is_some(), "gm-injective", {
        let mut seen = BTreeMap::new();
        all(&sms, |s| match seen.insert(g_columns(s, m), s.gaps_string()) {
            None => Ok(()),
            Some(other) => Err(format!("gaps {other} and {} share G_m", s.gaps_string())),
        })
    });

    c.hard("cores", {
        all(sms.iter().zip(&cores), |(s, p)| {
            let mut hooks = p.first_column_hooks();
            hooks.sort_unstable();
            ensure(
                is_p_core(p, m)
                    && is_p_core(p, n)
                    && hooks == s.gaps()
                    && p.transpose() == semimodule_to_core(&s.dual()),
                || s.to_string(),
            )
        })
    });

    c.hard("self-dual-count", {
        let formula = self_conjugate_formula(&f);
        let self_dual = count_self_dual_semimodules(&f) as u128;
        let self_conj = cores.iter().filter(|p| p.transpose() == **p).count() as u128;
        err_string(q_catalan_at_minus_one(&f)).and_then(|at_minus_one| {
            ensure(
                self_dual == formula && self_conj == formula && at_minus_one == formula as i128,
                || format!("self-dual={self_dual} self-conjugate={self_conj} q=-1:{at_minus_one} formula={formula}"),
            )
        })
    });

    let small = m.min(n) <= 3;
    match qt_catalan_with(&f, stat) {
        Err(e) => c.hard("qt-catalan", Err(e.to_string())),
        Ok(poly) => {
            c.either(small, "symmetry", {
                ensure(poly.swap_vars() == poly, || format!("c(q,t) = {poly}"))
            });
            let weak_hard = kn_pm_one(m, n) || kn_pm_one(n, m);
            c.either(weak_hard, "weak-symmetry", weak_symmetry(&poly));
            if weak_hard {
                c.hard("poincare", poincare(&f, &diagrams, stat));
            }
        }
    }

    if small {
        c.hard(
            "involution",
            all(&diagrams, |d| {
                let i = err_string(involution(d, &f))?;
                let ii = err_string(involution(&i, &f))?;
                let swapped = (delta - i.area(), stat(&i, &f)) == (stat(d, &f), delta - d.area());
                ensure(ii == **d && swapped, || format!("diagram {d} -> {i}"))
            }),
        );
    }
    if m == 3 {
        c.hard("phi-triangle", phi_triangle(n, &diagrams, &f, stat));
    }

    if let Some(_shape) = bounce_shape {
        c.hard("bounce-tree", all(&sms, |s| bounce_tree_check(s, m, n)));
        c.hard(
            "reconstruction",
            all(&sms, |s| {
                let g = g_columns(s, m);
                let r = err_string(reconstruct(&f, &g))?;
                ensure(r.semimodule == **s && g_columns(&r.semimodule, m) == g, || s.to_string())
            }),
        );
        c.hard(
            "bounce-statistic",
            all(&sms, |s| {
                let path = err_string(bounce_path(&g_columns(s, m), &f))?;
                let tree = err_string(bounce_tree(s))?;
                let area = s.to_diagram().area();
                ensure(
                    path.statistic() == delta - area && path.horizontal == tree.steps_from_zero(),
                    || format!("{s} path {}", path.steps_string()),
                )
            }),
        );
        c.hard(
            "gap-intervals",
            all(&sms, |s| ensure(crate::bounce::gap_intervals_hold(s) == Ok(true), || s.to_string())),
        );
    }

    c.records
}

fn weak_symmetry(poly: &BivariatePolynomial) -> std::result::Result<(), String> {
    let in_q = err_string(poly.specialize(Var::T))?;
    let in_t = err_string(poly.specialize(Var::Q))?;
    ensure(in_q.swap_vars() == in_t, || format!("c(q,1) = {in_q}, c(1,t) = {in_t}"))
}

fn poincare(f: &Frame, diagrams: &[Partition], stat: Statistic) -> std::result::Result<(), String> {
    let mut by_area = BTreeMap::new();
    let mut by_h = BTreeMap::new();
    for d in diagrams {
        *by_area.entry(2 * d.area()).or_insert(0u64) += 1;
        *by_h.entry(2 * (f.delta().saturating_sub(stat(d, f)))).or_insert(0u64) += 1;
    }
    ensure(by_area == by_h, || format!("area {by_area:?} h {by_h:?}"))
}

fn phi_triangle(
    big: u32,
    diagrams: &[Partition],
    f: &Frame,
    stat: Statistic,
) -> std::result::Result<(), String> {
    let mut image = BTreeSet::new();
    for d in diagrams {
        let sp = err_string(phi(d, big))?;
        ensure(sp.b == stat(d, f) && sp == StatPair { a: f.delta() - d.area(), b: sp.b }, || {
            format!("diagram {d}")
        })?;
        ensure(err_string(phi_inverse(sp, big))? == *d, || format!("diagram {d}"))?;
        image.insert(sp);
    }
    let triangle: BTreeSet<StatPair> = triangle_points(f.delta()).into_iter().collect();
    ensure(image == triangle && image.len() == diagrams.len(), || {
        format!("image has {} points, triangle has {}", image.len(), triangle.len())
    })
}

fn bounce_tree_check(s: &Semimodule, m: u32, n: u32) -> std::result::Result<(), String> {
    let tree = err_string(bounce_tree(s))?;
    let gens = s.generators(m);
    let increasing = tree.edges().iter().all(|&(i, p)| match p {
        Node::Gen(j) => j > i,
        Node::Infinity => true,
    });
    let roots = (0..tree.num_generators()).filter(|&i| tree.parent(i).is_none()).count();
    let n_gens: BTreeSet<i64> = s.generators(n).into_iter().collect();
    let leaves: Vec<i64> = tree.leaves().into_iter().map(|i| gens[i]).collect();
    let simultaneous: Vec<i64> = gens.iter().copied().filter(|a| n_gens.contains(a)).collect();
    let root_ok = match tree.root() {
        Node::Gen(_) => roots == 1,
        Node::Infinity => roots == 0,
    };
    ensure(increasing && root_ok && leaves == simultaneous, || {
        format!("{s} tree {}", tree.edges_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_are_ordered_and_coprime() {
        let p = coprime_pairs(5);
        assert_eq!(p, [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4), (2, 3), (3, 2), (4, 1)]);
    }

    #[test]
    fn small_run_passes() {
        let r = verify(7);
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.counterexamples().count(), 0);
        for pair in [(2, 3), (2, 5), (3, 4), (1, 6)] {
            assert!(r.records.iter().any(|x| (x.m, x.n) == pair));
        }
    }

    #[test]
    fn corrupted_statistic_fails() {
        fn bad(d: &Partition, f: &Frame) -> u64 {
            h_plus(d, f) + u64::from(!d.is_empty())
        }
        let r = verify_with(&Options { statistic: bad, ..Options::new(6) });
        assert!(!r.passed());
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let one = verify(9);
        let four = verify_with(&Options { threads: 4, ..Options::new(9) });
        assert_eq!(one, four);
    }

    #[test]
    fn csv_and_json_shapes() {
        let r = verify(4);
        assert!(r.to_csv().starts_with("m,n,check,status,witness\n"));
        let j = r.to_json();
        assert_eq!(j["hard_failures"], 0);
        assert_eq!(j["records"][0]["status"], "pass");
    }
}
