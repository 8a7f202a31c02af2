use std::path::Path;

use num_bigint::BigInt;
use poset_codes::{
    code_to_points, code_to_text, load_code, poset_spec_of, shape_counts, support_counts, tiling_characterization,
    verify_net as check_net, verify_nmds_distribution, verify_tiling, weight_dist_bruteforce,
    weight_dist_nmds_hamming, weight_dist_nmds_ordered, weight_dist_nmds_poset, Budget, ConstructionSpec, Error,
    LinearCode, OrderedSpace, PosetSpec, Result, WeightDistribution,
};

use crate::report::{Report, Table};
use crate::{FamilyArg, Method};

pub enum Output {
    Report(Report),
    /// Printed verbatim (code files and CSV sent to stdout).
    Raw(String),
}

fn poset_line(code: &LinearCode) -> String {
    match poset_spec_of(code) {
        Some(PosetSpec::Ordered { n, r }) => format!("ordered n={n} r={r}"),
        Some(PosetSpec::Hamming { n }) => format!("hamming n={n}"),
        _ => format!("general ({} elements, {} covers)", code.n(), code.poset().covers().len()),
    }
}

fn header(report: &mut Report, code: &LinearCode, d: usize) {
    report
        .kv("code", format!("[{},{},{}]", code.n(), code.k(), d))
        .kv("field", format!("GF({})", code.q()))
        .kv("poset", poset_line(code));
}

fn joined(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn levels(l: &[usize]) -> String {
    format!("({})", l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

pub fn analyze(path: &Path, budget: &Budget) -> Result<Output> {
    let code = load_code(path)?;
    let info = code.classify(budget)?;
    let wei = code.wei_duality_check(budget)?;
    let mut r = Report::new();
    header(&mut r, &code, info.d);
    r.kv("n", info.n).kv("k", info.k).kv("d", info.d);
    r.kv("d2", info.d2.map_or("-".to_string(), |v| v.to_string()));
    r.kv("dual_d", info.dual_d);
    r.kv("profile", joined(info.profile.as_slice()));
    r.kv("dual_profile", joined(info.dual_profile.as_slice()));
    r.kv("class", info.class);
    r.kv(
        "duality_check",
        format!(
            "d + dual_d = {} + {} = {} {} n",
            info.d,
            info.dual_d,
            info.d + info.dual_d,
            if info.duality_criterion { "=" } else { "!=" },
        ),
    );
    r.kv("wei_duality", if wei { "holds" } else { "violated" });
    let mut t = Table::new("generalized weights", &["t", "d_t", "d_t(dual)"]);
    let rows = info.profile.len().max(info.dual_profile.len());
    for i in 0..rows {
        let cell = |p: &poset_codes::WeightProfile| p.d(i + 1).map_or("-".to_string(), |v| v.to_string());
        t.row(vec![(i + 1).to_string(), cell(&info.profile), cell(&info.dual_profile)]);
    }
    r.table(t);
    Ok(Output::Report(r))
}

/// Which closed form applies, and the distribution it yields.
fn analytic(code: &LinearCode, d: usize, budget: &Budget) -> Result<(String, String, WeightDistribution)> {
    let seed = support_counts(code, d, budget)?;
    let poset = code.poset();
    if poset.is_antichain() && code.n() > 1 {
        let a_d: BigInt = seed.values().sum();
        let dist = weight_dist_nmds_hamming(code.n(), code.k(), d, code.q(), a_d.clone())?;
        return Ok(("hamming".into(), format!("A_{d}={a_d}"), dist));
    }
    if let Some(space) = OrderedSpace::recognize(poset, code.q()) {
        let shapes = shape_counts(&space, &seed)?;
        let listed: Vec<String> = shapes.iter().map(|(e, a)| format!("A_{e}={a}")).collect();
        let dist = weight_dist_nmds_ordered(&space, code.k(), d, &shapes)?;
        return Ok(("ordered".into(), listed.join(" "), dist));
    }
    let listed: Vec<String> = seed.iter().filter(|(_, a)| **a != BigInt::from(0)).map(|(j, a)| format!("A_{j}={a}")).collect();
    let dist = weight_dist_nmds_poset(code, &seed, budget)?;
    let listed = if listed.is_empty() { "all zero".to_string() } else { listed.join(" ") };
    Ok(("poset".into(), listed, dist))
}

pub fn weightdist(path: &Path, method: Method, budget: &Budget) -> Result<Output> {
    let code = load_code(path)?;
    let info = code.classify(budget)?;
    let brute = match method {
        Method::Brute | Method::Both => Some(weight_dist_bruteforce(&code, budget)?),
        Method::Analytic => None,
    };
    let formula = match method {
        Method::Analytic | Method::Both => {
            if !info.class.is_nmds() {
                return Err(Error::Precondition(format!(
                    "the analytic distribution needs an NMDS code, this one is {}",
                    info.class
                )));
            }
            Some(analytic(&code, info.d, budget)?)
        }
        Method::Brute => None,
    };

    let mut r = Report::new();
    header(&mut r, &code, info.d);
    r.kv("class", info.class);
    r.kv(
        "method",
        match method {
            Method::Brute => "brute",
            Method::Analytic => "analytic",
            Method::Both => "both",
        },
    );
    if let Some((name, seed, _)) = &formula {
        r.kv("formula", name).kv("seed", seed);
    }
    let columns: Vec<&str> = match method {
        Method::Brute | Method::Analytic => vec!["s", "A_s"],
        Method::Both => vec!["s", "brute", "analytic"],
    };
    let mut t = Table::new("weight distribution", &columns);
    for s in 0..=code.n() {
        let mut row = vec![s.to_string()];
        if let Some(b) = &brute {
            row.push(b.a(s).to_string());
        }
        if let Some((_, _, a)) = &formula {
            row.push(a.a(s).to_string());
        }
        t.row(row);
    }
    if let (Some(b), Some((_, _, a))) = (&brute, &formula) {
        let agree = b.by_size == a.by_size;
        r.kv("verdict", if agree { "AGREE" } else { "DISAGREE" });
        if !agree {
            r.check("agreement", false, "");
        }
    }
    r.table(t);
    if let Some(b) = &brute {
        if !b.by_shape.is_empty() {
            let mut st = Table::new("by shape", &["shape", "weight", "count"]);
            for (e, a) in &b.by_shape {
                st.row(vec![e.to_string(), e.weight().to_string(), a.to_string()]);
            }
            r.table(st);
        }
    }
    Ok(Output::Report(r))
}

#[allow(clippy::too_many_arguments)]
pub fn construct(
    family: FamilyArg,
    q: u32,
    r_len: usize,
    k: Option<usize>,
    k1: Option<usize>,
    k2: Option<usize>,
    seed: Option<u64>,
    out: Option<&Path>,
    budget: &Budget,
) -> Result<Output> {
    let need = |v: Option<usize>, flag: &str, fam: &str| {
        v.ok_or_else(|| Error::Usage(format!("--family {fam} needs --{flag}")))
    };
    let forbid = |v: Option<usize>, flag: &str, fam: &str| match v {
        Some(_) => Err(Error::Usage(format!("--{flag} does not apply to --family {fam}"))),
        None => Ok(()),
    };
    let mut spec = match family {
        FamilyArg::N1 => {
            forbid(k1, "k1", "n1")?;
            forbid(k2, "k2", "n1")?;
            ConstructionSpec::n1(q, r_len, need(k, "k", "n1")?)
        }
        FamilyArg::N2 => {
            forbid(k, "k", "n2")?;
            ConstructionSpec::n2(q, r_len, need(k1, "k1", "n2")?, need(k2, "k2", "n2")?)
        }
        FamilyArg::N3 => {
            forbid(k, "k", "n3")?;
            forbid(k1, "k1", "n3")?;
            forbid(k2, "k2", "n3")?;
            ConstructionSpec::n3(q, r_len)
        }
    };
    spec.seed = seed;
    let code = spec.build(budget)?;
    let info = code.classify(budget)?;
    let space = OrderedSpace::recognize(code.poset(), q).expect("constructions live in the ordered space");
    let text = code_to_text(&code, &PosetSpec::Ordered { n: space.n, r: space.r });
    let Some(out) = out else {
        return Ok(Output::Raw(text));
    };
    std::fs::write(out, &text).map_err(|e| Error::Io { path: out.display().to_string(), msg: e.to_string() })?;
    let mut r = Report::new();
    header(&mut r, &code, info.d);
    r.kv("class", info.class).kv("dual_d", info.dual_d).kv("wrote", out.display());
    Ok(Output::Report(r))
}

pub fn points(path: &Path, out: Option<&Path>, budget: &Budget) -> Result<Output> {
    let code = load_code(path)?;
    let ps = code_to_points(&code, budget)?;
    let csv = ps.to_csv();
    let Some(out) = out else {
        return Ok(Output::Raw(csv));
    };
    std::fs::write(out, &csv).map_err(|e| Error::Io { path: out.display().to_string(), msg: e.to_string() })?;
    let mut r = Report::new();
    r.kv("points", ps.len())
        .kv("dimension", ps.space().n)
        .kv("denominator", ps.denominator())
        .kv("wrote", out.display());
    Ok(Output::Report(r))
}

fn uniformity_lines(r: &mut Report, key: &str, u: &poset_codes::UniformityReport, space: &OrderedSpace) {
    let q = space.q;
    let detail = match &u.failure {
        None => format!(
            "{} intervals of volume q^-{}, each with {} point(s)",
            u.intervals_checked, u.volume_exponent, u.expected
        ),
        Some(f) => format!(
            "interval {} holds {} point(s), expected {}",
            f.interval.display(q),
            f.count,
            f.expected
        ),
    };
    r.check(key, u.holds, detail);
    if u.unrepresentable_skipped {
        r.kv(
            "limitation",
            format!("intervals with a side finer than q^-{} are not representable and were skipped", space.r),
        );
    }
}

pub fn verify_net(path: &Path, t: usize, m: Option<usize>, budget: &Budget) -> Result<Output> {
    let code = load_code(path)?;
    let ps = code_to_points(&code, budget)?;
    let m = m.unwrap_or(code.k());
    let report = check_net(&ps, t, m)?;
    let mut r = Report::new();
    r.kv("points", ps.len()).kv("q", ps.space().q).kv("r", ps.space().r).kv("dimension", ps.space().n);
    r.kv("net", format!("({t},{m},{})", ps.space().n));
    uniformity_lines(&mut r, "result", &report, ps.space());
    Ok(Output::Report(r))
}

pub fn verify_distribution(path: &Path, budget: &Budget) -> Result<Output> {
    let code = load_code(path)?;
    let rep = verify_nmds_distribution(&code, budget)?;
    let space = OrderedSpace::recognize(code.poset(), code.q()).expect("checked by the distribution report");
    let info = code.classify(budget)?;
    let mut r = Report::new();
    header(&mut r, &code, info.d);
    r.kv("class", info.class);
    if rep.degenerate {
        r.kv("note", "k=1: part 1 concerns only the whole cube");
    }
    uniformity_lines(&mut r, "part1", &rep.part1, &space);
    let holding: Vec<String> =
        rep.anchored_at_k.iter().filter(|a| a.count == rep.q as u64).map(|a| levels(&a.levels)).collect();
    let detail = match (&holding[..], &rep.smaller_with_q) {
        (_, Some(s)) => format!("anchored box l={} of smaller volume holds {} points", levels(&s.levels), s.count),
        ([], None) => format!("no anchored box of volume q^-{} holds {} points", rep.k, rep.q),
        (found, None) => format!("l={} hold(s) {} points; no smaller anchored box does", found.join(" "), rep.q),
    };
    r.check("part2", rep.part2, detail);
    r.check("result", rep.passed, "");
    let mut t = Table::new(&format!("anchored boxes of volume q^-{}", rep.k), &["l", "count"]);
    for a in &rep.anchored_at_k {
        t.row(vec![levels(&a.levels), a.count.to_string()]);
    }
    r.table(t);
    Ok(Output::Report(r))
}

pub fn tiling(path: &Path, size: Option<usize>, budget: &Budget) -> Result<Output> {
    let code = load_code(path)?;
    let info = code.classify(budget)?;
    let (n, k) = (code.n(), code.k());
    let mut r = Report::new();
    header(&mut r, &code, info.d);
    r.kv("class", info.class);

    let Some(s) = size else {
        let rep = tiling_characterization(&code, budget)?;
        let p1 = match &rep.imperfect {
            None => format!("every ideal of size {} gives a perfect tiling", n - k + 1),
            Some(i) => format!("ideal {i} does not give a perfect tiling"),
        };
        r.check("part1", rep.part1, p1);
        let p2 = match (&rep.witness, &rep.smaller) {
            (_, Some(i)) => format!("ideal {i} of size {} already gives a tiling", i.len()),
            (None, None) => format!("no ideal of size {} gives a tiling", n - k),
            (Some(w), None) => format!("ideal {w} gives a tiling; no smaller ideal does"),
        };
        r.check("part2", rep.part2, p2);
        r.check("result", rep.holds, "");
        return Ok(Output::Report(r));
    };

    if s > n {
        return Err(Error::Usage(format!("ideal size {s} exceeds n={n}")));
    }
    let mut t = Table::new(
        &format!("ideals of size {s}"),
        &["ideal", "parts", "subcode_dim", "disjoint", "tiling", "perfect", "cover"],
    );
    let yes = |b: bool| if b { "yes" } else { "no" }.to_string();
    let mut results = Vec::new();
    for ideal in code.poset().ideals_of_size(s) {
        let tl = verify_tiling(&code, &ideal, budget)?;
        t.row(vec![
            ideal.to_string(),
            tl.parts.len().to_string(),
            tl.kernel_dim.to_string(),
            yes(tl.disjoint),
            yes(tl.is_tiling),
            yes(tl.perfect),
            tl.cover_check.to_string(),
        ]);
        results.push(tl);
    }
    r.kv("ideals", results.len());
    let first = |pred: &dyn Fn(&poset_codes::Tiling) -> bool| results.iter().find(|t| pred(t));
    if s + k == n + 1 {
        r.kv("expectation", "every ideal gives a perfect tiling");
        match first(&|t| !t.perfect) {
            None => r.check("result", true, ""),
            Some(bad) => r.check(
                "result",
                false,
                format!("ideal {}: {}", bad.ideal, bad.note.clone().unwrap_or_default()),
            ),
        };
    } else if s + k == n {
        r.kv("expectation", "some ideal gives a tiling");
        match first(&|t| t.is_tiling) {
            Some(w) => r.check("result", true, format!("witness {}", w.ideal)),
            None => r.check("result", false, "no ideal of this size gives a tiling"),
        };
    } else if s + k < n {
        r.kv("expectation", "no ideal gives a tiling");
        match first(&|t| t.is_tiling) {
            None => r.check("result", true, ""),
            Some(w) => r.check("result", false, format!("ideal {} gives a tiling", w.ideal)),
        };
    } else {
        r.kv("expectation", "none (size above n-k+1)");
    }
    r.table(t);
    Ok(Output::Report(r))
}
