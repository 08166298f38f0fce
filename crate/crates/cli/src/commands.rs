use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use holoflow_core::lattice::{cells_in_box, children};
use holoflow_core::polyalg::{ideal_from_cubes, sphere_ideal};
use holoflow_core::rational::{self, format_rational};
use holoflow_core::states::{covariance_window, exp_state, psd_probe, verify_sphere, ym_covariance, ym_moment};
use holoflow_core::verify::{
    compat_residual_b, compat_sweep, complete_cubes, explicit_gauge_sites, family_gauge_sweep, gauge_sweep,
    sphere_condition, welldefined_property, Condition, Sweep,
};
use holoflow_core::{
    Cell, CovarianceMatrix, CubicalFamily, DiffOperator, ExplicitOp, LinearIdeal, OperatorSpec, Polynomial,
    SphereOp, Var,
};
use serde_json::{json, Value};

use crate::output::{residual_json, sweeps_report, value_cells, value_header, value_json, Report};
use crate::{Command, Global};

pub fn run(command: &Command, g: &Global) -> Result<Report> {
    match command {
        Command::VerifyInvariance => verify_invariance(g),
        Command::VerifyCompat { pair } => verify_compat(g, pair.as_deref()),
        Command::SphereCheck { max_degree } => sphere_check(g, *max_degree),
        Command::Tables { range } => tables(g, *range),
        Command::Moments { poly } => moments(g, poly),
        Command::Covariance { psd } => covariance(g, *psd),
        Command::Welldefined { trials } => welldefined(g, *trials),
    }
}

/// The operator named by `--op` (or `default`), with `--d` and `--areas`
/// applied on top.
fn resolve_spec(g: &Global, default: &str) -> Result<OperatorSpec> {
    let name = g.op.as_deref().unwrap_or(default);
    let mut spec = match name {
        "cubical" | "main" => OperatorSpec::Cubical {
            d: 3,
            scale: 0,
            perturb: None,
        },
        "alt3" | "alt" => OperatorSpec::Alt {
            d: 3,
            scale: 0,
            perturb: None,
        },
        "sphere" => OperatorSpec::Sphere { areas: Vec::new() },
        s if s.trim_start().starts_with('{') => OperatorSpec::from_json(s)?,
        path => {
            let text = fs::read_to_string(path).with_context(|| format!("reading operator file {path}"))?;
            OperatorSpec::from_json(&text)?
        }
    };
    match &mut spec {
        OperatorSpec::Cubical { d, .. } | OperatorSpec::Alt { d, .. } => {
            if let Some(dd) = g.d {
                *d = dd as usize;
            }
        }
        OperatorSpec::Sphere { areas } => {
            if let Some(a) = &g.areas {
                *areas = a.iter().map(|s| s.trim().to_string()).collect();
            }
            for s in areas.iter_mut() {
                *s = format_rational(&rational::parse_rational(s)?);
            }
            if areas.is_empty() {
                bail!("the sphere operator needs --areas");
            }
        }
        OperatorSpec::Explicit { .. } => {}
    }
    Ok(spec)
}

fn scales(g: &Global, spec: &OperatorSpec, default: &[i32]) -> Vec<i32> {
    match &g.scales {
        Some(s) => s.clone(),
        None if spec.scale() != 0 => vec![spec.scale()],
        None => default.to_vec(),
    }
}

fn spec_json(spec: &OperatorSpec) -> Value {
    serde_json::to_value(spec).expect("serializable spec")
}

fn sphere_areas(op: &SphereOp) -> Vec<String> {
    op.areas().iter().map(format_rational).collect()
}

fn plaquette_vars(cells: Vec<Cell>) -> Vec<Var> {
    cells.into_iter().map(Var::Cell).collect()
}

fn verify_invariance(g: &Global) -> Result<Report> {
    let spec = resolve_spec(g, "cubical")?;
    let op = spec.build()?;
    let window = g.window.unwrap_or(6);
    let sweeps = match &op {
        DiffOperator::Cubical(f) => scales(g, &spec, &[-1, 0, 1])
            .into_iter()
            .map(|n| {
                let s = family_gauge_sweep(f, n, window)?;
                eprintln!("progress: gauge scale {n}: {} sites, {} violations", s.checked, s.violations.len());
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?,
        DiffOperator::Explicit(e) => {
            let sites = explicit_gauge_sites(e, window);
            let scale = sites.first().map(|(c, _)| c.scale()).unwrap_or(0);
            vec![gauge_sweep(&op, sites, scale)?]
        }
        DiffOperator::Sphere(s) => {
            let reports = sphere_condition(&op, &s.vars())?;
            vec![Sweep {
                condition: Condition::Sphere,
                scale: 0,
                checked: reports.len(),
                violations: reports.into_iter().filter(|r| !r.pass).collect(),
            }]
        }
    };
    Ok(sweeps_report("verify-invariance", spec_json(&spec), &sweeps, g.decimal))
}

fn family_of(op: &DiffOperator, what: &str) -> Result<CubicalFamily> {
    match op {
        DiffOperator::Cubical(f) => Ok(f.clone()),
        _ => bail!("{what} needs a cubical family (cubical or alt3)"),
    }
}

fn verify_compat(g: &Global, pair: Option<&[String]>) -> Result<Report> {
    let spec = resolve_spec(g, "cubical")?;
    let family = family_of(&spec.build()?, "verify-compat")?;
    let window = g.window.unwrap_or(6);
    let mut sweeps = Vec::new();
    for n in scales(g, &spec, &[-1, 0, 1]) {
        let (a, b) = compat_sweep(&family, n, window)?;
        eprintln!(
            "progress: compat scale {n}: {} + {} sites, {} violations",
            a.checked,
            b.checked,
            a.violations.len() + b.violations.len()
        );
        sweeps.push(a);
        sweeps.push(b);
    }
    let mut report = sweeps_report("verify-compat", spec_json(&spec), &sweeps, g.decimal);
    if let Some([p, q]) = pair {
        let p: Cell = p.parse()?;
        let q: Cell = q.parse()?;
        let coarse = family.coeff_b(&p, &q)?;
        let residual = compat_residual_b(&family, &p, &q)?;
        let fine = &coarse - &residual;
        let kids = |c: &Cell| -> Result<Vec<String>> { Ok(children(c)?.iter().map(|x| x.to_string()).collect()) };
        report.json["pair"] = json!({
            "p": p, "q": q,
            "children_p": kids(&p)?, "children_q": kids(&q)?,
            "coefficient": value_json(&coarse, g.decimal),
            "children_sum": value_json(&fine, g.decimal),
            "residual": value_json(&residual, g.decimal),
        });
        report.text.push(format!(
            "pair {p} {q}: b = {coarse}, sum over children = {fine}, residual = {residual}"
        ));
        if residual != rational::int(0) {
            report.pass = false;
        }
    }
    Ok(report)
}

fn sphere_check(g: &Global, max_degree: u32) -> Result<Report> {
    let spec = resolve_spec(g, "sphere")?;
    let DiffOperator::Sphere(sphere) = spec.build()? else {
        bail!("sphere-check needs the sphere operator");
    };
    let op = DiffOperator::Sphere(sphere.clone());
    let condition = sphere_condition(&op, &sphere.vars())?;
    let checks = verify_sphere(sphere.areas(), max_degree)?;
    let pass = checks.all_equal() && condition.iter().all(|r| r.pass);
    let json = json!({
        "command": "sphere-check",
        "areas": sphere_areas(&sphere),
        "max_degree": max_degree,
        "sphere_condition": condition.iter().map(|r| residual_json(r, g.decimal)).collect::<Vec<_>>(),
        "checks": checks.checks,
        "mismatches": checks.mismatches().count(),
        "pass": pass,
    });
    let mut report = Report::new(pass, json);
    report.header = ["monomial", "series", "gaussian", "equal"].iter().map(|s| s.to_string()).collect();
    for c in &checks.checks {
        report.rows.push(vec![
            c.monomial.to_string(),
            c.series.to_string(),
            c.gaussian.to_string(),
            c.equal.to_string(),
        ]);
        report.text.push(format!(
            "{}: {} | gaussian {}{}",
            c.monomial,
            c.series,
            c.gaussian,
            if c.equal { "" } else { "  MISMATCH" }
        ));
    }
    for r in condition.iter().filter(|r| !r.pass) {
        report.text.push(format!("sphere condition {}: {}", r.site, r.value));
    }
    report.text.push(format!(
        "{} monomials, {} mismatches",
        checks.checks.len(),
        checks.mismatches().count()
    ));
    Ok(report)
}

fn explicit_for(g: &Global, spec: &OperatorSpec, op: &DiffOperator, range: i64) -> Result<ExplicitOp> {
    Ok(match op {
        DiffOperator::Cubical(f) => {
            let n = scales(g, spec, &[0])[0];
            let d = f.dim();
            ExplicitOp::from_family(f, &cells_in_box(n, &vec![-range; d], &vec![range; d], 2))?
        }
        DiffOperator::Sphere(s) => {
            let mut e = ExplicitOp::default();
            let vars = s.vars();
            for p in &vars {
                e.set_a(p.clone(), op.coeff_a(p)?);
                for q in &vars {
                    e.set_b(p.clone(), q.clone(), op.coeff_b(p, q)?);
                }
            }
            e
        }
        DiffOperator::Explicit(e) => e.clone(),
    })
}

fn tables(g: &Global, range: i64) -> Result<Report> {
    let spec = resolve_spec(g, "cubical")?;
    let op = spec.build()?;
    let table = explicit_for(g, &spec, &op, range)?;
    let mut report = Report::new(true, spec_json(&OperatorSpec::explicit(&table)));
    report.header = ["kind", "p", "q"].iter().map(|s| s.to_string()).collect();
    report.header.extend(value_header("value", g.decimal));
    for (p, v) in table.a_entries() {
        let mut row = vec!["a".into(), p.to_string(), String::new()];
        row.extend(value_cells(v, g.decimal));
        report.rows.push(row);
        report.text.push(format!("a({p}) = {v}"));
    }
    for ((p, q), v) in table.b_entries() {
        let mut row = vec!["b".into(), p.to_string(), q.to_string()];
        row.extend(value_cells(v, g.decimal));
        report.rows.push(row);
        report.text.push(format!("b({p}, {q}) = {v}"));
    }
    Ok(report)
}

fn moments(g: &Global, poly: &str) -> Result<Report> {
    let spec = resolve_spec(g, "sphere")?;
    let op = spec.build()?;
    let f: Polynomial = poly.parse()?;
    let mut json = json!({ "command": "moments", "operator": spec_json(&spec), "poly": f.to_string() });
    let mut text = Vec::new();
    let series;
    let mut pass = true;
    match &op {
        DiffOperator::Sphere(s) => {
            let ideal = sphere_ideal(s.n() as u32);
            series = exp_state(&op, &f, &ideal)?;
            let gaussian = ym_moment(s.areas(), &ideal.reduce(&f))?;
            pass = series == gaussian;
            json["gaussian"] = serde_json::to_value(&gaussian)?;
            json["equal"] = json!(pass);
            text.push(format!("gaussian: {gaussian}"));
        }
        _ => series = exp_state(&op, &f, &LinearIdeal::trivial())?,
    }
    json["series"] = serde_json::to_value(&series)?;
    text.insert(0, format!("series: {series}"));
    let mut report = Report::new(pass, json);
    report.text = text;
    report.header = vec!["power".into()];
    report.header.extend(value_header("coefficient", g.decimal));
    for k in 0..=series.degree().unwrap_or(0) {
        let c = series.coeff(k);
        if !series.is_zero() && c == rational::int(0) {
            continue;
        }
        let mut row = vec![k.to_string()];
        row.extend(value_cells(&c, g.decimal));
        report.rows.push(row);
    }
    Ok(report)
}

fn covariance(g: &Global, psd: bool) -> Result<Report> {
    let spec = resolve_spec(g, "cubical")?;
    let op = spec.build()?;
    let cov: CovarianceMatrix = match &op {
        DiffOperator::Cubical(f) => {
            let r = g.window.unwrap_or(2);
            let n = scales(g, &spec, &[0])[0];
            let d = f.dim();
            covariance_window(f, &cells_in_box(n, &vec![-r; d], &vec![r; d], 2))?
        }
        DiffOperator::Sphere(s) => ym_covariance(s.areas())?,
        DiffOperator::Explicit(e) => {
            let vars: Vec<Var> = e.universe().cloned().collect();
            let two = rational::int(2);
            let entries = op
                .symbol_matrix(&vars)?
                .into_iter()
                .map(|row| row.into_iter().map(|v| v * &two).collect())
                .collect();
            CovarianceMatrix { vars, entries }
        }
    };
    let n = cov.dim();
    let labels: Vec<String> = cov.vars.iter().map(|v| v.to_string()).collect();
    let mut json = json!({
        "command": "covariance",
        "operator": spec_json(&spec),
        "vars": labels,
        "entries": (0..n).map(|i| (0..n).map(|j| value_json(cov.get(i, j), g.decimal)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "symmetric": cov.is_symmetric(),
    });
    let mut report_text = Vec::new();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![labels[i].clone(), labels[j].clone()];
            row.extend(value_cells(cov.get(i, j), g.decimal));
            rows.push(row);
            if *cov.get(i, j) != rational::int(0) {
                report_text.push(format!("{} {} {}", labels[i], labels[j], cov.get(i, j)));
            }
        }
    }
    report_text.push(format!("{n} variables, symmetric: {}", cov.is_symmetric()));
    if psd {
        let probe = psd_probe(&cov);
        report_text.push(format!(
            "leading principal minor signs: {}",
            probe.signs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
        ));
        report_text.push(match probe.first_non_positive {
            None => "positive definite".to_string(),
            Some(k) => format!("first non-positive minor at order {k}"),
        });
        json["psd"] = serde_json::to_value(&probe)?;
    }
    let mut report = Report::new(true, json);
    report.header = vec!["row".into(), "col".into()];
    report.header.extend(value_header("value", g.decimal));
    report.rows = rows;
    report.text = report_text;
    Ok(report)
}

fn welldefined(g: &Global, trials: usize) -> Result<Report> {
    let spec = resolve_spec(g, "cubical")?;
    let op = spec.build()?;
    let (ideal, vars) = match &op {
        DiffOperator::Sphere(s) => (sphere_ideal(s.n() as u32), s.vars()),
        DiffOperator::Cubical(f) => {
            let r = g.window.unwrap_or(3);
            let n = scales(g, &spec, &[0])[0];
            let d = f.dim();
            let cubes = cells_in_box(n, &vec![-r + 1; d], &vec![r - 1; d], 3);
            let plaquettes = cells_in_box(n, &vec![-r; d], &vec![r; d], 2);
            (ideal_from_cubes(&cubes)?, plaquette_vars(plaquettes))
        }
        DiffOperator::Explicit(e) => (ideal_from_cubes(&complete_cubes(e))?, e.universe().cloned().collect()),
    };
    if ideal.generators().is_empty() {
        return Err(anyhow!("the window contains no complete 3-cell"));
    }
    let reports = welldefined_property(&op, &ideal, &vars, trials, g.seed)?;
    let sweep = Sweep {
        condition: Condition::WellDefined,
        scale: 0,
        checked: reports.len(),
        violations: reports.into_iter().filter(|r| !r.pass).collect(),
    };
    let mut report = sweeps_report("welldefined", spec_json(&spec), &[sweep], g.decimal);
    report.json["generators"] = json!(ideal.generators().len());
    report.json["trials"] = json!(trials);
    report.json["seed"] = json!(g.seed);
    Ok(report)
}
