use std::error::Error as StdError;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde_json::json;
use starconfig_core::betti::{betti_closed, betti_homology_oracle, betti_mapping_cone, BettiTable};
use starconfig_core::containment::{
    containment_sweep, hh_containment_check, lemma_inequalities, waldschmidt_profile,
    ContainmentQuery, SweepRow, SweepSpec,
};
use starconfig_core::monomial::{alexander_dual, polarize};
use starconfig_core::sss::verify_linear_quotients;
use starconfig_core::star_config::{
    fold_ideal, fold_symbolic, macaulay2_snippet, pol_dual_sss, seqcm_certificate, symbolic_oracle,
};
use starconfig_core::{FoldParams, MonomialIdeal, RingDescriptor, SssIdeal};

use crate::args::{CasTarget, Command, FoldArgs, Format, Method, OutputArgs};

pub enum Outcome {
    Holds,
    Fails,
}

impl Outcome {
    fn from(ok: bool) -> Self {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails
        }
    }
}

type CmdResult = Result<Outcome, Box<dyn StdError>>;

pub fn run(command: Command) -> CmdResult {
    match command {
        Command::Params { fold, n_max, out } => params(fold, n_max, &out),
        Command::Gens { fold, out } => gens(fold, &out),
        Command::Symbolic { fold, m, verify, out } => symbolic(fold, m, verify, &out),
        Command::Betti {
            fold,
            m,
            method,
            field_char,
            out,
        } => betti(fold, m, &method, field_char, &out),
        Command::Linquot { fold, m, out } => linquot(fold, m, &out),
        Command::Dual { fold, m, out } => dual(fold, m, &out),
        Command::Certify { fold, m, out } => certify(fold, m, &out),
        Command::Containment { fold, k, l, m, out } => containment(fold, k, l, m, &out),
        Command::Sweep {
            s,
            b,
            l,
            m,
            timings,
            out,
        } => sweep(
            SweepSpec {
                s: s.0,
                b: b.0,
                l: l.0,
                m: m.0,
            },
            timings,
            &out,
        ),
        Command::ExportCas { fold, m, what, out } => export_cas(fold, m, what, out.as_deref()),
    }
}

fn fold_params(f: FoldArgs) -> Result<FoldParams, Box<dyn StdError>> {
    let p = FoldParams::new(f.s, f.b, f.a)?;
    if let Some(w) = p.warning() {
        eprintln!("warning: {w}");
    }
    Ok(p)
}

fn emit(out: &OutputArgs, data: &str) -> Result<(), Box<dyn StdError>> {
    emit_to(out.out.as_deref(), data)
}

fn emit_to(path: Option<&Path>, data: &str) -> Result<(), Box<dyn StdError>> {
    match path {
        Some(p) => fs::write(p, data)?,
        None => print!("{data}"),
    }
    Ok(())
}

fn no_csv(out: &OutputArgs, cmd: &str) -> Result<(), Box<dyn StdError>> {
    if out.format == Format::Csv {
        return Err(format!("{cmd} has no csv output").into());
    }
    Ok(())
}

fn json_line(v: serde_json::Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn generator_lines(ideal: &MonomialIdeal) -> String {
    ideal.generators().iter().map(|g| format!("  {g}\n")).collect()
}

fn params(f: FoldArgs, n_max: Option<u32>, out: &OutputArgs) -> CmdResult {
    no_csv(out, "params")?;
    let p = fold_params(f)?;
    let profile = n_max.map(|n| waldschmidt_profile(&p, n)).transpose()?;
    let data = match out.format {
        Format::Json => json_line(json!({
            "params": p,
            "mu_hat": p.mu_hats(),
            "warning": p.warning(),
            "alpha": profile.as_ref().map(|pr| pr.alphas.clone()),
            "waldschmidt": profile.as_ref().map(|pr| json!({
                "lower": pr.demailly_lower.to_string(),
                "upper": pr.upper.to_string(),
            })),
        })),
        _ => {
            let mut s = format!("s={} b={} a={}\nh={} c0={} mu0={} d={}\nmu_hat:", p.s, p.b, p.a, p.h, p.c0, p.mu0, p.form_degree);
            for (c, mu) in p.mu_hats() {
                let _ = write!(s, " c={c}:{mu}");
            }
            s.push('\n');
            if let Some(w) = p.warning() {
                let _ = writeln!(s, "warning: {w}");
            }
            if let Some(pr) = &profile {
                s.push_str(&pr.render());
            }
            s
        }
    };
    emit(out, &data)?;
    Ok(Outcome::from(profile.is_none_or(|pr| pr.bracket_nonempty())))
}

fn gens(f: FoldArgs, out: &OutputArgs) -> CmdResult {
    no_csv(out, "gens")?;
    let p = fold_params(f)?;
    let i = fold_ideal(&p);
    let data = match out.format {
        Format::Json => json_line(serde_json::to_value(i.to_json_value())?),
        _ => format!("I_{}: {} minimal generators\n{}", p.a, i.len(), generator_lines(&i)),
    };
    emit(out, &data)?;
    Ok(Outcome::Holds)
}

/// Compares a grid ideal with an SSS ideal in the grid with the larger
/// number of levels.
fn same_grid_ideal(a: &MonomialIdeal, b: &SssIdeal) -> Result<bool, Box<dyn StdError>> {
    let levels = a.ring().levels().max(b.levels());
    let ring = RingDescriptor::grid(b.s(), levels)?;
    Ok(a.embed(ring)? == b.with_levels(levels)?.to_ideal())
}

fn symbolic(f: FoldArgs, m: u32, verify: bool, out: &OutputArgs) -> CmdResult {
    no_csv(out, "symbolic")?;
    let p = fold_params(f)?;
    let sym = fold_symbolic(&p, m)?;
    let dual = pol_dual_sss(&p, m)?;
    let routes_agree = same_grid_ideal(&alexander_dual(&polarize(&sym)?)?, &dual)?;
    let oracle_agrees = if verify {
        Some(symbolic_oracle(&fold_ideal(&p), m)? == sym)
    } else {
        None
    };
    let data = match out.format {
        Format::Json => json_line(json!({
            "symbolic": sym.to_json_value(),
            "dual": dual.to_json_value(),
            "dual_generators": dual.num_generators(),
            "routes_agree": routes_agree,
            "oracle_agrees": oracle_agrees,
        })),
        _ => {
            let mut s = format!("I^({m}): {} minimal generators\n{}", sym.len(), generator_lines(&sym));
            let lambdas: Vec<String> = dual.lambdas().iter().map(|l| l.to_string()).collect();
            let _ = writeln!(s, "Pol(I^({m}))^v: {} minimal generators", dual.num_generators());
            let _ = writeln!(s, "Lambda: {}", lambdas.join(" "));
            let _ = writeln!(s, "dual routes {}", if routes_agree { "agree" } else { "DISAGREE" });
            if let Some(ok) = oracle_agrees {
                let _ = writeln!(s, "definition oracle {}", if ok { "agrees" } else { "DISAGREES" });
            }
            s
        }
    };
    emit(out, &data)?;
    Ok(Outcome::from(routes_agree && oracle_agrees != Some(false)))
}

fn betti(f: FoldArgs, m: u32, methods: &[Method], field_char: u32, out: &OutputArgs) -> CmdResult {
    no_csv(out, "betti")?;
    let p = fold_params(f)?;
    let j = pol_dual_sss(&p, m)?;
    let mut methods = methods.to_vec();
    methods.dedup();
    let tables = methods
        .iter()
        .map(|&method| {
            Ok((
                method,
                match method {
                    Method::Formula => betti_closed(&j)?,
                    Method::Cone => betti_mapping_cone(&j)?,
                    Method::Homology => betti_homology_oracle(&j.to_ideal(), field_char)?,
                },
            ))
        })
        .collect::<Result<Vec<(Method, BettiTable)>, starconfig_core::Error>>()?;
    let agree = tables.windows(2).all(|w| w[0].1 == w[1].1);
    let name = |m: Method| format!("{m:?}").to_lowercase();
    let names: Vec<String> = methods.iter().map(|&m| name(m)).collect();
    let data = match out.format {
        Format::Json => json_line(json!({
            "table": tables[0].1.to_json_value(),
            "methods": names,
            "agree": agree,
        })),
        _ => {
            let mut s = String::new();
            if agree {
                s.push_str(&tables[0].1.render());
                if tables.len() > 1 {
                    let _ = writeln!(s, "methods agree ({})", names.join(", "));
                }
            } else {
                for (method, t) in &tables {
                    let _ = writeln!(s, "[{}]\n{}", name(*method), t.render());
                }
                s.push_str("methods DISAGREE\n");
            }
            s
        }
    };
    emit(out, &data)?;
    Ok(Outcome::from(agree))
}

fn linquot(f: FoldArgs, m: u32, out: &OutputArgs) -> CmdResult {
    no_csv(out, "linquot")?;
    let p = fold_params(f)?;
    let cert = verify_linear_quotients(&pol_dual_sss(&p, m)?)?;
    let data = match out.format {
        Format::Json => json_line(serde_json::to_value(cert.to_json_value())?),
        _ => {
            let mut s = cert.render_table();
            match cert.first_failure() {
                None => {
                    let _ = writeln!(s, "linear quotients verified for {} generators", cert.rows.len());
                }
                Some(r) => {
                    let _ = writeln!(s, "FAILED at u_{} = {}: computed {}", r.index, r.generator, r.computed);
                }
            }
            s
        }
    };
    emit(out, &data)?;
    Ok(Outcome::from(cert.holds()))
}

fn dual(f: FoldArgs, m: u32, out: &OutputArgs) -> CmdResult {
    no_csv(out, "dual")?;
    let p = fold_params(f)?;
    let j = pol_dual_sss(&p, m)?;
    let data = match out.format {
        Format::Json => json_line(serde_json::to_value(j.to_json_value())?),
        _ => {
            let lambdas: Vec<String> = j.lambdas().iter().map(|l| l.to_string()).collect();
            let mut s = format!("Lambda: {}\n{} minimal generators\n", lambdas.join(" "), j.num_generators());
            for g in j.generators() {
                let _ = writeln!(s, "  {g}");
            }
            s
        }
    };
    emit(out, &data)?;
    Ok(Outcome::Holds)
}

fn certify(f: FoldArgs, m: u32, out: &OutputArgs) -> CmdResult {
    no_csv(out, "certify")?;
    let p = fold_params(f)?;
    let cert = seqcm_certificate(&p, m)?;
    let quotients_ok = cert.quotients.as_ref().map(|q| q.holds());
    let data = match out.format {
        Format::Json => json_line(json!({
            "params": p,
            "m": m,
            "dual": cert.dual.to_json_value(),
            "dual_generators": cert.dual.num_generators(),
            "is_sss": cert.sss.holds(),
            "sss_witness": cert.sss.witness.as_ref().map(|w| w.to_string()),
            "linear_quotients": quotients_ok,
            "valid": cert.valid(),
            "failed_stage": cert.failed_stage,
        })),
        _ => {
            let ok = |b: bool| if b { "ok" } else { "FAILED" };
            let mut s = format!(
                "dual: {} generators, {} partitions\nis_sss: {}\n",
                cert.dual.num_generators(),
                cert.dual.lambdas().len(),
                ok(cert.sss.holds())
            );
            if let Some(w) = &cert.sss.witness {
                let _ = writeln!(s, "  witness: {w}");
            }
            if let Some(q) = &cert.quotients {
                let _ = writeln!(s, "linear quotients: {} ({} rows)", ok(q.holds()), q.rows.len());
            }
            let _ = writeln!(
                s,
                "I^({m}) sequentially Cohen-Macaulay: {}",
                if cert.valid() { "certified" } else { "NOT certified" }
            );
            s
        }
    };
    emit(out, &data)?;
    Ok(Outcome::from(cert.valid()))
}

fn containment(f: FoldArgs, k: u32, l: u32, m: u32, out: &OutputArgs) -> CmdResult {
    no_csv(out, "containment")?;
    let p = fold_params(f)?;
    let q = ContainmentQuery::new(p, k, l, m)?;
    let res = hh_containment_check(&q)?;
    let lemmas = lemma_inequalities(&p, k, l, m)?;
    let holds = res.holds && lemmas.holds();
    let data = match out.format {
        Format::Json => json_line(json!({
            "query": q,
            "lhs_order": q.lhs_order(),
            "maximal_power": q.maximal_power(),
            "result": res,
            "lemmas": lemmas,
            "holds": holds,
        })),
        _ => {
            let mut s = format!(
                "I^({}) in m^{} * (I^({}))^{}\norbits checked: {}, alpha(lhs) = {}\nlemmas: {}{}\n",
                q.lhs_order(),
                q.maximal_power(),
                m,
                l,
                res.orbits_checked,
                res.alpha_lhs,
                if lemmas.holds() { "ok" } else { "FAILED" },
                if lemmas.vacuous { " (vacuous, c0 = h)" } else { "" },
            );
            if let Some(w) = &res.witness {
                let _ = writeln!(s, "witness exponents: {w:?}");
            }
            s.push_str(if holds { "HOLDS\n" } else { "FAILS\n" });
            s
        }
    };
    emit(out, &data)?;
    Ok(Outcome::from(holds))
}

fn sweep(spec: SweepSpec, timings: bool, out: &OutputArgs) -> CmdResult {
    let n = spec.queries().len();
    eprintln!("sweep: {n} grid points");
    let rows = containment_sweep(&spec)?;
    let failures = rows.iter().filter(|r| !(r.holds && r.lemmas_hold)).count();
    eprintln!("sweep: done, {failures} failures");
    let data = match out.format {
        Format::Json => {
            let rows: Vec<SweepRow> = rows
                .into_iter()
                .map(|r| SweepRow {
                    runtime_ms: r.runtime_ms.filter(|_| timings),
                    ..r
                })
                .collect();
            json_line(serde_json::to_value(rows)?)
        }
        _ => {
            let mut s = format!("{}\n", SweepRow::CSV_HEADER);
            for r in &rows {
                let _ = writeln!(s, "{}", r.csv_line(timings));
            }
            s
        }
    };
    emit(out, &data)?;
    Ok(Outcome::from(failures == 0))
}

fn export_cas(f: FoldArgs, m: u32, what: CasTarget, out: Option<&Path>) -> CmdResult {
    let p = fold_params(f)?;
    let ideal = match what {
        CasTarget::Fold => fold_ideal(&p),
        CasTarget::Symbolic => fold_symbolic(&p, m)?,
        CasTarget::Dual => pol_dual_sss(&p, m)?.to_ideal(),
    };
    emit_to(out, &macaulay2_snippet(&ideal))?;
    Ok(Outcome::Holds)
}
