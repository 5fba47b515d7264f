//! Subcommand implementations.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use pbw_degen::battery::{run_criterion, Scale, CRITERIA};
use pbw_degen::degrees::GradingVector;
use pbw_degen::BigUint;
use pbw_degen::fflv::{enumerate_patterns, minkowski_check, weyl_dim, DominantWeight};
use pbw_degen::ideals::{GradedPolynomial, PlueckerIdeal, PlueckerRing};
use pbw_degen::io;
use pbw_degen::representations::{
    annihilator_monomial_check, cyclic_module_dim, fflv_basis_check, psi_substitution_check, ActionMode,
};
use pbw_degen::tableaux::{enumerate_ssyt, tau, zeta, PBWTableau};
use pbw_degen::tropical::{cone_c_membership, in_trop_necessary_check, map_h, maximality_witness};
use pbw_degen::weights::{canonical_weight_systems, WeightSystem};
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::output::Outcome;
use crate::{Cli, Command, FflvCmd, Global, IdealCmd, RepCmd, TableauxCmd, TropCmd, WeightsCmd};

const DEFAULT_MAX_N: usize = 4;
const DEFAULT_DEGREE_BOUND: u32 = 3;

struct Ctx<'a> {
    global: &'a Global,
    out: Outcome,
}

impl<'a> Ctx<'a> {
    fn read(&mut self, path: &str) -> Result<String> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
        self.out.inputs.insert(path.to_string(), hex::encode(Sha256::digest(text.as_bytes())));
        Ok(text)
    }

    fn read_json(&mut self, path: &str) -> Result<Value> {
        let text = self.read(path)?;
        Ok(io::parse_json(&text).with_context(|| format!("in {path}"))?)
    }

    fn weights_from(&mut self, path: &str) -> Result<WeightSystem> {
        let text = self.read(path)?;
        let a = if text.trim_start().starts_with('{') {
            io::weights_from_json(&io::parse_json(&text)?)
        } else {
            WeightSystem::parse_triangle(&text)
        }
        .with_context(|| format!("in {path}"))?;
        if let Some(n) = self.global.n {
            if n != a.n() {
                bail!("{path} has n = {} but --n {n} was given", a.n());
            }
        }
        self.out.n = Some(a.n());
        Ok(a)
    }

    fn weights(&mut self) -> Result<WeightSystem> {
        let path = self.global.weights.clone().ok_or_else(|| anyhow!("--weights FILE is required"))?;
        self.weights_from(&path)
    }

    fn n(&mut self) -> Result<usize> {
        let n = self.global.n.ok_or_else(|| anyhow!("--n is required"))?;
        if n < 2 {
            bail!("--n must be at least 2");
        }
        self.out.n = Some(n);
        Ok(n)
    }

    fn d(&mut self, n: usize) -> Result<Vec<usize>> {
        let d: Vec<usize> = match &self.global.d {
            Some(spec) => io::parse_list(spec)?.into_iter().map(|k| k as usize).collect(),
            None => (1..n).collect(),
        };
        pbw_degen::degrees::validate_sizes(n, &d)?;
        self.out.d = Some(d.clone());
        Ok(d)
    }

    fn mu(&self, d: &[usize]) -> Result<Option<Vec<u32>>> {
        let Some(spec) = &self.global.mu else { return Ok(None) };
        let mu = io::parse_list(spec)?;
        if mu.len() != d.len() {
            bail!("--mu {spec} has {} entries but d has {}", mu.len(), d.len());
        }
        if mu.iter().all(|&m| m == 0) {
            bail!("--mu must be nonzero");
        }
        Ok(Some(mu))
    }

    fn degree_bound(&mut self) -> u32 {
        let b = self.global.degree_bound.unwrap_or(DEFAULT_DEGREE_BOUND);
        self.out.degree_bound = Some(b);
        b
    }

    /// Enforces the desk-scale bounds for ideal computations.
    fn guard(&self, n: usize, degree: u32) -> Result<()> {
        if n <= DEFAULT_MAX_N && degree <= DEFAULT_DEGREE_BOUND {
            return Ok(());
        }
        if !self.global.allow_large {
            bail!("n = {n}, degree {degree} exceeds the default bounds n <= {DEFAULT_MAX_N}, degree <= {DEFAULT_DEGREE_BOUND}; pass --allow-large to proceed");
        }
        eprintln!("warning: n = {n}, degree {degree} is beyond desk scale; component sizes grow quickly");
        Ok(())
    }

    /// The multidegrees to check: `--mu` if given, else all up to the bound.
    fn multidegrees(&mut self, ring: &PlueckerRing) -> Result<Vec<Vec<u32>>> {
        let list = match self.mu(ring.d())? {
            Some(mu) => vec![mu],
            None => {
                let b = self.degree_bound();
                ring.multidegrees_up_to(b)
            }
        };
        let top = list.iter().map(|m| m.iter().sum::<u32>()).max().unwrap_or(0);
        self.guard(ring.n(), top)?;
        Ok(list)
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(self.global.jobs.max(1)).build()?)
    }

    fn verdict(&mut self, name: impl Into<String>, v: bool) {
        self.out.verdicts.insert(name.into(), v);
    }
}

fn lambda_of(spec: &str, n: Option<usize>) -> Result<DominantWeight> {
    let coeffs = io::parse_list(spec)?;
    let inferred = coeffs.len() + 1;
    if let Some(n) = n {
        if n != inferred {
            bail!("--lambda {spec} has {} entries but n = {n}", coeffs.len());
        }
    }
    Ok(DominantWeight::new(inferred, coeffs)?)
}

fn mu_key(mu: &[u32]) -> String {
    mu.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
}

fn pass(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let mut ctx = Ctx { global: &cli.global, out: Outcome::default() };
    let name = match &cli.command {
        Command::Weights(c) => {
            weights(&mut ctx, c)?;
            "weights"
        }
        Command::Degrees => {
            degrees(&mut ctx)?;
            "degrees"
        }
        Command::Fflv(c) => {
            fflv(&mut ctx, c)?;
            "fflv"
        }
        Command::Tableaux(c) => {
            tableaux(&mut ctx, c)?;
            "tableaux"
        }
        Command::Ideal(c) => {
            ideal(&mut ctx, c)?;
            "ideal"
        }
        Command::Rep(c) => {
            rep(&mut ctx, c)?;
            "rep"
        }
        Command::Trop(c) => {
            trop(&mut ctx, c)?;
            "trop"
        }
        Command::Suite => {
            suite(&mut ctx)?;
            "suite"
        }
    };
    ctx.out.command = name.to_string();
    Ok(ctx.out)
}

fn weights(ctx: &mut Ctx, cmd: &WeightsCmd) -> Result<()> {
    match cmd {
        WeightsCmd::Check { file } => {
            let a = match file {
                Some(f) => ctx.weights_from(f)?,
                None => ctx.weights()?,
            };
            let member = a.check_cone_membership();
            let mut result = json!({"member": member, "weights": io::weights_to_json(&a)});
            let mut text = format!("{a}member: {member}\n");
            if member {
                let sig = a.face_signature()?;
                result["interior"] = json!(sig.is_interior());
                result["derived_inequalities"] = json!(a.derived_inequalities_hold());
                result["tight_a"] = json!(sig.tight_a);
                result["tight_b"] = json!(sig.tight_b.iter().map(|(i, j)| [i, j]).collect::<Vec<_>>());
                let _ = writeln!(text, "interior: {}", sig.is_interior());
                let _ = writeln!(text, "tight (a): {:?}", sig.tight_a);
                let _ = writeln!(text, "tight (b): {:?}", sig.tight_b);
            }
            ctx.verdict("member", member);
            ctx.out.result = result;
            ctx.out.text = text;
        }
        WeightsCmd::Canonical => {
            let n = ctx.n()?;
            let systems = canonical_weight_systems(n);
            let mut text = String::new();
            for (label, a) in &systems {
                let _ = write!(text, "{label}\n{a}\n");
            }
            ctx.out.result = Value::Array(
                systems.iter().map(|(l, a)| json!({"label": l, "weights": io::weights_to_json(a)})).collect(),
            );
            ctx.out.text = text;
        }
        WeightsCmd::Show { file } => {
            let a = match file {
                Some(f) => ctx.weights_from(f)?,
                None => ctx.weights()?,
            };
            ctx.out.result = io::weights_to_json(&a);
            ctx.out.text = a.to_string();
        }
    }
    Ok(())
}

fn degrees(ctx: &mut Ctx) -> Result<()> {
    let a = ctx.weights()?;
    let d = ctx.d(a.n())?;
    let g = GradingVector::from_weights(&a, &d)?;
    ctx.out.result = io::grading_to_json(&g);
    ctx.out.text = g
        .values()
        .iter()
        .map(|(i, v)| format!("s_{{{}}} = {}\n", i.key(), pbw_degen::poly::format_rational(v)))
        .collect();
    Ok(())
}

fn fflv(ctx: &mut Ctx, cmd: &FflvCmd) -> Result<()> {
    match cmd {
        FflvCmd::Patterns { lambda } => {
            let l = lambda_of(lambda, ctx.global.n)?;
            let patterns = enumerate_patterns(&l);
            ctx.out.n = Some(l.n());
            ctx.out.result = json!({"lambda": io::weight_to_json(&l), "count": patterns.len(),
                "patterns": patterns.iter().map(io::pattern_to_json).collect::<Vec<_>>()});
            ctx.out.text = patterns.iter().map(|p| format!("{p}\n")).collect();
        }
        FflvCmd::Count { lambda } => {
            let l = lambda_of(lambda, ctx.global.n)?;
            let count = enumerate_patterns(&l).len();
            let dim = weyl_dim(&l);
            ctx.out.n = Some(l.n());
            let agree = BigUint::from(count) == dim;
            ctx.verdict("count_equals_weyl_dim", agree);
            ctx.out.result = json!({"lambda": io::weight_to_json(&l), "patterns": count, "weyl_dim": dim.to_string()});
            ctx.out.text = format!("{l}: {count} patterns, Weyl dimension {dim}\n");
        }
        FflvCmd::Minkowski { lambda, other } => {
            let l = lambda_of(lambda, ctx.global.n)?;
            let m = lambda_of(other, Some(l.n()))?;
            let ok = minkowski_check(&l, &m)?;
            ctx.out.n = Some(l.n());
            ctx.verdict("minkowski", ok);
            ctx.out.result = json!({"lambda": io::weight_to_json(&l), "other": io::weight_to_json(&m), "minkowski": ok});
            ctx.out.text = format!("Pi({l}) + Pi({m}) = Pi({}): {}\n", l.add(&m)?, pass(ok));
        }
    }
    Ok(())
}

fn tableau_from_json(v: &Value) -> Result<PBWTableau> {
    let shape: Vec<u32> = serde_json::from_value(v.get("shape").cloned().ok_or_else(|| anyhow!("tableau without \"shape\""))?)
        .context("\"shape\" must be a list of nonnegative integers")?;
    let columns: Vec<Vec<usize>> = serde_json::from_value(v.get("columns").cloned().ok_or_else(|| anyhow!("tableau without \"columns\""))?)
        .context("\"columns\" must be a list of integer lists")?;
    let n = shape.len() + 1;
    Ok(PBWTableau::new(DominantWeight::new(n, shape)?, columns)?)
}

fn tableaux(ctx: &mut Ctx, cmd: &TableauxCmd) -> Result<()> {
    match cmd {
        TableauxCmd::List { lambda } => {
            let l = lambda_of(lambda, ctx.global.n)?;
            let ys = enumerate_ssyt(&l);
            ctx.out.n = Some(l.n());
            ctx.out.result = json!({"lambda": io::weight_to_json(&l), "count": ys.len(),
                "tableaux": ys.iter().map(|y| json!(y.columns())).collect::<Vec<_>>()});
            ctx.out.text = ys.iter().map(|y| format!("{:?}\n", y.columns())).collect();
        }
        TableauxCmd::Tau { tableau } => {
            let y = tableau_from_json(&ctx.read_json(tableau)?)?;
            ctx.out.n = Some(y.n());
            let t = tau(&y)?;
            ctx.out.result = io::pattern_to_json(&t);
            ctx.out.text = t.to_string();
        }
        TableauxCmd::Zeta { pattern, lambda } => {
            let t = io::pattern_from_json(&ctx.read_json(pattern)?)?;
            let l = lambda_of(lambda, Some(t.n()))?;
            ctx.out.n = Some(l.n());
            let y = zeta(&t, &l)?;
            ctx.out.result = io::tableau_to_json(&y);
            ctx.out.text = format!("{:?}\n", y.columns());
        }
        TableauxCmd::RoundTrip { lambda } => {
            let l = lambda_of(lambda, ctx.global.n)?;
            ctx.out.n = Some(l.n());
            let patterns = enumerate_patterns(&l);
            let ys = enumerate_ssyt(&l);
            let forward = patterns.iter().all(|p| zeta(p, &l).and_then(|y| tau(&y)).ok().as_ref() == Some(p));
            let backward = ys.iter().all(|y| tau(y).and_then(|p| zeta(&p, &l)).ok().as_ref() == Some(y));
            ctx.verdict("tau_after_zeta", forward);
            ctx.verdict("zeta_after_tau", backward);
            ctx.out.result = json!({"patterns": patterns.len(), "tableaux": ys.len(), "tau_after_zeta": forward, "zeta_after_tau": backward});
            ctx.out.text = format!(
                "{} patterns, {} tableaux\ntau(zeta(T)) = T: {}\nzeta(tau(Y)) = Y: {}\n",
                patterns.len(),
                ys.len(),
                pass(forward),
                pass(backward)
            );
        }
    }
    Ok(())
}

fn ring_for(ctx: &mut Ctx, n: usize) -> Result<PlueckerIdeal> {
    let d = ctx.d(n)?;
    Ok(PlueckerIdeal::new(n, &d)?)
}

fn per_mu<F>(ctx: &mut Ctx, mus: &[Vec<u32>], check: F) -> Result<()>
where
    F: Fn(&[u32]) -> pbw_degen::Result<bool> + Sync,
{
    let pool = ctx.pool()?;
    let results: Vec<pbw_degen::Result<bool>> = pool.install(|| mus.par_iter().map(|mu| check(mu)).collect());
    let mut rows = Vec::new();
    let mut text = String::new();
    for (mu, r) in mus.iter().zip(results) {
        let ok = r?;
        let key = format!("mu={}", mu_key(mu));
        let _ = writeln!(text, "{key}: {}", pass(ok));
        rows.push(json!({"mu": mu, "holds": ok}));
        ctx.verdict(key, ok);
    }
    ctx.out.result = Value::Array(rows);
    ctx.out.text = text;
    Ok(())
}

fn ideal(ctx: &mut Ctx, cmd: &IdealCmd) -> Result<()> {
    match cmd {
        IdealCmd::Gen => {
            let n = ctx.n()?;
            let ideal = ring_for(ctx, n)?;
            let rels = ideal.relations();
            ctx.out.result = json!({"n": n, "d": ideal.ring().d(), "count": rels.len(),
                "relations": rels.iter().map(io::polynomial_to_json).collect::<Vec<_>>()});
            ctx.out.text = rels.iter().map(|f| format!("{f}\n")).collect();
        }
        IdealCmd::Initial => {
            let a = ctx.weights()?;
            let ideal = ring_for(ctx, a.n())?;
            let mu = ctx.mu(ideal.ring().d())?.ok_or_else(|| anyhow!("--mu is required"))?;
            ctx.guard(a.n(), mu.iter().sum())?;
            let cb = ideal.degenerate_component(&a, &mu)?;
            let weyl = weyl_dim(&ideal.ring().weight_of(&mu));
            let matches = cb.codim_matches_weyl();
            let monomial = cb.contains_monomial();
            let rows = cb.polynomials();
            ctx.verdict("codim_equals_weyl_dim", matches);
            ctx.verdict("monomial_free", monomial.is_none());
            ctx.out.result = json!({
                "mu": mu, "dim": cb.dim(), "rank": cb.rank(), "codim": cb.codim(), "weyl_dim": weyl.to_string(),
                "monomial": monomial.as_ref().map(io::monomial_to_json),
                "basis": rows.iter().map(io::polynomial_to_json).collect::<Vec<_>>(),
            });
            let mut text: String = rows.iter().map(|f| format!("{f}\n")).collect();
            let _ = writeln!(text, "dim R_mu = {}, rank = {}, codim = {} (Weyl dimension {weyl})", cb.dim(), cb.rank(), cb.codim());
            if let Some(m) = monomial {
                let _ = writeln!(text, "contains the monomial {m}");
            }
            ctx.out.text = text;
        }
        IdealCmd::CheckQuadratic => {
            let a = ctx.weights()?;
            if !a.check_cone_membership() {
                bail!("the weight system is not in the cone");
            }
            let ideal = ring_for(ctx, a.n())?;
            let mus = ctx.multidegrees(ideal.ring())?;
            per_mu(ctx, &mus, |mu| ideal.quadratic_generation_check(&a, mu))?;
        }
        IdealCmd::CheckFaceDegeneration { weights_b } => {
            let a = ctx.weights()?;
            let b = ctx.weights_from(weights_b)?;
            if a.n() != b.n() {
                bail!("the two weight systems have different n");
            }
            let ideal = ring_for(ctx, a.n())?;
            let mus = ctx.multidegrees(ideal.ring())?;
            // surfaces the face-order precondition before any parallel work
            ideal.face_degeneration_check(&a, &b, &mus[0])?;
            per_mu(ctx, &mus, |mu| ideal.face_degeneration_check(&a, &b, mu))?;
        }
    }
    Ok(())
}

fn rep(ctx: &mut Ctx, cmd: &RepCmd) -> Result<()> {
    match cmd {
        RepCmd::Dim { lambda } => {
            let a = ctx.weights()?;
            let l = lambda_of(lambda, Some(a.n()))?;
            let dim = cyclic_module_dim(&a, &l)?;
            let patterns = enumerate_patterns(&l).len();
            ctx.verdict("dim_equals_patterns", dim == patterns);
            ctx.out.result = json!({"lambda": io::weight_to_json(&l), "dim": dim, "patterns": patterns, "weyl_dim": weyl_dim(&l).to_string()});
            ctx.out.text = format!("dim = {dim} ({patterns} patterns)\n");
        }
        RepCmd::FflvCheck { lambda } => {
            let a = ctx.weights()?;
            let l = lambda_of(lambda, Some(a.n()))?;
            let ok = fflv_basis_check(&a, &l)?;
            ctx.verdict("fflv_basis", ok);
            ctx.out.result = json!({"lambda": io::weight_to_json(&l), "fflv_basis": ok});
            ctx.out.text = format!("pattern monomials form a basis: {}\n", pass(ok));
        }
        RepCmd::AnnihilatorCheck { lambda } => {
            let a = ctx.weights()?;
            let l = lambda_of(lambda, Some(a.n()))?;
            let ok = annihilator_monomial_check(&a, &l)?;
            ctx.verdict("monomial_annihilator", ok);
            ctx.out.result = json!({"lambda": io::weight_to_json(&l), "monomial_annihilator": ok});
            ctx.out.text = format!("annihilator spanned by non-pattern monomials: {}\n", pass(ok));
        }
        RepCmd::PsiCheck { relations } => {
            let v = ctx.read_json(relations)?;
            let mode = match ctx.global.weights.clone() {
                Some(path) => ActionMode::degenerate(ctx.weights_from(&path)?)?,
                None => {
                    let n = match v.get("n").and_then(Value::as_u64) {
                        Some(n) => n as usize,
                        None => ctx.n()?,
                    };
                    ActionMode::classical(n)
                }
            };
            ctx.out.n = Some(mode.n());
            let polys: Vec<GradedPolynomial> = io::polynomials_from_json(mode.n(), &v)?;
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut all = true;
            for f in &polys {
                let ok = psi_substitution_check(f, &mode)?;
                all &= ok;
                rows.push(json!({"relation": io::polynomial_to_json(f), "vanishes": ok}));
                let _ = writeln!(text, "{}: {f}", if ok { "vanishes" } else { "NONZERO " });
            }
            ctx.verdict("all_vanish", all);
            ctx.out.result = Value::Array(rows);
            ctx.out.text = text;
        }
    }
    Ok(())
}

fn trop(ctx: &mut Ctx, cmd: &TropCmd) -> Result<()> {
    match cmd {
        TropCmd::Map => {
            let a = ctx.weights()?;
            let s = map_h(&a)?;
            ctx.out.result = io::point_to_json(&s);
            ctx.out.text = s.values().iter().map(|(i, v)| format!("s_{{{}}} = {}\n", i.key(), pbw_degen::poly::format_rational(v))).collect();
        }
        TropCmd::Check { point } => {
            let s = io::point_from_json(&ctx.read_json(point)?)?;
            ctx.out.n = Some(s.n());
            let d = ctx.d(s.n())?;
            let bound = ctx.degree_bound();
            ctx.guard(s.n(), bound)?;
            let report = cone_c_membership(&s);
            let check = in_trop_necessary_check(&s, &d, bound)?;
            ctx.verdict("cone_member", report.member);
            ctx.verdict(format!("no_monomial_up_to_degree_{bound}"), check.passed);
            let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            ctx.out.result = json!({
                "cone_member": report.member,
                "was_normalized": report.was_normalized,
                "violations": violations,
                "monomial_free_up_to_degree": bound,
                "no_monomial_found": check.passed,
                "first_monomial": check.monomial.as_ref().map(|(mu, m)| json!({"mu": mu, "monomial": io::monomial_to_json(m)})),
            });
            let mut text = format!("in cone C: {}\n", pass(report.member));
            for v in &violations {
                let _ = writeln!(text, "violated: {v}");
            }
            match &check.monomial {
                None => {
                    let _ = writeln!(text, "no monomial found up to degree {bound}");
                }
                Some((mu, m)) => {
                    let _ = writeln!(text, "initial ideal contains the monomial {m} (mu = {})", mu_key(mu));
                }
            }
            ctx.out.text = text;
        }
        TropCmd::Witness { point } => {
            let s = io::point_from_json(&ctx.read_json(point)?)?;
            ctx.out.n = Some(s.n());
            match maximality_witness(&s)? {
                None => {
                    ctx.out.result = json!({"witness": null});
                    ctx.out.text = "point lies in C; no witness\n".into();
                }
                Some(w) => {
                    ctx.out.result = json!({
                        "violation": w.violation.to_string(),
                        "relation": io::polynomial_to_json(&w.relation),
                        "initial": io::polynomial_to_json(&w.initial),
                    });
                    ctx.out.text = format!("violated: {}\nrelation: {}\ninitial part: {}\n", w.violation, w.relation, w.initial);
                }
            }
        }
    }
    Ok(())
}

fn suite(ctx: &mut Ctx) -> Result<()> {
    let mut scale = match ctx.global.n {
        Some(n) => Scale::capped(n),
        None => Scale::full(),
    };
    if let Some(b) = ctx.global.degree_bound {
        scale.max_degree = b;
    }
    ctx.out.n = Some(scale.max_n);
    ctx.out.degree_bound = Some(scale.max_degree);
    let pool = ctx.pool()?;
    let results: Vec<_> = pool.install(|| CRITERIA.par_iter().map(|(id, _)| run_criterion(*id, &scale)).collect());
    let mut rows = Vec::new();
    let mut text = String::new();
    for ((id, name), r) in CRITERIA.iter().zip(results) {
        let r = r.map_err(|e| anyhow!("criterion {id} ({name}): {e}"))?;
        let _ = writeln!(text, "{r}");
        rows.push(json!({
            "id": id, "name": name, "passed": r.passed, "within_limit": r.within_limit(),
            "checks": r.checks, "detail": r.detail, "seconds": r.elapsed.as_secs_f64(),
        }));
        ctx.verdict(format!("{id:02} {name}"), r.ok());
    }
    ctx.out.result = Value::Array(rows);
    ctx.out.text = text;
    Ok(())
}
