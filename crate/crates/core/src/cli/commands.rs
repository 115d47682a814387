use super::selftest::run_selftest;
use super::{Command, Ctx, DimMethod, FixtureArgs, GraphCmd, GroupCmd, HadCmd, KnotCmd, NetCmd, TlCmd};
use crate::biunitary::{
    components, dim_pu_k, dim_pu_k_transfer, prop_21117_check, profile, standardness_report, GenHadamard, ProfileMatrix, DIM_PU_TOL,
};
use crate::coeff::{rat_to_json, Coeff, Rational, Scalar};
use crate::grouppa::{dim_pk, FiniteGroup, LabelMap};
use crate::network::{
    a4_evaluate, chromatic, eval_spin_normalized, eval_spin_raw, eval_vertex, exact_power, f_exponent, kauffman_bracket, Normalized,
    PDLink, ShadedNetwork, SpinLabel, VertexLabel, VertexNetwork,
};
use crate::pathalg::{ade_admissibility, build_tree, perron_trace, runs, walk_basis, word_trace, Ade, PrincipalGraph, TreeSpec};
use crate::tl::{catalan, gram_matrix, gram_rank, jones_wenzl, tl_basis, Side, TLElement, TLParams};
use crate::{Error, Result};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;

const BASIS_GUARD: u128 = 1_000_000;
const GRAM_GUARD: u128 = 2_000;

type Output = (Value, Option<Value>);

pub(crate) fn run(cmd: &Command, ctx: &mut Ctx) -> Result<Output> {
    match cmd {
        Command::Tl(c) => tl(c, ctx).map(|v| (v, None)),
        Command::Net(NetCmd::Eval) => net_eval(ctx).map(|v| (v, None)),
        Command::Knot(c) => knot(c, ctx).map(|v| (v, None)),
        Command::Had(c) => had(c, ctx),
        Command::Graph(c) => graph(c, ctx).map(|v| (v, None)),
        Command::Group(c) => group(c, ctx).map(|v| (v, None)),
        Command::Fixtures(a) => fixtures(a, ctx),
        Command::Selftest => {
            ctx.mode = "mixed".into();
            let checks = run_selftest(ctx.common.seed);
            let failed = checks.iter().filter(|c| !c.pass).count();
            let list: Vec<Value> = checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect();
            Ok((json!({"checks": list, "passed": checks.len() - failed, "failed": failed}), None))
        }
    }
}

/// Loop value given on the command line: `5/2` and `3` are exact, `2.5` and
/// `2cos(pi/5)` are binary64.
#[derive(Clone, Debug, PartialEq)]
pub enum Delta {
    Exact(Rational),
    Float(f64),
}

impl Delta {
    pub fn parse(s: &str) -> Result<Delta> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Ok(r) = t.parse::<Rational>() {
            return Ok(Delta::Exact(r));
        }
        let body = t.strip_prefix("2cos(pi/").or_else(|| t.strip_prefix("2*cos(pi/")).and_then(|r| r.strip_suffix(')'));
        if let Some(n) = body {
            let n: f64 = n.parse().map_err(|_| Error::Usage(format!("bad loop value {s}")))?;
            return Ok(Delta::Float(2.0 * (std::f64::consts::PI / n).cos()));
        }
        t.parse::<f64>().map(Delta::Float).map_err(|_| Error::Usage(format!("bad loop value {s}")))
    }

    pub fn as_f64(&self) -> f64 {
        match self {
            Delta::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Delta::Float(x) => *x,
        }
    }
}

fn to_float_element(v: &Value) -> Result<Value> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("element: expected a list of [diagram, scalar]".into()))?;
    arr.iter()
        .map(|t| {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse("element term".into()))?;
            Ok(json!([pair[0], Scalar::from_json(&pair[1])?.to_complex()?.to_json()]))
        })
        .collect::<Result<Vec<_>>>()
        .map(Value::Array)
}

fn tl(cmd: &TlCmd, ctx: &mut Ctx) -> Result<Value> {
    match cmd {
        TlCmd::Basis { k } => {
            ctx.mode = "integer".into();
            if catalan(*k) > BASIS_GUARD {
                return Err(Error::SizeGuard(format!("Catalan({k}) = {} diagrams", catalan(*k))));
            }
            let b = tl_basis(*k);
            Ok(json!({"k": k, "count": b.len(), "diagrams": b.iter().map(|d| d.to_json()).collect::<Vec<_>>()}))
        }
        TlCmd::Mul { delta1, delta2 } => {
            let (a, b) = (ctx.input(0)?, ctx.input(1)?);
            match (Delta::parse(delta1)?, Delta::parse(delta2)?) {
                (Delta::Exact(d1), Delta::Exact(d2)) => {
                    let x = TLElement::<Rational>::from_json(&a, None)?;
                    let y = TLElement::<Rational>::from_json(&b, None)?;
                    let p = x.mul(&y, &TLParams::new(d1, d2)?)?;
                    Ok(json!({"terms": p.len(), "product": p.to_json()}))
                }
                (d1, d2) => {
                    ctx.mode = "float".into();
                    let x = TLElement::<Complex64>::from_json(&to_float_element(&a)?, None)?;
                    let y = TLElement::<Complex64>::from_json(&to_float_element(&b)?, None)?;
                    let c = |d: Delta| Complex64::new(d.as_f64(), 0.0);
                    let p = x.mul(&y, &TLParams::new(c(d1), c(d2))?)?;
                    Ok(json!({"terms": p.len(), "product": p.to_json()}))
                }
            }
        }
        TlCmd::Jw { k, delta } => match Delta::parse(delta)? {
            Delta::Exact(d) => {
                let f = jones_wenzl(*k, &d, 0.0)?;
                let tr = f.normalized_trace(&TLParams::spherical(d)?, Side::Left)?;
                Ok(json!({"k": k, "delta": delta, "terms": f.len(), "trace": tr.to_scalar().to_json(), "element": f.to_json()}))
            }
            Delta::Float(x) => {
                ctx.mode = "float".into();
                let tol = ctx.tol("semisimplicity", 1e-9);
                let d = Complex64::new(x, 0.0);
                let f = jones_wenzl(*k, &d, tol)?;
                let tr = f.normalized_trace(&TLParams::spherical(d)?, Side::Left)?;
                Ok(json!({"k": k, "delta": delta, "terms": f.len(), "trace": tr.to_scalar().to_json(), "element": f.to_json()}))
            }
        },
        TlCmd::Gram { k, delta, rank } => {
            let d = Delta::parse(delta)?;
            if catalan(*k) > GRAM_GUARD {
                return Err(Error::SizeGuard(format!("Gram matrix of size {}", catalan(*k))));
            }
            match d {
                Delta::Exact(r) if !rank => {
                    let g = gram_matrix(*k, &TLParams::spherical(r)?);
                    let rows: Vec<Vec<Value>> = g.iter().map(|row| row.iter().map(|c| c.to_scalar().to_json()).collect()).collect();
                    Ok(json!({"k": k, "dim": catalan(*k), "matrix": rows}))
                }
                d => {
                    ctx.mode = "float".into();
                    let tol = ctx.tol("rank_relative_pivot", 1e-6);
                    Ok(json!({"k": k, "dim": catalan(*k), "rank": gram_rank(*k, d.as_f64(), tol)}))
                }
            }
        }
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key}")))
}

fn uint(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| Error::Parse(format!("{key} must be a non-negative integer")))
}

/// `{"name": {"arity" | "indices": r, "entries": [[[i1..ir], scalar], ...]}}`,
/// indices 1-based.
fn raw_labels(v: &Value, arity_key: &str) -> Result<Vec<(String, usize, Vec<(Vec<usize>, Scalar)>)>> {
    let Some(obj) = v.get("labels") else { return Ok(vec![]) };
    let obj = obj.as_object().ok_or_else(|| Error::Parse("labels must be an object".into()))?;
    let mut out = Vec::new();
    for (name, l) in obj {
        let r = uint(l, arity_key)?;
        let mut entries = Vec::new();
        for e in field(l, "entries")?.as_array().ok_or_else(|| Error::Parse(format!("label {name}: entries")))? {
            let pair = e.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse(format!("label {name}: entry must be [indices, scalar]")))?;
            let idx: Vec<usize> = serde_json::from_value(pair[0].clone()).map_err(|e| Error::Parse(format!("label {name}: {e}")))?;
            if idx.len() != r || idx.contains(&0) {
                return Err(Error::Parse(format!("label {name}: entry {:?} needs {r} indices, 1-based", idx)));
            }
            entries.push((idx, Scalar::from_json(&pair[1])?));
        }
        out.push((name.clone(), r, entries));
    }
    Ok(out)
}

fn convert<C: Coeff>(s: &Scalar, float: bool) -> Result<C> {
    let s = if float { s.to_complex()? } else { s.clone() };
    C::from_scalar(&s).ok_or_else(|| Error::Parse(format!("unsupported scalar tag {}", s.tag())))
}

fn spin_labels<C: Coeff>(raw: &[(String, usize, Vec<(Vec<usize>, Scalar)>)], q: usize, zero: &C, float: bool) -> Result<BTreeMap<String, SpinLabel<C>>> {
    let mut out = BTreeMap::new();
    for (name, r, entries) in raw {
        let es = entries.iter().map(|(i, s)| Ok((i.clone(), convert::<C>(s, float)?))).collect::<Result<Vec<_>>>()?;
        out.insert(name.clone(), SpinLabel::from_entries(q, *r, zero, &es)?);
    }
    Ok(out)
}

fn table_json<C: Coeff>(t: &SpinLabel<C>) -> Value {
    match t.scalar() {
        Some(c) => json!({"value": c.to_scalar().to_json()}),
        None => json!({"entries": t.entries().into_iter().map(|(i, c)| json!([i, c.to_scalar().to_json()])).collect::<Vec<_>>()}),
    }
}

fn net_eval(ctx: &mut Ctx) -> Result<Value> {
    let v = ctx.input(0)?;
    let raw = if v.get("strings").is_some() { raw_labels(&v, "indices")? } else { raw_labels(&v, "arity")? };
    let float = raw.iter().any(|(_, _, es)| es.iter().any(|(_, s)| !s.is_exact()));
    if float {
        ctx.mode = "float".into();
    }
    if v.get("strings").is_some() {
        let n = uint(&v, "n")?;
        let net: VertexNetwork = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("vertex network: {e}")))?;
        return if float { vertex_eval::<Complex64>(&net, n, &raw, Complex64::new(1.0, 0.0)) } else { vertex_eval(&net, n, &raw, Rational::from_integer(1.into())) };
    }
    let q = uint(&v, "q")?;
    let net: ShadedNetwork = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("network: {e}")))?;
    net.validate()?;
    if float {
        let one = Complex64::new(1.0, 0.0);
        let labels = spin_labels(&raw, q, &one.zero_like(), true)?;
        let z = eval_spin_raw(&net, q, &labels, &one)?;
        let mut out = json!({"q": q, "raw": table_json(&z)});
        if net.smoothing.is_some() {
            let e = f_exponent(&net)?;
            let f = (q as f64).powf(e.to_f64().unwrap_or(f64::NAN));
            out["exponent"] = rat_to_json(&e);
            out["normalized"] = table_json(&z.map(|c| c * f));
        }
        return Ok(out);
    }
    let one = Rational::from_integer(1.into());
    let labels = spin_labels(&raw, q, &one.zero_like(), false)?;
    let z = eval_spin_raw(&net, q, &labels, &one)?;
    let mut out = json!({"q": q, "raw": table_json(&z)});
    if net.smoothing.is_some() {
        let (e, norm) = eval_spin_normalized(&net, q, &labels)?;
        out["exponent"] = rat_to_json(&e);
        out["normalized"] = match norm {
            Normalized::Exact(t) => table_json(&t),
            Normalized::Float(t) => {
                ctx.mode = "float".into();
                table_json(&t)
            }
        };
        out["normalization_exact"] = json!(exact_power(q as u64, &e).is_some());
    }
    Ok(out)
}

fn vertex_eval<C: Coeff>(net: &VertexNetwork, n: usize, raw: &[(String, usize, Vec<(Vec<usize>, Scalar)>)], one: C) -> Result<Value> {
    let float = one.to_scalar().tag() == "c";
    let zero = one.zero_like();
    let mut labels = BTreeMap::new();
    for (name, r, entries) in raw {
        let mut map: HashMap<Vec<usize>, C> = HashMap::new();
        for (i, s) in entries {
            if i.iter().any(|&x| x > n) {
                return Err(Error::Parse(format!("label {name}: index out of range 1..{n}")));
            }
            map.insert(i.iter().map(|x| x - 1).collect(), convert::<C>(s, float)?);
        }
        labels.insert(name.clone(), VertexLabel::from_fn(n, *r, |idx| map.get(idx).cloned().unwrap_or_else(|| zero.clone()))?);
    }
    let z = eval_vertex(net, n, &labels, &one)?;
    let value = match z.scalar() {
        Some(c) => json!({"value": c.to_scalar().to_json()}),
        None => {
            let mut entries = Vec::new();
            let r = z.indices();
            for (slot, c) in z.values().iter().enumerate() {
                if !c.is_zero() {
                    let mut idx = vec![0usize; r];
                    let mut s = slot;
                    for i in (0..r).rev() {
                        idx[i] = s % n + 1;
                        s /= n;
                    }
                    entries.push(json!([idx, c.to_scalar().to_json()]));
                }
            }
            json!({"entries": entries})
        }
    };
    Ok(json!({"n": n, "raw": value}))
}

fn knot(cmd: &KnotCmd, ctx: &mut Ctx) -> Result<Value> {
    let v = ctx.input(0)?;
    match cmd {
        KnotCmd::Bracket { var } => {
            let link = PDLink::from_json(&v)?;
            let p = kauffman_bracket(&link, var)?;
            Ok(json!({"crossings": link.crossings.len(), "bracket": p.to_json(), "text": p.to_string()}))
        }
        KnotCmd::Chromatic { q } => {
            ctx.mode = "integer".into();
            let n = uint(&v, "vertices")?;
            let edges: Vec<(usize, usize)> = serde_json::from_value(field(&v, "edges")?.clone()).map_err(|e| Error::Parse(format!("graph edges: {e}")))?;
            let c = chromatic(n, &edges, *q)?;
            let count = c.to_i64().map_or_else(|| json!(c.to_string()), |x| json!(x));
            Ok(json!({"vertices": n, "edges": edges.len(), "q": q, "count": count}))
        }
        KnotCmd::A4 => {
            let net: ShadedNetwork = serde_json::from_value(v).map_err(|e| Error::Parse(format!("network: {e}")))?;
            let z = a4_evaluate(&net)?;
            Ok(json!({"value": rat_to_json(&z), "text": z.to_string()}))
        }
    }
}

fn hadamard_fixture(family: &str, q: usize) -> Result<GenHadamard> {
    match family {
        "fourier" => GenHadamard::fourier(q),
        "sylvester" if q.is_power_of_two() => GenHadamard::sylvester(q.trailing_zeros()),
        "sylvester" => Err(Error::Invalid(format!("Sylvester size {q} is not a power of two"))),
        "paley" => GenHadamard::paley(q),
        f => Err(Error::Usage(format!("unknown Hadamard family {f}"))),
    }
}

fn profile_json(p: &ProfileMatrix) -> Value {
    let q = p.q();
    let n = q * q;
    let mut nonzero = 0;
    let mut rows = Vec::new();
    for ab in 0..n {
        let mut row = Vec::new();
        for cd in 0..n {
            let (a, b, c, d) = (ab / q, ab % q, cd / q, cd % q);
            if p.is_nonzero(a, b, c, d) {
                nonzero += 1;
            }
            let z = p.get(a, b, c, d);
            row.push(json!([z.re, z.im]));
        }
        rows.push(row);
    }
    let mut out = json!({"q": q, "nonzero": nonzero, "hermitian": p.is_hermitian()});
    if q <= 6 {
        out["matrix"] = json!(rows);
    }
    out
}

fn had(cmd: &HadCmd, ctx: &mut Ctx) -> Result<Output> {
    if let HadCmd::Make { family, q } = cmd {
        let h = hadamard_fixture(family, *q)?;
        h.validate()?;
        return Ok((json!({"family": family, "q": q}), Some(h.to_json())));
    }
    let mut h = GenHadamard::from_json(&ctx.input(0)?)?;
    if let Some(stored) = h.tol() {
        ctx.mode = "float".into();
        // --tol overrides a tolerance stored in the file.
        let t = ctx.tol("zero_test", stored);
        h = GenHadamard::from_complex(h.to_complex_rows(), t)?;
    }
    let out = match cmd {
        HadCmd::Validate => {
            let r = h.validate()?;
            json!({"q": r.q, "mode": r.mode, "valid": true})
        }
        HadCmd::Profile => profile_json(&profile(&h)),
        HadCmd::Components => {
            let c = components(&h)?;
            json!({
                "q": c.q,
                "count": c.count(),
                "sizes": c.sizes(),
                "traces": c.traces().iter().map(rat_to_json).collect::<Vec<_>>(),
                "members": c.members,
            })
        }
        HadCmd::Standard => {
            let s = standardness_report(&h)?;
            json!({"q": s.q, "count": s.count, "standard": s.standard, "verdict": s.verdict()})
        }
        HadCmd::Check2117 => match prop_21117_check(&h) {
            Ok(r) => json!({"hypotheses_met": true, "star": r.star, "cycle": r.cycle, "dim_p2": r.dim_p2, "conclusion_holds": r.conclusion_holds}),
            Err(Error::HypothesisNotMet(m)) => json!({"hypotheses_met": false, "reason": m}),
            Err(e) => return Err(e),
        },
        HadCmd::Dimk { k, method } => {
            ctx.mode = "float".into();
            ctx.fixed_tol("rank_relative_pivot", DIM_PU_TOL);
            let mut out = json!({"q": h.q(), "k": k, "catalan": catalan(*k).to_string()});
            if matches!(method, DimMethod::Sigma | DimMethod::Both) {
                out["dim_sigma"] = json!(dim_pu_k(&h, *k)?);
            }
            if matches!(method, DimMethod::Transfer | DimMethod::Both) {
                out["dim_transfer"] = json!(dim_pu_k_transfer(&h, *k)?);
            }
            out
        }
        HadCmd::Make { .. } => unreachable!(),
    };
    Ok((out, None))
}

fn graph(cmd: &GraphCmd, ctx: &mut Ctx) -> Result<Value> {
    match cmd {
        GraphCmd::Walks { k } => {
            ctx.mode = "integer".into();
            let g = PrincipalGraph::from_json(&ctx.input(0)?)?;
            let w = walk_basis(&g, *k)?;
            let walks: Vec<Value> = w.iter().map(|w| json!({"vertices": w.vertices, "steps": w.steps})).collect();
            Ok(json!({"k": k, "count": walks.len(), "walks": walks}))
        }
        GraphCmd::Perron => {
            ctx.mode = "float".into();
            ctx.fixed_tol("eigen_residual", 1e-12);
            let g = PrincipalGraph::from_json(&ctx.input(0)?)?;
            let t = perron_trace(&g, None)?;
            Ok(json!({"delta": t.delta, "trace": t.t}))
        }
        GraphCmd::Tree { spec, depth, delta } => {
            let sv = ctx.read(spec)?;
            let mut s: TreeSpec = serde_json::from_value(sv).map_err(|e| Error::Parse(format!("tree spec: {e}")))?;
            if let Some(d) = depth {
                s.depth = *d;
            }
            let (g, words) = build_tree(&s)?;
            let names: Vec<String> = words.iter().map(|w| w.iter().map(|&p| s.symbols[p].name.as_str()).collect::<Vec<_>>().join(" ")).collect();
            let mut out = json!({"depth": s.depth, "level_sizes": tree_levels(&g, s.depth), "words": names, "graph": g.to_json()});
            if let Some(d) = delta {
                ctx.mode = "float".into();
                let d = Complex64::new(Delta::parse(d)?.as_f64(), 0.0);
                let traces = words
                    .iter()
                    .map(|w| {
                        let r: Vec<(Complex64, usize)> = runs(w).into_iter().map(|(p, m)| (Complex64::new(s.symbols[p].tau, 0.0), m)).collect();
                        word_trace(&r, &d).map(|z| z.re)
                    })
                    .collect::<Result<Vec<_>>>()?;
                out["traces"] = json!(traces);
            }
            Ok(out)
        }
        GraphCmd::Ade { family, n } => {
            let v = ade_admissibility(Ade::parse(family, *n)?)?;
            ctx.fixed_tol("coxeter_fit", 1e-9);
            let values: Vec<[f64; 2]> = v.chirality_values().iter().map(|z| [z.re, z.im]).collect();
            Ok(json!({
                "graph": v.graph,
                "critical_depth": v.critical_depth,
                "coxeter": v.coxeter,
                "chirality_exponents": v.chirality,
                "chirality": values,
                "admissible": v.admissible,
            }))
        }
    }
}

fn tree_levels(g: &PrincipalGraph, depth: usize) -> Vec<usize> {
    let mut c = g.depth_counts();
    c.resize(depth + 1, 0);
    c
}

fn group(cmd: &GroupCmd, ctx: &mut Ctx) -> Result<Value> {
    let GroupCmd::Dim { group, labels, k } = cmd;
    ctx.mode = "integer".into();
    let g = FiniteGroup::from_json(&ctx.read(group)?)?;
    let l = LabelMap::from_json(&ctx.read(labels)?, &g)?;
    let d = dim_pk(&g, &l, *k)?;
    Ok(json!({"order": g.order(), "labels": l.len(), "k": k, "dim": d.to_string()}))
}

/// Fixture JSON for one family.
pub fn fixture(family: &str, q: Option<usize>, name: Option<&str>, depth: Option<usize>) -> Result<Value> {
    let need_q = || q.ok_or_else(|| Error::Usage(format!("family {family} needs --q")));
    let need_name = || name.ok_or_else(|| Error::Usage(format!("family {family} needs --name")));
    match family {
        "fourier" | "sylvester" | "paley" => {
            let h = hadamard_fixture(family, need_q()?)?;
            h.validate()?;
            Ok(h.to_json())
        }
        "ade" => {
            let n = need_name()?;
            let (f, rest) = n.split_at(n.chars().next().map_or(0, char::len_utf8));
            let num = rest.parse::<usize>().map_err(|_| Error::Usage(format!("bad ADE name {n}")))?;
            Ok(Ade::parse(f, Some(num))?.graph()?.to_json())
        }
        "pd" => match need_name()? {
            "unknot" => Ok(PDLink::unknot().to_json()),
            "hopf" => Ok(PDLink::hopf().to_json()),
            "trefoil" => Ok(PDLink::trefoil().to_json()),
            n => Err(Error::Usage(format!("unknown PD fixture {n}"))),
        },
        "tree" => Ok(serde_json::to_value(TreeSpec::two_projection_example(depth.unwrap_or(5))).expect("tree spec serializes")),
        "cyclic" => Ok(FiniteGroup::cyclic(need_q()?).to_json()),
        f => Err(Error::Usage(format!("unknown fixture family {f}"))),
    }
}

/// File name and contents of the standard fixture corpus.
pub fn fixture_corpus() -> Result<Vec<(String, Value)>> {
    let mut out = Vec::new();
    for q in 2..=7 {
        out.push((format!("fourier{q}.json"), fixture("fourier", Some(q), None, None)?));
    }
    out.push(("sylvester16.json".into(), fixture("sylvester", Some(16), None, None)?));
    out.push(("paley12.json".into(), fixture("paley", Some(12), None, None)?));
    for n in ["A2", "A3", "A4", "A5", "D4", "D5", "D6", "D7", "E6", "E7", "E8"] {
        out.push((format!("{}.json", n.to_lowercase()), fixture("ade", None, Some(n), None)?));
    }
    for n in ["unknot", "hopf", "trefoil"] {
        out.push((format!("{n}.json"), fixture("pd", None, Some(n), None)?));
    }
    out.push(("tree.json".into(), fixture("tree", None, None, None)?));
    for q in 1..=3 {
        out.push((format!("cyclic{q}.json"), fixture("cyclic", Some(q), None, None)?));
    }
    Ok(out)
}

fn fixtures(a: &FixtureArgs, ctx: &mut Ctx) -> Result<Output> {
    ctx.mode = "exact".into();
    if a.all {
        let dir = ctx
            .common
            .out
            .clone()
            .or_else(|| std::env::var_os("PLANAR_FIXTURES").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("fixtures"));
        std::fs::create_dir_all(&dir).map_err(|e| Error::Invalid(format!("{}: {e}", dir.display())))?;
        let mut files = Vec::new();
        for (name, v) in fixture_corpus()? {
            let p = dir.join(&name);
            let body = serde_json::to_string_pretty(&v).expect("json values serialize") + "\n";
            std::fs::write(&p, body).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
            files.push(name);
        }
        return Ok((json!({"dir": dir.display().to_string(), "files": files}), None));
    }
    let family = a.family.as_deref().ok_or_else(|| Error::Usage("--family or --all is required".into()))?;
    let v = fixture(family, a.q, a.name.as_deref(), a.depth)?;
    Ok((json!({"family": family}), Some(v)))
}
