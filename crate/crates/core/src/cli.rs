//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on usage or parse errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::derivations::{build_basis_for_ideal, saito_check, BuildOptions, NuPolicy};
use crate::error::Error;
use crate::lattice::{characteristic_polynomial, default_primes, point_count_charpoly, IntPoly};
use crate::localheight::{coxeter_deficit, decomposition_pair_count, sum_pair_count, verify_local_global};
use crate::matengine::run_induction;
use crate::partition::{height_distribution, ideal_exponents, product_exponents, ExponentRecord};
use crate::rootposet::{enumerate_ideals, ideal_closure, truncation_ideal, Ideal};
use crate::rootsys::{ProductRootSystem, Root, RootSystem, RootSystemType};

pub const RANK_LIMIT_ENV: &str = "IDEALARR_RANK_LIMIT";
const DEFAULT_RANK_LIMIT: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "idealarr", version, about = "Ideal subarrangements of Weyl arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Positive roots in canonical order.
    Roots(RootsArgs),
    /// Ideals of the root poset.
    Ideals(IdealArgs),
    /// Height distribution and exponents of ideals.
    Exponents(ExponentsArgs),
    /// Characteristic polynomials from the intersection lattice.
    Charpoly(CharpolyArgs),
    /// Explicit free basis of the logarithmic derivation module.
    Basis(BasisArgs),
    /// Verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Summary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Main,
    Charpoly,
    LocalGlobal,
    Saito,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Nu {
    SmallestIndex,
    LargestIndex,
}

impl From<Nu> for NuPolicy {
    fn from(n: Nu) -> Self {
        match n {
            Nu::SmallestIndex => NuPolicy::SmallestIndex,
            Nu::LargestIndex => NuPolicy::LargestIndex,
        }
    }
}

#[derive(Args, Debug)]
pub struct Common {
    /// Root system type, e.g. `F4` or `A2xA1`.
    #[arg(long = "type", short = 't', value_name = "TYPE")]
    pub rtype: String,
    #[arg(long, value_enum, default_value_t = Format::Summary)]
    pub format: Format,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Default)]
#[group(multiple = false)]
pub struct IdealSpec {
    /// Generators as coefficient vectors, e.g. `[[1,1],[0,1]]`.
    #[arg(long)]
    pub generators: Option<String>,
    /// First `t` roots in canonical order; for products either one total or
    /// a comma-separated count per component.
    #[arg(long)]
    pub truncate: Option<String>,
    /// Every ideal of the root poset.
    #[arg(long)]
    pub all_ideals: bool,
}

impl IdealSpec {
    fn is_given(&self) -> bool {
        self.generators.is_some() || self.truncate.is_some() || self.all_ideals
    }
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub ideal: IdealSpec,
}

#[derive(Args, Debug)]
pub struct ExponentsArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub ideal: IdealSpec,
    /// Also compute the characteristic polynomial and compare its roots.
    #[arg(long)]
    pub lattice_check: bool,
}

#[derive(Args, Debug)]
pub struct CharpolyArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub ideal: IdealSpec,
    /// Cross-check against finite-field point counts.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct BasisArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub ideal: IdealSpec,
    /// Write the basis derivations as JSON to this file.
    #[arg(long, value_name = "PATH")]
    pub emit_derivations: Option<PathBuf>,
    /// Largest rank for symbolic computation [env: IDEALARR_RANK_LIMIT, default 4].
    #[arg(long)]
    pub rank_limit: Option<usize>,
    #[arg(long, value_enum, default_value_t = Nu::SmallestIndex)]
    pub nu: Nu,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub common: Common,
    /// Ideals to check; every ideal when omitted.
    #[command(flatten)]
    pub ideal: IdealSpec,
    /// charpoly suite: also compare with finite-field point counts.
    #[arg(long)]
    pub oracle: bool,
    /// saito suite: largest rank for symbolic computation.
    #[arg(long)]
    pub rank_limit: Option<usize>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(String, bool), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, ok)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            if ok {
                0
            } else {
                1
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Roots(a) => &a.common,
        Command::Ideals(a) => &a.common,
        Command::Exponents(a) => &a.common,
        Command::Charpoly(a) => &a.common,
        Command::Basis(a) => &a.common,
        Command::Verify(a) => &a.common,
    }
}

fn execute(cli: &Cli) -> CmdResult {
    let jobs = common(&cli.command).jobs;
    let body = || match &cli.command {
        Command::Roots(a) => cmd_roots(a),
        Command::Ideals(a) => cmd_ideals(a),
        Command::Exponents(a) => cmd_exponents(&a.common, &a.ideal, a.lattice_check, false),
        Command::Charpoly(a) => cmd_exponents(&a.common, &a.ideal, true, a.oracle),
        Command::Basis(a) => cmd_basis(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match jobs {
        Some(0) => Err(Failure::usage("--jobs must be positive")),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure::usage(e.to_string()))?
            .install(body),
        None => body(),
    }
}

fn parse_type(s: &str) -> Result<ProductRootSystem, Failure> {
    let t: RootSystemType = s.parse()?;
    Ok(ProductRootSystem::new(&t))
}

fn irreducible(s: &str, what: &str) -> Result<RootSystem, Failure> {
    let p = parse_type(s)?;
    match p.components() {
        [one] => Ok(one.clone()),
        _ => Err(Failure::usage(format!("{what} requires an irreducible type, got {s}"))),
    }
}

/// Resolves the effective symbolic rank limit: flag, then environment, then 4.
pub fn resolve_rank_limit(flag: Option<usize>, env: Option<&str>) -> Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{RANK_LIMIT_ENV}={v:?} is not a nonnegative integer")),
        None => Ok(DEFAULT_RANK_LIMIT),
    }
}

fn rank_limit(flag: Option<usize>) -> Result<usize, Failure> {
    let env = std::env::var(RANK_LIMIT_ENV).ok();
    resolve_rank_limit(flag, env.as_deref()).map_err(Failure::usage)
}

/// A selected ideal of a (possibly reducible) system: one ideal per component.
struct Selected {
    id: usize,
    parts: Vec<Ideal>,
}

impl Selected {
    fn size(&self) -> usize {
        self.parts.iter().map(Ideal::len).sum()
    }
}

fn split_truncation(p: &ProductRootSystem, t: usize) -> Result<Vec<usize>, Failure> {
    let total = p.num_positive_roots();
    if t > total {
        return Err(Error::TruncationOutOfRange { t, count: total }.into());
    }
    let mut order: Vec<(i64, usize, usize)> = p
        .components()
        .iter()
        .enumerate()
        .flat_map(|(c, rs)| (0..rs.num_positive_roots()).map(move |i| (rs.height(i), c, i)))
        .collect();
    order.sort_unstable();
    let mut counts = vec![0; p.components().len()];
    for &(_, c, _) in &order[..t] {
        counts[c] += 1;
    }
    Ok(counts)
}

fn select(p: &ProductRootSystem, spec: &IdealSpec, default_all: bool) -> Result<Vec<Selected>, Failure> {
    let comps = p.components();
    if let Some(g) = &spec.generators {
        let [rs] = comps else {
            return Err(Failure::usage("--generators is only supported for irreducible types"));
        };
        let vecs: Vec<Vec<i64>> = serde_json::from_str(g)
            .map_err(|e| Failure::usage(format!("--generators is not a JSON list of vectors: {e}")))?;
        let mut gens = crate::rootset::RootSet::empty();
        for v in vecs {
            if v.len() != rs.rank() {
                return Err(Error::DimensionMismatch {
                    expected: rs.rank(),
                    got: v.len(),
                }
                .into());
            }
            let i = rs.index_of(&v).ok_or(Error::NotAPositiveRoot(v))?;
            gens.insert(i);
        }
        return Ok(vec![Selected {
            id: 0,
            parts: vec![ideal_closure(rs, gens)?],
        }]);
    }
    if let Some(t) = &spec.truncate {
        let nums = t
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Failure::usage(format!("--truncate {t:?} is not a count or list of counts")))?;
        let counts = match nums.as_slice() {
            [n] => split_truncation(p, *n)?,
            _ if nums.len() == comps.len() => nums,
            _ => {
                return Err(Failure::usage(format!(
                    "--truncate needs 1 or {} counts, got {}",
                    comps.len(),
                    nums.len()
                )))
            }
        };
        let parts = comps
            .iter()
            .zip(counts)
            .map(|(rs, n)| truncation_ideal(rs, n))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(vec![Selected { id: 0, parts }]);
    }
    if !(spec.all_ideals || default_all) {
        return Err(Failure::usage(
            "an ideal is required: pass --generators, --truncate or --all-ideals",
        ));
    }
    let lists: Vec<Vec<Ideal>> = comps.iter().map(|rs| enumerate_ideals(rs).collect()).collect();
    let mut out = vec![Vec::new()];
    for list in &lists {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Ideal>| {
                list.iter().map(move |i| {
                    let mut v = prefix.clone();
                    v.push(*i);
                    v
                })
            })
            .collect();
    }
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(id, parts)| Selected { id, parts })
        .collect())
}

fn fmt_root(r: &Root) -> String {
    r.to_string()
}

fn paren(v: &[impl ToString]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn to_csv(header: &[String], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    let io = |e: csv::Error| Failure {
        code: 1,
        message: e.to_string(),
    };
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn numbered(prefix: &str, n: usize) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}{i}"))
}

fn cmd_roots(a: &RootsArgs) -> CmdResult {
    let p = parse_type(&a.common.rtype)?;
    let comps = p.components();
    let text = match a.common.format {
        Format::Json => {
            let v: Vec<Value> = comps.iter().map(RootSystem::to_json).collect();
            pretty(&if v.len() == 1 { v[0].clone() } else { Value::Array(v) })
        }
        Format::Csv => {
            let l = comps.iter().map(RootSystem::rank).max().unwrap_or(0);
            let mut header = vec!["type".to_string(), "index".into(), "height".into()];
            header.extend(numbered("c_", l));
            let rows: Vec<Vec<String>> = comps
                .iter()
                .flat_map(|rs| {
                    rs.positive_roots().iter().enumerate().map(move |(i, r)| {
                        let mut row = vec![rs.cartan_type().to_string(), i.to_string(), r.height().to_string()];
                        row.extend(r.coeffs().iter().map(ToString::to_string));
                        row
                    })
                })
                .collect();
            to_csv(&header, &rows)?
        }
        Format::Summary => {
            let mut s = String::new();
            for rs in comps {
                let t = rs.cartan_type();
                writeln!(
                    s,
                    "{t}: rank {}, {} positive roots, Coxeter number {}, highest root {}",
                    rs.rank(),
                    rs.num_positive_roots(),
                    rs.coxeter_number(),
                    fmt_root(rs.highest_root())
                )
                .unwrap();
                if let Some(note) = t.alias_note() {
                    writeln!(s, "note: {note}").unwrap();
                }
                for (i, r) in rs.positive_roots().iter().enumerate() {
                    writeln!(s, "{i:>4}  ht {:>2}  {}", r.height(), fmt_root(r)).unwrap();
                }
            }
            s
        }
    };
    Ok((text, true))
}

fn ideal_json(rs: &RootSystem, i: &Ideal) -> Value {
    json!({
        "members": i.members().to_vec(),
        "generators": i.generators().to_vec(),
        "generator_roots": i.generators().iter().map(|g| rs.root(g).coeffs().to_vec()).collect::<Vec<_>>(),
    })
}

fn cmd_ideals(a: &IdealArgs) -> CmdResult {
    let p = parse_type(&a.common.rtype)?;
    let sel = select(&p, &a.ideal, true)?;
    let comps = p.components();
    let text = match a.common.format {
        Format::Json => {
            let v: Vec<Value> = sel
                .iter()
                .map(|s| {
                    let mut o = json!({"id": s.id, "size": s.size()});
                    if let [i] = s.parts.as_slice() {
                        o["ideal"] = ideal_json(&comps[0], i);
                    } else {
                        o["components"] = comps.iter().zip(&s.parts).map(|(rs, i)| ideal_json(rs, i)).collect();
                    }
                    o
                })
                .collect();
            pretty(&Value::Array(v))
        }
        Format::Csv => {
            let header = ["type", "ideal_id", "size", "height"].map(String::from);
            let rows: Vec<Vec<String>> = sel
                .iter()
                .map(|s| {
                    let h = comps.iter().zip(&s.parts).map(|(rs, i)| i.height(rs)).max().unwrap_or(0);
                    vec![p.root_system_type().to_string(), s.id.to_string(), s.size().to_string(), h.to_string()]
                })
                .collect();
            to_csv(&header, &rows)?
        }
        Format::Summary => {
            let mut s = String::new();
            for x in &sel {
                let gens: Vec<String> = comps
                    .iter()
                    .zip(&x.parts)
                    .map(|(rs, i)| {
                        let g: Vec<String> = i.generators().iter().map(|g| fmt_root(rs.root(g))).collect();
                        format!("[{}]", g.join(" "))
                    })
                    .collect();
                writeln!(s, "#{} |I|={} generators={}", x.id, x.size(), gens.join("|")).unwrap();
            }
            writeln!(s, "{}: {} ideals", p.root_system_type(), sel.len()).unwrap();
            s
        }
    };
    Ok((text, true))
}

struct ExponentReport {
    id: usize,
    size: usize,
    dists: Vec<Vec<usize>>,
    exponents: ExponentRecord,
    charpoly: Option<IntPoly>,
    oracle: Option<IntPoly>,
}

impl ExponentReport {
    fn expected(&self) -> IntPoly {
        IntPoly::from_roots(self.exponents.exponents().iter().map(|&d| d as i64))
    }

    fn lattice_ok(&self) -> bool {
        self.charpoly.as_ref().is_none_or(|c| *c == self.expected())
    }

    fn oracle_ok(&self) -> bool {
        match (&self.oracle, &self.charpoly) {
            (Some(o), Some(c)) => o == c,
            _ => true,
        }
    }

    fn ok(&self) -> bool {
        self.lattice_ok() && self.oracle_ok()
    }
}

fn exponent_report(
    comps: &[RootSystem],
    s: &Selected,
    lattice: bool,
    oracle: bool,
) -> Result<ExponentReport, Failure> {
    let mut dists = Vec::new();
    let mut records = Vec::new();
    let mut chi = lattice.then(IntPoly::one);
    let mut pc = oracle.then(IntPoly::one);
    for (rs, i) in comps.iter().zip(&s.parts) {
        dists.push(height_distribution(rs, i).counts().to_vec());
        records.push(ideal_exponents(rs, i)?);
        if let Some(c) = chi.as_mut() {
            *c = c.mul(&characteristic_polynomial(rs, i));
        }
        if let Some(o) = pc.as_mut() {
            *o = o.mul(&point_count_charpoly(rs, i, &default_primes(rs, i))?);
        }
    }
    Ok(ExponentReport {
        id: s.id,
        size: s.size(),
        dists,
        exponents: product_exponents(&records),
        charpoly: chi,
        oracle: pc,
    })
}

fn cmd_exponents(c: &Common, spec: &IdealSpec, lattice: bool, oracle: bool) -> CmdResult {
    let p = parse_type(&c.rtype)?;
    let comps = p.components();
    let sel = select(&p, spec, false)?;
    let reports = sel
        .par_iter()
        .map(|s| exponent_report(comps, s, lattice, oracle))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(ExponentReport::ok);
    let tname = p.root_system_type().to_string();
    let text = match c.format {
        Format::Json => {
            let v: Vec<Value> = reports
                .iter()
                .zip(&sel)
                .map(|(r, s)| {
                    let mut o = json!({"id": r.id, "size": r.size});
                    if let [i] = s.parts.as_slice() {
                        o["ideal"] = ideal_json(&comps[0], i);
                        o["height_distribution"] = json!(r.dists[0]);
                    } else {
                        o["components"] = comps
                            .iter()
                            .zip(&s.parts)
                            .zip(&r.dists)
                            .map(|((rs, i), d)| {
                                json!({
                                    "type": rs.cartan_type().to_string(),
                                    "ideal": ideal_json(rs, i),
                                    "height_distribution": d,
                                })
                            })
                            .collect();
                    }
                    o["exponents"] = json!(r.exponents);
                    if let Some(chi) = &r.charpoly {
                        o["charpoly"] = json!(chi);
                        o["lattice_check"] = json!(r.lattice_ok());
                    }
                    if let Some(pc) = &r.oracle {
                        o["oracle"] = json!(pc);
                        o["oracle_check"] = json!(r.oracle_ok());
                    }
                    o
                })
                .collect();
            pretty(&if v.len() == 1 && !spec.all_ideals { v[0].clone() } else { Value::Array(v) })
        }
        Format::Csv => {
            let l = p.rank();
            let mut header = vec!["type".to_string(), "ideal_id".into(), "size".into()];
            header.extend(numbered("e_", l));
            if lattice {
                header.extend((0..=l).map(|k| format!("c_{k}")));
            }
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let mut row = vec![tname.clone(), r.id.to_string(), r.size.to_string()];
                    row.extend(r.exponents.exponents().iter().map(ToString::to_string));
                    if let Some(chi) = &r.charpoly {
                        row.extend((0..=l).map(|k| chi.coeff(k).to_string()));
                    }
                    row
                })
                .collect();
            to_csv(&header, &rows)?
        }
        Format::Summary => {
            let mut s = String::new();
            for r in &reports {
                let dist: Vec<String> = r.dists.iter().map(|d| paren(d)).collect();
                write!(
                    s,
                    "{tname} #{} |I|={} dist={} exponents={}",
                    r.id,
                    r.size,
                    dist.join("|"),
                    r.exponents
                )
                .unwrap();
                if let Some(chi) = &r.charpoly {
                    write!(s, " chi={chi}").unwrap();
                    write!(s, " {}", if r.lattice_ok() { "roots-match" } else { "ROOTS-MISMATCH" }).unwrap();
                }
                if r.oracle.is_some() {
                    write!(s, " {}", if r.oracle_ok() { "oracle-agrees" } else { "ORACLE-DISAGREES" }).unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok((text, ok))
}

fn cmd_basis(a: &BasisArgs) -> CmdResult {
    let rs = irreducible(&a.common.rtype, "basis")?;
    let opts = BuildOptions {
        rank_limit: rank_limit(a.rank_limit)?,
        nu_policy: a.nu.into(),
    };
    if rs.rank() > opts.rank_limit {
        return Err(Error::RankLimit {
            rank: rs.rank(),
            limit: opts.rank_limit,
        }
        .into());
    }
    let p = parse_type(&a.common.rtype)?;
    let sel = select(&p, &a.ideal, false)?;
    let builds = sel
        .par_iter()
        .map(|s| {
            let i = &s.parts[0];
            let b = build_basis_for_ideal(&rs, i, &opts)?;
            let saito = saito_check(&rs, &b.basis, i);
            Ok((b, saito))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let ok = builds.iter().all(|(_, s)| *s);
    let single = sel.len() == 1 && !a.ideal.all_ideals;
    if let Some(path) = &a.emit_derivations {
        let v: Vec<Value> = sel
            .iter()
            .zip(&builds)
            .map(|(s, (b, _))| {
                json!({
                    "type": rs.cartan_type().to_string(),
                    "id": s.id,
                    "ideal": ideal_json(&rs, &b.ideal),
                    "degrees": b.degrees(),
                    "basis": b.basis,
                })
            })
            .collect();
        let doc = if single { v[0].clone() } else { Value::Array(v) };
        std::fs::write(path, pretty(&doc))
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let text = match a.common.format {
        Format::Json => {
            let v: Vec<Value> = sel
                .iter()
                .zip(&builds)
                .map(|(s, (b, saito))| {
                    let mut o = serde_json::to_value(b).expect("builds serialize");
                    o["id"] = json!(s.id);
                    o["degrees"] = json!(b.degrees());
                    o["saito"] = json!(saito);
                    o
                })
                .collect();
            pretty(&if single { v[0].clone() } else { Value::Array(v) })
        }
        Format::Csv => {
            let mut header = vec!["type".to_string(), "ideal_id".into(), "size".into()];
            header.extend(numbered("e_", rs.rank()));
            header.push("saito".into());
            let rows: Vec<Vec<String>> = sel
                .iter()
                .zip(&builds)
                .map(|(s, (b, saito))| {
                    let mut row = vec![rs.cartan_type().to_string(), s.id.to_string(), s.size().to_string()];
                    row.extend(b.degrees().iter().map(ToString::to_string));
                    row.push(saito.to_string());
                    row
                })
                .collect();
            to_csv(&header, &rows)?
        }
        Format::Summary => {
            let mut s = String::new();
            for (x, (b, saito)) in sel.iter().zip(&builds) {
                writeln!(
                    s,
                    "{} #{} |I|={} degrees={} layers={} saito={}",
                    rs.cartan_type(),
                    x.id,
                    x.size(),
                    paren(&b.degrees()),
                    b.layers.len(),
                    if *saito { "pass" } else { "FAIL" }
                )
                .unwrap();
                if single {
                    for (k, t) in b.basis.iter().enumerate() {
                        writeln!(s, "  theta_{} = {t}", k + 1).unwrap();
                    }
                }
            }
            s
        }
    };
    Ok((text, ok))
}

struct Outcome {
    id: usize,
    size: usize,
    pass: bool,
    detail: String,
    json: Value,
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let rs = irreducible(&a.common.rtype, "verify")?;
    let t = rs.cartan_type().to_string();
    let (outcomes, unit, extra): (Vec<Outcome>, &str, Vec<(String, bool)>) = match a.suite {
        Suite::LocalGlobal => {
            if a.ideal.is_given() {
                return Err(Failure::usage("verify local-global runs over roots and takes no ideal"));
            }
            let outcomes = (0..rs.num_positive_roots())
                .into_par_iter()
                .map(|alpha| {
                    let rep = verify_local_global(&rs, alpha)?;
                    let pairs = decomposition_pair_count(&rs, alpha) as i64;
                    let pairs_ok = pairs == rep.lhs;
                    let mut json = serde_json::to_value(&rep).expect("reports serialize");
                    json["pair_count"] = json!(pairs);
                    if rs.cartan_type().is_simply_laced() {
                        json["sum_pair_count"] = json!(sum_pair_count(&rs, alpha));
                    }
                    Ok(Outcome {
                        id: alpha,
                        size: rs.height(alpha) as usize,
                        pass: rep.pass && pairs_ok,
                        detail: format!(
                            "root {} Ht-1={} local sum={} pairs={}",
                            fmt_root(rs.root(alpha)),
                            rep.lhs,
                            rep.rhs,
                            pairs
                        ),
                        json,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let deficit = coxeter_deficit(&rs)?;
            let h = rs.coxeter_number();
            (
                outcomes,
                "roots",
                vec![(format!("|A| - |A^theta| = {deficit}, h - 1 = {}", h - 1), deficit == h - 1)],
            )
        }
        suite => {
            let p = parse_type(&a.common.rtype)?;
            let sel = select(&p, &a.ideal, true)?;
            let opts = if suite == Suite::Saito {
                let limit = rank_limit(a.rank_limit)?;
                if rs.rank() > limit {
                    return Err(Error::RankLimit { rank: rs.rank(), limit }.into());
                }
                Some(BuildOptions {
                    rank_limit: limit,
                    ..BuildOptions::default()
                })
            } else {
                None
            };
            let outcomes = sel
                .par_iter()
                .map(|s| verify_ideal(&rs, s, suite, a.oracle, opts.as_ref()))
                .collect::<Result<Vec<_>, Error>>()?;
            (outcomes, "ideals", Vec::new())
        }
    };
    let failures = outcomes.iter().filter(|o| !o.pass).count() + extra.iter().filter(|e| !e.1).count();
    let suite_name = a.suite.to_possible_value().expect("named suite").get_name().to_string();
    let text = match a.common.format {
        Format::Json => pretty(&json!({
            "suite": suite_name,
            "type": t,
            "checked": outcomes.len(),
            "failures": failures,
            "extra": extra.iter().map(|(m, ok)| json!({"check": m, "pass": ok})).collect::<Vec<_>>(),
            "results": outcomes.iter().map(|o| {
                let mut v = o.json.clone();
                v["id"] = json!(o.id);
                v["pass"] = json!(o.pass);
                v
            }).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let header = ["type", "id", "size", "pass"].map(String::from);
            let rows: Vec<Vec<String>> = outcomes
                .iter()
                .map(|o| vec![t.clone(), o.id.to_string(), o.size.to_string(), o.pass.to_string()])
                .collect();
            to_csv(&header, &rows)?
        }
        Format::Summary => {
            let mut s = String::new();
            for o in outcomes.iter().filter(|o| !o.pass || a.suite == Suite::LocalGlobal) {
                writeln!(s, "{} #{} {}", if o.pass { "pass" } else { "FAIL" }, o.id, o.detail).unwrap();
            }
            for (m, ok) in &extra {
                writeln!(s, "{} {m}", if *ok { "pass" } else { "FAIL" }).unwrap();
            }
            writeln!(
                s,
                "verify {suite_name} {t}: {} {unit} checked, {failures} failures",
                outcomes.len()
            )
            .unwrap();
            s
        }
    };
    Ok((text, failures == 0))
}

fn verify_ideal(
    rs: &RootSystem,
    s: &Selected,
    suite: Suite,
    oracle: bool,
    opts: Option<&BuildOptions>,
) -> Result<Outcome, Error> {
    let i = &s.parts[0];
    let dp = ideal_exponents(rs, i)?;
    let (pass, detail, json) = match suite {
        Suite::Main => {
            let cert = run_induction(rs, i)?;
            let pass = cert.passed && cert.exponents == dp;
            let detail = format!(
                "exponents={} dp={dp} failed_layer={:?}",
                cert.exponents, cert.failed_layer
            );
            (pass, detail, serde_json::to_value(&cert).expect("certificates serialize"))
        }
        Suite::Charpoly => {
            let chi = characteristic_polynomial(rs, i);
            let expected = IntPoly::from_roots(dp.exponents().iter().map(|&d| d as i64));
            let pc = if oracle {
                Some(point_count_charpoly(rs, i, &default_primes(rs, i))?)
            } else {
                None
            };
            let pass = chi == expected && pc.as_ref().is_none_or(|p| *p == chi);
            let detail = format!("chi={chi} dp={dp}");
            (pass, detail, json!({"exponents": dp, "charpoly": chi, "oracle": pc}))
        }
        Suite::Saito => {
            let opts = opts.expect("saito options");
            match build_basis_for_ideal(rs, i, opts) {
                Ok(b) => {
                    let saito = saito_check(rs, &b.basis, i);
                    let pass = saito && b.degrees() == dp.exponents();
                    let detail = format!("degrees={} dp={dp} saito={saito}", paren(&b.degrees()));
                    (pass, detail, json!({"degrees": b.degrees(), "saito": saito}))
                }
                Err(Error::Inconsistent(m)) => (false, m.clone(), json!({"error": m})),
                Err(e) => return Err(e),
            }
        }
        Suite::LocalGlobal => unreachable!("handled per root"),
    };
    let mut json = json;
    json["members"] = json!(i.members().to_vec());
    Ok(Outcome {
        id: s.id,
        size: s.size(),
        pass,
        detail,
        json,
    })
}
