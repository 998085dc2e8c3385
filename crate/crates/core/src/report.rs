//! Versioned JSON reports for each verification command. Exact values are
//! fraction strings; floats are rounded to 15 significant digits so that
//! reports are byte-stable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::autoform::{self, SeriesParams};
use crate::certify::{self, PairKind, RootPair};
use crate::exactnum::{parse_rational, Cyclo12, Eisenstein, RealQ3};
use crate::leechlat::{self, build_l, disc_group, Lattice, LatticeVector, Sigma};
use crate::modular::{self, UnimodularMatrix};
use crate::plane::{self, build_plane, ccs_gon, full_group};
use crate::reflect;

pub const SCHEMA_VERSION: u32 = 1;

pub const GOLDEN_TABLE1: &str = include_str!("../golden/table1.json");
pub const GOLDEN_TABLE2: &str = include_str!("../golden/table2.json");

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("invalid value for {0}: {1}")]
    Invalid(&'static str, String),
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Command {
    Lattice {
        full: bool,
    },
    Relations,
    /// `gon` is "ccs" for the labelled 12-gon or an index into the enumeration.
    Deflate {
        gon: String,
    },
    Table1,
    Table2,
    /// `pair = None` certifies all three orbit representatives.
    Certify {
        pair: Option<String>,
        eps: String,
    },
    Modular {
        membership: usize,
        extension: usize,
    },
    Autoform {
        m: u32,
        bound: String,
        tau: String,
    },
    Plane,
}

impl Command {
    pub const NAMES: [(&'static str, &'static str); 9] = [
        ("lattice", "build L, check simple-root inner products, discriminants and σ"),
        ("relations", "braid/commute relations for all pairs of simple reflections"),
        ("deflate", "deflation relation on a 12-gon and the minimal generation identity"),
        ("table1", "root types by inner products with w_P and the points; golden comparison"),
        ("table2", "inner products along the braid path; golden comparison"),
        ("certify", "mirror avoidance and perturbation certificates for the pair orbits"),
        ("modular", "β chart, Aut(F) membership, extension to L, ω-conjugacy"),
        ("autoform", "truncated E_m series on F: stability and automorphy"),
        ("plane", "the incidence plane, its collineation group and 12-gon orbits"),
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Lattice { .. } => "lattice",
            Command::Relations => "relations",
            Command::Deflate { .. } => "deflate",
            Command::Table1 => "table1",
            Command::Table2 => "table2",
            Command::Certify { .. } => "certify",
            Command::Modular { .. } => "modular",
            Command::Autoform { .. } => "autoform",
            Command::Plane => "plane",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub q: usize,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, q: 3, seed: 0 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub config: RunConfig,
    pub passed: bool,
    pub result: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let v = canonicalize(serde_json::to_value(self).expect("report serializes"));
        serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
    }
}

/// Rounds every float to 15 significant digits.
pub fn canonicalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64");
            let r: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
            serde_json::Number::from_f64(r).map(Value::Number).unwrap_or(Value::Null)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(canonicalize).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, canonicalize(v))).collect()),
        other => other,
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report section serializes")
}

fn lattice_for(q: usize) -> Result<Lattice, ConfigError> {
    if q != 3 {
        return Err(ConfigError::Unsupported(format!("the lattice commands need q = 3 (got {q})")));
    }
    let pl = build_plane(q).map_err(|e| ConfigError::Unsupported(e.to_string()))?;
    build_l(&pl, Eisenstein::P).map_err(|e| ConfigError::Unsupported(e.to_string()))
}

pub fn run(config: &RunConfig) -> Result<Report, ConfigError> {
    let (passed, result) = match &config.command {
        Command::Plane => plane_report(config.q)?,
        Command::Lattice { full } => lattice_report(&lattice_for(config.q)?, *full),
        Command::Relations => relations_report(&lattice_for(config.q)?),
        Command::Deflate { gon } => deflate_report(&lattice_for(config.q)?, gon)?,
        Command::Table1 => table1_report(&lattice_for(config.q)?),
        Command::Table2 => table2_report(&lattice_for(config.q)?),
        Command::Certify { pair, eps } => certify_report(&lattice_for(config.q)?, pair.as_deref(), eps)?,
        Command::Modular { membership, extension } => {
            modular_report(&lattice_for(config.q)?, *membership, *extension, config.seed)
        }
        Command::Autoform { m, bound, tau } => autoform_report(&lattice_for(config.q)?, *m, bound, tau, config.seed)?,
    };
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        command: config.command.name().to_string(),
        config: config.clone(),
        passed,
        result,
    })
}

// ---------------------------------------------------------------- plane

fn plane_report(q: usize) -> Result<(bool, Value), ConfigError> {
    let pl = build_plane(q).map_err(|e| ConfigError::Unsupported(e.to_string()))?;
    let gens = plane::collineation_generators(&pl);
    let perms: Vec<plane::Perm> = gens.iter().map(|g| g.permutation(&pl)).collect();
    let gens_ok = perms.iter().all(|p| plane::preserves_incidence(&pl, p));
    let n = pl.n();
    let counts_ok = n == q * q + q + 1 && (n..2 * n).all(|l| pl.points_on(l).len() == q + 1);
    let mut out = json!({
        "plane": to_value(&pl.export()),
        "points": n,
        "generators": perms,
        "generators_preserve_incidence": gens_ok,
    });
    let mut passed = gens_ok && counts_ok;
    if q == 3 {
        let group = full_group(&pl, true);
        let order = group.order(1_000_000);
        let orbits = plane::pair_orbits(&pl, &group);
        let gons = plane::marked_12gon_orbits(&pl, &group);
        passed &= order == 11232 && gons.transitive;
        out["group_order"] = json!(order);
        out["pair_orbits"] = to_value(&orbits);
        out["marked_12gons"] = to_value(&gons);
    }
    Ok((passed, out))
}

// ---------------------------------------------------------------- lattice

fn lattice_report(lat: &Lattice, full: bool) -> (bool, Value) {
    let ipd = lat.check_ipd();
    let df = disc_group(&lat.f_gram()).expect("F nondegenerate");
    let dp = disc_group(&lat.fperp_gram()).expect("F⊥ nondegenerate");
    let df_ok = df.order == BigInt::from(13u64 * 13 * 9);
    let dp_ok = dp.order == BigInt::from(169u64) * BigInt::from(3u64.pow(12));
    let dual = lat.dual_scaling_integral();
    let rb = lat.rho_bar();
    let rb_closed = rb == lat.rho_bar_closed_form();
    let sigma = Sigma::new(lat);
    let sigma_ok = sigma.is_ok();
    let sigma_disc = sigma.as_ref().map(|s| leechlat::sigma_discriminant_check(lat, s)).unwrap_or(false);
    let pi_x0 = leechlat::pi_f_x0_is_sigma_p_over_13(lat);
    let f = lat.fixed_lattice();
    let z0_isotropic = f.z0.norm().is_zero();
    let mut out = json!({
        "q": lat.plane().q(),
        "p": lat.p(),
        "dim": lat.dim(),
        "code_dim": lat.code_dim(),
        "ipd": to_value(&ipd),
        "disc_f": to_value(&df),
        "disc_fperp": to_value(&dp),
        "dual_scaling_integral": dual,
        "rho_bar": to_value(&rb),
        "rho_bar_norm": to_value(&rb.norm()),
        "rho_bar_closed_form": rb_closed,
        "sigma_exists": sigma_ok,
        "sigma_discriminant_check": sigma_disc,
        "pi_f_x0_is_sigma_p_over_13": pi_x0,
        "z0_isotropic": z0_isotropic,
    });
    if full {
        out["roots"] = to_value(&lat.roots());
        out["w_p"] = to_value(lat.w_p());
        out["w_l"] = to_value(lat.w_l());
        out["basis"] = to_value(&lat.basis());
        out["gram"] = to_value(&lat.gram());
    }
    let passed = ipd.passed() && df_ok && dp_ok && dual && rb_closed && sigma_ok && sigma_disc && pi_x0 && z0_isotropic;
    (passed, out)
}

fn relations_report(lat: &Lattice) -> (bool, Value) {
    let r = reflect::verify_relations(lat);
    let n = lat.num_roots();
    (r.passed() && r.pairs == n * (n - 1) / 2, to_value(&r))
}

fn deflate_report(lat: &Lattice, gon: &str) -> Result<(bool, Value), ConfigError> {
    let pl = lat.plane();
    let g = if gon == "ccs" {
        ccs_gon(pl).map_err(|e| ConfigError::Unsupported(e.to_string()))?
    } else {
        let i: usize = gon.parse().map_err(|_| ConfigError::Invalid("--gon", gon.to_string()))?;
        let all = plane::enumerate_12gons(pl);
        let len = all.len();
        all.into_iter().nth(i).ok_or_else(|| ConfigError::Invalid("--gon", format!("{i} (there are {len} 12-gons)")))?
    };
    let d = reflect::deflate_check(lat, &g);
    let mats = reflect::simple_reflections(lat);
    let mingen = reflect::min_generation_identity(lat, &g, &mats);
    let unit_is_omega_sq = d.unit == Some(Eisenstein::OMEGA * Eisenstein::OMEGA);
    let out = json!({
        "gon": gon,
        "deflation": to_value(&d),
        "unit_is_omega_squared": unit_is_omega_sq,
        "min_generation_identity": mingen,
    });
    Ok((unit_is_omega_sq && mingen, out))
}

// ---------------------------------------------------------------- tables

#[derive(Clone, Debug, Deserialize)]
struct GoldenRow1 {
    j: u8,
    min_height: String,
    exact: Option<[String; 2]>,
    approx: Option<f64>,
}

#[derive(Clone, Debug, Deserialize)]
struct Golden1 {
    rows: Vec<GoldenRow1>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenCheck {
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

/// Table 1 against the reference minimum heights (exact where exact, ±0.01 otherwise).
pub fn table1_golden_checks(t: &certify::Table1) -> Vec<GoldenCheck> {
    let g: Golden1 = serde_json::from_str(GOLDEN_TABLE1).expect("golden table 1 parses");
    g.rows
        .iter()
        .map(|gr| {
            let row = t.rows.iter().find(|r| r.j == gr.j);
            let (computed, ok) = match row {
                None => ("missing".to_string(), false),
                Some(r) if gr.min_height == "no root" => {
                    (if r.exists { "roots exist".into() } else { "no root".into() }, !r.exists)
                }
                Some(r) => {
                    let ok = if let Some([a, b]) = &gr.exact {
                        let h = RealQ3::new(parse_rational(a).expect("golden"), parse_rational(b).expect("golden"));
                        r.min_height_sq == &h * &h
                    } else {
                        (r.min_height - gr.approx.expect("approx or exact")).abs() <= 0.01
                    };
                    let note = if r.exists { "" } else { " (formula minimum; no root of this type)" };
                    (format!("{:.6}{note}", r.min_height), ok)
                }
            };
            GoldenCheck { label: format!("row {}", gr.j), expected: gr.min_height.clone(), computed, ok }
        })
        .collect()
}

fn table1_report(lat: &Lattice) -> (bool, Value) {
    let t = certify::table1_scan(lat);
    let golden = table1_golden_checks(&t);
    let cands = certify::candidate_mirrors(lat);
    let h104 = cands.iter().filter(|c| c.height_sq == reflect::one_plus_xi_sq()).count();
    let passed = golden.iter().all(|g| g.ok)
        && t.rows.iter().all(|r| r.formula_agrees && r.norm_identity)
        && t.low_type4_covered
        && cands.len() == 130
        && h104 == 104;
    let out = json!({
        "table": to_value(&t),
        "golden": to_value(&golden),
        "candidate_mirrors": cands.len(),
        "candidates_at_height_one_plus_xi": h104,
    });
    (passed, out)
}

#[derive(Clone, Debug, Deserialize)]
struct GoldenEntry {
    symbol: String,
    value: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
struct Golden2 {
    entries: Vec<Vec<GoldenEntry>>,
}

/// Each computed c_j^k against its reference symbol.
pub fn table2_golden_checks(t: &certify::Table2) -> Vec<GoldenCheck> {
    let g: Golden2 = serde_json::from_str(GOLDEN_TABLE2).expect("golden table 2 parses");
    let mut out = Vec::new();
    for (j, row) in g.entries.iter().enumerate() {
        for (k, e) in row.iter().enumerate() {
            let want = Cyclo12::from_strings(&e.value).expect("golden value");
            let got = t.entries.get(j).and_then(|r| r.get(k));
            out.push(GoldenCheck {
                label: format!("c_{}^{}", j + 1, k),
                expected: e.symbol.clone(),
                computed: got.map(|c| c.to_string()).unwrap_or_else(|| "missing".into()),
                ok: got == Some(&want),
            });
        }
    }
    out
}

fn table2_report(lat: &Lattice) -> (bool, Value) {
    let pair = RootPair::representative(lat, PairKind::Incident);
    let t = certify::table2_values(lat, &pair).expect("incident pair braids");
    let golden = table2_golden_checks(&t);
    let passed = golden.iter().all(|g| g.ok)
        && t.c0_nonzero
        && t.at_most_one_zero_per_row
        && t.re_xi_nonneg
        && t.rows_in_half_planes;
    (passed, json!({ "table": to_value(&t), "golden": to_value(&golden) }))
}

// ---------------------------------------------------------------- certificates

pub fn parse_epsilon(s: &str) -> Result<BigRational, ConfigError> {
    let e = parse_rational(s).map_err(|_| ConfigError::Invalid("--eps", s.to_string()))?;
    if e <= BigRational::zero() || e >= BigRational::one() {
        return Err(ConfigError::Invalid("--eps", format!("{s} (need 0 < ε < 1)")));
    }
    Ok(e)
}

fn certify_report(lat: &Lattice, pair: Option<&str>, eps: &str) -> Result<(bool, Value), ConfigError> {
    let eps = parse_epsilon(eps)?;
    let kinds: Vec<PairKind> = match pair {
        None | Some("all") => PairKind::ALL.to_vec(),
        Some(s) => vec![PairKind::parse(s).map_err(|_| ConfigError::Invalid("--pair", s.to_string()))?],
    };
    let t1 = certify::table1_scan(lat);
    let mut passed = true;
    let mut pairs = Vec::new();
    for kind in kinds {
        let rp = RootPair::representative(lat, kind);
        let md = certify::meetdelta_certificate(lat, &rp, &t1).map_err(|e| ConfigError::Unsupported(e.to_string()))?;
        let pt = certify::perturb_certificate(lat, &rp, &eps).map_err(|e| ConfigError::Unsupported(e.to_string()))?;
        passed &= md.pass && pt.pass;
        let touching: Vec<&str> = md.mirrors.iter().filter(|m| m.touching).map(|m| m.origin.as_str()).collect();
        pairs.push(json!({
            "pair": kind.name(),
            "touching_mirrors": touching,
            "meetdelta": to_value(&md),
            "perturb": to_value(&pt),
        }));
    }
    let dr = certify::delta_r_all(lat);
    passed &= dr.iter().all(|d| d.holds && d.d0_matches);
    Ok((passed, json!({ "epsilon": crate::exactnum::fmt_rational(&eps), "pairs": pairs, "delta_r": to_value(&dr) })))
}

// ---------------------------------------------------------------- modular

/// β images of ρ̄, w_P, w_L and the boundary image of z₀.
fn chart_points(lat: &Lattice) -> Value {
    let f = lat.fixed_lattice();
    let (a, b) = f.f_coords(&lat.rho_bar()).expect("ρ̄ ∈ F^ℂ");
    let rho = modular::beta_fwd(&a, &b).map(|t| t == Cyclo12::i()).unwrap_or(false);
    let p = Cyclo12::from(Eisenstein::P);
    let wp = modular::beta_fwd(&Cyclo12::one(), &Cyclo12::zero()).map(|t| t == p).unwrap_or(false);
    let wl =
        modular::beta_fwd(&Cyclo12::zero(), &Cyclo12::one()).map(|t| Ok(t) == p.inv().map(|x| -x)).unwrap_or(false);
    let (z1, z2) = modular::beta_column(&Cyclo12::one(), &Cyclo12::from(Eisenstein::THETA));
    let z0 = z1.is_zero() && !z2.is_zero();
    json!({ "rho_bar_to_i": rho, "w_p_to_p": wp, "w_l_to_minus_p_inv": wl, "z0_to_0": z0 })
}

fn modular_report(lat: &Lattice, membership: usize, extension: usize, seed: u64) -> (bool, Value) {
    let chart = chart_points(lat);
    let chart_ok = chart.as_object().expect("object").values().all(|v| v == &Value::Bool(true));
    let mem = modular::check_membership(membership, seed);
    let ext = modular::check_extension(lat, extension, 20, 10, seed);
    let conj = modular::check_conjugacy(20, 10, seed);
    let sigma = Sigma::new(lat).expect("σ exists");
    let s = modular::sigma_on_h2(lat, &sigma).expect("σ preserves F");
    let passed = chart_ok && mem.passed() && ext.passed() && conj.passed() && s.is_s();
    let out = json!({
        "jf_identity": modular::check_jf_identity(),
        "chart": chart,
        "membership": to_value(&mem),
        "extension": to_value(&ext),
        "conjugacy": to_value(&conj),
        "sigma": to_value(&s),
        "sigma_is_s": s.is_s(),
    });
    (passed, out)
}

// ---------------------------------------------------------------- autoform

fn parse_decimal(s: &str) -> Result<BigRational, ConfigError> {
    let bad = || ConfigError::Invalid("number", s.to_string());
    let s = s.trim();
    if s.contains('/') {
        return parse_rational(s).map_err(|_| bad());
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let r = BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32));
    Ok(if neg { -r } else { r })
}

/// Parses "a+bi", "a-bi", "bi" or "a" with decimal or n/d parts.
pub fn parse_tau(s: &str) -> Result<Cyclo12, ConfigError> {
    let bad = || ConfigError::Invalid("--tau", s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (re, im) = if let Some(body) = t.strip_suffix('i') {
        // split at the last sign that is not the leading one
        let pos = body.char_indices().skip(1).filter(|(_, c)| *c == '+' || *c == '-').map(|(i, _)| i).last();
        match pos {
            Some(p) => (&body[..p], &body[p..]),
            None => ("0", body),
        }
    } else {
        (t.as_str(), "0")
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        x => x,
    };
    let a = parse_decimal(re).map_err(|_| bad())?;
    let b = parse_decimal(im).map_err(|_| bad())?;
    if b <= BigRational::zero() {
        return Err(ConfigError::Invalid("--tau", format!("{s} (need Im τ > 0)")));
    }
    Ok(&Cyclo12::from_rational(a) + &Cyclo12::i().scale(&b))
}

/// Exact check that ⟨ur, z⟩^{6m} = ⟨r, z⟩^{6m} for every unit u over the first `k` roots.
pub fn unit_scaling_exact(shell: &autoform::RootShell, z: &LatticeVector, m: u32, k: usize) -> bool {
    shell.roots.iter().take(k).all(|sr| {
        let base = LatticeVector::from_e(&sr.root).ip(z).pow(6 * m);
        Eisenstein::units().iter().all(|u| {
            let r = leechlat::scale_e(*u, &sr.root);
            LatticeVector::from_e(&r).ip(z).pow(6 * m) == base
        })
    })
}

fn autoform_report(lat: &Lattice, m: u32, bound: &str, tau: &str, seed: u64) -> Result<(bool, Value), ConfigError> {
    if m == 0 {
        return Err(ConfigError::Invalid("--m", "0".into()));
    }
    let b: f64 = bound.parse().map_err(|_| ConfigError::Invalid("--bound", bound.to_string()))?;
    if !(b > 0.0 && b <= autoform::MAX_BOUND) {
        return Err(ConfigError::Invalid("--bound", format!("{bound} (need 0 < B ≤ {})", autoform::MAX_BOUND)));
    }
    let t = parse_tau(tau)?;
    let params = SeriesParams { m, bound: b, center: autoform::CenterChoice::Point };
    let fail = |e: autoform::AutoformError| ConfigError::Unsupported(e.to_string());
    let z = autoform::lift(lat, &t).map_err(fail)?;
    let shell = autoform::shell_around(lat, &z, b).map_err(fail)?;
    let value = autoform::e_m_on_shell(&shell, &z, m).map_err(fail)?;
    let stability = autoform::shell_stability(lat, &t, m, b, 3).map_err(fail)?;
    let units = unit_scaling_exact(&shell, &z, m, 20);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = modular::random_gamma13(&mut rng);
    let auto = autoform::automorphy_check(lat, &g, &t, &params).map_err(fail)?;
    let sigma = Sigma::new(lat).expect("σ exists");
    let sig = autoform::sigma_automorphy(lat, &sigma, &t, &params).map_err(fail)?;
    let ident = autoform::automorphy_check(lat, &UnimodularMatrix::IDENTITY, &t, &params).map_err(fail)?;
    let passed = stability.decreasing
        && units
        && auto.defect < 1e-3
        && auto.j_is_cocycle
        && sig.defect < 1e-6
        && ident.defect == 0.0;
    let out = json!({
        "tau": to_value(&t),
        "m": m,
        "bound": b,
        "value": to_value(&value.value),
        "truncation_error": value.truncation_error,
        "roots": value.roots,
        "shells": to_value(&value.shells),
        "stability": { "steps": stability.steps, "decreasing": stability.decreasing },
        "unit_scaling_exact": units,
        "automorphy": to_value(&auto),
        "identity_defect": ident.defect,
        "sigma": to_value(&sig),
    });
    Ok((passed, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_parsing() {
        assert_eq!(parse_tau("0+2i").unwrap(), Cyclo12::i().scale_int(2));
        assert_eq!(parse_tau("2i").unwrap(), Cyclo12::i().scale_int(2));
        assert_eq!(parse_tau("i").unwrap(), Cyclo12::i());
        let t = parse_tau("-0.5+1/2i").unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(t, &Cyclo12::from_rational(-half.clone()) + &Cyclo12::i().scale(&half));
        assert!(parse_tau("1-2i").is_err());
        assert!(parse_tau("abc").is_err());
    }

    #[test]
    fn floats_rounded() {
        let v = canonicalize(json!({"x": 0.1f64 + 0.2f64, "y": [1.0f64 / 3.0]}));
        assert_eq!(v["x"], json!(0.3));
        assert_eq!(v["y"][0], json!(0.333333333333333));
    }

    #[test]
    fn epsilon_parsing() {
        assert!(parse_epsilon("1/100").is_ok());
        assert!(parse_epsilon("0").is_err());
        assert!(parse_epsilon("x").is_err());
    }
}
