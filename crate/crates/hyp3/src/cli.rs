//! Command-line front end: `hyp3 <theta|cones|lot|mann|family|z2z4|suite> …`.
//!
//! Every command prints one JSON report on stdout.  Exit status is 0 when all checks pass,
//! 1 when a check fails and 2 on a usage error.  The default tolerance comes from
//! `HYP3_TOL` when set.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::acceptance::{run_criterion, DEFAULT_SEED};
use crate::cones::{aggregated_minimum, cone_by_name, cone_catalog, minimal_valuations, ConeName};
use crate::exact::rational::parse_rational;
use crate::exact::{Rational, RootOfUnity};
use crate::fourier_jacobi::{
    lot_coefficient, lot_normalization, lot_numeric_verify, lot_secondary_verify, RayAnchor, RAY_HEIGHTS,
};
use crate::report::{complex, display_list, num, Check, Report};
use crate::roots::{brute_force_vanishing, solve_vanishing_sum, Relation};
use crate::shimura::{
    compare_families, fixed_part_lattice, fj_group_vanishing, relations_check, verify_vanishing, GaussianParameter,
};
use crate::siegel::SiegelPoint;
use crate::theta::{theta, Characteristic, DEFAULT_TOL};
use crate::{z2z4, Error, Result};

pub const TOL_ENV: &str = "HYP3_TOL";

#[derive(Parser, Debug)]
#[command(name = "hyp3", version, about = "Theta constants, boundary expansions and Shimura families in genus 3")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Suppress progress output on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// JSON output (the default; accepted for scripts).
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate θ[ε;δ](τ, z).
    Theta {
        #[arg(long)]
        genus: usize,
        /// `0,0`, `110;110` or `1,1,0;1,1,0`.
        #[arg(long = "char")]
        characteristic: String,
        /// Rows separated by `;`, entries by `,`, e.g. `i` or `2i,0.5;0.5,3i`.
        #[arg(long)]
        tau: String,
        /// Comma-separated complex vector (default 0).
        #[arg(long)]
        z: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Boundary cones and brute-force minimal valuations.
    Cones {
        #[arg(long)]
        cone: Option<String>,
        #[arg(long = "box", default_value_t = 3)]
        bound: i64,
        /// Report minimal valuations of a single characteristic.
        #[arg(long = "char")]
        characteristic: Option<String>,
    },
    /// Lowest-order coefficient of the theta-null on a rank-3 cone.
    Lot {
        #[arg(long)]
        cone: String,
        /// Bounded values as roots of unity `k/n` (meaning e^{2πik/n}), comma-separated.
        #[arg(long)]
        roots: Option<String>,
        /// Bounded values as complex numbers, comma-separated.
        #[arg(long)]
        bounded: Option<String>,
        /// Also verify numerically along a ray.
        #[arg(long)]
        verify: bool,
        /// Use the secondary term on the slice q12 = 1 (with two values q13, q23).
        #[arg(long)]
        secondary: bool,
    },
    /// Solve a vanishing sum of roots of unity.
    Mann {
        /// Integer or rational coefficients, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Compare against brute force over μ_order.
        #[arg(long)]
        order: Option<u64>,
    },
    /// The families Π_u(t).
    Family {
        #[arg(long)]
        u: String,
        /// One of degree, vanishing, groups, relations, compare, all.
        #[arg(long, default_value = "all")]
        check: String,
        /// Parameter values (comma-separated complex numbers).
        #[arg(long, default_value = "2i,0.2+3i")]
        t: String,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Exact identities for the ℤ₂×ℤ₄ family.
    Z2z4 {
        #[arg(long)]
        tol: Option<f64>,
    },
    /// The ten acceptance criteria.
    Suite {
        /// Comma-separated subset, e.g. `1,3,6`.
        #[arg(long)]
        criteria: Option<String>,
    },
}

/// `HYP3_TOL` if set and valid, else the library default.
pub fn default_tolerance() -> f64 {
    std::env::var(TOL_ENV).ok().and_then(|s| s.parse().ok()).filter(|t: &f64| *t > 0.0).unwrap_or(DEFAULT_TOL)
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses `a+bi`, `-i`, `2.5`, `3i`, `1e-3-2i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || usage(format!("malformed complex number '{s}'"));
    if t.is_empty() {
        return Err(bad());
    }
    let num = |x: &str| -> Result<f64> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => x.parse::<f64>().map_err(|_| bad()),
        }
    };
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(t.parse().map_err(|_| bad())?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(Complex64::new(body[..k].parse().map_err(|_| bad())?, num(&body[k..])?)),
        None => Ok(Complex64::new(0.0, num(body)?)),
    }
}

pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(',').map(parse_complex).collect()
}

/// `g×g` matrix: rows separated by `;`; a single row of `g(g+1)/2` entries is read as the
/// upper triangle.
pub fn parse_tau(s: &str, genus: usize) -> Result<SiegelPoint> {
    let rows: Vec<Vec<Complex64>> = s.split(';').map(parse_complex_list).collect::<Result<_>>()?;
    let m = if rows.len() == genus && rows.iter().all(|r| r.len() == genus) {
        nalgebra::DMatrix::from_fn(genus, genus, |i, j| rows[i][j])
    } else if rows.len() == 1 && rows[0].len() == genus * (genus + 1) / 2 {
        let mut it = rows[0].iter();
        let mut m = nalgebra::DMatrix::zeros(genus, genus);
        for i in 0..genus {
            for j in i..genus {
                let v = *it.next().expect("counted");
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        m
    } else {
        return Err(usage(format!("--tau does not describe a {genus}x{genus} matrix")));
    };
    SiegelPoint::new(m).map_err(|_| usage("--tau is not symmetric with positive definite imaginary part"))
}

fn parse_roots(s: &str) -> Result<Vec<RootOfUnity>> {
    s.split(',').map(|x| parse_rational(x).map(RootOfUnity::new)).collect()
}

fn cone_arg(s: &str) -> Result<ConeName> {
    ConeName::parse(s).map_err(|_| usage(format!("unknown cone '{s}'")))
}

fn cmd_theta(genus: usize, ch: &str, tau: &str, z: Option<&str>, tol: f64) -> Result<Report> {
    let c = Characteristic::parse(ch).map_err(|_| usage(format!("malformed characteristic '{ch}'")))?;
    if c.genus() != genus {
        return Err(usage("characteristic genus does not match --genus"));
    }
    let tau_p = parse_tau(tau, genus)?;
    let zv = match z {
        Some(z) => parse_complex_list(z)?,
        None => vec![Complex64::new(0.0, 0.0); genus],
    };
    if zv.len() != genus {
        return Err(usage("--z has the wrong length"));
    }
    let v = theta(&c, &tau_p, &zv, tol)?;
    let mut r = Report::new("theta", json!({"genus": genus, "char": c.to_string(), "tau": tau, "tol": num(tol)}));
    r.set("value", complex(v.value));
    r.set("abs", num(v.value.norm()));
    r.set("tail_bound", num(v.tail_bound));
    r.set("radius", json!(v.radius_used));
    r.push(Check::new("certified", v.tail_bound <= tol, json!(null)));
    Ok(r)
}

fn cmd_cones(cone: Option<&str>, bound: i64, ch: Option<&str>) -> Result<Report> {
    let names: Vec<ConeName> = match cone {
        Some(c) => vec![cone_arg(c)?],
        None => ConeName::ALL.to_vec(),
    };
    let mut r = Report::new("cones", json!({"cone": cone, "box": bound, "char": ch}));
    let mut out = Vec::new();
    for name in names {
        let c = cone_by_name(name);
        let mut entry = json!({
            "name": name.to_string(),
            "rank": c.rank,
            "dimension": c.dimension,
            "generators": c.generators,
        });
        if let Some(ch) = ch {
            let chr = Characteristic::parse(ch).map_err(|_| usage(format!("malformed characteristic '{ch}'")))?;
            let mv = minimal_valuations(&c, &chr, bound)?;
            entry["min"] = display_list(&mv.min);
            entry["argmin"] = json!(mv.argmin);
        } else if c.rank == 3 {
            let (total, attained) = aggregated_minimum(&c, bound)?;
            entry["aggregated_min"] = display_list(&total);
            entry["attained"] = json!(attained);
            r.push(Check::new(
                format!("{name}: lowest term T^2"),
                attained && crate::cones::all_twos(&total),
                json!(null),
            ));
        }
        out.push(entry);
    }
    r.set("cones", Value::Array(out));
    r.set("catalog_size", json!(cone_catalog().len()));
    Ok(r)
}

fn cmd_lot(cone: &str, roots: Option<&str>, bounded: Option<&str>, verify: bool, secondary: bool) -> Result<Report> {
    let values: Vec<Complex64> = match (roots, bounded) {
        (Some(r), None) => parse_roots(r)?.iter().map(RootOfUnity::to_complex).collect(),
        (None, Some(b)) => parse_complex_list(b)?,
        (None, None) => vec![],
        _ => return Err(usage("give either --roots or --bounded")),
    };
    let mut r = Report::new(
        "lot",
        json!({"cone": cone, "roots": roots, "bounded": bounded, "verify": verify, "secondary": secondary}),
    );
    if secondary {
        if values.len() != 2 {
            return Err(usage("--secondary takes two values q13, q23"));
        }
        let rep = lot_secondary_verify(values[0], values[1], &RAY_HEIGHTS)?;
        r.set("predicted", complex(rep.predicted));
        r.set("deviations", Value::Array(rep.deviations.iter().map(|&d| num(d)).collect()));
        r.push(Check::new("ratio -> 1", rep.passes(1e-3), json!(null)));
        return Ok(r);
    }
    let name = cone_arg(cone)?;
    let shape = lot_coefficient(name, &values).map_err(|e| match e {
        Error::InvalidInput(m) => usage(m),
        other => other,
    })?;
    r.set("monomial", json!(crate::fourier_jacobi::lot_monomial(name)?));
    r.set("coefficient", complex(shape));
    r.set("normalization", num(lot_normalization()));
    if verify {
        match lot_numeric_verify(name, &RayAnchor::standard(name, values), &RAY_HEIGHTS) {
            Ok(rep) => {
                r.set("deviations", Value::Array(rep.deviations.iter().map(|&d| num(d)).collect()));
                r.push(Check::new("ratio -> 1", rep.passes(1e-3), json!(null)));
            }
            Err(Error::LeadingTermVanishes) => {
                r.set("leading_term", json!("vanishes; use --secondary"));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(r)
}

fn cmd_mann(coeffs: &str, order: Option<u64>) -> Result<Report> {
    let cs: Vec<Rational> = coeffs.split(',').map(parse_rational).collect::<Result<_>>()?;
    let rel = Relation::new(cs).map_err(|e| usage(e.to_string()))?;
    let sol = solve_vanishing_sum(&rel)?;
    let mut r = Report::new("mann", json!({"coeffs": coeffs, "order": order}));
    let families: Vec<Value> = sol
        .families
        .iter()
        .map(|f| {
            json!({
                "blocks": f.partition,
                "irreducible": f.is_irreducible(),
                "free_rotations": f.free_rotations(),
                "roots": display_list(&f.with_rotations(&vec![RootOfUnity::one(); f.free_rotations()])),
            })
        })
        .collect();
    r.set("solutions", json!(families.len()));
    r.set("families", Value::Array(families));
    if let Some(n) = order {
        let brute = brute_force_vanishing(&rel, n)?;
        let solved = sol.tuples_of_order(n);
        r.set("tuples_of_order", json!(solved.len()));
        r.push(Check::new("agrees with brute force", solved == brute, json!({"brute_force": brute.len()})));
    }
    Ok(r)
}

fn cmd_family(u: &str, check: &str, t: &str, tol: f64) -> Result<Report> {
    let gp = GaussianParameter::parse(u).map_err(|_| usage(format!("malformed Gaussian rational '{u}'")))?;
    let ts = parse_complex_list(t)?;
    let all = check == "all";
    if !["all", "degree", "vanishing", "groups", "relations", "compare"].contains(&check) {
        return Err(usage(format!("unknown check '{check}'")));
    }
    let mut r = Report::new("family", json!({"u": gp.to_string(), "check": check, "t": t, "tol": num(tol)}));
    if all || check == "degree" {
        let fp = fixed_part_lattice(&gp)?;
        r.set("degree", Value::Number(fp.degree.to_string().parse().expect("integer")));
        r.set("fixed_basis", json!(fp.basis.iter().map(|v| display_list(v)).collect::<Vec<_>>()));
    }
    if all || check == "vanishing" {
        let rep = verify_vanishing(&gp, &ts, tol.min(1e-12))?;
        r.set(
            "vanishing",
            Value::Array(
                rep.samples
                    .iter()
                    .map(|s| {
                        json!({"t": complex(s.t), "theta_110_110": num(s.target), "min_other": num(s.min_other),
                               "min_other_char": s.min_other_characteristic.to_string()})
                    })
                    .collect(),
            ),
        );
        r.push(Check::new("theta[110;110] vanishes", rep.max_target() < 1e-9, json!(null)));
        r.push(Check::new("other even constants do not", rep.min_other() > 1e-3, json!(null)));
    }
    if all || check == "groups" {
        let mut worst = 0.0f64;
        for n1 in (1..=7).step_by(2) {
            for n2 in (1..=n1).step_by(2) {
                worst = worst.max(fj_group_vanishing(&gp, n1, n2, 1e-15)?.relative());
            }
        }
        r.set("group_residual", num(worst));
        r.push(Check::new("term groups cancel", worst < 1e-10, json!(null)));
    }
    if all || check == "relations" || check == "compare" {
        let (a, b) = (gp.a.clone(), gp.b.clone());
        let rel = relations_check(&a, &b)?;
        r.set(
            "relations",
            json!({"q12_residue": rel.q12_residue.to_string(), "gamma_residue": rel.gamma_residue.to_string(),
                   "q12_numeric": num(rel.q12_numeric), "gamma_numeric": num(rel.gamma_numeric)}),
        );
        r.push(Check::new(
            "exact congruences",
            rel.q12_holds && rel.gamma_holds && rel.r12_residue.is_integer() && rel.r22_residue.is_integer(),
            json!(null),
        ));
        let cmp = compare_families(&a, &b)?;
        r.set("shift", json!(cmp.shift.to_string()));
        r.push(Check::new("example family is a shifted Pi_u", cmp.difference_is_integral(), json!(null)));
    }
    Ok(r)
}

fn cmd_z2z4(tol: f64) -> Result<Report> {
    let outcome = z2z4::full_suite(tol.max(1e-9))?;
    let mut r = Report::new("z2z4", json!({"tol": num(tol.max(1e-9))}));
    r.extend(outcome.checks);
    r.set("notes", Value::Array(outcome.notes.iter().map(Check::to_json).collect()));
    Ok(r)
}

fn cmd_suite(criteria: Option<&str>, seed: u64, quiet: bool) -> Result<Report> {
    let ids: Vec<u8> = match criteria {
        Some(s) => s
            .split(',')
            .map(|x| x.trim().parse::<u8>().ok().filter(|n| (1..=10).contains(n)).ok_or_else(|| usage(format!("bad criterion '{x}'"))))
            .collect::<Result<_>>()?,
        None => (1..=10).collect(),
    };
    let mut r = Report::new("suite", json!({"criteria": ids, "seed": seed}));
    let mut results = Vec::new();
    for id in ids {
        let c = run_criterion(id, seed)?;
        if !quiet {
            eprintln!("{}", c.line());
        }
        r.push(Check::new(format!("criterion {id}: {}", c.title), c.pass(), json!(null)));
        // Timings are kept out of the JSON so reports stay byte-identical.
        let mut j = c.to_json();
        j.as_object_mut().expect("object").remove("seconds");
        for check in j["checks"].as_array_mut().expect("array") {
            if check["name"].as_str().is_some_and(|n| n.starts_with("runtime")) {
                check["detail"] = Value::Null;
            }
        }
        results.push(j);
    }
    r.set("criteria", Value::Array(results));
    Ok(r)
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let tol_or = |t: Option<f64>| t.unwrap_or_else(default_tolerance);
    match &cli.command {
        Command::Theta { genus, characteristic, tau, z, tol } => {
            cmd_theta(*genus, characteristic, tau, z.as_deref(), tol_or(*tol))
        }
        Command::Cones { cone, bound, characteristic } => cmd_cones(cone.as_deref(), *bound, characteristic.as_deref()),
        Command::Lot { cone, roots, bounded, verify, secondary } => {
            cmd_lot(cone, roots.as_deref(), bounded.as_deref(), *verify, *secondary)
        }
        Command::Mann { coeffs, order } => cmd_mann(coeffs, *order),
        Command::Family { u, check, t, tol } => cmd_family(u, check, t, tol_or(*tol)),
        Command::Z2z4 { tol } => cmd_z2z4(tol_or(*tol)),
        Command::Suite { criteria } => cmd_suite(criteria.as_deref(), cli.global.seed, cli.global.quiet),
    }
}

/// Runs the command line, writing the report to `out`; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(&cli) {
        Ok(report) => {
            let text = report.render();
            let _ = writeln!(out, "{text}");
            if let Some(path) = &cli.global.out {
                if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                    let _ = writeln!(err, "cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            if !cli.global.quiet {
                let _ = writeln!(err, "wall time {:.3} s", start.elapsed().as_secs_f64());
            }
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e @ (Error::Parse(_) | Error::InvalidInput(_))) => {
            let _ = writeln!(err, "usage error: {e}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Entry point for the binary.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(std::iter::once("hyp3").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("0.2+3i").unwrap(), Complex64::new(0.2, 3.0));
        assert_eq!(parse_complex("1e-3-2i").unwrap(), Complex64::new(1e-3, -2.0));
        assert_eq!(parse_complex("2.5").unwrap(), Complex64::new(2.5, 0.0));
        assert!(parse_complex("x+i").is_err());
    }

    #[test]
    fn theta_command() {
        let (code, out) = run_capture(&["--quiet", "theta", "--genus", "1", "--char", "0,0", "--tau", "i", "--tol", "1e-12"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let re: f64 = v["results"]["value"]["re"].to_string().parse().unwrap();
        assert!((re - 1.0864348112133080).abs() < 1e-10);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&["family", "--u", "1/x+i"]).0, 2);
        assert_eq!(run_capture(&["theta", "--genus", "1", "--char", "0,0", "--tau", "1+"]).0, 2);
        assert_eq!(run_capture(&["bogus"]).0, 2);
    }

    #[test]
    fn mann_and_family_commands() {
        let (code, out) = run_capture(&["--quiet", "mann", "--coeffs", "1,1,1", "--order", "12"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"]["solutions"], json!(2));
        let (code, out) = run_capture(&["--quiet", "family", "--u", "1/2+1/2i", "--check", "degree"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["results"]["degree"], json!(2));
    }

    #[test]
    fn output_is_deterministic() {
        let args = ["--quiet", "lot", "--cone", "K3+1", "--roots", "1/3,1/4"];
        assert_eq!(run_capture(&args).1, run_capture(&args).1);
    }
}
