use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mck::conjecture::{verify_conjecture_suite, ConjectureConfig};
use mck::exactalg::{parse_rational, ExactRational, Field, RationalExpr, SpecField, Var};
use mck::koornwinder::{self as kw, KoornwinderParams};
use mck::report::{Report, Verdict};
use mck::symfunc::{self, LaurentSym, Partition};
use mck::transition::{self as tr, Family, MatrixKind, TransParams, TriMatrix};

#[derive(Parser)]
#[command(name = "mck", version, about = "One-column Koornwinder polynomials, transition matrices and their checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Catalan,
    Pascal,
    KostkaC,
    KostkaD,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Fourfold,
    Twofold,
    #[value(name = "via-E")]
    ViaE,
    #[value(name = "via-C")]
    ViaC,
    Oracle,
    Interp,
    Hl,
    Schur,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Inverse,
    Recursion,
    Fourterm,
    Sears,
    Paths,
    Oracle,
    Interp,
    Kostka,
    Conjecture,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Integer and polynomial tables: Catalan, Pascal, type C and D Kostka.
    Table {
        kind: Table,
        #[arg(long, default_value_t = 4)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// The transition matrices B, Btilde and C, truncated to `size x size`.
    Matrix {
        kind: MatrixKind,
        #[arg(long, default_value_t = 6)]
        size: usize,
        #[arg(long, default_value = "generic")]
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// One-column polynomials `P_(1^r)` and relatives in the monomial basis.
    Poly {
        #[arg(long, value_enum)]
        route: Route,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Numeric `a,b,c,d,q,t`, each `p/q`.
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value = "generic")]
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Runs a verification suite; exits 1 if any check fails.
    Verify {
        suite: Suite,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Conjecture suite: root height beyond the support of `P_lambda`.
        #[arg(long)]
        window: Option<u32>,
        /// Conjecture suite: order of the folded `A_3` check.
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, default_value = "generic")]
        spec: String,
        /// Keep per-check timings in the output.
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

type Res<T> = Result<T, String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn spec_of(s: &str) -> Res<SpecField> {
    SpecField::named(s).map_err(err)
}

fn family_of(spec: &str) -> Family {
    if spec.ends_with("-d") || spec == "dn" {
        Family::D
    } else {
        Family::C
    }
}

fn parse_params(s: &str) -> Res<KoornwinderParams<ExactRational>> {
    let v: Vec<ExactRational> = s.split(',').map(|x| parse_rational(x).map_err(|e| format!("invalid value `{x}` in --params: {e}"))).collect::<Res<_>>()?;
    let [a, b, c, d, q, t]: [ExactRational; 6] =
        v.try_into().map_err(|v: Vec<_>| format!("--params needs six values a,b,c,d,q,t, got {}", v.len()))?;
    Ok(KoornwinderParams::new(a, b, c, d, q, t))
}

fn matrix_doc(kind: &str, m: &TriMatrix, format: Format) -> Res<String> {
    let rows = || (0..m.size).map(|i| (i, (0..m.cols).filter(move |&j| m.orientation.allows(i, j))));
    Ok(match format {
        Format::Pretty => {
            let mut out = format!("{kind} {}x{} {} spec={}\n", m.size, m.cols, m.orientation, m.spec);
            for (i, cols) in rows() {
                let vals: Vec<String> = cols.map(|j| m.get(i, j).to_string()).collect();
                out.push_str(&format!("{i}: {}\n", vals.join(", ")));
            }
            out
        }
        Format::Json => {
            let entries: Vec<_> = rows()
                .flat_map(|(i, cols)| cols.map(move |j| json!({"row": i, "col": j, "value": m.get(i, j).to_string()})))
                .collect();
            let doc = json!({
                "kind": kind,
                "size": m.size,
                "orientation": m.orientation.name(),
                "spec": m.spec,
                "entries": entries,
            });
            serde_json::to_string_pretty(&doc).map_err(err)? + "\n"
        }
        Format::Csv => {
            let mut out = String::new();
            for (i, cols) in rows() {
                let vals: Vec<String> = cols
                    .map(|j| {
                        let v = m.get(i, j);
                        v.as_integer().map(|x| x.to_string()).ok_or_else(|| format!("csv needs integer entries, ({i}, {j}) is {v}"))
                    })
                    .collect::<Res<_>>()?;
                out.push_str(&vals.join(","));
                out.push('\n');
            }
            out
        }
    })
}

fn cmd_table(kind: Table, size: usize, format: Format) -> Res<String> {
    let (name, m) = match kind {
        Table::Catalan => ("catalan", tr::triangle_table(size, &SpecField::schur_c())),
        Table::Pascal => ("pascal", tr::triangle_table(size, &SpecField::schur_d())),
        Table::KostkaC => ("kostka-c", tr::kostka_matrix(Family::C, size, 2 * size + 2)),
        Table::KostkaD => ("kostka-d", tr::kostka_matrix(Family::D, size, 2 * size + 2)),
    };
    matrix_doc(name, &m.map_err(err)?, format)
}

fn cmd_matrix(kind: MatrixKind, size: usize, spec: &str, format: Format) -> Res<String> {
    let m = tr::build_matrices(kind, size, &spec_of(spec)?).map_err(err)?;
    let name = match kind {
        MatrixKind::B => "B",
        MatrixKind::Btilde => "Btilde",
        MatrixKind::C => "C",
    };
    matrix_doc(name, &m, format)
}

fn exact(p: LaurentSym<ExactRational>) -> Res<LaurentSym<RationalExpr>> {
    p.map_coeffs(|c| Ok(RationalExpr::from_rational(c))).map_err(err)
}

fn poly_of(route: Route, n: usize, r: usize, params: Option<&KoornwinderParams<ExactRational>>, spec: &str) -> Res<LaurentSym<RationalExpr>> {
    let sf = spec_of(spec)?;
    let trans = |k: &KoornwinderParams<ExactRational>| -> Res<TransParams<ExactRational>> {
        if !k.is_type_c() {
            return Err("this route needs b = -a and d = -c".into());
        }
        Ok(TransParams::new(k.a.times(&k.a), k.c.times(&k.c), k.t.clone()))
    };
    let need = || params.ok_or_else(|| "this route needs --params a,b,c,d,q,t".to_string());
    let t = RationalExpr::var(Var::T);
    match (route, params) {
        (Route::Fourfold, Some(k)) => exact(kw::p_fourfold(n, r, k).map_err(err)?),
        (Route::Fourfold, None) => kw::p_fourfold_spec(n, r, &sf).map_err(err),
        (Route::Twofold, Some(k)) => exact(kw::p_twofold(n, r, &trans(k)?).map_err(err)?),
        (Route::Twofold, None) => kw::p_twofold_spec(n, r, &sf).map_err(err),
        (Route::ViaE, Some(k)) => exact(kw::p_via_e(n, r, &trans(k)?).map_err(err)?),
        (Route::ViaE, None) => kw::p_via_e_spec(n, r, &sf).map_err(err),
        (Route::ViaC, Some(k)) => exact(kw::p_via_c(n, r, &trans(k)?).map_err(err)?),
        (Route::ViaC, None) => kw::p_via_c_spec(n, r, &sf).map_err(err),
        (Route::Oracle, _) => exact(kw::oracle_p(&Partition::column(r), n, need()?).map_err(err)?),
        (Route::Interp, Some(k)) => exact(symfunc::interpolation(n, r, &k.a, &k.t).map_err(err)?),
        (Route::Interp, None) => symfunc::interpolation(n, r, &RationalExpr::var(Var::A), &t).map_err(err),
        (Route::Hl, _) => kw::hall_littlewood_p(family_of(spec), n, r, &t).map_err(err),
        (Route::Schur, _) => kw::schur_one_column(family_of(spec), n, r).map_err(err),
    }
}

fn cmd_poly(route: Route, n: usize, r: usize, params: Option<&str>, spec: &str, format: Format) -> Res<String> {
    let k = params.map(parse_params).transpose()?;
    let p = poly_of(route, n, r, k.as_ref(), spec)?;
    let name = route.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    Ok(match format {
        Format::Pretty => format!("{p}\n"),
        Format::Json => {
            let terms: Vec<_> = p
                .coeffs
                .iter()
                .rev()
                .map(|(l, c)| json!({"partition": l.parts(), "coeff": c.to_string()}))
                .collect();
            let doc = json!({
                "route": name,
                "n": n,
                "r": r,
                "spec": spec,
                "params": params,
                "terms": terms,
            });
            serde_json::to_string_pretty(&doc).map_err(err)? + "\n"
        }
        Format::Csv => return Err("csv output is only available for integer matrices".into()),
    })
}

struct VerifyArgs {
    size: Option<usize>,
    n: Option<usize>,
    trials: Option<usize>,
    seed: Option<u64>,
    window: Option<u32>,
    order: Option<u32>,
    spec: String,
}

fn run_suite(suite: Suite, a: &VerifyArgs) -> Res<Report> {
    let seed = a.seed.unwrap_or(7);
    Ok(match suite {
        Suite::Inverse => {
            let mut rep = tr::verify_inversion(a.size.unwrap_or(12)).map_err(err)?;
            rep.extend(tr::verify_bressoud(a.size.unwrap_or(12).min(8), a.trials.unwrap_or(5), seed).map_err(err)?);
            rep
        }
        Suite::Recursion => {
            let mut rep = tr::verify_recursions(a.size.unwrap_or(13), &spec_of(&a.spec)?);
            rep.extend(tr::verify_special_values(6).map_err(err)?);
            rep
        }
        Suite::Fourterm => tr::verify_four_term(a.size.unwrap_or(8) as u32, a.trials.unwrap_or(20), seed).map_err(err)?,
        Suite::Sears => tr::verify_sears(a.size.unwrap_or(8) as u32, a.trials.unwrap_or(20), seed).map_err(err)?,
        Suite::Paths => {
            let m = a.size.unwrap_or(6);
            tr::verify_paths(m, m + 1).map_err(err)?
        }
        Suite::Oracle => kw::verify_oracle(a.n.unwrap_or(3), a.trials.unwrap_or(5), seed),
        Suite::Interp => kw::verify_interp(a.n.unwrap_or(3), a.trials.unwrap_or(3), seed),
        Suite::Kostka => kw::verify_kostka(a.size.unwrap_or(12), a.n.unwrap_or(4)),
        Suite::Conjecture => {
            let d = ConjectureConfig::default();
            verify_conjecture_suite(&ConjectureConfig {
                points: a.trials.unwrap_or(d.points),
                seed: a.seed.unwrap_or(d.seed),
                margin: a.window.unwrap_or(d.margin),
                order: a.order.unwrap_or(d.order),
            })
        }
        Suite::All => {
            let mut rep = Report::new("all suites");
            for s in [
                Suite::Inverse,
                Suite::Recursion,
                Suite::Fourterm,
                Suite::Sears,
                Suite::Paths,
                Suite::Oracle,
                Suite::Interp,
                Suite::Kostka,
                Suite::Conjecture,
            ] {
                let sub = run_suite(s, a)?;
                for mut c in sub.checks {
                    c.name = format!("{}: {}", sub.title, c.name);
                    rep.checks.push(c);
                }
            }
            rep
        }
    })
}

fn cmd_verify(suite: Suite, a: &VerifyArgs, timings: bool, format: Format) -> Res<(String, Verdict)> {
    let mut rep = run_suite(suite, a)?;
    if !timings {
        rep.checks.iter_mut().for_each(|c| c.elapsed_ms = None);
    }
    let v = rep.verdict();
    let out = match format {
        Format::Pretty => format!("{rep}\n"),
        Format::Json => {
            let doc = json!({"title": rep.title, "verdict": v, "checks": rep.checks});
            serde_json::to_string_pretty(&doc).map_err(err)? + "\n"
        }
        Format::Csv => return Err("csv output is only available for integer matrices".into()),
    };
    Ok((out, v))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Table { kind, size, format } => cmd_table(kind, size, format).map(|s| (s, Verdict::Pass)),
        Cmd::Matrix { kind, size, spec, format } => cmd_matrix(kind, size, &spec, format).map(|s| (s, Verdict::Pass)),
        Cmd::Poly { route, n, r, params, spec, format } => {
            cmd_poly(route, n, r, params.as_deref(), &spec, format).map(|s| (s, Verdict::Pass))
        }
        Cmd::Verify { suite, size, n, trials, seed, window, order, spec, timings, format } => {
            let a = VerifyArgs { size, n, trials, seed, window, order, spec };
            cmd_verify(suite, &a, timings, format)
        }
    };
    match res {
        Ok((out, v)) => {
            print!("{out}");
            match v {
                Verdict::Pass => ExitCode::SUCCESS,
                Verdict::Inconclusive => {
                    eprintln!("warning: some checks were inconclusive; enlarge --window or --order");
                    ExitCode::SUCCESS
                }
                Verdict::Fail => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
