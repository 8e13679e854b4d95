mod args;
mod config;
mod error;
mod input;
mod output;

use std::process::ExitCode;

use belltrans::bell::BellTable;
use belltrans::catalog::Catalog;
use belltrans::discovery::{reproduce_diagram, search, DEFAULT_MIN_MATCH};
use belltrans::identities::{
    ab_recurrence, check_algebraic_gf, check_appendix_interp, check_gf, check_gf_with, check_interpolation,
    convolution_power, convolve_bell, AlgebraicCase, AppendixKind, CheckReport,
};
use belltrans::sequence::{format_rational, parse_rational};
use belltrans::transform::{bell_inverse, bell_transform, NamedTransform};
use belltrans::{BellParams, Rational, Sequence};
use belltrans_oeis::{OeisClient, OeisId};
use clap::Parser;

use args::{CatalogCommand, CheckCommand, Cli, Command, Format, OeisCommand};
use config::Config;
use error::{exit, CliError};
use input::Inputs;
use output::{Output, Payload};

fn params(s: &str) -> Result<BellParams, CliError> {
    s.parse().map_err(CliError::from_arg)
}

fn rational(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(CliError::from_arg)
}

fn oeis_id(s: &str) -> Result<OeisId, CliError> {
    Ok(s.parse()?)
}

struct Context {
    config: Config,
    inputs: Inputs,
}

impl Context {
    fn client(&self) -> Result<&OeisClient, CliError> {
        self.inputs.client()
    }
}

fn run_check(ctx: &Context, cmd: &CheckCommand) -> Result<Output, CliError> {
    let report = |r: CheckReport| Payload::Reports(vec![r]);
    Ok(match cmd {
        CheckCommand::Gf {
            params: p,
            against,
            input,
        } => {
            let p = params(p)?;
            let (label, x) = ctx.inputs.resolve(input, ctx.config.n)?;
            let out = match against {
                Some(spec) => {
                    let spec = args::InputArgs {
                        input: spec.clone(),
                        n: Some(x.len()),
                    };
                    let (ylabel, y) = ctx.inputs.resolve(&spec, None)?;
                    Output::new("check gf", report(check_gf_with(&p, &x, &y, x.len())?))
                        .param("against", ylabel)
                }
                None => Output::new("check gf", report(check_gf(&p, &x, x.len())?)),
            };
            out.param("params", &p).param("input", label)
        }
        CheckCommand::Interpolation {
            params: p,
            lambda,
            input,
        } => {
            let p = params(p)?;
            let lambda = rational(lambda)?;
            let (label, x) = ctx.inputs.resolve(input, ctx.config.n)?;
            Output::new(
                "check interpolation",
                report(check_interpolation(&p, &x, &lambda, x.len())?),
            )
            .param("params", &p)
            .param("lambda", format_rational(&lambda))
            .param("input", label)
        }
        CheckCommand::Appendix {
            kind,
            alpha,
            beta,
            gamma,
            lambda,
            input,
        } => {
            let kind: AppendixKind = kind.parse().map_err(CliError::from_arg)?;
            let (alpha, beta, lambda) = (rational(alpha)?, rational(beta)?, rational(lambda)?);
            let gamma = gamma.as_deref().map(rational).transpose()?;
            let (label, x) = ctx.inputs.resolve(input, ctx.config.n)?;
            let r = check_appendix_interp(kind, &alpha, &beta, gamma.as_ref(), &x, &lambda, x.len())?;
            Output::new("check appendix", report(r))
                .param("kind", kind)
                .param("input", label)
        }
        CheckCommand::Convolution { params: p, r, input } => {
            let p = params(p)?;
            let (label, x) = ctx.inputs.resolve(input, ctx.config.n)?;
            let n = x.len();
            let lhs = convolve_bell(&p, &x, *r, n)?;
            let yhat = bell_transform(&p, &x).scale(&p.d);
            let rhs = convolution_power(&yhat, *r, n)?;
            let rep = CheckReport::compare(
                "convolution",
                format!("{p} r={r}"),
                n,
                1,
                lhs.terms(),
                rhs.terms(),
            );
            Output::new("check convolution", report(rep)).param("input", label)
        }
        CheckCommand::Ab { a, b, input } => {
            let (label, x) = ctx.inputs.resolve(input, ctx.config.n)?;
            let n = x.len();
            let lhs = ab_recurrence(*a, *b, &x, n)?;
            let rhs = bell_transform(&BellParams::from_ints(*a as i64, *b as i64, -1, 1), &x);
            let rep = CheckReport::compare(
                "ab-recurrence",
                format!("a={a} b={b}"),
                n,
                1,
                lhs.terms(),
                rhs.terms(),
            );
            Output::new("check ab", report(rep)).param("input", label)
        }
        CheckCommand::Algebraic { equation, n } => {
            let cases = match equation {
                Some(e) => vec![e.parse::<AlgebraicCase>().map_err(CliError::from_arg)?],
                None => AlgebraicCase::ALL.to_vec(),
            };
            let reports = cases
                .into_iter()
                .map(|c| check_algebraic_gf(c, *n))
                .collect::<belltrans::Result<Vec<_>>>()?;
            Output::new("check algebraic", Payload::Reports(reports)).param("n", n)
        }
    })
}

fn run(cli: &Cli, config: Config) -> Result<Output, CliError> {
    let offline = cli.offline || config.offline.unwrap_or(false);
    let inputs = Inputs::new(offline, config.cache_dir.clone());
    let ctx = Context { config, inputs };
    let cfg_n = ctx.config.n;

    Ok(match &cli.command {
        Command::Transform(t) => {
            let (label, x) = ctx.inputs.resolve(&t.input, cfg_n)?;
            match (&t.params, &t.name) {
                (Some(p), _) => {
                    let p = params(p)?;
                    Output::new("transform", Payload::Sequence(bell_transform(&p, &x)))
                        .param("params", &p)
                        .param("input", label)
                }
                (None, Some(name)) => {
                    let m = t.m.as_deref().map(rational).transpose()?;
                    let named = NamedTransform::parse(name, m.as_ref()).map_err(CliError::from_arg)?;
                    Output::new("transform", Payload::Sequence(named.apply(&x)?))
                        .param("name", &named)
                        .param("input", label)
                }
                (None, None) => return Err(CliError::Usage("give --params or --name".into())),
            }
        }
        Command::Inverse(t) => {
            let p = params(&t.params)?;
            let (label, y) = ctx.inputs.resolve(&t.input, cfg_n)?;
            Output::new("inverse", Payload::Sequence(bell_inverse(&p, &y)))
                .param("params", &p)
                .param("input", label)
        }
        Command::Check(c) => run_check(&ctx, c)?,
        Command::Bell(b) => {
            input::check_len(Some(b.n))?;
            let x = match &b.input {
                Some(spec) => {
                    let spec = args::InputArgs {
                        input: spec.clone(),
                        n: Some(b.n),
                    };
                    ctx.inputs.resolve(&spec, None)?.1
                }
                None => Sequence::ones(b.n.max(1)),
            };
            let z = if b.factorial { x.factorial_weight() } else { x };
            let table = BellTable::new(&z, b.n)?;
            let rows = (1..=b.n).map(|n| table.row(n).to_vec()).collect();
            Output::new("bell", Payload::Table(rows)).param("n", b.n)
        }
        Command::Catalog(CatalogCommand::List) => {
            let rows = Catalog::standard()
                .entries()
                .iter()
                .map(|e| {
                    vec![
                        ("key", e.key.clone()),
                        ("oeis_id", e.oeis_id.clone().unwrap_or_else(|| "-".into())),
                        ("offset", e.offset.to_string()),
                        ("generator", e.generator_summary()),
                        ("description", e.description.clone()),
                    ]
                })
                .collect();
            Output::new("catalog list", Payload::Records(rows))
        }
        Command::Catalog(CatalogCommand::Show { key, n }) => {
            let cat = Catalog::standard();
            let e = cat.get(key)?;
            let len = n
                .or(cfg_n)
                .unwrap_or_else(|| e.pinned.as_ref().map_or(10, Vec::len));
            input::check_len(Some(len))?;
            let terms = cat.get_prefix(key, len)?;
            let mut info = vec![
                ("key", e.key.clone()),
                ("oeis_id", e.oeis_id.clone().unwrap_or_else(|| "-".into())),
                ("offset", e.offset.to_string()),
                ("generator", e.generator_summary()),
                ("description", e.description.clone()),
            ];
            if !e.provenance.is_empty() {
                info.push(("provenance", e.provenance.clone()));
            }
            Output::new("catalog show", Payload::Described(info, terms))
        }
        Command::Oeis(cmd) => {
            let client = ctx.client()?;
            let describe = |s: belltrans_oeis::CachedSequence| {
                let info = vec![
                    ("id", s.id.to_string()),
                    ("offset", s.offset.to_string()),
                    ("fetched_at", s.fetched_at.to_rfc3339()),
                    ("source_url", s.source_url.clone()),
                ];
                Payload::Described(info, s.to_sequence_from_offset())
            };
            match cmd {
                OeisCommand::Fetch { id } => Output::new("oeis fetch", describe(client.fetch(oeis_id(id)?)?)),
                OeisCommand::Show { id } => {
                    Output::new("oeis show", describe(client.get_cached(oeis_id(id)?)?))
                }
                OeisCommand::Invalidate { id } => {
                    let id = oeis_id(id)?;
                    client.invalidate(id)?;
                    Output::new("oeis invalidate", Payload::Text(format!("removed {id}")))
                }
                OeisCommand::CacheDir => Output::new(
                    "oeis cache-dir",
                    Payload::Text(client.cache().dir().display().to_string()),
                ),
            }
        }
        Command::Discover(d) => {
            let min_match = d.min_match.or(ctx.config.min_match).unwrap_or(DEFAULT_MIN_MATCH);
            let n = d.n.or(cfg_n);
            input::check_len(n)?;
            if d.diagram {
                let edges = reproduce_diagram(n.unwrap_or(14), min_match)?;
                Output::new("discover", Payload::Hypotheses(edges)).param("mode", "diagram")
            } else {
                let (Some(source), Some(target)) = (&d.source, &d.target) else {
                    return Err(CliError::Usage("give --source and --target, or --diagram".into()));
                };
                let n = n.or(Some(12));
                let (sk, s) = ctx.inputs.resolve(
                    &args::InputArgs {
                        input: source.clone(),
                        n,
                    },
                    None,
                )?;
                let (tk, t) = ctx.inputs.resolve(
                    &args::InputArgs {
                        input: target.clone(),
                        n,
                    },
                    None,
                )?;
                let grid = ctx.config.grid()?;
                let found = search(&sk, &s, &tk, &t, &grid, min_match)?;
                Output::new("discover", Payload::Hypotheses(found))
                    .param("source", sk)
                    .param("target", tk)
                    .param("min_match", min_match)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match &cli.config {
        Some(path) => Config::load(path),
        None => Ok(Config::default()),
    };
    let result = config.and_then(|config| {
        let format = cli.format.or(config.format).unwrap_or(Format::Plain);
        run(&cli, config).map(|out| (out, format))
    });
    match result {
        Ok((out, format)) => {
            print!("{}", out.render(format));
            let code = if out.passed() {
                exit::OK
            } else {
                exit::CHECK_FAILED
            };
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("belltrans: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
