use std::path::{Path, PathBuf};
use std::time::Duration;

use serde_json::{json, Value};
use thiserror::Error;

use qary_core::bounds::{
    column_recursion_bound, divisibility_analysis, plotkin_bound, KnownValuesRegistry,
};
use qary_core::io::{emit_class_list, ClassListHeader};
use qary_core::{emit_code, parse_code, CodeParams};
use qary_nets::{
    code_to_net, emit_net, gh_expand, gram_check, net_to_code, parse_gh, parse_net,
    verify_net_axioms,
};
use qary_pipelines::{verify, PipelineOptions, THEOREM_IDS};
use qary_search::{enumerate_codes, EnumerationMode, EnumerationTask, Limits, SearchError};

use crate::output::{emit, read, write_atomic};
use crate::{Budget, Cli, Command, Format, Method, NetAction};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qary_core::Error),
    #[error(transparent)]
    Net(#[from] qary_nets::NetError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    fn input(path: &Path, e: impl std::fmt::Display) -> Self {
        CliError::Input {
            path: path.to_path_buf(),
            message: e.to_string(),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: Cli) -> Result<u8> {
    let format = cli.format;
    match cli.command {
        Command::Bound { q, n, d, method } => bound(format, q, n, d, method),
        Command::Enumerate {
            q,
            n,
            d,
            m,
            out,
            existence,
            budget,
        } => enumerate(format, q, n, d, m, out.as_deref(), existence, &budget),
        Command::Net { action } => net(format, action),
        Command::Verify {
            theorem_id,
            json,
            out,
            budget,
        } => verify_cmd(
            if json { Format::Json } else { format },
            &theorem_id,
            out.as_deref(),
            &budget,
        ),
    }
}

fn limits(b: &Budget) -> Limits {
    Limits {
        max_nodes: Some(b.budget.unwrap_or(Limits::DEFAULT_NODES)),
        max_time: Some(
            b.time_limit
                .map_or(Limits::DEFAULT_TIME, Duration::from_secs),
        ),
    }
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("value serializes")
    );
}

fn bound(format: Format, q: usize, n: usize, d: usize, method: Method) -> Result<u8> {
    let p = CodeParams::new(q, n, d)?;
    let registry = KnownValuesRegistry::builtin();

    let plotkin = plotkin_bound(&p);
    let inner_value = p.punctured().and_then(|pp| {
        registry
            .lookup(pp.q, pp.n, pp.d)
            .map(|k| (k.value, k.provenance.to_string()))
            .or_else(|| plotkin_bound(&pp).map(|b| (b, "Plotkin bound".to_string())))
    });
    let recursion = inner_value
        .as_ref()
        .map(|(v, _)| column_recursion_bound(&p, *v));
    let div = divisibility_analysis(&p);
    let div_bound = div.as_ref().and_then(|c| c.bound);
    let known = registry.lookup(q, n, d);

    let chosen = match method {
        Method::Plotkin => plotkin,
        Method::Recursion => recursion,
        Method::Divisibility => div_bound,
        Method::Best => [plotkin, recursion, div_bound, known.map(|k| k.value)]
            .into_iter()
            .flatten()
            .min(),
    };
    let method_name = format!("{method:?}").to_lowercase();

    match format {
        Format::Json => {
            let div_json = div.as_ref().map(|c| {
                json!({
                    "m": c.m,
                    "divisibility_ok": c.divisibility_ok,
                    "phi": c.phi_values.iter().map(|v| json!({"r": v.r, "phi": v.phi, "upper": v.upper, "lower": v.lower})).collect::<Vec<_>>(),
                    "l": c.l_values,
                    "r": c.chosen_r,
                    "bound": c.bound,
                })
            });
            print_json(&json!({
                "q": q, "n": n, "d": d,
                "method": method_name,
                "bound": chosen,
                "plotkin": plotkin,
                "recursion": recursion.map(|b| json!({"bound": b, "inner": inner_value.as_ref().map(|i| i.0), "inner_source": inner_value.as_ref().map(|i| &i.1)})),
                "divisibility": div_json,
                "known": known.map(|k| json!({"value": k.value, "provenance": k.provenance})),
            }));
        }
        Format::Text => {
            let show = |b: Option<u64>| b.map_or("inapplicable".to_string(), |v| v.to_string());
            if method == Method::Best {
                println!("plotkin       {}", show(plotkin));
                println!("recursion     {}", show(recursion));
                println!("divisibility  {}", show(div_bound));
                if let Some(k) = known {
                    println!("known         {} ({})", k.value, k.provenance);
                }
            }
            if matches!(method, Method::Divisibility | Method::Best) {
                if let Some(c) = &div {
                    println!("m = {}, (n-d) divides m(n-1): {}", c.m, !c.divisibility_ok);
                    for v in &c.phi_values {
                        println!("  phi({}) = {}", v.r, v.phi);
                    }
                }
            }
            match chosen {
                Some(b) => println!("A_{q}({n},{d}) <= {b}"),
                None => println!("A_{q}({n},{d}): {method_name} bound inapplicable"),
            }
        }
    }
    Ok(if chosen.is_some() { 0 } else { 2 })
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    format: Format,
    q: usize,
    n: usize,
    d: usize,
    m: usize,
    out: Option<&Path>,
    existence: bool,
    budget: &Budget,
) -> Result<u8> {
    let p = CodeParams::new(q, n, d)?;
    if m == 0 {
        return Err(CliError::Usage("M must be at least 1".into()));
    }
    let mut task = EnumerationTask::all_classes(p, m);
    task.limits = limits(budget);
    if existence {
        task.mode = EnumerationMode::ExistenceOnly;
    }
    if !task.is_desk_scale() && budget.budget.is_none() {
        return Err(CliError::Usage(format!(
            "{p} with M = {m} is beyond desk scale; pass --budget to run it anyway"
        )));
    }
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let report = match enumerate_codes(&task) {
        Ok(r) => r,
        Err(SearchError::BudgetExhausted { nodes, partial }) => {
            eprintln!(
                "partial: node budget exhausted after {nodes} nodes, {} classes so far; nothing written",
                partial.len()
            );
            return Ok(2);
        }
        Err(e @ SearchError::TimeExhausted { .. }) => {
            eprintln!("partial: {e}; nothing written");
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(dir) = out {
        for (i, c) in report.classes.iter().enumerate() {
            write_atomic(&dir.join(format!("class-{:03}.code", i + 1)), &emit_code(c))?;
        }
        let header = ClassListHeader {
            params: p,
            size: m,
            count: report.classes.len(),
            generator: format!("qary {}", env!("CARGO_PKG_VERSION")),
        };
        write_atomic(
            &dir.join("classes.list"),
            &emit_class_list(&header, &report.classes),
        )?;
    }
    match format {
        Format::Json => print_json(&json!({
            "q": q, "n": n, "d": d, "size": m,
            "mode": if existence { "existence" } else { "all" },
            "classes": report.classes.len(),
            "nodes": report.nodes,
            "canonical_nodes_per_level": report.nodes_per_level,
        })),
        Format::Text => {
            println!("classes {}", report.classes.len());
            println!("nodes   {}", report.nodes);
        }
    }
    Ok(0)
}

fn net(format: Format, action: NetAction) -> Result<u8> {
    match action {
        NetAction::Check { net } => {
            let text = read(&net)?;
            let parsed = parse_net(&text).map_err(|e| CliError::input(&net, e))?;
            let r = verify_net_axioms(&parsed);
            let gram = gram_check(&parsed);
            let ok = r.all_hold() && gram == Ok(true);
            match format {
                Format::Json => print_json(&json!({
                    "mu": parsed.mu, "q": parsed.q,
                    "block_size": r.block_size, "s1": r.s1, "s2": r.s2, "s3": r.s3,
                    "s_prime": r.s_prime, "s_prime_agrees": r.s_prime_agrees,
                    "gram": gram.as_ref().ok(),
                    "gram_error": gram.as_ref().err().map(ToString::to_string),
                    "block_classes": r.block_classes, "point_classes": r.point_classes,
                    "net": ok,
                })),
                Format::Text => {
                    println!(
                        "symmetric ({},{})-net candidate, {} points",
                        parsed.mu,
                        parsed.q,
                        parsed.order()
                    );
                    println!("block size  {}", r.block_size);
                    println!("s1          {}", r.s1);
                    println!("s2          {}", r.s2);
                    println!("s3          {}", r.s3);
                    println!(
                        "s'          {} (agrees with s2 and s3: {})",
                        r.s_prime, r.s_prime_agrees
                    );
                    match &gram {
                        Ok(g) => println!("gram        {g}"),
                        Err(e) => println!("gram        {e}"),
                    }
                    println!("{}", if ok { "net" } else { "not a net" });
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        NetAction::ToCode { net, output } => {
            let parsed = parse_net(&read(&net)?).map_err(|e| CliError::input(&net, e))?;
            let code = net_to_code(&parsed).map_err(|e| CliError::input(&net, e))?;
            emit(output.as_deref(), &emit_code(&code))?;
            if output.is_some() {
                println!(
                    "code: q = {}, n = {}, {} words, minimum distance {}",
                    code.q(),
                    code.n(),
                    code.len(),
                    code.min_distance()?
                );
            }
            Ok(0)
        }
        NetAction::FromCode { code, output } => {
            let parsed = parse_code(&read(&code)?).map_err(|e| CliError::input(&code, e))?;
            let net = code_to_net(&parsed).map_err(|e| CliError::input(&code, e))?;
            emit(output.as_deref(), &emit_net(&net))?;
            if output.is_some() {
                println!(
                    "net: mu = {}, q = {}, {} points",
                    net.mu,
                    net.q,
                    net.order()
                );
            }
            Ok(0)
        }
        NetAction::GhExpand { gh, output } => {
            let parsed = parse_gh(&read(&gh)?).map_err(|e| CliError::input(&gh, e))?;
            let net = gh_expand(&parsed).map_err(|e| CliError::input(&gh, e))?;
            emit(output.as_deref(), &emit_net(&net))?;
            if output.is_some() {
                println!(
                    "net: mu = {}, q = {}, {} points",
                    net.mu,
                    net.q,
                    net.order()
                );
            }
            Ok(0)
        }
    }
}

fn verify_cmd(format: Format, id: &str, out: Option<&Path>, budget: &Budget) -> Result<u8> {
    let opts = PipelineOptions {
        limits: limits(budget),
    };
    let Some(cert) = verify(id, &opts) else {
        return Err(CliError::Usage(format!(
            "unknown theorem id {id:?}; expected one of {}",
            THEOREM_IDS.join(", ")
        )));
    };
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        write_atomic(
            &dir.join(format!("{id}.cert.json")),
            &(cert.to_json() + "\n"),
        )?;
        write_atomic(&dir.join(format!("{id}.cert.txt")), &cert.to_text())?;
    }
    match format {
        Format::Json => println!("{}", cert.to_json()),
        Format::Text => print!("{}", cert.to_text()),
    }
    Ok(cert.verdict.exit_code() as u8)
}
