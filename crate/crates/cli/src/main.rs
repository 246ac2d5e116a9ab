use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use flagquot::builders::{self, from_spec, hemi, platonic, OperationKind, PolyhedronSpec};
use flagquot::catalog::{self, PublishedCover, TABLE1, TABLE2};
use flagquot::petrie::{coxeter_elements, scheme, scheme_lengths, sigma_order_in_cover};
use flagquot::quotient::{
    cover_report_at, verify_psi, verify_psi_auto, word_permutation, CoverReport, PsiMap,
    CUBE_IDENTITY_WORDS, CUBOCTAHEDRON_FACE_WORDS,
};
use flagquot::{BigCount, FlagGraph, Word};

/// `println!` that exits quietly when stdout is closed early.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

/// Archimedean solids as quotients of regular abstract polytopes.
#[derive(Parser)]
#[command(name = "flagquot", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in solids.
    List,
    /// Cover data for a built-in solid or a face-list file.
    Analyze {
        /// Catalog name or path to a face-list file.
        target: String,
        #[arg(long)]
        base_flag: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce a published table (1: covers, 2: acoptic ranks).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// Add a column comparing against the published values.
        #[arg(long)]
        compare: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the substitution maps, the cuboctahedron words and the torus.
    Verify {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct Order {
    decimal: String,
    factored: String,
}

impl From<&BigCount> for Order {
    fn from(c: &BigCount) -> Self {
        Order {
            decimal: c.to_string(),
            factored: c.factored(),
        }
    }
}

#[derive(Serialize)]
struct OutputRecord {
    name: String,
    source: String,
    vertex_symbol: Option<String>,
    schlafli: String,
    cover_order: Order,
    stabilizer_order: Order,
    n_flags: usize,
    orbit_count: usize,
    acoptic_ranks: Vec<usize>,
    euler_characteristic: i64,
    base_flag: usize,
    /// Comparison with the published cover row, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    table1: Option<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table2: Option<Comparison>,
}

#[derive(Serialize, Clone)]
struct Comparison {
    status: Status,
    /// Fields that differ from the published row.
    differs: Vec<String>,
    published: String,
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "UPPERCASE")]
enum Status {
    Pass,
    Fail,
    Discrepant,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepant => "DISCREPANT",
        })
    }
}

fn compare_cover(r: &CoverReport, row: &PublishedCover) -> Comparison {
    let mut differs = Vec::new();
    if r.vertex_symbol.as_ref() != Some(&row.vertex_symbol()) {
        differs.push("vertex symbol".to_string());
    }
    if r.schlafli != row.schlafli() {
        differs.push("type".to_string());
    }
    if r.cover_order != row.cover_order() {
        differs.push("|W|".to_string());
    }
    if r.stabilizer_order != row.stabilizer_order() {
        differs.push("|N|".to_string());
    }
    let status = match (differs.is_empty(), row.published_suspect) {
        (true, _) => Status::Pass,
        (false, true) => Status::Discrepant,
        (false, false) => Status::Fail,
    };
    let published = format!(
        "{} {} {} / {}",
        row.vertex_symbol,
        row.schlafli(),
        row.cover_order,
        row.stabilizer_order
    );
    Comparison {
        status,
        differs,
        published,
    }
}

fn compare_acoptic(r: &CoverReport, published: &[usize]) -> Comparison {
    let same = r.acoptic_ranks == published;
    Comparison {
        status: if same { Status::Pass } else { Status::Fail },
        differs: if same {
            Vec::new()
        } else {
            vec!["acoptic ranks".to_string()]
        },
        published: rank_set(published),
    }
}

fn rank_set(ranks: &[usize]) -> String {
    if ranks.is_empty() {
        "∅".to_string()
    } else {
        format!(
            "{{{}}}",
            ranks
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn record(name: &str, source: &str, g: &FlagGraph, base: usize) -> anyhow::Result<OutputRecord> {
    let r = cover_report_at(g, name, base)?;
    let table1 = catalog::published_cover(name).map(|row| compare_cover(&r, row));
    let table2 = catalog::published_acoptic(name).map(|row| compare_acoptic(&r, row.ranks));
    Ok(OutputRecord {
        name: name.to_string(),
        source: source.to_string(),
        vertex_symbol: r.vertex_symbol.as_ref().map(|s| s.to_string()),
        schlafli: r.schlafli.to_string(),
        cover_order: (&r.cover_order).into(),
        stabilizer_order: (&r.stabilizer_order).into(),
        n_flags: r.n_flags,
        orbit_count: r.orbit_count,
        acoptic_ranks: r.acoptic_ranks.clone(),
        euler_characteristic: r.euler_characteristic,
        base_flag: r.base_flag,
        table1,
        table2,
    })
}

fn load(target: &str) -> anyhow::Result<(String, String, FlagGraph)> {
    if let Some(e) = catalog::lookup(target) {
        return Ok((e.name.to_string(), "catalog".to_string(), e.build()?));
    }
    let path = Path::new(target);
    if !path.exists() {
        bail!(
            "unknown solid {target:?} (not in the catalog and no such file; try `flagquot list`)"
        );
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {target}"))?;
    let spec: PolyhedronSpec = text.parse().with_context(|| format!("parsing {target}"))?;
    let g = from_spec(&spec).with_context(|| format!("invalid face list in {target}"))?;
    Ok((spec.name.clone(), target.to_string(), g))
}

fn cmd_list() {
    for e in catalog::entries() {
        let family = match e.family {
            catalog::Family::Platonic => "platonic",
            catalog::Family::Archimedean => "archimedean",
            catalog::Family::Torus => "torus",
        };
        out!("{:<30} {family}", e.name);
    }
}

fn cmd_analyze(target: &str, base: Option<usize>, json: bool) -> anyhow::Result<()> {
    let (name, source, g) = load(target)?;
    let base = base.unwrap_or(0);
    if base >= g.n_flags() {
        bail!("base flag {base} out of range ({} flags)", g.n_flags());
    }
    let rec = record(&name, &source, &g, base)?;
    if json {
        out!("{}", serde_json::to_string_pretty(&rec)?);
        return Ok(());
    }
    out!("name:                 {}", rec.name);
    out!("source:               {}", rec.source);
    out!(
        "vertex symbol:        {}",
        rec.vertex_symbol
            .as_deref()
            .unwrap_or("(not vertex-uniform)")
    );
    out!("cover type:           {}", rec.schlafli);
    out!(
        "|W/Core(W,N)|:        {} = {}",
        rec.cover_order.decimal,
        rec.cover_order.factored
    );
    out!(
        "|N/Core(W,N)|:        {} = {}",
        rec.stabilizer_order.decimal,
        rec.stabilizer_order.factored
    );
    out!("flags:                {}", rec.n_flags);
    out!("flag orbits:          {}", rec.orbit_count);
    out!("acoptic ranks:        {}", rank_set(&rec.acoptic_ranks));
    out!("Euler characteristic: {}", rec.euler_characteristic);
    out!("base flag:            {}", rec.base_flag);
    for (label, cmp) in [("table 1", &rec.table1), ("table 2", &rec.table2)] {
        if let Some(c) = cmp {
            if c.differs.is_empty() {
                out!(
                    "{label}:              {} (published {})",
                    c.status,
                    c.published
                );
            } else {
                out!(
                    "{label}:              {} on {} (published {})",
                    c.status,
                    c.differs.join(", "),
                    c.published
                );
            }
        }
    }
    Ok(())
}

fn order_text(c: &Order, published: &str) -> String {
    if published.contains('^') {
        c.factored.clone()
    } else {
        c.decimal.clone()
    }
}

fn cmd_table(which: u8, compare: bool, json: bool) -> anyhow::Result<()> {
    let names: Vec<&str> = match which {
        1 => TABLE1.iter().map(|r| r.name).collect(),
        _ => TABLE2.iter().map(|r| r.name).collect(),
    };
    // rayon keeps the output in input order
    let records: Vec<OutputRecord> = names
        .par_iter()
        .map(|name| {
            let g = catalog::build(name)?;
            record(name, "catalog", &g, 0)
        })
        .collect::<anyhow::Result<_>>()?;
    if json {
        let rows: Vec<serde_json::Value> = records
            .iter()
            .map(|r| {
                let mut v = serde_json::to_value(r).expect("record serializes");
                let obj = v.as_object_mut().expect("record is an object");
                let cmp = if which == 1 { &r.table1 } else { &r.table2 };
                obj.remove("table1");
                obj.remove("table2");
                if compare {
                    obj.insert(
                        "compare".into(),
                        serde_json::to_value(cmp).expect("comparison serializes"),
                    );
                }
                v
            })
            .collect();
        out!("{}", serde_json::to_string_pretty(&rows)?);
        return Ok(());
    }
    let mut lines: Vec<Vec<String>> = Vec::new();
    if which == 1 {
        let mut header: Vec<String> = ["polyhedron", "vertex", "type", "|W|", "|N|"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        if compare {
            header.push("compare".into());
        }
        lines.push(header);
        for (r, row) in records.iter().zip(TABLE1.iter()) {
            let mut line = vec![
                r.name.clone(),
                r.vertex_symbol.clone().unwrap_or_else(|| "-".into()),
                r.schlafli.clone(),
                order_text(&r.cover_order, row.cover_order),
                order_text(&r.stabilizer_order, row.stabilizer_order),
            ];
            if compare {
                line.push(compare_cell(r.table1.as_ref()));
            }
            lines.push(line);
        }
    } else {
        let mut header = vec!["polyhedron".to_string(), "acoptic ranks".to_string()];
        if compare {
            header.push("compare".into());
        }
        lines.push(header);
        for r in &records {
            let mut line = vec![r.name.clone(), rank_set(&r.acoptic_ranks)];
            if compare {
                line.push(compare_cell(r.table2.as_ref()));
            }
            lines.push(line);
        }
    }
    print_columns(&lines);
    Ok(())
}

fn compare_cell(c: Option<&Comparison>) -> String {
    match c {
        None => "-".into(),
        Some(c) if c.differs.is_empty() => c.status.to_string(),
        Some(c) => format!(
            "{} on {} (published {})",
            c.status,
            c.differs.join(", "),
            c.published
        ),
    }
}

fn print_columns(lines: &[Vec<String>]) {
    let cols = lines.iter().map(|l| l.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            lines
                .iter()
                .filter_map(|l| l.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for l in lines {
        let mut out = String::new();
        for (c, cell) in l.iter().enumerate() {
            if c + 1 == l.len() {
                out.push_str(cell);
            } else {
                out.push_str(cell);
                out.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
            }
        }
        out!("{out}");
    }
}

#[derive(Serialize)]
struct PsiLine {
    kind: String,
    seed: String,
    derived: String,
    base_flag: usize,
    relators_checked: usize,
    failures: usize,
    converse: bool,
    passed: bool,
}

#[derive(Serialize)]
struct WordsLine {
    words: usize,
    images_fixing_base: usize,
    listed_in_same_order: usize,
    differing_items: Vec<usize>,
    sixth_item_as_desired: bool,
    generated_stabilizer_order: String,
    stabilizer_order: String,
}

#[derive(Serialize)]
struct TorusLine {
    n_flags: usize,
    determinant: i64,
    orbit_lengths: Vec<usize>,
    sigma_orders: Vec<u64>,
    all_acoptic: bool,
}

#[derive(Serialize)]
struct VerifySummary {
    psi: Vec<PsiLine>,
    cuboctahedron: WordsLine,
    torus: TorusLine,
    passed: bool,
}

fn verify() -> anyhow::Result<VerifySummary> {
    let cases = [
        (OperationKind::Truncate, "tetrahedron"),
        (OperationKind::Truncate, "octahedron"),
        (OperationKind::Truncate, "cube"),
        (OperationKind::Truncate, "icosahedron"),
        (OperationKind::Truncate, "dodecahedron"),
        (OperationKind::FullTruncate, "cube"),
        (OperationKind::FullTruncate, "dodecahedron"),
        (OperationKind::Rhombify, "cube"),
        (OperationKind::Rhombify, "dodecahedron"),
        (OperationKind::TruncateFullTruncate, "cube"),
        (OperationKind::TruncateFullTruncate, "dodecahedron"),
        (OperationKind::Snub, "cube"),
        (OperationKind::Snub, "dodecahedron"),
    ];
    let psi = cases
        .par_iter()
        .map(|&(kind, name)| {
            let seed = platonic(name).expect("bundled seed");
            let derived = kind.apply(&seed)?;
            let (group_seed, seed_label) = if kind == OperationKind::Snub {
                (hemi(&seed)?, format!("hemi-{name}"))
            } else {
                (seed, name.to_string())
            };
            let r = verify_psi_auto(kind, &group_seed, &derived)?;
            Ok(PsiLine {
                kind: kind.to_string(),
                seed: seed_label,
                derived: derived_name(kind, name),
                base_flag: r.base,
                relators_checked: r.relators_checked,
                failures: r.failures.len() + r.not_relators.len(),
                converse: r.orbit_injective && r.orbit_is_automorphism_orbit,
                passed: r.passed(),
            })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;

    let cube = platonic("cube").expect("bundled seed");
    let co = builders::full_truncate(&cube)?;
    let map = PsiMap::for_kind(OperationKind::FullTruncate);
    let report = verify_psi(OperationKind::FullTruncate, &cube, &co, 0)?;
    let mut fixing = 0;
    let mut differing = Vec::new();
    let mut sub = flagquot::PermGroup::new(co.n_flags(), Vec::new())?;
    for (k, (a, b)) in CUBOCTAHEDRON_FACE_WORDS
        .iter()
        .zip(CUBE_IDENTITY_WORDS)
        .enumerate()
    {
        let target = word_permutation(&co, &Word::parse_abc(a)?)?;
        sub.add_generator(target.clone());
        let image = map.apply(&Word::parse(b, "stu")?)?;
        if co.apply_word(0, &image)? == 0 {
            fixing += 1;
        }
        if word_permutation(&co, &image)? != target {
            differing.push(k + 1);
        }
    }
    let sixth = map.apply(&Word::parse("((ut)^3)^{sts}", "stu")?)?;
    let sixth_ok = word_permutation(&co, &sixth)?
        == word_permutation(&co, &Word::parse_abc("((ab)^3)^{cbab}")?)?;
    let stab = flagquot::quotient::monodromy(&co)?.stabilizer_order(0)?;
    let words = WordsLine {
        words: CUBE_IDENTITY_WORDS.len(),
        images_fixing_base: fixing,
        listed_in_same_order: CUBE_IDENTITY_WORDS.len() - differing.len(),
        differing_items: differing,
        sixth_item_as_desired: sixth_ok,
        generated_stabilizer_order: sub.order().to_string(),
        stabilizer_order: stab.to_string(),
    };

    let basis = builders::LatticeBasis::petrie_counterexample();
    let torus = builders::torus_44(basis)?;
    let maps = coxeter_elements(&torus)?;
    let mut lengths: Vec<usize> = scheme_lengths(&torus)?.into_iter().flatten().collect();
    lengths.sort_unstable();
    lengths.dedup();
    let mut all_acoptic = true;
    for m in &maps {
        for f in torus.flags() {
            let s = scheme(&torus, f, m)?;
            for i in 0..3 {
                all_acoptic &= s.is_acoptic_at(&torus, i)?;
            }
        }
    }
    let torus_line = TorusLine {
        n_flags: torus.n_flags(),
        determinant: basis.det().abs(),
        orbit_lengths: lengths,
        sigma_orders: maps
            .iter()
            .map(|m| sigma_order_in_cover(&torus, m))
            .collect(),
        all_acoptic,
    };

    let passed = psi.iter().all(|p| p.passed)
        && report.passed()
        && words.images_fixing_base == words.words
        && words.sixth_item_as_desired
        && words.generated_stabilizer_order == words.stabilizer_order
        && torus_line.orbit_lengths.iter().all(|l| *l == 6 || *l == 10)
        && torus_line.sigma_orders.iter().all(|o| *o == 30)
        && torus_line.all_acoptic;
    Ok(VerifySummary {
        psi,
        cuboctahedron: words,
        torus: torus_line,
        passed,
    })
}

fn derived_name(kind: OperationKind, seed: &str) -> String {
    let e = catalog::entries()
        .iter()
        .find(|e| matches!(e.recipe, catalog::Recipe::Op(k, s) if k == kind && s == seed));
    match e {
        Some(e) => e.name.to_string(),
        None => format!("{kind}({seed})"),
    }
}

fn cmd_verify(json: bool) -> anyhow::Result<bool> {
    let s = verify()?;
    if json {
        out!("{}", serde_json::to_string_pretty(&s)?);
        return Ok(s.passed);
    }
    for p in &s.psi {
        out!(
            "psi {:<22} {:<18} -> {:<30} base {:<4} {} relators, {} failures, converse {}: {}",
            p.kind,
            p.seed,
            p.derived,
            p.base_flag,
            p.relators_checked,
            p.failures,
            if p.converse { "ok" } else { "fails" },
            if p.passed { "PASS" } else { "FAIL" }
        );
    }
    let w = &s.cuboctahedron;
    out!(
        "full-truncate/cube: {}/{} words in stabilizer; generated order {} of {}",
        w.images_fixing_base,
        w.words,
        w.generated_stabilizer_order,
        w.stabilizer_order
    );
    out!(
        "cuboctahedron face words: {}/{} listed in the same order{}",
        w.listed_in_same_order,
        w.words,
        if w.differing_items.is_empty() {
            String::new()
        } else {
            format!(" (items {:?} differ)", w.differing_items)
        }
    );
    out!(
        "sixth item ((ut)^3)^{{sts}} -> ((ab)^3)^{{cbab}}: {}",
        if w.sixth_item_as_desired {
            "PASS"
        } else {
            "FAIL"
        }
    );
    let t = &s.torus;
    out!(
        "torus: {} flags, |det| {}, m-values {:?}, |sigma| {:?}, all acoptic: {}",
        t.n_flags,
        t.determinant,
        t.orbit_lengths,
        t.sigma_orders,
        t.all_acoptic
    );
    out!(
        "{}",
        if s.passed {
            "all checks passed"
        } else {
            "verification FAILED"
        }
    );
    Ok(s.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => {
            cmd_list();
            Ok(true)
        }
        Command::Analyze {
            target,
            base_flag,
            json,
        } => cmd_analyze(&target, base_flag, json).map(|_| true),
        Command::Table {
            which,
            compare,
            json,
        } => cmd_table(which, compare, json).map(|_| true),
        Command::Verify { json } => cmd_verify(json),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
