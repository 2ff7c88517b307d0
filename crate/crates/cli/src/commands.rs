use std::fs::File;
use std::io::{BufWriter, Write};

use log::{info, warn};
use psmooth_core::criteria::LocusReport;
use psmooth_core::eqmult::{numerator, MAX_LENGTH};
use psmooth_core::polyfrac::default_names;
use psmooth_core::scalar::is_prime;
use psmooth_core::weyl::sort_elements;
use psmooth_core::zoo::{self, ConsistencyRow, MismatchRow, WeightedKleinian, ZooResult};
use psmooth_core::{BigInt, CartanType, Error, Gcm, Report, Table, WeylElement, WeylGroup, Word};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::args::{Format, GroupArgs, LocusArgs, MultArgs, ScanArgs, ZooCommand};
use crate::cache::{Cache, CacheEntry};
use crate::error::{CliError, CliResult};
use crate::record::{word_text, AbsF, ScanRecord};

pub fn load_group(args: &GroupArgs) -> CliResult<WeylGroup> {
    let gcm = match (&args.type_tag, &args.gcm_file) {
        (Some(tag), _) => Gcm::builtin(tag.parse::<CartanType>()?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            Gcm::from_document(&text)?
        }
        (None, None) => return Err(CliError::Usage("one of --type or --gcm-file is required".into())),
    };
    Ok(WeylGroup::new(gcm))
}

/// Parses `w`, replacing a non-reduced word by a reduced subword.
pub fn reduced_word(g: &WeylGroup, text: &str) -> CliResult<(WeylElement, Word)> {
    let word: Word = text.parse()?;
    let e = g.element_from_word(&word)?;
    if e.length() != word.len() {
        warn!(
            "word {} is not reduced; using {}",
            word_text(&word),
            word_text(e.word())
        );
    }
    let reduced = e.word().clone();
    Ok((e, reduced))
}

fn check_primes(primes: &[u64]) -> CliResult<()> {
    match primes.iter().find(|&&p| !is_prime(p)) {
        Some(p) => Err(CliError::Usage(format!("{p} is not prime"))),
        None => Ok(()),
    }
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new().from_writer(out)
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::io("<csv>", std::io::Error::other(e))
}

fn io_out(e: std::io::Error) -> CliError {
    CliError::io("<output>", e)
}

pub fn mult(args: &MultArgs, out: &mut dyn Write) -> CliResult<()> {
    let g = load_group(&args.group)?;
    let (w, word) = reduced_word(&g, &args.w)?;
    let y = g.element_from_word(&args.y.parse()?)?;
    let r: Report = numerator(&g, &word, &y)?;
    let names = default_names(g.rank());
    let dens: Vec<String> = r.den_factors.iter().map(|f| f.render(&names)).collect();
    let abs_f = AbsF::from(&r.kind());
    match args.format {
        Format::Text => {
            writeln!(out, "group       {}", g.gcm().name()).map_err(io_out)?;
            writeln!(out, "w           {} (length {})", word_text(w.word()), w.length()).map_err(io_out)?;
            writeln!(out, "y           {}", word_text(r.y.word())).map_err(io_out)?;
            writeln!(out, "e_(y,w)     {}", r.value.render(&names)).map_err(io_out)?;
            writeln!(out, "numerator   {}", numerator_text(&r, &names)).map_err(io_out)?;
            let factors: Vec<String> = dens.iter().map(|d| format!("({d})")).collect();
            writeln!(out, "denominator {}", factors.join("*")).map_err(io_out)?;
            writeln!(
                out,
                "zero {}  constant {}  integral {}  |f| {}",
                r.is_zero, r.is_constant, r.is_integral, abs_f
            )
            .map_err(io_out)?;
        }
        Format::Json => {
            let v = json!({
                "group": g.gcm().name(),
                "w": word_text(w.word()),
                "y": word_text(r.y.word()),
                "value": r.value.render(&names),
                "numerator": numerator_text(&r, &names),
                "den_factors": dens,
                "is_zero": r.is_zero,
                "is_constant": r.is_constant,
                "is_integral": r.is_integral,
                "abs_f": abs_f,
            });
            writeln!(out, "{v}").map_err(io_out)?;
        }
        Format::Csv => {
            let mut c = csv_writer(out);
            c.write_record(["group", "w", "y", "value", "numerator", "is_constant", "is_integral", "abs_f"])
                .map_err(csv_err)?;
            c.write_record([
                g.gcm().name(),
                word_text(w.word()),
                word_text(r.y.word()),
                r.value.render(&names),
                numerator_text(&r, &names),
                r.is_constant.to_string(),
                r.is_integral.to_string(),
                abs_f.to_string(),
            ])
            .map_err(csv_err)?;
            c.flush().map_err(io_out)?;
        }
    }
    Ok(())
}

/// Signed numerator `f_scalar * f` with the scalar denominator dropped into
/// a trailing `/d`.
fn numerator_text(r: &Report, names: &[String]) -> String {
    if r.is_zero {
        return "0".into();
    }
    let c = r.f_scalar.numer();
    let d = r.f_scalar.denom();
    let body = if r.f.is_constant() {
        c.to_string()
    } else if c == &BigInt::from(1) {
        r.f.render(names)
    } else if c == &BigInt::from(-1) {
        format!("-({})", r.f.render(names))
    } else {
        format!("{c}*({})", r.f.render(names))
    };
    if d == &BigInt::from(1) {
        body
    } else {
        format!("{body}/{d}")
    }
}

#[derive(Serialize)]
struct LocusLine<'a> {
    #[serde(flatten)]
    record: &'a ScanRecord,
    torsion_primes: Option<Vec<String>>,
}

fn check_locus(g: &WeylGroup, report: &LocusReport) -> CliResult<()> {
    let v = report.violations(g);
    match v.first() {
        Some(first) => Err(CliError::Invariant(format!(
            "{} violation(s) for w = {}; first: {first}",
            v.len(),
            report.w
        ))),
        None => Ok(()),
    }
}

pub fn locus(args: &LocusArgs, out: &mut dyn Write) -> CliResult<()> {
    check_primes(&args.primes)?;
    let g = load_group(&args.group)?;
    let (w, word) = reduced_word(&g, &args.w)?;
    let table = Table::from_word(&g, &word)?;
    let report = LocusReport::compute(&table, &args.primes)?;
    let label = g.gcm().name();
    let rows: Vec<(ScanRecord, Option<Vec<String>>)> = report
        .points
        .iter()
        .map(|p| {
            let torsion = p
                .torsion_primes
                .as_ref()
                .map(|s| s.iter().map(|q| q.to_string()).collect());
            (ScanRecord::new(&label, w.word(), p), torsion)
        })
        .collect();
    match args.format {
        Format::Text => {
            writeln!(
                out,
                "X_w for w = {} in {}: {} fixed points, primes {:?}",
                word_text(w.word()),
                label,
                rows.len(),
                args.primes
            )
            .map_err(io_out)?;
            let mut head = format!("{:<22} {:<14} {:<8} {:<8}", "x", "|f|", "rsmooth", "smooth");
            for p in &args.primes {
                head.push_str(&format!(" {:<8}", format!("{p}-smooth")));
            }
            head.push_str(" torsion");
            writeln!(out, "{head}").map_err(io_out)?;
            for (r, torsion) in &rows {
                let mut line = format!(
                    "{:<22} {:<14} {:<8} {:<8}",
                    word_text(&r.y),
                    r.abs_f.to_string(),
                    r.rationally_smooth,
                    r.smooth
                );
                for p in &args.primes {
                    line.push_str(&format!(" {:<8}", r.p_smooth[p]));
                }
                line.push(' ');
                line.push_str(&torsion.as_ref().map_or("-".into(), |t| format!("{{{}}}", t.join(","))));
                writeln!(out, "{}", line.trim_end()).map_err(io_out)?;
            }
        }
        Format::Json => {
            for (record, torsion) in &rows {
                let line = LocusLine {
                    record,
                    torsion_primes: torsion.clone(),
                };
                writeln!(out, "{}", serde_json::to_string(&line).expect("serializable")).map_err(io_out)?;
            }
        }
        Format::Csv => {
            let mut c = csv_writer(out);
            let mut head = ScanRecord::csv_header(&args.primes);
            head.push("torsion_primes".into());
            c.write_record(&head).map_err(csv_err)?;
            for (r, torsion) in &rows {
                let mut f = r.csv_fields(&args.primes);
                f.push(torsion.as_ref().map_or(String::new(), |t| t.join(" ")));
                c.write_record(&f).map_err(csv_err)?;
            }
            c.flush().map_err(io_out)?;
        }
    }
    check_locus(&g, &report)
}

/// Summary of a scan, for logging and tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanStats {
    pub elements: usize,
    pub records: usize,
    pub cached: usize,
    pub computed: usize,
}

pub fn scan(args: &ScanArgs) -> CliResult<ScanStats> {
    check_primes(&args.primes)?;
    if args.max_length > MAX_LENGTH {
        return Err(Error::LengthCap(args.max_length, MAX_LENGTH).into());
    }
    let g = load_group(&args.group)?;
    let cache_path = if args.no_cache {
        None
    } else {
        args.cache.clone().or_else(Cache::default_path)
    };
    let mut cache = cache_path.as_deref().map(Cache::open).transpose()?;
    let digest = g.gcm().digest();
    let mut elements = g.enumerate_ball(args.max_length);
    sort_elements(&mut elements);

    let hits: Vec<Option<Table>> = elements
        .iter()
        .map(|w| {
            let entry = cache.as_ref()?.get(&digest, &g.canonical_reduced_word(w))?;
            match entry.to_table(&g) {
                Ok(t) => Some(t),
                Err(e) => {
                    warn!("ignoring unusable cache entry for {}: {e}", word_text(w.word()));
                    None
                }
            }
        })
        .collect();
    let cached = hits.iter().filter(|h| h.is_some()).count();
    let tables: Vec<Table> = elements
        .par_iter()
        .zip(hits)
        .map(|(w, hit)| match hit {
            Some(t) => Ok(t),
            None => Table::new(&g, w),
        })
        .collect::<psmooth_core::Result<_>>()?;
    if let Some(c) = cache.as_mut() {
        let fresh: Vec<CacheEntry> = tables
            .iter()
            .filter(|t| c.get(&digest, t.w().word()).is_none())
            .map(|t| CacheEntry::from_table(&g, t))
            .collect();
        info!("appending {} entries to {}", fresh.len(), c.path().display());
        c.append(fresh)?;
    }

    let label = g.gcm().name();
    let reports: Vec<LocusReport> = tables
        .par_iter()
        .map(|t| LocusReport::compute(t, &args.primes))
        .collect::<psmooth_core::Result<_>>()?;
    let records: Vec<ScanRecord> = reports
        .iter()
        .flat_map(|rep| rep.points.iter().map(|p| ScanRecord::new(&label, rep.w.word(), p)))
        .collect();

    match &args.out {
        Some(path) => {
            let f = File::create(path).map_err(|e| CliError::io(path, e))?;
            let mut w = BufWriter::new(f);
            write_records(&records, &args.primes, args.format, &mut w)?;
            w.flush().map_err(|e| CliError::io(path, e))?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_records(&records, &args.primes, args.format, &mut lock)?;
        }
    }
    for rep in &reports {
        check_locus(&g, rep)?;
    }
    Ok(ScanStats {
        elements: elements.len(),
        records: records.len(),
        cached,
        computed: elements.len() - cached,
    })
}

pub fn write_records(records: &[ScanRecord], primes: &[u64], format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{}", r.to_json()).map_err(io_out)?;
            }
        }
        Format::Text => {
            for r in records {
                writeln!(out, "{}", r.text_line().trim_end()).map_err(io_out)?;
            }
        }
        Format::Csv => {
            let mut c = csv_writer(out);
            c.write_record(ScanRecord::csv_header(primes)).map_err(csv_err)?;
            for r in records {
                c.write_record(r.csv_fields(primes)).map_err(csv_err)?;
            }
            c.flush().map_err(io_out)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ZooLine {
    name: String,
    dim: usize,
    multiplicity: String,
    abs_numerator: Option<String>,
    expected: Option<String>,
    torsion_groups: Vec<u64>,
}

impl From<&ZooResult> for ZooLine {
    fn from(r: &ZooResult) -> Self {
        ZooLine {
            name: r.name.clone(),
            dim: r.dim,
            multiplicity: r.rendered(),
            abs_numerator: r.abs_numerator.as_ref().map(|a| a.to_string()),
            expected: r.expected.as_ref().map(|a| a.to_string()),
            torsion_groups: r.torsion_groups.clone(),
        }
    }
}

fn opt(s: &Option<String>) -> String {
    s.clone().unwrap_or_else(|| "-".into())
}

fn write_zoo(r: &ZooResult, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let line = ZooLine::from(r);
    match format {
        Format::Text => {
            writeln!(out, "{}  (dim {})", line.name, line.dim).map_err(io_out)?;
            writeln!(out, "  e = {}", line.multiplicity).map_err(io_out)?;
            writeln!(
                out,
                "  |numerator| = {}  expected = {}",
                opt(&line.abs_numerator),
                opt(&line.expected)
            )
            .map_err(io_out)?;
        }
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&line).expect("serializable")).map_err(io_out)?;
        }
        Format::Csv => {
            let mut c = csv_writer(out);
            c.write_record(["name", "dim", "multiplicity", "abs_numerator", "expected"])
                .map_err(csv_err)?;
            c.write_record([
                line.name.clone(),
                line.dim.to_string(),
                line.multiplicity.clone(),
                line.abs_numerator.clone().unwrap_or_default(),
                line.expected.clone().unwrap_or_default(),
            ])
            .map_err(csv_err)?;
            c.flush().map_err(io_out)?;
        }
    }
    Ok(())
}

fn type_with_rank(tag: &str, n: Option<usize>) -> CliResult<CartanType> {
    let full = match n {
        Some(n) => format!("{tag}{n}"),
        None => tag.to_string(),
    };
    Ok(full.parse::<CartanType>()?)
}

#[derive(Serialize)]
struct ConsistencyLine {
    example: String,
    abs_numerator: String,
    torsion_order: String,
    computed: bool,
    matches: bool,
}

impl From<&ConsistencyRow> for ConsistencyLine {
    fn from(r: &ConsistencyRow) -> Self {
        ConsistencyLine {
            example: r.example.clone(),
            abs_numerator: r.abs_numerator.to_string(),
            torsion_order: r.torsion_order.to_string(),
            computed: r.computed,
            matches: r.matches,
        }
    }
}

#[derive(Serialize)]
struct MismatchLine {
    example: String,
    weights: [i64; 3],
    d: String,
    primes_of_d: Vec<u64>,
    non_p_smooth_primes: Vec<u64>,
    mismatch: bool,
}

impl From<&MismatchRow> for MismatchLine {
    fn from(r: &MismatchRow) -> Self {
        MismatchLine {
            example: r.example.clone(),
            weights: r.weights,
            d: r.d.to_string(),
            primes_of_d: r.primes_of_d.iter().copied().collect(),
            non_p_smooth_primes: r.non_p_smooth_primes.iter().copied().collect(),
            mismatch: r.mismatch,
        }
    }
}

fn set_text(s: &[u64]) -> String {
    let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

pub fn zoo(cmd: &ZooCommand, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        ZooCommand::KleinianA { n, format } => write_zoo(&zoo::kleinian_a(*n)?, *format, out),
        ZooCommand::MinimalOrbit { type_tag, n, format } => {
            let t = type_with_rank(type_tag, *n)?;
            write_zoo(&zoo::minimal_orbit_multiplicity(&Gcm::builtin(t))?, *format, out)
        }
        ZooCommand::Weighted { type_tag, n, format } => {
            let t = type_with_rank(type_tag, *n)?;
            let kind = WeightedKleinian::parse(&t.to_string())?;
            write_zoo(&zoo::weighted_kleinian(kind)?, *format, out)
        }
        ZooCommand::Consistency {
            kleinian_n,
            c_n,
            format,
        } => {
            let rows = zoo::consistency_table_with(*kleinian_n, *c_n)?;
            let lines: Vec<ConsistencyLine> = rows.iter().map(ConsistencyLine::from).collect();
            match format {
                Format::Text => {
                    writeln!(out, "{:<22} {:>10} {:>10} {:<9} match", "example", "|f|", "torsion", "source")
                        .map_err(io_out)?;
                    for l in &lines {
                        writeln!(
                            out,
                            "{:<22} {:>10} {:>10} {:<9} {}",
                            l.example,
                            l.abs_numerator,
                            l.torsion_order,
                            if l.computed { "computed" } else { "fixture" },
                            l.matches
                        )
                        .map_err(io_out)?;
                    }
                }
                Format::Json => {
                    for l in &lines {
                        writeln!(out, "{}", serde_json::to_string(l).expect("serializable")).map_err(io_out)?;
                    }
                }
                Format::Csv => {
                    let mut c = csv_writer(out);
                    for l in &lines {
                        c.serialize(l).map_err(csv_err)?;
                    }
                    c.flush().map_err(io_out)?;
                }
            }
            match lines.iter().find(|l| !l.matches) {
                Some(l) => Err(CliError::Invariant(format!(
                    "{}: numerator {} but torsion order {}",
                    l.example, l.abs_numerator, l.torsion_order
                ))),
                None => Ok(()),
            }
        }
        ZooCommand::Mismatch { d, format } => {
            let rows = zoo::hypothesis_failure_demo(d)?;
            let lines: Vec<MismatchLine> = rows.iter().map(MismatchLine::from).collect();
            match format {
                Format::Text => {
                    writeln!(
                        out,
                        "{:<14} {:<12} {:>4} {:<10} {:<12} mismatch",
                        "example", "weights", "d", "primes(d)", "non-p-smooth"
                    )
                    .map_err(io_out)?;
                    for l in &lines {
                        writeln!(
                            out,
                            "{:<14} {:<12} {:>4} {:<10} {:<12} {}",
                            l.example,
                            format!("{:?}", l.weights),
                            l.d,
                            set_text(&l.primes_of_d),
                            set_text(&l.non_p_smooth_primes),
                            l.mismatch
                        )
                        .map_err(io_out)?;
                    }
                }
                Format::Json => {
                    for l in &lines {
                        writeln!(out, "{}", serde_json::to_string(l).expect("serializable")).map_err(io_out)?;
                    }
                }
                Format::Csv => {
                    let mut c = csv_writer(out);
                    c.write_record(["example", "weights", "d", "primes_of_d", "non_p_smooth_primes", "mismatch"])
                        .map_err(csv_err)?;
                    for l in &lines {
                        c.write_record([
                            l.example.clone(),
                            format!("{} {} {}", l.weights[0], l.weights[1], l.weights[2]),
                            l.d.clone(),
                            set_text(&l.primes_of_d),
                            set_text(&l.non_p_smooth_primes),
                            l.mismatch.to_string(),
                        ])
                        .map_err(csv_err)?;
                    }
                    c.flush().map_err(io_out)?;
                }
            }
            Ok(())
        }
    }
}
