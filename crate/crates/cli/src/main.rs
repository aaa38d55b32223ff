use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use semnet_core::apps::{
    self, evaluate, filter_sentences, read_reference, read_scored, write_scored, ExpansionRequest,
    FilterOptions, Mechanism, DEFAULT_GRID,
};
use semnet_core::textproc::segment;
use semnet_core::{
    LinkWeightConfig, NormalizationMap, Profile, Scorer, SegmentMode, SemanticNetwork, StopList,
    TextPipeline,
};

/// Semantic-network similarity measures and the applications built on them.
#[derive(Parser)]
#[command(name = "semnet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score corpus sentences against a profile and keep the closest fraction.
    Filter(FilterArgs),
    /// Precision/recall of a scored corpus at several keep fractions.
    Eval(EvalArgs),
    /// Rank profiles by proximity to a document (lowest wins).
    Classify(ClassifyArgs),
    /// List the words closest to the rest of a document.
    Terms(TermsArgs),
    /// Expand a word along typed links.
    Expand(ExpandArgs),
    /// Print ancestor sets, arc sets, NCA/ANCA and both measures for two nodes.
    Inspect(InspectArgs),
}

#[derive(Args)]
struct NetworkArgs {
    /// Network file (JSON).
    #[arg(long, value_name = "F")]
    network: PathBuf,
    /// Link weight file (JSON). Unit weights when omitted.
    #[arg(long, value_name = "F")]
    weights: Option<PathBuf>,
}

#[derive(Args)]
struct TextArgs {
    /// Stopword file, one word per line.
    #[arg(long, value_name = "F")]
    stoplist: Option<PathBuf>,
    /// Normalization map, `surface<TAB>replacement` per line.
    #[arg(long, value_name = "F")]
    normalize: Option<PathBuf>,
    /// Only resolve words of this language.
    #[arg(long, value_name = "xx")]
    lang: Option<String>,
}

#[derive(Args)]
struct FilterArgs {
    #[command(flatten)]
    net: NetworkArgs,
    #[command(flatten)]
    text: TextArgs,
    /// Comma-separated profile words.
    #[arg(long)]
    profile: String,
    #[arg(long, value_name = "F")]
    corpus: PathBuf,
    /// Treat every line of the corpus as one sentence.
    #[arg(long)]
    line_sentences: bool,
    /// Fraction of sentences to keep, in (0, 1].
    #[arg(long)]
    keep: f64,
    /// Never keep sentences scoring above this value.
    #[arg(long)]
    max_score: Option<f64>,
    /// Output file for `sentence_id<TAB>score<TAB>kept`.
    #[arg(long, value_name = "F")]
    out: PathBuf,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_name = "F")]
    scored: PathBuf,
    /// Relevant sentence ids, one per line.
    #[arg(long, value_name = "F")]
    reference: PathBuf,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_GRID.to_vec())]
    grid: Vec<f64>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    net: NetworkArgs,
    #[command(flatten)]
    text: TextArgs,
    /// Profiles file: JSON array of {"id", "definition": [words]}.
    #[arg(long, value_name = "F")]
    profiles: PathBuf,
    #[arg(long, value_name = "F")]
    document: PathBuf,
}

#[derive(Args)]
struct TermsArgs {
    #[command(flatten)]
    net: NetworkArgs,
    #[command(flatten)]
    text: TextArgs,
    #[arg(long, value_name = "F")]
    document: PathBuf,
    #[arg(long, default_value_t = 20)]
    top: usize,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, value_name = "F")]
    network: PathBuf,
    #[arg(long)]
    word: String,
    /// Comma-separated: alias, synonyms, hypernyms, hyponyms, inflected,
    /// derived, geographic, translation.
    #[arg(long, value_delimiter = ',', required = true)]
    mechanisms: Vec<String>,
    /// Target language for translation.
    #[arg(long, value_name = "xx")]
    lang: Option<String>,
}

#[derive(Args)]
struct InspectArgs {
    #[command(flatten)]
    net: NetworkArgs,
    /// Two subjects, comma-separated. Each is a node id, a word, or
    /// `a+b+...` for an aggregate.
    #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
    nodes: Vec<String>,
}

fn open(path: &Path) -> Result<File> {
    File::open(path).with_context(|| format!("cannot open {}", path.display()))
}

fn load_network(args: &NetworkArgs) -> Result<(SemanticNetwork, LinkWeightConfig)> {
    let net = SemanticNetwork::from_reader(io::BufReader::new(open(&args.network)?))
        .with_context(|| format!("loading network {}", args.network.display()))?;
    let weights = match &args.weights {
        Some(p) => LinkWeightConfig::from_reader(open(p)?)
            .with_context(|| format!("loading weights {}", p.display()))?,
        None => LinkWeightConfig::unit(),
    };
    Ok((net, weights))
}

fn pipeline(args: &TextArgs) -> Result<TextPipeline> {
    let stop = match &args.stoplist {
        Some(p) => StopList::from_reader(open(p)?)?,
        None => StopList::default(),
    };
    let norm = match &args.normalize {
        Some(p) => NormalizationMap::from_reader(open(p)?)
            .with_context(|| format!("loading normalization map {}", p.display()))?,
        None => NormalizationMap::default(),
    };
    Ok(TextPipeline {
        stop,
        norm,
        lang: args.lang.clone(),
    })
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn run_filter(args: FilterArgs) -> Result<()> {
    let (net, weights) = load_network(&args.net)?;
    let pipeline = pipeline(&args.text)?;
    let mode = if args.line_sentences {
        SegmentMode::LinePerSentence
    } else {
        SegmentMode::Punctuation
    };
    let corpus = segment(&read_text(&args.corpus)?, mode);
    let profile = Profile::new("profile", args.profile.split(',').map(str::trim).filter(|w| !w.is_empty()));
    let scorer = Scorer::new(&net, &weights);
    let options = FilterOptions {
        keep_fraction: args.keep,
        max_score: args.max_score,
    };
    let scored = filter_sentences(&scorer, &profile, &corpus, options, &pipeline)?;
    let mut out = BufWriter::new(
        File::create(&args.out).with_context(|| format!("cannot create {}", args.out.display()))?,
    );
    write_scored(&mut out, &scored)?;
    out.flush()?;
    let kept = scored.iter().filter(|s| s.kept).count();
    eprintln!("kept {kept} of {} sentences", scored.len());
    Ok(())
}

fn run_eval(args: EvalArgs) -> Result<()> {
    let scored = read_scored(open(&args.scored)?)
        .with_context(|| format!("reading {}", args.scored.display()))?;
    let reference = read_reference(open(&args.reference)?)
        .with_context(|| format!("reading {}", args.reference.display()))?;
    let report = evaluate(&scored, &reference, &args.grid)?;
    print!("{}", report.to_tsv());
    for note in report.notes() {
        eprintln!("note: {note}");
    }
    Ok(())
}

fn run_classify(args: ClassifyArgs) -> Result<()> {
    let (net, weights) = load_network(&args.net)?;
    let pipeline = pipeline(&args.text)?;
    let profiles = apps::load_profiles(open(&args.profiles)?)
        .with_context(|| format!("reading profiles {}", args.profiles.display()))?;
    let document = read_text(&args.document)?;
    let scorer = Scorer::new(&net, &weights);
    let mut out = io::stdout().lock();
    for (id, score) in apps::classify(&scorer, &document, &profiles, &pipeline)? {
        writeln!(out, "{id}\t{score}")?;
    }
    Ok(())
}

fn run_terms(args: TermsArgs) -> Result<()> {
    let (net, weights) = load_network(&args.net)?;
    let pipeline = pipeline(&args.text)?;
    let document = read_text(&args.document)?;
    let scorer = Scorer::new(&net, &weights);
    let mut out = io::stdout().lock();
    for (word, score) in apps::spot_terms(&scorer, &document, args.top, &pipeline)? {
        writeln!(out, "{word}\t{score}")?;
    }
    Ok(())
}

fn run_expand(args: ExpandArgs) -> Result<()> {
    let net = SemanticNetwork::from_reader(io::BufReader::new(open(&args.network)?))
        .with_context(|| format!("loading network {}", args.network.display()))?;
    let mechanisms = args
        .mechanisms
        .iter()
        .map(|m| m.parse::<Mechanism>())
        .collect::<Result<_, _>>()?;
    let request = ExpansionRequest {
        word: args.word,
        mechanisms,
        lang: args.lang,
    };
    let mut out = io::stdout().lock();
    for (mechanism, found) in apps::expand(&net, &request)? {
        for e in found {
            writeln!(out, "{mechanism}\t{}\t{}", e.label, e.lang.as_deref().unwrap_or("-"))?;
        }
    }
    Ok(())
}

fn run_inspect(args: InspectArgs) -> Result<()> {
    let [a, b] = args.nodes.as_slice() else {
        anyhow::bail!("--nodes takes exactly two comma-separated subjects");
    };
    let (net, weights) = load_network(&args.net)?;
    let a = apps::subject_from_spec(&net, a)?;
    let b = apps::subject_from_spec(&net, b)?;
    let scorer = Scorer::new(&net, &weights);
    print!("{}", apps::inspect(&scorer, &a, &b)?);
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let validation = err
        .chain()
        .filter_map(|e| e.downcast_ref::<semnet_core::Error>())
        .any(semnet_core::Error::is_validation);
    if validation {
        2
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Filter(a) => run_filter(a),
        Command::Eval(a) => run_eval(a),
        Command::Classify(a) => run_classify(a),
        Command::Terms(a) => run_terms(a),
        Command::Expand(a) => run_expand(a),
        Command::Inspect(a) => run_inspect(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
