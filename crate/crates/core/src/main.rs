use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use xaviers::document::{emit_xavier, parse_xavier};
use xaviers::enumerate::{all_xaviers, census_row};
use xaviers::render::{render_ascii, render_svg, RenderOptions};
use xaviers::sample::sample_stream;
use xaviers::series::{series_h, series_p, series_x, verify_identities, TruncatedSeries};
use xaviers::verify::run_battery;
use xaviers::{decode, encode, Shape, Word, Xavier};

/// Largest size the brute-force census is allowed to build.
const BRUTE_LIMIT: usize = 13;
/// Default `--method` switches from brute force to series above this size.
const BRUTE_DEFAULT_LIMIT: usize = 10;

#[derive(Parser)]
#[command(
    name = "xaviers",
    version,
    about = "Domino towers counted, coded, sampled and drawn"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact number of objects with N pieces.
    Count {
        #[arg(long)]
        pieces: usize,
        #[arg(long, value_enum, default_value_t = Class::Xavier)]
        class: Class,
        /// Defaults to brute for N <= 10 and series above.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Print every object with N pieces.
    List {
        #[arg(long)]
        pieces: usize,
        #[arg(long, value_enum, default_value_t = Class::Xavier)]
        class: Class,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Print the word of a xavier document (FILE or - for stdin).
    Encode {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the xavier document of a word over + 0 -.
    Decode {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Draw uniform random xaviers.
    Sample {
        #[arg(long)]
        pieces: usize,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SampleFormat::Json)]
        format: SampleFormat,
    },
    /// Draw a xavier document (FILE or - for stdin).
    Render {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum)]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "[==]")]
        glyph: String,
    },
    /// Print series coefficients, or check the identity chain.
    Series {
        #[arg(long)]
        terms: usize,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Run the full cross-check battery.
    Verify {
        #[arg(long)]
        max_pieces: usize,
        #[arg(long, default_value_t = 100)]
        series_terms: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    Xavier,
    Pyramid,
    Half,
}

impl Class {
    fn admits(self, shape: Shape) -> bool {
        match self {
            Class::Xavier => true,
            Class::Pyramid => shape != Shape::General,
            Class::Half => shape == Shape::HalfPyramid,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Series,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Word,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleFormat {
    Json,
    Word,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "H")]
    H,
    #[value(name = "P")]
    P,
    #[value(name = "X")]
    X,
    #[value(name = "identities")]
    Identities,
}

enum Failure {
    Verification,
    Usage(String),
    Input(String),
}

impl Failure {
    fn input(e: impl std::fmt::Display) -> Failure {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn size_in_range(what: &str, n: usize, max: usize) -> Outcome {
    if n == 0 || n > max {
        return Err(Failure::Usage(format!(
            "{what} must be in 1..={max}, got {n}"
        )));
    }
    Ok(())
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(input).map_err(|e| Failure::Input(format!("cannot read {input}: {e}")))
    }
}

fn read_xavier(input: &str) -> Result<Xavier, Failure> {
    parse_xavier(&read_input(input)?).map_err(Failure::input)
}

fn emit(out: &mut impl Write, text: &str) -> Outcome {
    writeln!(out, "{text}").map_err(|e| Failure::Input(format!("cannot write output: {e}")))
}

fn class_series(class: Class, order: usize) -> TruncatedSeries {
    match class {
        Class::Xavier => series_x(order),
        Class::Pyramid => series_p(order),
        Class::Half => series_h(order),
    }
    .expect("order >= 1")
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Count {
            pieces,
            class,
            method,
        } => {
            let method = method.unwrap_or(if pieces <= BRUTE_DEFAULT_LIMIT {
                Method::Brute
            } else {
                Method::Series
            });
            let count: BigInt = match method {
                Method::Brute => {
                    size_in_range("--pieces", pieces, BRUTE_LIMIT)?;
                    let level = all_xaviers(pieces).map_err(Failure::input)?;
                    let row = census_row(pieces, &level);
                    match class {
                        Class::Xavier => row.xaviers,
                        Class::Pyramid => row.pyramids,
                        Class::Half => row.half_pyramids,
                    }
                    .into()
                }
                Method::Series => {
                    size_in_range("--pieces", pieces, usize::MAX)?;
                    class_series(class, pieces).coeff(pieces).clone()
                }
                Method::Formula => {
                    if class != Class::Xavier {
                        return Err(Failure::Usage(
                            "--method formula only applies to --class xavier".into(),
                        ));
                    }
                    size_in_range("--pieces", pieces, u32::MAX as usize)?;
                    BigInt::from(3).pow(pieces as u32 - 1)
                }
            };
            emit(out, &count.to_string())
        }
        Command::List {
            pieces,
            class,
            format,
        } => {
            size_in_range("--pieces", pieces, BRUTE_LIMIT)?;
            for x in all_xaviers(pieces).map_err(Failure::input)? {
                if !class.admits(x.classify().shape) {
                    continue;
                }
                let line = match format {
                    ListFormat::Json => emit_xavier(&x),
                    ListFormat::Word => encode(&x).to_string(),
                };
                emit(out, &line)?;
            }
            Ok(())
        }
        Command::Encode { input } => {
            let x = read_xavier(&input)?;
            emit(out, &encode(&x).to_string())
        }
        Command::Decode { word } => {
            let w: Word = word.parse().map_err(Failure::input)?;
            let x = decode(&w).map_err(Failure::input)?;
            emit(out, &emit_xavier(&x))
        }
        Command::Sample {
            pieces,
            count,
            seed,
            format,
        } => {
            size_in_range("--pieces", pieces, usize::MAX)?;
            let opts = RenderOptions::default();
            for stream in 0..count {
                let x = sample_stream(pieces, seed, stream).map_err(Failure::input)?;
                match format {
                    SampleFormat::Json => emit(out, &emit_xavier(&x))?,
                    SampleFormat::Word => emit(out, &encode(&x).to_string())?,
                    SampleFormat::Ascii => {
                        if stream > 0 {
                            emit(out, "")?;
                        }
                        emit(out, &render_ascii(&x, &opts))?;
                    }
                }
            }
            Ok(())
        }
        Command::Render {
            input,
            format,
            out: path,
            glyph,
        } => {
            let opts = RenderOptions::default()
                .with_glyph(&glyph)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let x = read_xavier(&input)?;
            let text = match format {
                RenderFormat::Ascii => render_ascii(&x, &opts) + "\n",
                RenderFormat::Svg => render_svg(&x, &opts),
            };
            match path {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
                None => out
                    .write_all(text.as_bytes())
                    .map_err(|e| Failure::Input(format!("cannot write output: {e}"))),
            }
        }
        Command::Series { terms, which } => {
            size_in_range("--terms", terms, usize::MAX)?;
            let series = match which {
                Which::H => series_h(terms),
                Which::P => series_p(terms),
                Which::X => series_x(terms),
                Which::Identities => {
                    let report = verify_identities(terms).map_err(Failure::input)?;
                    for check in &report.checks {
                        let status = if check.holds { "PASS" } else { "FAIL" };
                        emit(out, &format!("{status} {}", check.name))?;
                    }
                    return if report.all_hold() {
                        Ok(())
                    } else {
                        Err(Failure::Verification)
                    };
                }
            }
            .map_err(Failure::input)?;
            for (k, c) in series.coeffs().iter().enumerate() {
                emit(out, &format!("{k}\t{c}"))?;
            }
            Ok(())
        }
        Command::Verify {
            max_pieces,
            series_terms,
        } => {
            size_in_range("--max-pieces", max_pieces, BRUTE_LIMIT)?;
            size_in_range("--series-terms", series_terms, usize::MAX)?;
            let report = run_battery(max_pieces, series_terms).map_err(Failure::input)?;
            for check in &report {
                emit(out, &check.to_string())?;
            }
            if report.iter().all(|c| c.passed) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}
