//! JSON-certificate-emitting command line around the exact index library.
//!
//! Every subcommand prints one deterministic JSON document; `verify`
//! recomputes any such document from the inputs embedded in it. Exit
//! codes: 0 on success, 1 when the computation rejects the inputs or a
//! verification fails, 2 when the inputs cannot be parsed.

mod envelope;
mod inputs;

use clap::{Parser, Subcommand};
use inputs::Failure;
use ndindex::totally_real::{TotallyRealField, UpperHalfPoint, DEFAULT_SEARCH_CAP};
use std::fs;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "ndindex")]
#[command(about = "Exact Euler characteristics, index certificates, and sign-pattern searches")]
#[command(version)]
struct Cli {
    /// Write the JSON document to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Euler characteristic of a class on an intersection form
    Chi {
        /// Intersection form JSON file
        #[arg(long)]
        form: PathBuf,
        /// Class: comma-separated rationals or a JSON file
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Index certificate of a non-degenerate class
    Index {
        /// Intersection form JSON file
        #[arg(long)]
        form: PathBuf,
        /// Ample reference class
        #[arg(long, allow_hyphen_values = true)]
        ample: String,
        /// Class: comma-separated rationals or a JSON file
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Pair index condition for two classes and their sum
    PairCheck {
        /// Intersection form JSON file
        #[arg(long)]
        form: PathBuf,
        /// Ample reference class
        #[arg(long, allow_hyphen_values = true)]
        ample: String,
        /// First class
        #[arg(long, allow_hyphen_values = true)]
        l: String,
        /// Second class
        #[arg(long, allow_hyphen_values = true)]
        m: String,
    },
    /// Index constancy on the straight segment between two classes
    Segment {
        /// Intersection form JSON file
        #[arg(long)]
        form: PathBuf,
        /// Ample reference class
        #[arg(long, allow_hyphen_values = true)]
        ample: String,
        /// Class at the t = 1 end of the segment
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        /// Class at the t = 0 end of the segment
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Minimal a0 with constant index for a*eta + xi at every a >= a0
    Threshold {
        /// Intersection form JSON file
        #[arg(long)]
        form: PathBuf,
        /// Ample reference class
        #[arg(long, allow_hyphen_values = true)]
        ample: String,
        /// Direction class (integral)
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        /// Offset class (integral)
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Asymptotic cohomology value of a class in one degree
    Hhat {
        /// Intersection form JSON file
        #[arg(long)]
        form: PathBuf,
        /// Ample reference class
        #[arg(long, allow_hyphen_values = true)]
        ample: String,
        /// Class: comma-separated rationals or a JSON file
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Cohomological degree
        #[arg(long)]
        q: usize,
    },
    /// Whether a class is naively q-ample
    Qample {
        /// Intersection form JSON file
        #[arg(long)]
        form: PathBuf,
        /// Ample reference class
        #[arg(long, allow_hyphen_values = true)]
        ample: String,
        /// Class: comma-separated rationals or a JSON file
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Cohomological degree
        #[arg(long)]
        q: usize,
    },
    /// Lower bound on the power needed for surjective multiplication maps
    SurjBound {
        /// Intersection form JSON file
        #[arg(long)]
        form: PathBuf,
        /// Ample reference class
        #[arg(long, allow_hyphen_values = true)]
        ample: String,
        /// First class
        #[arg(long, allow_hyphen_values = true)]
        l: String,
        /// Second class
        #[arg(long, allow_hyphen_values = true)]
        m: String,
    },
    /// Self-contained product-of-elliptic-curves demonstration report
    ExeDemo {
        /// Sweep box radius for the classification summary
        #[arg(long, default_value_t = 4)]
        radius: u32,
        /// Largest family level m in the dimension and pushforward tables
        #[arg(long = "m-max", default_value_t = 8)]
        m_max: u32,
        /// Largest power n in the dimension table
        #[arg(long = "n-max", default_value_t = 4)]
        n_max: u32,
    },
    /// Search for two elements realizing prescribed embedding signs
    RmSearch {
        /// Defining polynomial: descending coefficients ("1,0,-2" is
        /// t^2 - 2) or a JSON file {"f": [ascending ints]}
        #[arg(long, allow_hyphen_values = true)]
        field: String,
        /// 1-based embeddings where the first element is negative
        #[arg(long = "I", default_value = "")]
        i_set: String,
        /// 1-based embeddings where the second element is negative
        #[arg(long = "J", default_value = "")]
        j_set: String,
        /// Search iteration cap; NDINDEX_MAX_ITERS overrides it
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        max_iters: u32,
    },
    /// Existence certificate for Hermitian forms with negative counts
    /// (p, q, p + q)
    RmReport {
        /// Defining polynomial: descending coefficients or a JSON file
        #[arg(long, allow_hyphen_values = true)]
        field: String,
        /// Negative count of the first form
        #[arg(long)]
        p: usize,
        /// Negative count of the second form
        #[arg(long)]
        q: usize,
        /// Base points "re,im;re,im;..."; defaults to i at every embedding
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Search iteration cap; NDINDEX_MAX_ITERS overrides it
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        max_iters: u32,
    },
    /// Recompute a previously emitted document and confirm it matches
    Verify {
        /// JSON document produced by another subcommand
        document: PathBuf,
    },
}

fn default_base_points(field: &TotallyRealField) -> Vec<UpperHalfPoint> {
    (0..field.degree())
        .map(|_| UpperHalfPoint::imaginary_unit())
        .collect()
}

fn render<T: serde::Serialize>(doc: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(doc)
        .map_err(|e| Failure::Malformed(format!("serialization: {e}")))
}

fn run(command: Commands) -> Result<String, Failure> {
    match command {
        Commands::Chi { form, class } => {
            let form = inputs::read_form(&form)?;
            let class = inputs::parse_class(&class)?;
            render(&envelope::chi_doc(form, class)?)
        }
        Commands::Index { form, ample, class } => {
            let form = inputs::read_form(&form)?;
            let ample = inputs::parse_class(&ample)?;
            let class = inputs::parse_class(&class)?;
            render(&envelope::index_doc(form, &ample, &class)?)
        }
        Commands::PairCheck { form, ample, l, m } => {
            let form = inputs::read_form(&form)?;
            let ample = inputs::parse_class(&ample)?;
            let l = inputs::parse_class(&l)?;
            let m = inputs::parse_class(&m)?;
            render(&envelope::pair_check_doc(form, ample, l, m)?)
        }
        Commands::Segment {
            form,
            ample,
            eta,
            xi,
        } => {
            let form = inputs::read_form(&form)?;
            let ample = inputs::parse_class(&ample)?;
            let eta = inputs::parse_class(&eta)?;
            let xi = inputs::parse_class(&xi)?;
            render(&envelope::segment_doc(form, ample, eta, xi)?)
        }
        Commands::Threshold {
            form,
            ample,
            eta,
            xi,
        } => {
            let form = inputs::read_form(&form)?;
            let ample = inputs::parse_class(&ample)?;
            let eta = inputs::parse_class(&eta)?;
            let xi = inputs::parse_class(&xi)?;
            render(&envelope::threshold_doc(form, ample, &eta, &xi)?)
        }
        Commands::Hhat {
            form,
            ample,
            class,
            q,
        } => {
            let form = inputs::read_form(&form)?;
            let ample = inputs::parse_class(&ample)?;
            let class = inputs::parse_class(&class)?;
            render(&envelope::hhat_doc(form, ample, class, q)?)
        }
        Commands::Qample {
            form,
            ample,
            class,
            q,
        } => {
            let form = inputs::read_form(&form)?;
            let ample = inputs::parse_class(&ample)?;
            let class = inputs::parse_class(&class)?;
            render(&envelope::qample_doc(form, ample, class, q)?)
        }
        Commands::SurjBound { form, ample, l, m } => {
            let form = inputs::read_form(&form)?;
            let ample = inputs::parse_class(&ample)?;
            let l = inputs::parse_class(&l)?;
            let m = inputs::parse_class(&m)?;
            render(&envelope::surj_bound_doc(form, ample, l, m)?)
        }
        Commands::ExeDemo {
            radius,
            m_max,
            n_max,
        } => render(&envelope::exe_demo_doc(radius, m_max, n_max)?),
        Commands::RmSearch {
            field,
            i_set,
            j_set,
            max_iters,
        } => {
            let field = inputs::parse_field(&field)?;
            let i_set = inputs::parse_subset(&i_set)?;
            let j_set = inputs::parse_subset(&j_set)?;
            let cap = inputs::effective_cap(max_iters)?;
            render(&envelope::rm_search_doc(
                field.defining_poly().clone(),
                &i_set,
                &j_set,
                cap,
            )?)
        }
        Commands::RmReport {
            field,
            p,
            q,
            z,
            max_iters,
        } => {
            let field = inputs::parse_field(&field)?;
            let z = match z {
                Some(spec) => inputs::parse_base_points(&spec)?,
                None => default_base_points(&field),
            };
            let cap = inputs::effective_cap(max_iters)?;
            render(&envelope::rm_report_doc(
                field.defining_poly().clone(),
                z,
                p,
                q,
                cap,
            )?)
        }
        Commands::Verify { document } => {
            let text = inputs::read_text(&document)?;
            render(&envelope::verify_document(&text)?)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli.command) {
        Ok(json) => {
            let text = format!("{json}\n");
            match output {
                Some(path) => {
                    if let Err(e) = fs::write(&path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        std::process::exit(2);
                    }
                }
                None => print!("{text}"),
            }
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            std::process::exit(failure.code());
        }
    }
}
