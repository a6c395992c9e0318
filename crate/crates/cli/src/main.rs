//! `lenset` — exact factorization-length arithmetic in numerical monoids.
//!
//! Every invocation prints one self-describing envelope (`--format
//! human|json|tsv` re-render the same tree) and exits 0 on success, 1 on
//! a domain error (reported inside the envelope), 2 on a usage error
//! (reported by the argument parser on stderr). The one exception is
//! `enumerate`, which streams atom sets one per line.

mod output;
mod specs;

use clap::{ArgGroup, CommandFactory, Parser, Subcommand, ValueEnum};
use lenset_core::families::{a2_family, enumerate_monoids, h_md, interval_monoid};
use lenset_core::intervals::IntervalSet;
use lenset_core::invariants::{default_delta_bound, delta_up_to, sumset};
use lenset_core::lengths::{factorizations_with_guard, length_set, DEFAULT_FACTORIZATION_GUARD};
use lenset_core::verify::{
    a345_default_max_atom, intersect_systems, verify_a1, verify_a2, verify_a345,
    verify_all, verify_delta_family, DEFAULT_K_MAX, DEFAULT_T2_MAX_ATOM,
};
use lenset_core::{Error, NumericalMonoid, Result};
use output::{Envelope, Format};
use serde_json::{json, Value};
use specs::{parse_generator_list, parse_monoid_list, GeneratorList, MonoidList};
use std::collections::BTreeMap;
use std::io::Write;

#[derive(Parser)]
#[command(name = "lenset", version, about = "Exact length-set arithmetic in numerical monoids")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Worker threads for parameter sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical data of a monoid: atoms, multiplicity, Frobenius number, gaps.
    Info {
        /// Generators, e.g. "3,4,5" or "3..7" (ranges are inclusive).
        #[arg(long, value_parser = parse_generator_list)]
        monoid: GeneratorList,
    },
    /// Set of lengths of one element, with its internal distances.
    Lengths {
        #[arg(long, value_parser = parse_generator_list)]
        monoid: GeneratorList,
        #[arg(long)]
        element: u64,
    },
    /// Every factorization of one element over the atoms.
    Factorize {
        #[arg(long, value_parser = parse_generator_list)]
        monoid: GeneratorList,
        #[arg(long)]
        element: u64,
        /// Refuse to enumerate more factorizations than this.
        #[arg(long)]
        guard: Option<u64>,
    },
    /// Distances occurring in sets of lengths of elements up to a bound.
    Delta {
        #[arg(long, value_parser = parse_generator_list)]
        monoid: GeneratorList,
        /// Largest element scanned. Default: 4 * largest_atom^2, or
        /// LENSET_DEFAULT_BOUND from the environment when set.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// k-fold sumset of a plain integer set, reported as maximal runs.
    Sumset {
        /// The set itself (no monoid canonicalization is applied).
        #[arg(long, value_parser = parse_generator_list)]
        set: GeneratorList,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Construct a named family member and report its canonical data.
    #[command(group = ArgGroup::new("which").required(true))]
    Family {
        /// Arithmetic family: m atoms i*d+1 for i in [m-1, 2m-2].
        #[arg(long, num_args = 2, value_names = ["M", "D"], group = "which")]
        hmd: Option<Vec<u64>>,
        /// Interval family: atoms m..=2m-1.
        #[arg(long, value_name = "M", group = "which",
              value_parser = clap::value_parser!(u64).range(2..))]
        interval: Option<u64>,
        /// Notched family: {m} u [m+3, 2m-1] u {2m+1, 2m+2}, m >= 6.
        #[arg(long, value_name = "M", group = "which")]
        a2: Option<u64>,
    },
    /// Stream every monoid with a fixed number of atoms, one per line.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        atoms: u64,
        #[arg(long)]
        max_atom: u64,
    },
    /// Run one verification claim and print its report.
    Verify {
        #[arg(long, value_enum)]
        claim: Claim,
        /// Family size (A1: default 2, A2: default 6).
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        m: Option<u64>,
        /// Largest singleton length checked (A1, THEOREM11; default 10).
        #[arg(long, alias = "kmax", value_parser = clap::value_parser!(u64).range(4..))]
        k_max: Option<u64>,
        /// Atom cap for the exhaustive sweeps (A3/A4/A5).
        #[arg(long)]
        max_atom: Option<u64>,
        /// DELTA grid corner (default 2).
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        m_min: Option<u64>,
        /// DELTA grid corner (default 6).
        #[arg(long)]
        m_max: Option<u64>,
        /// DELTA grid corner (default 1).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d_min: Option<u64>,
        /// DELTA grid corner (default 4).
        #[arg(long)]
        d_max: Option<u64>,
        /// Scan bound where one applies (DELTA, THEOREM11; default: auto).
        #[arg(long)]
        bound: Option<u64>,
        /// Atom cap for the two-atom exhaustion (THEOREM11; default 25).
        #[arg(long)]
        t2_max_atom: Option<u64>,
    },
    /// Exact intersection of systems of sets of lengths.
    Intersect {
        /// Semicolon-separated monoids, e.g. "3,4,5;5,7,9".
        #[arg(long, value_parser = parse_monoid_list)]
        monoids: MonoidList,
        /// Largest length kept (default 10).
        #[arg(long = "kmax", alias = "k-max", default_value_t = DEFAULT_K_MAX)]
        k_max: u64,
        /// Scan bound (default: k_max * largest atom across the monoids).
        #[arg(long)]
        bound: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Claim {
    #[value(name = "A1")]
    A1,
    #[value(name = "A2")]
    A2,
    #[value(name = "A3")]
    A3,
    #[value(name = "A4")]
    A4,
    #[value(name = "A5")]
    A5,
    #[value(name = "DELTA")]
    Delta,
    #[value(name = "THEOREM11")]
    Theorem11,
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Best-effort: a second call in one process is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let code = match cli.command {
        // Enumeration streams: one atom set per line, no envelope, so
        // arbitrarily large sweeps never accumulate in memory.
        Command::Enumerate { atoms, max_atom } => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for h in enumerate_monoids(atoms as usize, max_atom) {
                let line = match cli.format {
                    Format::Json => serde_json::to_string(h.atoms()).expect("atoms serialize"),
                    Format::Tsv => h
                        .atoms()
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join("\t"),
                    Format::Human => h.to_string(),
                };
                writeln!(out, "{line}").expect("stdout is writable");
            }
            0
        }
        command => {
            let envelope = run(command);
            print!("{}", envelope.render(cli.format));
            if envelope.is_err() {
                1
            } else {
                0
            }
        }
    };
    std::process::exit(code);
}

fn usage_error(msg: &str) -> ! {
    Cli::command().error(clap::error::ErrorKind::InvalidValue, msg).exit()
}

fn finish(
    command: &'static str,
    parameters: BTreeMap<String, String>,
    outcome: Result<(Value, Option<u64>)>,
) -> Envelope {
    match outcome {
        Ok((result, bound_used)) => Envelope::ok(command, parameters, result, bound_used),
        Err(e) => Envelope::err(command, parameters, &e),
    }
}

fn params(entries: &[(&str, String)]) -> BTreeMap<String, String> {
    entries.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// How many gaps a monoid has, from the single largest member of each
/// residue class: the class of w holds exactly floor(w / multiplicity)
/// gaps. Cheap even when listing the gaps themselves would not be.
fn genus(h: &NumericalMonoid) -> u64 {
    h.apery_set().iter().map(|w| w / h.multiplicity()).sum()
}

/// Sets larger than this are reported as interval runs instead of a flat
/// list (gap lists larger than it are summarized by `genus` alone).
const COALESCE_CAP: u64 = 4096;

/// Length sets beyond this many values switch to the interval encoding.
const LENGTHS_LIST_CAP: u64 = 64;

fn monoid_payload(h: &NumericalMonoid) -> Value {
    let genus = genus(h);
    let mut v = json!({
        "atoms": h.atoms(),
        "embedding_dim": h.embedding_dim(),
        "multiplicity": h.multiplicity(),
        "frobenius": h.frobenius(),
        "genus": genus,
    });
    if genus <= COALESCE_CAP {
        v["gaps"] = json!(h.gaps());
    }
    v
}

fn interval_rows(s: &IntervalSet) -> Vec<[u64; 2]> {
    s.runs().iter().map(|&(lo, hi)| [lo, hi]).collect()
}

fn run(command: Command) -> Envelope {
    match command {
        Command::Info { monoid } => {
            let p = params(&[("monoid", monoid.echo())]);
            let work = || {
                let h = NumericalMonoid::from_generators(&monoid.0)?;
                Ok((monoid_payload(&h), None))
            };
            finish("info", p, work())
        }

        Command::Lengths { monoid, element } => {
            let p = params(&[("monoid", monoid.echo()), ("element", element.to_string())]);
            let work = || {
                let h = NumericalMonoid::from_generators(&monoid.0)?;
                let l = length_set(&h, element)?;
                let card = l.cardinality();
                let v = if card > LENGTHS_LIST_CAP {
                    let runs = IntervalSet::from_values(&l.to_vec());
                    json!({
                        "cardinality": card,
                        "distances": l.distances(),
                        "element": element,
                        "encoding": "intervals",
                        "lengths": interval_rows(&runs),
                    })
                } else {
                    json!({
                        "cardinality": card,
                        "distances": l.distances(),
                        "element": element,
                        "encoding": "list",
                        "lengths": l.to_vec(),
                    })
                };
                Ok((v, None))
            };
            finish("lengths", p, work())
        }

        Command::Factorize { monoid, element, guard } => {
            let mut p = params(&[("monoid", monoid.echo()), ("element", element.to_string())]);
            if let Some(g) = guard {
                p.insert("guard".to_string(), g.to_string());
            }
            let work = || {
                let h = NumericalMonoid::from_generators(&monoid.0)?;
                let limit = guard.unwrap_or(DEFAULT_FACTORIZATION_GUARD);
                let fs = factorizations_with_guard(&h, element, limit)?;
                let exps: Vec<&[u64]> = fs.iter().map(|f| f.exponents()).collect();
                let v = json!({
                    "atoms": h.atoms(),
                    "count": fs.len(),
                    "element": element,
                    "factorizations": exps,
                });
                Ok((v, None))
            };
            finish("factorize", p, work())
        }

        Command::Delta { monoid, bound } => {
            let p = params(&[
                ("monoid", monoid.echo()),
                ("bound", bound.map_or("auto".to_string(), |n| n.to_string())),
            ]);
            let work = || {
                let h = NumericalMonoid::from_generators(&monoid.0)?;
                let n = match bound {
                    Some(n) => n,
                    None => match std::env::var("LENSET_DEFAULT_BOUND")
                        .ok()
                        .and_then(|s| s.parse().ok())
                    {
                        Some(n) => n,
                        None => default_delta_bound(&h)?,
                    },
                };
                let d = delta_up_to(&h, n)?;
                Ok((json!({ "bound_used": n, "distances": d.distances }), Some(n)))
            };
            finish("delta", p, work())
        }

        Command::Sumset { set, k } => {
            let p = params(&[("set", set.echo()), ("k", k.to_string())]);
            let work = || {
                let mut values = set.0.clone();
                values.sort_unstable();
                values.dedup();
                let s = sumset(&values, k)?;
                let v = json!({
                    "cardinality": s.cardinality(),
                    "encoding": "intervals",
                    "intervals": interval_rows(&s),
                    "k": k,
                    "set": values,
                });
                Ok((v, None))
            };
            finish("sumset", p, work())
        }

        Command::Family { hmd, interval, a2 } => {
            let (p, work): (_, Box<dyn FnOnce() -> Result<NumericalMonoid>>) =
                match (hmd, interval, a2) {
                    (Some(md), None, None) => {
                        let (m, d) = (md[0], md[1]);
                        if m < 2 || d < 1 {
                            usage_error("--hmd needs M >= 2 and D >= 1");
                        }
                        let p = params(&[
                            ("family", "hmd".to_string()),
                            ("m", m.to_string()),
                            ("d", d.to_string()),
                        ]);
                        (p, Box::new(move || h_md(m, d)))
                    }
                    (None, Some(m), None) => {
                        let p = params(&[("family", "interval".to_string()), ("m", m.to_string())]);
                        (p, Box::new(move || interval_monoid(m)))
                    }
                    (None, None, Some(m)) => {
                        let p = params(&[("family", "a2".to_string()), ("m", m.to_string())]);
                        (p, Box::new(move || a2_family(m)))
                    }
                    _ => unreachable!("the argument group admits exactly one family"),
                };
            finish("family", p, work().map(|h| (monoid_payload(&h), None)))
        }

        Command::Enumerate { .. } => unreachable!("enumerate streams from main"),

        Command::Verify {
            claim,
            m,
            k_max,
            max_atom,
            m_min,
            m_max,
            d_min,
            d_max,
            bound,
            t2_max_atom,
        } => run_verify(VerifyArgs {
            claim,
            m,
            k_max,
            max_atom,
            m_min,
            m_max,
            d_min,
            d_max,
            bound,
            t2_max_atom,
        }),

        Command::Intersect { monoids, k_max, bound } => {
            let p = params(&[
                ("monoids", monoids.echo()),
                ("k_max", k_max.to_string()),
                ("bound", bound.map_or("auto".to_string(), |n| n.to_string())),
            ]);
            let work = || {
                let hs: Vec<NumericalMonoid> = monoids
                    .0
                    .iter()
                    .map(|g| NumericalMonoid::from_generators(&g.0))
                    .collect::<Result<_>>()?;
                let widest = hs.iter().map(|h| h.largest_atom()).max().unwrap_or(0);
                let n = match bound {
                    Some(n) => n,
                    None => k_max
                        .checked_mul(widest)
                        .ok_or(Error::ArithmeticOverflow("intersection scan bound"))?,
                };
                let got = intersect_systems(&hs, n, k_max)?;
                let sets: Vec<Vec<u64>> = got.iter().map(|l| l.to_vec()).collect();
                let atoms: Vec<Vec<u64>> = hs.iter().map(|h| h.atoms().to_vec()).collect();
                let v = json!({
                    "count": sets.len(),
                    "k_max": k_max,
                    "monoids": atoms,
                    "sets": sets,
                });
                Ok((v, Some(n)))
            };
            finish("intersect", p, work())
        }
    }
}

struct VerifyArgs {
    claim: Claim,
    m: Option<u64>,
    k_max: Option<u64>,
    max_atom: Option<u64>,
    m_min: Option<u64>,
    m_max: Option<u64>,
    d_min: Option<u64>,
    d_max: Option<u64>,
    bound: Option<u64>,
    t2_max_atom: Option<u64>,
}

fn run_verify(args: VerifyArgs) -> Envelope {
    let to_payload = |r: lenset_core::VerificationReport| {
        (serde_json::to_value(&r).expect("reports serialize"), None)
    };
    match args.claim {
        Claim::A1 => {
            let m = args.m.unwrap_or(2);
            let k_max = args.k_max.unwrap_or(DEFAULT_K_MAX);
            let p = params(&[
                ("claim", "A1".to_string()),
                ("m", m.to_string()),
                ("k_max", k_max.to_string()),
            ]);
            finish("verify", p, verify_a1(m, k_max).map(to_payload))
        }
        Claim::A2 => {
            let m = args.m.unwrap_or(6);
            let p = params(&[("claim", "A2".to_string()), ("m", m.to_string())]);
            finish("verify", p, verify_a2(m).map(to_payload))
        }
        Claim::A3 | Claim::A4 | Claim::A5 => {
            let (name, t) = match args.claim {
                Claim::A3 => ("A3", 3),
                Claim::A4 => ("A4", 4),
                _ => ("A5", 5),
            };
            let cap = args.max_atom.unwrap_or_else(|| a345_default_max_atom(t));
            let p = params(&[
                ("claim", name.to_string()),
                ("max_atom", cap.to_string()),
                ("t", t.to_string()),
            ]);
            finish("verify", p, Ok(to_payload(verify_a345(t, cap))))
        }
        Claim::Delta => {
            let m_min = args.m_min.unwrap_or(2);
            let m_max = args.m_max.unwrap_or(6);
            let d_min = args.d_min.unwrap_or(1);
            let d_max = args.d_max.unwrap_or(4);
            if m_min > m_max || d_min > d_max {
                usage_error("DELTA needs --m-min <= --m-max and --d-min <= --d-max");
            }
            let p = params(&[
                ("claim", "DELTA".to_string()),
                ("m_min", m_min.to_string()),
                ("m_max", m_max.to_string()),
                ("d_min", d_min.to_string()),
                ("d_max", d_max.to_string()),
                ("bound", args.bound.map_or("auto".to_string(), |n| n.to_string())),
            ]);
            finish(
                "verify",
                p,
                verify_delta_family(m_min..=m_max, d_min..=d_max, args.bound).map(to_payload),
            )
        }
        Claim::Theorem11 => {
            let k_max = args.k_max.unwrap_or(DEFAULT_K_MAX);
            let t2 = args.t2_max_atom.unwrap_or(DEFAULT_T2_MAX_ATOM);
            let p = params(&[
                ("claim", "THEOREM11".to_string()),
                ("k_max", k_max.to_string()),
                ("t2_max_atom", t2.to_string()),
                ("bound", args.bound.map_or("auto".to_string(), |n| n.to_string())),
            ]);
            finish("verify", p, verify_all(k_max, t2, args.bound).map(to_payload))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_matches_explicit_gap_lists() {
        for gens in [&[3u64, 4, 5][..], &[2, 3], &[5, 7, 9], &[1]] {
            let h = NumericalMonoid::from_generators(gens).unwrap();
            assert_eq!(genus(&h), h.gaps().len() as u64, "{h}");
        }
    }

    #[test]
    fn monoid_payload_carries_canonical_data() {
        let h = NumericalMonoid::from_generators(&[3, 4, 5, 6, 7]).unwrap();
        let v = monoid_payload(&h);
        assert_eq!(v["atoms"], json!([3, 4, 5]));
        assert_eq!(v["embedding_dim"], json!(3));
        assert_eq!(v["frobenius"], json!(2));
        assert_eq!(v["gaps"], json!([1, 2]));
        assert_eq!(v["genus"], json!(2));
    }

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
