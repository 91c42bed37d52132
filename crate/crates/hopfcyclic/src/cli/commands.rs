//! Subcommand dispatch: `check`, `build`, `cohomology`, `corpus`.
//!
//! Targets are either presentation files or builtin names; reports are
//! assembled through [`crate::cli::report`] and rendered by the binary.

use crate::bicomplex::Mode;
use crate::cli::parser::{parse_file, Declaration, Object, ParseError, PresentationFile};
use crate::cli::report::{sparse_vector, Check, CohomologyTable, Item, Report};
use crate::cyclic::{hc_cohomology, hp_cohomology, standard_complex, CyclicError};
use crate::hopf::examples::{
    cyclic_characters, functions_on_cyclic, group_algebra_cyclic, h4_characters, sweedler_h4,
};
use crate::hopf::{
    check_hopf_axioms, check_mpi, truncated_uea, AxiomReport, Character, GroupLike,
    HopfPresentation,
};
use crate::liecyclic::{aff1, check_jacobi};
use crate::matchedpair::{
    build_bicrossed, canonical_mpi, check_lie_hopf, check_matched_pair,
};
use crate::exactlin::FreeSpace;
use crate::sayd::{
    check_ayd, check_comodule, check_module, check_stable, LeftComodule, ModuleComodule,
    RightModule,
};
use crate::Mat;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "hopfcyc",
    about = "Exact-arithmetic checks and cohomology for Hopf-cyclic structures",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    /// Simplicial/cyclic window size for identity checks and cohomology.
    #[arg(long, global = true, default_value_t = 3)]
    pub window: usize,
    /// Truncation degree for enveloping algebras and bicrossed products.
    #[arg(long, global = true, default_value_t = 3)]
    pub truncate: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Print only the final verdict line.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Verify the declared axioms of a file or a builtin object.
    ///
    /// Forms: `check FILE [NAME...]`, `check hopf BUILTIN`,
    /// `check mpi BUILTIN CHARACTER GROUPLIKE`.
    Check { targets: Vec<String> },
    /// Construct derived objects and report dimensions and verdicts.
    Build { targets: Vec<String> },
    /// Cyclic (`hc`) or periodic (`hp`) cohomology of a Hopf algebra
    /// with SAYD coefficients.
    Cohomology {
        /// `hc` or `hp`.
        theory: String,
        /// Presentation file; builtins are used when omitted.
        file: Option<PathBuf>,
        /// Hopf algebra: a declaration name or a builtin.
        #[arg(long)]
        hopf: String,
        /// Coefficients: a comodule declaration or builtin `K` (trivial).
        #[arg(long)]
        coeff: Option<String>,
    },
    /// Check every presentation file in the corpus directory.
    Corpus {
        /// Overrides the HOPFCYC_CORPUS environment variable.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

/// Environment variable overriding the default corpus directory.
pub const CORPUS_ENV: &str = "HOPFCYC_CORPUS";

/// A run outcome: the report plus the process exit code
/// (0 all-pass, 1 check failure, 2 input error).
pub struct Outcome {
    pub report: Option<Report>,
    pub error: Option<String>,
    pub exit: i32,
}

impl Outcome {
    fn input_error(msg: impl Into<String>) -> Self {
        Outcome {
            report: None,
            error: Some(msg.into()),
            exit: 2,
        }
    }

    fn from_report(report: Report) -> Self {
        let exit = if report.ok { 0 } else { 1 };
        Outcome {
            report: Some(report),
            error: None,
            exit,
        }
    }
}

fn builtin_hopf(name: &str, truncate: usize) -> Option<HopfPresentation> {
    match name {
        "T" | "trivial" => Some(group_algebra_cyclic(1)),
        "kZ2" => Some(group_algebra_cyclic(2)),
        "kZ3" => Some(group_algebra_cyclic(3)),
        "FZ2" => Some(functions_on_cyclic(2)),
        "H4" => Some(sweedler_h4()),
        "Uaff1" => Some(truncated_uea(&aff1(), truncate)),
        _ => None,
    }
}

/// The one-dimensional trivial SAYD coefficients `k` over `h`.
fn trivial_coefficients(h: &HopfPresentation) -> ModuleComodule {
    let space = FreeSpace::from_strs(&["v"]);
    ModuleComodule {
        module: RightModule::trivial(h, space.clone()),
        comodule: LeftComodule::trivial(h, space),
    }
}

fn builtin_character(name: &str, hopf_name: &str, h: &HopfPresentation) -> Option<Character> {
    match name {
        "eps" => Some(Character {
            covector: h.counit.clone(),
        }),
        "sgn" => match hopf_name {
            "H4" => Some(h4_characters().remove(1)),
            "kZ2" => Some(cyclic_characters(2).remove(1)),
            _ => None,
        },
        _ => None,
    }
}

fn builtin_group_like(name: &str, h: &HopfPresentation) -> Option<GroupLike> {
    let i = h.space.labels().iter().position(|l| l == name)?;
    Some(GroupLike {
        element: Mat::basis_vector(h.dim(), i),
    })
}

fn axiom_checks(report: &AxiomReport) -> Vec<Check> {
    report
        .items
        .iter()
        .map(|(name, ok)| {
            let mut c = Check::new(name.clone(), *ok);
            if !ok {
                c.witness = Some(format!("the `{name}` identity fails on the window"));
            }
            c
        })
        .collect()
}

fn hopf_named<'a>(
    file: &'a PresentationFile,
    name: &str,
) -> Result<&'a HopfPresentation, String> {
    match file.find(name).map(|d| &d.object) {
        Some(Object::Hopf(h)) => Ok(h),
        Some(Object::Group { hopf, .. }) => Ok(hopf),
        Some(_) => Err(format!("`{name}` is not a hopf algebra")),
        None => Err(format!("unresolved reference `{name}`")),
    }
}

/// All checks belonging to one declaration.
fn declaration_checks(decl: &Declaration, file: &PresentationFile, truncate: usize) -> Item {
    let mut item = Item::new(&decl.name, decl.object.kind());
    match &decl.object {
        Object::Lie(g) => {
            item.dim = Some(g.dim());
            item.checks.push(Check::new("antisymmetry", g.is_antisymmetric()));
            item.checks.push(Check::new("jacobi", check_jacobi(g)));
        }
        Object::Hopf(h) | Object::Group { hopf: h, .. } => {
            item.dim = Some(h.dim());
            match check_hopf_axioms(h) {
                Ok(r) => item.checks = axiom_checks(&r),
                Err(e) => item.error = Some(e.to_string()),
            }
        }
        Object::Module { over, module } => match hopf_named(file, over) {
            Ok(h) => {
                item.dim = Some(module.dim());
                item.checks.push(Check::new("module", check_module(h, module)));
            }
            Err(e) => item.error = Some(e),
        },
        Object::Comodule {
            over,
            datum,
            has_action,
        } => match hopf_named(file, over) {
            Ok(h) => {
                item.dim = Some(datum.dim());
                item.checks
                    .push(Check::new("comodule", check_comodule(h, &datum.comodule)));
                if *has_action {
                    item.checks
                        .push(Check::new("module", check_module(h, &datum.module)));
                    item.checks
                        .push(Check::new("anti-yetter-drinfeld", check_ayd(h, datum)));
                    item.checks.push(Check::new("stable", check_stable(h, datum)));
                }
            }
            Err(e) => item.error = Some(e),
        },
        Object::Matched(d) => {
            item.dim = Some(d.u.dim() * d.f.dim());
            item.checks = axiom_checks(&check_matched_pair(d));
            let bic = build_bicrossed(d);
            let mut c = Check::new("bicrossed", bic.is_ok());
            if let Err(e) = bic {
                c.witness = Some(e.to_string());
            }
            item.checks.push(c);
        }
        Object::LieHopf(l) => {
            item.dim = Some(l.g.dim());
            item.checks = axiom_checks(&check_lie_hopf(l));
            let mut c = match canonical_mpi(l, truncate) {
                Ok((_, pair)) => Check::new("canonical-mpi", pair.verified),
                Err(e) => {
                    let mut c = Check::new("canonical-mpi", false);
                    c.witness = Some(e.to_string());
                    c
                }
            };
            if !c.pass && c.witness.is_none() {
                c.witness = Some("the modular pair does not verify".into());
            }
            item.checks.push(c);
        }
    }
    item
}

/// Mark expected failures; an expectation naming a missing check is an
/// error on that item.
fn apply_expectations(items: &mut [Item], expectations: &[(String, String)]) {
    for (subject, check_name) in expectations {
        let Some(item) = items.iter_mut().find(|i| i.subject == *subject) else {
            continue; // the parser already validated declaration names
        };
        match item.checks.iter_mut().find(|c| c.name == *check_name) {
            Some(c) => c.expected_failure = true,
            None => {
                item.error = Some(format!(
                    "expectation names unknown check `{check_name}`"
                ));
            }
        }
    }
}

fn check_file(
    path: &Path,
    names: &[String],
    truncate: usize,
    report: &mut Report,
) -> Result<(), ParseError> {
    let file = parse_file(path)?;
    let selected: Vec<&Declaration> = if names.is_empty() {
        file.declarations.iter().collect()
    } else {
        let mut out = Vec::new();
        for n in names {
            match file.find(n) {
                Some(d) => out.push(d),
                None => {
                    return Err(ParseError {
                        line: 0,
                        col: 0,
                        msg: format!("unresolved reference `{n}`"),
                    })
                }
            }
        }
        out
    };
    let mut items: Vec<Item> = selected
        .iter()
        .map(|d| declaration_checks(d, &file, truncate))
        .collect();
    apply_expectations(&mut items, &file.expect_failures);
    for i in items {
        report.push(i);
    }
    Ok(())
}

fn run_check(targets: &[String], truncate: usize, command: String) -> Outcome {
    let mut report = Report::new(command);
    match targets.first().map(String::as_str) {
        None => Outcome::input_error("check needs a file or a builtin target"),
        Some("hopf") => {
            let Some(name) = targets.get(1) else {
                return Outcome::input_error("usage: check hopf NAME");
            };
            let Some(h) = builtin_hopf(name, truncate) else {
                return Outcome::input_error(format!("unknown builtin hopf `{name}`"));
            };
            let mut item = Item::new(name, "hopf");
            item.dim = Some(h.dim());
            match check_hopf_axioms(&h) {
                Ok(r) => item.checks = axiom_checks(&r),
                Err(e) => item.error = Some(e.to_string()),
            }
            report.push(item);
            Outcome::from_report(report)
        }
        Some("mpi") => {
            let (Some(hname), Some(cname), Some(gname)) =
                (targets.get(1), targets.get(2), targets.get(3))
            else {
                return Outcome::input_error("usage: check mpi HOPF CHARACTER GROUPLIKE");
            };
            let Some(h) = builtin_hopf(hname, truncate) else {
                return Outcome::input_error(format!("unknown builtin hopf `{hname}`"));
            };
            let Some(delta) = builtin_character(cname, hname, &h) else {
                return Outcome::input_error(format!("unknown character `{cname}`"));
            };
            let Some(sigma) = builtin_group_like(gname, &h) else {
                return Outcome::input_error(format!("unknown group-like `{gname}`"));
            };
            let mut item = Item::new(format!("({cname}, {gname}) on {hname}"), "mpi");
            let mut c = match check_mpi(&h, &delta, &sigma) {
                Ok(pair) => Check::new("modular-pair", pair.verified),
                Err(e) => {
                    let mut c = Check::new("modular-pair", false);
                    c.witness = Some(e.to_string());
                    c
                }
            };
            if !c.pass && c.witness.is_none() {
                c.witness = Some("the twisted antipode does not square to Ad".into());
            }
            item.checks.push(c);
            report.push(item);
            Outcome::from_report(report)
        }
        Some(path) => {
            let names = &targets[1..];
            match check_file(Path::new(path), names, truncate, &mut report) {
                Ok(()) => Outcome::from_report(report),
                Err(e) => Outcome::input_error(format!("{path}: {e}")),
            }
        }
    }
}

/// Build the derived object of a declaration and report its dimension.
fn build_item(decl: &Declaration, truncate: usize) -> Item {
    let mut item = Item::new(&decl.name, decl.object.kind());
    match &decl.object {
        Object::Lie(g) => {
            let uea = truncated_uea(g, truncate);
            item.kind = "uea".into();
            item.dim = Some(uea.dim());
            match check_hopf_axioms(&uea) {
                Ok(r) => item.checks = axiom_checks(&r),
                Err(e) => item.error = Some(e.to_string()),
            }
        }
        Object::Hopf(h) | Object::Group { hopf: h, .. } => {
            item.dim = Some(h.dim());
            match check_hopf_axioms(h) {
                Ok(r) => item.checks.push(Check::new("hopf-axioms", r.all_pass())),
                Err(e) => item.error = Some(e.to_string()),
            }
        }
        Object::Module { module, .. } => {
            item.dim = Some(module.dim());
        }
        Object::Comodule { datum, .. } => {
            item.dim = Some(datum.dim());
        }
        Object::Matched(d) => match build_bicrossed(d) {
            Ok(h) => {
                item.kind = "bicrossed".into();
                item.dim = Some(h.dim());
                item.checks.push(Check::new("hopf-axioms", true));
            }
            Err(e) => item.error = Some(e.to_string()),
        },
        Object::LieHopf(l) => match canonical_mpi(l, truncate) {
            Ok((h, pair)) => {
                item.kind = "bicrossed".into();
                item.dim = Some(h.dim());
                item.checks.push(Check::new("canonical-mpi", pair.verified));
            }
            Err(e) => item.error = Some(e.to_string()),
        },
    }
    item
}

fn run_build(targets: &[String], truncate: usize, command: String) -> Outcome {
    let mut report = Report::new(command);
    match targets.first().map(String::as_str) {
        None => Outcome::input_error("build needs a file or a builtin target"),
        Some("hopf") => {
            let Some(name) = targets.get(1) else {
                return Outcome::input_error("usage: build hopf NAME");
            };
            let Some(h) = builtin_hopf(name, truncate) else {
                return Outcome::input_error(format!("unknown builtin hopf `{name}`"));
            };
            let mut item = Item::new(name, "hopf");
            item.dim = Some(h.dim());
            report.push(item);
            Outcome::from_report(report)
        }
        Some(path) => {
            let file = match parse_file(Path::new(path)) {
                Ok(f) => f,
                Err(e) => return Outcome::input_error(format!("{path}: {e}")),
            };
            let names = &targets[1..];
            let selected: Vec<&Declaration> = if names.is_empty() {
                file.declarations.iter().collect()
            } else {
                let mut out = Vec::new();
                for n in names {
                    match file.find(n) {
                        Some(d) => out.push(d),
                        None => {
                            return Outcome::input_error(format!(
                                "{path}: unresolved reference `{n}`"
                            ))
                        }
                    }
                }
                out
            };
            for d in selected {
                report.push(build_item(d, truncate));
            }
            Outcome::from_report(report)
        }
    }
}

fn cohomology_table(
    h: &HopfPresentation,
    v: &ModuleComodule,
    theory: &str,
    window: usize,
) -> Result<CohomologyTable, CyclicError> {
    let x = standard_complex(h, v, window)?;
    let rep = match theory {
        "hc" => hc_cohomology(&x)?,
        _ => hp_cohomology(&x)?,
    };
    debug_assert!(matches!(
        (theory, &rep.mode),
        ("hc", Mode::Cyclic) | ("hp", Mode::Periodic)
    ));
    Ok(CohomologyTable {
        theory: theory.to_string(),
        window,
        dims: rep.dims.clone(),
        representatives: rep
            .representatives
            .iter()
            .map(|per_deg| per_deg.iter().map(sparse_vector).collect())
            .collect(),
        stabilization: rep.stabilization,
    })
}

fn run_cohomology(
    theory: &str,
    file: Option<&Path>,
    hopf: &str,
    coeff: Option<&str>,
    window: usize,
    truncate: usize,
    command: String,
) -> Outcome {
    if theory != "hc" && theory != "hp" {
        return Outcome::input_error(format!("unknown theory `{theory}`; use hc or hp"));
    }
    let parsed;
    let (h, v): (HopfPresentation, ModuleComodule) = match file {
        Some(path) => {
            parsed = match parse_file(path) {
                Ok(f) => f,
                Err(e) => {
                    return Outcome::input_error(format!("{}: {e}", path.display()))
                }
            };
            let h = match hopf_named(&parsed, hopf) {
                Ok(h) => h.clone(),
                Err(e) => return Outcome::input_error(e),
            };
            let v = match coeff {
                None | Some("K") => trivial_coefficients(&h),
                Some(name) => match parsed.find(name).map(|d| &d.object) {
                    Some(Object::Comodule { datum, over, .. }) => {
                        if over != hopf {
                            return Outcome::input_error(format!(
                                "`{name}` is a comodule over `{over}`, not `{hopf}`"
                            ));
                        }
                        datum.clone()
                    }
                    Some(_) => {
                        return Outcome::input_error(format!("`{name}` is not a comodule"))
                    }
                    None => {
                        return Outcome::input_error(format!("unresolved reference `{name}`"))
                    }
                },
            };
            (h, v)
        }
        None => {
            let Some(h) = builtin_hopf(hopf, truncate) else {
                return Outcome::input_error(format!("unknown builtin hopf `{hopf}`"));
            };
            let v = match coeff {
                None | Some("K") => trivial_coefficients(&h),
                Some(other) => {
                    return Outcome::input_error(format!("unknown builtin coefficients `{other}`"))
                }
            };
            (h, v)
        }
    };
    let mut report = Report::new(command);
    let mut item = Item::new(format!("{theory} of {hopf}"), "cohomology");
    item.dim = Some(h.dim());
    match cohomology_table(&h, &v, theory, window) {
        Ok(t) => item.cohomology = Some(t),
        Err(CyclicError::NotSayd) => {
            let mut c = Check::new("sayd-coefficients", false);
            c.witness = Some(CyclicError::NotSayd.to_string());
            item.checks.push(c);
        }
        Err(e) => return Outcome::input_error(e.to_string()),
    }
    report.push(item);
    Outcome::from_report(report)
}

fn collect_corpus_files(dir: &Path, out: &mut Vec<PathBuf>) -> std::io::Result<()> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()?;
    entries.sort();
    for p in entries {
        if p.is_dir() {
            collect_corpus_files(&p, out)?;
        } else if p.extension().and_then(|e| e.to_str()) == Some("hcy") {
            out.push(p);
        }
    }
    Ok(())
}

fn is_negative_control(path: &Path) -> bool {
    path.components()
        .any(|c| c.as_os_str() == "negative-controls")
}

fn run_corpus(dir: &Path, truncate: usize, command: String) -> Outcome {
    let mut files = Vec::new();
    if let Err(e) = collect_corpus_files(dir, &mut files) {
        return Outcome::input_error(format!("cannot read corpus {}: {e}", dir.display()));
    }
    if files.is_empty() {
        return Outcome::input_error(format!("no .hcy files under {}", dir.display()));
    }
    let mut report = Report::new(command);
    for path in files {
        let rel = path.strip_prefix(dir).unwrap_or(&path);
        let file = match parse_file(&path) {
            Ok(f) => f,
            Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
        };
        if is_negative_control(&path) && file.expect_failures.is_empty() {
            let mut item = Item::new(rel.display().to_string(), "file");
            item.error = Some("negative-control file declares no expected failure".into());
            report.push(item);
            continue;
        }
        let mut items: Vec<Item> = file
            .declarations
            .iter()
            .map(|d| {
                let mut item = declaration_checks(d, &file, truncate);
                item.subject = format!("{}::{}", rel.display(), item.subject);
                item
            })
            .collect();
        let prefixed: Vec<(String, String)> = file
            .expect_failures
            .iter()
            .map(|(n, c)| (format!("{}::{n}", rel.display()), c.clone()))
            .collect();
        apply_expectations(&mut items, &prefixed);
        for i in items {
            report.push(i);
        }
    }
    Outcome::from_report(report)
}

/// Resolve the corpus directory: flag, then environment, then `corpus`.
pub fn corpus_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(d) = flag {
        return d.to_path_buf();
    }
    if let Ok(d) = std::env::var(CORPUS_ENV) {
        if !d.is_empty() {
            return PathBuf::from(d);
        }
    }
    PathBuf::from("corpus")
}

/// A command-echo string with flags that affect the result.
fn echo(cli: &Cli) -> String {
    let base = match &cli.cmd {
        Cmd::Check { targets } => format!("check {}", targets.join(" ")),
        Cmd::Build { targets } => format!("build {}", targets.join(" ")),
        Cmd::Cohomology {
            theory,
            file,
            hopf,
            coeff,
        } => {
            let mut s = format!("cohomology {theory}");
            if let Some(f) = file {
                s.push_str(&format!(" {}", f.display()));
            }
            s.push_str(&format!(" --hopf {hopf}"));
            if let Some(c) = coeff {
                s.push_str(&format!(" --coeff {c}"));
            }
            s
        }
        Cmd::Corpus { .. } => "corpus".to_string(),
    };
    format!("{base} --window {} --truncate {}", cli.window, cli.truncate)
}

/// Execute a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let command = echo(cli);
    match &cli.cmd {
        Cmd::Check { targets } => run_check(targets, cli.truncate, command),
        Cmd::Build { targets } => run_build(targets, cli.truncate, command),
        Cmd::Cohomology {
            theory,
            file,
            hopf,
            coeff,
        } => run_cohomology(
            theory,
            file.as_deref(),
            hopf,
            coeff.as_deref(),
            cli.window,
            cli.truncate,
            command,
        ),
        Cmd::Corpus { dir } => {
            let d = corpus_dir(dir.as_deref());
            run_corpus(&d, cli.truncate, command)
        }
    }
}
