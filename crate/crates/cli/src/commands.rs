use std::collections::BTreeMap;
use std::fs;
use std::io::Read;

use serde::Serialize;
use serde_json::json;
use sqpbraid::annulus::{
    cut_annulus, markov_reduce, validate_annulus, AnnulusEntry, Catalog, CatalogDocument,
};
use sqpbraid::band_words::{parse_band_word, BandWord};
use sqpbraid::corpus::{generate, CorpusSpec};
use sqpbraid::error::Error;
use sqpbraid::fence::surface_stats;
use sqpbraid::invariants::{alexander_from_burau, AlexanderRoute, SeifertRoute};
use sqpbraid::transform::{
    preservation_checks, rudolph_transform, satellite_trace, CheckOutcome, PreservationCheck,
    SeifertFormCheck, TransformRun,
};

use crate::report::Report;
use crate::{AnnulusAction, AnnulusSource, CatalogArg, Command, Input};

pub enum Failure {
    Input(String),
    Core(Error),
    Preservation,
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

fn read_input(input: &Input) -> Result<String, Failure> {
    match input.file.as_deref() {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn read_word(input: &Input) -> Result<BandWord, Failure> {
    Ok(parse_band_word(&read_input(input)?)?)
}

fn catalog(arg: &CatalogArg) -> Catalog {
    match &arg.catalog {
        Some(dir) => Catalog::open(dir),
        None => Catalog::builtin(),
    }
}

fn print_json(value: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Info {
            input,
            json,
            alexander,
        } => info(&input, json, &alexander),
        Command::Transform {
            input,
            annulus,
            annuli,
            certificate,
            checks,
            json,
            catalog: cat,
        } => {
            let names = match (annulus, annuli) {
                (_, Some(list)) => list,
                (Some(one), None) => vec![one],
                (None, None) => vec![sqpbraid::annulus::BUILTIN_TREFOIL.to_string()],
            };
            transform(&input, &names, certificate, checks, json, &catalog(&cat))
        }
        Command::Annulus {
            action,
            catalog: cat,
        } => annulus(action, &catalog(&cat)),
        Command::Expand {
            input,
            free_reduce,
            json,
        } => {
            let word = read_word(&input)?;
            let mut artin = word.artin_expand();
            if free_reduce {
                artin = artin.free_reduce();
            }
            if json {
                let letters: Vec<String> =
                    artin.letters().iter().map(ToString::to_string).collect();
                print_json(&json!({ "strands": artin.strands(), "word": letters.join(" ") }));
            } else {
                println!("{artin}");
            }
            Ok(())
        }
        Command::Corpus {
            seed,
            count,
            max_strands,
            max_letters,
            annulus,
            json,
            catalog: cat,
        } => {
            let entry = catalog(&cat).get(&annulus)?;
            corpus(
                CorpusSpec {
                    seed,
                    count,
                    max_strands,
                    max_letters,
                    ..CorpusSpec::default()
                },
                &entry,
                json,
            )
        }
    }
}

fn info(input: &Input, json: bool, route: &str) -> Outcome {
    let word = read_word(input)?;
    let report = Report::build(&word, route)?;
    if json {
        print_json(&report);
    } else {
        print!("{}", report.text());
    }
    if report.is_connected() {
        Ok(())
    } else {
        Err(Error::DisconnectedSurface {
            components: surface_stats(&word).surface_components,
        }
        .into())
    }
}

#[derive(Serialize)]
struct TransformReport<'a> {
    output: &'a BandWord,
    seifert_form_preserved: bool,
    checks: &'a [CheckOutcome],
    satellite_trace: Vec<String>,
}

fn transform(
    input: &Input,
    names: &[String],
    certificate: Option<std::path::PathBuf>,
    checks: Option<Vec<String>>,
    json: bool,
    catalog: &Catalog,
) -> Outcome {
    let word = read_word(input)?;
    let companions = names
        .iter()
        .map(|n| catalog.get(n))
        .collect::<Result<Vec<AnnulusEntry>, _>>()?;
    let (output, cert) = rudolph_transform(&word, &companions)?;

    let registry = preservation_checks();
    let selected: Vec<&dyn PreservationCheck> = match &checks {
        Some(names) => registry.select(names)?,
        None => registry.iter().collect(),
    };
    let run = TransformRun::new(&cert);
    let outcomes: Vec<CheckOutcome> = selected.iter().map(|c| c.run(&run)).collect();
    let preserved = match outcomes.iter().find(|o| o.check == "seifert-form") {
        Some(o) => o.passed,
        None => SeifertFormCheck.run(&run).passed,
    };

    if let Some(path) = certificate {
        let mut text = serde_json::to_string_pretty(&cert).expect("certificates serialize");
        text.push('\n');
        fs::write(&path, text).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
    }

    if json {
        print_json(&TransformReport {
            output: &output,
            seifert_form_preserved: preserved,
            checks: &outcomes,
            satellite_trace: satellite_trace(&cert),
        });
    } else {
        println!("{}", output.render());
        println!("seifert_form_preserved: {preserved}");
        for o in &outcomes {
            let tag = if o.passed { "ok" } else { "FAILED" };
            println!("check {}: {tag} ({})", o.check, o.detail);
        }
    }
    if outcomes.iter().all(|o| o.passed) && preserved {
        Ok(())
    } else {
        eprintln!("error: a preservation check failed");
        Err(Failure::Preservation)
    }
}

fn annulus_word(source: &AnnulusSource, catalog: &Catalog) -> Result<BandWord, Failure> {
    match &source.entry {
        Some(name) => Ok(catalog.get(name)?.word().clone()),
        None => read_word(&source.input),
    }
}

fn annulus(action: AnnulusAction, catalog: &Catalog) -> Outcome {
    match action {
        AnnulusAction::Validate {
            source,
            name,
            core,
            json,
        } => {
            let word = annulus_word(&source, catalog)?;
            let entry = match &source.entry {
                Some(stored) if name == "unnamed" => catalog.get(stored)?,
                _ => validate_annulus(&word, name, core)?,
            };
            let reduced = markov_reduce(entry.word())?;
            let core_poly = entry.core_alexander();
            if json {
                print_json(&json!({
                    "name": entry.name(),
                    "declared_core": entry.declared_core(),
                    "valid": true,
                    "framing": 0,
                    "reduced_strands": reduced.strands(),
                    "core_alexander": core_poly,
                    "core_alexander_text": core_poly.to_string(),
                }));
            } else {
                println!("valid zero-framed annulus `{}`", entry.name());
                println!("reduced strands: {}", reduced.strands());
                println!(
                    "core alexander: {core_poly} (declared: {})",
                    entry.declared_core()
                );
            }
            Ok(())
        }
        AnnulusAction::Reduce { source } => {
            let word = annulus_word(&source, catalog)?;
            validate_annulus(&word, "input", "")?;
            println!("{}", markov_reduce(&word)?.word().render());
            Ok(())
        }
        AnnulusAction::Cut { source } => {
            let word = annulus_word(&source, catalog)?;
            validate_annulus(&word, "input", "")?;
            println!("{}", cut_annulus(&markov_reduce(&word)?)?.render());
            Ok(())
        }
        AnnulusAction::List { json } => {
            let names = catalog.list()?;
            if json {
                print_json(&names);
            } else {
                for n in names {
                    println!("{n}");
                }
            }
            Ok(())
        }
        AnnulusAction::Add {
            input,
            name,
            core,
            provenance,
        } => {
            if catalog.store().is_none() {
                return Err(Failure::Other("annulus add needs --catalog DIR".into()));
            }
            let word = read_word(&input)?;
            let doc = CatalogDocument {
                name,
                declared_core: core,
                strands: word.strands(),
                word: word.letters_text(),
                provenance,
            };
            let entry = catalog.add(&doc)?;
            println!(
                "added `{}` ({} strands)",
                entry.name(),
                entry.word().strands()
            );
            Ok(())
        }
    }
}

fn corpus(spec: CorpusSpec, entry: &AnnulusEntry, json: bool) -> Outcome {
    let words = generate(&spec);
    let registry = preservation_checks();
    let mut failures: BTreeMap<&'static str, usize> =
        registry.names().into_iter().map(|n| (n, 0)).collect();
    let mut oracle_mismatch = 0;
    let mut examples = Vec::new();
    for w in &words {
        let (_, cert) = rudolph_transform(w, std::slice::from_ref(entry))?;
        let run = TransformRun::new(&cert);
        for c in registry.iter() {
            let o = c.run(&run);
            if !o.passed {
                *failures.get_mut(o.check).expect("registered") += 1;
                examples.push(format!("{} [{}]", w.letters_text(), o.check));
            }
        }
        if SeifertRoute.alexander(w)? != alexander_from_burau(&w.artin_expand())? {
            oracle_mismatch += 1;
            examples.push(format!("{} [alexander routes]", w.letters_text()));
        }
    }
    let ok = examples.is_empty();
    if json {
        print_json(&json!({
            "seed": spec.seed,
            "count": words.len(),
            "annulus": entry.name(),
            "check_failures": failures,
            "alexander_route_mismatches": oracle_mismatch,
            "passed": ok,
        }));
    } else {
        println!(
            "corpus seed {:#x}: {} words, companion {}",
            spec.seed,
            words.len(),
            entry.name()
        );
        for (name, n) in &failures {
            println!("{name}: {n} failure(s)");
        }
        println!("alexander routes: {oracle_mismatch} mismatch(es)");
        for e in examples.iter().take(5) {
            println!("failed: {e}");
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Preservation)
    }
}
