use std::cell::OnceCell;

use serde::Serialize;

use super::{map_basis, TransformCertificate};
use crate::band_words::BandWord;
use crate::error::Result;
use crate::fence::{cycle_basis, seifert_matrix, surface_stats, SeifertMatrix};
use crate::invariants::{alexander_from_seifert, linking_matrix, signature};
use crate::registry::{Registry, Strategy};

/// A finished transform, with lazily computed canonical Seifert matrices of
/// both ends.
pub struct TransformRun<'a> {
    pub input: &'a BandWord,
    pub output: &'a BandWord,
    pub certificate: &'a TransformCertificate,
    input_matrix: OnceCell<Result<SeifertMatrix>>,
    output_matrix: OnceCell<Result<SeifertMatrix>>,
}

impl<'a> TransformRun<'a> {
    pub fn new(certificate: &'a TransformCertificate) -> Self {
        TransformRun {
            input: &certificate.input,
            output: &certificate.output,
            certificate,
            input_matrix: OnceCell::new(),
            output_matrix: OnceCell::new(),
        }
    }

    fn canonical(word: &BandWord) -> Result<SeifertMatrix> {
        seifert_matrix(word, &cycle_basis(word)?)
    }

    pub fn input_matrix(&self) -> Result<&SeifertMatrix> {
        self.input_matrix
            .get_or_init(|| Self::canonical(self.input))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn output_matrix(&self) -> Result<&SeifertMatrix> {
        self.output_matrix
            .get_or_init(|| Self::canonical(self.output))
            .as_ref()
            .map_err(Clone::clone)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// An invariant that a transform must leave unchanged.
pub trait PreservationCheck: Strategy {
    fn evaluate(&self, run: &TransformRun<'_>) -> Result<(bool, String)>;

    fn run(&self, run: &TransformRun<'_>) -> CheckOutcome {
        let (passed, detail) = self
            .evaluate(run)
            .unwrap_or_else(|e| (false, format!("error: {e}")));
        CheckOutcome {
            check: self.name(),
            passed,
            detail,
        }
    }
}

macro_rules! strategy {
    ($ty:ident, $name:literal, $summary:literal) => {
        pub struct $ty;

        impl Strategy for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn summary(&self) -> &'static str {
                $summary
            }
        }
    };
}

strategy!(
    AccountingCheck,
    "accounting",
    "strand, letter, b1 and component counts; connectivity"
);
strategy!(SqpCheck, "sqp", "output has no negative letters");
strategy!(
    SeifertFormCheck,
    "seifert-form",
    "Seifert matrix on the mapped basis equals the input matrix"
);
strategy!(
    AlexanderCheck,
    "alexander",
    "normalized Alexander polynomial from each canonical surface"
);
strategy!(
    SignatureCheck,
    "signature",
    "signature of each canonical surface"
);
strategy!(
    LinkingCheck,
    "linking",
    "pairwise linking numbers, components matched through the strand map"
);

impl PreservationCheck for AccountingCheck {
    fn evaluate(&self, run: &TransformRun<'_>) -> Result<(bool, String)> {
        let added: usize = run.certificate.steps.iter().map(|s| s.n_a).sum();
        let (a, b) = (surface_stats(run.input), surface_stats(run.output));
        let (ca, cb) = (
            run.input.closure_summary().components,
            run.output.closure_summary().components,
        );
        let passed = run.output.strands() == run.input.strands() + added
            && run.output.len() == run.input.len() + added
            && a.b1 == b.b1
            && ca == cb
            && b.is_connected();
        Ok((
            passed,
            format!(
                "strands {} -> {}, letters {} -> {}, b1 {} -> {}, components {ca} -> {cb}",
                run.input.strands(),
                run.output.strands(),
                run.input.len(),
                run.output.len(),
                a.b1,
                b.b1
            ),
        ))
    }
}

impl PreservationCheck for SqpCheck {
    fn evaluate(&self, run: &TransformRun<'_>) -> Result<(bool, String)> {
        let negatives = run.output.negative_positions();
        Ok((
            negatives.is_empty(),
            format!("{} negative letter(s) in the output", negatives.len()),
        ))
    }
}

impl PreservationCheck for SeifertFormCheck {
    fn evaluate(&self, run: &TransformRun<'_>) -> Result<(bool, String)> {
        let basis = cycle_basis(run.input)?;
        let before = seifert_matrix(run.input, &basis)?;
        let mapped = map_basis(run.certificate, &basis)?;
        let after = seifert_matrix(run.output, &mapped)?;
        Ok((
            before.entries == after.entries,
            format!("{:?} -> {:?}", before.entries, after.entries),
        ))
    }
}

impl PreservationCheck for AlexanderCheck {
    fn evaluate(&self, run: &TransformRun<'_>) -> Result<(bool, String)> {
        let before = alexander_from_seifert(run.input_matrix()?);
        let after = alexander_from_seifert(run.output_matrix()?);
        Ok((before == after, format!("{before} -> {after}")))
    }
}

impl PreservationCheck for SignatureCheck {
    fn evaluate(&self, run: &TransformRun<'_>) -> Result<(bool, String)> {
        let before = signature(&run.input_matrix()?.entries);
        let after = signature(&run.output_matrix()?.entries);
        Ok((before == after, format!("{before} -> {after}")))
    }
}

impl PreservationCheck for LinkingCheck {
    fn evaluate(&self, run: &TransformRun<'_>) -> Result<(bool, String)> {
        let (sa, sb) = (run.input.closure_summary(), run.output.closure_summary());
        if sa.components != sb.components {
            return Ok((false, "component counts differ".into()));
        }
        // input component c ↦ output component of the strand carrying it
        let strands = run.certificate.strand_map();
        let image: Vec<usize> = (1..=sa.components)
            .map(|c| sb.component_of(strands[sa.strands_of(c)[0]]))
            .collect();
        let mut seen = image.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != image.len() {
            return Ok((false, format!("strand map merges components: {image:?}")));
        }
        let (la, lb) = (linking_matrix(run.input), linking_matrix(run.output));
        let passed = (1..=sa.components).all(|p| {
            (1..=sa.components).all(|q| la.get(p, q) == lb.get(image[p - 1], image[q - 1]))
        });
        Ok((passed, format!("{:?} -> {:?}", la.entries, lb.entries)))
    }
}

pub fn preservation_checks() -> Registry<dyn PreservationCheck> {
    let mut r: Registry<dyn PreservationCheck> = Registry::new();
    r.register(Box::new(AccountingCheck))
        .register(Box::new(SqpCheck))
        .register(Box::new(SeifertFormCheck))
        .register(Box::new(AlexanderCheck))
        .register(Box::new(SignatureCheck))
        .register(Box::new(LinkingCheck));
    r
}
