use std::fmt::Write;

use serde::Serialize;
use sqpbraid::band_words::BandWord;
use sqpbraid::error::Result;
use sqpbraid::fence::{cycle_basis, seifert_matrix, surface_stats};
use sqpbraid::invariants::{alexander_routes, linking_matrix, signature};
use sqpbraid::laurent::LaurentPoly;

#[derive(Serialize)]
pub struct Report {
    pub word: String,
    pub strands: usize,
    pub letters: usize,
    pub sqp: bool,
    pub components: usize,
    pub b1: usize,
    pub euler: i64,
    pub genus: Option<i64>,
    pub seifert_matrix: Option<Vec<Vec<i64>>>,
    pub basis_chords: Option<Vec<usize>>,
    pub alexander_route: String,
    pub alexander: Option<LaurentPoly>,
    pub alexander_text: Option<String>,
    pub signature: Option<i64>,
    pub linking_matrix: Vec<Vec<i64>>,
    pub warnings: Vec<String>,
}

impl Report {
    /// Everything the word supports; homology fields stay empty on a
    /// disconnected surface.
    pub fn build(word: &BandWord, route: &str) -> Result<Report> {
        let routes = alexander_routes();
        let route = routes.get(route)?;
        let stats = surface_stats(word);
        let mut warnings = Vec::new();

        let (matrix, chords, sig) = if stats.is_connected() {
            let basis = cycle_basis(word)?;
            let v = seifert_matrix(word, &basis)?;
            let sig = signature(&v.entries);
            (Some(v.entries), Some(basis.chords), Some(sig))
        } else {
            warnings.push(format!(
                "canonical surface has {} components; homology fields omitted",
                stats.surface_components
            ));
            (None, None, None)
        };
        let alexander = match route.alexander(word) {
            Ok(p) => Some(p),
            Err(e) => {
                warnings.push(format!("alexander ({}): {e}", route.name()));
                None
            }
        };

        Ok(Report {
            word: word.letters_text(),
            strands: word.strands(),
            letters: word.len(),
            sqp: word.is_strongly_quasipositive(),
            components: word.closure_summary().components,
            b1: stats.b1,
            euler: stats.euler,
            genus: stats.genus_if_connected,
            seifert_matrix: matrix,
            basis_chords: chords,
            alexander_route: route.name().to_string(),
            alexander_text: alexander.as_ref().map(ToString::to_string),
            alexander,
            signature: sig,
            linking_matrix: linking_matrix(word).entries,
            warnings,
        })
    }

    pub fn is_connected(&self) -> bool {
        self.seifert_matrix.is_some()
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "word: {}", self.word);
        let _ = writeln!(out, "strands: {}", self.strands);
        let _ = writeln!(out, "letters: {}", self.letters);
        let _ = writeln!(out, "strongly quasipositive: {}", yes_no(self.sqp));
        let _ = writeln!(out, "components: {}", self.components);
        let _ = writeln!(out, "b1: {}", self.b1);
        let _ = writeln!(out, "euler: {}", self.euler);
        if let Some(g) = self.genus {
            let _ = writeln!(out, "genus: {g}");
        }
        if let Some(m) = &self.seifert_matrix {
            let _ = writeln!(out, "seifert matrix: {}", matrix_text(m));
        }
        if let Some(a) = &self.alexander_text {
            let _ = writeln!(out, "alexander ({}): {a}", self.alexander_route);
        }
        if let Some(s) = self.signature {
            let _ = writeln!(out, "signature: {s}");
        }
        let _ = writeln!(out, "linking matrix: {}", matrix_text(&self.linking_matrix));
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }
}

pub fn matrix_text(m: &[Vec<i64>]) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
