use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{validate_annulus, AnnulusEntry};
use crate::band_words::{parse_band_word, BandWord};
use crate::error::{Error, Result};

pub const BUILTIN_TREFOIL: &str = "trefoil_T23";

const TREFOIL_WORD: &str = "a(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)";

/// On-disk form of one catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDocument {
    pub name: String,
    pub declared_core: String,
    pub strands: usize,
    pub word: String,
    pub provenance: String,
}

impl CatalogDocument {
    pub fn from_entry(entry: &AnnulusEntry) -> Self {
        CatalogDocument {
            name: entry.name().to_string(),
            declared_core: entry.declared_core().to_string(),
            strands: entry.word().strands(),
            word: entry.word().letters_text(),
            provenance: entry.provenance().to_string(),
        }
    }

    pub fn band_word(&self) -> Result<BandWord> {
        parse_band_word(&format!("strands: {}\n{}", self.strands, self.word))
    }

    fn into_entry(self) -> Result<AnnulusEntry> {
        let name = self.name.clone();
        let wrap = |e: Error| Error::ValidationFailed {
            name: name.clone(),
            source: Box::new(e),
        };
        let word = self.band_word().map_err(wrap)?;
        Ok(validate_annulus(&word, self.name, self.declared_core)
            .map_err(wrap)?
            .with_provenance(self.provenance))
    }
}

fn builtins() -> Vec<CatalogDocument> {
    vec![CatalogDocument {
        name: BUILTIN_TREFOIL.into(),
        declared_core: "T(2,3)".into(),
        strands: 6,
        word: TREFOIL_WORD.into(),
        provenance: "built-in zero-framed annulus with trefoil core".into(),
    }]
}

/// Built-in entries plus an optional store directory holding one
/// `<name>.json` document per user entry.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    store: Option<PathBuf>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog { store: None }
    }

    pub fn open(store: impl Into<PathBuf>) -> Self {
        Catalog {
            store: Some(store.into()),
        }
    }

    pub fn store(&self) -> Option<&Path> {
        self.store.as_deref()
    }

    pub fn get(&self, name: &str) -> Result<AnnulusEntry> {
        if let Some(doc) = builtins().into_iter().find(|d| d.name == name) {
            return doc.into_entry();
        }
        let Some(dir) = &self.store else {
            return Err(Error::UnknownEntry(name.into()));
        };
        if !valid_name(name) {
            return Err(Error::UnknownEntry(name.into()));
        }
        let path = dir.join(format!("{name}.json"));
        if !path.exists() {
            return Err(Error::UnknownEntry(name.into()));
        }
        read_document(&path)?.into_entry()
    }

    /// Entry names, sorted.
    pub fn list(&self) -> Result<Vec<String>> {
        let mut names: Vec<String> = builtins().into_iter().map(|d| d.name).collect();
        if let Some(dir) = &self.store {
            if dir.exists() {
                let listing = fs::read_dir(dir).map_err(|e| io_error(dir, e))?;
                for item in listing {
                    let path = item.map_err(|e| io_error(dir, e))?.path();
                    if path.extension().is_some_and(|x| x == "json") {
                        if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                            names.push(stem.to_string());
                        }
                    }
                }
            }
        }
        names.sort();
        names.dedup();
        Ok(names)
    }

    /// Validates `doc` and writes it to the store. Existing names are not
    /// overwritten.
    pub fn add(&self, doc: &CatalogDocument) -> Result<AnnulusEntry> {
        let dir = self
            .store
            .as_ref()
            .ok_or_else(|| Error::StoreIo("no catalog store configured".into()))?;
        let reject = |e: Error| Error::ValidationFailed {
            name: doc.name.clone(),
            source: Box::new(e),
        };
        if !valid_name(&doc.name) {
            return Err(reject(Error::PreconditionViolated(
                "names use letters, digits, `_` and `-` only".into(),
            )));
        }
        if self.list()?.contains(&doc.name) {
            return Err(reject(Error::PreconditionViolated(format!(
                "an entry named `{}` already exists",
                doc.name
            ))));
        }
        let entry = doc.clone().into_entry()?;

        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
        let path = dir.join(format!("{}.json", doc.name));
        let mut text = serde_json::to_string_pretty(&CatalogDocument::from_entry(&entry))
            .expect("documents serialize");
        text.push('\n');
        // create_new keeps concurrent writers from clobbering each other
        let mut file = fs::OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&path)
            .map_err(|e| io_error(&path, e))?;
        file.write_all(text.as_bytes())
            .map_err(|e| io_error(&path, e))?;
        Ok(entry)
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn read_document(path: &Path) -> Result<CatalogDocument> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::StoreIo(format!("{}: {e}", path.display())))
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::StoreIo(format!("{}: {e}", path.display()))
}
