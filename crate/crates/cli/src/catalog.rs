use std::fs;
use std::path::Path;

use tssforge_core::group::{load_cayley, load_perm_group, AssocCheck};
use tssforge_core::GroupHandle;

use crate::report::Diagnostic;
use crate::CliError;

#[derive(Debug)]
pub struct Catalog {
    pub groups: Vec<GroupHandle>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Loads every `.cayley` and `.perm` file in `dir`, sorted by file name.
///
/// Each group is named by its file name, so a Cayley and a permutation file with
/// the same stem stay distinguishable. Files that fail to load are reported as
/// diagnostics and skipped.
pub fn read_catalog(dir: &Path, cap: usize, assoc: AssocCheck) -> Result<Catalog, CliError> {
    let unreadable = |e: std::io::Error| CliError::Usage(format!("cannot read catalog {}: {e}", dir.display()));
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(unreadable)?
        .collect::<Result<Vec<_>, _>>()
        .map_err(unreadable)?
        .into_iter()
        .map(|entry| entry.path())
        .filter(|p| p.is_file())
        .collect();
    files.sort();

    let mut catalog = Catalog {
        groups: Vec::new(),
        diagnostics: Vec::new(),
    };
    for path in files {
        let file_name = path
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        let loaded = match path.extension().and_then(|e| e.to_str()) {
            Some("cayley") => load_cayley(&path, cap, assoc),
            Some("perm") => load_perm_group(&path, cap),
            _ => {
                catalog
                    .diagnostics
                    .push(Diagnostic::note(format!("{file_name}: ignored (not .cayley or .perm)")));
                continue;
            }
        };
        match loaded {
            Ok(g) => catalog.groups.push(g.with_name(file_name)),
            Err(e) => catalog
                .diagnostics
                .push(Diagnostic::warning(format!("{file_name}: {e}"))),
        }
    }
    if catalog.groups.is_empty() {
        catalog.diagnostics.push(Diagnostic::warning(format!(
            "catalog {} contains no groups",
            dir.display()
        )));
    }
    Ok(catalog)
}
