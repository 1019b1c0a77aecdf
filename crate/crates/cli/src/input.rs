//! Graph specs that may refer to edge-list files.

use std::fs;
use std::path::Path;

use graph_energy_core::{charpoly_auto, charpoly_cycle, charpoly_p6, charpoly_path};
use graph_energy_core::{Family, Graph, GraphSpec, IntPoly, Subject};

use crate::error::CliError;

/// Parses `cycle:<n>`, `p6:<n>`, `path:<n>` or `file:<path>`.
pub fn load_subject(spec: &str) -> Result<Subject, CliError> {
    match spec.parse::<GraphSpec>()? {
        GraphSpec::Family(f) => Ok(Subject::from_family(f)?),
        GraphSpec::File(path) => {
            let g = read_edge_list(Path::new(&path))?;
            Ok(Subject::from_graph(spec, g)?)
        }
    }
}

pub fn read_edge_list(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Graph::from_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn write_edge_list(path: &Path, g: &Graph) -> Result<(), CliError> {
    fs::write(path, g.to_edge_list())?;
    Ok(())
}

/// Characteristic polynomial, by recurrence for the named families.
pub fn subject_charpoly(s: &Subject) -> Result<IntPoly, CliError> {
    Ok(match s.family {
        Some(Family::Cycle(n)) => charpoly_cycle(n)?,
        Some(Family::P6(n)) => charpoly_p6(n)?,
        Some(Family::Path(n)) => charpoly_path(n)?,
        None => charpoly_auto(&s.graph),
    })
}
