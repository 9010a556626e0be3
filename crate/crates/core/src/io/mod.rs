//! Text formats and the decomposition report.

mod report;
mod text;

use std::path::Path;

use crate::cc::{BuildOptions, CoherentConfiguration};
use crate::error::{Error, Result};

pub use report::{DecompositionReport, FactorReport, TraceReport};
pub use text::{parse_ccm, parse_generators, parse_graph, parse_group_table, to_ccm};

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::parse(0, format!("{}: {e}", path.display())))
}

pub fn read_ccm(path: &Path, options: BuildOptions) -> Result<CoherentConfiguration> {
    CoherentConfiguration::from_matrix_with(parse_ccm(&read_to_string(path)?)?, options)
}

pub fn write_ccm(path: &Path, cc: &CoherentConfiguration) -> Result<()> {
    std::fs::write(path, to_ccm(cc)).map_err(|e| Error::parse(0, format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{conjugacy_class_scheme, GroupTable};

    #[test]
    fn ccm_round_trip() {
        let x = conjugacy_class_scheme(&GroupTable::symmetric(3).unwrap()).unwrap();
        let text = to_ccm(&x);
        assert_eq!(parse_ccm(&text).unwrap(), *x.matrix());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let m = parse_ccm("# two points\n2 2\n\n0 1\n# middle\n1 0\n").unwrap();
        assert_eq!(m.cells(), &[0, 1, 1, 0]);
    }

    #[test]
    fn malformed_ccm_is_rejected_with_line_numbers() {
        assert_eq!(
            parse_ccm("2 2\n0 1\n1\n"),
            Err(Error::Parse { line: 3, message: "row has 1 colors, expected 2".into() })
        );
        assert!(matches!(parse_ccm("2 2\n0 2\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ccm("2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ccm("2\n0 1\n1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ccm("2 2\n0 x\n1 0\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn generator_table_and_graph_inputs() {
        assert_eq!(parse_generators("2 0 1\n", 3).unwrap(), vec![vec![2, 0, 1]]);
        assert!(parse_generators("1 0\n", 3).is_err());
        assert_eq!(parse_group_table("0 1\n1 0\n").unwrap().len(), 2);
        let (n, edges) = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!((n, edges), (3, vec![(0, 1), (1, 2)]));
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("3 1\n0 3\n").is_err());
    }
}
