//! Conformal embeddings: levels, the AP criterion and searches.

pub mod ap;
pub mod constants;
pub mod levels;
pub mod report;
pub mod search;
pub mod surd;

pub use ap::{ap_check, ap_check_restricted, APReport, ComponentBalance};
pub use constants::{necessary_constants, EmbeddingKind, NecessaryConstants, Sign};
pub use levels::{central_charge, solve_levels, CandidateLevel};
pub use report::{
    exceptional_report, global_report, table2_report, table2_row, Expectation, ReportEntry, Status,
    Table2Row,
};
pub use search::{
    a1_exclusion_check, search_sl_irreducible, search_so_irreducible, table1_scan, A1Exclusion,
    Finding, Rejection, SearchResult,
};
pub use surd::{LevelSolution, QSqrt};
