//! Text formats, the catalogue fetcher and JSON reports.

pub mod catalogue;
pub mod format;
pub mod report;

pub use catalogue::{fetch_catalogue, parse_catalogue, CatalogueError, CatalogueSource};
pub use format::{parse_group, parse_scheme, FormatError, GroupFile, SchemeFile};
pub use report::{report_files, ReportRecord, REPORT_SCHEMA_VERSION};
