//! Built-in presentations and the loader for presentation files.

mod generate;
mod loader;
mod rmatrix;

pub use generate::{anyonic_text, braided_line_text, group_bichar_text, parse_name, CatalogName};
pub(crate) use loader::base_generators;
pub use loader::{builtin_names, builtin_source, load_builtin, load_source, load_spec, Bundle};
pub use rmatrix::derive_rmatrix;
