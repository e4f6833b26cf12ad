//! File formats, subcommands and the benchmark harness behind the `tangle`
//! binary.

pub mod bench;
pub mod commands;
pub mod formats;

pub use commands::exit;
pub use formats::{parse_list, parse_tangle, write_list, write_list_matrix, write_tangle, InputError};
