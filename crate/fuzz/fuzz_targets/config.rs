#![no_main]

use cechpers_cli::config::{parse_field, parse_grid, GridChoice};
use cechpers_cli::Args;
use clap::Parser;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(field) = parse_field(text) {
        assert!(field.characteristic() == 0 || field.characteristic() >= 2);
    }
    if let Ok(GridChoice::Explicit(values)) = parse_grid(text) {
        assert!(!values.is_empty());
        assert!(values.windows(2).all(|w| w[0] < w[1]));
    }
    let argv = std::iter::once("cechpers").chain(text.split_whitespace());
    if let Ok(args) = Args::try_parse_from(argv) {
        let _ = cechpers_cli::RunConfig::try_from(args);
    }
});
