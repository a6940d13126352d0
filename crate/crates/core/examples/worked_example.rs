//! Recomputes every claim about the 18-vertex S3 example and prints the
//! report, as `cospec verify-paper` does.
//!
//!     cargo run --release --example worked_example

use cospectral_lifts::report::verify_example;

fn main() {
    let report = verify_example();
    print!("{report}");
    std::process::exit(if report.all_expected_pass() { 0 } else { 1 });
}
