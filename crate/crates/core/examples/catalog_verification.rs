//! Run every cross-check over the thirteen CM rows and print the reports.

use rank3_frobenius::catalog::{verify_all, DEFAULT_CATALOG_TOL};

fn main() {
    let report = verify_all(DEFAULT_CATALOG_TOL);
    for row in &report.rows {
        print!("{row}");
    }
    println!("{}", report.summary);
}
