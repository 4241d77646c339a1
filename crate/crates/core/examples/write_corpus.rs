//! Writes the corpus documents to `corpus/` (and `corpus/invalid/`) next
//! to this crate's manifest, or to the directory given as argument.

use std::path::PathBuf;

use opgroupoid::corpus::{corpus, invalid_examples};
use opgroupoid::io::serialize;

fn main() -> std::io::Result<()> {
    let root = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus"));
    std::fs::create_dir_all(root.join("invalid"))?;
    for (stem, doc) in corpus() {
        std::fs::write(root.join(format!("{stem}.json")), serialize(&doc))?;
    }
    for (stem, doc) in invalid_examples() {
        std::fs::write(root.join("invalid").join(format!("{stem}.json")), serialize(&doc))?;
    }
    println!(
        "wrote {} documents to {}",
        corpus().len() + invalid_examples().len(),
        root.display()
    );
    Ok(())
}
