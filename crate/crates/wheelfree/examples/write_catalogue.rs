//! Regenerates the bundled catalogue assets from the augmentation generator.

use std::io::Write;

use flate2::write::GzEncoder;
use flate2::Compression;
use wheelfree::catalogue::MAX_BUNDLED;
use wheelfree::to_graph6;
use wheelfree_core::oracle::catalogue;

fn main() -> std::io::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("assets");
    for n in 0..=MAX_BUNDLED {
        let mut gz = GzEncoder::new(Vec::new(), Compression::best());
        for g in catalogue(n) {
            writeln!(gz, "{}", to_graph6(&g))?;
        }
        std::fs::write(dir.join(format!("graphs{n}.g6.gz")), gz.finish()?)?;
    }
    Ok(())
}
