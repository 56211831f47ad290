//! The bundled catalogue of all graphs on at most eight vertices.
//!
//! Each asset is a gzip-compressed graph6 file, one graph per line, written
//! by `cargo run -p wheelfree --example write_catalogue`.

use std::io::Read;

use flate2::read::GzDecoder;
use wheelfree_core::oracle::{self, CATALOGUE_COUNTS};
use wheelfree_core::Graph;

use crate::formats::{read_graph6, FormatError};

/// Largest vertex count with a bundled asset.
pub const MAX_BUNDLED: usize = 8;

/// Largest vertex count served by augmentation when no asset is available.
pub const MAX_GENERATED: usize = 7;

static ASSETS: [&[u8]; MAX_BUNDLED + 1] = [
    include_bytes!("../assets/graphs0.g6.gz"),
    include_bytes!("../assets/graphs1.g6.gz"),
    include_bytes!("../assets/graphs2.g6.gz"),
    include_bytes!("../assets/graphs3.g6.gz"),
    include_bytes!("../assets/graphs4.g6.gz"),
    include_bytes!("../assets/graphs5.g6.gz"),
    include_bytes!("../assets/graphs6.g6.gz"),
    include_bytes!("../assets/graphs7.g6.gz"),
    include_bytes!("../assets/graphs8.g6.gz"),
];

#[derive(Debug, thiserror::Error)]
pub enum CatalogueError {
    #[error("no catalogue for n = {0} (at most {MAX_BUNDLED} vertices)")]
    MissingAsset(usize),
    #[error("catalogue asset for n = {n} is unreadable: {source}")]
    Io { n: usize, source: std::io::Error },
    #[error("catalogue asset for n = {n} is malformed: {source}")]
    Format { n: usize, source: FormatError },
    #[error("catalogue asset for n = {n} holds {found} graphs, expected {expected}")]
    Count { n: usize, found: usize, expected: usize },
}

/// Decodes the bundled asset for `n` vertices.
pub fn bundled(n: usize) -> Result<Vec<Graph>, CatalogueError> {
    let bytes = ASSETS.get(n).ok_or(CatalogueError::MissingAsset(n))?;
    let mut text = String::new();
    GzDecoder::new(*bytes).read_to_string(&mut text).map_err(|source| CatalogueError::Io { n, source })?;
    let graphs = read_graph6(&text).map_err(|source| CatalogueError::Format { n, source })?;
    if graphs.len() != CATALOGUE_COUNTS[n] || graphs.iter().any(|g| g.n() != n) {
        return Err(CatalogueError::Count { n, found: graphs.len(), expected: CATALOGUE_COUNTS[n] });
    }
    Ok(graphs)
}

/// All graphs on `n` vertices up to isomorphism: the bundled asset, or
/// augmentation for small `n` if the asset cannot be read.
pub fn catalogue(n: usize) -> Result<Vec<Graph>, CatalogueError> {
    match bundled(n) {
        Err(_) if n <= MAX_GENERATED => Ok(oracle::catalogue(n)),
        other => other,
    }
}
