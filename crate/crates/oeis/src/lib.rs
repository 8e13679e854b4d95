//! Fetches sequence prefixes from the OEIS and caches them on disk.
//!
//! Nothing here is needed for offline use: the catalog in `belltrans`
//! carries pinned prefixes for every sequence the tools rely on. A client in
//! offline mode refuses every network request with [`Error::Unavailable`].
//!
//! ```no_run
//! use belltrans_oeis::{OeisClient, OeisId};
//!
//! let client = OeisClient::builder().build()?;
//! let seq = client.get("A000108".parse::<OeisId>()?)?;
//! println!("{}", seq.terms.len());
//! # Ok::<(), belltrans_oeis::Error>(())
//! ```

mod cache;
mod client;
mod id;
mod parse;
mod transport;

pub use cache::{default_cache_dir, Cache, CACHE_DIR_ENV};
pub use client::{CachedSequence, ClientBuilder, OeisClient};
pub use id::OeisId;
pub use parse::{parse_bfile, parse_json};
pub use transport::{FixtureTransport, HttpTransport, Transport, TransportError};

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid OEIS id `{0}` (expected A followed by six digits)")]
    InvalidId(String),
    #[error("network access is disabled; {0} is only available from the local cache or pinned data")]
    Unavailable(OeisId),
    #[error("{0} is not in the cache")]
    NotFound(OeisId),
    #[error("request to {url} failed: {message}")]
    Transport { url: String, message: String },
    #[error("could not parse response from {url}: {message}")]
    Parse { url: String, message: String },
    #[error("corrupt cache file {}: {message}", path.display())]
    Corrupt { path: PathBuf, message: String },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("no cache directory: set {CACHE_DIR_ENV}")]
    NoCacheDir,
}

pub type Result<T> = std::result::Result<T, Error>;
