use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use belltrans::{Rational, Sequence};
use chrono::{DateTime, Utc};
use num_bigint::BigInt;

use crate::parse::{parse_bfile, parse_json};
use crate::transport::{HttpTransport, Transport, TransportError};
use crate::{default_cache_dir, Cache, Error, OeisId, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CachedSequence {
    pub id: OeisId,
    /// OEIS index of `terms[0]`.
    pub offset: i64,
    pub terms: Vec<BigInt>,
    pub fetched_at: DateTime<Utc>,
    pub source_url: String,
}

impl CachedSequence {
    pub fn new(
        id: OeisId,
        offset: i64,
        terms: Vec<BigInt>,
        fetched_at: DateTime<Utc>,
        source_url: String,
    ) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Parse {
                url: source_url,
                message: "no terms".into(),
            });
        }
        Ok(CachedSequence {
            id,
            offset,
            terms,
            fetched_at,
            source_url,
        })
    }

    /// Terms with OEIS index `>= 1`, so that `x_n = a(n)`.
    pub fn to_sequence(&self) -> belltrans::Result<Sequence> {
        let skip = (1 - self.offset).max(0) as usize;
        let terms: Vec<Rational> = self
            .terms
            .iter()
            .skip(skip)
            .cloned()
            .map(Rational::from_integer)
            .collect();
        Sequence::new(terms)
    }

    /// All terms as stored, `x_1 = a(offset)`.
    pub fn to_sequence_from_offset(&self) -> Sequence {
        Sequence::from_bigints(self.terms.clone()).expect("terms are nonempty")
    }
}

type Slot = Arc<Mutex<Option<(Instant, CachedSequence)>>>;

pub struct OeisClient {
    transport: Box<dyn Transport>,
    cache: Cache,
    offline: bool,
    min_interval: Duration,
    last_request: Mutex<Option<Instant>>,
    slots: Mutex<HashMap<OeisId, Slot>>,
}

pub struct ClientBuilder {
    transport: Option<Box<dyn Transport>>,
    cache_dir: Option<PathBuf>,
    offline: bool,
    min_interval: Duration,
    timeout: Duration,
}

impl Default for ClientBuilder {
    fn default() -> Self {
        ClientBuilder {
            transport: None,
            cache_dir: None,
            offline: false,
            min_interval: Duration::from_secs(1),
            timeout: Duration::from_secs(30),
        }
    }
}

impl ClientBuilder {
    pub fn transport(mut self, t: impl Transport + 'static) -> Self {
        self.transport = Some(Box::new(t));
        self
    }

    pub fn cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn offline(mut self, offline: bool) -> Self {
        self.offline = offline;
        self
    }

    /// Minimum spacing between two network requests.
    pub fn min_interval(mut self, d: Duration) -> Self {
        self.min_interval = d;
        self
    }

    pub fn timeout(mut self, d: Duration) -> Self {
        self.timeout = d;
        self
    }

    pub fn build(self) -> Result<OeisClient> {
        let dir = match self.cache_dir {
            Some(d) => d,
            None => default_cache_dir().ok_or(Error::NoCacheDir)?,
        };
        let timeout = self.timeout;
        Ok(OeisClient {
            transport: self
                .transport
                .unwrap_or_else(|| Box::new(HttpTransport::new(timeout))),
            cache: Cache::new(dir),
            offline: self.offline,
            min_interval: self.min_interval,
            last_request: Mutex::new(None),
            slots: Mutex::new(HashMap::new()),
        })
    }
}

impl OeisClient {
    pub fn builder() -> ClientBuilder {
        ClientBuilder::default()
    }

    pub fn is_offline(&self) -> bool {
        self.offline
    }

    pub fn cache(&self) -> &Cache {
        &self.cache
    }

    /// Downloads `id` and replaces its cache entry. Concurrent fetches of the
    /// same id share one request: a caller that waited on another's request
    /// receives that result.
    pub fn fetch(&self, id: OeisId) -> Result<CachedSequence> {
        if self.offline {
            return Err(Error::Unavailable(id));
        }
        let started = Instant::now();
        let slot = self
            .slots
            .lock()
            .expect("slot map poisoned")
            .entry(id)
            .or_default()
            .clone();
        let mut guard = slot.lock().expect("slot poisoned");
        if let Some((done, seq)) = guard.as_ref() {
            if *done >= started {
                return Ok(seq.clone());
            }
        }
        let seq = self.download(id)?;
        self.cache.store(&seq)?;
        *guard = Some((Instant::now(), seq.clone()));
        Ok(seq)
    }

    /// Cached copy when present, otherwise [`OeisClient::fetch`].
    pub fn get(&self, id: OeisId) -> Result<CachedSequence> {
        match self.cache.load(id) {
            Err(Error::NotFound(_)) => self.fetch(id),
            other => other,
        }
    }

    pub fn get_cached(&self, id: OeisId) -> Result<CachedSequence> {
        self.cache.load(id)
    }

    /// Deletes the cache entry; [`Error::NotFound`] if there was none.
    pub fn invalidate(&self, id: OeisId) -> Result<()> {
        if self.cache.remove(id)? {
            Ok(())
        } else {
            Err(Error::NotFound(id))
        }
    }

    fn request(&self, url: &str) -> std::result::Result<String, TransportError> {
        let mut last = self.last_request.lock().expect("rate limiter poisoned");
        if let Some(prev) = *last {
            let wait = self.min_interval.saturating_sub(prev.elapsed());
            if !wait.is_zero() {
                std::thread::sleep(wait);
            }
        }
        *last = Some(Instant::now());
        drop(last);
        self.transport.get(url)
    }

    /// b-file first; the JSON endpoint when the b-file is missing or
    /// unparseable.
    fn download(&self, id: OeisId) -> Result<CachedSequence> {
        let transport_err = |url: &str, e: TransportError| Error::Transport {
            url: url.to_string(),
            message: match e {
                TransportError::NotFound => "not found".into(),
                TransportError::Other(m) => m,
            },
        };
        let bfile = id.bfile_url();
        let first = match self.request(&bfile) {
            Ok(text) => parse_bfile(&text, &bfile),
            Err(TransportError::NotFound) => Err(transport_err(&bfile, TransportError::NotFound)),
            Err(e) => return Err(transport_err(&bfile, e)),
        };
        let (url, (offset, terms)) = match first {
            Ok(parsed) => (bfile, parsed),
            Err(_) => {
                let json = id.json_url();
                let text = self.request(&json).map_err(|e| transport_err(&json, e))?;
                let parsed = parse_json(&text, id, &json)?;
                (json, parsed)
            }
        };
        CachedSequence::new(id, offset, terms, Utc::now(), url)
    }
}
