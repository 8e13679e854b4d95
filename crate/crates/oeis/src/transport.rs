use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Duration;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransportError {
    /// The server answered 404.
    NotFound,
    Other(String),
}

/// Performs a GET request and returns the body.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> Result<String, TransportError>;
}

pub struct HttpTransport {
    agent: ureq::Agent,
}

impl HttpTransport {
    pub fn new(timeout: Duration) -> Self {
        let agent = ureq::AgentBuilder::new()
            .timeout(timeout)
            .user_agent(concat!("belltrans-oeis/", env!("CARGO_PKG_VERSION")))
            .build();
        HttpTransport { agent }
    }
}

impl Default for HttpTransport {
    fn default() -> Self {
        Self::new(Duration::from_secs(30))
    }
}

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> Result<String, TransportError> {
        match self.agent.get(url).call() {
            Ok(resp) => resp
                .into_string()
                .map_err(|e| TransportError::Other(e.to_string())),
            Err(ureq::Error::Status(404, _)) => Err(TransportError::NotFound),
            Err(e) => Err(TransportError::Other(e.to_string())),
        }
    }
}

/// Canned responses keyed by URL, for tests and offline demos. Unknown URLs
/// answer 404. Counts the requests it serves.
#[derive(Default)]
pub struct FixtureTransport {
    responses: HashMap<String, Result<String, TransportError>>,
    delay: Duration,
    calls: AtomicUsize,
}

impl FixtureTransport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, url: impl Into<String>, body: impl Into<String>) -> Self {
        self.responses.insert(url.into(), Ok(body.into()));
        self
    }

    pub fn with_error(mut self, url: impl Into<String>, err: TransportError) -> Self {
        self.responses.insert(url.into(), Err(err));
        self
    }

    /// Sleeps this long inside every request.
    pub fn with_delay(mut self, delay: Duration) -> Self {
        self.delay = delay;
        self
    }

    pub fn calls(&self) -> usize {
        self.calls.load(Ordering::SeqCst)
    }
}

impl Transport for FixtureTransport {
    fn get(&self, url: &str) -> Result<String, TransportError> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        if !self.delay.is_zero() {
            std::thread::sleep(self.delay);
        }
        self.responses
            .get(url)
            .cloned()
            .unwrap_or(Err(TransportError::NotFound))
    }
}

impl<T: Transport + ?Sized> Transport for std::sync::Arc<T> {
    fn get(&self, url: &str) -> Result<String, TransportError> {
        (**self).get(url)
    }
}
