use std::fmt;
use std::path::Path;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const DOMAIN: i32 = 3;
    pub const DATA: i32 = 4;
    pub const NETWORK: i32 = 5;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(belltrans::Error),
    Oeis(belltrans_oeis::Error),
    Data(String),
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Data(format!("{}: {e}", path.display()))
    }

    /// Errors in values typed on the command line are usage errors.
    pub fn from_arg(e: belltrans::Error) -> Self {
        match e {
            belltrans::Error::Parse(m) => CliError::Usage(m),
            other => CliError::Core(other),
        }
    }

    pub fn exit_code(&self) -> i32 {
        use belltrans::Error as E;
        use belltrans_oeis::Error as O;
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Data(_) => exit::DATA,
            CliError::Core(e) => match e {
                E::Parse(_) | E::UnknownName(_) | E::MissingParameter { .. } => exit::USAGE,
                E::Length { .. } | E::PrefixUnavailable { .. } | E::UnknownKey(_) => exit::DATA,
                E::Mismatch(_) => exit::CHECK_FAILED,
                E::Domain(_) | E::Shape(_) | E::DivisionByZero | E::SizeBound { .. } | E::Refused(_) => {
                    exit::DOMAIN
                }
            },
            CliError::Oeis(e) => match e {
                O::InvalidId(_) => exit::USAGE,
                O::Unavailable(_) | O::Transport { .. } => exit::NETWORK,
                O::NotFound(_) | O::Parse { .. } | O::Corrupt { .. } | O::Io { .. } | O::NoCacheDir => {
                    exit::DATA
                }
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Oeis(e) => write!(f, "{e}"),
            CliError::Data(m) => write!(f, "data error: {m}"),
        }
    }
}

impl From<belltrans::Error> for CliError {
    fn from(e: belltrans::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<belltrans_oeis::Error> for CliError {
    fn from(e: belltrans_oeis::Error) -> Self {
        CliError::Oeis(e)
    }
}
