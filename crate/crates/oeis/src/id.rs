use std::fmt;
use std::str::FromStr;

use crate::Error;

/// An A-number such as `A000108`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OeisId(u32);

impl OeisId {
    pub fn new(number: u32) -> Option<Self> {
        (number <= 999_999).then_some(OeisId(number))
    }

    pub fn number(self) -> u32 {
        self.0
    }

    /// `https://oeis.org/A000108/b000108.txt`
    pub fn bfile_url(self) -> String {
        format!("https://oeis.org/{self}/b{:06}.txt", self.0)
    }

    /// JSON search endpoint for exactly this entry.
    pub fn json_url(self) -> String {
        format!("https://oeis.org/search?q=id:{self}&fmt=json")
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}

impl FromStr for OeisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let digits = s
            .strip_prefix('A')
            .filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| Error::InvalidId(s.to_string()))?;
        Ok(OeisId(digits.parse().expect("six ascii digits")))
    }
}
