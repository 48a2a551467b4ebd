use std::fmt;
use std::str::FromStr;

/// An inclusive integer range written `a..b`, `a..=b` or just `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl Range {
    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |p: &str| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad range bound {p:?} (expected forms: 4, 2..9, 2..=9)"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo == 0 || lo > hi {
            return Err(format!(
                "range {s:?} must be nonempty and start at 1 or more"
            ));
        }
        Ok(Range { lo, hi })
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}
