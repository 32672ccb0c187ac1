//! Classification statuses and the closed set of non-occurrence reason codes.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Occurs,
    NotOccurs,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Occurs => "OCCURS",
            Status::NotOccurs => "NOT",
            Status::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown {kind} {value:?}")]
pub struct ParseCodeError {
    kind: &'static str,
    value: String,
}

impl FromStr for Status {
    type Err = ParseCodeError;

    fn from_str(s: &str) -> Result<Status, ParseCodeError> {
        match s {
            "OCCURS" => Ok(Status::Occurs),
            "NOT" => Ok(Status::NotOccurs),
            "UNKNOWN" => Ok(Status::Unknown),
            _ => Err(ParseCodeError { kind: "status", value: s.to_string() }),
        }
    }
}

/// Why a graph does not occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reason {
    /// Three vertices spanning no edge.
    P1,
    /// Odd cycle in the complement.
    P2,
    PalfyIneq,
    D3Rho3,
    D3Growth,
    Cut2,
    Reg,
    Deg2,
    Gamma,
    Catalog,
    AdmAll,
}

impl Reason {
    pub const ALL: [Reason; 11] = [
        Reason::P1,
        Reason::P2,
        Reason::PalfyIneq,
        Reason::D3Rho3,
        Reason::D3Growth,
        Reason::Cut2,
        Reason::Reg,
        Reason::Deg2,
        Reason::Gamma,
        Reason::Catalog,
        Reason::AdmAll,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Reason::P1 => "P1",
            Reason::P2 => "P2",
            Reason::PalfyIneq => "PALFY-INEQ",
            Reason::D3Rho3 => "D3-RHO3",
            Reason::D3Growth => "D3-GROWTH",
            Reason::Cut2 => "CUT2",
            Reason::Reg => "REG",
            Reason::Deg2 => "DEG2",
            Reason::Gamma => "GAMMA",
            Reason::Catalog => "CATALOG",
            Reason::AdmAll => "ADM-ALL",
        }
    }

    pub fn is_filter(self) -> bool {
        matches!(self, Reason::P1 | Reason::P2)
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Reason {
    type Err = ParseCodeError;

    fn from_str(s: &str) -> Result<Reason, ParseCodeError> {
        Reason::ALL
            .into_iter()
            .find(|r| r.code() == s)
            .ok_or_else(|| ParseCodeError { kind: "reason code", value: s.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for r in Reason::ALL {
            assert_eq!(r.code().parse::<Reason>(), Ok(r));
        }
        for s in [Status::Occurs, Status::NotOccurs, Status::Unknown] {
            assert_eq!(s.as_str().parse::<Status>(), Ok(s));
        }
        assert!("JOIN".parse::<Reason>().is_err());
    }
}
