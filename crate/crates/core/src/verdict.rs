use std::fmt;

/// Outcome of one check. `Vacuous` carries the reason the hypotheses did
/// not apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Vacuous(String),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        !matches!(self, Verdict::Fail(_))
    }

    pub fn from_failures(failures: Vec<String>) -> Verdict {
        if failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(failures.join("; "))
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(why) => write!(f, "FAIL: {why}"),
            Verdict::Vacuous(why) => write!(f, "vacuous ({why})"),
        }
    }
}
