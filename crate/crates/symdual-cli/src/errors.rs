use symdual::filtrations::FiltrationError;
use symdual::monomial::MonomialError;
use symdual::numseq::SeqError;
use symdual::points::PointsError;
use symdual::polyalg::PolyError;
use symdual::verify::UnknownTag;

pub const INVALID: u8 = 1;
pub const UNCERTIFIED: u8 = 2;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> CliError {
        CliError {
            code: INVALID,
            message: message.into(),
        }
    }

    fn new(code: u8, e: &impl std::fmt::Display) -> CliError {
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn seq_code(e: &SeqError) -> u8 {
    match e {
        SeqError::UncertifiedSup { .. }
        | SeqError::UncertifiedInf { .. }
        | SeqError::ReferenceTooShort { .. }
        | SeqError::KindMismatch { .. } => UNCERTIFIED,
        SeqError::EmptyWindow | SeqError::NotMonotone(_) | SeqError::Parse(_) => INVALID,
    }
}

fn points_code(e: &PointsError) -> u8 {
    match e {
        PointsError::CapExceeded { .. } | PointsError::JetCapExceeded { .. } | PointsError::HypothesisUnmet(_) => {
            UNCERTIFIED
        }
        PointsError::Seq(s) => seq_code(s),
        _ => INVALID,
    }
}

impl From<SeqError> for CliError {
    fn from(e: SeqError) -> Self {
        CliError::new(seq_code(&e), &e)
    }
}

impl From<PointsError> for CliError {
    fn from(e: PointsError) -> Self {
        CliError::new(points_code(&e), &e)
    }
}

impl From<FiltrationError> for CliError {
    fn from(e: FiltrationError) -> Self {
        let code = match &e {
            FiltrationError::DegreeCapExceeded { .. } | FiltrationError::HypothesisUnmet(_) => UNCERTIFIED,
            FiltrationError::Seq(s) => seq_code(s),
            FiltrationError::Points(p) => points_code(p),
            _ => INVALID,
        };
        CliError::new(code, &e)
    }
}

impl From<MonomialError> for CliError {
    fn from(e: MonomialError) -> Self {
        let code = match &e {
            MonomialError::CapExceeded { .. } => UNCERTIFIED,
            MonomialError::Seq(s) => seq_code(s),
            _ => INVALID,
        };
        CliError::new(code, &e)
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError::new(INVALID, &e)
    }
}

impl From<UnknownTag> for CliError {
    fn from(e: UnknownTag) -> Self {
        CliError::new(INVALID, &e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::invalid(format!("invalid JSON input: {e}"))
    }
}
