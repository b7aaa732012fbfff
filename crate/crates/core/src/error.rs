use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown letter '{0}'")]
    UnknownLetter(char),
    #[error("letter '{0}' appears more than once in the alphabet")]
    DuplicateLetter(char),
    #[error("letter '{0}' is reserved by the text syntax")]
    ReservedLetter(char),
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("alphabet has {0} letters; at most 255 are supported")]
    AlphabetTooLarge(usize),
    #[error("insertion position {position} is outside 0..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("operands are over different alphabets")]
    AlphabetMismatch,
    #[error("word '{0}' contains a forbidden adjacent pair")]
    InadmissibleInput(String),
    #[error("weight function is not defined at ({m}, {n})")]
    OutOfDomain { m: u32, n: u32 },
    #[error("bound {bound} is too large (maximum {max})")]
    BoundTooLarge { bound: u32, max: u32 },
    #[error("search space of about {estimate} tuples exceeds the ceiling of {ceiling}")]
    SearchSpaceTooLarge { estimate: u128, ceiling: u128 },
    #[error("invalid search parameters: {0}")]
    InvalidSearch(String),
    #[error("invalid adjacency relation: {0}")]
    InvalidRelation(String),
    #[error("invalid weight table: {0}")]
    InvalidTable(String),
    #[error("cannot parse {what} from {text:?}: {reason}")]
    Parse {
        what: &'static str,
        text: String,
        reason: String,
    },
}

impl Error {
    pub(crate) fn parse(what: &'static str, text: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            text: text.to_string(),
            reason: reason.into(),
        }
    }
}
