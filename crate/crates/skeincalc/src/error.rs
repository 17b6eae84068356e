use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("family {0} relator needs k3")]
    MissingK3(u8),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("identity `{identity}` has no parameter `{param}`")]
    UnknownParam { identity: String, param: String },

    #[error("term limit {0} exceeded during reduction")]
    TermLimit(usize),

    #[error("rewriting measure failed to decrease: {0}")]
    NonTermination(String),

    #[error("parse error: {0}")]
    Parse(String),
}
