use alloc::string::String;

/// Failures raised by the algebra, geometry, surface and parametrization layers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid algebra descriptor: {0}")]
    InvalidDescriptor(&'static str),
    #[error("operands belong to different algebras")]
    DescriptorMismatch,
    #[error("entries do not fit the ground ring: {0}")]
    InvalidEntries(String),
    #[error("element is not positive")]
    NotPositive,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("element is not unitary")]
    NotUnitary,
    #[error("matrix is not in Sp2 (residual {residual:e})")]
    NotSymplectic { residual: f64 },
    #[error("product left Sp2 (residual {residual:e})")]
    MembershipDrift { residual: f64 },
    #[error("point is not in the tube domain")]
    NotInTube,
    #[error("Moebius denominator is singular")]
    SingularDenominator,
    #[error("vector is not regular")]
    NotRegular,
    #[error("vector is not isotropic (residual {residual:e})")]
    NotIsotropic { residual: f64 },
    #[error("lines are not transverse")]
    NotTransverse,
    #[error("triple is not maximal")]
    NotMaximal,
    #[error("quadruple is not positive")]
    NotPositiveQuadruple,
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("triangles do not form a connected domain")]
    DisconnectedDomain,
    #[error("bad pairing: {0}")]
    BadPairing(String),
    #[error("euler characteristic audit failed: {0}")]
    EulerMismatch(String),
    #[error("vertex {to} is unreachable from {from}")]
    Unreachable { from: usize, to: usize },
    #[error("cycle closure failed (residual {residual:e})")]
    CycleClosureFailure { residual: f64 },
    #[error("framing is inconsistent at corner {corner}")]
    InconsistentFraming { corner: u32 },
    #[error("framing is not equivariant across pairing {pairing}")]
    NotEquivariant { pairing: usize },
    #[error("coordinate domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(usize),
    #[error("size mismatch")]
    SizeMismatch,
}

impl Error {
    /// Stable variant name for machine-readable reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidDescriptor(..) => "InvalidDescriptor",
            Error::DescriptorMismatch => "DescriptorMismatch",
            Error::InvalidEntries(..) => "InvalidEntries",
            Error::NotPositive => "NotPositive",
            Error::NotInvertible => "NotInvertible",
            Error::NotUnitary => "NotUnitary",
            Error::NotSymplectic { .. } => "NotSymplectic",
            Error::MembershipDrift { .. } => "MembershipDrift",
            Error::NotInTube => "NotInTube",
            Error::SingularDenominator => "SingularDenominator",
            Error::NotRegular => "NotRegular",
            Error::NotIsotropic { .. } => "NotIsotropic",
            Error::NotTransverse => "NotTransverse",
            Error::NotMaximal => "NotMaximal",
            Error::NotPositiveQuadruple => "NotPositiveQuadruple",
            Error::InvalidSurface(..) => "InvalidSurface",
            Error::DisconnectedDomain => "DisconnectedDomain",
            Error::BadPairing(..) => "BadPairing",
            Error::EulerMismatch(..) => "EulerMismatch",
            Error::Unreachable { .. } => "Unreachable",
            Error::CycleClosureFailure { .. } => "CycleClosureFailure",
            Error::InconsistentFraming { .. } => "InconsistentFraming",
            Error::NotEquivariant { .. } => "NotEquivariant",
            Error::DomainMismatch(..) => "DomainMismatch",
            Error::UnknownGenerator(..) => "UnknownGenerator",
            Error::SizeMismatch => "SizeMismatch",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
