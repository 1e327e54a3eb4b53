use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex not in graph: {0}")]
    VertexNotInGraph(String),

    #[error("hexagonal mesh of dimension {0} does not exist (smallest is HX(2))")]
    HexDimensionTooSmall(u32),

    #[error("{kind} mesh requires r >= 2, got {r}")]
    MeshDimensionTooSmall { kind: &'static str, r: u32 },

    #[error("graph contains non-mesh vertices; face enumeration is defined on bare meshes")]
    NotAMesh,

    #[error("vertex index {index} out of range for graph on {n} vertices")]
    VertexIndexOutOfRange { index: u32, n: usize },

    #[error("self-loop {0} rejected: graphs are simple")]
    SelfLoop(String),

    #[error("table not applicable at r={r}: {detail}")]
    TableNotApplicable { r: u32, detail: String },

    #[error("Balaban undefined (m-n+2=0)")]
    BalabanUndefined,

    #[error("{index} undefined on edge ({u}, {v}): {detail}")]
    DegenerateEdge {
        index: String,
        u: String,
        v: String,
        detail: String,
    },

    #[error("unknown index {name}; known: {known}")]
    UnknownIndex { name: String, known: String },

    #[error("no closed form registered for ({family}, {index})")]
    UnknownClosedForm { family: String, index: String },

    #[error("closed form for ({family}, {index}) evaluated outside stated validity (r={r} < 4)")]
    OutsideValidity {
        family: String,
        index: String,
        r: u32,
    },

    #[error("verification range must satisfy 4 <= r_min <= r_max <= 64, got [{r_min}, {r_max}]")]
    InvalidVerifyRange { r_min: u32, r_max: u32 },

    #[error("{index} has no polynomial form: {detail}")]
    NotPolynomial { index: String, detail: String },

    #[error("unknown family {0}; known: HDN3, THDN3, RHDN3")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
