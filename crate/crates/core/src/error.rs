use alloc::string::String;

/// Everything that can go wrong while building or transforming a flag system.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("connection r{connection} has {found} entries, expected {expected}")]
    BadLength {
        connection: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} connections for rank {rank}, found {found}")]
    ConnectionCount {
        rank: usize,
        expected: usize,
        found: usize,
    },
    #[error("r{connection}({flag}) = {value} is out of range")]
    OutOfRange {
        connection: usize,
        flag: usize,
        value: usize,
    },
    #[error("r{0} is not an involution at flag {1}")]
    NotInvolution(usize, usize),
    #[error("r{0} fixes flag {1}")]
    FixedPoint(usize, usize),
    #[error("r{0} and r{1} do not commute at flag {2}")]
    NonCommuting(usize, usize, usize),
    #[error("r{0} and r{1} agree at flag {2}")]
    NotDisjoint(usize, usize, usize),
    #[error("flag system has {0} components")]
    Disconnected(usize),
    #[error("flag system must have rank >= 1 and at least one flag")]
    Empty,
    #[error("flag {0} is out of range")]
    FlagOutOfRange(usize),
    #[error("letter {0} is not a connection index")]
    BadLetter(usize),
    #[error("ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("operation needs a rank-2 map, got rank {0}")]
    RankNotTwo(usize),
    #[error("operation needs rank >= {needed}, got rank {rank}")]
    RankTooSmall { rank: usize, needed: usize },
    #[error("orientable map with odd Euler characteristic {0}")]
    OddCharacteristicOrientable(i64),
    #[error("Euler characteristic {0} is impossible for a non-orientable surface")]
    ImpossibleCharacteristic(i64),
    #[error("colorable sets are not closed under symmetric difference")]
    ClosureViolation,
    #[error("word does not return to flag {0}")]
    NotAClosedCycle(usize),
    #[error("color set has index above rank {0}")]
    ColorSetOutOfRange(usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("flag map has wrong length or values")]
    BadFlagMap,
    #[error("permutation does not commute with the connections")]
    NotDeck,
    #[error("permutation is not an involution at flag {0}")]
    DeckNotInvolution(usize),
    #[error("permutation fixes flag {0}")]
    HasFixedPoint(usize),
    #[error("u({1}) equals r{0}({1})")]
    ConnectionCollision(usize, usize),
    #[error("map is vertex-bipartite; its Sherk cover is disconnected")]
    VertexBipartite,
    #[error("cell is not an edge of this map")]
    NotAnEdge,
    #[error("cell is not a face of this map")]
    NotAFace,
    #[error("edge is a loop")]
    LoopEdge,
    #[error("faces have different sizes: {0} vs {1}")]
    FaceSizeMismatch(usize, usize),
    #[error("face of flag {0} is glued to itself along an edge")]
    FaceSelfAdjacent(usize),
    #[error("unknown generator {0:?}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("invalid rotation system: {0}")]
    InvalidRotationSystem(String),
    #[error("invalid gluing: {0}")]
    InvalidGluing(String),
    #[error("group and surface differ in orientability")]
    OrientabilityMismatch,
    #[error("this group does not occur on this surface")]
    ExceptionalPair,
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
