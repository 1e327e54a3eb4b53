//! Published edge-partition tables for the three families, stored as data
//! so each row can be audited against the source. A row is
//! `(lo, hi, [c0, c1, c2], den)`: the class of edges whose endpoint values
//! are {lo, hi} is claimed to contain (c0 + c1*r + c2*r^2) / den edges.

pub type RawRow = (u64, u64, [i128; 3], i128);

/// Degree partition of HDN3(r) (source table 1).
pub const HDN3_DEGREE: &[RawRow] = &[
    (4, 4, [18, -36, 18], 1),
    (4, 7, [24, 0, 0], 1),
    (4, 10, [-72, 36, 0], 1),
    (4, 18, [84, -108, 36], 1),
    (7, 10, [12, 0, 0], 1),
    (7, 18, [6, 0, 0], 1),
    (10, 10, [-18, 6, 0], 1),
    (10, 18, [-24, 12, 0], 1),
    (18, 18, [30, -33, 9], 1),
];

/// Degree-sum partition of HDN3(r) (source table 2).
pub const HDN3_DEGREE_SUM: &[RawRow] = &[
    (25, 33, [12, 0, 0], 1),
    (25, 36, [12, 0, 0], 1),
    (25, 54, [12, 0, 0], 1),
    (25, 77, [12, 0, 0], 1),
    (28, 36, [-36, 12, 0], 1),
    (28, 77, [12, 0, 0], 1),
    (28, 80, [-48, 12, 0], 1),
    (33, 36, [12, 0, 0], 1),
    (33, 54, [12, 0, 0], 1),
    (33, 129, [12, 0, 0], 1),
    (36, 36, [-30, 12, 0], 1),
    (36, 44, [-24, 12, 0], 1),
    (36, 77, [48, 0, 0], 1),
    (36, 80, [-96, 24, 0], 1),
    (36, 129, [24, 0, 0], 1),
    (36, 140, [-72, 24, 0], 1),
    (44, 44, [72, -72, 18], 1),
    (44, 129, [36, 0, 0], 1),
    (44, 140, [-144, 48, 0], 1),
    (44, 156, [228, -180, 36], 1),
    (54, 77, [12, 0, 0], 1),
    (54, 129, [6, 0, 0], 1),
    (77, 80, [12, 0, 0], 1),
    (77, 129, [12, 0, 0], 1),
    (77, 140, [12, 0, 0], 1),
    (80, 80, [-30, 6, 0], 1),
    (80, 140, [-48, 12, 0], 1),
    (129, 140, [12, 0, 0], 1),
    (129, 156, [6, 0, 0], 1),
    (140, 140, [-24, 6, 0], 1),
    (140, 156, [-36, 12, 0], 1),
    (156, 156, [72, -51, 9], 1),
];

/// Degree partition of THDN3(r) (source table 3).
pub const THDN3_DEGREE: &[RawRow] = &[
    (4, 4, [9, -6, 3], 1),
    (4, 10, [-30, 18, 0], 1),
    (4, 18, [36, -30, 6], 1),
    (10, 10, [-6, 3, 0], 1),
    (10, 18, [-18, 6, 0], 1),
    (18, 18, [36, -21, 3], 2),
];

/// Degree-sum partition of THDN3(r) (source table 4).
pub const THDN3_DEGREE_SUM: &[RawRow] = &[
    (22, 22, [3, 0, 0], 1),
    (22, 28, [12, 0, 0], 1),
    (22, 36, [6, 0, 0], 1),
    (22, 66, [-12, 6, 0], 1),
    (28, 66, [24, 0, 0], 1),
    (28, 80, [-24, 6, 0], 1),
    (36, 36, [-18, 6, 0], 1),
    (36, 44, [-24, 6, 0], 1),
    (36, 66, [12, 0, 0], 1),
    (36, 80, [-48, 12, 0], 1),
    (36, 124, [24, 0, 0], 1),
    (36, 140, [-60, 12, 0], 1),
    (44, 44, [48, -24, 3], 1),
    (44, 124, [12, 0, 0], 1),
    (44, 140, [-120, 24, 0], 1),
    (44, 156, [180, -66, 6], 1),
    (66, 66, [3, 0, 0], 1),
    (66, 80, [6, 0, 0], 1),
    (66, 124, [6, 0, 0], 1),
    (80, 80, [-15, 3, 0], 1),
    (80, 124, [6, 0, 0], 1),
    (80, 140, [-30, 6, 0], 1),
    (124, 140, [6, 0, 0], 1),
    (140, 140, [-15, 3, 0], 1),
    (140, 156, [-36, 6, 0], 1),
    (156, 156, [126, -39, 3], 2),
];

/// Degree partition of RHDN3(r) (source table 5).
pub const RHDN3_DEGREE: &[RawRow] = &[
    (4, 4, [10, -12, 6], 1),
    (4, 7, [8, 0, 0], 1),
    (4, 10, [-44, 24, 0], 1),
    (4, 18, [48, -48, 12], 1),
    (7, 10, [4, 0, 0], 1),
    (7, 18, [2, 0, 0], 1),
    (10, 10, [-10, 4, 0], 1),
    (10, 18, [-20, 8, 0], 1),
    (18, 18, [21, -16, 3], 1),
];

/// Degree-sum partition of RHDN3(r) (source table 6).
pub const RHDN3_DEGREE_SUM: &[RawRow] = &[
    (22, 22, [2, 0, 0], 1),
    (22, 28, [8, 0, 0], 1),
    (22, 63, [4, 0, 0], 1),
    (25, 33, [4, 0, 0], 1),
    (25, 36, [4, 0, 0], 1),
    (25, 54, [4, 0, 0], 1),
    (25, 63, [4, 0, 0], 1),
    (28, 36, [-20, 8, 0], 1),
    (28, 63, [-12, 8, 0], 1),
    (33, 36, [4, 0, 0], 1),
    (33, 54, [4, 0, 0], 1),
    (33, 129, [4, 0, 0], 1),
    (36, 36, [-22, 8, 0], 1),
    (36, 44, [-24, 8, 0], 1),
    (36, 63, [-40, 16, 0], 1),
    (36, 124, [16, 0, 0], 1),
    (36, 129, [8, 0, 0], 1),
    (36, 140, [-64, 16, 0], 1),
    (44, 44, [54, -36, 6], 1),
    (44, 124, [8, 0, 0], 1),
    (44, 129, [12, 0, 0], 1),
    (44, 140, [-128, 32, 0], 1),
    (44, 156, [192, -96, 12], 1),
    (54, 63, [4, 0, 0], 1),
    (54, 129, [2, 0, 0], 1),
    (63, 63, [-10, 4, 0], 1),
    (63, 124, [8, 0, 0], 1),
    (63, 129, [4, 0, 0], 1),
    (63, 140, [-32, 8, 0], 1),
    (124, 140, [4, 0, 0], 1),
    (129, 140, [4, 0, 0], 1),
    (129, 156, [2, 0, 0], 1),
    (140, 140, [-18, 4, 0], 1),
    (140, 156, [-36, 8, 0], 1),
    (156, 156, [65, -28, 3], 1),
];
