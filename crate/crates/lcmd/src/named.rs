//! Built-in matrices from the chess-piece examples.

use lcmd_core::IntMatrix;

/// Bishop: `[[1, 1], [1, -1]]`.
pub fn bishop() -> IntMatrix {
    IntMatrix::from_rows(&[[1i64, 1], [1, -1]]).unwrap()
}

/// Queen: the 2×2 identity stacked on the bishop matrix.
pub fn queen() -> IntMatrix {
    IntMatrix::from_rows(&[[1i64, 0], [0, 1], [1, 1], [1, -1]]).unwrap()
}

pub fn queen_transposed() -> IntMatrix {
    queen().transpose()
}

/// Nightrider: `[[1, 2], [2, 1], [1, -2], [2, -1]]`.
pub fn nightrider() -> IntMatrix {
    IntMatrix::from_rows(&[[1i64, 2], [2, 1], [1, -2], [2, -1]]).unwrap()
}

pub const NAMES: [&str; 4] = ["MB", "MQ", "MQT", "MN"];

pub fn lookup(name: &str) -> Option<IntMatrix> {
    match name {
        "MB" => Some(bishop()),
        "MQ" => Some(queen()),
        "MQT" => Some(queen_transposed()),
        "MN" => Some(nightrider()),
        _ => None,
    }
}
