//! Library half of the command-line tool: the text formats and the command
//! implementations (kept out of `main` so they can be tested directly).

pub mod commands;
pub mod config;
pub mod dsl;
pub mod schema;

/// Exit-code contract, fixed for scripting:
/// 0 ok, 1 verification failure, 2 input parity error, 3 open point,
/// 4 domain error (bad bounds, out-of-region, parse errors).
pub mod exit_codes {
    pub const OK: i32 = 0;
    pub const VERIFY_FAILED: i32 = 1;
    pub const PARITY: i32 = 2;
    pub const OPEN_POINT: i32 = 3;
    pub const DOMAIN: i32 = 4;
}
