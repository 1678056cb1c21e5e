//! File formats shared by the `simperm` command-line tool: deterministic
//! DOT and JSON renderings of library values.

pub mod formats;
