//! Runs every fenced Rust snippet in the guide as a doc-test, so the book
//! cannot drift from the library API.
//!
//! Each chapter of `book/src` is included verbatim as the documentation of
//! an empty module; `cargo test -p book-tests` then compiles and runs all
//! of its ```rust blocks.

#[doc = include_str!("../../../book/src/overview.md")]
pub mod overview {}

#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}

#[doc = include_str!("../../../book/src/codes.md")]
pub mod codes {}

#[doc = include_str!("../../../book/src/hierarchy.md")]
pub mod hierarchy {}

#[doc = include_str!("../../../book/src/trace-forms.md")]
pub mod trace_forms {}

#[doc = include_str!("../../../book/src/curves.md")]
pub mod curves {}

#[doc = include_str!("../../../book/src/maximal.md")]
pub mod maximal {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
