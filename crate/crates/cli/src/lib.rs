//! Record types shared between the `morph` binary and its integration tests.

pub mod records;
