//! Acceptance criteria for `ffdyn`; everything lives in `tests/acceptance.rs`.
