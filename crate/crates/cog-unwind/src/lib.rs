//! Rieger unwinding and winding: the correspondence between cyclically
//! ordered groups and pairs (totally ordered group, central cofinal z).

mod checks;
mod unwound;
mod wind;

pub use checks::{
    check_substructure_functoriality, uw_center_check, uw_lex_compat_check,
    verify_rieger_roundtrip, verify_unwind_wind_int, CenterReport, LexCompatReport,
    RoundtripWitness,
};
pub use unwound::{unwind, UnwoundElement, UnwoundGroup};
pub use wind::{wind_int, wind_unwound};
