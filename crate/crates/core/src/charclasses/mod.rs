//! Chern characters of geometric and gauge atoms, the Todd class, Newton
//! identities and pushforward along a curve.

pub mod content;
pub mod gauge;
pub mod newton;
pub mod pushforward;
pub mod todd;

pub use content::{ch_atom, ch_content, ch_geom, ch_rep, wedge_total, Atom, FieldContent, Geom, Parity};
pub use gauge::{GaugeGroup, GaugeRep};
pub use newton::{newton_c_from_ch, newton_ch_from_c, tangent_ch};
pub use pushforward::pushforward_curve;
pub use todd::todd;
