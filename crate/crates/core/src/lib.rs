pub mod certify;
pub mod error;
pub mod exactcore;
pub mod families;
pub mod latticecount;
pub mod recurrence;
pub mod series;
