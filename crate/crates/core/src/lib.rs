pub mod cyclo;
pub mod freealg;
pub mod groups;
pub mod gt;
pub mod kz;
pub mod reps;
pub mod rigidity;
pub mod scalars;
