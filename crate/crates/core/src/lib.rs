pub mod exactalg;
pub mod combinat;
pub mod symbols;
pub mod shoji;
pub mod weylchar;
pub mod transition;
pub mod export;
pub mod verify;
