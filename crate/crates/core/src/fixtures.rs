//! The bundled example posets.

use crate::io::PosetFile;

pub const FIG1: &str = include_str!("../../../fixtures/fig1.poset");
pub const FIG2: &str = include_str!("../../../fixtures/fig2.poset");
pub const FIG3: &str = include_str!("../../../fixtures/fig3.poset");
pub const FIG4: &str = include_str!("../../../fixtures/fig4.poset");

pub const TEXTS: &[(&str, &str)] = &[("fig1", FIG1), ("fig2", FIG2), ("fig3", FIG3), ("fig4", FIG4)];

/// Six elements, not bounded above.
pub fn figure1() -> PosetFile {
    parse(FIG1)
}

/// Complemented, not distributive.
pub fn figure2() -> PosetFile {
    parse(FIG2)
}

/// Boolean, not a lattice.
pub fn figure3() -> PosetFile {
    parse(FIG3)
}

/// Boolean, twelve elements.
pub fn figure4() -> PosetFile {
    parse(FIG4)
}

/// `figure(k)` for `k` in `1..=4`.
pub fn figure(k: usize) -> PosetFile {
    match k {
        1 => figure1(),
        2 => figure2(),
        3 => figure3(),
        4 => figure4(),
        _ => panic!("no figure {k}"),
    }
}

pub fn all() -> Vec<(&'static str, PosetFile)> {
    TEXTS.iter().map(|&(name, text)| (name, parse(text))).collect()
}

/// Looks up a bundled fixture by name, with or without the `.poset` suffix.
pub fn by_name(name: &str) -> Option<&'static str> {
    let stem = name.rsplit('/').next()?.trim_end_matches(".poset");
    TEXTS.iter().find(|(n, _)| *n == stem).map(|(_, t)| *t)
}

fn parse(text: &str) -> PosetFile {
    PosetFile::parse(text).expect("bundled fixture parses")
}
