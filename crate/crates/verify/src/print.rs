//! `--mode print`: everything the engine knows about one permutation, as text.

use std::fmt::Write as _;

use groth_core::perm::{is_fireworks, is_zero_one, rajcode, rothe_diagram};
use groth_core::polytope::{recover_pair, superset_sumset, LatticeSet, SUMSET_LIMIT};
use groth_core::poset::{build_pw, VectorPoset};
use groth_core::poly::{grothendieck, schubert};
use groth_core::Permutation;

use crate::format::{hasse_to_text, lattice_set_to_text, one_line, pair_to_text, polynomial_to_text};

pub fn describe(w: &Permutation) -> groth_core::Result<String> {
    let g = grothendieck(w)?;
    let s = schubert(w)?;
    let closure = rothe_diagram(w).upper_closure();
    let support = LatticeSet::support_of(&g);

    let mut out = String::new();
    let mut line = |key: &str, value: &dyn std::fmt::Display| writeln!(out, "{key} {value}").unwrap();
    line("permutation", &one_line(w));
    line("length", &w.length());
    line("degree", &g.degree()?);
    line("rajcode", &rajcode(w)?);
    line("closure_weight", &closure.weight()?);
    line("fireworks", &is_fireworks(w));
    line("zero_one", &is_zero_one(w));
    line("grothendieck", &polynomial_to_text(&g));
    line("schubert", &polynomial_to_text(&s));

    out.push_str("\n[support]\n");
    out.push_str(&lattice_set_to_text(&support));
    out.push_str("\n[support hasse]\n");
    out.push_str(&hasse_to_text(&VectorPoset::new(support.iter().copied(), false)?.covers()));
    out.push_str("\n[P_w hasse]\n");
    out.push_str(&hasse_to_text(&build_pw(w, &g)?.covers()));
    out.push_str("\n[recovered pair]\n");
    out.push_str(&pair_to_text(&recover_pair(&support)?));
    if w.n() <= SUMSET_LIMIT {
        out.push_str("\n[spanning sumset]\n");
        out.push_str(&lattice_set_to_text(&superset_sumset(w)?));
    }
    Ok(out)
}
