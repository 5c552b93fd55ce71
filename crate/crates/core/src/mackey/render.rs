//! Plain-text Lewis diagrams.
//!
//! ```text
//! C_2-Mackey functor
//!   fixed       Z                 [Z^1]
//!                 | ^
//!     res [1]     | |     tr [2]
//!                 v |
//!   underlying  Z                 [Z^1]
//!     conj [1]
//! ```
//!
//! Each level shows its isomorphism type followed by the presentation in
//! brackets (`Z^n` for free, `coker [...]` otherwise).

use std::fmt;

use super::{CpMackeyFunctor, MackeyHom};

fn level_line(label: &str, g: &crate::FgAbGroup) -> String {
    format!("  {label:<11} {:<17} [{g}]", g.describe())
}

impl fmt::Display for CpMackeyFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "C_{}-Mackey functor", self.prime())?;
        writeln!(f, "{}", level_line("fixed", self.fixed()))?;
        writeln!(f, "                | ^")?;
        writeln!(
            f,
            "    res {:<8} | |     tr {}",
            self.res().to_string(),
            self.tr()
        )?;
        writeln!(f, "                v |")?;
        writeln!(f, "{}", level_line("underlying", self.underlying()))?;
        write!(f, "    conj {}", self.conj())
    }
}

/// Renders both level maps of a homomorphism between two diagrams.
pub fn render_hom(h: &MackeyHom) -> String {
    format!(
        "C_{}-Mackey homomorphism\n  fixed       {} -> {}   {}\n  underlying  {} -> {}   {}",
        h.prime(),
        h.source().fixed().describe(),
        h.target().fixed().describe(),
        h.fixed_map(),
        h.source().underlying().describe(),
        h.target().underlying().describe(),
        h.underlying_map(),
    )
}

impl fmt::Display for MackeyHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_hom(self))
    }
}
