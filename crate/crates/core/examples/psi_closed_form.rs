//! ψ(G) from the closed form, checked against direct summation where the
//! group is small enough to enumerate.

use isolated_subgroups::group::PPartition;
use isolated_subgroups::harness::parse_group_literal;
use isolated_subgroups::psi::{psi_alt_p, psi_degree};
use isolated_subgroups::{psi_brute, psi_closed, psi_closed_p, Limits};

fn main() -> isolated_subgroups::Result<()> {
    let limits = Limits::default();
    for lit in ["2", "2x4", "3x3", "25", "6", "2x9", "2x2x4", "8x27"] {
        let g = parse_group_literal(lit)?;
        let closed = psi_closed(&g)?;
        let brute = psi_brute(&g, &limits)?;
        println!("psi({lit:>6}) = {closed:>8}   brute force {brute:>8}");
    }

    // Far beyond enumeration: Z_101^2 x Z_101^3 x Z_101^5.
    let t = PPartition::new(101, vec![2, 3, 5])?;
    println!();
    println!("p = 101, exponents [2, 3, 5]");
    println!("  closed form      {}", psi_closed_p(&t)?);
    println!("  alternative form {}", psi_alt_p(&t)?);
    println!("  degree in p      {}", psi_degree(&t));
    Ok(())
}
