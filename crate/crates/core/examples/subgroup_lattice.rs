//! The full subgroup lattice of a small group, listed by order.

use isolated_subgroups::harness::literal::format_generators;
use isolated_subgroups::harness::{group_literal, parse_group_literal};
use isolated_subgroups::lattice::subgroups_of_order;
use isolated_subgroups::{all_cyclic_subgroups, all_subgroups, Limits};

fn main() -> isolated_subgroups::Result<()> {
    let lit = std::env::args().nth(1).unwrap_or_else(|| "2x4".to_string());
    let g = parse_group_literal(&lit)?;
    let limits = Limits::default();
    let lattice = all_subgroups(&g, &limits)?;
    let cyclic = all_cyclic_subgroups(&g, &limits)?;
    println!("G = {} (order {})", group_literal(&g), g.order());
    println!(
        "{} subgroups, {} of them cyclic",
        lattice.len(),
        cyclic.len()
    );
    for h in &lattice.subgroups {
        let tag = if cyclic.contains(h) { "cyclic" } else { "" };
        println!(
            "  |H| = {:>3}  <{}>  {tag}",
            h.order(),
            format_generators(&h.canonical_generators())
        );
    }
    for p in g.primes() {
        println!(
            "subgroups of order {p}: {}",
            subgroups_of_order(&lattice, p).len()
        );
    }
    Ok(())
}
