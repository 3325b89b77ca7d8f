//! Isolated subgroups decided three ways, and the counterexample showing
//! that isolation is not componentwise across coprime factors.

use isolated_subgroups::harness::literal::format_generators;
use isolated_subgroups::harness::parse_group_literal;
use isolated_subgroups::isolation::is_isolated_componentwise;
use isolated_subgroups::{all_subgroups, is_isolated, make_group, Limits, Method, Subgroup};

fn main() -> isolated_subgroups::Result<()> {
    let limits = Limits::default();
    let g = parse_group_literal("2x2x4")?;
    println!("isolated subgroups of Z_2 x Z_2 x Z_4");
    for h in all_subgroups(&g, &limits)?.subgroups {
        let verdicts: Vec<bool> = [Method::Definition, Method::PsiCriterion, Method::Structural]
            .iter()
            .map(|&m| is_isolated(&g, &h, m, &limits).map(|v| v.isolated))
            .collect::<Result<_, _>>()?;
        assert!(verdicts.iter().all(|&v| v == verdicts[0]));
        if verdicts[0] {
            println!(
                "  |H| = {:>2}  <{}>",
                h.order(),
                format_generators(&h.canonical_generators())
            );
        }
    }

    let g = make_group(&[4, 9])?;
    let h = Subgroup::generated_by(&g, &[g.element(&[1, 0])?])?;
    let v = is_isolated(&g, &h, Method::Definition, &limits)?;
    println!();
    println!("Z_4 x Z_9 with H = Z_4 x 1");
    println!(
        "  componentwise verdict  {}",
        is_isolated_componentwise(&g, &h, &limits)?
    );
    println!("  definition             {}", v.isolated);
    if let Some(x) = v.witness {
        println!("  witness {x}: not in H, yet <x> meets H in order 4");
    }
    Ok(())
}
