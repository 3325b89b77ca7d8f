//! Quotient invariants from the Smith normal form of a presentation matrix.

use isolated_subgroups::harness::{group_literal, parse_group_literal, parse_subgroup};
use isolated_subgroups::snf::presentation_matrix;
use isolated_subgroups::{quotient_type, smith_normal_form, subgroup_type};

fn main() -> isolated_subgroups::Result<()> {
    println!(
        "snf [[2,4,4],[-6,6,12],[10,-4,-16]] = {:?}",
        smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16],])?
    );
    for (lit, gens) in [
        ("2x4", "(1,2)"),
        ("2x4", "(0,2)"),
        ("4x4", "(1,1)"),
        ("2x4x3x9", "(1,2,1,3)"),
    ] {
        let g = parse_group_literal(lit)?;
        let h = parse_subgroup(&g, gens)?;
        let m = presentation_matrix(&g, &h)?;
        println!(
            "G = {lit:<8} H = <{gens}>  H ~ {:<6} G/H ~ {:<6} factors {:?}",
            group_literal(&subgroup_type(&h)?),
            group_literal(&quotient_type(&g, &h)?),
            smith_normal_form(&m)?
                .into_iter()
                .filter(|&d| d != 1)
                .collect::<Vec<_>>()
        );
    }
    Ok(())
}
