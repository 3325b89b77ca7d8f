//! Subgroups of a direct product from Goursat data, compared with join
//! closure.

use std::time::Instant;

use isolated_subgroups::{all_subgroups, goursat_subgroups, make_group, Limits};

fn main() -> isolated_subgroups::Result<()> {
    let limits = Limits::default();
    for (a, b) in [
        (&[2u64][..], &[2u64][..]),
        (&[2], &[4]),
        (&[4], &[6]),
        (&[2, 2], &[2, 2]),
        (&[8], &[8]),
    ] {
        let (g1, g2) = (make_group(a)?, make_group(b)?);
        let t = Instant::now();
        let gs = goursat_subgroups(&g1, &g2, &limits)?;
        let goursat_time = t.elapsed();
        let t = Instant::now();
        let js = all_subgroups(&gs.parent, &limits)?;
        let join_time = t.elapsed();
        println!(
            "{a:?} x {b:?}: {} subgroups ({goursat_time:?}), join closure {} ({join_time:?}), equal: {}",
            gs.len(),
            js.len(),
            gs.same_subgroups(&js)
        );
    }
    Ok(())
}
