//! Storing lattices on disk and reading them back.

use isolated_subgroups::harness::cache::{cache_lattice, load_lattice, LatticeCache};
use isolated_subgroups::{all_subgroups, make_group, Limits};

fn main() -> isolated_subgroups::Result<()> {
    let dir = std::env::temp_dir().join(format!("isosub-cache-{}", std::process::id()));
    let cache = LatticeCache::open(&dir)?;
    let limits = Limits::default();
    for orders in [&[2u64, 4][..], &[3, 9], &[2, 2, 2, 2]] {
        let g = make_group(orders)?;
        println!(
            "{orders:?}: cached before? {}",
            load_lattice(&cache, &g).is_some()
        );
        let lattice = all_subgroups(&g, &limits)?;
        cache_lattice(&cache, &lattice)?;
        let back = load_lattice(&cache, &g).expect("just stored");
        println!(
            "  stored {} subgroups at {}",
            back.len(),
            cache.path_for(&g).display()
        );
        assert_eq!(back, lattice);
    }
    // Verification recomputes and compares byte for byte.
    let g = make_group(&[2, 4])?;
    println!(
        "verified hit: {} subgroups",
        cache.lattice(&g, &limits, true)?.len()
    );
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
