//! Graph and ideal corpora shared by the benchmarks.

use reeslin::graphs::{attach, standard_family, Family};
use reeslin::{cover_ideal, Graph, MonomialIdeal};

/// Named graphs of moderate size, cheap enough to run per iteration.
pub fn graph_corpus() -> Vec<(String, Graph)> {
    let family = |f: Family| standard_family(f).expect("valid family parameters");
    let k2 = family(Family::Path(2));
    vec![
        ("path5".into(), family(Family::Path(5))),
        ("cycle6".into(), family(Family::Cycle(6))),
        ("star4".into(), family(Family::Star(4))),
        ("fan4".into(), family(Family::Fan(4))),
        ("friendship2".into(), family(Family::Friendship(2))),
        (
            "k2_whiskered".into(),
            attach(&k2, &[k2.clone(), k2.clone()]).expect("two hosts"),
        ),
    ]
}

pub fn ideal_corpus() -> Vec<(String, MonomialIdeal)> {
    graph_corpus()
        .into_iter()
        .map(|(name, g)| (name, cover_ideal(&g)))
        .collect()
}
