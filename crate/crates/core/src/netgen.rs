//! Synthetic benchmark graphs: a Barabási–Albert generator and a few small
//! analytic fixtures used throughout the tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Parameters for the Barabási–Albert generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BAParams {
    pub n_final: usize,
    /// Edges attached by each arriving node.
    pub m: usize,
    /// Size of the initial seed path.
    pub m0: usize,
    pub seed: u64,
}

impl BAParams {
    /// The benchmark configuration: 1000 nodes grown from a 2-node seed,
    /// two edges per arrival.
    pub fn benchmark(seed: u64) -> Self {
        BAParams {
            n_final: 1000,
            m: 2,
            m0: 2,
            seed,
        }
    }
}

/// Grows a scale-free graph by degree-proportional preferential attachment.
///
/// The seed graph is a path on `m0` nodes, so every initial node has nonzero
/// degree. Each arriving node then connects to `m` distinct existing nodes,
/// sampled with probability proportional to current degree; proposals that
/// repeat a target within one arrival are rejected and redrawn. The edge
/// count is exactly `m0 - 1 + m * (n_final - m0)`.
pub fn ba_network(p: &BAParams) -> Result<Graph> {
    if p.m < 1 {
        return Err(Error::InvalidParam("m must be at least 1".into()));
    }
    if p.m > p.m0 {
        return Err(Error::InvalidParam(format!(
            "m = {} exceeds m0 = {}",
            p.m, p.m0
        )));
    }
    if p.m0 > p.n_final {
        return Err(Error::InvalidParam(format!(
            "m0 = {} exceeds n_final = {}",
            p.m0, p.n_final
        )));
    }
    if p.m0 < 2 && p.n_final > p.m0 {
        // a 1-node seed path has no edges, leaving attachment weights undefined
        return Err(Error::InvalidParam(
            "m0 must be at least 2 to grow beyond the seed".into(),
        ));
    }

    let mut edges: Vec<(NodeId, NodeId)> = (1..p.m0).map(|v| (v - 1, v)).collect();
    // One entry per edge endpoint; uniform draws from this list are
    // degree-proportional draws over nodes.
    let mut endpoints: Vec<NodeId> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut targets: Vec<NodeId> = Vec::with_capacity(p.m);
    for arrival in p.m0..p.n_final {
        targets.clear();
        while targets.len() < p.m {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, arrival));
            endpoints.push(t);
            endpoints.push(arrival);
        }
    }
    Graph::new(p.n_final, edges)
}

/// Named analytic fixtures: `triangle`, `path4`, `star4`, `complete(k)`, and
/// `toy16`, a 10-node example network.
pub fn fixture(name: &str) -> Result<Graph> {
    match name {
        "triangle" => Graph::new(3, [(0, 1), (1, 2), (0, 2)]),
        "path4" => Graph::new(4, [(0, 1), (1, 2), (2, 3)]),
        "star4" => Graph::new(4, [(0, 1), (0, 2), (0, 3)]),
        "toy16" => {
            let edges_1based = [
                (1, 3),
                (1, 4),
                (1, 10),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 7),
                (2, 8),
                (2, 10),
                (4, 6),
                (4, 8),
                (4, 9),
                (5, 6),
                (5, 7),
                (7, 9),
                (8, 10),
            ];
            Graph::new(10, edges_1based.map(|(u, v): (usize, usize)| (u - 1, v - 1)))
        }
        _ => {
            if let Some(k) = name
                .strip_prefix("complete(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|k| k.parse::<usize>().ok())
            {
                let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v)));
                return Graph::new(k, edges);
            }
            Err(Error::UnknownFixture(name.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attack::robustness;

    #[test]
    fn ba_edge_count_follows_construction_rule() {
        let g = ba_network(&BAParams {
            n_final: 4,
            m: 2,
            m0: 2,
            seed: 0,
        })
        .unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 5); // 1 seed edge + 2 + 2
    }

    #[test]
    fn ba_without_growth_is_a_path() {
        let g = ba_network(&BAParams {
            n_final: 3,
            m: 2,
            m0: 3,
            seed: 9,
        })
        .unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn ba_is_deterministic_under_seed() {
        let p = BAParams::benchmark(42);
        let a = ba_network(&p).unwrap();
        let b = ba_network(&p).unwrap();
        assert_eq!(a, b);
        let c = ba_network(&BAParams { seed: 43, ..p }).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn ba_rejects_bad_params() {
        let bad = [
            BAParams { n_final: 10, m: 3, m0: 2, seed: 0 },
            BAParams { n_final: 1, m: 1, m0: 2, seed: 0 },
            BAParams { n_final: 10, m: 1, m0: 1, seed: 0 },
            BAParams { n_final: 10, m: 0, m0: 2, seed: 0 },
        ];
        for p in bad {
            assert!(ba_network(&p).is_err(), "{p:?} should be rejected");
        }
    }

    #[test]
    fn fixtures_have_the_advertised_shapes() {
        assert_eq!(fixture("triangle").unwrap().edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(fixture("path4").unwrap().edge_count(), 3);
        assert_eq!(fixture("star4").unwrap().degree(0), 3);

        let toy = fixture("toy16").unwrap();
        assert_eq!(toy.node_count(), 10);
        assert_eq!(toy.edge_count(), 16);
        assert_eq!(toy.degree(1), 6); // printed node 2

        let k4 = fixture("complete(4)").unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!((robustness(&k4) - 3.0 / 8.0).abs() < 1e-12);
    }

    #[test]
    fn unknown_fixture_is_an_error() {
        assert_eq!(
            fixture("ring"),
            Err(Error::UnknownFixture("ring".to_string()))
        );
        assert!(fixture("complete(x)").is_err());
    }
}
