//! Memetic search for the set of edges whose removal hurts robustness most.
//!
//! An individual is a set of exactly `cost` distinct edge ids; its fitness is
//! the robustness R of the base graph with those edges removed (lower is
//! better, minimization). Each generation pairs the parents at random and
//! recombines their non-common edges, then refines roulette-selected
//! individuals with a degree-guided local search, and finally runs pairwise
//! parent/child tournaments to form the next generation.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::attack::robustness_after_removal;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Tie-break floor for roulette weights; keeps a uniform wheel when every
/// individual has the same fitness.
const ROULETTE_EPS: f64 = 1e-9;

/// A candidate removal set of fixed size, with its robustness cached once
/// evaluated. Mutating operators invalidate the cache.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    /// Sorted, distinct edge ids.
    removed: Vec<EdgeId>,
    fitness: Option<f64>,
}

impl Individual {
    /// Builds an individual from edge ids of `g`, validating and sorting them.
    pub fn new(g: &Graph, mut removed: Vec<EdgeId>) -> Result<Self> {
        g.edge_mask(&removed)?; // range + duplicate validation
        removed.sort_unstable();
        Ok(Individual {
            removed,
            fitness: None,
        })
    }

    fn from_sorted(removed: Vec<EdgeId>) -> Self {
        debug_assert!(removed.windows(2).all(|w| w[0] < w[1]));
        Individual {
            removed,
            fitness: None,
        }
    }

    /// The removal set, ascending.
    pub fn removed(&self) -> &[EdgeId] {
        &self.removed
    }

    pub fn cost(&self) -> usize {
        self.removed.len()
    }

    /// Cached robustness, if evaluated since the last mutation.
    pub fn fitness(&self) -> Option<f64> {
        self.fitness
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.removed.binary_search(&e).is_ok()
    }

    /// Swaps `out` for `inn`, keeping the set sorted; drops the cache.
    fn replace(&mut self, out: EdgeId, inn: EdgeId) {
        let pos = self
            .removed
            .binary_search(&out)
            .expect("outgoing edge must be present");
        self.removed.remove(pos);
        let ins = self
            .removed
            .binary_search(&inn)
            .expect_err("incoming edge must be absent");
        self.removed.insert(ins, inn);
        self.fitness = None;
    }
}

/// Memetic algorithm parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MAParams {
    /// Population size; must be even and at least 2.
    pub population_size: usize,
    /// Per-index swap probability in crossover.
    pub crossover_prob: f64,
    /// Per-edge mutation probability in local search.
    pub local_search_prob: f64,
    /// Degree-disparity weight in the local-search acceptance rule.
    pub mu: f64,
    /// Number of generations.
    pub generations: usize,
    /// Removal-set size.
    pub cost: usize,
    pub seed: u64,
    /// Guarantee the best of parents and children a slot each generation.
    pub elitism: bool,
}

impl MAParams {
    /// Stock configuration for a given cost: population 20, crossover 0.8,
    /// local search min(1, 5/cost), mu 0.7, 500 generations.
    pub fn for_cost(cost: usize) -> Self {
        MAParams {
            population_size: 20,
            crossover_prob: 0.8,
            local_search_prob: (5.0 / cost as f64).min(1.0),
            mu: 0.7,
            generations: 500,
            cost,
            seed: 0,
            elitism: true,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.population_size < 2 || !self.population_size.is_multiple_of(2) {
            return Err(Error::InvalidParam(format!(
                "population size {} must be even and at least 2",
                self.population_size
            )));
        }
        for (name, p) in [
            ("crossover_prob", self.crossover_prob),
            ("local_search_prob", self.local_search_prob),
            ("mu", self.mu),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParam(format!("{name} = {p} outside [0, 1]")));
            }
        }
        if self.cost > g.edge_count() {
            return Err(Error::InvalidParam(format!(
                "cost {} exceeds edge count {}",
                self.cost,
                g.edge_count()
            )));
        }
        Ok(())
    }
}

/// Outcome of a memetic run.
#[derive(Debug, Clone)]
pub struct RunReport {
    /// The best individual ever evaluated.
    pub best: Individual,
    pub best_r: f64,
    /// Best fitness in the population after initialization and after each
    /// generation (`generations + 1` entries).
    pub history: Vec<f64>,
    /// Number of robustness evaluations performed.
    pub evaluations: u64,
    pub elapsed: Duration,
}

/// Draws a population of uniformly random removal sets of size `cost`.
pub fn init_population<R: Rng>(g: &Graph, params: &MAParams, rng: &mut R) -> Result<Vec<Individual>> {
    params.validate(g)?;
    let m = g.edge_count();
    Ok((0..params.population_size)
        .map(|_| {
            let mut ids = rand::seq::index::sample(rng, m, params.cost).into_vec();
            ids.sort_unstable();
            Individual::from_sorted(ids)
        })
        .collect())
}

/// Robustness of the base graph minus the individual's edges, cached on the
/// individual. The individual must refer to edges of `g`.
pub fn evaluate_fitness(g: &Graph, ind: &mut Individual) -> f64 {
    if let Some(f) = ind.fitness {
        return f;
    }
    let f = robustness_after_removal(g, &ind.removed)
        .expect("individual must hold valid edge ids for this graph");
    ind.fitness = Some(f);
    f
}

/// Recombines two parents of equal cost.
///
/// The common edges stay put in both children. The non-common edges of each
/// parent are paired positionally in ascending edge-id order, and each pair
/// is swapped between the children independently with probability `crossover_prob`.
/// Both children keep exactly `cost` distinct edges by construction.
pub fn crossover<R: Rng>(
    p1: &Individual,
    p2: &Individual,
    crossover_prob: f64,
    rng: &mut R,
) -> Result<(Individual, Individual)> {
    if p1.cost() != p2.cost() {
        return Err(Error::InvalidParam(format!(
            "parents have different costs ({} vs {})",
            p1.cost(),
            p2.cost()
        )));
    }
    let only1 = sorted_difference(&p1.removed, &p2.removed);
    let only2 = sorted_difference(&p2.removed, &p1.removed);
    let mask: Vec<bool> = (0..only1.len()).map(|_| rng.gen::<f64>() < crossover_prob).collect();
    Ok(apply_swaps(p1, p2, &only1, &only2, &mask))
}

fn apply_swaps(
    p1: &Individual,
    p2: &Individual,
    only1: &[EdgeId],
    only2: &[EdgeId],
    mask: &[bool],
) -> (Individual, Individual) {
    let mut c1 = p1.clone();
    let mut c2 = p2.clone();
    for i in 0..mask.len() {
        if mask[i] {
            c1.replace(only1[i], only2[i]);
            c2.replace(only2[i], only1[i]);
        }
    }
    (c1, c2)
}

/// Elements of sorted `a` not in sorted `b`.
fn sorted_difference(a: &[EdgeId], b: &[EdgeId]) -> Vec<EdgeId> {
    let mut out = Vec::new();
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j >= b.len() || b[j] != x {
            out.push(x);
        }
    }
    out
}

/// Acceptance rule for replacing edge (i,j) by candidate (l,m): the move is
/// taken when `mu * |k_l - k_m| > |k_i - k_j|`, degrees read from the intact
/// base graph.
fn accepts_move(mu: f64, out_gap: usize, in_gap: usize) -> bool {
    mu * in_gap as f64 - out_gap as f64 > 0.0
}

/// One local-search sweep over an individual.
///
/// Each edge of a pre-sweep snapshot (ascending edge id) is considered with
/// probability `search_prob`; a uniformly drawn edge of `g` outside the individual
/// replaces it if the candidate's endpoint-degree gap beats the incumbent's
/// per the `mu` rule. With no candidate edges (cost = edge count) the sweep
/// is a no-op.
pub fn local_search<R: Rng>(
    g: &Graph,
    ind: &Individual,
    search_prob: f64,
    mu: f64,
    rng: &mut R,
) -> Individual {
    let mut out = ind.clone();
    let m = g.edge_count();
    let snapshot = out.removed.clone();
    for &edge in &snapshot {
        if rng.gen::<f64>() >= search_prob {
            continue;
        }
        let absent = m - out.cost();
        if absent == 0 {
            continue;
        }
        let candidate = nth_absent_edge(&out.removed, rng.gen_range(0..absent));
        let (i, j) = g.endpoints(edge);
        let (l, mm) = g.endpoints(candidate);
        let out_gap = g.degree(i).abs_diff(g.degree(j));
        let in_gap = g.degree(l).abs_diff(g.degree(mm));
        if accepts_move(mu, out_gap, in_gap) {
            out.replace(edge, candidate);
        }
    }
    out
}

/// The `k`-th smallest edge id not present in the sorted set.
fn nth_absent_edge(sorted: &[EdgeId], k: usize) -> EdgeId {
    let mut id = k;
    for &r in sorted {
        if r <= id {
            id += 1;
        } else {
            break;
        }
    }
    id
}

/// Roulette-wheel draw over a pool of evaluated individuals, weighted for
/// minimization: w = f_max - f + eps. Returns the index of the pick.
pub fn roulette_select<R: Rng>(pool: &[Individual], rng: &mut R) -> Result<usize> {
    if pool.is_empty() {
        return Err(Error::EmptyPool);
    }
    let fitness: Vec<f64> = pool
        .iter()
        .map(|ind| ind.fitness.ok_or(Error::FitnessNotCached))
        .collect::<Result<_>>()?;
    Ok(wheel_index(&fitness, rng))
}

fn wheel_index<R: Rng>(fitness: &[f64], rng: &mut R) -> usize {
    let f_max = fitness.iter().cloned().fold(f64::MIN, f64::max);
    let weights: Vec<f64> = fitness.iter().map(|f| f_max - f + ROULETTE_EPS).collect();
    let total: f64 = weights.iter().sum();
    let target = rng.gen::<f64>() * total;
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if target < acc {
            return i;
        }
    }
    fitness.len() - 1
}

/// Pairwise parent/child tournaments: `population_size` times, one uniform
/// pick from each side, the lower robustness survives (parent wins ties).
/// With `elitist` set, a slot is guaranteed to the best individual over both
/// populations.
pub fn tournament_select<R: Rng>(
    parents: &[Individual],
    children: &[Individual],
    elitist: bool,
    rng: &mut R,
) -> Result<Vec<Individual>> {
    if parents.is_empty() {
        return Err(Error::EmptyPool);
    }
    if parents.len() != children.len() {
        return Err(Error::InvalidParam(format!(
            "parent and child populations differ in size ({} vs {})",
            parents.len(),
            children.len()
        )));
    }
    let pop_size = parents.len();
    let fit = |ind: &Individual| ind.fitness.ok_or(Error::FitnessNotCached);
    for ind in parents.iter().chain(children) {
        fit(ind)?;
    }

    let mut next = Vec::with_capacity(pop_size);
    for _ in 0..pop_size {
        let p = &parents[rng.gen_range(0..pop_size)];
        let c = &children[rng.gen_range(0..pop_size)];
        next.push(if fit(p)? <= fit(c)? { p.clone() } else { c.clone() });
    }

    if elitist {
        let best = parents
            .iter()
            .chain(children)
            .min_by(|a, b| a.fitness.partial_cmp(&b.fitness).unwrap())
            .expect("populations are non-empty");
        let best_r = best.fitness.unwrap();
        if !next.iter().any(|ind| ind.fitness == Some(best_r)) {
            let worst = next
                .iter()
                .enumerate()
                .max_by(|(_, a), (_, b)| a.fitness.partial_cmp(&b.fitness).unwrap())
                .map(|(i, _)| i)
                .unwrap();
            next[worst] = best.clone();
        }
    }
    Ok(next)
}

/// Runs the full memetic loop and reports the best removal set found.
///
/// Per generation: parents are paired randomly without replacement and each
/// pair produces two children via [`crossover`]; then `2 * population_size`
/// roulette draws over the combined parent/child pool each apply one
/// [`local_search`] sweep to the drawn individual in place (mutated
/// individuals are re-evaluated immediately so the wheel always sees current
/// fitness); finally [`tournament_select`] forms the next generation. Under
/// elitism the best individual found so far is guaranteed a slot in every
/// generation, making the reported history non-increasing.
pub fn run_ma(g: &Graph, params: &MAParams) -> Result<RunReport> {
    params.validate(g)?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut evaluations = 0u64;

    let evaluate = |ind: &mut Individual, evals: &mut u64| -> f64 {
        if ind.fitness.is_none() {
            *evals += 1;
        }
        evaluate_fitness(g, ind)
    };

    let mut population = init_population(g, params, &mut rng)?;
    let mut best: Option<Individual> = None;
    for ind in &mut population {
        evaluate(ind, &mut evaluations);
        track_best(&mut best, ind);
    }
    let mut history = vec![population_best(&population)];

    let pop_size = params.population_size;
    for _ in 0..params.generations {
        // pair parents randomly without replacement
        let mut order: Vec<usize> = (0..pop_size).collect();
        order.shuffle(&mut rng);
        let mut children = Vec::with_capacity(pop_size);
        for pair in order.chunks_exact(2) {
            let (a, b) = crossover(
                &population[pair[0]],
                &population[pair[1]],
                params.crossover_prob,
                &mut rng,
            )?;
            children.push(a);
            children.push(b);
        }
        for child in &mut children {
            evaluate(child, &mut evaluations);
            track_best(&mut best, child);
        }

        // Local-search phase over the combined pool. The wheel runs on a
        // fitness snapshot: robustness is recalculated for everything only
        // after the whole phase, mirroring the selection/update ordering of
        // the generation loop.
        let mut pool = population;
        pool.append(&mut children);
        let snapshot: Vec<f64> = pool.iter().map(|ind| ind.fitness.unwrap()).collect();
        for _ in 0..2 * pop_size {
            let idx = wheel_index(&snapshot, &mut rng);
            pool[idx] =
                local_search(g, &pool[idx], params.local_search_prob, params.mu, &mut rng);
        }
        for ind in &mut pool {
            evaluate(ind, &mut evaluations);
            track_best(&mut best, ind);
        }

        let children = pool.split_off(pop_size);
        let parents = pool;
        population = tournament_select(&parents, &children, params.elitism, &mut rng)?;

        // The in-place local search can mutate the incumbent best away before
        // the tournament ever sees it; re-seat the best-ever individual so the
        // reported history cannot regress.
        if params.elitism {
            let best_ind = best.as_ref().expect("best is set after initialization");
            if population_best(&population) > best_ind.fitness.unwrap() {
                let worst = population
                    .iter()
                    .enumerate()
                    .max_by(|(_, a), (_, b)| a.fitness.partial_cmp(&b.fitness).unwrap())
                    .map(|(i, _)| i)
                    .unwrap();
                population[worst] = best_ind.clone();
            }
        }
        history.push(population_best(&population));
    }

    let best = best.expect("population is non-empty");
    let best_r = best.fitness.unwrap();
    Ok(RunReport {
        best,
        best_r,
        history,
        evaluations,
        elapsed: start.elapsed(),
    })
}

fn population_best(population: &[Individual]) -> f64 {
    population
        .iter()
        .filter_map(|ind| ind.fitness)
        .fold(f64::INFINITY, f64::min)
}

fn track_best(best: &mut Option<Individual>, candidate: &Individual) {
    let better = match best {
        None => true,
        Some(b) => candidate.fitness < b.fitness,
    };
    if better {
        *best = Some(candidate.clone());
    }
}
