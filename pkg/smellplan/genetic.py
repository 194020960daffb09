# Copyright (c) 2026. smellplan developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Genetic search over refactoring plans (permutations of action ids).

Every random decision for slot `k` of generation `g` is drawn from its
own stream, spawned from the master seed with key (g, k), so results do
not depend on evaluation order.
"""

from collections import namedtuple

import networkx as nx
import numpy as np
from tqdm import tqdm

from .ordering import PrecedenceGraph
from .planner import (
    PlanScorer, RefactoringPlan, NoActionsError, brute_force_best,
    BRUTE_FORCE_LIMIT, DEFAULT_PENALTY)
from .utils import AnalysisError, get_logger, is_permutation

logger = get_logger(__name__)


class InvalidCutsError(AnalysisError):
    def __init__(self, cut1, cut2, n):
        AnalysisError.__init__(
            self, "Invalid crossover cuts (%r, %r) for length %d; "
                  "expected 0 <= cut1 < cut2 < n" % (cut1, cut2, n))


class InvalidGAConfigError(AnalysisError):
    pass


class GAConfig(namedtuple("GAConfig", [
        "population_size",
        "generations",
        "crossover_prob",
        "mutation_prob",
        "elite_count",
        "tournament_size",
        "seed",
        "penalty",
        "stop_at_optimum",
        "seed_population"])):
    """
    Parameters
    ----------
    population_size : int
    generations : int
    crossover_prob, mutation_prob : float
        Probabilities in [0, 1].
    elite_count : int
        Best individuals copied unchanged into the next generation; must
        be smaller than `population_size`.
    tournament_size : int
    seed : int
    penalty : float
        Weight of each violated precedence edge in the fitness.
    stop_at_optimum : bool
        Stop as soon as a plan reaches the best possible score: every
        action satisfied, or the score of an exactly solved seed plan.
    seed_population : bool
        Start from the plan built over the graph condensation plus random
        permutations; when False every initial individual is random.
    """
    def validate(self):
        if self.population_size < 1:
            raise InvalidGAConfigError("population_size must be at least 1")
        if self.generations < 0:
            raise InvalidGAConfigError("generations must be non-negative")
        for name in ("crossover_prob", "mutation_prob"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidGAConfigError("%s must lie in [0, 1], got %r" % (name, value))
        if not 0 <= self.elite_count < self.population_size:
            raise InvalidGAConfigError(
                "elite_count (%d) must be smaller than population_size (%d)" % (
                    self.elite_count, self.population_size))
        if self.tournament_size < 1:
            raise InvalidGAConfigError("tournament_size must be at least 1")
        if self.seed < 0:
            raise InvalidGAConfigError("seed must be non-negative")
        if self.penalty < 0:
            raise InvalidGAConfigError("penalty must be non-negative")
        return self


GAConfig.__new__.__defaults__ = (50, 100, 0.9, 0.2, 2, 3, 0, DEFAULT_PENALTY, True, True)


def stream(seed, generation, slot):
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(generation, slot)))


def random_cuts(n, rng):
    cut1, cut2 = sorted(int(c) for c in rng.choice(n, size=2, replace=False))
    return cut1, cut2


def pmx_crossover(p1, p2, cut1=None, cut2=None, rng=None):
    """
    Partially mapped crossover.

    The child copies p1[cut1..cut2] (inclusive); every other position
    takes p2's value, chased through the segment mapping p1[i] -> p2[i]
    until it no longer collides with the copied segment. Cuts are drawn
    from `rng` when not given.
    """
    n = len(p1)
    if len(p2) != n or sorted(p1) != sorted(p2):
        raise AnalysisError("PMX parents must be permutations of the same ids")
    if cut1 is None or cut2 is None:
        if rng is None or n < 2:
            raise InvalidCutsError(cut1, cut2, n)
        cut1, cut2 = random_cuts(n, rng)
    if not 0 <= cut1 < cut2 < n:
        raise InvalidCutsError(cut1, cut2, n)

    position_in_p1 = dict((value, i) for i, value in enumerate(p1))
    segment = set(p1[cut1:cut2 + 1])
    child = list(p1)
    for i in list(range(0, cut1)) + list(range(cut2 + 1, n)):
        value = p2[i]
        while value in segment:
            value = p2[position_in_p1[value]]
        child[i] = value
    return child


def swap_mutation(p, rng, prob):
    """With probability `prob`, swap two distinct positions of a copy of `p`."""
    child = list(p)
    if len(child) < 2 or prob <= 0.0:
        return child
    if rng.random() < prob:
        i, j = (int(k) for k in rng.choice(len(child), size=2, replace=False))
        child[i], child[j] = child[j], child[i]
    return child


def _seed_order(actions, precedence_graph, penalty=DEFAULT_PENALTY):
    """
    A plan laid out over the condensation of the precedence graph.

    Strongly connected components come in topological order. A component
    of at most `BRUTE_FORCE_LIMIT` actions is arranged by exhaustive
    search, a larger one by the smell tie-break order. On an acyclic
    graph this is the topological order of the smells.

    Returns (order, exact); `exact` is True when every component was
    searched exhaustively, in which case no plan scores higher.
    """
    action_by_smell = dict((action.smell_id, action) for action in actions)
    graph = precedence_graph.graph.subgraph(action_by_smell)
    components = nx.condensation(graph)
    members = nx.get_node_attributes(components, "members")

    def component_key(component):
        return min(precedence_graph.sort_key(smell_id) for smell_id in members[component])

    order = []
    exact = True
    for component in nx.lexicographical_topological_sort(components, key=component_key):
        smell_ids = sorted(members[component], key=precedence_graph.sort_key)
        present = [action_by_smell[smell_id] for smell_id in smell_ids]
        if len(present) == 1:
            order.append(present[0].action_id)
        elif len(present) <= BRUTE_FORCE_LIMIT:
            inner = PrecedenceGraph(graph.subgraph(smell_ids).copy())
            order.extend(brute_force_best(present, inner, penalty).order)
        else:
            logger.debug("cycle over {} actions is left in tie-break order".format(len(present)))
            order.extend(action.action_id for action in present)
            exact = False
    placed = set(order)
    order.extend(sorted(a.action_id for a in actions if a.action_id not in placed))
    return order, exact


def _rank_key(individual, scores):
    return (-scores[tuple(individual)], tuple(individual))


def _tournament(population, scores, rng, size):
    picks = rng.integers(0, len(population), size=size)
    return min((population[int(i)] for i in picks), key=lambda ind: _rank_key(ind, scores))


def evolve(actions, precedence_graph, cfg=None, debug=False, show_progress=False):
    """
    Evolve a plan for `actions` under `precedence_graph`.

    The initial population holds the seed plan of `_seed_order` (unless
    `cfg.seed_population` is off) plus random permutations. Each
    generation keeps the `elite_count` best individuals and fills the rest
    with children of tournament-selected parents (PMX, then swap
    mutation). Returns the best plan ever evaluated, with the best-ever
    fitness per generation in `history`.
    """
    cfg = (cfg if cfg is not None else GAConfig()).validate()
    if len(actions) == 0:
        raise NoActionsError()
    scorer = PlanScorer(actions, precedence_graph, cfg.penalty)
    ids = scorer.action_ids
    n = len(ids)
    scores = {}

    def evaluate(population):
        for individual in population:
            key = tuple(individual)
            if key not in scores:
                scores[key] = scorer(key)

    def check(population, generation):
        if debug:
            for individual in population:
                if not is_permutation(individual, ids):
                    raise AnalysisError("Generation %d holds an invalid plan %r" % (
                        generation, individual))

    population = []
    optimum = scorer.optimum_bound
    if cfg.seed_population:
        seeded, exact = _seed_order(actions, precedence_graph, cfg.penalty)
        population.append(seeded)
        if exact:
            optimum = scorer(tuple(seeded))
    for slot in range(len(population), cfg.population_size):
        population.append([ids[int(i)] for i in stream(cfg.seed, 0, slot).permutation(n)])
    check(population, 0)
    evaluate(population)

    best = min(population, key=lambda ind: _rank_key(ind, scores))
    history = [scores[tuple(best)]]

    generations = range(1, cfg.generations + 1)
    for generation in tqdm(generations, desc="Evolving", unit="gen", disable=not show_progress):
        if cfg.stop_at_optimum and scores[tuple(best)] >= optimum:
            break
        ranked = sorted(population, key=lambda ind: _rank_key(ind, scores))
        next_population = [list(ind) for ind in ranked[:cfg.elite_count]]
        for slot in range(cfg.elite_count, cfg.population_size):
            rng = stream(cfg.seed, generation, slot)
            parent1 = _tournament(population, scores, rng, cfg.tournament_size)
            parent2 = _tournament(population, scores, rng, cfg.tournament_size)
            if n >= 2 and rng.random() < cfg.crossover_prob:
                child = pmx_crossover(parent1, parent2, rng=rng)
            else:
                child = list(parent1)
            next_population.append(swap_mutation(child, rng, cfg.mutation_prob))
        population = next_population
        check(population, generation)
        evaluate(population)
        challenger = min(population, key=lambda ind: _rank_key(ind, scores))
        if _rank_key(challenger, scores) < _rank_key(best, scores):
            best = challenger
        history.append(scores[tuple(best)])
        logger.debug("generation {}: best fitness {}".format(generation, history[-1]))

    plan = RefactoringPlan(order=tuple(best), fitness=scores[tuple(best)], history=tuple(history))
    logger.info("Evolved plan over {} actions: fitness {} after {} generations".format(
        n, plan.fitness, len(history) - 1))
    return plan
