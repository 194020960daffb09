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

import pytest

from smellplan.code_model import parse_source
from smellplan.io.corpus import load_corpus
from smellplan.metrics import build_metrics_report
from smellplan.ordering import pairwise_analysis
from smellplan.planner import (
    candidate_actions, fitness, brute_force_best, PlanScorer, RefactoringPlan,
    NoActionsError, TooLargeError, REMOVE_DEAD_CODE, EXTRACT_METHOD,
    INTRODUCE_PARAMETER_OBJECT, PULL_UP_METHOD, MOVE_METHOD)
from smellplan.random import random_plan_instance
from smellplan.smells import detect_smells, generate_rules

from . import data_path

def analyzed(name):
    model = parse_source(load_corpus(data_path(name)))
    smells = detect_smells(model, build_metrics_report(model), generate_rules())
    return model, smells, pairwise_analysis(smells)

def test_one_action_per_smell():
    model, smells, _ = analyzed("chain")
    actions = candidate_actions(smells, model)
    assert actions.ids() == [0, 1, 2]
    assert [a.kind for a in actions] == [
        REMOVE_DEAD_CODE, EXTRACT_METHOD, INTRODUCE_PARAMETER_OBJECT]
    assert [a.smell_id for a in actions] == smells.ids()

def test_duplicate_in_siblings_is_pulled_up():
    model, smells, _ = analyzed("duplicate")
    actions = candidate_actions(smells, model)
    assert len(actions) == 1
    assert actions[0].kind == PULL_UP_METHOD
    assert actions[0].location == "geo.Shape"

def test_feature_envy_becomes_move_method():
    model, smells, _ = analyzed("envy")
    actions = candidate_actions(smells, model)
    move = actions.by_smell()["FeatureEnvy@shop.Order.label(Customer)|shop.Customer"]
    assert move.kind == MOVE_METHOD
    assert "shop.Customer" in move.rationale

def test_chain_fitness():
    model, smells, graph = analyzed("chain")
    actions = candidate_actions(smells, model)
    assert fitness((0, 2, 1), graph, actions) == 3.0
    assert fitness((0, 1, 2), graph, actions) == 0.0
    assert fitness(RefactoringPlan(order=(1, 0, 2), fitness=None), graph, actions) == -2.0
    assert fitness((1, 0, 2), graph, actions, penalty=0.0) == 2.0

def test_chain_brute_force():
    model, smells, graph = analyzed("chain")
    actions = candidate_actions(smells, model)
    best = brute_force_best(actions, graph)
    assert best.order == (0, 2, 1)
    assert best.fitness == 3.0
    steps = best.steps(actions)
    assert [s["step"] for s in steps] == [1, 2, 3]
    assert steps[2]["kind"] == EXTRACT_METHOD

def test_brute_force_limits():
    actions, graph = random_plan_instance(0, seed=0)
    with pytest.raises(NoActionsError):
        brute_force_best(actions, graph)
    actions, graph = random_plan_instance(9, seed=0)
    with pytest.raises(TooLargeError):
        brute_force_best(actions, graph)

def test_scorer_bounds():
    for seed in range(100):
        actions, graph = random_plan_instance(5, seed=seed, inject_cycle=seed % 2 == 0)
        scorer = PlanScorer(actions, graph)
        best = brute_force_best(actions, graph)
        assert best.fitness <= scorer.optimum_bound
        satisfied, violations = scorer.components(best.order)
        assert 0 <= satisfied <= 5
        assert best.fitness == satisfied - 2.0 * violations
