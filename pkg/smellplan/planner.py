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

from collections import namedtuple, OrderedDict
from itertools import permutations

from .collection import Collection
from .smells import DEAD_CODE, DUPLICATE_CODE, LONG_METHOD, LONG_PARAMETER_LIST, FEATURE_ENVY
from .utils import AnalysisError, get_logger, class_id_of

logger = get_logger(__name__)

REMOVE_DEAD_CODE = "RemoveDeadCode"
MERGE_DUPLICATE = "MergeDuplicate"
EXTRACT_METHOD = "ExtractMethod"
INTRODUCE_PARAMETER_OBJECT = "IntroduceParameterObject"
MOVE_METHOD = "MoveMethod"
PULL_UP_METHOD = "PullUpMethod"

ACTION_FOR_SMELL = {
    DEAD_CODE: REMOVE_DEAD_CODE,
    DUPLICATE_CODE: MERGE_DUPLICATE,
    LONG_METHOD: EXTRACT_METHOD,
    LONG_PARAMETER_LIST: INTRODUCE_PARAMETER_OBJECT,
    FEATURE_ENVY: MOVE_METHOD,
}

DEFAULT_PENALTY = 2.0
BRUTE_FORCE_LIMIT = 8


class NoActionsError(AnalysisError):
    def __init__(self):
        AnalysisError.__init__(self, "No refactoring actions to plan")


class TooLargeError(AnalysisError):
    def __init__(self, n, limit=BRUTE_FORCE_LIMIT):
        self.n = n
        AnalysisError.__init__(
            self, "Exhaustive search over %d actions is too large (limit %d)" % (n, limit))


class RefactoringAction(namedtuple("RefactoringAction", [
        "action_id", "kind", "smell_id", "location", "rationale"])):
    def as_record(self):
        return OrderedDict(self._asdict())


class ActionCollection(Collection):
    def by_smell(self):
        return dict((action.smell_id, action) for action in self.elements)

    def ids(self):
        return [action.action_id for action in self.elements]


class RefactoringPlan(namedtuple("RefactoringPlan", ["order", "fitness", "history"])):
    """
    Parameters
    ----------
    order : tuple of int
        A permutation of action ids.
    fitness : float
    history : tuple of float
        Best-ever fitness after each generation; empty for plans that were
        not evolved.
    """
    def steps(self, actions):
        """The plan as ordered action records, each with its step number."""
        by_id = dict((action.action_id, action) for action in actions)
        steps = []
        for step, action_id in enumerate(self.order, start=1):
            record = OrderedDict([("step", step)])
            record.update(by_id[action_id].as_record())
            steps.append(record)
        return steps


RefactoringPlan.__new__.__defaults__ = ((),)


def _shared_supertype(model, first, second):
    if model is None:
        return None
    a = model.class_by_id(class_id_of(first))
    b = model.class_by_id(class_id_of(second))
    if a is None or b is None or a.class_id == b.class_id:
        return None
    if a.supertype is not None and a.supertype == b.supertype:
        return a.supertype
    return None


def _action_for(action_id, smell, model):
    kind = ACTION_FOR_SMELL[smell.kind]
    location = smell.location
    if smell.kind == DEAD_CODE:
        rationale = "%s has no callers and is neither public nor an entry point" % location
    elif smell.kind == DUPLICATE_CODE:
        supertype = _shared_supertype(model, smell.location, smell.location2)
        if supertype is not None:
            kind = PULL_UP_METHOD
            rationale = "%s and %s duplicate each other; both classes extend %s" % (
                smell.location, smell.location2, supertype)
            location = supertype
        else:
            rationale = "extract the code shared by %s and %s into one method" % (
                smell.location, smell.location2)
    elif smell.kind == LONG_METHOD:
        rationale = "split %s into smaller methods" % location
    elif smell.kind == LONG_PARAMETER_LIST:
        rationale = "group the parameters of %s into an object" % location
    else:
        rationale = "move %s to %s, the class it uses most" % (location, smell.location2)
    return RefactoringAction(
        action_id=action_id, kind=kind, smell_id=smell.smell_id,
        location=location, rationale=rationale)


def candidate_actions(smells, model=None):
    """
    Exactly one action per smell, with dense ids in smell order. A
    duplicate between two classes that extend the same supertype becomes
    a PullUpMethod when `model` is given.
    """
    return ActionCollection(
        [_action_for(action_id, smell, model) for action_id, smell in enumerate(smells)])


class PlanScorer(object):
    """
    Fitness of plans over one set of actions and one precedence graph:
    R - penalty * V, where R counts actions whose prerequisites all come
    earlier in the plan and V counts violated precedence edges.
    """
    def __init__(self, actions, precedence_graph, penalty=DEFAULT_PENALTY):
        self.action_ids = sorted(action.action_id for action in actions)
        self.penalty = penalty
        action_by_smell = dict((action.smell_id, action.action_id) for action in actions)
        self.edges = []
        for before, after in precedence_graph.edges():
            if before in action_by_smell and after in action_by_smell:
                self.edges.append((action_by_smell[before], action_by_smell[after]))
        required = dict((action_id, []) for action_id in self.action_ids)
        for before, after in self.edges:
            required[after].append(before)
        self.prerequisites = dict((k, tuple(v)) for k, v in required.items())

    @property
    def optimum_bound(self):
        """The best score any plan can reach (every action satisfied)."""
        return float(len(self.action_ids))

    def components(self, order):
        position = dict((action_id, i) for i, action_id in enumerate(order))
        satisfied = 0
        for action_id, before in self.prerequisites.items():
            if all(position[b] < position[action_id] for b in before):
                satisfied += 1
        violations = sum(1 for before, after in self.edges if position[before] > position[after])
        return satisfied, violations

    def __call__(self, order):
        satisfied, violations = self.components(order)
        return satisfied - self.penalty * violations


def fitness(plan, precedence_graph, actions, penalty=DEFAULT_PENALTY):
    """Score of a plan (a `RefactoringPlan` or a permutation of action ids)."""
    order = plan.order if isinstance(plan, RefactoringPlan) else plan
    return PlanScorer(actions, precedence_graph, penalty)(order)


def brute_force_best(actions, precedence_graph, penalty=DEFAULT_PENALTY):
    """
    Exact optimum by scanning every permutation in lexicographic order;
    the first best plan wins ties.
    """
    n = len(actions)
    if n == 0:
        raise NoActionsError()
    if n > BRUTE_FORCE_LIMIT:
        raise TooLargeError(n)
    scorer = PlanScorer(actions, precedence_graph, penalty)
    best_order, best_score = None, None
    for order in permutations(scorer.action_ids):
        score = scorer(order)
        if best_score is None or score > best_score:
            best_order, best_score = order, score
    return RefactoringPlan(order=tuple(best_order), fitness=best_score)
