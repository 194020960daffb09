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
from smellplan.features import build_feature_map, FeatureMap, NoFeaturesError
from smellplan.io.corpus import SourceUnit, load_corpus
from smellplan.metrics import build_metrics_report
from smellplan.random import random_corpus, relocated_unit
from smellplan.remod import (
    fsca, ftang, pcom, pcoup, feature_metrics, restructuring_candidates, simulate_move,
    suggest_moves, trajectory_dataframe, package_densities, MoveOp,
    UnknownClassError, UnknownPackageError, SamePackageError, SCATTERING_CONTRIBUTOR)
from smellplan.utils import EmptyModelError, simple_name

from . import data_path

TAX_MOVE = MoveOp("shop.catalog.TaxRule", "shop.catalog", "shop.billing")

def demo():
    model = parse_source(load_corpus(data_path("demo")))
    return model, build_feature_map(model)

def test_demo_metrics():
    model, fm = demo()
    assert fsca(fm, model) == pytest.approx(1.0 / 6)
    assert ftang(fm, model) == pytest.approx(1.0 / 6)
    assert pcom(model) == pytest.approx((1 + 1.0 / 3 + 1) / 3)
    assert pcoup(model) == pytest.approx(0.25)
    report = feature_metrics(fm, model)
    assert report.per_feature_sca == {"billing": 0.5, "catalog": 0.0, "shipping": 0.0}
    assert report.per_package_tang["shop.catalog"] == 0.5
    assert report.as_record()["fsca"] == 0.1667

def test_package_densities():
    model, _ = demo()
    densities = package_densities(model)
    assert list(densities) == ["shop.billing", "shop.catalog", "shop.shipping"]
    assert densities["shop.catalog"] == pytest.approx(1.0 / 3)

def test_metrics_need_features():
    model = parse_source(load_corpus(data_path("calculator")))
    fm = build_feature_map(model)
    with pytest.raises(NoFeaturesError):
        fsca(fm, model)
    with pytest.raises(NoFeaturesError):
        suggest_moves(model, fm)
    with pytest.raises(EmptyModelError):
        pcom(parse_source([]))

def test_single_package_scores_zero():
    model = parse_source(load_corpus(data_path("calculator")))
    fm = FeatureMap({"math": {"calc.Calculator.add(int,int)"}})
    assert fsca(fm, model) == 0.0
    assert ftang(fm, model) == 0.0
    assert pcom(model) == 1.0
    assert pcoup(model) == 0.0

def test_candidates():
    model, fm = demo()
    candidates = restructuring_candidates(model, build_metrics_report(model), fm)
    assert len(candidates) == 1
    candidate = candidates[0]
    assert candidate.class_id == "shop.catalog.TaxRule"
    assert candidate.reasons == (SCATTERING_CONTRIBUTOR,)
    assert candidate.dominant_feature == "billing"
    assert candidate.suggested_target_package == "shop.billing"
    assert candidate.as_record()["reasons"] == [SCATTERING_CONTRIBUTOR]

def test_simulate_move_errors():
    model, _ = demo()
    with pytest.raises(UnknownClassError):
        simulate_move(model, MoveOp("shop.catalog.Nope", "shop.catalog", "shop.billing"))
    with pytest.raises(UnknownClassError):
        simulate_move(model, MoveOp("shop.catalog.TaxRule", "shop.billing", "shop.shipping"))
    with pytest.raises(UnknownPackageError):
        simulate_move(model, MoveOp("shop.catalog.TaxRule", "shop.catalog", "shop.nowhere"))
    with pytest.raises(SamePackageError):
        simulate_move(model, MoveOp("shop.catalog.TaxRule", "shop.catalog", "shop.catalog"))

def test_move_and_move_back():
    model, fm = demo()
    moved = simulate_move(model, TAX_MOVE)
    assert moved.has_class("shop.billing.TaxRule")
    assert model.has_class("shop.catalog.TaxRule")
    back = simulate_move(moved, MoveOp("shop.billing.TaxRule", "shop.billing", "shop.catalog"))
    assert back == model

def test_moving_an_inert_class_keeps_feature_metrics():
    units = load_corpus(data_path("demo")) + [SourceUnit.from_text(
        "shop/catalog/Util.java",
        "package shop.catalog;\n\npublic class Util {\n    public int one() {\n"
        "        return 1;\n    }\n}\n")]
    model = parse_source(units)
    fm = build_feature_map(model)
    moved = simulate_move(model, MoveOp("shop.catalog.Util", "shop.catalog", "shop.shipping"))
    assert fsca(fm, moved) == fsca(fm, model)
    assert ftang(fm, moved) == ftang(fm, model)

def test_moving_the_only_misplaced_class_removes_scattering():
    model, fm = demo()
    moved = simulate_move(model, TAX_MOVE)
    moved_fm = fm.relocate(TAX_MOVE.class_id, TAX_MOVE.target_class_id)
    before = feature_metrics(fm, model)
    after = feature_metrics(moved_fm, moved)
    assert after.per_feature_sca["billing"] < before.per_feature_sca["billing"]
    assert after.fsca == 0.0
    assert after.pcoup == 0.0

def test_suggest_moves_demo():
    model, fm = demo()
    result = suggest_moves(model, fm)
    assert list(result.moves) == [TAX_MOVE]
    assert result.before.fsca == pytest.approx(1.0 / 6)
    assert result.after.fsca == 0.0
    assert result.after.ftang == 0.0
    assert result.after.pcoup == 0.0
    assert result.after.pcom == pytest.approx((2.0 / 3 + 1 + 1) / 3)
    assert len(result.trajectory) == 2
    assert result.model.has_class("shop.billing.TaxRule")
    df = trajectory_dataframe(result.trajectory)
    assert list(df.columns) == ["step", "fsca", "ftang", "pcom", "pcoup"]
    assert list(df.step) == [0, 1]

def test_suggest_moves_limit():
    model, fm = demo()
    result = suggest_moves(model, fm, max_moves=0)
    assert len(result.moves) == 0
    assert result.after == result.before
    assert result.model == model

def test_suggest_moves_with_pcom_constraint():
    model, fm = demo()
    # the move raises PCOM, so the constraint does not block it
    assert list(suggest_moves(model, fm, constrain_pcom=True).moves) == [TAX_MOVE]

def test_objective_never_increases():
    for seed in range(30):
        units = random_corpus(n_packages=3, n_classes=8, seed=seed)
        model = parse_source(units)
        fm = build_feature_map(model)
        if fm.is_empty():
            continue
        result = suggest_moves(model, fm, max_moves=5)
        objectives = [step.objective for step in result.trajectory]
        assert all(b < a for a, b in zip(objectives, objectives[1:]))
        assert len(result.moves) <= 5

def test_simulated_moves_match_reparsing():
    for seed in range(200):
        units = random_corpus(n_packages=3, n_classes=6, seed=seed)
        model = parse_source(units)
        fm = build_feature_map(model)
        index = seed % len(units)
        cls = model.classes[index]
        targets = [p for p in model.package_names if p != cls.package]
        to_package = targets[seed % len(targets)]

        moved = simulate_move(model, MoveOp(cls.class_id, cls.package, to_package))
        edited = [relocated_unit(u, to_package) if u.path.endswith("/%s.java" % cls.name)
                  else u for u in units]
        reparsed = parse_source(edited)
        assert moved == reparsed
        assert pcom(moved) == pcom(reparsed)
        assert pcoup(moved) == pcoup(reparsed)
        if not fm.is_empty():
            moved_fm = fm.relocate(cls.class_id, "%s.%s" % (to_package, cls.name))
            assert feature_metrics(moved_fm, moved) == feature_metrics(
                build_feature_map(reparsed), reparsed)

def test_moves_keep_method_and_class_metrics():
    for seed in range(50):
        units = random_corpus(n_packages=3, n_classes=6, seed=seed)
        model = parse_source(units)
        cls = model.classes[0]
        to_package = [p for p in model.package_names if p != cls.package][0]
        moved = simulate_move(model, MoveOp(cls.class_id, cls.package, to_package))

        def by_simple_name(report):
            methods = sorted((simple_name(m.class_id), m.qualified_name.split(".")[-1], m.mccabe)
                             for m in report.methods)
            classes = sorted((simple_name(c.class_id), c.lcom) for c in report.classes)
            return methods, classes

        assert by_simple_name(build_metrics_report(model)) == by_simple_name(
            build_metrics_report(moved))

def make_class_unit(package, name, method):
    text = "package %s;\npublic class %s {\n    public void %s() {\n    }\n}\n" % (
        package, name, method)
    return SourceUnit.from_text("%s/%s.java" % (package, name), text)

def test_only_candidates_move():
    model = parse_source([
        make_class_unit("p", "X", "a"),
        make_class_unit("p", "Y", "b"),
        make_class_unit("q", "Z", "c")])
    fm = FeatureMap({"f1": {"p.X.a()"}, "f2": {"p.Y.b()"}})
    assert len(restructuring_candidates(model, build_metrics_report(model), fm)) == 0
    result = suggest_moves(model, fm)
    assert len(result.moves) == 0
    assert result.after == result.before

def test_moves_come_from_candidates():
    for seed in range(30):
        model = parse_source(random_corpus(n_packages=3, n_classes=8, seed=seed))
        fm = build_feature_map(model)
        if fm.is_empty():
            continue
        candidates = restructuring_candidates(model, build_metrics_report(model), fm)
        candidate_ids = set(c.class_id for c in candidates)
        moves = suggest_moves(model, fm, candidates=candidates).moves
        assert set(op.class_id for op in moves) <= candidate_ids
        assert len(set(op.class_id for op in moves)) == len(moves)

def test_step_timings():
    model, fm = demo()
    result = suggest_moves(model, fm)
    assert len(result.elapsed) == len(result.trajectory)
    assert result.elapsed[0] == 0.0
    assert all(b >= a for a, b in zip(result.elapsed, result.elapsed[1:]))
    df = trajectory_dataframe(result.trajectory, result.elapsed)
    assert list(df.columns) == ["step", "fsca", "ftang", "pcom", "pcoup", "elapsed_s"]
    with pytest.raises(ValueError):
        trajectory_dataframe(result.trajectory, [0.0])

def test_feature_metrics_stay_in_unit_interval():
    for seed in range(40):
        model = parse_source(random_corpus(
            n_packages=1 + seed % 4, n_classes=6, n_features=1 + seed % 3, seed=seed))
        fm = build_feature_map(model)
        if fm.is_empty():
            continue
        report = feature_metrics(fm, model)
        values = [report.fsca, report.ftang, report.pcom, report.pcoup]
        values += list(report.per_feature_sca.values()) + list(report.per_package_tang.values())
        assert all(0.0 <= value <= 1.0 for value in values)
