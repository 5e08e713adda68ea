from __future__ import annotations

import json

import pytest

from minorfeas.datagen import (DROPPED, DROPPED_UNKNOWN, EXACT, FJ, SAT, UNSAT, ZERO_PHASE, DatasetRecord,
                               InstanceSpec, Label, LabelBudget, coloring_spec, dataset_stats, generate_dataset,
                               label_instance, materialize, parse_record_instance, record_claim, render_input,
                               render_instruction, render_record, sample_instance)
from minorfeas.graph import Graph, chimera, complete_graph, cycle_graph, path_graph
from minorfeas.instance import ColoringInstance, EmbeddingInstance
from minorfeas.verify import EMBEDDING, KCOLORING, MINCOLORING, NO, YES, parse_candidate

from samples import COLORING_EDGES, COLORING_OUTPUT, COLORING_TOP2, EMBEDDING_G_EDGES, EMBEDDING_G_TOP2, \
    EMBEDDING_INSTRUCTION, EMBEDDING_P_EDGES, EMBEDDING_P_TOP2


def _pairs(text):
    return [tuple(e) for e in json.loads(text.replace("(", "[").replace(")", "]"))]


# -- sampling -----------------------------------------------------------------------

@pytest.mark.parametrize("task", [EMBEDDING, KCOLORING, MINCOLORING])
def test_sampling_is_deterministic(task):
    a = sample_instance(task, 123)
    b = sample_instance(task, 123)
    assert a == b
    assert materialize(InstanceSpec.from_dict(json.loads(json.dumps(a[0].to_dict())))) == a[1]


def test_embedding_sizes_and_hardware_mix():
    chim = 0
    draws = 10_000
    for s in range(draws):
        spec, inst = sample_instance(EMBEDDING, s, paper_scale=True)
        chim += spec.hardware.family == "chimera"
        if s % 50 == 0:
            assert inst.P.n <= inst.H.n and inst.P.m <= inst.H.m
    # binomial(10000, 0.5) sd is 0.005; the band is six sd wide
    assert 0.47 <= chim / draws <= 0.53


def test_coloring_parameter_ranges():
    ns = [coloring_spec(KCOLORING, s, paper_scale=True).problem.params["n"] for s in range(10_000)]
    assert min(ns) >= 10 and max(ns) <= 300
    assert min(ns) < 20 and max(ns) > 290
    ds = [coloring_spec(MINCOLORING, s).problem.params["d"] for s in range(500)]
    assert all(3.0 <= d <= 5.2 for d in ds)


def test_unknown_task():
    with pytest.raises(ValueError):
        sample_instance("nope", 0)


# -- labeling ----------------------------------------------------------------------------

def test_k2_into_k2_labeled_exact():
    label = label_instance(EmbeddingInstance(complete_graph(2), complete_graph(2), 1))
    assert (label.status, label.provenance, label.objective, label.optimal) == (SAT, EXACT, 2, True)


def test_screen_rejection_is_zero_phase_unsat():
    label = label_instance(EmbeddingInstance(complete_graph(5), path_graph(10), 3))
    assert (label.status, label.provenance) == (UNSAT, ZERO_PHASE)
    assert label.detail["condition"] == "DegreeBound"


def test_exact_unsat():
    # passes every screen condition but a cycle is not a minor of a path
    label = label_instance(EmbeddingInstance(cycle_graph(4), path_graph(5), 1))
    assert (label.status, label.provenance) == (UNSAT, EXACT)


def test_budget_exhaustion_drops_instead_of_unsat():
    inst = EmbeddingInstance(complete_graph(4), chimera(1, 2, 4), 3)
    small = LabelBudget(exact_nodes=0, max_model_constraints=10)
    label = label_instance(inst, small)
    assert (label.status, label.provenance, label.detail["reason"]) == (DROPPED, DROPPED_UNKNOWN, "model-size")
    starved = LabelBudget(exact_nodes=0, fj_iterations=0)
    assert label_instance(inst, starved).status == DROPPED


def test_fj_label_when_exact_gives_up():
    inst = EmbeddingInstance(path_graph(3), chimera(1, 1, 4), 2)
    label = label_instance(inst, LabelBudget(exact_nodes=0, fj_iterations=10_000), seed=3)
    assert (label.status, label.provenance) == (SAT, FJ)
    assert inst.check(label.solution) == []
    col = label_instance(ColoringInstance(cycle_graph(6), 2), LabelBudget(exact_nodes=0), seed=1)
    assert (col.status, col.provenance) == (SAT, FJ)


def test_coloring_labels():
    assert label_instance(ColoringInstance(complete_graph(4), 3)).status == UNSAT
    lab = label_instance(ColoringInstance(cycle_graph(5), None))
    assert (lab.status, lab.objective, lab.optimal) == (SAT, 3, True)


def test_label_dict_round_trip():
    label = label_instance(EmbeddingInstance(path_graph(3), cycle_graph(4), 2))
    assert Label.from_dict(json.loads(json.dumps(label.to_dict()))) == label


# -- rendering -----------------------------------------------------------------------------

def test_embedding_instruction_and_input_match_sample():
    inst = EmbeddingInstance(Graph.from_edges(9, _pairs(EMBEDDING_P_EDGES)), chimera(1, 3, 4), 3)
    assert render_instruction(inst) == EMBEDDING_INSTRUCTION
    lines = render_input(inst).split("\n")
    assert lines == [f"P edges: {EMBEDDING_P_EDGES}", f"P top2 neighbor-degree info: {EMBEDDING_P_TOP2}", "",
                     f"G edges: {EMBEDDING_G_EDGES}", f"G top2 neighbor-degree info: {EMBEDDING_G_TOP2}"]


def test_coloring_sample_renders_output():
    G = Graph.from_edges(12, _pairs(COLORING_EDGES))
    inst = ColoringInstance(G, 3)
    colors = parse_candidate(COLORING_OUTPUT, KCOLORING).solution
    rec = render_record(inst, Label(SAT, EXACT, colors, 0, True))
    assert rec.output == COLORING_OUTPUT
    assert rec.input.endswith("\n\n" + COLORING_TOP2)
    assert "3-colorable" in rec.instruction and "{0,1,2}" in rec.instruction
    assert parse_record_instance(rec) == inst


def test_unsat_embedding_renders_no():
    inst = EmbeddingInstance(complete_graph(5), path_graph(10), 3)
    rec = render_record(inst, label_instance(inst))
    assert rec.output == "no"
    assert record_claim(rec).claim == NO
    assert parse_record_instance(rec) == inst


def test_record_round_trip():
    spec, inst = sample_instance(EMBEDDING, 4)
    rec = render_record(inst, label_instance(inst), spec)
    again = DatasetRecord.from_json(rec.to_json())
    assert again == rec
    assert parse_record_instance(again) == inst
    assert materialize(InstanceSpec.from_dict(again.meta["spec"])) == inst


# -- datasets --------------------------------------------------------------------------------

def test_stats():
    assert dataset_stats([])["count"] == 0
    recs = generate_dataset(MINCOLORING, 6, master_seed=5)
    st = dataset_stats(recs)
    assert st["count"] == 6 == st["sat"] + st["unsat"]
    assert sum(st["size_histogram"].values()) == 6 and st["tasks"] == {MINCOLORING: 6}


def test_balance_quota():
    recs = generate_dataset(KCOLORING, 8, master_seed=1, balance=0.5)
    claims = [record_claim(r).claim for r in recs]
    assert claims.count(YES) == 4 and claims.count(NO) == 4


def test_generation_is_deterministic():
    a = [r.to_json() for r in generate_dataset(KCOLORING, 5, master_seed=9)]
    b = [r.to_json() for r in generate_dataset(KCOLORING, 5, master_seed=9)]
    assert a == b
