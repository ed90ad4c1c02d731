import pytest

from gcwe.genetic_code import CODONS
from gcwe.multiplets import (
    EXPECTED_CENSUS,
    ConfigError,
    Multiplet,
    MultipletPartition,
    PipelineConfig,
    census,
    census_line,
    compare_to_code,
    run_level,
    run_pipeline,
    ser_partner,
    weakest_codon,
    weakness,
)


def _sets(*groups):
    return {frozenset(g) for g in groups}


def _expand(pattern):
    # "CUN" -> CUC,CUU,CUG,CUA; "AGY" -> AGC,AGU
    fill = {"N": "CUGA", "Y": "CU", "R": "GA"}
    out = [""]
    for ch in pattern:
        out = [o + c for o in out for c in fill.get(ch, ch)]
    return out


@pytest.fixture(scope="module")
def default_run():
    return run_pipeline()


def test_weakness_order():
    assert weakest_codon(["GGG", "CCC"]) == "CCC"
    assert weakness("AAA") > weakness("CCC") > weakness("GGG")
    # third letter decides before the first among equal C/A counts
    assert weakest_codon(["UGA", "AGU"]) == "UGA"


def test_partition_requires_exact_cover():
    with pytest.raises(ValueError):
        MultipletPartition((Multiplet(frozenset({"CCC"})),))


def test_levels_must_run_in_order():
    with pytest.raises(ValueError):
        run_level(MultipletPartition.singlets(), 2)
    with pytest.raises(ValueError):
        run_level(MultipletPartition.singlets(), 6)


def test_every_level_only_merges_whole_multiplets(default_run):
    part = MultipletPartition.singlets()
    for level in range(1, 6):
        before = part.as_sets()
        part, _ = run_level(part, level)
        for m in before:
            assert any(m <= n for n in part.as_sets())


def test_default_census(default_run):
    assert census(default_run) == EXPECTED_CENSUS
    assert census_line(census(default_run)) == "sextets=3 quartets=5 doublets=13"


def test_sextets_are_the_three_expected(default_run):
    sextets = {m.codons for m in default_run.multiplets if len(m) == 6}
    assert sextets == _sets(_expand("CUN") + _expand("UUR"), _expand("CGN") + _expand("AGR"),
                            _expand("UCN") + _expand("AGY"))


def test_log_is_complete_and_consistent(default_run):
    accepted = [e for e in default_run.log if e.accepted]
    assert all(e.allowed for e in accepted)
    assert {e.level for e in default_run.log} == {1, 2, 3, 4, 5}
    assert default_run.events(4) and not [e for e in default_run.events(4) if e.accepted]
    d = accepted[0].to_dict()
    assert d["accepted"] and d["order"] == "state_first"


def test_pipeline_is_deterministic(default_run):
    again = run_pipeline()
    assert again.as_sets() == default_run.as_sets()
    assert [e.to_dict() for e in again.log] == [e.to_dict() for e in default_run.log]


def test_compare_to_codes(default_run):
    suc = compare_to_code(default_run, "SUC")
    assert sorted(m.sorted() for m in suc.broken_doublets) == [["AUG", "AUA"], ["UGG", "UGA"]]
    vmc = compare_to_code(default_run, "VMC")
    assert not vmc.broken_doublets
    split = [m.codons for m, _ in vmc.split]
    assert split == [frozenset(_expand("CGN") + _expand("AGR"))]
    assert "census" in vmc.to_text() and vmc.to_dict()["code"] == "VMC"


def test_ser_partner_reading(default_run):
    note = ser_partner(default_run)
    assert note["partner"] == ["AGC", "AGU"] and "warning" not in note
    literal = ser_partner(default_run, PipelineConfig(ser_reading="literal"))
    assert "warning" in literal and literal["agr_formed_at_level"] == 3


@pytest.mark.parametrize("values,census_expected", [
    ({"merge_policy": "any_allowed"}, {6: 4, 4: 8, 2: 4}),
    ({"level4_merges": "on"}, {6: 6, 4: 2, 2: 10}),
    ({"level5_pairs": "all"}, {6: 4, 4: 4, 2: 12}),
])
def test_alternative_configs_change_census(values, census_expected):
    assert census(run_pipeline(PipelineConfig().with_values(values))) == census_expected


def test_operator_first_order_collapses_level_one():
    part = run_pipeline(PipelineConfig(order="operator_first"), upto=1)
    assert census(part).get(2, 0) < 32


def test_config_round_trip():
    cfg = PipelineConfig.from_text("a1 = 2  # comment\nb_list = ca, gg\n\nlevel4_merges=yes\n")
    assert cfg.rules.a[1] == 2 and cfg.rules.b_list == frozenset({"CA", "GG"}) and cfg.level4_merges
    again = PipelineConfig().with_values(cfg.to_dict())
    assert again == cfg


@pytest.mark.parametrize("text", ["nonsense", "zz = 1", "a1 = -1", "a1 = 1/3", "b_list = CCC",
                                  "merge_policy = best", "level4_merges = maybe"])
def test_config_errors(text):
    with pytest.raises(ConfigError):
        PipelineConfig.from_text(text)


def test_multiplet_display_uses_canonical_order():
    assert str(Multiplet(frozenset({"CCU", "CCC"}))) == "{CCC,CCU}"
    assert sorted(CODONS[:2]) == ["CCC", "CCU"]
