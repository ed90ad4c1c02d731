"""Hierarchical merging of codons into multiplets.

Misreadings are applied level by level, strongest first:

1. third-position transitions
2. third-position transversions
3. first-position transitions, then transversions
4. second-position transitions, then transversions
5. simultaneous misreading of the first two nucleotides

A multiplet formed at one level is frozen: later levels may merge two whole
multiplets but never split one.  Every allowed misreading between two
different multiplets is a merge *proposal*; the configured policy decides
which proposals are accepted.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Callable, Iterable

from .crystal_core import half
from .genetic_code import CODONS, GeneticCode, synonymous_classes
from .misread import (
    Kind,
    MisreadSpec,
    RankRules,
    allowed,
    VANISHED,
    allowed_double,
    op_text,
    specs_at,
)
from .tensor_crystal import Order

__all__ = [
    "PERMITTED_SIZES",
    "EXPECTED_CENSUS",
    "Multiplet",
    "MergeEvent",
    "PipelineConfig",
    "MultipletPartition",
    "weakness",
    "weakest_codon",
    "run_level",
    "run_pipeline",
    "census",
    "census_line",
    "compare_to_code",
    "CodeComparison",
    "ser_partner",
    "ConfigError",
]

log = logging.getLogger(__name__)

PERMITTED_SIZES = frozenset({1, 2, 3, 4, 6})
EXPECTED_CENSUS = {6: 3, 4: 5, 2: 13}

MERGE_POLICIES = ("weakest_covered", "ca_weakest_target", "any_allowed")
LEVEL2_POLICIES = ("tva_and_tvc", "any", "all", "merge_policy")
LEVEL5_PAIRS = ("simple", "matched", "all")
SER_READINGS = ("census", "literal")


class ConfigError(ValueError):
    pass


# weakness: more C/A letters is weaker; ties broken by 3rd, then 1st, then
# 2nd letter with A > C > U > G
_LETTER_RANK = {"A": 3, "C": 2, "U": 1, "G": 0}


def weakness(codon: str) -> tuple[int, int, int, int]:
    """Sort key, larger means more prone to misreading."""
    return (
        sum(n in "CA" for n in codon),
        _LETTER_RANK[codon[2]],
        _LETTER_RANK[codon[0]],
        _LETTER_RANK[codon[1]],
    )


def weakest_codon(codons: Iterable[str]) -> str:
    return max(codons, key=weakness)


@dataclass(frozen=True)
class Multiplet:
    codons: frozenset
    formed_at_level: int = 0

    def __len__(self):
        return len(self.codons)

    def __contains__(self, codon):
        return codon in self.codons

    def sorted(self) -> list[str]:
        return sorted(self.codons, key=CODONS.index)

    def __str__(self):
        return "{" + ",".join(self.sorted()) + "}"


@dataclass(frozen=True)
class MergeEvent:
    level: int
    step: str
    source: str
    target: str
    specs: tuple[str, ...]
    operators: tuple[str, ...]
    allowed: bool
    accepted: bool
    reason: str
    order: str = Order.STATE_FIRST.value

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "step": self.step,
            "source": self.source,
            "target": self.target,
            "specs": list(self.specs),
            "operators": list(self.operators),
            "allowed": self.allowed,
            "accepted": self.accepted,
            "reason": self.reason,
            "order": self.order,
        }

    def __str__(self):
        verdict = "ACCEPT" if self.accepted else ("allowed" if self.allowed else "blocked")
        return (f"L{self.level} {self.step:<13} {self.source}->{self.target} "
                f"[{'+'.join(self.specs)}] {verdict}: {self.reason}")


@dataclass(frozen=True)
class PipelineConfig:
    rules: RankRules = field(default_factory=RankRules)
    order: Order = Order.STATE_FIRST
    merge_policy: str = "weakest_covered"
    level2_policy: str = "tva_and_tvc"
    level4_merges: bool = False
    level5_pairs: str = "simple"
    ser_reading: str = "census"

    def __post_init__(self):
        object.__setattr__(self, "order", Order.parse(self.order))
        for name, choices in (
            ("merge_policy", MERGE_POLICIES),
            ("level2_policy", LEVEL2_POLICIES),
            ("level5_pairs", LEVEL5_PAIRS),
            ("ser_reading", SER_READINGS),
        ):
            if getattr(self, name) not in choices:
                raise ConfigError(f"{name} must be one of {', '.join(choices)}")

    # keys of the flat key=value config file
    KEYS = (
        "operator_order", "a1", "a2", "a3", "b_list", "b_high", "b_low",
        "c_same", "c_diff", "d1", "d2", "d3", "cg_rank", "ua_rank",
        "merge_policy", "level2_policy", "level4_merges", "level5_pairs", "ser_reading",
    )

    def with_values(self, values: dict[str, str]) -> "PipelineConfig":
        """A copy with config-file style ``key -> string value`` overrides."""
        rules = self.rules
        kw: dict = {}
        a, d = dict(rules.a), dict(rules.d)
        rule_kw: dict = {}
        for key, raw in values.items():
            raw = str(raw).strip()
            try:
                if key == "operator_order":
                    kw["order"] = Order.parse(raw)
                elif key in ("a1", "a2", "a3"):
                    a[int(key[1])] = _rank(raw)
                elif key in ("d1", "d2", "d3"):
                    d[int(key[1])] = _rank(raw)
                elif key == "b_list":
                    rule_kw["b_list"] = _dinucleotides(raw)
                elif key in ("b_high", "b_low", "c_same", "c_diff", "cg_rank", "ua_rank"):
                    rule_kw[key] = _rank(raw)
                elif key == "level4_merges":
                    kw["level4_merges"] = _flag(raw)
                elif key in ("merge_policy", "level2_policy", "level5_pairs", "ser_reading"):
                    kw[key] = raw
                else:
                    raise ConfigError(f"unknown config key {key!r}")
            except ConfigError:
                raise
            except ValueError as exc:
                raise ConfigError(f"bad value for {key}: {exc}") from None
        rules = replace(rules, a=a, d=d, **rule_kw)
        return replace(self, rules=rules, **kw)

    @classmethod
    def from_text(cls, text: str) -> "PipelineConfig":
        values = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"line {lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            values[key] = value
        return cls().with_values(values)

    def to_dict(self) -> dict:
        r = self.rules
        return {
            "operator_order": self.order.value,
            "a1": str(r.a[1]), "a2": str(r.a[2]), "a3": str(r.a[3]),
            "b_list": ",".join(sorted(r.b_list)),
            "b_high": str(r.b_high), "b_low": str(r.b_low),
            "c_same": str(r.c_same), "c_diff": str(r.c_diff),
            "d1": str(r.d[1]), "d2": str(r.d[2]), "d3": str(r.d[3]),
            "cg_rank": str(r.cg_rank), "ua_rank": str(r.ua_rank),
            "merge_policy": self.merge_policy,
            "level2_policy": self.level2_policy,
            "level4_merges": "on" if self.level4_merges else "off",
            "level5_pairs": self.level5_pairs,
            "ser_reading": self.ser_reading,
        }


def _rank(raw: str):
    value = half(raw)
    if value < 0:
        raise ValueError("ranks must be non-negative")
    return value


def _flag(raw: str) -> bool:
    low = raw.lower()
    if low in ("on", "true", "yes", "1"):
        return True
    if low in ("off", "false", "no", "0"):
        return False
    raise ValueError(f"expected on/off, got {raw!r}")


def _dinucleotides(raw: str) -> frozenset:
    items = [s.strip().upper().replace("T", "U") for s in raw.replace(";", ",").split(",") if s.strip()]
    for s in items:
        if len(s) != 2 or any(c not in "CUGA" for c in s):
            raise ValueError(f"not a dinucleotide: {s!r}")
    return frozenset(items)


@dataclass(frozen=True)
class MultipletPartition:
    multiplets: tuple[Multiplet, ...]
    level_done: int = 0
    log: tuple[MergeEvent, ...] = ()

    @classmethod
    def singlets(cls) -> "MultipletPartition":
        return cls(tuple(Multiplet(frozenset({c}), 0) for c in CODONS))

    def __post_init__(self):
        seen = Counter(c for m in self.multiplets for c in m.codons)
        if set(seen) != set(CODONS) or any(v != 1 for v in seen.values()):
            raise ValueError("a partition must cover the 64 codons exactly once")

    def index(self) -> dict[str, int]:
        return {c: i for i, m in enumerate(self.multiplets) for c in m.codons}

    def multiplet_of(self, codon: str) -> Multiplet:
        for m in self.multiplets:
            if codon in m:
                return m
        raise KeyError(codon)

    def census(self) -> dict[int, int]:
        return census(self)

    def events(self, level: int | None = None) -> list[MergeEvent]:
        return [e for e in self.log if level is None or e.level == level]

    def as_sets(self) -> set[frozenset]:
        return {m.codons for m in self.multiplets}


def census(partition: MultipletPartition | Iterable) -> dict[int, int]:
    """Histogram: multiplet size -> number of multiplets."""
    groups = partition.multiplets if isinstance(partition, MultipletPartition) else partition
    return dict(sorted(Counter(len(m) for m in groups).items(), reverse=True))


_SIZE_NAMES = {6: "sextets", 4: "quartets", 3: "triplets", 2: "doublets", 1: "singlets"}


def census_line(counts: dict[int, int]) -> str:
    return " ".join(f"{_SIZE_NAMES.get(k, f'size{k}')}={v}" for k, v in sorted(counts.items(), reverse=True))


# --- raw misreading events -------------------------------------------------

@dataclass(frozen=True)
class _RawEvent:
    source: str
    target: str
    specs: tuple[MisreadSpec, ...]
    operators: tuple[str, ...]
    allowed: bool


_TRANSITIONS = [("C", "U"), ("G", "A")]
_TRANSVERSIONS = [("C", "G"), ("U", "A"), ("C", "A")]


def _single_events(position: int, pairs, config: PipelineConfig) -> list[_RawEvent]:
    specs = [s for s in specs_at(position) if (s.source, s.target) in pairs]
    out = []
    for codon in CODONS:
        for spec in specs:
            if codon[position - 1] != spec.source:
                continue
            res = allowed(codon, spec, config.rules, config.order)
            out.append(_RawEvent(codon, res.target, (spec,), (op_text(res.operator),), res.allowed))
    return out


def _pair_permitted(s1: MisreadSpec, s2: MisreadSpec, mode: str) -> bool:
    if mode == "all":
        return True
    t1, t2 = s1.kind is Kind.TRANSITION, s2.kind is Kind.TRANSITION
    if t1 or t2:
        return t1 and t2
    if mode == "matched":
        return True
    return s1.kind is Kind.TRANSVERSION_CG_OR_UA and s2.kind is Kind.TRANSVERSION_CG_OR_UA


def _double_events(config: PipelineConfig) -> list[_RawEvent]:
    out = []
    pairs = [(s1, s2) for s1, s2 in product(specs_at(1), specs_at(2))
             if _pair_permitted(s1, s2, config.level5_pairs)]
    for codon in CODONS:
        for s1, s2 in pairs:
            if codon[0] != s1.source or codon[1] != s2.source:
                continue
            res = allowed_double(codon, s1, s2, config.rules, config.order)
            out.append(_RawEvent(codon, res.target, (s1, s2), tuple(map(op_text, res.operators)), res.allowed))
    return out


LEVEL_STEPS: dict[int, list[tuple[str, Callable[[PipelineConfig], list[_RawEvent]]]]] = {
    1: [("transitions", lambda cfg: _single_events(3, _TRANSITIONS, cfg))],
    2: [("transversions", lambda cfg: _single_events(3, _TRANSVERSIONS, cfg))],
    3: [("transitions", lambda cfg: _single_events(1, _TRANSITIONS, cfg)),
        ("transversions", lambda cfg: _single_events(1, _TRANSVERSIONS, cfg))],
    4: [("transitions", lambda cfg: _single_events(2, _TRANSITIONS, cfg)),
        ("transversions", lambda cfg: _single_events(2, _TRANSVERSIONS, cfg))],
    5: [("double", _double_events)],
}


# --- merge policies ----------------------------------------------------------

@dataclass
class _Proposal:
    a: int
    b: int
    events: list[_RawEvent]
    ok: bool = True
    reason: str = ""
    priority: tuple = ()


def _policy_weakest_covered(prop: _Proposal, groups, level: int):
    """The weakest codon of the absorbed multiplet must take part in an
    allowed event; for equal sizes, the weakest codon of each."""
    A, B = groups[prop.a], groups[prop.b]
    covered = {c for e in prop.events for c in (e.source, e.target)}
    if len(A) < len(B):
        protect = [A]
    elif len(B) < len(A):
        protect = [B]
    else:
        protect = [A, B]
    weakest = [weakest_codon(m.codons) for m in protect]
    missing = [w for w in weakest if w not in covered]
    if missing:
        return False, f"weakest codon {','.join(missing)} not connected", ()
    return True, f"weakest codon {','.join(weakest)} protected", max(weakness(w) for w in weakest)


def _misread_letters(event: _RawEvent) -> list[str]:
    return [s.source for s in event.specs]


def _policy_ca_weakest_target(prop: _Proposal, groups, level: int):
    """Accept when the misread nucleotide is C or A; among competing targets
    the one holding the weakest codon wins."""
    if level >= 3:
        good = [e for e in prop.events if all(n in "CA" for n in _misread_letters(e))]
        if not good:
            return False, "misread nucleotide is not C or A", ()
        events = good
    else:
        events = prop.events
    targets = {e.target for e in events}
    return True, "C/A misreading", weakness(weakest_codon(targets))


def _policy_any_allowed(prop: _Proposal, groups, level: int):
    return True, "allowed", ()


POLICIES = {
    "weakest_covered": _policy_weakest_covered,
    "ca_weakest_target": _policy_ca_weakest_target,
    "any_allowed": _policy_any_allowed,
}


def _level2_check(prop: _Proposal, groups, mode: str):
    kinds = {(e.source[2], e.specs[0].target) for e in prop.events}
    need = {"tva_and_tvc": {("C", "G"), ("C", "A")},
            "all": {("C", "G"), ("U", "A"), ("C", "A")},
            "any": set()}[mode]
    missing = need - kinds
    if missing:
        names = ",".join(f"{s}>{t}" for s, t in sorted(missing))
        return False, f"level-2 policy {mode}: missing {names}", ()
    return True, f"level-2 policy {mode}", ()


def _evaluate(prop: _Proposal, groups, level: int, config: PipelineConfig) -> None:
    size = len(groups[prop.a]) + len(groups[prop.b])
    if size not in PERMITTED_SIZES:
        prop.ok, prop.reason = False, f"merged size {size} not permitted"
        return
    if level == 2 and config.level2_policy != "merge_policy":
        ok, reason, prio = _level2_check(prop, groups, config.level2_policy)
    else:
        ok, reason, prio = POLICIES[config.merge_policy](prop, groups, level)
    prop.ok, prop.reason, prop.priority = ok, reason, prio
    if ok and level == 4 and not config.level4_merges:
        prop.ok, prop.reason = False, f"level-4 merges suppressed ({reason})"


def _step(partition: MultipletPartition, level: int, step: str, raw: list[_RawEvent],
          config: PipelineConfig) -> tuple[MultipletPartition, list[MergeEvent]]:
    groups = partition.multiplets
    idx = partition.index()
    proposals: dict[tuple[int, int], _Proposal] = {}
    plain: list[tuple[_RawEvent, str]] = []
    for ev in raw:
        i, j = idx[ev.source], idx[ev.target]
        if not ev.allowed:
            plain.append((ev, "operator vanishes" if VANISHED in ev.operators else "labels differ"))
        elif i == j:
            plain.append((ev, "already in the same multiplet"))
        else:
            key = (min(i, j), max(i, j))
            proposals.setdefault(key, _Proposal(*key, [])).events.append(ev)

    for prop in proposals.values():
        _evaluate(prop, groups, level, config)

    def first_source(p: _Proposal):
        return min(CODONS.index(e.source) for e in p.events)

    # deterministic fold: higher priority first, then reading order
    candidates = sorted((p for p in proposals.values() if p.ok),
                        key=lambda p: (tuple(-x for x in p.priority), first_source(p)))
    consumed: dict[int, _Proposal] = {}
    for prop in candidates:
        clash = consumed.get(prop.a) or consumed.get(prop.b)
        if clash is not None:
            winner = groups[clash.a].codons | groups[clash.b].codons
            prop.ok = False
            prop.reason = f"conflict: lost to merge forming {Multiplet(winner)}"
            continue
        consumed[prop.a] = consumed[prop.b] = prop

    events = []
    for ev, reason in plain:
        events.append(_log(level, step, ev, False, reason, config))
    for prop in proposals.values():
        for ev in prop.events:
            events.append(_log(level, step, ev, prop.ok, prop.reason, config))
    events.sort(key=lambda e: (CODONS.index(e.source), e.specs))

    merged = set()
    new = []
    for prop in proposals.values():
        if prop.ok:
            merged |= {prop.a, prop.b}
            new.append(Multiplet(groups[prop.a].codons | groups[prop.b].codons, level))
    new.extend(m for i, m in enumerate(groups) if i not in merged)
    new.sort(key=lambda m: CODONS.index(m.sorted()[0]))
    return MultipletPartition(tuple(new), partition.level_done, partition.log + tuple(events)), events


def _log(level, step, ev: _RawEvent, accepted: bool, reason: str, config) -> MergeEvent:
    return MergeEvent(level, step, ev.source, ev.target, tuple(map(str, ev.specs)), ev.operators,
                      ev.allowed, accepted and ev.allowed, reason,
                      config.order.value)


def run_level(partition: MultipletPartition, level: int,
              config: PipelineConfig | None = None) -> tuple[MultipletPartition, list[MergeEvent]]:
    """Apply one level of the hierarchy to a partition."""
    config = config or PipelineConfig()
    if level not in LEVEL_STEPS:
        raise ValueError(f"level must be 1..5, got {level}")
    if partition.level_done != level - 1:
        raise ValueError(f"level {level} requires level {level - 1} to be done first "
                         f"(partition is at level {partition.level_done})")
    events: list[MergeEvent] = []
    for step, make in LEVEL_STEPS[level]:
        partition, evs = _step(partition, level, step, make(config), config)
        events.extend(evs)
        log.debug("level %d %s: %d accepted events", level, step, sum(e.accepted for e in evs))
    return replace(partition, level_done=level), events


def run_pipeline(config: PipelineConfig | None = None, upto: int = 5) -> MultipletPartition:
    """Run levels 1..upto from 64 singlets; the full log is on the result."""
    partition = MultipletPartition.singlets()
    for level in range(1, upto + 1):
        partition, _ = run_level(partition, level, config)
    return partition


# --- comparison with the natural codes --------------------------------------

@dataclass
class CodeComparison:
    code: str
    exact: list[tuple[str, Multiplet]] = field(default_factory=list)
    inside: list[tuple[str, Multiplet]] = field(default_factory=list)
    split: list[tuple[Multiplet, dict[str, list[str]]]] = field(default_factory=list)
    code_census: dict[int, int] = field(default_factory=dict)
    code_census_sense: dict[int, int] = field(default_factory=dict)

    @property
    def broken_doublets(self) -> list[Multiplet]:
        """Model doublets that the code splits into two singlet meanings."""
        return [m for m, parts in self.split if len(m) == 2]

    @property
    def is_empty(self) -> bool:
        return not self.inside and not self.split

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "exact": [{"aa": aa, "codons": m.sorted()} for aa, m in self.exact],
            "inside": [{"aa": aa, "codons": m.sorted()} for aa, m in self.inside],
            "split": [{"codons": m.sorted(), "by": parts} for m, parts in self.split],
            "broken_doublets": [m.sorted() for m in self.broken_doublets],
            "code_census": {str(k): v for k, v in self.code_census.items()},
            "code_census_sense_only": {str(k): v for k, v in self.code_census_sense.items()},
        }

    def to_text(self) -> str:
        lines = [f"comparison with {self.code}: {len(self.exact)} multiplets coincide with a codon class"]
        for aa, m in self.inside:
            lines.append(f"  {m} lies inside the {aa} class (code is coarser here)")
        for m, parts in self.split:
            desc = ", ".join(f"{aa}:{'/'.join(cs)}" for aa, cs in parts.items())
            lines.append(f"  {m} is split by the code: {desc}")
        if self.broken_doublets:
            lines.append("  doublets broken by the code: " + " ".join(str(m) for m in self.broken_doublets))
        lines.append(f"  {self.code} census with stop class: {census_line(self.code_census)}")
        lines.append(f"  {self.code} census, sense codons only: {census_line(self.code_census_sense)}")
        return "\n".join(lines)


def compare_to_code(partition: MultipletPartition | Iterable, code: GeneticCode | str) -> CodeComparison:
    """Relate each multiplet to the synonymous classes of a natural code."""
    code = GeneticCode(code)
    classes = synonymous_classes(code)
    groups = partition.multiplets if isinstance(partition, MultipletPartition) else [
        m if isinstance(m, Multiplet) else Multiplet(frozenset(m)) for m in partition]
    aa_of = {c: aa for aa, cs in classes.items() for c in cs}
    out = CodeComparison(code.value)
    for m in groups:
        parts: dict[str, list[str]] = {}
        for c in m.sorted():
            parts.setdefault(aa_of[c], []).append(c)
        if len(parts) > 1:
            out.split.append((m, parts))
            continue
        (aa,) = parts
        if classes[aa] == m.codons:
            out.exact.append((aa, m))
        else:
            out.inside.append((aa, m))
    out.code_census = census(classes.values())
    out.code_census_sense = census(synonymous_classes(code, include_stop=False).values())
    return out


def ser_partner(partition: MultipletPartition, config: PipelineConfig | None = None) -> dict:
    """Which doublet joined the UCN quartet, and how that reads against 'AGR'."""
    config = config or PipelineConfig()
    m = partition.multiplet_of("UCC")
    partner = sorted(set(m.codons) - {"UCC", "UCU", "UCG", "UCA"}, key=CODONS.index)
    agr = partition.multiplet_of("AGG")
    note = {
        "partner": partner,
        "agr_multiplet": agr.sorted(),
        "agr_formed_at_level": agr.formed_at_level,
        "reading": config.ser_reading,
    }
    if config.ser_reading == "literal" and partner != ["AGG", "AGA"]:
        note["warning"] = (f"LITERAL READING NOT REPRODUCED: AGR is already in {agr} "
                           f"(formed at level {agr.formed_at_level}); UCN joined {partner}")
    return note
