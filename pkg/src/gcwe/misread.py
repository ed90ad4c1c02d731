"""Translation errors as crystal tensor operators.

A misreading of one nucleotide is modelled by an operator
tau^{j_H}_{m_H} (x) tau^{j_V}_{m_V}.  Acting on a codon state it sends each
factor |J, m> to the single state |J', m + component> fixed by the crystal
Wigner-Eckart rule (see :func:`gcwe.tensor_crystal.couple`).  The misreading
is *allowed* when the predicted labels are those of the substituted codon.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .crystal_core import HalfInt, HalfLike, half
from .genetic_code import Labels, codon_labels, parse_codon
from .tensor_crystal import Order, couple

__all__ = [
    "Kind",
    "VanishingOperator",
    "MisreadSpec",
    "CrystalTensorOp",
    "RankRules",
    "AllowedResult",
    "DoubleResult",
    "IDENTITY",
    "we_apply",
    "op_text",
    "operator_for",
    "substitute",
    "allowed",
    "allowed_double",
    "specs_at",
    "REPRESENTATIVES",
]


class VanishingOperator(ValueError):
    """The operator's rank leaves no room for its component (|m| > j or j < 0)."""


class Kind(str, Enum):
    TRANSITION = "transition"
    TRANSVERSION_CG_OR_UA = "transversion_CG_or_UA"
    TRANSVERSION_CA = "transversion_CA"


REPRESENTATIVES: dict[tuple[str, str], Kind] = {
    ("C", "U"): Kind.TRANSITION,
    ("G", "A"): Kind.TRANSITION,
    ("C", "G"): Kind.TRANSVERSION_CG_OR_UA,
    ("U", "A"): Kind.TRANSVERSION_CG_OR_UA,
    ("C", "A"): Kind.TRANSVERSION_CA,
}

_PURINES = set("GA")
_H_SIGN = {"C": 1, "G": 1, "U": -1, "A": -1}


@dataclass(frozen=True)
class MisreadSpec:
    """Misreading of the nucleotide at ``position`` (1-3) as another one."""

    position: int
    source: str
    target: str

    def __post_init__(self):
        if self.position not in (1, 2, 3):
            raise ValueError(f"position must be 1, 2 or 3, got {self.position!r}")
        src, dst = self.source.upper().replace("T", "U"), self.target.upper().replace("T", "U")
        object.__setattr__(self, "source", src)
        object.__setattr__(self, "target", dst)
        if (src, dst) in REPRESENTATIVES:
            return
        if src not in "CUGA" or dst not in "CUGA" or src == dst:
            raise ValueError(f"not a substitution: {src}->{dst}")
        if (src in _PURINES) != (dst in _PURINES) and _H_SIGN[dst] > _H_SIGN[src]:
            raise ValueError(f"transversion {src}->{dst} would raise m_H")
        raise ValueError(f"{src}->{dst} is not one of the modelled substitutions")

    @property
    def kind(self) -> Kind:
        return REPRESENTATIVES[(self.source, self.target)]

    def __str__(self):
        return f"{self.position}:{self.source}>{self.target}"


def specs_at(position: int) -> list[MisreadSpec]:
    return [MisreadSpec(position, s, t) for s, t in REPRESENTATIVES]


@dataclass(frozen=True)
class CrystalTensorOp:
    """tau^{j_H}_{m_H} (x) tau^{j_V}_{m_V}."""

    j_H: HalfInt
    m_H: HalfInt
    j_V: HalfInt
    m_V: HalfInt

    def __post_init__(self):
        for name in ("j_H", "m_H", "j_V", "m_V"):
            object.__setattr__(self, name, half(getattr(self, name)))
        for j, m in ((self.j_H, self.m_H), (self.j_V, self.m_V)):
            if not (j - m).is_integer:
                raise ValueError(f"invalid tensor component ({j}, {m})")
            if j < 0 or abs(m) > j:
                raise VanishingOperator(f"tensor component ({j}, {m}) vanishes")

    @classmethod
    def of(cls, j_h: HalfLike, m_h: HalfLike, j_v: HalfLike, m_v: HalfLike) -> "CrystalTensorOp":
        return cls(half(j_h), half(m_h), half(j_v), half(m_v))

    def __str__(self):
        return f"tau^{self.j_H}_H,{self.m_H} (x) tau^{self.j_V}_V,{self.m_V}"


IDENTITY = CrystalTensorOp.of(0, 0, 0, 0)

VANISHED = "0 (operator vanishes)"


def op_text(op: CrystalTensorOp | None) -> str:
    return VANISHED if op is None else str(op)

# dinucleotides for which the third-position transversion rank b is 2
DEFAULT_B_LIST = frozenset({"CA", "GA", "CG", "UG", "UA", "UU", "AU", "AA", "GG", "AG"})


@dataclass(frozen=True)
class RankRules:
    """Operator ranks by position and context (defaults reproduce the reference census).

    a: V-rank of transitions per position.  b: H-rank of third-position
    transversions (``b_high`` for dinucleotides in ``b_list``).  c: H-rank of
    first/second-position C->A (``c_same`` when the codon and its U-variant at
    that position share an irrep copy).  d: V-rank of transversions per
    position.  ``cg_rank``/``ua_rank``: H-rank of first/second-position C->G
    and U->A.
    """

    a: dict = field(default_factory=lambda: {1: half(1), 2: half(2), 3: half(0)})
    b_list: frozenset = DEFAULT_B_LIST
    b_high: HalfInt = half(2)
    b_low: HalfInt = half(1)
    c_same: HalfInt = half(1)
    c_diff: HalfInt = half(2)
    d: dict = field(default_factory=lambda: {1: half(1), 2: half(2), 3: half(1)})
    cg_rank: HalfInt = half(1)
    ua_rank: HalfInt = half(2)

    def __hash__(self):
        return hash((tuple(sorted(self.a.items())), self.b_list, self.b_high, self.b_low,
                     self.c_same, self.c_diff, tuple(sorted(self.d.items())), self.cg_rank, self.ua_rank))

    def b(self, codon: str) -> HalfInt:
        return self.b_high if codon[:2] in self.b_list else self.b_low

    def c(self, codon: str, position: int) -> HalfInt:
        partner = substitute(codon, position, "U")
        same = codon_labels(codon).copy == codon_labels(partner).copy
        return self.c_same if same else self.c_diff


def _factor(j: HalfInt, m: HalfInt, rank: HalfInt, comp: HalfInt, order: Order):
    if rank == 0:
        return j, m
    return couple(j, m, rank, comp, order)


def we_apply(labels: Labels, op: CrystalTensorOp, order: Order | str = Order.STATE_FIRST) -> Labels:
    """Labels of the single state reached by ``op`` from a state with ``labels``.

    The reduced matrix element is taken as non-vanishing (unit magnitude).
    """
    order = Order.parse(order)
    jh, mh = _factor(labels.J_H, labels.m_H, op.j_H, op.m_H, order)
    jv, mv = _factor(labels.J_V, labels.m_V, op.j_V, op.m_V, order)
    return Labels(jh, jv, mh, mv)


def substitute(codon: str, position: int | MisreadSpec, letter: str | None = None) -> str:
    """Replace one nucleotide.  Accepts either a spec or (position, letter)."""
    codon = parse_codon(codon)
    if isinstance(position, MisreadSpec):
        spec = position
        if codon[spec.position - 1] != spec.source:
            raise ValueError(f"{codon} has no {spec.source} at position {spec.position}")
        position, letter = spec.position, spec.target
    i = position - 1
    return codon[:i] + letter + codon[i + 1 :]


def operator_for(spec: MisreadSpec, codon: str, rules: RankRules | None = None) -> CrystalTensorOp:
    """The crystal tensor operator modelling ``spec`` on ``codon``."""
    rules = rules or RankRules()
    codon = parse_codon(codon)
    if codon[spec.position - 1] != spec.source:
        raise ValueError(f"{codon} has no {spec.source} at position {spec.position}")
    pos = spec.position
    one = half(1)
    if spec.kind is Kind.TRANSITION:
        return CrystalTensorOp(one, -one, rules.a[pos], half(0))
    if spec.kind is Kind.TRANSVERSION_CG_OR_UA:
        if pos == 3:
            b = rules.b(codon)
            rank = b if spec.source == "C" else b - 1
        else:
            rank = rules.cg_rank if spec.source == "C" else rules.ua_rank
        return CrystalTensorOp(rank, half(0), rules.d[pos], -one)
    # C -> A: third position uses the b-table, first/second the c-rule
    rank = rules.b(codon) if pos == 3 else rules.c(codon, pos)
    return CrystalTensorOp(rank, -one, rules.d[pos], -one)


@dataclass(frozen=True)
class AllowedResult:
    """``operator`` and ``predicted`` are None when the operator vanishes."""

    codon: str
    target: str
    operator: CrystalTensorOp | None
    predicted: Labels | None
    expected: Labels
    same_copy: bool

    @property
    def allowed(self) -> bool:
        return self.predicted is not None and self.predicted == self.expected

    def __bool__(self):
        return self.allowed


def allowed(
    codon: str,
    spec: MisreadSpec,
    rules: RankRules | None = None,
    order: Order | str = Order.STATE_FIRST,
) -> AllowedResult:
    """Is the misreading ``spec`` of ``codon`` connected by its operator?

    Only (J_H, J_V, m_H, m_V) are compared; whether source and target sit in
    the same irrep copy is reported in ``same_copy`` but not required.
    """
    codon = parse_codon(codon)
    target = substitute(codon, spec)
    src = codon_labels(codon)
    dst = codon_labels(target)
    try:
        op = operator_for(spec, codon, rules)
    except VanishingOperator:
        return AllowedResult(codon, target, None, None, dst.labels, src.copy == dst.copy)
    predicted = we_apply(src.labels, op, order)
    return AllowedResult(codon, target, op, predicted, dst.labels, src.copy == dst.copy)


@dataclass(frozen=True)
class DoubleResult:
    codon: str
    virtual_codon: str
    target: str
    operators: tuple[CrystalTensorOp | None, CrystalTensorOp | None]
    virtual: Labels | None
    predicted: Labels | None
    expected: Labels

    @property
    def allowed(self) -> bool:
        return self.predicted is not None and self.predicted == self.expected

    def __bool__(self):
        return self.allowed


def _maybe_operator(spec, codon, rules):
    try:
        return operator_for(spec, codon, rules)
    except VanishingOperator:
        return None


def allowed_double(
    codon: str,
    first: MisreadSpec | None,
    second: MisreadSpec | None,
    rules: RankRules | None = None,
    order: Order | str = Order.STATE_FIRST,
) -> DoubleResult:
    """Two-step misreading through a virtual state.

    ``first`` acts on the codon's labels, producing the virtual labels carried
    by the once-substituted codon; ``second`` then acts on those virtual
    labels, with its operator chosen for the virtual codon.  ``None`` stands
    for the identity operator.
    """
    codon = parse_codon(codon)
    if first is not None and second is not None:
        if first.position == second.position:
            raise ValueError("the two misreadings must be at different positions")
    virtual_codon, op1 = codon, IDENTITY
    if first is not None:
        virtual_codon = substitute(codon, first)
        op1 = _maybe_operator(first, codon, rules)
    target, op2 = virtual_codon, IDENTITY
    if second is not None:
        target = substitute(virtual_codon, second)
        op2 = _maybe_operator(second, virtual_codon, rules)
    virtual = None if op1 is None else we_apply(codon_labels(codon).labels, op1, order)
    predicted = None if virtual is None or op2 is None else we_apply(virtual, op2, order)
    return DoubleResult(codon, virtual_codon, target, (op1, op2), virtual, predicted,
                        codon_labels(target).labels)
