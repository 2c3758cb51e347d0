"""Decision lists of sign conditions with three-valued evaluation.

A case is a disjunction of branches, a branch a conjunction of atomic
conditions such as ``"Delta>0"`` or ``"VarG==2"``. Every branch of every
case is evaluated in full, so overlapping or missing cases show up as
errors instead of being hidden by an else-chain.

Atoms evaluate to True, False or None (unknown sign, float mode only) and
combine with Kleene logic.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import CaseOverlap, NoCaseMatched
from .numeric import Sign

_OPS = {
    "==": operator.eq, "!=": operator.ne,
    "<=": operator.le, ">=": operator.ge,
    "<": operator.lt, ">": operator.gt,
}
_INT = {Sign.NEGATIVE: -1, Sign.ZERO: 0, Sign.POSITIVE: 1, Sign.UNKNOWN: None}
_ATOM = re.compile(r"^\s*(\w+)\s*(==|!=|<=|>=|<|>)\s*(-?\d+)\s*$")


@dataclass(frozen=True)
class Atom:
    name: str
    op: str
    value: int

    def __call__(self, data):
        x = data[self.name]
        if x is None or x is Sign.UNKNOWN:
            return None
        return _OPS[self.op](int(x), self.value)

    def __str__(self):
        return f"{self.name}{self.op}{self.value}"


def parse_atom(text: str) -> Atom:
    m = _ATOM.match(text)
    if not m:
        raise ValueError(f"bad condition {text!r}")
    return Atom(m.group(1), m.group(2), int(m.group(3)))


@dataclass(frozen=True)
class Branch:
    case: int
    label: str
    atoms: tuple
    # "paper" for the published conditions, "completion" for added ones
    origin: str = "paper"

    @classmethod
    def of(cls, case, label, conds, origin="paper"):
        return cls(case, label, tuple(parse_atom(c) for c in conds.split(",")), origin)

    @cached_property
    def names(self) -> tuple:
        return tuple(dict.fromkeys(a.name for a in self.atoms))

    def __call__(self, data):
        result = True
        for a in self.atoms:
            v = a(data)
            if v is False:
                return False
            if v is None:
                result = None
        return result

    @cached_property
    def _compiled(self):
        return tuple((a.name, _OPS[a.op], a.value) for a in self.atoms)

    def _eval_ints(self, ints):
        # same as __call__ on data already reduced to int-or-None
        result = True
        for name, op, value in self._compiled:
            x = ints[name]
            if x is None:
                result = None
            elif not op(x, value):
                return False
        return result

    def __str__(self):
        return ", ".join(str(a) for a in self.atoms)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision list on one instance."""

    position: object
    branch: Optional[str]
    signs: dict
    consulted: tuple = ()
    unknown: tuple = ()
    reason: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def case(self) -> int:
        return int(self.position)

    @property
    def name(self) -> str:
        return self.position.label

    def trace(self):
        """(quantity, sign) pairs consulted by the decision."""
        names = self.consulted or tuple(self.signs)
        return [(n, self.signs[n]) for n in names]


def fmt(x) -> str:
    if x is None:
        return "?"
    if isinstance(x, Sign):
        return str(x)
    return str(x)


def decide(branches, data: dict, position_type, exact: bool,
           paper_only: bool = False) -> Verdict:
    """Run a decision list on sign data.

    Exact mode raises :class:`NoCaseMatched` or :class:`CaseOverlap` when
    the list is not a partition at this point; float mode returns the
    indeterminate position with the reason instead.
    """
    if paper_only:
        branches = [b for b in branches if b.origin == "paper"]
    # plain ints (variation counts) pass through; Sign.UNKNOWN == 2 must not
    ints = {k: _INT[v] if type(v) is Sign else v for k, v in data.items()}
    hits, maybes = [], []
    if None in ints.values():
        for b in branches:
            v = b._eval_ints(ints)
            if v is True:
                hits.append(b)
            elif v is None:
                maybes.append(b)
    else:
        # two-valued shortcut when every sign is known
        hits = [b for b in branches
                if all(op(ints[name], value) for name, op, value in b._compiled)]
    indeterminate = position_type(0)
    cases = sorted({b.case for b in hits})
    if len(cases) == 1:
        b = hits[0]
        return Verdict(position_type(b.case), b.label, dict(data), b.names)
    unknown = tuple(dict.fromkeys(
        a.name for b in maybes for a in b.atoms if a(data) is None))
    if len(cases) > 1:
        msg = f"cases {cases} all match: {_summary(data)}"
        if exact:
            raise CaseOverlap(msg, dict(data))
        return Verdict(indeterminate, None, dict(data), (), unknown, msg)
    if maybes:
        msg = "signs too close to zero: " + ", ".join(unknown)
        return Verdict(indeterminate, None, dict(data), (), unknown, msg)
    msg = f"no case matches: {_summary(data)}"
    if exact:
        raise NoCaseMatched(msg, dict(data))
    return Verdict(indeterminate, None, dict(data), (), (), msg)


def _summary(data) -> str:
    return ", ".join(f"{k}={fmt(v)}" for k, v in data.items())
