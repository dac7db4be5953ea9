"""Sparse multivariate integer polynomials over curve-type variables.

Arithmetic is delegated to FLINT's ``fmpz_mpoly`` (via python-flint); this
module fixes the variable alphabet, the canonical term order (graded reverse
lexicographic with ``d`` first), the text and JSON formats, and the
operations the rest of the package needs: exact division, substitution,
signed variable permutations and degree truncation.
"""

from __future__ import annotations

import re
from functools import cache
from itertools import combinations
from typing import Iterable, Mapping, Union

import flint
from flint.utils.flint_exceptions import DomainError

Exponents = tuple[int, ...]

_K2_NAMES = ("d", "x1", "x2", "y1", "y2", "z1", "z2", "z3")


def label_key(label: int) -> tuple[int, bool]:
    """Sort key for signed hole labels: 1, -1, 2, -2, ..."""
    return (abs(label), label < 0)


def canonical_subset(bits: Iterable[int], k: int) -> frozenset[int]:
    """Pick the representative of ``{S, complement}`` naming a curve type.

    The smaller side wins; when both sides have ``k`` labels the side that
    holds hole ``+1`` wins.
    """
    s = frozenset(bits)
    comp = frozenset(_labels(k)) - s
    if len(s) < len(comp):
        return s
    if len(comp) < len(s):
        return comp
    return s if 1 in s else comp


def _labels(k: int) -> list[int]:
    return sorted((sign * h for h in range(1, k + 1) for sign in (1, -1)), key=label_key)


@cache
def curve_types(k: int) -> tuple[frozenset[int], ...]:
    """All canonical subsets for ``k`` holes, in variable order."""
    labels = _labels(k)
    out: list[frozenset[int]] = [frozenset()]
    for size in range(1, k + 1):
        for combo in combinations(labels, size):
            s = frozenset(combo)
            if canonical_subset(s, k) == s:
                out.append(s)
    return tuple(out)


def subset_name(s: frozenset[int]) -> str:
    return "x{" + ",".join(str(v) for v in sorted(s, key=label_key)) + "}"


class VarSet:
    """The ordered variable alphabet for diagrams with ``k`` holes.

    Use :func:`varset` rather than constructing directly so that polynomials
    over the same ``k`` share one instance.
    """

    def __init__(self, k: int):
        if k < 0:
            raise ValueError("k must be non-negative")
        self.k = k
        self.types = curve_types(k)
        if k == 2:
            self.names = _K2_NAMES
        elif k == 1:
            self.names = ("d", "a")
        else:
            self.names = ("d",) + tuple(subset_name(s) for s in self.types[1:])
        self.index = {name: i for i, name in enumerate(self.names)}
        self.type_index = {s: i for i, s in enumerate(self.types)}
        self.ctx = flint.fmpz_mpoly_ctx.get(tuple(f"v{i}" for i in range(len(self.names))), "degrevlex")

    def __len__(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        return f"VarSet(k={self.k}, {len(self)} variables)"

    def __reduce__(self):
        return (varset, (self.k,))

    def var(self, name: str) -> Polynomial:
        return Polynomial(self, self.ctx.gens()[self._idx(name)])

    def gens(self) -> list[Polynomial]:
        return [Polynomial(self, g) for g in self.ctx.gens()]

    def _idx(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} for k={self.k}") from None


@cache
def varset(k: int) -> VarSet:
    return VarSet(k)


def grevlex_key(e: Exponents) -> tuple:
    """Ascending key; sort with ``reverse=True`` for canonical order."""
    return (sum(e), tuple(-x for x in reversed(e)))


Scalar = Union[int, "Polynomial"]


class Polynomial:
    __slots__ = ("vs", "raw")

    def __init__(self, vs: VarSet, raw):
        self.vs = vs
        self.raw = raw

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, vs: VarSet, c: int) -> Polynomial:
        return cls(vs, vs.ctx.constant(int(c)))

    @classmethod
    def zero(cls, vs: VarSet) -> Polynomial:
        return cls.const(vs, 0)

    @classmethod
    def one(cls, vs: VarSet) -> Polynomial:
        return cls.const(vs, 1)

    @classmethod
    def monomial(cls, vs: VarSet, exps: Exponents, coeff: int = 1) -> Polynomial:
        if len(exps) != len(vs):
            raise ValueError("exponent vector length does not match the variable set")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        return cls(vs, vs.ctx.from_dict({tuple(exps): int(coeff)}))

    @classmethod
    def from_terms(cls, vs: VarSet, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]]) -> Polynomial:
        acc: dict[Exponents, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != len(vs):
                raise ValueError("exponent vector length does not match the variable set")
            acc[e] = acc.get(e, 0) + int(c)
        return cls(vs, vs.ctx.from_dict({e: c for e, c in acc.items() if c}))

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.vs is not self.vs:
                raise ValueError(f"variable set mismatch: k={self.vs.k} vs k={other.vs.k}")
            return other
        if isinstance(other, int):
            return Polynomial.const(self.vs, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else Polynomial(self.vs, self.raw + o.raw)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else Polynomial(self.vs, self.raw - o.raw)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else Polynomial(self.vs, o.raw - self.raw)

    def __mul__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else Polynomial(self.vs, self.raw * o.raw)

    __rmul__ = __mul__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.vs, -self.raw)

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power")
        return Polynomial(self.vs, self.raw**e)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.raw == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vs is other.vs and self.raw == other.raw

    def __hash__(self) -> int:
        return hash((self.vs.k, tuple(self.terms())))

    def __bool__(self) -> bool:
        return not self.raw.is_zero()

    def __len__(self) -> int:
        return len(self.raw)

    def __repr__(self) -> str:
        text = self.to_string()
        if len(text) > 80:
            text = text[:77] + "..."
        return f"Polynomial({text})"

    # -- inspection -----------------------------------------------------
    def terms(self) -> list[tuple[Exponents, int]]:
        """Terms in canonical (descending grevlex) order."""
        items = [(tuple(int(x) for x in e), int(c)) for e, c in self.raw.to_dict().items()]
        items.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
        return items

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self.raw.is_zero():
            return -1
        return int(self.raw.total_degree())

    def is_monomial(self) -> bool:
        return len(self.raw) == 1

    def evaluate(self, point: Mapping[str, int] | list[int]) -> int:
        if isinstance(point, Mapping):
            missing = [nm for nm in self.vs.names if nm not in point]
            if missing:
                raise KeyError(f"no value for {missing}")
            values = [int(point[nm]) for nm in self.vs.names]
        else:
            values = [int(v) for v in point]
        if len(values) != len(self.vs):
            raise ValueError(f"expected {len(self.vs)} values, got {len(values)}")
        return int(self.raw(*(flint.fmpz(v) for v in values)))

    # -- ring operations named by the package --------------------------
    def exact_div(self, q: Polynomial) -> Polynomial | None:
        """Quotient ``r`` with ``q * r == self``, or None if ``q`` does not divide."""
        q = self._coerce(q)
        if not q:
            raise ZeroDivisionError("division by the zero polynomial")
        try:
            return Polynomial(self.vs, self.raw / q.raw)
        except DomainError:
            return None

    def substitute(self, bindings: Mapping[str, Scalar]) -> Polynomial:
        if not bindings:
            return self
        gens = list(self.vs.ctx.gens())
        for name, value in bindings.items():
            i = self.vs._idx(name)
            gens[i] = self._coerce(value).raw if not isinstance(value, int) else self.vs.ctx.constant(value)
        return Polynomial(self.vs, self.raw.compose(*gens))

    def var_map(self, m: Mapping[str, tuple[int, str]]) -> Polynomial:
        check_involution(self.vs, m)
        gens = list(self.vs.ctx.gens())
        images = list(gens)
        for name, (sign, target) in m.items():
            images[self.vs._idx(name)] = gens[self.vs._idx(target)] * sign
        return Polynomial(self.vs, self.raw.compose(*images))

    def h_truncate(self, target_degree: int) -> Polynomial:
        if target_degree < 0:
            raise ValueError("target degree must be non-negative")
        keep = {e: c for e, c in self.raw.to_dict().items() if sum(e) == target_degree}
        return Polynomial(self.vs, self.vs.ctx.from_dict(keep))

    # -- serialization --------------------------------------------------
    def to_string(self) -> str:
        pieces = []
        for idx, (e, c) in enumerate(self.terms()):
            factors = [str(abs(c))]
            for name, x in zip(self.vs.names, e):
                if x == 1:
                    factors.append(name)
                elif x:
                    factors.append(f"{name}^{x}")
            body = "*".join(factors)
            if idx == 0:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces) if pieces else "0"

    __str__ = to_string

    def to_json(self) -> list:
        return [[c, list(e)] for e, c in self.terms()]

    @classmethod
    def from_json(cls, vs: VarSet, data: list) -> Polynomial:
        return cls.from_terms(vs, ((tuple(e), c) for c, e in data))


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\{[-0-9, ]+\}|[a-z][0-9]*)|(?P<op>[-+*^()]))")


def parse(vs: VarSet, text: str) -> Polynomial:
    """Parse polynomial text.

    Accepts the canonical grammar ``term (("+"|"-") term)*`` with
    ``term := coeff ("*" var ("^" exp)?)*`` and, for convenience, omitted
    coefficients, implicit ``1``, and parenthesised sub-expressions.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:pos + 20]!r}")
        pos = m.end()
        kind = m.lastgroup
        tok = m.group(kind)
        if kind == "var" and tok.startswith("x{"):
            labels = frozenset(int(v) for v in tok[2:-1].split(","))
            if labels <= set(_labels(vs.k)):
                tok = vs.names[vs.type_index[canonical_subset(labels, vs.k)]]
            else:
                tok = subset_name(labels)
        tokens.append((kind, tok))
    tokens.append(("end", ""))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        i += 1
        return tokens[i - 1]

    def expr() -> Polynomial:
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term() -> Polynomial:
        acc = power()
        while peek() == ("op", "*") or peek()[0] in ("num", "var") or peek() == ("op", "("):
            if peek() == ("op", "*"):
                take()
            acc = acc * power()
        return acc

    def power() -> Polynomial:
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, tok = take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            base = base ** int(tok)
        return base

    def atom() -> Polynomial:
        kind, tok = take()
        if kind == "num":
            return Polynomial.const(vs, int(tok))
        if kind == "var":
            if tok not in vs.index:
                raise ValueError(f"unknown variable {tok!r} for k={vs.k}")
            return vs.var(tok)
        if (kind, tok) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, tok) == ("op", "-"):
            return -power()
        raise ValueError(f"unexpected token {tok!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input at token {peek()[1]!r}")
    return result


# -- signed variable permutations ------------------------------------------

VarMap = Mapping[str, tuple[int, str]]


def check_involution(vs: VarSet, m: VarMap) -> None:
    for name, (sign, target) in m.items():
        vs._idx(name)
        vs._idx(target)
        if sign not in (1, -1):
            raise ValueError(f"sign for {name} must be +1 or -1")
        back_sign, back = m.get(target, (1, target))
        if back != name or sign * back_sign != 1:
            raise ValueError(f"map is not an involution at {name!r}")


def _swap(*pairs: tuple[str, str]) -> dict[str, tuple[int, str]]:
    m = {}
    for a, b in pairs:
        m[a] = (1, b)
        m[b] = (1, a)
    return m


def _negate(*names: str) -> dict[str, tuple[int, str]]:
    return {v: (-1, v) for v in names}


K2_INVOLUTIONS: dict[str, dict[str, tuple[int, str]]] = {
    "h1": _swap(("x1", "y1"), ("z1", "z3")),
    "h2": _swap(("x2", "y2"), ("z1", "z3")),
    "h3": _swap(("x1", "y1"), ("x2", "y2")),
    "ht": _swap(("x1", "x2"), ("y1", "y2")),
    "g1": _negate("x1", "x2", "z2", "z3"),
    "g2": _negate("y1", "y2", "z2", "z3"),
    "g3": _negate("x1", "y2", "z1", "z2"),
    "g1g2": _negate("x1", "x2", "y1", "y2"),
    "g1g3": _negate("x2", "y2", "z1", "z3"),
    "g2g3": _negate("x1", "y1", "z1", "z3"),
    "g1g2g3": _negate("x2", "y1", "z1", "z2"),
}
