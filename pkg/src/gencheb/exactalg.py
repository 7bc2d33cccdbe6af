"""Sparse multivariate Laurent polynomials over the integers.

A :class:`LaurentPoly` stores a sorted tuple of variables and a dict mapping
dense exponent tuples (aligned with that variable tuple) to Python ints.
Variables whose exponent column is identically zero are pruned, so two equal
polynomials always have identical internal state.

Term order is graded-lexicographic: larger total degree first, ties broken
lexicographically with the smallest :class:`VarId` most significant.
"""

from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import DivisionByZero, NonInvertibleImage, NotDivisible, ZeroDenominator

FAMILIES = ("t", "u", "x", "y")

_VAR_RE = re.compile(r"^([tuxy])(-?\d+)$")


@dataclass(frozen=True, order=True)
class VarId:
    """Indexed indeterminate such as ``t3``, ``x-1`` or ``u0``."""

    family: str
    index: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown variable family {self.family!r}")

    def __str__(self):
        return f"{self.family}{self.index}"

    @classmethod
    def parse(cls, name: str) -> "VarId":
        m = _VAR_RE.match(name.strip())
        if not m:
            raise ValueError(f"bad variable name {name!r}")
        return cls(m.group(1), int(m.group(2)))


def t(i: int) -> VarId:
    return VarId("t", i)


def x(i: int) -> VarId:
    return VarId("x", i)


def u(i: int) -> VarId:
    return VarId("u", i)


def _glex(e: tuple[int, ...]):
    return (sum(e), e)


def _embed(terms: dict, old: tuple, new: tuple) -> dict:
    if old == new:
        return terms
    pos = {v: k for k, v in enumerate(new)}
    idx = [pos[v] for v in old]
    n = len(new)
    out = {}
    for e, c in terms.items():
        f = [0] * n
        for k, ek in zip(idx, e):
            f[k] = ek
        out[tuple(f)] = c
    return out


class LaurentPoly:
    """Immutable exact Laurent polynomial with integer coefficients."""

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int] | None = None, vars: Iterable[VarId] = ()):
        vars = tuple(vars)
        raw = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != len(vars):
                raise ValueError("exponent tuple length does not match variables")
            c = int(c)
            if c:
                raw[e] = raw.get(e, 0) + c
        if len(set(vars)) != len(vars):
            raise ValueError("duplicate variables")
        order = sorted(range(len(vars)), key=lambda k: vars[k])
        svars = tuple(vars[k] for k in order)
        sterms = {}
        for e, c in raw.items():
            if c:
                sterms[tuple(e[k] for k in order)] = c
        self._set(svars, sterms)

    def _set(self, vars, terms):
        self._vars = vars
        self._terms = terms
        self._hash = None
        self._prune()

    @classmethod
    def _raw(cls, vars: tuple, terms: dict) -> "LaurentPoly":
        # trusted constructor: vars sorted, no zero coefficients
        obj = cls.__new__(cls)
        obj._set(vars, terms)
        return obj

    def _prune(self):
        n = len(self._vars)
        if not n:
            return
        live = [False] * n
        for e in self._terms:
            for k in range(n):
                if e[k]:
                    live[k] = True
        if all(live):
            return
        keep = [k for k in range(n) if live[k]]
        self._vars = tuple(self._vars[k] for k in keep)
        self._terms = {tuple(e[k] for k in keep): c for e, c in self._terms.items()}

    # -- construction ----------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls._raw((), {(): int(c)} if c else {})

    @classmethod
    def var(cls, v: VarId, power: int = 1) -> "LaurentPoly":
        return cls._raw((v,), {(power,): 1})

    @classmethod
    def monomial(cls, coeff: int, exps: Mapping[VarId, int]) -> "LaurentPoly":
        vars = tuple(exps)
        return cls({tuple(exps[v] for v in vars): coeff}, vars)

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Mapping[VarId, int]]]) -> "LaurentPoly":
        out = cls.constant(0)
        for c, exps in terms:
            out = out + cls.monomial(c, exps)
        return out

    # -- inspection ------------------------------------------------------

    @property
    def vars(self) -> tuple[VarId, ...]:
        return self._vars

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self):
        return len(self._terms)

    def terms(self) -> list[tuple[int, tuple[int, ...]]]:
        """``(coeff, exponents)`` pairs in canonical (graded-lex descending) order."""
        return [(self._terms[e], e) for e in sorted(self._terms, key=_glex, reverse=True)]

    def items(self) -> Iterator[tuple[int, dict[VarId, int]]]:
        for c, e in self.terms():
            yield c, {v: k for v, k in zip(self._vars, e) if k}

    def coefficients(self) -> list[int]:
        return [c for c, _ in self.terms()]

    def coefficient(self, exps: Mapping[VarId, int]) -> int:
        if any(v not in self._vars for v, k in exps.items() if k):
            return 0
        e = tuple(exps.get(v, 0) for v in self._vars)
        return self._terms.get(e, 0)

    def leading_term(self) -> tuple[int, tuple[int, ...]]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=_glex)
        return self._terms[e], e

    def min_exponents(self) -> dict[VarId, int]:
        return {v: min(e[k] for e in self._terms) for k, v in enumerate(self._vars)}

    def max_exponents(self) -> dict[VarId, int]:
        return {v: max(e[k] for e in self._terms) for k, v in enumerate(self._vars)}

    def has_negative_exponents(self) -> bool:
        return any(k < 0 for e in self._terms for k in e)

    def constant_term(self) -> int:
        return self._terms.get((0,) * len(self._vars), 0)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def _aligned(self, other: "LaurentPoly"):
        if self._vars == other._vars:
            return self._vars, self._terms, other._terms
        vars = tuple(sorted(set(self._vars) | set(other._vars)))
        return vars, _embed(self._terms, self._vars, vars), _embed(other._terms, other._vars, vars)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        vars, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self._vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPoly._raw((), {})
        vars, a, b = self._aligned(other)
        return LaurentPoly._raw(vars, _mul_terms(a, b, len(vars)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial() or abs(self.coefficients()[0]) != 1:
                raise NonInvertibleImage("only unit monomials have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(self._vars, {tuple(k * ek for ek in e): c ** (-k)})
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return to_str(self)


def _mul_terms(a: dict, b: dict, n: int) -> dict:
    """Product of aligned term dicts via Kronecker packing of exponents."""
    if n == 0:
        return {(): a[()] * b[()]}
    lo = [min(e[k] for e in a) + min(e[k] for e in b) for k in range(n)]
    hi = [max(e[k] for e in a) + max(e[k] for e in b) for k in range(n)]
    lo_a = [min(e[k] for e in a) for k in range(n)]
    lo_b = [min(e[k] for e in b) for k in range(n)]
    radix = [h - l + 1 for h, l in zip(hi, lo)]
    place = [1] * n
    for k in range(1, n):
        place[k] = place[k - 1] * radix[k - 1]

    def pack(terms, low):
        out = []
        for e, c in terms.items():
            key = 0
            for k in range(n):
                key += (e[k] - low[k]) * place[k]
            out.append((key, c))
        return out

    pa = pack(a, lo_a)
    pb = pack(b, lo_b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    acc: dict[int, int] = {}
    get = acc.get
    for kb, cb in pb:
        for ka, ca in pa:
            key = ka + kb
            acc[key] = get(key, 0) + ca * cb
    out = {}
    for key, c in acc.items():
        if not c:
            continue
        e = [0] * n
        for k in range(n - 1, -1, -1):
            q, key = divmod(key, place[k])
            e[k] = q + lo[k]
        out[tuple(e)] = c
    return out


# -- named operations ------------------------------------------------------


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_sub(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a - b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_eq(a: LaurentPoly, b: LaurentPoly) -> bool:
    return a == b


def poly_div_exact(a: LaurentPoly, b: LaurentPoly, *, laurent: bool | None = None) -> LaurentPoly:
    """Return ``q`` with ``a == q * b``, or raise :class:`NotDivisible`.

    Division happens in ``Z[x]`` when both operands are polynomials and in the
    Laurent ring otherwise; pass ``laurent`` to force either ring.  The
    quotient's exponents are confined to the box implied by the per-variable
    minimum and maximum exponents of ``a`` and ``b``, which makes the
    leading-term loop terminate even for Laurent input.
    """
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if a.is_zero():
        return a
    if laurent is None:
        laurent = a.has_negative_exponents() or b.has_negative_exponents()
    vars, ta, tb = a._aligned(b)
    n = len(vars)
    lo, hi = [], []
    for k in range(n):
        lo_k = min(e[k] for e in ta) - min(e[k] for e in tb)
        hi_k = max(e[k] for e in ta) - max(e[k] for e in tb)
        if not laurent:
            lo_k = max(lo_k, 0)
        if lo_k > hi_k:
            raise NotDivisible(f"{a} is not divisible by {b}")
        lo.append(lo_k)
        hi.append(hi_k)

    lt_e = max(tb, key=_glex)
    lt_c = tb[lt_e]
    rest = [(e, c) for e, c in tb.items() if e != lt_e]

    def hkey(e):
        return (-sum(e), tuple(-k for k in e))

    r = dict(ta)
    heap = [(hkey(e), e) for e in r]
    heapq.heapify(heap)
    q = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = r.pop(e, 0)
        if not c:
            continue
        s = tuple(ek - bk for ek, bk in zip(e, lt_e))
        if any(sk < l or sk > h for sk, l, h in zip(s, lo, hi)) or c % lt_c:
            raise NotDivisible(f"{a} is not divisible by {b}")
        qc = c // lt_c
        q[s] = qc
        for eb, cb in rest:
            m = tuple(sk + bk for sk, bk in zip(s, eb))
            old = r.get(m)
            v = (old or 0) - qc * cb
            if v:
                r[m] = v
                if old is None:
                    heapq.heappush(heap, (hkey(m), m))
            elif old is not None:
                del r[m]
    return LaurentPoly._raw(vars, q)


def substitute(p: LaurentPoly, sigma: Mapping[VarId, LaurentPoly | int]) -> LaurentPoly:
    """Ring-homomorphic image of ``p`` under ``v -> sigma[v]``.

    Variables absent from ``sigma`` are left alone.  A variable that occurs
    with a negative exponent must map to a unit monomial (coefficient +-1).
    """
    if not sigma or p.is_zero():
        return p
    images = {}
    mins = p.min_exponents()
    for v in p.vars:
        if v in sigma:
            img = LaurentPoly._coerce(sigma[v])
            if mins[v] < 0 and not (img.is_monomial() and abs(img.coefficients()[0]) == 1):
                raise NonInvertibleImage(f"{v} has negative exponent but maps to {img}")
            images[v] = img
        else:
            images[v] = LaurentPoly.var(v)
    if all(img.is_monomial() for img in images.values()):
        return _substitute_monomial(p, images)
    cache: dict[tuple[VarId, int], LaurentPoly] = {}

    def power(v, k):
        key = (v, k)
        if key not in cache:
            cache[key] = images[v] ** k
        return cache[key]

    acc = LaurentPoly.constant(0)
    for c, e in p.terms():
        term = LaurentPoly.constant(c)
        for v, k in zip(p.vars, e):
            if k:
                term = term * power(v, k)
        acc = acc + term
    return acc


def _substitute_monomial(p: LaurentPoly, images: Mapping[VarId, LaurentPoly]) -> LaurentPoly:
    out_vars = sorted({w for img in images.values() for w in img.vars})
    pos = {w: k for k, w in enumerate(out_vars)}
    n = len(out_vars)
    img_data = []
    for v in p.vars:
        (c, e), = images[v].terms()
        img_data.append((c, [(pos[w], ek) for w, ek in zip(images[v].vars, e)]))
    out: dict[tuple, int] = {}
    for e, c in p._terms.items():
        f = [0] * n
        coeff = c
        for (ic, parts), k in zip(img_data, e):
            if not k:
                continue
            coeff *= ic ** k if k > 0 else ic ** (-k)
            for j, ej in parts:
                f[j] += k * ej
        key = tuple(f)
        s = out.get(key, 0) + coeff
        if s:
            out[key] = s
        else:
            del out[key]
    return LaurentPoly._raw(tuple(out_vars), out)


def rename(p: LaurentPoly, mapping: Mapping[VarId, VarId]) -> LaurentPoly:
    """Relabel variables; several variables may land on the same target."""
    targets = [mapping.get(v, v) for v in p.vars]
    new_vars = tuple(sorted(set(targets)))
    pos = [new_vars.index(w) for w in targets]
    if len(new_vars) == len(targets):
        out = {}
        for e, c in p._terms.items():
            ne = [0] * len(new_vars)
            for k, val in zip(pos, e):
                ne[k] = val
            out[tuple(ne)] = c
        return LaurentPoly._raw(new_vars, out)
    out = {}
    for e, c in p._terms.items():
        ne = [0] * len(new_vars)
        for k, val in zip(pos, e):
            ne[k] += val
        key = tuple(ne)
        c2 = out.get(key, 0) + c
        if c2:
            out[key] = c2
        else:
            del out[key]
    return LaurentPoly._raw(new_vars, out)


def eval_rational(p: LaurentPoly, point: Mapping[VarId, Fraction | int]) -> Fraction:
    """Exact evaluation at a rational point.

    Exponents are shifted to be nonnegative and denominators cleared, so the
    sum over terms runs in integers with one Fraction built at the end.
    """
    if not p._terms:
        return Fraction(0)
    lows, highs = p.min_exponents(), p.max_exponents()
    tables = []
    scale = Fraction(1)
    for v in p.vars:
        if v not in point:
            raise ValueError(f"no value assigned to {v}")
        val = Fraction(point[v])
        lo = min(0, lows[v])
        span = highs[v] - lo
        if lo < 0:
            if val == 0:
                raise ZeroDenominator(f"negative power of a variable evaluated at 0 in {p}")
            scale *= val ** lo
        a, b = val.numerator, val.denominator
        apow, bpow = [1], [1]
        for _ in range(span):
            apow.append(apow[-1] * a)
            bpow.append(bpow[-1] * b)
        tables.append((lo, span, apow, bpow))
        scale /= bpow[span]
    total = 0
    for e, c in p._terms.items():
        term = c
        for (lo, span, apow, bpow), k in zip(tables, e):
            k -= lo
            term *= apow[k] * bpow[span - k]
        total += term
    return scale * total


# -- formatting and serialization -------------------------------------------


def to_str(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for c, e in p.terms():
        factors = []
        for v, k in zip(p.vars, e):
            if k == 1:
                factors.append(str(v))
            elif k:
                factors.append(f"{v}^{k}")
        mono = "*".join(factors)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>[tuxy])_?\{?(?P<idx>-?\d+)\}?|\^\{?(?P<exp>-?\d+)\}?|(?P<op>[-+*]))"
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse a sum of terms like ``t0^2*t1 - 2*t0`` or ``t_0^2 t_1 - 2t_0``.

    Juxtaposed factors multiply, so ``4t_0^33t_0`` reads as ``4*t0^34``.
    """
    pos = 0
    text = text.strip()
    acc = LaurentPoly.constant(0)
    sign = 1
    coeff = None
    mono: dict[VarId, int] = {}
    last = None
    have_term = False

    def flush():
        nonlocal acc, coeff, mono, sign, have_term, last
        if have_term:
            acc = acc + LaurentPoly.monomial(sign * (1 if coeff is None else coeff), mono)
        coeff, mono, sign, have_term, last = None, {}, 1, False, None

    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at offset {pos}")
        pos = m.end()
        if m.group("num") is not None:
            coeff = (1 if coeff is None else coeff) * int(m.group("num"))
            have_term, last = True, None
        elif m.group("var") is not None:
            v = VarId(m.group("var"), int(m.group("idx")))
            mono[v] = mono.get(v, 0) + 1
            have_term, last = True, v
        elif m.group("exp") is not None:
            if last is None:
                raise ValueError(f"exponent without a variable in {text!r}")
            mono[last] += int(m.group("exp")) - 1
            last = None
        elif m.group("op") in "+-":
            if have_term:
                flush()
                sign = 1 if m.group("op") == "+" else -1
            else:
                sign *= 1 if m.group("op") == "+" else -1
    if not have_term:
        raise ValueError(f"empty polynomial {text!r}")
    flush()
    return acc


def to_json_obj(p: LaurentPoly) -> dict:
    return {
        "vars": [str(v) for v in p.vars],
        "terms": [{"c": str(c), "e": list(e)} for c, e in p.terms()],
    }


def from_json_obj(obj: Mapping) -> LaurentPoly:
    vars = [VarId.parse(s) for s in obj["vars"]]
    return LaurentPoly({tuple(tm["e"]): int(tm["c"]) for tm in obj["terms"]}, vars)


def to_json(p: LaurentPoly) -> str:
    return json.dumps(to_json_obj(p), separators=(",", ":"))


def from_json(text: str) -> LaurentPoly:
    return from_json_obj(json.loads(text))


def to_tsv(p: LaurentPoly) -> str:
    """Header line naming the variables, then ``coeff<TAB>e1<TAB>e2...`` rows."""
    lines = ["#vars\t" + "\t".join(str(v) for v in p.vars)]
    for c, e in p.terms():
        lines.append("\t".join([str(c), *map(str, e)]))
    return "\n".join(lines) + "\n"


def from_tsv(text: str) -> LaurentPoly:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#vars"):
        raise ValueError("missing #vars header")
    vars = [VarId.parse(s) for s in lines[0].split("\t")[1:] if s]
    terms = {}
    for ln in lines[1:]:
        fields = ln.split("\t")
        terms[tuple(int(f) for f in fields[1:])] = int(fields[0])
    return LaurentPoly(terms, vars)


ZERO = LaurentPoly.constant(0)
ONE = LaurentPoly.constant(1)
