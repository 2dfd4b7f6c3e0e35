"""Exact arithmetic over prime fields: monomials, term orders, sparse polynomials.

Monomials are plain exponent tuples of length nvars. Polynomials are sparse
dicts mapping exponent tuple -> coefficient in [1, p). All coefficient
arithmetic is integer arithmetic mod p; there are no floats anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product as _iproduct
from typing import Iterable, Iterator

from .errors import NonPrimeError, ParseError

Monomial = tuple  # exponent tuple; length = number of ambient variables


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3,215,031,751 (covers 2^31)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p for a prime 2 <= p < 2^31."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or p >= 2**31 or not is_prime(p):
            raise NonPrimeError(f"characteristic must be a prime in [2, 2^31), got {p!r}")
        self.p = p

    def normalize(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def elements(self) -> range:
        return range(self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a: Monomial, b: Monomial) -> bool:
    """Does x^a divide x^b?"""
    return all(x <= y for x, y in zip(a, b))

def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """x^b / x^a, assuming divisibility."""
    return tuple(y - x for x, y in zip(a, b))

def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_degree(a: Monomial) -> int:
    return sum(a)

def mono_is_one(a: Monomial) -> bool:
    return not any(a)

def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of the given total degree, lexicographic order."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# term orders

def _grevlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: 'lex', 'grevlex', or 'elim' (block of size k first).

    The elimination order compares the first `block` exponents by grevlex,
    then the remainder by grevlex; any monomial involving a block variable
    is larger than any monomial that involves none.
    """

    kind: str
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a block size >= 1")

    def key(self, m: Monomial):
        """Sort key; larger key = larger monomial."""
        if self.kind == "grevlex":
            return _grevlex_key(m)
        if self.kind == "lex":
            return m
        k = self.block
        return _grevlex_key(m[:k]) + _grevlex_key(m[k:])


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")

def elimination_order(block: int) -> MonomialOrder:
    return MonomialOrder("elim", block)


def order_compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """-1, 0, or 1 as a <, ==, > b in the given order."""
    if len(a) != len(b):
        raise ValueError("monomials live in different ambient variable counts")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Sparse multivariate polynomial over F_p.

    Immutable by convention: no method mutates `terms` after construction.
    """

    __slots__ = ("p", "nvars", "terms")

    def __init__(self, p: int, nvars: int, terms: dict):
        self.p = p
        self.nvars = nvars
        clean = {}
        for m, c in terms.items():
            c %= p
            if c:
                if len(m) != nvars:
                    raise ValueError("exponent tuple has wrong length")
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, p: int, nvars: int, terms: dict) -> "Polynomial":
        """Construct without normalization; terms must already be clean."""
        self = object.__new__(cls)
        self.p = p
        self.nvars = nvars
        self.terms = terms
        return self

    @classmethod
    def zero(cls, p: int, nvars: int) -> "Polynomial":
        return cls._raw(p, nvars, {})

    @classmethod
    def constant(cls, p: int, nvars: int, c: int) -> "Polynomial":
        c %= p
        return cls._raw(p, nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, p: int, nvars: int, i: int, exp: int = 1) -> "Polynomial":
        m = [0] * nvars
        m[i] = exp
        return cls._raw(p, nvars, {tuple(m): 1})

    @classmethod
    def from_monomial(cls, p: int, m: Monomial, c: int = 1) -> "Polynomial":
        c %= p
        return cls._raw(p, len(m), {tuple(m): c} if c else {})

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono_is_one(m) for m in self.terms)

    def constant_value(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.p != other.p or self.nvars != other.nvars:
            raise ValueError("polynomials over different ambients")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        p = self.p
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(p, self.nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        p = self.p
        for m, c in other.terms.items():
            v = (out.get(m, 0) - c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(p, self.nvars, out)

    def __neg__(self) -> "Polynomial":
        p = self.p
        return Polynomial._raw(p, self.nvars, {m: p - c for m, c in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        p = self.p
        if isinstance(other, int):
            other %= p
            if other == 0:
                return Polynomial.zero(p, self.nvars)
            return Polynomial._raw(
                p, self.nvars, {m: c * other % p for m, c in self.terms.items()}
            )
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(p, self.nvars, out)

    __rmul__ = __mul__

    def mul_term(self, m: Monomial, c: int) -> "Polynomial":
        """Multiply by the single term c * x^m."""
        p = self.p
        c %= p
        if c == 0:
            return Polynomial.zero(p, self.nvars)
        return Polynomial._raw(
            p,
            self.nvars,
            {tuple(a + b for a, b in zip(mm, m)): cc * c % p for mm, cc in self.terms.items()},
        )

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.p, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def frobenius_power(self, e: int) -> "Polynomial":
        """Raise to the q = p^e power. Coefficients are fixed by x -> x^p on F_p,
        so only exponents scale."""
        if e < 0:
            raise ValueError("negative Frobenius power")
        q = self.p**e
        return Polynomial._raw(
            self.p, self.nvars, {tuple(x * q for x in m): c for m, c in self.terms.items()}
        )

    # -- leading terms ------------------------------------------------------

    def lead(self, order: MonomialOrder) -> tuple:
        """(monomial, coeff) of the leading term; raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.lead(order)
        if c == 1:
            return self
        inv = pow(c, self.p - 2, self.p)
        return self * inv

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw(
            self.p, self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d}
        )

    def extend(self, new_nvars: int, offset: int) -> "Polynomial":
        """Reinterpret in a larger variable list, old variable i -> offset + i."""
        pad_pre = (0,) * offset
        pad_post = (0,) * (new_nvars - offset - self.nvars)
        return Polynomial._raw(
            self.p,
            new_nvars,
            {pad_pre + m + pad_post: c for m, c in self.terms.items()},
        )

    def project(self, keep: range) -> "Polynomial":
        """Restrict to the given variable slice; other exponents must be zero."""
        out = {}
        for m, c in self.terms.items():
            for i, e in enumerate(m):
                if e and i not in keep:
                    raise ValueError("term involves a dropped variable")
            out[tuple(m[i] for i in keep)] = c
        return Polynomial(self.p, len(keep), out)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.p == other.p
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def to_string(self, varnames: Iterable[str], order: MonomialOrder = GREVLEX) -> str:
        return poly_to_string(self, list(varnames), order)

    def __repr__(self) -> str:
        names = [f"x{i}" for i in range(self.nvars)]
        return f"Polynomial(p={self.p}, {self.to_string(names)})"


def poly_pow_frobenius(f: Polynomial, e: int) -> Polynomial:
    """f^(p^e), computed by scaling exponents (coefficients are Frobenius-fixed)."""
    return f.frobenius_power(e)


def poly_to_string(f: Polynomial, varnames: list, order: MonomialOrder = GREVLEX) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for m, c in f.sorted_terms(order):
        factors = []
        for name, e in zip(varnames, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# polynomial text grammar
#
#   poly   := ['-'] term (('+'|'-') term)*
#   term   := coeff | [coeff '*'?] factor ('*'? factor)*
#   factor := ident ('^' int)?
#
# Whitespace is insignificant. Identifiers are ASCII [A-Za-z_][A-Za-z0-9_]*.

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[\^*+\-]))")


def _tokenize(text: str, line: int):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + (len(text[pos:]) - len(stripped)) + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", line, col)
        pos = m.end()
        if m.group("int") is not None:
            out.append(("int", int(m.group("int")), m.start("int") + 1))
        elif m.group("ident") is not None:
            out.append(("ident", m.group("ident"), m.start("ident") + 1))
        else:
            out.append(("op", m.group("op"), m.start("op") + 1))
    return out


def parse_polynomial(
    text: str, varnames: list, p: int, *, line: int = 1, col_offset: int = 0
) -> Polynomial:
    """Parse the polynomial grammar; errors carry 1-based line/col positions."""
    index = {name: i for i, name in enumerate(varnames)}
    nvars = len(varnames)
    toks = _tokenize(text, line)
    if not toks:
        raise ParseError("empty polynomial", line, col_offset + 1)

    def err(msg, col):
        raise ParseError(msg, line, col_offset + col)

    terms: dict = {}
    i = 0
    sign = 1
    if toks[0] == ("op", "-", toks[0][2]):
        sign = -1
        i = 1
    while True:
        # one term: optional coefficient, then factors
        if i >= len(toks):
            err("expected a term", toks[-1][2] + 1 if toks else 1)
        coeff = 1
        got_any = False
        kind, val, col = toks[i]
        if kind == "int":
            coeff = val
            got_any = True
            i += 1
            if i < len(toks) and toks[i][:2] == ("op", "*"):
                i += 1
                if i >= len(toks) or toks[i][0] != "ident":
                    err("expected a variable after '*'", toks[i - 1][2] + 1)
        exps = [0] * nvars
        while i < len(toks) and toks[i][0] == "ident":
            name = toks[i][1]
            vcol = toks[i][2]
            if name not in index:
                err(f"unknown variable {name!r}", vcol)
            e = 1
            i += 1
            if i < len(toks) and toks[i][:2] == ("op", "^"):
                i += 1
                if i >= len(toks) or toks[i][0] != "int":
                    err("expected an integer exponent after '^'", toks[i - 1][2] + 1)
                e = toks[i][1]
                i += 1
            exps[index[name]] += e
            got_any = True
            if i < len(toks) and toks[i][:2] == ("op", "*"):
                i += 1
                if i >= len(toks) or toks[i][0] != "ident":
                    err("expected a variable after '*'", toks[i - 1][2] + 1)
        if not got_any:
            err("expected a term", toks[i][2] if i < len(toks) else 1)
        m = tuple(exps)
        terms[m] = (terms.get(m, 0) + sign * coeff) % p
        if i >= len(toks):
            break
        kind, val, col = toks[i]
        if kind != "op" or val not in "+-":
            err(f"expected '+' or '-', got {val!r}", col)
        sign = 1 if val == "+" else -1
        i += 1
    return Polynomial(p, nvars, terms)


def random_homogeneous(rng, p: int, nvars: int, degree: int, max_terms: int = 3) -> Polynomial:
    """Seeded random homogeneous polynomial (possibly zero); test/census helper."""
    monos = list(monomials_of_degree(nvars, degree))
    k = rng.randint(1, max_terms)
    terms: dict = {}
    for _ in range(k):
        m = monos[rng.randrange(len(monos))]
        c = rng.randrange(1, p) if p > 2 else 1
        terms[m] = (terms.get(m, 0) + c) % p
    return Polynomial(p, nvars, terms)


def all_monomials_up_to(nvars: int, degree: int) -> list:
    """All exponent tuples of total degree <= degree (degree-major order)."""
    out = []
    for d in range(degree + 1):
        out.extend(monomials_of_degree(nvars, d))
    return out


def exponent_box(nvars: int, bound: int) -> Iterator[Monomial]:
    """All exponent tuples with each entry < bound (for F_* bases)."""
    return _iproduct(range(bound), repeat=nvars)
