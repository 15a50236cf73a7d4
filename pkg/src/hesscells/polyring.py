"""Exact sparse multivariate polynomials and matrices of them.

Coefficients live in the integers (char 0) or in a prime field F_p
(char p); prime field elements are stored as canonical residues in
[1, p-1], so a nonzero coefficient is never congruent to 0.  All values
are immutable after construction and every operation is a pure function,
so values can be shared freely across workers.

Variables are named x_{i,j} (coordinates on a translated unipotent
patch) or z_{i,j} (coordinates on a Schubert cell); they serialize as
"x_1_2" and "z_2_1".
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .combinat import Permutation


class Var(NamedTuple):
    """A named indeterminate, totally ordered by (family, row, col)."""

    family: str
    row: int
    col: int

    @property
    def name(self) -> str:
        return f"{self.family}_{self.row}_{self.col}"

    def __str__(self):
        return self.name


def xvar(i: int, j: int) -> Var:
    if i < 1 or j < 1:
        raise ValueError(f"variable indices must be positive, got ({i}, {j})")
    return Var("x", i, j)


def zvar(i: int, j: int) -> Var:
    if i < 1 or j < 1:
        raise ValueError(f"variable indices must be positive, got ({i}, {j})")
    return Var("z", i, j)


_VAR_RE = re.compile(r"^([xz])_(\d+)_(\d+)$")


def parse_var(name: str) -> Var:
    m = _VAR_RE.match(name)
    if not m:
        raise ValueError(f"cannot parse variable name {name!r}")
    return Var(m.group(1), int(m.group(2)), int(m.group(3)))


def x_universe(n: int) -> tuple:
    """Patch coordinates x_{i,j} with i + j <= n, in row-major order.

    These are the free entries of the w_0-translated unipotent matrix;
    the anti-diagonal entries are the constant 1, not variables.
    """
    return tuple(
        xvar(i, j) for i in range(1, n) for j in range(1, n - i + 1)
    )


def z_universe(w: Permutation) -> tuple:
    """Cell coordinates z_{i,j} with i < w(j) and j < w^{-1}(i), row-major.

    Their number equals the length of w.
    """
    winv = w.inverse()
    return tuple(
        zvar(i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w.n + 1)
        if i < w(j) and j < winv(i)
    )


class Monomial:
    """A product of variables with positive integer exponents.

    Stored as a tuple of (Var, exponent) pairs sorted by the canonical
    variable order; the empty tuple is the monomial 1.
    """

    __slots__ = ("exps", "_hash")

    def __init__(self, exps=()):
        items = dict(exps)
        cleaned = []
        for v, e in items.items():
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e} for {v}")
            if e > 0:
                cleaned.append((v, e))
        cleaned.sort()
        self.exps = tuple(cleaned)
        self._hash = hash(self.exps)

    @property
    def is_one(self) -> bool:
        return not self.exps

    def exponent(self, v: Var) -> int:
        for var, e in self.exps:
            if var == v:
                return e
        return 0

    def variables(self):
        return tuple(v for v, _ in self.exps)

    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def weighted_degree(self, weights) -> int:
        return sum(e * weights[v] for v, e in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        # merge of two sorted pair tuples
        a, b = self.exps, other.exps
        if not a:
            return other
        if not b:
            return self
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            va, ea = a[i]
            vb, eb = b[j]
            if va < vb:
                out.append((va, ea))
                i += 1
            elif vb < va:
                out.append((vb, eb))
                j += 1
            else:
                out.append((va, ea + eb))
                i += 1
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        m = Monomial.__new__(Monomial)
        m.exps = tuple(out)
        m._hash = hash(m.exps)
        return m

    def divides(self, other: "Monomial") -> bool:
        theirs = dict(other.exps)
        return all(theirs.get(v, 0) >= e for v, e in self.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if other does not divide self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        ours = dict(self.exps)
        for v, e in other.exps:
            ours[v] -= e
        return Monomial(ours)

    def lcm(self, other: "Monomial") -> "Monomial":
        out = dict(self.exps)
        for v, e in other.exps:
            out[v] = max(out.get(v, 0), e)
        return Monomial(out)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.is_one:
            return "1"
        return "*".join(
            f"{v.name}^{e}" if e > 1 else v.name for v, e in self.exps
        )


ONE = Monomial()

# sorts after every real variable, so shorter monomials come later in a
# term listing and constants print last
_DISPLAY_SENTINEL = (Var("~", 0, 0), 0)


def _display_key(mono: Monomial):
    return tuple((v, -e) for v, e in mono.exps) + (_DISPLAY_SENTINEL,)


def _sorted_terms(terms):
    return sorted(terms.items(), key=lambda item: _display_key(item[0]))


class Polynomial:
    """A sparse polynomial with exact coefficients.

    `char` is 0 for integer coefficients or a prime p for F_p.  Zero
    coefficients are never stored; the zero polynomial has an empty term
    map.

    >>> x11, x12 = xvar(1, 1), xvar(1, 2)
    >>> p = Polynomial.variable(x11) - Polynomial.const(1)
    >>> q = Polynomial.variable(x11) + 1
    >>> print(p * q)
    x_1_1^2 - 1
    """

    __slots__ = ("char", "terms")

    def __init__(self, terms=None, char: int = 0):
        if char < 0:
            raise ValueError("char must be 0 or a prime")
        clean = {}
        if terms:
            for mono, coeff in dict(terms).items():
                if not isinstance(mono, Monomial):
                    raise TypeError(f"term key is not a Monomial: {mono!r}")
                coeff = int(coeff)
                if char:
                    coeff %= char
                if coeff:
                    clean[mono] = coeff
        self.char = char
        self.terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, char: int = 0) -> "Polynomial":
        return cls({}, char)

    @classmethod
    def const(cls, c: int, char: int = 0) -> "Polynomial":
        return cls({ONE: c}, char)

    @classmethod
    def one(cls, char: int = 0) -> "Polynomial":
        return cls.const(1, char)

    @classmethod
    def variable(cls, v: Var, char: int = 0) -> "Polynomial":
        return cls({Monomial({v: 1}): 1}, char)

    # ------------------------------------------------------------------
    # queries

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(m.is_one for m in self.terms)

    def constant_value(self) -> int:
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get(ONE, 0)

    def variables(self):
        seen = set()
        for m in self.terms:
            seen.update(m.variables())
        return frozenset(seen)

    def num_terms(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.char != self.char:
                raise ValueError(
                    f"coefficient domain mismatch: char {self.char} vs {other.char}"
                )
            return other
        if isinstance(other, int):
            return Polynomial.const(other, self.char)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        char = self.char
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if char:
                v %= char
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._raw(out, char)

    __radd__ = __add__

    def __neg__(self):
        char = self.char
        if char:
            return self._raw({m: char - c for m, c in self.terms.items()}, char)
        return self._raw({m: -c for m, c in self.terms.items()}, char)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        char = self.char
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = m1 * m2
                v = out.get(key, 0) + c1 * c2
                if char:
                    v %= char
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return self._raw(out, char)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.char)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    @classmethod
    def _raw(cls, terms: dict, char: int) -> "Polynomial":
        """Internal: wrap an already-normalized term map."""
        p = cls.__new__(cls)
        p.char = char
        p.terms = terms
        return p

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other, self.char)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.char == other.char and self.terms == other.terms

    def __repr__(self):
        return self.to_text()

    # ------------------------------------------------------------------
    # domain changes and evaluation

    def reduce_mod(self, p: int) -> "Polynomial":
        """Image in F_p[vars]; requires integer coefficients."""
        if self.char != 0:
            raise ValueError("reduce_mod expects integer coefficients")
        return Polynomial(self.terms, p)

    def evaluate(self, point) -> int:
        """Value at an integer point, a mapping Var -> int."""
        total = 0
        for m, c in self.terms.items():
            v = c
            for var, e in m.exps:
                v *= point[var] ** e
            total += v
        if self.char:
            total %= self.char
        return total

    # ------------------------------------------------------------------
    # serialization

    def to_text(self) -> str:
        """Signed sum of terms, e.g. '-x_1_2 + x_1_3*x_2_2 + 3'."""
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in _sorted_terms(self.terms):
            mag = abs(coeff)
            if mono.is_one:
                body = str(mag)
            elif mag == 1:
                body = repr(mono)
            else:
                body = f"{mag}*{mono!r}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def to_json_dict(self) -> dict:
        doc = {
            "terms": [
                {"c": str(c), "m": {v.name: e for v, e in m.exps}}
                for m, c in _sorted_terms(self.terms)
            ]
        }
        if self.char:
            doc["char"] = self.char
        return doc


def poly_from_json(doc: dict) -> Polynomial:
    char = int(doc.get("char", 0))
    terms = {}
    for t in doc["terms"]:
        mono = Monomial({parse_var(name): int(e) for name, e in t["m"].items()})
        terms[mono] = terms.get(mono, 0) + int(t["c"])
    return Polynomial(terms, char)


_TERM_RE = re.compile(r"[+-]?[^+-]+")
_FACTOR_RE = re.compile(r"^([xz]_\d+_\d+)(?:\^(\d+))?$")


def poly_parse_text(text: str, char: int = 0) -> Polynomial:
    """Inverse of Polynomial.to_text."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Polynomial.zero(char)
    terms = {}
    for piece in _TERM_RE.findall(s):
        sign = 1
        if piece[0] == "+":
            piece = piece[1:]
        elif piece[0] == "-":
            sign = -1
            piece = piece[1:]
        if not piece:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = sign
        exps = {}
        for factor in piece.split("*"):
            m = _FACTOR_RE.match(factor)
            if m:
                v = parse_var(m.group(1))
                exps[v] = exps.get(v, 0) + int(m.group(2) or 1)
            else:
                try:
                    coeff *= int(factor)
                except ValueError:
                    raise ValueError(
                        f"cannot parse factor {factor!r} in {text!r}"
                    ) from None
        mono = Monomial(exps)
        terms[mono] = terms.get(mono, 0) + coeff
    return Polynomial(terms, char)


def substitute(p: Polynomial, sigma, universe=None) -> Polynomial:
    """Apply the ring homomorphism sending each sigma key to its image.

    `sigma` maps Var to Polynomial or int.  Variables of `p` absent from
    `sigma` map to themselves when `universe` is None or when they belong
    to `universe`; otherwise this raises, since the image would leave the
    declared target ring.
    """
    images = {}
    for v, q in sigma.items():
        if not isinstance(q, Polynomial):
            q = Polynomial.const(q, p.char)
        elif q.char != p.char:
            raise ValueError("coefficient domain mismatch in substitution")
        images[v] = q
    uni = frozenset(universe) if universe is not None else None
    if uni is not None:
        for v, q in images.items():
            bad = q.variables() - uni
            if bad:
                raise ValueError(
                    f"substitution image of {v} uses variables outside the "
                    f"target universe: {sorted(b.name for b in bad)}"
                )
    power_cache = {}

    def var_power(v: Var, e: int) -> Polynomial:
        key = (v, e)
        got = power_cache.get(key)
        if got is None:
            base = images.get(v)
            if base is None:
                if uni is not None and v not in uni:
                    raise ValueError(
                        f"variable {v.name} is not in the target universe"
                    )
                base = Polynomial.variable(v, p.char)
            got = base**e
            power_cache[key] = got
        return got

    total = Polynomial.zero(p.char)
    for mono, coeff in p.terms.items():
        acc = Polynomial.const(coeff, p.char)
        for v, e in mono.exps:
            acc = acc * var_power(v, e)
        total = total + acc
    return total


class PolyMatrix:
    """A square matrix with Polynomial entries over one coefficient domain."""

    __slots__ = ("n", "char", "rows")

    def __init__(self, rows, char: int | None = None):
        coerced = []
        for row in rows:
            coerced.append(list(row))
        n = len(coerced)
        if any(len(row) != n for row in coerced):
            raise ValueError("matrix must be square")
        if char is None:
            char = 0
            for row in coerced:
                for entry in row:
                    if isinstance(entry, Polynomial):
                        char = entry.char
                        break
                else:
                    continue
                break
        out = []
        for row in coerced:
            new_row = []
            for entry in row:
                if isinstance(entry, int):
                    entry = Polynomial.const(entry, char)
                elif not isinstance(entry, Polynomial):
                    raise TypeError(f"bad matrix entry: {entry!r}")
                elif entry.char != char:
                    raise ValueError("matrix entries mix coefficient domains")
                new_row.append(entry)
            out.append(tuple(new_row))
        self.n = n
        self.char = char
        self.rows = tuple(out)

    @classmethod
    def identity(cls, n: int, char: int = 0) -> "PolyMatrix":
        return cls(
            [[1 if i == j else 0 for j in range(n)] for i in range(n)], char
        )

    @classmethod
    def nilpotent_shift(cls, n: int, char: int = 0) -> "PolyMatrix":
        """The regular nilpotent matrix with 1's on the superdiagonal."""
        return cls(
            [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)],
            char,
        )

    @classmethod
    def permutation(cls, w: Permutation, char: int = 0) -> "PolyMatrix":
        """Matrix with a 1 in row w(j) of column j."""
        return cls(
            [
                [1 if i + 1 == w(j + 1) else 0 for j in range(w.n)]
                for i in range(w.n)
            ],
            char,
        )

    def entry(self, i: int, j: int) -> Polynomial:
        """1-based access."""
        return self.rows[i - 1][j - 1]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("matrix size mismatch")
        if self.char != other.char:
            raise ValueError("coefficient domain mismatch")
        n = self.n
        zero = Polynomial.zero(self.char)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a = self.rows[i][k]
                    if not a:
                        continue
                    b = other.rows[k][j]
                    if not b:
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.char)

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(
            [[fn(e) for e in row] for row in self.rows]
        )

    def is_lower_unitriangular(self) -> bool:
        for i in range(self.n):
            if self.rows[i][i] != Polynomial.one(self.char):
                return False
            for j in range(i + 1, self.n):
                if self.rows[i][j]:
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.n == other.n
            and self.char == other.char
            and self.rows == other.rows
        )

    def __repr__(self):
        body = ",\n ".join(
            "[" + ", ".join(e.to_text() for e in row) + "]" for row in self.rows
        )
        return f"PolyMatrix(\n {body})"


def mat_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a @ b


def left_mul_perm(w: Permutation, a: PolyMatrix) -> PolyMatrix:
    """Product (permutation matrix of w) @ a, as a row shuffle."""
    if w.n != a.n:
        raise ValueError("size mismatch")
    winv = w.inverse()
    return PolyMatrix(
        [a.rows[winv(i + 1) - 1] for i in range(a.n)], a.char
    )


def right_mul_perm(a: PolyMatrix, w: Permutation) -> PolyMatrix:
    """Product a @ (permutation matrix of w), as a column shuffle."""
    if w.n != a.n:
        raise ValueError("size mismatch")
    return PolyMatrix(
        [
            [a.rows[i][w(j + 1) - 1] for j in range(a.n)]
            for i in range(a.n)
        ],
        a.char,
    )


def unitriangular_inverse(m: PolyMatrix) -> PolyMatrix:
    """Inverse of a lower unitriangular matrix, by forward substitution.

    All entries of the result are polynomials; no fractions appear.
    """
    if not m.is_lower_unitriangular():
        raise ValueError("matrix is not lower unitriangular")
    n = m.n
    one = Polynomial.one(m.char)
    zero = Polynomial.zero(m.char)
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j + 1, n):
            acc = zero
            for k in range(j, i):
                a = m.rows[i][k]
                if not a:
                    continue
                b = inv[k][j]
                if not b:
                    continue
                acc = acc + a * b
            inv[i][j] = -acc
    return PolyMatrix(inv, m.char)


def inverse_unitriangular_conjugate(w: Permutation, m: PolyMatrix) -> PolyMatrix:
    """Exact inverse of wM for lower unitriangular M, namely M^{-1} w^{-1}."""
    if w.n != m.n:
        raise ValueError("size mismatch between permutation and matrix")
    return right_mul_perm(unitriangular_inverse(m), w.inverse())


if __name__ == "__main__":
    import doctest

    doctest.testmod()
