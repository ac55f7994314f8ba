"""Table-driven arithmetic in GF(q) for small q.

Elements are the integers ``0..q-1``.  For ``q = p**k`` an element packs the
coefficients of a polynomial of degree ``< k`` over GF(p) in base ``p``:
``c0 + c1*p + ... + c_{k-1}*p**(k-1)`` encodes ``c0 + c1*x + ...``.
Multiplication reduces modulo one fixed monic irreducible polynomial per q,
listed in :data:`REDUCTION_POLYS`, so encodings never change between runs.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import ConfigurationError

__all__ = ["Field", "field", "is_square", "SUPPORTED_Q", "REDUCTION_POLYS"]

# Low-to-high coefficients of the monic reduction polynomial.
REDUCTION_POLYS = {
    2: (0, 1),  # x
    3: (0, 1),
    5: (0, 1),
    7: (0, 1),
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
}

SUPPORTED_Q = tuple(sorted(REDUCTION_POLYS))

_PRIME_POWER = {2: (2, 1), 3: (3, 1), 5: (5, 1), 7: (7, 1), 4: (2, 2), 8: (2, 3), 9: (3, 2)}


def _digits(a, p, k):
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


def _pack(coeffs, p):
    a = 0
    for c in reversed(coeffs):
        a = a * p + c
    return a


def _poly_mulmod(a, b, p, k, red):
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce with the monic polynomial red (degree k)
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for i in range(k + 1):
                prod[d - k + i] = (prod[d - k + i] - c * red[i]) % p
    return prod[:k]


@dataclass(frozen=True, eq=False)
class Field:
    """Immutable lookup tables for GF(q).

    Use :func:`field` rather than constructing this directly; it caches one
    instance per q so identity comparison is enough.
    """

    q: int
    p: int
    k: int
    reduction_poly: tuple
    add: tuple
    mul: tuple
    neg: tuple
    inv: tuple  # inv[0] is 0 as a placeholder
    sub: tuple = dc_field(repr=False)
    elements: range = dc_field(repr=False)
    nonzero: tuple = dc_field(repr=False)
    squares: frozenset = dc_field(repr=False)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.q)
        return self.mul[a][self.inv[b]]

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul[r][a]
        return r

    def dot(self, u, v):
        add, mul = self.add, self.mul
        s = 0
        for a, b in zip(u, v):
            if a and b:
                s = add[s][mul[a][b]]
        return s

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q):
    """Return the (cached) :class:`Field` with ``q`` elements."""
    if q not in REDUCTION_POLYS:
        raise ConfigurationError(f"unsupported field size q={q}; expected one of {SUPPORTED_Q}")
    p, k = _PRIME_POWER[q]
    red = REDUCTION_POLYS[q]
    digits = [_digits(a, p, k) for a in range(q)]

    add = tuple(
        tuple(_pack([(x + y) % p for x, y in zip(digits[a], digits[b])], p) for b in range(q))
        for a in range(q)
    )
    if k == 1:
        mul = tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
    else:
        mul = tuple(
            tuple(_pack(_poly_mulmod(digits[a], digits[b], p, k, red), p) for b in range(q))
            for a in range(q)
        )
    neg = tuple(_pack([(-x) % p for x in digits[a]], p) for a in range(q))
    sub = tuple(tuple(add[a][neg[b]] for b in range(q)) for a in range(q))
    inv = [0] * q
    for a in range(1, q):
        for b in range(1, q):
            if mul[a][b] == 1:
                inv[a] = b
                break
        else:
            raise ConfigurationError(f"reduction polynomial for q={q} is not irreducible")
    squares = frozenset(mul[a][a] for a in range(q))
    return Field(
        q=q,
        p=p,
        k=k,
        reduction_poly=red,
        add=add,
        mul=mul,
        neg=neg,
        inv=tuple(inv),
        sub=sub,
        elements=range(q),
        nonzero=tuple(range(1, q)),
        squares=squares,
    )


def is_square(f, a):
    """True iff some ``d`` in GF(q) has ``d*d == a`` (0 counts as a square)."""
    return a in f.squares
