"""Exact arithmetic in cyclotomic fields Q(zeta_N) and exact linear algebra over them.

Elements are stored as integer numerators on the power basis 1, z, ..., z^(phi(N)-1)
modulo the N-th cyclotomic polynomial, with one positive common denominator.
Conductors congruent to 2 mod 4 are folded onto N/2, and values that turn out
to be rational drop to conductor 1.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence


class CycloError(ValueError):
    """Invalid cyclotomic operation (bad conductor, non-unit Galois exponent, ...)."""


class SingularMatrixError(CycloError):
    pass


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _normal_conductor(n: int) -> int:
    if n < 1:
        raise CycloError(f"conductor must be positive, got {n}")
    return n // 2 if n % 4 == 2 else n


class _Field:
    __slots__ = ("n", "phi", "powers")

    def __init__(self, n: int):
        self.n = n
        self.phi = totient(n)
        poly = cyclotomic_polynomial(n)
        phi = self.phi
        powers = []
        cur = [1] + [0] * (phi - 1)
        for _ in range(n):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(phi):
                    cur[j] -= top * poly[j]
        # powers[k] = x^k mod Phi_n, valid for every k since x^n = 1
        self.powers = tuple(powers)


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def _reduce_poly(n: int, coeffs: Sequence[int]) -> list[int]:
    """Reduce a coefficient list of arbitrary length (exponents mod n allowed)."""
    f = _field(n)
    phi, powers = f.phi, f.powers
    out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
    for k in range(phi, len(coeffs)):
        c = coeffs[k]
        if c:
            row = powers[k % n]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return out


class CyclotomicNumber:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("conductor", "num", "den")

    def __init__(self, conductor: int, num: Sequence[int], den: int = 1, _canonical: bool = False):
        if _canonical:
            self.conductor, self.num, self.den = conductor, num, den
            return
        n = _normal_conductor(conductor)
        if n != conductor:
            # reinterpret coefficients of zeta_{2n}: zeta_{2n} = -zeta_n^((n+1)/2)
            half = (n + 1) // 2
            acc = [0] * n
            for k, c in enumerate(num):
                if c:
                    e = (k * half) % n
                    acc[e] += -c if k % 2 else c
            num = acc
        vals = _reduce_poly(n, list(num)) if len(num) != totient(n) else list(num)
        self.conductor, self.num, self.den = _normalize(n, vals, den)

    # construction helpers -------------------------------------------------
    @classmethod
    def rational(cls, q) -> "CyclotomicNumber":
        q = Fraction(q)
        return cls(1, (q.numerator,), q.denominator, _canonical=True)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    @property
    def phi(self) -> int:
        return len(self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return self.conductor == 1

    def to_fraction(self) -> Fraction:
        if self.conductor != 1:
            raise CycloError("not a rational value")
        return Fraction(self.num[0], self.den)

    # arithmetic -------------------------------------------------------------
    def promote(self, n: int) -> tuple[int, ...]:
        """Numerators of self written at conductor n (a multiple of self.conductor)."""
        m = self.conductor
        if m == n:
            return self.num
        if n % m:
            raise CycloError(f"cannot promote conductor {m} to {n}")
        step = n // m
        f = _field(n)
        out = [0] * f.phi
        for k, c in enumerate(self.num):
            if c:
                row = f.powers[(k * step) % n]
                for j in range(f.phi):
                    if row[j]:
                        out[j] += c * row[j]
        return tuple(out)

    def _common(self, other: "CyclotomicNumber"):
        a, b = self.conductor, other.conductor
        if a == b:
            return a, self.num, other.num
        n = lcm(a, b)
        return n, self.promote(n), other.promote(n)

    def __add__(self, other):
        other = as_cyclo(other)
        if self.conductor == 1 and other.conductor == 1:
            return _rat(self.num[0] * other.den + other.num[0] * self.den, self.den * other.den)
        n, x, y = self._common(other)
        d1, d2 = self.den, other.den
        return _make(n, [a * d2 + b * d1 for a, b in zip(x, y)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, tuple(-c for c in self.num), self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-as_cyclo(other))

    def __rsub__(self, other):
        return as_cyclo(other) + (-self)

    def __mul__(self, other):
        other = as_cyclo(other)
        if other.conductor == 1:
            if self.conductor == 1:
                return _rat(self.num[0] * other.num[0], self.den * other.den)
            c = other.num[0]
            return _make(self.conductor, [a * c for a in self.num], self.den * other.den)
        if self.conductor == 1:
            return other * self
        n, x, y = self._common(other)
        prod = [0] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        prod[i + j] += a * b
        return _make(n, _reduce_poly(n, prod), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.conductor == 1:
            p = self.num[0]
            return _rat(self.den if p > 0 else -self.den, abs(p))
        n = self.conductor
        # product of the non-trivial Galois conjugates divided by the (rational) norm
        rest = ONE
        for k in range(2, n):
            if gcd(k, n) == 1:
                rest = rest * galois(self, k)
        norm = self * rest
        return rest * norm.inverse()

    def __truediv__(self, other):
        return self * as_cyclo(other).inverse()

    def __rtruediv__(self, other):
        return as_cyclo(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, CyclotomicNumber):
            try:
                other = as_cyclo(other)
            except TypeError:
                return NotImplemented
        if self.conductor == other.conductor:
            return self.den == other.den and self.num == other.num
        n, x, y = self._common(other)
        return self.den == other.den and x == y

    def __hash__(self):
        # average over Galois conjugates of a and a^2: independent of the conductor used
        if self.conductor == 1:
            return hash(Fraction(self.num[0], self.den))
        return hash((normalized_trace(self), normalized_trace(self * self)))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.conductor == 1:
            return f"Cyclo({Fraction(self.num[0], self.den)})"
        return f"Cyclo(N={self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.conductor == 1:
            return str(Fraction(self.num[0], self.den))
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z{self.conductor}^{k}")
        return " + ".join(terms) or "0"

    # numerics (test oracles only) -----------------------------------------
    def to_complex(self) -> complex:
        n = self.conductor
        return sum(float(c) * cmath.exp(2j * cmath.pi * k / n) for k, c in enumerate(self.coeffs)) + 0j

    def conjugate(self) -> "CyclotomicNumber":
        return galois(self, -1)

    def is_real(self) -> bool:
        return self.conductor == 1 or self == self.conjugate()

    # serialization ----------------------------------------------------------
    def to_json(self, conductor: int | None = None) -> dict:
        n = conductor or self.conductor
        nums = self.promote(n)
        return {"conductor": n, "coeffs": [_frac_str(Fraction(c, self.den)) for c in nums]}

    @classmethod
    def from_json(cls, obj) -> "CyclotomicNumber":
        if isinstance(obj, (int, str)):
            return cls.rational(Fraction(obj))
        n = int(obj["conductor"])
        fracs = [Fraction(c) for c in obj["coeffs"]]
        if _normal_conductor(n) == n and len(fracs) != totient(n):
            raise CycloError(f"conductor {n} needs {totient(n)} coefficients, got {len(fracs)}")
        den = lcm(*(f.denominator for f in fracs)) if fracs else 1
        return cls(n, [int(f * den) for f in fracs], den)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _rat(p: int, q: int) -> CyclotomicNumber:
    if q < 0:
        p, q = -p, -q
    g = gcd(p, q)
    if g > 1:
        p //= g
        q //= g
    return CyclotomicNumber(1, (p,), q, _canonical=True)


def _normalize(n: int, vals: list[int], den: int):
    if den < 0:
        vals = [-v for v in vals]
        den = -den
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    g = den
    for v in vals:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        vals = [v // g for v in vals]
        den //= g
    if n != 1 and not any(vals[1:]):
        return 1, (vals[0],), den
    return n, tuple(vals), den


def _make(n: int, vals: list[int], den: int) -> CyclotomicNumber:
    c, v, d = _normalize(n, vals, den)
    return CyclotomicNumber(c, v, d, _canonical=True)


ZERO = CyclotomicNumber(1, (0,), 1, _canonical=True)
ONE = CyclotomicNumber(1, (1,), 1, _canonical=True)


def as_cyclo(x) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction)):
        return CyclotomicNumber.rational(x)
    if isinstance(x, str):
        return CyclotomicNumber.rational(Fraction(x))
    raise TypeError(f"cannot convert {type(x).__name__} to a cyclotomic number")


@lru_cache(maxsize=None)
def _ramanujan(n: int, k: int) -> Fraction:
    """Trace of zeta_n^k over Q divided by phi(n)."""
    d = n // gcd(n, k)
    mu = _mobius(d)
    return Fraction(mu, totient(d))


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def normalized_trace(a: CyclotomicNumber) -> Fraction:
    """Average of the Galois conjugates of a; does not depend on the conductor used."""
    n = a.conductor
    return sum((Fraction(c, a.den) * _ramanujan(n, k) for k, c in enumerate(a.num) if c), Fraction(0))


def zeta(n: int, k: int = 1) -> CyclotomicNumber:
    """zeta_n^k with zeta_n = exp(2 pi i / n)."""
    if n < 1:
        raise CycloError("zeta needs n >= 1")
    k %= n
    nums = [0] * (k + 1)
    nums[k] = 1
    return CyclotomicNumber(n, nums) if n > 1 else ONE


def cos_sin(k: int, m: int) -> tuple[CyclotomicNumber, CyclotomicNumber]:
    """Exact cos(2 pi k/m) and sin(2 pi k/m)."""
    if m < 1:
        raise CycloError("cos_sin needs m >= 1")
    z, zi = zeta(m, k), zeta(m, -k)
    i = zeta(4, 1)
    return (z + zi) * Fraction(1, 2), (z - zi) / (i * 2)


def sqrt_int(n: int) -> CyclotomicNumber:
    """Positive square root of a positive squarefree-free integer via Gauss sums."""
    if n <= 0:
        raise CycloError("sqrt_int needs n > 0")
    # strip square factors
    sq, core, p = 1, n, 2
    while p * p <= core:
        while core % (p * p) == 0:
            core //= p * p
            sq *= p
        p += 1
    if core == 1:
        return as_cyclo(sq)
    root = ONE
    rest = core
    if rest % 2 == 0:
        rest //= 2
        root = root * (zeta(8, 1) + zeta(8, 7))
    p = 3
    while rest > 1:
        if rest % p == 0:
            rest //= p
            root = root * _sqrt_odd_prime(p)
        p += 2
    return root * sq


def _sqrt_odd_prime(p: int) -> CyclotomicNumber:
    # quadratic Gauss sum g with g^2 = (-1)^((p-1)/2) p
    squares = {(x * x) % p for x in range(1, p)}
    g = ZERO
    for a in range(1, p):
        g = g + (zeta(p, a) if a in squares else -zeta(p, a))
    if p % 4 == 3:
        g = g / zeta(4, 1)  # g = i sqrt(p)
    if g.to_complex().real < 0:
        g = -g
    return g


def golden_ratio() -> CyclotomicNumber:
    return (ONE + sqrt_int(5)) * Fraction(1, 2)


def galois(a: CyclotomicNumber, k: int) -> CyclotomicNumber:
    """Apply the automorphism zeta_N -> zeta_N^k."""
    a = as_cyclo(a)
    n = a.conductor
    if gcd(k, n) != 1:
        raise CycloError(f"galois exponent {k} is not a unit modulo {n}")
    if n == 1:
        return a
    powers = _field(n).powers
    out = [0] * len(a.num)
    for j, c in enumerate(a.num):
        if c:
            row = powers[(j * k) % n]
            for t, r in enumerate(row):
                if r:
                    out[t] += c * r
    return _make(n, out, a.den)


def sign(a: CyclotomicNumber) -> int:
    """Sign of a real cyclotomic number, exact zero test then rigorous interval evaluation."""
    a = as_cyclo(a)
    if a.is_zero():
        return 0
    if a.conductor == 1:
        return 1 if a.num[0] > 0 else -1
    if not a.is_real():
        raise CycloError("sign of a non-real number")
    from mpmath import iv

    prec = 60
    while True:
        iv.prec = prec
        n = a.conductor
        total = iv.mpf(0)
        for k, c in enumerate(a.num):
            if c:
                total += iv.mpf(c) * iv.cos(2 * iv.pi * k / n)
        total /= a.den
        if total.a > 0:
            return 1
        if total.b < 0:
            return -1
        prec *= 2


# ---------------------------------------------------------------------------
# vectors and matrices

CycloVector = tuple  # tuple of CyclotomicNumber


def vector(entries: Iterable) -> CycloVector:
    return tuple(as_cyclo(x) for x in entries)


def dot(u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
    acc = ZERO
    for x, y in zip(u, v):
        if not x.is_zero() and not y.is_zero():
            acc = acc + x * y
    return acc


def vector_key(v: Sequence[CyclotomicNumber], conductor: int) -> tuple:
    """Hashable canonical key of a vector at a fixed conductor."""
    return tuple((x.promote(conductor), x.den) for x in v)


class CycloMatrix:
    """Dense immutable matrix of cyclotomic numbers."""

    __slots__ = ("rows", "nrows", "ncols", "_conductor")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(as_cyclo(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise CycloError("ragged matrix")
        self._conductor = None

    @classmethod
    def identity(cls, n: int) -> "CycloMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "CycloMatrix":
        return cls([[ZERO] * c for _ in range(r)])

    @classmethod
    def diagonal(cls, entries) -> "CycloMatrix":
        entries = [as_cyclo(x) for x in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols) -> "CycloMatrix":
        cols = [list(c) for c in cols]
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    @property
    def conductor(self) -> int:
        if self._conductor is None:
            n = 1
            for r in self.rows:
                for x in r:
                    n = lcm(n, x.conductor)
            self._conductor = n
        return self._conductor

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> CycloVector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[CycloVector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "CycloMatrix":
        return CycloMatrix(zip(*self.rows)) if self.rows else self

    T = property(transpose)

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "CycloMatrix(" + repr([[str(x) for x in r] for r in self.rows]) + ")"

    def __add__(self, other: "CycloMatrix"):
        return CycloMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "CycloMatrix"):
        return CycloMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return CycloMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "CycloMatrix":
        c = as_cyclo(c)
        return CycloMatrix([[a * c for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, CycloMatrix):
            if self.ncols != other.nrows:
                raise CycloError("shape mismatch")
            cols = other.columns()
            return CycloMatrix([[dot(r, c) for c in cols] for r in self.rows])
        return self.apply(other)

    def apply(self, v: Sequence[CyclotomicNumber]) -> CycloVector:
        return tuple(dot(r, v) for r in self.rows)

    def __pow__(self, e: int) -> "CycloMatrix":
        if e < 0:
            return self.inverse() ** (-e)
        result, base = CycloMatrix.identity(self.nrows), self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        return all(
            (x == ONE) if i == j else x.is_zero() for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    def galois(self, k: int) -> "CycloMatrix":
        return CycloMatrix([[galois(x, k) for x in r] for r in self.rows])

    def block_diag(self, other: "CycloMatrix") -> "CycloMatrix":
        n, m = self.ncols, other.ncols
        rows = [list(r) + [ZERO] * m for r in self.rows]
        rows += [[ZERO] * n + list(r) for r in other.rows]
        return CycloMatrix(rows)

    def kron(self, other: "CycloMatrix") -> "CycloMatrix":
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append([a * b for a in r for b in s])
        return CycloMatrix(rows)

    # linear algebra ---------------------------------------------------------
    def rank(self) -> int:
        return len(rref(self.rows)[1])

    def kernel(self) -> list[CycloVector]:
        return kernel_basis(self.rows, self.ncols)

    def det(self) -> CyclotomicNumber:
        if self.nrows != self.ncols:
            raise CycloError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.nrows
        result = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if not m[i][c].is_zero()), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                result = -result
            piv = m[c][c]
            result = result * piv
            inv = piv.inverse()
            for i in range(c + 1, n):
                if not m[i][c].is_zero():
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return result

    def inverse(self) -> "CycloMatrix":
        n = self.nrows
        if n != self.ncols:
            raise CycloError("inverse of a non-square matrix")
        aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        red, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return CycloMatrix([r[n:] for r in red[:n]])

    def is_orthogonal(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return (self.transpose() @ self).is_identity()

    # serialization ----------------------------------------------------------
    def to_json(self) -> list:
        n = self.conductor
        return [[x.to_json(n) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, obj) -> "CycloMatrix":
        return cls([[CyclotomicNumber.from_json(x) for x in r] for r in obj])


def rref(rows: Sequence[Sequence[CyclotomicNumber]]) -> tuple[list[list[CyclotomicNumber]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    nr, nc = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if not m[i][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c].inverse()
        if inv != ONE:
            m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b if not b.is_zero() else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m, pivots


def kernel_basis(rows: Sequence[Sequence[CyclotomicNumber]], ncols: int) -> list[CycloVector]:
    if not rows:
        return [tuple(ONE if i == j else ZERO for i in range(ncols)) for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(tuple(v))
    return basis


def rank_of(vectors: Sequence[Sequence[CyclotomicNumber]]) -> int:
    vectors = [v for v in vectors]
    return len(rref(vectors)[1]) if vectors else 0


def span_basis(vectors: Sequence[Sequence[CyclotomicNumber]]) -> list[CycloVector]:
    """Canonical basis (reduced row echelon rows) of the span."""
    if not vectors:
        return []
    red, piv = rref(vectors)
    return [tuple(r) for r in red[: len(piv)]]


def orthogonal_complement(vectors: Sequence[Sequence[CyclotomicNumber]], dim: int) -> list[CycloVector]:
    """Basis of the orthogonal complement for the standard bilinear form."""
    return kernel_basis([list(v) for v in vectors], dim) if vectors else kernel_basis([], dim)


def projector(basis: Sequence[Sequence[CyclotomicNumber]], dim: int) -> CycloMatrix:
    """Orthogonal projector onto span(basis), exact."""
    if not basis:
        return CycloMatrix.zeros(dim, dim)
    b = CycloMatrix.from_columns(basis)
    gram = b.transpose() @ b
    return b @ gram.inverse() @ b.transpose()
