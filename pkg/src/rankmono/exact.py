"""Exact rational polynomials, Sturm chains, and exact linear algebra."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

try:  # FLINT gives fast exact dense solves; the pure-Fraction path is always present.
    import flint
except ImportError:  # pragma: no cover
    flint = None


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class SingularMatrixError(DomainError):
    pass


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class RatPoly:
    """Dense univariate polynomial with Fraction coefficients in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls([c])

    @classmethod
    def parse(cls, text: str) -> "RatPoly":
        """Comma-separated ascending coefficients, each ``p`` or ``p/q``."""
        parts = [p.strip() for p in text.split(",")]
        try:
            return cls(Fraction(p) for p in parts if p)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed polynomial literal {text!r}") from None

    def to_literal(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, a) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatPoly):
            other = RatPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RatPoly({self.to_literal()})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = other if isinstance(other, RatPoly) else RatPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RatPoly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __sub__(self, other):
        other = other if isinstance(other, RatPoly) else RatPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return RatPoly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            c = _frac(other)
            return RatPoly(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = RatPoly([1])
        for _ in range(e):
            result = result * self
        return result

    def derivative(self) -> "RatPoly":
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            raise DomainError("zero polynomial has no monic form")
        return self * (1 / self.lead)

    def reversed(self, degree: int | None = None) -> "RatPoly":
        """x^d p(1/x) with d = ``degree`` (defaults to deg p)."""
        d = self.degree if degree is None else degree
        cs = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return RatPoly(reversed(cs))

    def sign_at(self, a) -> int:
        v = self(a)
        return (v > 0) - (v < 0)


def poly_divmod(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db = b.degree
    lead = b.lead
    q = [Fraction(0)] * max(a.degree - db + 1, 0)
    for i in range(a.degree - db, -1, -1):
        c = rem[i + db] / lead
        q[i] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] -= c * bc
    return RatPoly(q), RatPoly(rem[:db] if db > 0 else [])


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: RatPoly) -> RatPoly:
    if p.is_zero():
        raise DomainError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return RatPoly([1])
    g = poly_gcd(p, p.derivative())
    return poly_divmod(p, g)[0].monic()


def is_squarefree(p: RatPoly) -> bool:
    return p.degree <= 0 or poly_gcd(p, p.derivative()).degree == 0


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[RatPoly, ...]

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]


def sturm_chain(p: RatPoly) -> SturmChain:
    if p.degree < 1:
        raise DomainError("Sturm chain needs a polynomial of degree >= 1")
    chain = [p, p.derivative()]
    while True:
        r = poly_divmod(chain[-2], chain[-1])[1]
        if r.is_zero():
            break
        chain.append(-r)
    return SturmChain(tuple(chain))


def sign_variations(chain: SturmChain, a) -> int:
    a = _frac(a)
    count = 0
    last = 0
    for s in chain.polys:
        v = s.sign_at(a)
        if v == 0:
            continue
        if last and v != last:
            count += 1
        last = v
    return count


def count_roots(p: RatPoly, a, b, chain: SturmChain | None = None) -> int:
    """Number of distinct real roots of squarefree ``p`` in (a, b]."""
    a, b = _frac(a), _frac(b)
    if not a < b:
        raise DomainError(f"empty interval ({a}, {b}]")
    if p.is_zero():
        raise DomainError("zero polynomial has infinitely many roots")
    if p.degree == 0:
        return 0
    if chain is None:
        g = poly_gcd(p, p.derivative())
        if g.degree > 0:
            raise DomainError(f"polynomial is not squarefree: divisible by ({g})^2")
        chain = sturm_chain(p)
    return sign_variations(chain, a) - sign_variations(chain, b)


def count_distinct_roots(p: RatPoly, a, b) -> int:
    """count_roots on the squarefree part, for callers that do not care about multiplicity."""
    return count_roots(squarefree_part(p), a, b)


# ---------------------------------------------------------------- linear algebra

Matrix = Sequence[Sequence[Fraction]]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> list[list[Fraction]]:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        row = out[i]
        for k in range(m):
            c = a[i][k]
            if c:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        row[j] += c * bk[j]
    return out


def vec_mat(v: Sequence[Fraction], m: Matrix) -> list[Fraction]:
    """Row vector times matrix."""
    n = len(m[0]) if m else 0
    out = [Fraction(0)] * n
    for i, c in enumerate(v):
        if c:
            for j, e in enumerate(m[i]):
                if e:
                    out[j] += c * e
    return out


def resolvent_matrix(B: Matrix, alpha) -> list[list[Fraction]]:
    """I - alpha*B."""
    alpha = _frac(alpha)
    n = len(B)
    out = []
    zero, one = Fraction(0), Fraction(1)
    for i in range(n):
        row = [zero] * n
        for j, e in enumerate(B[i]):
            if e:
                row[j] = -alpha * _frac(e)
        row[i] += one
        out.append(row)
    return out


def solve_linear_fraction(M: Matrix, v: Sequence) -> list[Fraction]:
    """Solve xM = v by Gauss-Jordan elimination on M^T over Fractions."""
    n = len(M)
    if any(len(row) != n for row in M) or len(v) != n:
        raise ValueError("dimension mismatch")
    # augmented system M^T x^T = v^T
    aug = [[_frac(M[j][i]) for j in range(n)] + [_frac(v[i])] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        prow = aug[col]
        inv = 1 / prow[col]
        if inv != 1:
            for j in range(col, n + 1):
                prow[j] *= inv
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if f:
                row = aug[r]
                for j in range(col, n + 1):
                    if prow[j]:
                        row[j] -= f * prow[j]
    return [aug[i][n] for i in range(n)]


def _fmpq(c: Fraction):
    return flint.fmpq(c.numerator, c.denominator)


def solve_linear_flint(M: Matrix, v: Sequence) -> list[Fraction]:
    if flint is None:  # pragma: no cover
        raise RuntimeError("python-flint is not installed")
    n = len(M)
    if any(len(row) != n for row in M) or len(v) != n:
        raise ValueError("dimension mismatch")
    mt = flint.fmpq_mat(n, n)
    for i, row in enumerate(M):
        for j, e in enumerate(row):
            if e:
                mt[j, i] = _fmpq(_frac(e))
    rhs = flint.fmpq_mat(n, 1, [_fmpq(_frac(c)) for c in v])
    try:
        x = mt.solve(rhs)
    except ZeroDivisionError:
        raise SingularMatrixError("matrix is singular") from None
    return [Fraction(int(x[i, 0].p), int(x[i, 0].q)) for i in range(n)]


def solve_linear(M: Matrix, v: Sequence, backend: str = "auto") -> list[Fraction]:
    """Exact x with xM = v.

    ``backend`` is "fraction", "flint", or "auto" (flint when available and n > 12).
    """
    if backend == "auto":
        backend = "flint" if flint is not None and len(M) > 12 else "fraction"
    if backend == "flint":
        return solve_linear_flint(M, v)
    if backend == "fraction":
        return solve_linear_fraction(M, v)
    raise ValueError(f"unknown backend {backend!r}")


def determinant(M: Matrix) -> Fraction:
    """Bareiss-style elimination over Fractions (independent of the trace-based routines)."""
    a = [[_frac(e) for e in row] for row in M]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for j in range(col, n):
                    a[r][j] -= f * a[col][j]
    return det


def _faddeev_leverrier(B: Matrix) -> tuple[list[Fraction], list[list[list[Fraction]]]]:
    """Coefficients c_0..c_n of det(xI - B) and the matrices M_1..M_n with
    adj(xI - B) = sum_k M_k x^(n-k)."""
    n = len(B)
    Bf = [[_frac(e) for e in row] for row in B]
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    mats = []
    prev = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        cur = mat_mul(Bf, prev)
        for i in range(n):
            cur[i][i] += c[n - k + 1]
        mats.append(cur)
        bm = mat_mul(Bf, cur)
        c[n - k] = -sum(bm[i][i] for i in range(n)) / k
        prev = cur
    return c, mats


def char_poly(M: Matrix) -> RatPoly:
    """det(xI - M)."""
    return RatPoly(_faddeev_leverrier(M)[0])


def resolvent_det(B: Matrix) -> RatPoly:
    """det(I - aB) as a polynomial in a."""
    c, _ = _faddeev_leverrier(B)
    return RatPoly(reversed(c))


def adjugate_row_sums(B: Matrix) -> list[RatPoly]:
    """The row vector 1 * adj(I - aB), one polynomial in a per column.

    With adj(xI - B) = sum_k M_k x^(n-k), homogenising at x = 1/a gives
    adj(I - aB) = sum_k M_k a^(k-1).
    """
    n = len(B)
    _, mats = _faddeev_leverrier(B)
    out = []
    for j in range(n):
        out.append(RatPoly(sum(m[i][j] for i in range(n)) for m in mats))
    return out


def verify_adjugate_identity(B: Matrix, row_sums: Sequence[RatPoly] | None = None) -> bool:
    """Check (1 * adj(I - aB)) (I - aB) == det(I - aB) * 1 as polynomials."""
    n = len(B)
    r = list(row_sums) if row_sums is not None else adjugate_row_sums(B)
    det = resolvent_det(B)
    for j in range(n):
        acc = RatPoly()
        for i in range(n):
            entry = RatPoly([int(i == j), -_frac(B[i][j])])
            acc = acc + r[i] * entry
        if acc != det:
            return False
    return True
