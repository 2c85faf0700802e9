"""Cartier operators, p-ranks and a zeta-function oracle for y^m = f(x).

Models live over the prime field GF(p) with p odd and p not dividing m.  The
p-rank is the stable rank of the Cartier operator on regular differentials;
an independent oracle recovers the same number from point counts over the
extension tower via the numerator of the zeta function.  Both routes are
exact; agreement between them is part of the test contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .fppoly import ExtField, FpPoly, factor_multiplicities
from .ramification import kummer_genus

ZETA_GENUS_CAP = 3
ZETA_POINT_CAP = 10**7


class UnsupportedModelError(ValueError):
    """The model violates a documented precondition of this machinery."""


@dataclass(frozen=True)
class CurveModel:
    """Superelliptic presentation y^m = f(x) over GF(p).

    The cover must be irreducible: no prime divisor of m may divide every
    multiplicity in the factorization of f.  Repeated factors are allowed
    (they arise when a characteristic-zero model degenerates mod p); the
    genus and Cartier data then refer to the presentation itself, see
    ``genus_of_model``.
    """

    m: int
    f: FpPoly
    p: int

    def __post_init__(self):
        if self.p < 3 or self.p != self.f.p:
            raise UnsupportedModelError("model requires an odd prime matching the polynomial")
        if self.m < 2 or self.m % self.p == 0:
            raise UnsupportedModelError("cover degree must be >= 2 and prime to p")
        if self.f.is_zero() or self.f.degree < 1:
            raise UnsupportedModelError("right-hand side must be non-constant")
        mults = [mult for _, mult in factor_multiplicities(self.f)]
        for d in range(2, self.m + 1):
            if self.m % d == 0 and _is_prime_int(d) and all(mu % d == 0 for mu in mults):
                raise UnsupportedModelError("cover splits: an m-th root of f exists up to scalars")
        if genus_of_model(self) < 1:
            raise UnsupportedModelError("model has genus 0")


def _is_prime_int(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def genus_of_model(model: CurveModel) -> int:
    """Genus of the presented cover.

    For m = 2 this is the arithmetic genus (deg f - 1)//2 of the standard
    hyperelliptic completion, which equals the smooth genus exactly when f is
    squarefree (the tame cover formula confirms it).  For m > 2 the tame
    cyclic-cover formula on the branch multiplicities is used.
    """
    if model.m == 2:
        return (model.f.degree - 1) // 2
    exponents = []
    for poly, mult in factor_multiplicities(model.f):
        exponents.extend([mult] * poly.degree)
    return kummer_genus(model.m, exponents, model.p)


def normalization_genus(model: CurveModel) -> int:
    """Genus of the smooth model, by the tame cover formula; the quantity the
    point-count oracle sees."""
    exponents = []
    for poly, mult in factor_multiplicities(model.f):
        exponents.extend([mult] * poly.degree)
    return kummer_genus(model.m, exponents, model.p)


def differential_basis(model: CurveModel):
    """Monomial basis (a, b) for x^(a-1) dx / y^b, validated against the genus.

    Regularity is checked place by place from the branch data.  When the
    monomial family does not span the regular differentials (possible for
    non-squarefree f), the model is refused rather than approximated.
    """
    m, f = model.m, model.f
    deg = f.degree
    e_inf = m // gcd(m, deg)
    g = normalization_genus(model)
    branch = [(poly, mult) for poly, mult in factor_multiplicities(model.f)]
    basis = []
    for b in range(1, m):
        for a in range(1, deg + 1):
            ok = True
            for poly, lam in branch:
                e = m // gcd(m, lam)
                ord_y = lam // gcd(m, lam)
                ord_x = e if poly.coeffs == (0, 1) else 0
                if (a - 1) * ord_x + (e - 1) - b * ord_y < 0:
                    ok = False
                    break
            if ok:
                if -(a - 1) * e_inf - (e_inf + 1) + b * deg * e_inf // m < 0:
                    ok = False
            if ok:
                basis.append((a, b))
    if len(basis) != g:
        raise UnsupportedModelError(
            f"monomial differentials span {len(basis)} of {g} dimensions; model not supported"
        )
    return tuple(sorted(basis, key=lambda ab: (ab[1], ab[0])))


@dataclass(frozen=True)
class CartierMatrix:
    """Matrix of the Cartier operator on the ordered monomial basis."""

    p: int
    entries: tuple  # rows, over GF(p)
    basis: tuple  # of (a, b) pairs

    @property
    def size(self) -> int:
        return len(self.entries)


def cartier_matrix(model: CurveModel) -> CartierMatrix:
    """Cartier action: the (a,b) column lists coefficients over the basis.

    For m = 2 the classical rule applies on the presentation basis
    x^(i-1) dx / y, 1 <= i <= (deg f - 1)//2: the (i,j) entry is the
    coefficient c_(i*p - j) of f^((p-1)/2).  For m > 2, each basis
    differential x^(a-1) dx / y^b maps into the y^b' stratum, b'*p = b
    (mod m), with coefficients read off x^(a-1) f^((b'p-b)/m); the monomial
    basis is validated against the genus first.
    """
    m, p, f = model.m, model.p, model.f
    if m == 2:
        g = genus_of_model(model)
        h = f ** ((p - 1) // 2)
        rows = tuple(tuple(h.coeff(i * p - j) for j in range(1, g + 1)) for i in range(1, g + 1))
        return CartierMatrix(p=p, entries=rows, basis=tuple((j, 1) for j in range(1, g + 1)))
    basis = differential_basis(model)
    index = {ab: i for i, ab in enumerate(basis)}
    size = len(basis)
    rows = [[0] * size for _ in range(size)]
    for j, (a, b) in enumerate(basis):
        b_prime = next(bp for bp in range(1, m) if (bp * p) % m == b % m)
        exponent = (b_prime * p - b) // m
        poly = FpPoly(p, (0,) * (a - 1) + (1,)) * f**exponent
        for (a_t, b_t), i in index.items():
            if b_t != b_prime:
                continue
            rows[i][j] = poly.coeff(a_t * p - 1)
    return CartierMatrix(p=p, entries=tuple(tuple(r) for r in rows), basis=basis)


def _mat_mul(a, b, p):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def _entrywise_power(mat, p):
    return tuple(tuple(pow(x, p, p) for x in row) for row in mat)


def _rank_mod_p(mat, p):
    rows = [list(r) for r in mat]
    n = len(rows)
    rank = 0
    col = 0
    while rank < n and col < n:
        pivot = next((r for r in range(rank, n) if rows[r][col] % p), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(n):
            if r != rank and rows[r][col] % p:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def stable_rank(matrix: CartierMatrix, iterations: int | None = None) -> int:
    """Rank of M * M^(p) * ... * M^(p^(g-1)), the p-rank of the model.

    Entrywise p-th powers are the identity over the prime field, but the
    semilinear product is formed literally so the definition stays visible.
    """
    g = matrix.size
    if g == 0:
        return 0
    steps = g if iterations is None else iterations
    product = matrix.entries
    twisted = matrix.entries
    for _ in range(steps - 1):
        twisted = _entrywise_power(twisted, matrix.p)
        product = _mat_mul(product, twisted, matrix.p)
    return _rank_mod_p(product, matrix.p)


def p_rank(model: CurveModel) -> int:
    return stable_rank(cartier_matrix(model))


def is_ordinary(model: CurveModel) -> bool:
    return p_rank(model) == genus_of_model(model)


# -- zeta-function oracle -----------------------------------------------------


def count_points(model: CurveModel, r: int) -> int:
    """Degree-one places of the smooth model over GF(p^r).

    Over each x the local rule applies: an unramified x contributes the
    m-th-power-residue count of f(x); a root of multiplicity lam contributes
    the solutions of w^d = u with d = gcd(m, lam) and u the unit part; the
    place at infinity follows the same rule with d = gcd(m, deg f) and the
    leading coefficient as unit.
    """
    m, p, f = model.m, model.p, model.f
    q = p**r
    if q > ZETA_POINT_CAP:
        raise UnsupportedModelError(f"field size {q} exceeds the point-count cap")
    field = ExtField(p, r)
    total = 0
    for x0 in field.elements():
        total += _places_over(model, field, x0)
    d_inf = gcd(m, f.degree)
    dd = gcd(d_inf, q - 1)
    total += dd if pow(f.leading(), (q - 1) // dd, p) == 1 else 0
    return total


def _horner_divide(field, coeffs, x0):
    """Quotient and remainder of sum(coeffs[i] x^i) by (x - x0)."""
    out = []
    acc = field.zero()
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x0), c)
        out.append(acc)
    remainder = out.pop()
    out.reverse()
    return out, remainder


def _places_over(model, field, x0):
    m = model.m
    q = field.size
    coeffs = [field.embed(c) for c in model.f.coeffs]
    lam = 0
    while True:
        quotient, remainder = _horner_divide(field, coeffs, x0)
        if field.is_zero(remainder):
            coeffs = quotient
            lam += 1
        else:
            break
    # remainder is the value at x0 of f/(x-x0)^lam: f(x0) itself when lam = 0,
    # the unit part at a root otherwise
    d = gcd(m, q - 1) if lam == 0 else gcd(gcd(m, lam), q - 1)
    return d if field.pow(remainder, (q - 1) // d) == field.one() else 0


def zeta_l_polynomial(model: CurveModel):
    """Coefficients of the zeta numerator L(t) of the smooth model, exact.

    Needs point counts over GF(p), ..., GF(p^g) for the normalization genus
    g; the remaining coefficients come from the functional equation.  When
    one more field fits under the cap, the count over GF(p^(g+1)) is
    verified against the prediction.
    """
    g = normalization_genus(model)
    if g > ZETA_GENUS_CAP:
        raise UnsupportedModelError(f"genus {g} above the oracle cap {ZETA_GENUS_CAP}")
    p = model.p
    if p**g > ZETA_POINT_CAP:
        raise UnsupportedModelError("field tower exceeds the point-count cap")
    counts = [count_points(model, r) for r in range(1, g + 1)]
    power_sums = [p**r + 1 - counts[r - 1] for r in range(1, g + 1)]
    # Newton's identities: e_k from power sums of the inverse roots
    elementary = [1]
    for k in range(1, g + 1):
        acc = 0
        for i in range(1, k):
            acc += (-1) ** (i - 1) * elementary[i] * power_sums[k - i - 1]
        value = power_sums[k - 1] - acc
        if value % k != 0:
            raise UnsupportedModelError("inconsistent point counts (non-integral symmetric function)")
        elementary.append((-1) ** (k - 1) * value // k)
    coeffs = [0] * (2 * g + 1)
    coeffs[0] = 1
    for k in range(1, g + 1):
        coeffs[k] = (-1) ** k * elementary[k]
    for k in range(0, g):
        coeffs[2 * g - k] = p ** (g - k) * coeffs[k]
    if p ** (g + 1) <= ZETA_POINT_CAP:
        predicted = _predicted_count(coeffs, p, g + 1)
        actual = count_points(model, g + 1)
        if predicted != actual:
            raise UnsupportedModelError(
                f"point count over GF(p^{g + 1}) is {actual}, L-polynomial predicts {predicted}"
            )
    return tuple(coeffs)


def _predicted_count(l_coeffs, p: int, r: int) -> int:
    """N_r from L(t) = prod (1 - alpha_i t) via extended Newton recursion."""
    degree = len(l_coeffs) - 1
    sums = []
    for k in range(1, r + 1):
        c_k = l_coeffs[k] if k <= degree else 0
        acc = -k * c_k
        for i in range(1, k):
            c_i = l_coeffs[i] if i <= degree else 0
            acc -= c_i * sums[k - i - 1]
        sums.append(acc)
    return p**r + 1 - sums[r - 1]


def zeta_prank_oracle(model: CurveModel) -> int:
    """p-rank as the degree of the zeta numerator reduced mod p."""
    coeffs = zeta_l_polynomial(model)
    degree = 0
    for k, c in enumerate(coeffs):
        if c % model.p != 0:
            degree = k
    return degree


# -- curve-expression parsing --------------------------------------------------


def parse_curve(text: str, p: int) -> CurveModel:
    """Parse ``y^m = <integer polynomial in x>`` into a model over GF(p)."""
    import re

    lhs, _, rhs = text.partition("=")
    if not rhs:
        raise ValueError("curve expression needs '='")
    lhs = lhs.replace(" ", "")
    match = re.fullmatch(r"y(?:\^(\d+))?", lhs)
    if not match:
        raise ValueError(f"left side must be y^m, got {lhs!r}")
    m = int(match.group(1) or 1)
    coeffs = _parse_poly(rhs, p)
    return CurveModel(m=m, f=FpPoly(p, coeffs), p=p)


def _parse_poly(text: str, p: int):
    import re

    text = text.replace(" ", "").replace("**", "^").replace("-", "+-")
    terms = [t for t in text.split("+") if t]
    coeffs = {}
    for term in terms:
        match = re.fullmatch(r"(-?)(\d*)(?:\*?(x)(?:\^(\d+))?)?", term)
        if not match or (not match.group(2) and not match.group(3)):
            raise ValueError(f"cannot parse term {term!r}")
        sign = -1 if match.group(1) else 1
        coeff = int(match.group(2)) if match.group(2) else 1
        if match.group(3):
            exp = int(match.group(4)) if match.group(4) else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
    size = max(coeffs) + 1 if coeffs else 0
    out = [0] * size
    for e, c in coeffs.items():
        out[e] = c % p
    return out
