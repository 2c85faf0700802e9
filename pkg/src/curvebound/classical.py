"""Closed-form orders for the classical families and sporadic group facts.

The PSL/PGL/PSU/PGU orders and their designated solvable subgroups are given
by exact integer formulas.  Facts about the two sporadic candidates (the
alternating group on 7 points and the Mathieu group on 11 points) are always
recomputed from their permutation representations, never read from a table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from . import permgroup
from .permgroup import PermGroup

FAMILIES = ("PSL2", "PGL2", "PSL3", "PGL3", "PSU3", "PGU3", "ALT7", "M11")
SPORADIC_WILD_PRIMES = {"ALT7": (3, 5, 7), "M11": (3, 5, 11)}


def factor_prime_power(q: int):
    """(d, k) with q = d^k and d prime; raises if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    d = 2
    n = q
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return d, k
        d += 1
    return n, 1


def field_aut_divisors(q: int):
    """Odd divisors of k where q = d^k: the admissible outer cyclic orders."""
    _, k = factor_prime_power(q)
    return {r for r in range(1, k + 1) if k % r == 0 and r % 2 == 1}


@dataclass(frozen=True)
class FamilySpec:
    """One candidate group: a classical family at q, or a sporadic name.

    ``field_aut_factor`` is the order of the outer cyclic factor acting by
    field automorphisms; it must be an odd divisor of k.
    """

    family: str
    q: int | None = None
    field_aut_factor: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("ALT7", "M11"):
            if self.q is not None or self.field_aut_factor != 1:
                raise ValueError("sporadic groups take no q or outer factor")
            return
        if self.q is None:
            raise ValueError(f"{self.family} requires a prime power q")
        d, k = factor_prime_power(self.q)
        if self.family in ("PSL2", "PGL2"):
            if self.q < 5 or self.q % 2 == 0:
                raise ValueError("PSL(2,q) case requires odd q >= 5")
        elif self.family in ("PSL3", "PGL3"):
            if self.q % 4 != 3:
                raise ValueError("PSL(3,q) case requires q = 3 mod 4")
        elif self.family in ("PSU3", "PGU3"):
            if self.q % 4 != 1:
                raise ValueError("PSU(3,q) case requires q = 1 mod 4")
        r = self.field_aut_factor
        if r < 1 or k % r != 0 or r % 2 == 0:
            raise ValueError(f"outer factor {r} is not an odd divisor of {k}")


def family_order(spec: FamilySpec) -> int:
    """Exact order of the group described by ``spec``."""
    q = spec.q
    if spec.family == "ALT7":
        return _sporadic_group("alt7").order()
    if spec.family == "M11":
        return _sporadic_group("m11").order()
    if spec.family == "PSL2":
        base = q * (q - 1) * (q + 1) // 2
    elif spec.family == "PGL2":
        base = q * (q - 1) * (q + 1)
    elif spec.family == "PSL3":
        base = q**3 * (q**3 - 1) * (q**2 - 1) // gcd(3, q - 1)
    elif spec.family == "PGL3":
        base = q**3 * (q**3 - 1) * (q**2 - 1)
    elif spec.family == "PSU3":
        base = q**3 * (q**2 - 1) * (q**3 + 1) // gcd(3, q + 1)
    else:  # PGU3
        base = q**3 * (q**2 - 1) * (q**3 + 1)
    return base * spec.field_aut_factor


def solvable_witness_order(spec: FamilySpec) -> int:
    """Order of the designated solvable subgroup used by the bound arguments.

    PSL(2,q): the Borel subgroup of order q(q-1)/2.  PSU(3,q): the Sylow
    normalizer of order q^3(q^2-1)/gcd(3,q+1).  PSL(3,q): the Sylow
    normalizer of order q^3(q-1)^2(q+1)/gcd(3,q-1).
    """
    q = spec.q
    if spec.family == "PSL2":
        return q * (q - 1) // 2
    if spec.family == "PSU3":
        return q**3 * (q**2 - 1) // gcd(3, q + 1)
    if spec.family == "PSL3":
        return q**3 * (q - 1) ** 2 * (q + 1) // gcd(3, q - 1)
    raise ValueError(f"no designated solvable subgroup for {spec.family}")


@dataclass(frozen=True)
class GroupFacts:
    """Enumeration-ready facts: wild stabilizer shapes and tame orders."""

    name: str
    p: int
    order: int
    wild_catalog: tuple  # sorted (q1, E1) pairs
    tame_catalog: tuple  # sorted cyclic prime-to-p orders >= 2

    def __post_init__(self):
        for q1, e1 in self.wild_catalog:
            if gcd(e1, self.p) != 1 or e1 > q1 - 1:
                raise ValueError(f"invalid wild entry ({q1},{e1})")
            d, _ = factor_prime_power(q1)
            if d != self.p:
                raise ValueError(f"wild entry ({q1},{e1}) is not a {self.p}-power")
        for e in self.tame_catalog:
            if e < 2 or gcd(e, self.p) != 1:
                raise ValueError(f"invalid tame order {e}")


@lru_cache(maxsize=None)
def _sporadic_group(name: str) -> PermGroup:
    return permgroup.load_group(name)


def sporadic_facts(name: str, p: int) -> GroupFacts:
    """Wild and tame catalogs for ALT7 or M11 at a wild prime p.

    The wild catalog is recomputed by a live subgroup search: for every
    elementary abelian p-subgroup Q of a Sylow p-subgroup, the cyclic
    prime-to-p orders available in N(Q) give the complements, filtered by
    the ordinary-stabilizer constraint E <= |Q| - 1.  The tame catalog is
    the element-order set minus 1 and multiples of p.
    """
    key = name.upper()
    if key not in SPORADIC_WILD_PRIMES:
        raise ValueError(f"unsupported sporadic group {name!r}")
    if p not in SPORADIC_WILD_PRIMES[key]:
        raise ValueError(f"unsupported characteristic {p} for {key}")
    group = _sporadic_group(key.lower())
    wild = set()
    for q_rep in permgroup.p_subgroup_class_reps(group, p):
        if not q_rep.is_elementary_abelian(p):
            continue
        q1 = q_rep.order()
        normal = group.normalizer(q_rep)
        for g in normal.elements():
            e1 = g.order()
            if gcd(e1, p) == 1 and e1 <= q1 - 1:
                wild.add((q1, e1))
    tame = {e for e in group.element_order_set() if e > 1 and e % p != 0}
    return GroupFacts(
        name=key,
        p=p,
        order=group.order(),
        wild_catalog=tuple(sorted(wild)),
        tame_catalog=tuple(sorted(tame)),
    )
