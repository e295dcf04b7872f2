"""Covering constructions: an admissible modulus P and shift a such that
every element of [a+1, a+Y] is forced out of the sums of two squares by a
congruence certificate.

The verifier never factors a + j.  All valuations are computed modulo the
prime powers of P, so verification cost scales with the modulus
description, not with the size of a.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arith import (
    DEFAULT_EFFORT,
    FactoredInteger,
    integer_log,
    mod_inverse,
    sieve_primes,
    valuation,
)
from .oracle import Member, NonMember, OddValuation, TwoPowerForm, Unknown, classify

ORACLE_VALUE_LIMIT = 10**18


class InadmissibleModulusError(ValueError):
    """The modulus contains a prime the covering argument cannot use."""

    def __init__(self, p: int, reason: str = "is 1 mod 4"):
        self.p = p
        super().__init__(f"inadmissible prime {p}: {reason}")


class ShiftRangeError(ValueError):
    """Shift outside [1, value(P)]."""


@dataclass(frozen=True)
class Construction:
    """A candidate (Y, P, a).  Validated on creation:

    * every odd modulus prime is 3 mod 4 (2 itself is allowed, it feeds
      the two-power condition),
    * 1 <= shift <= value(P).
    """

    y: int
    modulus: FactoredInteger
    shift: int

    def __post_init__(self) -> None:
        if self.y < 1:
            raise ValueError("y must be >= 1")
        for p, _ in self.modulus.factors:
            if p != 2 and p % 4 != 3:
                raise InadmissibleModulusError(p)
        if not 1 <= self.shift <= self.modulus.value():
            raise ShiftRangeError(
                f"shift {self.shift} not in [1, value(P)]"
            )


@dataclass(frozen=True)
class CoveringCertificate:
    """Covering evidence for one offset: element shift + offset is a
    non-member, by odd prime-power valuation or by two-power form."""

    offset: int
    certificate: OddValuation | TwoPowerForm

    def to_non_membership(self) -> OddValuation | TwoPowerForm:
        return self.certificate


@dataclass(frozen=True)
class CoveringReport:
    y: int
    certificates: tuple[CoveringCertificate, ...]
    first_uncovered: int | None

    @property
    def ok(self) -> bool:
        return self.first_uncovered is None and len(self.certificates) == self.y


def richards_modulus(y: int) -> FactoredInteger:
    """Product of p^(integer_log(p, 4y) + 1) over primes p <= 4y, p = 3 mod 4.

    The exponent choice makes every odd prime power k <= integer_log(p, 4y)
    available as a covering valuation.
    """
    if y < 1:
        raise ValueError("y must be >= 1")
    bound = 4 * y
    factors = [
        (p, integer_log(p, bound) + 1)
        for p in sieve_primes(bound)
        if p % 4 == 3
    ]
    return FactoredInteger(factors=tuple(factors))


def richards_shift(modulus: FactoredInteger) -> int:
    """Least positive a with 4a = -1 (mod value(modulus)).  Modulus must be odd."""
    if modulus.exponent(2) != 0:
        raise ValueError("shift congruence needs an odd modulus")
    value = modulus.value()
    return (-mod_inverse(4, value)) % value


def richards_construction(y: int) -> Construction:
    modulus = richards_modulus(y)
    return Construction(y=y, modulus=modulus, shift=richards_shift(modulus))


def _certificate_from_residues(
    offset: int,
    odd_parts: list[tuple[int, int, int]],
    two_part: tuple[int, int] | None,
) -> CoveringCertificate | None:
    # odd_parts: (p, p**e, shift mod p**e) ascending; two_part: (e2, shift mod 2**e2)
    for p, pe, rbase in odd_parts:
        r = (rbase + offset) % pe
        if r == 0:
            continue  # valuation not pinned by the modulus, certificate unusable
        k = valuation(r, p)
        if k % 2 == 1:
            return CoveringCertificate(offset, OddValuation(p, k))
    if two_part is not None:
        e2, rbase = two_part
        r = (rbase + offset) % (1 << e2)
        if r:
            k = valuation(r, 2)
            if k + 2 <= e2 and (r >> k) % 4 == 3:
                return CoveringCertificate(offset, TwoPowerForm(k))
    return None


def _residue_tables(
    c: Construction,
) -> tuple[list[tuple[int, int, int]], tuple[int, int] | None]:
    odd_parts = []
    two_part = None
    for p, e in c.modulus.factors:
        pe = p**e
        if p == 2:
            two_part = (e, c.shift % pe)
        else:
            odd_parts.append((p, pe, c.shift % pe))
    return odd_parts, two_part


def covering_certificate(c: Construction, offset: int) -> CoveringCertificate | None:
    """Certificate for a single offset, or None if no condition matches.

    Odd primes are tried in ascending order, then the two-power condition;
    the first hit wins, which keeps output deterministic.
    """
    if not 1 <= offset <= c.y:
        raise ValueError("offset must be in [1, y]")
    odd_parts, two_part = _residue_tables(c)
    return _certificate_from_residues(offset, odd_parts, two_part)


def verify_covering(c: Construction) -> CoveringReport:
    """Check all offsets 1..y.  Stops at the least uncovered offset."""
    odd_parts, two_part = _residue_tables(c)
    certs: list[CoveringCertificate] = []
    for offset in range(1, c.y + 1):
        cert = _certificate_from_residues(offset, odd_parts, two_part)
        if cert is None:
            return CoveringReport(
                y=c.y, certificates=tuple(certs), first_uncovered=offset
            )
        certs.append(cert)
    return CoveringReport(y=c.y, certificates=tuple(certs), first_uncovered=None)


@dataclass(frozen=True)
class ElementCheck:
    """One interval element with its certificate and the oracle's verdict:
    'confirmed', 'unknown' (factorization budget ran out) or 'skipped'
    (element too large for the cross-check budget)."""

    offset: int
    element: int
    certificate: OddValuation | TwoPowerForm
    oracle: str


def interval_check(
    c: Construction,
    effort: int = DEFAULT_EFFORT,
    deep_verify: bool = False,
    seed: int = 0,
) -> list[ElementCheck]:
    """Certify every element of [shift+1, shift+y] as a non-member.

    Certificates come from the covering; independently, each element is
    cross-checked with the factorization oracle when value(P) is within
    the oracle budget (10^18, lifted by deep_verify).  The two routes are
    never collapsed: a certificate is derived from congruences only.
    """
    report = verify_covering(c)
    if not report.ok:
        raise ValueError(f"construction is not covered: offset {report.first_uncovered}")
    run_oracle = deep_verify or c.modulus.value() <= ORACLE_VALUE_LIMIT
    out = []
    for cert in report.certificates:
        element = c.shift + cert.offset
        nm = cert.to_non_membership()
        assert nm.holds_for(element)
        if run_oracle:
            verdict = classify(element, effort=effort, seed=seed)
            if isinstance(verdict, Member):
                raise AssertionError(
                    f"oracle found witness for certified element {element}"
                )
            status = "confirmed" if isinstance(verdict, NonMember) else "unknown"
            assert isinstance(verdict, (NonMember, Unknown))
        else:
            status = "skipped"
        out.append(
            ElementCheck(
                offset=cert.offset, element=element, certificate=nm, oracle=status
            )
        )
    return out


def modulus_growth(y: int) -> float:
    """ln value(richards_modulus(y)) / y, the empirical growth rate."""
    return richards_modulus(y).log() / y


def construction_to_json(c: Construction) -> str:
    obj = {
        "y": c.y,
        "factors": [[p, e] for p, e in c.modulus.factors],
        "a": str(c.shift),
    }
    return json.dumps(obj, indent=2) + "\n"


def construction_from_json(text: str) -> Construction:
    """Parse and fully validate a construction document.

    Raises ValueError (malformed document), InadmissibleModulusError, or
    ShiftRangeError; these map to distinct CLI exit codes.
    """
    obj = json.loads(text)
    if not isinstance(obj, dict) or set(obj) != {"y", "factors", "a"}:
        raise ValueError("construction document needs exactly y, factors, a")
    y = obj["y"]
    if not isinstance(y, int) or y < 1:
        raise ValueError("y must be a positive integer")
    raw = obj["factors"]
    if not isinstance(raw, list) or not all(
        isinstance(f, list) and len(f) == 2 and all(isinstance(v, int) for v in f)
        for f in raw
    ):
        raise ValueError("factors must be a list of [prime, exponent] pairs")
    a_text = obj["a"]
    if not isinstance(a_text, str) or not a_text.isdigit():
        raise ValueError("a must be a decimal string")
    modulus = FactoredInteger.from_pairs(raw)
    return Construction(y=y, modulus=modulus, shift=int(a_text))
