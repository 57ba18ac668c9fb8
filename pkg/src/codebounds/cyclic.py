"""Binary cyclic codes of length 2^m - 1 with designed distance near n/2.

For even m >= 4 and 1 <= c <= m/2 - 1 the construction removes c cyclotomic
cosets, each of size m, from the root set of x^n - 1.  The resulting code
has dimension c*m and minimum distance at least 2^(m-1) - 2^(m/2+c-1),
certified by a run of consecutive roots alpha^t, ..., alpha^(2^m - 1) of the
generator polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .gf2 import (
    FieldContext,
    cyclotomic_coset,
    field_create,
    poly_degree,
    poly_divrem,
    poly_mul,
    poly_to_hex,
)


class InvalidParameters(ValueError):
    """(m, c) outside the construction's hypotheses."""


class CosetCollision(ArithmeticError):
    """Removed cosets overlap or have the wrong size (internal error)."""


class InexactDivision(ArithmeticError):
    """x^n - 1 is not divisible by the product of minimal polynomials."""


class CertificateFailure(ArithmeticError):
    """A claimed root of the generator polynomial failed evaluation."""


class LengthMismatch(ValueError):
    """Message length does not match the code dimension."""


@dataclass(frozen=True)
class CyclotomicCoset:
    """Doubling orbit mod 2^m - 1 with its defining representative."""

    representative: int
    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Codeword:
    n: int
    bits: int

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def shifted(self) -> "Codeword":
        """Cyclic shift by one position (multiply by x mod x^n - 1)."""
        b = self.bits << 1
        if b >> self.n:
            b = (b ^ (1 << self.n)) | 1
        return Codeword(self.n, b)


@dataclass(frozen=True)
class ConstructionSpec:
    """A built code: parameters, generator polynomial, and its field."""

    m: int
    c: int
    n: int
    k: int
    generator: int
    designed_distance: int
    field: FieldContext = dc_field(repr=False, compare=False, default=None)
    cosets: tuple[CyclotomicCoset, ...] = dc_field(compare=False, default=())

    def generator_rows(self) -> list[int]:
        """Generator-matrix rows: bit images of x^i * g(x), i = 0..k-1."""
        return [self.generator << i for i in range(self.k)]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "c": self.c,
            "n": self.n,
            "k": self.k,
            "generator_hex": poly_to_hex(self.generator),
            "designed_distance": self.designed_distance,
        }


def coset_exponents(m: int, i: int) -> CyclotomicCoset:
    """The i-th removed coset {2^j + 2^(m/2+i+j) mod 2^m - 1 : j = 0..m-1}.

    Raises InvalidParameters unless m is even, m >= 4 and 1 <= i <= m/2 - 1.
    The orbit size must come out to exactly m; anything else indicates a
    parameter outside the construction's range and raises CosetCollision.
    """
    _check_params(m, i)
    n = (1 << m) - 1
    rep = (1 + (1 << (m // 2 + i))) % n
    members = frozenset(((1 << j) + (1 << (m // 2 + i + j))) % n
                        for j in range(m))
    # the formula set is exactly the doubling orbit of the representative
    orbit = frozenset(cyclotomic_coset(rep, m))
    if members != orbit or len(members) != m:
        raise CosetCollision(
            f"coset of size {len(members)} != m={m} for (m={m}, i={i})")
    return CyclotomicCoset(rep, members)


def _check_params(m: int, c: int) -> None:
    if m % 2 or m < 4:
        raise InvalidParameters(f"m must be even and >= 4, got {m}")
    if not (1 <= c <= m // 2 - 1):
        raise InvalidParameters(
            f"c must satisfy 1 <= c <= m/2 - 1 = {m // 2 - 1}, got {c}")


def build_code(m: int, c: int, modulus: int | None = None) -> ConstructionSpec:
    """Construct the code for (m, c), verifying every structural claim.

    The c cosets are rebuilt and checked pairwise disjoint, each of size m.
    g(x) = (x^n - 1) / prod_i M_i(x) is computed by exact division; a nonzero
    remainder or a degree other than n - c*m raises.  The returned spec's
    dimension is therefore certified, not assumed.
    """
    _check_params(m, c)
    ctx = field_create(m, modulus)
    n = (1 << m) - 1
    cosets = []
    seen: set[int] = set()
    h = 1
    for i in range(1, c + 1):
        cs = coset_exponents(m, i)
        if seen & cs.members:
            raise CosetCollision(
                f"coset {i} intersects earlier cosets at "
                f"{sorted(seen & cs.members)}")
        seen |= cs.members
        cosets.append(cs)
        h = poly_mul(h, ctx.minimal_polynomial(cs.representative))
    xn1 = (1 << n) | 1          # x^n - 1 == x^n + 1 over GF(2)
    g, rem = poly_divrem(xn1, h)
    if rem != 0:
        raise InexactDivision(
            f"x^{n}-1 not divisible by coset minimal-polynomial product")
    if poly_degree(g) != n - c * m:
        raise CosetCollision(
            f"deg g = {poly_degree(g)} != n - cm = {n - c * m}")
    designed = (1 << (m - 1)) - (1 << (m // 2 + c - 1))
    return ConstructionSpec(m=m, c=c, n=n, k=c * m, generator=g,
                            designed_distance=designed, field=ctx,
                            cosets=tuple(cosets))


def _eval_at_alpha_pow(ctx: FieldContext, poly: int, j: int) -> int:
    """Evaluate a GF(2)[x] polynomial at alpha^j by Horner's rule."""
    beta = ctx.alpha_pow(j)
    res = 0
    for bit in range(poly_degree(poly), -1, -1):
        res = ctx.mul(res, beta) ^ ((poly >> bit) & 1)
    return res


def bch_certificate(spec: ConstructionSpec) -> int:
    """Verify the designed-distance root window and return the bound.

    Evaluates g at alpha^j for every j in [t, 2^m - 1] with
    t = 2^(m-1) + 2^(m/2+c-1) + 1 and confirms each is a root (the window
    wraps: 2^m - 1 is 0 mod n).  Also confirms the window avoids every
    removed coset.  Returns run length + 1 = 2^(m-1) - 2^(m/2+c-1), the
    code's designed distance.
    """
    m, c, n = spec.m, spec.c, spec.n
    t = (1 << (m - 1)) + (1 << (m // 2 + c - 1)) + 1
    window = [j % n for j in range(t, 1 << m)]
    removed = set().union(*(cs.members for cs in spec.cosets))
    overlap = removed & set(window)
    if overlap:
        raise CertificateFailure(
            f"removed exponents {sorted(overlap)} inside root window")
    for j in window:
        val = _eval_at_alpha_pow(spec.field, spec.generator, j)
        if val != 0:
            raise CertificateFailure(
                f"g(alpha^{j}) = {val} != 0 inside claimed root window")
    bound = len(window) + 1
    if bound != spec.designed_distance:
        raise CertificateFailure(
            f"window length {len(window)} inconsistent with designed "
            f"distance {spec.designed_distance}")
    return bound


def best_bch_distance(spec: ConstructionSpec) -> int:
    """Longest consecutive root run anywhere on the circle, plus one.

    Scans all n exponents (not only the designed window) and returns the
    best BCH bound the generator supports.  Can exceed the designed
    distance; e.g. (m, c) = (4, 1) certifies 6 here against a designed 4.
    """
    ctx, g, n = spec.field, spec.generator, spec.n
    is_root = [_eval_at_alpha_pow(ctx, g, j) == 0 for j in range(n)]
    if all(is_root):            # cannot happen for a nonzero code
        return n + 1
    # longest circular run of roots: scan doubled sequence
    best = cur = 0
    for flag in is_root + is_root:
        cur = cur + 1 if flag else 0
        best = max(best, cur)
    return min(best, n - 1) + 1


def encode(spec: ConstructionSpec, message) -> Codeword:
    """Multiply the message polynomial by g(x); non-systematic encoder.

    ``message`` is an int below 2^k or a length-k bit sequence.
    """
    if isinstance(message, int):
        msg = message
        if not (0 <= msg < (1 << spec.k)):
            raise LengthMismatch(
                f"message {msg} not a {spec.k}-bit value")
    else:
        bits = list(message)
        if len(bits) != spec.k:
            raise LengthMismatch(
                f"message length {len(bits)} != k = {spec.k}")
        msg = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise LengthMismatch(f"non-binary symbol {b!r} at index {i}")
            msg |= b << i
    return Codeword(spec.n, poly_mul(msg, spec.generator))
