"""Arithmetic in GF(2^m) and in the polynomial ring GF(2)[x].

Polynomials over GF(2) are stored as Python integers: bit ``i`` is the
coefficient of ``x**i``.  The canonical textual form is the hex of that
coefficient word, e.g. ``"0x13"`` is ``x^4 + x + 1``.  Field elements of
GF(2^m) are integers below ``2**m`` holding coordinates in the polynomial
basis (bit 0 = constant term).

Multiplication and inversion go through log/antilog tables indexed by a
primitive element alpha; degrees are limited to 2 <= m <= 16 so the tables
stay small and every exhaustive check (irreducibility, primitivity) is
cheap enough to run at construction time.
"""

from __future__ import annotations


class UnsupportedDegree(ValueError):
    """Extension degree outside the supported range 2..16."""


class NonIrreducibleModulus(ValueError):
    """The supplied modulus polynomial factors over GF(2)."""


class NonPrimitiveModulus(ValueError):
    """The modulus is irreducible but x does not generate the unit group."""


class CoefficientNotInBaseField(ArithmeticError):
    """A conjugate product produced a coefficient outside GF(2).

    This can only happen through an internal arithmetic bug; it is never an
    input error.
    """


class DivisionByZeroPolynomial(ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


#: One fixed primitive polynomial per degree, so codeword bits are
#: reproducible across runs and platforms.  Each entry is verified
#: (irreducible + primitive) the first time a field is created with it.
DEFAULT_MODULUS = {
    2: 0x7,       # x^2 + x + 1
    3: 0xB,       # x^3 + x + 1
    4: 0x13,      # x^4 + x + 1
    5: 0x25,      # x^5 + x^2 + 1
    6: 0x43,      # x^6 + x + 1
    7: 0x89,      # x^7 + x^3 + 1
    8: 0x11D,     # x^8 + x^4 + x^3 + x^2 + 1
    9: 0x211,     # x^9 + x^4 + 1
    10: 0x409,    # x^10 + x^3 + 1
    11: 0x805,    # x^11 + x^2 + 1
    12: 0x1053,   # x^12 + x^6 + x^4 + x + 1
    13: 0x201B,   # x^13 + x^4 + x^3 + x + 1
    14: 0x4443,   # x^14 + x^10 + x^6 + x + 1
    15: 0x8003,   # x^15 + x + 1
    16: 0x1100B,  # x^16 + x^12 + x^3 + x + 1
}


def poly_degree(p: int) -> int:
    """Degree of a GF(2)[x] polynomial; -1 for the zero polynomial."""
    return p.bit_length() - 1


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divrem(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of GF(2)[x] division: a = q*b + r, deg r < deg b."""
    if b == 0:
        raise DivisionByZeroPolynomial("division by zero polynomial")
    db = poly_degree(b)
    q = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divrem(a, b)[1]


def poly_is_irreducible(p: int) -> bool:
    """Irreducibility over GF(2) by trial division up to degree deg(p)//2."""
    d = poly_degree(p)
    if d <= 0:
        return False
    if d == 1:
        return True
    if not (p & 1):        # divisible by x
        return False
    for trial in range(2, 1 << (d // 2 + 1)):
        if poly_degree(trial) >= 1 and poly_mod(p, trial) == 0:
            return False
    return True


def poly_to_hex(p: int) -> str:
    return hex(p)


def poly_from_hex(s: str) -> int:
    return int(s, 16)


def cyclotomic_coset(e: int, m: int) -> list[int]:
    """Orbit of exponent e under doubling mod 2^m - 1, starting at e.

    The orbit indexes the conjugates alpha^(e * 2^j) of alpha^e; its size is
    the degree of the minimal polynomial of alpha^e.
    """
    n = (1 << m) - 1
    e %= n
    out = [e]
    cur = (e * 2) % n
    while cur != e:
        out.append(cur)
        cur = (cur * 2) % n
    return out


class FieldContext:
    """GF(2^m) with log/antilog tables over a verified primitive modulus.

    Elements are ints < 2^m in the polynomial basis.  ``exp[i]`` holds
    alpha^i for 0 <= i < 2^m - 1, and ``log[a]`` inverts that for nonzero a.
    Instances are immutable after construction and safe to share across
    threads.
    """

    __slots__ = ("m", "modulus", "order", "exp", "log")

    def __init__(self, m: int, modulus: int | None = None):
        if not (2 <= m <= 16):
            raise UnsupportedDegree(f"m={m} outside supported range 2..16")
        if modulus is None:
            modulus = DEFAULT_MODULUS[m]
        if poly_degree(modulus) != m:
            raise NonIrreducibleModulus(
                f"modulus {hex(modulus)} does not have degree {m}")
        if not poly_is_irreducible(modulus):
            raise NonIrreducibleModulus(
                f"modulus {hex(modulus)} factors over GF(2)")
        self.m = m
        self.modulus = modulus
        self.order = (1 << m) - 1

        # exp table by repeated multiplication by x and reduction; if alpha
        # returns to 1 early the modulus is irreducible but not primitive.
        exp = [0] * self.order
        log = [0] * (1 << m)
        a = 1
        for i in range(self.order):
            if a == 1 and i > 0:
                raise NonPrimitiveModulus(
                    f"ord(x) = {i} < {self.order} for modulus {hex(modulus)}")
            exp[i] = a
            log[a] = i
            a <<= 1
            if a >> m:
                a ^= modulus
        if a != 1:
            raise NonPrimitiveModulus(
                f"x^{self.order} != 1 for modulus {hex(modulus)}")
        self.exp = exp
        self.log = log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.exp[(self.order - self.log[a]) % self.order]

    def pow(self, a: int, e: int) -> int:
        """a**e for e >= 0, with 0**0 = 1 by the empty-product convention."""
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % self.order]

    def alpha_pow(self, e: int) -> int:
        """alpha^e for any integer e (reduced mod 2^m - 1)."""
        return self.exp[e % self.order]

    def minimal_polynomial(self, exponent: int) -> int:
        """Minimal polynomial over GF(2) of beta = alpha^exponent.

        Expands prod_j (x - beta^(2^j)) over the conjugate orbit in
        GF(2^m)[x] and checks every coefficient lands in {0, 1}.  The result
        is returned as a GF(2)[x] bitmask; its degree equals the size of the
        cyclotomic coset of ``exponent``.
        """
        coset = cyclotomic_coset(exponent, self.m)
        # coeffs[i] is a field element; start with the constant poly 1
        coeffs = [1]
        for j in coset:
            root = self.alpha_pow(j)
            # multiply running product by (x + root)
            nxt = [0] * (len(coeffs) + 1)
            for i, ci in enumerate(coeffs):
                nxt[i + 1] ^= ci
                nxt[i] ^= self.mul(ci, root)
            coeffs = nxt
        out = 0
        for i, ci in enumerate(coeffs):
            if ci not in (0, 1):
                raise CoefficientNotInBaseField(
                    f"coefficient {ci} of x^{i} not in GF(2); "
                    f"exponent={exponent}, coset={coset}")
            out |= ci << i
        return out

    def __repr__(self) -> str:
        return f"FieldContext(m={self.m}, modulus={hex(self.modulus)})"


def field_create(m: int, modulus: int | None = None) -> FieldContext:
    """Build GF(2^m), verifying the modulus is irreducible and primitive."""
    return FieldContext(m, modulus)
