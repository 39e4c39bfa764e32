"""Residue fields A/p for p a monic irreducible of A = F_q[T].

Exposes the same element protocol as gf.GF (zero/one/add/mul/inv/...),
with element values being the coefficient tuples of the canonical
representatives of degree < deg p.  This lets every generic polynomial
routine run over A/p exactly as it runs over F_q.
"""

from .errors import InputError
from .fqpoly import FqPoly, poly_xgcd, is_irreducible


class ResidueField:
    """The field A/p, |A/p| = q^deg(p)."""

    def __init__(self, p, check=True):
        if check and not (p.is_monic() and is_irreducible(p)):
            raise InputError(f"{p.to_str()} is not a monic irreducible")
        self.base = p.field
        self.p = p
        self.d = int(p.degree)
        self.q = self.base.q ** self.d
        self.order = self.q
        self.char = self.base.p

    # element values: coeff tuples of FqPoly reps reduced mod p

    def zero(self):
        return ()

    def one(self):
        return (1,)

    def lift(self, a):
        return FqPoly(self.base, a)

    def project(self, poly):
        return (poly % self.p).coeffs

    def add(self, a, b):
        F = self.base
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        n = len(out)
        while n and out[n - 1] == 0:
            n -= 1
        return tuple(out[:n])

    def neg(self, a):
        F = self.base
        return tuple(F.neg(c) for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        prod = self.lift(a) * self.lift(b)
        if prod.degree < self.d:
            return prod.coeffs
        return (prod % self.p).coeffs

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in residue field")
        g, u, _ = poly_xgcd(self.lift(a), self.p)
        if not g.is_one():  # pragma: no cover - p is irreducible
            raise ZeroDivisionError("non-invertible residue")
        return (u % self.p).coeffs

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = self.one()
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def elements(self):
        q, d = self.base.q, self.d
        for n in range(self.q):
            coeffs = []
            m = n
            for _ in range(d):
                coeffs.append(m % q)
                m //= q
            k = len(coeffs)
            while k and coeffs[k - 1] == 0:
                k -= 1
            yield tuple(coeffs[:k])

    def from_int(self, n):
        c = self.base.from_int(n)
        return (c,) if c else ()

    def element_str(self, a):
        return self.lift(a).to_str()

    def __repr__(self):
        return f"ResidueField({self.p.to_str()})"

    def __hash__(self):
        return hash((self.base, self.p.coeffs))

    def __eq__(self, other):
        return (isinstance(other, ResidueField) and self.base is other.base
                and self.p == other.p)
