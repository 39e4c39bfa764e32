"""Dense univariate polynomials over a finite field.

The coefficient tuple lists coefficients by increasing degree; the zero
polynomial is the empty tuple and its degree is the sentinel NEG_INF,
which compares below every integer so degree bounds never need a special
case.  Values are immutable and hashable.
"""

from .errors import InputError

NEG_INF = float("-inf")


class FqPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:n])

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(field):
        return FqPoly(field, ())

    @staticmethod
    def one(field):
        return FqPoly(field, (1,))

    @staticmethod
    def const(field, c):
        return FqPoly(field, (c,))

    @staticmethod
    def gen(field):
        """The variable itself (T)."""
        return FqPoly(field, (0, 1))

    @staticmethod
    def from_int_coeffs(field, ints):
        return FqPoly(field, [field.from_int(c) for c in ints])

    # -- basic structure --------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def lead(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __eq__(self, other):
        return (isinstance(other, FqPoly) and self.field is other.field
                and self.coeffs == other.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return FqPoly(F, out)

    def __neg__(self):
        F = self.field
        return FqPoly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FqPoly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return FqPoly(F, out)

    def scale(self, c):
        F = self.field
        if c == 0:
            return FqPoly(F, ())
        return FqPoly(F, [F.mul(a, c) for a in self.coeffs])

    def shift(self, k):
        """Multiply by T^k."""
        if not self.coeffs:
            return self
        return FqPoly(self.field, (0,) * k + self.coeffs)

    def __pow__(self, n):
        out = FqPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return FqPoly(F, ()), self
        quot = [0] * (dq + 1)
        inv_lead = F.inv(other.lead())
        ob = other.coeffs
        db = len(ob) - 1
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = F.mul(c, inv_lead)
            quot[i - db] = c
            for j, bj in enumerate(ob):
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, bj))
        return FqPoly(F, quot), FqPoly(F, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other):
        return other.divmod(self)[1].is_zero()

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InputError("division is not exact")
        return q

    def monic(self):
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def eval(self, x):
        """Evaluate at a field element."""
        F = self.field
        out = 0
        for c in reversed(self.coeffs):
            out = F.add(F.mul(out, x), c)
        return out

    def derivative(self):
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(F.mul(i % F.p, self.coeffs[i]))
        return FqPoly(F, out)

    def compose(self, other):
        """self(other(T))."""
        out = FqPoly.zero(self.field)
        for c in reversed(self.coeffs):
            out = out * other + FqPoly.const(self.field, c)
        return out

    # -- rendering --------------------------------------------------------

    def to_str(self, var="T"):
        F = self.field
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = F.element_str(c)
            if i == 0:
                terms.append(cs if F.e == 1 else f"({cs})" if ("+" in cs) else cs)
                continue
            v = var if i == 1 else f"{var}^{i}"
            if cs == "1":
                terms.append(v)
            elif F.e > 1 and ("+" in cs or cs.startswith("a")):
                terms.append(f"({cs})*{v}")
            else:
                terms.append(f"{cs}*{v}")
        return " + ".join(terms)

    def __repr__(self):
        return f"FqPoly({self.to_str()})"


def poly_gcd(a, b):
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a, b):
    """Extended gcd: returns (g, u, v) with g = u*a + v*b, g monic or zero."""
    F = a.field
    r0, r1 = a, b
    s0, s1 = FqPoly.one(F), FqPoly.zero(F)
    t0, t1 = FqPoly.zero(F), FqPoly.one(F)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = F.inv(r0.lead())
    return r0.scale(c), s0.scale(c), t0.scale(c)


def poly_lcm(a, b):
    if a.is_zero() or b.is_zero():
        return FqPoly.zero(a.field)
    g = poly_gcd(a, b)
    return (a * b).exact_div(g).monic()


def gcd_list(polys, field):
    g = FqPoly.zero(field)
    for p in polys:
        g = poly_gcd(g, p)
        if g.is_one():
            return g
    return g


def powmod(base, n, modulus):
    out = FqPoly.one(base.field)
    base = base % modulus
    while n:
        if n & 1:
            out = (out * base) % modulus
        base = (base * base) % modulus
        n >>= 1
    return out


def factor_fq_univariate(g, seed=0):
    """Factor a nonzero g over its coefficient field.

    Returns [(monic irreducible FqPoly, multiplicity), ...]; the product
    of the factors with multiplicity is monic(g).
    """
    from . import gpoly
    out = []
    for coeffs, mult in gpoly.factor(g.field, list(g.coeffs), seed=seed):
        out.append((FqPoly(g.field, coeffs), mult))
    return out


def is_irreducible(f):
    """Rabin irreducibility test for a nonconstant polynomial over F_q."""
    if f.degree < 1:
        return False
    d = int(f.degree)
    if d == 1:
        return True
    F = f.field
    q = F.q
    x = FqPoly.gen(F)
    if powmod(x, q ** d, f) != x % f:
        return False
    dd = d
    primes = []
    e = 2
    while e * e <= dd:
        if dd % e == 0:
            primes.append(e)
            while dd % e == 0:
                dd //= e
        e += 1
    if dd > 1:
        primes.append(dd)
    for ell in primes:
        h = powmod(x, q ** (d // ell), f) - x
        if not poly_gcd(f, h).is_one():
            return False
    return True


def monic_irreducibles(field, degree):
    """All monic irreducibles of the given degree, in encoding order."""
    q = field.q
    for low in range(q ** degree):
        coeffs = []
        n = low
        for _ in range(degree):
            coeffs.append(n % q)
            n //= q
        coeffs.append(1)
        f = FqPoly(field, coeffs)
        if is_irreducible(f):
            yield f


def primes_up_to(field, max_degree):
    """Monic irreducibles of degree <= max_degree in (degree, encoding) order."""
    for d in range(1, max_degree + 1):
        yield from monic_irreducibles(field, d)


def poly_order_key(p):
    """Sort key: degree first, then coefficient encoding."""
    return (len(p.coeffs), tuple(reversed(p.coeffs)))
