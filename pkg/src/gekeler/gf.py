"""Finite fields F_q with q = p^e.

Elements are plain ints in [0, q).  For e = 1 the int is the residue mod p.
For e > 1 the base-p digits of the int are the coordinates of the element
with respect to the power basis of a fixed degree-e modulus over F_p; the
modulus is the first monic irreducible of degree e in the integer-encoding
order, so serialized elements are reproducible across runs.

Multiplication for e > 1 goes through discrete log/exp tables, which is
plenty at the field sizes this package ever touches.
"""

from .errors import InputError, InternalCheckError

_FIELD_CACHE = {}


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class GF:
    """The finite field with p**e elements; element values are ints."""

    def __init__(self, p, e=1):
        if not _is_prime(p):
            raise InputError(f"{p} is not prime")
        if e < 1:
            raise InputError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.q = p ** e
        self.char = p
        self.order = self.q
        self.modulus = self._least_irreducible_modulus() if e > 1 else (0, 1)
        if e > 1:
            self._build_tables()

    # -- construction helpers -------------------------------------------

    def _poly_digits(self, n, length):
        out = []
        for _ in range(length):
            out.append(n % self.p)
            n //= self.p
        return out

    def _modp_poly_mul(self, a, b):
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % p
        while out and out[-1] == 0:
            out.pop()
        return out

    def _modp_poly_rem(self, a, m):
        p = self.p
        a = list(a)
        dm = len(m) - 1
        inv_lead = pow(m[-1], p - 2, p)
        while len(a) - 1 >= dm and a:
            if a[-1] == 0:
                a.pop()
                continue
            c = (a[-1] * inv_lead) % p
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
            while a and a[-1] == 0:
                a.pop()
        return a

    def _modp_poly_gcd(self, a, b):
        p = self.p
        a, b = list(a), list(b)
        while b:
            a = self._modp_poly_rem(a, b + [])
            a, b = b, a
        return a

    def _modp_is_irreducible(self, m):
        # Rabin: m (degree d) is irreducible iff x^(p^d) = x mod m and
        # gcd(x^(p^(d/l)) - x, m) = 1 for every prime l | d.
        d = len(m) - 1
        if d == 1:
            return True
        x = [0, 1]

        def frob(poly):
            # poly -> poly^p mod m
            acc = [1]
            base = poly
            k = self.p
            while k:
                if k & 1:
                    acc = self._modp_poly_rem(self._modp_poly_mul(acc, base), m)
                base = self._modp_poly_rem(self._modp_poly_mul(base, base), m)
                k >>= 1
            return acc

        powers = [x]
        cur = x
        for _ in range(d):
            cur = frob(cur)
            powers.append(cur)
        if powers[d] != x:
            return False
        for ell in set(_prime_divisors(d)):
            diff = list(powers[d // ell])
            while len(diff) < 2:
                diff.append(0)
            diff[1] = (diff[1] - 1) % self.p
            while diff and diff[-1] == 0:
                diff.pop()
            g = self._modp_poly_gcd(m, diff)
            if len(g) - 1 > 0:
                return False
        return True

    def _least_irreducible_modulus(self):
        e = self.e
        for low in range(self.p ** e):
            m = tuple(self._poly_digits(low, e)) + (1,)
            if self._modp_is_irreducible(list(m)):
                return m
        raise InternalCheckError("no irreducible modulus found")  # pragma: no cover

    def _build_tables(self):
        q, p, e = self.q, self.p, self.e
        m = list(self.modulus)

        def mul_raw(a, b):
            da = self._poly_digits(a, e)
            db = self._poly_digits(b, e)
            prod = self._modp_poly_rem(self._modp_poly_mul(da, db), m)
            n = 0
            for c in reversed(prod):
                n = n * p + c
            return n

        # find a multiplicative generator
        for g in range(2, q):
            seen = 1
            cur = g
            n = 1
            while cur != 1:
                cur = mul_raw(cur, g)
                n += 1
            if n == q - 1:
                gen = g
                break
        exp = [1] * (q - 1)
        log = [0] * q
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            log[cur] = i
            cur = mul_raw(cur, gen)
        self._exp = exp
        self._log = log

    # -- arithmetic -------------------------------------------------------

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        p = self.p
        if self.e == 1:
            return (a + b) % p
        out = 0
        mul = 1
        for _ in range(self.e):
            out += ((a % p + b % p) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a):
        p = self.p
        if self.e == 1:
            return (-a) % p
        out = 0
        mul = 1
        for _ in range(self.e):
            out += ((-a) % p) * mul
            a //= p
            mul *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def elements(self):
        return range(self.q)

    def from_int(self, n):
        """Coefficient-wise reduction of an integer into the prime field."""
        return n % self.p

    # -- misc -------------------------------------------------------------

    def element_str(self, a):
        """Render an element in the CLI grammar (`a` = modulus root)."""
        if self.e == 1:
            return str(a)
        digits = self._poly_digits(a, self.e)
        terms = []
        for i in range(self.e - 1, -1, -1):
            c = digits[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "a" if i == 1 else f"a^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __hash__(self):
        return hash((self.p, self.e))

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.e) == (other.p, other.e)


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def gf(p, e=1):
    """Shared, cached field instance for (p, e)."""
    key = (p, e)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = GF(p, e)
    return _FIELD_CACHE[key]


def gf_of_order(q):
    """Field with exactly q elements; q must be a prime power."""
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                break
            return gf(p, e)
    raise InputError(f"{q} is not a prime power")


_EMBED_CACHE = {}


def embedding(sub, sup):
    """Field embedding GF(p,e1) -> GF(p,e2) with e1 | e2.

    Deterministic: the generator of the subfield is sent to the smallest
    (by int encoding) root of its modulus in the big field.  Returns a
    function on element values.
    """
    if sub.p != sup.p or sup.e % sub.e != 0:
        raise InputError(f"no embedding {sub} -> {sup}")
    if sub is sup or sub.e == sup.e:
        return lambda a: a
    key = (sub.p, sub.e, sup.e)
    if key in _EMBED_CACHE:
        return _EMBED_CACHE[key]
    # image of each F_p digit place: powers of the chosen root
    root = None
    for cand in range(sup.q):
        acc = 0
        power = 1
        for c in sub.modulus:
            if c:
                acc = sup.add(acc, sup.mul(c % sup.p, power))
            power = sup.mul(power, cand)
        if acc == 0:
            root = cand
            break
    if root is None:  # pragma: no cover - roots exist whenever e1 | e2
        raise InternalCheckError("modulus has no root in the extension")
    powers = [1]
    for _ in range(sub.e - 1):
        powers.append(sup.mul(powers[-1], root))

    def emb(a, _powers=powers, _p=sub.p, _sup=sup):
        out = 0
        for pw in _powers:
            d = a % _p
            if d:
                out = _sup.add(out, _sup.mul(d, pw))
            a //= _p
        return out

    _EMBED_CACHE[key] = emb
    return emb
