"""Exact arithmetic in the cyclotomic field Q(zeta_n) and q-combinatorics.

Elements are stored as an integer numerator vector in the power basis
1, z, ..., z^(phi-1) over a positive common denominator, reduced modulo the
n-th cyclotomic polynomial after every operation.  Equality is therefore
plain tuple equality.
"""
from __future__ import annotations

import ast
import cmath
import math
from fractions import Fraction
from functools import lru_cache

from sympy import Poly, Symbol, cyclotomic_poly, totient


class ScalarError(ArithmeticError):
    pass


class CyclotomicField:
    """The field Q(zeta_n); ``z`` denotes a fixed primitive n-th root of unity."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("conductor must be a positive integer")
        self.n = n
        self.phi = int(totient(n))
        x = Symbol("x")
        coeffs = Poly(cyclotomic_poly(n, x), x).all_coeffs()[::-1]
        # monic: z^phi = -sum(_low[j] z^j)
        self._low = tuple(int(c) for c in coeffs[:-1])
        self._units = [k for k in range(2, n) if math.gcd(k, n) == 1]
        self.zero = CycScalar(self, (0,) * self.phi, 1)
        self.one = self(1)
        self._zeta_powers = [self._power_vector(m) for m in range(n)]
        # roots of unity of Q(zeta_n) have order dividing lcm(2, n)
        self.unity_exponent = n if n % 2 == 0 else 2 * n

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(("CyclotomicField", self.n))

    def __reduce__(self):
        return (field, (self.n,))

    def _power_vector(self, m: int) -> tuple:
        vec = [0] * (max(m, self.phi - 1) + 1)
        vec[m] = 1
        return tuple(self._reduce(vec))

    def _reduce(self, vec: list) -> list:
        phi, low = self.phi, self._low
        for k in range(len(vec) - 1, phi - 1, -1):
            c = vec[k]
            if c:
                base = k - phi
                for j, lj in enumerate(low):
                    if lj:
                        vec[base + j] -= c * lj
        return vec[:phi] + [0] * (phi - len(vec)) if len(vec) < phi else vec[:phi]

    def __call__(self, value) -> "CycScalar":
        """Coerce an int, Fraction, CycScalar or coefficient list into the field."""
        if isinstance(value, CycScalar):
            if value.field != self:
                raise ScalarError("mixing scalars of different conductors")
            return value
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            num = [0] * self.phi
            num[0] = value.numerator
            return CycScalar(self, tuple(num), value.denominator)
        if isinstance(value, str):
            return self.parse(value)
        coeffs = [Fraction(c) for c in value]
        if len(coeffs) > self.phi:
            den = math.lcm(*(c.denominator for c in coeffs))
            vec = self._reduce([int(c * den) for c in coeffs])
            return CycScalar.make(self, vec, den)
        return self.from_fractions(coeffs)

    def from_fractions(self, coeffs) -> "CycScalar":
        coeffs = [Fraction(c) for c in coeffs]
        coeffs += [Fraction(0)] * (self.phi - len(coeffs))
        den = math.lcm(*(c.denominator for c in coeffs))
        return CycScalar.make(self, [int(c * den) for c in coeffs], den)

    def zeta(self, k: int = 1) -> "CycScalar":
        return CycScalar(self, self._zeta_powers[k % self.n], 1)

    def parse(self, text: str) -> "CycScalar":
        """Parse a literal such as ``"z^2+z+1"`` or ``"-3*z^-1"``.

        Grammar: integers, the symbol ``z``, ``+ - * / ^`` and parentheses.
        """
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise ScalarError(f"cannot parse scalar literal {text!r}") from exc
        return self._eval_node(tree.body, text)

    def _eval_node(self, node, text):
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return self(node.value)
        if isinstance(node, ast.Name) and node.id == "z":
            return self.zeta()
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = self._eval_node(node.operand, text)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = _literal_int(node.right)
                if exp is None:
                    raise ScalarError(f"exponent must be an integer in {text!r}")
                return self._eval_node(node.left, text) ** exp
            left = self._eval_node(node.left, text)
            right = self._eval_node(node.right, text)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                return left / right
        raise ScalarError(f"unsupported syntax in scalar literal {text!r}")

    def random(self, rng, bound: int = 3) -> "CycScalar":
        return CycScalar.make(self, [rng.randint(-bound, bound) for _ in range(self.phi)], 1)


def _literal_int(node):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        inner = _literal_int(node.operand)
        return None if inner is None else -inner
    return None


@lru_cache(maxsize=None)
def field(n: int) -> CyclotomicField:
    return CyclotomicField(n)


class CycScalar:
    """Immutable element of Q(zeta_n) in canonical form."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, fld: CyclotomicField, num: tuple, den: int):
        self.field = fld
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def make(cls, fld, vec, den) -> "CycScalar":
        if den == 0:
            raise ScalarError("zero denominator")
        g = math.gcd(den, *vec)
        if den < 0:
            g = -g
        if g != 1:
            vec = [v // g for v in vec]
            den //= g
        return cls(fld, tuple(vec), den)

    # ---------------------------------------------------------------- basics
    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(v, self.den) for v in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.field is not self.field and other.field != self.field:
                raise ScalarError("mixing scalars of different conductors")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, CycScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den and self.field == other.field

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den)) if not self.is_rational() else hash(
                Fraction(self.num[0], self.den))
        return self._hash

    # ------------------------------------------------------------ arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            return CycScalar.make(self.field, [a + b for a, b in zip(self.num, other.num)], d1)
        return CycScalar.make(self.field, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycScalar.make(self.field, [a * other for a in self.num], self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        phi = len(a)
        if phi == 1:
            return CycScalar.make(self.field, [a[0] * b[0]], self.den * other.den)
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CycScalar.make(self.field, self.field._reduce(conv), self.den * other.den)

    __rmul__ = __mul__

    def conjugate_by(self, k: int) -> "CycScalar":
        """Apply the Galois automorphism z -> z^k (k coprime to n)."""
        fld = self.field
        acc = [0] * fld.phi
        for j, c in enumerate(self.num):
            if c:
                for idx, v in enumerate(fld._zeta_powers[(j * k) % fld.n]):
                    if v:
                        acc[idx] += c * v
        return CycScalar(fld, tuple(acc), self.den)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        prod = self
        for k in self.field._units:
            prod = prod * self.conjugate_by(k)
        return Fraction(prod.num[0], prod.den)

    def inverse(self) -> "CycScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        fld = self.field
        if fld.phi == 1:
            return fld(Fraction(self.den, self.num[0]))
        others = fld.one
        for k in fld._units:
            others = others * self.conjugate_by(k)
        total = self * others
        nrm = Fraction(total.num[0], total.den)
        return others * fld(1 / nrm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exp: int):
        if not isinstance(exp, int):
            return NotImplemented
        if exp < 0:
            return self.inverse() ** (-exp)
        result = self.field.one
        base = self
        while exp:
            if exp & 1:
                result = result * base
            exp >>= 1
            if exp:
                base = base * base
        return result

    # --------------------------------------------------------------- display
    def __repr__(self):
        return f"CycScalar({self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}" if c.denominator == 1 else f"({c})*{mono}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def to_json(self) -> list:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def embed(self, k: int = 1) -> complex:
        """Numerical value under z -> exp(2 pi i k / n); display and log estimates only."""
        w = cmath.exp(2j * math.pi * k / self.field.n)
        return sum(complex(c) * w ** j for j, c in enumerate(self.coeffs))


def from_json(fld: CyclotomicField, data) -> CycScalar:
    return fld.from_fractions(Fraction(s) for s in data)


# ------------------------------------------------------------ q-combinatorics

def q_number(m: int, x: CycScalar) -> CycScalar:
    """(m)_x = 1 + x + ... + x^(m-1)."""
    if m < 0:
        raise ValueError("q_number needs m >= 0")
    total = x.field.zero
    power = x.field.one
    for _ in range(m):
        total = total + power
        power = power * x
    return total


def q_factorial(m: int, x: CycScalar) -> CycScalar:
    result = x.field.one
    for r in range(1, m + 1):
        result = result * q_number(r, x)
    return result


def q_binomial(m: int, k: int, x: CycScalar, *, recursion: str = "left") -> CycScalar:
    """Gaussian binomial via Pascal recursion (no division).

    ``recursion="left"`` uses C(m,k) = C(m-1,k) + x^(m-k) C(m-1,k-1),
    ``"right"`` uses C(m,k) = x^k C(m-1,k) + C(m-1,k-1).
    """
    if not 0 <= k <= m:
        raise ValueError(f"q_binomial index out of range: m={m}, k={k}")
    fld = x.field
    powers = [fld.one]
    for _ in range(m):
        powers.append(powers[-1] * x)
    row = [fld.one]
    for n in range(1, m + 1):
        new = [fld.one] * (n + 1)
        for j in range(1, n):
            if recursion == "left":
                new[j] = row[j] + powers[n - j] * row[j - 1]
            else:
                new[j] = powers[j] * row[j] + row[j - 1]
        row = new
    return row[k]


def multiplicative_order(x: CycScalar) -> int:
    """Order of x as a root of unity, or 0 if x is not one."""
    if x.is_zero():
        raise ScalarError("order of zero")
    bound = x.field.unity_exponent
    if x ** bound != 1:
        return 0
    for d in sorted(d for d in range(1, bound + 1) if bound % d == 0):
        if x ** d == 1:
            return d
    return bound


def char_order(x: CycScalar) -> int:
    """The q-characteristic: least r >= 2 with (r)_x! = 0, else 0.

    In characteristic zero (r)_x vanishes iff x != 1 and x^r = 1, so this is
    the order of x when x is a nontrivial root of unity.
    """
    if x.is_zero():
        raise ScalarError("char_order is undefined at 0")
    if x == 1:
        return 0
    return multiplicative_order(x)


def discrete_log(r: CycScalar, q: CycScalar, *, search_bound: int = 256):
    """Return some integer t with q^t == r, or None.

    For roots of unity the answer is reduced into [0, order).  For other q the
    exponent is pinned down by a p-adic valuation of the norm when possible,
    otherwise by a floating estimate from an archimedean embedding; every
    candidate is confirmed exactly.
    """
    if q.is_zero() or r.is_zero():
        raise ScalarError("discrete_log of zero")
    if q == 1:
        return 0 if r == 1 else None
    order = multiplicative_order(q)
    if order:
        power = q.field.one
        for t in range(order):
            if power == r:
                return t
            power = power * q
        return None
    nq, nr = q.norm(), r.norm()
    if abs(nq) != 1:
        p = _some_prime(nq)
        vq, vr = _valuation(nq, p), _valuation(nr, p)
        if vr % vq:
            return None
        t = vr // vq
        return t if q ** t == r else None
    candidates = _log_candidates(r, q)
    for t in candidates:
        if q ** t == r:
            return t
    if candidates:
        return None
    for t in range(1, search_bound + 1):
        if q ** t == r:
            return t
        if q ** (-t) == r:
            return -t
    return None


def _some_prime(value: Fraction) -> int:
    for part in (abs(value.numerator), value.denominator):
        if part > 1:
            p = 2
            while p * p <= part:
                if part % p == 0:
                    return p
                p += 1
            return part
    raise ScalarError("no prime divides a unit norm")


def _valuation(value: Fraction, p: int) -> int:
    v = 0
    num, den = value.numerator, value.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _log_candidates(r, q):
    fld = q.field
    best = None
    for k in [1] + fld._units:
        lq = math.log(abs(q.embed(k)))
        if abs(lq) > 1e-9 and (best is None or abs(lq) > abs(best[0])):
            best = (lq, k)
    if best is None:
        return []
    lq, k = best
    est = math.log(abs(r.embed(k))) / lq
    base = round(est)
    return [base, base - 1, base + 1]
