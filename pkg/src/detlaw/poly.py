"""Sparse multivariate polynomials over a finite field.

Terms are stored as a dict mapping exponent tuples to nonzero coefficient
codes.  The canonical term order used for printing and serialization is
graded lexicographic (total degree first, then lex on the exponent vector).
"""

from .errors import VariableMismatch
from .fields import FFElem, embed_code


class MPoly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, variables, terms=None):
        self.field = field
        self.vars = tuple(variables)
        self.terms = terms if terms is not None else {}

    # --- constructors ---

    @classmethod
    def zero(cls, field, variables):
        return cls(field, variables, {})

    @classmethod
    def const(cls, field, variables, value):
        code = field.coerce(value)
        nv = len(variables)
        if code == 0:
            return cls(field, variables, {})
        return cls(field, variables, {(0,) * nv: code})

    @classmethod
    def var(cls, field, variables, name, coeff=1):
        variables = tuple(variables)
        i = variables.index(name)
        e = [0] * len(variables)
        e[i] = 1
        code = field.coerce(coeff)
        if code == 0:
            return cls(field, variables, {})
        return cls(field, variables, {tuple(e): code})

    @classmethod
    def from_terms(cls, field, variables, pairs):
        terms = {}
        F = field
        for exps, code in pairs:
            if code:
                prev = terms.get(exps)
                s = F.add(prev, code) if prev is not None else code
                if s:
                    terms[exps] = s
                elif prev is not None:
                    del terms[exps]
        return cls(field, variables, terms)

    # --- helpers ---

    def _check(self, other):
        if self.field != other.field or self.vars != other.vars:
            raise VariableMismatch(
                f"operands disagree: {self.field}{self.vars} vs {other.field}{other.vars}"
            )

    def _coerce(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, FFElem)):
            return MPoly.const(self.field, self.vars, other)
        return NotImplemented

    # --- ring operations ---

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        F = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            prev = terms.get(e)
            if prev is None:
                terms[e] = c
            else:
                s = F.add(prev, c)
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return MPoly(F, self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MPoly(F, self.vars, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FFElem)):
            return self.scale(self.field.coerce(other))
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        F = self.field
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                c = F.mul(c1, c2)
                if not c:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                prev = out.get(e)
                if prev is None:
                    out[e] = c
                else:
                    s = F.add(prev, c)
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return MPoly(F, self.vars, out)

    __rmul__ = __mul__

    def scale(self, code):
        if code == 0:
            return MPoly(self.field, self.vars, {})
        F = self.field
        return MPoly(F, self.vars, {e: F.mul(c, code) for e, c in self.terms.items()})

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        result = MPoly.const(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # --- structure ---

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d):
        return all(sum(e) == d for e in self.terms)

    def coefficient(self, var, power):
        """The coefficient of var**power, as a polynomial in the same variables."""
        i = self.vars.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = e[:i] + (0,) + e[i + 1:]
                out[e2] = c
        return MPoly(self.field, self.vars, out)

    def constant_code(self):
        return self.terms.get((0,) * len(self.vars), 0)

    def substitute(self, images):
        """Ring-homomorphic substitution.

        ``images`` maps every variable name to an MPoly (all over a common
        field/variable set).  Missing variables with nonzero exponent raise
        VariableMismatch.
        """
        some = next(iter(images.values()))
        tf, tv = some.field, some.vars
        out = MPoly.zero(tf, tv)
        pow_cache = {}

        def power(name, n):
            key = (name, n)
            got = pow_cache.get(key)
            if got is None:
                got = images[name] ** n
                pow_cache[key] = got
            return got

        for e, c in self.terms.items():
            term = MPoly.const(tf, tv, embed_code(self.field, tf, c))
            for name, exp in zip(self.vars, e):
                if exp:
                    if name not in images:
                        raise VariableMismatch(f"no image for variable {name}")
                    term = term * power(name, exp)
            out = out + term
        return out

    def evaluate(self, point):
        """Evaluate at a dict var -> code; returns a code."""
        F = self.field
        acc = 0
        for e, c in self.terms.items():
            t = c
            for name, exp in zip(self.vars, e):
                if exp:
                    t = F.mul(t, F.pow(point[name], exp))
                    if not t:
                        break
            acc = F.add(acc, t)
        return acc

    def partial_evaluate(self, point):
        """Evaluate a subset of variables (dict var -> code), keeping the rest."""
        F = self.field
        idx = {self.vars.index(n): v for n, v in point.items()}
        out = {}
        for e, c in self.terms.items():
            t = c
            e2 = list(e)
            for i, v in idx.items():
                if e[i]:
                    t = F.mul(t, F.pow(v, e[i]))
                    e2[i] = 0
                if not t:
                    break
            if not t:
                continue
            e2 = tuple(e2)
            prev = out.get(e2)
            if prev is None:
                out[e2] = t
            else:
                s = F.add(prev, t)
                if s:
                    out[e2] = s
                else:
                    del out[e2]
        return MPoly(F, self.vars, out)

    def map_field(self, target):
        """Coefficient-wise canonical embedding into an extension field."""
        if target == self.field:
            return self
        terms = {e: embed_code(self.field, target, c) for e, c in self.terms.items()}
        return MPoly(target, self.vars, terms)

    def rename(self, variables):
        assert len(variables) == len(self.vars)
        return MPoly(self.field, tuple(variables), dict(self.terms))

    def sorted_terms(self):
        """Terms in descending graded-lex order: (exps, coeff code) pairs."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # --- comparisons / display ---

    def __eq__(self, other):
        if isinstance(other, (int, FFElem)):
            other = MPoly.const(self.field, self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.vars == other.vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.vars, tuple(self.sorted_terms())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{n}^{x}" if x > 1 else n for n, x in zip(self.vars, e) if x
            )
            cs = str(self.field.elem(c))
            if mono:
                bits.append(mono if cs == "1" else f"{cs}*{mono}")
            else:
                bits.append(cs)
        return " + ".join(bits)
