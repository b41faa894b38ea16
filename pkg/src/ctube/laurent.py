"""Exact multivariate Laurent polynomials over the integers."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import LaurentViolation, Undefined

Exp = tuple[int, ...]


def _add_exp(u: Exp, v: Exp) -> Exp:
    return tuple(a + b for a, b in zip(u, v))


def _sub_exp(u: Exp, v: Exp) -> Exp:
    return tuple(a - b for a, b in zip(u, v))


class LaurentPoly:
    """Sparse map ``exponent vector -> nonzero int`` in a fixed number of variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()) -> None:
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exp, int] = {}
        for e, c in items:
            e = tuple(int(v) for v in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            acc[e] = acc.get(e, 0) + int(c)
        self.terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exp, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "LaurentPoly":
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: int = 1) -> "LaurentPoly":
        exp = tuple(exp)
        return cls._raw(len(exp), {exp: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPoly":
        """The generator ``x_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls.monomial(e)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly._raw(self.nvars, out)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise LaurentViolation("negative power of a non-monomial")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise LaurentViolation("negative power of a non-unit monomial")
            return LaurentPoly.monomial(tuple(k * v for v in e), c ** (-k))
        out = LaurentPoly.constant(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def min_exponents(self) -> Exp:
        if not self.terms:
            raise Undefined("exponents of the zero polynomial")
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> Exp:
        if not self.terms:
            raise Undefined("exponents of the zero polynomial")
        return tuple(max(col) for col in zip(*self.terms))

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Quotient in the Laurent ring; raises LaurentViolation if it does not exist.

        Long division in lex order.  The quotient's exponents are confined to a
        box fixed by the extreme degrees of dividend and divisor in each variable,
        which bounds the loop.
        """
        if divisor.is_zero():
            raise LaurentViolation("division by zero")
        if self.is_zero():
            return LaurentPoly._raw(self.nvars, {})
        if divisor.is_monomial():
            (de, dc), = divisor.terms.items()
            out = {}
            for e, c in self.terms.items():
                q, r = divmod(c, dc)
                if r:
                    raise LaurentViolation("non-integral coefficient in quotient")
                out[_sub_exp(e, de)] = q
            return LaurentPoly._raw(self.nvars, out)
        lo = _sub_exp(self.min_exponents(), divisor.min_exponents())
        hi = _sub_exp(self.max_exponents(), divisor.max_exponents())
        if any(a > b for a, b in zip(lo, hi)):
            raise LaurentViolation("degree bounds exclude any quotient")
        lead_e = max(divisor.terms)
        lead_c = divisor.terms[lead_e]
        dterms = list(divisor.terms.items())
        rem = dict(self.terms)
        quot: dict[Exp, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            qc, r = divmod(c, lead_c)
            qe = _sub_exp(e, lead_e)
            if r or any(v < a or v > b for v, a, b in zip(qe, lo, hi)):
                raise LaurentViolation("division is not exact in the Laurent ring")
            quot[qe] = qc
            for de, dc in dterms:
                te = _add_exp(qe, de)
                v = rem.get(te, 0) - qc * dc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return LaurentPoly._raw(self.nvars, quot)

    def substitute_ones(self, indices: Iterable[int]) -> "LaurentPoly":
        """Set the listed variables (1-based) to 1; they keep exponent 0."""
        drop = {i - 1 for i in indices}
        out: dict[Exp, int] = {}
        for e, c in self.terms.items():
            e2 = tuple(0 if i in drop else v for i, v in enumerate(e))
            v = out.get(e2, 0) + c
            if v:
                out[e2] = v
            else:
                out.pop(e2, None)
        return LaurentPoly._raw(self.nvars, out)

    def evaluate(self, point: Iterable[int], modulus: int | None = None) -> int:
        pt = list(point)
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pt, e):
                if k >= 0:
                    term *= pow(x, k, modulus) if modulus else x ** k
                else:
                    if modulus is None:
                        raise ValueError("negative exponents need a modulus")
                    term *= pow(x, k, modulus)
            total += term
        return total % modulus if modulus else total

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        return sorted(self.terms.items())

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable[dict]) -> "LaurentPoly":
        return cls(nvars, [(tuple(t["exp"]), int(t["coef"])) for t in data])

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        num: list[str] = []
        den_exp = [max(0, -v) for v in self.min_exponents()]
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = []
            for i, (v, d) in enumerate(zip(e, den_exp), 1):
                k = v + d
                if k == 1:
                    mono.append(f"x{i}")
                elif k:
                    mono.append(f"x{i}^{k}")
            body = "*".join(mono)
            if not body:
                num.append(str(c))
            elif c == 1:
                num.append(body)
            elif c == -1:
                num.append("-" + body)
            else:
                num.append(f"{c}*{body}")
        text = " + ".join(num).replace("+ -", "- ")
        den = "*".join(
            (f"x{i}" if d == 1 else f"x{i}^{d}") for i, d in enumerate(den_exp, 1) if d
        )
        if not den:
            return text
        if len(num) > 1:
            text = f"({text})"
        if "*" in den:
            den = f"({den})"
        return f"{text}/{den}"
