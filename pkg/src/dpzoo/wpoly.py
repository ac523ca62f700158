"""Exact sparse multivariate polynomials with per-variable weights.

Coefficients are rationals (`fractions.Fraction`), exponent vectors are
tuples over a fixed ordered variable list.  Variables carry integer
weights: ambient coordinates have weight >= 1, group/family parameters
(t, a, b, lambda, ...) have weight 0.  Used to check quasi-homogeneity of
defining equations, vanishing on parametrized curves, Jacobian-level
singularity tests and invariance under explicit group actions.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotOnSurfaceError(ValueError):
    """Raised by `singular_at` when the point does not lie on the surface."""


class WPoly:
    """Sparse polynomial over Q in a fixed weighted variable list."""

    __slots__ = ("variables", "weights", "terms")

    def __init__(
        self,
        variables: tuple[str, ...],
        weights: tuple[int, ...],
        terms: dict[tuple[int, ...], Fraction] | None = None,
    ):
        if len(variables) != len(weights):
            raise ValueError("one weight per variable required")
        self.variables = tuple(variables)
        self.weights = tuple(int(w) for w in weights)
        clean: dict[tuple[int, ...], Fraction] = {}
        for expo, coeff in (terms or {}).items():
            if len(expo) != len(variables):
                raise ValueError("exponent vector length mismatch")
            c = Fraction(coeff)
            if c:
                clean[tuple(int(e) for e in expo)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables, weights) -> "WPoly":
        return cls(tuple(variables), tuple(weights), {})

    @classmethod
    def const(cls, variables, weights, value) -> "WPoly":
        v = Fraction(value)
        t = {(0,) * len(tuple(variables)): v} if v else {}
        return cls(tuple(variables), tuple(weights), t)

    @classmethod
    def var(cls, variables, weights, name: str) -> "WPoly":
        variables = tuple(variables)
        i = variables.index(name)
        expo = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, tuple(weights), {expo: Fraction(1)})

    # -- ring operations ----------------------------------------------

    def _compat(self, other: "WPoly") -> None:
        if self.variables != other.variables or self.weights != other.weights:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "WPoly") -> "WPoly":
        self._compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return WPoly(self.variables, self.weights, terms)

    def __sub__(self, other: "WPoly") -> "WPoly":
        return self + (-other)

    def __neg__(self) -> "WPoly":
        return WPoly(
            self.variables, self.weights, {e: -c for e, c in self.terms.items()}
        )

    def __mul__(self, other) -> "WPoly":
        if isinstance(other, (int, Fraction)):
            k = Fraction(other)
            return WPoly(
                self.variables, self.weights, {e: c * k for e, c in self.terms.items()}
            )
        self._compat(other)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return WPoly(self.variables, self.weights, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "WPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = WPoly.const(self.variables, self.weights, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WPoly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- calculus and substitution --------------------------------------

    def derivative(self, name: str) -> "WPoly":
        i = self.variables.index(name)
        terms: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            e2 = tuple(e2)
            terms[e2] = terms.get(e2, Fraction(0)) + c * e[i]
        return WPoly(self.variables, self.weights, terms)

    def substitute(self, images: dict[str, "WPoly"]) -> "WPoly":
        """Ring morphism sending each variable to its image polynomial.

        Every variable of self must have an image; images must share one
        common codomain ring.
        """
        missing = [v for v in self.variables if v not in images]
        if missing:
            raise ValueError(f"no image for variables {missing}")
        sample = images[self.variables[0]]
        cvars, cweights = sample.variables, sample.weights
        out = WPoly.zero(cvars, cweights)
        # Cache powers per variable for sparsity.
        powers: dict[str, dict[int, WPoly]] = {v: {0: WPoly.const(cvars, cweights, 1)} for v in self.variables}
        for e, c in self.terms.items():
            term = WPoly.const(cvars, cweights, c)
            for i, exp in enumerate(e):
                if exp == 0:
                    continue
                name = self.variables[i]
                cache = powers[name]
                if exp not in cache:
                    img = images[name]
                    img._compat(sample)
                    p = cache[max(cache)]
                    for _ in range(max(cache), exp):
                        p = p * img
                        cache[len(cache)] = p
                term = term * cache[exp]
            out = out + term
        return out

    def evaluate(self, values: dict[str, Fraction]) -> Fraction:
        total = Fraction(0)
        vals = [Fraction(values[v]) for v in self.variables]
        for e, c in self.terms.items():
            prod = c
            for x, k in zip(vals, e):
                if k:
                    prod *= x**k
            total += prod
        return total

    def weighted_degrees(self) -> set[int]:
        return {
            sum(ei * wi for ei, wi in zip(e, self.weights)) for e in self.terms
        }

    def with_weights(self, weights: dict[str, int]) -> "WPoly":
        """Same polynomial, reweighted (for multigraded ambient checks)."""
        w = tuple(weights.get(v, 0) for v in self.variables)
        return WPoly(self.variables, w, dict(self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            s = "" if c == 1 and any(e) else ("-" if c == -1 and any(e) else str(c))
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.variables, e)
                if k
            )
            if s and mono:
                bits.append(f"{s}*{mono}" if s not in ("-",) else f"-{mono}")
            else:
                bits.append(s or mono)
        return " + ".join(bits).replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Parser: identifiers (primes allowed), ^ powers, rationals p/q,
# juxtaposition or * for products.

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_']*)|(?P<op>[-+*^()/]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group("num")), pos))
        elif m.lastgroup == "ident":
            tokens.append(("ident", m.group("ident"), pos))
        else:
            tokens.append(("op", m.group("op"), pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, variables, weights):
        self.tokens = tokens
        self.i = 0
        self.variables = tuple(variables)
        self.weights = tuple(weights)

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> WPoly:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolyParseError(f"unexpected trailing {val!r}", pos)
        return p

    def expr(self) -> WPoly:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        acc = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def term(self) -> WPoly:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                acc = acc * self.factor()
            elif kind in ("num", "ident") or (kind == "op" and val == "("):
                acc = acc * self.factor()  # implicit product by juxtaposition
            else:
                return acc

    def factor(self) -> WPoly:
        base = self.primary()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val, pos = self.next()
            if kind != "num":
                raise PolyParseError("exponent must be a number", pos)
            return base**val
        return base

    def primary(self) -> WPoly:
        kind, val, pos = self.next()
        if kind == "num":
            value = Fraction(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, v3, p3 = self.next()
                if k3 != "num":
                    raise PolyParseError("denominator must be a number", p3)
                value = Fraction(val, v3)
            return WPoly.const(self.variables, self.weights, value)
        if kind == "ident":
            if val not in self.variables:
                raise PolyParseError(f"unknown variable {val!r}", pos)
            return WPoly.var(self.variables, self.weights, val)
        if kind == "op" and val == "(":
            p = self.expr()
            kind, val, pos = self.next()
            if not (kind == "op" and val == ")"):
                raise PolyParseError("expected ')'", pos)
            return p
        if kind == "op" and val == "-":
            return -self.primary()
        raise PolyParseError(f"unexpected token {val!r}", pos)


def parse_poly(text: str, variables, weights) -> WPoly:
    """Parse ``text`` in the ring with the given variables and weights."""
    return _Parser(_tokenize(text), variables, weights).parse()


# ---------------------------------------------------------------------------
# Checks


def is_quasi_homogeneous(f: WPoly, degree: int) -> bool:
    """True iff every term has weighted degree ``degree``."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no well-defined degree")
    return f.weighted_degrees() == {degree}


@dataclass(frozen=True)
class GroupActionFamily:
    """A parametric substitution together with its expected multiplier.

    ``ring_vars``/``ring_weights`` describe the combined ring of ambient
    coordinates (weight >= 1) and family parameters (weight 0).
    ``substitution`` maps each ambient coordinate to a polynomial in that
    ring; ``multiplier`` is the monomial lambda with f o phi = lambda * f.
    """

    name: str
    ring_vars: tuple[str, ...]
    ring_weights: tuple[int, ...]
    substitution: tuple[tuple[str, str], ...]  # (variable, image text)
    multiplier: str

    def images(self) -> dict[str, WPoly]:
        imgs = {
            v: parse_poly(text, self.ring_vars, self.ring_weights)
            for v, text in self.substitution
        }
        for v, w in zip(self.ring_vars, self.ring_weights):
            if v not in imgs:
                imgs[v] = WPoly.var(self.ring_vars, self.ring_weights, v)
        return imgs

    def multiplier_poly(self) -> WPoly:
        lam = parse_poly(self.multiplier, self.ring_vars, self.ring_weights)
        if not lam.is_monomial():
            raise ValueError("multiplier must be a single monomial in the parameters")
        (expo,) = lam.terms
        if any(
            e and w for e, w in zip(expo, self.ring_weights)
        ):
            raise ValueError("multiplier may only involve weight-0 parameters")
        return lam


def check_invariance(f: WPoly, action: GroupActionFamily) -> bool:
    """True iff f o substitution == multiplier * f identically.

    ``f`` may be given over the ambient coordinates only; it is lifted to
    the combined coordinate+parameter ring first.
    """
    lam = action.multiplier_poly()
    imgs = action.images()
    lift_imgs = {
        v: WPoly.var(action.ring_vars, action.ring_weights, v) for v in f.variables
    }
    lifted = f.substitute(lift_imgs)
    return (lifted.substitute(imgs) - lam * lifted).is_zero


def parametrization_degree(img: WPoly) -> int | None:
    """Degree of a homogeneous image in the positive-weight curve variables.

    Returns None for the zero image; raises if the image is inhomogeneous.
    """
    if img.is_zero:
        return None
    degs = {
        sum(e_i for e_i, cw in zip(e, img.weights) if cw > 0) for e in img.terms
    }
    if len(degs) != 1:
        raise ValueError("parametrization image is not homogeneous")
    return degs.pop()


def vanishes_on_parametrized_curve(f: WPoly, param: dict[str, WPoly]) -> bool:
    """True iff f composed with the curve parametrization is identically 0.

    Each nonzero image must be homogeneous in the curve coordinates (s, t);
    weight-0 parameters may appear in coefficients.  (Consistency of the
    image degrees with the ambient weights, per grading, is the caller's
    contract: see the catalog layer.)
    """
    for v, w in zip(f.variables, f.weights):
        if w == 0 or v not in param:
            continue
        parametrization_degree(param[v])
    images = dict(param)
    for v in f.variables:
        if v not in images:
            raise ValueError(f"no parametrization given for {v}")
    return f.substitute(images).is_zero


def singular_at(f: WPoly, chart: str, point: dict[str, Fraction | int]) -> bool:
    """Jacobian test in the affine chart {chart = 1}.

    The chart variable must have weight 1 (so the chart is a smooth affine
    space).  Raises NotOnSurfaceError if the point is not on {f = 0};
    otherwise returns True iff all chart partial derivatives vanish there.
    """
    i = f.variables.index(chart)
    if f.weights[i] != 1:
        raise ValueError("chart variable must have weight 1")
    values = {v: Fraction(point.get(v, 0)) for v in f.variables}
    values[chart] = Fraction(1)
    if f.evaluate(values) != 0:
        raise NotOnSurfaceError(f"point is not on the surface in chart {chart}=1")
    return all(
        f.derivative(v).evaluate(values) == 0 for v in f.variables if v != chart
    )
