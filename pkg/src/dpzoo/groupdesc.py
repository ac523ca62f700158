"""Symbolic descriptors for connected automorphism groups.

These are metadata, not group implementations: expressions over the atoms

    Ga^k, Gm^k, B_n, U_n, PGL_n, GL_n, GL_n/mu_m, Ga x|(n) Gm

combined by direct products (``x``) and semidirect products (``x|``).
Supported queries: dimension, torus rank, reductivity, solvability.

Normalization rules: the twist of Ga x|(n) Gm satisfies n >= 0 (twists n
and -n give isomorphic groups), twist 1 is the Borel B2, twist 0 is the
direct product Ga x Gm.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field


class GroupParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class GroupExpr:
    """Expression tree.  ``kind`` is one of the atom names ("Ga", "Gm",
    "B", "U", "PGL", "GL", "GLmod") or "direct"/"semidirect"."""

    kind: str
    n: int = 0  # power for Ga/Gm, size for B/U/PGL/GL
    mod: int = 0  # the m of GL_n/mu_m
    twist: int | None = None  # the n of Ga x|(n) Gm on a semidirect node
    factors: tuple["GroupExpr", ...] = field(default=())

    # -- queries --------------------------------------------------------

    def dimension(self) -> int:
        if self.kind == "Ga" or self.kind == "Gm":
            return self.n
        if self.kind == "B":
            return self.n * (self.n + 1) // 2 - 1
        if self.kind == "U":
            return self.n * (self.n - 1) // 2
        if self.kind == "PGL":
            return self.n * self.n - 1
        if self.kind in ("GL", "GLmod"):
            return self.n * self.n
        return sum(f.dimension() for f in self.factors)

    def rank(self) -> int:
        """Dimension of a maximal torus."""
        if self.kind == "Ga" or self.kind == "U":
            return 0
        if self.kind == "Gm":
            return self.n
        if self.kind in ("B", "PGL"):
            return self.n - 1
        if self.kind in ("GL", "GLmod"):
            return self.n
        return sum(f.rank() for f in self.factors)

    def is_reductive(self) -> bool:
        """No additive/unipotent/Borel atoms anywhere in the expression."""
        if self.kind in ("Ga", "U", "B"):
            return False
        if self.kind in ("Gm", "PGL", "GL", "GLmod"):
            return True
        return all(f.is_reductive() for f in self.factors)

    def is_solvable(self) -> bool:
        if self.kind in ("PGL", "GL", "GLmod"):
            return False
        if self.kind in ("Ga", "Gm", "B", "U"):
            return True
        return all(f.is_solvable() for f in self.factors)

    # -- rendering --------------------------------------------------------

    def render(self) -> str:
        return self._render(top=True)

    def _render(self, top: bool = False) -> str:
        if self.kind in ("Ga", "Gm"):
            return f"{self.kind}^{self.n}" if self.n != 1 else self.kind
        if self.kind in ("B", "U", "PGL", "GL"):
            return f"{self.kind}{self.n}"
        if self.kind == "GLmod":
            s = f"GL{self.n}/mu{self.mod}"
            return s if top else f"({s})"
        sep = " x " if self.kind == "direct" else (
            f" x|({self.twist}) " if self.twist is not None else " x| "
        )
        body = sep.join(f._render() for f in self.factors)
        return body if top else f"({body})"

    def __str__(self) -> str:
        return self.render()


def _atom(kind: str, n: int = 1, mod: int = 0) -> GroupExpr:
    return GroupExpr(kind, n=n, mod=mod)


_TOKEN = re.compile(
    r"\s*(?:(?P<name>Ga|Gm|B|U|PGL|GL|mu)|(?P<num>\d+)|(?P<semi>x\|)|(?P<op>[x^()/\-]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise GroupParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "name":
            out.append(("name", m.group("name"), pos))
        elif m.lastgroup == "num":
            out.append(("num", int(m.group("num")), pos))
        elif m.lastgroup == "semi":
            out.append(("semi", "x|", pos))
        else:
            out.append(("op", m.group("op"), pos))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_num(self) -> int:
        kind, val, pos = self.next()
        if kind != "num":
            raise GroupParseError("expected a number", pos)
        return val

    def parse(self) -> GroupExpr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise GroupParseError(f"unexpected trailing {val!r}", pos)
        return e

    def expr(self) -> GroupExpr:
        factors = [self.atom()]
        ops: list[tuple[str, int | None]] = []
        while True:
            kind, val, pos = self.peek()
            if kind == "semi":
                self.next()
                twist = None
                k2, v2, _ = self.peek()
                # "(number)" after x| is a twist; "(name..." is a subgroup.
                if k2 == "op" and v2 == "(" and self.toks[self.i + 1][0] in ("num",) or (
                    k2 == "op"
                    and v2 == "("
                    and self.toks[self.i + 1] == ("op", "-", self.toks[self.i + 1][2])
                ):
                    self.next()
                    sign = 1
                    k3, v3, _ = self.peek()
                    if k3 == "op" and v3 == "-":
                        self.next()
                        sign = -1
                    twist = sign * self.expect_num()
                    k4, v4, p4 = self.next()
                    if not (k4 == "op" and v4 == ")"):
                        raise GroupParseError("expected ')' after twist", p4)
                ops.append(("semi", twist))
                factors.append(self.atom())
            elif kind == "op" and val == "x":
                self.next()
                ops.append(("direct", None))
                factors.append(self.atom())
            else:
                break
        return _assemble(factors, ops)

    def atom(self) -> GroupExpr:
        kind, val, pos = self.next()
        if kind == "op" and val == "(":
            e = self.expr()
            k2, v2, p2 = self.next()
            if not (k2 == "op" and v2 == ")"):
                raise GroupParseError("expected ')'", p2)
            return e
        if kind != "name":
            raise GroupParseError(f"expected a group atom, got {val!r}", pos)
        if val in ("Ga", "Gm"):
            power = 1
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "^":
                self.next()
                power = self.expect_num()
            return _atom(val, power)
        if val in ("B", "U", "PGL", "GL"):
            n = self.expect_num()
            e = _atom(val, n)
            k2, v2, _ = self.peek()
            if val == "GL" and k2 == "op" and v2 == "/":
                self.next()
                k3, v3, p3 = self.next()
                if not (k3 == "name" and v3 == "mu"):
                    raise GroupParseError("expected 'mu' after '/'", p3)
                m = self.expect_num()
                e = GroupExpr("GLmod", n=n, mod=m)
            return e
        raise GroupParseError(f"unknown atom {val!r}", pos)


def _assemble(factors: list[GroupExpr], ops: list[tuple[str, int | None]]) -> GroupExpr:
    if not ops:
        return factors[0]
    # Normalize the twisted 2-factor Ga x|(n) Gm before assembling.
    if len(factors) == 2 and ops[0][1] is not None:
        twist = abs(ops[0][1])
        a, b = factors
        if a.kind == "Ga" and a.n == 1 and b.kind == "Gm" and b.n == 1:
            if twist == 0:
                return GroupExpr("direct", factors=(a, b))
            if twist == 1:
                return _atom("B", 2)
            return GroupExpr("semidirect", twist=twist, factors=(a, b))
    kinds = {op for op, _ in ops}
    if kinds == {"direct"}:
        return GroupExpr("direct", factors=tuple(factors))
    if len(ops) == 1:
        op, twist = ops[0]
        twist = abs(twist) if twist is not None else None
        return GroupExpr("semidirect", twist=twist, factors=tuple(factors))
    # Mixed chains associate to the left.
    acc = factors[0]
    for (op, twist), f in zip(ops, factors[1:]):
        if op == "direct":
            acc = GroupExpr("direct", factors=(acc, f))
        else:
            acc = GroupExpr("semidirect", twist=abs(twist) if twist is not None else None, factors=(acc, f))
    return acc


def parse(text: str) -> GroupExpr:
    """Parse a group descriptor, e.g. "Ga^2 x| Gm" or "Ga x|(3) Gm"."""
    return _Parser(_tokenize(text)).parse()
