"""Closed-form generating functions.

Two independent routes to the length generating function of a class.

The recursion route (gamma/delta) folds over the letters of a single
pattern: gamma(q) is the bivariate generating function, in length and
final height, of the shortest Motzkin prefixes containing q, and delta
accumulates from it the generating function of the paths avoiding q.
All steps stay inside rational functions of y over K, so the result is
always an element of K.

The system route (extract_equations/solve_closed_form) reads the linear
shape of a specification's rules, seeds the no-H class with C, and
solves every strongly connected component that is affine over K.
"""

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    K_C,
    K_ONE,
    K_X,
    K_ZERO,
    KElem,
    Y_ONE,
    Y_VAR,
    YRat,
    k_of,
    ratx,
    y_const,
    yp,
)
from .classes import class_id, full_class, normalize
from .paths import check_word
from .strategies import Specification

K_XX = K_X * K_X
K_ONE_MINUS_X = k_of(ratx([1, -1]))
K_INV_ONE_MINUS_X = k_of(ratx(1, [1, -1]))
K_X_OVER_ONE_MINUS_X = k_of(ratx([0, 1], [1, -1]))
K_XC = K_X * K_C

DYCK_ID = class_id(normalize(full_class(avoid=("H",))))


def _step_u(g: YRat) -> YRat:
    """Append U: prefactor xy/((1-x)(x-y(1-x)))."""
    gv = g.subst(K_X_OVER_ONE_MINUS_X)
    num = YRat.make(yp([K_ZERO, K_X]))
    den = YRat.make(yp([K_ONE_MINUS_X * K_X,
                        -(K_ONE_MINUS_X * K_ONE_MINUS_X)]))
    bracket = y_const(K_X * gv) - Y_VAR * y_const(K_ONE_MINUS_X) * g
    return num / den * bracket


def _step_h(g: YRat) -> YRat:
    """Append H: Dyck-prefix prefactor written as 1/(1-xy-x^2*C)."""
    gv = g.subst(K_XC)
    dyck_den = YRat.make(yp([K_ONE - K_XX * K_C, -K_X]))
    lin = YRat.make(yp([-K_XC, K_ONE]))
    bracket = Y_VAR * g - y_const(K_XC * gv)
    return y_const(K_X) * bracket / (dyck_den * lin)


def _step_d(g: YRat) -> YRat:
    """Append D: (x/y)(g/(1-x-xy) - g(x,0)/(1-x))."""
    g0 = g.subst(K_ZERO)
    a_den = YRat.make(yp([K_ONE_MINUS_X, -K_X]))
    part = g / a_den - y_const(g0 * K_INV_ONE_MINUS_X)
    return y_const(K_X) * part / Y_VAR

_STEPS = {"U": _step_u, "H": _step_h, "D": _step_d}


@lru_cache(maxsize=None)
def gamma(q: str) -> YRat:
    """Bivariate GF of the shortest Motzkin prefixes containing q."""
    check_word(q)
    if q == "":
        return Y_ONE
    return _STEPS[q[-1]](gamma(q[:-1]))


def _delta_term(g: YRat, step: str) -> KElem:
    if step == "D":
        return g.subst(K_ZERO) * K_INV_ONE_MINUS_X
    if step == "H":
        return K_C * g.subst(K_XC)
    return g.subst(K_X_OVER_ONE_MINUS_X) * K_INV_ONE_MINUS_X


@lru_cache(maxsize=None)
def delta(q: str) -> KElem:
    """Length GF of the Motzkin paths avoiding q, as an element of K."""
    check_word(q)
    out = K_ZERO
    for i, step in enumerate(q):
        out = out + _delta_term(gamma(q[:i]), step)
    return out


# specification equation systems

def extract_equations(spec: Specification) -> dict:
    """Linear shape of a rule system, one equation per class.

    Each equation is lhs = sum of terms x^coef_x_power * prod(factors);
    a term with no factors is the constant x^coef_x_power.
    """
    eqs = []
    for cid, rule in spec.rules.items():
        if rule.kind == "epsilon":
            terms = [{"coef_x_power": 0, "factors": []}]
        elif rule.kind == "empty":
            terms = []
        elif rule.kind == "union":
            terms = [{"coef_x_power": 0, "factors": [c]}
                     for c in rule.children]
        elif rule.atom == "H":
            terms = [{"coef_x_power": 1, "factors": [rule.children[0]]}]
        else:
            terms = [{"coef_x_power": 2, "factors": list(rule.children)}]
        eqs.append({"lhs": cid, "terms": terms})
    return {"vars": list(spec.rules), "eqs": eqs}


@dataclass
class NonClosedForm:
    """Declared outcome: the system is not affine over K after seeding."""

    system: dict
    reason: str


def _strongly_connected(order: list[str],
                        edges: dict[str, list[str]]) -> list[list[str]]:
    """Tarjan components, dependencies-first."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    out: list[list[str]] = []
    counter = 0

    for start in order:
        if start in index:
            continue
        work = [(start, 0)]
        while work:
            node, ei = work.pop()
            if ei == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack.add(node)
            advanced = False
            for k in range(ei, len(edges[node])):
                nxt = edges[node][k]
                if nxt not in index:
                    work.append((node, k + 1))
                    work.append((nxt, 0))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            if low[node] == index[node]:
                comp = []
                while True:
                    top = stack.pop()
                    on_stack.discard(top)
                    comp.append(top)
                    if top == node:
                        break
                out.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return out


def solve_closed_form(spec: Specification):
    """Map of class id to its generating function in K, or NonClosedForm.

    Seeds the no-H class with C, then walks strongly connected
    components in dependency order, solving each affine system by
    Gaussian elimination over K.
    """
    values: dict[str, KElem] = {}
    for cid, rule in spec.rules.items():
        if rule.kind == "epsilon":
            values[cid] = K_ONE
        elif rule.kind == "empty":
            values[cid] = K_ZERO
    if DYCK_ID in spec.rules:
        values[DYCK_ID] = K_C

    unknowns = [cid for cid in spec.rules if cid not in values]
    edges = {
        cid: [c for c in spec.rules[cid].children
              if c in spec.rules and c not in values]
        for cid in unknowns
    }
    for comp in _strongly_connected(unknowns, edges):
        result = _solve_component(spec, comp, values)
        if result is not None:
            return NonClosedForm(extract_equations(spec), result)
    return values


def _solve_component(spec: Specification, comp: list[str],
                     values: dict[str, KElem]):
    """Solve one SCC in place; returns a reason string on failure."""
    pos = {cid: i for i, cid in enumerate(comp)}
    m = len(comp)
    # rows of (I - A) | rhs for the system T = A T + rhs
    rows = [[K_ZERO] * m + [K_ZERO] for _ in range(m)]
    for cid in comp:
        i = pos[cid]
        rows[i][i] = K_ONE
        rule = spec.rules[cid]
        if rule.kind == "union":
            for c in rule.children:
                if c in values:
                    rows[i][m] = rows[i][m] + values[c]
                else:
                    rows[i][pos[c]] = rows[i][pos[c]] - K_ONE
        elif rule.atom == "H":
            c = rule.children[0]
            if c in values:
                rows[i][m] = rows[i][m] + K_X * values[c]
            else:
                rows[i][pos[c]] = rows[i][pos[c]] - K_X
        elif rule.kind == "product":
            a, b = rule.children
            if a in values and b in values:
                rows[i][m] = rows[i][m] + K_XX * values[a] * values[b]
            elif a in values:
                coef = K_XX * values[a]
                rows[i][pos[b]] = rows[i][pos[b]] - coef
            elif b in values:
                coef = K_XX * values[b]
                rows[i][pos[a]] = rows[i][pos[a]] - coef
            else:
                return (f"class {cid} multiplies two unsolved classes"
                        f" {a} and {b}")
    # Gaussian elimination over K
    for col in range(m):
        pivot = next((r for r in range(col, m)
                      if not rows[r][col].is_zero()), None)
        if pivot is None:
            return f"singular system for component {comp}"
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [v * inv for v in rows[col]]
        for r in range(m):
            if r == col or rows[r][col].is_zero():
                continue
            factor = rows[r][col]
            rows[r] = [rv - factor * cv
                       for rv, cv in zip(rows[r], rows[col])]
    for cid in comp:
        values[cid] = rows[pos[cid]][m]
    return None
