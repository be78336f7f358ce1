"""Decomposition strategies and specification assembly.

Each strategy turns one class descriptor into a rule over simpler
classes:

* root_split       Full class = {eps} disjoint-union H-start part
                   disjoint-union U-start part.
* hstart_rewrite   an H-start class is H prepended to a Full class whose
                   patterns lose one leading H when they have one.
* crossify         on U-start paths, containing a word is containing one
                   of its cuts, so plain constraints become crossing ones.
* localize         branch until every avoided crossing pattern and every
                   clause is local (one-sided) and every clause is a
                   singleton.
* factor           a local U-start class factors through UxDy into an
                   arch product of two Full classes.

build_specification closes a root descriptor under these strategies and
returns the finished rule system.
"""

from dataclasses import dataclass

from .classes import (
    EMPTY,
    ClassDescriptor,
    Mode,
    class_id,
    clause_key,
    epsilon_member,
    normalize,
    pattern_key,
    plain,
)
from .paths import CrossingPattern, split_pattern, strip

EPSILON_ID = "Eps"
EMPTY_ID = "Empty"

MAX_LOCALIZE_STEPS = 10000
MAX_CLASSES = 10000


class _EpsilonMarker:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EPSILON"


EPSILON = _EpsilonMarker()


class StrategyError(Exception):
    pass


class IterationCapError(StrategyError):
    """A strategy exceeded its expansion budget."""


@dataclass(frozen=True)
class Rule:
    """One production of a specification.

    kind is one of "union", "product", "epsilon", "empty".  Products
    carry the atom they prepend: "H" (one child, length 1) or "UD"
    (two children wrapped as U<left>D<right>, length 2).
    """

    kind: str
    atom: str | None = None
    children: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind == "product":
            if self.atom == "H" and len(self.children) == 1:
                return
            if self.atom == "UD" and len(self.children) == 2:
                return
            raise ValueError("malformed product rule")
        if self.kind in ("epsilon", "empty") and not self.children:
            return
        if self.kind == "union":
            return
        raise ValueError(f"malformed rule: {self.kind}")


@dataclass
class Specification:
    root: str
    rules: dict[str, Rule]
    descriptors: dict[str, object]

    def class_ids(self) -> list[str]:
        return list(self.rules)


def root_split(d: ClassDescriptor) -> list:
    """Children of a Full class: epsilon, H-start copy, U-start copy."""
    if d.mode is not Mode.FULL:
        raise StrategyError("root_split applies to Full classes")
    children = []
    if epsilon_member(d):
        children.append(EPSILON)
    for mode in (Mode.HSTART, Mode.USTART):
        child = normalize(ClassDescriptor(mode, d.avoid, d.contain))
        if child is not EMPTY:
            children.append(child)
    return children


def _drop_leading_h(cp: CrossingPattern) -> CrossingPattern:
    w = cp.right
    return plain(w[1:]) if w.startswith("H") else cp


def hstart_rewrite(d: ClassDescriptor):
    """The Full class F with H.F equal to the given H-start class.

    Greedy matching lets a pattern's leading H consume the path's
    leading H, so each H-starting pattern loses exactly one H.
    Returns EMPTY when the H-start class itself is empty.
    """
    if d.mode is not Mode.HSTART:
        raise StrategyError("hstart_rewrite applies to H-start classes")
    avoid = tuple(_drop_leading_h(cp) for cp in d.avoid)
    contain = tuple(tuple(_drop_leading_h(cp) for cp in clause)
                    for clause in d.contain)
    return normalize(ClassDescriptor(Mode.FULL, avoid, contain))


def crossify(d: ClassDescriptor):
    """Rewrite a plain U-start class with crossing patterns.

    A U-start path contains a word exactly when it contains one of the
    word's cuts, so an avoided word becomes all of its cuts avoided and
    a clause becomes the union of its members' cuts.
    """
    if d.mode is not Mode.USTART or d.crossing:
        raise StrategyError("crossify applies to plain U-start classes")
    avoid = []
    for cp in d.avoid:
        avoid.extend(split_pattern(cp.right))
    contain = []
    for clause in d.contain:
        members = []
        for cp in clause:
            members.extend(split_pattern(cp.right))
        contain.append(tuple(members))
    return normalize(ClassDescriptor(Mode.USTART, tuple(avoid),
                                     tuple(contain), crossing=True))


def _offending(d: ClassDescriptor):
    """Least item blocking factorization, or None when d is local."""
    multi = [c for c in d.contain if len(c) > 1]
    if multi:
        return "choose", min(multi, key=clause_key)
    conj = [c for c in d.contain if not c[0].is_local]
    if conj:
        return "unzip", min(conj, key=clause_key)
    bad = [cp for cp in d.avoid if not cp.is_local]
    if bad:
        return "split", min(bad, key=pattern_key)
    return None


def _replace_clause(contain, old, new_clauses):
    out = []
    for clause in contain:
        if clause == old:
            out.extend(new_clauses)
        else:
            out.append(clause)
    return tuple(out)


def localize(d: ClassDescriptor) -> list[ClassDescriptor]:
    """Disjoint local refinements of a crossing U-start class.

    Multi-member clauses split on whether their least member occurs;
    a non-local clause member is a conjunction of its two sides; a
    non-local avoided pattern splits on whether its left side occurs.
    Empty branches are pruned; leaves are returned in discovery order.
    """
    if d.mode is not Mode.USTART or not d.crossing:
        raise StrategyError("localize applies to crossing U-start classes")
    leaves: list[ClassDescriptor] = []
    stack = [d]
    steps = 0
    while stack:
        steps += 1
        if steps > MAX_LOCALIZE_STEPS:
            raise IterationCapError("localize expansion budget exceeded")
        cur = stack.pop()
        item = _offending(cur)
        if item is None:
            leaves.append(cur)
            continue
        kind, payload = item
        branches: list[ClassDescriptor] = []
        if kind == "choose":
            q = min(payload, key=pattern_key)
            branches.append(ClassDescriptor(
                cur.mode, cur.avoid + (q,), cur.contain, cur.crossing))
            branches.append(ClassDescriptor(
                cur.mode, cur.avoid,
                _replace_clause(cur.contain, payload, [(q,)]), cur.crossing))
        elif kind == "unzip":
            cp = payload[0]
            halves = [(CrossingPattern(cp.left, ""),),
                      (CrossingPattern("", cp.right),)]
            branches.append(ClassDescriptor(
                cur.mode, cur.avoid,
                _replace_clause(cur.contain, payload, halves), cur.crossing))
        else:
            cp = payload
            branches.append(ClassDescriptor(
                cur.mode, cur.avoid + (CrossingPattern(cp.left, ""),),
                cur.contain, cur.crossing))
            branches.append(ClassDescriptor(
                cur.mode, cur.avoid + (CrossingPattern("", cp.right),),
                cur.contain + ((CrossingPattern(cp.left, ""),),),
                cur.crossing))
        for child in reversed(branches):
            nc = normalize(child)
            if nc is not EMPTY:
                stack.append(nc)
    return leaves


def factor(d: ClassDescriptor):
    """Arch factors (left, right) of a local crossing U-start class.

    Paths UxDy of the class correspond bijectively to pairs with x in
    the left Full class and y in the right one.  Either side may come
    back EMPTY.
    """
    if _offending(d) is not None:
        raise StrategyError("factor needs a localized class")
    l_avoid, r_avoid = [], []
    l_contain, r_contain = [], []
    for cp in d.avoid:
        if cp.right == "":
            l_avoid.append(plain(strip(cp.left)))
        else:
            r_avoid.append(plain(cp.right))
    for clause in d.contain:
        cp = clause[0]
        if cp.right == "":
            l_contain.append((plain(strip(cp.left)),))
        else:
            r_contain.append((plain(cp.right),))
    left = normalize(ClassDescriptor(Mode.FULL, tuple(l_avoid),
                                     tuple(l_contain)))
    right = normalize(ClassDescriptor(Mode.FULL, tuple(r_avoid),
                                      tuple(r_contain)))
    return left, right


def _descriptor_id(obj) -> str:
    if obj is EPSILON:
        return EPSILON_ID
    if obj is EMPTY:
        return EMPTY_ID
    return class_id(obj)


def build_specification(root) -> Specification:
    """Close a root descriptor under the strategies into a rule system.

    The root may be any descriptor or EMPTY.  Every reachable class gets
    exactly one rule; ids are canonical so shared subclasses merge.
    """
    rules: dict[str, Rule] = {}
    descriptors: dict[str, object] = {}
    queue: list = []

    def register(obj) -> str:
        cid = _descriptor_id(obj)
        if cid not in descriptors:
            if len(descriptors) >= MAX_CLASSES:
                raise IterationCapError("class budget exceeded")
            descriptors[cid] = obj
            queue.append((cid, obj))
        return cid

    if root is not EMPTY:
        root = normalize(root)
    root_id = register(root)

    while queue:
        cid, obj = queue.pop(0)
        if obj is EPSILON:
            rules[cid] = Rule("epsilon")
            continue
        if obj is EMPTY:
            rules[cid] = Rule("empty")
            continue
        d = obj
        if d.mode is Mode.FULL:
            children = root_split(d)
            rules[cid] = Rule("union",
                              children=tuple(register(c) for c in children))
        elif d.mode is Mode.HSTART:
            child = hstart_rewrite(d)
            if child is EMPTY:
                rules[cid] = Rule("empty")
            else:
                rules[cid] = Rule("product", "H", (register(child),))
        else:
            cur = crossify(d) if not d.crossing else d
            if cur is EMPTY:
                rules[cid] = Rule("empty")
                continue
            leaves = localize(cur)
            if not leaves:
                rules[cid] = Rule("empty")
            elif len(leaves) == 1:
                left, right = factor(leaves[0])
                if left is EMPTY or right is EMPTY:
                    rules[cid] = Rule("empty")
                else:
                    rules[cid] = Rule("product", "UD",
                                      (register(left), register(right)))
            else:
                rules[cid] = Rule("union",
                                  children=tuple(register(leaf)
                                                 for leaf in leaves))

    return Specification(root_id, rules, descriptors)
