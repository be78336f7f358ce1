"""Counting, exhaustive generation and uniform sampling from a
specification.

All arithmetic is exact integer arithmetic.  Sampling draws through the
rule weights with big-integer ranges, so every path of the target
length is returned with exactly equal probability.
"""

import random

from .paths import ResourceLimitError
from .strategies import Rule, Specification

DEFAULT_GENERATE_CAP = 10 ** 6


class EmptyAtLengthError(ValueError):
    """The class has no path of the requested length."""


class SpecCounter:
    """Exact enumeration engine over one specification."""

    def __init__(self, spec: Specification):
        self.spec = spec
        self._memo: dict[tuple[str, int], int] = {}

    def count(self, n: int, cid: str | None = None) -> int:
        """Number of paths of length n in the class (root by default)."""
        if n < 0:
            return 0
        if cid is None:
            cid = self.spec.root
        key = (cid, n)
        got = self._memo.get(key)
        if got is not None:
            return got
        rule = self.spec.rules[cid]
        if rule.kind == "epsilon":
            val = 1 if n == 0 else 0
        elif rule.kind == "empty":
            val = 0
        elif rule.kind == "union":
            val = sum(self.count(n, c) for c in rule.children)
        elif rule.atom == "H":
            val = self.count(n - 1, rule.children[0]) if n >= 1 else 0
        else:
            a, b = rule.children
            val = sum(self.count(i, a) * self.count(n - 2 - i, b)
                      for i in range(n - 1))
        self._memo[key] = val
        return val

    def sequence(self, n_max: int, cid: str | None = None) -> list[int]:
        return [self.count(n, cid) for n in range(n_max + 1)]

    def generate_all(self, n: int, cid: str | None = None,
                     cap: int = DEFAULT_GENERATE_CAP) -> list[str]:
        """Every path of length n, in deterministic rule-driven order."""
        if self.count(n, cid) > cap:
            raise ResourceLimitError(
                f"generation of {self.count(n, cid)} paths exceeds cap {cap}")
        if cid is None:
            cid = self.spec.root
        return self._generate(cid, n)

    def _generate(self, cid: str, n: int) -> list[str]:
        if n < 0:
            return []
        rule = self.spec.rules[cid]
        if rule.kind == "epsilon":
            return [""] if n == 0 else []
        if rule.kind == "empty":
            return []
        if rule.kind == "union":
            out = []
            for c in rule.children:
                out.extend(self._generate(c, n))
            return out
        if rule.atom == "H":
            return ["H" + w for w in self._generate(rule.children[0], n - 1)]
        a, b = rule.children
        out = []
        for i in range(n - 1):
            if self.count(i, a) == 0:
                continue
            rights = self._generate(b, n - 2 - i)
            if not rights:
                continue
            for x in self._generate(a, i):
                for y in rights:
                    out.append("U" + x + "D" + y)
        return out

    def sample(self, n: int, seed=None, rng: random.Random | None = None,
               cid: str | None = None) -> str:
        """One uniformly random path of length n from the class."""
        if cid is None:
            cid = self.spec.root
        total = self.count(n, cid)
        if total == 0:
            raise EmptyAtLengthError(
                f"class {cid} has no path of length {n}")
        if rng is None:
            rng = random.Random(seed)
        return self._sample(cid, n, rng)

    def _sample(self, cid: str, n: int, rng: random.Random) -> str:
        rule = self.spec.rules[cid]
        if rule.kind == "epsilon":
            return ""
        if rule.kind == "union":
            pick = rng.randrange(self.count(n, cid))
            for c in rule.children:
                w = self.count(n, c)
                if pick < w:
                    return self._sample(c, n, rng)
                pick -= w
            raise AssertionError("union weights out of sync")
        if rule.atom == "H":
            return "H" + self._sample(rule.children[0], n - 1, rng)
        a, b = rule.children
        pick = rng.randrange(self.count(n, cid))
        for i in range(n - 1):
            w = self.count(i, a) * self.count(n - 2 - i, b)
            if pick < w:
                return ("U" + self._sample(a, i, rng) + "D"
                        + self._sample(b, n - 2 - i, rng))
            pick -= w
        raise AssertionError("product weights out of sync")
