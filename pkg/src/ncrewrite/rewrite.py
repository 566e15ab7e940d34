"""Diamond-lemma rewriting for finitely presented algebras.

Relations are oriented under deg-lex into rules ``lhs -> rhs`` with every
monomial of ``rhs`` strictly below ``lhs``.  Normal forms are computed by
replacing the leftmost occurrence of a rule's lhs in a reducible word.
Because each word always takes the same one-step reduction, normal forms
can be memoised per word without changing the result.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import ONE, GaussianRational
from .expr import format_word, print_expr
from .freealg import Alphabet, NCPoly, Word, add_terms, word_key
from .reports import Report

DEFAULT_FUEL = 10**6
FUEL_ENV = "NCREWRITE_FUEL"


class OrientationError(ValueError):
    pass


class FuelExhausted(RuntimeError):
    def __init__(self, steps: int, word: str):
        super().__init__(f"rewriting fuel exhausted after {steps} steps while reducing {word}")
        self.steps = steps


def default_fuel() -> int:
    raw = os.environ.get(FUEL_ENV)
    if raw:
        try:
            v = int(raw)
        except ValueError:
            raise ValueError(f"{FUEL_ENV} must be a positive integer, got {raw!r}") from None
        if v <= 0:
            raise ValueError(f"{FUEL_ENV} must be a positive integer, got {raw!r}")
        return v
    return DEFAULT_FUEL


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NCPoly
    label: str = ""

    def __post_init__(self):
        if len(self.lhs) < 1:
            raise OrientationError(f"rule {self.label or ''} has an empty left-hand side")
        top = word_key(self.lhs)
        for w in self.rhs.terms:
            if word_key(w) >= top:
                raise OrientationError(
                    f"rule {self.label or format_word(self.rhs.alphabet, self.lhs)}: "
                    f"monomial {format_word(self.rhs.alphabet, w)} is not below the lhs"
                )

    def as_relation(self) -> NCPoly:
        return NCPoly.monomial(self.rhs.alphabet, self.lhs) - self.rhs

    def describe(self) -> str:
        a = self.rhs.alphabet
        return f"{format_word(a, self.lhs)} -> {print_expr(self.rhs)}"


class RewriteSystem:
    """Oriented rules over an alphabet; immutable apart from an internal cache."""

    def __init__(self, alphabet: Alphabet, rules: Sequence[RewriteRule], fuel: int | None = None,
                 name: str = ""):
        self.alphabet = alphabet
        self.rules: Tuple[RewriteRule, ...] = tuple(rules)
        self.fuel = default_fuel() if fuel is None else fuel
        if self.fuel <= 0:
            raise ValueError("fuel must be positive")
        self.name = name
        self._by_lhs: Dict[Word, RewriteRule] = {}
        for r in self.rules:
            if r.rhs.alphabet != alphabet:
                raise ValueError(f"rule {r.describe()} is over a different alphabet")
            if r.lhs in self._by_lhs:
                raise OrientationError(
                    f"two rules share the lhs {format_word(alphabet, r.lhs)}"
                )
            self._by_lhs[r.lhs] = r
        self._lengths = sorted({len(r.lhs) for r in self.rules})
        self._cache: Dict[Word, Dict[Word, GaussianRational]] = {}

    def __repr__(self):
        return f"RewriteSystem({self.name or list(self.alphabet.names)}, {len(self.rules)} rules)"

    def with_fuel(self, fuel: int) -> "RewriteSystem":
        return RewriteSystem(self.alphabet, self.rules, fuel, self.name)

    def rule_for(self, lhs: Word) -> Optional[RewriteRule]:
        return self._by_lhs.get(lhs)

    def find_match(self, w: Word) -> Optional[Tuple[int, RewriteRule]]:
        """Leftmost position where some lhs occurs; ties go to the shortest lhs."""
        n = len(w)
        by_lhs = self._by_lhs
        for i in range(n):
            for L in self._lengths:
                if i + L > n:
                    break
                r = by_lhs.get(w[i:i + L])
                if r is not None:
                    return i, r
        return None

    def is_reducible(self, w: Word) -> bool:
        return self.find_match(w) is not None

    def one_step(self, w: Word) -> Optional[List[Tuple[Word, GaussianRational]]]:
        m = self.find_match(w)
        if m is None:
            return None
        i, r = m
        pre, post = w[:i], w[i + len(r.lhs):]
        return [(pre + v + post, c) for v, c in r.rhs.terms.items()]

    def _word_nf(self, w: Word, budget: List[int]) -> Dict[Word, GaussianRational]:
        cache = self._cache
        got = cache.get(w)
        if got is not None:
            return got
        stack = [w]
        pending: Dict[Word, List[Tuple[Word, GaussianRational]]] = {}
        while stack:
            u = stack[-1]
            if u in cache:
                stack.pop()
                continue
            step = pending.get(u)
            if step is None:
                step = self.one_step(u)
                if step is None:
                    cache[u] = {u: ONE}
                    stack.pop()
                    continue
                budget[0] += 1
                if budget[0] > self.fuel:
                    raise FuelExhausted(budget[0] - 1, format_word(self.alphabet, w))
                pending[u] = step
            missing = [v for v, _ in step if v not in cache]
            if missing:
                stack.extend(missing)
                continue
            out: Dict[Word, GaussianRational] = {}
            for v, c in step:
                add_terms(out, ((x, c * y) for x, y in cache[v].items()))
            cache[u] = out
            del pending[u]
            stack.pop()
        return cache[w]

    def normalize(self, p: NCPoly) -> NCPoly:
        if p.alphabet != self.alphabet:
            raise ValueError(f"polynomial over {p.alphabet}, system over {self.alphabet}")
        budget = [0]
        out: Dict[Word, GaussianRational] = {}
        for w, c in p.terms.items():
            nf = self._word_nf(w, budget)
            add_terms(out, ((x, c * y) for x, y in nf.items()))
        return NCPoly._raw(self.alphabet, out)

    def reduces_to_zero(self, p: NCPoly) -> bool:
        return self.normalize(p).is_zero()


def orient(relations: Sequence[NCPoly], alphabet: Alphabet, labels: Sequence[str] | None = None,
           fuel: int | None = None, name: str = "") -> RewriteSystem:
    """Turn each relation ``r = 0`` into a monic rule ``lead(r) -> lead(r) - r/lc(r)``."""
    labels = list(labels) if labels is not None else [""] * len(relations)
    rules: List[RewriteRule] = []
    seen: Dict[Word, RewriteRule] = {}
    for r, label in zip(relations, labels):
        tag = label or print_expr(r)
        if r.alphabet != alphabet:
            raise OrientationError(f"relation {tag} is over a different alphabet")
        if r.is_zero():
            raise OrientationError(f"relation {tag} is zero")
        w, c = r.leading_term()
        if not w:
            raise OrientationError(f"unorientable relation {tag}: it is a nonzero scalar")
        monic = r.scale(c.inverse())
        rhs = NCPoly.monomial(alphabet, w) - monic
        try:
            rule = RewriteRule(w, rhs, label)
        except OrientationError as exc:
            raise OrientationError(f"unorientable relation {tag}: {exc}") from None
        prev = seen.get(w)
        if prev is not None:
            if prev.rhs == rhs:
                continue
            raise OrientationError(
                f"ambiguous orientation: relations {prev.label or prev.describe()} and {tag} "
                f"share the leading word {format_word(alphabet, w)}"
            )
        seen[w] = rule
        rules.append(rule)
    return RewriteSystem(alphabet, rules, fuel, name)


def normalize(system: RewriteSystem, p: NCPoly) -> NCPoly:
    return system.normalize(p)


@dataclass(frozen=True)
class CriticalPair:
    word: Word
    kind: str  # "overlap" or "inclusion"
    first: RewriteRule
    second: RewriteRule
    left: NCPoly
    right: NCPoly

    def describe(self) -> str:
        return format_word(self.left.alphabet, self.word)


def critical_pairs(system: RewriteSystem) -> List[CriticalPair]:
    """All overlap and inclusion ambiguities between rule left-hand sides."""
    a = system.alphabet
    out: List[CriticalPair] = []
    rules = system.rules
    for r1 in rules:
        for r2 in rules:
            l1, l2 = r1.lhs, r2.lhs
            # overlap: proper suffix of l1 equals proper prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    tail = NCPoly.monomial(a, l2[k:])
                    head = NCPoly.monomial(a, l1[:-k])
                    out.append(CriticalPair(l1 + l2[k:], "overlap", r1, r2,
                                            r1.rhs * tail, head * r2.rhs))
            # inclusion: l2 a subword of l1
            if r1 is not r2 and len(l2) <= len(l1):
                for j in range(len(l1) - len(l2) + 1):
                    if l1[j:j + len(l2)] == l2:
                        u = NCPoly.monomial(a, l1[:j])
                        v = NCPoly.monomial(a, l1[j + len(l2):])
                        out.append(CriticalPair(l1, "inclusion", r1, r2, r1.rhs, u * r2.rhs * v))
    index = {id(r): k for k, r in enumerate(rules)}
    out.sort(key=lambda cp: (word_key(cp.word), index[id(cp.first)], index[id(cp.second)]))
    return out


class ConfluenceReport(Report):
    @property
    def verdict_text(self) -> str:
        n = len(self.checks)
        noun = "critical pair" if n == 1 else "critical pairs"
        if self.passed:
            return f"confluent; {n} {noun} resolved"
        bad = ", ".join(c.label for c in self.failures())
        return f"not confluent; unresolved: {bad}"

    def overlap_words(self) -> List[str]:
        return [c.label for c in self.checks]

    def summary(self) -> str:
        return f"confluence {self.subject}: {self.verdict_text}"


def check_confluence(system: RewriteSystem) -> ConfluenceReport:
    report = ConfluenceReport("confluence", system.name or "system", allow_empty=True)
    for cp in critical_pairs(system):
        left = system.normalize(cp.left)
        right = system.normalize(cp.right)
        diff = left - right
        report.add(
            cp.describe(),
            diff.is_zero(),
            None if diff.is_zero() else print_expr(diff),
            kind=cp.kind,
            rules=[cp.first.describe(), cp.second.describe()],
            left=print_expr(left),
            right=print_expr(right),
        )
    return report
