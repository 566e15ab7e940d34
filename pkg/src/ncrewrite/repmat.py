"""Exact finite-dimensional representations: an independent oracle for rewriting.

Matrices over Q(i) are stored as two integer object arrays (real and
imaginary numerators) over one positive common denominator, reduced so
that the overall gcd is 1.  Arithmetic on Python ints never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Mapping

import numpy as np

from .algebras import UnknownNameError, builtin
from .arith import GaussianRational
from .freealg import Alphabet, NCPoly, Word
from .homs import builtin_hom
from .presentation import Presentation
from .reports import Report
from .rewrite import RewriteSystem


def _int_array(rows) -> np.ndarray:
    arr = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            arr[i, j] = int(x)
    return arr


class ExactMatrix:
    __slots__ = ("re", "im", "den")

    def __init__(self, re: np.ndarray, im: np.ndarray, den: int = 1):
        if re.shape != im.shape or re.ndim != 2 or re.shape[0] != re.shape[1] or re.shape[0] < 1:
            raise ValueError("ExactMatrix needs two equal square arrays of dimension >= 1")
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = reduce(gcd, (int(x) for x in re.flat), den)
        g = reduce(gcd, (int(x) for x in im.flat), g)
        if g > 1:
            re = re // g
            im = im // g
            den //= g
        self.re, self.im, self.den = re, im, den

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    @classmethod
    def from_entries(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        rows = [[GaussianRational.coerce(x) for x in row] for row in rows]
        den = 1
        for row in rows:
            for x in row:
                den = den * x.re.denominator // gcd(den, x.re.denominator)
                den = den * x.im.denominator // gcd(den, x.im.denominator)
        re = _int_array([[x.re * den for x in row] for row in rows])
        im = _int_array([[x.im * den for x in row] for row in rows])
        return cls(re, im, den)

    @classmethod
    def integer(cls, rows) -> "ExactMatrix":
        re = _int_array(rows)
        return cls(re, np.zeros_like(re), 1)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.integer([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls.integer([[0] * n for _ in range(n)])

    def entry(self, i: int, j: int) -> GaussianRational:
        return GaussianRational(Fraction(int(self.re[i, j]), self.den),
                                Fraction(int(self.im[i, j]), self.den))

    def entries(self) -> List[List[GaussianRational]]:
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def is_zero(self) -> bool:
        return not any(self.re.flat) and not any(self.im.flat)

    def _same_dim(self, other: "ExactMatrix"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.dim == other.dim and self.den == other.den
                and np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im))

    __hash__ = None

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_dim(other)
        d = self.den * other.den // gcd(self.den, other.den)
        a, b = d // self.den, d // other.den
        return ExactMatrix(self.re * a + other.re * b, self.im * a + other.im * b, d)

    def __neg__(self):
        return ExactMatrix(-self.re, -self.im, self.den)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        c = GaussianRational.coerce(c)
        L = c.re.denominator * c.im.denominator // gcd(c.re.denominator, c.im.denominator)
        cr = c.re.numerator * (L // c.re.denominator)
        ci = c.im.numerator * (L // c.im.denominator)
        return ExactMatrix(self.re * cr - self.im * ci, self.re * ci + self.im * cr, self.den * L)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_dim(other)
        rr = self.re.dot(other.re)
        den = self.den * other.den
        if not any(self.im.flat) and not any(other.im.flat):
            return ExactMatrix(rr, np.zeros_like(rr), den)
        re = rr - self.im.dot(other.im)
        im = self.re.dot(other.im) + self.im.dot(other.re)
        return ExactMatrix(re, im, den)

    def __repr__(self):
        return f"ExactMatrix({self.to_rows()})"

    def to_rows(self) -> List[List[str]]:
        """Row-major exact scalars as strings."""
        return [[str(x) for x in row] for row in self.entries()]


@dataclass
class Representation:
    alphabet: Alphabet
    assignment: Dict[str, ExactMatrix]
    dim: int

    def __post_init__(self):
        for g, m in self.assignment.items():
            if m.dim != self.dim:
                raise ValueError(f"matrix for {g} has dimension {m.dim}, expected {self.dim}")

    def matrix(self, g: str) -> ExactMatrix:
        try:
            return self.assignment[g]
        except KeyError:
            raise KeyError(f"generator {g!r} has no matrix in this representation") from None


def eval_poly(p: NCPoly, rep: Representation) -> ExactMatrix:
    """Evaluate ``p`` by sending words to matrix products."""
    names = p.alphabet.names
    cache: Dict[Word, ExactMatrix] = {(): ExactMatrix.identity(rep.dim)}

    def word_matrix(w: Word) -> ExactMatrix:
        got = cache.get(w)
        if got is None:
            got = word_matrix(w[:-1]) @ rep.matrix(names[w[-1]])
            cache[w] = got
        return got

    total = ExactMatrix.zeros(rep.dim)
    for w, c in p.sorted_terms()[::-1]:
        total = total + word_matrix(w).scale(c)
    return total


def sl2_irrep(n: int) -> Representation:
    """The (n+1)-dimensional irreducible module: H v_k = (n-2k) v_k,
    E v_k = (n-k+1) v_{k-1}, F v_k = (k+1) v_{k+1}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = n + 1
    E = [[0] * d for _ in range(d)]
    F = [[0] * d for _ in range(d)]
    H = [[0] * d for _ in range(d)]
    for k in range(d):
        H[k][k] = n - 2 * k
        if k >= 1:
            E[k - 1][k] = n - k + 1
        if k + 1 < d:
            F[k + 1][k] = k + 1
    mats = {"E": ExactMatrix.integer(E), "F": ExactMatrix.integer(F), "H": ExactMatrix.integer(H)}
    return Representation(builtin("sl2").alphabet, mats, d)


def weyl_operator(n: int) -> ExactMatrix:
    """Basis reversal v_k -> v_{n-k}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = n + 1
    return ExactMatrix.integer([[int(i + j == n) for j in range(d)] for i in range(d)])


def sl2_z2_rep(n: int) -> Representation:
    base = sl2_irrep(n)
    mats = dict(base.assignment)
    mats["rho"] = weyl_operator(n)
    return Representation(builtin("sl2_z2").alphabet, mats, n + 1)


def pullback(images: Mapping[str, NCPoly], source_alphabet: Alphabet, rep: Representation,
             extra: Mapping[str, NCPoly] | None = None) -> Representation:
    """Representation of a source algebra obtained by evaluating generator images."""
    mats = {g: eval_poly(img, rep) for g, img in images.items()}
    for g, img in (extra or {}).items():
        mats[g] = eval_poly(img, rep)
    return Representation(source_alphabet, mats, rep.dim)


INDUCED_NAMES = ("sl2", "sl2_z2", "so3", "acsa", "acsa_z2", "racah_images")


def induced_rep(name: str, n: int) -> Representation:
    """Representations pushed through the built-in homomorphisms into sl2_irrep(n) + Weyl operator."""
    if name == "sl2":
        return sl2_irrep(n)
    if name == "sl2_z2":
        return sl2_z2_rep(n)
    hom_for = {
        "so3": "so3_to_sl2",
        "acsa": "acsa_to_sl2z2",
        "acsa_z2": "acsa_z2_to_sl2_z2",
        "racah_images": "racah_to_sl2",
    }
    if name not in hom_for:
        raise UnknownNameError(f"unknown induced representation {name!r}")
    h = builtin_hom(hom_for[name])
    base = sl2_z2_rep(n) if h.target.name == "sl2_z2" else sl2_irrep(n)
    return pullback(h.full_images(), h.source.alphabet, base)


def verify_rep(relations, rep: Representation, subject: str = "") -> Report:
    """Every relation must evaluate to the zero matrix.

    ``relations`` may be a RewriteSystem, a Presentation, or (label, NCPoly) pairs.
    """
    if isinstance(relations, RewriteSystem):
        pairs = [(r.label or r.describe(), r.as_relation()) for r in relations.rules]
        subject = subject or relations.name
    elif isinstance(relations, Presentation):
        pairs = relations.relations
        subject = subject or relations.name
    else:
        pairs = list(relations)
    report = Report("representation", f"{subject} (dim {rep.dim})")
    for label, rel in pairs:
        m = eval_poly(rel, rep)
        report.add(label, m.is_zero(), None if m.is_zero() else str(m.to_rows()))
    return report
