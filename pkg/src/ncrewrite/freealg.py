"""Free associative algebra over Q(i).

Words are tuples of generator indices; the index doubles as the
generator's precedence in the deg-lex monomial order.  An :class:`NCPoly`
is a mapping from words to nonzero coefficients.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .arith import ONE, ZERO, GaussianRational

Word = Tuple[int, ...]

RESERVED = frozenset({"i"})


class Alphabet:
    """Ordered generator names; position is precedence (first = smallest)."""

    __slots__ = ("names", "_index", "display")

    def __init__(self, names: Sequence[str], display: Mapping[str, str] | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for n in names:
            if not n:
                raise ValueError("empty generator name")
            if n in RESERVED:
                raise ValueError(f"generator name {n!r} is reserved for the imaginary unit")
        self.names = names
        self._index = {n: k for k, n in enumerate(names)}
        self.display = dict(display or {})

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)})"

    def extend(self, *names: str) -> "Alphabet":
        return Alphabet(self.names + tuple(names), self.display)

    def word(self, *names: str) -> Word:
        return tuple(self.index(n) for n in names)

    def word_str(self, w: Word, sep: str = "") -> str:
        if not w:
            return "1"
        return sep.join(self.names[k] for k in w)


def word_key(w: Word):
    """Sort key realising deg-lex: shorter first, then lexicographic."""
    return (len(w), w)


def word_compare(w1: Word, w2: Word) -> int:
    """Return -1, 0 or 1 as ``w1`` is less than, equal to, or greater than ``w2``."""
    k1, k2 = word_key(w1), word_key(w2)
    return (k1 > k2) - (k1 < k2)


def find_subword(w: Word, pattern: Word, start: int = 0) -> int:
    """Leftmost occurrence of ``pattern`` in ``w`` at or after ``start``, else -1."""
    n, m = len(w), len(pattern)
    for i in range(start, n - m + 1):
        if w[i:i + m] == pattern:
            return i
    return -1


class NCPoly:
    """A noncommutative polynomial: finite sum of coefficient * word.

    Instances are treated as immutable.  The term dict never holds a zero
    coefficient, so ``==`` is mathematical equality in the free algebra.
    """

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, object] | None = None):
        self.alphabet = alphabet
        clean: Dict[Word, GaussianRational] = {}
        if terms:
            for w, c in terms.items():
                c = GaussianRational.coerce(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, alphabet: Alphabet, terms: Dict[Word, GaussianRational]) -> "NCPoly":
        # terms must already be canonical
        p = cls.__new__(cls)
        p.alphabet = alphabet
        p.terms = terms
        return p

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NCPoly":
        return cls._raw(alphabet, {})

    @classmethod
    def constant(cls, alphabet: Alphabet, c=1) -> "NCPoly":
        return cls(alphabet, {(): c})

    @classmethod
    def gen(cls, alphabet: Alphabet, name: str) -> "NCPoly":
        return cls._raw(alphabet, {(alphabet.index(name),): ONE})

    @classmethod
    def monomial(cls, alphabet: Alphabet, w: Word, c=1) -> "NCPoly":
        return cls(alphabet, {tuple(w): c})

    def gens(self):
        return [NCPoly.gen(self.alphabet, n) for n in self.alphabet]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms in decreasing monomial order."""
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=word_key)

    def leading_term(self):
        w = self.leading_word()
        return w, self.terms[w]

    def constant_term(self) -> GaussianRational:
        return self.terms.get((), ZERO)

    def is_constant(self) -> bool:
        return all(len(w) == 0 for w in self.terms)

    def coefficient(self, w: Word) -> GaussianRational:
        return self.terms.get(tuple(w), ZERO)

    def letters(self) -> set:
        return {k for w in self.terms for k in w}

    def _check(self, other: "NCPoly"):
        if self.alphabet != other.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet} vs {other.alphabet}")

    def _lift(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        return NCPoly.constant(self.alphabet, other)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.alphabet == other.alphabet and self.terms == other.terms
        if isinstance(other, (int, GaussianRational)):
            return self.terms == NCPoly.constant(self.alphabet, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __neg__(self):
        return NCPoly._raw(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        add_terms(out, other.terms.items())
        return NCPoly._raw(self.alphabet, out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NCPoly":
        c = GaussianRational.coerce(c)
        if not c:
            return NCPoly.zero(self.alphabet)
        return NCPoly._raw(self.alphabet, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: Dict[Word, GaussianRational] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = out.get(w)
                out[w] = c1 * c2 if c is None else c + c1 * c2
        return NCPoly._raw(self.alphabet, {w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        c = GaussianRational.coerce(other)
        return self.scale(c.inverse())

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = NCPoly.constant(self.alphabet, 1)
        for _ in range(k):
            result = result * self
        return result

    def canonical(self) -> "NCPoly":
        return NCPoly(self.alphabet, self.terms)

    def __repr__(self):
        from .expr import print_expr

        return f"NCPoly({print_expr(self)!r})"

    def __str__(self):
        from .expr import print_expr

        return print_expr(self)


def add_terms(out: Dict[Word, GaussianRational], items: Iterable) -> None:
    for w, c in items:
        prev = out.get(w)
        if prev is None:
            out[w] = c
        else:
            s = prev + c
            if s:
                out[w] = s
            else:
                del out[w]


def linear_combination(alphabet: Alphabet, pairs: Iterable) -> NCPoly:
    """Sum of ``c * p`` over (c, p) pairs."""
    out: Dict[Word, GaussianRational] = {}
    for c, p in pairs:
        c = GaussianRational.coerce(c)
        if c:
            add_terms(out, ((w, v * c) for w, v in p.terms.items()))
    return NCPoly._raw(alphabet, out)


def poly_arith(p: NCPoly, q, op: str) -> NCPoly:
    """``op`` in {add, sub, mul, scale}; for ``scale`` ``q`` is the scalar."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown polynomial operation {op!r}")


def commutator(p: NCPoly, q: NCPoly) -> NCPoly:
    return p * q - q * p


def anticommutator(p: NCPoly, q: NCPoly) -> NCPoly:
    return p * q + q * p


def bracket(p: NCPoly, q: NCPoly, kind: str = "commutator") -> NCPoly:
    if kind == "commutator":
        return commutator(p, q)
    if kind == "anticommutator":
        return anticommutator(p, q)
    raise ValueError(f"unknown bracket kind {kind!r}")


class MissingImageError(KeyError):
    def __init__(self, generator: str):
        super().__init__(generator)
        self.generator = generator

    def __str__(self):
        return f"no image given for generator {self.generator!r}"


def substitute(p: NCPoly, images: Mapping[str, NCPoly], target: Alphabet) -> NCPoly:
    """Apply the free-algebra homomorphism determined by ``images``.

    Each word g1...gk goes to image(g1)...image(gk); the empty word goes to 1.
    """
    names = p.alphabet.names
    cache: Dict[Word, NCPoly] = {(): NCPoly.constant(target, 1)}

    def image_of_word(w: Word) -> NCPoly:
        got = cache.get(w)
        if got is not None:
            return got
        name = names[w[-1]]
        if name not in images:
            raise MissingImageError(name)
        img = images[name]
        if img.alphabet != target:
            raise ValueError(f"image of {name!r} is not over the target alphabet")
        got = image_of_word(w[:-1]) * img
        cache[w] = got
        return got

    return linear_combination(target, ((c, image_of_word(w)) for w, c in p.terms.items()))


def embed(p: NCPoly, target: Alphabet) -> NCPoly:
    """Re-express ``p`` over ``target``, matching generators by name."""
    if p.alphabet == target:
        return p
    src = p.alphabet.names
    try:
        remap = {k: target.index(src[k]) for k in p.letters()}
    except KeyError as exc:
        raise ValueError(f"cannot embed into {target}: {exc}") from None
    return NCPoly._raw(target, {tuple(remap[k] for k in w): c for w, c in p.terms.items()})


def random_poly(alphabet: Alphabet, rng, max_degree: int = 4, n_terms: int = 4,
                letters: Sequence[int] | None = None, gaussian: bool = True) -> NCPoly:
    """Random polynomial with small Gaussian-rational coefficients (test helper)."""
    pool = list(range(len(alphabet))) if letters is None else list(letters)
    terms: Dict[Word, GaussianRational] = {}
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        w = tuple(rng.choice(pool) for _ in range(d))
        re_ = rng.randint(-5, 5)
        im = rng.randint(-3, 3) if gaussian and rng.random() < 0.3 else 0
        den = rng.choice((1, 1, 2, 3))
        c = GaussianRational(re_, im) / den
        prev = terms.get(w)
        terms[w] = c if prev is None else prev + c
    return NCPoly(alphabet, terms)
