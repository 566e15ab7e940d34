"""Built-in presentations, the Z/2Z skew-ring machinery and PBW counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, Tuple

from .freealg import Alphabet, NCPoly, commutator, embed, substitute
from .kernels import irreducible_histogram
from .presentation import Presentation, PresentationError, PresentationFile, loads_presentation
from .rewrite import RewriteSystem

BUILTIN_NAMES = ("sl2", "so3", "acsa", "sl2_z2", "acsa_z2", "racah")
SKEW_BASES = {"sl2": "sl2_z2", "acsa": "acsa_z2"}


class UnknownNameError(KeyError):
    def __str__(self):
        return str(self.args[0])


def _data_text(*parts: str) -> str:
    return resources.files("ncrewrite").joinpath("data", *parts).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def builtin_file(name: str) -> PresentationFile:
    if name not in BUILTIN_NAMES:
        raise UnknownNameError(f"unknown algebra {name!r}; expected one of {', '.join(BUILTIN_NAMES)}")
    return loads_presentation(_data_text("presentations", f"{name}.yaml"), f"{name}.yaml")


def builtin(name: str) -> Presentation:
    """The built-in presentation called ``name``."""
    return builtin_file(name).presentation


def builtin_system(name: str) -> RewriteSystem:
    return builtin(name).require_system()


def sabotage_names() -> Tuple[str, ...]:
    root = resources.files("ncrewrite").joinpath("data", "sabotage")
    return tuple(sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".yaml")))


@lru_cache(maxsize=None)
def sabotage_file(name: str) -> PresentationFile:
    if name not in sabotage_names():
        raise UnknownNameError(f"unknown sabotage fixture {name!r}")
    return loads_presentation(_data_text("sabotage", f"{name}.yaml"), f"sabotage/{name}.yaml")


def sample_file(name: str) -> PresentationFile:
    return loads_presentation(_data_text("samples", f"{name}.yaml"), f"samples/{name}.yaml")


def presentation_by_alphabet(alphabet: Alphabet) -> Presentation:
    for name in BUILTIN_NAMES:
        p = builtin(name)
        if p.alphabet == alphabet:
            return p
    raise UnknownNameError(f"no built-in presentation over {alphabet}")


# -- Racah data ---------------------------------------------------------------

@dataclass(frozen=True)
class RacahData:
    presentation: Presentation
    A: NCPoly
    B: NCPoly
    C: NCPoly
    Delta: NCPoly
    alpha: NCPoly
    beta: NCPoly
    gamma: NCPoly
    delta_definition: NCPoly  # [A,B]/2

    def central_elements(self) -> Dict[str, NCPoly]:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}

    def rebuilt(self) -> Dict[str, NCPoly]:
        """The central elements recomputed from brackets of the generators."""
        A, B, C, D = self.A, self.B, self.C, self.Delta
        return {
            "alpha": commutator(A, D) + A * C - B * A,
            "beta": commutator(B, D) + B * A - C * B,
            "gamma": commutator(C, D) + C * B - A * C,
        }


@lru_cache(maxsize=None)
def racah_data() -> RacahData:
    p = builtin("racah")
    g = p.gen
    return RacahData(
        presentation=p,
        A=g("A"), B=g("B"), C=g("C"), Delta=g("Delta"),
        alpha=p.central["alpha"], beta=p.central["beta"], gamma=p.central["gamma"],
        delta_definition=p.derived["Delta"],
    )


# -- automorphisms and skew pairs ----------------------------------------------

AUTOMORPHISMS = {"rho_sl2": "sl2", "varrho_acsa": "acsa"}


class GroupGeneratorError(ValueError):
    pass


def _to_base(p: NCPoly, base: Presentation) -> NCPoly:
    if p.alphabet == base.alphabet:
        return p
    extra = set(p.alphabet.names) - set(base.alphabet.names)
    used = {p.alphabet.names[k] for k in p.letters()}
    if used & extra:
        raise GroupGeneratorError(
            f"{', '.join(sorted(used & extra))} may not occur in an element of {base.name}"
        )
    return embed(p, base.alphabet)


def automorphism_table(name: str) -> Tuple[Presentation, Dict[str, NCPoly]]:
    if name not in AUTOMORPHISMS:
        raise UnknownNameError(f"unknown automorphism {name!r}")
    base = builtin(AUTOMORPHISMS[name])
    return base, base.automorphisms[name]


def apply_substitution_map(base: Presentation, images: Dict[str, NCPoly], p: NCPoly) -> NCPoly:
    p = _to_base(p, base)
    return base.normalize(substitute(p, images, base.alphabet))


def apply_automorphism(name: str, p: NCPoly) -> NCPoly:
    """Apply ``rho_sl2`` or ``varrho_acsa`` and normalise in the base algebra."""
    base, images = automorphism_table(name)
    return apply_substitution_map(base, images, p)


@dataclass(frozen=True)
class SkewPair:
    """The element ``even + odd*g`` of a Z/2Z skew group ring."""

    even: NCPoly
    odd: NCPoly

    def __post_init__(self):
        if self.even.alphabet != self.odd.alphabet:
            raise ValueError("both parts of a skew pair must share one alphabet")


def skew_system(base: str) -> Presentation:
    if base not in SKEW_BASES:
        raise UnknownNameError(f"no Z/2Z extension for {base!r}; expected one of {', '.join(SKEW_BASES)}")
    return builtin(SKEW_BASES[base])


def skew_pair_mul(x: SkewPair, y: SkewPair, base: str, action=None) -> SkewPair:
    """Multiply pairs by ``(a1 + b1 g)(a2 + b2 g) = (a1 a2 + b1 g(b2)) + (a1 b2 + b1 g(a2)) g``.

    ``action`` overrides the group action (a callable on base elements).
    """
    ext = skew_system(base)
    bp = builtin(base)
    if action is None:
        def action(p, _name=ext.action):
            return apply_automorphism(_name, p)
    a1, b1 = _to_base(x.even, bp), _to_base(x.odd, bp)
    a2, b2 = _to_base(y.even, bp), _to_base(y.odd, bp)
    even = bp.normalize(a1 * a2 + b1 * action(b2))
    odd = bp.normalize(a1 * b2 + b1 * action(a2))
    return SkewPair(even, odd)


def pair_to_element(x: SkewPair, base: str) -> NCPoly:
    """``even + odd*g`` as an element of the extended algebra."""
    ext = skew_system(base)
    g = ext.gen(ext.group_generator)
    return embed(x.even, ext.alphabet) + embed(x.odd, ext.alphabet) * g


def pair_of_normal_form(p: NCPoly, presentation: Presentation | None = None) -> SkewPair:
    """Split a normal form of a Z/2Z extension into its 1- and g-components."""
    ext = presentation or presentation_by_alphabet(p.alphabet)
    if ext.group_generator is None:
        raise PresentationError(f"{ext.name} has no group generator")
    base = builtin(ext.base)
    if ext.system is not None and ext.system.normalize(p) != p:
        raise ValueError(f"not in normal form for {ext.name}: {p}")
    gidx = ext.alphabet.index(ext.group_generator)
    even, odd = {}, {}
    for w, c in p.terms.items():
        if gidx in w[:-1]:
            raise ValueError(
                f"not in normal form: {ext.group_generator} occurs before the last letter"
            )
        if w and w[-1] == gidx:
            odd[w[:-1]] = c
        else:
            even[w] = c
    # base generators keep their indices inside the extension
    return SkewPair(NCPoly(base.alphabet, even), NCPoly(base.alphabet, odd))


# -- normal-word counts ---------------------------------------------------------

def pbw_count(system: RewriteSystem, degree: int) -> int:
    """Number of irreducible words of exactly ``degree`` (brute-force enumeration)."""
    lhs = [r.lhs for r in system.rules]
    return int(irreducible_histogram(len(system.alphabet), degree, lhs).sum())


class UnboundedGroupDegree(ValueError):
    pass


def pbw_count_by_base_degree(system: RewriteSystem, base_degree: int, group_generator: str) -> int:
    """Irreducible words with ``base_degree`` non-group letters, summed over group-letter count.

    Factors of irreducible words are irreducible, so a word with two or more
    group letters contains an irreducible factor ``g u g`` with ``len(u) <= base_degree``.
    When brute force finds no such factor only group degrees 0 and 1 contribute.
    """
    lhs = [r.lhs for r in system.rules]
    mark = system.alphabet.index(group_generator)
    k = len(system.alphabet)
    for m in range(2, base_degree + 3):
        if irreducible_histogram(k, m, lhs, mark)[2]:
            raise UnboundedGroupDegree(
                f"irreducible words with two {group_generator} letters exist at degree {m}"
            )
    even = irreducible_histogram(k, base_degree, lhs, mark)[0]
    odd = irreducible_histogram(k, base_degree + 1, lhs, mark)[1]
    return int(even + odd)
