"""Algebra homomorphisms given by generator images, and their verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Sequence

from .algebras import BUILTIN_NAMES, UnknownNameError, builtin, builtin_file, racah_data
from .expr import print_expr
from .freealg import NCPoly, commutator, embed, substitute
from .presentation import HomSpec, Presentation, PresentationError, PresentationFile
from .reports import Report
from .rewrite import RewriteSystem


@dataclass(eq=False)
class Homomorphism:
    name: str
    source: Presentation
    target: Presentation
    images: Dict[str, NCPoly]
    _full: Dict[str, NCPoly] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        missing = [g for g in self.source.free_generators if g not in self.images]
        if missing:
            raise PresentationError(f"{self.name}: no image for generator(s) {', '.join(missing)}")
        extra = [g for g in self.images if g not in self.source.free_generators]
        if extra:
            raise PresentationError(f"{self.name}: images given for non-generators {', '.join(extra)}")
        for g, img in self.images.items():
            if img.alphabet != self.target.alphabet:
                raise PresentationError(f"{self.name}: image of {g} is not over {self.target.name}")

    @property
    def target_system(self) -> RewriteSystem:
        return self.target.require_system()

    def full_images(self) -> Dict[str, NCPoly]:
        """Images of every generator, derived ones included."""
        if self._full is None:
            full = dict(self.images)
            for g, definition in self.source.derived.items():
                full[g] = substitute(definition, self.images, self.target.alphabet)
            self._full = full
        return self._full

    def image(self, g: str) -> NCPoly:
        return self.target.normalize(self.full_images()[g])

    def apply(self, p: NCPoly) -> NCPoly:
        """Image of a source element, in normal form."""
        p = embed(p, self.source.alphabet)
        return self.target.normalize(substitute(p, self.full_images(), self.target.alphabet))

    def __call__(self, p: NCPoly) -> NCPoly:
        return self.apply(p)

    def describe(self) -> str:
        lines = [f"{self.name}: {self.source.name} -> {self.target.name}"]
        for g in self.source.free_generators:
            lines.append(f"  {g} |-> {print_expr(self.images[g])}")
        return "\n".join(lines)


def hom_from_spec(spec: HomSpec, source: Presentation | None = None) -> Homomorphism:
    src = source if source is not None else builtin(spec.source)
    tgt = builtin(spec.target)
    images = {}
    for g, text in spec.images.items():
        try:
            images[g] = tgt.parse(text)
        except ValueError as exc:
            raise PresentationError(f"{spec.name}: image of {g}: {exc}") from None
    return Homomorphism(spec.name, src, tgt, images)


def homs_from_file(pf: PresentationFile) -> List[Homomorphism]:
    src = pf.presentation if pf.presentation is not None else builtin(pf.source)
    return [hom_from_spec(s, src) for s in pf.homomorphisms]


@lru_cache(maxsize=None)
def _builtin_specs() -> Dict[str, HomSpec]:
    out = {}
    for name in BUILTIN_NAMES:
        for spec in builtin_file(name).homomorphisms:
            out[spec.name] = spec
    return out


BUILTIN_HOMS = (
    "racah_to_sl2",
    "racah_to_so3",
    "so3_to_sl2",
    "acsa_to_sl2z2",
    "racah_to_acsa",
    "acsa_z2_to_sl2_z2",
    "sl2_z2_to_acsa_z2",
    "incl_sl2_in_sl2z2",
    "incl_acsa_in_acsaz2",
)


@lru_cache(maxsize=None)
def builtin_hom(name: str) -> Homomorphism:
    specs = _builtin_specs()
    if name not in specs:
        raise UnknownNameError(f"unknown homomorphism {name!r}; expected one of {', '.join(BUILTIN_HOMS)}")
    return hom_from_spec(specs[name])


def identity_hom(p: Presentation) -> Homomorphism:
    return Homomorphism(f"id_{p.name}", p, p, {g: p.gen(g) for g in p.free_generators})


def verify_hom(h: Homomorphism) -> Report:
    """Every defining relation of the source must map to zero in the target."""
    report = Report("homomorphism", f"{h.name}: {h.source.name} -> {h.target.name}")
    images = h.full_images()
    for label, rel in h.source.relations:
        residual = h.target.normalize(substitute(rel, images, h.target.alphabet))
        report.add(label, residual.is_zero(), None if residual.is_zero() else print_expr(residual))
    return report


def verify_racah_hom(h: Homomorphism) -> Report:
    """Commutator chain [A',B'] = [B',C'] = [C',A'] = 2Delta' plus alpha, beta, gamma -> 0."""
    rd = racah_data()
    if h.source.name != rd.presentation.name:
        raise PresentationError(f"{h.name} does not start at the Racah algebra")
    t = h.target
    imgs = h.full_images()
    A, B, C, D = imgs["A"], imgs["B"], imgs["C"], imgs["Delta"]
    report = Report("racah", f"{h.name}: racah -> {t.name}")

    def add(label: str, expr: NCPoly):
        r = t.normalize(expr)
        report.add(label, r.is_zero(), None if r.is_zero() else print_expr(r))

    add("[B',C'] = 2Delta'", commutator(B, C) - D * 2)
    add("[C',A'] = 2Delta'", commutator(C, A) - D * 2)
    for cname, elem in rd.central_elements().items():
        add(f"{cname}' = 0", substitute(elem, imgs, t.alphabet))
    report.notes.append(f"Delta' = [A',B']/2 = {print_expr(t.normalize(D))}")
    return report


def compose(outer: Homomorphism, inner: Homomorphism, name: str | None = None) -> Homomorphism:
    """``outer o inner``: apply ``inner`` first."""
    if inner.target.alphabet != outer.source.alphabet:
        raise PresentationError(
            f"cannot compose {outer.name} after {inner.name}: "
            f"{inner.target.name} is not {outer.source.name}"
        )
    images = {g: outer.apply(inner.images[g]) for g in inner.source.free_generators}
    return Homomorphism(name or f"{outer.name}.{inner.name}", inner.source, outer.target, images)


def compose_path(path: Sequence[Homomorphism]) -> Homomorphism:
    """Compose a path listed in order of application."""
    if not path:
        raise ValueError("empty path")
    h = path[0]
    for nxt in path[1:]:
        h = compose(nxt, h)
    return h


def verify_mutually_inverse(h1: Homomorphism, h2: Homomorphism) -> Report:
    report = Report("inverse", f"{h1.name} / {h2.name}")
    for first, second in ((h1, h2), (h2, h1)):
        round_trip = compose(second, first)
        for g in first.source.free_generators:
            got = round_trip.images[g]
            diff = got - first.source.normalize(first.source.gen(g))
            report.add(
                f"{second.name}({first.name}({g})) = {g}",
                diff.is_zero(),
                None if diff.is_zero() else print_expr(diff),
                round_trip=print_expr(got),
            )
    return report


def verify_diagram(top: Sequence[Homomorphism], bottom: Sequence[Homomorphism],
                   subject: str | None = None) -> Report:
    """Both paths (in order of application) must agree on every source generator.

    A failing check's residual is ``bottom(g) - top(g)``.
    """
    t = compose_path(top)
    b = compose_path(bottom)
    if t.source.alphabet != b.source.alphabet or t.target.alphabet != b.target.alphabet:
        raise PresentationError("diagram paths do not share source and target")
    report = Report("diagram", subject or f"{t.name} vs {b.name}")
    for g in t.source.free_generators:
        diff = t.target.normalize(b.images[g] - t.images[g])
        report.add(
            f"{g}: {print_expr(t.images[g])}",
            diff.is_zero(),
            None if diff.is_zero() else print_expr(diff),
        )
    return report


def triangle_paths(target: str) -> tuple:
    """Both routes of the Racah / spin / skew-ring triangle, closed off in ``target``.

    ``acsa_z2``: the top route is pushed through the skew-ring isomorphism.
    ``sl2_z2``: the bottom route is pushed through the inverse isomorphism.
    ``sl2_z2_direct``: the bottom route uses the embedding of the spin algebra directly.
    """
    h = builtin_hom
    if target == "acsa_z2":
        return ([h("racah_to_sl2"), h("incl_sl2_in_sl2z2"), h("sl2_z2_to_acsa_z2")],
                [h("racah_to_acsa"), h("incl_acsa_in_acsaz2")])
    if target == "sl2_z2":
        return ([h("racah_to_sl2"), h("incl_sl2_in_sl2z2")],
                [h("racah_to_acsa"), h("incl_acsa_in_acsaz2"), h("acsa_z2_to_sl2_z2")])
    if target == "sl2_z2_direct":
        return ([h("racah_to_sl2"), h("incl_sl2_in_sl2z2")],
                [h("racah_to_acsa"), h("acsa_to_sl2z2")])
    raise UnknownNameError(f"unknown diagram orientation {target!r}")


DIAGRAM_ORIENTATIONS = ("acsa_z2", "sl2_z2", "sl2_z2_direct")
