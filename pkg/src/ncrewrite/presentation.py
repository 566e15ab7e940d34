"""Presentations and the YAML presentation file format.

A presentation file looks like::

    name: sl2
    generators: [E, F, H]          # list order = precedence
    relations:
      - {label: "[H,E] = 2E", expr: "H*E - E*H - 2*E"}   # expr = 0
    automorphisms:                 # optional, generator -> image
      rho_sl2: {E: "F", F: "E", H: "-H"}
    homomorphisms:                 # optional, images over the target's generators
      - {name: incl, target: sl2_z2, images: {E: "E", F: "F", H: "H"}}

Further optional keys: ``title``, ``display`` (pretty names), ``orient``
(false to ship relations without a rewriting system), ``derived`` (a
generator defined by an expression in the others), ``central`` (named
elements declared central; one commutator relation per generator is
added), ``base``/``group_generator``/``action`` (Z/2Z skew extensions)
and ``verifiable`` (false for sample inputs that carry no claims).

A file may instead carry ``source: <builtin name>`` and only
homomorphism or automorphism blocks for an existing presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import yaml

from .expr import ParseError, parse_expr
from .freealg import Alphabet, NCPoly, commutator
from .rewrite import OrientationError, RewriteSystem, orient


class PresentationError(ValueError):
    pass


@dataclass(eq=False)
class Presentation:
    name: str
    alphabet: Alphabet
    relations: List[Tuple[str, NCPoly]]
    system: Optional[RewriteSystem] = None
    title: str = ""
    derived: Dict[str, NCPoly] = field(default_factory=dict)
    central: Dict[str, NCPoly] = field(default_factory=dict)
    base: Optional[str] = None
    group_generator: Optional[str] = None
    action: Optional[str] = None
    automorphisms: Dict[str, Dict[str, NCPoly]] = field(default_factory=dict)
    verifiable: bool = True
    consequences: Tuple[str, ...] = ()

    def __repr__(self):
        return f"Presentation({self.name!r}, {list(self.alphabet.names)})"

    @property
    def generators(self) -> Tuple[str, ...]:
        return self.alphabet.names

    @property
    def free_generators(self) -> Tuple[str, ...]:
        """Generators that need an explicit image under a homomorphism."""
        return tuple(g for g in self.alphabet.names if g not in self.derived)

    def parse(self, text: str) -> NCPoly:
        return parse_expr(text, self.alphabet)

    def gen(self, name: str) -> NCPoly:
        return NCPoly.gen(self.alphabet, name)

    def require_system(self) -> RewriteSystem:
        if self.system is None:
            raise PresentationError(f"{self.name} has no rewriting system")
        return self.system

    def normalize(self, p: NCPoly) -> NCPoly:
        return self.require_system().normalize(p)

    def relation_polys(self) -> List[NCPoly]:
        return [r for _, r in self.relations]


@dataclass
class HomSpec:
    name: str
    source: str
    target: str
    images: Dict[str, str]


@dataclass
class PresentationFile:
    path: Optional[str]
    presentation: Optional[Presentation]
    source: Optional[str]
    homomorphisms: List[HomSpec]
    automorphisms: Dict[str, Dict[str, str]]

    @property
    def source_name(self) -> str:
        return self.presentation.name if self.presentation else self.source


def _require(doc: dict, key: str, where: str):
    if key not in doc:
        raise PresentationError(f"{where}: missing required field {key!r}")
    return doc[key]


def _parse_in(text: str, alphabet: Alphabet, where: str) -> NCPoly:
    try:
        return parse_expr(str(text), alphabet)
    except ParseError as exc:
        raise PresentationError(f"{where}: {exc}") from None


def build_presentation(doc: dict, where: str = "<presentation>") -> Tuple[Presentation, Dict[str, Dict[str, str]]]:
    name = str(_require(doc, "name", where))
    gens = _require(doc, "generators", where)
    if not isinstance(gens, list) or not gens:
        raise PresentationError(f"{where}: generators must be a nonempty list")
    try:
        alphabet = Alphabet([str(g) for g in gens], doc.get("display"))
    except ValueError as exc:
        raise PresentationError(f"{where}: {exc}") from None

    relations: List[Tuple[str, NCPoly]] = []
    consequences = []
    for k, entry in enumerate(doc.get("relations") or []):
        if isinstance(entry, str):
            entry = {"expr": entry}
        expr = _require(entry, "expr", f"{where}: relation {k + 1}")
        label = str(entry.get("label") or expr)
        relations.append((label, _parse_in(expr, alphabet, f"{where}: relation {label!r}")))
        if entry.get("consequence"):
            consequences.append(label)

    derived = {
        str(g): _parse_in(t, alphabet, f"{where}: derived generator {g!r}")
        for g, t in (doc.get("derived") or {}).items()
    }
    for g in derived:
        if g not in alphabet:
            raise PresentationError(f"{where}: derived generator {g!r} is not a generator")

    central = {
        str(c): _parse_in(t, alphabet, f"{where}: central element {c!r}")
        for c, t in (doc.get("central") or {}).items()
    }
    for c, elem in central.items():
        for g in alphabet.names:
            relations.append((f"[{c},{g}] = 0", commutator(elem, NCPoly.gen(alphabet, g))))

    system = None
    if doc.get("orient", True):
        try:
            system = orient([r for _, r in relations], alphabet, [lab for lab, _ in relations],
                            name=name)
        except OrientationError as exc:
            raise PresentationError(f"{where}: {exc}") from None

    pres = Presentation(
        name=name,
        alphabet=alphabet,
        relations=relations,
        system=system,
        title=str(doc.get("title", name)),
        derived=derived,
        central=central,
        base=doc.get("base"),
        group_generator=doc.get("group_generator"),
        action=doc.get("action"),
        verifiable=bool(doc.get("verifiable", True)),
        consequences=tuple(consequences),
    )
    if pres.group_generator is not None and pres.group_generator not in alphabet:
        raise PresentationError(f"{where}: group generator {pres.group_generator!r} is not a generator")
    raw_auts = {str(k): {str(g): str(t) for g, t in v.items()}
                for k, v in (doc.get("automorphisms") or {}).items()}
    for aname, table in raw_auts.items():
        pres.automorphisms[aname] = {
            g: _parse_in(t, alphabet, f"{where}: automorphism {aname!r} image of {g!r}")
            for g, t in table.items()
        }
    return pres, raw_auts


def parse_presentation_document(doc: dict, where: str = "<presentation>", path: str | None = None) -> PresentationFile:
    if not isinstance(doc, dict):
        raise PresentationError(f"{where}: expected a mapping at top level")
    pres = None
    source = doc.get("source")
    raw_auts: Dict[str, Dict[str, str]] = {}
    if "generators" in doc:
        pres, raw_auts = build_presentation(doc, where)
    elif source is None:
        raise PresentationError(f"{where}: needs either generators or a source presentation")
    else:
        raw_auts = {str(k): {str(g): str(t) for g, t in v.items()}
                    for k, v in (doc.get("automorphisms") or {}).items()}
    src_name = pres.name if pres else str(source)
    homs = []
    for k, block in enumerate(doc.get("homomorphisms") or []):
        bwhere = f"{where}: homomorphism {k + 1}"
        images = _require(block, "images", bwhere)
        homs.append(HomSpec(
            name=str(block.get("name", f"{src_name}_hom{k + 1}")),
            source=src_name,
            target=str(_require(block, "target", bwhere)),
            images={str(g): str(t) for g, t in images.items()},
        ))
    return PresentationFile(path, pres, None if pres else str(source), homs, raw_auts)


def load_presentation_file(path) -> PresentationFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise PresentationError(f"cannot read {path}: {exc}") from None
    return loads_presentation(text, str(path))


def loads_presentation(text: str, where: str = "<string>") -> PresentationFile:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise PresentationError(f"{where}: invalid YAML: {exc}") from None
    return parse_presentation_document(doc, where, where)
