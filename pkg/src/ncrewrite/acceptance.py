"""The full verification suite: one report per acceptance criterion.

``run_all`` is what ``ncrewrite verify-all`` executes and what
``tests/test_acceptance.py`` asserts on; there are no other hidden checks.
All randomness is drawn from fixed seeds, so reports are reproducible.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, List, Tuple

from .algebras import (
    apply_automorphism,
    apply_substitution_map,
    builtin,
    builtin_system,
    pair_of_normal_form,
    pair_to_element,
    pbw_count,
    pbw_count_by_base_degree,
    sabotage_file,
    sabotage_names,
    skew_pair_mul,
    SkewPair,
)
from .expr import format_word, print_expr
from .freealg import random_poly
from .homs import (
    builtin_hom,
    compose,
    compose_path,
    homs_from_file,
    triangle_paths,
    verify_diagram,
    verify_hom,
    verify_mutually_inverse,
    verify_racah_hom,
)
from .presentation import Presentation
from .repmat import Representation, eval_poly, induced_rep, verify_rep
from .reports import Report
from .rewrite import check_confluence, critical_pairs

CONFLUENT_BUILTINS = ("sl2", "so3", "acsa", "sl2_z2", "acsa_z2")
SINGLE_OVERLAP = {"sl2": "H*F*E", "so3": "I_3*I_2*I_1", "acsa": "J_3*J_2*J_1"}
REP_DIMS = range(0, 7)
PBW_MAX_DEGREE = 8


def _sub(report: Report, sub: Report, label: str | None = None) -> None:
    """Fold a sub-report into a criterion report as one check."""
    residual = None
    if not sub.passed:
        residual = "; ".join(f"{c.label}: {c.residual}" for c in sub.failures()) or "no checks ran"
    report.add(label or sub.summary(), sub.passed, residual, detail=sub.to_dict())


def brute_force_overlaps(system) -> set:
    """Words where two lhs occurrences overlap properly, found by scanning all short words."""
    lhs = {r.lhs for r in system.rules}
    longest = max(len(w) for w in lhs)
    found = set()
    for n in range(2, 2 * longest):
        for w in itertools.product(range(len(system.alphabet)), repeat=n):
            # a minimal overlap word is covered by a prefix lhs and a suffix lhs that overlap
            for a in lhs:
                for b in lhs:
                    if w[: len(a)] == a and w[n - len(b):] == b and len(a) + len(b) > n \
                            and len(a) < n and len(b) < n:
                        found.add(w)
    return found


def criterion_confluence() -> Report:
    rep = Report("acceptance", "1. confluence certificates")
    for name in CONFLUENT_BUILTINS:
        system = builtin_system(name)
        cr = check_confluence(system)
        _sub(rep, cr, f"{name}: {cr.verdict_text}")
        words = cr.overlap_words()
        if name in SINGLE_OVERLAP:
            ok = words == [SINGLE_OVERLAP[name]]
            rep.add(f"{name}: exactly one overlap {SINGLE_OVERLAP[name]}", ok,
                    None if ok else ", ".join(words))
        else:
            scanned = sorted(format_word(system.alphabet, w) for w in brute_force_overlaps(system))
            listed = sorted(format_word(system.alphabet, cp.word) for cp in critical_pairs(system)
                            if cp.kind == "overlap")
            ok = scanned == listed and len(set(words)) == len(words)
            rep.add(f"{name}: {len(words)} overlaps match exhaustive scan", ok,
                    None if ok else f"scan {scanned} vs listed {listed}")
    bad = homless_system("sl2_flipped_hf")
    cr = check_confluence(bad)
    failed = [c.label for c in cr.failures()]
    ok = (not cr.passed) and failed == ["H*F*E"]
    rep.add("sign-sabotaged sl2 fails at H*F*E", ok,
            None if ok else f"unresolved: {failed}")
    return rep


def homless_system(sabotage: str):
    return sabotage_file(sabotage).presentation.require_system()


def criterion_racah_sl2() -> Report:
    rep = Report("acceptance", "2. Racah algebra -> U(sl2)")
    _sub(rep, verify_racah_hom(builtin_hom("racah_to_sl2")))
    return rep


def criterion_racah_so3() -> Report:
    rep = Report("acceptance", "3. Racah algebra -> U(so3)")
    _sub(rep, verify_racah_hom(builtin_hom("racah_to_so3")))
    via = compose(builtin_hom("so3_to_sl2"), builtin_hom("racah_to_so3"))
    direct = builtin_hom("racah_to_sl2")
    for g in ("A", "B", "C"):
        diff = direct.target.normalize(via.images[g] - direct.image(g))
        rep.add(f"so3_to_sl2 o racah_to_so3 agrees with racah_to_sl2 on {g}", diff.is_zero(),
                None if diff.is_zero() else print_expr(diff))
    return rep


def criterion_acsa_embedding() -> Report:
    rep = Report("acceptance", "4. spin algebra -> U(sl2) skew ring")
    _sub(rep, verify_hom(builtin_hom("acsa_to_sl2z2")))
    return rep


def criterion_inverse_pair() -> Report:
    rep = Report("acceptance", "5. mutually inverse skew-ring isomorphisms")
    h1, h2 = builtin_hom("acsa_z2_to_sl2_z2"), builtin_hom("sl2_z2_to_acsa_z2")
    _sub(rep, verify_hom(h1))
    _sub(rep, verify_hom(h2))
    _sub(rep, verify_mutually_inverse(h1, h2))
    return rep


def criterion_racah_acsa() -> Report:
    rep = Report("acceptance", "6. Racah algebra -> spin algebra")
    _sub(rep, verify_racah_hom(builtin_hom("racah_to_acsa")))
    route = compose_path([builtin_hom("racah_to_sl2"), builtin_hom("incl_sl2_in_sl2z2"),
                          builtin_hom("sl2_z2_to_acsa_z2")])
    target = route.target
    for g, j in (("A", "J_1"), ("B", "J_2"), ("C", "J_3")):
        expected = target.normalize(target.parse(f"({j}^2 - 1)/4"))
        diff = route.images[g] - expected
        rep.add(f"composed route sends {g} to ({j}^2 - 1)/4", diff.is_zero(),
                None if diff.is_zero() else print_expr(diff))
    return rep


def criterion_diagram() -> Report:
    rep = Report("acceptance", "7. commutative triangle")
    for orientation in ("acsa_z2", "sl2_z2", "sl2_z2_direct"):
        top, bottom = triangle_paths(orientation)
        _sub(rep, verify_diagram(top, bottom, f"common target {orientation}"))
    return rep


def random_normal_form(p: Presentation, rng: random.Random, max_degree: int, n_terms: int = 3):
    return p.normalize(random_poly(p.alphabet, rng, max_degree, n_terms))


def skew_oracle(base: str, trials: int, seed: int, max_degree: int = 4,
                action: Callable | None = None) -> Report:
    """Rewriting in the Z/2Z presentation versus the twisted pair product."""
    bp = builtin(base)
    ext = builtin({"sl2": "sl2_z2", "acsa": "acsa_z2"}[base])
    rng = random.Random(seed)
    rep = Report("skew-oracle", f"{ext.name} ({trials} random products)")
    mismatches = []
    for t in range(trials):
        x = SkewPair(random_normal_form(bp, rng, max_degree), random_normal_form(bp, rng, max_degree))
        y = SkewPair(random_normal_form(bp, rng, max_degree), random_normal_form(bp, rng, max_degree))
        via_rewriting = pair_of_normal_form(
            ext.normalize(pair_to_element(x, base) * pair_to_element(y, base)), ext)
        via_pairs = skew_pair_mul(x, y, base, action)
        if via_rewriting != via_pairs:
            diff_even = via_rewriting.even - via_pairs.even
            diff_odd = via_rewriting.odd - via_pairs.odd
            mismatches.append(f"trial {t}: even {print_expr(diff_even)}, odd {print_expr(diff_odd)}")
    rep.add(f"{trials} pair products agree exactly", not mismatches,
            "; ".join(mismatches[:3]) if mismatches else None, mismatches=len(mismatches))
    return rep


def criterion_skew_oracle() -> Report:
    rep = Report("acceptance", "8. presentation vs skew-ring multiplication")
    _sub(rep, skew_oracle("sl2", 200, seed=8001))
    _sub(rep, skew_oracle("acsa", 200, seed=8002))
    return rep


def matrix_oracle(name: str, samples: int, seed: int, max_degree: int = 5) -> Report:
    """eval(p) == eval(normalize(p)) for random p, at every dimension in REP_DIMS."""
    p = builtin(name)
    reps = [induced_rep(name, n) for n in REP_DIMS]
    rng = random.Random(seed)
    report = Report("matrix-oracle", f"{name} ({samples} random elements, n = 0..{REP_DIMS[-1]})")
    bad = []
    for k in range(samples):
        poly = random_poly(p.alphabet, rng, max_degree, n_terms=4)
        nf = p.normalize(poly)
        for rep in reps:
            if eval_poly(poly, rep) != eval_poly(nf, rep):
                bad.append(f"sample {k} dim {rep.dim}: {print_expr(poly)}")
    report.add("evaluation commutes with normalisation", not bad, "; ".join(bad[:3]) if bad else None)
    return report


def criterion_matrix_oracle() -> Report:
    rep = Report("acceptance", "9. exact matrix oracle")
    for name in ("sl2", "sl2_z2", "acsa", "acsa_z2"):
        for n in REP_DIMS:
            _sub(rep, verify_rep(builtin_system(name), induced_rep(name, n), name))
    for n in REP_DIMS:
        _sub(rep, verify_rep(builtin("racah"), induced_rep("racah_images", n), "racah_images"))
    for k, name in enumerate(CONFLUENT_BUILTINS):
        _sub(rep, matrix_oracle(name, 100, seed=9000 + k))
    return rep


def pbw_report(system, expected: Callable[[int], int], max_degree: int,
               group_generator: str | None = None, subject: str = "") -> Report:
    report = Report("pbw", subject or system.name)
    for d in range(max_degree + 1):
        if group_generator is None:
            got = pbw_count(system, d)
        else:
            got = pbw_count_by_base_degree(system, d, group_generator)
        want = expected(d)
        report.add(f"degree {d}: {got} irreducible words", got == want,
                   None if got == want else f"expected {want}, counted {got}")
    return report


def criterion_pbw() -> Report:
    rep = Report("acceptance", "10. normal-word counts")
    tri = lambda d: (d + 1) * (d + 2) // 2  # noqa: E731
    for name in ("sl2", "so3", "acsa"):
        _sub(rep, pbw_report(builtin_system(name), tri, PBW_MAX_DEGREE))
    for name in ("sl2_z2", "acsa_z2"):
        p = builtin(name)
        _sub(rep, pbw_report(p.system, lambda d: 2 * tri(d), PBW_MAX_DEGREE, p.group_generator,
                             f"{name} by base degree"))
    return rep


def involution_report(name: str, apply: Callable, base: Presentation, samples: int, seed: int) -> Report:
    rng = random.Random(seed)
    report = Report("involution", f"{name} ({samples} random elements)")
    bad = []
    for k in range(samples):
        p = random_normal_form(base, rng, 4, n_terms=4)
        twice = apply(apply(p))
        if twice != p:
            bad.append(f"sample {k}: {print_expr(twice - p)}")
    report.add("applying twice is the identity", not bad, "; ".join(bad[:3]) if bad else None)
    return report


def criterion_involutions() -> Report:
    rep = Report("acceptance", "11. involutions square to the identity")
    for k, (name, base) in enumerate((("rho_sl2", "sl2"), ("varrho_acsa", "acsa"))):
        _sub(rep, involution_report(name, lambda p, n=name: apply_automorphism(n, p),
                                    builtin(base), 100, seed=1100 + k))
    return rep


# -- negative controls -------------------------------------------------------

def _expect_failure(rep: Report, label: str, sub: Report) -> None:
    caught = [c for c in sub.failures() if c.residual and c.residual != "0"]
    ok = (not sub.passed) and bool(caught)
    rep.add(label, ok, None if ok else "sabotage was not detected",
            detected=f"{caught[0].label}: {caught[0].residual}" if caught else None)


def swapped_ef_rep(n: int) -> Representation:
    good = induced_rep("sl2", n)
    mats = dict(good.assignment)
    mats["E"], mats["F"] = mats["F"], mats["E"]
    return Representation(good.alphabet, mats, good.dim)


def negative_controls() -> List[Tuple[str, Report]]:
    out = []
    out.append(("sl2 with [H,F] sign flipped is not confluent",
                check_confluence(homless_system("sl2_flipped_hf"))))
    tri = lambda d: (d + 1) * (d + 2) // 2  # noqa: E731
    out.append(("sl2 missing [H,E] rule breaks normal-word counts",
                pbw_report(homless_system("sl2_missing_rule"), tri, 4)))
    h = homs_from_file(sabotage_file("so3_to_sl2_flipped"))[0]
    out.append(("so3 -> sl2 with I_2 sign flipped", verify_hom(h)))
    h = homs_from_file(sabotage_file("acsa_to_sl2z2_flipped"))[0]
    out.append(("spin algebra embedding with J_2 sign flipped", verify_hom(h)))
    h = homs_from_file(sabotage_file("racah_to_sl2_perturbed"))[0]
    out.append(("Racah -> sl2 with perturbed image of B", verify_racah_hom(h)))
    h = homs_from_file(sabotage_file("racah_to_acsa_squared_c"))[0]
    out.append(("Racah -> spin algebra with C image (J_3-1)^2/4", verify_racah_hom(h)))
    top, bottom = triangle_paths("acsa_z2")
    out.append(("triangle with perturbed C image on the lower route",
                verify_diagram(top, [h, bottom[1]], "perturbed lower route")))
    h = homs_from_file(sabotage_file("sl2_z2_to_acsa_z2_wrong_h"))[0]
    out.append(("inverse pair with H -> J_2",
                verify_mutually_inverse(builtin_hom("acsa_z2_to_sl2_z2"), h)))
    pf = sabotage_file("rho_not_involution")  # automorphism-only fixture
    sl2 = builtin(pf.source)
    images = {g: sl2.parse(t) for g, t in pf.automorphisms["rho_twisted"].items()}
    out.append(("E -> iF, F -> iE, H -> -H squared",
                involution_report("rho_twisted", lambda p: apply_substitution_map(sl2, images, p),
                                  sl2, 20, seed=1201)))
    out.append(("skew product with trivial action",
                skew_oracle("sl2", 20, seed=1202, action=lambda p: p)))
    out.append(("sl2 relations on a rep with E and F swapped",
                verify_rep(builtin_system("sl2"), swapped_ef_rep(2), "sl2 (E,F swapped)")))
    return out


USED_FIXTURES = (
    "sl2_flipped_hf", "sl2_missing_rule", "so3_to_sl2_flipped", "acsa_to_sl2z2_flipped",
    "racah_to_sl2_perturbed", "racah_to_acsa_squared_c", "sl2_z2_to_acsa_z2_wrong_h",
    "rho_not_involution",
)


def criterion_negative_controls() -> Report:
    rep = Report("acceptance", "12. negative controls")
    shipped = set(sabotage_names())
    unused = sorted(shipped - set(USED_FIXTURES))
    rep.add(f"all {len(shipped)} shipped fixtures exercised", not unused,
            ", ".join(unused) if unused else None)
    for label, sub in negative_controls():
        _expect_failure(rep, label, sub)
    return rep


CRITERIA = (
    criterion_confluence,
    criterion_racah_sl2,
    criterion_racah_so3,
    criterion_acsa_embedding,
    criterion_inverse_pair,
    criterion_racah_acsa,
    criterion_diagram,
    criterion_skew_oracle,
    criterion_matrix_oracle,
    criterion_pbw,
    criterion_involutions,
    criterion_negative_controls,
)


def run_all() -> List[Report]:
    return [c() for c in CRITERIA]
