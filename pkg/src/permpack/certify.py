"""Packing certificates and their verifier.

A certificate declares sphere centers of one kind (one_sphere,
double_sphere, s_sphere); the verifier checks pairwise disjointness of
the declared spheres by direct set intersection, measures the covered
fraction alpha = covered / n! as an exact rational, and profiles the
centers per component.  No floating point is used anywhere.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import cayley
from .cayley import TranspositionTree, closed_sphere, component_of, component_type, neighbors
from .perms import Perm, perm_from_str, perm_to_str


@dataclass
class PackingCertificate:
    n: int
    kind: str  # one_sphere | double_sphere | s_sphere
    centers: list  # Perms; for double_sphere, pairs (Perm, Perm)
    r: int | None = None
    t: int | None = None
    numbering: str | None = None
    declared_alpha: Fraction | None = None
    base_subgraph: list[frozenset[int]] | None = None


@dataclass
class VerificationReport:
    valid: bool
    covered_count: int
    alpha: Fraction
    is_eset: bool
    per_component_profile: dict
    violations: list[str] = field(default_factory=list)


class CertificateError(ValueError):
    """Malformed certificate."""


def _flat_centers(cert: PackingCertificate) -> list[Perm]:
    if cert.kind == "double_sphere":
        return [p for pair in cert.centers for p in pair]
    return list(cert.centers)


def _check_wellformed(tree: TranspositionTree, cert: PackingCertificate) -> None:
    if cert.kind not in ("one_sphere", "double_sphere", "s_sphere"):
        raise CertificateError(f"unknown sphere kind {cert.kind!r}")
    if cert.n != tree.n:
        raise CertificateError(f"certificate degree {cert.n} != tree degree {tree.n}")
    flat = _flat_centers(cert)
    for p in flat:
        if len(p) != cert.n or sorted(p) != list(range(1, cert.n + 1)):
            raise CertificateError(f"center {p} is not a permutation of 1..{cert.n}")
    if len(set(flat)) != len(flat):
        raise CertificateError("centers are not distinct")
    if cert.kind == "double_sphere":
        for x, y in cert.centers:
            if y not in dict(neighbors(tree, x)).values():
                raise CertificateError(
                    f"double-sphere centers {perm_to_str(x)}, {perm_to_str(y)} are not adjacent")
    if cert.kind == "s_sphere":
        if cert.base_subgraph is None:
            raise CertificateError("s_sphere certificate needs a base_subgraph")
        base = set(frozenset(c) for c in cert.base_subgraph)
        for p in cert.centers:
            if component_of(tree, p) not in base:
                raise CertificateError(
                    f"center {perm_to_str(p)} lies outside the base subgraph")


def sphere_sets(tree: TranspositionTree, cert: PackingCertificate) -> list[frozenset[Perm]]:
    """The vertex set of each declared sphere, in certificate order."""
    if cert.kind == "one_sphere":
        return [closed_sphere(tree, p) for p in cert.centers]
    if cert.kind == "double_sphere":
        return [closed_sphere(tree, x) | closed_sphere(tree, y) for x, y in cert.centers]
    # s_sphere: closed sphere inside the base subgraph plus its outside neighbors
    base = set(frozenset(c) for c in cert.base_subgraph)
    out = []
    for p in cert.centers:
        inner = {q for q in closed_sphere(tree, p) if component_of(tree, q) in base}
        outer = set()
        for q in inner:
            for _, w in neighbors(tree, q):
                if component_of(tree, w) not in base:
                    outer.add(w)
        out.append(frozenset(inner | outer))
    return out


def _disjoint_union(spheres, labels) -> tuple[set, list[str]]:
    covered: set = set()
    violations = []
    for label, sph in zip(labels, spheres):
        clash = covered & sph
        if clash:
            some = perm_to_str(next(iter(clash)))
            violations.append(f"sphere of {label} overlaps an earlier sphere at {some}")
        covered |= sph
    return covered, violations


def verify_packing(tree: TranspositionTree, cert: PackingCertificate) -> VerificationReport:
    _check_wellformed(tree, cert)
    spheres = sphere_sets(tree, cert)
    if cert.kind == "double_sphere":
        labels = [f"{perm_to_str(x)}+{perm_to_str(y)}" for x, y in cert.centers]
    else:
        labels = [perm_to_str(p) for p in cert.centers]
    covered, violations = _disjoint_union(spheres, labels)
    n_fact = math.factorial(cert.n)
    alpha = Fraction(len(covered), n_fact)
    if cert.declared_alpha is not None and alpha != cert.declared_alpha:
        violations.append(f"declared alpha {cert.declared_alpha} != measured {alpha}")
    profile = _profile(tree, cert, covered_centers_only=True)
    return VerificationReport(
        valid=not violations,
        covered_count=len(covered),
        alpha=alpha,
        is_eset=(not violations) and cert.kind == "one_sphere" and len(covered) == n_fact,
        per_component_profile=profile,
        violations=violations,
    )


def verify_eset(tree: TranspositionTree, cert: PackingCertificate) -> VerificationReport:
    if cert.kind != "one_sphere":
        raise CertificateError("E-set verification applies to one_sphere certificates")
    return verify_packing(tree, cert)


def verify_on_subgraph(tree: TranspositionTree, cert: PackingCertificate,
                       components) -> VerificationReport:
    """Spheres measured inside the subgraph induced by the listed components."""
    if cert.kind != "one_sphere":
        raise CertificateError("subgraph verification applies to one_sphere certificates")
    _check_wellformed(tree, cert)
    comps = set(frozenset(c) for c in components)
    violations = []
    spheres = []
    for p in cert.centers:
        if component_of(tree, p) not in comps:
            violations.append(f"center {perm_to_str(p)} lies outside the listed components")
            continue
        spheres.append(frozenset(
            q for q in closed_sphere(tree, p) if component_of(tree, q) in comps))
    covered, overlap = _disjoint_union(spheres, [perm_to_str(p) for p in cert.centers])
    violations.extend(overlap)
    size = len(comps) * math.factorial(tree.r) * math.factorial(tree.t)
    alpha = Fraction(len(covered), math.factorial(cert.n))
    profile = _profile(tree, cert, covered_centers_only=True)
    return VerificationReport(
        valid=not violations,
        covered_count=len(covered),
        alpha=alpha,
        is_eset=(not violations) and len(covered) == size,
        per_component_profile=profile,
        violations=violations,
    )


def _profile(tree: TranspositionTree, cert: PackingCertificate,
             covered_centers_only: bool = True) -> dict:
    if tree.r is None:
        return {}
    prof: dict = {}
    for p in _flat_centers(cert):
        key = tuple(sorted(component_of(tree, p)))
        prof[key] = prof.get(key, 0) + 1
    return prof


def uniformity_check(tree: TranspositionTree, cert: PackingCertificate) -> tuple[bool, str | None]:
    """Is the packing equivalent in all components?

    Equivalence of components c1, c2: some color-preserving translation
    g -> x o g that maps c1 onto c2 (x restricted to a bijection c1 -> c2
    on the left values and complement -> complement on the right) carries
    the centers in c1 exactly onto the centers in c2.
    """
    if cert.kind != "one_sphere":
        raise CertificateError("uniformity applies to one_sphere certificates")
    _check_wellformed(tree, cert)
    if not cert.centers:
        return True, None
    by_comp: dict[frozenset[int], set[Perm]] = {c: set() for c in cayley.all_components(tree)}
    for p in cert.centers:
        by_comp[component_of(tree, p)].add(p)
    comps = sorted(by_comp, key=lambda c: tuple(sorted(c)))
    base = comps[0]
    universe = set(range(1, tree.n + 1))
    for c in comps[1:]:
        if not _equivalent(tree, by_comp[base], base, by_comp[c], c, universe):
            return False, (f"components {tuple(sorted(base))} and {tuple(sorted(c))} "
                           f"carry inequivalent center sets")
    return True, None


def _equivalent(tree, centers1, c1, centers2, c2, universe) -> bool:
    if len(centers1) != len(centers2):
        return False
    if not centers1:
        return True
    left1, left2 = sorted(c1), sorted(c2)
    right1, right2 = sorted(universe - c1), sorted(universe - c2)
    for lperm in permutations(left2):
        for rperm in permutations(right2):
            word = [0] * tree.n
            for a, b in zip(left1, lperm):
                word[a - 1] = b
            for a, b in zip(right1, rperm):
                word[a - 1] = b
            x = tuple(word)
            if {cayley.translate(x, g) for g in centers1} == centers2:
                return True
    return False


def profile_by_type(tree: TranspositionTree, cert: PackingCertificate) -> dict[int, Fraction]:
    """Covered vertices per component type, divided by (r!)^2; exact rationals."""
    if tree.r != tree.t:
        raise ValueError("type profile is defined only for r = t")
    covered: set[Perm] = set()
    for sph in sphere_sets(tree, cert):
        covered |= sph
    per_type: dict[int, int] = {k: 0 for k in range(tree.r // 2 + 1)}
    for q in covered:
        per_type[component_type(tree, component_of(tree, q))] += 1
    denom = math.factorial(tree.r) ** 2
    return {k: Fraction(v, denom) for k, v in per_type.items()}


# ---------------------------------------------------------------------------
# JSON interchange


def cert_to_dict(cert: PackingCertificate) -> dict:
    out = {"n": cert.n, "r": cert.r, "t": cert.t, "numbering": cert.numbering,
           "kind": cert.kind}
    if cert.kind == "double_sphere":
        out["centers"] = [[perm_to_str(x), perm_to_str(y)] for x, y in cert.centers]
    else:
        out["centers"] = [perm_to_str(p) for p in cert.centers]
    if cert.declared_alpha is not None:
        out["declared_alpha"] = f"{cert.declared_alpha.numerator}/{cert.declared_alpha.denominator}"
    if cert.base_subgraph is not None:
        out["base_subgraph"] = [sorted(c) for c in cert.base_subgraph]
    return out


def cert_from_dict(data: dict) -> PackingCertificate:
    try:
        kind = data["kind"]
        if kind == "double_sphere":
            centers = [(perm_from_str(a), perm_from_str(b)) for a, b in data["centers"]]
        else:
            centers = [perm_from_str(s) for s in data["centers"]]
        alpha = data.get("declared_alpha")
        if alpha is not None:
            alpha = Fraction(alpha)
        base = data.get("base_subgraph")
        if base is not None:
            base = [frozenset(c) for c in base]
        return PackingCertificate(
            n=data["n"], kind=kind, centers=centers, r=data.get("r"),
            t=data.get("t"), numbering=data.get("numbering"),
            declared_alpha=alpha, base_subgraph=base)
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from exc


def save_cert(cert: PackingCertificate, path) -> None:
    with open(path, "w") as fh:
        json.dump(cert_to_dict(cert), fh, indent=1)
        fh.write("\n")


def load_cert(path) -> PackingCertificate:
    with open(path) as fh:
        return cert_from_dict(json.load(fh))


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "valid": report.valid,
        "covered_count": report.covered_count,
        "alpha": f"{report.alpha.numerator}/{report.alpha.denominator}",
        "is_eset": report.is_eset,
        "per_component_profile": {"".join(map(str, k)) if isinstance(k, tuple) else str(k): v
                                  for k, v in sorted(report.per_component_profile.items())},
        "violations": report.violations,
    }
