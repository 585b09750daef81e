"""Certificate verifier: well-formedness, disjointness, alpha, uniformity,
JSON round-trips."""

import random
from fractions import Fraction

import pytest

from conftest import load_fixture
from permpack.cayley import (RENUMBERED, build_tree, closed_sphere,
                             neighbors, translate)
from permpack.certify import (CertificateError, PackingCertificate,
                              cert_from_dict, cert_to_dict, profile_by_type,
                              sphere_sets, uniformity_check, verify_eset,
                              verify_on_subgraph, verify_packing)
from permpack.constructions import xprime_components, xprime_perfect_code
from permpack.perms import all_perms, perm_from_str


def _cert(tree, centers, **kw):
    return PackingCertificate(n=tree.n, kind="one_sphere", centers=list(centers),
                              r=tree.r, t=tree.t, numbering=tree.numbering, **kw)


def test_single_sphere_alpha():
    tree = build_tree(2, 2)
    rep = verify_packing(tree, _cert(tree, [(1, 2, 3, 4)]))
    assert rep.valid and rep.covered_count == 4
    assert rep.alpha == Fraction(1, 6)
    assert not rep.is_eset


def test_overlap_detected():
    tree = build_tree(2, 2)
    rep = verify_packing(tree, _cert(tree, [(1, 2, 3, 4), (2, 1, 3, 4)]))
    assert not rep.valid
    assert any("overlaps" in v for v in rep.violations)


def test_declared_alpha_mismatch():
    tree = build_tree(2, 2)
    rep = verify_packing(tree, _cert(tree, [(1, 2, 3, 4)],
                                    declared_alpha=Fraction(1, 2)))
    assert not rep.valid
    assert any("declared" in v for v in rep.violations)


def test_malformed_certificates_rejected():
    tree = build_tree(2, 2)
    with pytest.raises(CertificateError):
        verify_packing(tree, _cert(tree, [(1, 2, 3)]))
    with pytest.raises(CertificateError):
        verify_packing(tree, _cert(tree, [(1, 2, 3, 4), (1, 2, 3, 4)]))
    with pytest.raises(CertificateError):
        verify_packing(tree, PackingCertificate(n=5, kind="one_sphere",
                                                centers=[(1, 2, 3, 4, 5)]))
    with pytest.raises(CertificateError):
        verify_packing(tree, _cert(tree, [(1, 2, 3, 4)]).__class__(
            n=4, kind="weird", centers=[(1, 2, 3, 4)]))


def test_double_sphere_requires_adjacent_centers():
    tree = build_tree(2, 2)
    good = PackingCertificate(n=4, kind="double_sphere",
                              centers=[((1, 2, 3, 4), (2, 1, 3, 4))])
    rep = verify_packing(tree, good)
    assert rep.valid and rep.covered_count == 6
    bad = PackingCertificate(n=4, kind="double_sphere",
                             centers=[((1, 2, 3, 4), (2, 1, 4, 3))])
    with pytest.raises(CertificateError):
        verify_packing(tree, bad)


def test_s_sphere_enlarges_across_the_hub_matching():
    tree = build_tree(3, 3, RENUMBERED)
    code = xprime_perfect_code(3)
    cert = PackingCertificate(n=6, kind="s_sphere", centers=list(code.centers),
                              r=3, t=3, numbering=RENUMBERED,
                              base_subgraph=xprime_components(3))
    rep = verify_packing(tree, cert)
    assert rep.valid
    # every sphere gains its outside neighbors: covered grows past 288
    assert rep.covered_count == 288 + 192


def test_verify_eset_requires_one_sphere():
    tree = build_tree(2, 2)
    cert = PackingCertificate(n=4, kind="double_sphere",
                              centers=[((1, 2, 3, 4), (2, 1, 3, 4))])
    with pytest.raises(CertificateError):
        verify_eset(tree, cert)


def test_verify_on_subgraph_counts_against_component_sizes():
    tree = build_tree(3, 3, RENUMBERED)
    code = xprime_perfect_code(3)
    rep = verify_on_subgraph(tree, code, code.base_subgraph)
    assert rep.valid and rep.is_eset and rep.covered_count == 288


def test_uniformity_accepts_fixture_and_rejects_lopsided():
    tree = build_tree(3, 2)
    cert = cert_from_dict(load_fixture("x32_uniform_5_6.json"))
    ok, why = uniformity_check(tree, cert)
    assert ok and why is None
    # drop two centers from one component: no translation can match
    dropped = [c for c in cert.centers if c[:3] != cert.centers[0][:3]]
    lopsided = _cert(tree, dropped)
    ok, why = uniformity_check(tree, lopsided)
    assert not ok and "inequivalent" in why


def test_translation_invariance_randomized():
    rng = random.Random(5)
    tree = build_tree(3, 2)
    cert = cert_from_dict(load_fixture("x32_uniform_5_6.json"))
    base = verify_packing(tree, cert)
    perms = list(all_perms(5))
    for _ in range(5):
        x = perms[rng.randrange(len(perms))]
        moved = _cert(tree, sorted(translate(x, g) for g in cert.centers))
        rep = verify_packing(tree, moved)
        assert rep.valid == base.valid
        assert rep.alpha == base.alpha
        assert rep.covered_count == base.covered_count


def test_profile_by_type():
    tree = build_tree(3, 3, RENUMBERED)
    code = xprime_perfect_code(3)
    prof = profile_by_type(tree, code)
    # the type-0 code covers its 8 components fully and nothing else
    assert prof[0] == Fraction(8)
    assert prof[1] == 0


def test_sphere_sets_sizes():
    tree = build_tree(2, 2)
    cert = _cert(tree, [(1, 2, 3, 4)])
    (sph,) = sphere_sets(tree, cert)
    assert sph == closed_sphere(tree, (1, 2, 3, 4))


def test_cert_json_roundtrip(tmp_path):
    tree = build_tree(3, 2)
    cert = cert_from_dict(load_fixture("x32_uniform_5_6.json"))
    data = cert_to_dict(cert)
    again = cert_from_dict(data)
    assert again == cert
    assert data["centers"] == sorted(data["centers"])
    with pytest.raises(CertificateError):
        cert_from_dict({"n": 4, "kind": "one_sphere"})


def test_fixture_centers_parse():
    data = load_fixture("x22_eset_5_6.json")
    assert len(data["centers"]) == 5
    assert all(len(perm_from_str(s)) == 4 for s in data["centers"])
