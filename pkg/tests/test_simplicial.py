import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanodegen.errors import EmptyInput, UnknownName
from fanodegen.groebner.hilbert import hilbert_data
from fanodegen.groebner.ideal import Ideal
from fanodegen.simplicial import (
    CATALOG_NAMES, boundary_of_simplex, catalog, catalog_cone, complex_from_squarefree,
    complexes_isomorphic, is_triangulated_two_sphere, join, make_complex, minimal_nonfaces,
    simplex, sr_ideal, valency_profile,
)

SIZES = {"T4": 4, "T5": 5, "T6": 6, "T7": 7, "T8": 8, "T8'": 8, "T9": 9, "T10": 10}


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_spheres(name):
    K = catalog(name)
    n = SIZES[name]
    assert len(K.vertices) == n
    assert len(K.facets) == 2 * n - 4
    assert is_triangulated_two_sphere(K)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_cone_ideal_has_fano_hilbert_data(name):
    n = SIZES[name]
    H = hilbert_data(sr_ideal(catalog_cone(name)))
    assert (H.dimension, H.degree) == (3, 2 * n - 4)


def test_t8_variants_differ():
    assert complexes_isomorphic(catalog("T8"), catalog("T8'")) is None
    assert sorted(valency_profile(catalog("T8"))) != sorted(valency_profile(catalog("T8'")))
    assert len(sr_ideal(catalog_cone("T8'")).generators) == 10


def test_bipyramid_ideal():
    I = sr_ideal(catalog("T5"))
    assert sorted(str(g) for g in I.generators) == ["x1*x2*x3", "y1*y2"]
    assert [str(g) for g in sr_ideal(catalog_cone("T4")).generators] == ["x1*x2*x3*x4"]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CATALOG_NAMES), st.randoms(use_true_random=False))
def test_isomorphism_under_relabeling(name, rnd):
    K = catalog(name)
    labels = list(K.vertices)
    image = [f"v{i}" for i in range(len(labels))]
    rnd.shuffle(image)
    L = K.relabel(dict(zip(labels, image)))
    bij = complexes_isomorphic(K, L)
    assert bij is not None
    assert {frozenset(bij[v] for v in f) for f in K.facets} == set(L.facets)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sets(st.integers(1, 7), min_size=1, max_size=4), min_size=1, max_size=6))
def test_sr_roundtrip(facets):
    K = make_complex([[f"x{i}" for i in f] for f in facets])
    I = sr_ideal(K)
    if not I.generators:
        return
    L = complex_from_squarefree(I)
    assert set(L.facets) == set(K.facets)


def test_join_adds_ideals():
    K = join(boundary_of_simplex(["a", "b", "c"]), boundary_of_simplex(["d", "e"]))
    assert sorted(str(g) for g in sr_ideal(K).generators) == ["a*b*c", "d*e"]
    assert minimal_nonfaces(simplex(["a", "b"])) == []


def test_errors():
    with pytest.raises(EmptyInput):
        make_complex([])
    with pytest.raises(UnknownName):
        catalog("T11")
