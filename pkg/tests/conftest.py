from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from cotwist import catalog as cat
from cotwist.field import GF, QQ
from cotwist.linmap import LinMap, Space
from cotwist.matrix import Mat

# first calls may trigger numba compilation
settings.register_profile("cotwist", deadline=None, max_examples=40)
settings.load_profile("cotwist")

FIELDS = [QQ, GF(5)]
FIELD_IDS = ["QQ", "F5"]


@pytest.fixture(params=FIELDS, ids=FIELD_IDS)
def fld(request):
    return request.param


def space(name, n, f):
    return Space(name, tuple(f"{name.lower()}{i}" for i in range(n)), f)


def scalars(f, lo=-3, hi=3):
    """Small integers, plus halves over QQ so denominators get exercised."""
    ints = st.integers(lo, hi)
    if f.is_prime:
        return ints
    return st.one_of(ints, st.builds(lambda a: Fraction(a, 2), ints))


@st.composite
def mats(draw, f, m, n):
    rows = [[draw(scalars(f)) for _ in range(n)] for _ in range(m)]
    return Mat.from_rows(f, rows, (m, n))


@st.composite
def linmaps(draw, dom, cod):
    return LinMap(dom, cod, draw(mats(dom.field, cod.dim, dom.dim)))


def random_map(rng, dom, cod, lo=-3, hi=3):
    """Deterministic random map from a numpy Generator."""
    rows = rng.integers(lo, hi + 1, size=(cod.dim, dom.dim)).tolist()
    return LinMap(dom, cod, Mat.from_rows(dom.field, rows, (cod.dim, dom.dim)))


def naive_product(a, b, f):
    """Triple loop over Python scalars."""
    ra, rb = a.rows(), b.rows()
    m, k, n = len(ra), len(rb), len(rb[0]) if rb else 0
    out = [[sum((ra[i][t] * rb[t][j] for t in range(k)), f.scalar(0)) for j in range(n)]
           for i in range(m)]
    return Mat.from_rows(f, out, (m, n))


@pytest.fixture(params=cat.HOPF_NAMES)
def hopf_name(request):
    return request.param


@pytest.fixture(params=cat.MODULE_COALGEBRA_NAMES)
def mc_name(request):
    return request.param


# ---------------------------------------------------------------- normalized maps


def _unit_point(mc):
    """s: k -> C with ε(s) = 1."""
    from cotwist.linmap import from_images, ground

    C = mc.space
    for j, b in enumerate(C.basis):
        e = mc.eps.mat.entry(0, j)
        if e != 0:
            return from_images(ground(C.field), C, {"1": {b: C.field.inverse(e)}})
    raise ValueError("counit vanishes")


def normalize_right(mc, r):
    """Project r: C -> H⊗C onto maps with (ε⊗1)τ = id and (1⊗ε)τ = ε1."""
    from cotwist.linmap import chain, identity, kronecker

    h, C = mc.hopf, mc.space
    unit_id = kronecker(h.unit, identity(C))
    t = r + chain(unit_id, identity(C) - chain(kronecker(h.eps, identity(C)), r))
    # ε_H of this correction vanishes once the first condition holds
    d = chain(h.unit, mc.eps) - chain(kronecker(identity(h.space), mc.eps), t)
    return (t + kronecker(d, _unit_point(mc))).with_legs(h.space, C)


def normalize_left(mc, r):
    """Project r: C -> C⊗H onto maps with (1⊗ε)λ = id and (ε⊗1)λ = ε1."""
    from cotwist.linmap import chain, identity, kronecker

    h, C = mc.hopf, mc.space
    id_unit = kronecker(identity(C), h.unit)
    t = r + chain(id_unit, identity(C) - chain(kronecker(identity(C), h.eps), r))
    d = chain(h.unit, mc.eps) - chain(kronecker(mc.eps, identity(h.space)), t)
    return (t + kronecker(_unit_point(mc), d)).with_legs(C, h.space)
