import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interlace.errors import (
    CertificateMismatchError,
    EmptyIntervalError,
    NegativeLeadingCoefficientError,
    ZeroPolynomialError,
)
from interlace.polys import ONE, X, ZERO, Poly
from interlace.realroots import (
    RootCertificate,
    RootInterval,
    SturmChain,
    count_real_roots,
    in_fplus,
    interleaves,
    is_interlacing_seq,
    is_real_rooted,
    isolate_roots,
    refine_certificate,
    squarefree_part,
)


def product_of_roots(roots) -> Poly:
    p = ONE
    for a in roots:
        p = p * Poly((-a, 1))
    return p


# -- squarefree part -----------------------------------------------------------


def test_squarefree_examples():
    assert squarefree_part(Poly((1, 2, 1))) == Poly((1, 1))
    assert squarefree_part(Poly((-1, 0, 1))) == Poly((-1, 0, 1))
    assert squarefree_part(Poly((0, 0, 0, 1))) == X
    assert squarefree_part(Poly((7,))) == ONE
    with pytest.raises(ZeroPolynomialError):
        squarefree_part(ZERO)


def test_sturm_chain_shape():
    chain = SturmChain.of_squarefree(Poly((-2, 0, 1))).chain
    assert chain[0] == Poly((-2, 0, 1))
    assert chain[-1].degree == 0


# -- root counting ---------------------------------------------------------------


def test_count_examples():
    assert count_real_roots(Poly((-2, 0, 1))) == 2
    assert count_real_roots(Poly((1, 0, 1))) == 0
    # roots of x^3 - 2x are -sqrt2, 0, sqrt2; (0, +inf] holds one of them
    assert count_real_roots(Poly((0, -2, 0, 1)), lo=0) == 1
    assert count_real_roots(Poly((0, -2, 0, 1)), lo=Fraction(-3, 2), hi=Fraction(1, 2)) == 2


def test_count_half_open_convention():
    # interval is (lo, hi]: a root sitting at lo is excluded, at hi included
    assert count_real_roots(X, lo=0, hi=1) == 0
    assert count_real_roots(X, lo=-1, hi=0) == 1


def test_count_errors():
    with pytest.raises(ZeroPolynomialError):
        count_real_roots(ZERO)
    with pytest.raises(EmptyIntervalError):
        count_real_roots(X, lo=1, hi=0)


def test_count_matches_distinct_integer_roots():
    rng = random.Random(20240)
    for _ in range(30):
        roots = [rng.randint(-8, 8) for _ in range(rng.randint(1, 5))]
        assert count_real_roots(product_of_roots(roots)) == len(set(roots))


# -- isolation -------------------------------------------------------------------


def test_isolate_two_simple_roots():
    cert = isolate_roots(Poly((-2, 0, 1)))
    assert len(cert) == 2
    assert all(iv.multiplicity == 1 for iv in cert.intervals)
    tight = refine_certificate(Poly((-2, 0, 1)), cert, Fraction(1, 10))
    lo_iv, hi_iv = tight.intervals
    assert Fraction(-2) < lo_iv.lo < lo_iv.hi < Fraction(-1)
    assert Fraction(1) < hi_iv.lo < hi_iv.hi < Fraction(2)


def test_isolate_exact_double_root():
    cert = isolate_roots(Poly((1, 2, 1)))
    assert len(cert) == 1
    iv = cert.intervals[0]
    assert iv.is_point and iv.lo == -1 and iv.multiplicity == 2


def test_isolate_no_real_roots():
    assert len(isolate_roots(Poly((1, 0, 1)))) == 0
    with pytest.raises(ZeroPolynomialError):
        isolate_roots(ZERO)


def test_isolate_mixed_multiplicities():
    # x^2 (x+1)^3 (x^2 - 3)
    f = Poly((0, 0, 1)) * Poly((1, 1)) * Poly((1, 1)) * Poly((1, 1)) * Poly((-3, 0, 1))
    cert = isolate_roots(f)
    mults = {}
    for iv in cert.intervals:
        key = iv.lo if iv.is_point else "irrational"
        mults.setdefault(key, []).append(iv.multiplicity)
    assert mults[Fraction(0)] == [2]
    assert mults[Fraction(-1)] == [3]
    assert mults["irrational"] == [1, 1]
    assert cert.total_multiplicity() == 7


def test_isolate_non_dyadic_rational_root():
    cert = isolate_roots(Poly((-1, 3)) * Poly((-1, 3)) * Poly((2, 7)))
    points = sorted(iv.lo for iv in cert.intervals if iv.is_point)
    assert points == [Fraction(-2, 7), Fraction(1, 3)]
    mult = {iv.lo: iv.multiplicity for iv in cert.intervals}
    assert mult[Fraction(1, 3)] == 2


def test_refine_width_and_degenerate():
    f = Poly((-2, 0, 1)) * Poly((1, 1))
    cert = isolate_roots(f)
    out = refine_certificate(f, cert, Fraction(1, 1000))
    for iv in out.intervals:
        if not iv.is_point:
            assert iv.hi - iv.lo < Fraction(1, 1000)
    again = refine_certificate(f, out, Fraction(10))
    assert again == out  # already narrower than the requested width


def test_refine_rejects_foreign_certificate():
    cert = isolate_roots(Poly((-2, 0, 1)))
    with pytest.raises(CertificateMismatchError):
        refine_certificate(X, cert, Fraction(1, 4))  # wrong number of roots
    bad = RootCertificate(
        (RootInterval(Fraction(5), Fraction(6), 1), RootInterval(Fraction(7), Fraction(8), 1))
    )
    with pytest.raises(CertificateMismatchError):
        refine_certificate(Poly((-2, 0, 1)), bad, Fraction(1, 4))
    wrong_mult = RootCertificate(
        tuple(RootInterval(iv.lo, iv.hi, 5) for iv in cert.intervals)
    )
    with pytest.raises(CertificateMismatchError):
        refine_certificate(Poly((-2, 0, 1)), wrong_mult, Fraction(1, 4))


def test_certificate_json():
    cert = isolate_roots(Poly((1, 2, 1)))
    assert cert.to_json_obj() == [{"lo": "-1/1", "hi": "-1/1", "mult": 2}]


# -- real-rootedness ---------------------------------------------------------------


def test_is_real_rooted_examples():
    assert not is_real_rooted(Poly((1, 0, 1)))
    assert is_real_rooted(Poly((0, 1, 1)))
    assert is_real_rooted(ZERO)
    assert is_real_rooted(Poly((5,)))
    assert is_real_rooted(Poly((1, 2, 1)))


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=3),
    st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=3),
)
def test_real_rooted_multiplicative(roots_a, roots_b):
    a, b = product_of_roots(roots_a), product_of_roots(roots_b)
    assert is_real_rooted(a * b) == (is_real_rooted(a) and is_real_rooted(b))


def test_real_rooted_product_with_complex_factor():
    assert not is_real_rooted(Poly((1, 0, 1)) * Poly((1, 1)))


# -- interleaving -------------------------------------------------------------------


def test_interleaves_examples():
    assert interleaves(X, Poly((-1, 0, 1)))
    assert not interleaves(Poly((-1, 0, 1)), X)
    assert interleaves(Poly((1, 1)), X)
    assert interleaves(Poly((0, 1, 1)), ZERO)
    assert interleaves(ZERO, Poly((0, 1, 1)))
    assert interleaves(ZERO, ZERO)


def test_interleaves_zero_partner_requires_real_rooted():
    assert not interleaves(Poly((1, 0, 1)), ZERO)
    assert not interleaves(ZERO, Poly((1, 0, 1)))


def test_interleaves_negative_leading_coefficient():
    with pytest.raises(NegativeLeadingCoefficientError):
        interleaves(Poly((0, -1)), X)
    with pytest.raises(NegativeLeadingCoefficientError):
        interleaves(X, Poly((1, 0, -1)))


def test_interleaves_constants():
    assert interleaves(ONE, Poly((5,)))
    assert interleaves(ONE, X)
    assert interleaves(ONE, Poly((3, 2)))
    assert not interleaves(ONE, Poly((-1, 0, 1)))  # degree gap too large
    assert not interleaves(X, Poly((3,)))


def test_interleaves_multiplicity_awareness():
    assert interleaves(Poly((0, 0, 1)), Poly((0, 0, 1)))
    assert interleaves(X, Poly((0, 0, 1)))
    assert interleaves(Poly((1, 1)), Poly((1, 2, 1)))
    assert not interleaves(Poly((2, 1)), Poly((1, 2, 1)))


def test_interleaves_shared_irrational_roots():
    assert interleaves(Poly((-2, 0, 1)), Poly((0, -2, 0, 1)))
    assert interleaves(Poly((-2, 0, 1)), Poly((-4, 0, 2)))
    assert interleaves(Poly((0, -2, 0, 1)), Poly((4, 0, -4, 0, 1)))


def test_interleaves_scaling_invariance():
    pairs = [
        (X, Poly((-1, 0, 1))),
        (Poly((1, 1)), X),
        (Poly((0, 1, 1)), Poly((0, 1))),
        (Poly((-1, 0, 1)), X),
    ]
    for f, g in pairs:
        base = interleaves(f, g)
        for s in (2, 3, 10):
            assert interleaves(s * f, g) == base
            assert interleaves(f, s * g) == base


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_interleaves_constructed_between_roots(data):
    # f with simple integer roots, g with roots strictly between consecutive
    # roots of f plus one root above: always f << g
    k = data.draw(st.integers(min_value=1, max_value=3))
    roots_f = sorted(
        data.draw(
            st.lists(
                st.integers(min_value=-10, max_value=10),
                min_size=k,
                max_size=k,
                unique=True,
            ).filter(lambda rs: all(b - a >= 2 for a, b in zip(sorted(rs), sorted(rs)[1:])))
        )
    )
    roots_g = [data.draw(st.integers(min_value=a + 1, max_value=b - 1))
               for a, b in zip(roots_f, roots_f[1:])]
    roots_g.append(roots_f[-1] + data.draw(st.integers(min_value=1, max_value=4)))
    assert interleaves(product_of_roots(roots_f), product_of_roots(roots_g))


def test_is_interlacing_seq():
    assert is_interlacing_seq([])
    assert is_interlacing_seq([Poly((1, 0, 1))])  # vacuous even if not real-rooted
    assert is_interlacing_seq([X, Poly((-1, 0, 1))])
    assert is_interlacing_seq([Poly((0, 2)), X, Poly((0, 0, 1))])
    assert not is_interlacing_seq([Poly((-1, 0, 1)), X])


def test_in_fplus():
    assert in_fplus([Poly((1, 1)), X])
    assert not in_fplus([X, Poly((1, 1))])
    assert not in_fplus([Poly((-1, 0, 1)), X])  # negative coefficient short-circuits
    assert in_fplus([])
