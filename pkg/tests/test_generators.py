import pytest

from quadkit import GeneratorSpec, KINDS, generate_quads, jacobi_residual
from quadkit.generators import certificate_holds, generate_raw


def spec(kind, count=50, seed=0, coordinate_range=10**6):
    return GeneratorSpec(
        kind=kind, count=count, seed=seed, coordinate_range=coordinate_range
    )


class TestDeterminism:
    @pytest.mark.parametrize("kind", KINDS)
    def test_same_seed_same_stream(self, kind):
        first = list(generate_raw(spec(kind, seed=123)))
        second = list(generate_raw(spec(kind, seed=123)))
        assert first == second

    def test_different_seeds_differ(self):
        a = list(generate_raw(spec("random", seed=1)))
        b = list(generate_raw(spec("random", seed=2)))
        assert a != b


class TestCertificates:
    @pytest.mark.parametrize("kind", KINDS)
    def test_kind_certificate_holds(self, kind):
        for quad in generate_raw(spec(kind, count=200, seed=5)):
            assert certificate_holds(kind, quad)

    @pytest.mark.parametrize("kind", KINDS)
    def test_small_range(self, kind):
        for quad in generate_raw(spec(kind, count=50, seed=9, coordinate_range=8)):
            assert certificate_holds(kind, quad)

    def test_collinear_areas_all_zero(self):
        for q in generate_quads(spec("collinear", count=50, seed=7)):
            assert jacobi_residual(q).dx == 0  # degenerate but still exact

    def test_coincident_has_duplicate(self):
        for quad in generate_raw(spec("coincident", count=100, seed=3)):
            assert len(set(quad)) < 4

    def test_convex_and_crossed_are_disjoint(self):
        for quad in generate_raw(spec("convex", count=100, seed=1)):
            assert not certificate_holds("crossed", quad)
        for quad in generate_raw(spec("crossed", count=100, seed=1)):
            assert not certificate_holds("convex", quad)

    def test_nonconvex_not_convex(self):
        for quad in generate_raw(spec("nonconvex", count=100, seed=2)):
            assert not certificate_holds("convex", quad)


class TestBounds:
    @pytest.mark.parametrize("kind", KINDS)
    def test_coordinates_within_range(self, kind):
        bound = 1000
        for quad in generate_raw(
            spec(kind, count=100, seed=11, coordinate_range=bound)
        ):
            for x, y in quad:
                assert -bound <= x <= bound
                assert -bound <= y <= bound


class TestValidation:
    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            spec("spiral").validate()

    def test_negative_count(self):
        with pytest.raises(ValueError):
            spec("random", count=-1).validate()

    def test_tiny_range(self):
        with pytest.raises(ValueError):
            spec("random", coordinate_range=4).validate()

    def test_zero_count_is_empty(self):
        assert list(generate_raw(spec("random", count=0))) == []
