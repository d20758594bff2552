import pytest

from wreach.cover import approx_min_cover
from wreach.graph import random_graph
from wreach.labeling import Variant, build_gwkri, build_lwkri, build_wkri
from wreach.serialize import FORMAT_VERSION, IndexFormatError, deserialize, serialize


def _indexes(toy_graph, toy_full_order, toy_cover_order):
    cover = approx_min_cover(toy_graph)
    return [
        build_wkri(toy_graph, toy_full_order),
        build_gwkri(toy_graph, cover, toy_cover_order),
        build_lwkri(toy_graph, cover, toy_cover_order),
    ]


class TestRoundTrip:
    def test_toy_indexes_round_trip_exactly(self, toy_graph, toy_full_order, toy_cover_order):
        for index in _indexes(toy_graph, toy_full_order, toy_cover_order):
            blob = serialize(index)
            back = deserialize(blob)
            assert back.variant == index.variant
            assert back.vertex_count == index.vertex_count
            assert back.hops == index.hops
            assert back.rank == index.rank
            assert back.entries == index.entries
            if index.cover is not None:
                assert back.cover.membership == index.cover.membership
            if index.variant is Variant.LWKRI:
                assert back.adjacency == index.adjacency
            # bit-exact: re-serializing the loaded index reproduces the bytes
            assert serialize(back) == blob

    def test_random_indexes_round_trip(self):
        for seed in range(8):
            g = random_graph(14, 28, 6, seed)
            cover = approx_min_cover(g)
            for index in (build_wkri(g), build_gwkri(g, cover), build_lwkri(g, cover)):
                back = deserialize(serialize(index))
                assert back.entries == index.entries

    def test_weight_zero_survives(self):
        g = random_graph(10, 20, 3, 1)
        from wreach.graph import reassign_weights

        g = reassign_weights(g, 2, seed=5)  # guarantees some zero weights
        index = build_wkri(g)
        assert deserialize(serialize(index)).entries == index.entries

    def test_serialization_deterministic(self, toy_graph, toy_full_order):
        index = build_wkri(toy_graph, toy_full_order)
        assert serialize(index) == serialize(index)


class TestCorruption:
    def test_bad_magic(self, toy_graph, toy_full_order):
        blob = bytearray(serialize(build_wkri(toy_graph, toy_full_order)))
        blob[:4] = b"NOPE"
        with pytest.raises(IndexFormatError):
            deserialize(bytes(blob))

    def test_bad_version(self, toy_graph, toy_full_order):
        blob = bytearray(serialize(build_wkri(toy_graph, toy_full_order)))
        blob[4] = FORMAT_VERSION + 9
        with pytest.raises(IndexFormatError):
            deserialize(bytes(blob))

    def test_truncation(self, toy_graph, toy_full_order):
        blob = serialize(build_wkri(toy_graph, toy_full_order))
        for cut in (0, 3, len(blob) // 2, len(blob) - 1):
            with pytest.raises(IndexFormatError):
                deserialize(blob[:cut])

    def test_crc_catches_every_single_byte_flip(self, toy_graph, toy_full_order):
        blob = serialize(build_wkri(toy_graph, toy_full_order))
        for pos in range(len(blob)):
            corrupted = bytearray(blob)
            corrupted[pos] ^= 0x5A
            with pytest.raises(IndexFormatError):
                deserialize(bytes(corrupted))


class TestArrayBackendSerialization:
    def test_array_serializer_is_byte_identical(self, toy_graph, toy_full_order, toy_cover_order):
        fp = pytest.importorskip("wreach._fastpath")
        if not fp.HAVE_NUMBA:
            pytest.skip("numba unavailable")
        cover = approx_min_cover(toy_graph)
        for variant, ref in (
            (Variant.WKRI, build_wkri(toy_graph, toy_full_order)),
            (Variant.GWKRI, build_gwkri(toy_graph, cover, toy_cover_order)),
            (Variant.LWKRI, build_lwkri(toy_graph, cover, toy_cover_order)),
        ):
            order = toy_full_order if variant is Variant.WKRI else toy_cover_order
            arr = fp.build_fast(toy_graph, variant, None if variant is Variant.WKRI else cover, order)
            assert serialize(arr) == serialize(ref)

    def test_array_serializer_random(self):
        fp = pytest.importorskip("wreach._fastpath")
        if not fp.HAVE_NUMBA:
            pytest.skip("numba unavailable")
        for seed in range(5):
            g = random_graph(20, 45, 7, seed)
            cover = approx_min_cover(g)
            pairs = [
                (fp.build_fast(g, Variant.WKRI), build_wkri(g)),
                (fp.build_fast(g, Variant.GWKRI, cover), build_gwkri(g, cover)),
                (fp.build_fast(g, Variant.LWKRI, cover), build_lwkri(g, cover)),
            ]
            for arr, ref in pairs:
                assert serialize(arr) == serialize(ref)
