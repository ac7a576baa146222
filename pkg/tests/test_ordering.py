import pytest

from welzlorder.ordering import (
    Order,
    OrderError,
    check_permutation,
    parse_order,
    reconstruct,
    serialize_order,
)


class TestOrder:
    def test_build_and_iterate(self):
        order = Order([3, 1, 2])
        assert order.to_list() == [3, 1, 2]
        assert len(order) == 3
        assert 1 in order and 0 not in order

    def test_insert_after(self):
        order = Order([0, 2])
        order.insert_after(1, 0)
        assert order.to_list() == [0, 1, 2]
        assert order.positions() == {0: 0, 1: 1, 2: 2}

    def test_insert_after_tail(self):
        order = Order([0])
        order.insert_after(1, 0)
        order.insert_after(2, 1)
        assert order.to_list() == [0, 1, 2]

    def test_duplicate_insert_rejected(self):
        order = Order([0, 1])
        with pytest.raises(OrderError):
            order.insert_after(0, 1)

    def test_missing_anchor_rejected(self):
        order = Order([0])
        with pytest.raises(OrderError):
            order.insert_after(1, 5)

    def test_check_permutation(self):
        check_permutation(Order([2, 0, 1]), 3)
        with pytest.raises(OrderError):
            check_permutation(Order([0, 2]), 3)


class TestReconstruct:
    def test_single_pair(self):
        assert reconstruct(Order(["a"]), [("b", "a")]).to_list() == ["a", "b"]

    def test_stack_semantics(self):
        # pushed (b,a) then (c,a); pops reverse: c first, then b before c
        out = reconstruct(Order(["a"]), [("b", "a"), ("c", "a")])
        assert out.to_list() == ["a", "b", "c"]

    def test_chained_representatives(self):
        # 2's representative 1 was itself removed, but in a later push, so
        # it is back in the order by the time (2, 1) pops
        out = reconstruct(Order([0]), [(2, 1), (1, 0)])
        assert out.to_list() == [0, 1, 2]

    def test_missing_representative_is_hard_error(self):
        with pytest.raises(OrderError):
            reconstruct(Order([0]), [(1, 9)])


class TestSerialization:
    def test_round_trip(self):
        order = Order([4, 0, 2, 1, 3])
        assert parse_order(serialize_order(order)).to_list() == [4, 0, 2, 1, 3]

    def test_bad_line(self):
        with pytest.raises(OrderError):
            parse_order("0\nnope\n")
