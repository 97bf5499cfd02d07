import pytest

from gfroots import BadSpec, gray_sequence


def test_gf8_walk_order():
    # the canonical 3-bit walk: 000, 001, 011, 010, 110, 111, 101, 100
    values = [s.value for s in gray_sequence(3)]
    assert values == [0b000, 0b001, 0b011, 0b010, 0b110, 0b111, 0b101, 0b100]


def test_gf8_flipped_bits():
    flips = [s.flipped_bit for s in gray_sequence(3)]
    assert flips == [None, 0, 1, 0, 2, 0, 1, 0]


def test_two_bit_walk():
    steps = list(gray_sequence(2))
    assert [s.value for s in steps] == [0b00, 0b01, 0b11, 0b10]
    assert [s.flipped_bit for s in steps] == [None, 0, 1, 0]


def test_first_step_is_origin():
    first = next(iter(gray_sequence(5)))
    assert (first.index, first.value, first.flipped_bit) == (0, 0, None)


@pytest.mark.parametrize("m", range(2, 9))
def test_visits_every_element_once(m):
    values = [s.value for s in gray_sequence(m)]
    assert len(values) == 1 << m
    assert set(values) == set(range(1 << m))


@pytest.mark.parametrize("m", range(2, 9))
def test_single_bit_flips_reconstruct_walk(m):
    acc = 0
    for step in gray_sequence(m):
        if step.flipped_bit is not None:
            acc ^= 1 << step.flipped_bit
        assert acc == step.value
        assert step.value == step.index ^ (step.index >> 1)


@pytest.mark.parametrize("m", [0, 1, 17])
def test_rejects_bad_width(m):
    with pytest.raises(BadSpec):
        gray_sequence(m)
