import math

import pytest
from hypothesis import given, strategies as st

from contentzone.errors import WindowSizeInvalid
from contentzone.preprocess import Sentence
from contentzone.stream import StreamConfig, TextStream, windows


def sents(n):
    return [Sentence(i, f"S{i}.") for i in range(n)]


@pytest.mark.parametrize("n, size, expected", [(15, 10, [10, 5]), (5, 1, [1] * 5), (5, 100, [5])])
def test_window_sizes(n, size, expected):
    assert [len(w) for w in windows(sents(n), size)] == expected


@pytest.mark.parametrize("bad", [0, -3])
def test_invalid_window(bad):
    with pytest.raises(WindowSizeInvalid):
        StreamConfig(bad)


def test_next_window_exhausts():
    stream = TextStream(sents(3), StreamConfig(2))
    first = stream.next_window()
    second = stream.next_window()
    assert (first.ordinal, len(first)) == (0, 2)
    assert (second.ordinal, len(second)) == (1, 1)
    assert stream.next_window() is None
    assert stream.next_window() is None


def test_unbounded_source():
    def endless():
        i = 0
        while True:
            yield Sentence(i, "x.")
            i += 1

    stream = TextStream(endless(), StreamConfig(4))
    ws = [stream.next_window() for _ in range(3)]
    assert [w.first_index for w in ws] == [0, 4, 8]


@given(st.integers(0, 200), st.integers(1, 50))
def test_lossless(n, size):
    source = sents(n)
    ws = list(windows(source, size))
    assert [s for w in ws for s in w.sentences] == source
    assert len(ws) == math.ceil(n / size)
    assert all(len(w) == size for w in ws[:-1])
