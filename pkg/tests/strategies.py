from collections import Counter

from hypothesis import assume, strategies as st

from partitions import Partition
from tableaux import enumerate_domino


@st.composite
def partition_strategy(draw, max_n=10, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return Partition(())
    k = draw(st.integers(min_value=1, max_value=n))

    # Assign each box to a random row
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bins)

    return Partition(tuple(sorted(counts.values(), reverse=True)))


@st.composite
def integer_matrix_strategy(draw, max_rows=5, max_cols=5, bound=4):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    entry = st.integers(min_value=-bound, max_value=bound)
    return draw(st.lists(st.lists(entry, min_size=cols, max_size=cols),
                         min_size=rows, max_size=rows))


@st.composite
def domino_strategy(draw, max_n=8, even=False):
    """A random domino tableau of a random shape (even size if asked)."""
    p = draw(partition_strategy(max_n=max_n))
    assume(not even or p.n % 2 == 0)
    tableaux = enumerate_domino(p)
    assume(tableaux)
    return draw(st.sampled_from(tableaux))
