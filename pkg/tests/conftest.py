from collections import Counter

import hypothesis.strategies as st

from kronlab.partitions import Partition


@st.composite
def partitions(draw, max_weight: int = 8, min_weight: int = 0) -> Partition:
    n = draw(st.integers(min_value=min_weight, max_value=max_weight))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bins)
    return tuple(sorted(counts.values(), reverse=True))
