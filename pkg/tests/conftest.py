"""
Shared fixtures and hypothesis strategies for the vcmax test suite.
"""

import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

# Add workspace root to path
workspace_root = Path(__file__).parent.parent
sys.path.insert(0, str(workspace_root))

from vcmax.config import reload_config
from vcmax.generators import bounded_size_family, intervals_family
from vcmax.genus import pattern_avoiding_family
from vcmax.maximum import Code
from vcmax.sets import OrderedGround, SetFamily

ENV_KEYS = ("VCMAX_CAP", "VCMAX_GEOMETRY_CAP", "VCMAX_WITNESS_CAP", "VCMAX_SEED",
            "VCMAX_FORMAT", "VCMAX_LOG_LEVEL", "LOG_LEVEL", "VCMAX_LOG_FILE", "VCMAX_CONFIG")


@pytest.fixture(autouse=True)
def default_config(monkeypatch):
    """Every test starts from the repository defaults, whatever the shell exports."""
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    yield reload_config()
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    reload_config()


@pytest.fixture
def abc():
    return OrderedGround(("a", "b", "c"))


@pytest.fixture
def chain6():
    return OrderedGround.chain(6)


def maximum_corpus(max_n: int = 7, min_n: int = 1):
    """Generated d-maximum families with their d, for the sweeps over known maximum classes."""
    out = []
    for n in range(min_n, max_n + 1):
        chain = OrderedGround.chain(n)
        for k in (1, 2):
            if 2 * k <= n:
                out.append((f"intervals-n{n}-k{k}", intervals_family(chain, k), 2 * k))
        for m in range(0, min(n, 3) + 1):
            out.append((f"bounded-n{n}-m{m}", bounded_size_family(chain, m), m))
        for code in ("0", "1", "01", "10", "101", "010", "110"):
            eta = Code.parse(code)
            if len(eta) - 1 < n:
                out.append((f"avoid-n{n}-{code}", pattern_avoiding_family(chain, eta), len(eta) - 1))
    return out


@st.composite
def families(draw, min_n: int = 1, max_n: int = 6, min_size: int = 1):
    """A random nonempty family on the chain 1..n."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    members = draw(st.sets(st.integers(min_value=0, max_value=(1 << n) - 1),
                           min_size=min_size, max_size=min(1 << n, 40)))
    return SetFamily(OrderedGround.chain(n), tuple(sorted(members)))


@st.composite
def labelled_families(draw, max_n: int = 4):
    """Raw label tuples drawn from printable ASCII, with the family they would carry.

    Returns (labels, members); the labels may be rejected by OrderedGround.
    """
    labels = draw(st.lists(st.text(alphabet=st.characters(min_codepoint=32, max_codepoint=126),
                                   min_size=1, max_size=4),
                           min_size=1, max_size=max_n, unique=True))
    members = draw(st.sets(st.integers(min_value=0, max_value=(1 << len(labels)) - 1),
                           min_size=1, max_size=1 << len(labels)))
    return tuple(labels), tuple(sorted(members))
