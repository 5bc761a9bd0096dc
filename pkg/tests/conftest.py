import pytest

from negseq import Dictionary
from negseq.textio import parse_database

# Non-inclusion comparison dataset: five sequences, each containing exactly
# one placement of <b ... a> with a single itemset in the gap.
TABLE1_TEXT = """\
(b c) f a
(b c) (c f) a
(b c) (d f) a
(b c) (e f) a
(b c) (c d e f) a
"""

# Rule-support dataset: six sequences over {a, b, c, d, e}.
FIG1_TEXT = """\
a c e
a b c e
a b c e
a c d
a c d
a c d
"""

# Four sequences, each with one placement of <a ... d>, exercising the four
# embedding/non-inclusion combinations of <a !(b c) d>.
ABSENCE_TEXT = """\
a c b e d
a (b c) e d
a b e d
a e d
"""


@pytest.fixture
def table1_db():
    return parse_database(TABLE1_TEXT)


@pytest.fixture
def fig1_db():
    return parse_database(FIG1_TEXT)


@pytest.fixture
def absence_db():
    return parse_database(ABSENCE_TEXT)


@pytest.fixture
def abc_dict():
    return Dictionary("abcdef")
