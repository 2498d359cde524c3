"""
共享的测试夹具：内置纽结表中的图表和两种系数方案
"""

import pytest

from src.core.algebra import make_scheme
from src.core.diagram import mirror, orient, parse_pd
from src.core.knot_table import BUNDLED_TABLE, load_table


@pytest.fixture(scope="session")
def table_entries():
    return load_table(BUNDLED_TABLE)


@pytest.fixture(scope="session")
def knots(table_entries):
    """名称到已定向图表的映射"""
    return {entry.name: orient(entry.diagram) for entry in table_entries}


@pytest.fixture(scope="session")
def left_trefoil(knots):
    return knots["3_1"]


@pytest.fixture(scope="session")
def right_trefoil(knots):
    return mirror(knots["3_1"])


@pytest.fixture
def unknot():
    return orient(parse_pd("", 1, name="unknot"))


@pytest.fixture(scope="session")
def symbolic():
    return make_scheme("symbolic")


@pytest.fixture(scope="session")
def nor():
    return make_scheme("nor")


@pytest.fixture(scope="session")
def virtual_trefoil():
    """把左手三叶结的一个交叉点改成虚交叉点"""
    return orient(parse_pd("X[1,4,2,5] X[3,6,4,1] P[5,2,6,3]", name="virtual trefoil"))
