import sys
sys.path.append('./')

from primorialgaps import Explorer
from primorialgaps.analyzer import DifferenceReport
from primorialgaps.cli.output import parse_row
import os
import pytest

TABLE1_FILE = os.path.join(os.path.dirname(__file__), 'data', 'table1.txt')


def load_table1() -> list[DifferenceReport]:
    with open(TABLE1_FILE, 'r') as file:
        lines = [line for line in file.read().splitlines() if line.strip()]
    return [parse_row(line) for line in lines[1:]]


@pytest.fixture(scope='session')
def table1() -> list[DifferenceReport]:
    return load_table1()


@pytest.fixture()
def explorer():
    explorer = Explorer()
    yield explorer
    explorer.cleanup()
