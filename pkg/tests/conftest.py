"""Shared fixtures: the worked examples used throughout the test suite.

All fixtures live over P = Q[x, y] with the degrevlex module order.  The
running examples are

* ``order7`` / ``prebasis7``: the order module
  M = {x e1, y e1, e1, x^2 e2, x e2, e2} together with a seven-element
  prebasis that is *not* a border basis (its Buchberger check fails),
* ``mbba_gens``: five generators of a submodule U of Q[x,y]^2 whose border
  basis has the order module {e1, e2},
* ``basis4``: that border basis, given directly by its four vectors,
* quotient data (the fifth MBBA generator spans S) and subideal data
  (I = <x^2 + x*y, y - 1>, F = (x - y, x + y + 1)).
"""

import pytest

from modborder import TermOrder, reconstruct_prebasis
from modborder.textio import parse_poly, parse_vector

VARS = ["x", "y"]

MBBA_GENS = [
    "-2*e1 + (3*x - 1)*e2",
    "(3*x + 4)*e1 + 2*e2",
    "(y - 1)*e2",
    "(y - 1)*e1",
    "(x + y + 1)*e1 + (-x + y)*e2",
]

PREBASIS7 = [
    "x^2*e1 - y*e1 + e2",
    "x*y*e1 - e2",
    "y^2*e1 - x*e2",
    "x^3*e2 - e1",
    "x^2*y*e2 - e1 - e2",
    "x*y*e2 + 3*e1",
    "y*e2 - x*e1 - y*e1 - e1 - e2",
]

BASIS4 = [
    "x*e1 + 4/3*e1 + 2/3*e2",
    "y*e1 - e1",
    "x*e2 - 2/3*e1 - 1/3*e2",
    "y*e2 - e2",
]

SUBIDEAL_I = ["x^2 + x*y", "y - 1"]
SUBIDEAL_F = ["x - y", "x + y + 1"]


def vec(text):
    """A rank-2 vector over Q[x, y] from its text form."""
    return parse_vector(text, VARS, 2)


def pol(text):
    """A polynomial over Q[x, y] from its text form."""
    return parse_poly(text, VARS)


@pytest.fixture(scope="session")
def order():
    return TermOrder("degrevlex")


@pytest.fixture(scope="session")
def varnames():
    return VARS


@pytest.fixture(scope="session")
def mbba_gens():
    return [vec(s) for s in MBBA_GENS]


@pytest.fixture(scope="session")
def prebasis7(order):
    return reconstruct_prebasis([vec(s) for s in PREBASIS7], order)


@pytest.fixture(scope="session")
def basis4(order):
    return reconstruct_prebasis([vec(s) for s in BASIS4], order)


@pytest.fixture(scope="session")
def subideal_data():
    return [pol(s) for s in SUBIDEAL_I], [pol(s) for s in SUBIDEAL_F]


def problem_text(body):
    return "ring Q[x,y]\nrank 2\norder degrevlex\n" + body


MBBA_FILE = problem_text("vectors:\n" + "\n".join(MBBA_GENS) + "\n")
PREBASIS7_FILE = problem_text("vectors:\n" + "\n".join(PREBASIS7) + "\n")
BASIS4_FILE = problem_text("vectors:\n" + "\n".join(BASIS4) + "\n")
QUOT_FILE = problem_text(
    "vectors:\n"
    + "\n".join(MBBA_GENS[:4])
    + "\nsyzygy:\n"
    + MBBA_GENS[4]
    + "\n"
)
SUB_FILE = problem_text(
    "ideal:\n"
    + "\n".join(SUBIDEAL_I)
    + "\nsubideal:\n"
    + "\n".join(SUBIDEAL_F)
    + "\n"
)


@pytest.fixture()
def write_case(tmp_path):
    """Factory dropping a problem file into tmp_path and returning its path."""

    def write(text, name="case.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
