"""Shared fixtures: a small hand-written corpus and a model trained on it."""

import random

import pytest

from namefinder import parse_annotated, train

ANNOTATED_FIXTURE = """\
Mr. <ENAMEX TYPE="PERSON">John Smith</ENAMEX> said hello .
<ENAMEX TYPE="ORGANIZATION">Acme Systems Corp.</ENAMEX> opened in <ENAMEX TYPE="LOCATION">Boston</ENAMEX> .
The meeting on <TIMEX TYPE="DATE">11/9/89</TIMEX> cost <NUMEX TYPE="MONEY">$1,300</NUMEX> .
<ENAMEX TYPE="PERSON">Smith</ENAMEX> left at <TIMEX TYPE="TIME">10:30</TIMEX> .
Shares fell <NUMEX TYPE="PERCENT">8.5%</NUMEX> yesterday .
The plan was approved .
"""


@pytest.fixture
def rng():
    return random.Random(42)


@pytest.fixture(scope="session")
def tiny_corpus():
    return parse_annotated(ANNOTATED_FIXTURE)


@pytest.fixture(scope="session")
def tiny_model(tiny_corpus):
    return train(tiny_corpus)
