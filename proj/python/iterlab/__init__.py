"""Finite-model workbench for monads, Elgot iteration, Kleene star and while loops."""

import json

from . import _iterlab
from ._iterlab import BudgetExceeded, Error, NotEnumerable, ParseError

__all__ = [
    "BudgetExceeded",
    "Error",
    "NotEnumerable",
    "ParseError",
    "check",
    "closure",
    "counterexamples",
    "fixture_names",
    "laws",
    "monad_vocabulary",
]


def check(monad, laws="all", sizes=(), upto=False, mode="exhaustive", seed=1, samples=1000, jobs=1):
    """Run laws on a monad and return the report records as dicts."""
    if isinstance(sizes, str):
        sizes = [sizes]
    lines = _iterlab.check(monad, laws, list(sizes), upto, mode, seed, samples, jobs)
    return [json.loads(line) for line in lines]


def counterexamples(fixture=""):
    """Run one fixture, or all of them, and return the report records as dicts."""
    return [json.loads(line) for line in _iterlab.counterexamples(fixture)]


def closure(relation):
    """Star of a powerset relation literal such as '0 -> {1} ; 1 -> {}'."""
    size = relation.count("->")
    return _iterlab.closure(relation, size)


def laws():
    return [dict(id=i, suite=s, statement=t) for i, s, t in _iterlab.laws()]


def monad_vocabulary():
    return _iterlab.monad_vocabulary()


def fixture_names():
    return list(_iterlab.fixture_names())
