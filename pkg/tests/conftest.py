"""Shared builders for test fixtures."""

from __future__ import annotations

import pytest

from kgdistill.model import (
    ClassAssertion,
    Named,
    ObjectPropertyAssertion,
    SubClassOf,
    clazz,
    individual,
    obj_prop,
)

EX = "http://example.org/"


def C(name: str) -> Named:
    return Named(clazz(EX + name))


def ce(name: str):
    return clazz(EX + name)


def pe(name: str):
    return obj_prop(EX + name)


def ie(name: str):
    return individual(EX + name)


def sub(a: str, b: str) -> SubClassOf:
    return SubClassOf(C(a), C(b))


def rel(s: str, p: str, o: str) -> ObjectPropertyAssertion:
    return ObjectPropertyAssertion(ie(s), pe(p), ie(o))


def typ(i: str, c: str) -> ClassAssertion:
    return ClassAssertion(ie(i), C(c))


@pytest.fixture
def ex():
    return EX
