"""Loaders for the printed reference data shipped in ``fixtures/``."""

from __future__ import annotations

import configparser
import json
from functools import lru_cache
from importlib import resources

from .multipoly import MultiPoly, PolyRing


def _text(name: str) -> str:
    return resources.files(__package__).joinpath("fixtures", name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def _sections() -> configparser.ConfigParser:
    cp = configparser.ConfigParser(interpolation=None)
    cp.read_string(_text("polynomials.txt"))
    return cp


def polynomial_names() -> list[str]:
    return list(_sections().sections())


def polynomial_source(name: str) -> str:
    return " ".join(_sections()[name]["expr"].split())


def polynomial_cite(name: str) -> str:
    return _sections()[name]["cite"]


def polynomial(name: str, ring: PolyRing | None = None) -> MultiPoly:
    sec = _sections()[name]
    ring = ring or PolyRing(sec["vars"])
    return ring.parse(sec["expr"])


@lru_cache(maxsize=None)
def json_fixture(name: str) -> dict:
    return json.loads(_text(name))
