"""Typed domain errors.

Every error carries a stable ``kind`` string (its class name) and a
``details`` mapping so the CLI can serialize it without guessing.
"""

from __future__ import annotations

from typing import Any


class Fano3LabError(Exception):
    """Base class for all domain errors raised by the library."""

    def __init__(self, message: str = "", **details: Any) -> None:
        super().__init__(message or type(self).__name__)
        self.details = details

    @property
    def kind(self) -> str:
        return type(self).__name__


# exactfield
class DivisionByZero(Fano3LabError, ZeroDivisionError):
    pass


class ConductorMismatch(Fano3LabError):
    pass


class NotASubfield(Fano3LabError):
    pass


# polyalg
class NotDetNormalized(Fano3LabError):
    pass


class BothZero(Fano3LabError):
    pass


class ParseError(Fano3LabError):
    pass


# v5
class RootsNotInField(Fano3LabError):
    pass


# quintics
class DegenerateParameter(Fano3LabError):
    pass


# planecurves
class CommonComponent(Fano3LabError):
    pass


class PointNotRational(Fano3LabError):
    pass


class SingularPoint(Fano3LabError):
    pass


class NotAConic(Fano3LabError):
    pass


# autgrp
class CapExceeded(Fano3LabError):
    pass


# fanodb
class NoSuchFamily(Fano3LabError):
    pass


class NotEven(Fano3LabError):
    pass


class OutOfCorrespondence(Fano3LabError):
    pass


class NotCovered(Fano3LabError):
    pass


class UnsupportedCombination(Fano3LabError):
    pass


class OutOfRange(Fano3LabError):
    pass


class ConductorTooSmall(Fano3LabError):
    pass


# linalgeom
class NotInA(Fano3LabError):
    pass


class RankPattern(Fano3LabError):
    pass


class NotIsotropic(Fano3LabError):
    pass


class WrongImageDimension(Fano3LabError):
    pass


class IdenticallyZero(Fano3LabError):
    pass


class DegenerateConic(Fano3LabError):
    pass
