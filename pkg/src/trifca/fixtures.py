"""Small worked contexts used by the tests, demos and CLI golden files.

``short_names=True`` swaps the people/careers/places vocabulary for the
compact ``a b c`` / ``1 2 3`` / ``α β γ`` rosters.
"""

from __future__ import annotations

from .context import FormalContext
from .meta import MetaModel

PEOPLE = ("Jack", "Jason", "James")
CAREERS = ("Student", "Librarian", "Professor")
PLACES = ("Classroom", "Library", "Office")

SHORT_OBJECTS = ("a", "b", "c")
SHORT_ATTRIBUTES = ("1", "2", "3")
SHORT_CONDITIONS = ("α", "β", "γ")


def _rosters(short: bool):
    if short:
        return SHORT_OBJECTS, SHORT_ATTRIBUTES, SHORT_CONDITIONS
    return PEOPLE, CAREERS, PLACES


def individuals_careers(short_names: bool = False) -> FormalContext:
    g, m, _ = _rosters(short_names)
    return FormalContext.from_cross_table(g, m, ["x..", ".x.", "..x"], "individuals")


def careers_locations(short_names: bool = False) -> FormalContext:
    _, m, b = _rosters(short_names)
    return FormalContext.from_cross_table(m, b, ["xx.", ".xx", "x.x"], "careers")


def career_model(short_names: bool = False) -> MetaModel:
    return MetaModel(individuals_careers(short_names), careers_locations(short_names))


def staircase() -> FormalContext:
    """Three nested rows; removing the incidences of ``3`` adds a bottom concept."""
    return FormalContext.from_cross_table(SHORT_OBJECTS, SHORT_ATTRIBUTES, ["xxx", ".xx", "..x"], "staircase")


def staircase_removed() -> FormalContext:
    return FormalContext.from_cross_table(SHORT_OBJECTS, SHORT_ATTRIBUTES, ["xx.", ".x.", "..."], "staircase-removed")


def discriminator_k1() -> FormalContext:
    return FormalContext.from_cross_table(SHORT_OBJECTS, SHORT_ATTRIBUTES, ["xx.", ".xx", "..x"], "k1")


def discriminator_k2(case: int) -> FormalContext:
    """Two meta-contexts with the same implications but different compositions."""
    tables = {1: ["xx.", "..x", ".x."], 2: ["xx.", ".x.", "..x"]}
    if case not in tables:
        raise ValueError("case must be 1 or 2")
    return FormalContext.from_cross_table(SHORT_ATTRIBUTES, SHORT_CONDITIONS, tables[case], f"case{case}")


def discriminator_model(case: int) -> MetaModel:
    return MetaModel(discriminator_k1(), discriminator_k2(case))


SIX_ATTRIBUTES = ("1", "2", "3", "4", "5", "6")
SIX_OBJECTS = ("a", "b", "c", "d", "e", "f")


def six_attribute_context() -> FormalContext:
    rows = ["xx.x..", ".xx...", "xxxxxx", "....xx", ".....x", "x....."]
    return FormalContext.from_cross_table(SIX_OBJECTS, SIX_ATTRIBUTES, rows, "six")


def six_attribute_context_deleted() -> FormalContext:
    """The six-attribute context with column ``2`` deleted."""
    rows = ["x.x..", ".x...", "xxxxx", "...xx", "....x", "x...."]
    return FormalContext.from_cross_table(SIX_OBJECTS, ("1", "3", "4", "5", "6"), rows, "six-deleted")
