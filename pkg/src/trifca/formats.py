"""Reading and writing contexts, plus DOT and JSON report output.

Burmeister ``.cxt`` layout, one item per LF-terminated line::

    B
    <name, may be empty>
    <number of objects>
    <number of attributes>
    <object names>
    <attribute names>
    <one row of '.'/'X' per object>

Triadic contexts are JSON documents with ``version``, ``objects``,
``attributes``, ``conditions`` and ``triples`` (name triples).
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Iterable, Mapping, Sequence

from . import _bits
from .context import ConceptLattice, FormalContext
from .errors import InvalidInputError, ParseError
from .meta import RESERVED_NAMES
from .stem_base import Implication
from .triadic import QuotientOrder, TriadicContext

TRIADIC_VERSION = 1
REPORT_VERSION = 1


def _check_name(name: str, line: int | None, seen: set[str], what: str) -> None:
    if name in RESERVED_NAMES:
        raise ParseError(f"{what} name {name!r} is reserved", line)
    if name in seen:
        raise ParseError(f"duplicate {what} name {name!r}", line)
    seen.add(name)


def parse_cxt(text: str) -> FormalContext:
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in text.split("\n")]

    def need(k: int, what: str) -> str:
        if k >= len(lines):
            raise ParseError(f"unexpected end of file, expected {what}", k + 1)
        return lines[k]

    if need(0, "header 'B'") != "B":
        raise ParseError("first line must be 'B'", 1)
    name = need(1, "context name")
    counts = []
    for k, what in ((2, "object count"), (3, "attribute count")):
        raw = need(k, what).strip()
        if not raw.isdigit():
            raise ParseError(f"{what} must be a non-negative integer, got {raw!r}", k + 1)
        counts.append(int(raw))
    ng, nm = counts
    pos = 4
    objects, attributes = [], []
    for roster, n, what in ((objects, ng, "object"), (attributes, nm, "attribute")):
        seen: set[str] = set()
        for _ in range(n):
            nm_line = need(pos, f"{what} name")
            _check_name(nm_line, pos + 1, seen, what)
            roster.append(nm_line)
            pos += 1
    rows = []
    for g in range(ng):
        # with no attributes a row is an empty line, possibly cut off at EOF
        row = "" if nm == 0 and pos >= len(lines) else need(pos, f"row for object {objects[g]!r}")
        if len(row) != nm:
            raise ParseError(f"row has {len(row)} cells, expected {nm}", pos + 1)
        bad = set(row) - {".", "X"}
        if bad:
            raise ParseError(f"illegal cell character {sorted(bad)[0]!r}", pos + 1)
        rows.append(_bits.to_mask(i for i, ch in enumerate(row) if ch == "X"))
        pos += 1
    if any(ln.strip() for ln in lines[pos:]):
        raise ParseError("unexpected content after the last row", pos + 1)
    return FormalContext(tuple(objects), tuple(attributes), tuple(rows), name)


def _single_line(name: str) -> str:
    if "\n" in name or "\r" in name:
        raise InvalidInputError(f"name {name!r} contains a line break")
    return name


def serialize_cxt(ctx: FormalContext) -> str:
    out = ["B", _single_line(ctx.name), str(ctx.n_objects), str(ctx.n_attributes)]
    out += [_single_line(g) for g in ctx.objects]
    out += [_single_line(m) for m in ctx.attributes]
    for row in ctx.rows:
        out.append("".join("X" if row >> m & 1 else "." for m in range(ctx.n_attributes)))
    return "\n".join(out) + "\n"


def parse_triadic(text: str) -> TriadicContext:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("triadic document must be a JSON object")
    if doc.get("version") != TRIADIC_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}, expected {TRIADIC_VERSION}")
    rosters = []
    for key in ("objects", "attributes", "conditions"):
        roster = doc.get(key)
        if not isinstance(roster, list) or not all(isinstance(x, str) for x in roster):
            raise ParseError(f"{key!r} must be a list of strings")
        seen: set[str] = set()
        for x in roster:
            _check_name(x, None, seen, key[:-1])
        rosters.append(roster)
    raw = doc.get("triples")
    if not isinstance(raw, list):
        raise ParseError("'triples' must be a list")
    index = [{n: i for i, n in enumerate(r)} for r in rosters]
    triples = set()
    for t in raw:
        if not (isinstance(t, list) and len(t) == 3 and all(isinstance(x, str) for x in t)):
            raise ParseError(f"triple {t!r} must be three names")
        try:
            ids = tuple(index[k][t[k]] for k in range(3))
        except KeyError as exc:
            raise ParseError(f"triple {t!r} names unknown element {exc.args[0]!r}") from None
        if ids in triples:
            raise ParseError(f"duplicate triple {t!r}")
        triples.add(ids)
    return TriadicContext(tuple(rosters[0]), tuple(rosters[1]), tuple(rosters[2]), frozenset(triples))


def triadic_document(K: TriadicContext) -> dict[str, Any]:
    return {
        "version": TRIADIC_VERSION,
        "objects": list(K.objects),
        "attributes": list(K.attributes),
        "conditions": list(K.conditions),
        "triples": [list(t) for t in K.named_triples()],
    }


def serialize_triadic(K: TriadicContext) -> str:
    return dump_json(triadic_document(K))


def dump_json(doc: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def report_document(command: str, inputs: Mapping[str, bytes], payload: Any) -> dict[str, Any]:
    return {
        "version": REPORT_VERSION,
        "command": command,
        "inputs": {k: digest(v) for k, v in sorted(inputs.items())},
        "ordering": "lectic within bases, driver order across entries, canonical masks for concepts",
        "payload": payload,
    }


def implication_record(imp: Implication, names: Sequence[str], conditions: Iterable[str] | None = None) -> dict:
    premise, conclusion = imp.names(names)
    rec: dict[str, Any] = {"premise": premise, "conclusion": conclusion}
    if conditions is not None:
        rec["conditions"] = list(conditions)
    return rec


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def lattice_to_dot(lattice: ConceptLattice, name: str = "lattice") -> str:
    """Line diagram with reduced labels: attributes on their attribute concept, objects on their object concept."""
    ctx = lattice.context
    attr_labels: dict[int, list[str]] = {}
    obj_labels: dict[int, list[str]] = {}
    for m, mname in enumerate(ctx.attributes):
        attr_labels.setdefault(lattice.attribute_concept(m), []).append(mname)
    for g, gname in enumerate(ctx.objects):
        obj_labels.setdefault(lattice.object_concept(g), []).append(gname)
    out = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i in range(len(lattice.concepts)):
        top = ", ".join(attr_labels.get(i, []))
        bottom = ", ".join(obj_labels.get(i, []))
        out.append(
            f"  n{i} [label={_quote(top + chr(10) + bottom)}, attributes={_quote(top)}, objects={_quote(bottom)}];"
        )
    for lo, up in lattice.edges:
        out.append(f"  n{lo} -> n{up};")
    out.append("}")
    return "\n".join(out) + "\n"


def quotient_to_dot(order: QuotientOrder, roster: Sequence[str], name: str | None = None) -> str:
    """One node per class labelled with its shared component, edges upward along inclusion."""
    title = name or ("extents", "intents", "modi")[order.axis - 1]
    out = [f"digraph {_quote(title)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for k, (comp, members) in enumerate(order.classes):
        label = "{" + ", ".join(roster[i] for i in sorted(comp)) + "}"
        ids = " ".join(map(str, members))
        out.append(f"  n{k} [label={_quote(label)}, concepts={_quote(ids)}];")
    for lo, up in order.edges:
        out.append(f"  n{lo} -> n{up};")
    out.append("}")
    return "\n".join(out) + "\n"


def export_dot(order: ConceptLattice | QuotientOrder, roster: Sequence[str] | None = None) -> str:
    """DOT text for a concept lattice or a quotient order (the latter needs its axis roster)."""
    if isinstance(order, ConceptLattice):
        return lattice_to_dot(order)
    if isinstance(order, QuotientOrder):
        if roster is None:
            raise InvalidInputError("a quotient order needs the roster of its axis for labels")
        return quotient_to_dot(order, roster)
    raise InvalidInputError(f"cannot export {type(order).__name__} as DOT")
