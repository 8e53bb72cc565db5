"""Batch command line: ``trifca <command> [options]``.

Every command except ``compose`` and ``export-dot`` writes a JSON report
(canonical key order, SHA-256 digests of its input files). Exit status is 0
on success, 1 when the inputs are rejected or a check fails, and 2 for usage
errors and unreadable files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Sequence, TextIO

from .context import DEFAULT_MAX_BRUTE, FormalContext, all_concepts_bruteforce, concept_lattice
from .errors import FCAError, InconsistentInputError
from .formats import (
    dump_json,
    export_dot,
    implication_record,
    parse_cxt,
    parse_triadic,
    report_document,
    serialize_cxt,
    serialize_triadic,
)
from .implications import (
    ConditionalBaseTable,
    build_implication_aggregate,
    conditional_base_composed,
    conditional_base_generic,
    triadic_base_composed,
    triadic_base_generic,
)
from .meta import (
    MetaModel,
    compose,
    conditional_context,
    conditional_from_composition,
    pad_for_extent_iso,
    pad_for_modus_iso,
    verify_extent_iso,
    verify_modus_iso,
)
from .stem_base import next_closure, stem_base_bruteforce
from .triadic import (
    TriadicContext,
    all_tri_concepts,
    geometric_structure,
    quotient_order,
    tri_concepts_bruteforce,
)

AXES = {"extent": 1, "intent": 2, "modus": 3}


class UsageError(Exception):
    """Bad flag combination or unreadable input file (exit status 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would call sys.exit itself
        raise UsageError(message)


class _Inputs:
    """Reads input files once, remembering raw bytes for the report digest."""

    def __init__(self):
        self.raw: dict[str, bytes] = {}

    def read(self, flag: str, path: str) -> str:
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read --{flag} {path}: {exc.strerror}") from None
        self.raw[flag] = data
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError:
            raise UsageError(f"--{flag} {path} is not UTF-8 text") from None

    def cxt(self, flag: str, path: str) -> FormalContext:
        return parse_cxt(self.read(flag, path))


def _names(roster: Sequence[str], idx) -> list[str]:
    return [roster[i] for i in sorted(idx)]


def _model(args, inputs: _Inputs) -> MetaModel:
    if not (args.k1 and args.k2):
        raise UsageError("--k1 and --k2 are both required")
    return MetaModel(inputs.cxt("k1", args.k1), inputs.cxt("k2", args.k2))


def _triadic(args, inputs: _Inputs) -> tuple[TriadicContext, MetaModel | None]:
    """The triadic context from --tri, or composed from --k1/--k2."""
    if args.tri and (args.k1 or args.k2):
        raise UsageError("give either --tri or --k1/--k2, not both")
    if args.tri:
        return parse_triadic(inputs.read("tri", args.tri)), None
    mm = _model(args, inputs)
    return compose(mm), mm


def _conditions(args, roster: Sequence[str]) -> list[int]:
    if args.conditions is None:
        raise UsageError("--conditions is required")
    names = [c.strip() for c in args.conditions.split(",") if c.strip()]
    missing = [c for c in names if c not in roster]
    if missing:
        raise UsageError(f"unknown condition(s): {', '.join(missing)}")
    return sorted({roster.index(c) for c in names})


def _cross_rows(ctx: FormalContext) -> list[str]:
    return serialize_cxt(ctx).split("\n")[4 + ctx.n_objects + ctx.n_attributes : -1]


def _concepts_payload(ctx: FormalContext, args) -> dict:
    lattice = concept_lattice(ctx)
    if args.oracle:
        brute = all_concepts_bruteforce(ctx, args.max_brute)
        if brute != set(lattice.concepts):
            raise InconsistentInputError("concept enumeration disagrees with the brute-force oracle")
    return {
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "concepts": [
            {"id": i, "extent": ctx.object_names(c.extent), "intent": ctx.attribute_names(c.intent)}
            for i, c in enumerate(lattice.concepts)
        ],
        "covers": [list(e) for e in lattice.edges],
    }


def cmd_concepts(args, inputs: _Inputs) -> dict:
    return _concepts_payload(_require_ctx(args, inputs), args)


def _require_ctx(args, inputs: _Inputs) -> FormalContext:
    if not args.ctx:
        raise UsageError("--ctx is required")
    return inputs.cxt("ctx", args.ctx)


def cmd_stembase(args, inputs: _Inputs) -> dict:
    ctx = _require_ctx(args, inputs)
    intents, base = next_closure(ctx)
    if args.oracle and stem_base_bruteforce(ctx, args.max_brute) != base:
        raise InconsistentInputError("stem base disagrees with the brute-force pseudo-intent oracle")
    return {
        "attributes": list(ctx.attributes),
        "intents": [_names(ctx.attributes, b) for b in intents],
        "implications": [implication_record(imp, ctx.attributes) for imp in base],
    }


def cmd_tri_concepts(args, inputs: _Inputs) -> dict:
    K, _ = _triadic(args, inputs)
    concepts = all_tri_concepts(K, args.max_brute)
    if args.oracle and tri_concepts_bruteforce(K, args.max_brute) != concepts:
        raise InconsistentInputError("tri-concept enumeration disagrees with the brute-force oracle")
    geo = geometric_structure(concepts)
    orders = {}
    for label, axis in AXES.items():
        q = quotient_order(concepts, axis)
        orders[label] = {
            "classes": [
                {"id": k, "component": _names(K.roster(axis), comp), "concepts": list(members)}
                for k, (comp, members) in enumerate(q.classes)
            ],
            "covers": [list(e) for e in q.edges],
        }
    return {
        "concepts": [
            {"id": i, "extent": ex, "intent": it, "modus": mo}
            for i, (ex, it, mo) in enumerate(c.names(K) for c in concepts)
        ],
        "orders": orders,
        "class_counts": {label: len(geo.partitions[axis]) for label, axis in AXES.items()},
    }


def cmd_conditional(args, inputs: _Inputs) -> dict:
    K, mm = _triadic(args, inputs)
    cs = _conditions(args, K.conditions)
    ctx = conditional_from_composition(mm, cs) if mm is not None else conditional_context(K, cs)
    return {
        "conditions": _names(K.conditions, cs),
        "objects": list(ctx.objects),
        "attributes": list(ctx.attributes),
        "rows": _cross_rows(ctx),
        "source": "composition" if mm is not None else "triadic",
    }


def _table_payload(table: ConditionalBaseTable, names: Sequence[str], conds: Sequence[str]) -> list[dict]:
    out = []
    for k, e in enumerate(table.entries):
        cnames = _names(conds, e.conditions)
        out.append(
            {
                "index": k,
                "conditions": cnames,
                "attributes": None if e.attributes is None else _names(names, e.attributes),
                "reused_from": e.reused_from,
                "implications": [implication_record(imp, names, cnames) for imp in e.base],
            }
        )
    return out


def _base_table(args, inputs: _Inputs, composed: Callable, generic: Callable) -> tuple[TriadicContext, ConditionalBaseTable]:
    K, mm = _triadic(args, inputs)
    if mm is None:
        return K, generic(K)
    table = composed(mm, validate=args.oracle)
    if args.oracle:
        plain = generic(K)
        if [e.base for e in table.conditional()] != [e.base for e in plain.entries]:
            raise InconsistentInputError("composed bases disagree with plain Next Closure per condition set")
    return K, table


def cmd_triadic_base(args, inputs: _Inputs) -> dict:
    K, table = _base_table(args, inputs, triadic_base_composed, triadic_base_generic)
    return {"seeded": table.seeded, "entries": _table_payload(table, K.attributes, K.conditions)}


def cmd_conditional_base(args, inputs: _Inputs) -> dict:
    K, table = _base_table(args, inputs, conditional_base_composed, conditional_base_generic)
    agg = build_implication_aggregate(K, table)
    return {
        "seeded": table.seeded,
        "entries": _table_payload(table, K.attributes, K.conditions),
        "aggregate": [
            dict(implication_record(imp, K.attributes), holds_under=_names(K.conditions, agg.conditions_for(imp)))
            for imp in agg.implications
        ],
    }


def _verdict(v) -> dict[str, Any]:
    return {"status": v.status, "witness": None if v.witness is None else sorted(v.witness), "detail": v.detail}


def cmd_check_iso(args, inputs: _Inputs) -> dict:
    mm = _model(args, inputs)
    out: dict[str, Any] = {}
    for label, pad, verify in (
        ("extent", pad_for_extent_iso, verify_extent_iso),
        ("modus", pad_for_modus_iso, verify_modus_iso),
    ):
        padded, report = pad(mm)
        raw, fixed = verify(mm), verify(padded)
        roster = padded.objects if label == "extent" else padded.conditions
        out[label] = {
            "unpadded": _verdict(raw),
            "padded": dict(_verdict(fixed), witness=None if fixed.witness is None else _names(roster, fixed.witness)),
            "padding": {
                "added_attribute": report.added_attribute,
                "added_meta_attribute": report.added_meta_attribute,
                "added_object": report.added_object,
                "reasons": list(report.reasons),
            },
        }
        if raw.witness is not None:
            unpadded_roster = mm.objects if label == "extent" else mm.conditions
            out[label]["unpadded"]["witness"] = _names(unpadded_roster, raw.witness)
    return out


def cmd_compose(args, inputs: _Inputs) -> str:
    return serialize_triadic(compose(_model(args, inputs)))


def cmd_export_dot(args, inputs: _Inputs) -> str:
    if args.ctx:
        if args.tri or args.k1 or args.k2:
            raise UsageError("give either --ctx or a triadic input, not both")
        return export_dot(concept_lattice(inputs.cxt("ctx", args.ctx)))
    K, _ = _triadic(args, inputs)
    axis = AXES[args.axis]
    return export_dot(quotient_order(all_tri_concepts(K, args.max_brute), axis), K.roster(axis))


COMMANDS: dict[str, tuple[Callable, str]] = {
    "concepts": (cmd_concepts, "concepts and cover edges of a .cxt context"),
    "stembase": (cmd_stembase, "intents and stem base via Next Closure"),
    "compose": (cmd_compose, "triadic document from k1 (objects x attributes) and k2 (attributes x meta-attributes)"),
    "tri-concepts": (cmd_tri_concepts, "tri-concepts with their extent, intent and modus orders"),
    "conditional": (cmd_conditional, "conditional context for a set of conditions"),
    "triadic-base": (cmd_triadic_base, "stem bases for every nonempty condition set"),
    "conditional-base": (cmd_conditional_base, "stem bases per single condition plus the implication aggregate"),
    "check-iso": (cmd_check_iso, "extent and modus isomorphism checks, before and after padding"),
    "export-dot": (cmd_export_dot, "DOT line diagram of a concept lattice or a quotient order"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trifca", description="Dyadic and triadic formal concept analysis.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--k1", help="objects x attributes context (.cxt)")
        p.add_argument("--k2", help="attributes x meta-attributes context (.cxt)")
        p.add_argument("--ctx", help="dyadic context (.cxt)")
        p.add_argument("--tri", help="triadic document (JSON)")
        p.add_argument("--conditions", help="comma-separated condition names")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--oracle", action="store_true", help="cross-check against brute-force oracles")
        p.add_argument("--max-brute", type=int, default=DEFAULT_MAX_BRUTE, help="capacity guard for exhaustive steps")
        if name == "export-dot":
            p.add_argument("--axis", choices=sorted(AXES), default="extent", help="quotient order to draw")
    return parser


def run_cli(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        if args.max_brute < 0:
            raise UsageError("--max-brute must be non-negative")
        inputs = _Inputs()
        handler = COMMANDS[args.command][0]
        result = handler(args, inputs)
        text = result if isinstance(result, str) else dump_json(report_document(args.command, inputs.raw, result))
        if args.out:
            try:
                Path(args.out).write_text(text, encoding="utf-8")
            except OSError as exc:
                raise UsageError(f"cannot write --out {args.out}: {exc.strerror}") from None
        else:
            stdout.write(text)
        return 0
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"trifca: usage error: {exc}", file=stderr)
        return 2
    except FCAError as exc:
        print(f"trifca: error: {exc}", file=stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())
