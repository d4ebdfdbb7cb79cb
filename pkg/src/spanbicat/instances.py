"""JSON instance files: named sets, functions, spans, claimed 2-cells,
comonads and matrices.

    {
      "sets":      {"X": {"size": 2, "labels": ["a", "b"]}, "A": {"size": 3}},
      "functions": {"x": {"dom": "S", "cod": "X", "table": [0, 1, 1]}},
      "spans":     {"R": {"left": "x", "right": "a"}},
      "cells":     {"alpha": {"source": "R", "target": "T", "map": [0, 0, 1]}},
      "comonads":  {"G": {"span": "R"}},
      "matrices":  {"M": {"rows": ["X"], "cols": ["A", "B"], "entries": [["R", "T"]]}}
    }

Anything malformed raises :class:`InstanceError`. A claimed 2-cell whose
table is well formed but does not commute with the legs is kept (unchecked)
so that the checkers can report it.
"""

import json
from dataclasses import dataclass, field

from .direct_sums import SpanMatrix
from .errors import SpanError
from .finset import FiniteFunction, FiniteSet
from .spans import Span, SpanMorphism

SECTIONS = ("sets", "functions", "spans", "cells", "comonads", "matrices")


class InstanceError(SpanError, ValueError):
    pass


@dataclass
class Instance:
    sets: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)
    spans: dict = field(default_factory=dict)
    cells: dict = field(default_factory=dict)
    comonads: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)

    def span(self, name):
        try:
            return self.spans[name]
        except KeyError:
            raise InstanceError(f"no span named {name!r}") from None

    def matrix(self, name):
        try:
            return self.matrices[name]
        except KeyError:
            raise InstanceError(f"no matrix named {name!r}") from None

    def set(self, name):
        try:
            return self.sets[name]
        except KeyError:
            raise InstanceError(f"no set named {name!r}") from None


def _ref(table, name, kind, where):
    if not isinstance(name, str) or name not in table:
        raise InstanceError(f"{where}: unknown {kind} {name!r}")
    return table[name]


def _int_list(v, where):
    if not isinstance(v, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in v):
        raise InstanceError(f"{where}: expected a list of integers")
    return v


def _section(data, key):
    sec = data.get(key, {})
    if not isinstance(sec, dict):
        raise InstanceError(f"section {key!r} must be an object")
    return sec


def parse_instance(data):
    if not isinstance(data, dict):
        raise InstanceError("an instance must be a JSON object")
    unknown = sorted(set(data) - set(SECTIONS))
    if unknown:
        raise InstanceError(f"unknown sections: {', '.join(unknown)}")
    inst = Instance()
    for name, entry in sorted(_section(data, "sets").items()):
        if isinstance(entry, int) and not isinstance(entry, bool):
            entry = {"size": entry}
        if not isinstance(entry, dict) or not isinstance(entry.get("size"), int):
            raise InstanceError(f"set {name!r}: expected {{\"size\": n}}")
        try:
            inst.sets[name] = FiniteSet(entry["size"], entry.get("labels"))
        except (ValueError, TypeError) as exc:
            raise InstanceError(f"set {name!r}: {exc}") from None

    for name, entry in sorted(_section(data, "functions").items()):
        where = f"function {name!r}"
        if not isinstance(entry, dict):
            raise InstanceError(f"{where}: expected an object")
        dom = _ref(inst.sets, entry.get("dom"), "set", where)
        cod = _ref(inst.sets, entry.get("cod"), "set", where)
        table = _int_list(entry.get("table"), where)
        try:
            inst.functions[name] = FiniteFunction(dom, cod, tuple(table))
        except SpanError as exc:
            raise InstanceError(f"{where}: {exc}") from None

    for name, entry in sorted(_section(data, "spans").items()):
        where = f"span {name!r}"
        if not isinstance(entry, dict):
            raise InstanceError(f"{where}: expected an object")
        left = _ref(inst.functions, entry.get("left"), "function", where)
        right = _ref(inst.functions, entry.get("right"), "function", where)
        try:
            inst.spans[name] = Span(left, right)
        except SpanError as exc:
            raise InstanceError(f"{where}: {exc}") from None

    for name, entry in sorted(_section(data, "cells").items()):
        where = f"cell {name!r}"
        if not isinstance(entry, dict):
            raise InstanceError(f"{where}: expected an object")
        source = _ref(inst.spans, entry.get("source"), "span", where)
        target = _ref(inst.spans, entry.get("target"), "span", where)
        table = _int_list(entry.get("map"), where)
        if len(table) != source.apex.size or any(not 0 <= v < target.apex.size for v in table):
            raise InstanceError(f"{where}: map is not a function between the apexes")
        if source.src != target.src or source.tgt != target.tgt:
            raise InstanceError(f"{where}: source and target are not parallel")
        inst.cells[name] = SpanMorphism.unchecked(source, target, table)

    for name, entry in sorted(_section(data, "comonads").items()):
        where = f"comonad {name!r}"
        ref = entry.get("span") if isinstance(entry, dict) else entry
        G = _ref(inst.spans, ref, "span", where)
        if G.src != G.tgt:
            raise InstanceError(f"{where}: carrier must be an endospan")
        inst.comonads[name] = G

    for name, entry in sorted(_section(data, "matrices").items()):
        where = f"matrix {name!r}"
        if not isinstance(entry, dict):
            raise InstanceError(f"{where}: expected an object")
        rows = [_ref(inst.sets, r, "set", where) for r in entry.get("rows", [])]
        cols = [_ref(inst.sets, c, "set", where) for c in entry.get("cols", [])]
        entries = entry.get("entries")
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise InstanceError(f"{where}: entries must be a list of rows")
        grid = [[_ref(inst.spans, e, "span", where) for e in row] for row in entries]
        try:
            inst.matrices[name] = SpanMatrix(rows, cols, grid)
        except SpanError as exc:
            raise InstanceError(f"{where}: {exc}") from None
    return inst


def load_instance(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return parse_instance(data)
