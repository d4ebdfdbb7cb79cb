"""Witness-carrying verdicts and their JSON form."""

from dataclasses import dataclass, field
from typing import Any, Optional

from .finset import FiniteFunction
from .spans import Span, SpanMorphism


@dataclass(frozen=True)
class AxiomReport:
    subject: str
    holds: bool
    witness: Optional[Any] = None
    counterexample: Optional[Any] = None
    bounded: bool = False
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.holds and self.witness is None:
            raise ValueError("a report that holds must carry a witness")
        if not self.holds and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {
            "subject": self.subject,
            "holds": self.holds,
            "bounded": self.bounded,
            "witness": to_jsonable(self.witness),
            "counterexample": to_jsonable(self.counterexample),
            "details": to_jsonable(self.details),
        }


def passed(subject, witness, bounded=False, **details):
    return AxiomReport(subject, True, witness=witness, bounded=bounded, details=details)


def failed(subject, counterexample, bounded=False, **details):
    return AxiomReport(subject, False, counterexample=counterexample, bounded=bounded,
                       details=details)


def combine(subject, reports, bounded=None):
    """Conjunction of several reports; the first failure becomes the counterexample."""
    reports = list(reports)
    if bounded is None:
        bounded = any(r.bounded for r in reports)
    bad = [r for r in reports if not r.holds]
    if bad:
        return failed(subject, {"failed": bad[0].subject,
                                "counterexample": to_jsonable(bad[0].counterexample)},
                      bounded=bounded, parts=[r.subject for r in reports])
    return passed(subject, [r.witness for r in reports], bounded=bounded,
                  parts=[r.subject for r in reports])


def span_json(R):
    return {"src": R.src.size, "tgt": R.tgt.size, "apex": R.apex.size,
            "left": list(R.left.table), "right": list(R.right.table)}


def to_jsonable(obj):
    """Plain JSON structure; spans and cells become their tables."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, SpanMorphism):
        return {"kind": "cell", "source": span_json(obj.source),
                "target": span_json(obj.target), "map": list(obj.map.table)}
    if isinstance(obj, Span):
        return {"kind": "span", **span_json(obj)}
    if isinstance(obj, FiniteFunction):
        return {"kind": "function", "dom": obj.dom.size, "cod": obj.cod.size,
                "table": list(obj.table)}
    if isinstance(obj, AxiomReport):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "__dataclass_fields__"):
        return {"kind": type(obj).__name__,
                **{k: to_jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__}}
    return repr(obj)
