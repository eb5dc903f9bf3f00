"""JSON and text renderings of traces, reports, completion results and certificates.

Every top-level JSON document carries ``"schema": "shirshov/1"``.  Words are
lists of generator names; polynomials are canonical strings.
"""

from __future__ import annotations

from typing import Any, Dict, List

from .freealg import Polynomial
from .gsb import CompletionResult, GsbReport, Witness
from .parsing import format_polynomial, format_word, parse_polynomial
from .rewrite import ReductionStep, ReductionTrace, RuleSet
from .solver import InverseCertificate, NoSolutionUpToDegree, TrivialRing

SCHEMA = "shirshov/1"


def _names(w, P) -> List[str]:
    return [P.alphabet[x] for x in w]


def _ids(names, P):
    index = {n: i for i, n in enumerate(P.alphabet)}
    return tuple(index[n] for n in names)


def step_to_dict(s: ReductionStep, P: RuleSet) -> Dict[str, Any]:
    return {"rule": s.rule_index, "left": _names(s.left, P), "right": _names(s.right, P),
            "coefficient": s.coefficient, "word": _names(s.word, P)}


def trace_to_dict(t: ReductionTrace, P: RuleSet) -> Dict[str, Any]:
    return {"input": format_polynomial(t.input, P),
            "output": format_polynomial(t.output, P),
            "steps": [step_to_dict(s, P) for s in t.steps]}


def trace_from_dict(d: Dict[str, Any], P: RuleSet) -> ReductionTrace:
    steps = tuple(ReductionStep(s["rule"], _ids(s["left"], P), _ids(s["right"], P),
                                int(s["coefficient"]), _ids(s["word"], P)) for s in d["steps"])
    return ReductionTrace(parse_polynomial(d["input"], P), steps, parse_polynomial(d["output"], P))


def trace_lines(t: ReductionTrace, P: RuleSet) -> List[str]:
    lines = []
    for k, s in enumerate(t.steps, 1):
        rule = format_polynomial(P[s.rule_index].poly, P)
        lines.append(f"step {k}: rule {s.rule_index} [{rule}] "
                     f"left={format_word(s.left, P)} right={format_word(s.right, P)} "
                     f"coefficient={s.coefficient} word={format_word(s.word, P)}")
    return lines


def rules_to_list(P: RuleSet) -> List[str]:
    return [format_polynomial(r.poly, P) for r in P.rules]


def report_to_dict(report: GsbReport, P: RuleSet) -> Dict[str, Any]:
    entries = []
    for e in report.entries:
        c = e.composition
        entries.append({
            "kind": c.kind.value,
            "ambiguity": _names(c.ambiguity, P),
            "rule_left": c.rule_left,
            "rule_right": c.rule_right,
            "left": _names(c.left, P),
            "right": _names(c.right, P),
            "polynomial": format_polynomial(c.poly, P),
            "residual": format_polynomial(e.residual, P),
            "trace": trace_to_dict(e.trace, P),
        })
    return {"schema": SCHEMA, "kind": "gsb_report", "is_gsb": report.is_gsb,
            "rules": rules_to_list(P), "compositions": entries}


def witness_to_list(w: Witness, P: RuleSet) -> List[Dict[str, Any]]:
    return [{"coefficient": c, "left": _names(a, P), "relation": j, "right": _names(b, P)}
            for (a, j, b), c in sorted(w.items(), key=lambda kv: (kv[0][1], kv[0][0], kv[0][2]))]


def completion_to_dict(res: CompletionResult) -> Dict[str, Any]:
    P = res.rules
    d: Dict[str, Any] = {
        "schema": SCHEMA,
        "kind": "completion",
        "outcome": res.outcome.value,
        "trivial_ring": res.trivial,
        "reason": res.reason,
        "original": rules_to_list(res.original),
        "rules": rules_to_list(P),
        "provenance": [{"rule": k, "combination": witness_to_list(w, res.original)}
                       for k, w in enumerate(res.witnesses)],
        "added": [{
            "polynomial": format_polynomial(a.poly, P),
            "composition": {
                "kind": a.composition.kind.value,
                "ambiguity": _names(a.composition.ambiguity, P),
                "rule_left": a.composition.rule_left,
                "rule_right": a.composition.rule_right,
            },
            "rules_at_time": rules_to_list(a.rules_at_time),
            "trace": trace_to_dict(a.trace, a.rules_at_time),
        } for a in res.added],
    }
    if res.constant is not None:
        d["constant"] = res.constant
    if res.residual is not None:
        d["residual"] = format_polynomial(res.residual, P)
    return d


def inverse_to_dict(result, P: RuleSet) -> Dict[str, Any]:
    d: Dict[str, Any] = {"schema": SCHEMA, "kind": "inverse",
                         "element": format_polynomial(result.element, P)}
    if isinstance(result, InverseCertificate):
        d.update(status="found", inverse=format_polynomial(result.inverse, P),
                 degree_bound=result.degree_bound,
                 left_trace=trace_to_dict(result.left_trace, P),
                 right_trace=trace_to_dict(result.right_trace, P))
    elif isinstance(result, NoSolutionUpToDegree):
        d.update(status="no_solution_up_to_degree", degree_bound=result.degree_bound)
    elif isinstance(result, TrivialRing):
        d.update(status="trivial_ring", inverse="0")
    return d


def membership_to_dict(p: Polynomial, member: bool, trace: ReductionTrace, P: RuleSet):
    return {"schema": SCHEMA, "kind": "membership", "polynomial": format_polynomial(p, P),
            "member": member, "normal_form": format_polynomial(trace.output, P),
            "trace": trace_to_dict(trace, P)}


def nf_to_dict(trace: ReductionTrace, mode: str, P: RuleSet):
    return {"schema": SCHEMA, "kind": "normal_form", "mode": mode,
            "normal_form": format_polynomial(trace.output, P), "trace": trace_to_dict(trace, P)}
