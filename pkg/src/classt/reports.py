"""Report assembly and rendering.

Every command produces one report dictionary with the fixed shape

    {"schema_version", "id", "inputs", "outputs", "diagnostics"}

where diagnostics always carries the six named condition tags
("hom", "action", "div", "man-cond", "beta>1", "adjunction-residual"),
passing vacuously where a tag does not apply.  Rationals are rendered
as "p/q" strings, singularities as {"order": r, "weights": [q1, q2]}.
Rendering is deterministic: reports are plain dicts assembled in a
fixed order, so identical inputs and seeds give byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any

from .arith import as_fraction, hj_evaluate
from .birational import blowup_at_R2, blowup_description, roundtrip_check
from .compactify import (
    CompactificationModel,
    RootConfig,
    build_cyclic,
    build_rdp,
    enumerate_weights,
    minimal_resolution,
    topology,
)
from .errors import BadInput, ClassTError
from .quotients import (
    QuotientSingularity,
    detect_class_T,
    hj_resolution,
    monomial_str,
    normalize,
)
from .sweep import run_all
from .tianyau import check_hypotheses

SCHEMA_VERSION = "1.0"

DIAGNOSTIC_TAGS = ("hom", "action", "div", "man-cond", "beta>1", "adjunction-residual")

_NA = "not applicable to this command"


def rational_str(x: Fraction) -> str:
    f = as_fraction(x)
    return f"{f.numerator}/{f.denominator}"


def sing_json(s: QuotientSingularity) -> dict:
    return {"order": s.order, "weights": list(s.weights)}


def diag(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": passed, "detail": detail}


def na_diags(*names: str) -> list[dict]:
    return [diag(name, True, _NA) for name in names]


@dataclass
class CommandReport:
    data: dict
    exit_code: int
    dot: str | None = None


def assemble(case_id: str, inputs: dict, outputs: dict, diagnostics: list[dict]) -> dict:
    seen = [d["name"] for d in diagnostics]
    missing = [t for t in DIAGNOSTIC_TAGS if t not in seen]
    if missing or len(seen) != len(DIAGNOSTIC_TAGS):
        raise BadInput(f"diagnostics must cover exactly the six tags; missing {missing}")
    ordered = sorted(diagnostics, key=lambda d: DIAGNOSTIC_TAGS.index(d["name"]))
    return {
        "schema_version": SCHEMA_VERSION,
        "id": case_id,
        "inputs": inputs,
        "outputs": outputs,
        "diagnostics": ordered,
    }


def _cyclic_diagnostics(
    d: int, n: int, m: int, c: int, a: int, roots: RootConfig | None
) -> tuple[list[dict], CompactificationModel | None]:
    """Evaluate the named conditions; build the model when all pass."""
    if d < 1 or n < 1 or c < 1:
        raise BadInput(f"d, n, c must be positive, got ({d}, {n}, {c})")
    if gcd(m, n) != 1:
        raise BadInput(f"m = {m} must be prime to n = {n}")
    degree = d * n * c
    b = degree - a
    m_c = m % n if n > 1 else 1
    diags = []
    hom_ok = 1 <= a <= degree - 1
    diags.append(
        diag("hom", hom_ok, f"a + b = {a} + {b} = {degree} = d*n*c with positive weights")
        if hom_ok
        else diag("hom", False, f"a = {a} outside 1..{degree - 1}, so b = {b} is not positive")
    )
    action_ok = (a * m_c - c) % n == 0
    diags.append(
        diag("action", action_ok, f"a*m = {a}*{m_c} == c = {c} (mod {n})")
        if action_ok
        else diag("action", False, f"a*m = {a}*{m_c} != c = {c} (mod {n})")
    )
    div_ok = gcd(c, n) == 1 and gcd(a, c) == 1
    diags.append(
        diag("div", div_ok, f"gcd(c, n) = gcd({c}, {n}) = 1 and gcd(a, c) = gcd({a}, {c}) = 1")
        if div_ok
        else diag("div", False, f"gcd(c, n) = {gcd(c, n)}, gcd(a, c) = {gcd(a, c)}")
    )
    if roots is None:
        diags.append(diag("man-cond", True, "no root configuration supplied"))
        man_ok = True
    else:
        man_ok = roots.total == d
        diags.append(
            diag("man-cond", True, f"roots nonzero and distinct, multiplicities sum to d = {d}")
            if man_ok
            else diag("man-cond", False, f"multiplicities sum to {roots.total}, expected d = {d}")
        )
    beta = Fraction(c + n, n)
    diags.append(diag("beta>1", beta > 1, f"beta = (c + n)/n = {rational_str(beta)}"))
    model = None
    if hom_ok and action_ok and div_ok and man_ok and roots is not None:
        model = build_cyclic(d, n, m, c, a, roots)
        res = check_hypotheses(model).adjunction_residual
        diags.append(
            diag(
                "adjunction-residual",
                res == 0,
                f"K.C + C^2 - orbifold Euler side = {rational_str(res)}",
            )
        )
    else:
        diags.append(diag("adjunction-residual", False, "model not constructed"))
    return diags, model


def _model_outputs(model: CompactificationModel) -> dict:
    out = {
        "label": model.label(),
        "ambient": model.ambient.label(),
        "ambient_weights": list(model.ambient.weights),
        "degree": model.degree,
        "beta": rational_str(model.beta),
        "C2": rational_str(model.curve.self_intersection),
        "curve": {
            "self_intersection": rational_str(model.curve.self_intersection),
            "genus": model.curve.genus,
            "orbifold_point_orders": list(model.curve.orbifold_points),
        },
        "equation": model.equation_str(),
        "infinity_singularities": [
            {"label": lbl, **sing_json(s)} for lbl, s in model.infinity_singularities
        ],
        "interior_singularities": [
            {"label": lbl, "type": f"A_{k}"} for lbl, k in model.interior_singularities
        ],
    }
    if model.is_cyclic:
        out["fiber_smooth"] = not model.interior_singularities
        out["roots"] = model.roots.as_text()
    else:
        out["milnor_number"] = model.rdp.milnor_number
        out["milnor_basis"] = [monomial_str(e) for e in model.rdp.milnor_basis]
        out["coefficients"] = [rational_str(v) for v in model.coefficients]
    return out


def classify_report(order: int, weights: tuple[int, int]) -> CommandReport:
    s = QuotientSingularity(order, tuple(weights))
    std = normalize(s)
    found = detect_class_T(std)
    outputs: dict[str, Any] = {
        "given": sing_json(s),
        "normalized": sing_json(std),
        "is_class_t": found is not None,
    }
    if found is None:
        outputs["variant"] = None
        outputs["descriptor"] = None
        outputs["solutions"] = []
    else:
        outputs["variant"] = "A" if found.is_a_type else "cyclic"
        outputs["descriptor"] = {
            "d": found.d,
            "n": found.n,
            "m": found.m,
            "u": found.u,
            "order": found.order,
            "label": found.label(),
        }
        outputs["solutions"] = [list(t) for t in found.solutions]
    diags = na_diags(*DIAGNOSTIC_TAGS)
    data = assemble(
        f"classify-{order}-{weights[0]}-{weights[1]}",
        {"order": order, "weights": list(weights)},
        outputs,
        diags,
    )
    if std.order > 1:
        dot = render_chain_dot(std.label(), hj_resolution(std).entries)
    else:
        dot = "graph resolution_chain {\n}\n"
    return CommandReport(data=data, exit_code=0, dot=dot)


def enumerate_report(d: int, n: int, m: int, c: int) -> CommandReport:
    enum = enumerate_weights(d, n, m, c)
    outputs = {
        "u": enum.u,
        "count": len(enum.pairs),
        "pairs": [{"a": p.a, "b": p.b, "c": p.c} for p in enum.pairs],
        "reduced": [
            {"a": p.a, "b": p.b, "c": p.c, "reduced_from": list(p.reduced_from)}
            for p in enum.reduced
        ],
        "raw_count": enum.raw_count,
    }
    diags = na_diags("hom", "action", "man-cond", "beta>1", "adjunction-residual")
    diags.append(diag("div", True, f"gcd(m, n) = gcd({m}, {n}) = 1, gcd(c, n) = gcd({c}, {n}) = 1"))
    data = assemble(
        f"enumerate-{d}-{n}-{m}-{c}",
        {"d": d, "n": n, "m": m, "c": c},
        outputs,
        diags,
    )
    return CommandReport(data=data, exit_code=0)


def build_cyclic_report(d: int, n: int, m: int, c: int, a: int, roots: RootConfig) -> CommandReport:
    diags, model = _cyclic_diagnostics(d, n, m, c, a, roots)
    inputs = {"d": d, "n": n, "m": m, "c": c, "a": a, "roots": roots.as_text()}
    case_id = f"build-cyclic-{d}-{n}-{m}-{c}-{a}"
    if model is None:
        failed = [x["name"] for x in diags if not x["passed"]]
        data = assemble(case_id, inputs, {"conditions_failed": failed}, diags)
        return CommandReport(data=data, exit_code=1)
    data = assemble(case_id, inputs, _model_outputs(model), diags)
    return CommandReport(data=data, exit_code=0, dot=render_model_dot(model))


def build_rdp_report(ade: str, index: int, coeffs: list | None) -> CommandReport:
    model = build_rdp(ade, index, coeffs)
    diags = na_diags("hom", "action", "div", "man-cond")
    diags.append(diag("beta>1", model.beta > 1, f"beta = {rational_str(model.beta)}"))
    res = check_hypotheses(model).adjunction_residual
    diags.append(
        diag("adjunction-residual", res == 0, f"K.C + C^2 - orbifold Euler side = {rational_str(res)}")
    )
    inputs = {"type": ade, "index": index}
    if coeffs is not None:
        inputs["coeffs"] = [rational_str(v) for v in model.coefficients]
    data = assemble(f"build-rdp-{ade}{index}", inputs, _model_outputs(model), diags)
    ok = model.beta > 1 and res == 0
    return CommandReport(data=data, exit_code=0 if ok else 1, dot=render_model_dot(model))


def check_report(
    d: int, n: int, m: int, c: int, a: int, roots: RootConfig
) -> CommandReport:
    diags, model = _cyclic_diagnostics(d, n, m, c, a, roots)
    inputs = {"d": d, "n": n, "m": m, "c": c, "a": a, "roots": roots.as_text()}
    case_id = f"check-{d}-{n}-{m}-{c}-{a}"
    if model is None:
        failed = [x["name"] for x in diags if not x["passed"]]
        data = assemble(case_id, inputs, {"conditions_failed": failed}, diags)
        return CommandReport(data=data, exit_code=1)
    report = check_hypotheses(model)
    resolved_report = check_hypotheses(minimal_resolution(model))
    outputs = {
        "model": model.label(),
        "beta": rational_str(report.beta),
        "beta_gt_one": report.beta_gt_one,
        "singularities_on_divisor": report.singularities_on_divisor,
        "divisor_almost_ample": report.divisor_almost_ample,
        "divisor_admissible": report.divisor_admissible,
        "C2": rational_str(report.C_squared),
        "decay_rhs": rational_str(report.decay_rhs) if report.decay_rhs is not None else None,
        "adjunction_residual": rational_str(report.adjunction_residual),
        "all_satisfied": report.all_satisfied,
        "after_resolution_all_satisfied": resolved_report.all_satisfied,
    }
    data = assemble(case_id, inputs, outputs, diags)
    return CommandReport(
        data=data,
        exit_code=0 if report.all_satisfied else 1,
        dot=render_model_dot(model),
    )


def birational_report(
    d: int, n: int, m: int, c: int, a: int, roots: RootConfig, samples: int, seed: int
) -> CommandReport:
    diags, model = _cyclic_diagnostics(d, n, m, c, a, roots)
    inputs = {
        "d": d, "n": n, "m": m, "c": c, "a": a,
        "roots": roots.as_text(), "samples": samples, "seed": seed,
    }
    case_id = f"birational-{d}-{n}-{m}-{c}-{a}"
    if model is None:
        failed = [x["name"] for x in diags if not x["passed"]]
        data = assemble(case_id, inputs, {"conditions_failed": failed}, diags)
        return CommandReport(data=data, exit_code=1)
    blow = blowup_at_R2(model)
    desc = blowup_description(model)
    plane_points = (
        normalize(QuotientSingularity(model.c, (model.a, model.n))),
        normalize(QuotientSingularity(model.n, (model.a, model.c))),
    )
    points_match = blow.new_singularities == plane_points
    chi_plus_one = topology(model).chi_Mbar + 1
    euler_ok = desc.euler_characteristic == chi_plus_one
    rt_ok = roundtrip_check(model, samples, seed)
    outputs = {
        "target_plane": desc.base_plane.label(),
        "projection": "[x:y:z:w] -> [x:z:w]",
        "blowup": {
            "chart_actions": [
                {"order": order, "weights": list(ws)} for order, ws in blow.chart_actions
            ],
            "new_singularities": [sing_json(s) for s in blow.new_singularities],
            "exceptional_orbifold_orders": list(blow.exceptional_curve.orbifold_orders),
        },
        "plane_points_match": points_match,
        "description": {
            "base_plane": desc.base_plane.label(),
            "centers": [{"root": rational_str(r), "iterations": k} for r, k in desc.centers],
            "total_blowups": desc.total_blowups,
            "removed_divisors": list(desc.removed_divisors),
            "euler_characteristic": desc.euler_characteristic,
        },
        "euler_count_consistent": euler_ok,
        "roundtrip": {"samples": samples, "seed": seed, "passed": rt_ok},
    }
    data = assemble(case_id, inputs, outputs, diags)
    ok = points_match and euler_ok and rt_ok
    return CommandReport(data=data, exit_code=0 if ok else 1, dot=render_blowup_dot(desc))


def resolve_report(order: int, weights: tuple[int, int]) -> CommandReport:
    s = QuotientSingularity(order, tuple(weights))
    std = normalize(s)
    chain = hj_resolution(s)
    value = hj_evaluate(chain.entries)
    matches = value * std.weights[1] == std.order
    outputs = {
        "given": sing_json(s),
        "normalized": sing_json(std),
        "chain": list(chain.entries),
        "self_intersections": list(chain.self_intersections()),
        "length": len(chain),
        "evaluates_to": rational_str(value),
        "value_matches": matches,
    }
    diags = na_diags(*DIAGNOSTIC_TAGS)
    data = assemble(
        f"resolve-{order}-{weights[0]}-{weights[1]}",
        {"order": order, "weights": list(weights)},
        outputs,
        diags,
    )
    return CommandReport(
        data=data,
        exit_code=0 if matches else 1,
        dot=render_chain_dot(std.label(), chain.entries),
    )


def sweep_report(max_d: int, max_n: int, max_c: int, seed: int) -> CommandReport:
    results = run_all(max_d=max_d, max_n=max_n, max_c=max_c, seed=seed)
    all_passed = all(r.passed for r in results)
    outputs = {
        "parameters": {"max_d": max_d, "max_n": max_n, "max_c": max_c, "seed": seed},
        "suites": [
            {
                "name": r.name,
                "cases": r.cases,
                "failures": r.failure_count,
                "messages": list(r.failures),
            }
            for r in results
        ],
        "all_passed": all_passed,
    }
    by_name = {r.name: r for r in results}
    cond = by_name["adjunction-residual"]
    cond_detail = f"{cond.cases} models re-checked, {cond.failure_count} failures"
    diags = [
        diag("hom", cond.passed, cond_detail),
        diag("action", cond.passed, cond_detail),
        diag("div", cond.passed, cond_detail),
        diag("man-cond", True, _NA),
        diag("beta>1", cond.passed, cond_detail),
        diag("adjunction-residual", cond.passed, cond_detail),
    ]
    data = assemble("sweep", outputs["parameters"], outputs, diags)
    return CommandReport(data=data, exit_code=0 if all_passed else 1)


def render_chain_dot(title: str, entries: tuple[int, ...]) -> str:
    lines = ["graph resolution_chain {", "  rankdir=LR;", f'  label="{title}";']
    for i, b in enumerate(entries):
        lines.append(f'  e{i + 1} [shape=circle, label="-{b}"];')
    for i in range(len(entries) - 1):
        lines.append(f"  e{i + 1} -- e{i + 2};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_model_dot(model: CompactificationModel) -> str:
    lines = ["graph model {", "  rankdir=LR;"]
    curve_label = (
        f"C  C^2={rational_str(model.curve.self_intersection)}"
        f"  beta={rational_str(model.beta)}"
    )
    lines.append(f'  C [shape=box, label="{curve_label}"];')
    for lbl, s in model.infinity_singularities:
        if s.order == 1:
            continue
        lines.append(f'  {lbl} [shape=circle, label="{lbl}: {s.label()}"];')
        lines.append(f"  C -- {lbl};")
    for lbl, k in model.interior_singularities:
        prev = None
        for i in range(k):
            node = f"{lbl}_{i + 1}"
            lines.append(f'  {node} [shape=circle, label="-2"];')
            if prev:
                lines.append(f"  {prev} -- {node};")
            prev = node
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_blowup_dot(desc) -> str:
    lines = ["graph blowup_surface {", "  rankdir=TB;"]
    lines.append(f'  plane [shape=box, label="{desc.base_plane.label()}"];')
    lines.append('  Lx [shape=box, label="(x=0) proper transform, removed"];')
    lines.append('  Lw [shape=box, label="(w=0) proper transform, removed"];')
    lines.append("  plane -- Lx;")
    lines.append("  plane -- Lw;")
    for j, (root, k) in enumerate(desc.centers, start=1):
        prev = "Lx"
        for i in range(1, k + 1):
            node = f"s{j}_{i}"
            self_int = "-1" if i == k else "-2"
            lines.append(f'  {node} [shape=circle, label="{self_int}"];')
            lines.append(f"  {prev} -- {node};")
            prev = node
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_text(report: dict) -> str:
    lines = [f"id: {report['id']}", f"schema: {report['schema_version']}"]
    lines.append("inputs:")
    lines.extend(_dump(report["inputs"], 1))
    lines.append("outputs:")
    lines.extend(_dump(report["outputs"], 1))
    lines.append("diagnostics:")
    for d in report["diagnostics"]:
        mark = "ok  " if d["passed"] else "FAIL"
        lines.append(f"  {mark} [{d['name']}] {d['detail']}")
    return "\n".join(lines) + "\n"


def _dump(value: Any, depth: int) -> list[str]:
    pad = "  " * depth
    lines: list[str] = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, dict):
                lines.append(f"{pad}{k}:")
                lines.extend(_dump(v, depth + 1))
            elif isinstance(v, list) and v and isinstance(v[0], dict):
                lines.append(f"{pad}{k}:")
                for item in v:
                    lines.append(f"{pad}  -")
                    lines.extend(_dump(item, depth + 2))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _scalar(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


_CORPUS_KINDS = ("classify", "enumerate", "build-cyclic", "build-rdp", "check", "birational")


def _run_corpus_case(kind: str, params: dict, seed: int) -> CommandReport:
    if kind == "classify":
        return classify_report(int(params["order"]), tuple(int(w) for w in params["weights"]))
    if kind == "enumerate":
        return enumerate_report(
            int(params["d"]), int(params["n"]), int(params["m"]), int(params.get("c", 1))
        )
    if kind == "build-cyclic":
        return build_cyclic_report(
            int(params["d"]), int(params["n"]), int(params["m"]),
            int(params.get("c", 1)), int(params["a"]),
            RootConfig.parse(str(params["roots"])),
        )
    if kind == "build-rdp":
        coeffs = params.get("coeffs")
        return build_rdp_report(str(params["type"]), int(params["index"]), coeffs)
    if kind == "check":
        return check_report(
            int(params["d"]), int(params["n"]), int(params["m"]),
            int(params.get("c", 1)), int(params["a"]),
            RootConfig.parse(str(params["roots"])),
        )
    if kind == "birational":
        return birational_report(
            int(params["d"]), int(params["n"]), int(params["m"]),
            int(params.get("c", 1)), int(params["a"]),
            RootConfig.parse(str(params["roots"])),
            int(params.get("samples", 25)), int(params.get("seed", seed)),
        )
    raise BadInput(f"unknown corpus kind {kind!r}; expected one of {_CORPUS_KINDS}")


def _subset_mismatches(expected: Any, actual: Any, path: str) -> list[str]:
    if isinstance(expected, dict):
        if not isinstance(actual, dict):
            return [f"{path}: expected object, got {type(actual).__name__}"]
        out = []
        for k, v in expected.items():
            if k not in actual:
                out.append(f"{path}.{k}: missing")
            else:
                out.extend(_subset_mismatches(v, actual[k], f"{path}.{k}"))
        return out
    if expected != actual:
        return [f"{path}: expected {expected!r}, got {actual!r}"]
    return []


def run_corpus(path: str, seed: int) -> CommandReport:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw_lines = [ln.strip() for ln in fh]
    except OSError as exc:
        raise BadInput(f"cannot read corpus file {path}: {exc}") from exc
    results = []
    failed = []
    for lineno, line in enumerate(raw_lines, start=1):
        if not line:
            continue
        try:
            row = json.loads(line)
        except json.JSONDecodeError as exc:
            raise BadInput(f"{path}:{lineno}: invalid JSON: {exc}") from exc
        case_id = str(row.get("id", f"line-{lineno}"))
        try:
            rep = _run_corpus_case(str(row["kind"]), dict(row.get("parameters", {})), seed)
            mismatches = _subset_mismatches(
                row.get("expected", {}), rep.data["outputs"], "outputs"
            )
        except (ClassTError, KeyError, TypeError, ValueError) as exc:
            mismatches = [f"error: {exc}"]
        ok = not mismatches
        if not ok:
            failed.append(case_id)
        results.append({"id": case_id, "ok": ok, "mismatches": mismatches})
    outputs = {
        "cases": len(results),
        "passed": sum(1 for r in results if r["ok"]),
        "failed_ids": failed,
        "results": results,
    }
    diags = na_diags(*DIAGNOSTIC_TAGS)
    data = assemble(f"corpus-{path}", {"corpus": path}, outputs, diags)
    return CommandReport(data=data, exit_code=0 if not failed else 1)
