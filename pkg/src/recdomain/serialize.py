"""JSON and CSV mappings for the public data types.

Complex numbers travel as [re, im] pairs; polynomials as arrays of pairs,
ascending degree.  +infinity is emitted as the string "inf" so every
report stays strict JSON.
"""

from __future__ import annotations

import csv
import json
import math
import sys

from .coefficients import RationalIndexFunction
from .domain import DomainReport
from .engine import RecurrenceSpec, SequenceWindow
from .errors import SpecValidationError
from .frobenius import ODESpec
from .heun import HeunParams
from .poly import Polynomial
from .verify import DominationReport


def complex_to_pair(z: complex):
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(obj) -> complex:
    if (not isinstance(obj, (list, tuple)) or len(obj) != 2
            or not all(isinstance(v, (int, float)) for v in obj)):
        raise SpecValidationError(f"expected a [re, im] pair, got {obj!r}")
    return complex(obj[0], obj[1])


def number_out(x: float):
    return "inf" if math.isinf(x) else x


def poly_to_pairs(p: Polynomial):
    return [complex_to_pair(c) for c in p.coeffs]


def pairs_to_poly(obj) -> Polynomial:
    if not isinstance(obj, list):
        raise SpecValidationError(f"expected an array of [re, im] pairs, got {obj!r}")
    return Polynomial([pair_to_complex(v) for v in obj])


def ratfn_to_dict(f: RationalIndexFunction):
    return {"num": poly_to_pairs(f.numerator),
            "den": poly_to_pairs(f.denominator),
            "n_min": f.n_min}


def dict_to_ratfn(obj) -> RationalIndexFunction:
    if not isinstance(obj, dict) or not {"num", "den"} <= set(obj):
        raise SpecValidationError("coefficient entries need 'num' and 'den' arrays")
    n_min = obj.get("n_min", 0)
    if not isinstance(n_min, int):
        raise SpecValidationError("'n_min' must be an integer")
    return RationalIndexFunction(pairs_to_poly(obj["num"]),
                                 pairs_to_poly(obj["den"]), n_min)


def spec_to_dict(spec: RecurrenceSpec):
    return {"k": spec.k, "coeffs": [ratfn_to_dict(f) for f in spec.coefficients]}


def dict_to_spec(obj) -> RecurrenceSpec:
    if not isinstance(obj, dict) or "k" not in obj or "coeffs" not in obj:
        raise SpecValidationError("a recurrence file needs 'k' and 'coeffs'")
    if not isinstance(obj["k"], int) or not isinstance(obj["coeffs"], list):
        raise SpecValidationError("'k' must be an integer and 'coeffs' an array")
    return RecurrenceSpec(obj["k"], tuple(dict_to_ratfn(c) for c in obj["coeffs"]))


def ode_to_dict(ode: ODESpec):
    return {"order": ode.order,
            "coeffs": [poly_to_pairs(p) for p in ode.coefficients]}


def dict_to_ode(obj) -> ODESpec:
    if not isinstance(obj, dict) or "order" not in obj or "coeffs" not in obj:
        raise SpecValidationError("an ODE file needs 'order' and 'coeffs'")
    order = obj["order"]
    coeffs = obj["coeffs"]
    if not isinstance(order, int) or not isinstance(coeffs, list):
        raise SpecValidationError("'order' must be an integer and 'coeffs' an array")
    if len(coeffs) != order + 1:
        raise SpecValidationError(
            f"order {order} needs {order + 1} coefficient arrays, got {len(coeffs)}")
    return ODESpec(tuple(pairs_to_poly(p) for p in coeffs))


_HEUN_FIELDS = ("a", "alpha", "beta", "gamma", "delta", "q")


def heun_params_to_dict(params: HeunParams):
    out = {name: complex_to_pair(getattr(params, name)) for name in _HEUN_FIELDS}
    out["epsilon_h"] = complex_to_pair(params.epsilon_h)
    return out


def dict_to_heun_params(obj) -> HeunParams:
    """Accepts [re, im] pairs or plain numbers for each parameter."""
    if not isinstance(obj, dict) or "a" not in obj:
        raise SpecValidationError("a Heun parameter object needs at least 'a'")

    def fetch(name, default):
        value = obj.get(name, default)
        if isinstance(value, (int, float)):
            return complex(value)
        return pair_to_complex(value)

    return HeunParams(fetch("a", 0), fetch("alpha", 1), fetch("beta", 1),
                      fetch("gamma", 1), fetch("delta", 1), fetch("q", 0))


def window_to_json(window: SequenceWindow):
    return [complex_to_pair(v) for v in window.values]


def window_to_csv(window: SequenceWindow, fileobj):
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(["index", "re", "im"])
    for n, v in enumerate(window.values):
        v = complex(v)
        writer.writerow([n, repr(v.real), repr(v.imag)])


def report_to_dict(report: DomainReport):
    return {
        "limits": [complex_to_pair(z) for z in report.limits],
        "abs_radius": number_out(report.abs_radius),
        "pp_radius": number_out(report.pp_radius),
        "characteristic_roots": [complex_to_pair(z) for z in report.characteristic_roots],
        "smallest_roots_tied": report.smallest_roots_tied,
    }


def domination_to_dict(report: DominationReport):
    return {
        "tail_index": report.tail_index,
        "epsilon": report.epsilon,
        "checked_up_to": report.checked_up_to,
        "min_slack": report.min_slack,
        "violations": list(report.violations),
        "inflated_radius": number_out(report.inflated_radius),
    }


def boundary_to_csv(samples, fileobj):
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(["theta", "re", "im"])
    for theta, re, im in samples:
        writer.writerow([repr(theta), repr(re), repr(im)])


def load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecValidationError(f"cannot read JSON from {path}: {exc}") from exc


def dump_json(obj, fileobj=None) -> None:
    fileobj = fileobj or sys.stdout
    json.dump(obj, fileobj, indent=2, sort_keys=True)
    fileobj.write("\n")
