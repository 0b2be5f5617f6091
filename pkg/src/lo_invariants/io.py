"""JSON file formats for states and unitaries.

State::

    {"n": 2, "m": 2, "convention": "ket",
     "amplitudes": [{"occ": [1, 1], "re": "1", "im": "0"}]}

Unitary (row-major, entry [j][k] = U_jk)::

    {"m": 2, "entries": [[{"re": "1/2", "im": "1/2"}, ...], ...]}

Scalars are strings: ``p/q``, integers or decimals. The exact backend reads
them as Fractions, the float backend as floats.
"""

from __future__ import annotations

import json
from pathlib import Path

from .fock import Convention, FockState
from .lo_action import ModeUnitary
from .scalars import format_scalar, is_exact, make_scalar, to_exact

_STATE_KEYS = {"n", "m", "convention", "amplitudes"}
_AMP_KEYS = {"occ", "re", "im"}
_UNITARY_KEYS = {"m", "entries"}
_ENTRY_KEYS = {"re", "im"}


def _load(source):
    if isinstance(source, dict):
        return source
    try:
        return json.loads(Path(source).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"{source}: not valid JSON ({exc})") from exc


def _check_keys(obj, allowed, required, what):
    if not isinstance(obj, dict):
        raise ValueError(f"{what} must be a JSON object")
    unknown = set(obj) - allowed
    if unknown:
        raise ValueError(f"unknown field(s) in {what}: {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ValueError(f"missing field(s) in {what}: {sorted(missing)}")


def _scalar(record, exact, what):
    _check_keys(record, _ENTRY_KEYS, {"re"}, what)
    return make_scalar(str(record["re"]), str(record.get("im", "0")), exact)


def state_from_dict(obj: dict, exact: bool = False) -> FockState:
    _check_keys(obj, _STATE_KEYS, {"n", "m", "amplitudes"}, "state")
    n, m = obj["n"], obj["m"]
    if not (isinstance(n, int) and isinstance(m, int)) or n < 0 or m < 1:
        raise ValueError("state needs integer n >= 0 and m >= 1")
    try:
        convention = Convention(obj.get("convention", "ket"))
    except ValueError as exc:
        raise ValueError(f"unknown convention {obj.get('convention')!r}") from exc
    amps = {}
    for rec in obj["amplitudes"]:
        _check_keys(rec, _AMP_KEYS, {"occ", "re"}, "amplitude")
        occ = tuple(rec["occ"])
        if occ in amps:
            raise ValueError(f"occupation {list(occ)} listed twice")
        amps[occ] = _scalar({k: v for k, v in rec.items() if k != "occ"}, exact, "amplitude")
    return FockState(n, m, amps, convention)


def load_state(source, exact: bool = False) -> FockState:
    return state_from_dict(_load(source), exact)


def state_to_dict(state: FockState) -> dict:
    amps = []
    for occ in sorted(state.amplitudes, reverse=True):
        value = state.amplitudes[occ]
        if is_exact(value):
            z = to_exact(value)
            re, im = format_scalar(z.re), format_scalar(z.im)
        else:
            z = complex(value)
            re, im = repr(z.real), repr(z.imag)
        amps.append({"occ": list(occ), "re": re, "im": im})
    return {"n": state.n, "m": state.m, "convention": state.convention.value, "amplitudes": amps}


def unitary_from_dict(obj: dict, exact: bool = False) -> ModeUnitary:
    _check_keys(obj, _UNITARY_KEYS, {"m", "entries"}, "unitary")
    m, rows = obj["m"], obj["entries"]
    if not isinstance(rows, list) or len(rows) != m or any(len(r) != m for r in rows):
        raise ValueError(f"unitary entries must be an {m}x{m} array")
    u = ModeUnitary(tuple(tuple(_scalar(x, exact, "unitary entry") for x in row) for row in rows))
    defect = u.unitarity_defect()
    if (exact and defect != 0) or (not exact and defect > 1e-9):
        raise ValueError(f"matrix is not unitary (defect {defect})")
    return u


def load_unitary(source, exact: bool = False) -> ModeUnitary:
    return unitary_from_dict(_load(source), exact)


def unitary_to_dict(u: ModeUnitary) -> dict:
    def entry(x):
        if is_exact(x):
            z = to_exact(x)
            return {"re": format_scalar(z.re), "im": format_scalar(z.im)}
        z = complex(x)
        return {"re": repr(z.real), "im": repr(z.imag)}
    return {"m": u.m, "entries": [[entry(x) for x in row] for row in u.entries]}
