"""Command line interface for batch orbit reports.

Input records are JSON objects carrying either six bivector coefficients
{"c": [...]} or a vector pair {"x": [...], "y": [...]} whose wedge is taken,
plus an optional string "id".  Batches stream as NDJSON (one object per
line); a single pretty-printed object or a top-level array also works.

Output is deterministic byte-for-byte: keys appear in fixed order and reals
are printed with 17 significant digits, so re-runs and multi-threaded runs
compare equal.  Exit codes: 0 success, 2 input error, 3 usage error,
4 internal invariant violation.

Flags can be seeded from the environment with the LBO_ prefix (LBO_TOL,
LBO_SEED, LBO_SAMPLES, LBO_R, LBO_FORMAT, LBO_THREADS); explicit flags win.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import DegenerateOrbitError, InvariantViolationError, NotInLightConeError
from .minkowski import ToleranceConfig, lorentz_inverse, random_proper_lorentz
from .orbit import (
    OrbitKind,
    base_point,
    canonical_form,
    canonical_representative,
    from_vector_pair,
    normal_form_bivector,
    orbit_class,
    orthonormal_tangent_frame,
    parallel_frame_check,
    reconstruct,
    tangent_frame,
    tangent_gram,
)
from .rslice import (
    SliceTopology,
    empirical_min_radius,
    in_slice,
    min_slice_radius,
    slice_topology,
)
from .stabilizer import (
    Family,
    SubspaceLabel,
    classify_invariant_subspace,
    degenerate_base,
    degenerate_invariant_plane,
    fixing_residual,
    neutral_base,
    neutral_invariant_plane,
    null_rotation_a,
    null_rotation_b,
    stabilizer_element,
    stabilizer_generators,
)
from .wedge import (
    HAT_DIAG,
    _apply,
    _compound,
    hat_inner,
    in_light_cone,
    pfaffian,
    split_norms,
    wedge,
)

_CHUNK = 256
# Residuals past this ceiling (scaled by witness conditioning) indicate a bug,
# not an input problem, and map to exit code 4.
_BUG_CEILING = 1e-6

_STAB_PARAMS = (-0.9, -0.3, 0.3, 0.9)


class _UsageError(Exception):
    pass


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems map to exit 3, not argparse's 2
        raise _UsageError(message)


# --- deterministic serialisation ------------------------------------------


def _write_json(obj, out: list) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        out.append(repr(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        f = float(obj)
        if f == 0.0:
            f = 0.0  # collapse negative zero
        out.append(format(f, ".17g"))
    elif isinstance(obj, dict):
        out.append("{")
        first = True
        for k, v in obj.items():
            if not first:
                out.append(",")
            first = False
            out.append(json.dumps(str(k)))
            out.append(":")
            _write_json(v, out)
        out.append("}")
    elif isinstance(obj, np.ndarray):
        _write_json(obj.tolist(), out)
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        first = True
        for v in obj:
            if not first:
                out.append(",")
            first = False
            _write_json(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialise {type(obj)!r}")


def dumps(obj) -> str:
    """Canonical JSON: insertion-ordered keys, reals at 17 significant digits."""
    out: list = []
    _write_json(obj, out)
    return "".join(out)


# --- record parsing -------------------------------------------------------


def _decode_record(obj) -> tuple:
    """Return (id, bivector) or raise _InputError."""
    if not isinstance(obj, dict):
        raise _InputError("record must be a JSON object")
    rid = obj.get("id")
    if rid is not None and not isinstance(rid, str):
        raise _InputError("id must be a string")
    has_c = "c" in obj
    has_xy = "x" in obj or "y" in obj
    if has_c == has_xy:
        raise _InputError('record needs exactly one of "c" or "x"/"y"')
    if has_c:
        c = obj["c"]
        if not (isinstance(c, list) and len(c) == 6):
            raise _InputError('"c" must be a list of 6 numbers')
        try:
            w = np.array([float(v) for v in c])
        except (TypeError, ValueError) as exc:
            raise _InputError(f'"c" entries must be numbers: {exc}') from exc
        if not np.all(np.isfinite(w)):
            raise _InputError('"c" entries must be finite')
        return rid, w
    x, y = obj.get("x"), obj.get("y")
    for name, v in (("x", x), ("y", y)):
        if not (isinstance(v, list) and len(v) == 4):
            raise _InputError(f'"{name}" must be a list of 4 numbers')
    try:
        xv = np.array([float(v) for v in x])
        yv = np.array([float(v) for v in y])
    except (TypeError, ValueError) as exc:
        raise _InputError(f"vector entries must be numbers: {exc}") from exc
    if not (np.all(np.isfinite(xv)) and np.all(np.isfinite(yv))):
        raise _InputError("vector entries must be finite")
    return rid, wedge(xv, yv)


def _iter_raw(stream):
    """Yield parsed JSON values: NDJSON line mode with a whole-document fallback.

    A top-level array, on one line or spread over many, batches its elements.
    """
    first = None
    for line in stream:
        if line.strip():
            first = line
            break
    if first is None:
        return
    try:
        doc = json.loads(first)
    except json.JSONDecodeError:
        rest = first + stream.read()
        doc = json.loads(rest)  # propagate as a hard input error
        if isinstance(doc, list):
            yield from doc
        else:
            yield doc
        return
    if isinstance(doc, list):
        yield from doc
    else:
        yield doc
    for line in stream:
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as exc:
            yield _InputError(f"bad JSON line: {exc}")
            continue
        if isinstance(doc, list):
            yield from doc
        else:
            yield doc


def _map_ordered(worker, items, threads: int):
    """Apply worker preserving order; bounded memory for streams."""
    if threads <= 1:
        for item in items:
            yield worker(item)
        return
    with ThreadPoolExecutor(max_workers=threads) as ex:
        batch = []
        for item in items:
            batch.append(item)
            if len(batch) >= _CHUNK:
                yield from ex.map(worker, batch)
                batch = []
        if batch:
            yield from ex.map(worker, batch)


# --- per-record reports ---------------------------------------------------


def _light_cone_reason(w) -> str:
    spatial, temporal = split_norms(w)
    if max(spatial, temporal) <= 1e-18:
        return "zero bivector"
    return f"split norms differ: spatial {spatial:.6g} vs temporal {temporal:.6g}"


def _witness_scale(witness: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(witness))) ** 2)


def _classify_one(rid, w, tol: ToleranceConfig, r_query):
    spatial, temporal = split_norms(w)
    rec = {"id": rid, "in_light_cone": in_light_cone(w, tol)}
    rec["A"] = spatial
    rec["B"] = temporal
    rec["pfaffian"] = pfaffian(w)
    if not rec["in_light_cone"]:
        rec["canonical"] = None
        rec["class"] = None
        rec["reason"] = _light_cone_reason(w)
        return rec
    form = canonical_form(w, tol)
    klass = orbit_class(w, tol)
    rec["canonical"] = {"r": form.r, "phi": form.phi}
    rec["class"] = {"kind": klass.kind, "r0": klass.r0, "epsilon": klass.epsilon}
    recon = float(np.linalg.norm(reconstruct(form) - w) / np.linalg.norm(w))
    rep_residual = None
    if klass.kind != OrbitKind.DEGENERATE:
        rep, witness = canonical_representative(w, tol)
        expected = normal_form_bivector(klass.r0, klass.epsilon)
        rep_residual = float(np.linalg.norm(rep - expected) / max(klass.r0, 1.0))
        if rep_residual > _BUG_CEILING * _witness_scale(witness):
            raise InvariantViolationError(
                f"reduced element off its normal form (residual {rep_residual:.3e})"
            )
    if recon > _BUG_CEILING:
        raise InvariantViolationError(f"canonical form fails to reconstruct (residual {recon:.3e})")
    if r_query is not None:
        topo = slice_topology(klass, r_query, tol)
        rec["slice"] = {
            "r_queried": r_query,
            "topology": topo.value,
            "boundary": topo is SliceTopology.SPHERE_2,
        }
    rec["diagnostics"] = {
        "reconstruction_residual": recon,
        "representative_residual": rep_residual,
    }
    return rec


def _canonical_one(rid, w, tol: ToleranceConfig):
    rec = {"id": rid, "in_light_cone": in_light_cone(w, tol)}
    if not rec["in_light_cone"]:
        rec["r"] = None
        rec["phi"] = None
        rec["basis"] = None
        rec["representative"] = None
        rec["witness"] = None
        rec["reason"] = _light_cone_reason(w)
        return rec
    form = canonical_form(w, tol)
    rec["r"] = form.r
    rec["phi"] = form.phi
    rec["basis"] = [float(v) for v in form.basis.ravel()]
    try:
        rep, witness = canonical_representative(w, tol)
        rec["representative"] = [float(v) for v in rep]
        rec["witness"] = [float(v) for v in witness.ravel()]
    except DegenerateOrbitError:
        rec["representative"] = None
        rec["witness"] = None
        rec["note"] = "degenerate orbit: no element of the form r0*(e12 + eps*e34) exists"
    return rec


def _slice_one(rid, w, tol: ToleranceConfig, r: float):
    rec = {"id": rid, "in_light_cone": in_light_cone(w, tol), "r_queried": r}
    if not rec["in_light_cone"]:
        rec["class"] = None
        rec["topology"] = None
        rec["in_slice"] = False
        rec["reason"] = _light_cone_reason(w)
        return rec
    klass = orbit_class(w, tol)
    topo = slice_topology(klass, r, tol)
    rec["class"] = {"kind": klass.kind, "r0": klass.r0, "epsilon": klass.epsilon}
    rec["topology"] = topo.value
    rec["boundary"] = topo is SliceTopology.SPHERE_2
    rec["in_slice"] = in_slice(w, r, tol)
    return rec


def _stabilizer_one(rid, w, tol: ToleranceConfig):
    rec = {"id": rid, "in_light_cone": in_light_cone(w, tol)}
    if not rec["in_light_cone"]:
        rec["kind"] = None
        rec["families"] = None
        rec["reason"] = _light_cone_reason(w)
        return rec
    klass = orbit_class(w, tol)
    rec["kind"] = klass.kind
    if klass.kind == OrbitKind.DEGENERATE:
        # conjugate the base-point stabilizer through the adapted basis
        form = canonical_form(w, tol)
        conj, conj_inv = form.basis, lorentz_inverse(form.basis)
    else:
        _, witness = canonical_representative(w, tol)
        conj, conj_inv = lorentz_inverse(witness), witness
    families = []
    worst = 0.0
    for t in _STAB_PARAMS:
        for elem in stabilizer_generators(klass.kind, t):
            res = fixing_residual(conj @ elem.matrix @ conj_inv, w)
            worst = max(worst, res)
            families.append(
                {"family": elem.family.value, "parameter": t, "fixing_residual": res}
            )
    rec["families"] = families
    rec["max_residual"] = worst
    return rec


# --- verify suites --------------------------------------------------------


def _suite_isometry(samples, seed, tol):
    rng = np.random.default_rng([seed, 0])
    worst_inner = worst_homo = worst_cone = 0.0
    for _ in range(samples):
        p = random_proper_lorentz(rng, 4)
        q = random_proper_lorentz(rng, 3)
        u = rng.normal(size=6)
        v = rng.normal(size=6)
        scale = 1.0 + float(np.linalg.norm(u) * np.linalg.norm(v))
        worst_inner = max(
            worst_inner,
            abs(hat_inner(_apply(p, u), _apply(p, v)) - hat_inner(u, v)) / scale,
        )
        worst_homo = max(
            worst_homo, float(np.max(np.abs(_compound(p) @ _compound(q) - _compound(p @ q))))
        )
        a = rng.normal(size=3)
        b = rng.normal(size=3)
        b *= np.linalg.norm(a) / np.linalg.norm(b)
        wl = from_vector_pair(a, b)
        if not in_light_cone(_apply(p, wl), tol):
            worst_cone = 1.0
    return [
        ("induced metric preserved", worst_inner, 1e-8),
        ("pushforward is a homomorphism", worst_homo, 1e-8),
        ("light cone preserved", worst_cone, 0.5),
    ]


def _suite_pfaffian(samples, seed, tol):
    rng = np.random.default_rng([seed, 1])
    worst_inv = worst_angle = 0.0
    for _ in range(samples):
        p = random_proper_lorentz(rng, 4)
        u = rng.normal(size=6)
        worst_inv = max(worst_inv, abs(pfaffian(_apply(p, u)) - pfaffian(u)) / (1.0 + u @ u))
    for phi in np.linspace(0.0, np.pi, 41):
        worst_angle = max(worst_angle, abs(pfaffian(base_point(phi)) - 2.0 * np.cos(phi)))
    return [
        ("invariant under pushforward", worst_inv, 1e-8),
        ("equals twice the cosine on the base curve", worst_angle, 1e-12),
    ]


def _suite_frames(samples, seed, tol):
    worst_gram = worst_ortho = 0.0
    checks = []
    for phi in np.linspace(0.0, np.pi, 21):
        g = tangent_gram(phi)
        c = np.cos(phi)
        expected = np.zeros((4, 4))
        expected[0, 0] = -2.0 * c
        expected[1, 1] = 2.0 * c
        expected[2, 3] = expected[3, 2] = 1.0
        worst_gram = max(worst_gram, float(np.max(np.abs(g - expected))))
    for phi in (0.2, 1.0, 2.2, 3.0):
        fr = np.column_stack(orthonormal_tangent_frame(phi, tol))
        g = fr.T @ (HAT_DIAG[:, None] * fr)
        worst_ortho = max(worst_ortho, float(np.max(np.abs(g - np.diag([1.0, -1.0, 1.0, -1.0])))))
    checks.append(("tangent Gram closed form", worst_gram, 1e-10))
    checks.append(("orthonormal frame Gram", worst_ortho, 1e-10))
    ok = True
    for phi, theta, t in ((np.pi / 5, 0.3, 0.4), (np.pi / 2, 0.2, -0.3), (2.4, -0.5, 0.6)):
        ok = ok and parallel_frame_check(phi, theta, t, tol).passed
    checks.append(("transported frame parallel", 0.0 if ok else 1.0, 0.5))
    return checks


def _suite_stabilizer(samples, seed, tol):
    worst_fix = 0.0
    for t in _STAB_PARAMS:
        for elem in stabilizer_generators(OrbitKind.NEUTRAL_PLUS, t):
            worst_fix = max(worst_fix, fixing_residual(elem.matrix, neutral_base(1.0, 1)))
            worst_fix = max(worst_fix, fixing_residual(elem.matrix, neutral_base(2.5, -1)))
        for elem in stabilizer_generators(OrbitKind.DEGENERATE, t):
            worst_fix = max(worst_fix, fixing_residual(elem.matrix, degenerate_base()))
    worst_poly = 0.0
    for t in (-1.5, -0.4, 0.6, 2.0):
        x = np.tanh(t)
        worst_poly = max(
            worst_poly,
            float(
                np.max(
                    np.abs(
                        stabilizer_element(Family.NULL_ROTATION_A, t).matrix - null_rotation_a(x)
                    )
                )
            ),
            float(
                np.max(
                    np.abs(
                        stabilizer_element(Family.NULL_ROTATION_B, t).matrix - null_rotation_b(x)
                    )
                )
            ),
        )
    worst_comm = 0.0
    for x in (-0.7, 0.3, 0.9):
        for y in (-0.5, 0.8):
            worst_comm = max(
                worst_comm,
                float(
                    np.max(
                        np.abs(
                            null_rotation_a(x) @ null_rotation_b(y)
                            - null_rotation_b(y) @ null_rotation_a(x)
                        )
                    )
                ),
            )
    labels_ok = True
    wp = neutral_invariant_plane(1)
    wm = neutral_invariant_plane(-1)
    ker = degenerate_invariant_plane()
    fr = tangent_frame(np.pi / 2)
    labels_ok &= (
        classify_invariant_subspace(OrbitKind.NEUTRAL_PLUS, [wp[:, 0], wp[:, 1]], tol)
        is SubspaceLabel.W_PLUS
    )
    labels_ok &= (
        classify_invariant_subspace(OrbitKind.NEUTRAL_PLUS, [wm[:, 0], wm[:, 1]], tol)
        is SubspaceLabel.W_MINUS
    )
    labels_ok &= (
        classify_invariant_subspace(OrbitKind.DEGENERATE, [ker[:, 0], ker[:, 1]], tol)
        is SubspaceLabel.W_ZERO
    )
    labels_ok &= (
        classify_invariant_subspace(OrbitKind.DEGENERATE, [fr.x_plus, fr.y_plus], tol)
        is SubspaceLabel.NOT_INVARIANT
    )
    return [
        ("generators fix their base points", worst_fix, 1e-10),
        ("null rotations match polynomial form", worst_poly, 1e-10),
        ("null rotation families commute", worst_comm, 1e-12),
        ("invariant subspace labels", 0.0 if labels_ok else 1.0, 0.5),
    ]


def _suite_slice(samples, seed, tol):
    worst_id = 0.0
    for phi in np.linspace(0.0, np.pi, 201):
        worst_id = max(worst_id, abs(min_slice_radius(phi) ** 2 - 2.0 * abs(np.cos(phi))))
    w = base_point(np.pi / 3)
    klass = orbit_class(w, tol)
    emp = empirical_min_radius(w, max(200, samples // 4), seed, tol)
    excess = abs(emp - klass.r0) / klass.r0
    wd = base_point(np.pi / 2)
    emp_d = empirical_min_radius(wd, max(200, samples // 4), seed, tol)
    return [
        ("squared minimum matches twice |cos|", worst_id, 1e-12),
        ("empirical minimum within two percent", excess, 0.02),
        ("degenerate radius collapses", emp_d, 1e-3),
    ]


_SUITES = {
    "isometry": _suite_isometry,
    "pfaffian": _suite_pfaffian,
    "frames": _suite_frames,
    "stabilizer": _suite_stabilizer,
    "slice": _suite_slice,
}


# --- output formatting ----------------------------------------------------


def _emit(records, fmt: str, out) -> None:
    if fmt == "ndjson":
        for rec in records:
            out.write(dumps(rec) + "\n")
    elif fmt == "json":
        out.write(dumps(list(records)) + "\n")
    else:  # table
        rows = list(records)
        cols: list[str] = []
        for rec in rows:
            for key in rec:
                if key not in cols and not isinstance(rec[key], (dict, list)):
                    cols.append(key)
        widths = {c: len(c) for c in cols}
        rendered = []
        for rec in rows:
            cells = {}
            for c in cols:
                v = rec.get(c)
                if isinstance(v, (float, np.floating)):
                    cells[c] = format(float(v), ".6g")
                elif v is None:
                    cells[c] = "-"
                else:
                    cells[c] = str(v)
                widths[c] = max(widths[c], len(cells[c]))
            rendered.append(cells)
        out.write("  ".join(c.ljust(widths[c]) for c in cols).rstrip() + "\n")
        for cells in rendered:
            out.write("  ".join(cells.get(c, "-").ljust(widths[c]) for c in cols).rstrip() + "\n")


# --- subcommands ----------------------------------------------------------


def _open_input(args):
    if args.infile and args.infile != "-":
        return open(args.infile, "r", encoding="utf-8")
    return sys.stdin


def _tolerance(args) -> ToleranceConfig:
    return ToleranceConfig(abs_tol=args.tol, rel_tol=args.tol)


def _run_batch(args, one) -> int:
    tol = _tolerance(args)
    had_error = False

    def worker(indexed):
        idx, raw = indexed
        if isinstance(raw, _InputError):
            return {"id": None, "error": str(raw)}, True
        try:
            rid, w = _decode_record(raw)
        except _InputError as exc:
            rid = raw.get("id") if isinstance(raw, dict) and isinstance(raw.get("id"), str) else None
            return {"id": rid, "error": str(exc)}, True
        return one(rid, w, tol), False

    stream = _open_input(args)
    try:
        items = enumerate(_iter_raw(stream))

        def gen():
            nonlocal had_error
            for rec, is_err in _map_ordered(worker, items, args.threads):
                had_error = had_error or is_err
                yield rec

        if args.format == "ndjson":
            _emit(gen(), "ndjson", sys.stdout)
        else:
            _emit(list(gen()), args.format, sys.stdout)
    except json.JSONDecodeError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    finally:
        if stream is not sys.stdin:
            stream.close()
    return 2 if had_error else 0


def _cmd_classify(args) -> int:
    r_query = args.r
    if r_query is not None and r_query <= 0:
        print("input error: --r must be positive", file=sys.stderr)
        return 2
    return _run_batch(args, lambda rid, w, tol: _classify_one(rid, w, tol, r_query))


def _cmd_canonical(args) -> int:
    return _run_batch(args, _canonical_one)


def _cmd_slice(args) -> int:
    if args.r is None:
        raise _UsageError("slice requires --r")
    if args.r <= 0:
        print("input error: --r must be positive", file=sys.stderr)
        return 2
    return _run_batch(args, lambda rid, w, tol: _slice_one(rid, w, tol, args.r))


def _cmd_stabilizer(args) -> int:
    return _run_batch(args, _stabilizer_one)


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    tol = _tolerance(args)
    all_ok = True
    for name in names:
        for check, value, threshold in _SUITES[name](args.samples, args.seed, tol):
            ok = value <= threshold
            all_ok = all_ok and ok
            status = "PASS" if ok else "FAIL"
            print(f"{name:<10} {check:<44} {status}  {value:.3e} <= {threshold:.0e}")
    if not all_ok:
        raise InvariantViolationError("verification suite failed")
    return 0


# --- entry point ----------------------------------------------------------


def _env_float(name):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError as exc:
        raise _UsageError(f"bad {name}={raw!r}") from exc


def _env_int(name, fallback):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError as exc:
        raise _UsageError(f"bad {name}={raw!r}") from exc


def _build_parser() -> _Parser:
    tol_default = _env_float("LBO_TOL")
    if tol_default is None:
        tol_default = 1e-9
    seed_default = _env_int("LBO_SEED", 0)
    samples_default = _env_int("LBO_SAMPLES", 500)
    r_default = _env_float("LBO_R")
    fmt_default = os.environ.get("LBO_FORMAT", "ndjson")
    if fmt_default not in ("ndjson", "json", "table"):
        raise _UsageError(f"bad LBO_FORMAT={fmt_default!r}")
    threads_default = _env_int("LBO_THREADS", 1)

    parser = _Parser(prog="lbo", description="light-cone bivector orbit reports")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_batch(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="infile", default=None, help="input file (default stdin)")
        p.add_argument("--format", choices=("ndjson", "json", "table"), default=fmt_default)
        p.add_argument("--tol", type=float, default=tol_default)
        p.add_argument("--threads", type=int, default=threads_default)
        return p

    p = add_batch("classify", "orbit class, invariants and diagnostics per record")
    p.add_argument("--r", type=float, default=r_default, help="also certify the radius-r slice")
    p.set_defaults(func=_cmd_classify)

    p = add_batch("canonical", "canonical form, reduced element and witness per record")
    p.set_defaults(func=_cmd_canonical)

    p = add_batch("slice", "topology certificate of the radius-r slice per record")
    p.add_argument("--r", type=float, default=r_default)
    p.set_defaults(func=_cmd_slice)

    p = add_batch("stabilizer", "stabilizer generator families and fixing residuals per record")
    p.set_defaults(func=_cmd_stabilizer)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", choices=tuple(_SUITES) + ("all",), required=True)
    p.add_argument("--seed", type=int, default=seed_default)
    p.add_argument("--samples", type=int, default=samples_default)
    p.add_argument("--tol", type=float, default=tol_default)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    try:
        parser = _build_parser()
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 3
    except (NotInLightConeError, DegenerateOrbitError, _InputError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolationError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
