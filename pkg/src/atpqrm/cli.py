"""Command-line front end.

Each subcommand writes one machine-readable table (CSV or JSON): G-function
curves over an energy grid, coupling sweeps of the discrete spectrum,
degeneracy roots on the pole lines, near-critical scans of the restarted
series, collapse-point bound states, and plain banded-diagonalization dumps.
Identical configurations produce byte-identical files; every float is
rendered with 17 significant digits and each file embeds its full resolved
configuration.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__, collapse as collapse_mod, fock
from .errors import AtpqrmError, InvalidParams, NoCrossing
from .gfunction import exceptional_scan, g_function_grid
from .model import ModelParams, collapse_coupling, pole_energy
from .recurrence import nearest_pole, pole_guard_width
from .spectrum import (
    count_bound_states_via_exceptional,
    find_degenerate_points,
    find_levels,
    last_crossing,
    scale_spectrum,
)

COMMANDS = ("gcurve", "spectrum", "degenerate", "exceptional", "collapse", "ed")


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved settings for one subcommand invocation."""

    command: str
    values: dict
    out: str
    fmt: str

    def __post_init__(self):
        if self.fmt not in ("csv", "json"):
            raise InvalidParams(f"format must be csv or json, got {self.fmt!r}")


# ---------------------------------------------------------------------------
# option parsing helpers


def parse_q(text: str) -> float:
    t = str(text).strip()
    if t in ("0.25", "1/4"):
        return 0.25
    if t in ("0.75", "3/4"):
        return 0.75
    raise InvalidParams(f"q must be 1/4 or 3/4, got {text!r}")


def parse_parity(text: str) -> int:
    t = str(text).strip()
    if t in ("both", "0"):
        return 0
    if t in ("+1", "1", "+"):
        return 1
    if t in ("-1", "-"):
        return -1
    raise InvalidParams(f"parity must be +1, -1, or both, got {text!r}")


def parse_range(text: str, default_n: int) -> tuple[float, float, int]:
    """lo:hi or lo:hi:n; the range must be non-empty."""
    parts = str(text).split(":")
    if len(parts) not in (2, 3):
        raise InvalidParams(f"range must look like lo:hi[:n], got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        n = int(float(parts[2])) if len(parts) == 3 else default_n
    except ValueError as exc:
        raise InvalidParams(f"bad range {text!r}") from exc
    if hi < lo:
        raise InvalidParams(f"empty range {text!r}")
    if hi == lo:
        return lo, hi, 1
    if n < 2:
        raise InvalidParams(f"need at least 2 samples, got {n}")
    return lo, hi, n


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(float(p)) for p in str(text).split(",") if p.strip())
    except ValueError as exc:
        raise InvalidParams(f"bad integer list {text!r}") from exc
    if not vals or any(v < 0 for v in vals):
        raise InvalidParams(f"bad integer list {text!r}")
    return vals


def parse_bool(text) -> bool:
    return str(text).strip().lower() in ("1", "true", "yes", "on")


def load_config_file(path: str) -> dict:
    """Flat key = value lines; '#' starts a comment; keys match long flags."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidParams(f"bad config line {raw.rstrip()!r}")
            key, val = line.split("=", 1)
            key = key.strip().replace("-", "_")
            # the flag is --format but the namespace slot is fmt
            out["fmt" if key == "format" else key] = val.strip()
    return out


class Options:
    """Flag value if given, else config-file value, else default."""

    def __init__(self, ns: argparse.Namespace, cfg: dict):
        self._ns = vars(ns)
        self._cfg = cfg
        self._seen: set[str] = set()

    def get(self, key, cast=str, default=None, required=False):
        self._seen.add(key)
        raw = self._ns.get(key)
        if raw is None:
            raw = self._cfg.get(key)
        if raw is None:
            if required:
                raise InvalidParams(f"missing required option --{key.replace('_', '-')}")
            return default
        return cast(raw)

    def reject_unknown(self) -> None:
        """Config-file keys nothing consumed are almost certainly typos."""
        extra = sorted(set(self._cfg) - self._seen)
        if extra:
            raise InvalidParams(f"unknown config keys: {', '.join(extra)}")


# ---------------------------------------------------------------------------
# deterministic table output


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def _json_scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isnan(v) or math.isinf(v):
            return "null"
        return "%.17g" % v
    if isinstance(v, int):
        return str(v)
    return '"' + str(v).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _echo_value(v):
    # tuples (ranges, ladders) echo as comma-joined scalars
    if isinstance(v, tuple):
        return ",".join(_fmt(x) for x in v)
    return v


def render_table(cfg: RunConfig, columns, rows) -> str:
    echo = {k: _echo_value(v) for k, v in cfg.values.items()}
    echo["command"] = cfg.command
    echo["format"] = cfg.fmt
    echo["version"] = __version__
    if cfg.fmt == "csv":
        lines = [f"# atpqrm {__version__}"]
        for key in sorted(echo):
            lines.append(f"# {key} = {_fmt(echo[key])}")
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
        return "\n".join(lines) + "\n"
    # hand-rolled JSON keeps the 17-digit float contract
    cfg_items = ", ".join(
        _json_scalar(k) + ": " + _json_scalar(echo[k]) for k in sorted(echo)
    )
    parts = ['{"config": {' + cfg_items + "}"]
    parts.append('"columns": [' + ", ".join(_json_scalar(c) for c in columns) + "]")
    body = ",\n".join(
        "  [" + ", ".join(_json_scalar(v) for v in row) + "]" for row in rows
    )
    parts.append('"rows": [\n' + body + "\n]")
    return ",\n".join(parts) + "}\n"


def write_output(cfg: RunConfig, columns, rows) -> None:
    text = render_table(cfg, columns, rows)
    if cfg.out in ("-", ""):
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands


def _require_subcritical(g: float, r: float) -> None:
    g_crit = collapse_coupling(r)
    if not 0.0 <= g < g_crit:
        raise InvalidParams(f"need 0 <= g < g_c = {g_crit!r}, got {g!r}")


def _decoupled_curve_value(energy: float, delta: float, q: float, lo: float, hi: float):
    """Rational stand-in for the zero-coupling curve on the output window.

    The series route has no zero-coupling limit, so the curve is rendered as
    the finite product over window levels divided by the product over window
    rungs: zeros at k +/- delta/2 with the decoupled parity split, poles at
    the bare rungs.
    """
    k0 = 0 if q == 0.25 else 1
    num_p = 1.0
    num_m = 1.0
    den = 1.0
    j = 0
    while True:
        k = k0 + 2 * j
        if k - abs(delta) / 2 > hi + 1.0:
            break
        if k >= lo - 1.0:
            den *= k - energy
        sign = 1 if j % 2 == 0 else -1
        for e_level, par in ((k + delta / 2, sign), (k - delta / 2, -sign)):
            if lo - 1.0 <= e_level <= hi + 1.0:
                if par == 1:
                    num_p *= e_level - energy
                else:
                    num_m *= e_level - energy
        j += 1
    return num_p / den, num_m / den


def cmd_gcurve(cfg: RunConfig) -> None:
    v = cfg.values
    delta, r, g, q = v["delta"], v["r"], v["g"], v["q"]
    lo, hi, n = v["e_range"]
    energies = np.linspace(lo, hi, n)
    rows = []
    if g == 0.0:
        for e in energies:
            k = round((e + 0.5) / 2.0 - q)
            k = max(0, int(k))
            pole = 2.0 * (k + q) - 0.5
            dist = abs(e - pole)
            if dist <= pole_guard_width(e):
                continue
            gp, gm = _decoupled_curve_value(float(e), delta, q, lo, hi)
            rows.append((float(e), gp, gm, k, dist))
        write_output(cfg, ("energy", "g_plus", "g_minus", "nearest_pole", "pole_distance"), rows)
        return
    _require_subcritical(g, r)
    p = ModelParams(delta=delta, r=r, g=g, q=q)
    keep = []
    info = []
    for e in energies:
        idx, dist = nearest_pole(p, float(e))
        if dist > pole_guard_width(float(e)):
            keep.append(float(e))
            info.append((idx, dist))
    gp, gm, _, _ = g_function_grid(p, np.array(keep), n_terms=v["trunc"])
    for (e, (idx, dist), vp, vm) in zip(keep, info, gp, gm):
        rows.append((e, float(vp), float(vm), idx, dist))
    write_output(cfg, ("energy", "g_plus", "g_minus", "nearest_pole", "pole_distance"), rows)


def _spectrum_point(args):
    delta, r, g, q, lo, hi, trunc = args
    p = ModelParams(delta=delta, r=r, g=g, q=q)
    levels = find_levels(p, (lo, hi), n_terms=trunc)
    return [(lv.energy, lv.parity, lv.pole_interval) for lv in levels.levels]


def cmd_spectrum(cfg: RunConfig) -> None:
    v = cfg.values
    delta, r, q = v["delta"], v["r"], v["q"]
    g_lo, g_hi, n_g = v["g_range"]
    lo, hi, _ = v["e_range"]
    parity_sel = v["parity"]
    if g_lo < 0.0 or g_hi >= collapse_coupling(r):
        raise InvalidParams("g-range must stay inside [0, g_c)")
    grid = np.linspace(g_lo, g_hi, n_g)
    work = [(delta, r, float(g), q, lo, hi, v["trunc"]) for g in grid]
    results = _pmap(_spectrum_point, work, v["jobs"])

    with_scaled = v["scaled"]
    with_ed = v["ed_overlay"]
    columns = ["g", "kind", "energy", "parity", "pole_interval"]
    if with_scaled:
        columns.append("scaled_energy")
    if with_ed:
        columns.append("ed_energy")
    rows = []
    for g, found in zip(grid, results):
        p = ModelParams(delta=delta, r=r, g=float(g), q=q)
        ed = None
        if with_ed:
            ed = fock.diagonalize(p, v["dim"], energy_range=(lo, hi), strict_parity=False)
        entries = []
        for energy, parity, interval in found:
            if parity_sel and parity != parity_sel:
                continue
            entries.append(("level", energy, parity, interval))
        if p.g > 0.0:
            k = 0
            while pole_energy(k, p) <= hi:
                if pole_energy(k, p) >= lo:
                    entries.append(("pole", pole_energy(k, p), 0, k))
                k += 1
        entries.sort(key=lambda t: (t[0], t[1]))
        for kind, energy, parity, interval in entries:
            row = [float(g), kind, energy, parity, interval]
            if with_scaled:
                row.append(float(scale_spectrum(p, [energy])[0]) if p.g > 0 else None)
            if with_ed:
                partner = None
                if kind == "level":
                    mask = ed.parities == parity
                    if np.any(mask):
                        cand = ed.energies[mask]
                        partner = float(cand[np.argmin(np.abs(cand - energy))])
                row.append(partner)
            rows.append(tuple(row))
    write_output(cfg, columns, rows)


def cmd_degenerate(cfg: RunConfig) -> None:
    v = cfg.values
    r, q = v["r"], v["q"]
    indices = v["n_list"]
    if v["delta_range"] is not None:
        lo, hi, n_d = v["delta_range"]
        rows = []
        for d in np.linspace(lo, hi, n_d):
            for n in indices:
                try:
                    pt = last_crossing(float(d), r, q, n)
                    rows.append((float(d), n, q, pt.g_value, pt.energy, "ok"))
                except NoCrossing:
                    rows.append((float(d), n, q, None, None, "none"))
        write_output(cfg, ("delta", "n", "q", "g_max", "energy", "status"), rows)
        return
    delta = v["delta"]
    if delta is None:
        raise InvalidParams("degenerate needs --delta or --delta-range")
    rows = []
    for n in indices:
        points = find_degenerate_points(delta, r, q, n)
        for i, pt in enumerate(points):
            rows.append((delta, n, q, i, pt.g_value, pt.energy))
    write_output(cfg, ("delta", "n", "q", "root_index", "g_value", "energy"), rows)


def cmd_exceptional(cfg: RunConfig) -> None:
    v = cfg.values
    delta, r, q, m = v["delta"], v["r"], v["q"], v["m"]
    lo, hi, n_x = v["x_range"]
    if not lo > 0.0:
        raise InvalidParams("x-range must be positive (x = -log10(1 - g/g_c))")
    x_grid = np.linspace(lo, hi, n_x)
    if v["zeros"]:
        found = count_bound_states_via_exceptional(
            delta, r, q=q, m=m, parity=v["parity"] or 1,
            truncations=v["trunc_list"], x_range=(lo, hi),
        )
        g_crit = collapse_coupling(r)
        rows = []
        for trunc in v["trunc_list"]:
            for i, x in enumerate(found.zeros_x[trunc]):
                rows.append((trunc, i, x, g_crit * (1.0 - 10.0 ** (-x))))
        write_output(cfg, ("truncation", "zero_index", "x", "g"), rows)
        return
    rows = []
    for trunc in v["trunc_list"]:
        scan = exceptional_scan(delta, r, q, m, x_grid, n_terms=trunc)
        for i in range(x_grid.size):
            rows.append(
                (
                    trunc,
                    float(scan.x[i]),
                    float(scan.g[i]),
                    float(scan.g_plus[i]),
                    float(scan.g_minus[i]),
                    float(scan.tail[i]),
                    bool(scan.converged[i]),
                    bool(scan.precision_floor[i]),
                )
            )
    write_output(
        cfg,
        ("truncation", "x", "g", "g_plus", "g_minus", "tail", "converged", "precision_floor"),
        rows,
    )


def _collapse_point(args):
    delta, r, length, spacing, k_states = args
    states = collapse_mod.solve_bound_states(
        delta, r, length=length, spacing=spacing, k_states=k_states
    )
    i2 = collapse_mod.brownstein_integral(delta, r)
    out = []
    for i, st in enumerate(sorted(states.states, key=lambda s: s.energy)):
        out.append((i, st.kappa4, st.energy, st.parity))
    return states.tail.region, i2, len(states.states), out


def cmd_collapse(cfg: RunConfig) -> None:
    v = cfg.values
    r = v["r"]
    if v["delta_range"] is not None:
        lo, hi, n_d = v["delta_range"]
        deltas = [float(d) for d in np.linspace(lo, hi, n_d)]
    else:
        if v["delta"] is None:
            raise InvalidParams("collapse needs --delta or --delta-range")
        deltas = [v["delta"]]
    work = [(d, r, v["length"], v["spacing"], v["k_states"]) for d in deltas]
    results = _pmap(_collapse_point, work, v["jobs"])
    rows = []
    for d, (region, i2, count, states) in zip(deltas, results):
        if not states:
            rows.append((d, region, i2, 0, -1, None, -0.5, 0))
        for idx, kappa4, energy, parity in states:
            rows.append((d, region, i2, count, idx, kappa4, energy, parity))
    write_output(
        cfg,
        ("delta", "region", "i2", "count", "state_index", "kappa4", "energy", "parity"),
        rows,
    )


def cmd_ed(cfg: RunConfig) -> None:
    v = cfg.values
    p = ModelParams(delta=v["delta"], r=v["r"], g=v["g"], q=v["q"])
    _require_subcritical(v["g"], v["r"])
    if v["e_range"] is not None:
        lo, hi, _ = v["e_range"]
        res = fock.diagonalize(p, v["dim"], energy_range=(lo, hi), strict_parity=False)
    else:
        res = fock.diagonalize(p, v["dim"], n_lowest=v["n_lowest"], strict_parity=False)
    parity_sel = v["parity"]
    rows = []
    for i, (e, par) in enumerate(zip(res.energies, res.parities)):
        if parity_sel and int(par) != parity_sel:
            continue
        rows.append((i, float(e), int(par)))
    write_output(cfg, ("index", "energy", "parity"), rows)


def _pmap(fn, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    import concurrent.futures as cf

    with cf.ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


# ---------------------------------------------------------------------------
# argument wiring


def _common_flags(sp):
    sp.add_argument("--delta", help="qubit splitting")
    sp.add_argument("--r", help="anisotropy ratio")
    sp.add_argument("--g", help="coupling strength")
    sp.add_argument("--g-range", dest="g_range", help="coupling sweep lo:hi[:n]")
    sp.add_argument("--q", help="subspace label, 1/4 or 3/4")
    sp.add_argument("--parity", help="+1, -1, or both")
    sp.add_argument("--trunc", help="series truncation, or comma ladder")
    sp.add_argument("--dim", help="diagonalization dimension")
    sp.add_argument("--out", help="output path, - for stdout")
    sp.add_argument("--format", dest="fmt", help="csv or json")
    sp.add_argument("--config", help="flat key = value config file")
    sp.add_argument("--jobs", help="parallel workers over grid points")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="atpqrm",
        description="Spectra of the anisotropic two-photon Rabi model.",
    )
    ap.add_argument("--version", action="version", version=f"atpqrm {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("gcurve", help="G-function curves over an energy grid")
    sp.add_argument("--e-range", dest="e_range", help="energy grid lo:hi[:n]")
    _common_flags(sp)
    sp = sub.add_parser("spectrum", help="discrete levels over a coupling sweep")
    sp.add_argument("--e-range", dest="e_range", help="energy window lo:hi")
    sp.add_argument("--scaled", action="store_const", const="1", help="add pole-aligned energies")
    sp.add_argument(
        "--ed-overlay", dest="ed_overlay", action="store_const", const="1",
        help="add nearest same-parity diagonalization eigenvalue",
    )
    _common_flags(sp)
    sp = sub.add_parser("degenerate", help="pole-line crossing points")
    sp.add_argument("--n", dest="n_list", help="pole indices, comma separated")
    sp.add_argument("--delta-range", dest="delta_range", help="splitting sweep lo:hi[:n]")
    _common_flags(sp)
    sp = sub.add_parser("exceptional", help="near-critical restarted-series scans")
    sp.add_argument("--m", help="pole line index")
    sp.add_argument("--x-range", dest="x_range", help="-log10(1-g/g_c) grid lo:hi[:n]")
    sp.add_argument("--zeros", action="store_const", const="1", help="emit refined zeros only")
    _common_flags(sp)
    sp = sub.add_parser("collapse", help="bound states at the collapse coupling")
    sp.add_argument("--delta-range", dest="delta_range", help="splitting sweep lo:hi[:n]")
    sp.add_argument("--length", help="half-width of the solver box")
    sp.add_argument("--spacing", help="grid spacing of the solver box")
    sp.add_argument("--k-states", dest="k_states", help="eigenpairs per solve")
    _common_flags(sp)
    sp = sub.add_parser("ed", help="banded-matrix eigenvalue dump")
    sp.add_argument("--e-range", dest="e_range", help="energy window lo:hi")
    sp.add_argument("--n-lowest", dest="n_lowest", help="count when no window given")
    _common_flags(sp)
    return ap


def _positive(value: float, name: str) -> float:
    if not value > 0:
        raise InvalidParams(f"{name} must be positive, got {value!r}")
    return value


def resolve_config(ns: argparse.Namespace) -> RunConfig:
    cfg_file = {}
    if getattr(ns, "config", None):
        cfg_file = load_config_file(ns.config)
    opt = Options(ns, cfg_file)
    command = ns.command
    values: dict = {}
    out = opt.get("out", str, "-")
    fmt = opt.get("fmt", str, "csv")
    values["jobs"] = int(_positive(opt.get("jobs", float, 1), "jobs"))

    def common_params(need_g: bool, series: bool = False):
        # diagonalization commands accept r = 0; series commands divide by sqrt(r)
        values["delta"] = opt.get("delta", float, required=True)
        r = opt.get("r", float, required=True)
        if r < 0 or (series and r == 0):
            raise InvalidParams(f"r must be {'positive' if series else '>= 0'}, got {r!r}")
        values["r"] = r
        values["q"] = opt.get("q", parse_q, 0.25)
        if need_g:
            values["g"] = opt.get("g", float, required=True)
            if values["g"] < 0:
                raise InvalidParams(f"need g >= 0, got {values['g']!r}")

    if command == "gcurve":
        common_params(need_g=True, series=True)
        values["e_range"] = parse_range(opt.get("e_range", str, "-1:8"), 1801)
        trunc = opt.get("trunc", parse_int_list)
        values["trunc"] = trunc[0] if trunc else None
    elif command == "spectrum":
        common_params(need_g=False)
        values["g_range"] = parse_range(opt.get("g_range", str, required=True), 41)
        values["e_range"] = parse_range(opt.get("e_range", str, "-5.5:8"), 2)
        values["parity"] = opt.get("parity", parse_parity, 0)
        trunc = opt.get("trunc", parse_int_list)
        values["trunc"] = trunc[0] if trunc else None
        values["scaled"] = opt.get("scaled", parse_bool, False)
        values["ed_overlay"] = opt.get("ed_overlay", parse_bool, False)
        values["dim"] = int(_positive(opt.get("dim", float, 2000), "dim"))
    elif command == "degenerate":
        values["delta"] = opt.get("delta", float)
        values["r"] = _positive(opt.get("r", float, required=True), "r")
        values["q"] = opt.get("q", parse_q, 0.25)
        values["n_list"] = opt.get("n_list", parse_int_list, (0, 1, 2, 3))
        dr = opt.get("delta_range", str)
        values["delta_range"] = parse_range(dr, 57) if dr else None
    elif command == "exceptional":
        common_params(need_g=False, series=True)
        values["m"] = int(opt.get("m", float, 0))
        if values["m"] < 0:
            raise InvalidParams(f"need m >= 0, got {values['m']!r}")
        values["x_range"] = parse_range(opt.get("x_range", str, "0.5:15"), 465)
        values["trunc_list"] = opt.get("trunc", parse_int_list, (10**5, 10**6))
        values["parity"] = opt.get("parity", parse_parity, 1)
        values["zeros"] = opt.get("zeros", parse_bool, False)
    elif command == "collapse":
        values["delta"] = opt.get("delta", float)
        values["r"] = _positive(opt.get("r", float, required=True), "r")
        dr = opt.get("delta_range", str)
        values["delta_range"] = parse_range(dr, 29) if dr else None
        values["length"] = _positive(opt.get("length", float, collapse_mod.DEFAULT_L), "length")
        values["spacing"] = _positive(opt.get("spacing", float, 0.02), "spacing")
        values["k_states"] = int(_positive(opt.get("k_states", float, 4), "k-states"))
    elif command == "ed":
        common_params(need_g=True)
        er = opt.get("e_range", str)
        values["e_range"] = parse_range(er, 2) if er else None
        values["n_lowest"] = int(_positive(opt.get("n_lowest", float, 32), "n-lowest"))
        values["dim"] = int(_positive(opt.get("dim", float, 2000), "dim"))
        values["parity"] = opt.get("parity", parse_parity, 0)
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidParams(f"unknown command {command!r}")
    opt.reject_unknown()
    return RunConfig(command=command, values=values, out=out, fmt=fmt)


DISPATCH = {
    "gcurve": cmd_gcurve,
    "spectrum": cmd_spectrum,
    "degenerate": cmd_degenerate,
    "exceptional": cmd_exceptional,
    "collapse": cmd_collapse,
    "ed": cmd_ed,
}


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(ns)
        DISPATCH[cfg.command](cfg)
    except AtpqrmError as exc:
        print(f"atpqrm: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
