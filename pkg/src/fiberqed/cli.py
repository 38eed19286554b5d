"""Scenario runner: reproduces the data behind each figure as CSV files.

Config files use flat ``key = value`` lines in three sections, [params],
[run] and an optional [sweep].  Output is comma-separated text with a
'#'-prefixed header that echoes the full parameter set, so every file is
self-documenting and byte-identical across runs.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from configparser import ConfigParser, Error as ConfigParserError
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import dynamics, eigen, spectra
from .errors import ConfigInvalid
from .model import SystemParams, single_excitation

__all__ = ["Scenario", "parse_scenario", "run_scenario", "main"]

RUN_KINDS = ("trajectory", "spectrum", "decomposition")
SWEEPABLE = ("g", "v", "kappa", "kappa_b", "gamma")
_FMT = "%.12e"


@dataclass
class Scenario:
    name: str
    params: SystemParams
    initial: str
    run: str
    channels: tuple
    t_max: float | None
    dt: float
    record_every: int
    omega_spec: tuple | None  # (min, max, points) or None for the default grid
    sweep: tuple | None       # (parameter, values) or None
    out_base: str


def _floats(section, key, raw):
    try:
        return float(raw)
    except ValueError:
        raise ConfigInvalid(f"[{section}] {key} = {raw!r} is not a number") from None


_PARAM_KEYS = {
    "g", "g1", "g2", "v", "v1", "v2", "kappa", "kappa1", "kappa2",
    "kappa_b", "gamma", "detuning",
}
_RUN_KEYS = {
    "type", "initial", "channels", "t_max", "dt", "record_every",
    "omega_min", "omega_max", "omega_points", "out",
}
_SWEEP_KEYS = {"parameter", "values"}


def parse_scenario(path) -> Scenario:
    """Parse and validate a scenario file; ConfigInvalid names bad keys."""
    path = Path(path)
    cp = ConfigParser(inline_comment_prefixes=("#",))
    try:
        read = cp.read(path)
    except ConfigParserError as exc:
        raise ConfigInvalid(f"cannot parse {path}: {exc}") from None
    if not read:
        raise ConfigInvalid(f"config file {path} not found")
    for section in cp.sections():
        if section not in ("params", "run", "sweep"):
            raise ConfigInvalid(f"unknown section [{section}]")
    if not cp.has_section("params"):
        raise ConfigInvalid("missing required section [params]")
    if not cp.has_section("run"):
        raise ConfigInvalid("missing required section [run]")

    raw_params = dict(cp.items("params"))
    for key in raw_params:
        if key not in _PARAM_KEYS:
            raise ConfigInvalid(f"unknown key [params] {key}")

    def both(common, one, two, required=True):
        if common in raw_params:
            if one in raw_params or two in raw_params:
                raise ConfigInvalid(f"[params] give either {common} or {one}/{two}, not both")
            val = _floats("params", common, raw_params[common])
            return val, val
        if one in raw_params and two in raw_params:
            return (_floats("params", one, raw_params[one]),
                    _floats("params", two, raw_params[two]))
        if required:
            raise ConfigInvalid(f"[params] missing key {common} (or {one} and {two})")
        return 0.0, 0.0

    g1, g2 = both("g", "g1", "g2")
    v1, v2 = both("v", "v1", "v2")
    k1, k2 = both("kappa", "kappa1", "kappa2")
    for key in ("kappa_b", "gamma"):
        if key not in raw_params:
            raise ConfigInvalid(f"[params] missing key {key}")
    kappa_b = _floats("params", "kappa_b", raw_params["kappa_b"])
    gamma = _floats("params", "gamma", raw_params["gamma"])
    detuning = _floats("params", "detuning", raw_params.get("detuning", "0"))
    try:
        params = SystemParams(g1, g2, v1, v2, k1, k2, kappa_b, gamma, detuning)
    except ValueError as exc:
        raise ConfigInvalid(f"[params] {exc}") from None

    raw_run = dict(cp.items("run"))
    for key in raw_run:
        if key not in _RUN_KEYS:
            raise ConfigInvalid(f"unknown key [run] {key}")
    kind = raw_run.get("type")
    if kind is None:
        raise ConfigInvalid("[run] missing key type")
    if kind not in RUN_KINDS:
        raise ConfigInvalid(
            f"[run] type = {kind!r} is not one of {', '.join(RUN_KINDS)}"
        )
    initial = raw_run.get("initial", "atom1")
    try:
        single_excitation(initial)
    except ValueError:
        raise ConfigInvalid(f"[run] initial = {initial!r} is not a mode name") from None

    channels = tuple(
        c for c in re.split(r"[,\s]+", raw_run.get("channels", "cavity1,cavity2")) if c
    )
    for c in channels:
        if c not in dynamics.CHANNELS:
            raise ConfigInvalid(f"[run] channels entry {c!r} is not a channel")

    t_max = None
    if kind == "trajectory":
        if "t_max" not in raw_run:
            raise ConfigInvalid("[run] missing key t_max (required for trajectory runs)")
        t_max = _floats("run", "t_max", raw_run["t_max"])
    dt = _floats("run", "dt", raw_run.get("dt", "1e-4"))
    try:
        record_every = int(raw_run.get("record_every", "1"))
    except ValueError:
        raise ConfigInvalid(f"[run] record_every = {raw_run['record_every']!r} "
                            "is not an integer") from None

    omega_spec = None
    omega_keys = [k for k in ("omega_min", "omega_max", "omega_points") if k in raw_run]
    if omega_keys:
        if len(omega_keys) != 3:
            raise ConfigInvalid("[run] omega_min, omega_max and omega_points "
                                "must be given together")
        omega_spec = (
            _floats("run", "omega_min", raw_run["omega_min"]),
            _floats("run", "omega_max", raw_run["omega_max"]),
            int(_floats("run", "omega_points", raw_run["omega_points"])),
        )

    sweep = None
    if cp.has_section("sweep"):
        raw_sweep = dict(cp.items("sweep"))
        for key in raw_sweep:
            if key not in _SWEEP_KEYS:
                raise ConfigInvalid(f"unknown key [sweep] {key}")
        for key in _SWEEP_KEYS:
            if key not in raw_sweep:
                raise ConfigInvalid(f"[sweep] missing key {key}")
        parameter = raw_sweep["parameter"]
        if parameter not in SWEEPABLE:
            raise ConfigInvalid(
                f"[sweep] parameter = {parameter!r} is not one of {', '.join(SWEEPABLE)}"
            )
        values = tuple(
            _floats("sweep", "values", x)
            for x in re.split(r"[,\s]+", raw_sweep["values"]) if x
        )
        if not values or not all(np.isfinite(values)):
            raise ConfigInvalid("[sweep] values must be a non-empty list of finite numbers")
        sweep = (parameter, values)

    return Scenario(
        name=path.stem,
        params=params,
        initial=initial,
        run=kind,
        channels=channels,
        t_max=t_max,
        dt=dt,
        record_every=record_every,
        omega_spec=omega_spec,
        sweep=sweep,
        out_base=raw_run.get("out", path.stem),
    )


def _with_value(params: SystemParams, name: str, value: float) -> SystemParams:
    mapping = {
        "g": {"g1": value, "g2": value},
        "v": {"v1": value, "v2": value},
        "kappa": {"kappa1": value, "kappa2": value},
        "kappa_b": {"kappa_b": value},
        "gamma": {"gamma": value},
    }[name]
    fields = {
        "g1": params.g1, "g2": params.g2, "v1": params.v1, "v2": params.v2,
        "kappa1": params.kappa1, "kappa2": params.kappa2,
        "kappa_b": params.kappa_b, "gamma": params.gamma,
        "detuning": params.detuning,
    }
    fields.update(mapping)
    return SystemParams(**fields)


def _header(scn: Scenario, params: SystemParams, columns, point=None) -> list:
    lines = [f"# fiberqed scenario: {scn.name}"]
    lines.append(
        "# params: "
        + " ".join(
            f"{k}={getattr(params, k):.9g}"
            for k in ("g1", "g2", "v1", "v2", "kappa1", "kappa2",
                      "kappa_b", "gamma", "detuning")
        )
    )
    run_line = f"# run: type={scn.run} initial={scn.initial}"
    if point is not None:
        run_line += f" sweep: {point[0]}={point[1]:.9g}"
    lines.append(run_line)
    lines.append("# columns: " + ",".join(columns))
    return lines


def _write_csv(path: Path, header, columns_data) -> None:
    data = np.column_stack(columns_data)
    with open(path, "w") as fh:
        fh.write("\n".join(header) + "\n")
        np.savetxt(fh, data, fmt=_FMT, delimiter=",")


def _omega_grid(scn: Scenario, params: SystemParams) -> np.ndarray:
    if scn.omega_spec is not None:
        lo, hi, n = scn.omega_spec
        return np.linspace(lo, hi, n)
    return spectra.default_omega_grid(params)


def _run_point(scn: Scenario, params: SystemParams, out_dir: Path, point=None):
    """Execute one parameter point; returns (files, summary lines)."""
    suffix = f"_{point[0]}{point[1]:g}" if point is not None else ""
    decomp = eigen.full_decomposition(params, single_excitation(scn.initial))
    summary = []
    if decomp.labels is not None:
        lam = ", ".join(
            f"{lbl}: {decomp.eigenvalues[j]:.6g}" for j, lbl in enumerate(decomp.labels)
        )
    else:
        lam = ", ".join(f"{x:.6g}" for x in decomp.eigenvalues)
    summary.append(f"eigenvalues: {lam}")

    files = []
    if scn.run == "trajectory":
        params.require_symmetric()  # normal-mode occupation columns need it
        cfg = dynamics.IntegratorConfig(
            dt=scn.dt, t_max=scn.t_max, record_every=scn.record_every
        )
        traj = dynamics.evolve_bare(params, single_excitation(scn.initial), cfg)
        occ = dynamics.occupations(traj)
        cols = ["t", "atom1", "atom2", "cavity1", "cavity2", "fiber",
                "bs_plus", "bs_minus", "fd_plus", "fd_minus", "cd", "survival",
                "p_atom1", "p_atom2", "p_cavity1", "p_cavity2", "p_fiber"]
        data = [traj.times] + [occ[c] for c in cols[1:11]] + [traj.survival]
        data += [traj.channel_probs[c] for c in dynamics.CHANNELS]
        path = out_dir / f"{scn.out_base}{suffix}_trajectory.csv"
        _write_csv(path, _header(scn, params, cols, point), data)
        files.append(path)
        totals = {c: traj.channel_probs[c][-1] for c in dynamics.CHANNELS}
        residual = traj.survival[-1] + sum(totals.values()) - 1.0
    else:
        params.require_symmetric()  # labeled quasi-mode output needs it
        grid = _omega_grid(scn, params)
        specs = {c: spectra.channel_spectrum(decomp, c, grid) for c in scn.channels}
        if scn.run == "spectrum":
            cols = ["omega"] + list(scn.channels)
            data = [grid] + [specs[c].spectrum for c in scn.channels]
            path = out_dir / f"{scn.out_base}{suffix}_spectrum.csv"
            _write_csv(path, _header(scn, params, cols, point), data)
            files.append(path)
        else:  # decomposition
            for c in scn.channels:
                spec = specs[c]
                names = [t.label for t in spec.terms]
                cols = (["omega", "total"]
                        + [f"lorentzian_{n}" for n in names]
                        + [f"w_{names[j]}_{names[k]}" for j, k in spec.pairs]
                        + ["lorentzian_sum"])
                data = ([grid, spec.spectrum]
                        + [spec.prefactor * L for L in spec.lorentzians]
                        + [spec.prefactor * w for w in spec.interferences]
                        + [spectra.lorentzian_approximation(spec)])
                path = out_dir / f"{scn.out_base}{suffix}_decomposition_{c}.csv"
                _write_csv(path, _header(scn, params, cols, point), data)
                files.append(path)
        all_specs = {
            c: spectra.channel_spectrum(decomp, c, grid) for c in dynamics.CHANNELS
        }
        totals = {c: spectra.integrated_spectrum(all_specs[c]) for c in dynamics.CHANNELS}
        residual = sum(totals.values()) - 1.0
    summary.append(
        "channel totals: "
        + " ".join(f"{c}={totals[c]:.6f}" for c in dynamics.CHANNELS)
    )
    summary.append(f"conservation residual: {residual:+.3e}")
    return files, summary


def run_scenario(config_path, out_dir=None, quiet=False) -> list:
    """Run one scenario file; returns the list of files written."""
    scn = parse_scenario(config_path)
    out = Path(out_dir) if out_dir is not None else Path.cwd()
    out.mkdir(parents=True, exist_ok=True)

    points = [None]
    if scn.sweep is not None:
        points = [(scn.sweep[0], value) for value in scn.sweep[1]]

    def job(point):
        params = scn.params if point is None else _with_value(scn.params, *point)
        return _run_point(scn, params, out, point)

    max_workers = len(points)
    env = os.environ.get("FIBERQED_THREADS")
    if env:
        try:
            max_workers = max(1, min(max_workers, int(env)))
        except ValueError:
            raise ConfigInvalid(f"FIBERQED_THREADS = {env!r} is not an integer") from None

    if len(points) == 1:
        results = [job(points[0])]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(job, points))

    written = []
    for point, (files, summary) in zip(points, results):
        written.extend(files)
        if not quiet:
            tag = f" [{point[0]}={point[1]:g}]" if point is not None else ""
            print(f"== {scn.name}{tag}")
            for line in summary:
                print("   " + line)
            for path in files:
                print(f"   wrote {path}")
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="simulate",
        description="Run a fiber-linked cavity-QED scenario file.",
    )
    parser.add_argument("config", help="scenario config file")
    parser.add_argument("--out", default=None, metavar="DIR", help="output directory")
    parser.add_argument("--quiet", action="store_true", help="suppress the summary")
    args = parser.parse_args(argv)
    try:
        run_scenario(args.config, out_dir=args.out, quiet=args.quiet)
    except ConfigInvalid as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
