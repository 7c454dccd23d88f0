"""Parameter sweeps, figure replicas, channel audits and trend reports.

Every output is deterministic: rows come out in grid order, floats are written
with 17 significant digits, and file names are derived from parameter values.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import re
from dataclasses import dataclass, field, fields, replace
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .channels import concurrence, make_pure_channel
from .linalg import validate_density
from .teleport import (
    fidelity_paper_accel,
    singlet_correction_table,
    teleport,
)
from .unruh import (
    R_EDGE_SLACK,
    R_PHYSICAL_MAX,
    UnphysicalRapidityError,
    accelerated_input_state,
    apply_unruh_two,
    paper_channel_elements,
    paper_input_state,
    pure_input_state,
    rapidity,
)

log = logging.getLogger(__name__)

MODES = ("canonical", "paper-literal")
INPUT_KINDS = ("accelerated", "nonaccelerated")
AXES = ("alpha", "r1", "r2", "r3", "p")
AUDIT_SCHEMA_VERSION = 1


class ScenarioError(ValueError):
    """Malformed or out-of-range scenario."""


class TrendError(ValueError):
    pass


def fmt(x: float) -> str:
    return format(float(x), ".17g")


_PI_FORM = re.compile(r"^(?P<coef>[-+]?(?:\d+\.?\d*|\.\d+)?)\*?pi(?:/(?P<den>\d+\.?\d*))?$")


def parse_number(text: str) -> float:
    """Parse a float; ``pi``, ``pi/4``, ``0.5*pi`` and ``2pi/3`` are also accepted."""
    s = str(text).strip().replace(" ", "").lower()
    try:
        value = float(s)
    except ValueError:
        m = _PI_FORM.match(s)
        if not m:
            raise ScenarioError(f"cannot parse number {text!r}") from None
        coef = m.group("coef")
        signs = {"": 1.0, "+": 1.0, "-": -1.0}
        value = math.pi * (signs[coef] if coef in signs else float(coef))
        if m.group("den"):
            value /= float(m.group("den"))
    if not math.isfinite(value):
        raise ScenarioError(f"number must be finite, got {text!r}")
    return value


def parse_bool(text) -> bool:
    if isinstance(text, bool):
        return text
    s = str(text).strip().lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off"):
        return False
    raise ScenarioError(f"cannot parse boolean {text!r}")


@dataclass(frozen=True)
class SweepScenario:
    p: float = 0.0
    r1: float = 0.0
    r2: float = 0.0
    r3: float = 0.0
    alpha: float = 1.0
    input_kind: str = "accelerated"
    mode: str = "canonical"
    sweep_axis: str = "alpha"
    grid_from: float = 0.0
    grid_to: float = 1.0
    steps: int = 101
    allow_unphysical_r: bool = False

    def validate(self) -> "SweepScenario":
        if self.mode not in MODES:
            raise ScenarioError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.input_kind not in INPUT_KINDS:
            raise ScenarioError(f"input must be one of {INPUT_KINDS}, got {self.input_kind!r}")
        if self.sweep_axis not in AXES:
            raise ScenarioError(f"sweep axis must be one of {AXES}, got {self.sweep_axis!r}")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ScenarioError(f"grid needs at least 2 integer steps, got {self.steps!r}")
        if not self.grid_from <= self.grid_to:
            raise ScenarioError(f"grid from ({self.grid_from}) exceeds to ({self.grid_to})")
        for name in ("p", "alpha"):
            lo, hi = self._range(name)
            if not 0.0 <= lo <= hi <= 1.0:
                raise ScenarioError(f"{name} must lie in [0, 1]")
        for name in ("r1", "r2", "r3"):
            lo, hi = self._range(name)
            if lo < 0 or hi >= math.pi / 2:
                raise ScenarioError(f"{name} must lie in [0, pi/2)")
            if hi > R_PHYSICAL_MAX + R_EDGE_SLACK and not self.allow_unphysical_r:
                raise UnphysicalRapidityError(
                    f"{name} = {hi} exceeds pi/4; pass --allow-unphysical-r to override"
                )
        return self

    def _range(self, name: str) -> tuple[float, float]:
        if name == self.sweep_axis:
            return self.grid_from, self.grid_to
        v = getattr(self, name)
        return v, v

    def grid(self) -> np.ndarray:
        return np.linspace(self.grid_from, self.grid_to, int(self.steps))

    def unphysical_fields(self) -> list[str]:
        return [
            n for n in ("r1", "r2", "r3") if self._range(n)[1] > R_PHYSICAL_MAX + R_EDGE_SLACK
        ]

    def label(self) -> str:
        fixed = [f"{n}={getattr(self, n):.6g}" for n in ("p", "r1", "r2", "r3", "alpha")
                 if n != self.sweep_axis]
        return f"{self.input_kind}/{self.mode} over {self.sweep_axis} ({', '.join(fixed)})"


# scenario-file key -> dataclass field
SCENARIO_KEYS = {
    "p": "p", "r1": "r1", "r2": "r2", "r3": "r3", "alpha": "alpha",
    "input": "input_kind", "mode": "mode", "axis": "sweep_axis",
    "from": "grid_from", "to": "grid_to", "steps": "steps",
    "allow_unphysical_r": "allow_unphysical_r",
}


def parse_scenario_text(text: str) -> dict[str, str]:
    """Flat ``key=value`` lines; ``#`` starts a comment."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ScenarioError(f"line {lineno}: expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in SCENARIO_KEYS:
            raise ScenarioError(f"line {lineno}: unknown key {key!r}")
        values[key] = value
    return values


def scenario_from_mapping(values: dict, base: SweepScenario | None = None) -> SweepScenario:
    kwargs = {}
    for key, raw in values.items():
        if raw is None:
            continue
        name = SCENARIO_KEYS.get(key.replace("-", "_"), key)
        if name in ("p", "r1", "r2", "r3", "alpha", "grid_from", "grid_to"):
            kwargs[name] = parse_number(raw)
        elif name == "steps":
            try:
                kwargs[name] = int(raw)
            except ValueError as exc:
                raise ScenarioError(f"steps must be an integer, got {raw!r}") from exc
        elif name == "allow_unphysical_r":
            kwargs[name] = parse_bool(raw)
        elif name in ("input_kind", "mode", "sweep_axis"):
            kwargs[name] = str(raw).strip()
        else:
            raise ScenarioError(f"unknown scenario key {key!r}")
    scenario = replace(base or SweepScenario(), **kwargs)
    if "sweep_axis" in kwargs and "grid_to" not in kwargs and base is None:
        if scenario.sweep_axis in ("r1", "r2", "r3"):
            scenario = replace(scenario, grid_to=R_PHYSICAL_MAX)
    return scenario


def load_scenario(path) -> SweepScenario:
    return scenario_from_mapping(parse_scenario_text(Path(path).read_text()))


@dataclass(frozen=True)
class SweepRow:
    sweep_axis_value: float
    p: float
    r1: float
    r2: float
    r3: float
    alpha: float
    input_kind: str
    mode: str
    fidelity_raw: float
    fidelity_renormalized: float
    fidelity_average: float
    prob_phi_plus: float
    prob_phi_minus: float
    prob_psi_plus: float
    prob_psi_minus: float
    concurrence_channel: float
    trace_input: float
    valid_channel: bool
    valid_bob_state: bool

    def csv_fields(self) -> list[str]:
        out = []
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool):
                out.append("true" if v else "false")
            elif isinstance(v, str):
                out.append(v)
            else:
                out.append(fmt(v))
        return out


CSV_HEADER = [f.name for f in fields(SweepRow)]


@lru_cache(maxsize=4096)
def _channel(p: float, r1: float, r2: float, allow: bool):
    rho = apply_unruh_two(
        make_pure_channel(p), rapidity(r1, allow), rapidity(r2, allow)
    )
    return rho, concurrence(rho), validate_density(rho).passed


def evaluate_point(
    p: float, r1: float, r2: float, r3: float, alpha: float,
    input_kind: str = "accelerated", mode: str = "canonical",
    allow_unphysical_r: bool = False, axis_value: float | None = None,
) -> SweepRow:
    """Fidelity columns for one parameter point.

    In canonical mode the accelerated input is the region-I reduction of the
    pure input; ``fidelity_raw`` is the unnormalized Phi+ overlap,
    ``fidelity_renormalized`` the Phi+-conditioned fidelity and
    ``fidelity_average`` the outcome average. In paper-literal mode the
    accelerated input is the published diagonal state, ``fidelity_raw`` is the
    published ``b1*mu00 + b2*mu11`` and ``fidelity_renormalized`` divides it by
    the engine's Phi+ probability. The non-accelerated input has no usable
    published closed form, so both modes run it through the engine.
    """
    beta = math.sqrt(max(0.0, 1.0 - alpha * alpha))
    channel, conc, valid_channel = _channel(p, r1, r2, allow_unphysical_r)
    r3r = rapidity(r3, allow_unphysical_r)
    table = singlet_correction_table()

    if input_kind == "nonaccelerated":
        state = pure_input_state(alpha, beta)
    elif mode == "canonical":
        state = accelerated_input_state(alpha, beta, r3r)
    else:
        state = paper_input_state(alpha, beta, r3r).matrix
    result = teleport(state, channel, table)
    trace_input = float(np.real(np.trace(state)))

    if input_kind == "accelerated" and mode == "paper-literal":
        raw = fidelity_paper_accel(alpha, beta, r3r, channel)
        renorm = raw / result.probabilities[0] if result.probabilities[0] > 0 else math.nan
    else:
        raw = result.phi_plus_overlap
        renorm = result.phi_plus_fidelity

    valid_bob = all(
        validate_density(s).passed
        for s, prob in zip(result.bob_states, result.probabilities)
        if prob > 1e-12
    )
    probs = [float(x) for x in result.probabilities]
    return SweepRow(
        float(axis_value if axis_value is not None else alpha),
        p, r1, r2, r3, alpha, input_kind, mode,
        float(raw), float(renorm), result.average_fidelity,
        *probs, conc, trace_input, bool(valid_channel), bool(valid_bob),
    )


def run_sweep(scenario: SweepScenario) -> list[SweepRow]:
    scenario.validate()
    for name in scenario.unphysical_fields():
        log.warning("%s exceeds pi/4 (unphysical); allowed by override", name)
    rows = []
    for x in scenario.grid():
        point = {n: getattr(scenario, n) for n in ("p", "r1", "r2", "r3", "alpha")}
        point[scenario.sweep_axis] = float(x)
        rows.append(
            evaluate_point(
                **point, input_kind=scenario.input_kind, mode=scenario.mode,
                allow_unphysical_r=scenario.allow_unphysical_r, axis_value=float(x),
            )
        )
    off = sum(1 for r in rows if abs(r.trace_input - 1.0) > 1e-12)
    if off:
        log.warning(
            "paper-literal input is unnormalized at %d of %d grid points (%s)",
            off, len(rows), scenario.label(),
        )
    return rows


def rows_to_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buf.getvalue()


def write_csv(rows: Iterable[SweepRow], path) -> None:
    Path(path).write_bytes(rows_to_csv(rows).encode("ascii"))


# -- figure replicas ----------------------------------------------------------

FIG2_R3 = (0.1, 0.3, 0.8)
FIG3_P = (0.1, 0.2, 0.3)
FIG4_R12 = (0.8, 0.5, 0.0001)
FIG4_P = {"a": 0.0, "b": 0.5}


def _name(x: float) -> str:
    return format(x, "g")


def fig2_scenarios(steps: int = 101) -> dict[str, list[SweepScenario]]:
    """Maximally entangled channel, r1 = r2 = 0.7, alpha swept over [0, 1]."""
    base = SweepScenario(p=0.0, r1=0.7, r2=0.7, sweep_axis="alpha", grid_from=0.0,
                         grid_to=1.0, steps=steps, allow_unphysical_r=True)
    files = {
        f"fig2_r3_{_name(r3)}.csv": [replace(base, r3=r3, mode=m) for m in MODES]
        for r3 in FIG2_R3
    }
    files["fig2_nonaccelerated.csv"] = [replace(base, input_kind="nonaccelerated")]
    return files


def fig3_scenarios(steps: int = 101) -> dict[str, list[SweepScenario]]:
    """Pure channels p = 0.1, 0.2, 0.3 with r1 = r2 = r3 = 0.7, alpha swept."""
    base = SweepScenario(r1=0.7, r2=0.7, r3=0.7, sweep_axis="alpha", grid_from=0.0,
                         grid_to=1.0, steps=steps)
    return {
        f"fig3_p_{_name(p)}.csv": [
            replace(base, p=p, mode="canonical"),
            replace(base, p=p, mode="paper-literal"),
            replace(base, p=p, input_kind="nonaccelerated"),
        ]
        for p in FIG3_P
    }


def fig4_scenarios(steps: int = 101) -> dict[str, list[SweepScenario]]:
    """|alpha|^2 = 1/2, r3 swept over [0, pi/4]; panel a is p = 0, panel b p = 0.5."""
    base = SweepScenario(alpha=1 / math.sqrt(2), sweep_axis="r3", grid_from=0.0,
                         grid_to=R_PHYSICAL_MAX, steps=steps, allow_unphysical_r=True)
    return {
        f"fig4{panel}_r12_{_name(r)}.csv": [
            replace(base, p=p, r1=r, r2=r, mode=m) for m in MODES
        ]
        for panel, p in FIG4_P.items()
        for r in FIG4_R12
    }


REPLICAS = {"fig2": fig2_scenarios, "fig3": fig3_scenarios, "fig4": fig4_scenarios}


def apply_overrides(files: dict[str, list[SweepScenario]], overrides: dict) -> dict:
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if not overrides:
        return files
    log.warning("overriding caption parameters: %s",
                ", ".join(f"{k}={v}" for k, v in sorted(overrides.items())))
    return {
        name: [scenario_from_mapping(overrides, base=s) for s in scenarios]
        for name, scenarios in files.items()
    }


def run_replica(name: str, outdir, steps: int = 101, overrides: dict | None = None) -> list[Path]:
    files = apply_overrides(REPLICAS[name](steps), overrides or {})
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for filename, scenarios in files.items():
        rows = [row for s in scenarios for row in run_sweep(s)]
        path = outdir / filename
        write_csv(rows, path)
        written.append(path)
    return written


# -- channel audit ------------------------------------------------------------

def audit_record(p: float, r1: float, r2: float) -> dict:
    """Machine-readable printed-vs-canonical comparison of the accelerated channel."""
    allow = max(r1, r2) > R_PHYSICAL_MAX + R_EDGE_SLACK
    _, audit = paper_channel_elements(p, rapidity(r1, allow), rapidity(r2, allow))
    entries = []
    for i in range(4):
        for j in range(4):
            c = complex(audit.canonical[i, j])
            entries.append({
                "element": [i + 1, j + 1],
                "printed": float(audit.printed[i, j]),
                "canonical_re": c.real,
                "canonical_im": c.imag,
                "difference": abs(audit.printed[i, j] - c),
            })
    return {
        "audit_schema_version": AUDIT_SCHEMA_VERSION,
        "p": p, "r1": r1, "r2": r2,
        "unprinted_elements": [list(e) for e in audit.unprinted],
        "hermiticity": [
            {
                "element": list(f.element), "mirror": list(f.mirror),
                "value": f.value, "mirror_value": f.mirror_value,
                "residual": f.residual, "structural_residual": f.structural_residual,
                "flagged": f.flagged,
            }
            for f in audit.hermiticity
        ],
        "reduction_failures": [
            {"element": list(f.element), "printed_at_zero": f.printed_at_zero,
             "initial": f.initial_value}
            for f in audit.reduction_failures
        ],
        "diff_table": entries,
        "max_abs_difference": max(e["difference"] for e in entries),
    }


def render_audit(record: dict) -> str:
    lines = [
        f"audit-schema-version: {record['audit_schema_version']}",
        f"accelerated channel audit: p={fmt(record['p'])} r1={fmt(record['r1'])} "
        f"r2={fmt(record['r2'])}",
        "",
        "hermiticity of printed elements (pair: value / mirror, residual, structural residual)",
    ]
    for f in record["hermiticity"]:
        mark = "FLAG" if f["flagged"] else "ok  "
        (i, j), (k, l) = f["element"], f["mirror"]
        lines.append(
            f"  {mark} rho{i}{j} vs rho{k}{l}: {fmt(f['value'])} / {fmt(f['mirror_value'])}"
            f", {fmt(f['residual'])}, {fmt(f['structural_residual'])}"
        )
    lines.append("")
    lines.append("reduction at r1 = r2 = 0 against the initial channel")
    if not record["reduction_failures"]:
        lines.append("  all elements reduce correctly")
    for f in record["reduction_failures"]:
        i, j = f["element"]
        lines.append(
            f"  FLAG rho{i}{j}: printed {fmt(f['printed_at_zero'])} vs initial {fmt(f['initial'])}"
        )
    lines.append("")
    lines.append("printed vs canonical (element: printed, canonical, |difference|)")
    for e in record["diff_table"]:
        i, j = e["element"]
        lines.append(
            f"  rho{i}{j}: {fmt(e['printed'])}, {fmt(e['canonical_re'])}"
            f"{'+' if e['canonical_im'] >= 0 else '-'}{fmt(abs(e['canonical_im']))}j"
            f", {fmt(e['difference'])}"
        )
    unprinted = ", ".join(f"rho{i}{j}" for i, j in record["unprinted_elements"])
    lines.append("")
    lines.append(f"not printed, filled from mirror element: {unprinted}")
    lines.append(f"max |difference|: {fmt(record['max_abs_difference'])}")
    return "\n".join(lines) + "\n"


def run_audit(p: float, r1: float, r2: float, out=None) -> dict:
    """Build the audit; with ``out`` write ``out`` (text) and ``out`` + ``.json``."""
    record = audit_record(p, r1, r2)
    if out is not None:
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(render_audit(record).encode("utf-8"))
        Path(str(out) + ".json").write_bytes(
            (json.dumps(record, indent=2, sort_keys=True) + "\n").encode("utf-8")
        )
    return record


# -- trend reports ------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    key: str
    text: str
    parameter: str
    direction: int  # +1 non-decreasing, -1 non-increasing
    input_kinds: tuple[str, ...]


CLAIMS = (
    Claim("fidelity-vs-p", "fidelity decreases as the channel loses entanglement (p grows)",
          "p", -1, INPUT_KINDS),
    Claim("fidelity-vs-r3", "accelerated-input fidelity increases as r3 increases",
          "r3", +1, ("accelerated",)),
    Claim("fs-vs-alpha", "non-accelerated fidelity decreases as alpha increases",
          "alpha", -1, ("nonaccelerated",)),
)
TREND_COLUMNS = ("fidelity_raw", "fidelity_renormalized", "fidelity_average")
TREND_SLACK = 1e-12


@dataclass(frozen=True)
class Verdict:
    claim: str
    mode: str
    column: str
    source: str
    verdict: str
    subrange: tuple[float, float] | None = None

    def line(self) -> str:
        extra = ""
        if self.verdict == "holds-on-subrange":
            extra = f" [{fmt(self.subrange[0])}, {fmt(self.subrange[1])}]"
        return f"{self.claim} | {self.mode} | {self.column} | {self.source} | {self.verdict}{extra}"


@dataclass
class TrendReport:
    sweep_axis: str
    verdicts: list[Verdict] = field(default_factory=list)

    def render(self) -> str:
        lines = [f"trend report over sweep axis {self.sweep_axis}"]
        for claim in CLAIMS:
            mine = [v for v in self.verdicts if v.claim == claim.key]
            if not mine:
                continue
            lines.append("")
            lines.append(f"claim {claim.key}: {claim.text}")
            lines.extend("  " + v.line() for v in mine)
        return "\n".join(lines) + "\n"

    def find(self, claim: str, mode: str | None = None, column: str | None = None) -> list[Verdict]:
        return [v for v in self.verdicts if v.claim == claim
                and (mode is None or v.mode == mode)
                and (column is None or v.column == column)]


def monotone_verdict(xs: Sequence[float], ys: Sequence[float], direction: int) -> tuple[str, tuple | None]:
    """Verdict on whether ``ys`` moves in ``direction`` along increasing ``xs``.

    ``holds-on-subrange`` reports the longest contiguous stretch of ``xs`` over
    which it does.
    """
    ok = [direction * (b - a) >= -TREND_SLACK for a, b in zip(ys, ys[1:])]
    if all(ok):
        return "holds", None
    best, start, best_span = 0, None, None
    run = 0
    for i, good in enumerate(ok):
        if good:
            run += 1
            if start is None:
                start = i
            if run > best:
                best, best_span = run, (xs[start], xs[i + 1])
        else:
            run, start = 0, None
    if best == 0:
        return "fails", None
    return "holds-on-subrange", best_span


def _pointwise_verdict(xs, series_by_param: list[tuple[float, list[float]]], direction):
    """Across scenarios differing only in one parameter: does the ordering hold at each x?"""
    series_by_param = sorted(series_by_param, key=lambda t: t[0])
    good = []
    for i in range(len(xs)):
        vals = [s[i] for _, s in series_by_param]
        good.append(all(direction * (b - a) >= -TREND_SLACK for a, b in zip(vals, vals[1:])))
    if all(good):
        return "holds", None
    if not any(good):
        return "fails", None
    best, span, start = 0, None, None
    for i, g in enumerate(good + [False]):
        if g and start is None:
            start = i
        elif not g and start is not None:
            if i - start > best:
                best, span = i - start, (xs[start], xs[i - 1])
            start = None
    return "holds-on-subrange", span


def run_trend_report(scenarios: Sequence[SweepScenario]) -> TrendReport:
    if not scenarios:
        raise TrendError("no scenarios given")
    axes = {s.sweep_axis for s in scenarios}
    if len(axes) > 1:
        raise TrendError(f"scenarios mix sweep axes {sorted(axes)}")
    axis = axes.pop()
    rows = {s: run_sweep(s) for s in scenarios}
    report = TrendReport(axis)

    for claim in CLAIMS:
        for mode in MODES:
            relevant = [s for s in scenarios if s.mode == mode and s.input_kind in claim.input_kinds]
            if axis == claim.parameter:
                for s in relevant:
                    xs = [r.sweep_axis_value for r in rows[s]]
                    for col in TREND_COLUMNS:
                        ys = [getattr(r, col) for r in rows[s]]
                        verdict, span = monotone_verdict(xs, ys, claim.direction)
                        report.verdicts.append(
                            Verdict(claim.key, mode, col, f"along {axis}: {s.label()}", verdict, span)
                        )
                continue
            # across scenarios that differ only in the claim parameter
            groups: dict = {}
            for s in relevant:
                key = replace(s, **{claim.parameter: 0.0})
                groups.setdefault(key, []).append(s)
            for key, members in groups.items():
                if len({getattr(s, claim.parameter) for s in members}) < 2:
                    continue
                xs = [r.sweep_axis_value for r in rows[members[0]]]
                values = ", ".join(f"{getattr(s, claim.parameter):.6g}" for s in
                                   sorted(members, key=lambda s: getattr(s, claim.parameter)))
                fixed = ", ".join(
                    f"{n}={getattr(key, n):.6g}" for n in ("p", "r1", "r2", "r3", "alpha")
                    if n not in (axis, claim.parameter)
                )
                source = (f"across {claim.parameter} in {{{values}}} at each {axis}: "
                          f"{key.input_kind}/{mode} ({fixed})")
                for col in TREND_COLUMNS:
                    series = [(getattr(s, claim.parameter), [getattr(r, col) for r in rows[s]])
                              for s in members]
                    verdict, span = _pointwise_verdict(xs, series, claim.direction)
                    report.verdicts.append(Verdict(claim.key, mode, col, source, verdict, span))
    if not report.verdicts:
        raise TrendError("no trend computable: need a claimed parameter on the sweep axis "
                         "or at least two scenarios differing in one")
    return report


def p_sweep_scenarios(alphas: Sequence[float] = (0.0, 0.5, 1 / math.sqrt(2), 0.9, 1.0),
                      r: float = 0.7, steps: int = 101) -> list[SweepScenario]:
    """Channel parameter swept over [0, 1] at r1 = r2 = r3 = ``r``, canonical and literal."""
    return [
        SweepScenario(r1=r, r2=r, r3=r, alpha=a, mode=m, sweep_axis="p",
                      grid_from=0.0, grid_to=1.0, steps=steps)
        for a in alphas for m in MODES
    ]


def trend_preset(name: str, steps: int = 101) -> list[SweepScenario]:
    if name == "p-sweep":
        return p_sweep_scenarios(steps=steps)
    if name in REPLICAS:
        return [s for group in REPLICAS[name](steps).values() for s in group]
    raise TrendError(f"unknown trend preset {name!r}")
