"""Run configuration: INI document <-> validated :class:`RunConfig`.

Sections and keys::

    [oracle]  pipeline, register_bits, alpha_merkle, n_tx, beta_midstate,
              adder_model, synthesis, include_diffusion, depth_extras,
              fixed_point_factor
    [sweep]   bits, t_caps, targets, architectures
    [model]   budget_mode, width_mode
    [ladder]  rungs, gate_floor_power
    [output]  format, path
    [run]     seed, workers
    [arch.<name>]  tau_s, lambda, p_phys, watts_per_qubit, efficiency

List values are comma separated; ``bits`` also accepts ``start:stop:step``
(stop inclusive).
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction

from groverfleet.errors import InvalidInputError
from groverfleet.hash_ledger import AdderModel, HashPipeline, PipelineKind, ToffoliSynthesis
from groverfleet.hesc_ladder import RUNGS, EnergyRung
from groverfleet.mining_model import MAINNET_BITS_2025, OracleSpec
from groverfleet.surface_code import (
    PRESETS,
    ArchitectureSpec,
    FailureBudgetMode,
    WidthMode,
    architectures_from_ini,
)

OUTPUT_FORMATS = ("csv", "json", "table")


class ConfigError(InvalidInputError):
    """A configuration value failed validation; message starts with its key path."""


@dataclass(frozen=True)
class OracleSettings:
    pipeline: str = PipelineKind.DOUBLE_SHA256_HEADER.value
    register_bits: int = 256
    alpha_merkle: int = 0
    n_tx: int = 1
    beta_midstate: Fraction = Fraction(1)
    adder_model: str = AdderModel.CDKM_BASELINE.value
    synthesis: str = ToffoliSynthesis.RELATIVE_PHASE.value
    include_diffusion: bool = True
    depth_extras: bool = False
    fixed_point_factor: float = 1.0

    def to_oracle(self) -> OracleSpec:
        return OracleSpec(
            pipeline=HashPipeline(PipelineKind(self.pipeline)),
            alpha_merkle=self.alpha_merkle,
            n_tx=self.n_tx,
            beta_midstate=self.beta_midstate,
            register_bits=self.register_bits,
            adder_model=AdderModel(self.adder_model),
            synthesis=ToffoliSynthesis(self.synthesis),
            include_diffusion=self.include_diffusion,
            depth_extras=self.depth_extras,
            fixed_point_factor=self.fixed_point_factor,
        )


@dataclass(frozen=True)
class SweepSettings:
    bits: tuple[float, ...] = (32.0, 64.0, MAINNET_BITS_2025, 96.0, 128.0, 160.0, 224.0, 256.0)
    t_caps: tuple[float, ...] = (60.0, 600.0)
    targets: tuple[float, ...] = (0.5, 0.99)
    architectures: tuple[str, ...] = ("superconducting",)


@dataclass(frozen=True)
class RunConfig:
    oracle: OracleSettings = field(default_factory=OracleSettings)
    sweep: SweepSettings = field(default_factory=SweepSettings)
    budget_mode: str = FailureBudgetMode.T_COUNT_PROXY.value
    width_mode: str = WidthMode.FULL_WIDTH.value
    rungs: tuple[str, ...] = tuple(RUNGS)
    gate_floor_power: bool = False
    output_format: str = "csv"
    output_path: str | None = None
    seed: int = 20250101
    workers: int = 1
    # Only architectures that differ from (or are absent from) the presets.
    arch_overrides: tuple[ArchitectureSpec, ...] = ()

    def architectures(self) -> dict[str, ArchitectureSpec]:
        out = dict(PRESETS)
        out.update({a.name: a for a in self.arch_overrides})
        return out

    def resolve_architectures(self) -> tuple[ArchitectureSpec, ...]:
        table = self.architectures()
        return tuple(table[name] for name in self.sweep.architectures)

    def resolve_rungs(self) -> tuple[EnergyRung, ...]:
        return tuple(RUNGS[t] for t in self.rungs)


def _err(path: str, msg: str) -> ConfigError:
    return ConfigError(f"{path}: {msg}")


def _as_int(path: str, raw: str) -> int:
    try:
        return int(raw.strip())
    except ValueError:
        raise _err(path, f"expected an integer, got {raw!r}") from None


def _as_float(path: str, raw: str) -> float:
    try:
        return float(raw.strip())
    except ValueError:
        raise _err(path, f"expected a number, got {raw!r}") from None


def _as_bool(path: str, raw: str) -> bool:
    v = raw.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise _err(path, f"expected a boolean, got {raw!r}")


def _as_choice(path: str, raw: str, choices) -> str:
    v = raw.strip()
    if v not in choices:
        raise _err(path, f"expected one of {sorted(choices)}, got {v!r}")
    return v


def _as_floats(path: str, raw: str, allow_range: bool = False) -> tuple[float, ...]:
    raw = raw.strip()
    if allow_range and ":" in raw:
        parts = raw.split(":")
        if len(parts) != 3:
            raise _err(path, f"range must be start:stop:step, got {raw!r}")
        start, stop, step = (_as_float(path, p) for p in parts)
        if step <= 0 or stop < start:
            raise _err(path, "range needs step > 0 and stop >= start")
        count = int(round((stop - start) / step))
        return tuple(start + i * step for i in range(count + 1) if start + i * step <= stop + 1e-9)
    vals = tuple(_as_float(path, p) for p in raw.split(",") if p.strip())
    if not vals:
        raise _err(path, "list is empty")
    return vals


def _as_names(path: str, raw: str) -> tuple[str, ...]:
    vals = tuple(p.strip() for p in raw.split(",") if p.strip())
    if not vals:
        raise _err(path, "list is empty")
    return vals


def _as_fraction(path: str, raw: str) -> Fraction:
    try:
        return Fraction(raw.strip())
    except (ValueError, ZeroDivisionError):
        raise _err(path, f"expected a fraction such as 1 or 1/2, got {raw!r}") from None


_ORACLE_PARSERS = {
    "pipeline": lambda p, r: _as_choice(p, r, {k.value for k in PipelineKind}),
    "register_bits": _as_int,
    "alpha_merkle": _as_int,
    "n_tx": _as_int,
    "beta_midstate": _as_fraction,
    "adder_model": lambda p, r: _as_choice(p, r, {k.value for k in AdderModel}),
    "synthesis": lambda p, r: _as_choice(p, r, {k.value for k in ToffoliSynthesis}),
    "include_diffusion": _as_bool,
    "depth_extras": _as_bool,
    "fixed_point_factor": _as_float,
}
_SWEEP_PARSERS = {
    "bits": lambda p, r: _as_floats(p, r, allow_range=True),
    "t_caps": _as_floats,
    "targets": _as_floats,
    "architectures": _as_names,
}


def _check_unknown(parser: configparser.ConfigParser, section: str, allowed) -> None:
    for key in parser[section]:
        if key not in allowed:
            raise _err(f"{section}.{key}", f"unknown key; expected one of {sorted(allowed)}")


def parse_config(text: str) -> RunConfig:
    """Parse and validate; every failure names its ``section.key`` path."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"<document>: {exc}") from None
    known = {"oracle", "sweep", "model", "ladder", "output", "run"}
    for section in parser.sections():
        if section not in known and not section.startswith("arch."):
            raise _err(section, f"unknown section; expected one of {sorted(known)} or arch.<name>")

    cfg = RunConfig()
    if parser.has_section("oracle"):
        _check_unknown(parser, "oracle", _ORACLE_PARSERS)
        vals = {k: _ORACLE_PARSERS[k](f"oracle.{k}", v) for k, v in parser["oracle"].items()}
        cfg = replace(cfg, oracle=replace(cfg.oracle, **vals))
    if parser.has_section("sweep"):
        _check_unknown(parser, "sweep", _SWEEP_PARSERS)
        vals = {k: _SWEEP_PARSERS[k](f"sweep.{k}", v) for k, v in parser["sweep"].items()}
        cfg = replace(cfg, sweep=replace(cfg.sweep, **vals))
    if parser.has_section("model"):
        _check_unknown(parser, "model", {"budget_mode", "width_mode"})
        sec = parser["model"]
        if "budget_mode" in sec:
            cfg = replace(cfg, budget_mode=_as_choice("model.budget_mode", sec["budget_mode"], {m.value for m in FailureBudgetMode}))
        if "width_mode" in sec:
            cfg = replace(cfg, width_mode=_as_choice("model.width_mode", sec["width_mode"], {m.value for m in WidthMode}))
    if parser.has_section("ladder"):
        _check_unknown(parser, "ladder", {"rungs", "gate_floor_power"})
        sec = parser["ladder"]
        if "rungs" in sec:
            cfg = replace(cfg, rungs=_as_names("ladder.rungs", sec["rungs"]))
        if "gate_floor_power" in sec:
            cfg = replace(cfg, gate_floor_power=_as_bool("ladder.gate_floor_power", sec["gate_floor_power"]))
    if parser.has_section("output"):
        _check_unknown(parser, "output", {"format", "path"})
        sec = parser["output"]
        if "format" in sec:
            cfg = replace(cfg, output_format=_as_choice("output.format", sec["format"], OUTPUT_FORMATS))
        if "path" in sec:
            cfg = replace(cfg, output_path=sec["path"].strip() or None)
    if parser.has_section("run"):
        _check_unknown(parser, "run", {"seed", "workers"})
        sec = parser["run"]
        if "seed" in sec:
            cfg = replace(cfg, seed=_as_int("run.seed", sec["seed"]))
        if "workers" in sec:
            cfg = replace(cfg, workers=_as_int("run.workers", sec["workers"]))

    arch_sections = [s for s in parser.sections() if s.startswith("arch.")]
    if arch_sections:
        sub = configparser.ConfigParser(interpolation=None)
        for s in arch_sections:
            sub[s] = dict(parser[s])
        buf = io.StringIO()
        sub.write(buf)
        try:
            table = architectures_from_ini(buf.getvalue())
        except InvalidInputError as exc:
            raise ConfigError(str(exc)) from None
        overrides = tuple(a for name, a in sorted(table.items()) if PRESETS.get(name) != a)
        cfg = replace(cfg, arch_overrides=overrides)
    validate(cfg)
    return cfg


def validate(cfg: RunConfig) -> RunConfig:
    o = cfg.oracle
    if not 1 <= o.register_bits <= 256:
        raise _err("oracle.register_bits", f"must lie in [1, 256], got {o.register_bits}")
    try:
        o.to_oracle()
    except InvalidInputError as exc:
        raise _err("oracle", str(exc)) from None
    for b in cfg.sweep.bits:
        if not 0 <= b:
            raise _err("sweep.bits", f"difficulty bits must be >= 0, got {b}")
    for t in cfg.sweep.t_caps:
        if not t > 0:
            raise _err("sweep.t_caps", f"runtime caps must be positive, got {t}")
    for pt in cfg.sweep.targets:
        if not 0 < pt < 1:
            raise _err("sweep.targets", f"success targets must lie in (0, 1), got {pt}")
    table = cfg.architectures()
    for name in cfg.sweep.architectures:
        if name not in table:
            raise _err("sweep.architectures", f"unknown architecture {name!r}; known: {sorted(table)}")
    for tag in cfg.rungs:
        if tag not in RUNGS:
            raise _err("ladder.rungs", f"unknown rung {tag!r}")
    if cfg.workers < 1:
        raise _err("run.workers", "must be >= 1")
    if cfg.output_format not in OUTPUT_FORMATS:
        raise _err("output.format", f"expected one of {OUTPUT_FORMATS}")
    return cfg


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, tuple):
        return ", ".join(_fmt(x) for x in v)
    return str(v)


def dump_config(cfg: RunConfig) -> str:
    """Serialize every setting; ``parse_config(dump_config(c)) == c``."""
    parser = configparser.ConfigParser(interpolation=None)
    parser["oracle"] = {f.name: _fmt(getattr(cfg.oracle, f.name)) for f in fields(cfg.oracle)}
    parser["sweep"] = {f.name: _fmt(getattr(cfg.sweep, f.name)) for f in fields(cfg.sweep)}
    parser["model"] = {"budget_mode": cfg.budget_mode, "width_mode": cfg.width_mode}
    parser["ladder"] = {"rungs": _fmt(cfg.rungs), "gate_floor_power": _fmt(cfg.gate_floor_power)}
    out = {"format": cfg.output_format}
    if cfg.output_path:
        out["path"] = cfg.output_path
    parser["output"] = out
    parser["run"] = {"seed": str(cfg.seed), "workers": str(cfg.workers)}
    for a in cfg.arch_overrides:
        parser[f"arch.{a.name}"] = {
            "tau_s": repr(a.tau_s),
            "lambda": repr(a.layout_lambda),
            "p_phys": repr(a.p_phys),
            "watts_per_qubit": repr(a.watts_per_qubit),
            "efficiency": repr(a.wall_plug_efficiency),
        }
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()
