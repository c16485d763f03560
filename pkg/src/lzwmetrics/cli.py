"""Command-line batch analyzer.

Feeds symbol files, CSV recordings, or synthetic generator output through
the metric pipeline and emits one report per unit (a whole input, or each
full fixed-length window of it) as JSON lines or CSV rows.  Unit order, and
therefore output bytes, are deterministic: paths sort lexicographically and
windows by index.  Failed units are logged to stderr and the run continues.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .generators import ProcessSpec, generate, symmetric_binary_markov
from .metrics import MetricReport, analyze
from .sequence import (
    Alphabet,
    NumericSeries,
    SymbolSequence,
    binarize_median,
    digitize_quantiles,
)

__all__ = ["RunConfig", "ConfigError", "run", "emit_report", "main"]


class ConfigError(ValueError):
    """Contradictory or malformed run configuration; aborts before any unit."""


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved configuration for one batch run."""

    input_path: str | None
    generator: str | None
    generator_spec: ProcessSpec | None
    generator_n: int | None
    input_format: str
    column: str | None
    digitizer: str
    digitizer_levels: int | None
    alphabet_size: int
    window_length: int | None
    q_max: int
    surrogates: int
    seed: int
    output_path: str | None
    output_format: str


@dataclass(frozen=True)
class _Unit:
    source: str
    window: int | None
    sequence: SymbolSequence


# --- configuration -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lzwmetrics",
        description=(
            "Batch LZW complexity metrics for symbol files, CSV recordings, "
            "and synthetic processes."
        ),
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="PATH", help="file or directory to analyze")
    source.add_argument(
        "--generate",
        metavar="SPEC",
        help=(
            "synthetic process instead of a file: bernoulli:p=0.5,n=100000 | "
            "markov:eps=0.1,n=1000000 | markov-file:PATH,n=... | "
            "periodic:pattern=01,n=... | constant:symbol=0,n=..."
        ),
    )
    parser.add_argument(
        "--format",
        choices=["symbols", "csv"],
        default="symbols",
        help="input file format (default: symbols)",
    )
    parser.add_argument(
        "--column",
        metavar="NAME_OR_INDEX",
        help="CSV column to read, by header name or 0-based index (default: 0)",
    )
    parser.add_argument(
        "--digitizer",
        metavar="median|quantiles:K|none",
        help="numeric-to-symbol mapping (default: median for csv input, none otherwise)",
    )
    parser.add_argument(
        "--alphabet-size",
        type=int,
        default=2,
        metavar="A",
        help="alphabet size for symbol-format input (default: 2)",
    )
    parser.add_argument(
        "--window",
        type=int,
        metavar="N",
        help="split each input into length-N windows; trailing partials are dropped",
    )
    parser.add_argument(
        "--qmax",
        type=int,
        default=4,
        metavar="Q",
        help="highest conditional-entropy order (default: 4)",
    )
    parser.add_argument(
        "--surrogates",
        type=int,
        default=10,
        metavar="S",
        help="shuffle surrogates per unit, 0 disables (default: 10)",
    )
    parser.add_argument("--seed", type=int, default=0, help="base seed (default: 0)")
    parser.add_argument(
        "--output", metavar="PATH", help="write reports here instead of stdout"
    )
    parser.add_argument(
        "--output-format",
        choices=["json", "csv"],
        default="json",
        help="report serialization (default: json, one object per line)",
    )
    return parser


def _parse_digitizer(text: str) -> tuple[str, int | None]:
    if text == "median":
        return "median", None
    if text == "none":
        return "none", None
    if text.startswith("quantiles:"):
        raw = text.split(":", 1)[1]
        try:
            levels = int(raw)
        except ValueError:
            raise ConfigError(f"bad quantile level count {raw!r}") from None
        if levels < 2:
            raise ConfigError(f"quantile digitizer needs at least 2 levels, got {levels}")
        return "quantiles", levels
    raise ConfigError(f"unknown digitizer {text!r} (use median, quantiles:K, or none)")


def _parse_generator_spec(text: str) -> tuple[ProcessSpec, int]:
    kind, sep, rest = text.partition(":")
    if not sep or not rest:
        raise ConfigError(f"generator spec needs parameters: {text!r}")
    parts = rest.split(",")
    table_path = None
    if kind == "markov-file":
        table_path, parts = parts[0], parts[1:]
    params: dict[str, str] = {}
    for part in parts:
        key, eq, value = part.partition("=")
        if not eq:
            raise ConfigError(f"bad generator parameter {part!r} in {text!r}")
        params[key.strip()] = value.strip()
    try:
        n = int(params.pop("n"))
        if kind == "bernoulli":
            spec = ProcessSpec.bernoulli(float(params.pop("p")))
        elif kind == "markov":
            spec = symmetric_binary_markov(float(params.pop("eps")))
        elif kind == "markov-file":
            table = np.loadtxt(table_path, delimiter=",", ndmin=2)
            spec = ProcessSpec.markov(table, alphabet_size=table.shape[1])
        elif kind == "periodic":
            spec = ProcessSpec.periodic([int(ch) for ch in params.pop("pattern")])
        elif kind == "constant":
            spec = ProcessSpec.constant(int(params.pop("symbol", "0")))
        else:
            raise ConfigError(f"unknown generator kind {kind!r}")
    except KeyError as exc:
        raise ConfigError(f"generator spec {text!r} is missing parameter {exc}") from None
    except OSError as exc:
        raise ConfigError(f"cannot read transition table: {exc}") from None
    except ValueError as exc:
        raise ConfigError(f"bad generator spec {text!r}: {exc}") from None
    if params:
        raise ConfigError(f"unused generator parameters {sorted(params)} in {text!r}")
    if n < 1:
        raise ConfigError(f"generator length must be at least 1, got {n}")
    return spec, n


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    digitizer_raw = args.digitizer
    if digitizer_raw is None:
        digitizer_raw = "none" if (args.generate or args.format == "symbols") else "median"
    kind, levels = _parse_digitizer(digitizer_raw)

    generator_spec = None
    generator_n = None
    if args.generate is not None:
        if kind != "none":
            raise ConfigError("generated sequences are already symbolic; drop --digitizer")
        generator_spec, generator_n = _parse_generator_spec(args.generate)
    else:
        if args.format == "symbols" and kind != "none":
            raise ConfigError("digitizers apply to numeric input; symbol input needs --digitizer none")
        if args.format == "csv" and kind == "none":
            raise ConfigError("--digitizer none requires symbol-format input")
    if args.column is not None and (args.generate is not None or args.format != "csv"):
        raise ConfigError("--column only applies to csv input")
    if args.window is not None and args.window < 2:
        raise ConfigError(f"--window must be at least 2, got {args.window}")
    if args.alphabet_size < 2:
        raise ConfigError(f"--alphabet-size must be at least 2, got {args.alphabet_size}")
    if not 1 <= args.qmax <= 16:
        raise ConfigError(f"--qmax must lie in 1..16, got {args.qmax}")
    if args.surrogates < 0:
        raise ConfigError(f"--surrogates must be non-negative, got {args.surrogates}")

    return RunConfig(
        input_path=args.input,
        generator=args.generate,
        generator_spec=generator_spec,
        generator_n=generator_n,
        input_format=args.format,
        column=args.column,
        digitizer=kind,
        digitizer_levels=levels,
        alphabet_size=args.alphabet_size,
        window_length=args.window,
        q_max=args.qmax,
        surrogates=args.surrogates,
        seed=args.seed,
        output_path=args.output,
        output_format=args.output_format,
    )


# --- ingestion ---------------------------------------------------------------


def _load_symbol_file(path: str, alphabet_size: int) -> SymbolSequence:
    text = Path(path).read_text()
    values = []
    for ch in text:
        if ch.isspace():
            continue
        if not ch.isdigit():
            raise ValueError(f"{path}: character {ch!r} is not a symbol digit")
        value = int(ch)
        if value >= alphabet_size:
            raise ValueError(
                f"{path}: symbol {value} outside alphabet of size {alphabet_size}"
            )
        values.append(value)
    if not values:
        raise ValueError(f"{path}: no symbols found")
    return SymbolSequence(Alphabet(alphabet_size), np.array(values, dtype=np.int64))


def _row_is_numeric(row: list[str]) -> bool:
    if not row:
        return False
    for cell in row:
        try:
            float(cell.strip())
        except ValueError:
            return False
    return True


def _resolve_column(column: str | None, header: list[str] | None, path: str, width: int) -> int:
    if column is None:
        return 0
    try:
        index = int(column)
    except ValueError:
        index = None
    if index is not None:
        if not 0 <= index < width:
            raise ValueError(f"{path}: column index {index} out of range (width {width})")
        return index
    if header is None:
        raise ValueError(f"{path}: column name {column!r} needs a header row")
    if column not in header:
        raise ValueError(f"{path}: no column named {column!r} in header {header}")
    return header.index(column)


def _load_csv_series(path: str, column: str | None) -> NumericSeries:
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh) if any(cell.strip() for cell in row)]
    if not rows:
        raise ValueError(f"{path}: empty CSV file")
    header = None
    if not _row_is_numeric(rows[0]):
        header = [cell.strip() for cell in rows[0]]
        rows = rows[1:]
        if not rows:
            raise ValueError(f"{path}: CSV has a header but no data rows")
    index = _resolve_column(column, header, path, width=len(rows[0]))
    first_lineno = 2 if header else 1
    values = []
    for lineno, row in enumerate(rows, start=first_lineno):
        if index >= len(row):
            raise ValueError(f"{path}: row {lineno} has no column {index}")
        cell = row[index].strip()
        try:
            values.append(float(cell))
        except ValueError:
            raise ValueError(f"{path}: cannot parse sample {cell!r} at row {lineno}") from None
    return NumericSeries(np.array(values, dtype=np.float64))


def _digitize(series: NumericSeries, config: RunConfig) -> SymbolSequence:
    if config.digitizer == "median":
        return binarize_median(series)
    if config.digitizer == "quantiles":
        return digitize_quantiles(series, config.digitizer_levels)
    raise ValueError(f"cannot digitize with {config.digitizer!r}")


def _window_symbols(
    source: str, seq: SymbolSequence, config: RunConfig
) -> tuple[list[_Unit], int]:
    w = config.window_length
    if w is None:
        return [_Unit(source, None, seq)], 0
    full = len(seq) // w
    units = [
        _Unit(source, i, SymbolSequence(seq.alphabet, seq.data[i * w : (i + 1) * w]))
        for i in range(full)
    ]
    return units, int(len(seq) % w > 0)


def _window_numeric(
    source: str, series: NumericSeries, config: RunConfig
) -> tuple[list[_Unit], int]:
    # Digitization is per window: each analyzed unit gets its own threshold,
    # so every window attains the digitizer's entropy guarantee on its own.
    w = config.window_length
    if w is None:
        return [_Unit(source, None, _digitize(series, config))], 0
    full = len(series) // w
    units = [
        _Unit(
            source,
            i,
            _digitize(NumericSeries(series.samples[i * w : (i + 1) * w]), config),
        )
        for i in range(full)
    ]
    return units, int(len(series) % w > 0)


def _iter_source_paths(input_path: str) -> list[str]:
    root = Path(input_path)
    if root.is_dir():
        return sorted(str(child) for child in root.iterdir() if child.is_file())
    return [str(root)]


def _collect_units(config: RunConfig) -> tuple[list[_Unit], list[tuple[str, str]], int]:
    units: list[_Unit] = []
    errors: list[tuple[str, str]] = []
    dropped = 0
    if config.generator is not None:
        try:
            seq = generate(config.generator_spec, config.generator_n, config.seed)
            new_units, d = _window_symbols(config.generator, seq, config)
        except ValueError as exc:
            errors.append((config.generator, str(exc)))
            return units, errors, dropped
        units.extend(new_units)
        return units, errors, d
    for path in _iter_source_paths(config.input_path):
        try:
            if config.input_format == "symbols":
                seq = _load_symbol_file(path, config.alphabet_size)
                new_units, d = _window_symbols(path, seq, config)
            else:
                series = _load_csv_series(path, config.column)
                new_units, d = _window_numeric(path, series, config)
        except (OSError, ValueError) as exc:
            errors.append((path, str(exc)))
            continue
        units.extend(new_units)
        dropped += d
    return units, errors, dropped


# --- serialization -----------------------------------------------------------


def _sig6(value: float | None) -> float | None:
    if value is None:
        return None
    return float(f"{value:.6g}")


def _fmt6(value: float | None) -> str:
    return "" if value is None else f"{value:.6g}"


def _json_object(report: MetricReport) -> dict:
    return {
        "n": report.n,
        "alphabet_size": report.alphabet_size,
        "c": report.c,
        "dict_size": report.dict_size,
        "l_lzw_bits": _sig6(report.l_lzw_bits),
        "bound_bits": _sig6(report.bound_bits),
        "rho0": _sig6(report.rho0),
        "rho1_analytic": _sig6(report.rho1_analytic),
        "rho1_surrogate": _sig6(report.rho1_surrogate),
        "rho2": _sig6(report.rho2),
        "h0": _sig6(report.entropy.h0),
        "hq": [_sig6(v) for v in report.entropy.hq],
        "surrogate_count": report.surrogate_count,
        "seed": report.seed,
        "source": report.source,
        "warnings": list(report.warnings),
        "note": report.note,
    }


def _csv_fields(q_max: int) -> list[str]:
    return [
        "n",
        "alphabet_size",
        "c",
        "dict_size",
        "l_lzw_bits",
        "bound_bits",
        "rho0",
        "rho1_analytic",
        "rho1_surrogate",
        "rho2",
        "h0",
        *[f"hq_{q}" for q in range(1, q_max + 1)],
        "surrogate_count",
        "seed",
        "source",
        "warnings",
        "note",
    ]


def _csv_line(cells: list) -> str:
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="").writerow(cells)
    return buffer.getvalue()


def csv_header(q_max: int) -> str:
    """Header row matching :func:`emit_report`'s CSV flattening."""
    return _csv_line(_csv_fields(q_max))


def emit_report(report: MetricReport, output_format: str = "json", q_max: int | None = None) -> str:
    """Serialize one report as a JSON line or a CSV data row.

    Floats carry 6 significant digits.  The CSV row pads hq columns up to
    ``q_max`` (defaults to the report's own order) so every row in a run
    matches one header.
    """
    if q_max is None:
        q_max = report.entropy.q_max
    if output_format == "json":
        return json.dumps(_json_object(report))
    if output_format == "csv":
        hq = list(report.entropy.hq) + [None] * (q_max - report.entropy.q_max)
        cells = [
            report.n,
            report.alphabet_size,
            report.c,
            report.dict_size,
            _fmt6(report.l_lzw_bits),
            _fmt6(report.bound_bits),
            _fmt6(report.rho0),
            _fmt6(report.rho1_analytic),
            _fmt6(report.rho1_surrogate),
            _fmt6(report.rho2),
            _fmt6(report.entropy.h0),
            *[_fmt6(v) for v in hq],
            report.surrogate_count,
            report.seed,
            report.source or "",
            "; ".join(report.warnings),
            report.note,
        ]
        return _csv_line(cells)
    raise ConfigError(f"unknown output format {output_format!r}")


# --- driver ------------------------------------------------------------------


def _source_label(unit: _Unit) -> str:
    if unit.window is None:
        return unit.source
    return f"{unit.source}@{unit.window}"


def run(config: RunConfig) -> int:
    """Execute one batch run; returns the process exit status."""
    units, failures, dropped = _collect_units(config)
    lines: list[str] = []
    if config.output_format == "csv":
        lines.append(csv_header(config.q_max))
    for unit in units:
        seq = unit.sequence
        unit_seed = config.seed + (unit.window or 0)
        q_eff = min(config.q_max, len(seq) - 1)
        try:
            if q_eff < 1:
                raise ValueError(f"sequence too short to analyze (n={len(seq)})")
            report = analyze(seq, q_max=q_eff, surrogates=config.surrogates, seed=unit_seed)
        except ValueError as exc:
            failures.append((_source_label(unit), str(exc)))
            continue
        report = replace(report, source=_source_label(unit))
        lines.append(emit_report(report, config.output_format, q_max=config.q_max))
    payload = "".join(line + "\n" for line in lines)
    if config.output_path:
        Path(config.output_path).write_text(payload)
    else:
        sys.stdout.write(payload)
    for source, message in failures:
        print(json.dumps({"source": source, "error": message}), file=sys.stderr)
    if config.window_length is not None:
        print(f"windowing: dropped {dropped} trailing partial window(s)", file=sys.stderr)
    return 1 if failures else 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
