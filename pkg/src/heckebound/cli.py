"""Command-line front end.

Typical invocations:

    heckebound --m-sr 7 --m-st 3 --max-length 8 --check theorem --emit json
    heckebound --m-sr 5 --m-st 4 --check all --emit text
    heckebound --list-checks

Configuration may also come from a ``key = value`` file via --config; explicit
command-line flags win over the file.  Exit status: 0 when every asserting
check passed, 1 when at least one failed, 2 for usage or configuration
problems (reported as a single JSON line on stderr so scripts can parse them).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field

from .coxeter import CoxeterGroup, GroupParams
from .verifier import CHECK_IDS, REGISTRY, build_report_doc, list_checks, run_check
from .words import CacheParametersError

CACHE_ENV_VAR = "HECKE_BOUND_CACHE"

EMIT_FORMATS = ("json", "csv", "text")

CSV_COLUMNS = ["id", "m_sr", "m_st", "case", "N", "status", "hypothesis_met",
               "bound", "max_degree_seen", "scanned", "violations",
               "witness_count", "seconds"]


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    m_sr: int
    m_st: int
    max_length: int | None = None
    checks: list[str] = field(default_factory=lambda: ["all"])
    emit: str = "text"
    out: str | None = None
    cache: str | None = None
    jobs: int = 1
    memo: bool = False

    def __post_init__(self):
        if self.emit not in EMIT_FORMATS:
            raise UsageError(f"emit format must be one of {EMIT_FORMATS}, got {self.emit!r}")
        if self.jobs < 1:
            raise UsageError(f"jobs must be a positive integer, got {self.jobs}")
        if self.max_length is not None and self.max_length < 0:
            raise UsageError(f"max-length must be >= 0, got {self.max_length}")
        for cid in self.resolved_checks():
            if cid not in REGISTRY:
                raise UsageError(f"unknown check id {cid!r}; try --list-checks")

    def resolved_checks(self) -> list[str]:
        if self.checks == ["all"] or not self.checks:
            return list(CHECK_IDS)
        return list(self.checks)


def _parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"expected a boolean, got {text!r}")


def load_config_file(path: str) -> dict:
    """Parse a simple ``key = value`` file; # starts a comment."""
    values: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, eq, value = line.partition("=")
            if not eq:
                raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
            key = key.strip().replace("-", "_")
            value = value.strip()
            if key in ("m_sr", "m_st", "max_length", "jobs"):
                try:
                    values[key] = int(value)
                except ValueError:
                    raise UsageError(f"{path}:{lineno}: {key} must be an integer") from None
            elif key in ("check", "checks"):
                values["checks"] = [c.strip() for c in value.split(",") if c.strip()]
            elif key in ("emit", "out", "cache"):
                values[key] = value
            elif key == "memo":
                values[key] = _parse_bool(value)
            else:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckebound",
        description="Exhaustive degree-bound checks for rank-3 Hecke structure constants.")
    parser.add_argument("--m-sr", type=int, default=None,
                        help="bond label of the s-r pair (integer >= 3)")
    parser.add_argument("--m-st", type=int, default=None,
                        help="bond label of the s-t pair (integer >= 3)")
    parser.add_argument("--max-length", type=int, default=None,
                        help="length cap for scans (default: per-check defaults)")
    parser.add_argument("--check", action="append", default=None, metavar="ID",
                        help="check id to run (repeatable); 'all' runs the catalog")
    parser.add_argument("--emit", choices=EMIT_FORMATS, default=None,
                        help="report format (default text)")
    parser.add_argument("--out", default=None,
                        help="write the report to this path (atomically); default stdout")
    parser.add_argument("--cache", default=None,
                        help=f"reduction cache file (default ${CACHE_ENV_VAR})")
    parser.add_argument("--jobs", type=int, default=None,
                        help="worker processes for pair scans (default 1)")
    parser.add_argument("--memo", action="store_true", default=None,
                        help="memoize intermediate product vectors (more memory, less time)")
    parser.add_argument("--config", default=None, metavar="FILE",
                        help="read defaults from a key = value file")
    parser.add_argument("--list-checks", action="store_true",
                        help="print the check catalog and exit")
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if args.config is not None:
        values.update(load_config_file(args.config))
    cli_pairs = (
        ("m_sr", args.m_sr), ("m_st", args.m_st), ("max_length", args.max_length),
        ("checks", args.check), ("emit", args.emit), ("out", args.out),
        ("cache", args.cache), ("jobs", args.jobs), ("memo", args.memo),
    )
    for key, value in cli_pairs:
        if value is not None:
            values[key] = value
    if values.get("cache") is None:
        values["cache"] = os.environ.get(CACHE_ENV_VAR) or None
    if "m_sr" not in values or "m_st" not in values:
        raise UsageError("--m-sr and --m-st are required (flags or config file)")
    return RunConfig(
        m_sr=values["m_sr"],
        m_st=values["m_st"],
        max_length=values.get("max_length"),
        checks=values.get("checks", ["all"]),
        emit=values.get("emit") or "text",
        out=values.get("out"),
        cache=values.get("cache"),
        jobs=values.get("jobs", 1),
        memo=bool(values.get("memo", False)),
    )


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".heckebound-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for check in doc["checks"]:
        writer.writerow([
            check["id"], doc["params"]["m_sr"], doc["params"]["m_st"], doc["case"],
            "" if check["N"] is None else check["N"], check["status"],
            check["hypothesis_met"],
            "" if check["bound"] is None else check["bound"],
            "" if check["max_degree_seen"] is None else check["max_degree_seen"],
            check["scanned"], check["violations"], len(check["witnesses"]),
            check["seconds"],
        ])
    return buf.getvalue()


def render_text(doc: dict) -> str:
    lines = [
        f"group: m_sr={doc['params']['m_sr']} m_st={doc['params']['m_st']} "
        f"(regime {doc['case']})",
    ]
    for check in doc["checks"]:
        tag = check["status"].upper()
        cap = "-" if check["N"] is None else str(check["N"])
        bound = "-" if check["bound"] is None else str(check["bound"])
        seen = "-" if check["max_degree_seen"] is None else str(check["max_degree_seen"])
        lines.append(
            f"[{tag:8s}] {check['id']:18s} N={cap:2s} bound={bound:2s} "
            f"max_seen={seen:2s} scanned={check['scanned']} "
            f"violations={check['violations']} ({check['seconds']:.2f}s)")
        for witness in check["witnesses"][:5]:
            lines.append(f"            witness: {witness}")
    fails = sum(1 for c in doc["checks"] if c["status"] == "fail")
    passes = sum(1 for c in doc["checks"] if c["status"] == "pass")
    advisories = sum(1 for c in doc["checks"] if c["status"] == "advisory")
    lines.append(f"summary: {passes} pass, {fails} fail, {advisories} advisory")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def run(config: RunConfig) -> tuple[int, dict]:
    """Execute the configured checks; returns (exit_code, report document)."""
    params = GroupParams(config.m_sr, config.m_st)
    group = CoxeterGroup(params)
    if config.cache and os.path.exists(config.cache):
        group.load_reduction_cache(config.cache)
    reports = [
        run_check(group, cid, n_cap=config.max_length, jobs=config.jobs,
                  memo=config.memo)
        for cid in config.resolved_checks()
    ]
    doc = build_report_doc(params, reports)
    if config.cache:
        tmp = config.cache + ".tmp"
        group.save_reduction_cache(tmp)
        os.replace(tmp, config.cache)
    exit_code = 1 if any(r.status == "fail" for r in reports) else 0
    return exit_code, doc


def _fail_usage(message: str) -> int:
    sys.stderr.write(json.dumps({"error": "usage", "message": message}) + "\n")
    return 2


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:              # argparse already printed the message
        return int(exc.code or 0)
    if args.list_checks:
        sys.stdout.write(list_checks() + "\n")
        return 0
    try:
        config = make_config(args)
        exit_code, doc = run(config)
    except (UsageError, CacheParametersError, ValueError, OSError) as exc:
        return _fail_usage(str(exc))
    text = RENDERERS[config.emit](doc)
    if config.out:
        _atomic_write(config.out, text)
    else:
        sys.stdout.write(text)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
