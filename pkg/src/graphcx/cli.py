"""Command-line front end.

Exit codes: 0 ok, 1 a verification failed, 2 bad usage or config,
3 a cap was exceeded, 4 an I/O error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import complexes as cx
from . import graphcore as gc
from . import surfaces as sf
from . import verify as vf

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_CAP, EXIT_IO = 0, 1, 2, 3, 4

DEFAULTS = {
    "variant": "commutative",
    "rank": "2",
    "degree": None,
    "reduced": True,
    "connected": True,
    "opi": False,
    "n": "1-2",
    "max_half_edges": cx.DEFAULT_MAX_HALF_EDGES,
    "max_rank": cx.DEFAULT_MAX_RANK,
    "out": None,
    "seed": 0,
    "format": "text",
    "suite": "all",
}


class ConfigError(ValueError):
    pass


def parse_range(text) -> list:
    if text is None:
        return []
    if isinstance(text, int):
        return [text]
    text = str(text)
    out = []
    for part in text.split(","):
        if "-" in part:
            a, b = part.split("-", 1)
            out += list(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphcx", description="Exact graph-complex computations.")
    sub = p.add_subparsers(dest="verb", required=True)
    for verb in ("enumerate", "boundary", "homology", "verify", "surfaces", "export"):
        s = sub.add_parser(verb)
        s.add_argument("--config", help="JSON file with defaults for the flags below")
        s.add_argument("--variant", choices=cx.VARIANTS, default=None)
        s.add_argument("--rank", default=None, help="e.g. 2 or 2-3")
        s.add_argument("--degree", default=None, help="e.g. 2 or 1-4 (default: all)")
        g = s.add_mutually_exclusive_group()
        g.add_argument("--reduced", dest="reduced", action="store_true", default=None)
        g.add_argument("--unreduced", dest="reduced", action="store_false")
        s.add_argument("--connected", dest="connected", action="store_true", default=None)
        s.add_argument("--disconnected", dest="connected", action="store_false")
        s.add_argument("--opi", action="store_true", default=None, help="one-particle irreducible only")
        s.add_argument("--n", default=None, help="state-sum n range")
        s.add_argument("--max-half-edges", type=int, default=None)
        s.add_argument("--max-rank", type=int, default=None)
        s.add_argument("--out", default=None, help="output directory")
        s.add_argument("--seed", type=int, default=None)
        s.add_argument("--format", choices=("json", "text"), default=None)
        if verb == "verify":
            s.add_argument("--suite", choices=("all",) + tuple(vf.SUITES), default=None)
    return p


def load_config(args) -> dict:
    cfg = dict(DEFAULTS)
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except OSError:
            raise
        except json.JSONDecodeError as e:
            raise ConfigError(f"config is not valid JSON: {e}")
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - set(DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(data)
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            cfg[key] = val
    if cfg["variant"] not in cx.VARIANTS:
        raise ConfigError(f"unknown variant {cfg['variant']!r}")
    if cfg["format"] not in ("json", "text"):
        raise ConfigError("format must be json or text")
    try:
        cfg["_ranks"] = parse_range(cfg["rank"])
        cfg["_degrees"] = parse_range(cfg["degree"])
        cfg["_ns"] = parse_range(cfg["n"])
    except ValueError:
        raise ConfigError("ranges look like 2, 1-3 or 1,3")
    if cfg["variant"] == "polygon":
        cfg["_ranks"] = [1]
    return cfg


def config_hash(cfg: dict) -> str:
    public = {k: v for k, v in cfg.items() if not k.startswith("_") and k != "out"}
    return hashlib.sha256(json.dumps(public, sort_keys=True).encode()).hexdigest()


def _complex(cfg: dict, r: int) -> cx.GraphComplex:
    return cx.GraphComplex(cfg["variant"], r, reduced=cfg["reduced"], connected=cfg["connected"],
                           opi=cfg["opi"], max_half_edges=cfg["max_half_edges"],
                           max_rank=cfg["max_rank"])


def _degrees(cfg: dict, c: cx.GraphComplex) -> list:
    ds = c.degrees()
    return [k for k in ds if k in cfg["_degrees"]] if cfg["_degrees"] else ds


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def manifest(cfg: dict, c: cx.GraphComplex, k: int) -> dict:
    rows = []
    for i, g in enumerate(c.basis(k)):
        row = {"index": i, "generator": gc.to_record(g)}
        if c.variant == "associative" and g.is_connected():
            row["surface"] = sf.classify(g).to_dict()
        rows.append(row)
    return {"config_hash": config_hash(cfg), "variant": c.variant, "rank": c.r, "degree": k, "basis": rows}


def _table(headers, rows) -> str:
    cols = [headers] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cols) for i in range(len(headers))]
    return "\n".join("  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in cols)


# ---------------------------------------------------------------- verbs

def cmd_enumerate(cfg: dict) -> tuple:
    out = []
    for r in cfg["_ranks"]:
        c = _complex(cfg, r)
        for k in _degrees(cfg, c):
            m = manifest(cfg, c, k)
            out.append(m)
            if cfg["out"]:
                _write(Path(cfg["out"]) / f"basis_{c.variant}_r{r}_k{k}.json", _dump(m) + "\n")
    if cfg["format"] == "json":
        text = _dump({"config_hash": config_hash(cfg), "manifests": out})
    else:
        text = f"config {config_hash(cfg)}\n" + _table(
            ["variant", "rank", "degree", "dim"], [[m["variant"], m["rank"], m["degree"], len(m["basis"])] for m in out])
    return EXIT_OK, text


def cmd_boundary(cfg: dict) -> tuple:
    rows = []
    for r in cfg["_ranks"]:
        c = _complex(cfg, r)
        for k in _degrees(cfg, c):
            if k - 1 < 1:
                continue
            d = c.boundary(k)
            rows.append({"variant": c.variant, "rank": r, "degree": k, "shape": list(d.shape), "nnz": len(d.entries)})
            if cfg["out"]:
                base = Path(cfg["out"])
                _write(base / f"d_{c.variant}_r{r}_k{k}.txt", d.to_text())
                for kk in (k, k - 1):
                    _write(base / f"basis_{c.variant}_r{r}_k{kk}.json", _dump(manifest(cfg, c, kk)) + "\n")
    if cfg["format"] == "json":
        text = _dump({"config_hash": config_hash(cfg), "boundaries": rows})
    else:
        text = f"config {config_hash(cfg)}\n" + _table(
            ["variant", "rank", "degree", "rows x cols", "nnz"],
            [[x["variant"], x["rank"], x["degree"], "%d x %d" % tuple(x["shape"]), x["nnz"]] for x in rows])
    return EXIT_OK, text


def homology_table(cfg: dict) -> list:
    rows = []
    for r in cfg["_ranks"]:
        c = _complex(cfg, r)
        h = c.homology()
        dims = c.dimensions()
        for k in _degrees(cfg, c):
            rows.append({"variant": c.variant, "rank": r, "degree": k, "dim": dims[k], "betti": h[k]})
    return rows


def cmd_homology(cfg: dict) -> tuple:
    rows = homology_table(cfg)
    report = {"config_hash": config_hash(cfg), "homology": rows}
    text_table = _table(["variant", "rank", "degree", "dim", "betti"],
                        [[x["variant"], x["rank"], x["degree"], x["dim"], x["betti"]] for x in rows])
    if cfg["out"]:
        _write(Path(cfg["out"]) / "homology.json", _dump(report) + "\n")
        _write(Path(cfg["out"]) / "homology.txt", text_table + "\n")
    if cfg["format"] == "json":
        return EXIT_OK, _dump(report)
    return EXIT_OK, f"config {config_hash(cfg)}\n" + text_table


def cmd_verify(cfg: dict) -> tuple:
    checks = vf.run_suite(cfg["suite"], cfg["seed"])
    report = {"config_hash": config_hash(cfg), "suite": cfg["suite"],
              "passed": all(c.passed for c in checks), "checks": [c.to_dict() for c in checks]}
    if cfg["out"]:
        _write(Path(cfg["out"]) / f"verify_{cfg['suite']}.json", _dump(report) + "\n")
    code = EXIT_OK if report["passed"] else EXIT_FAIL
    if cfg["format"] == "json":
        return code, _dump(report)
    lines = [f"config {config_hash(cfg)}"]
    for c in checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {json.dumps(c.block, sort_keys=True)}  n={c.size}")
    return code, "\n".join(lines)


def cmd_surfaces(cfg: dict) -> tuple:
    rows = []
    for r in cfg["_ranks"]:
        if r > cfg["max_rank"]:
            raise cx.CapError(f"rank {r} exceeds the cap {cfg['max_rank']}")
        split = sf.SurfaceSplit(r, cfg["max_half_edges"])
        for s in split.surfaces():
            dims, h = split.dimensions(s), split.homology(s)
            for k in split.degrees:
                rows.append({"rank": r, "surface": s.to_dict(), "degree": k, "dim": dims[k], "betti": h[k]})
    report = {"config_hash": config_hash(cfg), "surfaces": rows}
    if cfg["out"]:
        _write(Path(cfg["out"]) / "surfaces.json", _dump(report) + "\n")
    if cfg["format"] == "json":
        return EXIT_OK, _dump(report)
    return EXIT_OK, f"config {config_hash(cfg)}\n" + _table(
        ["rank", "g", "b", "degree", "dim", "betti"],
        [[x["rank"], x["surface"]["g"], x["surface"]["b"], x["degree"], x["dim"], x["betti"]] for x in rows])


def cmd_export(cfg: dict) -> tuple:
    """Manifests, boundary matrices and the homology table in one directory."""
    if not cfg["out"]:
        raise ConfigError("export needs --out")
    cfg = dict(cfg)
    cmd_enumerate(cfg)
    cmd_boundary(cfg)
    code, text = cmd_homology(cfg)
    files = sorted(p.name for p in Path(cfg["out"]).iterdir())
    if cfg["format"] == "json":
        return code, _dump({"config_hash": config_hash(cfg), "files": files})
    return code, f"config {config_hash(cfg)}\n" + "\n".join(files)


VERBS = {
    "enumerate": cmd_enumerate,
    "boundary": cmd_boundary,
    "homology": cmd_homology,
    "verify": cmd_verify,
    "surfaces": cmd_surfaces,
    "export": cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    try:
        cfg = load_config(args)
        code, text = VERBS[args.verb](cfg)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except cx.CapError as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return EXIT_IO
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
