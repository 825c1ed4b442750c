"""Command-line front end.

Exit codes: 0 realized and verified, 1 input/output or parse error, 2 the list
is obstructed, 3 no construction applies, 4 a matrix was produced (or read)
but failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from .errors import CentroError, NoApplicableConstruction, ObstructedList, PreconditionError, UnknownFixture
from .fixtures import get_fixture
from .realize import (
    Realization,
    auto_realize,
    realize_4x4_diag,
    realize_4x4_real,
    realize_centro_with_diagonal,
    realize_nonneg_real,
    realize_partitioned,
    realize_positive,
    realize_real_centro,
    realize_suleimanova,
)
from .spectra import Parity, Partition, SpectrumList, parse_complex
from .verify import RealizationReport, verify_matrix

METHODS = ("auto", "real-centro", "nonneg-real", "positive", "suleimanova",
           "partitioned", "4x4", "4x4-diag")

EXIT_OK, EXIT_IO, EXIT_OBSTRUCTED, EXIT_NO_CONSTRUCTION, EXIT_MISMATCH = 0, 1, 2, 3, 4


class InputError(Exception):
    """Unreadable or malformed input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _diag("usage", message)
        raise SystemExit(EXIT_IO)


def _diag(kind: str, message: str, **extra):
    sys.stderr.write(json.dumps({"error": kind, "message": message, **extra}) + "\n")


def format_entry(x: float) -> str:
    """Exact decimal for dyadic values with small denominators, else 17 digits."""
    x = float(x)
    if x == 0.0:
        return "0"
    if abs(x) < 1e15 and x * 1024 == round(x * 1024):
        text = repr(x)
        return text[:-2] if text.endswith(".0") else text
    return format(x, ".17g")


def _complex_out(z: complex) -> list[float]:
    return [float(z.real) + 0.0, float(z.imag) + 0.0]


def parse_spectrum_csv(text: str) -> list[complex]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise InputError("empty spectrum")
    try:
        return [parse_complex(t) for t in items]
    except PreconditionError as exc:
        raise InputError(str(exc)) from exc


def parse_reals_csv(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"bad real list {text!r}") from exc


def _parse_values(raw) -> list[complex]:
    if not isinstance(raw, list):
        raise InputError("spectrum must be a list")
    try:
        return [parse_complex(v) for v in raw]
    except (PreconditionError, TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_problem(path: str) -> dict:
    doc = _read_json(path)
    if not isinstance(doc, dict) or "spectrum" not in doc:
        raise InputError("problem file needs a 'spectrum' entry")
    spectrum = _parse_values(doc["spectrum"])
    if not spectrum:
        raise InputError("spectrum is empty")
    method = doc.get("method", "auto")
    if method not in METHODS:
        raise InputError(f"unknown method {method!r}")
    out = {"spectrum": spectrum, "method": method, "diagonal": None, "partition": None,
           "tolerance": None}
    if doc.get("diagonal") is not None:
        try:
            out["diagonal"] = [float(x) for x in doc["diagonal"]]
        except (TypeError, ValueError) as exc:
            raise InputError("diagonal must be a list of reals") from exc
    if doc.get("tolerance") is not None:
        try:
            out["tolerance"] = float(doc["tolerance"])
        except (TypeError, ValueError) as exc:
            raise InputError("tolerance must be a real") from exc
    if doc.get("partition") is not None:
        out["partition"] = doc["partition"]
    return out


def build_partition(doc: dict, spectrum: SpectrumList) -> Partition:
    """``{"base": [...], "groups": [[...], ...], "middle": [...], "anchors": [...]}``."""
    try:
        base = SpectrumList(_parse_values(doc["base"]))
        groups = [SpectrumList(_parse_values(g)) for g in doc.get("groups", [])]
        anchors = tuple(float(w) for w in doc["anchors"])
        lists = (base, *groups)
        if doc.get("middle") is not None:
            lists += (SpectrumList(_parse_values(doc["middle"])),)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed partition: {exc}") from exc
    except PreconditionError as exc:
        raise InputError(f"partition sublist: {exc}") from exc
    parity = Parity.ODD_P0 if base.n % 2 else Parity.EVEN_P0
    return Partition(lists, spectrum, anchors, parity)


def run_method(method: str, spectrum: SpectrumList, diagonal=None, partition=None,
               tol=None) -> Realization:
    if method == "auto":
        return auto_realize(spectrum, diagonal, tol)
    if method == "real-centro":
        return realize_real_centro(spectrum, tol)
    if method == "nonneg-real":
        return realize_nonneg_real(spectrum, tol)
    if method == "positive":
        return realize_positive(spectrum, tol)
    if method == "suleimanova":
        if diagonal is not None:
            return realize_centro_with_diagonal(spectrum, diagonal, tol)
        return realize_suleimanova(spectrum, tol)
    if method == "partitioned":
        if partition is None:
            raise NoApplicableConstruction([("partitioned", "no partition given")])
        return realize_partitioned(spectrum, build_partition(partition, spectrum), tol=tol)
    if method == "4x4":
        return realize_4x4_real(spectrum, tol)
    if method == "4x4-diag":
        if diagonal is None:
            raise NoApplicableConstruction([("4x4-diag", "no diagonal given")])
        return realize_4x4_diag(spectrum, diagonal, tol)
    raise InputError(f"unknown method {method!r}")


def report_doc(rep: RealizationReport) -> dict:
    return {
        "matched": bool(rep.matched),
        "accepted": bool(rep.accepted),
        "max_distance": rep.spectrum.max_distance,
        "tolerance": rep.spectrum.tolerance,
        "centro_residual": rep.centro_residual,
        "nonneg_margin": rep.nonneg_margin,
        "matched_pairs": [[_complex_out(t), _complex_out(c), d]
                          for t, c, d in rep.spectrum.matched_pairs],
    }


def partition_doc(part: Partition | None):
    if part is None:
        return None
    return {
        "sublists": [[_complex_out(z) for z in lst.values] for lst in part.sublists],
        "anchors": list(part.anchors),
        "parity": part.parity.value if part.parity else None,
        "head": part.head,
    }


def matrix_doc(M) -> dict:
    M = np.asarray(M, dtype=float)
    return {"order": int(M.shape[0]), "matrix": [[format_entry(x) for x in row] for row in M]}


def result_doc(r: Realization) -> dict:
    return {**matrix_doc(r.matrix), "kind": r.kind.value, "provenance": r.provenance,
            "partition": partition_doc(r.partition), "report": report_doc(r.report)}


def load_matrix(path: str) -> np.ndarray:
    doc = _read_json(path)
    rows = doc.get("matrix") if isinstance(doc, dict) else doc
    try:
        M = np.array([[float(x) for x in row] for row in rows], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: matrix entries must be numbers") from exc
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise InputError(f"{path}: matrix must be square and non-empty")
    return M


def _emit(doc, out_path: str | None):
    text = json.dumps(doc, indent=2) + "\n"
    if out_path:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {out_path}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)


def cmd_realize(args) -> int:
    if args.infile:
        prob = load_problem(args.infile)
    elif args.spectrum:
        prob = {"spectrum": parse_spectrum_csv(args.spectrum), "method": "auto",
                "diagonal": None, "partition": None, "tolerance": None}
    else:
        raise InputError("give --in FILE or --spectrum CSV")
    if args.method:
        prob["method"] = args.method
    if args.diagonal:
        prob["diagonal"] = parse_reals_csv(args.diagonal)
    if args.tol is not None:
        prob["tolerance"] = args.tol
    try:
        spectrum = SpectrumList(prob["spectrum"])
    except PreconditionError as exc:
        raise InputError(str(exc)) from exc
    try:
        r = run_method(prob["method"], spectrum, prob["diagonal"], prob["partition"],
                       prob["tolerance"])
    except ObstructedList as exc:
        _diag("ObstructedList", str(exc), citation=ObstructedList.citation)
        return EXIT_OBSTRUCTED
    except NoApplicableConstruction as exc:
        _diag("NoApplicableConstruction", str(exc), attempts=[list(a) for a in exc.attempts])
        return EXIT_NO_CONSTRUCTION
    except CentroError as exc:
        _diag(type(exc).__name__, str(exc))
        return EXIT_NO_CONSTRUCTION
    _emit(result_doc(r), args.out)
    return EXIT_OK if r.accepted else EXIT_MISMATCH


def cmd_check(args) -> int:
    M = load_matrix(args.matrix)
    target = parse_spectrum_csv(args.spectrum)
    if len(target) != M.shape[0]:
        raise InputError(f"{len(target)} values for a matrix of order {M.shape[0]}")
    rep = verify_matrix(M, target, args.tol, "check")
    _emit({**matrix_doc(M), "report": report_doc(rep)}, args.out)
    return EXIT_OK if rep.matched else EXIT_MISMATCH


def cmd_fixtures(name: str, out=None, tol=None) -> int:
    try:
        fx = get_fixture(name)
    except UnknownFixture as exc:
        _diag("UnknownFixture", str(exc.args[0]))
        return EXIT_IO
    printed = {}
    ok = True
    for key, M in fx["matrices"].items():
        rep = verify_matrix(M, fx["spectra"][key], tol, f"{name}:{key}")
        ok &= rep.matched
        printed[key] = {**matrix_doc(M), "report": report_doc(rep)}
    r = auto_realize(SpectrumList(fx["spectrum"]), tol=tol)
    ok &= r.accepted
    _emit({"fixture": name, "printed": printed, "pipeline": result_doc(r)}, out)
    return EXIT_OK if ok else EXIT_MISMATCH


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="centroniep", description="Centrosymmetric matrices with prescribed spectrum.")
    p.add_argument("--fixtures", metavar="NAME", help="reproduce a worked example")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    r = sub.add_parser("realize", help="build a matrix for a spectrum")
    r.add_argument("--in", dest="infile", metavar="FILE")
    r.add_argument("--spectrum", metavar="CSV")
    r.add_argument("--method", choices=METHODS)
    r.add_argument("--diagonal", metavar="CSV")
    r.add_argument("--tol", type=float)
    r.add_argument("--out", metavar="FILE")

    c = sub.add_parser("check", help="verify a matrix against a spectrum")
    c.add_argument("--matrix", required=True, metavar="FILE")
    c.add_argument("--spectrum", required=True, metavar="CSV")
    c.add_argument("--tol", type=float)
    c.add_argument("--out", metavar="FILE")

    f = sub.add_parser("fixtures", help="reproduce a worked example")
    f.add_argument("name")
    f.add_argument("--tol", type=float)
    f.add_argument("--out", metavar="FILE")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.fixtures and args.command is None:
            return cmd_fixtures(args.fixtures)
        if args.command == "realize":
            return cmd_realize(args)
        if args.command == "check":
            return cmd_check(args)
        if args.command == "fixtures":
            return cmd_fixtures(args.name, args.out, args.tol)
        parser.print_usage(sys.stderr)
        _diag("usage", "no command given")
        return EXIT_IO
    except InputError as exc:
        _diag("InputError", str(exc))
        return EXIT_IO


def run(argv: Sequence[str] | None = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
