# -*- coding: utf-8 -*-
"""
SMRTools command line interface.

.. currentmodule:: smrtools.cli

Sub-commands ``forward``, ``invert``, ``oracle``, ``qtable``, ``compare``
and ``slice``. Options may also be given in a ``--config`` file of
``key = value`` lines; command line flags win over the file, the file
wins over the defaults.

Exit codes are 0 on success, 2 for invalid input and 3 for numeric
failures; errors are reported as JSON on standard error.

The following classes and functions are provided

.. autosummary::
   RunConfig
   read_config
   build_parser
   main
"""
# pylint: disable=C0103
from __future__ import print_function, division, absolute_import

import argparse
import configparser
import io
import json
import logging
import os
import sys

import numpy as np

from smrtools._version import __version__
from smrtools.forward import (
    SphereQuadratureRule,
    analytic_mean_field,
    sample_mean_field,
)
from smrtools.grid import SphericalMeanField, VolumeField, axis_from_bounds
from smrtools.inversion import ReconstructionConfig, reconstruct_volume
from smrtools.oracle import (
    oracle_check,
    oracle_reconstruct,
    oracle_volume,
    parse_polynomial,
)
from smrtools.oracle.oracle import VOLUME_VARIABLES
from smrtools.phantom import phantom_from_config
from smrtools.qpoly import load_qtable, resolve_qtable, save_qtable
from smrtools.qpoly.io import BUILTIN_TABLES
from smrtools.tools.errors import (
    EvaluationError,
    SmrError,
    ValidationError,
)
from smrtools.tools.export import (
    FLOAT_FORMAT,
    export_slice,
    load_field,
    save_field,
)
from smrtools.tools.metrics import compare

__all__ = ["RunConfig", "read_config", "build_parser", "main"]

logger = logging.getLogger(__name__)

#: exit code for invalid input
EXIT_INVALID = 2
#: exit code for numeric failures
EXIT_NUMERIC = 3


def _flag(text):
    if isinstance(text, bool):
        return text
    val = str(text).strip().lower()
    if val in ("1", "true", "yes", "on"):
        return True
    if val in ("0", "false", "no", "off"):
        return False
    raise ValueError("not a boolean: {0!r}".format(text))


#: built-in defaults of the configurable options
DEFAULTS = {
    "phantom": "monomial",
    "center": None,
    "radius": None,
    "value": None,
    "grid": None,
    "polar_order": 32,
    "azimuth": None,
    "analytic": False,
    "workers": 1,
    "field": None,
    "qtable": "builtin:n2",
    "z_nodes": None,
    "x_bounds": None,
    "y_bounds": None,
    "out": None,
    "vtk": None,
    "mf": None,
    "check": None,
    "volume": None,
    "reference": None,
    "oracle_mf": None,
    "json": False,
    "axis": None,
    "pgm": None,
    "at": None,
}

#: converters applied to values from config files
CONVERTERS = {
    "polar_order": int,
    "azimuth": int,
    "workers": int,
    "analytic": _flag,
    "json": _flag,
    "value": float,
    "at": float,
}

#: options naming files that have to be readable
INPUT_KEYS = ("field", "volume", "reference")
#: options naming files that will be written
OUTPUT_KEYS = ("out", "vtk", "pgm")


def _split_pairs(text):
    """One ``key = value`` pair per line; ``;`` separates pairs in a line."""
    pairs = []
    for line in text.splitlines():
        body = line.partition("#")[0]
        pairs.extend(p.strip() for p in body.split(";") if p.strip())
    return "\n".join(pairs) + "\n"


def read_config(path):
    """Read a ``key = value`` config file.

    Parameters
    ----------
    path : :class:`str`
        UTF-8 file; ``#`` starts a comment, ``;`` separates several
        pairs on one line and dashes in keys are read as underscores.

    Returns
    -------
    :class:`dict`
    """
    parser = configparser.ConfigParser(
        interpolation=None,
        inline_comment_prefixes=("#",),
        delimiters=("=",),
    )
    with io.open(path, "r", encoding="utf-8") as fin:
        text = _split_pairs(fin.read())
    try:
        parser.read_string("[smrtools]\n" + text, source=path)
    except configparser.Error as err:
        raise ValidationError(
            "config {0}: {1}".format(path, err), prefix="smrtools.cli"
        )
    values = {
        key.replace("-", "_"): val.strip()
        for key, val in parser.items("smrtools")
    }
    unknown = sorted(set(values) - set(DEFAULTS))
    if unknown:
        raise ValidationError(
            ["config {0}: unknown key {1!r}".format(path, key) for key in unknown],
            prefix="smrtools.cli",
        )
    return values


class RunConfig(object):
    """Resolved options of one CLI run.

    Parameters
    ----------
    command : :class:`str`
        The sub-command.
    options : :class:`dict`
        Options given on the command line; ``None`` means not given.
    config : :class:`dict`, optional
        Options read from a config file.
    """

    def __init__(self, command, options, config=None):
        self.command = command
        config = config or {}
        self._values = {}
        errors = []
        for key, val in options.items():
            if val is None and key in config:
                try:
                    val = CONVERTERS.get(key, str)(config[key])
                except ValueError as err:
                    errors.append("config key {0!r}: {1}".format(key, err))
                    continue
            if val is None:
                val = DEFAULTS.get(key)
            self._values[key] = val
        if errors:
            raise ValidationError(errors, prefix="smrtools.cli")

    def __getattr__(self, name):
        try:
            return self.__dict__["_values"][name]
        except KeyError:
            raise AttributeError(name)

    def get(self, key, default=None):
        """Resolved value of an option."""
        return self._values.get(key, default)

    def require(self, *keys):
        """Fail with a :any:`ValidationError` if an option is unset."""
        missing = [k for k in keys if self._values.get(k) is None]
        if missing:
            raise ValidationError(
                [
                    "{0}: missing option --{1}".format(
                        self.command, key.replace("_", "-")
                    )
                    for key in missing
                ],
                prefix="smrtools.cli",
            )

    def check_paths(self):
        """Check inputs are readable and outputs writable before any work."""
        errors = []
        qtable = self._values.get("qtable")
        inputs = [self._values.get(k) for k in INPUT_KEYS]
        if qtable and not str(qtable).startswith("builtin:"):
            inputs.append(qtable)
        for path in inputs:
            if path is not None and not (
                os.path.isfile(path) and os.access(path, os.R_OK)
            ):
                errors.append("input {0!r} is not a readable file".format(path))
        for key in OUTPUT_KEYS:
            path = self._values.get(key)
            if path is None:
                continue
            folder = os.path.dirname(os.path.abspath(path))
            if not (os.path.isdir(folder) and os.access(folder, os.W_OK)):
                errors.append(
                    "output {0!r}: directory is not writable".format(path)
                )
        if errors:
            raise ValidationError(errors, prefix="smrtools.cli")

    def __repr__(self):
        """Return String representation."""
        return "RunConfig(command={0!r}, {1})".format(
            self.command,
            ", ".join(
                "{0}={1!r}".format(k, v) for k, v in sorted(self._values.items())
            ),
        )


# parsing helpers #############################################################


def _floats(text, key):
    try:
        return [float(v) for v in str(text).split(",") if v.strip()]
    except ValueError:
        raise ValidationError(
            "{0}: expected comma separated numbers, got {1!r}".format(key, text),
            prefix="smrtools.cli",
        )


def _bounds(text, key):
    if text is None:
        return None
    vals = _floats(text, key)
    if len(vals) != 2:
        raise ValidationError(
            "{0}: expected 'lower,upper', got {1!r}".format(key, text),
            prefix="smrtools.cli",
        )
    return tuple(vals)


def parse_grid(text):
    """Parse ``lo:hi:step,lo:hi:step,lo:hi:step`` into three axes."""
    parts = [p.strip() for p in str(text).split(",")]
    axes = []
    for part in parts:
        vals = part.split(":")
        try:
            if len(vals) != 3:
                raise ValueError
            lo, hi, step = (float(v) for v in vals)
        except ValueError:
            raise ValidationError(
                "grid: expected 'lo:hi:step' per axis, got {0!r}".format(part),
                prefix="smrtools.cli",
            )
        axes.append(axis_from_bounds(lo, hi, step))
    if len(axes) != 3:
        raise ValidationError(
            "grid: expected three axes, got {0}".format(len(axes)),
            prefix="smrtools.cli",
        )
    return axes


def _check_finite(field, what):
    bad = ~np.isfinite(field.values)
    if bad.any():
        idx = np.argwhere(bad)[0]
        raise EvaluationError(
            "smrtools.cli: non-finite {0} value".format(what),
            tuple(ax.node(i) for ax, i in zip(field.axes, idx)),
        )


# commands ####################################################################


def cmd_forward(cfg):
    """Sample spherical means of a phantom."""
    cfg.require("grid", "out")
    phantom = phantom_from_config(
        {
            "phantom": cfg.phantom,
            "center": cfg.center,
            "radius": cfg.radius,
            "value": cfg.value,
        }
    )
    x_axis, y_axis, u_axis = parse_grid(cfg.grid)
    if cfg.analytic:
        field = analytic_mean_field(phantom, x_axis, y_axis, u_axis)
    else:
        rule = SphereQuadratureRule(cfg.polar_order, cfg.azimuth)
        field = sample_mean_field(
            phantom, x_axis, y_axis, u_axis, rule, workers=cfg.workers
        )
    _check_finite(field, "mean")
    save_field(field, cfg.out)
    logger.info("wrote %r to %s", field, cfg.out)
    return 0


def cmd_invert(cfg):
    """Reconstruct a volume from a mean field file."""
    cfg.require("field", "z_nodes", "out")
    field = load_field(cfg.field)
    if not isinstance(field, SphericalMeanField):
        raise ValidationError(
            "{0} holds no spherical mean field".format(cfg.field),
            prefix="smrtools.cli",
        )
    table = resolve_qtable(cfg.qtable)
    config = ReconstructionConfig(
        table.n,
        _floats(cfg.z_nodes, "z-nodes"),
        x_bounds=_bounds(cfg.x_bounds, "x-bounds"),
        y_bounds=_bounds(cfg.y_bounds, "y-bounds"),
        workers=cfg.workers,
    )
    volume = reconstruct_volume(field, table, config)
    _check_finite(volume, "reconstructed")
    save_field(volume, cfg.out)
    if cfg.vtk is not None:
        volume.vtk_export(cfg.vtk, fieldname="f")
    logger.info("wrote %r to %s", volume, cfg.out)
    return 0


def cmd_oracle(cfg, out):
    """Print the exact approximant of a polynomial mean field."""
    cfg.require("mf")
    mf = parse_polynomial(cfg.mf)
    table = resolve_qtable(cfg.qtable)
    result = oracle_reconstruct(mf, table)
    print(str(result), file=out)
    if cfg.check is not None:
        point = _floats(cfg.check, "check")
        if len(point) != 3:
            raise ValidationError(
                "check: expected 'x,y,z', got {0!r}".format(cfg.check),
                prefix="smrtools.cli",
            )
        for row in oracle_check(mf, table, point):
            print(
                "i = {0}: exact = {1}, quad = {2}, error = {3}".format(
                    row["i"],
                    row["exact"],
                    FLOAT_FORMAT % row["numeric"],
                    FLOAT_FORMAT % row["error"],
                ),
                file=out,
            )
    if cfg.out is not None:
        cfg.require("grid")
        volume = oracle_volume(result, *parse_grid(cfg.grid))
        save_field(volume, cfg.out)
    return 0


def cmd_qtable(cfg, out):
    """Validate or show a Q-table."""
    if cfg.action == "validate":
        cfg.require("file")
        table = load_qtable(cfg.file)
        print("{0}: valid table of level n={1}".format(cfg.file, table.n),
              file=out)
        return 0
    if cfg.n is not None:
        name = "n{0}".format(cfg.n)
        if name not in BUILTIN_TABLES:
            raise ValidationError(
                "no builtin table for n={0}".format(cfg.n),
                prefix="smrtools.cli",
            )
        table = BUILTIN_TABLES[name]()
    else:
        table = resolve_qtable(cfg.qtable)
    print(str(table), file=out)
    if cfg.out is not None:
        save_qtable(table, cfg.out)
    return 0


def cmd_compare(cfg, out):
    """Print the error of a volume against a reference."""
    cfg.require("volume")
    volume = load_field(cfg.volume)
    if not isinstance(volume, VolumeField):
        raise ValidationError(
            "{0} holds no volume".format(cfg.volume), prefix="smrtools.cli"
        )
    if cfg.reference is not None:
        reference = load_field(cfg.reference)
    elif cfg.oracle_mf is not None:
        poly = oracle_reconstruct(
            parse_polynomial(cfg.oracle_mf), resolve_qtable(cfg.qtable)
        )
        reference = oracle_volume(poly, *volume.axes)
    else:
        reference = phantom_from_config(
            {
                "phantom": cfg.phantom,
                "center": cfg.center,
                "radius": cfg.radius,
                "value": cfg.value,
            }
        )
    report = compare(volume, reference)
    if cfg.json:
        print(json.dumps(report.as_dict(), sort_keys=True), file=out)
    else:
        print("\n".join(report.lines()), file=out)
    return 0


def cmd_slice(cfg):
    """Export a plane of a field file."""
    cfg.require("field", "axis", "at", "out")
    field = load_field(cfg.field)
    export_slice(field, cfg.axis, float(cfg.at), cfg.out, pgm=cfg.pgm)
    return 0


# parser ######################################################################


class _Parser(argparse.ArgumentParser):
    """Argument parser reporting usage errors as :any:`ValidationError`."""

    def error(self, message):
        raise ValidationError(message, prefix=self.prog)


def build_parser():
    """Create the argument parser.

    Returns
    -------
    :class:`argparse.ArgumentParser`
    """
    parser = _Parser(
        prog="smrtools",
        description="Spherical mean Radon transform and local inversion.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="more log output on stderr (-vv for debug)",
    )
    parser.add_argument(
        "--config", default=None,
        help="file of 'key = value' lines; flags win over it",
    )
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    def phantom_args(cmd):
        cmd.add_argument("--phantom", help="monomial or ball (default monomial)")
        cmd.add_argument("--center", help="ball center 'x,y,z' (default 0,0,2)")
        cmd.add_argument("--radius", help="ball radius (default 1)")
        cmd.add_argument("--value", help="ball amplitude (default 1)")

    fwd = sub.add_parser("forward", help="sample spherical means of a phantom")
    phantom_args(fwd)
    fwd.add_argument("--grid", help="'x0:x1:hx,y0:y1:hy,u0:u1:hu'")
    fwd.add_argument("--polar-order", type=int,
                     help="Gauss-Legendre nodes per hemisphere, twice as many "
                     "over [-1, 1] (default 32)")
    fwd.add_argument("--azimuth", type=int,
                     help="azimuth nodes (default 2 * polar order)")
    fwd.add_argument("--analytic", action="store_const", const=True,
                     help="use the closed form mean instead of quadrature")
    fwd.add_argument("--workers", type=int, help="threads (default 1)")
    fwd.add_argument("--out", help="output field CSV")

    inv = sub.add_parser("invert", help="reconstruct a volume")
    inv.add_argument("--field", help="input mean field CSV")
    inv.add_argument("--qtable", help="'builtin:n2' (default) or a file")
    inv.add_argument("--z-nodes", help="evenly spaced heights 'z1,z2,...'")
    inv.add_argument("--x-bounds", help="output x range 'lower,upper'")
    inv.add_argument("--y-bounds", help="output y range 'lower,upper'")
    inv.add_argument("--workers", type=int, help="threads (default 1)")
    inv.add_argument("--out", help="output volume CSV")
    inv.add_argument("--vtk", help="additional VTK output (without ending)")

    orc = sub.add_parser("oracle", help="exact approximant of a polynomial")
    orc.add_argument("--mf", help="mean field, e.g. '1/8 x^2 y u^3'")
    orc.add_argument("--qtable", help="'builtin:n2' (default) or a file")
    orc.add_argument("--check", help="compare radial integrals at 'x,y,z'")
    orc.add_argument("--grid", help="'x0:x1:hx,y0:y1:hy,z0:z1:hz' for --out")
    orc.add_argument("--out", help="sample the result to this volume CSV")

    qtb = sub.add_parser("qtable", help="validate or show Q-tables")
    qsub = qtb.add_subparsers(dest="action")
    qsub.required = True
    qval = qsub.add_parser("validate", help="validate a Q-table file")
    qval.add_argument("file")
    qshow = qsub.add_parser("show", help="print a Q-table")
    qshow.add_argument("--n", type=int, help="level of a builtin table")
    qshow.add_argument("--qtable", help="'builtin:n2' (default) or a file")
    qshow.add_argument("--out", help="also save in the Q-table format")

    cmp_ = sub.add_parser("compare", help="error of a volume")
    phantom_args(cmp_)
    cmp_.add_argument("--volume", help="reconstructed volume CSV")
    cmp_.add_argument("--reference", help="reference volume CSV")
    cmp_.add_argument("--oracle-mf",
                      help="use the exact approximant of this mean field")
    cmp_.add_argument("--qtable", help="'builtin:n2' (default) or a file")
    cmp_.add_argument("--json", action="store_const", const=True,
                      help="print JSON instead of 'key = value' lines")

    slc = sub.add_parser("slice", help="export a plane of a field")
    slc.add_argument("--field", help="field or volume CSV")
    slc.add_argument("--axis", help="fixed axis: x, y, u or z")
    slc.add_argument("--at", help="node value of the fixed axis")
    slc.add_argument("--out", help="output CSV heightmap")
    slc.add_argument("--pgm", help="additional grayscale PGM image")
    return parser


def _setup_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _report(errors, err):
    print(json.dumps({"errors": errors}, sort_keys=True), file=err)


COMMANDS = {
    "forward": lambda cfg, out: cmd_forward(cfg),
    "invert": lambda cfg, out: cmd_invert(cfg),
    "oracle": cmd_oracle,
    "qtable": cmd_qtable,
    "compare": cmd_compare,
    "slice": lambda cfg, out: cmd_slice(cfg),
}


def main(argv=None, out=None, err=None):
    """Run the command line interface.

    Parameters
    ----------
    argv : :class:`list` of :class:`str`, optional
        Arguments without the program name. Default: ``sys.argv[1:]``
    out, err : file-like, optional
        Streams for results and error reports.
        Default: standard output and standard error

    Returns
    -------
    :class:`int`
        The exit code.
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except ValidationError as exc:
        _report(
            [{"kind": "usage", "message": v} for v in exc.violations], err
        )
        return EXIT_INVALID
    _setup_logging(args.verbose)
    options = {
        key: val
        for key, val in vars(args).items()
        if key not in ("verbose", "config", "command")
    }
    try:
        config = read_config(args.config) if args.config else {}
        cfg = RunConfig(args.command, options, config)
        cfg.check_paths()
        logger.debug("%r", cfg)
        with np.errstate(divide="raise", over="raise", invalid="raise"):
            return COMMANDS[args.command](cfg, out)
    except EvaluationError as exc:
        _report([exc.as_dict()], err)
        return EXIT_NUMERIC
    except (FloatingPointError, ArithmeticError) as exc:
        _report([{"kind": "numeric", "message": str(exc)}], err)
        return EXIT_NUMERIC
    except ValidationError as exc:
        _report(
            [{"kind": exc.kind, "message": v} for v in exc.violations], err
        )
        return EXIT_INVALID
    except SmrError as exc:
        _report([exc.as_dict()], err)
        return EXIT_INVALID
    except (OSError, ValueError) as exc:
        _report([{"kind": "input", "message": str(exc)}], err)
        return EXIT_INVALID
