"""Configuration ingestion for the verification CLI.

Strict schema: unknown keys are rejected, missing sections fall back to the
documented defaults.  Polynomial fields (tetrad entries, gauge potentials,
scalar and spinor test fields) may be given explicitly as coefficient tables;
anything left out is drawn from the seeded per-check generators.
"""

from __future__ import annotations

import copy
import hashlib
import json

import numpy as np

from .polyfield import PolyField

DEFAULTS = {
    "series": {"order": 4},
    "probes": {"count": 10, "box": 0.5, "seed": 20260810},
    "tetrad": {"kind": "random", "degree": 2, "amplitude": 0.05,
               "conformal_eps": 0.15, "entries": None},
    "gauge": {"degree": 2, "amplitude": 0.7, "g1": 0.652, "g2": 0.357,
              "w": None, "b": None},
    "scalars": {"p": 1.0, "q": 0.7, "split_angle": None, "v_degree": 2},
    "spinors": {"degree": 2, "count": 10},
    "trials": {"tetrads": 50, "gauge_configs": 20, "theta_fields": 12,
               "geometry_tetrads": 3},
    "tolerances": {},
    "expectations": {},
}

_FREE_SECTIONS = ("tolerances", "expectations")


class ConfigError(ValueError):
    """Malformed or unknown configuration content."""


def load_config(path=None):
    """Merged configuration dict; path=None gives the pure defaults."""
    merged = copy.deepcopy(DEFAULTS)
    if path is None:
        return merged
    try:
        with open(path) as fh:
            user = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    if not isinstance(user, dict):
        raise ConfigError("config root must be an object")
    for section, content in user.items():
        if section not in DEFAULTS:
            raise ConfigError(f"unknown config section {section!r}")
        if not isinstance(content, dict):
            raise ConfigError(f"section {section!r} must be an object")
        if section in _FREE_SECTIONS:
            merged[section] = content
            continue
        for key, value in content.items():
            if key not in DEFAULTS[section]:
                raise ConfigError(f"unknown key {section}.{key}")
            merged[section][key] = value
    return merged


def config_digest(cfg):
    canon = json.dumps(cfg, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode()).hexdigest()


# ----------------------------------------------------------------------
# polynomial-field (de)serialization
# ----------------------------------------------------------------------

def polyfield_from_terms(spec, block_shape=()):
    """Coefficient-table form: [{"exponents": [..4 ints..], "value": v}, ...].

    Scalar values are [re, im]; block values nest one list level per axis.
    """
    terms = {}
    for item in spec:
        try:
            exps = tuple(int(e) for e in item["exponents"])
            value = np.asarray(item["value"], dtype=float)
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"bad polynomial term {item!r}") from exc
        if len(exps) != 4:
            raise ConfigError("polynomial exponents need exactly 4 entries")
        if value.shape and value.shape[-1] == 2 and len(value.shape) == len(block_shape) + 1:
            value = value[..., 0] + 1j * value[..., 1]
        if value.shape != tuple(block_shape):
            raise ConfigError(f"term value shape {value.shape} != {tuple(block_shape)}")
        terms[exps] = value
    return PolyField(terms, block_shape)


def tetrad_from_config(cfg, rng, validate_points=None):
    """Tetrad described by the config; 'random' kinds consume the rng."""
    from .geometry import TetradField

    section = cfg["tetrad"]
    kind = section["kind"]
    if kind == "flat":
        return TetradField.flat()
    if kind == "conformal":
        return TetradField.conformal(section["conformal_eps"])
    if kind == "random":
        return TetradField.random_perturbation(
            rng, degree=section["degree"], amplitude=section["amplitude"],
            validate_points=validate_points)
    if kind == "explicit":
        entries = section["entries"]
        if entries is None:
            raise ConfigError("explicit tetrad needs 'entries'")
        grid = []
        for a in range(4):
            row = []
            for A in range(4):
                key = f"{a}{A}"
                if key not in entries:
                    raise ConfigError(f"missing tetrad entry {key!r}")
                row.append(polyfield_from_terms(entries[key]))
            grid.append(row)
        return TetradField(grid)
    raise ConfigError(f"unknown tetrad kind {kind!r}")


def gauge_from_config(cfg, rng):
    from .gauge import GaugeConfig

    section = cfg["gauge"]
    if section["w"] is None and section["b"] is None:
        return GaugeConfig.random(rng, degree=section["degree"],
                                  amplitude=section["amplitude"],
                                  g1=section["g1"], g2=section["g2"])
    w_spec = section["w"] or {}
    b_spec = section["b"] or {}
    W = tuple(tuple(polyfield_from_terms(w_spec[f"{k}{a}"]) if f"{k}{a}" in w_spec
                    else PolyField.zero() for a in range(4)) for k in range(3))
    B = tuple(polyfield_from_terms(b_spec[f"{a}"]) if f"{a}" in b_spec
              else PolyField.zero() for a in range(4))
    return GaugeConfig(W=W, B=B, g1=section["g1"], g2=section["g2"])
