"""Reference fans, boundaries and divisors shipped with the package.

Files are named ``<name>.fan.json``, ``<name>.boundary.json`` and
``<name>.divisor.json``; expected CLI reports live under ``expected/``.
"""

import json
from importlib import resources


def path(filename):
    return resources.files(__name__).joinpath(filename)


def names(kind="fan"):
    suffix = f".{kind}.json"
    return sorted(p.name[: -len(suffix)] for p in resources.files(__name__).iterdir()
                  if p.name.endswith(suffix))


def load(name, kind="fan"):
    return json.loads(path(f"{name}.{kind}.json").read_text())


def load_fan(name):
    from ..fan import Fan

    return Fan.from_json(load(name, "fan"))
