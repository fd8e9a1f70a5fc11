"""Regenerate the expected-report fixtures under corpus/expected/.

Run only after a deliberate behaviour change; review the diff by hand.
"""

import io
import json
from contextlib import redirect_stdout

from toricke import corpus
from toricke.cli import run

root = corpus.path("")


def report(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(list(argv))
    return {"exit": code, "report": json.loads(buf.getvalue())}


def main():
    for name in corpus.names("fan"):
        fan = str(corpus.path(f"{name}.fan.json"))
        out = {"check": report("check", "--fan", fan)}
        ample = corpus.path(f"{name}_minus_k.divisor.json")
        if ample.is_file():
            out["boundary_minus_k"] = report("boundary", "--fan", fan, "--ample", str(ample))
        out["boundary"] = report("boundary", "--fan", fan)
        out["rank1"] = report("rank1", "--fan", fan)
        for bname in corpus.names("boundary"):
            if bname.startswith(name + "_"):
                bd = str(corpus.path(f"{bname}.boundary.json"))
                out[f"check:{bname}"] = report("check", "--fan", fan, "--boundary", bd)
                out[f"rank1:{bname}"] = report("rank1", "--fan", fan, "--boundary", bd)
        target = root / "expected" / f"{name}.json"
        with open(target, "w") as fh:
            json.dump(out, fh, sort_keys=True, indent=1)
            fh.write("\n")


if __name__ == "__main__":
    main()
