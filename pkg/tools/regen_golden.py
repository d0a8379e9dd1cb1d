"""Regenerate the golden expected values from the independent oracles.

    python tools/regen_golden.py          # rewrite src/kmlie/data/golden/v1/*.json
    python tools/regen_golden.py --check  # exit 1 if the committed files differ

The oracles live in tests/oracles.py and use plain integer reflections or
sympy; nothing here calls into kmlie except to read the named Cartan matrices.
"""
import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))
sys.path.insert(0, str(ROOT / "src"))

import oracles  # noqa: E402
from kmlie.cartan import named_gcm  # noqa: E402

OUT = ROOT / "src" / "kmlie" / "data" / "golden" / "v1"


def derived(value, oracle):
    return {"provenance": "DERIVED", "oracle": oracle, "value": value}


def stated(value, oracle):
    return {"provenance": "STATED", "oracle": oracle, "value": value}


def rows(name):
    return [list(r) for r in named_gcm(name).entries]


def roots():
    out = {}
    for name in ("A2", "A3", "D4", "E6", "E7", "E8"):
        out[f"root_count/{name}"] = derived(len(oracles.root_orbit(rows(name))), "reflection orbit of simple roots")
    a2 = oracles.root_orbit(rows("A2"))
    out["string/A2/a1/a2"] = derived(list(oracles.string_by_membership(a2, (1, 0), (0, 1))), "membership sweep")
    out["string/A2/a1/a1+a2"] = derived(list(oracles.string_by_membership(a2, (1, 0), (1, 1))), "membership sweep")
    e8 = oracles.root_orbit(rows("E8"))
    # affine E8: node 0 is the affine node, delta = alpha_0 + theta
    theta = max(e8, key=sum)
    affine = {(n,) + tuple(n * t + a for t, a in zip(theta, r)) for n in range(-2, 3) for r in e8}
    affine |= {(n,) + tuple(n * t for t in theta) for n in (-2, -1, 1, 2)}
    delta = (1,) + theta
    out["string/E8~/a1/delta"] = derived(
        list(oracles.string_by_membership(affine, (0, 1) + (0,) * 7, delta)), "affine roots n delta + alpha")
    e10 = rows("E10")
    out["real/E10/a7+a10"] = derived(oracles.is_real_by_descent(e10, [0] * 6 + [1, 0, 0, 1]), "height descent")
    return out


def chevalley():
    E = oracles.matrix_unit
    a3 = [E(4, 0, 3)] + [E(4, i + 1, i) for i in range(3)]
    return {
        "dim/A2": derived(len(oracles.root_orbit(rows("A2"))) + 2, "roots plus rank"),
        "dim/E8": derived(len(oracles.root_orbit(rows("E8"))) + 8, "roots plus rank"),
        "generated/A3/e_theta,f1,f2,f3": derived(oracles.closure_dimension(a3), "sympy commutator closure in gl(4)"),
        "generated/A2/e1,e2": derived(oracles.closure_dimension([E(3, 0, 1), E(3, 1, 2)]),
                                      "sympy commutator closure in gl(3)"),
    }


def loopalg():
    out = {}
    for label, d in (("lorentzian", (1, 1, 1, -1)), ("compact", (1, 1, 1, 1))):
        dim, inertia = oracles.fixed_subalgebra_inertia(4, d)
        out[f"s_plus/A3/{label}"] = derived({"dimension": dim, "inertia": list(inertia)},
                                            "sympy fixed points of X -> -D X^T D with trace form")
    return out


def freelie():
    out = {}
    for n in range(1, 5):
        out[f"witt/{n}"] = derived([int(oracles.witt(n, d)) for d in range(1, 7)], "sympy mobius")
    cases = [(2, (2, 0), 6), (2, (1, 1), 6), (3, (3, 0), 6), (3, (2, 1), 6), (4, (4, 0), 6), (4, (2, 2), 5)]
    for n, (p, m), D in cases:
        signs = (1,) * p + (-1,) * m
        dims = oracles.quotient_dims(n, signs, D)
        entry = derived(list(dims), "enveloping algebra ranks and PBW inversion")
        if n == 2:
            entry = stated(list(dims), "strictly upper triangular 3x3 matrices; checked by the same oracle")
        out[f"quotient/{n}/{p},{m}"] = entry
    return out


BUILDERS = {"roots.json": roots, "chevalley.json": chevalley, "loopalg.json": loopalg, "freelie.json": freelie}


def render(data):
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def build(names=None):
    return {name: render(fn()) for name, fn in BUILDERS.items() if names is None or name in names}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)
    stale = []
    for name, text in build().items():
        path = OUT / name
        if args.check:
            if not path.exists() or path.read_text() != text:
                stale.append(name)
        else:
            OUT.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
    if stale:
        print("stale golden files: " + ", ".join(stale))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
