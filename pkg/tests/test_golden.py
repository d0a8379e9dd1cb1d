import subprocess
import sys
from pathlib import Path

import pytest

from kmlie.cartan import named_gcm
from kmlie.chevalley import generated_subalgebra
from kmlie.freelie import LyndonBasis, qmsa_quotient_dims
from kmlie.loopalg import LoopInvolution, fixed_split, killing_inertia
from kmlie.report import load_golden
from kmlie.rootsys import affine_classify, enumerate_finite, is_real_root, null_root, root_string, simple_root

from conftest import algebra

ROOT = Path(__file__).resolve().parents[1]


def test_roots():
    g = load_golden("roots")
    for name in ("A2", "A3", "D4", "E6", "E7", "E8"):
        assert len(enumerate_finite(named_gcm(name)).roots) == g[f"root_count/{name}"]
    a2 = named_gcm("A2")
    s = root_string(a2, (1, 0), (0, 1))
    assert [s.p, s.q] == g["string/A2/a1/a2"]
    s = root_string(a2, (1, 0), (1, 1))
    assert [s.p, s.q] == g["string/A2/a1/a1+a2"]
    e9 = named_gcm("E9")
    s = root_string(e9, simple_root(9, 1), null_root(e9), member=affine_classify)
    assert [s.p, s.q] == g["string/E8~/a1/delta"]
    assert is_real_root(named_gcm("E10"), (0,) * 6 + (1, 0, 0, 1)) == g["real/E10/a7+a10"]


def test_chevalley():
    g = load_golden("chevalley")
    assert algebra("A2").dim == g["dim/A2"]
    assert algebra("E8").dim == g["dim/E8"]
    a3 = algebra("A3")
    gens = [a3.highest_root_vector()] + [a3.f(i) for i in range(3)]
    assert generated_subalgebra(a3, gens).dimension == g["generated/A3/e_theta,f1,f2,f3"]
    a2 = algebra("A2")
    assert generated_subalgebra(a2, [a2.e(0), a2.e(1)]).dimension == g["generated/A2/e1,e2"]


@pytest.mark.parametrize("label,ring,signs", [("lorentzian", -1, (-1, -1, 1)), ("compact", 1, (-1, -1, -1))])
def test_loopalg(label, ring, signs):
    expected = load_golden("loopalg")[f"s_plus/A3/{label}"]
    inv = LoopInvolution(algebra("A3"), ring, signs)
    split = fixed_split(inv, 1)
    assert len(split.s_plus) == expected["dimension"]
    assert list(killing_inertia(inv.alg, split.s_plus)) == expected["inertia"]


def test_freelie():
    g = load_golden("freelie")
    for n in range(1, 5):
        assert list(LyndonBasis(n, 6).dims()) == g[f"witt/{n}"]
    for key, dims in g.items():
        if key.startswith("quotient/"):
            _, n, sig = key.split("/")
            p, m = map(int, sig.split(","))
            assert list(qmsa_quotient_dims(int(n), (p, m), len(dims)).quotient) == dims


def test_golden_files_regenerate_identically():
    res = subprocess.run([sys.executable, str(ROOT / "tools" / "regen_golden.py"), "--check"],
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stdout
