"""Cross-checks for two classical-looking closed forms that do NOT hold.

Quarantined here so the failing expectations are explicit and strict: if
either xfail ever starts passing, the generated conditions changed and
that is a bug, not an improvement.

1. Normal form for Diff_2 on K1.  A tempting closed form is

       Delta_x = x^2 * nabla_x - c*d^2 + (c*x + d)*d + e*x + f

   (mirrored on the y branch), with c, d, e, f free.  The generated
   conditions say otherwise: a_2(0) = 0 forces c = 0 and
   a_2'(0) + a_1(0) = 0 forces d = 0.  Only the c = d = 0 slice is
   admissible, and the brute-force probe agrees.

2. Degree-0 symbols on K1.  One might expect the stratum to impose
   a'(0) = 0 = b'(0) like the high-degree strata do.  It does not:
   multiplication by any glued function is an admissible order-0 pair,
   so the degree-0 stratum is cut out by the gluing jets alone
   (a(0) = b(0), a'(0) = b'(0)).
"""

from pathlib import Path

import pytest

from curveglue.cli import main
from curveglue.glued import SpaceSpec
from curveglue.operators import (
    BranchOp,
    check_admissible,
    default_probe_degree,
    probe_admissible,
)
from curveglue.poly import Poly
from curveglue.symbols import SymbolElem, check_symbol_conditions

HERE = Path(__file__).parent
K1 = SpaceSpec(1)
X = Poly.monomial(1)


def family_member(c, d, e, f):
    """The candidate normal form with nabla = 0, on the x branch."""
    return BranchOp.of(Poly.of(f, e), Poly.of(d, c), Poly.of(-c))


@pytest.mark.xfail(strict=True, reason="the c, d parameters are not actually free")
def test_full_family_would_be_admissible():
    op = family_member(c=1, d=1, e=0, f=0)
    assert check_admissible(op, op, K1, 2).ok


@pytest.mark.xfail(strict=True, reason="degree-0 symbols are not cut by a'(0) = 0")
def test_degree_zero_stratum_would_kill_slopes():
    assert not check_symbol_conditions(SymbolElem(0, X, X, K1)).ok


class TestActualVerdicts:
    def test_family_admissible_iff_c_and_d_vanish(self):
        for c in (-1, 0, 1):
            for d in (-1, 0, 1):
                op = family_member(c, d, e=2, f=3)
                verdict = check_admissible(op, op, K1, 2).ok
                assert verdict == (c == 0 and d == 0)
                assert verdict == probe_admissible(op, op, K1, default_probe_degree(K1, 2))

    def test_violations_name_the_forcing_conditions(self):
        op = family_member(c=1, d=1, e=0, f=0)
        report = check_admissible(op, op, K1, 2)
        constraints = {v.constraint for v in report.violations}
        assert "a2(0) = 0" in constraints  # forces c = 0
        assert "a2'(0) + a1(0) = 0" in constraints  # forces d = 0

    def test_cli_golden(self, capsys):
        status = main(
            ["check", str(HERE / "data" / "pair_normal_form.txt"), "--space", "K1", "--probe-depth"]
        )
        assert status == 1
        expected = (HERE / "golden" / "normal_form_discrepancy.txt").read_text()
        assert capsys.readouterr().out == expected

    def test_degree_zero_stratum_is_the_gluing_jet(self):
        assert check_symbol_conditions(SymbolElem(0, X, X, K1)).ok
        assert not check_symbol_conditions(SymbolElem(0, X, 2 * X, K1)).ok
        # Degrees >= 3 do kill the slopes.
        assert not check_symbol_conditions(SymbolElem(3, X, X, K1)).ok
