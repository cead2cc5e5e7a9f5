import json

import pytest

import weber_modular as wm


def test_printed_phi5_regenerates():
    assert wm.poly_dict(wm.generate("x24", 5)) == wm.poly_dict(wm.builtin("phi5"))
    assert wm.poly_dict(wm.builtin("phi5")) == {(0, 6): "1", (1, 1): "4", (5, 5): "-1", (6, 0): "1"}


def test_serialized_file_header():
    text = wm.serialize("x24", 7)
    assert text.splitlines()[0] == "# line=x24 ell=7 norm=monic-x"


def test_verify_and_identities():
    assert wm.verify("x24", 5)["vanishes"]
    report = wm.qid_report(48 * 20)
    assert len(report) == 7
    assert all(r["vanishes"] for r in report)


def test_group_orders():
    assert wm.group_orders() == (1152, 192)


def naive_ss_count(p):
    # Supersingular j in F_p and F_{p^2} counted by the classical formula.
    return p // 12 + {1: 0, 5: 1, 7: 1, 11: 2}[p % 12]


@pytest.mark.parametrize("p", [5, 7, 11, 13, 37, 61, 97, 101])
def test_supersingular_counts(p):
    assert len(wm.supersingular_j(p)) == naive_ss_count(p)


def test_graph_out_degrees():
    g = wm.graph(13, "x1", 5)
    assert len(g["nodes"]) == 3
    sums = [0] * len(g["nodes"])
    for src, _dst, mult in g["edges"]:
        sums[src] += mult
    assert sums == [6, 6, 6]


def test_hecke_sieve_level_37():
    systems = sorted(wm.hecke_sieve(37, "j", [5, 7, 13]), key=lambda s: s[0][5])
    assert [s[0] for s in systems] == [{5: -2, 7: -1, 13: -2}, {5: 0, 7: -1, 13: -4}]
    assert all(dim == 1 for _, dim in systems)


def test_chain_witness():
    built = 0
    for a in range(2, 40):
        try:
            w = wm.chain(41, a, 5, "twisted")
        except wm.WeberError as e:
            # Degenerate seeds and missing square roots are expected rejections.
            assert "DegenerateSeed" in str(e) or "NeedsExtension" in str(e)
            continue
        built += 1
        assert w["composite_degree"] == 8
        assert w["legendre_recursion"]
    assert built > 5


def test_split_check():
    assert wm.split_violations(101) == 0


def test_errors_are_python_exceptions():
    with pytest.raises(wm.DomainError):
        wm.supersingular_j(15)
    with pytest.raises(wm.WeberError):
        wm.generate("nope", 5)


def test_cli_in_process():
    code, out, err = wm.run_cli(["group-check"])
    assert code == 0 and err == ""
    assert json.loads(out)["orderG"] == 1152
    code, _out, err = wm.run_cli(["ss", "--line", "x1"])
    assert code == 2
    assert json.loads(err)["error"] == "UsageError"
