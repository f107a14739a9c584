import pytest

from nichols import catalog as cat

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


@pytest.fixture
def criterion():
    def record(n: int, name: str, passed: bool, detail: str = "") -> bool:
        ACCEPTANCE.setdefault(n, []).append((name, bool(passed), detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[n]
        ok = all(p for _, p, _ in parts)
        failed = "; ".join(f"{name}: {d}" for name, p, d in parts if not p)
        names = " | ".join(name for name, _, _ in parts)
        tr.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {names}"
                      + (f"  [{failed}]" if failed else ""))


def first_witness(fid: str) -> cat.Witness:
    return next(w for w in cat.WITNESSES if w.family == fid)


def family_instance(fid: str):
    """(LEX R-matrix, braiding) of a family at its first witness parameters."""
    w = first_witness(fid)
    f = cat.family(fid)
    values, cond = cat._coerce_params(f, w.param_dict, w.conductor)
    R = cat.r_matrix(f, cat.family_env(f, values), cond)
    c, _ = cat.instantiate(fid, w.param_dict, w.conductor)
    return R, c


FAMILY_IDS = sorted(cat.FAMILIES)
