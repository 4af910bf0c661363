import hashlib
import re
from importlib import resources

import pytest

from cellatlas import exceptional
from cellatlas.errors import UnknownOrbitError, ValidationError
from cellatlas.exceptional import GROUP_ORDER, list_orbits, lookup, records

# Y' for the S_r cases, as reference in LaTeX
REFERENCE_SR = {
    ("G2", "G2(a1)", "S3"): r"S_3/S_2 \sqcup S_3/S_3",
    ("E6", "D4(a1)", "S3"): r"(S_3)^{20} \sqcup (S_3/S_3)^{10}\sqcup (S_3/S_2)^{50}",
    ("E7", "D4(a1)", "S3"): r"(S_3)^{35} \sqcup (S_3/S_3)^{70}\sqcup (S_3/S_2)^{210}",
    ("E8", "D4(a1)", "S3"): r"(S_3)^{56} \sqcup (S_3/S_3)^{448}\sqcup (S_3/S_2)^{896}",
    ("E8", "E8(b5)", "S3"): r"(S_3)^{56} \sqcup (S_3/S_3)^{448}\sqcup (S_3/S_2)^{896}",
    ("E8", "D4(a1)+A1", "S3"): r"(S_3)^{350} \sqcup (S_3/S_3)^{175}\sqcup (S_3/S_2)^{875}",
    ("E8", "E8(a6)", "S3"): r"(S_3)^{350} \sqcup (S_3/S_3)^{175}\sqcup (S_3/S_2)^{875}",
    ("F4", "F4(a3)", "S4"): r"(S_4/S_4)^3\sqcup (S_4/S_3)^3 \sqcup (S_4/S_2\times S_2)^4\sqcup S_4/S_2 "
                            r"\sqcup S_4/\mbox{Dyh}_8",
    ("E8", "E8(a7)", "S5"): r"(S_5/S_5)^{420}\sqcup (S_5/S_4)^{756}\sqcup (S_5/\mbox{Dyh}_8)^{168}\sqcup "
                            r"(S_5/S_2)^{70}\sqcup(S_5/S_3\times S_2)^{1596}\sqcup (S_5/S_2\times S_2)^{1092} "
                            r"\sqcup (S_5/S_3)^{378}",
}

# special orbits with Ā = Z/2, as reference
REFERENCE_Z2 = {
    "G2": r"",
    "F4": r"\tilde{A}_1,F_4(a_1)",
    "E6": r"A_2, E_6(a_3)",
    "E7": r"A_2, A_2+A_1, D_4(a_1)+A_1, A_4, A_4+A_1, D_5(a_1), E_6(a_3), E_6(a_1), E_7(a_3)",
    "E8": r"A_2, A_2+A_1, 2A_2, A_4, D_4(a_1)+A_2, A_4+A_1, D_5(a_1), A_4+2A_1, E_6(a_3), "
          r"D_6(a_1), E_6(a_1), D_7(a_2), E_6(a_1)+A_1, E_7(a_3), E_8(a_5), E_8(a_4),E_8(a_3)",
}


def from_latex(text):
    """LaTeX notation -> the plain notation of the data file."""
    t = re.sub(r"\\times\s*", "×", text)  # a control word swallows the following space
    t = t.replace(r"\sqcup", " ⊔ ").replace(r"\mbox{Dyh}_8", "Dyh8")
    t = t.replace(r"\tilde{A}_1", "Ã1")
    t = re.sub(r"\^\{(\d+)\}", r"^\1", t)
    t = re.sub(r"_(\d)", r"\1", t)
    return re.sub(r"\s+", " ", t).strip()


def test_latex_normalizer():
    assert from_latex(r"(S_4/S_2\times S_2)^4\sqcup S_4/\mbox{Dyh}_8") == "(S4/S2×S2)^4 ⊔ S4/Dyh8"


@pytest.mark.parametrize("key", sorted(REFERENCE_SR))
def test_sr_records_verbatim(key):
    group, orbit, abar = key
    rec = lookup(group, orbit)
    assert rec.abar == abar
    assert rec.y_prime_text == from_latex(REFERENCE_SR[key])
    assert not rec.is_exceptional_cell


def test_multiplicities_from_text():
    for (group, orbit, _), text in REFERENCE_SR.items():
        rec = lookup(group, orbit)
        total = 0
        for term in from_latex(text).split(" ⊔ "):
            m = re.fullmatch(r"\(?([^()^]+)\)?(?:\^(\d+))?", term)
            total += int(m.group(2) or 1) * _coset_size(rec.abar, m.group(1))
        assert rec.y_total == total > 0


def _coset_size(abar, coset):
    if "/" not in coset:
        return GROUP_ORDER[abar]
    g, h = coset.split("/")
    return GROUP_ORDER[g] // GROUP_ORDER[h]


def test_e8a7_total():
    assert lookup("E8", "E8(a7)").y_total == 420 + 756 * 5 + 168 * 15 + 70 * 60 + 1596 * 10 + 1092 * 30 + 378 * 20


@pytest.mark.parametrize("group", sorted(REFERENCE_Z2))
def test_z2_lists_verbatim(group):
    reference = [from_latex(x) for x in REFERENCE_Z2[group].split(",") if x.strip()]
    assert list_orbits(group, "Z/2") == reference


def test_exceptional_cells():
    cells = {(r.group_type, r.orbit_label) for r in records() if r.is_exceptional_cell}
    assert cells == {("E7", "A4+A1"), ("E8", "A4+A1"), ("E8", "E6(a1)+A1")}
    for g, o in cells:
        rec = lookup(g, o)
        assert rec.abar == "Z/2"
        assert [h for h, _ in rec.cell_types] == ["1"]


def test_z2_non_exceptional_structure():
    for r in records():
        if r.abar == "Z/2" and not r.is_exceptional_cell:
            assert [h for h, _ in r.cell_types] == ["1", "Z/2"]
            assert r.y_total is None and r.y_prime_text == "unknown"


def test_list_filters():
    assert list_orbits("F4", "Z/2") == ["Ã1", "F4(a1)"]
    assert list_orbits("E8", "S3") == ["D4(a1)", "E8(b5)", "D4(a1)+A1", "E8(a6)"]
    assert list_orbits("G2", "Z/2") == []
    assert list_orbits("G2") == ["G2(a1)"]


def test_lookup_aliases_and_errors():
    assert lookup("F4", "A~1").orbit_label == "Ã1"
    with pytest.raises(UnknownOrbitError) as exc:
        lookup("E6", "E6(a9)")
    assert "D4(a1)" in str(exc.value)
    with pytest.raises(ValidationError):
        lookup("A3", "A2")


def test_data_checksum():
    raw = resources.files("cellatlas").joinpath("data/exceptional.tsv").read_bytes()
    assert hashlib.sha256(raw).hexdigest() == exceptional.DATA_SHA256
