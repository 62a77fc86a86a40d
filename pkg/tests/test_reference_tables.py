"""Wide verification of the vendored reference tables (slow tier).

Every row re-checks its printed primes against freshly computed
factorization shapes. A handful of published rows are provably wrong
against the reference's own constructions (independently cross-checked
with a second computer algebra system during development); they are
pinned below as expected failures so that any change in their status is
noticed.
"""

import pytest

from feketepoly.pipeline import verify_csv
from conftest import DATA_DIR

# (file, p) -> first bad slot, as re-verified; see the reviewer notes
KNOWN_BAD_ROWS = {
    ("table07.csv", 11): "q1=3",    # 3 ramifies at 33 and divides disc(f)
    ("table09.csv", 11): "q1=3",    # same discriminant, trace polynomial
    ("table07.csv", 71): "q4=283",
    ("table12.csv", 89): "q3=179",
    ("table12.csv", 97): "q3=227",
}

# p-caps keep the tier to minutes; the full files were swept once during
# development with the same outcome pattern
CAPS = {
    "table01.csv": 130,
    "table02.csv": 610,
    "table03.csv": 200,
    "table04.csv": 130,
    "table05.csv": 680,
    "table06.csv": 200,
    "table07.csv": 130,
    "table08.csv": 520,
    "table09.csv": 200,
    "table10.csv": 140,
    "table10a.csv": 620,
    "table11.csv": 240,
    "table12.csv": 200,
}


def subset(path, cap, tmp_path):
    lines = []
    for line in path.read_text().splitlines():
        parts = line.split(",")
        if line.startswith("#") or parts[0] == "family" or int(parts[2]) <= cap:
            lines.append(line)
    out = tmp_path / path.name
    out.write_text("\n".join(lines) + "\n")
    return out


@pytest.mark.slow
@pytest.mark.parametrize("fname", sorted(CAPS))
def test_reference_rows_verify(fname, tmp_path):
    results = verify_csv(subset(DATA_DIR / fname, CAPS[fname], tmp_path))
    assert results, fname
    unexpected = []
    missing_bad = dict(KNOWN_BAD_ROWS)
    for r in results:
        if r.skipped:
            continue
        key = (fname, r.p)
        if key in KNOWN_BAD_ROWS:
            assert not r.ok, f"{key} unexpectedly verifies now"
            assert KNOWN_BAD_ROWS[key] in r.detail
            missing_bad.pop(key)
        elif not r.ok:
            unexpected.append((r.p, r.detail))
    assert not unexpected, (fname, unexpected)
    assert not [k for k in missing_bad if k[0] == fname], "expected bad row not seen"
