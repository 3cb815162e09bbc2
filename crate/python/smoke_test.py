#!/usr/bin/env python3
"""Smoke test for the paltriples_py extension module.

Build the module first:

    cargo build -p paltriples-py --release

then run this script from anywhere inside the repository:

    python3 python/smoke_test.py

Set PALTRIPLES_SO to point at a specific shared object if the default
target-directory lookup does not fit your setup.
"""

import os
import shutil
import sys
import tempfile
from pathlib import Path


def locate_shared_object() -> Path:
    override = os.environ.get("PALTRIPLES_SO")
    if override:
        path = Path(override)
        if not path.is_file():
            sys.exit(f"PALTRIPLES_SO={override} does not exist")
        return path
    repo = Path(__file__).resolve().parent.parent
    candidates = [
        repo / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libpaltriples_py.so", "paltriples_py.so", "libpaltriples_py.dylib")
    ]
    for candidate in candidates:
        if candidate.is_file():
            return candidate
    sys.exit(
        "no built module found; run `cargo build -p paltriples-py --release` first"
    )


def import_module(so_path: Path):
    staging = Path(tempfile.mkdtemp(prefix="paltriples-py-"))
    shutil.copy2(so_path, staging / "paltriples_py.so")
    sys.path.insert(0, str(staging))
    import paltriples_py

    return paltriples_py


def expect_value_error(fn, *args, **kwargs):
    try:
        fn(*args, **kwargs)
    except ValueError:
        return
    raise AssertionError(f"{fn.__name__}{args} should raise ValueError")


def main() -> None:
    pt = import_module(locate_shared_object())

    # Construction, canonical order, and validation.
    t = pt.Triple(4, 3, 5)
    assert (t.x, t.y, t.z) == (3, 4, 5)
    assert t.is_primitive()
    assert t.pal_flags() == (True, True, True)
    assert t.pal_count() == 3
    assert t.digit_parity() == "OOO"
    assert t.parity_admissible()
    assert t.factor_form() == "3a-4b-5c"
    assert t.all_palindrome_prefilter() is True
    assert repr(t) == "Triple(3, 4, 5)"
    assert t == pt.Triple(3, 4, 5)
    assert hash(t) == hash(pt.Triple(3, 4, 5))
    expect_value_error(pt.Triple, 3, 4, 6)
    expect_value_error(pt.Triple, 0, 4, 5)

    report = t.divisibility_report()
    assert report["all_hold"] is True
    assert report["even_leg_div4"] is True

    # Generator pairs.
    assert pt.Triple.from_euclid(2, 1) == t
    expect_value_error(pt.Triple.from_euclid, 2, 2)
    expect_value_error(pt.Triple.from_euclid, 1, 2)

    # Scaling keeps palindromes here but loses primitivity.
    scaled = t.scale(11)
    assert (scaled.x, scaled.y, scaled.z) == (33, 44, 55)
    assert scaled.pal_count() == 3
    assert not scaled.is_primitive()
    expect_value_error(scaled.factor_form)
    expect_value_error(t.scale, 0)

    # Digit utilities.
    assert pt.is_palindrome(121)
    assert not pt.is_palindrome(123)
    expect_value_error(pt.is_palindrome, 0)
    assert pt.reverse_digits(456) == 654
    assert pt.digit_count(10**100) == 101
    assert pt.concat_copies(12, 2) == 121212
    assert pt.repeat_digit(7, 3) == 777
    assert pt.alternating_digit_sum(8084) == 8 - 0 + 8 - 4
    assert pt.enumerate_palindromes(2, 2) == [11 * k for k in range(1, 10)]
    assert pt.enumerate_palindromes(3, 3, parity="even", limit=3) == [202, 212, 222]

    # Families, including components far beyond machine words.
    m = pt.family_member("NPPT-2A", 1)
    assert (m["triple"].x, m["triple"].y, m["triple"].z) == (363, 484, 605)
    assert m["pattern_ok"] and m["declared_pal_count"] == 2
    deep = pt.family_member("NPPT-1A", 50)["triple"]
    assert deep.x * deep.x + deep.y * deep.y == deep.z * deep.z
    assert len(str(deep.z)) > 100
    assert pt.f_multiplier(2) == 10101
    assert pt.ppt1_s_values(14)[12:] == [444, 2002]
    expect_value_error(pt.family_member, "NPPT-9", 1)
    expect_value_error(pt.family_member, "NPPT-1B", 0)

    # Searches.
    hits = pt.search_euclid(max_s=81, max_z=5999, min_pal=2)
    assert len(hits) == 8
    assert any(
        (h["triple"].x, h["triple"].y, h["triple"].z) == (595, 468, 757) for h in hits
    )
    assert all(h["source"] == "euclid" for h in hits)

    hits = pt.anchored_search("odd-leg", 1, 3, min_pal=2, primitive_only=True)
    assert len(hits) == 7
    assert (hits[0]["triple"].x, hits[0]["triple"].z) == (3, 5)
    assert hits[0]["params"]["role"] == "odd-leg"
    assert (hits[-1]["triple"].x, hits[-1]["triple"].z) == (313, 48985)

    hits = pt.evidence_search(100_000)
    assert [(h["triple"].x, h["triple"].y, h["triple"].z) for h in hits] == [(3, 4, 5)]

    triples = pt.decompose("hypotenuse", 25)
    assert [(d.x, d.y, d.z) for d in triples] == [(7, 24, 25), (15, 20, 25)]
    assert [d.z for d in pt.decompose("even-leg", 20)] == [25, 29, 52, 101]
    expect_value_error(pt.decompose, "corner", 25)

    # Reference tables: exactly one printed row fails, fixed by z := 757.
    verdicts = pt.verify_tables()
    assert len(verdicts) == 21
    failing = [v for v in verdicts if not v["passes"]]
    assert len(failing) == 1
    assert (failing[0]["x"], failing[0]["z"]) == (595, 797)
    assert "757" in failing[0]["erratum"]
    rows = pt.golden_rows("table2")
    assert len(rows) == 13
    assert (rows[0]["x"], rows[0]["y"], rows[0]["z"]) == (313, 48984, 48985)

    print("smoke test passed")


if __name__ == "__main__":
    main()
