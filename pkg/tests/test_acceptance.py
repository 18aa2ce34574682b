"""The twelve acceptance criteria, each timed against its runtime limit.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script; either
way one PASS/FAIL line per criterion is printed.
"""

import random
import sys
import time

import pytest

from stonefin import verify
from stonefin.verify import VerificationReport, run_suite


def _checks(*groups):
    def run():
        rep = VerificationReport("acceptance", 0, {})
        rng = random.Random(0)
        for group in groups:
            group(rep, rng)
        return rep

    return run


def _suite(name):
    return lambda: run_suite(name)


CRITERIA = [
    ("boolean laws and F2 roundtrip, <= 4 atoms", 1, _suite("boolean-laws")),
    ("generated filters match brute force, <= 3 atoms", 5,
     _checks(lambda rep, rng: verify.check_fil_generate(rep, 3))),
    ("ultrafilters are the maximal proper filters, <= 4 atoms", 5,
     _checks(lambda rep, rng: verify.check_ultrafilters(rep, 4))),
    ("UF(X) structure on spaces with <= 6 points", 60,
     _checks(lambda rep, rng: verify.check_uf_spaces(rep, verify.spaces_up_to(6, rng, 60), rng))),
    ("UF(f) factorization and uniqueness, |X| <= 4, |Y| <= 3", 30,
     _checks(lambda rep, rng: verify.check_uf_maps(rep, 4, 3))),
    ("maximal ideal and ultrafilter roundtrips, |X| <= 8", 10, _suite("ideal-bijection")),
    ("seminorm identities on random functions", 60, _suite("seminorm-identities")),
    ("orthogonal decomposition", 5, _suite("orthogonality")),
    ("base-field independence of the spectrum, |X| <= 6", 10,
     _checks(lambda rep, rng: verify.check_base_field_independence(rep, verify.spaces_up_to(6, rng, 40)))),
    ("partition and subalgebra roundtrip, |X| <= 6", 10, _suite("gelfand")),
    ("locally constant approximation", 10, _suite("approximation")),
    ("tensor isometry over F4/F2 and Q(i)/Q", 10, _suite("tensor-isometry")),
]


def evaluate(index):
    title, limit, run = CRITERIA[index]
    start = time.perf_counter()
    rep = run()
    seconds = time.perf_counter() - start
    ok = rep.ok and bool(rep.checks) and seconds < limit
    reason = "" if rep.ok else f" failed checks: {', '.join(rep.failed)}"
    if seconds >= limit:
        reason += f" over the {limit} s limit"
    line = f"criterion {index + 1:2d} {'PASS' if ok else 'FAIL'} {seconds:6.2f}s / {limit}s  {title}{reason}"
    return ok, line


@pytest.mark.slow
@pytest.mark.parametrize("index", range(len(CRITERIA)), ids=[f"criterion-{i + 1}" for i in range(len(CRITERIA))])
def test_criterion(index, capsys):
    ok, line = evaluate(index)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(i) for i in range(len(CRITERIA))]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
