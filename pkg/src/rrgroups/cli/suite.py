"""Table and structure checks with expected values, run as a named suite."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import factorial
from typing import Callable

from ..analysis.elements import generated_by_rotations, inventory
from ..catalog import exceptional
from ..catalog.names import lookup


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    compute: Callable[[], object]
    tier: str = "fast"


@dataclass
class CheckResult:
    name: str
    expected: object
    computed: object
    status: str
    elapsed: float

    def line(self) -> str:
        return (f"{self.status.upper():4}  {self.name}: expected {self.expected}, "
                f"computed {self.computed} ({self.elapsed:.2f}s)")


def _order(name: str) -> Callable[[], int]:
    return lambda: lookup(name).order()


def _g_star_order(km: int, k: int, l: int) -> int:
    return 2 ** (l - k) * km**l * factorial(l)


def _g_tilde_order(km: int, k: int, l: int) -> int:
    return 2**l * k ** (l - 1) * (km // k) ** l * factorial(l)


TABLE2 = [
    ("W+(A4)", 60), ("W*(A4)", 120), ("W*(D4)", 288), ("W+(F4)", 576), ("W*(F4)", 1152), ("W+(H4)", 7200),
    ("R5(A5)", 60), ("W*(A5)", 720), ("R6(PSL27)", 168), ("W+(E6)", 25920), ("W*(E6)", 51840),
    ("W+(E7)", 1451520), ("L", 2580480),
]
TABLE2_SLOW = [("W+(E8)", 348364800)]

# rows of the SO(4) table at small parameters m; D<n> is the binary dihedral group of order 4n
TABLE1 = [
    ("SO4(D3/D3;T/T)", 144), ("SO4(D6/D6;T/T)", 288), ("SO4(D2/D2;O/O)", 192), ("SO4(D3/D3;O/O)", 288),
    ("SO4(D2/C4;O/T)", 96), ("SO4(D3/C6;O/T)", 144), ("SO4(D2/D1;O/T)", 96), ("SO4(D4/D2;O/T)", 192),
    ("SO4(D3/C2;O/V)", 48), ("SO4(D6/C4;O/V)", 96), ("SO4(D2/D2;I/I)", 480), ("SO4(D3/D3;I/I)", 720),
    ("SO4(T/T;O/O)", 576), ("SO4(T/T;I/I)", 1440), ("SO4(O/O;I/I)", 2880),
]

TABLE3 = [("M5", 160), ("M6", 1920), ("M7p", 1344), ("M7", 10752), ("M8p", 21504), ("M8", 172032)]
G_STAR_SAMPLES = [(3, 1, 3), (4, 2, 3), (6, 1, 2), (6, 2, 4)]

TABLE4 = [
    ("W~(A4)", 240), ("W~(D4)", 576), ("W~(F4)", 2304), ("M~5", 320), ("W~(A5)", 1440), ("M~6", 3840),
    ("W~(E6)", 103680), ("M~7", 21504), ("M~8", 344064),
]
G_TILDE_SAMPLES = [(3, 1, 2), (4, 2, 2), (6, 2, 2), (4, 1, 3)]


def _witt():
    return exceptional.WittSpace()


def _l_rotations():
    L = exceptional.group_l()
    inv = inventory(L)
    return len(inv.rotations), sorted(inv.rotation_orders)


def _l_generated_by_rotations():
    L = exceptional.group_l()
    return generated_by_rotations(L)


def _l_rotation_set_match():
    L = exceptional.group_l()
    inv = inventory(L)
    W = _witt()
    return set(inv.rotations) == set(W.rotation_set_r2())


def all_checks() -> list[Check]:
    checks = [Check(f"table2 |{n}|", v, _order(n)) for n, v in TABLE2]
    checks += [Check(f"table2 |{n}|", v, _order(n), "full") for n, v in TABLE2_SLOW]
    checks += [Check(f"table1 |{n}|", v, _order(n)) for n, v in TABLE1]
    checks += [Check(f"table3 |{n}|", v, _order(n)) for n, v in TABLE3]
    checks += [Check("table3 |G*({},{},{})|".format(*p), _g_star_order(*p), _order("G*({},{},{})".format(*p)))
               for p in G_STAR_SAMPLES]
    checks += [Check(f"table4 |{n}|", v, _order(n)) for n, v in TABLE4]
    checks += [Check("table4 |G~({},{},{})|".format(*p), _g_tilde_order(*p), _order("G~({},{},{})".format(*p)))
               for p in G_TILDE_SAMPLES]
    checks += [
        Check("witt form nondegenerate", True, lambda: _witt().is_nondegenerate()),
        Check("witt index", 3, lambda: _witt().witt_index()),
        Check("singular points", 35, lambda: _witt().singular_count(1)),
        Check("singular lines", 105, lambda: _witt().singular_count(2)),
        Check("maximal singular subspaces", 30, lambda: _witt().singular_count(3)),
        Check("weight collection K4", 70, lambda: len(_witt().weight_collection(4))),
        Check("weight collection K2", 420, lambda: len(_witt().weight_collection(2))),
        Check("weight collection K1", 240, lambda: len(_witt().weight_collection(1))),
        Check("rotation set R2 size", 420, lambda: len(_witt().rotation_set_r2())),
        Check("L rotation count and orders", (420, [2]), _l_rotations, "full"),
        Check("L generated by its rotations", True, _l_generated_by_rotations, "full"),
        Check("L rotations equal the weight-pair rotation set", True, _l_rotation_set_match, "full"),
    ]
    return checks


def select(tier: str) -> list[Check]:
    if tier not in ("fast", "full"):
        raise ValueError(f"unknown tier {tier!r}")
    return [c for c in all_checks() if tier == "full" or c.tier == "fast"]


def _normalize(x):
    return list(x) if isinstance(x, tuple) else x


def run_check(name: str) -> CheckResult:
    check = next(c for c in all_checks() if c.name == name)
    t0 = time.perf_counter()
    try:
        computed = check.compute()
        status = "pass" if _normalize(computed) == _normalize(check.expected) else "fail"
    except Exception as exc:  # a crashing check is a failed check, reported with its error
        computed, status = f"error: {exc}", "fail"
    return CheckResult(check.name, _normalize(check.expected), _normalize(computed), status,
                       time.perf_counter() - t0)


@dataclass
class SuiteReport:
    tier: str
    results: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def to_json(self) -> dict:
        return {
            "tier": self.tier,
            "ok": self.ok,
            "passed": sum(r.status == "pass" for r in self.results),
            "total": len(self.results),
            "checks": [asdict(r) for r in self.results],
        }


def verify_tables(tier: str = "fast", jobs: int = 1) -> SuiteReport:
    names = [c.name for c in select(tier)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_check, names))
    else:
        results = [run_check(n) for n in names]
    return SuiteReport(tier, results)
