"""Executable reproduction of every desk-scale claim, as machine-readable reports.

Each suite runs a list of checks, records expected and observed values, and
returns a :class:`VerifyReport`.  A check passes only when the observation
matches exactly (or satisfies the stated bound, for inequality claims).
Claim ids are stable strings; reports sort their checks by id, so two runs
with the same parameters and seed differ only in the wall-clock fields.

Observed distances for the twin-switch instances with 3 <= n <= 7 match the
closed form in every run to date, but equality there is conjectural, so the
suite records the observation and asserts only the upper bound.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Any, Callable

import numpy as np

from . import graphs, solvers
from .errors import TwinHanoiError
from .words import (
    Config,
    CoupledConfig,
    MoveSeq,
    apply_seq,
    apply_seq_coupled,
    lcp_len,
    parity,
)
from .wreath import decompose, equal_on_level, root_perm

DEFAULT_SEED = 20260811


def _jsonable(value: Any) -> Any:
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


@dataclass(frozen=True)
class CheckResult:
    id: str
    expected: Any
    observed: Any
    status: str
    ms: float


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    params: dict
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def summary(self) -> dict:
        failed = sum(1 for c in self.checks if c.status != "pass")
        return {
            "total": len(self.checks),
            "passed": len(self.checks) - failed,
            "failed": failed,
            "ok": failed == 0,
        }

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status != "pass"]

    def to_json_dict(self, with_timings: bool = True) -> dict:
        checks = []
        for c in self.checks:
            entry = {
                "id": c.id,
                "expected": c.expected,
                "observed": c.observed,
                "status": c.status,
            }
            if with_timings:
                entry["ms"] = round(c.ms, 3)
            checks.append(entry)
        return {
            "suite": self.suite,
            "params": _jsonable(self.params),
            "checks": checks,
            "summary": self.summary,
        }

    def render_text(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(
                f"{c.status.upper():<4} {c.id}  expected={c.expected!r} observed={c.observed!r}"
            )
        s = self.summary
        lines.append(f"suite {self.suite}: {s['passed']}/{s['total']} checks passed")
        return "\n".join(lines)


class _Recorder:
    def __init__(self) -> None:
        self.checks: list[CheckResult] = []

    def check(
        self,
        cid: str,
        expected: Any,
        observe: Callable[[], Any] | Any,
        ok: Callable[[Any], bool] | None = None,
    ) -> Any:
        t0 = time.perf_counter()
        observed = observe() if callable(observe) else observe
        ms = (time.perf_counter() - t0) * 1000.0
        good = ok(observed) if ok is not None else observed == expected
        self.checks.append(
            CheckResult(
                id=cid,
                expected=_jsonable(expected),
                observed=_jsonable(observed),
                status="pass" if good else "fail",
                ms=ms,
            )
        )
        return observed

    def report(self, suite: str, params: dict) -> VerifyReport:
        ordered = tuple(sorted(self.checks, key=lambda c: c.id))
        return VerifyReport(suite=suite, params=params, checks=ordered)


def _corner(x: int, n: int) -> int:
    return graphs.pack_config(str(x) * n)


# ---------------------------------------------------------------------------


def verify_classic(n_max: int = 12, sweep_n_max: int = 7) -> VerifyReport:
    """Corner distances, corner words, diameters and geodesic uniqueness."""
    rec = _Recorder()
    sweep_n_max = min(sweep_n_max, n_max)
    for n in range(1, n_max + 1):
        fields = {x: graphs.cached_bfs(_corner(x, n), graphs.SINGLE, n) for x in range(3)}
        for x, y in permutations(range(3), 2):
            rec.check(
                f"classic/corner-distance/n={n:02d}/{x}{y}",
                2**n - 1,
                lambda f=fields[x], t=_corner(y, n): f.distance_to(t),
            )
            word = solvers.corner_seq(x, y, n)
            rec.check(
                f"classic/corner-word/n={n:02d}/{x}{y}",
                {"length": 2**n - 1, "endpoint": str(y) * n},
                {
                    "length": len(word),
                    "endpoint": apply_seq(word, Config.corner(x, n)).word,
                },
            )
    for n in range(1, sweep_n_max + 1):
        rec.check(
            f"classic/diameter/n={n:02d}",
            2**n - 1,
            lambda n=n: graphs.diameter(n, graphs.SINGLE),
        )
        for x, y in permutations(range(3), 2):
            rec.check(
                f"classic/unique-geodesic/n={n:02d}/{x}{y}",
                1,
                lambda n=n, x=x, y=y: graphs.geodesic_count(
                    _corner(x, n), _corner(y, n), graphs.SINGLE, n
                ),
            )
            rec.check(
                f"classic/geodesic-match/n={n:02d}/{x}{y}",
                solvers.corner_seq(x, y, n).display,
                lambda n=n, x=x, y=y: solvers.transform_single(
                    Config.corner(x, n), Config.corner(y, n), backend="bfs"
                ).display,
            )
    return rec.report("classic", {"n_max": n_max, "sweep_n_max": sweep_n_max})


def verify_tts(n_max: int = 20, distance_n_max: int = 7) -> VerifyReport:
    """Twin-switch words, their lengths, and the distance evidence."""
    rec = _Recorder()
    distance_n_max = min(distance_n_max, n_max)
    for n in range(1, n_max + 1):
        word = solvers.tts_seq(n)
        start, goal = solvers.tts_endpoints(n)
        rec.check(f"tts/length/n={n:02d}", solvers.switch_moves(n), len(word))
        rec.check(
            f"tts/valid/n={n:02d}",
            {"forward": str(goal), "back": str(start)},
            {
                "forward": str(apply_seq_coupled(word, start)),
                "back": str(apply_seq_coupled(word, goal)),
            },
        )
        if n >= 2:
            rec.check(
                f"tts/palindrome/n={n:02d}", True, word.display == word.display[::-1]
            )
        if n >= 3:
            alt = solvers.tts_alt_seq(n)
            rec.check(f"tts/alt-length/n={n:02d}", solvers.switch_moves(n), len(alt))
            rec.check(
                f"tts/alt-valid/n={n:02d}",
                str(goal),
                str(apply_seq_coupled(alt, start)),
            )
    for n in range(4, 31):
        rec.check(
            f"tts/jacobsthal/n={n:02d}",
            solvers.switch_moves(n),
            solvers.switch_moves(n - 1) + 2 * solvers.switch_moves(n - 2),
        )
    for n in range(1, distance_n_max + 1):
        start, goal = solvers.tts_endpoints(n)
        observed = graphs.distance(
            graphs.pack_coupled(start), graphs.pack_coupled(goal), graphs.COUPLED, n
        )
        if n <= 2:
            rec.check(f"tts/distance/n={n:02d}", solvers.switch_moves(n), observed)
        else:
            # conjectured equality: record the observation, assert the bound only
            bound = solvers.switch_moves(n)
            rec.check(
                f"tts/evidence/n={n:02d}",
                f"<= {bound}",
                observed,
                ok=lambda got, bound=bound: got <= bound,
            )
    return rec.report("tts", {"n_max": n_max, "distance_n_max": distance_n_max})


_SHIFT_CASES_EVEN = {
    # case -> (word builder, start word, expected shape builder)
    "top-a": (
        lambda n: "bca" * ((2**n - 1) // 3) + "cba" * ((2**n - 1) // 3),
        lambda n: "1" + "0" * (n - 1),
        lambda n: "20" + "1" * (n - 2),
    ),
    "bot-a": (
        lambda n: "cbc" + "abc" * ((2**n - 4) // 3) + "acb" * ((2**n - 1) // 3),
        lambda n: "0" * n,
        lambda n: "10" + "1" * (n - 2),
    ),
    "bot-b": (
        lambda n: "ac" + "bac" * ((2**n - 4) // 3) + "bca" * ((2**n - 1) // 3) + "c",
        lambda n: "0" * n,
        lambda n: "10" + "2" * (n - 2),
    ),
}
_SHIFT_CASES_ODD = {
    "top-b": (
        lambda n: "bca" * ((2**n - 2) // 3) + "ba" + "cba" * ((2**n - 2) // 3),
        lambda n: "1" + "0" * (n - 1),
        lambda n: "2" * n,
    ),
    "bot-a": (
        lambda n: "acb" * ((2**n - 2) // 3) + "a" + "bca" * ((2**n - 2) // 3) + "c",
        lambda n: "0" * n,
        lambda n: "1" * n,
    ),
    "bot-b": (
        lambda n: "c" + "bca" * ((2**n - 2) // 3) + "b" + "acb" * ((2**n - 2) // 3),
        lambda n: "0" * n,
        lambda n: "1" + "2" * (n - 1),
    ),
}


def verify_sds(
    n_max: int = 20, distance_n_max: int = 7, case_n_max: int = 12
) -> VerifyReport:
    """Smallest-disk-shift words, exact distances, and the lower-bound cases."""
    rec = _Recorder()
    distance_n_max = min(distance_n_max, n_max)
    case_n_max = min(case_n_max, n_max)
    for n in range(1, n_max + 1):
        word = solvers.sds_seq(n)
        start, goal = solvers.sds_endpoints(n)
        rec.check(f"sds/length/n={n:02d}", solvers.shift_moves(n), len(word))
        rec.check(
            f"sds/valid/n={n:02d}", str(goal), str(apply_seq_coupled(word, start))
        )
        rec.check(
            f"sds/root/n={n:02d}",
            {"root": "(012)", "even-length": True},
            {"root": root_perm(word).cycle_str(), "even-length": len(word) % 2 == 0},
        )
    for n in range(1, distance_n_max + 1):
        start, goal = solvers.sds_endpoints(n)
        rec.check(
            f"sds/distance/n={n:02d}",
            solvers.shift_moves(n),
            lambda s=start, g=goal, n=n: graphs.distance(
                graphs.pack_coupled(s), graphs.pack_coupled(g), graphs.COUPLED, n
            ),
        )
    for n in range(3, case_n_max + 1):
        cases = _SHIFT_CASES_EVEN if n % 2 == 0 else _SHIFT_CASES_ODD
        tag = "even" if n % 2 == 0 else "odd"
        for case, (mk_word, mk_start, mk_shape) in cases.items():
            word = MoveSeq.parse(mk_word(n))
            start, shape = mk_start(n), mk_shape(n)
            goal_side = "2" + "0" * (n - 1) if start[0] == "1" else "1" + "0" * (n - 1)
            rec.check(
                f"sds/case/{tag}-{case}/n={n:02d}",
                {"end": shape, "misses-goal": True},
                {
                    "end": apply_seq(word, Config(start)).word,
                    "misses-goal": shape != goal_side,
                },
            )
        # corner-detour lengths for all four loop placements
        lengths = _corner_detour_lengths(n)
        full = 2 * 2**n
        expected = (
            {"top-a": full - 2, "top-b": full - 1, "bot-a": full - 2, "bot-b": full - 2}
            if n % 2 == 0
            else {"top-a": full - 1, "top-b": full - 2, "bot-a": full - 2, "bot-b": full - 2}
        )
        rec.check(f"sds/detour-lengths/n={n:02d}", expected, lengths)
    for n in (3, 4):
        if n <= case_n_max:
            rec.check(
                f"sds/parity-locus/n={n}",
                0,
                lambda n=n: _parity_locus_violations(n),
            )
    return rec.report(
        "sds",
        {"n_max": n_max, "distance_n_max": distance_n_max, "case_n_max": case_n_max},
    )


def _corner_detour_lengths(n: int) -> dict[str, int]:
    """Shortest lengths of shift solutions forced through each corner loop.

    The constrained side must reach the loop corner, spend one loop move
    there, and continue to its own goal; both legs are exact breadth-first
    distances.
    """
    top_field = graphs.cached_bfs(_corner(2, n), graphs.SINGLE, n)
    one_field = graphs.cached_bfs(_corner(1, n), graphs.SINGLE, n)
    zeros = "0" * (n - 1)
    start_top = graphs.pack_config("0" * n)
    start_bot = graphs.pack_config("1" + zeros)
    goal_top = graphs.pack_config("1" + zeros)
    goal_bot = graphs.pack_config("2" + zeros)
    return {
        "top-a": top_field.distance_to(start_top) + 1 + top_field.distance_to(goal_top),
        "top-b": one_field.distance_to(start_top) + 1 + one_field.distance_to(goal_top),
        "bot-a": top_field.distance_to(start_bot) + 1 + top_field.distance_to(goal_bot),
        "bot-b": one_field.distance_to(start_bot) + 1 + one_field.distance_to(goal_bot),
    }


def _parity_locus_violations(n: int) -> int:
    """Exhaustive check that the 0-parity only flips at a corner loop.

    Applying a move to a coupled state changes the combined 0-parity
    exactly when the move fixes one side (a loop at that side's corner)
    and touches peg 0 (moves a or b).
    """
    bad = 0
    words = ["".join(w) for w in product("012", repeat=n)]
    for top in words:
        for bottom in words:
            state = CoupledConfig.of(top, bottom)
            before = parity(0, state)
            for move in "abc":
                seq = MoveSeq(move)
                after_state = apply_seq_coupled(seq, state)
                flipped = parity(0, after_state) != before
                top_fixed = after_state.top.word == top
                bottom_fixed = after_state.bottom.word == bottom
                expected = (top_fixed != bottom_fixed) and move in "ab"
                if flipped != expected:
                    bad += 1
    return bad


def verify_structure(
    n_max: int = 6,
    lcp_trials: int = 100_000,
    parity_trials: int = 100_000,
    seed: int = DEFAULT_SEED,
    orbit_n_max: int = 7,
    coset_pairs: int = 10_000,
    isometry_samples: int = 200,
) -> VerifyReport:
    """Component census, conserved quantities, and the transversal structure."""
    rec = _Recorder()
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        report = graphs.components(n)
        for i, size, _ in report.entries:
            rec.check(
                f"structure/components/n={n}/i={i}",
                graphs.expected_component_size(n, i),
                size,
            )
        rec.check(
            f"structure/components/n={n}/total",
            9**n,
            sum(report.sizes()),
        )

    def lcp_violations() -> int:
        bad = 0
        for _ in range(lcp_trials):
            n = rng.randint(1, 10)
            state = CoupledConfig.of(_random_word(rng, n), _random_word(rng, n))
            move = MoveSeq(rng.choice("abc"))
            if lcp_len(apply_seq_coupled(move, state)) != lcp_len(state):
                bad += 1
        return bad

    rec.check("structure/lcp-invariance", 0, lcp_violations)

    def parity_violations() -> int:
        bad = 0
        for _ in range(parity_trials):
            n = rng.randint(2, 10)
            while True:
                state = CoupledConfig.of(_random_word(rng, n), _random_word(rng, n))
                if not (state.top.is_corner() or state.bottom.is_corner()):
                    break
            move = MoveSeq(rng.choice("abc"))
            after = apply_seq_coupled(move, state)
            if any(parity(x, after) != parity(x, state) for x in range(3)):
                bad += 1
        return bad

    rec.check("structure/parity-conservation", 0, parity_violations)

    for n in range(1, min(n_max, 4) + 1):
        def isometry_mismatches(n=n) -> int:
            bad = 0
            for _ in range(isometry_samples):
                u, v = _random_word(rng, n), _random_word(rng, n)
                single = graphs.distance(
                    graphs.pack_config(u), graphs.pack_config(v), graphs.SINGLE, n
                )
                diag = graphs.distance(
                    graphs.pack_coupled(CoupledConfig.of(u, u)),
                    graphs.pack_coupled(CoupledConfig.of(v, v)),
                    graphs.COUPLED,
                    n,
                )
                if single != diag:
                    bad += 1
            return bad

        rec.check(f"structure/diagonal-isometry/n={n}", 0, isometry_mismatches)

    for n in range(1, orbit_n_max + 1):
        rec.check(
            f"structure/orbit/n={n}", 3**n, lambda n=n: _transversal_orbit_size(n)
        )

    def coset_violations() -> int:
        from .wreath import coset

        bad = 0
        for _ in range(coset_pairs):
            s = MoveSeq(_random_word_over(rng, "abc", rng.randint(0, 25)))
            t = MoveSeq(_random_word_over(rng, "abc", rng.randint(0, 25)))
            if coset(s * t) is not coset(s) * coset(t):
                bad += 1
        return bad

    rec.check("structure/coset-homomorphism", 0, coset_violations)
    return rec.report(
        "structure",
        {
            "n_max": n_max,
            "lcp_trials": lcp_trials,
            "parity_trials": parity_trials,
            "seed": seed,
            "orbit_n_max": orbit_n_max,
            "coset_pairs": coset_pairs,
            "isometry_samples": isometry_samples,
        },
    )


def _random_word(rng: random.Random, n: int) -> str:
    return "".join(rng.choice("012") for _ in range(n))


def _random_word_over(rng: random.Random, alphabet: str, n: int) -> str:
    return "".join(rng.choice(alphabet) for _ in range(n))


def _transversal_orbit_size(n: int) -> int:
    """Size of the orbit of the all-zeros word under cba, acb, bac."""
    gens = [graphs.act_on_level(MoveSeq.parse(w), n) for w in ("cba", "acb", "bac")]
    seen = np.zeros(3**n, dtype=bool)
    frontier = np.array([graphs.pack_config("0" * n)], dtype=np.int64)
    seen[frontier] = True
    while frontier.size:
        images = np.unique(np.concatenate([g[frontier].astype(np.int64) for g in gens]))
        images = images[~seen[images]]
        seen[images] = True
        frontier = images
    return int(seen.sum())


# ---------------------------------------------------------------------------
# the general-problem suite: identities, lifts, solver, diameters

_TABLE_F0_PARAM_LEN = {  # plus 3k
    ("a", "a"): 5, ("b", "b"): 5, ("c", "c"): 5,
    ("a", "c"): 6, ("b", "a"): 6, ("c", "b"): 6,
    ("a", "b"): 7, ("b", "c"): 7, ("c", "a"): 7,
}
_TABLE_F_PARAM_LEN = {  # plus 6k
    ("a", "a"): 12, ("b", "b"): 12, ("c", "c"): 10,
    ("a", "c"): 14, ("b", "a"): 16, ("c", "b"): 14,
    ("a", "b"): 18, ("b", "c"): 16, ("c", "a"): 14,
}
_TABLE_BASE_LEN = {  # (syllable length, lift length)
    ("a", "c"): (3, 6), ("b", "a"): (3, 8), ("c", "b"): (3, 8),
    ("a", "b"): (4, 10), ("b", "c"): (4, 8), ("c", "a"): (4, 8),
}


def _lift_shape(word: MoveSeq, bottom: MoveSeq, depth: int) -> dict:
    """Decomposition facts claimed for every top-freezing lift."""
    dec = decompose(word)
    return {
        "root": dec.root.cycle_str(),
        "top-fixed": equal_on_level(dec.sections[2], MoveSeq.empty(), depth - 1),
        "bottom-acts": equal_on_level(dec.sections[0], bottom, depth - 1),
    }


_LIFT_SHAPE_OK = {"root": "()", "top-fixed": True, "bottom-acts": True}


def verify_gp(
    n_max: int = 8,
    samples: int = 1000,
    seed: int = DEFAULT_SEED,
    exhaustive_n_max: int = 3,
    depth: int = 12,
    table_k_max: int = 3,
    family_k_max: int = 4,
    small_diam_n_max: int = 8,
    exact_diam_n_max: int = 4,
) -> VerifyReport:
    """Identities behind the general upper bound, the solver, and diameters."""
    rec = _Recorder()
    rng = random.Random(seed)

    rec.check("gp/decompose/a", "(01) (1,1,a)", decompose(MoveSeq.parse("a")).pretty())
    rec.check("gp/decompose/b", "(02) (1,b,1)", decompose(MoveSeq.parse("b")).pretty())
    rec.check("gp/decompose/c", "(12) (c,1,1)", decompose(MoveSeq.parse("c")).pretty())
    rec.check(
        "gp/decompose/cab", "(01) (a,cb,1)", decompose(MoveSeq.parse("cab")).pretty()
    )

    for display, bottom in (
        ("cabcab", "cba"),
        ("bacacaba", "acb"),
        ("bcbcacac", "bac"),
    ):
        rec.check(
            f"gp/section/{display}",
            _LIFT_SHAPE_OK,
            lambda d=display, b=bottom: _lift_shape(
                MoveSeq.parse(d), MoveSeq.parse(b), depth
            ),
        )

    families = {
        "a": (lambda k: "bab" + "cba" * (2 * k + 2) + "bab",
              lambda k: "a" + "cab" * (k + 1) + "a"),
        "b": (lambda k: "abc" + "acb" * (2 * k + 2) + "cba",
              lambda k: "b" + "abc" * (k + 1) + "b"),
        "c": (lambda k: "cb" + "cba" * (2 * k + 2) + "bc",
              lambda k: "c" + "bca" * (k + 1) + "c"),
    }
    for name, (mk_f, mk_f0) in families.items():
        for k in range(family_k_max + 1):
            rec.check(
                f"gp/family/{name}/k={k}",
                _LIFT_SHAPE_OK,
                lambda f=mk_f(k), f0=mk_f0(k): _lift_shape(
                    MoveSeq.parse(f), MoveSeq.parse(f0), depth
                ),
            )

    for entry, exit in product("abc", repeat=2):
        shapes: list[int] = ([-1] if entry != exit else []) + list(range(table_k_max + 1))
        for k in shapes:
            display = solvers._canonical_syllable(entry, exit, k)
            for orient in ("neg", "pos"):
                word = MoveSeq.parse(display)
                if orient == "pos":
                    word = word.inverse()
                (syllable,) = solvers.factor_apollonian(word)
                lift = solvers.lift_syllable(syllable)
                tag = f"gp/table/{entry}{exit}-{orient}/k={k}"
                rec.check(
                    f"{tag}/section",
                    _LIFT_SHAPE_OK,
                    lambda lf=lift, w=word: _lift_shape(lf, w, depth),
                )
                if k < 0:
                    exp_f0, exp_f = _TABLE_BASE_LEN[(entry, exit)]
                else:
                    exp_f0 = _TABLE_F0_PARAM_LEN[(entry, exit)] + 3 * k
                    exp_f = _TABLE_F_PARAM_LEN[(entry, exit)] + 6 * k
                rec.check(
                    f"{tag}/length",
                    {"syllable": exp_f0, "lift": exp_f},
                    {"syllable": len(word), "lift": len(lift)},
                )
                rec.check(
                    f"{tag}/ratio",
                    "3*lift <= 8*syllable",
                    {"lift": len(lift), "syllable": len(word)},
                    ok=lambda got: 3 * got["lift"] <= 8 * got["syllable"],
                )

    for n in range(1, exhaustive_n_max + 1):
        rec.check(
            f"gp/solve/exhaustive/n={n}",
            {"pairs": (6 * 9 ** (n - 1)) ** 2, "violations": 0},
            lambda n=n: _exhaustive_solve_stats(n),
        )
    for n in range(exhaustive_n_max + 1, n_max + 1):
        rec.check(
            f"gp/solve/sampled/n={n:02d}",
            {"pairs": samples, "violations": 0},
            lambda n=n: _sampled_solve_stats(n, samples, rng),
        )

    rec.check("gp/diameter/n=1", 2, lambda: graphs.diameter(1, graphs.COUPLED, 0))
    rec.check("gp/diameter/n=2", 6, lambda: graphs.diameter(2, graphs.COUPLED, 0))
    for n in range(3, exact_diam_n_max + 1):
        low, high = 2 * 2**n, Fraction(11 * 2**n, 3)
        rec.check(
            f"gp/diameter-range/n={n}",
            f"{low} <= D <= {high}",
            lambda n=n: graphs.diameter(n, graphs.COUPLED, 0),
            ok=lambda got, low=low, high=high: low <= got <= high,
        )
    for n in range(1, small_diam_n_max + 1):
        rec.check(
            f"gp/near-diagonal/n={n:02d}",
            solvers.near_diagonal_diameter(n),
            lambda n=n: graphs.diameter(n, graphs.COUPLED, n - 1),
        )
    return rec.report(
        "gp",
        {
            "n_max": n_max,
            "samples": samples,
            "seed": seed,
            "exhaustive_n_max": exhaustive_n_max,
            "depth": depth,
            "table_k_max": table_k_max,
            "family_k_max": family_k_max,
            "small_diam_n_max": small_diam_n_max,
            "exact_diam_n_max": exact_diam_n_max,
        },
    )


def _basic_states(n: int) -> list[CoupledConfig]:
    words = ["".join(w) for w in product("012", repeat=n)]
    return [
        CoupledConfig.of(t, b) for t in words for b in words if t[0] != b[0]
    ]


def _solve_pair_ok(start: CoupledConfig, goal: CoupledConfig) -> bool:
    try:
        plan = solvers.solve_basic(start, goal)
    except TwinHanoiError:
        return False
    n = len(start)
    return (
        apply_seq_coupled(plan.total, start) == goal
        and 3 * len(plan.total) <= 11 * 2**n
    )


def _exhaustive_solve_stats(n: int) -> dict:
    states = _basic_states(n)
    bad = 0
    for goal in states:
        for start in states:
            if not _solve_pair_ok(start, goal):
                bad += 1
    return {"pairs": len(states) ** 2, "violations": bad}


def _random_basic(rng: random.Random, n: int) -> CoupledConfig:
    top = _random_word(rng, n)
    other = rng.choice([c for c in "012" if c != top[0]])
    return CoupledConfig.of(top, other + _random_word(rng, n - 1))


def _sampled_solve_stats(n: int, samples: int, rng: random.Random) -> dict:
    bad = 0
    for _ in range(samples):
        if not _solve_pair_ok(_random_basic(rng, n), _random_basic(rng, n)):
            bad += 1
    return {"pairs": samples, "violations": bad}


# ---------------------------------------------------------------------------

SUITES: dict[str, Callable[..., VerifyReport]] = {
    "classic": verify_classic,
    "tts": verify_tts,
    "sds": verify_sds,
    "structure": verify_structure,
    "gp": verify_gp,
}


def run_suite(name: str, **overrides: Any) -> VerifyReport:
    """Run one named suite, forwarding only parameters it accepts."""
    import inspect

    fn = SUITES[name]
    accepted = set(inspect.signature(fn).parameters)
    kwargs = {k: v for k, v in overrides.items() if k in accepted and v is not None}
    return fn(**kwargs)
