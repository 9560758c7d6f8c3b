"""Verification suites binding the identities across modules.

Each suite runs a list of named checks at a given length n and returns a
report; a failing check carries a minimal witness.  The CLI `verify`
subcommand maps suite names to these functions and exits nonzero when any
check fails.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Sequence

from . import cipher as cipher_mod
from . import csp, genfunc
from .foata import (
    equidist_check,
    foata_inverse,
    foata_preserves_class,
)
from .foata import foata as foata_transform
from .core import park
from .enumeration import census, fubini, gen_ipf, gen_parking_functions, gen_surjections
from .classify import (
    block_structure,
    fiber_preimage,
    marker_sets,
    unit_projection,
    upf_from_surjection,
    upf_involution,
    spots_from_surjection,
)
from .errors import InvolutionFixedPoint
from .poly import QTPoly, gaussian_multinomial, multinomial
from .stats import inv_count, maj


@dataclass(frozen=True)
class Check:
    check_id: str
    passed: bool
    witness: object = None


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check_id: str, passed: bool, witness: object = None) -> None:
        self.checks.append(Check(check_id, passed, witness if not passed else None))

    def add_info(self, check_id: str, payload: object) -> None:
        self.checks.append(Check(check_id, True, payload))

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
            "checks": [
                {"id": c.check_id, "status": "pass" if c.passed else "fail", "witness": _plain(c.witness)}
                for c in self.checks
            ],
        }


def _plain(value):
    if isinstance(value, tuple):
        return list(value)
    return value


def _timed(fn: Callable[[VerificationReport], None], suite: str, params: dict) -> VerificationReport:
    report = VerificationReport(suite=suite, params=params)
    start = time.perf_counter()
    fn(report)
    report.wall_time = time.perf_counter() - start
    return report


# -- genfunc suite ---------------------------------------------------------------


def suite_genfunc(n: int) -> VerificationReport:
    return _timed(lambda r: _genfunc_checks(n, r), "genfunc", {"n": n})


def _genfunc_checks(n: int, report: VerificationReport) -> None:
    for ell in range(n):
        formula = genfunc.phi(n, ell)
        brute = genfunc.class_polynomial(n, ell, "car_inv")
        report.add(f"phi-matches-enumeration[ell={ell}]", formula == brute)
    report.add("unit-formula-equals-phi1", genfunc.phi_upf(n) == genfunc.phi(n, 1) if n >= 2 else True)
    if n >= 3:
        report.add(
            "two-interval-formula",
            genfunc.phi_two(n) == genfunc.class_polynomial(n, 2, "word_inv"),
        )
    if n >= 2:
        report.add(
            "n-minus-two-formula",
            genfunc.phi_n_minus_two(n)
            == genfunc.class_polynomial(n, n - 2, "word_inv"),
        )
    for ell in sorted({1, 2, n - 2} & set(range(1, n))):
        report.add(
            f"maj-variant[ell={ell}]",
            genfunc.maj_variant(n, ell) == genfunc.class_polynomial(n, ell, "word_maj"),
        )
    report.add(
        "parking-count",
        genfunc.phi(n, n - 1).evaluate(1, 1) == (n + 1) ** (n - 1),
    )
    fub = fubini(n)
    by_ascents = sum(
        2 ** sum(1 for i in range(n - 1) if s[i] < s[i + 1])
        for s in itertools.permutations(range(1, n + 1))
    )
    report.add(
        "fubini-count",
        genfunc.phi_upf(n).evaluate(1, 1) == fub == by_ascents,
        {"fubini": fub, "by_ascents": by_ascents},
    )
    report.add(
        "stirling-spectrum",
        genfunc.phi_upf(n).subs_t(1) == genfunc.displacement_spectrum(n),
    )
    if n >= 2:
        lah = genfunc.lah_count(n)
        brute_lah = sum(
            1 for s in gen_surjections(n) if n - max(s) == 1
        )
        report.add(
            "lah-count",
            lah == brute_lah == (n - 1) * factorial(n) // 2,
            {"formula": lah, "brute": brute_lah},
        )
    report.add(
        "signed-displacement-sum",
        genfunc.phi_upf(n).subs_q(-1) == QTPoly.monomial(0, n * (n - 1) // 2),
    )
    for ell in sorted({0, 1, 2, n - 2, n - 1} & set(range(n))):
        rep = equidist_check(n, ell)
        report.add(f"inv-maj-equidistributed[ell={ell}]", rep.equal, rep.witness)


# -- csp suite ---------------------------------------------------------------------


def suite_csp(n: int) -> VerificationReport:
    return _timed(lambda r: _csp_checks(n, r), "csp", {"n": n})


def _csp_checks(n: int, report: VerificationReport) -> None:
    for orbit in csp.csp_verify(n):
        witness = None
        if not orbit.ok:
            witness = {
                "k": orbit.k,
                "fixed": list(orbit.fixed_counts),
                "evaluations": list(orbit.evaluations),
                "exact": list(orbit.exact_evaluations),
                "max_residual": max(orbit.residuals),
            }
        report.add(f"sieving[k={orbit.k}]", orbit.ok, witness)
    at_omega, want_omega, at_minus_one, want_minus_one = csp.root_of_unity_identities(n)
    report.add("primitive-root-evaluation", at_omega == want_omega, str(at_omega))
    if at_minus_one is not None:
        report.add("half-length-evaluation", at_minus_one == want_minus_one, str(at_minus_one))
    ok = True
    witness = None
    for m in range(1, n + 1):
        for sizes in csp._compositions(n, m):
            orbit_poly = _orbit_inversion_poly(sizes)
            if orbit_poly != gaussian_multinomial(sizes):
                ok = False
                witness = list(sizes)
                break
        if not ok:
            break
    report.add("orbit-inversion-multinomial", ok, witness)


def _orbit_inversion_poly(sizes: Sequence[int]) -> QTPoly:
    """Inversion enumerator of all rearrangements of the sorted block index
    word with the given block sizes."""
    sorted_word = tuple(j for j, size in enumerate(sizes, start=1) for _ in range(size))
    terms: dict[tuple[int, int], int] = {}
    for word in set(itertools.permutations(sorted_word)):
        key = (0, inv_count(word))
        terms[key] = terms.get(key, 0) + 1
    return QTPoly(terms)


# -- foata suite -------------------------------------------------------------------


def suite_foata(n: int) -> VerificationReport:
    return _timed(lambda r: _foata_checks(n, r), "foata", {"n": n})


def _foata_checks(n: int, report: VerificationReport) -> None:
    transport_ok = True
    roundtrip_ok = True
    witness_t = witness_r = None
    for prefs in gen_parking_functions(n):
        image = foata_transform(prefs)
        if inv_count(image) != maj(prefs) or sorted(image) != sorted(prefs):
            transport_ok = False
            witness_t = prefs
            break
        if foata_inverse(image) != prefs or foata_transform(foata_inverse(prefs)) != prefs:
            roundtrip_ok = False
            witness_r = prefs
            break
    report.add("inv-of-image-is-maj", transport_ok, witness_t)
    report.add("inverse-roundtrip", roundtrip_ok, witness_r)
    preserved_ells = sorted({0, 1, 2, n - 2, n - 1} & set(range(n)))
    for ell in preserved_ells:
        res = foata_preserves_class(n, ell)
        report.add(f"class-preserved[ell={ell}]", res.preserved, res.witness)
    for ell in range(3, n - 2):
        res = foata_preserves_class(n, ell)
        rep = equidist_check(n, ell)
        report.add(
            f"class-broken[ell={ell}]",
            (not res.preserved) and (not rep.equal),
            {"preserved": res.preserved, "equidistributed": rep.equal},
        )
    markers_ok = True
    witness_m = None
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        image = foata_transform(word)
        before = marker_sets(word)
        after = marker_sets(image)
        if (
            len(before.r_positions) != len(after.r_positions)
            or len(before.s_positions) != len(after.s_positions)
            or before.r_values != after.r_values
        ):
            markers_ok = False
            witness_m = word
            break
    report.add("marker-sets-preserved", markers_ok, witness_m)


# -- cipher suite ------------------------------------------------------------------


def suite_cipher(n: int) -> VerificationReport:
    return _timed(lambda r: _cipher_checks(n, r), "cipher", {"n": n})


def _cipher_checks(n: int, report: VerificationReport) -> None:
    roundtrip_ok = True
    code_ok = True
    witness_r = witness_c = None
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        encoded = cipher_mod.cipher_of(word)
        if (
            cipher_mod.upf_of_cipher(encoded) != word
            or encoded.k != inv_count(word)
            or encoded.m != max(s_word)
        ):
            roundtrip_ok = False
            witness_r = word
            break
        spots = spots_from_surjection(s_word)
        if encoded.code() != cipher_mod.perm_to_lehmer(spots):
            code_ok = False
            witness_c = word
            break
    report.add("cipher-roundtrip", roundtrip_ok, witness_r)
    report.add("underlying-code-is-spot-lehmer", code_ok, witness_c)
    golden = [
        ("0 0|1 1 0|3 1 1", (1, 3, 6, 3, 1, 6, 7, 4)),
        ("0 0|1|1 0|3|1 1", (1, 3, 6, 4, 1, 7, 7, 4)),
    ]
    golden_ok = all(
        cipher_mod.upf_of_cipher(cipher_mod.Cipher.from_text(text)) == word
        and cipher_mod.cipher_of(word).to_text() == text
        for text, word in golden
    )
    report.add("golden-examples", golden_ok)
    distribution = cipher_mod.upf_inv_distribution(n)
    report.add(
        "distribution-total-is-fubini",
        sum(distribution.values()) == fubini(n),
        {"total": sum(distribution.values()), "fubini": fubini(n)},
    )
    for k in (1, 2, 3):
        if n >= k + 1 and k <= n * (n - 1) // 2:
            closed = cipher_mod.upf_inv_count(n, k, method="closed")
            brute = distribution.get(k, 0)
            report.add(f"closed-form[k={k}]", closed == brute, {"closed": closed, "brute": brute})
    bars_ok = all(
        cipher_mod.bar_insertion_count(n, k) == distribution.get(k, 0)
        for k in range(n * (n - 1) // 2 + 1)
    )
    report.add("bar-insertion-identity", bars_ok)
    tables = cipher_mod.ufr_boolean_tables(n)
    report.add("unit-fubini-tables-equal", tables.equal)
    fib_ok = True
    witness_f = None
    for sigma in itertools.permutations(range(1, n + 1)):
        expected = QTPoly.const(1)
        for run in cipher_mod.ascending_run_lengths(sigma):
            expected = expected * cipher_mod.fib_poly(run)
        if cipher_mod.boolean_rank_poly(sigma) != expected:
            fib_ok = False
            witness_f = sigma
            break
    report.add("fibonacci-rank-polynomials", fib_ok, witness_f)


# -- classify suite ----------------------------------------------------------------


def suite_classify(n: int) -> VerificationReport:
    return _timed(lambda r: _classify_checks(n, r), "classify", {"n": n})


def _interval_blocks(n: int):
    """Partitions of positions 1..n into consecutive intervals."""
    for cuts in range(n):
        for positions in itertools.combinations(range(1, n), cuts):
            bounds = (0, *positions, n)
            yield [list(range(bounds[i], bounds[i + 1])) for i in range(len(bounds) - 1)]


def _classify_checks(n: int, report: VerificationReport) -> None:
    rearrange_ok = True
    witness_r = None
    for prefs in gen_parking_functions(n):
        base = park(prefs).spot_perm
        for blocks in _interval_blocks(n):
            for perms in itertools.product(*[itertools.permutations(b) for b in blocks]):
                order = [i for group in perms for i in group]
                shuffled = tuple(prefs[i] for i in order)
                spots = park(shuffled).spot_perm
                pos_of = {i: p for p, i in enumerate(order)}
                for block, group in zip(blocks, perms):
                    if sorted(spots[pos_of[i]] for i in group) != sorted(
                        base[i] for i in block
                    ):
                        rearrange_ok = False
                        witness_r = {"word": prefs, "order": order}
                        break
                if not rearrange_ok:
                    break
            if not rearrange_ok:
                break
        if not rearrange_ok:
            break
    report.add("interval-rearrangement", rearrange_ok, witness_r)

    # hypothesis on the moved car C_k: its spot can only improve when cycled
    # forward, and if it is unchanged every spot is unchanged
    reserved_ok = True
    witness_s = None
    for prefs in gen_parking_functions(n):
        base = park(prefs).spot_perm
        for j in range(1, n):
            for k in range(j + 1, n + 1):
                order = list(range(j - 1)) + [k - 1] + list(range(j - 1, k - 1)) + list(range(k, n))
                cycled = tuple(prefs[i] for i in order)
                spots = park(cycled).spot_perm
                by_car = [0] * n
                for pos, i in enumerate(order):
                    by_car[i] = spots[pos]
                moved_improves = by_car[k - 1] <= base[k - 1]
                rigid = by_car[k - 1] != base[k - 1] or tuple(by_car) == base
                if not (moved_improves and rigid):
                    reserved_ok = False
                    witness_s = {"word": prefs, "j": j, "k": k}
                    break
            if not reserved_ok:
                break
        if not reserved_ok:
            break
    report.add("reserved-spot", reserved_ok, witness_s)

    sorting_ok = True
    witness_o = None
    for prefs in gen_parking_functions(n):
        this_max = park(prefs).max_disp
        for i in range(n - 1):
            if prefs[i] > prefs[i + 1]:
                swapped = prefs[:i] + (prefs[i + 1], prefs[i]) + prefs[i + 2 :]
                if park(swapped).max_disp > this_max:
                    sorting_ok = False
                    witness_o = {"word": prefs, "position": i + 1}
                    break
        if park(tuple(sorted(prefs))).max_disp > this_max:
            sorting_ok = False
            witness_o = witness_o or {"word": prefs, "position": "sorted"}
        if not sorting_ok:
            break
    report.add("sorting-monotonicity", sorting_ok, witness_o)

    fiber_ok = True
    witness_g = None
    preimages: dict[tuple, set] = {}
    if n >= 3:
        for prefs in gen_ipf(n, 2):
            preimages.setdefault(unit_projection(prefs), set()).add(prefs)
    else:
        for prefs in gen_ipf(n, n - 1):
            if park(prefs).max_disp <= 2:
                preimages.setdefault(unit_projection(prefs), set()).add(prefs)
    for s_word in gen_surjections(n):
        beta = upf_from_surjection(s_word)
        markers = marker_sets(beta)
        beta_out = park(beta)
        generated = set()
        for r_size in range(len(markers.r_positions) + 1):
            for r_sub in itertools.combinations(sorted(markers.r_positions), r_size):
                for s_size in range(len(markers.s_positions) + 1):
                    for s_sub in itertools.combinations(sorted(markers.s_positions), s_size):
                        alpha = fiber_preimage(beta, set(r_sub), set(s_sub))
                        alpha_out = park(alpha)
                        if (
                            unit_projection(alpha) != beta
                            or alpha_out.spot_perm != beta_out.spot_perm
                            or alpha_out.total_disp
                            != beta_out.total_disp + len(r_sub) + len(s_sub)
                            or inv_count(alpha) != inv_count(beta) + len(r_sub)
                        ):
                            fiber_ok = False
                            witness_g = {"beta": beta, "r": list(r_sub), "s": list(s_sub)}
                        generated.add(alpha)
        if generated != preimages.get(beta, set()):
            fiber_ok = False
            witness_g = witness_g or {"beta": beta}
        if not fiber_ok:
            break
    report.add("unit-projection-fibers", fiber_ok, witness_g)

    involution_ok = True
    witness_i = None
    signed = QTPoly()
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        disp = park(word).total_disp
        signed = signed + QTPoly.monomial(0, inv_count(word)) * ((-1) ** disp)
        if word == tuple(range(n, 0, -1)):
            try:
                upf_involution(word)
                involution_ok = False
                witness_i = {"word": word, "reason": "defined at decreasing permutation"}
            except InvolutionFixedPoint:
                pass
            continue
        image = upf_involution(word)
        image_disp = park(image).total_disp
        if (
            image == word
            or upf_involution(image) != word
            or abs(image_disp - disp) != 1
            or inv_count(image) != inv_count(word)
        ):
            involution_ok = False
            witness_i = {"word": word, "image": image}
            break
    expected_signed = QTPoly.monomial(0, n * (n - 1) // 2)
    report.add("displacement-involution", involution_ok, witness_i)
    report.add("signed-sum-collapses", signed == expected_signed, str(signed))

    fiber_count_ok = True
    witness_b = None
    by_sorted: dict[tuple, int] = {}
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        key = tuple(sorted(word))
        by_sorted[key] = by_sorted.get(key, 0) + 1
    for key, count in by_sorted.items():
        sizes = block_structure(key).block_sizes
        if count != multinomial(sizes):
            fiber_count_ok = False
            witness_b = {"sorted_word": key, "count": count}
            break
    report.add("shuffle-fiber-count", fiber_count_ok, witness_b)

    union_ok = True
    witness_u = None
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        markers = marker_sets(word)
        occupied = [False] * (n + 2)
        crowded = set()
        for i, a in enumerate(word, start=1):
            if a >= 2 and occupied[a - 1] and occupied[a]:
                crowded.add(i)
            spot = a
            while occupied[spot]:
                spot += 1
            occupied[spot] = True
        if markers.r_positions | markers.s_positions != crowded:
            union_ok = False
            witness_u = word
            break
    report.add("marker-union-characterization", union_ok, witness_u)


# -- conjectures suite ---------------------------------------------------------------


def suite_conjectures(n: int) -> VerificationReport:
    return _timed(lambda r: _conjecture_checks(n, r), "conjectures", {"n": n})


def spot_transform_violations(n: int) -> tuple[int, tuple | None]:
    """Count unit interval parking functions where the transform of the spot
    permutation differs from the spot permutation of the transform."""
    violations = 0
    witness = None
    for s_word in gen_surjections(n):
        word = upf_from_surjection(s_word)
        spots = spots_from_surjection(s_word)
        image = foata_transform(word)
        if park(image).spot_perm != foata_transform(spots):
            violations += 1
            if witness is None:
                witness = word
    return violations, witness


def _conjecture_checks(n: int, report: VerificationReport) -> None:
    violations, witness = spot_transform_violations(n)
    report.add("spot-transform-commutes", violations == 0, witness)
    report.add_info("growth-ratios", cipher_mod.growth_ratio_table(min(n, 10), 4))
    for m in range(1, n + 1):
        row = census(m)
        report.add(
            f"census-unimodal[n={m}]",
            row.is_unimodal(),
            {"counts": list(row.counts_by_maxdisp)},
        )


SUITES: dict[str, Callable[[int], VerificationReport]] = {
    "genfunc": suite_genfunc,
    "csp": suite_csp,
    "foata": suite_foata,
    "cipher": suite_cipher,
    "classify": suite_classify,
    "conjectures": suite_conjectures,
}
