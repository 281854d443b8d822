"""Exhaustive deception-probability analysis of a built code instance.

Every quantity here is computed by complete enumeration over the
materialized sets, with incidence between rules taken as containment of the
rule subspaces.  Containment relations are precomputed once as bitmasks
(one integer per message or rule, one bit per rule index), which turns all
five probability searches and the pairwise message checks into popcounts.

Probabilities are exact fractions; a probability whose defining maximum
ranges over an empty set is reported as None with a reason, never as an
exception or a made-up value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .construction import CodeInstance
from .linalg import Subspace, rank_of, subset, subspace_intersect


@dataclass(frozen=True)
class IncidenceTables:
    """Containment bitmasks between messages, transmitter and receiver rules.

    er_by_message[i] has bit r set iff receiver rule r lies in message i;
    et_by_message[i] likewise for transmitter rules; er_by_et[t] holds the
    receiver rules inside transmitter rule t, and et_by_er is its transpose.
    """

    er_by_message: tuple[int, ...]
    et_by_message: tuple[int, ...]
    er_by_et: tuple[int, ...]
    et_by_er: tuple[int, ...]
    source_index_by_message: tuple[int, ...]

    @classmethod
    def build(cls, code: CodeInstance) -> "IncidenceTables":
        gf = code.params.field
        er = code.receiver_rules
        et = code.transmitter_rules
        msgs = code.messages

        er_by_message = tuple(
            sum(1 << r for r, rule in enumerate(er) if subset(gf, rule, m)) for m in msgs
        )
        et_by_message = tuple(
            sum(1 << t for t, rule in enumerate(et) if subset(gf, rule, m)) for m in msgs
        )
        er_by_et = tuple(
            sum(1 << r for r, rule in enumerate(er) if subset(gf, rule, trans))
            for trans in et
        )
        et_by_er = tuple(
            sum(1 << t for t in range(len(et)) if er_by_et[t] >> r & 1)
            for r in range(len(er))
        )
        source_index = {src: i for i, src in enumerate(code.sources)}
        source_index_by_message = tuple(source_index[code.source_of(m)] for m in msgs)
        return cls(
            er_by_message=er_by_message,
            et_by_message=et_by_message,
            er_by_et=er_by_et,
            et_by_er=et_by_er,
            source_index_by_message=source_index_by_message,
        )


@dataclass(frozen=True)
class DeceptionCheck:
    """One deception probability with its closed-form prediction."""

    value: Fraction | None
    expected: Fraction
    reason: str | None
    witness: dict | None

    @property
    def match(self) -> bool | None:
        """Exact rational equality; None when the maximum had empty range."""
        if self.value is None:
            return None
        return self.value == self.expected


@dataclass(frozen=True)
class AttackReport:
    """The five deception probabilities, keyed pI, pS, pT, pR0, pR1."""

    checks: dict[str, DeceptionCheck]

    @property
    def ok(self) -> bool:
        """True when no computed probability contradicts its prediction."""
        return all(c.match is not False for c in self.checks.values())


def _mask_bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _basis(sub: Subspace) -> list[list[int]]:
    return [list(row) for row in sub.basis]


def attack_probabilities(code: CodeInstance, tables: IncidenceTables | None = None) -> AttackReport:
    """Maximize each of the five deception success ratios exhaustively.

    Witnesses are the first maximizers in canonical enumeration order.  The
    outer maxima run over the full materialized sets; denominators are the
    rule counts incident with the attacker's observation.
    """
    t = tables if tables is not None else IncidenceTables.build(code)
    p = code.params
    q = p.field.q
    msgs = code.messages
    ets = code.transmitter_rules
    ers = code.receiver_rules
    n_er = len(ers)
    erM = t.er_by_message
    etM = t.et_by_message
    erT = t.er_by_et
    etR = t.et_by_er

    expected = {
        "pI": Fraction(1, q ** (2 * (p.nu - p.s))),
        "pS": Fraction(1, q),
        "pT": Fraction(1, q),
        "pR0": Fraction(1, q ** (2 * (p.nu - p.s))),
        "pR1": Fraction(1, q),
    }
    checks: dict[str, DeceptionCheck] = {}

    def emit(key, best, reason_if_none, witness):
        if best is None:
            checks[key] = DeceptionCheck(None, expected[key], reason_if_none, None)
        else:
            checks[key] = DeceptionCheck(best, expected[key], None, witness)

    # Opponent impersonation: place one message, hope the receiver accepts.
    best = None
    witness = None
    for i, m in enumerate(msgs):
        frac = Fraction(erM[i].bit_count(), n_er)
        if best is None or frac > best:
            best, witness = frac, {
                "message": _basis(m),
                "count": erM[i].bit_count(),
                "of": n_er,
            }
    emit("pI", best, "the message set is empty", witness)

    # Opponent substitution: saw m, replaces it with a different m'.
    best = None
    witness = None
    for i in range(len(msgs)):
        denom = erM[i].bit_count()
        for j in range(len(msgs)):
            if j == i:
                continue
            frac = Fraction((erM[i] & erM[j]).bit_count(), denom)
            if best is None or frac > best:
                best, witness = frac, {
                    "message": _basis(msgs[i]),
                    "substitute": _basis(msgs[j]),
                    "count": (erM[i] & erM[j]).bit_count(),
                    "of": denom,
                }
    emit("pS", best, "fewer than two messages; no substitution is possible", witness)

    # Transmitter impersonation: sends a message its own rule cannot produce.
    best = None
    witness = None
    for ti, trans in enumerate(ets):
        denom = erT[ti].bit_count()
        for i in range(len(msgs)):
            if etM[i] >> ti & 1:
                continue  # rule lies inside the message, not a deception
            frac = Fraction((erT[ti] & erM[i]).bit_count(), denom)
            if best is None or frac > best:
                best, witness = frac, {
                    "transmitterRule": _basis(trans),
                    "message": _basis(msgs[i]),
                    "count": (erT[ti] & erM[i]).bit_count(),
                    "of": denom,
                }
    emit("pT", best, "every transmitter rule lies in every message", witness)

    # Receiver impersonation: claims to have received some message.
    best = None
    witness = None
    for r in range(n_er):
        denom = etR[r].bit_count()
        for i in range(len(msgs)):
            frac = Fraction((etM[i] & etR[r]).bit_count(), denom)
            if best is None or frac > best:
                best, witness = frac, {
                    "receiverRule": _basis(ers[r]),
                    "message": _basis(msgs[i]),
                    "count": (etM[i] & etR[r]).bit_count(),
                    "of": denom,
                }
    emit("pR0", best, "the message set is empty", witness)

    # Receiver substitution: received m, claims a different m'.
    best = None
    witness = None
    for r in range(n_er):
        through_r = etR[r]
        for i in range(len(msgs)):
            denom_mask = etM[i] & through_r
            denom = denom_mask.bit_count()
            if denom == 0:
                continue
            for j in range(len(msgs)):
                if j == i:
                    continue
                frac = Fraction((denom_mask & etM[j]).bit_count(), denom)
                if best is None or frac > best:
                    best, witness = frac, {
                        "receiverRule": _basis(ers[r]),
                        "message": _basis(msgs[i]),
                        "substitute": _basis(msgs[j]),
                        "count": (denom_mask & etM[j]).bit_count(),
                        "of": denom,
                    }
    emit(
        "pR1",
        best,
        "no receiver rule sits inside two distinct messages through a "
        "transmitter rule",
        witness,
    )

    return AttackReport(checks=checks)


@dataclass(frozen=True)
class CountCheck:
    """A per-object count that the closed form predicts to be constant."""

    expected: int
    minimum: int | None
    maximum: int | None
    domain: int
    histogram: dict[int, int] | None

    @property
    def ok(self) -> bool:
        if self.domain == 0:
            return True
        return self.minimum == self.maximum == self.expected


def _count_check(counts: list[int], expected: int) -> CountCheck:
    if not counts:
        return CountCheck(expected, None, None, 0, None)
    lo, hi = min(counts), max(counts)
    hist = None
    if not (lo == hi == expected):
        hist = {}
        for c in counts:
            hist[c] = hist.get(c, 0) + 1
        hist = dict(sorted(hist.items()))
    return CountCheck(expected, lo, hi, len(counts), hist)


@dataclass(frozen=True)
class IncidenceReport:
    """Uniformity of the five containment counts across their domains.

    et_per_message and er_per_message are the rules inside one message;
    er_per_et and et_per_er relate the two rule sets; et_between counts the
    transmitter rules squeezed between a receiver rule and a message
    containing it.
    """

    et_per_message: CountCheck
    er_per_message: CountCheck
    er_per_et: CountCheck
    et_per_er: CountCheck
    et_between: CountCheck

    @property
    def ok(self) -> bool:
        return all(
            c.ok
            for c in (
                self.et_per_message,
                self.er_per_message,
                self.er_per_et,
                self.et_per_er,
                self.et_between,
            )
        )


def verify_incidence_counts(
    code: CodeInstance, tables: IncidenceTables | None = None
) -> IncidenceReport:
    """Measure all five counts exhaustively and compare with the formulas."""
    t = tables if tables is not None else IncidenceTables.build(code)
    p = code.params
    q = p.field.q
    n_msgs = len(code.messages)

    between = []
    for i in range(n_msgs):
        for r in _mask_bits(t.er_by_message[i]):
            between.append((t.et_by_message[i] & t.et_by_er[r]).bit_count())

    return IncidenceReport(
        et_per_message=_count_check(
            [m.bit_count() for m in t.et_by_message], q ** (4 * (p.s - 1))
        ),
        er_per_message=_count_check(
            [m.bit_count() for m in t.er_by_message], q ** (2 * p.s)
        ),
        er_per_et=_count_check([m.bit_count() for m in t.er_by_et], q**2),
        et_per_er=_count_check([m.bit_count() for m in t.et_by_er], q ** (2 * (p.nu - 1))),
        et_between=_count_check(between, q ** (2 * (p.s - 1))),
    )


@dataclass(frozen=True)
class PairReport:
    """Structure of message pairs sharing at least one transmitter rule.

    For each such pair, k is the dimension of the intersection of their
    source states; the message intersection then has dimension k+2, contains
    q^k receiver rules, and holds q^(k-2) transmitter rules over each of
    them.  k must stay within [2, 2s-1].
    """

    qualifying: int
    checked: int
    k_histogram: dict[int, int]
    violations: tuple[str, ...]
    reason: str | None

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_shared_rule_pairs(
    code: CodeInstance,
    pairs: int | None = None,
    tables: IncidenceTables | None = None,
) -> PairReport:
    """Check every (or a seeded sample of) qualifying message pair.

    pairs=None checks all of them; an integer caps the number checked, drawn
    deterministically (seed 0) so equal runs produce equal reports.
    """
    t = tables if tables is not None else IncidenceTables.build(code)
    gf = code.params.field
    q = gf.q
    s = code.params.s
    msgs = code.messages
    n = len(msgs)

    qualifying = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if t.et_by_message[i] & t.et_by_message[j]
    ]
    if not qualifying:
        return PairReport(0, 0, {}, (), "no two messages share a transmitter rule")

    selected = qualifying
    if pairs is not None and pairs < len(qualifying):
        selected = sorted(random.Random(0).sample(qualifying, pairs))

    source_meet_dim: dict[tuple[int, int], int] = {}
    violations: list[str] = []
    k_hist: dict[int, int] = {}
    for i, j in selected:
        si, sj = t.source_index_by_message[i], t.source_index_by_message[j]
        key = (min(si, sj), max(si, sj))
        k = source_meet_dim.get(key)
        if k is None:
            meet = subspace_intersect(gf, code.sources[key[0]], code.sources[key[1]])
            k = source_meet_dim[key] = meet.dim
        k_hist[k] = k_hist.get(k, 0) + 1

        label = f"pair ({i},{j})"
        if not 2 <= k <= 2 * s - 1:
            violations.append(f"{label}: source meet dimension {k} outside [2, {2 * s - 1}]")
            continue
        stacked_rank = rank_of(gf, msgs[i].basis + msgs[j].basis)
        meet_dim = msgs[i].dim + msgs[j].dim - stacked_rank
        if meet_dim != k + 2:
            violations.append(f"{label}: message meet dimension {meet_dim} != {k + 2}")
        er_common = t.er_by_message[i] & t.er_by_message[j]
        if er_common.bit_count() != q**k:
            violations.append(
                f"{label}: {er_common.bit_count()} receiver rules in the meet, expected {q**k}"
            )
        et_common = t.et_by_message[i] & t.et_by_message[j]
        want = q ** (k - 2)
        for r in _mask_bits(er_common):
            got = (et_common & t.et_by_er[r]).bit_count()
            if got != want:
                violations.append(
                    f"{label}: {got} transmitter rules over receiver rule {r}, expected {want}"
                )
    return PairReport(
        qualifying=len(qualifying),
        checked=len(selected),
        k_histogram=dict(sorted(k_hist.items())),
        violations=tuple(violations),
        reason=None,
    )


@dataclass(frozen=True)
class SizeCheck:
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class SizeReport:
    """Enumerated set sizes against the closed-form parameter formulas."""

    sources: SizeCheck
    transmitter_rules: SizeCheck
    receiver_rules: SizeCheck
    messages: SizeCheck
    n1: int
    n2: int
    n3: int

    @property
    def ok(self) -> bool:
        return all(c.ok for c in (self.sources, self.transmitter_rules, self.receiver_rules, self.messages))


def verify_parameters(code: CodeInstance) -> SizeReport:
    """Compare the four enumerated cardinalities with their formulas.

    The source count is n1*n2/n3, a ratio of three symplectic subspace
    counts evaluated through the oracle-gated closed form; the others are
    plain powers of q.
    """
    from .enumeration import symplectic_anzahl

    p = code.params
    q = p.field.q
    n1 = symplectic_anzahl(2 * p.s - 2, p.s - 1, 2 * p.nu - 2, p.field)
    n2 = symplectic_anzahl(p.m0 - 2 * p.s, p.s0 - p.s + 1, 2 * (p.nu - p.s), p.field)
    n3 = symplectic_anzahl(p.m0 - 2, p.s0, 2 * p.nu - 2, p.field)
    if n3 == 0 or (n1 * n2) % n3 != 0:
        raise AssertionError(f"inconsistent source-count formula: {n1}*{n2}/{n3}")
    expected_sources = n1 * n2 // n3
    return SizeReport(
        sources=SizeCheck(expected_sources, len(code.sources)),
        transmitter_rules=SizeCheck(q ** (4 * (p.nu - 1)), len(code.transmitter_rules)),
        receiver_rules=SizeCheck(q ** (2 * p.nu), len(code.receiver_rules)),
        messages=SizeCheck(q ** (4 * (p.nu - p.s)) * expected_sources, len(code.messages)),
        n1=n1,
        n2=n2,
        n3=n3,
    )
