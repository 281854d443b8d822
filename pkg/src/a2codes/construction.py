"""Authentication codes with arbitration built from typed subspaces.

Ambient space is the pseudo-symplectic F_q^(2v+2).  A fixed anchor plane
<v0, e_{2v+1}> of type (2,0,0,1) and a fixed subspace P0 of type
(m0, 2s0, s0, 1) squeezed between the anchor and its perp determine the
four sets of the code:

  sources            subspaces of type (2s, 2(s-1), s-1, 1) between anchor and P0
  transmitter rules  subspaces of type (4,4,1,1) meeting P0 exactly in the anchor
  receiver rules     all subspaces of type (2,2,0,1) of the ambient space
  messages           sums source + rule, of type (2s+2, 2s+2, s, 1)

Encoding is the subspace sum; decoding intersects the message with P0 when
the receiver rule lies inside the message and rejects otherwise.  All four
sets are materialized exhaustively in canonical order, so instances are
byte-stable across runs and exact counting against the closed-form sizes is
meaningful.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dataclass_field
from typing import Iterator

from .field import GF2e
from .geometry import PsSpace, SubspaceType, build_space, classify, perp
from .linalg import (
    Subspace,
    Vector,
    full_subspace,
    span,
    subset,
    subspace_intersect,
    subspace_sum,
    unit_vector,
    zero_subspace,
)
from .enumeration import subspaces_between, subspaces_typed


@dataclass(frozen=True)
class CodeParams:
    """Construction parameters: field, v, source index s, and the shape
    (m0, s0) of the fixed subspace P0."""

    field: GF2e
    nu: int
    s: int
    m0: int
    s0: int


def validate_params(params: CodeParams) -> list[str]:
    """Diagnostics for every violated constraint; empty means buildable.

    Beyond the stated inequalities, two derived bounds are enforced because
    violating either leaves no valid P0: the anchor sits inside the radical
    of P0's restricted form, which costs two dimensions on top of 2*s0, and
    P0 must fit inside the 2v-dimensional perp of the anchor.
    """
    p = params
    out = []
    if p.nu < 1:
        out.append(f"nu must be >= 1, got {p.nu}")
    if p.s < 1:
        out.append(f"s must be >= 1, got {p.s}")
    if p.s0 < 0:
        out.append(f"s0 must be >= 0, got {p.s0}")
    if p.s - 1 > p.s0:
        out.append(f"constraint s-1 <= s0 violated: s-1 = {p.s - 1} > s0 = {p.s0}")
    if p.s0 > p.nu:
        out.append(f"constraint s0 <= nu violated: s0 = {p.s0} > nu = {p.nu}")
    if 2 * p.s > p.m0:
        out.append(f"constraint 2s <= m0 violated: 2s = {2 * p.s} > m0 = {p.m0}")
    if 2 * p.s0 > p.m0:
        out.append(f"constraint 2s0 <= m0 violated: 2s0 = {2 * p.s0} > m0 = {p.m0}")
    if out:
        return out
    if p.m0 < 2 * p.s0 + 2:
        out.append(
            f"derived feasibility m0 >= 2s0+2 violated (m0 = {p.m0}, s0 = {p.s0}); "
            "the source-state set would be empty"
        )
    if p.m0 > 2 * p.nu:
        out.append(
            f"derived feasibility m0 <= 2*nu violated (m0 = {p.m0}, nu = {p.nu}); "
            "P0 cannot fit inside the perp of the anchor"
        )
    return out


def parameter_notes(params: CodeParams) -> list[str]:
    """Non-fatal observations about accepted parameter choices."""
    notes = []
    if params.s == 1:
        notes.append(
            "s = 1 is degenerate: there is a single source state and the "
            "substitution attacks range over empty sets"
        )
    if params.nu == params.s:
        notes.append(
            "nu = s makes the impersonation probabilities equal 1; the code "
            "offers no protection against those attacks"
        )
    return notes


def canonical_frame(params: CodeParams) -> tuple[Vector, Subspace, Subspace]:
    """The fixed frame (v0, anchor, P0) every instance is built in.

    v0 = e_1 and anchor = <e_1, e_{2v+1}>.  P0 extends the anchor by s-1
    hyperbolic pairs (e_i, e_{v+i}), then s0-s+1 further pairs, then
    isotropic filler coordinates until it has m0 rows.  Any other admissible
    frame is carried to this one by a form-preserving transform.
    """
    problems = validate_params(params)
    if problems:
        raise ValueError("; ".join(problems))
    nu, s, m0, s0 = params.nu, params.s, params.m0, params.s0
    n = 2 * nu + 2
    gf = params.field

    def e(i: int) -> Vector:
        # 1-indexed, matching the e_{2v+1} convention
        return unit_vector(n, i - 1)

    v0 = e(1)
    anchor = span(gf, n, [v0, e(2 * nu + 1)])

    rows = [v0, e(2 * nu + 1)]
    for i in range(2, s + 1):
        rows.append(e(i))
        rows.append(e(nu + i))
    for i in range(1, s0 - s + 2):
        rows.append(e(s + i))
        rows.append(e(nu + s + i))
    fillers = m0 - len(rows)
    available = nu - s0 - 1
    if fillers > available:
        raise ValueError(
            f"m0 = {m0} needs {fillers} isotropic filler coordinates but only "
            f"{available} remain at nu = {nu}; no subspace of type "
            f"({m0},{2 * s0},{s0},1) fits (requires m0 <= nu + s0 + 1)"
        )
    for j in range(1, fillers + 1):
        rows.append(e(s0 + 1 + j))
    p0 = span(gf, n, rows)

    space = build_space(gf, nu, 2)
    expected = SubspaceType(dim=m0, form_rank=2 * s0, s_index=s0, tau=0, eps=1)
    got = classify(space, p0)
    if got != expected:
        raise AssertionError(f"frame P0 has type {got}, expected {expected}")
    if not (subset(gf, anchor, p0) and subset(gf, p0, perp(space, anchor))):
        raise AssertionError("frame violates anchor <= P0 <= perp(anchor)")
    return v0, anchor, p0


class Reject:
    """Distinguished decode outcome for messages the rule cannot authenticate."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "REJECT"


REJECT = Reject()


@dataclass(frozen=True, eq=False)
class CodeInstance:
    """A fully materialized code: frame plus the four sets in canonical order."""

    params: CodeParams
    space: PsSpace
    v0: Vector
    anchor: Subspace
    p0: Subspace
    sources: tuple[Subspace, ...]
    transmitter_rules: tuple[Subspace, ...]
    receiver_rules: tuple[Subspace, ...]
    messages: tuple[Subspace, ...]
    source_by_message: dict[Subspace, Subspace] = dataclass_field(repr=False)
    source_set: frozenset[Subspace] = dataclass_field(repr=False)
    transmitter_set: frozenset[Subspace] = dataclass_field(repr=False)
    receiver_set: frozenset[Subspace] = dataclass_field(repr=False)

    def source_of(self, message: Subspace) -> Subspace:
        """The unique source state contained in a message."""
        try:
            return self.source_by_message[message]
        except KeyError:
            raise ValueError("not a message of this code") from None


def source_type(params: CodeParams) -> SubspaceType:
    s = params.s
    return SubspaceType(dim=2 * s, form_rank=2 * (s - 1), s_index=s - 1, tau=0, eps=1)


def message_type(params: CodeParams) -> SubspaceType:
    s = params.s
    return SubspaceType(dim=2 * s + 2, form_rank=2 * s + 2, s_index=s, tau=2, eps=1)


TRANSMITTER_TYPE = SubspaceType(dim=4, form_rank=4, s_index=1, tau=2, eps=1)
RECEIVER_TYPE = SubspaceType(dim=2, form_rank=2, s_index=0, tau=2, eps=1)


def build_code(params: CodeParams) -> CodeInstance:
    """Materialize the four sets by exhaustive enumeration and filtering.

    Sources and both rule sets come from interval enumeration with a type
    filter; messages are the deduplicated encode images, which stays
    tractable where enumerating all (2s+2)-dimensional subspaces would not.
    Every member is checked against its defining property; a failure is a
    construction bug, not bad input.
    """
    problems = validate_params(params)
    if problems:
        raise ValueError("; ".join(problems))
    gf = params.field
    space = build_space(gf, params.nu, 2)
    v0, anchor, p0 = canonical_frame(params)
    everything = full_subspace(space.n)

    sources = subspaces_typed(space, anchor, p0, 2 * params.s, source_type(params))
    receiver_rules = subspaces_typed(
        space, zero_subspace(space.n), everything, 2, RECEIVER_TYPE
    )
    transmitter_rules = [
        sub
        for sub in subspaces_between(gf, anchor, everything, 4)
        if classify(space, sub) == TRANSMITTER_TYPE
        and subspace_intersect(gf, sub, p0) == anchor
    ]

    msg_type = message_type(params)
    source_set = set(sources)
    seen: dict[Subspace, Subspace] = {}
    for src in sources:
        for rule in transmitter_rules:
            msg = subspace_sum(gf, src, rule)
            if msg in seen:
                continue
            if classify(space, msg) != msg_type:
                raise AssertionError(f"encode image has type {classify(space, msg)}")
            inside = subspace_intersect(gf, msg, p0)
            if inside not in source_set:
                raise AssertionError("message meets P0 outside the source set")
            seen[msg] = inside
    messages = tuple(sorted(seen))

    return CodeInstance(
        params=params,
        space=space,
        v0=v0,
        anchor=anchor,
        p0=p0,
        sources=tuple(sources),
        transmitter_rules=tuple(transmitter_rules),
        receiver_rules=tuple(receiver_rules),
        messages=messages,
        source_by_message=seen,
        source_set=frozenset(sources),
        transmitter_set=frozenset(transmitter_rules),
        receiver_set=frozenset(receiver_rules),
    )


def encode(code: CodeInstance, source: Subspace, rule: Subspace) -> Subspace:
    """The message source + rule; always a member of the message set."""
    if source not in code.source_set:
        raise ValueError("source is not a source state of this code")
    if rule not in code.transmitter_set:
        raise ValueError("rule is not a transmitter rule of this code")
    msg = subspace_sum(code.params.field, source, rule)
    if msg not in code.source_by_message:
        raise AssertionError("encode image left the message set")
    return msg


def decode(code: CodeInstance, message: Subspace, rule: Subspace):
    """The source contained in the message if the rule accepts it, else REJECT."""
    if message not in code.source_by_message:
        raise ValueError("not a message of this code")
    if rule not in code.receiver_set:
        raise ValueError("rule is not a receiver rule of this code")
    gf = code.params.field
    if subset(gf, rule, message):
        return subspace_intersect(gf, message, code.p0)
    return REJECT


def incidence(code: CodeInstance, receiver_rule: Subspace, transmitter_rule: Subspace) -> bool:
    """Whether the receiver rule authenticates everything the transmitter
    rule encodes, i.e. containment of the rule subspaces."""
    return subset(code.params.field, receiver_rule, transmitter_rule)


def transmitter_rule_family(params: CodeParams) -> Iterator[Subspace]:
    """The two-free-row parametrization of the transmitter rules.

    Rows are e_1, e_{2v+1}, e_{v+1} + r and e_{2v+2} + l, with r and l
    ranging over the 2(v-1) coordinates that pair into the anchor's perp.
    Yields exactly q^{4(v-1)} distinct subspaces; used to cross-check the
    filter-based enumeration in build_code.
    """
    gf = params.field
    nu = params.nu
    n = 2 * nu + 2
    free_cols = [j for j in range(1, 2 * nu) if j != nu]  # 0-indexed
    elements = list(gf.elements())
    e1 = unit_vector(n, 0)
    e_special = unit_vector(n, 2 * nu)
    for rvals in itertools.product(elements, repeat=len(free_cols)):
        row3 = [0] * n
        row3[nu] = 1
        for j, v in zip(free_cols, rvals):
            row3[j] = v
        for lvals in itertools.product(elements, repeat=len(free_cols)):
            row4 = [0] * n
            row4[2 * nu + 1] = 1
            for j, v in zip(free_cols, lvals):
                row4[j] = v
            yield span(gf, n, [e1, e_special, tuple(row3), tuple(row4)])


CODE_SCHEMA_VERSION = 1


def code_to_json(code: CodeInstance) -> dict:
    """Versioned JSON document for a built instance; entries are plain ints."""

    def basis(sub: Subspace) -> list[list[int]]:
        return [list(row) for row in sub.basis]

    p = code.params
    return {
        "schemaVersion": CODE_SCHEMA_VERSION,
        "params": {
            "qExp": p.field.e,
            "modulus": p.field.modulus,
            "q": p.field.q,
            "nu": p.nu,
            "s": p.s,
            "m0": p.m0,
            "s0": p.s0,
        },
        "ambient": code.space.n,
        "v0": list(code.v0),
        "anchor": basis(code.anchor),
        "p0": basis(code.p0),
        "sources": [basis(sub) for sub in code.sources],
        "transmitterRules": [basis(sub) for sub in code.transmitter_rules],
        "receiverRules": [basis(sub) for sub in code.receiver_rules],
        "messages": [basis(sub) for sub in code.messages],
    }


def code_json_text(code: CodeInstance) -> str:
    """Byte-stable rendering of code_to_json for equal parameters."""
    return json.dumps(code_to_json(code), indent=2, sort_keys=True)
