"""Request/response models and handlers shared by the HTTP API and the CLI.

Every computation is a pure function of its request model, so the CLI can
call handlers in-process while the FastAPI app exposes the same payloads
over HTTP.  All outputs are deterministic: canonical state encodings,
orbits sorted by representative, no timestamps.
"""

from __future__ import annotations

from typing import Callable, Optional

from pydantic import BaseModel, Field

from . import brackets, heights, matchings, tableaux, words
from .csp import csp_check
from .errors import ConfigError, StateSpaceTooLarge
from .families import family_params, parse_family
from .poset import DEFAULT_CAP, enumerate_ideals
from .qpoly import (
    IntPolynomial,
    asm_q_product,
    cat_poly,
    coxeter_number,
    half_square_poly,
    hook_length_poly,
    macmahon_poly,
    q_binomial,
)
from .toggles import (
    RcPoset,
    conjugator_word,
    gyration_word,
    inverse_word,
    orbits,
    promotion_word,
    rowmotion_word,
    superpromotion_word,
    toggle_action,
)

SCHEMA_VERSION = 1
LARGE_THRESHOLD = 100_000

IDEAL_ACTIONS = ("row", "row-inverse", "pro", "gyration", "spro")
STATE_ACTIONS = ("rotate", "psi", "syt-pro")
POLYS = ("qbinomial", "catalan", "macmahon", "hook", "halfsquare", "asmprod")
KINDS = ("word", "matching", "bmatching", "bracket", "ncp", "height", "asm", "syt", "bpm")


class RunConfig(BaseModel):
    family: str
    action: str = "row"
    format: str = "json"
    threads: int = 1
    cap: int = DEFAULT_CAP
    allow_large: bool = False


class CspConfig(RunConfig):
    poly: str = "qbinomial"


class WitnessConfig(RunConfig):
    action: str = ""  # empty = kind default
    kind: str = "word"


class OrbitEntry(BaseModel):
    size: int
    representative: str


class OrbitsResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, serialization_alias="schema")
    family: str
    action: str
    state_count: int
    order: int
    orbits: list[OrbitEntry]


class OrderResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, serialization_alias="schema")
    family: str
    action: str
    state_count: int
    order: int


class CspResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, serialization_alias="schema")
    family: str
    action: str
    poly: str
    polynomial: str
    group_order: int
    holds: bool
    orbit_sizes: list[int]
    residues: list[int]
    expected: list[int]
    first_mismatch: Optional[int]


class WitnessPair(BaseModel):
    state: str
    witness: str


class WitnessResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, serialization_alias="schema")
    family: str
    action: str
    kind: str
    state_count: int
    verified: bool
    verified_orbit_size: int
    pairs: list[WitnessPair]


class TrajectoryResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, serialization_alias="schema")
    family: str
    action: str
    period: int
    expected_period: Optional[int]
    period_ok: bool
    states: list[str]


def ideal_str(rc: RcPoset, ideal: int) -> str:
    return "".join("1" if ideal >> p & 1 else "0" for p in range(rc.poset.n))


def _check_action(rc: RcPoset, action: str) -> None:
    tag, params = family_params(rc)
    if action in ("row", "row-inverse", "pro", "gyration"):
        return
    if action == "spro":
        if tag != "asm":
            raise ConfigError("spro is defined only for asm:* families")
        return
    if action == "rotate":
        if not (tag == "halfsquare" or (tag == "product" and len(params) == 2)):
            raise ConfigError(f"rotate needs a rotation-closed word family, not {rc.family}")
        return
    if action == "psi":
        if tag != "product" or len(params) != 3 or params[0] != 2:
            raise ConfigError("psi is defined on bracket words of product:2,m,n")
        return
    if action == "syt-pro":
        if not (tag == "interior" or (tag == "product" and len(params) == 2)):
            raise ConfigError("syt-pro needs a two-row interior family")
        return
    raise ConfigError(f"unknown action {action!r}")


def _ideal_word(rc: RcPoset, action: str):
    if action == "row":
        return rowmotion_word(rc)
    if action == "row-inverse":
        return inverse_word(rowmotion_word(rc))
    if action == "pro":
        return promotion_word(rc)
    if action == "gyration":
        return gyration_word(rc)
    if action == "spro":
        return superpromotion_word(rc)
    raise ConfigError(f"{action!r} is not a toggle-word action")


def _gate_large(count: int, cfg: RunConfig) -> None:
    if count > LARGE_THRESHOLD and not cfg.allow_large:
        raise StateSpaceTooLarge(
            f"{count} states exceeds {LARGE_THRESHOLD}; pass allow_large / --allow-large"
        )


def _state_space(rc: RcPoset, cfg: RunConfig) -> tuple[list, Callable, Callable]:
    """(states, step, encode) for the configured action."""
    action = cfg.action
    _check_action(rc, action)
    ideals = enumerate_ideals(rc.poset, cfg.cap)
    _gate_large(len(ideals), cfg)
    if action in IDEAL_ACTIONS:
        step = toggle_action(rc, _ideal_word(rc, action))
        return ideals, step, lambda s: ideal_str(rc, s)
    if action == "rotate":
        dword = conjugator_word(rc)
        states = sorted(words.boundary_word(rc, ideal, dword) for ideal in ideals)
        return states, words.rotate_word, str
    if action == "psi":
        states = sorted(
            brackets.bracket_word(brackets.boundary_path_matrix(rc, ideal)) for ideal in ideals
        )
        return states, brackets.psi, str
    # syt-pro
    states = sorted(tableaux.ideal_to_syt(rc, ideal) for ideal in ideals)
    return states, tableaux.syt_promotion, str


def run_orbits(cfg: RunConfig) -> OrbitsResponse:
    rc = parse_family(cfg.family)
    states, step, encode = _state_space(rc, cfg)
    part = orbits(step, states, threads=max(1, cfg.threads))
    return OrbitsResponse(
        family=cfg.family,
        action=cfg.action,
        state_count=part.state_count,
        order=part.order,
        orbits=[OrbitEntry(size=s, representative=encode(r)) for s, r in part.orbits],
    )


def run_order(cfg: RunConfig) -> OrderResponse:
    rc = parse_family(cfg.family)
    states, step, _ = _state_space(rc, cfg)
    part = orbits(step, states, threads=max(1, cfg.threads))
    return OrderResponse(
        family=cfg.family, action=cfg.action, state_count=part.state_count, order=part.order
    )


def _poly_for(rc: RcPoset, poly: str) -> tuple[IntPolynomial, int]:
    """The checker polynomial and cyclic group order for a family."""
    tag, params = family_params(rc)
    if poly == "qbinomial":
        if tag != "product" or len(params) != 2:
            raise ConfigError("qbinomial needs product:n,k")
        n, k = params
        return q_binomial(n + k, k), n + k
    if poly == "catalan":
        if tag != "root":
            raise ConfigError("catalan needs root:W,n")
        kind, rank = chr(params[0]), params[1]
        return cat_poly(kind, rank), 2 * coxeter_number(kind, rank)
    if poly == "macmahon":
        if tag != "product" or len(params) != 3:
            raise ConfigError("macmahon needs product:l,m,n")
        ell, m, n = params
        return macmahon_poly(ell, m, n), ell + m + n - 1
    if poly == "hook":
        if tag != "interior" or params[2] != 0:
            raise ConfigError("hook needs interior:n,m,0 (SYT of the straight shape (n+1,m))")
        n, m, _ = params
        return hook_length_poly([n + 1, m]), n + m + 1
    if poly == "halfsquare":
        if tag != "halfsquare":
            raise ConfigError("halfsquare poly needs halfsquare:n")
        return half_square_poly(params[0]), 2 * params[0]
    if poly == "asmprod":
        if tag != "asm":
            raise ConfigError("asmprod needs asm:n")
        return asm_q_product(params[0]), 3 * params[0] - 2
    raise ConfigError(f"unknown polynomial {poly!r}")


def run_csp(cfg: CspConfig) -> CspResponse:
    rc = parse_family(cfg.family)
    poly, group = _poly_for(rc, cfg.poly)
    states, step, _ = _state_space(rc, cfg)
    part = orbits(step, states, threads=max(1, cfg.threads))
    report = csp_check(part.sizes, group, poly)
    return CspResponse(
        family=cfg.family,
        action=cfg.action,
        poly=cfg.poly,
        polynomial=str(poly),
        group_order=group,
        holds=report.holds,
        orbit_sizes=list(report.orbit_sizes),
        residues=list(report.residues),
        expected=list(report.expected),
        first_mismatch=report.first_mismatch,
    )


KIND_DEFAULT_ACTION = {
    "word": "row",
    "matching": "row",
    "bmatching": "row",
    "syt": "pro",
    "bracket": "pro",
    "ncp": "pro",
    "bpm": "pro",
    "height": "gyration",
    "asm": "gyration",
}


def _witness_maps(rc: RcPoset, kind: str, action: str):
    """(to_witness, encode, verify_pair) for a witness kind.

    verify_pair(ideal, next_ideal) checks one equivariance (or round-trip)
    step of the paired action.
    """
    tag, params = family_params(rc)
    poset = rc.poset

    if kind == "word":
        if tag not in ("product", "halfsquare", "interior", "root") or (
            tag == "product" and len(params) != 2
        ):
            raise ConfigError(f"kind=word does not apply to {rc.family}")
        dword = conjugator_word(rc)
        to = lambda ideal: words.boundary_word(rc, ideal, dword)
        rotating = tag in ("halfsquare",) or (tag == "product" and len(params) == 2)
        if rotating and action == "row":
            verify = lambda i, j: to(j) == words.rotate_word(to(i))
        else:
            verify = lambda i, j: words.word_to_ideal(rc, to(i), dword) == i
        return to, str, verify

    if kind == "matching":
        if tag != "root" or chr(params[0]) != "A":
            raise ConfigError("kind=matching needs root:A,n")
        dword = conjugator_word(rc)
        to = lambda ideal: matchings.matching_from_word_A(words.boundary_word(rc, ideal, dword))
        verify = lambda i, j: to(j) == matchings.rotate_matching(to(i))
        return to, matchings.matching_str, verify

    if kind == "bmatching":
        if tag != "root" or chr(params[0]) not in "BC":
            raise ConfigError("kind=bmatching needs root:B,n")
        dword = conjugator_word(rc)
        to = lambda ideal: matchings.matching_from_word_B(words.boundary_word(rc, ideal, dword))
        verify = lambda i, j: to(j) == matchings.rotate_matching(to(i))
        return to, matchings.matching_str, verify

    if kind == "syt":
        if not (tag == "interior" or (tag == "product" and len(params) == 2)):
            raise ConfigError("kind=syt needs a two-row interior family")
        to = lambda ideal: tableaux.ideal_to_syt(rc, ideal)
        verify = lambda i, j: to(j) == tableaux.syt_promotion(to(i))
        return to, str, verify

    if kind in ("bracket", "ncp", "bpm"):
        if tag != "product" or len(params) != 3:
            raise ConfigError(f"kind={kind} needs product:l,m,n")
        if kind != "bpm" and params[0] != 2:
            raise ConfigError(f"kind={kind} needs product:2,m,n")
        if kind == "bpm":
            to = lambda ideal: brackets.boundary_path_matrix(rc, ideal)
            verify = lambda i, j: brackets.bpm_to_ideal(rc, to(i)) == i
            return to, brackets.bpm_str, verify
        to_word = lambda ideal: brackets.bracket_word(brackets.boundary_path_matrix(rc, ideal))
        if kind == "bracket":
            verify = lambda i, j: to_word(j) == brackets.psi(to_word(i))
            return to_word, str, verify
        points = params[1] + params[2] + 1
        to = lambda ideal: brackets.noncrossing_partition(to_word(ideal))
        verify = lambda i, j: brackets.rotate_partition(to(j), points) == to(i)
        return to, brackets.partition_str, verify

    if kind in ("height", "asm"):
        if tag != "asm":
            raise ConfigError(f"kind={kind} needs asm:n")
        to_h = lambda ideal: heights.ideal_to_height(rc, ideal)
        if kind == "height":
            verify = lambda i, j: to_h(j) == heights.gyration_heights(to_h(i))
            return to_h, heights.height_str, verify
        to = lambda ideal: heights.asm_from_height(to_h(ideal))
        verify = lambda i, j: heights.height_from_asm(to(i)) == to_h(i)
        return to, heights.asm_str, verify

    raise ConfigError(f"unknown witness kind {kind!r}")


def run_witness(cfg: WitnessConfig) -> WitnessResponse:
    if cfg.kind not in KIND_DEFAULT_ACTION:
        raise ConfigError(f"unknown witness kind {cfg.kind!r}")
    action = cfg.action or KIND_DEFAULT_ACTION[cfg.kind]
    rc = parse_family(cfg.family)
    _check_action(rc, action)
    if action not in IDEAL_ACTIONS:
        raise ConfigError("witness runs over ideal states; pick a toggle action")
    ideals = enumerate_ideals(rc.poset, cfg.cap)
    _gate_large(len(ideals), cfg)
    to_witness, encode, verify = _witness_maps(rc, cfg.kind, action)
    step = toggle_action(rc, _ideal_word(rc, action))

    # verify the paired action around one full orbit (of the least state)
    verified = True
    seed = ideals[0]
    orbit_len = 0
    state = seed
    while True:
        nxt = step(state)
        orbit_len += 1
        if not verify(state, nxt):
            verified = False
        state = nxt
        if state == seed:
            break

    pairs = [
        WitnessPair(state=ideal_str(rc, ideal), witness=encode(to_witness(ideal)))
        for ideal in ideals
    ]
    return WitnessResponse(
        family=cfg.family,
        action=action,
        kind=cfg.kind,
        state_count=len(ideals),
        verified=verified,
        verified_orbit_size=orbit_len,
        pairs=pairs,
    )


def expected_trajectory_period(rc: RcPoset, action: str) -> Optional[int]:
    tag, params = family_params(rc)
    if tag == "product" and len(params) == 3 and action == "pro":
        return sum(params) - 1
    if tag == "asm" and action == "spro":
        return 3 * params[0] - 2
    if tag == "tsscpp" and action == "row":
        return 3 * params[0] - 2
    return None


def run_trajectory(cfg: RunConfig) -> TrajectoryResponse:
    rc = parse_family(cfg.family)
    _check_action(rc, cfg.action)
    if cfg.action not in IDEAL_ACTIONS:
        raise ConfigError("trajectory starts from the empty ideal; pick a toggle action")
    step = toggle_action(rc, _ideal_word(rc, cfg.action))
    seen = [0]
    state = step(0)
    while state != 0:
        seen.append(state)
        if len(seen) > cfg.cap:
            raise StateSpaceTooLarge("trajectory exceeded the cap without returning")
        state = step(state)
    expected = expected_trajectory_period(rc, cfg.action)
    period = len(seen)
    return TrajectoryResponse(
        family=cfg.family,
        action=cfg.action,
        period=period,
        expected_period=expected,
        period_ok=expected is None or expected == period,
        states=[ideal_str(rc, s) for s in seen],
    )
