"""Shared test machinery: random machines, random words, pump validation."""

from __future__ import annotations

import random

from critex.arith import nonzero_track_dfa
from critex.automaton import (
    Dfa,
    PumpDecomposition,
    canonicalize,
    is_empty,
    product,
    symbols,
    trim_states,
)
from critex.numeral import MSD, DigitWord, RadixContext


def random_dfa(rng: random.Random, k: int = 2, tracks: int = 2, max_states: int = 4) -> Dfa:
    n = rng.randint(1, max_states)
    s_count = k**tracks
    rows = [[rng.randrange(n) for _ in range(s_count)] for _ in range(n)]
    accept = [s for s in range(n) if rng.random() < 0.5]
    if not accept:
        accept = [rng.randrange(n)]
    return Dfa(k, tracks, rows, accept, 0, MSD)


def prepared_random_suite(seed: int, count: int, k: int = 2, max_states: int = 4) -> list[Dfa]:
    """Random pair acceptors, denominator-nonzero enforced and canonicalized;
    resamples until `count` machines with nonempty languages are collected."""
    rng = random.Random(seed)
    ctx = RadixContext(k)
    nz = nonzero_track_dfa(ctx, 2, 1)
    out = []
    while len(out) < count:
        raw = random_dfa(rng, k=k, tracks=2, max_states=max_states)
        work = canonicalize(product(raw, nz, "and"))
        if not is_empty(work):
            out.append(work)
    return out


def random_word(rng: random.Random, k: int, tracks: int, max_len: int, order: str = MSD) -> DigitWord:
    syms = symbols(k, tracks)
    length = rng.randint(0, max_len)
    return DigitWord(k, tracks, tuple(rng.choice(syms) for _ in range(length)), order)


def all_words_upto(k: int, tracks: int, max_len: int):
    from critex.numeral import all_words

    for length in range(max_len + 1):
        yield from all_words(k, tracks, length)


def verify_pump(machine: Dfa, pump: PumpDecomposition) -> bool:
    """The pump's path, cycle, co-accessibility, and increments all check out."""
    s = machine.run(pump.u)
    if s != pump.loop_state:
        return False
    view = Dfa(machine.k, machine.tracks, machine.trans, machine.accept, s, machine.order)
    if view.run(pump.v) != s:
        return False
    if s not in trim_states(machine):
        return False
    uv = pump.u.concat(pump.v)
    return (
        pump.inc1 == uv.value(0) - pump.u.value(0)
        and pump.inc2 == uv.value(1) - pump.u.value(1)
        and len(pump.v) >= 1
    )


def pump_words(machine: Dfa, pump: PumpDecomposition, copies: int, w: DigitWord) -> DigitWord:
    body = pump.u
    for _ in range(copies):
        body = body.concat(pump.v)
    return body.concat(w)
