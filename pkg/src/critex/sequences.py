"""Built-in sequence automata and pair-language fixtures.

The ternary squarefree word is derived, not hand-coded: its values come from
the two-bit sliding-block recoding of the parity-of-ones sequence, and the
automaton is grown by residual classification against that rule, then
verified symbol-by-symbol on a long prefix.
"""

from __future__ import annotations

from .automaton import Dfa, Dfao
from .numeral import MSD


class FixtureError(RuntimeError):
    pass


def thue_morse() -> Dfao:
    """Parity of the number of 1 digits in the binary expansion."""
    return Dfao(2, 1, [[0, 1], [1, 0]], ["0", "1"], 0)


def rudin_shapiro() -> Dfao:
    """Parity of the number of (possibly overlapping) 11 blocks in binary.

    States are (parity, previous digit).
    """
    states = [(0, 0), (0, 1), (1, 0), (1, 1)]
    idx = {s: i for i, s in enumerate(states)}
    trans = []
    for c, p in states:
        trans.append([idx[((c ^ (p & d)) & 1, d)] for d in (0, 1)])
    output = [str(c) for c, _ in states]
    return Dfao(2, 1, trans, output, idx[(0, 0)])


def constant_zero() -> Dfao:
    return Dfao(2, 1, [[0, 0]], ["0"], 0)


def one_then_zeros() -> Dfao:
    """1 0 0 0 ...: output 1 exactly at index 0."""
    return Dfao(2, 1, [[0, 1], [1, 1]], ["1", "0"], 0)


def alternating() -> Dfao:
    """0 1 0 1 ...: the low bit of the index."""
    return Dfao(2, 1, [[0, 1], [0, 1]], ["0", "1"], 0)


def _tm_bit(n: int) -> int:
    return bin(n).count("1") & 1


_BLOCK_CODE = {(0, 1): 2, (1, 1): 1, (1, 0): 0, (0, 0): 1}


def vtm_value(n: int) -> int:
    """Ternary squarefree word: block recoding of adjacent parity bits."""
    return _BLOCK_CODE[(_tm_bit(n), _tm_bit(n + 1))]


def dfao_from_function(fn, k: int, probe_len: int = 8, verify_n: int = 1 << 14, max_states: int = 512) -> Dfao:
    """Grow the minimal Dfao of n -> fn(n) by residual classification.

    The state of a digit prefix w is the behavior x -> fn([w x]); prefixes
    are merged when they agree on every probe suffix up to probe_len digits.
    The result is verified against fn on 0..verify_n-1, so a too-shallow
    probe fails loudly instead of producing a wrong machine.
    """
    suffixes: list[tuple[int, int]] = []  # (length, value)
    frontier = [(0, 0)]
    suffixes.append((0, 0))
    for _ in range(probe_len):
        frontier = [(ln + 1, val * k + d) for ln, val in frontier for d in range(k)]
        suffixes.extend(frontier)

    def signature(prefix_val: int) -> tuple:
        return tuple(fn(prefix_val * k**ln + val) for ln, val in suffixes)

    sig2state: dict[tuple, int] = {signature(0): 0}
    reps: list[int] = [0]
    trans: list[list[int]] = []
    i = 0
    while i < len(reps):
        rep = reps[i]
        i += 1
        row = []
        for d in range(k):
            child = rep * k + d
            sig = signature(child)
            j = sig2state.get(sig)
            if j is None:
                j = len(reps)
                if j >= max_states:
                    raise FixtureError("residual classification did not converge; raise probe_len")
                sig2state[sig] = j
                reps.append(child)
            row.append(j)
        trans.append(row)
    output = [str(fn(rep)) for rep in reps]
    dfao = Dfao(k, 1, trans, output, 0)
    for n in range(verify_n):
        if dfao.value(n) != str(fn(n)):
            raise FixtureError(f"residual machine disagrees with the rule at {n}; raise probe_len")
    return dfao


_VTM_CACHE: list[Dfao] = []


def vtm() -> Dfao:
    """2-automatic form of the ternary squarefree word, derived and verified."""
    if not _VTM_CACHE:
        _VTM_CACHE.append(dfao_from_function(vtm_value, 2))
    return _VTM_CACHE[0]


def period_doubling_value(n: int) -> int:
    """Parity of the 2-adic valuation of n+1."""
    m = n + 1
    v = 0
    while m % 2 == 0:
        m //= 2
        v ^= 1
    return v


_PD_CACHE: list[Dfao] = []


def period_doubling() -> Dfao:
    """The period-doubling word 0100010101000100..., derived and verified."""
    if not _PD_CACHE:
        _PD_CACHE.append(dfao_from_function(period_doubling_value, 2))
    return _PD_CACHE[0]


# ----------------------------------------------------------- pair fixtures


def dfa_for_words(k: int, tracks: int, words: list[tuple[tuple[int, ...], ...]]) -> Dfa:
    """Trie acceptor for an explicit finite set of words."""
    from .automaton import sym_index

    s_count = k**tracks
    children: list[dict[int, int]] = [{}]
    accept: set[int] = set()
    for word in words:
        cur = 0
        for sym in word:
            c = sym_index(tuple(sym), k)
            nxt = children[cur].get(c)
            if nxt is None:
                nxt = len(children)
                children.append({})
                children[cur][c] = nxt
            cur = nxt
        accept.add(cur)
    dead = len(children)
    rows = [[row.get(c, dead) for c in range(s_count)] for row in children]
    rows.append([dead] * s_count)
    return Dfa(k, tracks, rows, accept, 0, MSD)


def pairs_ones_then_01() -> Dfa:
    """{[1,1]} . {[0,1]}*: quotients 1, 2/3, 4/7, ... with limit 1/2."""
    # symbol indices for k=2, d=2: [0,0]=0, [0,1]=1, [1,0]=2, [1,1]=3
    dead = 2
    rows = [
        [dead, dead, dead, 1],
        [dead, 1, dead, dead],
        [dead, dead, dead, dead],
    ]
    return Dfa(2, 2, rows, {1}, 0, MSD)


def pairs_ones_repeat() -> Dfa:
    """{[1,1]} . {[1,1]}*: every quotient exactly 1."""
    dead = 2
    rows = [
        [dead, dead, dead, 1],
        [dead, dead, dead, 1],
        [dead, dead, dead, dead],
    ]
    return Dfa(2, 2, rows, {1}, 0, MSD)


def pairs_unbounded() -> Dfa:
    """{[1,0]} . {[1,0]}* . {[1,1]}: quotients (2^(m+1) - 1), unbounded."""
    dead = 3
    rows = [
        [dead, dead, 1, dead],
        [dead, dead, 1, 2],
        [dead, dead, dead, dead],
        [dead, dead, dead, dead],
    ]
    return Dfa(2, 2, rows, {2}, 0, MSD)


def pairs_single() -> Dfa:
    """The single pair word [1,0][1,1][0,1]: the quotient 6/3."""
    return dfa_for_words(2, 2, [((1, 0), (1, 1), (0, 1))])
