"""Noncrossing perfect matchings and the word-to-matching maps."""

from __future__ import annotations

from .errors import NotBallot, PairingFailure

# A matching on points 1..2N is the tuple partner[i-1] = j (1-based partners).
Matching = tuple[int, ...]


def from_pairs(pairs: list[tuple[int, int]], points: int) -> Matching:
    partner = [0] * points
    for a, b in pairs:
        partner[a - 1] = b
        partner[b - 1] = a
    if 0 in partner:
        raise PairingFailure("not a perfect matching")
    return tuple(partner)


def pairs_of(m: Matching) -> list[tuple[int, int]]:
    return sorted((i + 1, p) for i, p in enumerate(m) if i + 1 < p)


def is_noncrossing(m: Matching) -> bool:
    ps = pairs_of(m)
    for i, (a, c) in enumerate(ps):
        for b, d in ps[i + 1:]:
            if a < b < c < d:
                return False
    return True


def rotate_matching(m: Matching) -> Matching:
    """Rotate every point i to i+1 around the circle."""
    n = len(m)
    out = [0] * n
    for i, p in enumerate(m):
        out[(i + 1) % n] = p % n + 1
    return tuple(out)


def matching_from_word_A(word: str) -> Matching:
    """Nest-pair a ballot word: position i opens a pair iff word[i] is 1."""
    if word.count("1") != word.count("0"):
        raise NotBallot(f"unequal step counts in {word!r}")
    stack: list[int] = []
    pairs = []
    for i, c in enumerate(word, start=1):
        if c == "1":
            stack.append(i)
        else:
            if not stack:
                raise NotBallot(f"prefix of {word!r} has more 0s than 1s")
            pairs.append((stack.pop(), i))
    return from_pairs(pairs, len(word))


def matching_from_word_B(word: str) -> Matching:
    """Half-turn symmetric matching on 4n points from a length-2n word.

    Pairs matched inside the word are mirrored to the antipodal half;
    unmatched openers o_1 < ... < o_a pair across as {o_t, o_{a+1-t} + 2n}.
    """
    n2 = len(word)
    stack: list[int] = []
    pairs = []
    for i, c in enumerate(word, start=1):
        if c == "1":
            stack.append(i)
        else:
            if not stack:
                raise PairingFailure(f"word {word!r} closes an unopened pair")
            pairs.append((stack.pop(), i))
    cross = [(o, stack[len(stack) - 1 - t] + n2) for t, o in enumerate(stack)]
    mirrored = [(a + n2, b + n2) for a, b in pairs]
    m = from_pairs(pairs + mirrored + cross, 2 * n2)
    if not is_noncrossing(m):
        raise PairingFailure(f"word {word!r} produced a crossing")
    for i, p in enumerate(m, start=1):
        q = m[(i + n2 - 1) % (2 * n2)]
        if q != (p + n2 - 1) % (2 * n2) + 1:
            raise PairingFailure(f"word {word!r} broke the half-turn symmetry")
    return m


def matching_str(m: Matching) -> str:
    return "|".join("{%d,%d}" % p for p in pairs_of(m))
