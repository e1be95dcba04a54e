"""Canonical forms and stabilizer orders for spanning caps.

The canonical key of a spanning cap s is the minimum, over all ordered
(d+1)-tuples t of linearly independent points of s, of the bit mask of the
image of s under the map sending t onto the standard basis.  Equal keys
characterise projective equivalence on spanning caps, and the number of
minimising tuples equals the order of the setwise stabilizer of s in
GL(d+1,2).

Neither quantity is computed by enumerating tuples.  The search works on
"states": partially normalised images of s in which the first j tuple
points already sit on the first j unit points.  Key facts:

* a transition fixes the span of the first j units pointwise, so the mask
  positions below 2^j are final once reached;
* the minimal achievable tail of the image beyond position 2^j depends
  only on the state's positions >= 2^j, never on the settled low part.

The second fact turns minimisation into a memoised recursion on suffixes,
with the memo shared across calls (extensions of related caps hit the same
suffixes constantly).  Stabilizer orders come from the orbit-chain product
|G| = prod_j |orbit of e_j under the pointwise stabilizer of e_1..e_{j-1}|,
each orbit membership decided by a completion search pruned against the
key; this sidesteps enumerating the minimising tuples themselves, whose
count reaches 3.2e8 for the largest cap of PG(5,2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import geometry
from .geometry import NotACap, Space, is_cap, spans
from .linalg import LinearMap, apply_set, map_from_preimages

_MEMO_LIMIT = 2_000_000  # per-depth suffix memo; cleared when exceeded


class NotSpanning(ValueError):
    """Canonical forms are defined for spanning caps only."""


@dataclass(frozen=True)
class CanonicalRecord:
    """Canonical key, stabilizer order and a normalising witness map."""

    key: int
    stabilizer_order: int
    witness: LinearMap


class Engine:
    """Per-dimension canonicalisation state (memo tables and caches)."""

    def __init__(self, sp: Space):
        self.sp = sp
        n1 = sp.n_coords
        self._mid = [sp.low_masks[j + 1] ^ sp.low_masks[j] for j in range(n1)]
        self._tails: List[Dict[int, int]] = [dict() for _ in range(n1)]
        self._key_cache: Dict[int, int] = {}
        self._stab_cache: Dict[int, Tuple[int, Tuple[Tuple[int, ...], ...]]] = {}

    # -- transitions -------------------------------------------------------

    def _apply_u(self, W: int, w: int, j: int) -> int:
        """Image of state W under a map fixing positions < 2^j pointwise
        and sending position w (>= 2^j) to 2^j."""
        HAS = self.sp.coord_masks
        if not (w >> j) & 1:
            b = w.bit_length() - 1
            hb = HAS[b]
            hj = HAS[j]
            A = W & hb & ~hj
            B = W & hj & ~hb
            delta = (1 << b) - (1 << j)
            W = (W ^ A ^ B) | (A >> delta) | (B << delta)
            w ^= (1 << b) | (1 << j)
        rest = w ^ (1 << j)
        hj = HAS[j]
        while rest:
            c = rest & (-rest)
            rest ^= c
            hc = HAS[c.bit_length() - 1]
            P = W & hj
            W = (W ^ P) | ((P & ~hc) << c) | ((P & hc) >> c)
        return W

    def _track(self, fv: List[int], w: int, j: int) -> None:
        """Mirror _apply_u on the inverse-map columns (original tuple points)."""
        if not (w >> j) & 1:
            b = w.bit_length() - 1
            fv[b], fv[j] = fv[j], fv[b]
            w ^= (1 << b) | (1 << j)
        rest = w ^ (1 << j)
        col = fv[j]
        while rest:
            c = rest & (-rest)
            rest ^= c
            col ^= fv[c.bit_length() - 1]
        fv[j] = col

    # -- canonical key -----------------------------------------------------

    def key(self, s: int) -> int:
        """Minimum normalised image mask of the spanning cap s."""
        cached = self._key_cache.get(s)
        if cached is not None:
            return cached
        d = self.sp.d
        HAS = self.sp.coord_masks
        MID = self._mid
        tails = self._tails

        # The transition of _apply_u is inlined below: it runs millions of
        # times per classification and the call overhead dominates.
        def tail(j: int, suffix: int) -> int:
            memo = tails[j]
            r = memo.get(suffix)
            if r is not None:
                return r
            if j == d:
                # single coset above 2^d: minimise over anchored translates
                hd = 1 << d
                best = None
                x = suffix
                while x:
                    b = x & (-x)
                    x ^= b
                    t = (b.bit_length() - 1) ^ hd
                    Y = suffix
                    while t:
                        c = t & (-t)
                        t ^= c
                        hc = HAS[c.bit_length() - 1]
                        Y = ((Y & hc) >> c) | ((Y & ~hc) << c)
                    if best is None or Y < best:
                        best = Y
                r = best
            else:
                midj = MID[j]
                nj = j + 1
                ebit = 1 << j
                hj = HAS[j]
                best = None
                x = suffix
                while x:
                    b = x & (-x)
                    x ^= b
                    w = b.bit_length() - 1
                    W = suffix
                    if not (w >> j) & 1:
                        bb = w.bit_length() - 1
                        hb = HAS[bb]
                        A = W & hb & ~hj
                        B = W & hj & ~hb
                        delta = (1 << bb) - ebit
                        W = (W ^ A ^ B) | (A >> delta) | (B << delta)
                        w ^= (1 << bb) | ebit
                    rest = w ^ ebit
                    while rest:
                        c = rest & (-rest)
                        rest ^= c
                        hc = HAS[c.bit_length() - 1]
                        P = W & hj
                        W = (W ^ P) | ((P & ~hc) << c) | ((P & hc) >> c)
                    digit = W & midj
                    cand = digit | tail(nj, W ^ digit)
                    if best is None or cand < best:
                        best = cand
                r = best
            if len(memo) > _MEMO_LIMIT:
                memo.clear()
            memo[suffix] = r
            return r

        k = tail(0, s)
        if len(self._key_cache) > _MEMO_LIMIT:
            self._key_cache.clear()
        self._key_cache[s] = k
        return k

    # -- completion search (automorphisms / witnesses) ----------------------

    def _complete(self, W: int, j: int, K: int,
                  fv: List[int]) -> Optional[List[int]]:
        """Extend state W at depth j to a full tuple with image exactly K.

        Returns the original tuple points (inverse-map columns) or None.
        A state can only reach K if its settled low part matches K's, which
        prunes almost everything immediately.  The transition is inlined as
        in key(): this search runs once per stabilizer orbit test.
        """
        sp = self.sp
        n1 = sp.n_coords
        lows = sp.low_masks
        HAS = sp.coord_masks
        hj = HAS[j]
        ebit = 1 << j
        nextlow = lows[j + 1]
        target_next = K & nextlow
        x = W & ~lows[j]
        while x:
            b = x & (-x)
            x ^= b
            w = b.bit_length() - 1
            child = W
            ww = w
            if not (ww >> j) & 1:
                bb = ww.bit_length() - 1
                hb = HAS[bb]
                A = child & hb & ~hj
                B = child & hj & ~hb
                delta = (1 << bb) - ebit
                child = (child ^ A ^ B) | (A >> delta) | (B << delta)
                ww ^= (1 << bb) | ebit
            rest = ww ^ ebit
            while rest:
                c = rest & (-rest)
                rest ^= c
                hc = HAS[c.bit_length() - 1]
                P = child & hj
                child = (child ^ P) | ((P & ~hc) << c) | ((P & hc) >> c)
            if child & nextlow != target_next:
                continue
            fv2 = list(fv)
            self._track(fv2, w, j)
            if j + 1 == n1:
                if child == K:
                    return fv2
            else:
                got = self._complete(child, j + 1, K, fv2)
                if got is not None:
                    return got
        return None

    def find_tuple(self, s: int, K: int) -> Tuple[int, ...]:
        """Some independent tuple of s whose normalisation maps s onto K."""
        units = list(1 << i for i in range(self.sp.n_coords))
        got = self._complete(s, 0, K, units)
        if got is None:
            raise ValueError("no normalisation of the cap reaches the key")
        return tuple(got)

    # -- stabilizer --------------------------------------------------------

    def stab(self, K: int) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
        """(order, generator tuples) of the setwise stabilizer of the key K.

        K must be a canonical key (it contains the unit points).  The
        returned generators are tuples t with the induced map M_t fixing K
        setwise; they need not generate the full stabilizer, which is fine
        for their only use, seeding orbit computations.
        """
        cached = self._stab_cache.get(K)
        if cached is not None:
            return cached
        sp = self.sp
        n1 = sp.n_coords
        lows = sp.low_masks
        order = 1
        gens: List[Tuple[int, ...]] = []
        units = [1 << i for i in range(n1)]
        for j in range(n1):
            target_next = K & lows[j + 1]
            count = 0
            x = K & ~lows[j]
            while x:
                b = x & (-x)
                x ^= b
                v = b.bit_length() - 1
                child = self._apply_u(K, v, j)
                if child & lows[j + 1] != target_next:
                    continue
                fv = list(units)
                self._track(fv, v, j)
                if j + 1 == n1:
                    done = fv if child == K else None
                else:
                    done = self._complete(child, j + 1, K, fv)
                if done is not None:
                    count += 1
                    if done != units:
                        gens.append(tuple(done))
            order *= count
        result = (order, tuple(gens))
        self._stab_cache[K] = result
        return result


_ENGINES: Dict[int, Engine] = {}


def engine(sp: Space) -> Engine:
    """Shared per-process engine for the given space."""
    eng = _ENGINES.get(sp.d)
    if eng is None:
        eng = Engine(sp)
        _ENGINES[sp.d] = eng
    return eng


def _validate(sp: Space, s: int) -> None:
    if not is_cap(sp, s):
        raise NotACap(f"{geometry.points_of(s)} is not a cap")
    if not spans(sp, s):
        raise NotSpanning(
            f"{geometry.points_of(s)} does not span PG({sp.d},2)")


def canonical(sp: Space, s: int) -> CanonicalRecord:
    """Canonical record of a spanning cap.

    key is a complete equivalence invariant; stabilizer_order counts the
    tuples realising the key, which equals the setwise stabilizer order in
    GL(d+1,2); witness maps s onto key.
    """
    _validate(sp, s)
    eng = engine(sp)
    key = eng.key(s)
    order, _ = eng.stab(key)
    witness = map_from_preimages(sp, eng.find_tuple(s, key))
    record = CanonicalRecord(key, order, witness)
    assert apply_set(witness, s) == key
    return record


def canonical_key(sp: Space, s: int) -> int:
    """Canonical key only (no witness construction)."""
    _validate(sp, s)
    return engine(sp).key(s)


def equivalent(sp: Space, a: int, b: int) -> bool:
    """Projective equivalence of two spanning caps."""
    if a == b:
        _validate(sp, a)
        return True
    return canonical_key(sp, a) == canonical_key(sp, b)


def stabilizer_order(sp: Space, s: int) -> int:
    """Order of the setwise stabilizer of the spanning cap s in GL(d+1,2)."""
    _validate(sp, s)
    eng = engine(sp)
    order, _ = eng.stab(eng.key(s))
    return order
