"""Exact congruence diagonalization of L + xI over a cotree, in linear time.

For a cograph G with cotree t and a rational x, the matrix L(G) + xI is
congruent to a diagonal matrix whose entries this module computes without
ever forming a matrix.  Each leaf starts with the value degree(v) + x and
sibling leaf pairs are eliminated bottom-up: a pair (alpha, beta) under a
node of kind union or join is replaced by one or zero surviving values
according to the rules below, and the tree shrinks by surgery (childless
interior nodes are deleted, single-child interior nodes contracted) until
nothing is left to process.  The multiset of values produced has the same
signs as the eigenvalues of L + xI, so counting signs of the run at -x
locates eigenvalues relative to x: positives count eigenvalues above x,
zeros the multiplicity of x, negatives those below.

Pair rules, with alpha the value of the leaf being retired and beta its
sibling's:

  join node, alpha + beta + 2 != 0:
      retire alpha + beta + 2, survivor (alpha*beta - 1)/(alpha + beta + 2)
  join node, alpha + beta + 2 == 0 and beta == -1 (hence alpha == -1):
      retire 0, survivor -1
  join node, alpha + beta + 2 == 0 and beta != -1:
      retire both, values (1 + beta)^2 and -1
  union node, alpha + beta != 0:
      retire alpha + beta, survivor alpha*beta/(alpha + beta)
  union node, alpha + beta == 0 and beta == 0 (hence alpha == 0):
      retire 0, survivor 0
  union node, alpha + beta == 0 and beta != 0:
      retire both, values -beta and beta

Every rule is symmetric in the two values up to which vertex carries which
result, and a pair of sibling leaves may be taken at any node whose
children are all leaves, in any order, without changing the final sign
counts.  The default mode drains nodes deepest-first, leftmost pair first,
which makes runs reproducible; passing an rng picks random nodes, pairs
and roles instead, and is used by the tests to exercise order
independence.

Values are exact rationals kept as reduced integer pairs internally;
the public functions speak Fraction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cotree import Cotree, Leaf, JOIN, leaf_count

# slot kinds: a leaf slot stores its vertex id (>= 0), interiors store these
_UNION = -1
_JOIN = -2


class IntegralityError(ArithmeticError):
    """An integer scan failed to account for every eigenvalue.

    Laplacian spectra of cographs are integral, so the multiplicities found
    at the integers 0..n must sum to n; anything else means the input tree
    was malformed in a way that slipped past validation.
    """


class FastPathPreconditionError(ValueError):
    """Closed-form batch elimination called at its excluded value."""


@dataclass(frozen=True)
class InertiaCount:
    """Eigenvalue counts of L(G) relative to a point x."""

    greater: int
    equal: int
    less: int


def _validated_x(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("x must be an int or Fraction, not float")
    return Fraction(x)


def _run(t: Cotree, xn: int, xd: int, rng: random.Random | None):
    """Diagonal values for L + (xn/xd) I, as reduced pairs indexed by vertex.

    Returns (nums, dens) with dens positive.  Leaf ids must be 0..n-1.
    """
    if isinstance(t, Leaf):
        if t.vertex != 0:
            raise ValueError("leaf vertex ids must be exactly 0..n-1, each once")
        g = gcd(xn, xd)
        return [xn // g], [xd // g]

    jn = _JOIN

    # pass 1: flatten to parallel slot arrays.  Slot 0 is the root; leaf
    # children are laid out inline while their parent is handled, interior
    # children go through the stack, so slot order is topological (child
    # slots always exceed the parent's) and the interiors alone are met in
    # preorder, which fixes both the child list order and the bucket order
    # the deterministic mode drains in.
    kd = [jn if t.kind == JOIN else _UNION]
    par = [-1]
    dep = [0]
    pos = [0]
    root_kids: list[int] = []
    childs: list[list[int] | None] = [root_kids]
    buckets: list[list[int]] = [[0]]
    stack: list[tuple[Cotree, int]] = [(t, 0)]
    pend: list[tuple[Cotree, int]] = []
    lslot: list[int] = []
    lv: list[int] = []
    icount = 1
    s = 1
    kd_ap, par_ap, dep_ap = kd.append, par.append, dep.append
    pos_ap, ch_ap = pos.append, childs.append
    pop, ext = stack.pop, stack.extend
    pend_ap, pend_clear = pend.append, pend.clear
    ls_ap, lv_ap = lslot.append, lv.append
    leaf_type = Leaf
    join_kind = JOIN
    while stack:
        node, ps = pop()
        d = dep[ps] + 1
        pc = childs[ps]
        pc_ap = pc.append
        if d == len(buckets):
            buckets.append([])
        badd = buckets[d].append
        pend_clear()
        for ch in node.children:
            if type(ch) is leaf_type:
                kd_ap(ch.vertex)
            else:
                kd_ap(jn if ch.kind == join_kind else _UNION)
                ch_ap([])
                badd(s)
                pend_ap((ch, s))
                icount += 1
                par_ap(ps)
                dep_ap(d)
                pos_ap(len(pc))
                pc_ap(s)
                s += 1
                continue
            ch_ap(None)
            par_ap(ps)
            dep_ap(d)
            pos_ap(len(pc))
            pc_ap(s)
            s += 1
        ni = len(pend)
        ls_ap(ps)
        lv_ap(len(node.children) - ni)
        if ni:
            ext(pend[::-1])
    S = s
    n = S - icount

    # pass 2: leaf counts of interiors.  Each node's direct leaf-child
    # count was recorded in pass 1; interior children then push their
    # totals up a level, deepest bucket first so children land before
    # their parents are read.  Leaf slots keep 0, nothing reads them.
    leafcnt = [0] * S
    for sl, c in zip(lslot, lv):
        leafcnt[sl] = c
    for d in range(len(buckets) - 1, 0, -1):
        for s in buckets[d]:
            leafcnt[par[s]] += leafcnt[s]

    # pass 3: degrees, initial values, child counts.  A leaf's degree is
    # the sum over its join ancestors a of leafcount(a) - leafcount(child
    # of a towards the leaf), accumulated top-down in acc.  out_n/out_d
    # are prefilled with the initial values; retirements overwrite entries
    # as they happen and the final survivor is written back when the root
    # collapses, so no separate bookkeeping of what was emitted is needed.
    acc = [0] * S
    num = [0] * S
    den = [1] * S
    nint = [0] * S
    nkid = [0] * S
    out_n = [0] * n
    out_d = [1] * n
    seen = bytearray(n)
    nkid[0] = len(root_kids)
    last_p = -1
    if xd == 1:
        # integer x: sibling leaves share degree + x, cache it per parent
        base = 0
        for s in range(1, S):
            p = par[s]
            v = kd[s]
            if v >= 0:
                if v >= n or seen[v]:
                    raise ValueError(
                        "leaf vertex ids must be exactly 0..n-1, each once"
                    )
                seen[v] = 1
                if p != last_p:
                    last_p = p
                    base = acc[p] + (leafcnt[p] - 1 if kd[p] == jn else 0) + xn
                num[s] = base
                out_n[v] = base
            else:
                cl = childs[s]
                if cl is None:
                    # a leaf with a negative vertex id lands here
                    raise ValueError(
                        "leaf vertex ids must be exactly 0..n-1, each once"
                    )
                acc[s] = acc[p] + (leafcnt[p] - leafcnt[s] if kd[p] == jn else 0)
                nkid[s] = len(cl)
                nint[p] += 1
    else:
        bnum = 0
        bden = 1
        for s in range(1, S):
            p = par[s]
            v = kd[s]
            if v >= 0:
                if v >= n or seen[v]:
                    raise ValueError(
                        "leaf vertex ids must be exactly 0..n-1, each once"
                    )
                seen[v] = 1
                if p != last_p:
                    last_p = p
                    degree = acc[p] + (leafcnt[p] - 1 if kd[p] == jn else 0)
                    a = degree * xd + xn
                    g = gcd(a, xd)
                    bnum = a // g
                    bden = xd // g
                num[s] = bnum
                den[s] = bden
                out_n[v] = bnum
                out_d[v] = bden
            else:
                cl = childs[s]
                if cl is None:
                    raise ValueError(
                        "leaf vertex ids must be exactly 0..n-1, each once"
                    )
                acc[s] = acc[p] + (leafcnt[p] - leafcnt[s] if kd[p] == jn else 0)
                nkid[s] = len(cl)
                nint[p] += 1

    dead = bytearray(S)

    def collapse(
        s: int,
        c: int,
        ripe: list[int] | None,
        dead=dead,
        par=par,
        pos=pos,
        childs=childs,
        nint=nint,
        nkid=nkid,
        kd=kd,
        dep=dep,
    ) -> None:
        # retire node s, whose only remaining child is c (-1 for none);
        # cascades at most one level, since a contraction swaps one child
        # for another and leaves the grandparent's child count alone.
        # A deleted child leaves a -1 tombstone at its slot in the parent
        # list; nkid tracks live children.  When a leaf becomes the root
        # the run is over and its current value is the last diagonal entry.
        dead[s] = 1
        p = par[s]
        if c >= 0:
            if p < 0:
                par[c] = -1
                v = kd[c]
                if v >= 0:
                    out_n[v] = num[c]
                    out_d[v] = den[c]
                return
            i = pos[s]
            childs[p][i] = c
            pos[c] = i
            par[c] = p
            nint[p] -= 1
            if ripe is not None and nint[p] == 0:
                ripe.append(p)
            return
        if p < 0:
            return
        childs[p][pos[s]] = -1
        nint[p] -= 1
        nkid[p] -= 1
        if nkid[p] > 1:
            if ripe is not None and nint[p] == 0:
                ripe.append(p)
            return
        c2 = next(ch for ch in childs[p] if ch >= 0)
        dead[p] = 1
        gp = par[p]
        if gp < 0:
            par[c2] = -1
            v = kd[c2]
            if v < 0:
                dep[c2] = 0
            else:
                out_n[v] = num[c2]
                out_d[v] = den[c2]
            return
        i = pos[p]
        childs[gp][i] = c2
        pos[c2] = i
        par[c2] = gp
        if kd[c2] < 0:
            dep[c2] = dep[p]
        else:
            nint[gp] -= 1
            if ripe is not None and nint[gp] == 0:
                ripe.append(gp)

    if rng is None:
        # deepest nodes first; an entry whose node was lifted by surgery is
        # requeued at its current, strictly smaller depth
        # requeues always target a strictly shallower bucket, so the one
        # being iterated never grows under the loop
        for d in range(len(buckets) - 1, -1, -1):
            for s in buckets[d]:
                if dead[s]:
                    continue
                if dep[s] != d:
                    buckets[dep[s]].append(s)
                    continue
                kids = childs[s]
                assert nint[s] == 0 and nkid[s] >= 2
                join_node = kd[s] == jn
                m = len(kids)
                idx = 0
                while kids[idx] < 0:
                    idx += 1
                have = kids[idx]
                idx += 1
                rn, rd = num[have], den[have]
                while idx < m:
                    l = kids[idx]
                    idx += 1
                    if l < 0:
                        continue
                    bn, bd = num[l], den[l]
                    v = kd[have]
                    if join_node:
                        pb = rd * bd
                        sn = rn * bd + bn * rd + 2 * pb
                        if sn:
                            g = gcd(sn, pb)
                            out_n[v] = sn // g
                            out_d[v] = pb // g
                            cn, cd = rn * bn - pb, sn
                            if cd < 0:
                                cn, cd = -cn, -cd
                            g = gcd(cn, cd)
                            rn = cn // g
                            rd = cd // g
                            have = l
                        elif bn + bd == 0:
                            out_n[v] = 0
                            out_d[v] = 1
                            rn, rd = -1, 1
                            have = l
                        else:
                            # (1 + beta)^2 is already reduced:
                            # gcd(bn + bd, bd) = gcd(bn, bd) = 1
                            out_n[v] = (bd + bn) ** 2
                            out_d[v] = bd * bd
                            w = kd[l]
                            out_n[w] = -1
                            out_d[w] = 1
                            while idx < m and kids[idx] < 0:
                                idx += 1
                            if idx < m:
                                have = kids[idx]
                                idx += 1
                                rn, rd = num[have], den[have]
                            else:
                                have = -1
                    else:
                        sn = rn * bd + bn * rd
                        if sn:
                            sd = rd * bd
                            g = gcd(sn, sd)
                            out_n[v] = sn // g
                            out_d[v] = sd // g
                            cn, cd = rn * bn, sn
                            if cd < 0:
                                cn, cd = -cn, -cd
                            g = gcd(cn, cd)
                            rn = cn // g
                            rd = cd // g
                            have = l
                        elif bn == 0:
                            out_n[v] = 0
                            out_d[v] = 1
                            rn, rd = 0, 1
                            have = l
                        else:
                            out_n[v] = -bn
                            out_d[v] = bd
                            w = kd[l]
                            out_n[w] = bn
                            out_d[w] = bd
                            while idx < m and kids[idx] < 0:
                                idx += 1
                            if idx < m:
                                have = kids[idx]
                                idx += 1
                                rn, rd = num[have], den[have]
                            else:
                                have = -1
                if have >= 0:
                    num[have] = rn
                    den[have] = rd
                collapse(s, have, None)
    else:
        def pair_step(s: int, i1: int, i2: int) -> None:
            # one elimination at node s between child positions i1 (alpha,
            # the retired role) and i2 (beta)
            kids = childs[s]
            k, l = kids[i1], kids[i2]
            an, ad, bn, bd = num[k], den[k], num[l], den[l]
            v = kd[k]
            if kd[s] == jn:
                sn = an * bd + bn * ad + 2 * ad * bd
                if sn:
                    sd = ad * bd
                    g = gcd(sn, sd)
                    out_n[v] = sn // g
                    out_d[v] = sd // g
                    cn, cd = an * bn - ad * bd, sn
                    if cd < 0:
                        cn, cd = -cn, -cd
                    g = gcd(cn, cd)
                    num[l] = cn // g
                    den[l] = cd // g
                    kids.pop(i1)
                elif bn + bd == 0:
                    out_n[v] = 0
                    out_d[v] = 1
                    num[l] = -1
                    den[l] = 1
                    kids.pop(i1)
                else:
                    out_n[v] = (bd + bn) ** 2
                    out_d[v] = bd * bd
                    w = kd[l]
                    out_n[w] = -1
                    out_d[w] = 1
                    kids.pop(max(i1, i2))
                    kids.pop(min(i1, i2))
            else:
                sn = an * bd + bn * ad
                if sn:
                    sd = ad * bd
                    g = gcd(sn, sd)
                    out_n[v] = sn // g
                    out_d[v] = sd // g
                    cn, cd = an * bn, sn
                    if cd < 0:
                        cn, cd = -cn, -cd
                    g = gcd(cn, cd)
                    num[l] = cn // g
                    den[l] = cd // g
                    kids.pop(i1)
                elif bn == 0:
                    out_n[v] = 0
                    out_d[v] = 1
                    kids.pop(i1)
                else:
                    out_n[v] = -bn
                    out_d[v] = bd
                    w = kd[l]
                    out_n[w] = bn
                    out_d[w] = bd
                    kids.pop(max(i1, i2))
                    kids.pop(min(i1, i2))

        ripe = [s for s in range(S) if kd[s] < 0 and nint[s] == 0]
        while ripe:
            j = rng.randrange(len(ripe))
            s = ripe[j]
            if dead[s]:
                ripe[j] = ripe[-1]
                ripe.pop()
                continue
            kids = childs[s]
            if nkid[s] != len(kids):
                kids = [c for c in kids if c >= 0]
                childs[s] = kids
            i1, i2 = rng.sample(range(len(kids)), 2)
            if rng.random() < 0.5:
                i1, i2 = i2, i1
            pair_step(s, i1, i2)
            kids = childs[s]
            nkid[s] = len(kids)
            for i, c in enumerate(kids):
                pos[c] = i
            if nkid[s] < 2:
                collapse(s, kids[0] if kids else -1, ripe)

    return out_n, out_d


def diagonalize(
    t: Cotree, x, rng: random.Random | None = None
) -> list[Fraction]:
    """Diagonal of a matrix congruent to L(G) + xI, indexed by vertex id.

    With rng omitted the elimination order is fixed and the result
    reproducible down to which vertex carries which value; a supplied rng
    randomizes the order, changing individual entries but never the sign
    pattern.
    """
    xf = _validated_x(x)
    nums, dens = _run(t, xf.numerator, xf.denominator, rng)
    return [Fraction(a, b) for a, b in zip(nums, dens)]


def count_relative(t: Cotree, x, rng: random.Random | None = None) -> InertiaCount:
    """How many Laplacian eigenvalues of the represented graph are >, ==, < x.

    Runs the diagonalization at -x; by congruence the resulting signs are
    the signs of the eigenvalues of L - xI.
    """
    xf = _validated_x(x)
    nums, _ = _run(t, -xf.numerator, xf.denominator, rng)
    greater = equal = 0
    for a in nums:
        if a > 0:
            greater += 1
        elif a == 0:
            equal += 1
    return InertiaCount(greater, equal, len(nums) - greater - equal)


def spectrum(t: Cotree) -> dict[int, int]:
    """Full Laplacian spectrum as {eigenvalue: multiplicity}, keys ascending.

    Cograph Laplacian spectra are integral and bounded by the vertex count,
    so scanning the integers 0..n accounts for everything; n+1 linear
    passes, O(n^2) total.
    """
    n = leaf_count(t)
    out: dict[int, int] = {}
    total = 0
    for x in range(n + 1):
        m = count_relative(t, x).equal
        if m:
            out[x] = m
            total += m
    if total != n:
        raise IntegralityError(
            f"integer scan found {total} of {n} eigenvalues; input tree is malformed"
        )
    return out


def batch_equal_join(y, m: int) -> tuple[list[Fraction], Fraction]:
    """Retire m equal sibling values y under a join node in closed form.

    Returns (retired values, survivor).  Requires y != -1; then no
    intermediate pair sum hits the excluded value -2 and every step takes
    the generic join rule, giving retired values ((j+1)/j)(y+1) for
    j = 1..m-1 and survivor (y - (m-1))/m.
    """
    yf = _validated_x(y)
    if m < 1:
        raise ValueError("need at least one value")
    if yf == -1:
        raise FastPathPreconditionError("batch join requires y != -1")
    retired = [Fraction(j + 1, j) * (yf + 1) for j in range(1, m)]
    survivor = (yf - (m - 1)) / Fraction(m)
    return retired, survivor


def batch_equal_union(y, m: int) -> tuple[list[Fraction], Fraction]:
    """Retire m equal sibling values y under a union node in closed form.

    Returns (retired values, survivor).  Requires y != 0; then no
    intermediate pair sum vanishes and every step takes the generic union
    rule, giving retired values ((j+1)/j) y for j = 1..m-1 and survivor
    y/m.
    """
    yf = _validated_x(y)
    if m < 1:
        raise ValueError("need at least one value")
    if yf == 0:
        raise FastPathPreconditionError("batch union requires y != 0")
    retired = [Fraction(j + 1, j) * yf for j in range(1, m)]
    survivor = yf / Fraction(m)
    return retired, survivor
