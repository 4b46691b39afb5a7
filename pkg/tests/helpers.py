"""Independent brute-force oracles used by the tests.

Everything here avoids the package's tensor/evaluator machinery on purpose:
group counting is pure table walking, and the dense reference implementations
work on full index dictionaries.
"""

import itertools

from hopfinv.scalar import CycScalar


def count_nth_roots(G, n):
    """#{x in G : x^n = e} by exhaustive enumeration."""
    count = 0
    for x in range(G.order):
        acc = G.identity
        for _ in range(n):
            acc = G.table[acc][x]
        if acc == G.identity:
            count += 1
    return count


def genus2_hom_count(G, m, n):
    """#{(a,b) : a^m = bab, b^n = aba}, i.e. #Hom(pi_1(M_{m,n}), G)."""
    t = G.table

    def power(x, e):
        acc = G.identity
        for _ in range(e):
            acc = t[acc][x]
        return acc

    count = 0
    for a in range(G.order):
        for b in range(G.order):
            if power(a, m) == t[t[b][a]][b] and power(b, n) == t[t[a][b]][a]:
                count += 1
    return count


# -- dense tensor reference -------------------------------------------------


def dense_from(t):
    zero = CycScalar.zero()
    return {key: t.entries.get(key, zero)
            for key in itertools.product(*[range(d) for d in t.dims])}


def dense_permute(din, dims, sigma):
    """out[K] = in[I] with I_i = K[sigma^-1(i)] (the inverse-permutation path,
    deliberately different from the library's forward map)."""
    n = len(sigma)
    inv = [0] * n
    for t, s in enumerate(sigma, 1):
        inv[s - 1] = t
    out = {}
    for key in itertools.product(*[range(dims[s - 1]) for s in sigma]):
        src = tuple(key[inv[i] - 1] for i in range(n))
        out[key] = din[src]
    return out


def dense_multiply_legs(din, dims, group, H):
    """Collapse the listed legs (in order) into one at min(group)-1."""
    zero = CycScalar.zero()
    positions = [g - 1 for g in group]
    slot = min(positions)
    keep = [i for i in range(len(dims)) if i == slot or i not in set(positions)]
    out_dims = [H.dim if i == slot else dims[i] for i in keep]
    out = {key: zero for key in itertools.product(*[range(d) for d in out_dims])}
    for key, val in din.items():
        if not val:
            continue
        prod = {key[positions[0]]: CycScalar.one()}
        for p in positions[1:]:
            nxt = {}
            for i, c in prod.items():
                for k, mcoef in H.mult[i][key[p]].items():
                    nxt[k] = nxt.get(k, zero) + c * mcoef
            prod = nxt
        base = [key[i] for i in keep]
        slot_pos = keep.index(slot)
        for idx, c in prod.items():
            base[slot_pos] = idx
            out[tuple(base)] = out[tuple(base)] + val * c
    return out, out_dims


def dense_contract(din, dims, legs, covectors):
    zero = CycScalar.zero()
    drop = {leg - 1: phi for leg, phi in zip(legs, covectors)}
    keep = [i for i in range(len(dims)) if i not in drop]
    out_dims = [dims[i] for i in keep]
    out = {key: zero for key in itertools.product(*[range(d) for d in out_dims])}
    for key, val in din.items():
        c = val
        for p, phi in drop.items():
            c = c * phi[key[p]]
        k = tuple(key[i] for i in keep)
        out[k] = out[k] + c
    return out, out_dims


def dense_equals_sparse(dense, t):
    zero = CycScalar.zero()
    for key, val in dense.items():
        if t.entries.get(key, zero) != val:
            return False
    return all(key in dense for key in t.entries)
