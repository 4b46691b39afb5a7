"""Sparse multi-leg tensors over CycScalar.

Entries are kept in a dict keyed by index tuples; zeros are never stored.
The permutation convention follows sigma v = v^[sigma 1] x ... x v^[sigma n]:
output leg t carries input leg sigma(t).  Legs are 1-based everywhere, to
match the diagram combinatorics.

Tensors built from Hopf-algebra elements carry the algebra as `context`,
which is what multiply_legs and comult_leg use.  Tensors are immutable
after construction (every operation returns a new tensor), so independent
evaluations may run in parallel.
"""

from __future__ import annotations

from .scalar import CycScalar


class TensorError(Exception):
    pass


class ArityMismatch(TensorError):
    pass


class DimensionMismatch(TensorError):
    pass


class SparseTensor:
    __slots__ = ("arity", "dims", "entries", "context")

    def __init__(self, dims, entries=None, context=None, _clean=True):
        self.dims = tuple(dims)
        self.arity = len(self.dims)
        self.context = context
        if entries is None:
            self.entries = {}
            return
        if _clean:
            clean = {}
            for key, val in entries.items():
                key = tuple(key)
                if len(key) != self.arity:
                    raise ArityMismatch(f"key {key} has wrong length for arity {self.arity}")
                for i, d in zip(key, self.dims):
                    if not 0 <= i < d:
                        raise DimensionMismatch(f"index {key} out of range for dims {self.dims}")
                if val:
                    clean[key] = val
            self.entries = clean
        else:
            self.entries = entries

    @classmethod
    def from_vector(cls, vec, dim, context=None) -> "SparseTensor":
        """1-leg tensor from a sparse {index: scalar} vector."""
        return cls((dim,), {(i,): c for i, c in vec.items()}, context=context)

    def copy_with(self, entries) -> "SparseTensor":
        return SparseTensor(self.dims, entries, context=self.context, _clean=False)

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SparseTensor):
            return NotImplemented
        if self.dims != other.dims:
            return False
        if set(self.entries) != set(other.entries):
            return False
        return all(val == other.entries[key] for key, val in self.entries.items())

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{k}: {v.render()}" for k, v in sorted(self.entries.items()))
        return f"SparseTensor(dims={self.dims}, {{{body}}})"

    def items(self):
        """Entries in lexicographic key order (deterministic iteration)."""
        return sorted(self.entries.items())

    # -- linear structure ----------------------------------------------------

    def add(self, other: "SparseTensor") -> "SparseTensor":
        if self.dims != other.dims:
            raise DimensionMismatch("tensor shapes differ")
        out = dict(self.entries)
        for key, val in other.entries.items():
            acc = out.get(key)
            new = val if acc is None else acc + val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return self.copy_with(out)

    def scale(self, scalar) -> "SparseTensor":
        if not scalar:
            return self.copy_with({})
        return self.copy_with({k: v * scalar for k, v in self.entries.items()})

    def tensor(self, other: "SparseTensor") -> "SparseTensor":
        """Juxtaposition self (x) other."""
        ctx = self.context if self.context is not None else other.context
        out = {}
        for k1, v1 in self.entries.items():
            for k2, v2 in other.entries.items():
                out[k1 + k2] = v1 * v2
        return SparseTensor(self.dims + other.dims, out, context=ctx, _clean=False)

    # -- leg operations --------------------------------------------------------

    def permute_legs(self, sigma) -> "SparseTensor":
        """Output leg t carries input leg sigma(t); sigma is 1-based."""
        if sorted(sigma) != list(range(1, self.arity + 1)):
            raise ArityMismatch(f"{sigma} is not a permutation of 1..{self.arity}")
        moves = [s - 1 for s in sigma]
        dims = tuple(self.dims[m] for m in moves)
        out = {tuple(key[m] for m in moves): val for key, val in self.entries.items()}
        return SparseTensor(dims, out, context=self.context, _clean=False)

    def apply_on_leg(self, leg: int, matrix) -> "SparseTensor":
        """Apply a linear map to one leg; matrix is a list of sparse columns
        ({row: scalar}), one per basis vector of the leg."""
        self._check_leg(leg)
        if len(matrix) != self.dims[leg - 1]:
            raise DimensionMismatch(
                f"matrix has {len(matrix)} columns, leg {leg} has dimension {self.dims[leg - 1]}")
        p = leg - 1
        out = {}
        for key, val in self.entries.items():
            for row, coeff in matrix[key[p]].items():
                new_key = key[:p] + (row,) + key[p + 1:]
                acc = out.get(new_key)
                new = val * coeff if acc is None else acc + val * coeff
                if new:
                    out[new_key] = new
                else:
                    out.pop(new_key, None)
        return self.copy_with(out)

    def contract_with_covector(self, legs, covectors) -> "SparseTensor":
        """Eliminate the named legs by pairing each with its covector
        (a dense list of scalars).  Arity drops by len(legs)."""
        legs = list(legs)
        if len(legs) != len(covectors):
            raise DimensionMismatch("one covector per contracted leg")
        for leg, phi in zip(legs, covectors):
            self._check_leg(leg)
            if len(phi) != self.dims[leg - 1]:
                raise DimensionMismatch(f"covector length {len(phi)} vs dim {self.dims[leg - 1]}")
        drop = {leg - 1 for leg in legs}
        if len(drop) != len(legs):
            raise DimensionMismatch("duplicate legs in contraction")
        phi_at = {leg - 1: phi for leg, phi in zip(legs, covectors)}
        keep = [i for i in range(self.arity) if i not in drop]
        out = {}
        for key, val in self.entries.items():
            c = val
            for p in drop:
                c = c * phi_at[p][key[p]]
                if not c:
                    break
            if not c:
                continue
            new_key = tuple(key[i] for i in keep)
            acc = out.get(new_key)
            new = c if acc is None else acc + c
            if new:
                out[new_key] = new
            else:
                out.pop(new_key, None)
        return SparseTensor(tuple(self.dims[i] for i in keep), out, context=self.context, _clean=False)

    def multiply_legs(self, group) -> "SparseTensor":
        """Replace the listed legs by their product (in the listed order),
        placed at the position of the first listed leg.  Uses the tensor's
        Hopf-algebra context for the multiplication."""
        group = list(group)
        if not group:
            raise ArityMismatch("empty leg group")
        for leg in group:
            self._check_leg(leg)
        if len(set(group)) != len(group):
            raise ArityMismatch("duplicate legs in group")
        if len(group) == 1:
            return self
        H = self._context_for(group)
        slot = min(group) - 1
        drop = {leg - 1 for leg in group}
        keep_dims = [H.dim if i == slot else self.dims[i]
                     for i in range(self.arity) if i == slot or i not in drop]
        positions = [leg - 1 for leg in group]
        out = {}
        for key, val in self.entries.items():
            prod = {key[positions[0]]: val}
            for p in positions[1:]:
                prod = H.multiply_basis_right(prod, key[p])
                if not prod:
                    break
            if not prod:
                continue
            base = [key[i] for i in range(self.arity) if i == slot or i not in drop]
            slot_pos = sum(1 for i in range(slot) if i not in drop or i == slot)
            for idx, coeff in prod.items():
                base[slot_pos] = idx
                new_key = tuple(base)
                acc = out.get(new_key)
                new = coeff if acc is None else acc + coeff
                if new:
                    out[new_key] = new
                else:
                    out.pop(new_key, None)
        return SparseTensor(tuple(keep_dims), out, context=self.context, _clean=False)

    def comult_leg(self, leg: int) -> "SparseTensor":
        """Split one leg in two by the context algebra's comultiplication."""
        self._check_leg(leg)
        H = self._context_for([leg])
        p = leg - 1
        dims = self.dims[:p] + (H.dim, H.dim) + self.dims[p + 1:]
        out = {}
        for key, val in self.entries.items():
            for (j, k), coeff in H.comult[key[p]].items():
                new_key = key[:p] + (j, k) + key[p + 1:]
                acc = out.get(new_key)
                new = val * coeff if acc is None else acc + val * coeff
                if new:
                    out[new_key] = new
                else:
                    out.pop(new_key, None)
        return SparseTensor(dims, out, context=self.context, _clean=False)

    def expand_leg(self, leg: int, n: int) -> "SparseTensor":
        """Iterated comultiplication Delta^n on one leg: n = 0 applies the
        counit (the leg disappears), n = 1 leaves the leg alone, n >= 2
        splits it into n legs with the bracketing (id x Delta^(n-1)) Delta."""
        H = self._context_for([leg])
        if n == 0:
            eps = [H.counit[i] for i in range(H.dim)]
            return self.contract_with_covector([leg], [eps])
        out = self
        for step in range(n - 1):
            out = out.comult_leg(leg + step)
        return out

    def counit_all(self):
        """Apply the counit to every leg; returns the resulting scalar."""
        H = self._context_for(range(1, self.arity + 1))
        eps = [H.counit[i] for i in range(H.dim)]
        total = CycScalar.zero()
        for key, val in self.entries.items():
            c = val
            for i in key:
                c = c * eps[i]
                if not c:
                    break
            if c:
                total = total + c
        return total

    def algebra_product(self, other: "SparseTensor") -> "SparseTensor":
        """Entrywise product in H^(x arity): componentwise algebra multiplication."""
        if self.dims != other.dims:
            raise DimensionMismatch("tensor shapes differ")
        H = self._context_for(range(1, self.arity + 1))
        if self.arity == 0:
            out = {}
            c1 = self.entries.get(())
            c2 = other.entries.get(())
            if c1 and c2 and (p := c1 * c2):
                out[()] = p
            return self.copy_with(out)
        support = H.mult_support()
        mult = H.mult
        arity = self.arity
        out = {}

        def rec(a_items, b_items, leg, prefix, coeff):
            if leg == arity:
                total = coeff * a_items[0][1] * b_items[0][1]
                if total:
                    acc = out.get(prefix)
                    new = total if acc is None else acc + total
                    if new:
                        out[prefix] = new
                    else:
                        out.pop(prefix, None)
                return
            buckets_a = {}
            for kv in a_items:
                buckets_a.setdefault(kv[0][leg], []).append(kv)
            buckets_b = {}
            for kv in b_items:
                buckets_b.setdefault(kv[0][leg], []).append(kv)
            for i, sub_a in buckets_a.items():
                for j in support[i]:
                    sub_b = buckets_b.get(j)
                    if sub_b is None:
                        continue
                    for idx, c in mult[i][j].items():
                        rec(sub_a, sub_b, leg + 1, prefix + (idx,), coeff * c)

        rec(list(self.entries.items()), list(other.entries.items()), 0, (), CycScalar.one())
        return self.copy_with(out)

    # -- helpers ---------------------------------------------------------------

    def _check_leg(self, leg: int):
        if not 1 <= leg <= self.arity:
            raise ArityMismatch(f"leg {leg} out of range for arity {self.arity}")

    def _context_for(self, legs):
        if self.context is None:
            raise DimensionMismatch("tensor has no Hopf-algebra context")
        for leg in legs:
            if self.dims[leg - 1] != self.context.dim:
                raise DimensionMismatch(f"leg {leg} does not match the context algebra")
        return self.context
