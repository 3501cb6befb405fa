"""Sparse multilinear operations between tensor words of graded spaces.

An operation maps a word (tuple of spaces) to a word; the table maps an
input basis-label tuple to a sparse combination of output basis-label
tuples.  Homogeneity deg(out) = deg(in) + deg(op) is enforced on every
entry, and tables never hold explicit zeros, so equality of operations is
table equality.

All Koszul bookkeeping lives in the constructors here: `tensor_ops`
commutes operations past inputs, `permute_inputs`/`permute_outputs` apply
the signed symmetric-group action, `insert_compose` takes the identity's
own exponent and multiplies internally by the commutation sign.  Callers
never hand-compute Koszul factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CompositionError, StructureError
from .kernel import GradedSpace, Perm, koszul_sign


def _word(spaces):
    if isinstance(spaces, GradedSpace):
        return (spaces,)
    return tuple(spaces)


def word_degree(word, key):
    return sum(V.degree(l) for V, l in zip(word, key))


@dataclass(frozen=True)
class MultilinearOp:
    domain: tuple
    codomain: tuple
    degree: int
    table: dict = field(default_factory=dict)

    @property
    def arity(self):
        return len(self.domain)

    @property
    def is_zero(self):
        return not self.table

    def __eq__(self, other):
        return (isinstance(other, MultilinearOp)
                and self.domain == other.domain
                and self.codomain == other.codomain
                and self.degree == other.degree
                and self.table == other.table)

    def entries(self):
        for in_key, outs in self.table.items():
            for out_key, c in outs.items():
                yield in_key, out_key, c

    def component(self, in_key, out_key):
        return self.table.get(tuple(in_key), {}).get(tuple(out_key), Fraction(0))

    def __repr__(self):
        dom = ",".join(V.name for V in self.domain)
        cod = ",".join(V.name for V in self.codomain)
        return (f"MultilinearOp({dom} -> {cod}, deg {self.degree}, "
                f"{sum(len(v) for v in self.table.values())} entries)")


def make_op(domain, codomain, degree, entries):
    """Build an operation from (in_key, out_key, coeff) triples, merging
    duplicates, pruning zeros and checking labels and homogeneity."""
    domain = _word(domain)
    codomain = _word(codomain)
    table = {}
    for in_key, out_key, c in entries:
        in_key, out_key, c = tuple(in_key), tuple(out_key), Fraction(c)
        if c == 0:
            continue
        if len(in_key) != len(domain) or len(out_key) != len(codomain):
            raise StructureError(
                f"key arity mismatch: {in_key} -> {out_key} for "
                f"{len(domain)} -> {len(codomain)} slots")
        for V, l in zip(domain, in_key):
            if l not in V:
                raise StructureError(f"label {l!r} not in space {V.name!r}")
        for V, l in zip(codomain, out_key):
            if l not in V:
                raise StructureError(f"label {l!r} not in space {V.name!r}")
        if word_degree(codomain, out_key) != word_degree(domain, in_key) + degree:
            raise StructureError(
                f"inhomogeneous entry {in_key} -> {out_key} for degree {degree}")
        bucket = table.setdefault(in_key, {})
        bucket[out_key] = bucket.get(out_key, Fraction(0)) + c
    for in_key in list(table):
        outs = {k: v for k, v in table[in_key].items() if v != 0}
        if outs:
            table[in_key] = outs
        else:
            del table[in_key]
    return MultilinearOp(domain, codomain, degree, table)


def zero_op(domain, codomain, degree):
    return MultilinearOp(_word(domain), _word(codomain), degree, {})


def identity_op(V):
    return MultilinearOp((V,), (V,), 0, {(l,): {(l,): Fraction(1)} for l in V.labels})


def scale_op(c, op):
    c = Fraction(c)
    if c == 0:
        return zero_op(op.domain, op.codomain, op.degree)
    table = {ik: {ok: c * v for ok, v in outs.items()}
             for ik, outs in op.table.items()}
    return MultilinearOp(op.domain, op.codomain, op.degree, table)


def sum_ops(terms):
    """Coefficient-wise sum of (scalar, op) terms sharing one signature."""
    terms = [(Fraction(c), op) for c, op in terms]
    if not terms:
        raise CompositionError("sum_ops needs at least one term")
    _, first = terms[0]
    for _, op in terms:
        if (op.domain, op.codomain, op.degree) != (first.domain, first.codomain, first.degree):
            raise CompositionError(
                f"signature mismatch in sum: {op!r} vs {first!r}")
    table = {}
    for c, op in terms:
        if c == 0:
            continue
        for in_key, outs in op.table.items():
            bucket = table.setdefault(in_key, {})
            for out_key, v in outs.items():
                bucket[out_key] = bucket.get(out_key, Fraction(0)) + c * v
    for in_key in list(table):
        outs = {k: v for k, v in table[in_key].items() if v != 0}
        if outs:
            table[in_key] = outs
        else:
            del table[in_key]
    return MultilinearOp(first.domain, first.codomain, first.degree, table)


def tensor_ops(*ops):
    """Tensor product f_1 ox ... ox f_r with the Koszul sign from moving
    each operation past the inputs of the ones before it."""
    if not ops:
        raise CompositionError("tensor of no operations")
    if len(ops) == 1:
        return ops[0]
    domain = tuple(V for op in ops for V in op.domain)
    codomain = tuple(V for op in ops for V in op.codomain)
    degree = sum(op.degree for op in ops)
    combos = [({}, (), (), 0, 0)]  # (nothing) running: in, out, sign_exp, in_deg
    state = [((), (), 0, 0)]
    for op in ops:
        new_state = []
        for in_acc, out_acc, exp_acc, deg_acc in state:
            for in_key, outs in op.table.items():
                exp = exp_acc + (op.degree % 2) * (deg_acc % 2)
                d = deg_acc + word_degree(op.domain, in_key)
                for out_key, c in outs.items():
                    new_state.append((in_acc + in_key, out_acc + out_key,
                                      (exp, c), d))
        # flatten coefficient bookkeeping
        state = [(ik, ok, e, d) if not isinstance(e, tuple) else (ik, ok, e, d)
                 for ik, ok, e, d in new_state]
        # the above keeps (exp, c) packed; unpack uniformly below
        unpacked = []
        for ik, ok, e, d in state:
            unpacked.append((ik, ok, e, d))
        state = unpacked
        break_outer = False
    # The incremental loop above is easier written explicitly:
    return _tensor_ops_explicit(ops, domain, codomain, degree)


def _tensor_ops_explicit(ops, domain, codomain, degree):
    entries = [((), (), Fraction(1), 0)]
    for op in ops:
        new_entries = []
        odeg = op.degree
        for in_acc, out_acc, coeff, deg_acc in entries:
            sign = -1 if (odeg % 2) and (deg_acc % 2) else 1
            for in_key, outs in op.table.items():
                d = deg_acc + word_degree(op.domain, in_key)
                for out_key, c in outs.items():
                    new_entries.append(
                        (in_acc + in_key, out_acc + out_key, coeff * c * sign, d))
        entries = new_entries
        if not entries:
            break
    return make_op(domain, codomain, degree,
                   ((ik, ok, c) for ik, ok, c, _ in entries))


def serial_compose(outer, inner):
    """outer o inner, where inner's codomain word equals outer's domain."""
    if inner.codomain != outer.domain:
        raise CompositionError(
            f"cannot compose: {inner!r} feeds {outer!r}")
    entries = []
    for in_key, mids in inner.table.items():
        for mid_key, c1 in mids.items():
            outs = outer.table.get(mid_key)
            if not outs:
                continue
            for out_key, c2 in outs.items():
                entries.append((in_key, out_key, c1 * c2))
    return make_op(inner.domain, outer.codomain, outer.degree + inner.degree,
                   entries)


def insert_compose(outer, inner, position, sign_exponent=0):
    """outer o (id^position ox inner ox id^rest), 0-based position.

    The supplied exponent is the identity's own sign; the Koszul sign of
    commuting `inner` past the first `position` inputs is applied
    internally.
    """
    seg = len(inner.codomain)
    if position < 0 or position + seg > len(outer.domain):
        raise CompositionError(f"position {position} out of range for {outer!r}")
    if tuple(outer.domain[position:position + seg]) != inner.codomain:
        raise CompositionError(
            f"slot mismatch inserting {inner!r} into {outer!r} at {position}")
    global_sign = Fraction(-1 if sign_exponent % 2 else 1)
    # index outer entries by the inserted segment of their input key
    buckets = {}
    for in_key, outs in outer.table.items():
        buckets.setdefault(in_key[position:position + seg], []).append((in_key, outs))
    entries = []
    left_word = outer.domain[:position]
    for mid_in, mids in inner.table.items():
        for mid_out, c1 in mids.items():
            for outer_in, outs in buckets.get(mid_out, ()):
                left = outer_in[:position]
                right = outer_in[position + seg:]
                kos = -1 if (inner.degree % 2) and (word_degree(left_word, left) % 2) else 1
                for out_key, c2 in outs.items():
                    entries.append((left + mid_in + right, out_key,
                                    global_sign * kos * c1 * c2))
    domain = outer.domain[:position] + inner.domain + outer.domain[position + seg:]
    return make_op(domain, outer.codomain, outer.degree + inner.degree, entries)


def permutation_op(word, sigma):
    """The operator of the signed left action of sigma on the word."""
    word = _word(word)
    if sigma.size != len(word):
        raise CompositionError("permutation size mismatch")
    codomain = tuple(word[sigma.inverse()(i)] for i in range(len(word)))
    entries = []
    for key in _iter_word_keys(word):
        degs = [V.degree(l) for V, l in zip(word, key)]
        out = [None] * len(key)
        for i, l in enumerate(key):
            out[sigma(i)] = l
        entries.append((key, tuple(out), koszul_sign(sigma, degs)))
    return make_op(word, codomain, 0, entries)


def permute_inputs(op, sigma):
    """op o P_sigma: precompose with the signed action of sigma."""
    if sigma.size != op.arity:
        raise CompositionError("permutation size mismatch")
    inv = sigma.inverse()
    domain = tuple(op.domain[sigma(i)] for i in range(op.arity))
    entries = []
    for in_key, outs in op.table.items():
        pre_key = tuple(in_key[sigma(i)] for i in range(op.arity))
        degs = [V.degree(l) for V, l in zip(domain, pre_key)]
        sign = koszul_sign(sigma, degs)
        for out_key, c in outs.items():
            entries.append((pre_key, out_key, sign * c))
    return make_op(domain, op.codomain, op.degree, entries)


def permute_outputs(op, sigma):
    """P_sigma o op: postcompose with the signed action of sigma."""
    if sigma.size != len(op.codomain):
        raise CompositionError("permutation size mismatch")
    codomain = tuple(op.codomain[sigma.inverse()(i)] for i in range(len(op.codomain)))
    entries = []
    for in_key, outs in op.table.items():
        for out_key, c in outs.items():
            degs = [V.degree(l) for V, l in zip(op.codomain, out_key)]
            moved = [None] * len(out_key)
            for i, l in enumerate(out_key):
                moved[sigma(i)] = l
            entries.append((in_key, tuple(moved), koszul_sign(sigma, degs) * c))
    return make_op(op.domain, codomain, op.degree, entries)


def conjugate_op(op, sigma):
    """P_sigma o op o P_sigma^-1 (square word assumed)."""
    return permute_outputs(permute_inputs(op, sigma.inverse()), sigma)


def apply_op(op, inputs):
    """Multilinear extension of the table to per-slot linear combinations.

    inputs: one dict {label: coeff} per slot; returns {out_key: coeff}.
    """
    if len(inputs) != op.arity:
        raise CompositionError(
            f"{op.arity} inputs expected, got {len(inputs)}")
    for vec, V in zip(inputs, op.domain):
        for l in vec:
            if l not in V:
                raise CompositionError(f"label {l!r} not in space {V.name!r}")
    keys = [()]
    coeffs = {(): Fraction(1)}
    for vec in inputs:
        new_keys = []
        new_coeffs = {}
        for k in keys:
            base = coeffs[k]
            for l, c in vec.items():
                if c == 0:
                    continue
                nk = k + (l,)
                new_keys.append(nk)
                new_coeffs[nk] = base * Fraction(c)
        keys, coeffs = new_keys, new_coeffs
    result = {}
    for k in keys:
        outs = op.table.get(k)
        if not outs:
            continue
        c0 = coeffs[k]
        for out_key, c in outs.items():
            result[out_key] = result.get(out_key, Fraction(0)) + c0 * c
    return {k: v for k, v in result.items() if v != 0}


def eval_tensor(op, tensor):
    """Apply the operation to a sparse tensor {in_key: coeff}."""
    result = {}
    for key, c0 in tensor.items():
        outs = op.table.get(tuple(key))
        if not outs:
            continue
        for out_key, c in outs.items():
            result[out_key] = result.get(out_key, Fraction(0)) + Fraction(c0) * c
    return {k: v for k, v in result.items() if v != 0}


def _iter_word_keys(word):
    if not word:
        yield ()
        return
    head, tail = word[0], word[1:]
    for l in head.labels:
        for rest in _iter_word_keys(tail):
            yield (l,) + rest


def iter_word_keys(word):
    return _iter_word_keys(_word(word))


def evaluation_pairing(V, Vdual):
    """The natural pairing <v, f> = f(v) as an operation V ox V^vee -> k."""
    from .kernel import SCALARS, dual_label
    entries = []
    for l in V.labels:
        entries.append(((l, dual_label(l)), ("1",), Fraction(1)))
    return make_op((V, Vdual), (SCALARS,), -0 if False else _pairing_degree(V),
                   entries)


def _pairing_degree(V):
    # <v, v^> is nonzero only for complementary degrees, so the pairing is
    # homogeneous of degree 0 as a map into k
    return 0


@dataclass(frozen=True)
class OpFamily:
    """A named family of operations: arity -> op, plus metadata."""

    kind: str
    ops: dict
    max_arity: int

    _DEGREE_LAWS = {
        "ainf": lambda n: n - 2,
        "rb": lambda n: n - 1,
        "double": lambda n: n - 2,
        "linf": lambda n: n - 2,
    }

    def op(self, n):
        return self.ops.get(n)

    def arities(self):
        return sorted(self.ops)

    def validate_degrees(self):
        law = self._DEGREE_LAWS.get(self.kind)
        if law is None:
            return
        for n, op in self.ops.items():
            if op is not None and not op.is_zero and op.degree != law(n):
                raise StructureError(
                    f"{self.kind} family: operation of arity {n} has degree "
                    f"{op.degree}, expected {law(n)}")
