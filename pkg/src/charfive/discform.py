"""The rank-22 model lattice (five A4 chains plus a hyperbolic-like pair)
and the classification of its even overlattices.

The discriminant group G of the model lattice is F5^6.  Elements are
written [x1,...,x5 | y] in the reference basis (the classes of the first
dual root of each chain, plus the class of the dual of h); the quadratic
form is

    q([x|y]) = -(4/5)(x1^2 + ... + x5^2) + (2/5) y^2   mod 2Z.

q-values are encoded as integers mod 10 (value n means n/5 mod 2Z) and
bilinear values as integers mod 5 (n means n/5 mod Z).  That the encoded
formula agrees with the discriminant form computed from the Gram matrix
from first principles is checked by `verify_q_consistency`, which scans
all 15625 elements.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lattice import (
    GramLattice,
    discriminant_group,
    e_set,
    overlattice_from_generators,
    root_type_orthogonal_to,
)

RANK = 22
N_CHAINS = 5
CHAIN_LEN = 4
H_INDEX = 20
L_INDEX = 21

#: primal coordinates of the degree-2 polarization vector h
H_PRIMAL = tuple(1 if i == H_INDEX else 0 for i in range(RANK))

#: (a, b, y)-types whose overlattices keep the 5A4 root system and an
#: empty degree-1 elliptic set; y is normalized to {0, 1, 2} (y ~ -y).
#: Cross-validated against the computed table by the acceptance suite.
STARRED_TYPES = frozenset({
    (0, 0, 0), (0, 3, 2), (0, 5, 0), (1, 3, 1), (1, 4, 2),
    (2, 2, 0), (3, 0, 1), (3, 1, 2), (4, 1, 1), (5, 0, 0),
})

#: generator sets of the nine reference orbit representatives
REFERENCE_SUBGROUPS = {
    "H_0": (),
    "H_1": ((0, 0, 2, 2, 2, 2),),
    "H_2": ((2, 2, 2, 2, 2, 0),),
    "H_3": ((0, 1, 2, 2, 2, 1),),
    "H_4": ((1, 2, 2, 2, 2, 2),),
    "H_5": ((0, 1, 1, 2, 2, 0),),
    "H_6": ((1, 0, 1, 2, 2, 0), (0, 1, 2, 1, 3, 0)),
    "H_7": ((1, 0, 0, 1, 1, 1), (0, 1, 1, 1, 3, 3)),
    "H_8": ((1, 0, 1, 1, 2, 2), (0, 1, 1, 3, 3, 0)),
}


# ---------------------------------------------------------------------------
# The model lattice
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1)
def build_S0():
    """Gram matrix of the rank-22 lattice: five negative A4 chains plus the
    rank-2 block [[2,1],[1,-2]], with labeled basis."""
    gram = [[0] * RANK for _ in range(RANK)]
    labels = []
    for j in range(N_CHAINS):
        base = CHAIN_LEN * j
        for i in range(CHAIN_LEN):
            gram[base + i][base + i] = -2
            if i + 1 < CHAIN_LEN:
                gram[base + i][base + i + 1] = 1
                gram[base + i + 1][base + i] = 1
            labels.append(f"e_{i + 1}^({j + 1})")
    gram[H_INDEX][H_INDEX] = 2
    gram[H_INDEX][L_INDEX] = 1
    gram[L_INDEX][H_INDEX] = 1
    gram[L_INDEX][L_INDEX] = -2
    labels += ["h", "l"]
    return GramLattice(gram=tuple(tuple(r) for r in gram), labels=tuple(labels))


def lift_to_dual(v):
    """Dual-coordinate lift of [x1..x5 | y]: x_j at the first root of chain j,
    y at h."""
    coords = [0] * RANK
    for j in range(N_CHAINS):
        coords[CHAIN_LEN * j] = int(v[j]) % 5
    coords[H_INDEX] = int(v[5]) % 5
    return coords


# ---------------------------------------------------------------------------
# The discriminant form in the reference basis
# ---------------------------------------------------------------------------

def g_add(v, w):
    return tuple((a + b) % 5 for a, b in zip(v, w))


def g_scale(c, v):
    return tuple((c * a) % 5 for a in v)


def q_value(v):
    """q(v) encoded as an integer mod 10; value n means n/5 mod 2Z."""
    xs = v[:5]
    y = v[5]
    return (6 * sum(x * x for x in xs) + 2 * y * y) % 10


def b_value(v, w):
    """b(v, w) = (q(v+w) - q(v) - q(w))/2, encoded mod 5 (n means n/5 mod Z)."""
    return (sum(a * b for a, b in zip(v[:5], w[:5])) + 2 * v[5] * w[5]) % 5


def y_normalized(y):
    y = y % 5
    return y if y <= 2 else 5 - y


@dataclass(frozen=True)
class DeltaType:
    a: int
    b: int
    y: int
    starred: bool

    @property
    def key(self):
        return (self.a, self.b, y_normalized(self.y))


def delta(v):
    """(a, b, y)-type: a counts coordinates in {1,4}, b counts {2,3}."""
    a = sum(1 for x in v[:5] if x % 5 in (1, 4))
    b = sum(1 for x in v[:5] if x % 5 in (2, 3))
    y = v[5] % 5
    return DeltaType(a=a, b=b, y=y, starred=(a, b, y_normalized(y)) in STARRED_TYPES)


# ---------------------------------------------------------------------------
# The symmetry group of the fundamental system: {+-1}^5 semidirect S5
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AutElement:
    """x'_i = signs[i] * x[perm[i]], y fixed."""

    signs: tuple
    perm: tuple


AUT_IDENTITY = AutElement(signs=(1,) * 5, perm=(0, 1, 2, 3, 4))


@lru_cache(maxsize=1)
def all_aut():
    """The full group, 3840 elements, in a fixed order."""
    out = []
    for signs in itertools.product((1, -1), repeat=5):
        for perm in itertools.permutations(range(5)):
            out.append(AutElement(signs=signs, perm=perm))
    return tuple(out)


def aut_apply(g, v):
    xs = tuple((g.signs[i] * v[g.perm[i]]) % 5 for i in range(5))
    return xs + (v[5] % 5,)


def aut_compose(g, h):
    """Composite applying h first, then g."""
    signs = tuple(g.signs[i] * h.signs[g.perm[i]] for i in range(5))
    perm = tuple(h.perm[g.perm[i]] for i in range(5))
    return AutElement(signs=signs, perm=perm)


# ---------------------------------------------------------------------------
# Isotropic subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsotropicSubgroup:
    """A totally isotropic subgroup of (G, q), given by independent generators."""

    gens: tuple

    def __post_init__(self):
        gens = tuple(tuple(int(x) % 5 for x in g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        if any(len(g) != 6 for g in gens):
            raise ValueError("generators must have six coordinates")
        elems = self.elements()
        if len(elems) != 5 ** len(gens):
            raise ValueError("generators are not independent")
        bad = [v for v in elems if q_value(v) != 0]
        if bad:
            raise ValueError(f"subgroup is not totally isotropic at {bad[0]}")

    @property
    def dim(self):
        return len(self.gens)

    def elements(self):
        elems = {(0,) * 6}
        for g in self.gens:
            elems = {g_add(v, g_scale(c, g)) for v in elems for c in range(5)}
        return tuple(sorted(elems))


def condition_II(subgroup):
    """True iff every element (including 0) has a starred (a,b,y)-type."""
    return all(delta(v).starred for v in subgroup.elements())


def subgroup_overlattice(subgroup):
    """The even overlattice of the model lattice determined by the subgroup."""
    return overlattice_from_generators(
        build_S0(), [lift_to_dual(g) for g in subgroup.gens])


# ---------------------------------------------------------------------------
# Vectorized element tables
# ---------------------------------------------------------------------------

_POW = np.array([1, 5, 25, 125, 625, 3125], dtype=np.int64)


def encode(v):
    return int(sum(int(v[i]) * int(_POW[i]) for i in range(6)))


def decode(e):
    out = []
    for _ in range(6):
        out.append(int(e % 5))
        e //= 5
    return tuple(out)


@lru_cache(maxsize=1)
def _tables():
    enc = np.arange(5 ** 6, dtype=np.int64)
    digits = np.stack([(enc // int(_POW[i])) % 5 for i in range(6)], axis=1)
    xs = digits[:, :5]
    ys = digits[:, 5]
    qenc = (6 * (xs * xs).sum(axis=1) + 2 * ys * ys) % 10
    a_cnt = np.isin(xs, (1, 4)).sum(axis=1)
    b_cnt = np.isin(xs, (2, 3)).sum(axis=1)
    yn = np.minimum(ys, 5 - ys) % 5
    star_arr = np.zeros((6, 6, 3), dtype=bool)
    for (a, b, y) in STARRED_TYPES:
        star_arr[a, b, y] = True
    starred = star_arr[a_cnt, b_cnt, yn]
    return {
        "digits": digits, "q": qenc, "a": a_cnt, "b": b_cnt, "yn": yn,
        "starred": starred, "iso": qenc == 0,
    }


@lru_cache(maxsize=1)
def _aut_arrays():
    auts = all_aut()
    perms = np.array([g.perm for g in auts], dtype=np.int64)
    signs = np.array([[1 if s == 1 else 4 for s in g.signs] for g in auts],
                     dtype=np.int64)
    return perms, signs


def _orbit_images(elem_digits):
    """Encodings of g(M) for every group element g: shape (3840, m), rows sorted.

    `elem_digits` is an (m, 6) integer array of [x1..x5, y] rows.
    """
    perms, signs = _aut_arrays()
    xs = elem_digits[:, :5]
    ys = elem_digits[:, 5]
    moved = xs[:, perms]                       # (m, 3840, 5)
    moved = (moved * signs[None, :, :]) % 5
    enc = np.tensordot(moved, _POW[:5], axes=([2], [0]))   # (m, 3840)
    enc = enc + (ys * 3125)[:, None]
    images = np.sort(enc.T, axis=1)
    return images


def canonical_key(subgroup):
    """Orbit-invariant key: the minimum over the symmetry group of the sorted
    element list of the image subgroup, serialized to bytes."""
    elems = subgroup.elements()
    digits = np.array(elems, dtype=np.int64)
    images = _orbit_images(digits)
    # lexicographic minimum row
    order = np.lexsort(images.T[::-1])
    best = images[order[0]]
    return best.astype(np.int64).tobytes()


# ---------------------------------------------------------------------------
# Enumeration of isotropic subgroups
# ---------------------------------------------------------------------------

def _line_representatives():
    """Minimal encoding of each isotropic line (4 nonzero scalar multiples)."""
    t = _tables()
    iso_nonzero = np.nonzero(t["iso"])[0]
    iso_nonzero = iso_nonzero[iso_nonzero != 0]
    digits = t["digits"][iso_nonzero]
    best = iso_nonzero.copy()
    for c in (2, 3, 4):
        enc_c = ((digits * c) % 5) @ _POW
        best = np.minimum(best, enc_c)
    reps = np.unique(best)
    return reps


def _isotropic_planes():
    """All totally isotropic 2-dimensional subgroups.

    Returns (planes, gen_pairs): `planes` is an (N, 25) array of sorted
    element encodings, `gen_pairs` an (N, 2) array of generator encodings.
    """
    t = _tables()
    reps = _line_representatives()
    digits = t["digits"][reps]
    weights = digits.copy()
    weights[:, 5] = (2 * weights[:, 5]) % 5
    pair_b = (digits @ weights.T) % 5
    iu = np.triu_indices(len(reps), k=1)
    ok = pair_b[iu] == 0
    vi = reps[iu[0][ok]]
    vj = reps[iu[1][ok]]
    di = t["digits"][vi]
    dj = t["digits"][vj]
    coef = np.array([(a, b) for a in range(5) for b in range(5)],
                    dtype=np.int64)
    elems = (coef[None, :, 0, None] * di[:, None, :]
             + coef[None, :, 1, None] * dj[:, None, :]) % 5
    enc = np.tensordot(elems, _POW, axes=([2], [0]))
    enc = np.sort(enc, axis=1)
    planes, first = np.unique(enc, axis=0, return_index=True)
    gen_pairs = np.stack([vi[first], vj[first]], axis=1)
    return planes, gen_pairs


def max_isotropic_dimension():
    """Largest F5-dimension of a totally isotropic subgroup, by exhaustive
    extension search over every isotropic plane."""
    t = _tables()
    planes, gen_pairs = _isotropic_planes()
    if len(planes) == 0:
        return 1 if len(_line_representatives()) else 0
    iso = np.nonzero(t["iso"])[0]
    iso_digits = t["digits"][iso]
    for start in range(0, len(planes), 256):
        pairs = gen_pairs[start:start + 256]
        gd = t["digits"][pairs.reshape(-1)]
        w = gd.copy()
        w[:, 5] = (2 * w[:, 5]) % 5
        b_vals = (iso_digits @ w.T) % 5
        b_vals = b_vals.reshape(len(iso), -1, 2)
        orth = (b_vals == 0).all(axis=2)
        counts = orth.sum(axis=0)
        if np.any(counts > 25):
            return 3
    return 2


@dataclass(frozen=True)
class ClassifiedOrbit:
    label: str
    gens: tuple
    dim: int
    disc_exp: int
    sigma: int
    root_type: str
    e_empty: bool

    def to_json_dict(self):
        return {
            "label": self.label,
            "gens": [list(g) for g in self.gens],
            "dim": self.dim,
            "disc_exp": self.disc_exp,
            "sigma": self.sigma,
            "root_type": self.root_type,
            "E_empty": self.e_empty,
        }


def _subgroup_invariants(subgroup):
    s = subgroup_overlattice(subgroup)
    rt = root_type_orthogonal_to(s, H_PRIMAL)
    es = e_set(s, H_PRIMAL)
    disc_exp = 0
    x = -s.disc
    while x % 5 == 0:
        x //= 5
        disc_exp += 1
    return s, str(rt), len(es) == 0, disc_exp


def admissible_subgroups():
    """Every totally isotropic subgroup of dimension 0, 1, 2 on which all
    elements have starred types, in a deterministic enumeration order."""
    t = _tables()
    survivors = [IsotropicSubgroup(gens=())]
    starred = t["starred"]
    for rep in _line_representatives():
        digits = t["digits"][rep]
        encs = [((digits * c) % 5) @ _POW for c in range(1, 5)]
        if all(starred[int(e)] for e in encs):
            survivors.append(IsotropicSubgroup(gens=(tuple(int(x) for x in digits),)))
    planes, gen_pairs = _isotropic_planes()
    plane_ok = starred[planes].all(axis=1)
    for idx in np.nonzero(plane_ok)[0]:
        g1 = decode(int(gen_pairs[idx][0]))
        g2 = decode(int(gen_pairs[idx][1]))
        survivors.append(IsotropicSubgroup(gens=(g1, g2)))
    return survivors


def classify_isotropic_subgroups(jobs=1):
    """Orbit representatives of the admissible isotropic subgroups.

    Enumerates every totally isotropic subgroup of dimension 0, 1, 2,
    keeps those on which every element has a starred type, and
    deduplicates up to the symmetry group (sweeping out whole orbits with
    the same vectorized image machinery that backs `canonical_key`).
    Representatives matching a reference subgroup H_0..H_8 carry its label
    and generator set.
    """
    survivors = admissible_subgroups()
    seen = set()
    reps = []
    for sub in survivors:
        elems = sub.elements()
        digits = np.array(elems, dtype=np.int64)
        own = np.sort(digits @ _POW).astype(np.int64).tobytes()
        if own in seen:
            continue
        reps.append(sub)
        images = _orbit_images(digits)
        for row in images:
            seen.add(row.astype(np.int64).tobytes())

    reference_keys = {}
    for label, gens in REFERENCE_SUBGROUPS.items():
        reference_keys[canonical_key(IsotropicSubgroup(gens=gens))] = label

    work = []
    for sub in reps:
        label = reference_keys.get(canonical_key(sub))
        if label is not None:
            sub = IsotropicSubgroup(gens=REFERENCE_SUBGROUPS[label])
        work.append((label, sub))

    jobs = max(1, int(jobs))
    subs = [sub for _label, sub in work]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            invariants = pool.map(_subgroup_invariants, subs)
    else:
        invariants = [_subgroup_invariants(sub) for sub in subs]

    records = []
    for (label, sub), (_s, rt, e_empty, disc_exp) in zip(work, invariants):
        records.append(ClassifiedOrbit(
            label=label if label is not None else "unmatched",
            gens=sub.gens,
            dim=sub.dim,
            disc_exp=disc_exp,
            sigma=disc_exp // 2,
            root_type=rt,
            e_empty=e_empty,
        ))
    records.sort(key=lambda r: (r.dim, r.label))
    return records


# ---------------------------------------------------------------------------
# The isotropy table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsotropyRow:
    a: int
    b: int
    y: int                 # normalized to {0, 1, 2}
    plus_minus: bool       # both y and -y occur (y != 0)
    starred: bool
    representative: tuple
    disc_exp: int
    root_type: str
    e_empty: bool

    @property
    def type_label(self):
        y = f"±{self.y}" if self.plus_minus else f"{self.y}"
        return f"({self.a},{self.b},{y})"

    def to_json_dict(self):
        return {
            "type": [self.a, self.b, self.y],
            "pm": self.plus_minus,
            "starred": self.starred,
            "rep": list(self.representative),
            "disc_exp": self.disc_exp,
            "root_type": self.root_type,
            "E_empty": self.e_empty,
        }


def isotropic_table(jobs=1):
    """One row per (a, b, +-y)-class of isotropic vectors; for each class the
    overlattice of one representative is built and its invariants computed."""
    t = _tables()
    iso = np.nonzero(t["iso"])[0]
    classes = {}
    for e in iso:
        e = int(e)
        key = (int(t["a"][e]), int(t["b"][e]), int(t["yn"][e]))
        if key not in classes or e < classes[key]:
            classes[key] = e
    rows = []
    work = sorted(classes.items())
    jobs = max(1, int(jobs))
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_isotropy_row_for, work)
    else:
        results = [_isotropy_row_for(item) for item in work]
    rows.extend(results)
    rows.sort(key=lambda r: (r.a, r.b, r.y))
    return rows


def _isotropy_row_for(item):
    key, e = item
    a, b, yn = key
    rep = decode(e)
    if e == 0:
        sub = IsotropicSubgroup(gens=())
    else:
        sub = IsotropicSubgroup(gens=(rep,))
    _s, rt, e_empty, disc_exp = _subgroup_invariants(sub)
    return IsotropyRow(
        a=a, b=b, y=yn,
        plus_minus=(yn != 0),
        starred=(a, b, yn) in STARRED_TYPES,
        representative=rep,
        disc_exp=disc_exp,
        root_type=rt,
        e_empty=e_empty,
    )


# ---------------------------------------------------------------------------
# Consistency of the encoded form with the built lattice
# ---------------------------------------------------------------------------

def _mod5_inverse(mat):
    n = len(mat)
    a = [[mat[i][j] % 5 for j in range(n)] + [1 if i == j else 0 for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] % 5), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, 5)
        a[col] = [(x * inv) % 5 for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % 5 for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class QConsistencyReport:
    passed: bool
    invariant_factors: tuple
    basis_is_isomorphism: bool
    n_checked: int
    mismatches: tuple          # encodings where formula and lattice disagree
    expansions: dict           # selected dual vectors in the reference basis

    def to_json_dict(self):
        return {
            "passed": self.passed,
            "invariant_factors": list(self.invariant_factors),
            "basis_is_isomorphism": self.basis_is_isomorphism,
            "n_checked": self.n_checked,
            "mismatches": [list(decode(e)) for e in self.mismatches],
            "expansions": {k: list(v) for k, v in self.expansions.items()},
        }


def verify_q_consistency():
    """Recompute the discriminant form of the built lattice from first
    principles and compare with the encoded formula on all of G.

    Also expands selected dual basis vectors (the deeper chain duals and
    the dual of l) in the reference basis; these are computed, never
    assumed.
    """
    from .intmat import fraction_inverse

    s0 = build_S0()
    dg = discriminant_group(s0)
    facs = dg.invariant_factors

    ginv = fraction_inverse([list(r) for r in s0.gram])
    n5 = [[x * 5 for x in row] for row in ginv]
    if any(x.denominator != 1 for row in n5 for x in row):
        raise ArithmeticError("5 * inverse Gram is not integral")
    n5 = np.array([[int(x) for x in row] for row in n5], dtype=np.int64)

    # reference basis: duals of the first root of each chain, then dual of h
    basis_dual = []
    for j in range(N_CHAINS):
        unit = [0] * RANK
        unit[CHAIN_LEN * j] = 1
        basis_dual.append(unit)
    unit = [0] * RANK
    unit[H_INDEX] = 1
    basis_dual.append(unit)

    t_rows = [dg.project(u) for u in basis_dual]
    square = all(len(r) == 6 for r in t_rows)
    tinv = _mod5_inverse([list(r) for r in t_rows]) if square else None
    basis_ok = square and tinv is not None

    mismatches = []
    n_checked = 0
    if basis_ok:
        tab = _tables()
        digits = tab["digits"]
        lift_mat = np.array(basis_dual, dtype=np.int64)     # (6, 22)
        d = digits @ lift_mat                               # (15625, 22)
        lattice_q = np.einsum("ij,jk,ik->i", d, n5, d) % 10
        diff = np.nonzero(lattice_q != tab["q"])[0]
        mismatches = [int(e) for e in diff]
        n_checked = int(len(digits))

    expansions = {}
    if basis_ok:
        targets = {"l": L_INDEX}
        for j in range(N_CHAINS):
            for i in range(2, CHAIN_LEN + 1):
                targets[f"e_{i}^({j + 1})"] = CHAIN_LEN * j + (i - 1)
        for name, idx in sorted(targets.items()):
            unit = [0] * RANK
            unit[idx] = 1
            proj = dg.project(unit)
            coords = tuple(
                sum(proj[i] * tinv[i][c] for i in range(6)) % 5
                for c in range(6))
            expansions[name] = coords

    passed = (facs == (5,) * 6) and basis_ok and not mismatches
    return QConsistencyReport(
        passed=passed,
        invariant_factors=facs,
        basis_is_isomorphism=basis_ok,
        n_checked=n_checked,
        mismatches=tuple(mismatches),
        expansions=expansions,
    )
