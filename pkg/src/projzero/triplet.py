"""Stable basis chains and projective multiplication matrices.

A triplet is (degree d, basis E of R_d, linear form l, matrices A_0..A_n)
where the map [a] -> [l a] from R_d onto R_{d+1} is surjective. Row i of A_j
holds the coordinates of [x_j e_i] in the basis {[l e_k]} of R_{d+1}; in
particular sum_j coeff_j(l) A_j is the identity, which every constructor
here asserts.

Two degree policies are supported. first_surjective stops at the first
degree with hf(d) >= hf(d+1) and a surjective l, which is all the variety
computation needs. certified_stable additionally waits for the Gotzmann
certificate, after which hf is provably constant and the matrices are
independent of the degree at which they are rebuilt.
"""

import random
from dataclasses import dataclass

from .errors import (ArtinianQuotient, CapExceeded, DegreeTooLow,
                     NoSurjectionFound)
from .linalg import Matrix, rref, solve_in_rowspace, vec_matmul
from .polyring import Form, MonomialOrder
from .quotient import (DegreePiece, IdealPresentation, hilbert_scan,
                       ideal_piece, standard_coords)


@dataclass(frozen=True)
class TripletOptions:
    degree_policy: str = "first_surjective"  # or "certified_stable"
    seed: int = 0
    max_degree: int | None = None
    strategy: str = "random"  # or "exhaustive" (prime fields only)
    max_trials: int = 200
    linear_form: Form | None = None  # explicit l, skips the search


@dataclass
class Triplet:
    d: int
    E: list            # basis forms of R_d (standard monomials, possibly a subset)
    E_monomials: list
    l: Form
    F: list            # the forms l*e_i, a basis of R_{d+1}
    A: list            # n+1 multiplication matrices, one per variable
    hf_prefix: list    # hf(0..d+1)
    surjective_certified: bool  # hf(d) == hf(d+1) and the l-map has full rank
    stable_certified: bool      # d >= Gotzmann stabilization degree
    piece_d: DegreePiece
    piece_d1: DegreePiece
    l_matrix: Matrix   # rows: nf(l*s_i) over standard monomials of R_{d+1}
    basis_rows: list   # indices into standard monomials of R_d picked for E
    order: MonomialOrder

    @property
    def size(self):
        return len(self.E)


def l_map_matrix(l: Form, piece_d: DegreePiece, piece_d1: DegreePiece) -> Matrix:
    """Matrix of multiplication by l from R_d to R_{d+1}.

    Rows are indexed by the standard monomials of R_d, columns by those of
    R_{d+1}; entries are normal-form coordinates.
    """
    field = l.field
    rows = []
    for s in piece_d.standard_monomials:
        prod = l * Form.monomial(field, l.nvars, s)
        rows.append(standard_coords(prod, piece_d1))
    return Matrix(field, rows, ncols=len(piece_d1.standard_monomials))


def _surjective(l, piece_d, piece_d1):
    target = len(piece_d1.standard_monomials)
    L = l_map_matrix(l, piece_d, piece_d1)
    return L if L.rank() == target else None


def _random_linear(field, nvars, rng):
    pool = field.sample_pool()
    while True:
        coeffs = [pool[rng.randrange(len(pool))] for _ in range(nvars)]
        if any(not field.is_zero(c) for c in coeffs):
            return Form(field, nvars, 1,
                        {tuple(1 if k == i else 0 for k in range(nvars)): c
                         for i, c in enumerate(coeffs) if not field.is_zero(c)})


def normalized_linear_forms(field, nvars):
    """All linear forms with first nonzero coefficient 1 (prime fields only)."""
    if field.size is None:
        raise ValueError("exhaustive enumeration needs a finite field")
    for lead in range(nvars):
        tail = nvars - lead - 1
        counters = [0] * tail
        while True:
            coeffs = [field.zero] * lead + [field.one] + [
                field.from_int(c) for c in counters]
            yield Form(field, nvars, 1,
                       {tuple(1 if k == i else 0 for k in range(nvars)): c
                        for i, c in enumerate(coeffs) if not field.is_zero(c)})
            i = tail - 1
            while i >= 0 and counters[i] == field.size - 1:
                counters[i] = 0
                i -= 1
            if i < 0:
                break
            counters[i] += 1


def find_surjective_linear(I: IdealPresentation, piece_d: DegreePiece,
                           piece_d1: DegreePiece, strategy="random",
                           seed=0, max_trials=200) -> Form:
    """Find l with [l] R_d = R_{d+1} by random draws or exhaustive search."""
    hf_d, hf_d1 = len(piece_d.standard_monomials), len(piece_d1.standard_monomials)
    if not hf_d >= hf_d1 > 0:
        raise ValueError(f"need hf(d) >= hf(d+1) > 0, got {hf_d}, {hf_d1}")
    field = I.field
    if strategy == "exhaustive":
        trials = 0
        for l in normalized_linear_forms(field, I.nvars):
            trials += 1
            if _surjective(l, piece_d, piece_d1) is not None:
                return l
        raise NoSurjectionFound(trials, degree=piece_d.d)
    rng = random.Random(seed)
    for _ in range(max_trials):
        l = _random_linear(field, I.nvars, rng)
        if _surjective(l, piece_d, piece_d1) is not None:
            return l
    raise NoSurjectionFound(max_trials, degree=piece_d.d)


def multiplication_matrix(f: Form, E_forms, F_forms, I: IdealPresentation,
                          order: MonomialOrder, piece_target=None) -> Matrix:
    """Matrix of [a] -> [f a] with respect to explicit bases E and F.

    Row i holds the coordinates of nf(f * e_i) in {nf(F_k)}. Raises if some
    image falls outside the span of F (then F was not a basis).
    """
    target_degree = E_forms[0].degree + f.degree
    if piece_target is None:
        piece_target = ideal_piece(I, target_degree, order)
    field = I.field
    basis = Matrix(field, [standard_coords(g, piece_target) for g in F_forms],
                   ncols=len(piece_target.standard_monomials))
    rows = []
    for e in E_forms:
        y = standard_coords(f * e, piece_target)
        c = solve_in_rowspace(y, basis)
        if c is None:
            raise ValueError("image of basis element outside the span of F")
        rows.append(c)
    return Matrix(field, rows, ncols=len(F_forms))


def _assemble(I, order, d, l, piece_d, piece_d1, L, hf_prefix, stable):
    field = I.field
    target = len(piece_d1.standard_monomials)
    # pivot columns of L^T pick the earliest independent row subset of L
    _, _, basis_rows = rref(L.transpose())
    E_mon = [piece_d.standard_monomials[i] for i in basis_rows]
    E = [Form.monomial(field, I.nvars, m) for m in E_mon]
    F = [l * e for e in E]
    L_E = Matrix(field, [L.rows[i] for i in basis_rows], ncols=target)
    L_E_inv = L_E.inverse()
    A = []
    for j in range(I.nvars):
        xj = Form.variable(field, I.nvars, j)
        M_j = Matrix(field, [standard_coords(xj * e, piece_d1) for e in E],
                     ncols=target)
        A.append(M_j @ L_E_inv)
    trip = Triplet(d=d, E=E, E_monomials=E_mon, l=l, F=F, A=A,
                   hf_prefix=hf_prefix,
                   surjective_certified=(len(piece_d.standard_monomials) == target),
                   stable_certified=stable,
                   piece_d=piece_d, piece_d1=piece_d1, l_matrix=L,
                   basis_rows=basis_rows, order=order)
    assert l_combination(trip) == Matrix.identity(field, target)
    return trip


def l_combination(triplet: Triplet) -> Matrix:
    """sum_j coeff_j(l) A_j, which must equal the identity."""
    field = triplet.l.field
    n = triplet.A[0].nrows
    acc = Matrix.zero(field, n, n)
    for mono, c in triplet.l.terms.items():
        j = mono.index(1)
        acc = acc + triplet.A[j].scale(c)
    return acc


def build_triplet(I: IdealPresentation, order: MonomialOrder,
                  options: TripletOptions = TripletOptions()) -> Triplet:
    """Scan degrees, find a surjective linear form and assemble the matrices."""
    cap = I.default_cap() if options.max_degree is None else options.max_degree
    start = 0
    stable_from = None
    if options.degree_policy == "certified_stable":
        scan = hilbert_scan(I, order, cap)
        if scan.artinian:
            raise ArtinianQuotient("empty variety; no triplet exists")
        start = scan.stabilization_degree
        stable_from = scan.stabilization_degree
    elif options.degree_policy != "first_surjective":
        raise ValueError(f"unknown degree policy {options.degree_policy!r}")

    hf = [ideal_piece(I, d, order).hf for d in range(start)]
    piece_d = ideal_piece(I, start, order)
    hf.append(piece_d.hf)
    saw_candidate = False
    last_error = None
    for d in range(start, cap + 1):
        piece_d1 = ideal_piece(I, d + 1, order)
        hf.append(piece_d1.hf)
        if piece_d.hf >= piece_d1.hf:
            if piece_d1.hf == 0:
                raise ArtinianQuotient("empty variety; no triplet exists")
            saw_candidate = True
            l = options.linear_form
            if l is not None:
                L = _surjective(l, piece_d, piece_d1)
                if L is not None:
                    return _assemble(I, order, d, l, piece_d, piece_d1, L,
                                     hf[:d + 2],
                                     stable_from is not None and d >= stable_from)
                last_error = NoSurjectionFound(1, degree=d)
            else:
                try:
                    l = find_surjective_linear(
                        I, piece_d, piece_d1, strategy=options.strategy,
                        seed=options.seed, max_trials=options.max_trials)
                    L = _surjective(l, piece_d, piece_d1)
                    return _assemble(I, order, d, l, piece_d, piece_d1, L,
                                     hf[:d + 2],
                                     stable_from is not None and d >= stable_from)
                except NoSurjectionFound as exc:
                    last_error = exc  # K2 failed: compute one more degree
        piece_d = piece_d1
    if saw_candidate:
        raise last_error or NoSurjectionFound(0, degree=cap)
    raise CapExceeded(hf, cap)


def rebuild_at_next_degree(triplet: Triplet, I: IdealPresentation,
                           order: MonomialOrder):
    """Recompute the matrices one degree up, with bases {l e_i} and {l^2 e_i}.

    For a triplet built at a degree where the Hilbert function has stabilized
    this returns entry-identical matrices.
    """
    E_up = list(triplet.F)
    F_up = [triplet.l * g for g in E_up]
    piece = ideal_piece(I, triplet.d + 2, order)
    out = []
    for j in range(I.nvars):
        xj = Form.variable(I.field, I.nvars, j)
        out.append(multiplication_matrix(xj, E_up, F_up, I, order,
                                         piece_target=piece))
    return out


@dataclass
class FastNormalForm:
    coords: list       # coordinates in the basis {l^k e_i}
    k: int             # power of l
    basis_label: str
    form: Form         # the represented element, expanded


def _split_monomial(mono, d, order: MonomialOrder):
    """Split mono = a*b with deg b = d, taking b from the least significant
    variables of the ranking first."""
    b = [0] * len(mono)
    need = d
    for idx in reversed(order.ranking):
        take = min(need, mono[idx])
        b[idx] = take
        need -= take
        if need == 0:
            break
    a = tuple(m - x for m, x in zip(mono, b))
    return a, tuple(b)


def fast_normal_form(f: Form, triplet: Triplet, linear_schedule=False) -> FastNormalForm:
    """Normal form of a high-degree form as coordinates in {l^k e_i}.

    Each monomial is split as a*b with deg b = triplet.d; nf(b) is computed
    by Macaulay reduction at degree d and the coordinate row is then pushed
    up by the matrices, one variable at a time (binary powers by default,
    or one multiplication per step with linear_schedule, matching the
    naive O(|a| m^3) schedule).
    """
    if f.degree < triplet.d:
        raise DegreeTooLow(
            f"form degree {f.degree} below triplet degree {triplet.d}")
    field = f.field
    order = triplet.order
    m = triplet.size
    k = f.degree - triplet.d
    std = triplet.piece_d.standard_monomials
    pos_of_basis = {mono: i for i, mono in enumerate(triplet.E_monomials)}
    total = [field.zero] * m
    powers_cache = {}
    for mono, coeff in f.terms.items():
        a, b = _split_monomial(mono, triplet.d, order)
        nf_b = standard_coords(Form.monomial(field, f.nvars, b), triplet.piece_d)
        row = [field.zero] * m
        for s, c in zip(std, nf_b):
            if field.is_zero(c):
                continue
            if s not in pos_of_basis:
                raise ValueError(
                    "nf of the split tail leaves the span of E; "
                    "rebuild the triplet at a degree with hf(d) = hf(d+1)")
            row[pos_of_basis[s]] = c
        for j, e in enumerate(a):
            if e == 0:
                continue
            if linear_schedule:
                for _ in range(e):
                    row = vec_matmul(row, triplet.A[j])
            else:
                key = (j, e)
                if key not in powers_cache:
                    powers_cache[key] = triplet.A[j].mat_pow(e)
                row = vec_matmul(row, powers_cache[key])
        total = [field.add(t, field.mul(coeff, r)) for t, r in zip(total, row)]

    lk = triplet.l.power(k)
    rep = Form.zero(field, f.nvars, f.degree)
    for c, e in zip(total, triplet.E):
        if not field.is_zero(c):
            rep = rep + (lk * e).scale(c)
    label = f"l^{k} * e_i" if k else "e_i"
    return FastNormalForm(coords=total, k=k, basis_label=label, form=rep)
