"""Linear maps of V = GF(p)^n whose restriction to an invariant subspace W
lies in a prescribed semigroup S(W): construction, classification
predicates and constructive witnesses.

As on the transformation side, semigroup-level predicates look only at
(p, n, W, S(W)); the full semigroup is built solely for oracle
cross-checks and element classification.
"""

from __future__ import annotations

from itertools import product

from .gflinear import (
    GFMatrix,
    Subspace,
    all_vectors,
    canonical_transversal_subspace,
    image_space,
    independent_extension,
    mat_inverse,
    restriction_matrix,
    restricted_image_space,
    solve_row_vector,
    unit_rows,
)
from .semigroups import (
    FiniteSemigroup,
    PropertyVerdict,
    SizeCapExceeded,
    element_oracle,
    generate,
    semigroup_oracle,
)

L_SEMIGROUP_MODES = ("regular", "inverse", "unit_regular", "completely_regular")
L_ELEMENT_MODES = ("regular", "unit_regular")


class LInstance:
    """Prime p, ambient dimension n, a subspace W and a closed S(W).

    Elements of ``s_w`` are dim(W) x dim(W) coordinate matrices in W's
    canonical basis.  dim(W) = 0 is fully supported: S(W) is then the
    trivial group of the 0 x 0 matrix and the build is all of L(V).
    """

    def __init__(self, p: int, n: int, w: Subspace, s_w: FiniteSemigroup) -> None:
        if w.p != p or w.ambient_dim != n:
            raise ValueError("dimension mismatch")
        k = w.dim
        for el in s_w.elements:
            if not isinstance(el, GFMatrix) or el.p != p or el.rows != k or el.cols != k:
                raise ValueError("S(W) elements must be dim(W) x dim(W) matrices over GF(p)")
        self.p = p
        self.n = n
        self.w = w
        self.s_w = s_w
        self.has_identity_w = GFMatrix.identity(p, k) in s_w
        self._complement_cols = [j for j in range(n) if j not in set(w.pivots)]
        basis_rows = list(w.basis) + [unit_rows(n)[j] for j in self._complement_cols]
        self._c_inv = mat_inverse(GFMatrix(p, basis_rows, cols=n)) if n else GFMatrix(p, (), cols=0)

    def __repr__(self) -> str:
        return (
            f"LInstance(p={self.p}, n={self.n}, dim W={self.w.dim}, |S(W)|={len(self.s_w)})"
        )

    def key(self) -> dict:
        return {
            "kind": "linear",
            "p": self.p,
            "n": self.n,
            "W": [list(r) for r in self.w.basis],
            "sW": sorted(el.to_text() for el in self.s_w.elements),
        }

    def lift_on_w(self, alpha: GFMatrix, v) -> tuple:
        """Apply the coordinate matrix alpha, as a map on W, to ambient v."""
        return self.w.from_coordinates(alpha.apply(self.w.coordinates(v)))

    def extension_matrix(self, alpha: GFMatrix, complement_images) -> GFMatrix:
        """The unique matrix restricting to alpha on W and sending the
        deterministic complement basis vectors to the given images."""
        rows = [self.w.from_coordinates(alpha.entries[i]) for i in range(self.w.dim)]
        rows.extend(tuple(v) for v in complement_images)
        if self.n == 0:
            return GFMatrix(self.p, (), cols=0)
        return self._c_inv * GFMatrix(self.p, rows, cols=self.n)


def l_instance_from_dict(data: dict, *, close: bool = False) -> LInstance:
    """Build an LInstance from its JSON form (spanning rows for W; ``sW``
    holds ``elements`` or ``generators`` of dim(W)-sized matrices)."""
    p = int(data["p"])
    n = int(data["n"])
    w = Subspace(p, n, data["W"])
    block = data["sW"]
    if "generators" in block:
        s_w = generate([GFMatrix(p, g, cols=w.dim) for g in block["generators"]])
    else:
        elems = [GFMatrix(p, e, cols=w.dim) for e in block["elements"]]
        s_w = generate(elems) if close else FiniteSemigroup(elems)
    return LInstance(p, n, w, s_w)


def build_lsw(inst: LInstance, size_cap: int = 1_000_000) -> FiniteSemigroup:
    """Enumerate every linear map on V whose restriction to W lies in S(W).

    Exactly one extension exists for each alpha in S(W) and each
    assignment of the n - dim(W) complement basis vectors, so the result
    has |S(W)| * p^(n(n-k)) elements.
    """
    p, n, k = inst.p, inst.n, inst.w.dim
    count = len(inst.s_w) * p ** (n * (n - k))
    if count > size_cap:
        raise SizeCapExceeded("size cap exceeded")
    if k == n:
        return inst.s_w  # W = V: the build is S(W) itself, table reused
    vectors = all_vectors(p, n)
    out = []
    for alpha in inst.s_w.elements:
        for assignment in product(vectors, repeat=n - k):
            out.append(inst.extension_matrix(alpha, assignment))
    s = FiniteSemigroup(out)
    if len(s) != count:
        raise AssertionError("build size disagrees with the counting formula")
    return s


def restriction_to_w(inst: LInstance, f: GFMatrix) -> GFMatrix:
    """f restricted to W as a coordinate matrix, raising if f is not a member."""
    if f.p != inst.p or f.rows != inst.n or f.cols != inst.n:
        raise ValueError("f not in L_S(W)(V): wrong ambient size")
    try:
        alpha = restriction_matrix(f, inst.w)
    except ValueError:
        raise ValueError("f not in L_S(W)(V): W is not invariant") from None
    if alpha not in inst.s_w:
        raise ValueError("f not in L_S(W)(V): restriction outside S(W)")
    return alpha


def thm_element_l(inst: LInstance, f: GFMatrix, mode: str) -> PropertyVerdict:
    """Element classification via the characterization, not via search.

    regular:      f|W regular in S(W)  and  R(f) meet W = R(f|W), compared
                  as canonical subspaces.  On success a pseudo-inverse h
                  with fhf = f is assembled and verified.
    unit_regular: f|W unit-regular in S(W), the same image-trace equality,
                  and codim(W + U) = codim(W + R(f)) for the canonical
                  transversal subspace U.  On success an invertible g with
                  fgf = f is assembled and verified.
    """
    alpha = restriction_to_w(inst, f)
    rf = image_space(f)
    r_meet_w = rf.intersect(inst.w)
    trace_ok = r_meet_w == restricted_image_space(f, inst.w)
    if mode == "regular":
        reg = element_oracle(inst.s_w, alpha, "regular")
        if reg.holds and trace_ok:
            witness = _regular_witness_l(inst, f, reg.witness, rf, r_meet_w)
            return PropertyVerdict(mode, True, witness=witness,
                                   clause="restriction regular and image trace matches")
        clause = "restriction not regular in S(W)" if not reg.holds else "image trace differs"
        return PropertyVerdict(mode, False, clause=clause)
    if mode == "unit_regular":
        if not inst.has_identity_w:
            raise ValueError("identity required")
        ur = element_oracle(inst.s_w, alpha, "unit_regular")
        tr = canonical_transversal_subspace(f, inst.w)
        codim_u = inst.w.sum(tr.u).codim
        codim_r = inst.w.sum(rf).codim
        holds = ur.holds and trace_ok and codim_u == codim_r
        if not holds:
            if not ur.holds:
                clause = "restriction not unit-regular in S(W)"
            elif not trace_ok:
                clause = "image trace differs"
            else:
                clause = f"complement codimensions differ ({codim_u} vs {codim_r})"
            return PropertyVerdict(mode, False, clause=clause)
        witness = _unit_regular_witness_l(inst, f, ur.witness, tr.u, rf, r_meet_w)
        return PropertyVerdict(mode, True, witness=witness,
                               clause="all three element conditions hold")
    raise ValueError(f"unknown element mode {mode!r}")


def _basis_chain(inst: LInstance, rf: Subspace, r_meet_w: Subspace):
    """Deterministic bases B1 (of R(f) meet W), B2 (extending to W), B3
    (extending B1 to R(f) inside R(f)) and B4 (completing to V)."""
    p, n = inst.p, inst.n
    b1 = list(r_meet_w.basis)
    b2 = independent_extension(p, n, b1, inst.w.basis)
    b3 = independent_extension(p, n, b1, rf.basis)
    b123 = b1 + b2 + b3
    b4 = independent_extension(p, n, b123, unit_rows(n))
    if len(b123) + len(b4) != n:
        raise AssertionError("basis chain does not span the ambient space")
    return b1, b2, b3, b4


def _regular_witness_l(inst, f, alpha_partner, rf, r_meet_w):
    """Pseudo-inverse h: the S(W)-partner on W, chosen preimages on the
    rest of R(f), zero on a complement of W + R(f)."""
    p, n = inst.p, inst.n
    b1, b2, b3, b4 = _basis_chain(inst, rf, r_meet_w)
    rows_c = b1 + b2 + b3 + b4
    rows_d = [inst.lift_on_w(alpha_partner, v) for v in b1 + b2]
    rows_d += [solve_row_vector(f, v) for v in b3]
    rows_d += [(0,) * n for _ in b4]
    h = _matrix_from_action(p, n, rows_c, rows_d)
    if restriction_matrix(h, inst.w) not in inst.s_w:
        raise AssertionError("regular witness leaves the semigroup")
    if f * h * f != f:
        raise AssertionError("regular witness fails fhf = f")
    return h


def _unit_regular_witness_l(inst, f, g0, u, rf, r_meet_w):
    """Invertible g: the S(W)-unit on W, the inverse of f's corestriction
    to U on the rest of R(f), and a deterministic matching between the
    complement bases of W + R(f) and W + U."""
    p, n = inst.p, inst.n
    b1, b2, b3, b4 = _basis_chain(inst, rf, r_meet_w)
    mu = GFMatrix(p, [f.apply(r) for r in u.basis], cols=n)

    def g1(v):
        coords = solve_row_vector(mu, v)  # unique: U is a transversal of ker(f)
        out = [0] * n
        for c, row in zip(coords, u.basis):
            for j, b in enumerate(row):
                out[j] = (out[j] + c * b) % p
        return tuple(out)

    c4 = independent_extension(p, n, inst.w.sum(u).basis, unit_rows(n))
    if len(c4) != len(b4):
        raise AssertionError("complement bases of W+R(f) and W+U differ in size")
    rows_c = b1 + b2 + b3 + b4
    rows_d = [inst.lift_on_w(g0, v) for v in b1 + b2]
    rows_d += [g1(v) for v in b3]
    rows_d += list(c4)
    g = _matrix_from_action(p, n, rows_c, rows_d)
    if not g.is_invertible():
        raise AssertionError("unit-regular witness is not invertible")
    if restriction_matrix(g, inst.w) not in inst.s_w:
        raise AssertionError("unit-regular witness leaves the semigroup")
    if f * g * f != f:
        raise AssertionError("unit-regular witness fails fgf = f")
    return g


def _matrix_from_action(p, n, basis_rows, image_rows) -> GFMatrix:
    """Matrix (standard coordinates, row action) of the map sending each
    basis row to its image row."""
    if n == 0:
        return GFMatrix(p, (), cols=0)
    c = GFMatrix(p, basis_rows, cols=n)
    d = GFMatrix(p, image_rows, cols=n)
    return mat_inverse(c) * d


def is_subgroup_of_aut(s: FiniteSemigroup) -> bool:
    """True when every matrix is invertible and the group oracle passes."""
    return all(el.is_invertible() for el in s.elements) and semigroup_oracle(s, "group").holds


def thm_semigroup_l(inst: LInstance, mode: str) -> PropertyVerdict:
    """Semigroup classification from (p, n, W, S(W)) alone.

    regular:            S(W) a subgroup of Aut(W),  or  S(W) regular and W = V.
    inverse:            S(W) inverse  and  (W = V or dim V = 1).
    unit_regular:       S(W) a subgroup of Aut(W) (codim W is finite here
                        by construction),  or  S(W) unit-regular and W = V.
    completely_regular: S(W) completely regular  and  (W = V,  or
                        codim W = 1 and S(W) a subgroup of Aut(W)).
    """
    s_w = inst.s_w
    w_is_v = inst.w.is_full()
    if mode == "regular":
        if is_subgroup_of_aut(s_w):
            return PropertyVerdict(mode, True, clause="S(W) is a subgroup of Aut(W)")
        if w_is_v and semigroup_oracle(s_w, "regular").holds:
            return PropertyVerdict(mode, True, clause="S(W) regular and W = V")
        return PropertyVerdict(mode, False, clause="neither clause holds")
    if mode == "inverse":
        shape_ok = w_is_v or inst.n == 1
        sw_ok = semigroup_oracle(s_w, "inverse").holds
        if sw_ok and shape_ok:
            clause = "S(W) inverse and " + ("W = V" if w_is_v else "dim V = 1")
            return PropertyVerdict(mode, True, clause=clause)
        clause = "S(W) not inverse" if not sw_ok else "W != V and dim V != 1"
        return PropertyVerdict(mode, False, clause=clause)
    if mode == "unit_regular":
        if not inst.has_identity_w:
            raise ValueError("identity required")
        if is_subgroup_of_aut(s_w):
            return PropertyVerdict(
                mode, True, clause="S(W) is a subgroup of Aut(W) and codim(W) is finite"
            )
        if w_is_v and semigroup_oracle(s_w, "unit_regular").holds:
            return PropertyVerdict(mode, True, clause="S(W) unit-regular and W = V")
        return PropertyVerdict(mode, False, clause="neither clause holds")
    if mode == "completely_regular":
        if not semigroup_oracle(s_w, "completely_regular").holds:
            return PropertyVerdict(mode, False, clause="S(W) not completely regular")
        if w_is_v:
            return PropertyVerdict(mode, True, clause="S(W) completely regular and W = V")
        if inst.w.codim == 1 and is_subgroup_of_aut(s_w):
            return PropertyVerdict(
                mode, True, clause="codim(W) = 1 and S(W) is a subgroup of Aut(W)"
            )
        return PropertyVerdict(mode, False, clause="W != V and the codim-1 clause fails")
    raise ValueError(f"unknown semigroup mode {mode!r}")


def alpha_family_check(inst: LInstance, size_cap: int = 1_000_000) -> PropertyVerdict:
    """For codim(W) = 1 and S(W) a group of units, the whole semigroup is
    the family of maps indexed by (z, lam): restrict to lam on W and send
    the distinguished complement vector x to z.  Verifies the family
    equals the build elementwise and that composition acts on indices by
    (z, lam)(z', del) = (x, lam.del) when z = x, and (y, lam)(z', del) =
    (y.del, lam.del) for y in W."""
    if inst.w.codim != 1 or not is_subgroup_of_aut(inst.s_w):
        raise ValueError("precondition violated")
    p, n = inst.p, inst.n
    x = unit_rows(n)[inst._complement_cols[0]]
    family = {}
    for lam in inst.s_w.elements:
        for z in all_vectors(p, n):
            family[(z, lam)] = inst.extension_matrix(lam, [z])
    build = build_lsw(inst, size_cap)
    if set(family.values()) != set(build.elements):
        return PropertyVerdict("alpha_family", False, clause="family differs from the build")
    for lam in inst.s_w.elements:
        for delta in inst.s_w.elements:
            if family[(x, lam)] * family[(x, delta)] != family[(x, lam * delta)]:
                return PropertyVerdict(
                    "alpha_family", False, witness=(x, lam, delta),
                    clause="fixed-point composition law fails",
                )
            for y in inst.w.vectors():
                y_delta = inst.lift_on_w(delta, y)
                for z in all_vectors(p, n):
                    if family[(y, lam)] * family[(z, delta)] != family[(y_delta, lam * delta)]:
                        return PropertyVerdict(
                            "alpha_family", False, witness=(y, z, lam, delta),
                            clause="index composition law fails",
                        )
    return PropertyVerdict(
        "alpha_family", True,
        clause=f"family of {len(family)} maps matches the build; both laws hold",
    )
