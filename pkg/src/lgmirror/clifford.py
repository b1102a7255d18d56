"""Clifford algebra of the (2m+1)-dimensional quadratic space and its spin module.

Basis vectors are indexed 1..2m+1 with bar(j) = 2m+2-j; the bilinear
pairing is <v_i, v_{2m+2-i}> = epsilon(i) = (-1)^{m+1-i}, so the defining
relations are  v_i vbar_i + vbar_i v_i = epsilon(i),  v_{m+1}^2 = 1/2,
all other generator pairs anticommuting.  The module provides

* sparse Clifford elements with exact Q(sqrt2) coefficients and the
  normalization-based product,
* the exterior algebra and the antisymmetrization isomorphisms alpha_+/-
  (with inverse), computed by the contraction recursion
  alpha(v ^ x) = v * alpha(x) - alpha(contract_v x),
* the spin representation on subsets of {1..m} and the induced
  identification of either parity of Cl(V) with End(V_Spin),
* the duality delta, the symmetric-square embedding iota, and the
  projection pi : Sym^2(V_Spin) -> wedge^{m+1} V built from the maps
  pr, c, d, all over exact scalars,
* the elements D_(j), N_(j) of Sym^2(V_Spin) that encode the quadratic
  denominators and numerators of the superpotential.

Sign convention for D_(j)/N_(j): the subset I contributes
(-1)^{boxes removed from rho_{m+1-j}}, i.e. (-1)^{|I|(m+2-j) + s(I)}
with s(I) the element sum.  The shorter-looking (-1)^{s(I)} agrees only
for odd m+1-j; the convention here is the one under which the LG(3)
middle superpotential term, the minor identities, and the projection
formulas are mutually consistent (enforced by the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from lgmirror import partitions as pt
from lgmirror.partitions import StrictPartition
from lgmirror.scalars import QS2_ONE, QS2_ZERO, QSqrt2

Subset = tuple[int, ...]


def epsilon(i: int, m: int) -> int:
    """(-1)^{m+1-i}; valid for every index 1..2m+1 (epsilon(2m+2-i) = epsilon(i))."""
    return -1 if (m + 1 - i) % 2 else 1


def bar(j: int, m: int) -> int:
    return 2 * m + 2 - j


def pairing(i: int, j: int, m: int) -> Fraction:
    """Phi(v_i, v_j) = epsilon(i)/2 when j = bar(i), else 0."""
    if i + j == 2 * m + 2:
        return Fraction(epsilon(i, m), 2)
    return Fraction(0)


# -- Clifford elements -------------------------------------------------------


@dataclass
class CliffordElement:
    """Sparse sum of ordered monomials v_S, S an ascending subset of 1..2m+1."""

    m: int
    coeffs: dict[Subset, QSqrt2] = field(default_factory=dict)

    def copy(self) -> CliffordElement:
        return CliffordElement(self.m, dict(self.coeffs))

    def add_term(self, key: Subset, c: QSqrt2) -> None:
        cur = self.coeffs.get(key)
        new = c if cur is None else cur + c
        if new:
            self.coeffs[key] = new
        else:
            self.coeffs.pop(key, None)

    def __add__(self, other: CliffordElement) -> CliffordElement:
        out = self.copy()
        for k, c in other.coeffs.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other: CliffordElement) -> CliffordElement:
        out = self.copy()
        for k, c in other.coeffs.items():
            out.add_term(k, -c)
        return out

    def scale(self, c: QSqrt2) -> CliffordElement:
        if not c:
            return CliffordElement(self.m)
        return CliffordElement(self.m, {k: v * c for k, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CliffordElement) and self.m == other.m and self.coeffs == other.coeffs

    def parity_part(self, parity: int) -> CliffordElement:
        return CliffordElement(
            self.m, {k: v for k, v in self.coeffs.items() if len(k) % 2 == parity}
        )

    def is_homogeneous_parity(self) -> bool:
        pars = {len(k) % 2 for k in self.coeffs}
        return len(pars) <= 1

    def dump(self) -> str:
        lines = [
            f"{c} * v{list(k)}"
            for k, c in sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))
        ]
        return "\n".join(lines) if lines else "0"


def cl_zero(m: int) -> CliffordElement:
    return CliffordElement(m)


def cl_scalar(c: QSqrt2, m: int) -> CliffordElement:
    out = CliffordElement(m)
    out.add_term((), c)
    return out


def cl_monomial(indices: Subset, m: int, c: QSqrt2 = QS2_ONE) -> CliffordElement:
    """The ordered product over the given index sequence (not necessarily sorted)."""
    out = CliffordElement(m)
    for key, coeff in _normalize(tuple(indices), m):
        out.add_term(key, c * QSqrt2.from_fraction(coeff))
    return out


def _normalize(word: tuple[int, ...], m: int) -> list[tuple[Subset, Fraction]]:
    """Rewrite an arbitrary generator word as a sum of ascending monomials."""
    out: dict[Subset, Fraction] = {}
    stack: list[tuple[Fraction, tuple[int, ...]]] = [(Fraction(1), word)]
    while stack:
        coeff, w = stack.pop()
        pos = next((i for i in range(len(w) - 1) if w[i] >= w[i + 1]), None)
        if pos is None:
            out[w] = out.get(w, Fraction(0)) + coeff
            continue
        a, b = w[pos], w[pos + 1]
        if a == b:
            # v_a^2 = Phi(v_a, v_a)
            stack.append((coeff * pairing(a, a, m), w[:pos] + w[pos + 2:]))
            continue
        # v_a v_b = 2 Phi(a,b) - v_b v_a
        phi = pairing(a, b, m)
        if phi:
            stack.append((coeff * 2 * phi, w[:pos] + w[pos + 2:]))
        stack.append((-coeff, w[:pos] + (b, a) + w[pos + 2:]))
    return [(k, v) for k, v in out.items() if v]


def clifford_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    m = x.m
    out = CliffordElement(m)
    for kx, cx in x.coeffs.items():
        for ky, cy in y.coeffs.items():
            c = cx * cy
            for key, coeff in _normalize(kx + ky, m):
                out.add_term(key, c * QSqrt2.from_fraction(coeff))
    return out


def commutator(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    return clifford_mul(x, y) - clifford_mul(y, x)


# -- exterior algebra ---------------------------------------------------------


@dataclass
class ExteriorElement:
    """Sparse multivector: ascending wedge monomials with Q(sqrt2) coefficients."""

    m: int
    coeffs: dict[Subset, QSqrt2] = field(default_factory=dict)

    def add_term(self, key: Subset, c: QSqrt2) -> None:
        cur = self.coeffs.get(key)
        new = c if cur is None else cur + c
        if new:
            self.coeffs[key] = new
        else:
            self.coeffs.pop(key, None)

    def __add__(self, other: ExteriorElement) -> ExteriorElement:
        out = ExteriorElement(self.m, dict(self.coeffs))
        for k, c in other.coeffs.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other: ExteriorElement) -> ExteriorElement:
        out = ExteriorElement(self.m, dict(self.coeffs))
        for k, c in other.coeffs.items():
            out.add_term(k, -c)
        return out

    def scale(self, c: QSqrt2) -> ExteriorElement:
        if not c:
            return ExteriorElement(self.m)
        return ExteriorElement(self.m, {k: v * c for k, v in self.coeffs.items()})

    def degree_part(self, k: int) -> ExteriorElement:
        return ExteriorElement(self.m, {s: c for s, c in self.coeffs.items() if len(s) == k})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExteriorElement) and self.m == other.m and self.coeffs == other.coeffs


def wedge_monomial(indices: Subset, m: int, c: QSqrt2 = QS2_ONE) -> ExteriorElement:
    """v_{i_1} ^ ... ^ v_{i_k} for distinct indices, sorted with the sorting sign."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return ExteriorElement(m)
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1, i, -1):
            if idx[j - 1] > idx[j]:
                idx[j - 1], idx[j] = idx[j], idx[j - 1]
                sign = -sign
    out = ExteriorElement(m)
    out.add_term(tuple(idx), c if sign > 0 else -c)
    return out


def _contract_vector(k: int, key: Subset, m: int) -> list[tuple[Subset, Fraction]]:
    """Interior product of v_k with a wedge monomial, via Phi."""
    out = []
    for pos, idx in enumerate(key):
        phi = pairing(k, idx, m)
        if phi:
            sign = -1 if pos % 2 else 1
            out.append((key[:pos] + key[pos + 1:], sign * phi))
    return out


def antisymmetrize(x: ExteriorElement) -> CliffordElement:
    """The Chevalley quantization map alpha: wedge V -> Cl(V).

    Computed by alpha(v_k ^ y) = v_k * alpha(y) - alpha(contract_{v_k} y);
    on a wedge monomial the image is the ordered Clifford monomial plus
    lower-degree corrections, so the map is filtration-triangular.
    """
    m = x.m
    out = CliffordElement(m)
    for key, c in x.coeffs.items():
        for mono, coeff in _alpha_monomial(key, m):
            out.add_term(mono, c * QSqrt2.from_fraction(coeff))
    return out


@lru_cache(maxsize=None)
def _alpha_monomial(key: Subset, m: int) -> tuple[tuple[Subset, Fraction], ...]:
    if len(key) <= 1:
        return ((key, Fraction(1)),)
    k, rest = key[0], key[1:]
    acc: dict[Subset, Fraction] = {}
    for mono, coeff in _alpha_monomial(rest, m):
        for mono2, coeff2 in _normalize((k,) + mono, m):
            acc[mono2] = acc.get(mono2, Fraction(0)) + coeff * coeff2
    for sub, phi in _contract_vector(k, rest, m):
        for mono, coeff in _alpha_monomial(sub, m):
            acc[mono] = acc.get(mono, Fraction(0)) - phi * coeff
    return tuple((s, c) for s, c in acc.items() if c)


def antisymmetrize_inv(x: CliffordElement) -> ExteriorElement:
    """Inverse of `antisymmetrize` on a parity-homogeneous element."""
    if not x.is_homogeneous_parity():
        raise ValueError("antisymmetrize_inv requires a purely even or odd element")
    m = x.m
    out = ExteriorElement(m)
    rest = x.copy()
    while rest.coeffs:
        top = max(len(k) for k in rest.coeffs)
        layer = ExteriorElement(m, {k: c for k, c in rest.coeffs.items() if len(k) == top})
        out = out + layer
        rest = rest - antisymmetrize(layer)
        if any(len(k) >= top for k in rest.coeffs):
            raise AssertionError("antisymmetrization failed to be triangular")
    return out


# -- the spin representation --------------------------------------------------


@dataclass
class SpinVector:
    """Element of wedge W, W = <v_1..v_m>: subset -> coefficient (any scalar ring).

    `dual` marks covectors; delta() produces them and iota() consumes them.
    """

    m: int
    coeffs: dict[Subset, object] = field(default_factory=dict)
    dual: bool = False

    def add_term(self, key: Subset, c) -> None:
        cur = self.coeffs.get(key)
        new = c if cur is None else cur + c
        if new:
            self.coeffs[key] = new
        else:
            self.coeffs.pop(key, None)

    def __add__(self, other: SpinVector) -> SpinVector:
        out = SpinVector(self.m, dict(self.coeffs), self.dual)
        for k, c in other.coeffs.items():
            out.add_term(k, c)
        return out

    def __sub__(self, other: SpinVector) -> SpinVector:
        out = SpinVector(self.m, dict(self.coeffs), self.dual)
        for k, c in other.coeffs.items():
            out.add_term(k, -c)
        return out

    def scale(self, c) -> SpinVector:
        return SpinVector(self.m, {k: v * c for k, v in self.coeffs.items()}, self.dual)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SpinVector)
            and (self.m, self.dual) == (other.m, other.dual)
            and self.coeffs == other.coeffs
        )


def basis_vector(subset: Subset, m: int, one=QS2_ONE) -> SpinVector:
    return SpinVector(m, {tuple(sorted(subset)): one})


def basis_vector_of(lam: StrictPartition, one=QS2_ONE) -> SpinVector:
    return basis_vector(pt.to_subset(lam), lam.m, one)


def spin_generator_action(k: int, vec: SpinVector) -> SpinVector:
    """Action of the Clifford generator v_k on the spin module.

    v_i creates, v_{m+1} scales by (-1)^{|I|}/sqrt2, vbar_j inserts via the
    linear form 2 Phi(vbar_j, .) on W.  Exact scalars only (sqrt2 appears).
    """
    m = vec.m
    out = SpinVector(m, {}, vec.dual)
    inv_sqrt2 = QSqrt2(0, Fraction(1, 2))
    for key, c in vec.coeffs.items():
        if k <= m:
            if k in key:
                continue
            smaller = sum(1 for i in key if i < k)
            sign = -1 if smaller % 2 else 1
            c2 = c if sign > 0 else -c
            out.add_term(tuple(sorted(key + (k,))), c2)
        elif k == m + 1:
            c2 = c * inv_sqrt2
            out.add_term(key, c2 if len(key) % 2 == 0 else -c2)
        else:
            j = bar(k, m)
            if j not in key:
                continue
            pos = key.index(j)
            sign = (-1 if pos % 2 else 1) * epsilon(j, m)
            c2 = c if sign > 0 else -c
            out.add_term(tuple(i for i in key if i != j), c2)
    return out


def spin_apply(x: CliffordElement, vec: SpinVector) -> SpinVector:
    m = x.m
    out = SpinVector(m, {}, vec.dual)
    for key, c in x.coeffs.items():
        cur = vec
        for k in reversed(key):
            cur = spin_generator_action(k, cur)
            if not cur.coeffs:
                break
        for s, cc in cur.coeffs.items():
            out.add_term(s, cc * c)
    return out


# -- End(V_Spin) --------------------------------------------------------------


@dataclass
class EndSpin:
    """Sparse 2^m x 2^m endomorphism, entries indexed by (row subset, col subset)."""

    m: int
    entries: dict[tuple[Subset, Subset], object] = field(default_factory=dict)

    def add_entry(self, row: Subset, col: Subset, c) -> None:
        cur = self.entries.get((row, col))
        new = c if cur is None else cur + c
        if new:
            self.entries[(row, col)] = new
        else:
            self.entries.pop((row, col), None)

    def __add__(self, other: EndSpin) -> EndSpin:
        out = EndSpin(self.m, dict(self.entries))
        for (r, c), v in other.entries.items():
            out.add_entry(r, c, v)
        return out

    def __sub__(self, other: EndSpin) -> EndSpin:
        out = EndSpin(self.m, dict(self.entries))
        for (r, c), v in other.entries.items():
            out.add_entry(r, c, -v)
        return out

    def scale(self, c) -> EndSpin:
        return EndSpin(self.m, {k: v * c for k, v in self.entries.items()})

    def compose(self, other: EndSpin) -> EndSpin:
        """Matrix product self . other."""
        by_row: dict[Subset, list[tuple[Subset, object]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = EndSpin(self.m)
        for (r, mid), v in self.entries.items():
            for c, w in by_row.get(mid, ()):
                out.add_entry(r, c, v * w)
        return out

    def commutator(self, other: EndSpin) -> EndSpin:
        return self.compose(other) - other.compose(self)

    def apply(self, vec: SpinVector) -> SpinVector:
        out = SpinVector(self.m, {}, vec.dual)
        for (r, c), v in self.entries.items():
            coeff = vec.coeffs.get(c)
            if coeff is not None:
                out.add_term(r, v * coeff)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EndSpin) and self.m == other.m and self.entries == other.entries


def end_identity(m: int, one=QS2_ONE) -> EndSpin:
    out = EndSpin(m)
    for s in pt.all_subsets(m):
        out.add_entry(s, s, one)
    return out


def clifford_to_end(x: CliffordElement) -> EndSpin:
    """The spin action as a matrix; an algebra isomorphism on either parity."""
    m = x.m
    out = EndSpin(m)
    for col in pt.all_subsets(m):
        image = spin_apply(x, basis_vector(col, m))
        for row, c in image.coeffs.items():
            out.add_entry(row, col, c)
    return out


# matrix units as Clifford elements: E_{L',L} = C_{L'} P_0 A_L with creation
# string C, vacuum projector P_0 = prod_i (eps(i) vbar_i v_i), annihilation
# string A; each maps w_L -> w_{L'} with coefficient exactly 1.


@lru_cache(maxsize=None)
def _vacuum_projector(m: int) -> CliffordElement:
    out = cl_scalar(QS2_ONE, m)
    for i in range(1, m + 1):
        factor = cl_monomial((bar(i, m), i), m, QSqrt2(epsilon(i, m)))
        out = clifford_mul(out, factor)
    return out


@lru_cache(maxsize=None)
def _matrix_unit_clifford(row: Subset, col: Subset, m: int) -> CliffordElement:
    creation = cl_monomial(tuple(sorted(row)), m)
    ann_word = []
    for i in sorted(col, reverse=True):
        ann_word.extend([bar(i, m)])
    annihilation = cl_monomial(tuple(ann_word), m)
    sign = QSqrt2(Fraction(1))
    for i in col:
        if epsilon(i, m) < 0:
            sign = -sign
    out = clifford_mul(creation, clifford_mul(_vacuum_projector(m), annihilation))
    return out.scale(sign)


@lru_cache(maxsize=None)
def _volume_element(m: int) -> tuple[CliffordElement, QSqrt2]:
    """Central antisymmetrized volume alpha(v_1 ^ ... ^ v_{2m+1}) and its spin scalar."""
    omega = antisymmetrize(wedge_monomial(tuple(range(1, 2 * m + 2)), m))
    image = spin_apply(omega, basis_vector((), m))
    z = image.coeffs.get((), QS2_ZERO)
    assert z, "volume element must act invertibly"
    return omega, z


def end_to_clifford(mat: EndSpin, parity: int) -> CliffordElement:
    """The unique preimage of `mat` in Cl^{parity}(V) under the spin action.

    Built from matrix units; components of the wrong parity are transported
    across by the central volume element, which changes parity and acts as
    an invertible scalar.
    """
    m = mat.m
    acc = CliffordElement(m)
    for (row, col), v in mat.entries.items():
        if not isinstance(v, QSqrt2):
            raise TypeError("end_to_clifford needs exact entries")
        acc = acc + _matrix_unit_clifford(row, col, m).scale(v)
    good = acc.parity_part(parity)
    wrong = acc.parity_part(1 - parity)
    if wrong.coeffs:
        omega, z = _volume_element(m)
        good = good + clifford_mul(omega, wrong).scale(z.inverse())
    return good


# -- duality, Sym^2 and the projection pi ------------------------------------


def delta(vec: SpinVector) -> SpinVector:
    """w_lambda -> (-1)^{|lambda|} w*_{PD(lambda)} extended linearly."""
    if vec.dual:
        raise ValueError("delta is defined on V_Spin, not its dual")
    m = vec.m
    out = SpinVector(m, {}, dual=True)
    for key, c in vec.coeffs.items():
        lam = pt.from_subset(key, m)
        dual_key = pt.to_subset(pt.pd(lam))
        out.add_term(dual_key, c if lam.size % 2 == 0 else -c)
    return out


@dataclass
class SymSquare:
    """Element of Sym^2(V_Spin): unordered subset pairs -> coefficient."""

    m: int
    coeffs: dict[tuple[Subset, Subset], object] = field(default_factory=dict)

    def add_term(self, a: Subset, b: Subset, c) -> None:
        key = (a, b) if a <= b else (b, a)
        cur = self.coeffs.get(key)
        new = c if cur is None else cur + c
        if new:
            self.coeffs[key] = new
        else:
            self.coeffs.pop(key, None)

    def __add__(self, other: SymSquare) -> SymSquare:
        out = SymSquare(self.m, dict(self.coeffs))
        for (a, b), c in other.coeffs.items():
            out.add_term(a, b, c)
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymSquare) and self.m == other.m and self.coeffs == other.coeffs


def sym_pair(lam: StrictPartition, mu_: StrictPartition, c=QS2_ONE) -> SymSquare:
    out = SymSquare(lam.m)
    out.add_term(pt.to_subset(lam), pt.to_subset(mu_), c)
    return out


def iota(x: SymSquare) -> EndSpin:
    """Sym^2(V_Spin) -> End(V_Spin): lambda.mu -> (delta(w_lam) ox w_mu + delta(w_mu) ox w_lam)/2."""
    m = x.m
    half = QSqrt2.from_fraction(Fraction(1, 2))
    out = EndSpin(m)
    for (a, b), c in x.coeffs.items():
        for first, second in ((a, b), (b, a)):
            dual = delta(basis_vector(first, m))
            for dual_key, dc in dual.coeffs.items():
                # w*_{dual_key} ox w_{second}: matrix entry (row=second, col=dual_key)
                out.add_entry(tuple(second), dual_key, c * dc * half)
    return out


def term_sign_removed(l: int, subset: frozenset | tuple | set) -> int:
    """(-1)^{number of boxes the subset removes from rho_l}."""
    return -1 if pt.removed_boxes(l, subset) % 2 else 1


def build_D(j: int, m: int) -> SymSquare:
    """D_(j) = sum_I sign(I) w_{rho_{m+1-j}^I} w_{mu_{m+1-j}^I}, I subset of {1..m+1-j}."""
    if not 2 <= j <= m:
        raise ValueError(f"D_(j) needs 2 <= j <= m, got j={j}, m={m}")
    l = m + 1 - j
    out = SymSquare(m)
    for r in range(l + 1):
        for subset in combinations(range(1, l + 1), r):
            muI = pt.mu_added(l, subset, m)
            if muI is None:
                continue
            sign = term_sign_removed(l, subset)
            out.add_term(
                pt.to_subset(pt.rho_removed(l, subset, m)),
                pt.to_subset(muI),
                QSqrt2(sign),
            )
    return out


def build_N(j: int, m: int) -> SymSquare:
    """N_(j): same sum with rho_{m+1-j,+}^I and mu_{m+1-j,+}^I."""
    if not 2 <= j <= m:
        raise ValueError(f"N_(j) needs 2 <= j <= m, got j={j}, m={m}")
    l = m + 1 - j
    out = SymSquare(m)
    for r in range(l + 1):
        for subset in combinations(range(1, l + 1), r):
            muI = pt.mu_plus_added(l, subset, m)
            if muI is None:
                continue
            sign = term_sign_removed(l, subset)
            out.add_term(
                pt.to_subset(pt.rho_plus_removed(l, subset, m)),
                pt.to_subset(muI),
                QSqrt2(sign),
            )
    return out


def wedge_v(j: int, m: int) -> ExteriorElement:
    """v^wedge_(j) = v_j ^ ... ^ v_{j+m}."""
    return wedge_monomial(tuple(range(j, j + m + 1)), m)


def wedge_v_plus(j: int, m: int) -> ExteriorElement:
    """v^wedge_(j),+ = v_{j-1} ^ v_{j+1} ^ ... ^ v_{j+m}."""
    return wedge_monomial((j - 1,) + tuple(range(j + 1, j + m + 1)), m)


def _perm_sign(seq: list[int]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for jj in range(len(seq) - 1, i, -1):
            if seq[jj - 1] > seq[jj]:
                seq[jj - 1], seq[jj] = seq[jj], seq[jj - 1]
                sign = -sign
    return sign


def contract_with_top_form(x: ExteriorElement) -> ExteriorElement:
    """The map c: wedge^m V -> wedge^{m+1} V*, contraction with
    (-1)^{m(m+1)/2} v*_1 ^ ... ^ v*_{2m+1}.

    Output monomials are indexed by the starred basis (represented with the
    same subset keys).  On a basis m-vector v_S the image is the signed
    complementary covector, the sign being the shuffle sign of (S, S^c)
    times the global (-1)^{m(m+1)/2}.
    """
    m = x.m
    n = 2 * m + 1
    global_sign = -1 if (m * (m + 1) // 2) % 2 else 1
    out = ExteriorElement(m)
    for key, c in x.coeffs.items():
        if len(key) != m:
            raise ValueError("contract_with_top_form expects pure degree m input")
        comp = tuple(i for i in range(1, n + 1) if i not in key)
        sign = global_sign * _perm_sign(list(key) + list(comp))
        out.add_term(comp, c if sign > 0 else -c)
    return out


def star_to_vectors(x: ExteriorElement) -> ExteriorElement:
    """The map d: wedge^{m+1} V* -> wedge^{m+1} V via v*_k = epsilon(k) v_{2m+2-k}."""
    m = x.m
    out = ExteriorElement(m)
    for key, c in x.coeffs.items():
        sign = 1
        for k in key:
            sign *= epsilon(k, m)
        # images 2m+2-k arrive in descending order; reversing k elements
        k_len = len(key)
        if (k_len * (k_len - 1) // 2) % 2:
            sign = -sign
        out.add_term(tuple(sorted(bar(k, m) for k in key)), c if sign > 0 else -c)
    return out


# -- generator actions on every stage of the pi pipeline ----------------------


def generator_clifford(i: int, kind: str, m: int) -> CliffordElement:
    """The Chevalley generator e_i or f_i as an element of wedge^2 V in Cl(V):
    e_i = eps(i+1) v_i vbar_{i+1}, e_m = sqrt2 v_m v_{m+1}, f_i mirrored."""
    if not 1 <= i <= m or kind not in ("e", "f"):
        raise ValueError(f"no generator {kind}_{i} for m={m}")
    if kind == "e":
        if i < m:
            return cl_monomial((i, bar(i + 1, m)), m, QSqrt2(epsilon(i + 1, m)))
        return cl_monomial((m, m + 1), m, QSqrt2.sqrt2())
    if i < m:
        return cl_monomial((i + 1, bar(i, m)), m, QSqrt2(epsilon(i, m)))
    return cl_monomial((bar(m, m), m + 1), m, QSqrt2.sqrt2())


def vector_action(gen: CliffordElement, m: int) -> dict[int, dict[int, QSqrt2]]:
    """Action of a wedge^2 element on V by Clifford commutator, as sparse columns
    {k: {j: coeff of v_j in gen.v_k}}."""
    cols: dict[int, dict[int, QSqrt2]] = {}
    for k in range(1, 2 * m + 2):
        img = commutator(gen, cl_monomial((k,), m))
        col = {}
        for key, c in img.coeffs.items():
            if len(key) != 1:
                raise AssertionError("commutator with a vector left degree 1")
            col[key[0]] = c
        if col:
            cols[k] = col
    return cols


def exterior_generator_action(gen: CliffordElement, x: ExteriorElement) -> ExteriorElement:
    """Derivation action on wedge V induced from the vector action."""
    m = x.m
    cols = vector_action(gen, m)
    out = ExteriorElement(m)
    for key, c in x.coeffs.items():
        for pos, k in enumerate(key):
            for j, coeff in cols.get(k, {}).items():
                replaced = key[:pos] + (j,) + key[pos + 1:]
                out = out + wedge_monomial(replaced, m, c * coeff)
    return out


def spin_generator_matrix(i: int, kind: str, m: int) -> EndSpin:
    return clifford_to_end(generator_clifford(i, kind, m))


def sym_square_action(gen: CliffordElement, x: SymSquare) -> SymSquare:
    """Derivation action on Sym^2(V_Spin): g.(a b) = (g a) b + a (g b)."""
    m = x.m
    out = SymSquare(m)
    for (a, b), c in x.coeffs.items():
        for first, second in ((a, b), (b, a)):
            img = spin_apply(gen, basis_vector(first, m))
            for key, coeff in img.coeffs.items():
                out.add_term(key, second, c * coeff)
    return out


def dual_spin_action(gen: CliffordElement, vec: SpinVector) -> SpinVector:
    """Contragredient action on V_Spin*: (g.phi)(v) = -phi(g.v)."""
    if not vec.dual:
        raise ValueError("dual_spin_action needs a dual vector")
    m = vec.m
    mat = clifford_to_end(gen)
    out = SpinVector(m, {}, dual=True)
    for (row, col), v in mat.entries.items():
        coeff = vec.coeffs.get(row)
        if coeff is not None:
            out.add_term(col, -(v * coeff))
    return out


def pr_kappa_iota(x: SymSquare) -> ExteriorElement:
    """pr_{wedge^m} . kappa_{+-}^{-1} . iota, the first three stages of pi."""
    parity = x.m % 2
    cl = end_to_clifford(iota(x), parity)
    return antisymmetrize_inv(cl).degree_part(x.m)


def pi_map(x: SymSquare) -> ExteriorElement:
    """pi = d . c . pr_{wedge^m} . kappa_{+-}^{-1} . iota : Sym^2(V_Spin) -> wedge^{m+1} V."""
    return star_to_vectors(contract_with_top_form(pr_kappa_iota(x)))
