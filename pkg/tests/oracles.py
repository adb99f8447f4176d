"""Brute-force linear-algebra oracles.

Nothing here touches the Groebner or Hilbert engine: expressions are parsed
by a throwaway regex reader, graded pieces are built by enumerating monomials,
and ideals are handled by dense Gaussian elimination mod p degree by degree.
"""

import itertools
import re


def parse_terms(text, names, p):
    """Read a sum of products like ``b_1_0^2*b_3_1 + c_4_0`` into a dict."""
    index = {name: i for i, name in enumerate(names)}
    poly = {}
    text = text.replace(" ", "")
    for sign, chunk in re.findall(r"([+-]?)([^+-]+)", text):
        coeff = -1 if sign == "-" else 1
        exps = [0] * len(names)
        for factor in chunk.split("*"):
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
                continue
            name, _, power = factor.partition("^")
            exps[index[name]] += int(power) if power else 1
        key = tuple(exps)
        poly[key] = (poly.get(key, 0) + coeff) % p
        if poly[key] == 0:
            del poly[key]
    return poly


def monomials(weights, d):
    """All exponent vectors of weighted degree exactly d, in a fixed order."""
    out = []

    def rec(i, left, acc):
        if i == len(weights):
            if left == 0:
                out.append(tuple(acc))
            return
        for e in range(left // weights[i] + 1):
            acc.append(e)
            rec(i + 1, left - e * weights[i], acc)
            acc.pop()

    rec(0, d, [])
    return out


def weighted_degree(exps, weights):
    return sum(e * w for e, w in zip(exps, weights))


def mul(a, b, p):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = (out.get(e, 0) + ca * cb) % p
    return {e: c for e, c in out.items() if c}


class Echelon:
    """Row-echelon span of vectors over F_p (dense lists)."""

    def __init__(self, size, p):
        self.size = size
        self.p = p
        self.rows = {}

    def reduce(self, vec):
        v = list(vec)
        p = self.p
        for col in range(self.size):
            c = v[col]
            if c and col in self.rows:
                row = self.rows[col]
                for j in range(col, self.size):
                    if row[j]:
                        v[j] = (v[j] - c * row[j]) % p
        return v

    def add(self, vec):
        v = self.reduce(vec)
        for col, c in enumerate(v):
            if c:
                inv = pow(c, -1, self.p)
                self.rows[col] = [x * inv % self.p for x in v]
                return True
        return False

    @property
    def rank(self):
        return len(self.rows)


class GradedQuotient:
    """Graded pieces of F_p[x]/I computed independently in each degree."""

    def __init__(self, weights, relations, p):
        self.weights = tuple(weights)
        self.relations = [r for r in relations if r]
        self.p = p
        self._pieces = {}

    def piece(self, d):
        if d not in self._pieces:
            mons = monomials(self.weights, d)
            index = {m: i for i, m in enumerate(mons)}
            ech = Echelon(len(mons), self.p)
            for rel in self.relations:
                rd = weighted_degree(next(iter(rel)), self.weights)
                if rd > d:
                    continue
                for m in monomials(self.weights, d - rd):
                    ech.add(self.vector(mul({m: 1}, rel, self.p), index))
            self._pieces[d] = (mons, index, ech)
        return self._pieces[d]

    def vector(self, poly, index):
        v = [0] * len(index)
        for e, c in poly.items():
            v[index[e]] = (v[index[e]] + c) % self.p
        return v

    def dim(self, d):
        mons, _, ech = self.piece(d)
        return len(mons) - ech.rank

    def hilbert_function(self, bound):
        return [self.dim(d) for d in range(bound + 1)]

    def residue(self, poly, d):
        """Vector of ``poly`` (homogeneous of degree d) reduced modulo I_d."""
        mons, index, ech = self.piece(d)
        return ech.reduce(self.vector(poly, index))

    def kernel_dim(self, zeta, zeta_degree, d):
        """dim of the kernel of multiplication by zeta from degree d to d + deg zeta."""
        mons, _, ech = self.piece(d)
        image = Echelon(len(self.piece(d + zeta_degree)[0]), self.p)
        # quotient basis in degree d: monomials that are not pivots of I_d
        basis = [m for i, m in enumerate(mons) if i not in ech.rows]
        rank = 0
        for m in basis:
            if image.add(self.residue(mul({m: 1}, zeta, self.p), d + zeta_degree)):
                rank += 1
        return len(basis) - rank

    def span_dim(self, polys, d):
        """dim of the span of the residues of homogeneous degree-d polys."""
        mons, _, _ = self.piece(d)
        ech = Echelon(len(mons), self.p)
        for f in polys:
            ech.add(self.residue(f, d))
        return ech.rank

    def quotient_monomials(self, d):
        mons, _, ech = self.piece(d)
        return [m for i, m in enumerate(mons) if i not in ech.rows]


def subalgebra_piece(images, image_degrees, target, d):
    """Products of images spanning the degree-d piece of the image subalgebra."""
    out = []
    for exps in monomials(image_degrees, d):
        f = {tuple([0] * len(target.weights)): 1}
        for img, e in zip(images, exps):
            for _ in range(e):
                f = mul(f, img, target.p)
        if f:
            out.append(f)
    return out


def brute_gendeg(images, image_degrees, target, bound):
    """Smallest d such that A * H^{<=d} fills every piece of H up to ``bound``.

    A is the subalgebra generated by the positive-degree images. Returns None
    if no d <= bound works.
    """
    pos = [(img, deg) for img, deg in zip(images, image_degrees) if deg > 0 and img]
    imgs = [img for img, _ in pos]
    degs = [deg for _, deg in pos]
    alg = {}
    for m in range(bound + 1):
        alg[m] = subalgebra_piece(imgs, degs, target, m) if degs else ([{tuple([0] * len(target.weights)): 1}] if m == 0 else [])
    for d in range(bound + 1):
        ok = True
        for k in range(bound + 1):
            spanning = []
            for j in range(min(d, k) + 1):
                for h in target.quotient_monomials(j):
                    for a in alg[k - j]:
                        spanning.append(mul(a, {h: 1}, target.p))
            if target.span_dim(spanning, k) != target.dim(k):
                ok = False
                break
        if ok:
            return d
    return None


def all_elements(target, d):
    """Every element of the degree-d piece (all F_p-combinations of a basis)."""
    basis = target.quotient_monomials(d)
    for coeffs in itertools.product(range(target.p), repeat=len(basis)):
        yield {m: c for m, c in zip(basis, coeffs) if c}
