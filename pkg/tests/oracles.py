"""Brute-force reference implementations used as test oracles.

Nothing here imports the library. Codewords are 0/1 strings, pseudomonomials
are ``(sigma, tau)`` pairs of frozensets, and polynomials are exact dicts
from exponent tuples to GF(2) coefficients, so squares are kept. That lets
``x * (1 - x)`` stay nonzero.
"""

from itertools import combinations, permutations, product


def all_words(n):
    return ["".join(bits) for bits in product("01", repeat=n)]


def supp(word):
    return frozenset(k + 1 for k, ch in enumerate(word) if ch == "1")


def word_of(support, n):
    return "".join("1" if k in support else "0" for k in range(1, n + 1))


def all_pms(n):
    """Every (sigma, tau) pair on n variables."""
    out = []
    for digits in product((0, 1, 2), repeat=n):
        sigma = frozenset(k + 1 for k, d in enumerate(digits) if d == 1)
        tau = frozenset(k + 1 for k, d in enumerate(digits) if d == 2)
        out.append((sigma, tau))
    return out


def pm_value(pm, word):
    sigma, tau = pm
    s = supp(word)
    return int(sigma <= s and not (tau & s))


def divides(f, g):
    return f[0] <= g[0] and f[1] <= g[1]


def brute_cf(code_words, n):
    """Minimal pseudomonomials vanishing on every codeword."""
    members = [pm for pm in all_pms(n) if not any(pm_value(pm, c) for c in code_words)]
    return {f for f in members if not any(g != f and divides(g, f) for g in members)}


def zero_set(pms, n):
    return {w for w in all_words(n) if not any(pm_value(pm, w) for pm in pms)}


# --- exact polynomials over GF(2) ------------------------------------------


def poly_const(c, m):
    return {(0,) * m: 1} if c % 2 else {}


def poly_var(j, m):
    e = [0] * m
    e[j - 1] = 1
    return {tuple(e): 1}


def poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        out[e] = (out.get(e, 0) + c) % 2
        if not out[e]:
            del out[e]
    return out


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = (out.get(e, 0) + c1 * c2) % 2
            if not out[e]:
                del out[e]
    return out


def pm_poly(pm, m):
    sigma, tau = pm
    p = poly_const(1, m)
    for i in sigma:
        p = poly_mul(p, poly_var(i, m))
    for j in tau:
        p = poly_mul(p, poly_add(poly_const(1, m), poly_var(j, m)))
    return p


def image_poly(expr, m):
    """Exact polynomial for an image string from the candidate grid."""
    expr = expr.replace(" ", "")
    if expr in ("0", "1"):
        return poly_const(int(expr), m)
    if expr.startswith("1-x"):
        return poly_add(poly_const(1, m), poly_var(int(expr[3:]), m))
    factors = expr.split("*")
    p = poly_const(1, m)
    for fac in factors:
        p = poly_mul(p, poly_var(int(fac[1:]), m))
    return p


def apply_to_pm_poly(images, pm, m):
    """phi(f) as an exact polynomial, with phi given by image strings."""
    sigma, tau = pm
    p = poly_const(1, m)
    for i in sigma:
        p = poly_mul(p, image_poly(images[i - 1], m))
    for j in tau:
        p = poly_mul(p, poly_add(poly_const(1, m), image_poly(images[j - 1], m)))
    return p


def _gf2_rank(rows):
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def is_surjective_on_grid(images, m):
    """Every x_j lies in the span of the images' linear parts.

    Linear parts of products are combinations of the factors' linear parts,
    so this is necessary; on the candidate grid every image with a linear
    part is affine, which makes it sufficient too.
    """
    lin = []
    for expr in images:
        p = image_poly(expr, m)
        mask = 0
        for e, c in p.items():
            if c and sum(e) == 1:
                mask |= 1 << e.index(1)
        lin.append(mask)
    base = _gf2_rank(lin)
    return all(_gf2_rank(lin + [1 << (j - 1)]) == base for j in range(1, m + 1))


def lemma_criterion(images, n, m):
    """Surjective, and every pseudomonomial maps to zero or a pseudomonomial."""
    if not is_surjective_on_grid(images, m):
        return False
    targets = {frozenset(pm_poly(pm, m).items()) for pm in all_pms(m)}
    for pm in all_pms(n):
        img = apply_to_pm_poly(images, pm, m)
        if img and frozenset(img.items()) not in targets:
            return False
    return True


def candidate_images(m):
    out = ["0", "1"]
    out += [f"x{j}" for j in range(1, m + 1)]
    out += [f"1-x{j}" for j in range(1, m + 1)]
    out += [f"x{j}*x{k}" for j, k in combinations(range(1, m + 1), 2)]
    return out


# --- codes and homomorphisms on points -------------------------------------


def eval_image(expr, u):
    """Value of a linear image string at the m-bit word u."""
    if expr in ("0", "1"):
        return int(expr)
    if expr.startswith("1-x"):
        return 1 - int(u[int(expr[3:]) - 1])
    return int(u[int(expr[1:]) - 1])


def pullback_code(images, m, code_words):
    """Image code: u is a codeword iff (phi(x_1)(u), ..., phi(x_n)(u)) is in C."""
    code = set(code_words)
    out = set()
    for u in all_words(m):
        v = "".join(str(eval_image(e, u)) for e in images)
        if v in code:
            out.add(u)
    return out


def brute_permute(code_words, images):
    """images[i-1] = lam(i); supports move by lam."""
    n = len(images)
    return {word_of({images[i - 1] for i in supp(c)}, n) for c in code_words}


def brute_flip(code_words, i):
    return {c[: i - 1] + ("1" if c[i - 1] == "0" else "0") + c[i:] for c in code_words}


def brute_restrict(code_words, n, m, mp):
    sigma = set(range(mp + 1, n + 1))
    out = set()
    for u in all_words(m):
        if word_of(supp(u) | sigma, n) in code_words:
            out.add(u)
    return out


def link(faces, sigma):
    """Link of sigma in a simplicial complex given as a set of frozensets."""
    return {f for f in faces if not (f & sigma) and (f | sigma) in faces}


def is_simplicial_complex(faces):
    if not faces:
        return False
    for f in faces:
        for k in range(len(f)):
            for sub in combinations(sorted(f), k):
                if frozenset(sub) not in faces:
                    return False
    return True


def all_nip_images(n, m):
    """Every neural-ideal-preserving image tuple by direct construction."""
    out = []
    for sources in permutations(range(1, n + 1), m):
        rest = [i for i in range(1, n + 1) if i not in sources]
        for signs in product((False, True), repeat=m):
            for consts in product("01", repeat=len(rest)):
                images = [None] * n
                for j, (i, neg) in enumerate(zip(sources, signs), start=1):
                    images[i - 1] = f"1-x{j}" if neg else f"x{j}"
                for i, c in zip(rest, consts):
                    images[i - 1] = c
                out.append(tuple(images))
    return out
