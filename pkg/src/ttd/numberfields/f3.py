"""Row reduction over F_3."""


def echelon(rows):
    """Reduced row echelon form. Returns (rank, nonzero rows, pivot columns)."""
    rows = [[a % 3 for a in r] for r in rows]
    ncol = len(rows[0]) if rows else 0
    rk = 0
    pivots = []
    for c in range(ncol):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = rows[rk][c]  # 1 and 2 are their own inverses mod 3
        rows[rk] = [(a * inv) % 3 for a in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % 3 for a, b in zip(rows[i], rows[rk])]
        pivots.append(c)
        rk += 1
    return rk, rows[:rk], pivots


def rank3(rows):
    rk, basis, _ = echelon(rows)
    return rk, basis


def nullspace3(rows, ncols):
    """Basis of {v : M v = 0} for M given by rows."""
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    _, R, pivots = echelon(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = (-row[f]) % 3
        basis.append(v)
    return basis


def in_span(v, basis):
    rk, _ = rank3(basis) if basis else (0, [])
    rk2, _ = rank3(list(basis) + [list(v)])
    return rk == rk2


def apply(rows, v):
    return [sum(a * b for a, b in zip(r, v)) % 3 for r in rows]
