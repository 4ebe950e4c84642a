"""Shared test machinery: independent oracles and random generators.

Everything here is deliberately written from scratch against the definitions,
not by calling back into the package internals, so the tests have teeth.
"""

from collections import deque

from hmsurf.elliptic import Mat2
from hmsurf.field import FieldElement, ResidueField
from hmsurf.trees import TreeGraph


# ---------------------------------------------------------------------------
# trees: generation
# ---------------------------------------------------------------------------

def random_tree(rng, n, shape=None):
    """Random labeled tree on n vertices.

    shape picks the attachment law so the corpus is not all "uniform random
    attachment" blobs: paths, stars, caterpillars and brooms show up too.
    """
    if shape is None:
        shape = rng.choice(["attach", "attach", "path", "star", "caterpillar", "binary"])
    labels = list(range(n))
    if rng.random() < 0.2:
        labels = ["n%d" % i for i in labels]
    rng.shuffle(labels)
    edges = []
    if shape == "path":
        edges = [(labels[i - 1], labels[i]) for i in range(1, n)]
    elif shape == "star":
        edges = [(labels[0], labels[i]) for i in range(1, n)]
    elif shape == "caterpillar":
        spine = max(1, n // 3)
        for i in range(1, spine):
            edges.append((labels[i - 1], labels[i]))
        for i in range(spine, n):
            edges.append((labels[rng.randrange(spine)], labels[i]))
    elif shape == "binary":
        for i in range(1, n):
            edges.append((labels[(i - 1) // 2], labels[i]))
    else:  # random attachment
        for i in range(1, n):
            edges.append((labels[rng.randrange(i)], labels[i]))
    return TreeGraph(labels, edges)


def random_subset(rng, T, kmax=6):
    verts = sorted(T.vertices, key=lambda v: (str(v), repr(v)))
    k = rng.randint(1, min(kmax, len(verts)))
    return set(rng.sample(verts, k))


def symmetric_tree(rng, copies, depth):
    """Hub plus `copies` identical random branches; returns (tree, rotation,
    orbit) where rotation cyclically permutes the branches and orbit is the
    set of images of one marked branch vertex (a single-orbit set)."""
    branch_parent = [None]
    for j in range(1, depth):
        branch_parent.append(rng.randrange(j))
    hub = "hub"
    vertices = [hub]
    edges = []
    for i in range(copies):
        for j in range(depth):
            v = "b%d_%d" % (i, j)
            vertices.append(v)
            if branch_parent[j] is None:
                edges.append((hub, v))
            else:
                edges.append(("b%d_%d" % (i, branch_parent[j]), v))
    T = TreeGraph(vertices, edges)
    rotation = {hub: hub}
    for i in range(copies):
        for j in range(depth):
            rotation["b%d_%d" % (i, j)] = "b%d_%d" % ((i + 1) % copies, j)
    mark = rng.randrange(depth)
    orbit = {"b%d_%d" % (i, mark) for i in range(copies)}
    return T, rotation, orbit


# ---------------------------------------------------------------------------
# trees: brute-force centre oracle
# ---------------------------------------------------------------------------

def _adjacency(T):
    adj = {v: [] for v in T.vertices}
    for e in T.edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    return adj

def _bfs(adj, src):
    dist = {src: 0}
    parent = {src: None}
    dq = deque([src])
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                dq.append(y)
    return dist, parent

def brute_centres(T, S):
    """Midpoints of *every* maximizing pair in S, as a set of normalized
    centres.  All-pairs BFS; nothing shared with the double-sweep code."""
    S = sorted(S, key=lambda v: (str(v), repr(v)))
    adj = _adjacency(T)
    runs = {s: _bfs(adj, s) for s in S}
    diam = max(runs[s][0][t] for s in S for t in S)
    centres = set()
    for s in S:
        dist, parent = runs[s]
        for t in S:
            if dist[t] != diam:
                continue
            path = [t]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()  # now s ... t
            if diam % 2 == 0:
                centres.add(("vertex", path[diam // 2]))
            else:
                u, w = path[diam // 2], path[diam // 2 + 1]
                centres.add(("edge", frozenset((u, w))))
    return diam, centres

def normalize_centre(res):
    if res.kind == "vertex":
        return ("vertex", res.payload)
    return ("edge", frozenset(res.endpoints()))


# ---------------------------------------------------------------------------
# elliptic: random group elements and the projective fixed-point oracle
# ---------------------------------------------------------------------------

def _fe(D, x):
    return x if isinstance(x, FieldElement) else FieldElement.from_int(x, D)

def mat(D, a, b, c, d):
    return Mat2(_fe(D, a), _fe(D, b), _fe(D, c), _fe(D, d))

def rand_o_elt(F, rng, lim=2):
    return (FieldElement.from_int(rng.randint(-lim, lim), F.D)
            + F.omega * FieldElement.from_int(rng.randint(-lim, lim), F.D))

def rand_sl2(F, rng, steps=4, lim=2):
    """Random product of elementary matrices and the inversion; determinant 1."""
    D = F.D
    g = Mat2.identity(D)
    for _ in range(steps):
        kind = rng.randrange(3)
        if kind == 0:
            g = g * mat(D, 1, rand_o_elt(F, rng, lim), 0, 1)
        elif kind == 1:
            g = g * mat(D, 1, 0, rand_o_elt(F, rng, lim), 1)
        else:
            g = g * mat(D, 0, -1, 1, 0)
    return g

def rand_elliptic(F, rng, steps=3, lim=1):
    """Random elliptic element: conjugate of an order-2 or order-3 seed."""
    D = F.D
    seeds = [
        mat(D, 0, -1, 1, 0),       # trace 0, order 2
        mat(D, 0, -1, 1, -1),      # trace -1, order 3
        mat(D, 0, -1, 1, 1),       # trace 1, order 3
        mat(D, 1, -1, 2, -1),      # trace 0 again, different axis
    ]
    seed = rng.choice(seeds)
    if rng.random() < 0.5:
        seed = -seed
    h = rand_sl2(F, rng, steps=steps, lim=lim)
    return h * seed * h.inverse()

def p1_fixed_count(g, P):
    """Fixed points of the reduction of g acting on the projective line over
    O/P by right multiplication of row vectors.  Enumerates all q+1 points
    and tests proportionality by cross-product; no quadratic-formula cases."""
    R = ResidueField(P)
    a, b = R.reduce(g.a), R.reduce(g.b)
    c, d = R.reduce(g.c), R.reduce(g.d)
    points = [(t, R.one) for t in R.elements()] + [(R.one, R.zero)]
    count = 0
    for x, y in points:
        xi = R.add(R.mul(x, a), R.mul(y, c))
        yi = R.add(R.mul(x, b), R.mul(y, d))
        cross = R.add(R.mul(xi, y), R.neg(R.mul(yi, x)))
        if cross == R.zero:
            count += 1
    return count
